//! Lefschetz fibration data and the Euler characteristic series.

use twistcert::catalog::build_catalog;
use twistcert::families::{cor1_genus2_squared, main_i, Family};
use twistcert::lefschetz::{chi_series, lefschetz_data};

fn main() {
    for f in [main_i(1).unwrap(), cor1_genus2_squared(1).unwrap()] {
        let d = lefschetz_data(&f, &build_catalog(f.spec).unwrap()).unwrap();
        println!(
            "{}: genus {}, {} sections of square {}, extra {:?}, r = {}, χ = {}, H1 rank {:?}",
            f.family,
            d.g,
            d.n_sections.unwrap(),
            d.section_self_intersection.unwrap(),
            d.extra_twists,
            d.r,
            d.chi,
            d.h1_total_rank
        );
    }
    for g in 3..=5 {
        let s = chi_series(Family::MainIi, g, 1, 1..=5).unwrap();
        println!("genus {g}: {s:?}");
    }
}
