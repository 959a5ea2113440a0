//! Builds and verifies members of each family, and writes one certificate.

use twistcert::catalog::build_catalog;
use twistcert::certificate::Certificate;
use twistcert::families::{generate, verify_factorization, Family};
use twistcert::mcg::Backend;
use twistcert::word::Budget;

fn main() {
    for (family, g, k) in [
        (Family::MainI, 2, 1),
        (Family::MainIi, 3, 1),
        (Family::Cor1, 2, 2),
        (Family::MultitwistPower, 3, 2),
        (Family::FourBoundary, 2, 1),
        (Family::SixBoundary, 3, 1),
    ] {
        for m in 1..=2 {
            let f = generate(family, g, k, m).unwrap();
            let cat = build_catalog(f.spec).unwrap();
            let v = verify_factorization(&f, Backend::Both, Budget::default(), &cat);
            println!("{family:<16} g={g} m={m} length {:>3}: {v}", f.twists.len());
        }
    }
    let f = generate(Family::MainI, 2, 1, 1).unwrap();
    let json = Certificate::from_factorization(&f).to_json();
    println!("{} bytes of certificate, first lines:", json.len());
    for line in json.lines().take(8) {
        println!("  {line}");
    }
}
