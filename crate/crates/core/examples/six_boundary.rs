//! The parts of the six-boundary construction that avoid the σ curves.

use twistcert::catalog::{build_catalog, SurfaceSpec};
use twistcert::families::{phi_word, six_boundary, six_boundary_parts};
use twistcert::mcg::{act_on_curve, equal, Backend, MappingClassWord};
use twistcert::word::Budget;

fn main() {
    let b = Budget::default();
    for g in 3..=5 {
        let cat = build_catalog(SurfaceSpec { g, n: 6 }).unwrap();
        let parts = six_boundary_parts(g);
        let pd = MappingClassWord::positive(&["d"]).conjugate(&parts.p);
        let core = equal(
            &pd.concat(&parts.folds),
            &phi_word("c4").concat(&parts.rest),
            Backend::Pi1,
            b,
            &cat,
        );
        let moved = act_on_curve(&parts.p, "d", &cat, b).unwrap()
            != act_on_curve(&MappingClassWord::identity(), "d", &cat, b).unwrap();
        let f = six_boundary(g, 1).unwrap();
        println!(
            "g={g}: core identity {}, P moves d: {moved}, length {}",
            core.status,
            f.twists.len()
        );
    }
}
