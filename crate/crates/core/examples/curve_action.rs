//! The element φ swaps the roles of c3 and d.

use twistcert::catalog::{build_catalog, SurfaceSpec};
use twistcert::families::phi_word;
use twistcert::mcg::{act_on_curve, MappingClassWord};
use twistcert::word::Budget;

fn main() {
    let cat = build_catalog(SurfaceSpec { g: 2, n: 2 }).unwrap();
    let phi = phi_word("c4");
    let id = MappingClassWord::identity();
    let b = Budget::default();
    for (from, to) in [("c3", "e"), ("d", "c3")] {
        let image = act_on_curve(&phi, from, &cat, b).unwrap();
        let expected = act_on_curve(&id, to, &cat, b).unwrap();
        println!("φ({from}) = {to}: {}", image == expected);
    }
}
