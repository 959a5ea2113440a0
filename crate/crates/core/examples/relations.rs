//! Checks a few relations in both backends.

use twistcert::catalog::{build_catalog, SurfaceSpec};
use twistcert::mcg::Backend;
use twistcert::relations::{chain_relation, eight_holed_torus, lantern_relation, verify};
use twistcert::word::Budget;

fn main() {
    let b = Budget::default();
    let c = build_catalog(SurfaceSpec { g: 3, n: 2 }).unwrap();
    for h in 1..=3 {
        let r = chain_relation(&c, h).unwrap();
        println!("{r}: {}", verify(&r, Backend::Both, b, &c));
    }
    let c = build_catalog(SurfaceSpec { g: 1, n: 5 }).unwrap();
    let r = lantern_relation(&c, 1).unwrap();
    println!(
        "{r}: {} = {}: {}",
        r.lhs,
        r.rhs,
        verify(&r, Backend::Both, b, &c)
    );
    let c = build_catalog(SurfaceSpec { g: 1, n: 8 }).unwrap();
    let r = eight_holed_torus(&c).unwrap();
    println!("{r}: {}", verify(&r, Backend::Both, b, &c));
}
