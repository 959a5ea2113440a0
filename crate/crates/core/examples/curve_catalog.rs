//! Prints the named curves of a surface with their classes and based words.

use twistcert::catalog::{build_catalog, SurfaceSpec};

fn main() {
    let cat = build_catalog(SurfaceSpec { g: 2, n: 4 }).expect("catalog");
    println!(
        "π₁ rank {}, homology rank {}",
        cat.spec().pi1_rank(),
        cat.homology_dim()
    );
    for c in cat.curves() {
        let word = c
            .word
            .as_ref()
            .map_or("abstract".into(), |w| cat.model().alphabet().render(w));
        let class = c.class.as_ref().map_or("-".into(), |h| h.to_string());
        println!("{:<8} {:<22} {}", c.name, class, word);
    }
}
