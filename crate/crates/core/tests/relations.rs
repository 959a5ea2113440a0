use twistcert::catalog::{build_catalog, build_surface, CatalogError, CurveCatalog, SurfaceSpec};
use twistcert::mcg::{equal, Backend, MappingClassWord, Status};
use twistcert::relations::*;
use twistcert::word::Budget;

fn cat(g: usize, n: usize) -> std::sync::Arc<CurveCatalog> {
    build_catalog(SurfaceSpec { g, n }).unwrap()
}

fn verified(rel: &Relation, cat: &CurveCatalog) -> bool {
    verify(rel, Backend::Pi1, Budget::default(), cat).status == Status::Verified
}

#[test]
fn surface_ranks() {
    assert_eq!(build_surface(2, 2).unwrap().pi1_rank(), 5);
    assert_eq!(build_surface(3, 2).unwrap().pi1_rank(), 7);
    assert_eq!(build_surface(1, 8).unwrap().pi1_rank(), 9);
    assert_eq!(build_surface(2, 2).unwrap().euler_characteristic(), -4);
    assert!(build_surface(0, 1).is_err());
    assert!(build_surface(2, 0).is_err());
    assert!(matches!(
        build_catalog(SurfaceSpec { g: 2, n: 3 }),
        Err(CatalogError::Unsupported { .. })
    ));
}

#[test]
fn catalog_contents() {
    let c = cat(2, 2);
    for name in ["c1", "c2", "c3", "c4", "c5", "delta1", "delta2", "d", "e"] {
        assert!(c.contains(name), "{name}");
    }
    assert!(c.is_nonseparating("c1").unwrap());
    assert!(c.is_nonseparating("d").unwrap());
    assert!(!c.is_nonseparating("delta1").unwrap());
    let c = cat(3, 2);
    assert_eq!(c.chain_boundary(2), Some(("b", "c")));
    let c = cat(1, 8);
    for j in 1..=8 {
        assert!(c.contains(&format!("delta{j}")));
    }
    for j in 1..=7 {
        assert!(c.contains(&format!("alpha{j}")));
    }
    for j in 3..=7 {
        assert!(c.curve(&format!("sigma{j}")).unwrap().is_abstract());
    }
}

#[test]
fn braid_and_commute_examples() {
    let c = cat(2, 2);
    let b = braid_relation(&c, 1).unwrap();
    assert_eq!(b.lhs, MappingClassWord::parse("c1 c2 c1"));
    assert_eq!(b.rhs, MappingClassWord::parse("c2 c1 c2"));
    assert!(verified(&b, &c));
    let k = commute_relation(&c, 1, 3).unwrap();
    assert_eq!(k.lhs, MappingClassWord::parse("c1 c3"));
    assert!(verified(&k, &c));
    assert!(braid_relation(&c, 5).is_err());
    assert!(commute_relation(&c, 1, 2).is_err());
}

#[test]
fn chain_relations_and_counts() {
    let c = cat(2, 2);
    let r = chain_relation(&c, 1).unwrap();
    assert_eq!((r.lhs.len(), r.rhs.len()), (12, 2));
    assert!(verified(&r, &c));
    let r = chain_relation(&c, 2).unwrap();
    assert_eq!(r.lhs.len(), 30);
    assert_eq!(r.rhs, MappingClassWord::positive(&["delta1", "delta2"]));
    assert!(verified(&r, &c));
    let c3 = cat(3, 2);
    let r = chain_relation(&c3, 3).unwrap();
    assert_eq!(r.lhs.len(), 56);
    assert!(verified(&r, &c3));
    let r = chain_relation(&c3, 2).unwrap();
    assert_eq!(r.rhs, MappingClassWord::positive(&["b", "c"]));
    assert!(verified(&r, &c3));
}

#[test]
fn chain_unfold_everywhere() {
    let c = cat(3, 2);
    for n in 2..=7 {
        let r = chain_unfold(&c, n).unwrap();
        assert_eq!(r.lhs.len(), n * (n + 1));
        assert_eq!(r.rhs.len(), n * (n + 1));
        assert!(verified(&r, &c), "n = {n}");
    }
    let r = chain_unfold(&c, 2).unwrap();
    assert_eq!(r.rhs, MappingClassWord::parse("c1 c1 c2 c1 c1 c2"));
    assert!(chain_unfold(&c, 8).is_err());
}

#[test]
fn t_power_identity_holds() {
    let c = cat(2, 2);
    let r = t_power_identity(&c, 1).unwrap();
    assert_eq!(r.lhs.len(), 10);
    assert_eq!(r.rhs, MappingClassWord::parse("d c3^-1 e c3^-1"));
    assert!(verified(&r, &c));
    let r = t_power_identity(&c, 2).unwrap();
    assert_eq!(r.lhs.len(), 20);
    assert!(verified(&r, &c));
    assert!(t_power_identity(&c, 0).is_err());
}

#[test]
fn genus_one_relations() {
    let c5 = cat(1, 5);
    let l = lantern_relation(&c5, 1).unwrap();
    assert_eq!((l.lhs.len(), l.rhs.len()), (3, 4));
    assert!(verified(&l, &c5));
    let f = four_holed_torus(&c5).unwrap();
    assert_eq!((f.lhs.len(), f.rhs.len()), (4, 12));
    assert!(verified(&f, &c5));
    let c6 = cat(1, 6);
    assert!(verified(&lantern_relation(&c6, 2).unwrap(), &c6));
    let s = six_holed_torus(&c6).unwrap();
    assert_eq!(s.rhs.len(), 12);
    assert!(verified(&s, &c6));
    let c24 = cat(2, 4);
    let g = glued_six_holed(&c24).unwrap();
    assert!(verified(&g, &c24));
}

#[test]
fn mirrored_lantern_fails() {
    let c = cat(1, 5);
    let l = lantern_relation(&c, 1).unwrap();
    let mirror = |w: &MappingClassWord| -> MappingClassWord {
        w.twists().iter().map(|t| t.inverse()).collect()
    };
    let v = equal(
        &mirror(&l.lhs),
        &mirror(&l.rhs),
        Backend::Pi1,
        Budget::default(),
        &c,
    );
    assert_eq!(v.status, Status::Falsified);
}

#[test]
fn eight_holed_is_homology_only() {
    let c = cat(1, 8);
    let r = eight_holed_torus(&c).unwrap();
    assert_eq!(r.rhs.len(), 12);
    assert_eq!(r.lhs.len(), 8);
    assert_eq!(r.verifiability, Verifiability::HomologyOnly);
    for backend in [Backend::Pi1, Backend::Both, Backend::Homology] {
        let v = verify(&r, backend, Budget::default(), &c);
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.note.unwrap().contains("abstract σ curves"));
    }
}

#[test]
fn torus_relations_have_twelve_twists() {
    let c5 = cat(1, 5);
    let c6 = cat(1, 6);
    let c8 = cat(1, 8);
    for r in [
        four_holed_torus(&c5).unwrap(),
        six_holed_torus(&c6).unwrap(),
        eight_holed_torus(&c8).unwrap(),
    ] {
        assert_eq!(r.rhs.len(), 12, "{r}");
    }
}

#[test]
fn chain_split_composes_the_two_chain_relations() {
    let c = cat(2, 2);
    let r = chain_split(&c).unwrap();
    assert_eq!(r.rhs.len(), 20);
    assert!(verified(&r, &c));
}

#[test]
fn wrong_relation_is_falsified() {
    let c = cat(2, 2);
    let mut r = chain_relation(&c, 1).unwrap();
    r.rhs = MappingClassWord::positive(&["d", "d"]);
    assert_eq!(
        verify(&r, Backend::Both, Budget::default(), &c).status,
        Status::Falsified
    );
    let mut r = chain_unfold(&c, 4).unwrap();
    let mut swapped = r.rhs.twists().to_vec();
    swapped.swap(0, 1);
    r.rhs = MappingClassWord::new(swapped);
    assert_eq!(
        verify(&r, Backend::Pi1, Budget::default(), &c).status,
        Status::Falsified
    );
}

#[test]
fn registry_is_consistent() {
    let exported = export().unwrap();
    for e in REGISTRY {
        assert!(exported.iter().any(|x| x.name == e.name), "{}", e.name);
        assert!(default_surface(e.name).is_some());
    }
    let c = cat(2, 2);
    assert!(matches!(
        construct("nope", &Params::default(), &c),
        Err(RelationError::Unknown(_))
    ));
    assert!(matches!(
        construct("chain", &Params::default(), &c),
        Err(RelationError::MissingParameter(_))
    ));
}
