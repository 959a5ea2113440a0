use twistcert::catalog::{build_catalog, SurfaceSpec};
use twistcert::certificate::Certificate;
use twistcert::families::*;
use twistcert::lefschetz::{chi_series, lefschetz_data, section_data};
use twistcert::mcg::{act_on_curve, equal, Backend, MappingClassWord, Status, Twist};
use twistcert::relations::chain_fold;
use twistcert::word::Budget;

fn spec(g: usize, n: usize) -> SurfaceSpec {
    SurfaceSpec { g, n }
}

fn pi1(u: &MappingClassWord, v: &MappingClassWord, s: SurfaceSpec) -> Status {
    let cat = build_catalog(s).unwrap();
    equal(u, v, Backend::Pi1, Budget::default(), &cat).status
}

fn all_members() -> Vec<Factorization> {
    let mut out = Vec::new();
    for m in 1..=10 {
        let c22 = build_catalog(spec(2, 2)).unwrap();
        out.push(prop_tm(&c22, "c4", m).unwrap());
        out.push(main_i(m).unwrap());
        out.push(cor1_genus2_squared(m).unwrap());
        out.push(four_boundary(m).unwrap());
        for g in 3..=6 {
            out.push(main_ii(g, m).unwrap());
        }
        for g in 3..=5 {
            out.push(six_boundary(g, m).unwrap());
        }
        out.push(multitwist_power(2, 3, m).unwrap());
        out.push(multitwist_power(3, 2, m).unwrap());
    }
    out
}

#[test]
fn phi_lemma() {
    let c = build_catalog(spec(2, 2)).unwrap();
    let phi = phi_word("c4");
    assert_eq!(phi.len(), 12);
    let id = MappingClassWord::identity();
    let class = |w: &MappingClassWord, n: &str| act_on_curve(w, n, &c, Budget::default()).unwrap();
    assert_eq!(class(&phi, "c3"), class(&id, "e"));
    assert_eq!(class(&phi, "d"), class(&id, "c3"));
    let c24 = build_catalog(spec(2, 4)).unwrap();
    let phi = phi_word("beta36");
    let class =
        |w: &MappingClassWord, n: &str| act_on_curve(w, n, &c24, Budget::default()).unwrap();
    assert_eq!(class(&phi, "c3"), class(&id, "e"));
    assert_eq!(class(&phi, "d"), class(&id, "c3"));
}

#[test]
fn length_formulas() {
    for m in 1..=10 {
        let c22 = build_catalog(spec(2, 2)).unwrap();
        assert_eq!(prop_tm(&c22, "c4", m).unwrap().twists.len(), 12 + 10 * m);
        assert_eq!(main_i(m).unwrap().twists.len(), 21 + 10 * m);
        assert_eq!(cor1_genus2_squared(m).unwrap().twists.len(), 40 + 10 * m);
        assert_eq!(four_boundary(m).unwrap().twists.len(), 21 + 10 * m);
        for g in 3..=6 {
            assert_eq!(
                main_ii(g, m).unwrap().twists.len(),
                2 * (g + 1) * (2 * g + 1) - 10 + 10 * m
            );
        }
        for g in 3..=5 {
            assert_eq!(six_boundary(g, m).unwrap().twists.len(), 8 * g + 5 + 10 * m);
        }
    }
    assert_eq!(main_i(5).unwrap().claimed_length, 71);
    assert_eq!(main_ii(4, 2).unwrap().claimed_length, 100);
    assert_eq!(six_boundary(5, 2).unwrap().claimed_length, 65);
    assert_eq!(four_boundary(4).unwrap().claimed_length, 61);
    assert_eq!(multitwist_power(2, 2, 1).unwrap().claimed_length, 50);
    assert_eq!(multitwist_power(3, 2, 1).unwrap().claimed_length, 112);
    assert_eq!(d9_word().len(), 9);
    assert_eq!(d_double_prime().len(), 28);
    assert_eq!(four_boundary_d().len(), 9);
    assert_eq!(eight_holed_d().len(), 10);
    for g in 3..=5 {
        let p = six_boundary_parts(g);
        assert_eq!(p.rest.len() + p.d.len(), 8 * g - 7);
    }
    for g in 3..=6 {
        assert_eq!(k_word(g).len(), 2 * (g + 1) * (2 * g + 1) - 31);
    }
}

#[test]
fn every_member_is_positive_and_nonseparating() {
    for f in all_members() {
        let cat = build_catalog(f.spec).unwrap();
        assert_eq!(f.twists.len(), f.claimed_length);
        assert!(f.all_nonseparating, "{} m={}", f.family, f.m);
        for t in f.twists.twists() {
            assert_eq!(t.sign, 1, "{} m={}", f.family, f.m);
            assert!(cat.is_nonseparating(&t.curve).unwrap(), "{}", t.curve);
        }
    }
}

#[test]
fn lengths_grow_by_ten() {
    for family in [
        Family::MainI,
        Family::MainIi,
        Family::Cor1,
        Family::SixBoundary,
        Family::FourBoundary,
        Family::PropTm,
    ] {
        let lens: Vec<usize> = (1..=4)
            .map(|m| generate(family, 3, 2, m).unwrap().claimed_length)
            .collect();
        assert!(
            lens.windows(2).all(|w| w[1] == w[0] + 10),
            "{family}: {lens:?}"
        );
    }
}

#[test]
fn small_members_verify_in_pi1() {
    let c22 = build_catalog(spec(2, 2)).unwrap();
    let members = [
        prop_tm(&c22, "c4", 1).unwrap(),
        prop_tm(&c22, "c4", 2).unwrap(),
        main_i(1).unwrap(),
        main_i(2).unwrap(),
        cor1_genus2_squared(1).unwrap(),
        four_boundary(1).unwrap(),
        main_ii(3, 1).unwrap(),
        main_ii(4, 1).unwrap(),
        multitwist_power(2, 3, 1).unwrap(),
        multitwist_power(3, 2, 1).unwrap(),
    ];
    for f in members {
        let cat = build_catalog(f.spec).unwrap();
        let v = verify_factorization(&f, Backend::Both, Budget::default(), &cat);
        assert_eq!(
            v.status,
            Status::Verified,
            "{} g={} m={}: {v}",
            f.family,
            f.spec.g,
            f.m
        );
    }
}

#[test]
fn d9_identity() {
    let lhs = d9_word()
        .concat(&chain_fold(4))
        .concat(&MappingClassWord::parse("c4 d c3"));
    assert_eq!(
        pi1(
            &lhs,
            &MappingClassWord::positive(&["delta1", "delta2"]),
            spec(2, 2)
        ),
        Status::Verified
    );
    let d9 = d9_word();
    let first = &d9.twists()[0];
    assert_eq!(first.curve, "c5");
    assert_eq!(
        first.conjugator,
        MappingClassWord::parse("c3^-1 d^-1 c4^-1")
    );
}

#[test]
fn main_ii_block_multiplies_to_tb_tc_t1() {
    for m in 1..=2 {
        let f = main_ii(3, m).unwrap();
        let block = f.twists.slice(0, 21 + 10 * m);
        assert_eq!(
            pi1(
                &block,
                &MappingClassWord::positive(&["b", "c", "c1"]),
                spec(3, 2)
            ),
            Status::Verified
        );
    }
}

#[test]
fn transported_main_i() {
    let u = c4_to_c1();
    let f = main_i_transported(1, &u).unwrap();
    assert_eq!(pi1(&f.twists, &f.target, f.spec), Status::Verified);
    let c = build_catalog(spec(2, 2)).unwrap();
    let target_curve = MappingClassWord::positive(&["c4"]).conjugate(&u);
    assert_eq!(
        equal(
            &target_curve,
            &MappingClassWord::positive(&["c1"]),
            Backend::Pi1,
            Budget::default(),
            &c
        )
        .status,
        Status::Verified
    );
}

#[test]
fn six_boundary_pieces() {
    for g in 3..=5 {
        let s = spec(g, 6);
        let parts = six_boundary_parts(g);
        // (t_1 ⋯ t_{2g-1})^{2g} = t_δ7 t_δ8 B_{2g-2} B_{2g-1}
        let chain: MappingClassWord = (1..2 * g)
            .map(|i| Twist::positive(format!("c{i}")))
            .collect();
        let unfolded = MappingClassWord::positive(&["delta7", "delta8"]).concat(&parts.folds);
        assert_eq!(pi1(&chain.pow(2 * g), &unfolded, s), Status::Verified);
        // σ-free core: t_{P(d)} B_{2g-2} B_{2g-1} = φ R
        let pd = MappingClassWord::positive(&["d"]).conjugate(&parts.p);
        assert_eq!(
            pi1(
                &pd.concat(&parts.folds),
                &phi_word("c4").concat(&parts.rest),
                s
            ),
            Status::Verified
        );
    }
    // P does not fix d, so t_d cannot simply be slid into the product
    let c = build_catalog(spec(3, 6)).unwrap();
    let p = six_boundary_parts(3).p;
    let id = MappingClassWord::identity();
    assert_ne!(
        act_on_curve(&p, "d", &c, Budget::default()).unwrap(),
        act_on_curve(&id, "d", &c, Budget::default()).unwrap()
    );
}

#[test]
fn six_boundary_is_inconclusive() {
    let f = six_boundary(3, 1).unwrap();
    let cat = build_catalog(f.spec).unwrap();
    let v = verify_factorization(&f, Backend::Pi1, Budget::default(), &cat);
    assert_eq!(v.status, Status::Inconclusive);
}

#[test]
fn tampered_factorization_is_falsified() {
    let f = main_i(1).unwrap();
    let cat = build_catalog(f.spec).unwrap();
    let mut twists = f.twists.twists().to_vec();
    twists[4] = twists[4].inverse();
    let bad = Factorization {
        twists: MappingClassWord::new(twists),
        ..f.clone()
    };
    let v = verify_factorization(&bad, Backend::Both, Budget::default(), &cat);
    assert_eq!(v.status, Status::Falsified);
    assert!(v.witness.is_some());
    let short = Factorization {
        twists: f.twists.slice(0, 30),
        ..f
    };
    let v = verify_factorization(&short, Backend::Both, Budget::default(), &cat);
    assert_eq!(v.status, Status::Falsified);
}

#[test]
fn parameter_errors() {
    assert!(main_i(0).is_err());
    assert!(main_ii(2, 1).is_err());
    assert!(six_boundary(2, 1).is_err());
    assert!(multitwist_power(2, 1, 1).is_err());
    assert!(multitwist_power(3, 0, 1).is_err());
    assert!("main-iii".parse::<Family>().is_err());
    for f in Family::ALL {
        assert_eq!(f.key().parse::<Family>().unwrap(), f);
    }
}

#[test]
fn section_data_examples() {
    let c = build_catalog(spec(2, 2)).unwrap();
    let s = section_data(&MappingClassWord::positive(&["delta1", "delta2"]), &c).unwrap();
    assert_eq!((s.n_sections, s.k), (2, 1));
    let s = section_data(&MappingClassWord::parse("delta1 delta1 delta2 delta2"), &c).unwrap();
    assert_eq!((s.n_sections, s.k), (2, 2));
    let s = section_data(&MappingClassWord::parse("delta1 delta2 c4"), &c).unwrap();
    assert_eq!(
        (s.n_sections, s.k, s.extra.clone()),
        (2, 1, vec!["t_c4".to_string()])
    );
    assert!(section_data(&MappingClassWord::parse("delta1 delta1 delta2"), &c).is_err());
    assert!(section_data(&MappingClassWord::parse("delta1 delta2 c1 c2"), &c).is_err());
    let c6 = build_catalog(spec(3, 6)).unwrap();
    let s = section_data(&six_boundary(3, 1).unwrap().target, &c6).unwrap();
    assert_eq!((s.n_sections, s.k, s.extra.len()), (6, 1, 1));
}

#[test]
fn lefschetz_examples() {
    let f = main_ii(3, 1).unwrap();
    let d = lefschetz_data(&f, &build_catalog(f.spec).unwrap()).unwrap();
    assert_eq!(
        (d.r, d.chi, d.n_sections, d.section_self_intersection),
        (56, 48, Some(2), Some(-1))
    );
    assert_eq!(d.h1_total_rank, Some(0));
    let f = cor1_genus2_squared(1).unwrap();
    let d = lefschetz_data(&f, &build_catalog(f.spec).unwrap()).unwrap();
    assert_eq!((d.chi, d.section_self_intersection), (46, Some(-2)));
    let f = six_boundary(3, 1).unwrap();
    let d = lefschetz_data(&f, &build_catalog(f.spec).unwrap()).unwrap();
    assert_eq!(d.h1_total_rank, None);
    assert_eq!(d.chi, -8 + 39);
    let empty = Factorization {
        twists: MappingClassWord::identity(),
        claimed_length: 0,
        ..main_i(1).unwrap()
    };
    let d = lefschetz_data(&empty, &build_catalog(spec(2, 2)).unwrap()).unwrap();
    assert_eq!((d.r, d.chi, d.h1_total_rank), (0, -4, Some(4)));
    for f in all_members().into_iter().filter(|f| f.m <= 2) {
        let d = lefschetz_data(&f, &build_catalog(f.spec).unwrap()).unwrap();
        assert_eq!(d.chi - d.r as i64, 4 - 4 * f.spec.g as i64);
    }
}

#[test]
fn chi_series_examples() {
    let s = chi_series(Family::MainIi, 3, 1, 1..=5).unwrap();
    assert_eq!(
        s.iter().map(|p| p.1).collect::<Vec<_>>(),
        vec![48, 58, 68, 78, 88]
    );
    let s = chi_series(Family::Cor1, 2, 2, 1..=5).unwrap();
    assert_eq!(
        s.iter().map(|p| p.1).collect::<Vec<_>>(),
        vec![46, 56, 66, 76, 86]
    );
    for m in 1..=5 {
        assert_eq!(
            chi_series(Family::MainIi, 3, 1, [m]).unwrap()[0].1,
            48 + 10 * (m as i64 - 1)
        );
    }
    let s = chi_series(Family::SixBoundary, 3, 1, 1..=5).unwrap();
    assert!(s.windows(2).all(|w| w[1].1 - w[0].1 == 10));
}

#[test]
fn certificate_round_trip() {
    for f in [
        main_i(2).unwrap(),
        main_ii(3, 1).unwrap(),
        six_boundary(3, 1).unwrap(),
        four_boundary(1).unwrap(),
    ] {
        let cert = Certificate::from_factorization(&f);
        let text = cert.to_json();
        assert_eq!(text, Certificate::from_factorization(&f).to_json());
        assert!(text.ends_with("}\n") && !text.contains('\r'));
        let back = Certificate::parse(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_factorization(), f);
    }
    assert!(Certificate::parse("{}").is_err());
    let bad = Certificate::from_factorization(&main_i(1).unwrap())
        .to_json()
        .replacen("\"sign\": 1", "\"sign\": 2", 1);
    assert!(Certificate::parse(&bad).is_err());
}
