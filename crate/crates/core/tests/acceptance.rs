//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::time::Instant;

use twistcert::catalog::{build_catalog, SurfaceSpec};
use twistcert::certificate::Certificate;
use twistcert::families::*;
use twistcert::homology::IntMatrix;
use twistcert::lefschetz::chi_series;
use twistcert::mcg::{
    act_on_curve, equal, evaluate_homology, evaluate_pi1, Backend, MappingClassWord, Status,
};
use twistcert::relations::{
    braid_relation, chain_relation, chain_unfold, commute_relation, verify,
};
use twistcert::word::Budget;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(g: usize, n: usize) -> SurfaceSpec {
    SurfaceSpec { g, n }
}

fn relation_suite() -> Check {
    let b = Budget(10_000_000);
    for s in [spec(2, 2), spec(3, 2)] {
        let cat = build_catalog(s).map_err(|e| e.to_string())?;
        let k = cat.chain_len();
        let mut rels = Vec::new();
        for i in 1..k {
            rels.push(braid_relation(&cat, i).unwrap());
            for j in i + 2..=k {
                rels.push(commute_relation(&cat, i, j).unwrap());
            }
        }
        for n in 2..=k.min(7) {
            rels.push(chain_unfold(&cat, n).unwrap());
        }
        for h in [1, 2] {
            rels.push(chain_relation(&cat, h).unwrap());
        }
        if s.g == 3 {
            rels.push(chain_relation(&cat, 3).unwrap());
        }
        for r in &rels {
            let v = verify(r, Backend::Pi1, b, &cat);
            ensure(v.status == Status::Verified, || {
                format!("{r} on {s:?}: {v}")
            })?;
        }
    }
    Ok(())
}

fn phi_lemma() -> Check {
    let cat = build_catalog(spec(2, 2)).map_err(|e| e.to_string())?;
    let b = Budget::default();
    let phi = phi_word("c4");
    let id = MappingClassWord::identity();
    let class = |w: &MappingClassWord, c: &str| act_on_curve(w, c, &cat, b).unwrap();
    ensure(class(&phi, "c3") == class(&id, "e"), || "φ(c3) ≠ e".into())?;
    ensure(class(&phi, "d") == class(&id, "c3"), || "φ(d) ≠ c3".into())
}

fn prop_tm_check() -> Check {
    let cat = build_catalog(spec(2, 2)).map_err(|e| e.to_string())?;
    for (m, len) in [(1, 22), (2, 32)] {
        let f = prop_tm(&cat, "c4", m).map_err(|e| e.to_string())?;
        ensure(f.twists.len() == len, || {
            format!("m={m}: length {}", f.twists.len())
        })?;
        let v = equal(
            &f.twists,
            &phi_word("c4"),
            Backend::Pi1,
            Budget::default(),
            &cat,
        );
        ensure(v.status == Status::Verified, || format!("m={m}: {v}"))?;
    }
    Ok(())
}

fn main_i_check() -> Check {
    let cat = build_catalog(spec(2, 2)).map_err(|e| e.to_string())?;
    for m in 1..=2 {
        let f = main_i(m).unwrap();
        let v = verify_factorization(&f, Backend::Pi1, Budget::default(), &cat);
        ensure(v.status == Status::Verified, || format!("m={m}: {v}"))?;
    }
    for m in 1..=10 {
        let n = main_i(m).unwrap().twists.len();
        ensure(n == 21 + 10 * m, || format!("m={m}: length {n}"))?;
    }
    Ok(())
}

fn main_ii_check() -> Check {
    for g in 3..=6 {
        for m in 1..=10 {
            let n = main_ii(g, m).unwrap().twists.len();
            ensure(n == 2 * (g + 1) * (2 * g + 1) - 10 + 10 * m, || {
                format!("g={g} m={m}: length {n}")
            })?;
        }
    }
    let f = main_ii(3, 1).unwrap();
    let cat = build_catalog(f.spec).map_err(|e| e.to_string())?;
    let h = evaluate_homology(&f.twists, &cat).map_err(|e| e.to_string())?;
    ensure(h == IntMatrix::identity(cat.homology_dim()), || {
        "homology of g=3, m=1 is not the identity".into()
    })?;
    let v = verify_factorization(&f, Backend::Pi1, Budget::default(), &cat);
    ensure(v.status != Status::Falsified, || {
        format!("g=3 m=1 falsified: {v}")
    })?;
    ensure(
        v.status == Status::Verified || v.note.as_deref().is_some_and(|n| n.contains("budget")),
        || format!("{v}"),
    )
}

fn euler_characteristic_series() -> Check {
    let chis = |family, g, k| -> Vec<i64> {
        chi_series(family, g, k, 1..=5)
            .unwrap()
            .into_iter()
            .map(|(_, c)| c)
            .collect()
    };
    let a = chis(Family::MainIi, 3, 1);
    ensure(a == vec![48, 58, 68, 78, 88], || format!("main-ii: {a:?}"))?;
    let b = chis(Family::Cor1, 2, 2);
    ensure(b == vec![46, 56, 66, 76, 86], || format!("cor1: {b:?}"))
}

fn section_four_theorems() -> Check {
    for g in 3..=5 {
        let d_prime = {
            let p = six_boundary_parts(g);
            p.rest.len() + p.d.len()
        };
        ensure(d_prime == 8 * g - 7, || {
            format!("D' length {d_prime} for g={g}")
        })?;
        for m in 1..=5 {
            let n = six_boundary(g, m).unwrap().twists.len();
            ensure(n == 8 * g + 5 + 10 * m, || {
                format!("six-boundary g={g} m={m}: {n}")
            })?;
        }
    }
    ensure(four_boundary_d().len() == 9, || "D length".into())?;
    for m in 1..=5 {
        let n = four_boundary(m).unwrap().twists.len();
        ensure(n == 21 + 10 * m, || format!("four-boundary m={m}: {n}"))?;
    }
    let f = four_boundary(1).unwrap();
    let cat = build_catalog(f.spec).map_err(|e| e.to_string())?;
    let v = verify_factorization(&f, Backend::Pi1, Budget::default(), &cat);
    ensure(v.status == Status::Verified, || {
        format!("four-boundary m=1: {v}")
    })
}

fn positivity_scan() -> Check {
    let mut members = Vec::new();
    let c22 = build_catalog(spec(2, 2)).map_err(|e| e.to_string())?;
    for m in 1..=3 {
        members.push(prop_tm(&c22, "c4", m).unwrap());
        members.push(main_i(m).unwrap());
        members.push(cor1_genus2_squared(m).unwrap());
        members.push(four_boundary(m).unwrap());
        members.push(multitwist_power(2, 3, m).unwrap());
        for g in 3..=6 {
            members.push(main_ii(g, m).unwrap());
            members.push(multitwist_power(g, 2, m).unwrap());
        }
        for g in 3..=5 {
            members.push(six_boundary(g, m).unwrap());
        }
    }
    let mut violations = 0;
    for f in &members {
        let cat = build_catalog(f.spec).map_err(|e| e.to_string())?;
        for t in f.twists.twists() {
            if t.sign != 1 || !cat.is_nonseparating(&t.curve).map_err(|e| e.to_string())? {
                violations += 1;
            }
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))
}

fn naturality() -> Check {
    let mut rng = common::rng(2024);
    let catalogs: Vec<_> = [spec(2, 2), spec(3, 2), spec(2, 4), spec(1, 6), spec(3, 6)]
        .into_iter()
        .map(|s| build_catalog(s).unwrap())
        .collect();
    let mut mismatches = 0;
    for i in 0..200 {
        let cat = &catalogs[i % catalogs.len()];
        let w = common::random_word(cat, &mut rng, 20);
        let f = evaluate_pi1(&w, cat, Budget::default()).map_err(|e| e.to_string())?;
        let dim = cat.homology_dim();
        let ab = f.abelianization();
        let rows: Vec<Vec<i64>> = ab[..dim].iter().map(|r| r[..dim].to_vec()).collect();
        if IntMatrix::from_rows(&rows) != evaluate_homology(&w, cat).map_err(|e| e.to_string())? {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))
}

fn determinism() -> Check {
    let f = generate(Family::MainIi, 3, 1, 2).unwrap();
    let a = Certificate::from_factorization(&f).to_json();
    let b = Certificate::from_factorization(&generate(Family::MainIi, 3, 1, 2).unwrap()).to_json();
    ensure(a == b, || "certificates differ".into())?;
    let cert = Certificate::parse(&a).map_err(|e| e.to_string())?;
    let mut tampered = cert.to_factorization();
    let mut twists = tampered.twists.twists().to_vec();
    twists[10] = twists[10].inverse();
    tampered.twists = MappingClassWord::new(twists);
    let cat = build_catalog(tampered.spec).map_err(|e| e.to_string())?;
    let v = verify_factorization(&tampered, Backend::Both, Budget::default(), &cat);
    ensure(v.status == Status::Falsified && v.witness.is_some(), || {
        format!("tampered: {v}")
    })
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("relation suite in π₁", relation_suite),
        ("φ maps (c3, d) to (e, c3)", phi_lemma),
        ("Tᵐ expansion of φ", prop_tm_check),
        ("genus two, t_δ1 t_δ2 t_4", main_i_check),
        ("genus g ≥ 3, t_δ1 t_δ2", main_ii_check),
        ("Euler characteristic series", euler_characteristic_series),
        ("six and four boundary components", section_four_theorems),
        ("positivity and nonseparating scan", positivity_scan),
        ("homology naturality on 200 words", naturality),
        ("determinism and tamper detection", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = check();
        let ms = t.elapsed().as_millis();
        match &r {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
