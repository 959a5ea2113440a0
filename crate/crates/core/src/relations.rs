//! Named relations between twist products, and the catalog witness suite.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{build_catalog, CatalogError, CurveCatalog, SurfaceSpec};
use crate::mcg::{equal, Backend, MappingClassWord, Status, Twist, Verdict};
use crate::word::Budget;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("unknown relation `{0}`")]
    Unknown(String),
    #[error("parameter `{name}` = {value} out of range: {reason}")]
    Parameter {
        name: String,
        value: i64,
        reason: String,
    },
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error(
        "relation `{relation}` needs curves not in the genus {g}, {n}-boundary catalog: {missing}"
    )]
    MissingCurves {
        relation: String,
        g: usize,
        n: usize,
        missing: String,
    },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verifiability {
    Pi1,
    HomologyOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub surface: SurfaceSpec,
    pub lhs: MappingClassWord,
    pub rhs: MappingClassWord,
    pub verifiability: Verifiability,
    pub note: Option<String>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "({})", p.join(", "))?;
        }
        Ok(())
    }
}

fn chain(from: usize, to: usize) -> MappingClassWord {
    (from..=to)
        .map(|i| Twist::positive(format!("c{i}")))
        .collect()
}

fn chain_down(from: usize, to: usize) -> MappingClassWord {
    (to..=from)
        .rev()
        .map(|i| Twist::positive(format!("c{i}")))
        .collect()
}

/// `t_n ⋯ t_1 t_1 ⋯ t_n`.
pub fn chain_fold(n: usize) -> MappingClassWord {
    chain_down(n, 1).concat(&chain(1, n))
}

fn relation(
    cat: &CurveCatalog,
    name: &str,
    params: &[(&str, String)],
    lhs: MappingClassWord,
    rhs: MappingClassWord,
) -> Result<Relation, RelationError> {
    let missing: Vec<String> = lhs
        .curves()
        .into_iter()
        .chain(rhs.curves())
        .filter(|c| !cat.contains(c))
        .collect();
    if !missing.is_empty() {
        let spec = cat.spec();
        return Err(RelationError::MissingCurves {
            relation: name.to_string(),
            g: spec.g,
            n: spec.n,
            missing: missing.join(", "),
        });
    }
    let abstract_curve = lhs
        .curves()
        .into_iter()
        .chain(rhs.curves())
        .any(|c| cat.curve(&c).map(|c| c.is_abstract()).unwrap_or(false));
    Ok(Relation {
        name: name.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        surface: cat.spec(),
        lhs,
        rhs,
        verifiability: if abstract_curve {
            Verifiability::HomologyOnly
        } else {
            Verifiability::Pi1
        },
        note: None,
    })
}

fn check_index(name: &str, value: usize, lo: usize, hi: usize) -> Result<(), RelationError> {
    if value < lo || value > hi {
        return Err(RelationError::Parameter {
            name: name.into(),
            value: value as i64,
            reason: format!("expected {lo}..={hi}"),
        });
    }
    Ok(())
}

/// `t_i t_{i+1} t_i = t_{i+1} t_i t_{i+1}`.
pub fn braid_relation(cat: &CurveCatalog, i: usize) -> Result<Relation, RelationError> {
    check_index("i", i, 1, cat.chain_len().saturating_sub(1))?;
    let (a, b) = (format!("c{i}"), format!("c{}", i + 1));
    braid_pair(cat, &a, &b, &[("i", i.to_string())])
}

/// `t_i t_j = t_j t_i` for `|i - j| > 1`.
pub fn commute_relation(cat: &CurveCatalog, i: usize, j: usize) -> Result<Relation, RelationError> {
    check_index("i", i, 1, cat.chain_len())?;
    check_index("j", j, 1, cat.chain_len())?;
    if i.abs_diff(j) < 2 {
        return Err(RelationError::Parameter {
            name: "j".into(),
            value: j as i64,
            reason: "need |i - j| > 1".into(),
        });
    }
    let (a, b) = (format!("c{i}"), format!("c{j}"));
    commute_pair(cat, &a, &b, &[("i", i.to_string()), ("j", j.to_string())])
}

/// Braid relation between two named curves meeting once.
pub fn braid_pair(
    cat: &CurveCatalog,
    a: &str,
    b: &str,
    params: &[(&str, String)],
) -> Result<Relation, RelationError> {
    let params: Vec<(&str, String)> = if params.is_empty() {
        vec![("a", a.to_string()), ("b", b.to_string())]
    } else {
        params.to_vec()
    };
    relation(
        cat,
        "braid",
        &params,
        MappingClassWord::positive(&[a, b, a]),
        MappingClassWord::positive(&[b, a, b]),
    )
}

/// Commutation of twists about two named disjoint curves.
pub fn commute_pair(
    cat: &CurveCatalog,
    a: &str,
    b: &str,
    params: &[(&str, String)],
) -> Result<Relation, RelationError> {
    let params: Vec<(&str, String)> = if params.is_empty() {
        vec![("a", a.to_string()), ("b", b.to_string())]
    } else {
        params.to_vec()
    };
    relation(
        cat,
        "commute",
        &params,
        MappingClassWord::positive(&[a, b]),
        MappingClassWord::positive(&[b, a]),
    )
}

/// `(t_1 ⋯ t_{2h+1})^{2h+2} = t_a t_b` for the two boundary curves of a
/// neighbourhood of the chain.
pub fn chain_relation(cat: &CurveCatalog, h: usize) -> Result<Relation, RelationError> {
    if h == 0 || 2 * h + 1 > cat.chain_len() {
        return Err(RelationError::Parameter {
            name: "h".into(),
            value: h as i64,
            reason: format!("chain has {} curves", cat.chain_len()),
        });
    }
    let (a, b) = cat
        .chain_boundary(h)
        .ok_or_else(|| RelationError::MissingCurves {
            relation: "chain".into(),
            g: cat.spec().g,
            n: cat.spec().n,
            missing: format!("boundary of the {}-curve chain", 2 * h + 1),
        })?;
    relation(
        cat,
        "chain",
        &[("h", h.to_string())],
        chain(1, 2 * h + 1).pow(2 * h + 2),
        MappingClassWord::positive(&[a, b]),
    )
}

/// `(t_1 ⋯ t_{2h})^{4h+2} = t_δ` on a surface with one boundary component.
pub fn chain_even_relation(cat: &CurveCatalog, h: usize) -> Result<Relation, RelationError> {
    let spec = cat.spec();
    if spec.n != 1 || h != spec.g {
        return Err(RelationError::Parameter {
            name: "h".into(),
            value: h as i64,
            reason: "only the full chain of a one-boundary surface is available".into(),
        });
    }
    relation(
        cat,
        "chain-even",
        &[("h", h.to_string())],
        chain(1, 2 * h).pow(4 * h + 2),
        MappingClassWord::positive(&["delta1"]),
    )
}

/// `(t_1 ⋯ t_n)^{n+1} = (t_1 ⋯ t_{n-1})^n t_n ⋯ t_1 t_1 ⋯ t_n`.
pub fn chain_unfold(cat: &CurveCatalog, n: usize) -> Result<Relation, RelationError> {
    check_index("n", n, 2, cat.chain_len())?;
    relation(
        cat,
        "chain-unfold",
        &[("n", n.to_string())],
        chain(1, n).pow(n + 1),
        chain(1, n - 1).pow(n).concat(&chain_fold(n)),
    )
}

/// `T = (t_1 t_2 t_3)^2 t_2 t_1 t_3 t_2`.
pub fn t_word() -> MappingClassWord {
    chain(1, 3)
        .pow(2)
        .concat(&MappingClassWord::positive(&["c2", "c1", "c3", "c2"]))
}

/// `T^m = t_d^m t_3^{-m} t_e^m t_3^{-m}`.
pub fn t_power_identity(cat: &CurveCatalog, m: usize) -> Result<Relation, RelationError> {
    if m < 1 {
        return Err(RelationError::Parameter {
            name: "m".into(),
            value: 0,
            reason: "need m ≥ 1".into(),
        });
    }
    let power = |name: &str, sign: i8| -> MappingClassWord {
        (0..m).map(|_| Twist::new(name, sign)).collect()
    };
    let rhs = power("d", 1)
        .concat(&power("c3", -1))
        .concat(&power("e", 1))
        .concat(&power("c3", -1));
    relation(
        cat,
        "t-power",
        &[("m", m.to_string())],
        t_word().pow(m),
        rhs,
    )
}

/// Lantern relations on the holed tori.
pub fn lantern_relation(cat: &CurveCatalog, variant: usize) -> Result<Relation, RelationError> {
    let (lhs, rhs) = match variant {
        1 => (
            ["gamma", "sigma", "alpha4"],
            ["delta4", "delta5", "alpha3", "alpha5"],
        ),
        2 => (
            ["gamma'", "sigma'", "alpha5"],
            ["delta5", "delta6", "alpha4", "alpha6"],
        ),
        v => {
            return Err(RelationError::Parameter {
                name: "variant".into(),
                value: v as i64,
                reason: "expected 1 or 2".into(),
            })
        }
    };
    relation(
        cat,
        "lantern",
        &[("variant", variant.to_string())],
        MappingClassWord::positive(&lhs),
        MappingClassWord::positive(&rhs),
    )
}

/// `t_δ1 t_δ2 t_δ3 t_γ = (t_β t_α1 t_α3 t_β t_α2 t_α5)^2`.
pub fn four_holed_torus(cat: &CurveCatalog) -> Result<Relation, RelationError> {
    relation(
        cat,
        "four-holed-torus",
        &[],
        MappingClassWord::positive(&["delta1", "delta2", "delta3", "gamma"]),
        MappingClassWord::positive(&["beta", "alpha1", "alpha3", "beta", "alpha2", "alpha5"])
            .pow(2),
    )
}

/// `t_δ1 ⋯ t_δ6 = t_α1 t_α3 t_β t_α2 t_σ t_σ' t_α5 t_β36 t_α1 t_β6 t_α2 t_β`.
pub fn six_holed_torus(cat: &CurveCatalog) -> Result<Relation, RelationError> {
    relation(
        cat,
        "six-holed-torus",
        &[],
        MappingClassWord::positive(&["delta1", "delta2", "delta3", "delta4", "delta5", "delta6"]),
        MappingClassWord::positive(&[
            "alpha1", "alpha3", "beta", "alpha2", "sigma", "sigma'", "alpha5", "beta36", "alpha1",
            "beta6", "alpha2", "beta",
        ]),
    )
}

/// The six-holed torus relation after gluing `δ2` to `δ3` and cancelling
/// `t_1^2`, on the genus-two surface with four boundary components.
pub fn glued_six_holed(cat: &CurveCatalog) -> Result<Relation, RelationError> {
    relation(
        cat,
        "glued-six-holed",
        &[],
        MappingClassWord::positive(&["delta1", "delta4", "delta5", "delta6"]),
        MappingClassWord::positive(&["c2", "c1", "c3", "c2"])
            .concat(&chain(1, 3).pow(2))
            .concat(&MappingClassWord::positive(&[
                "c4", "c3", "sigma", "sigma'", "alpha5", "beta36", "d", "beta6", "c3", "c4",
            ])),
    )
}

/// The eight-holed torus relation. The `σ` curves are abstract, so only the
/// homology backend can say anything, and only once their classes are known.
pub fn eight_holed_torus(cat: &CurveCatalog) -> Result<Relation, RelationError> {
    let mut rel = relation(
        cat,
        "eight-holed-torus",
        &[],
        MappingClassWord::positive(&[
            "delta1", "delta2", "delta3", "delta4", "delta5", "delta6", "delta7", "delta8",
        ]),
        MappingClassWord::positive(&[
            "alpha4", "alpha5", "beta1", "sigma3", "sigma6", "alpha2", "beta6", "sigma4", "sigma7",
            "alpha7", "beta4", "sigma5",
        ]),
    )?;
    rel.note = Some(
        "boundary labels shifted by one: δ_{i+1} here is δ_i in the usual labelling, δ1 here is δ8"
            .into(),
    );
    Ok(rel)
}

/// `(t_1 ⋯ t_5)^6 = t_1 t_2 t_3 t_4 t_d t_e t_4 t_3 t_2 t_1 t_5 t_4 t_3 t_2 t_1 t_1 t_2 t_3 t_4 t_5`.
pub fn chain_split(cat: &CurveCatalog) -> Result<Relation, RelationError> {
    relation(
        cat,
        "chain-split",
        &[],
        chain(1, 5).pow(6),
        chain(1, 4)
            .concat(&MappingClassWord::positive(&["d", "e"]))
            .concat(&chain_down(4, 1))
            .concat(&chain_fold(5)),
    )
}

/// Verifies a relation. Homology-only relations never report π₁ equality.
pub fn verify(rel: &Relation, backend: Backend, budget: Budget, cat: &CurveCatalog) -> Verdict {
    if rel.verifiability == Verifiability::HomologyOnly {
        let abstract_names: Vec<String> = rel
            .lhs
            .curves()
            .into_iter()
            .chain(rel.rhs.curves())
            .filter(|c| cat.curve(c).map(|c| c.is_abstract()).unwrap_or(false))
            .collect();
        let mut v = equal(&rel.lhs, &rel.rhs, Backend::Homology, budget, cat);
        if v.status == Status::Verified {
            v.status = Status::Inconclusive;
        }
        if v.status == Status::Inconclusive {
            v.note = Some(format!(
                "abstract σ curves ({}) have no π₁ action",
                abstract_names.join(", ")
            ));
        }
        if backend == Backend::Pi1 {
            v.backend = Backend::Pi1;
        }
        return v;
    }
    equal(&rel.lhs, &rel.rhs, backend, budget, cat)
}

/// Parameter set passed to [`construct`].
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub h: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub i: Option<usize>,
    pub j: Option<usize>,
    pub variant: Option<usize>,
}

fn need(v: Option<usize>, name: &str) -> Result<usize, RelationError> {
    v.ok_or_else(|| RelationError::MissingParameter(name.to_string()))
}

/// Registry entry: a stable key, its parameters and a default surface.
#[derive(Debug, Clone, Serialize)]
pub struct RegistryEntry {
    pub name: &'static str,
    pub parameters: &'static [&'static str],
    pub surfaces: &'static str,
}

pub const REGISTRY: &[RegistryEntry] = &[
    RegistryEntry {
        name: "braid",
        parameters: &["i"],
        surfaces: "any catalog with a chain",
    },
    RegistryEntry {
        name: "commute",
        parameters: &["i", "j"],
        surfaces: "any catalog with a chain",
    },
    RegistryEntry {
        name: "chain",
        parameters: &["h"],
        surfaces: "(g,2), (2,4), (g,6)",
    },
    RegistryEntry {
        name: "chain-even",
        parameters: &["h"],
        surfaces: "(g,1) with h = g",
    },
    RegistryEntry {
        name: "chain-unfold",
        parameters: &["n"],
        surfaces: "any catalog with a chain",
    },
    RegistryEntry {
        name: "t-power",
        parameters: &["m"],
        surfaces: "(g,2) with g ≥ 2, (2,4), (g,6)",
    },
    RegistryEntry {
        name: "lantern",
        parameters: &["variant"],
        surfaces: "variant 1: (1,5); variant 2: (1,6), (2,4)",
    },
    RegistryEntry {
        name: "four-holed-torus",
        parameters: &[],
        surfaces: "(1,5)",
    },
    RegistryEntry {
        name: "six-holed-torus",
        parameters: &[],
        surfaces: "(1,6)",
    },
    RegistryEntry {
        name: "glued-six-holed",
        parameters: &[],
        surfaces: "(2,4)",
    },
    RegistryEntry {
        name: "eight-holed-torus",
        parameters: &[],
        surfaces: "(1,8), (g,6)",
    },
    RegistryEntry {
        name: "chain-split",
        parameters: &[],
        surfaces: "(g,2) with g ≥ 2",
    },
];

/// Builds a registered relation by key.
pub fn construct(name: &str, p: &Params, cat: &CurveCatalog) -> Result<Relation, RelationError> {
    match name {
        "braid" => braid_relation(cat, need(p.i, "i")?),
        "commute" => commute_relation(cat, need(p.i, "i")?, need(p.j, "j")?),
        "chain" => chain_relation(cat, need(p.h, "h")?),
        "chain-even" => chain_even_relation(cat, need(p.h, "h")?),
        "chain-unfold" => chain_unfold(cat, need(p.n, "n")?),
        "t-power" => t_power_identity(cat, need(p.m, "m")?),
        "lantern" => lantern_relation(cat, need(p.variant, "variant")?),
        "four-holed-torus" => four_holed_torus(cat),
        "six-holed-torus" => six_holed_torus(cat),
        "glued-six-holed" => glued_six_holed(cat),
        "eight-holed-torus" => eight_holed_torus(cat),
        "chain-split" => chain_split(cat),
        other => Err(RelationError::Unknown(other.to_string())),
    }
}

/// Surface of the first sample instance of a registered relation.
pub fn default_surface(name: &str) -> Option<SurfaceSpec> {
    sample_instances()
        .into_iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, s, _)| s)
}

/// One representative instance per registry entry, for export.
fn sample_instances() -> Vec<(&'static str, SurfaceSpec, Params)> {
    let s = |g, n| SurfaceSpec { g, n };
    let p = Params::default;
    vec![
        ("braid", s(2, 2), Params { i: Some(1), ..p() }),
        (
            "commute",
            s(2, 2),
            Params {
                i: Some(1),
                j: Some(3),
                ..p()
            },
        ),
        ("chain", s(2, 2), Params { h: Some(1), ..p() }),
        ("chain", s(2, 2), Params { h: Some(2), ..p() }),
        ("chain", s(3, 2), Params { h: Some(3), ..p() }),
        ("chain-even", s(2, 1), Params { h: Some(2), ..p() }),
        ("chain-unfold", s(2, 2), Params { n: Some(5), ..p() }),
        ("t-power", s(2, 2), Params { m: Some(1), ..p() }),
        (
            "lantern",
            s(1, 5),
            Params {
                variant: Some(1),
                ..p()
            },
        ),
        (
            "lantern",
            s(1, 6),
            Params {
                variant: Some(2),
                ..p()
            },
        ),
        ("four-holed-torus", s(1, 5), p()),
        ("six-holed-torus", s(1, 6), p()),
        ("glued-six-holed", s(2, 4), p()),
        ("eight-holed-torus", s(1, 8), p()),
        ("chain-split", s(2, 2), p()),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportEntry {
    pub name: String,
    pub parameters: Vec<String>,
    pub surfaces: String,
    pub example: BTreeMap<String, String>,
    pub example_surface: SurfaceSpec,
    pub lhs_twists: usize,
    pub rhs_twists: usize,
    pub verifiability: Verifiability,
    pub note: Option<String>,
}

/// Registry dump with twist counts for a representative instance of each
/// entry.
pub fn export() -> Result<Vec<ExportEntry>, RelationError> {
    let mut out = Vec::new();
    for (name, spec, params) in sample_instances() {
        let cat = build_catalog(spec)?;
        let rel = construct(name, &params, &cat)?;
        let entry = REGISTRY
            .iter()
            .find(|e| e.name == name)
            .expect("registered");
        out.push(ExportEntry {
            name: name.to_string(),
            parameters: entry.parameters.iter().map(|s| s.to_string()).collect(),
            surfaces: entry.surfaces.to_string(),
            example: rel.params.clone(),
            example_surface: spec,
            lhs_twists: rel.lhs.len(),
            rhs_twists: rel.rhs.len(),
            verifiability: rel.verifiability,
            note: rel.note.clone(),
        });
    }
    Ok(out)
}

fn witness_relations(cat: &CurveCatalog) -> Result<Vec<Relation>, RelationError> {
    let spec = cat.spec();
    let k = cat.chain_len();
    let mut rels = Vec::new();
    for i in 1..k {
        rels.push(braid_relation(cat, i)?);
        for j in i + 2..=k {
            rels.push(commute_relation(cat, i, j)?);
        }
    }
    for h in cat.chain_boundary_orders() {
        if 2 * h < k {
            rels.push(chain_relation(cat, h)?);
        }
    }
    if spec.n == 1 {
        rels.push(chain_even_relation(cat, spec.g)?);
    }
    let alphas: Vec<String> = cat
        .curves()
        .filter(|c| c.name.starts_with("alpha"))
        .map(|c| c.name.clone())
        .collect();
    for (i, a) in alphas.iter().enumerate() {
        rels.push(braid_pair(cat, a, "beta", &[])?);
        for b in &alphas[i + 1..] {
            rels.push(commute_pair(cat, a, b, &[])?);
        }
    }
    match (spec.g, spec.n) {
        (1, 5) => {
            rels.push(lantern_relation(cat, 1)?);
            rels.push(four_holed_torus(cat)?);
        }
        (1, 6) => {
            rels.push(lantern_relation(cat, 2)?);
            rels.push(six_holed_torus(cat)?);
        }
        (2, 4) => {
            rels.push(lantern_relation(cat, 2)?);
            rels.push(glued_six_holed(cat)?);
        }
        _ => {}
    }
    Ok(rels)
}

/// Runs every witness relation in the π₁ backend. For catalogs with a
/// lantern, also checks that the mirror-image convention fails it.
pub fn run_witness_suite(cat: &CurveCatalog) -> Result<(), CatalogError> {
    let rels = witness_relations(cat).map_err(|e| CatalogError::Witness(e.to_string()))?;
    for rel in &rels {
        let v = verify(rel, Backend::Pi1, Budget::default(), cat);
        if v.status != Status::Verified {
            return Err(CatalogError::Witness(format!("{rel}: {v}")));
        }
    }
    if let Some(l) = rels.iter().find(|r| r.name == "lantern") {
        let mirror = |w: &MappingClassWord| -> MappingClassWord {
            w.twists().iter().map(|t| t.inverse()).collect()
        };
        let v = equal(
            &mirror(&l.lhs),
            &mirror(&l.rhs),
            Backend::Pi1,
            Budget::default(),
            cat,
        );
        if v.status != Status::Falsified {
            return Err(CatalogError::Witness(format!(
                "{l} also holds for left-handed twists"
            )));
        }
    }
    Ok(())
}
