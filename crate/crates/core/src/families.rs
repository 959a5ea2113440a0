//! Positive factorizations of boundary multitwists with an arbitrarily long
//! tail, one constructor per family.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{build_catalog, CatalogError, CurveCatalog, SurfaceSpec};
use crate::mcg::{equal, Backend, MappingClassWord, Status, Twist, Verdict};
use crate::relations::{chain_fold, t_word};
use crate::word::Budget;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {name} = {value} out of range: {reason}")]
    Parameter {
        name: &'static str,
        value: usize,
        reason: &'static str,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("catalog lacks curve `{0}`")]
    MissingCurve(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PropTm,
    MainI,
    MainIi,
    Cor1,
    MultitwistPower,
    SixBoundary,
    FourBoundary,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::PropTm,
        Family::MainI,
        Family::MainIi,
        Family::Cor1,
        Family::MultitwistPower,
        Family::SixBoundary,
        Family::FourBoundary,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Family::PropTm => "prop-tm",
            Family::MainI => "main-i",
            Family::MainIi => "main-ii",
            Family::Cor1 => "cor1",
            Family::MultitwistPower => "multitwist-power",
            Family::SixBoundary => "six-boundary",
            Family::FourBoundary => "four-boundary",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Family, FamilyError> {
        Family::ALL
            .into_iter()
            .find(|f| f.key() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub spec: SurfaceSpec,
    pub target: MappingClassWord,
    pub twists: MappingClassWord,
    pub family: Family,
    pub m: usize,
    /// Boundary power for `multitwist-power`, otherwise 1.
    pub k: usize,
    pub claimed_length: usize,
    pub all_nonseparating: bool,
}

fn check_m(m: usize) -> Result<(), FamilyError> {
    if m < 1 {
        return Err(FamilyError::Parameter {
            name: "m",
            value: m,
            reason: "need m ≥ 1",
        });
    }
    Ok(())
}

fn chain(from: usize, to: usize) -> MappingClassWord {
    (from..=to)
        .map(|i| Twist::positive(format!("c{i}")))
        .collect()
}

fn power(name: &str, sign: i8, m: usize) -> MappingClassWord {
    (0..m).map(|_| Twist::new(name, sign)).collect()
}

fn base_curves_nonseparating(
    w: &MappingClassWord,
    cat: &CurveCatalog,
) -> Result<bool, FamilyError> {
    for t in w.twists() {
        if !cat.is_nonseparating(&t.curve)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn finish(
    cat: &CurveCatalog,
    family: Family,
    m: usize,
    k: usize,
    target: MappingClassWord,
    twists: MappingClassWord,
    claimed_length: usize,
) -> Result<Factorization, FamilyError> {
    let all_nonseparating = base_curves_nonseparating(&twists, cat)?;
    Ok(Factorization {
        spec: cat.spec(),
        target,
        twists,
        family,
        m,
        k,
        claimed_length,
        all_nonseparating,
    })
}

fn require(cat: &CurveCatalog, names: &[&str]) -> Result<(), FamilyError> {
    for n in names {
        if !cat.contains(n) {
            return Err(FamilyError::MissingCurve(n.to_string()));
        }
    }
    Ok(())
}

/// `φ = t_4 t_3 t_2 t_1 t_1 t_2 t_3 t_4 t_x t_d t_3 t_x`.
pub fn phi_word(x: &str) -> MappingClassWord {
    chain_fold(4).concat(&MappingClassWord::positive(&[x, "d", "c3", x]))
}

/// `φ` rewritten as the twelve `φ`-twists conjugated by `t_3^{-m} t_e^m`,
/// followed by `T^m`.
pub fn prop_tm(cat: &CurveCatalog, x: &str, m: usize) -> Result<Factorization, FamilyError> {
    check_m(m)?;
    require(cat, &["c1", "c2", "c3", "c4", "d", "e", x])?;
    let twists = prop_tm_twists(x, m);
    finish(cat, Family::PropTm, m, 1, phi_word(x), twists, 12 + 10 * m)
}

fn prop_tm_twists(x: &str, m: usize) -> MappingClassWord {
    let u = power("c3", -1, m).concat(&power("e", 1, m));
    phi_word(x).conjugate(&u).concat(&t_word().pow(m))
}

/// The nine twists `t_{f(c5)} t_{f(c1)} t_{f(c2)} t_{f(c3)} t_{h(e)} t_{h(c4)} t_2 t_1 t_5`
/// with `f = (t_4 t_d t_3)^{-1}` and `h = t_3^{-1}`.
pub fn d9_word() -> MappingClassWord {
    let f = MappingClassWord::parse("c4 d c3").invert();
    let h = MappingClassWord::parse("c3^-1");
    MappingClassWord::positive(&["c5", "c1", "c2", "c3"])
        .conjugate(&f)
        .concat(&MappingClassWord::positive(&["e", "c4"]).conjugate(&h))
        .concat(&MappingClassWord::positive(&["c2", "c1", "c5"]))
}

fn main_i_twists(m: usize) -> MappingClassWord {
    d9_word().concat(&prop_tm_twists("c4", m))
}

/// `t_δ1 t_δ2 t_4` on the genus-two surface with two boundary components.
pub fn main_i(m: usize) -> Result<Factorization, FamilyError> {
    check_m(m)?;
    let cat = build_catalog(SurfaceSpec { g: 2, n: 2 })?;
    finish(
        &cat,
        Family::MainI,
        m,
        1,
        MappingClassWord::positive(&["delta1", "delta2", "c4"]),
        main_i_twists(m),
        21 + 10 * m,
    )
}

/// `t_δ1 t_δ2 t_a` for `a = u(c4)`: every twist is conjugated by `u`.
pub fn main_i_transported(m: usize, u: &MappingClassWord) -> Result<Factorization, FamilyError> {
    let mut f = main_i(m)?;
    let cat = build_catalog(f.spec)?;
    f.target = MappingClassWord::positive(&["delta1", "delta2"])
        .concat(&MappingClassWord::positive(&["c4"]).conjugate(u));
    f.twists = f.twists.conjugate(u);
    for name in u.curves() {
        cat.curve(&name)?;
    }
    Ok(f)
}

/// Unfolds `(t_1 ⋯ t_top)^{top+1}` down to `(t_1 ⋯ t_5)^6` followed by the
/// folded blocks `B_6 ⋯ B_top`.
fn unfolded_tail(top: usize) -> MappingClassWord {
    let mut tail = MappingClassWord::identity();
    for n in 6..=top {
        tail.extend(&chain_fold(n));
    }
    tail
}

/// The tail `K` in `t_δ1 t_δ2 = (t_1 ⋯ t_5)^6 t_1 K`.
pub fn k_word(g: usize) -> MappingClassWord {
    let tail = unfolded_tail(2 * g + 1);
    // first occurrence of t_1 inside B_6 = t_6 t_5 ⋯ t_1 t_1 ⋯ t_6
    let (_, rest) = tail.pull_to_front(&[5]);
    rest
}

/// Conjugator taking `c4` to `c1`.
pub fn c4_to_c1() -> MappingClassWord {
    MappingClassWord::parse("c3 c4 c2 c3 c1 c2").invert()
}

/// `t_δ1 t_δ2` on the genus-`g` surface with two boundary components.
pub fn main_ii(g: usize, m: usize) -> Result<Factorization, FamilyError> {
    if g < 3 {
        return Err(FamilyError::Parameter {
            name: "g",
            value: g,
            reason: "need g ≥ 3",
        });
    }
    check_m(m)?;
    let cat = build_catalog(SurfaceSpec { g, n: 2 })?;
    let block = main_i_twists(m).conjugate(&c4_to_c1());
    let twists = block.concat(&k_word(g));
    let len = 2 * (g + 1) * (2 * g + 1) - 10 + 10 * m;
    finish(
        &cat,
        Family::MainIi,
        m,
        1,
        MappingClassWord::positive(&["delta1", "delta2"]),
        twists,
        len,
    )
}

/// The twenty-twist word equal to `t_δ1 t_δ2` on genus two.
pub fn two_boundary_split_word() -> MappingClassWord {
    chain(1, 4)
        .concat(&MappingClassWord::positive(&["d", "e"]))
        .concat(&chain_fold(4).slice(0, 4))
        .concat(&chain_fold(5))
}

/// `D''`: the 28 twists left after moving the `φ`-block to the front of the
/// square of the twenty-twist word.
pub fn d_double_prime() -> MappingClassWord {
    let sq = two_boundary_split_word().pow(2).rotated(11);
    let (_, rest) = sq.pull_to_front(&[0, 1, 2, 3, 4, 5, 6, 7, 12, 13, 16, 20]);
    rest
}

/// `t_δ1^2 t_δ2^2` on genus two.
pub fn cor1_genus2_squared(m: usize) -> Result<Factorization, FamilyError> {
    check_m(m)?;
    let cat = build_catalog(SurfaceSpec { g: 2, n: 2 })?;
    let twists = prop_tm_twists("c4", m).concat(&d_double_prime());
    finish(
        &cat,
        Family::Cor1,
        m,
        2,
        MappingClassWord::positive(&["delta1", "delta1", "delta2", "delta2"]),
        twists,
        40 + 10 * m,
    )
}

/// `t_δ1^k t_δ2^k`: one long block followed by full chain blocks.
pub fn multitwist_power(g: usize, k: usize, m: usize) -> Result<Factorization, FamilyError> {
    check_m(m)?;
    let (head, blocks) = match g {
        2 if k >= 2 => (cor1_genus2_squared(m)?, k - 2),
        2 => {
            return Err(FamilyError::Parameter {
                name: "k",
                value: k,
                reason: "need k ≥ 2 on genus two",
            })
        }
        g if g >= 3 && k >= 1 => (main_ii(g, m)?, k - 1),
        g if g >= 3 => {
            return Err(FamilyError::Parameter {
                name: "k",
                value: k,
                reason: "need k ≥ 1",
            })
        }
        _ => {
            return Err(FamilyError::Parameter {
                name: "g",
                value: g,
                reason: "need g ≥ 2",
            })
        }
    };
    let cat = build_catalog(SurfaceSpec { g, n: 2 })?;
    let full = chain(1, 2 * g + 1).pow(2 * g + 2);
    let mut twists = head.twists.clone();
    for _ in 0..blocks {
        twists.extend(&full);
    }
    let len = head.claimed_length + blocks * full.len();
    let target = power("delta1", 1, k).concat(&power("delta2", 1, k));
    finish(&cat, Family::MultitwistPower, m, k, target, twists, len)
}

/// Pieces of the six-boundary construction on genus `g`.
#[derive(Debug, Clone)]
pub struct SixBoundaryParts {
    /// `B_{2g-2} B_{2g-1}` with `B_n = t_n ⋯ t_1 t_1 ⋯ t_n`.
    pub folds: MappingClassWord,
    /// `P = t_4 t_3 t_2 t_1 t_1 t_2 t_3 t_4 t_4`.
    pub p: MappingClassWord,
    /// Twists of `folds` left after extracting `P t_3 t_4`.
    pub rest: MappingClassWord,
    /// The ten twists `D` with `t_δ1 ⋯ t_δ8 = t_α5 t_α7 D`.
    pub d: MappingClassWord,
}

/// Eight-holed torus right-hand side rotated to start at `α5`, with `α7`
/// moved next to it.
pub fn eight_holed_d() -> MappingClassWord {
    let rhs = MappingClassWord::positive(&[
        "alpha4", "alpha5", "beta1", "sigma3", "sigma6", "alpha2", "beta6", "sigma4", "sigma7",
        "alpha7", "beta4", "sigma5",
    ]);
    let (_, d) = rhs.rotated(1).pull_to_front(&[0, 8]);
    d
}

pub fn six_boundary_parts(g: usize) -> SixBoundaryParts {
    let (a, b) = (2 * g - 2, 2 * g - 1);
    let folds = chain_fold(a).concat(&chain_fold(b));
    let desc = |n: usize, k: usize| n - k;
    let asc = |n: usize, k: usize| n + k - 1;
    let o = 2 * a;
    let positions = [
        desc(a, 4),
        desc(a, 3),
        desc(a, 2),
        desc(a, 1),
        asc(a, 1),
        asc(a, 2),
        asc(a, 3),
        asc(a, 4),
        o + desc(b, 4),
        o + desc(b, 3),
        o + asc(b, 4),
    ];
    let (front, rest) = folds.pull_to_front(&positions);
    debug_assert_eq!(
        front,
        phi_word("c4")
            .slice(0, 9)
            .concat(&MappingClassWord::parse("c3 c4"))
    );
    SixBoundaryParts {
        p: front.slice(0, 9),
        folds,
        rest,
        d: eight_holed_d(),
    }
}

/// `t_δ1 ⋯ t_δ6 t_d` on genus `g ≥ 3` with six boundary components.
pub fn six_boundary(g: usize, m: usize) -> Result<Factorization, FamilyError> {
    if g < 3 {
        return Err(FamilyError::Parameter {
            name: "g",
            value: g,
            reason: "need g ≥ 3",
        });
    }
    check_m(m)?;
    let cat = build_catalog(SurfaceSpec { g, n: 6 })?;
    let parts = six_boundary_parts(g);
    let d_prime = parts.rest.concat(&parts.d);
    let twists = prop_tm_twists("c4", m)
        .concat(&d_prime)
        .conjugate(&parts.p.invert());
    let target = MappingClassWord::positive(&[
        "delta1", "delta2", "delta3", "delta4", "delta5", "delta6", "d",
    ]);
    finish(
        &cat,
        Family::SixBoundary,
        m,
        1,
        target,
        twists,
        8 * g + 5 + 10 * m,
    )
}

/// Second line of the glued six-holed torus relation on genus two with four
/// boundary components.
pub fn glued_word() -> MappingClassWord {
    MappingClassWord::parse(
        "c2 c1 c4 c3 c2 c1 c2 c3 c1 c2 c3 c4 c3 sigma sigma' alpha5 beta36 d beta6 c3",
    )
}

/// The nine twists `D` with `t_δ1 t_δ4 t_δ5 t_δ6 t_β36 = φ D`.
pub fn four_boundary_d() -> MappingClassWord {
    let w = glued_word().concat(&MappingClassWord::positive(&["beta36"]));
    let (_, rest) = w.pull_to_front(&[2, 3, 4, 5, 8, 9, 10, 11, 16, 17, 19, 20]);
    rest
}

/// `t_δ1 t_δ4 t_δ5 t_δ6 t_β36` on genus two with four boundary components.
pub fn four_boundary(m: usize) -> Result<Factorization, FamilyError> {
    check_m(m)?;
    let cat = build_catalog(SurfaceSpec { g: 2, n: 4 })?;
    let twists = prop_tm_twists("beta36", m).concat(&four_boundary_d());
    let target = MappingClassWord::positive(&["delta1", "delta4", "delta5", "delta6", "beta36"]);
    finish(
        &cat,
        Family::FourBoundary,
        m,
        1,
        target,
        twists,
        21 + 10 * m,
    )
}

/// Builds a family member. `g` and `k` are ignored where fixed.
pub fn generate(
    family: Family,
    g: usize,
    k: usize,
    m: usize,
) -> Result<Factorization, FamilyError> {
    match family {
        Family::PropTm => {
            let cat = build_catalog(SurfaceSpec { g, n: 2 })?;
            let x = cat
                .phi_x()
                .ok_or(FamilyError::MissingCurve("c4".into()))?
                .to_string();
            prop_tm(&cat, &x, m)
        }
        Family::MainI => main_i(m),
        Family::MainIi => main_ii(g, m),
        Family::Cor1 => cor1_genus2_squared(m),
        Family::MultitwistPower => multitwist_power(g, k, m),
        Family::SixBoundary => six_boundary(g, m),
        Family::FourBoundary => four_boundary(m),
    }
}

/// Structural checks followed by `equal(product, target)`.
pub fn verify_factorization(
    f: &Factorization,
    backend: Backend,
    budget: Budget,
    cat: &CurveCatalog,
) -> Verdict {
    let mut problems = Vec::new();
    if let Some((i, _)) = f
        .twists
        .twists()
        .iter()
        .enumerate()
        .find(|(_, t)| !t.is_positive())
    {
        problems.push(format!("twist {i} is negative"));
    }
    if f.twists.len() != f.claimed_length {
        problems.push(format!(
            "length {} differs from claimed {}",
            f.twists.len(),
            f.claimed_length
        ));
    }
    match base_curves_nonseparating(&f.twists, cat) {
        Ok(all) if f.all_nonseparating && !all => {
            problems.push("a base curve is separating".into())
        }
        Ok(_) => {}
        Err(e) => problems.push(e.to_string()),
    }
    let mut v = equal(&f.twists, &f.target, backend, budget, cat);
    if !problems.is_empty() {
        let structural = problems.join("; ");
        if v.status == Status::Falsified {
            v.note = Some(format!("structural: {structural}"));
        } else {
            v.status = Status::Falsified;
            v.witness = Some(structural);
        }
    }
    v
}
