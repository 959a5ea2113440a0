//! Mapping-class words over catalog twists and their evaluation.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{CatalogError, CurveCatalog};
use crate::homology::{transvection, HomologyError, IntMatrix};
use crate::word::{Budget, CyclicWord, FreeAutomorphism, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("curve `{0}` is abstract and has no known action")]
    Abstract(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// `conjugator ∘ t_curve^sign ∘ conjugator⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Twist {
    pub curve: String,
    pub sign: i8,
    #[serde(default)]
    pub conjugator: MappingClassWord,
}

impl Twist {
    pub fn new(curve: impl Into<String>, sign: i8) -> Twist {
        assert!(sign == 1 || sign == -1, "twist sign must be ±1");
        Twist {
            curve: curve.into(),
            sign,
            conjugator: MappingClassWord::identity(),
        }
    }

    pub fn positive(curve: impl Into<String>) -> Twist {
        Twist::new(curve, 1)
    }

    pub fn negative(curve: impl Into<String>) -> Twist {
        Twist::new(curve, -1)
    }

    pub fn is_positive(&self) -> bool {
        self.sign == 1
    }

    pub fn inverse(&self) -> Twist {
        Twist {
            curve: self.curve.clone(),
            sign: -self.sign,
            conjugator: self.conjugator.clone(),
        }
    }

    pub fn conjugated(&self, by: &MappingClassWord) -> Twist {
        Twist {
            curve: self.curve.clone(),
            sign: self.sign,
            conjugator: by.concat(&self.conjugator),
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conjugator.is_empty() {
            write!(f, "t_{}", self.curve)?;
        } else {
            write!(f, "t_[{}]({})", self.conjugator, self.curve)?;
        }
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Product of twists in functional order: the rightmost twist acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MappingClassWord {
    twists: Vec<Twist>,
}

impl MappingClassWord {
    pub fn identity() -> MappingClassWord {
        MappingClassWord { twists: Vec::new() }
    }

    pub fn new(twists: Vec<Twist>) -> MappingClassWord {
        MappingClassWord { twists }
    }

    /// Positive twists about the named curves, in the given order.
    pub fn positive(names: &[&str]) -> MappingClassWord {
        MappingClassWord {
            twists: names.iter().map(|n| Twist::positive(*n)).collect(),
        }
    }

    /// Parses `"c1 c2^-1 d"`.
    pub fn parse(text: &str) -> MappingClassWord {
        let twists = text
            .split_whitespace()
            .map(|tok| match tok.strip_suffix("^-1") {
                Some(n) => Twist::negative(n),
                None => Twist::positive(tok),
            })
            .collect();
        MappingClassWord { twists }
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    pub fn len(&self) -> usize {
        self.twists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn push(&mut self, t: Twist) {
        self.twists.push(t);
    }

    pub fn extend(&mut self, other: &MappingClassWord) {
        self.twists.extend(other.twists.iter().cloned());
    }

    pub fn concat(&self, other: &MappingClassWord) -> MappingClassWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn pow(&self, k: usize) -> MappingClassWord {
        let mut out = MappingClassWord::identity();
        for _ in 0..k {
            out.extend(self);
        }
        out
    }

    /// Reversed order with every sign flipped.
    pub fn invert(&self) -> MappingClassWord {
        MappingClassWord {
            twists: self.twists.iter().rev().map(Twist::inverse).collect(),
        }
    }

    /// Left-extends every conjugator by `by`.
    pub fn conjugate(&self, by: &MappingClassWord) -> MappingClassWord {
        MappingClassWord {
            twists: self.twists.iter().map(|t| t.conjugated(by)).collect(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.twists.iter().all(Twist::is_positive)
    }

    /// Sub-word `[from, to)`.
    pub fn slice(&self, from: usize, to: usize) -> MappingClassWord {
        MappingClassWord {
            twists: self.twists[from..to].to_vec(),
        }
    }

    /// Cyclic rotation starting at index `k`. The result is conjugate to the
    /// original, hence equal to it when the original is central.
    pub fn rotated(&self, k: usize) -> MappingClassWord {
        let n = self.twists.len();
        MappingClassWord {
            twists: (0..n).map(|i| self.twists[(k + i) % n].clone()).collect(),
        }
    }

    /// Moves the twists at `positions` (strictly increasing) to the front,
    /// keeping them unchanged; each twist jumped over is conjugated by the
    /// inverse of the jumping twist (`A t = t · t⁻¹At`). The product is
    /// preserved.
    pub fn pull_to_front(&self, positions: &[usize]) -> (MappingClassWord, MappingClassWord) {
        assert!(
            positions.windows(2).all(|w| w[0] < w[1]),
            "positions must increase"
        );
        let mut rest: Vec<(usize, Twist)> = Vec::new();
        let mut front = Vec::new();
        let mut next = 0;
        for (i, t) in self.twists.iter().enumerate() {
            if next < positions.len() && positions[next] == i {
                let by = MappingClassWord::new(vec![t.inverse()]);
                for (_, r) in rest.iter_mut() {
                    *r = r.conjugated(&by);
                }
                front.push(t.clone());
                next += 1;
            } else {
                rest.push((i, t.clone()));
            }
        }
        assert_eq!(next, positions.len(), "position out of range");
        (
            MappingClassWord::new(front),
            MappingClassWord::new(rest.into_iter().map(|(_, t)| t).collect()),
        )
    }

    /// Expands conjugators into a flat sequence of unconjugated twists,
    /// cancelling adjacent inverse pairs.
    pub fn flatten(&self) -> Vec<(String, i8)> {
        let mut out: Vec<(String, i8)> = Vec::new();
        fn push(out: &mut Vec<(String, i8)>, name: &str, sign: i8) {
            if let Some((n, s)) = out.last() {
                if n == name && *s == -sign {
                    out.pop();
                    return;
                }
            }
            out.push((name.to_string(), sign));
        }
        fn walk(w: &MappingClassWord, out: &mut Vec<(String, i8)>) {
            for t in &w.twists {
                if t.conjugator.is_empty() {
                    push(out, &t.curve, t.sign);
                } else {
                    walk(&t.conjugator, out);
                    push(out, &t.curve, t.sign);
                    walk(&t.conjugator.invert(), out);
                }
            }
        }
        walk(self, &mut out);
        out
    }

    /// Names of all curves mentioned, conjugators included.
    pub fn curves(&self) -> Vec<String> {
        let mut out = Vec::new();
        fn walk(w: &MappingClassWord, out: &mut Vec<String>) {
            for t in &w.twists {
                if !out.contains(&t.curve) {
                    out.push(t.curve.clone());
                }
                walk(&t.conjugator, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for MappingClassWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twists.is_empty() {
            return write!(f, "1");
        }
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromIterator<Twist> for MappingClassWord {
    fn from_iter<I: IntoIterator<Item = Twist>>(iter: I) -> Self {
        MappingClassWord {
            twists: iter.into_iter().collect(),
        }
    }
}

/// Homology action, as a product of transvections in functional order.
pub fn evaluate_homology(w: &MappingClassWord, cat: &CurveCatalog) -> Result<IntMatrix, EvalError> {
    let dim = cat.homology_dim();
    let genus = cat.spec().g;
    let mut acc = IntMatrix::identity(dim);
    for t in w.twists() {
        let curve = cat.curve(&t.curve)?;
        let class = curve
            .class
            .as_ref()
            .ok_or_else(|| EvalError::Abstract(t.curve.clone()))?;
        let class = if t.conjugator.is_empty() {
            class.clone()
        } else {
            evaluate_homology(&t.conjugator, cat)?.apply(class)?
        };
        acc = acc.mul(&transvection(&class, genus, t.sign))?;
    }
    Ok(acc)
}

/// Faithful action on the free group of the model, folded right to left.
pub fn evaluate_pi1(
    w: &MappingClassWord,
    cat: &CurveCatalog,
    budget: Budget,
) -> Result<FreeAutomorphism, EvalError> {
    let flat = w.flatten();
    let mut autos = Vec::with_capacity(flat.len());
    for (name, sign) in &flat {
        let c = cat.curve(name)?;
        let a = if *sign > 0 {
            c.twist.as_ref()
        } else {
            c.twist_inv.as_ref()
        };
        autos.push(a.ok_or_else(|| EvalError::Abstract(name.clone()))?);
    }
    let mut acc = FreeAutomorphism::identity(cat.model().rank());
    for a in autos.into_iter().rev() {
        acc = FreeAutomorphism::compose(a, &acc, budget)?;
    }
    Ok(acc)
}

/// Free homotopy class of the image of a catalog curve.
pub fn act_on_curve(
    w: &MappingClassWord,
    name: &str,
    cat: &CurveCatalog,
    budget: Budget,
) -> Result<CyclicWord, EvalError> {
    let c = cat.curve(name)?;
    let word = c
        .word
        .as_ref()
        .ok_or_else(|| EvalError::Abstract(name.to_string()))?;
    let f = evaluate_pi1(w, cat, budget)?;
    Ok(CyclicWord::canonical(&f.apply(word, budget)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Falsified,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Homology,
    Pi1,
    Both,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Homology => "homology",
            Backend::Pi1 => "pi1",
            Backend::Both => "both",
        })
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "Verified",
            Status::Falsified => "Falsified",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    /// Backend that produced the status.
    pub backend: Backend,
    /// Whether the homology backend ran and agreed, when it ran.
    pub homology_pass: Option<bool>,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn verified(backend: Backend, homology_pass: Option<bool>) -> Verdict {
        Verdict {
            status: Status::Verified,
            backend,
            homology_pass,
            witness: None,
            note: None,
        }
    }

    pub fn falsified(backend: Backend, homology_pass: Option<bool>, witness: String) -> Verdict {
        Verdict {
            status: Status::Falsified,
            backend,
            homology_pass,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn inconclusive(backend: Backend, homology_pass: Option<bool>, note: String) -> Verdict {
        Verdict {
            status: Status::Inconclusive,
            backend,
            homology_pass,
            witness: None,
            note: Some(note),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.backend)?;
        if let Some(h) = self.homology_pass {
            write!(f, ", homology {}", if h { "agrees" } else { "differs" })?;
        }
        if let Some(w) = &self.witness {
            write!(f, ", witness: {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, ", {n}")?;
        }
        Ok(())
    }
}

fn truncate(s: String, max: usize) -> String {
    if s.chars().count() <= max {
        s
    } else {
        let head: String = s.chars().take(max).collect();
        format!("{head} …")
    }
}

fn homology_check(
    u: &MappingClassWord,
    v: &MappingClassWord,
    cat: &CurveCatalog,
) -> Result<Option<String>, EvalError> {
    let a = evaluate_homology(u, cat)?;
    let b = evaluate_homology(v, cat)?;
    Ok(a.first_difference(&b)
        .map(|(i, j, x, y)| format!("homology matrix entry ({i}, {j}): {x} vs {y}")))
}

fn pi1_check(
    u: &MappingClassWord,
    v: &MappingClassWord,
    cat: &CurveCatalog,
    budget: Budget,
) -> Result<Option<String>, EvalError> {
    let a = evaluate_pi1(u, cat, budget)?;
    let b = evaluate_pi1(v, cat, budget)?;
    let names = cat.model().alphabet();
    Ok((0..a.rank()).find(|&i| a.image(i) != b.image(i)).map(|i| {
        format!(
            "image of {}: {} vs {}",
            names.names()[i],
            truncate(names.render(a.image(i)), 60),
            truncate(names.render(b.image(i)), 60)
        )
    }))
}

fn inconclusive_note(e: &EvalError) -> String {
    match e {
        EvalError::Word(WordError::Budget { length, limit }) => {
            format!("budget exhausted: intermediate length {length} exceeds {limit}")
        }
        EvalError::Abstract(name) => format!("abstract curve `{name}` has no known action"),
        other => other.to_string(),
    }
}

/// Decides `u = v`. Homology runs first under `Both`; a homology match alone
/// is reported as Inconclusive.
pub fn equal(
    u: &MappingClassWord,
    v: &MappingClassWord,
    backend: Backend,
    budget: Budget,
    cat: &CurveCatalog,
) -> Verdict {
    if u == v {
        let mut v = Verdict::verified(backend, None);
        v.note = Some("syntactically identical".into());
        return v;
    }
    let mut homology_pass = None;
    if matches!(backend, Backend::Homology | Backend::Both) {
        match homology_check(u, v, cat) {
            Ok(Some(w)) => return Verdict::falsified(Backend::Homology, Some(false), w),
            Ok(None) => homology_pass = Some(true),
            Err(e) => {
                if backend == Backend::Homology {
                    return Verdict::inconclusive(Backend::Homology, None, inconclusive_note(&e));
                }
            }
        }
        if backend == Backend::Homology {
            return Verdict::inconclusive(
                Backend::Homology,
                homology_pass,
                "necessary condition only".into(),
            );
        }
    }
    match pi1_check(u, v, cat, budget) {
        Ok(None) => Verdict::verified(Backend::Pi1, homology_pass),
        Ok(Some(w)) => Verdict::falsified(Backend::Pi1, homology_pass, w),
        Err(e) => Verdict::inconclusive(Backend::Pi1, homology_pass, inconclusive_note(&e)),
    }
}
