//! Lefschetz fibration data read off a positive factorization of a boundary
//! multitwist.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{CatalogError, CurveCatalog};
use crate::families::{generate, Factorization, Family, FamilyError};
use crate::homology::HomologyClass;
use crate::mcg::{evaluate_homology, EvalError, MappingClassWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LefschetzError {
    #[error("target is not a boundary multitwist: {0}")]
    TargetShape(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionData {
    pub n_sections: usize,
    pub k: usize,
    /// Non-boundary factors of the target, such as `t_a` in `t_δ1 t_δ2 t_a`.
    pub extra: Vec<String>,
}

/// Reads `(n, k)` off a target `t_δ1^k ⋯ t_δn^k`, allowing one extra
/// positive twist.
pub fn section_data(
    target: &MappingClassWord,
    cat: &CurveCatalog,
) -> Result<SectionData, LefschetzError> {
    let boundary = cat.boundary_curves();
    let mut counts: BTreeMap<&str, usize> = boundary.iter().map(|b| (*b, 0)).collect();
    let mut extra = Vec::new();
    for t in target.twists() {
        if t.sign != 1 {
            return Err(LefschetzError::TargetShape(format!("negative factor {t}")));
        }
        match counts.get_mut(t.curve.as_str()) {
            Some(c) if t.conjugator.is_empty() => *c += 1,
            _ => extra.push(t.to_string()),
        }
    }
    if extra.len() > 1 {
        return Err(LefschetzError::TargetShape(format!(
            "{} non-boundary factors",
            extra.len()
        )));
    }
    let k = counts.values().copied().max().unwrap_or(0);
    if let Some((name, c)) = counts.iter().find(|(_, &c)| c != k) {
        return Err(LefschetzError::TargetShape(format!(
            "{name} has power {c}, expected {k}"
        )));
    }
    if k == 0 && !boundary.is_empty() {
        return Err(LefschetzError::TargetShape("no boundary factors".into()));
    }
    Ok(SectionData {
        n_sections: boundary.len(),
        k,
        extra,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LefschetzData {
    /// Genus of the closed fiber.
    pub g: usize,
    pub n_sections: Option<usize>,
    /// `-k` for each section.
    pub section_self_intersection: Option<i64>,
    pub extra_twists: Vec<String>,
    /// Number of singular fibers.
    pub r: usize,
    pub chi: i64,
    /// Classes of the vanishing cycles in the closed fiber, `None` where a
    /// curve has no known class.
    pub vanishing_classes: Vec<Option<Vec<i64>>>,
    /// Rank of `Z^{2g}` modulo the vanishing classes.
    pub h1_total_rank: Option<usize>,
    pub shape_note: Option<String>,
}

/// `χ = 2(2 - 2g) + r`.
pub fn euler_characteristic(g: usize, r: usize) -> i64 {
    2 * (2 - 2 * g as i64) + r as i64
}

fn vanishing_class(
    f: &Factorization,
    i: usize,
    cat: &CurveCatalog,
) -> Result<Option<HomologyClass>, EvalError> {
    let t = &f.twists.twists()[i];
    let Some(class) = cat.curve(&t.curve)?.class.clone() else {
        return Ok(None);
    };
    if t.conjugator.is_empty() {
        return Ok(Some(class));
    }
    match evaluate_homology(&t.conjugator, cat) {
        Ok(m) => Ok(Some(m.apply(&class)?)),
        Err(EvalError::Abstract(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Rank over the rationals, by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let pivot = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot).skip(c) {
                *x = *x * a - p * b;
            }
            let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lefschetz_data(
    f: &Factorization,
    cat: &CurveCatalog,
) -> Result<LefschetzData, LefschetzError> {
    let g = f.spec.g;
    let (sections, shape_note) = match section_data(&f.target, cat) {
        Ok(s) => (Some(s), None),
        Err(LefschetzError::TargetShape(note)) => (None, Some(note)),
        Err(e) => return Err(e),
    };
    let mut classes = Vec::with_capacity(f.twists.len());
    for i in 0..f.twists.len() {
        let c =
            vanishing_class(f, i, cat).map_err(|e| LefschetzError::TargetShape(e.to_string()))?;
        classes.push(c.map(|c| c.coords()[..2 * g].to_vec()));
    }
    let h1_total_rank = classes
        .iter()
        .cloned()
        .collect::<Option<Vec<_>>>()
        .map(|rows| 2 * g - rank(&rows));
    Ok(LefschetzData {
        g,
        n_sections: sections.as_ref().map(|s| s.n_sections),
        section_self_intersection: sections.as_ref().map(|s| -(s.k as i64)),
        extra_twists: sections.map(|s| s.extra).unwrap_or_default(),
        r: f.twists.len(),
        chi: euler_characteristic(g, f.twists.len()),
        vanishing_classes: classes,
        h1_total_rank,
        shape_note,
    })
}

/// `(m, χ)` for each `m`, from the constructed factorizations.
pub fn chi_series(
    family: Family,
    g: usize,
    k: usize,
    ms: impl IntoIterator<Item = usize>,
) -> Result<Vec<(usize, i64)>, LefschetzError> {
    ms.into_iter()
        .map(|m| {
            let f = generate(family, g, k, m)?;
            Ok((m, euler_characteristic(f.spec.g, f.twists.len())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_lattices() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![1, 0], vec![2, 0]]), 1);
        assert_eq!(rank(&[vec![1, 2, 0], vec![0, 1, 1], vec![1, 3, 1]]), 2);
        assert_eq!(rank(&[vec![0, 0, 3], vec![2, 0, 0], vec![0, 5, 0]]), 3);
    }

    #[test]
    fn chi_at_zero_twists() {
        assert_eq!(euler_characteristic(2, 0), -4);
        assert_eq!(euler_characteristic(3, 56), 48);
    }
}
