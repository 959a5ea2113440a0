//! First homology of `Σ_{g,n}` and the transvection action of twists.
//!
//! Coordinates are taken in the basis `a1, b1, …, ag, bg, e1, …, e{n-1}`
//! given by the loop generators `x1, x2, …, x{2g}, y1, …, y{n-1}`. The hole
//! classes `e_j` span the radical of the intersection form.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("integer overflow in homology matrix arithmetic")]
    Overflow,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<i64>,
}

impl HomologyClass {
    pub fn new(coords: Vec<i64>) -> HomologyClass {
        HomologyClass { coords }
    }

    pub fn zero(dim: usize) -> HomologyClass {
        HomologyClass {
            coords: vec![0; dim],
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Algebraic intersection number with `other`; `⟨a_i, b_i⟩ = 1`.
    pub fn intersection(&self, other: &HomologyClass, genus: usize) -> i64 {
        (0..genus)
            .map(|i| {
                let (a, b) = (2 * i, 2 * i + 1);
                self.coords[a] * other.coords[b] - self.coords[b] * other.coords[a]
            })
            .sum()
    }

    /// True when the class lies in the span of the hole classes.
    pub fn in_boundary_span(&self, genus: usize) -> bool {
        self.coords[..2 * genus].iter().all(|&c| c == 0)
    }

    pub fn negated(&self) -> HomologyClass {
        HomologyClass::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Square integer matrix acting on column vectors; column `j` is the image
/// of basis vector `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i128>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            writeln!(f, "{:?}", &self.data[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> IntMatrix {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    /// Builds a matrix from rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            assert_eq!(r.len(), n, "matrix must be square");
            data.extend(r.iter().map(|&x| x as i128));
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.data[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, HomologyError> {
        if self.n != other.n {
            return Err(HomologyError::Dimension(self.n, other.n));
        }
        let n = self.n;
        let mut data = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.data[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    let p = a.checked_mul(b).ok_or(HomologyError::Overflow)?;
                    let cell = &mut data[i * n + j];
                    *cell = cell.checked_add(p).ok_or(HomologyError::Overflow)?;
                }
            }
        }
        Ok(IntMatrix { n, data })
    }

    pub fn apply(&self, v: &HomologyClass) -> Result<HomologyClass, HomologyError> {
        if v.dim() != self.n {
            return Err(HomologyError::Dimension(self.n, v.dim()));
        }
        let mut out = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut acc: i128 = 0;
            for j in 0..self.n {
                let p = self.data[i * self.n + j]
                    .checked_mul(v.coords[j] as i128)
                    .ok_or(HomologyError::Overflow)?;
                acc = acc.checked_add(p).ok_or(HomologyError::Overflow)?;
            }
            out.push(i64::try_from(acc).map_err(|_| HomologyError::Overflow)?);
        }
        Ok(HomologyClass::new(out))
    }

    /// Determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<i128, HomologyError> {
        let n = self.n;
        let mut m = self.data.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                let Some(r) = (k + 1..n).find(|&r| m[r * n + k] != 0) else {
                    return Ok(0);
                };
                for j in 0..n {
                    m.swap(k * n + j, r * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[i * n + j]
                        .checked_mul(m[k * n + k])
                        .ok_or(HomologyError::Overflow)?;
                    let b = m[i * n + k]
                        .checked_mul(m[k * n + j])
                        .ok_or(HomologyError::Overflow)?;
                    m[i * n + j] = a.checked_sub(b).ok_or(HomologyError::Overflow)? / prev;
                }
            }
            prev = m[k * n + k];
        }
        Ok(sign * m[n * n - 1])
    }

    /// First entry where the two matrices differ, as `(row, col, self, other)`.
    pub fn first_difference(&self, other: &IntMatrix) -> Option<(usize, usize, i128, i128)> {
        (0..self.n * self.n)
            .find(|&k| self.data[k] != other.data[k])
            .map(|k| (k / self.n, k % self.n, self.data[k], other.data[k]))
    }
}

/// Matrix of `x ↦ x + sign·⟨x, c⟩ c`.
pub fn transvection(c: &HomologyClass, genus: usize, sign: i8) -> IntMatrix {
    let n = c.dim();
    let mut m = IntMatrix::identity(n);
    for j in 0..n {
        let mut e = HomologyClass::zero(n);
        e.coords[j] = 1;
        let k = e.intersection(c, genus) * sign as i64;
        if k != 0 {
            for i in 0..n {
                m.data[i * n + j] += (k * c.coords[i]) as i128;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transvection_about_a1() {
        let a = HomologyClass::new(vec![1, 0, 0]);
        let t = transvection(&a, 1, 1);
        let b = HomologyClass::new(vec![0, 1, 0]);
        assert_eq!(t.apply(&b).unwrap().coords(), &[-1, 1, 0]);
        assert_eq!(t.apply(&a).unwrap(), a);
        assert_eq!(t.determinant().unwrap(), 1);
    }

    #[test]
    fn boundary_class_gives_identity() {
        let e = HomologyClass::new(vec![0, 0, 0, 0, 1]);
        assert!(transvection(&e, 2, 1).is_identity());
    }

    #[test]
    fn inverse_transvection() {
        let c = HomologyClass::new(vec![1, -2, 3, 1, 4]);
        let p = transvection(&c, 2, 1)
            .mul(&transvection(&c, 2, -1))
            .unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn determinant_of_small_matrices() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.determinant().unwrap(), 1);
        let m = IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 3]]);
        assert_eq!(m.determinant().unwrap(), -3);
    }
}
