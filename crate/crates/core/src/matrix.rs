//! Dense matrices over Z[i] with exact determinants.
//!
//! The production determinant is fraction-free Bareiss elimination; a
//! naive permutation expansion is kept alongside as the independent
//! oracle for property tests.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::gaussian::GaussianInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("duplicated index {0} in selection")]
    DuplicateIndex(usize),
}

/// Dense row-major matrix over Z[i].
#[derive(Clone, PartialEq, Eq)]
pub struct GMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianInt>,
}

impl GMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GMatrix {
            rows,
            cols,
            entries: vec![GaussianInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, GaussianInt::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianInt) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        GMatrix { rows, cols, entries }
    }

    /// Builds a matrix from rows of `(re, im)` pairs. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<(i64, i64)>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        GMatrix::from_fn(rows.len(), ncols, |r, c| GaussianInt::from(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GaussianInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: GaussianInt) {
        self.entries[r * self.cols + c] = v;
    }

    /// Submatrix with rows and columns taken in the given index order.
    /// The order matters for determinant signs.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Result<GMatrix, LinAlgError> {
        check_selection(row_idx, self.rows)?;
        check_selection(col_idx, self.cols)?;
        Ok(GMatrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c]).clone()
        }))
    }

    pub fn conj_transpose(&self) -> GMatrix {
        GMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conjugate())
    }

    pub fn mul(&self, rhs: &GMatrix) -> GMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        GMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = GaussianInt::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * rhs.get(k, c));
            }
            acc
        })
    }

    /// M * M^* where * is the conjugate transpose.
    pub fn mul_conj_transpose(&self) -> GMatrix {
        GMatrix::from_fn(self.rows, self.rows, |r, c| {
            let mut acc = GaussianInt::zero();
            for k in 0..self.cols {
                acc = &acc + &(self.get(r, k) * &self.get(c, k).conjugate());
            }
            acc
        })
    }

    pub fn is_hermitian(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..=r).all(|c| *self.get(r, c) == self.get(c, r).conjugate()))
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    ///
    /// Small matrices whose entries fit machine words take an i128 fast
    /// path; the result is identical.
    pub fn determinant(&self) -> Result<GaussianInt, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if let Some(d) = self.det_bareiss_i128() {
            return Ok(d);
        }
        Ok(self.det_bareiss_big())
    }

    fn det_bareiss_big(&self) -> GaussianInt {
        let n = self.rows;
        if n == 0 {
            return GaussianInt::one();
        }
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut prev = GaussianInt::one();
        for k in 0..n - 1 {
            let pivot = match (k..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(p) => p,
                None => return GaussianInt::zero(),
            };
            if pivot != k {
                for j in 0..n {
                    m.swap(pivot * n + j, k * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[k * n + k] * &m[i * n + j]) - &(&m[i * n + k] * &m[k * n + j]);
                    m[i * n + j] = t.exact_div(&prev);
                }
                m[i * n + k] = GaussianInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let d = m[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// i128 Bareiss; `None` when entries do not fit or intermediates overflow.
    fn det_bareiss_i128(&self) -> Option<GaussianInt> {
        let n = self.rows;
        if n == 0 {
            return Some(GaussianInt::one());
        }
        let mut m: Vec<(i128, i128)> = Vec::with_capacity(n * n);
        for e in &self.entries {
            let (re, im) = e.to_i64_pair()?;
            m.push((re as i128, im as i128));
        }
        let mul = |a: (i128, i128), b: (i128, i128)| -> Option<(i128, i128)> {
            Some((
                a.0.checked_mul(b.0)?.checked_sub(a.1.checked_mul(b.1)?)?,
                a.0.checked_mul(b.1)?.checked_add(a.1.checked_mul(b.0)?)?,
            ))
        };
        let mut negate = false;
        let mut prev: (i128, i128) = (1, 0);
        for k in 0..n - 1 {
            let pivot = match (k..n).find(|&r| m[r * n + k] != (0, 0)) {
                Some(p) => p,
                None => return Some(GaussianInt::zero()),
            };
            if pivot != k {
                for j in 0..n {
                    m.swap(pivot * n + j, k * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = mul(m[k * n + k], m[i * n + j])?;
                    let b = mul(m[i * n + k], m[k * n + j])?;
                    let t = (a.0.checked_sub(b.0)?, a.1.checked_sub(b.1)?);
                    // exact division t / prev
                    let num = mul(t, (prev.0, -prev.1))?;
                    let den = prev.0.checked_mul(prev.0)?.checked_add(prev.1.checked_mul(prev.1)?)?;
                    debug_assert!(num.0 % den == 0 && num.1 % den == 0);
                    m[i * n + j] = (num.0 / den, num.1 / den);
                }
                m[i * n + k] = (0, 0);
            }
            prev = m[k * n + k];
        }
        let (re, im) = m[n * n - 1];
        let d = GaussianInt::new(re, im);
        Some(if negate { -d } else { d })
    }

    /// Naive determinant by summing over all permutations (Heap's
    /// algorithm). O(n!) — the independent verification oracle.
    pub fn determinant_permutation(&self) -> Result<GaussianInt, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(GaussianInt::one());
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut counters = vec![0usize; n];
        let mut positive = true;
        let term = |perm: &[usize], positive: bool| -> GaussianInt {
            let mut prod = GaussianInt::one();
            for (r, &c) in perm.iter().enumerate() {
                prod = &prod * self.get(r, c);
            }
            if positive {
                prod
            } else {
                -prod
            }
        };
        let mut acc = term(&perm, positive);
        let mut i = 1;
        while i < n {
            if counters[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(counters[i], i);
                }
                positive = !positive;
                acc = &acc + &term(&perm, positive);
                counters[i] += 1;
                i = 1;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
        Ok(acc)
    }

    /// Real part of the determinant when the determinant is a rational
    /// integer; panics otherwise.
    pub fn determinant_integer(&self) -> Result<BigInt, LinAlgError> {
        let d = self.determinant()?;
        assert!(d.im.is_zero(), "determinant {} is not a rational integer", d);
        Ok(d.re)
    }
}

impl std::fmt::Debug for GMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "GMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn check_selection(idx: &[usize], limit: usize) -> Result<(), LinAlgError> {
    let mut seen = vec![false; limit];
    for &k in idx {
        if k >= limit {
            return Err(LinAlgError::IndexOutOfRange { index: k, limit });
        }
        if seen[k] {
            return Err(LinAlgError::DuplicateIndex(k));
        }
        seen[k] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn det_2x2_integer() {
        let m = GMatrix::from_rows(&[vec![(2, 0), (-1, 0)], vec![(-1, 0), (2, 0)]]);
        assert_eq!(m.determinant().unwrap(), g(3, 0));
    }

    #[test]
    fn det_empty_is_one() {
        assert_eq!(GMatrix::zeros(0, 0).determinant().unwrap(), g(1, 0));
    }

    #[test]
    fn det_zero_column_short_circuits() {
        let m = GMatrix::from_rows(&[vec![(0, 0), (1, 0)], vec![(0, 0), (2, 0)]]);
        assert_eq!(m.determinant().unwrap(), g(0, 0));
    }

    #[test]
    fn submatrix_order_matters() {
        let id = GMatrix::identity(2);
        let swapped = id.submatrix(&[1, 0], &[0, 1]).unwrap();
        assert_eq!(swapped.determinant().unwrap(), g(-1, 0));
    }

    #[test]
    fn submatrix_of_identity() {
        let id = GMatrix::identity(3);
        let sub = id.submatrix(&[0, 1], &[0, 1]).unwrap();
        assert_eq!(sub, GMatrix::identity(2));
    }

    #[test]
    fn submatrix_single_entry() {
        let m = GMatrix::from_rows(&[vec![(1, 0), (2, 0), (3, 4)]]);
        let sub = m.submatrix(&[0], &[2]).unwrap();
        assert_eq!(*sub.get(0, 0), g(3, 4));
    }

    #[test]
    fn submatrix_rejects_bad_selection() {
        let id = GMatrix::identity(2);
        assert_eq!(
            id.submatrix(&[0, 2], &[0]).unwrap_err(),
            LinAlgError::IndexOutOfRange { index: 2, limit: 2 }
        );
        assert_eq!(
            id.submatrix(&[0, 0], &[0, 1]).unwrap_err(),
            LinAlgError::DuplicateIndex(0)
        );
    }

    #[test]
    fn mul_conj_transpose_1x2() {
        let m = GMatrix::from_rows(&[vec![(1, 0), (0, -1)]]);
        let p = m.mul_conj_transpose();
        assert_eq!(*p.get(0, 0), g(2, 0));
    }

    #[test]
    fn mul_conj_transpose_single_oriented_edge() {
        // S of a single oriented edge 0 -> 1
        let m = GMatrix::from_rows(&[vec![(1, 0)], vec![(0, -1)]]);
        let p = m.mul_conj_transpose();
        let expected =
            GMatrix::from_rows(&[vec![(1, 0), (0, 1)], vec![(0, -1), (1, 0)]]);
        assert_eq!(p, expected);
    }

    #[test]
    fn determinant_non_square_errors() {
        let m = GMatrix::zeros(2, 3);
        assert!(matches!(
            m.determinant(),
            Err(LinAlgError::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn bareiss_matches_permutation_oracle_randomized() {
        // entries drawn from {0, ±1, ±i, 2, 3}, sizes 1..=5
        let pool = [
            (0i64, 0i64),
            (1, 0),
            (-1, 0),
            (0, 1),
            (0, -1),
            (2, 0),
            (3, 0),
        ];
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..10_000 {
            let n = (next() % 5 + 1) as usize;
            let m = GMatrix::from_fn(n, n, |_, _| {
                GaussianInt::from(pool[(next() % pool.len() as u64) as usize])
            });
            assert_eq!(
                m.determinant().unwrap(),
                m.determinant_permutation().unwrap()
            );
        }
    }

    #[test]
    fn big_path_matches_small_path() {
        // scale entries so the i128 fast path bails out on larger sizes
        let base = GMatrix::from_fn(6, 6, |r, c| {
            GaussianInt::new(
                BigInt::from((r * 7 + c) as i64 - 17) * BigInt::from(10).pow(25),
                BigInt::from((r + 3 * c) as i64 - 5) * BigInt::from(10).pow(25),
            )
        });
        let big = base.det_bareiss_big();
        assert!(base.det_bareiss_i128().is_none());
        // the same matrix scaled down fits i128 and must agree up to the scale factor
        let small = GMatrix::from_fn(6, 6, |r, c| {
            GaussianInt::new((r * 7 + c) as i64 - 17, (r + 3 * c) as i64 - 5)
        });
        let scale = GaussianInt::new(BigInt::from(10).pow(25), BigInt::from(0));
        let mut scaled = small.det_bareiss_i128().unwrap();
        for _ in 0..6 {
            scaled = &scaled * &scale;
        }
        assert_eq!(big, scaled);
    }
}
