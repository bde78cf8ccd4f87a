//! Dense linear algebra over the prime field `F_p`.

use serde::{Deserialize, Serialize};

use crate::arith::inv_mod_prime;
use crate::error::{Error, Result};
use crate::gf::{FFElem, FieldCtx};

/// A row-major matrix with entries in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatFp {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MatFp {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        MatFp { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows, reducing entries modulo `p`.
    pub fn from_rows(p: u64, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
            }
            entries.extend(r.iter().map(|&c| c % p));
        }
        Ok(MatFp { p, rows: rows.len(), cols, entries })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &MatFp) -> Result<MatFp> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(MatFp { p: self.p, rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let p = self.p as u128;
        Ok((0..self.rows)
            .map(|r| {
                let s = self.row(r).iter().zip(v).fold(0u128, |acc, (&a, &b)| (acc + a as u128 * b as u128) % p);
                s as u64
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Reduced row echelon form and the ascending list of pivot columns.
pub fn rref(m: &MatFp) -> (MatFp, Vec<usize>) {
    let mut a = m.clone();
    let p = a.p;
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..a.cols {
        if lead == a.rows {
            break;
        }
        let Some(r) = (lead..a.rows).find(|&r| a.get(r, col) != 0) else {
            continue;
        };
        a.swap_rows(lead, r);
        let inv = inv_mod_prime(a.get(lead, col), p);
        for c in col..a.cols {
            let v = a.get(lead, c);
            a.set(lead, c, (v as u128 * inv as u128 % p as u128) as u64);
        }
        for r in 0..a.rows {
            let f = a.get(r, col);
            if r == lead || f == 0 {
                continue;
            }
            for c in col..a.cols {
                let t = (f as u128 * a.get(lead, c) as u128 % p as u128) as u64;
                let v = a.get(r, c);
                a.set(r, c, if v >= t { v - t } else { v + p - t });
            }
        }
        pivots.push(col);
        lead += 1;
    }
    (a, pivots)
}

pub fn rank(m: &MatFp) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{v : M v = 0}`, one vector per free column
/// with a 1 in that column.
pub fn nullspace(m: &MatFp) -> Vec<Vec<u64>> {
    let (r, pivots) = rref(m);
    let p = m.p;
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; m.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let e = r.get(i, f);
                v[pc] = (p - e) % p;
            }
            v
        })
        .collect()
}

/// An `F_p`-subspace held in reduced echelon form for repeated membership
/// tests.
#[derive(Clone, Debug)]
pub struct Subspace {
    p: u64,
    dim: usize,
    echelon: MatFp,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(p: u64, ambient: usize, basis: &[Vec<u64>]) -> Result<Self> {
        for v in basis {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
        }
        let m = if basis.is_empty() { MatFp::zeros(p, 0, ambient) } else { MatFp::from_rows(p, basis)? };
        let (echelon, pivots) = rref(&m);
        Ok(Subspace { p, dim: ambient, echelon, pivots })
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|&c| c % p).collect();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f == 0 {
                continue;
            }
            for (c, wc) in w.iter_mut().enumerate().skip(pc) {
                let t = (f as u128 * self.echelon.get(i, c) as u128 % p as u128) as u64;
                *wc = if *wc >= t { *wc - t } else { *wc + p - t };
            }
        }
        Ok(w.iter().all(|&c| c == 0))
    }
}

/// Whether `v` is an `F_p`-combination of `basis`.
pub fn in_span(p: u64, basis: &[Vec<u64>], v: &[u64]) -> Result<bool> {
    Subspace::new(p, v.len(), basis)?.contains(v)
}

/// Matrix of an `F_p`-linear map on the power basis `1, x, ..., x^(d-1)`:
/// column `j` holds the coefficients of `f(x^j)`. Linearity of `f` is the
/// caller's contract.
pub fn linear_map_matrix<F>(ctx: &FieldCtx, f: F) -> MatFp
where
    F: Fn(&FFElem) -> FFElem,
{
    let d = ctx.degree();
    let mut m = MatFp::zeros(ctx.characteristic(), d, d);
    let mut basis = vec![0u64; d];
    for j in 0..d {
        basis.iter_mut().for_each(|c| *c = 0);
        basis[j] = 1;
        let e = ctx.from_coeffs(&basis).expect("unit vector is a valid element");
        let image = f(&e);
        for (i, &c) in image.coeffs().iter().enumerate() {
            m.set(i, j, c);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_small_cases() {
        let id = MatFp::identity(5, 3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));
        let z = MatFp::zeros(5, 2, 3);
        assert_eq!(rref(&z), (z.clone(), vec![]));
        let m = MatFp::from_rows(3, &[vec![1, 2], vec![2, 1]]).unwrap();
        let (r, piv) = rref(&m);
        assert_eq!(r, MatFp::from_rows(3, &[vec![1, 2], vec![0, 0]]).unwrap());
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn nullspace_small_cases() {
        assert!(nullspace(&MatFp::identity(7, 4)).is_empty());
        let ns = nullspace(&MatFp::zeros(7, 3, 3));
        assert_eq!(ns, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let m = MatFp::from_rows(3, &[vec![1, 2]]).unwrap();
        assert_eq!(nullspace(&m), vec![vec![1, 1]]);
    }

    #[test]
    fn span_membership() {
        let b = vec![vec![1, 1]];
        assert!(in_span(3, &b, &[0, 0]).unwrap());
        assert!(in_span(3, &b, &[1, 1]).unwrap());
        assert!(in_span(3, &b, &[2, 2]).unwrap());
        assert!(!in_span(3, &b, &[1, 2]).unwrap());
        assert!(in_span(3, &[], &[0, 0]).unwrap());
        assert!(matches!(in_span(3, &b, &[1, 2, 0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn frobenius_matrix_on_f9() {
        let f = FieldCtx::new(3, 2, Some(&[1, 0, 1]), None).unwrap();
        let m = linear_map_matrix(&f, |a| f.frobenius(a));
        assert_eq!(m, MatFp::from_rows(3, &[vec![1, 0], vec![0, 2]]).unwrap());
        assert_eq!(linear_map_matrix(&f, |a| a.clone()), MatFp::identity(3, 2));
        assert_eq!(linear_map_matrix(&f, |_| f.zero()), MatFp::zeros(3, 2, 2));
    }
}
