//! The Beidleman near-vector space `R^m` over a Dickson nearfield.
//!
//! Scalars act on the right, entrywise: `(vλ)^j = v^j ∘ λ`. An R-subgroup
//! `gen(v_1, ..., v_k)` is computed by expanded Gaussian elimination (eGe):
//! nearfield row reduction interleaved with the distributivity trick until
//! every column has at most one non-zero entry. The rows then give
//! `gen = u_1 R ⊕ ... ⊕ u_k' R` and `k'` is the R-dimension.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dickson::NearfieldCtx;
use crate::error::{Error, Result};
use crate::gf::FFElem;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NFVector {
    pub entries: Vec<FFElem>,
}

impl NFVector {
    pub fn new(entries: Vec<FFElem>) -> Self {
        NFVector { entries }
    }

    pub fn zero(ctx: &NearfieldCtx, m: usize) -> Self {
        NFVector { entries: vec![ctx.field().zero(); m] }
    }

    /// The `i`-th standard unit vector (0-based).
    pub fn unit(ctx: &NearfieldCtx, m: usize, i: usize) -> Self {
        let mut v = Self::zero(ctx, m);
        v.entries[i] = ctx.field().one();
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FFElem::is_zero)
    }

    /// Index of the first non-zero entry.
    pub fn leading(&self) -> Option<usize> {
        self.entries.iter().position(|e| !e.is_zero())
    }

    /// Parses `;`-separated entries, e.g. `1;2*x+2;x;0;x`.
    pub fn parse(ctx: &NearfieldCtx, text: &str) -> Result<Self> {
        let f = ctx.field();
        let mut entries = Vec::new();
        let mut offset = 0;
        for part in text.split(';') {
            let e = f.parse(part).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
                other => other,
            })?;
            entries.push(e);
            offset += part.len() + 1;
        }
        Ok(NFVector { entries })
    }

    pub fn format(&self, ctx: &NearfieldCtx) -> String {
        let f = ctx.field();
        self.entries.iter().map(|e| f.format(e)).collect::<Vec<_>>().join(";")
    }
}

/// Parses `|`-separated vectors.
pub fn parse_vectors(ctx: &NearfieldCtx, text: &str) -> Result<Vec<NFVector>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split('|') {
        let v = NFVector::parse(ctx, part).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
            other => other,
        })?;
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(out)
}

pub fn vscale(ctx: &NearfieldCtx, v: &NFVector, lam: &FFElem) -> NFVector {
    NFVector { entries: v.entries.iter().map(|e| ctx.nf_mul(e, lam)).collect() }
}

pub fn vadd(ctx: &NearfieldCtx, v: &NFVector, w: &NFVector) -> NFVector {
    let f = ctx.field();
    NFVector { entries: v.entries.iter().zip(&w.entries).map(|(a, b)| f.add(a, b)).collect() }
}

pub fn vsub(ctx: &NearfieldCtx, v: &NFVector, w: &NFVector) -> NFVector {
    let f = ctx.field();
    NFVector { entries: v.entries.iter().zip(&w.entries).map(|(a, b)| f.sub(a, b)).collect() }
}

/// Checks that all vectors have one common length `m >= 1` and entries from
/// this context; returns `m`.
fn check_shapes(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Err(Error::PreconditionViolated("no vectors given".into()));
    };
    let m = first.len();
    if m == 0 {
        return Err(Error::PreconditionViolated("vectors must have length at least 1".into()));
    }
    for v in vectors {
        if v.len() != m {
            return Err(Error::DimensionMismatch { expected: m, got: v.len() });
        }
        if !v.entries.iter().all(|e| ctx.field().contains(e)) {
            return Err(Error::MixedContexts);
        }
    }
    Ok(m)
}

/// One application of the distributivity trick.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrickEvent {
    pub column: usize,
    pub row_r: usize,
    pub row_s: usize,
    pub alpha: FFElem,
    pub beta: FFElem,
    pub lambda: FFElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RBasis {
    pub rows: Vec<NFVector>,
    pub dim: usize,
    pub trace: Vec<TrickEvent>,
}

impl RBasis {
    /// Every column has at most one non-zero entry.
    pub fn has_column_property(&self) -> bool {
        let m = self.rows.first().map_or(0, NFVector::len);
        (0..m).all(|j| self.rows.iter().filter(|r| !r.entries[j].is_zero()).count() <= 1)
    }
}

/// Nearfield reduced row echelon form; zero rows are dropped.
pub fn nf_rref(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Vec<NFVector> {
    let mut rows: Vec<NFVector> = vectors.to_vec();
    let m = rows.first().map_or(0, NFVector::len);
    let mut lead = 0;
    for col in 0..m {
        if lead == rows.len() {
            break;
        }
        let Some(r) = (lead..rows.len()).find(|&r| !rows[r].entries[col].is_zero()) else {
            continue;
        };
        rows.swap(lead, r);
        let inv = ctx.nf_inv(&rows[lead].entries[col]).expect("pivot is non-zero");
        rows[lead] = vscale(ctx, &rows[lead], &inv);
        for i in 0..rows.len() {
            if i == lead || rows[i].entries[col].is_zero() {
                continue;
            }
            let c = rows[i].entries[col].clone();
            rows[i] = vsub(ctx, &rows[i], &vscale(ctx, &rows[lead], &c));
        }
        lead += 1;
    }
    rows.retain(|r| !r.is_zero());
    rows
}

/// Expanded Gaussian elimination.
pub fn ege(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Result<RBasis> {
    check_shapes(ctx, vectors)?;
    let mut rows = vectors.to_vec();
    let mut trace = Vec::new();
    let mut triple: Option<(FFElem, FFElem, FFElem)> = None;
    loop {
        rows = nf_rref(ctx, &rows);
        let m = rows.first().map_or(0, NFVector::len);
        let bad = (0..m).find_map(|j| {
            let hits: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i].entries[j].is_zero()).take(2).collect();
            (hits.len() == 2).then(|| (j, hits[0], hits[1]))
        });
        let Some((j, r, s)) = bad else {
            break;
        };
        if triple.is_none() {
            triple = ctx.first_non_distributive_triple();
        }
        let (alpha, beta, lam) =
            triple.clone().ok_or_else(|| Error::Internal("no non-distributive triple in a proper nearfield".into()))?;
        let phi = trick_row(ctx, &rows[r], &rows[s], j, &alpha, &beta, &lam)?;
        let y_r = vsub(ctx, &rows[r], &vscale(ctx, &phi, &rows[r].entries[j]));
        let y_s = vsub(ctx, &rows[s], &vscale(ctx, &phi, &rows[s].entries[j]));
        rows[r] = y_r;
        rows[s] = y_s;
        rows.insert(s + 1, phi);
        trace.push(TrickEvent { column: j, row_r: r, row_s: s, alpha, beta, lambda: lam });
    }
    let dim = rows.len();
    Ok(RBasis { rows, dim, trace })
}

/// Builds the normalized new pivot row `φ` from rows `w_r`, `w_s` that are
/// both non-zero in column `j`.
fn trick_row(
    ctx: &NearfieldCtx,
    w_r: &NFVector,
    w_s: &NFVector,
    j: usize,
    alpha: &FFElem,
    beta: &FFElem,
    lam: &FFElem,
) -> Result<NFVector> {
    let a1 = ctx.nf_mul(&ctx.nf_inv(&w_r.entries[j])?, alpha);
    let b1 = ctx.nf_mul(&ctx.nf_inv(&w_s.entries[j])?, beta);
    let sum = vadd(ctx, &vscale(ctx, w_r, &a1), &vscale(ctx, w_s, &b1));
    let theta = vsub(
        ctx,
        &vsub(ctx, &vscale(ctx, &sum, lam), &vscale(ctx, w_r, &ctx.nf_mul(&a1, lam))),
        &vscale(ctx, w_s, &ctx.nf_mul(&b1, lam)),
    );
    if theta.leading() != Some(j) {
        return Err(Error::Internal(format!("trick row leads at {:?}, expected column {j}", theta.leading())));
    }
    Ok(vscale(ctx, &theta, &ctx.nf_inv(&theta.entries[j])?))
}

pub fn r_dim(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Result<usize> {
    Ok(ege(ctx, vectors)?.dim)
}

/// `v ∈ gen(S)` iff adding `v` leaves the R-dimension unchanged.
pub fn in_gen(ctx: &NearfieldCtx, set: &[NFVector], v: &NFVector) -> Result<bool> {
    if v.is_zero() {
        return Ok(true);
    }
    if set.is_empty() {
        return Ok(false);
    }
    let mut with = set.to_vec();
    with.push(v.clone());
    Ok(r_dim(ctx, &with)? == r_dim(ctx, set)?)
}

/// No vector lies in the gen of the others.
pub fn is_r_independent(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Result<bool> {
    check_shapes(ctx, vectors)?;
    for i in 0..vectors.len() {
        let others: Vec<NFVector> =
            vectors.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, v)| v.clone()).collect();
        if in_gen(ctx, &others, &vectors[i])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy removal of vectors that lie in the gen of the rest, scanning from
/// the last vector back so earlier vectors are preferred. The result
/// generates the same R-subgroup and is R-independent, but need not be a
/// smallest seed set.
pub fn seed_reduce(ctx: &NearfieldCtx, vectors: &[NFVector]) -> Result<Vec<NFVector>> {
    check_shapes(ctx, vectors)?;
    let mut kept = vectors.to_vec();
    for i in (0..kept.len()).rev() {
        let others: Vec<NFVector> = kept.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, v)| v.clone()).collect();
        if in_gen(ctx, &others, &kept[i])? {
            kept.remove(i);
        }
    }
    Ok(kept)
}

/// Two vectors generating all of `R^m`: `v = (1,0,1,...,1)` and
/// `w = (0,1,w^3,...,w^m)` with distinct `w^j` taken from `R^* \ {1}` in
/// canonical order, followed by 1 once those run out.
pub fn seed_construct_full(ctx: &NearfieldCtx, m: usize) -> Result<(NFVector, NFVector)> {
    let f = ctx.field();
    let max = ctx.size() as u128 + 1;
    if m < 2 || m as u128 > max {
        return Err(Error::OutOfRange(format!("m = {m} must lie in 2..={max}")));
    }
    let one = f.one();
    let mut v = vec![one.clone(), f.zero()];
    let mut w = vec![f.zero(), one.clone()];
    let mut fill = f.elements().skip(1).filter(|e| *e != one).chain(std::iter::once(one.clone()));
    for _ in 2..m {
        v.push(one.clone());
        w.push(fill.next().expect("m is within bounds"));
    }
    Ok((NFVector::new(v), NFVector::new(w)))
}

/// The canonical column type of `(a, b)`: `(1, a⁻¹∘b)` when `a ≠ 0`,
/// `(0, 1)` when only `b ≠ 0`, `(0, 0)` otherwise. Two columns share a type
/// iff one is a left `∘`-multiple of the other.
pub fn column_type(ctx: &NearfieldCtx, a: &FFElem, b: &FFElem) -> (FFElem, FFElem) {
    let f = ctx.field();
    if !a.is_zero() {
        let inv = ctx.nf_inv(a).expect("non-zero");
        (f.one(), ctx.nf_mul(&inv, b))
    } else if !b.is_zero() {
        (f.zero(), f.one())
    } else {
        (f.zero(), f.zero())
    }
}

/// Deletes every coordinate whose column `(v^j, w^j)` is a left
/// `∘`-multiple `ρ∘(v^i, w^i)` of an earlier kept column. The set
/// `{x : x^j = ρ∘x^i}` is an R-subgroup (left distributivity), so it
/// contains `gen(v, w)` and dropping coordinate `j` is injective on it;
/// the R-dimension is unchanged.
pub fn pair_eliminate(ctx: &NearfieldCtx, v: &NFVector, w: &NFVector) -> Result<(NFVector, NFVector)> {
    if v.len() != w.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), got: w.len() });
    }
    let mut seen = Vec::new();
    let (mut v2, mut w2) = (Vec::new(), Vec::new());
    for (a, b) in v.entries.iter().zip(&w.entries) {
        let ty = column_type(ctx, a, b);
        let is_zero = a.is_zero() && b.is_zero();
        if seen.contains(&ty) || (is_zero && !v2.is_empty()) {
            continue;
        }
        seen.push(ty);
        v2.push(a.clone());
        w2.push(b.clone());
    }
    Ok((NFVector::new(v2), NFVector::new(w2)))
}

/// `gen(V)` computed as a set by closing under addition and right scaling.
#[derive(Clone, Debug)]
pub struct Closure {
    q: u64,
    m: usize,
    members: Vec<bool>,
    list: Vec<u64>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn contains(&self, ctx: &NearfieldCtx, v: &NFVector) -> bool {
        v.len() == self.m && self.members[vector_code(ctx, v) as usize]
    }

    /// Members in ascending code order.
    pub fn vectors(&self, ctx: &NearfieldCtx) -> Vec<NFVector> {
        let mut codes = self.list.clone();
        codes.sort_unstable();
        codes.iter().map(|&c| decode_vector(ctx, self.q, self.m, c)).collect()
    }
}

fn vector_code(ctx: &NearfieldCtx, v: &NFVector) -> u64 {
    let q = ctx.size();
    v.entries.iter().rev().fold(0, |acc, e| acc * q + ctx.field().encode(e))
}

fn decode_vector(ctx: &NearfieldCtx, q: u64, m: usize, mut code: u64) -> NFVector {
    let mut entries = Vec::with_capacity(m);
    for _ in 0..m {
        entries.push(ctx.field().decode(code % q));
        code /= q;
    }
    NFVector::new(entries)
}

/// Largest `|R|^2` for which addition and multiplication tables are built.
const TABLE_CAP: u64 = 1 << 22;

/// The LC-closure of `vectors`; requires `|R|^m <= cap`.
pub fn lc_closure(ctx: &NearfieldCtx, vectors: &[NFVector], cap: u64) -> Result<Closure> {
    let m = check_shapes(ctx, vectors)?;
    let q = ctx.size();
    let total = (q as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if total > cap as u128 {
        return Err(Error::TooLarge { size: total, cap: cap as u128 });
    }
    if (q as u128) * (q as u128) > TABLE_CAP as u128 {
        return Err(Error::TooLarge { size: q as u128 * q as u128, cap: TABLE_CAP as u128 });
    }
    let f = ctx.field();
    let elems: Vec<FFElem> = f.elements().collect();
    let qs = q as usize;
    let mut add = vec![0u32; qs * qs];
    let mut mul = vec![0u32; qs * qs];
    for (i, a) in elems.iter().enumerate() {
        for (k, b) in elems.iter().enumerate() {
            add[i * qs + k] = f.encode(&f.add(a, b)) as u32;
            mul[i * qs + k] = f.encode(&ctx.nf_mul(a, b)) as u32;
        }
    }
    let digits = |mut c: u64| -> Vec<usize> {
        (0..m)
            .map(|_| {
                let d = (c % q) as usize;
                c /= q;
                d
            })
            .collect()
    };
    let join = |ds: &[usize]| ds.iter().rev().fold(0u64, |acc, &d| acc * q + d as u64);
    let vadd_code = |x: u64, y: u64| {
        let (dx, dy) = (digits(x), digits(y));
        let s: Vec<usize> = dx.iter().zip(&dy).map(|(&a, &b)| add[a * qs + b] as usize).collect();
        join(&s)
    };
    let mut members = vec![false; total as usize];
    let mut list = vec![0u64];
    members[0] = true;
    let p = f.characteristic();
    // Additive subgroups of R^m are F_p-subspaces, so adjoining g means
    // adding the translates by g, 2g, ..., (p-1)g.
    let adjoin = |g: u64, members: &mut Vec<bool>, list: &mut Vec<u64>| {
        if members[g as usize] {
            return;
        }
        let old = list.len();
        let mut cg = g;
        for _ in 1..p {
            for i in 0..old {
                let x = vadd_code(list[i], cg);
                members[x as usize] = true;
                list.push(x);
            }
            cg = vadd_code(cg, g);
        }
    };
    for v in vectors {
        adjoin(vector_code(ctx, v), &mut members, &mut list);
    }
    let mut next = 0;
    while next < list.len() {
        let dx = digits(list[next]);
        for lam in 0..qs {
            let s: Vec<usize> = dx.iter().map(|&a| mul[a * qs + lam] as usize).collect();
            adjoin(join(&s), &mut members, &mut list);
        }
        next += 1;
    }
    Ok(Closure { q, m, members, list })
}

/// Smallest size of a subset of `T = gen(vectors)` generating `T`, by
/// exhaustive search. Only feasible for tiny `T`; the number of candidate
/// subsets examined is bounded by `cap`.
pub fn seed_number(ctx: &NearfieldCtx, vectors: &[NFVector], cap: u64) -> Result<usize> {
    let basis = ege(ctx, vectors)?;
    if basis.dim == 0 {
        return Ok(0);
    }
    let closure = lc_closure(ctx, vectors, cap)?;
    let members: Vec<NFVector> = closure.vectors(ctx).into_iter().filter(|v| !v.is_zero()).collect();
    let mut budget = cap;
    for k in 1..basis.dim {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if budget == 0 {
                return Err(Error::TooLarge { size: cap as u128 + 1, cap: cap as u128 });
            }
            budget -= 1;
            let subset: Vec<NFVector> = idx.iter().map(|&i| members[i].clone()).collect();
            if r_dim(ctx, &subset)? == basis.dim {
                return Ok(k);
            }
            // next k-combination of 0..members.len()
            let n = members.len();
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                break;
            };
            idx[pos] += 1;
            for i in pos + 1..k {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }
    Ok(basis.dim)
}

impl fmt::Display for RBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R-basis of dimension {}", self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn32() -> NearfieldCtx {
        NearfieldCtx::new(3, 2, Some(&[1, 0, 1]), None).unwrap()
    }

    fn vecs(ctx: &NearfieldCtx, text: &str) -> Vec<NFVector> {
        parse_vectors(ctx, text).unwrap()
    }

    #[test]
    fn scaling_examples() {
        let r = dn32();
        let f = r.field();
        let v = NFVector::parse(&r, "x+1;1").unwrap();
        assert_eq!(vscale(&r, &v, &f.one()), v);
        assert!(vscale(&r, &v, &f.zero()).is_zero());
        assert_eq!(vscale(&r, &v, &f.var()), NFVector::parse(&r, "2*x+1;x").unwrap());
    }

    #[test]
    fn rdim_examples() {
        let r = dn32();
        assert_eq!(r_dim(&r, &vecs(&r, "1;2*x+2;x;0;x|2;2*x;1;2;x")).unwrap(), 5);
        assert_eq!(r_dim(&r, &vecs(&r, "1;2;x;0;0|0;0;0;1;0|1;0;0;0;1")).unwrap(), 4);
        assert_eq!(r_dim(&r, &vecs(&r, "1;0;1|2;0;0|x;0;0|0;1;0|0;0;1")).unwrap(), 3);
        assert_eq!(r_dim(&r, &vecs(&r, "0;x+1;2")).unwrap(), 1);
        let e = vecs(&r, "1;0;0|0;1;0|0;0;1");
        let b = ege(&r, &e).unwrap();
        assert_eq!(b.rows, e);
        assert!(b.trace.is_empty());
    }

    #[test]
    fn ege_output_is_a_fixed_point() {
        let r = dn32();
        let b = ege(&r, &vecs(&r, "1;2*x+2;x;0;x|2;2*x;1;2;x")).unwrap();
        assert!(b.has_column_property());
        assert!(!b.trace.is_empty());
        let again = ege(&r, &b.rows).unwrap();
        assert_eq!(again.rows, b.rows);
    }

    #[test]
    fn closure_sizes() {
        let r = dn32();
        let c = lc_closure(&r, &vecs(&r, "1;1;0|1;0;1"), 1000).unwrap();
        assert_eq!(c.len(), 729);
        let c = lc_closure(&r, &vecs(&r, "x;1"), 1000).unwrap();
        assert_eq!(c.len(), 9);
        assert!(matches!(lc_closure(&r, &vecs(&r, "1;1;0;0"), 1000), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn independence_and_reduction() {
        let r = dn32();
        let f = r.field();
        assert!(is_r_independent(&r, &vecs(&r, "1;0|0;1")).unwrap());
        assert!(is_r_independent(&r, &vecs(&r, "1;1;0|1;0;1")).unwrap());
        let v = NFVector::parse(&r, "x;2;1").unwrap();
        let pair = vec![v.clone(), vscale(&r, &v, &f.parse("x+1").unwrap())];
        assert!(!is_r_independent(&r, &pair).unwrap());
        assert_eq!(seed_reduce(&r, &pair).unwrap(), vec![v]);
        let four = vecs(&r, "1;0;0|0;1;0|0;0;1|1;1;1");
        let reduced = seed_reduce(&r, &four).unwrap();
        assert!((2..=3).contains(&reduced.len()));
        assert_eq!(r_dim(&r, &reduced).unwrap(), r_dim(&r, &four).unwrap());
        assert!(is_r_independent(&r, &reduced).unwrap());
    }

    #[test]
    fn construction_bounds() {
        let r = dn32();
        let (v, w) = seed_construct_full(&r, 2).unwrap();
        assert_eq!(v, NFVector::parse(&r, "1;0").unwrap());
        assert_eq!(w, NFVector::parse(&r, "0;1").unwrap());
        assert!(matches!(seed_construct_full(&r, 11), Err(Error::OutOfRange(_))));
        assert!(matches!(seed_construct_full(&r, 1), Err(Error::OutOfRange(_))));
        let (v, w) = seed_construct_full(&r, 10).unwrap();
        assert_eq!(r_dim(&r, &[v, w]).unwrap(), 10);
    }

    #[test]
    fn pair_elimination_column_types() {
        let r = dn32();
        let f = r.field();
        let (r1, r2, r3, r4) =
            (f.parse("x").unwrap(), f.parse("2").unwrap(), f.parse("x+1").unwrap(), f.parse("2*x").unwrap());
        assert_eq!(column_type(&r, &r1, &f.zero()), (f.one(), f.zero()));
        assert_eq!(column_type(&r, &f.zero(), &r3), (f.zero(), f.one()));
        let (t0, t1) = column_type(&r, &r2, &r4);
        assert_eq!(t0, f.one());
        assert_eq!(r.nf_mul(&r2, &t1), r4);

        let dup = vecs(&r, "1;1|1;1");
        let (v, w) = pair_eliminate(&r, &dup[0], &dup[1]).unwrap();
        assert_eq!((v.len(), w.len()), (1, 1));
    }

    #[test]
    fn seed_number_small() {
        let r = dn32();
        assert_eq!(seed_number(&r, &vecs(&r, "1;0;0|0;1;0|0;0;1"), 100_000).unwrap(), 2);
        assert_eq!(seed_number(&r, &vecs(&r, "x;1"), 100_000).unwrap(), 1);
    }

    #[test]
    fn shape_errors() {
        let r = dn32();
        let other = NearfieldCtx::new(5, 4, None, None).unwrap();
        let foreign = NFVector::new(vec![other.field().var()]);
        assert!(matches!(ege(&r, &[foreign]), Err(Error::MixedContexts)));
        let bad = vecs(&r, "1;0|1");
        assert!(matches!(ege(&r, &bad), Err(Error::DimensionMismatch { .. })));
    }
}
