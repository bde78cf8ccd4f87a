//! The generalized distributive set
//! `D(α, β) = {λ : (α+β)∘λ = α∘λ + β∘λ}`.
//!
//! The defect `λ ↦ (α+β)∘λ - α∘λ - β∘λ` is `F_p`-linear, so `D(α, β)` is
//! the kernel of a `d × d` matrix over `F_p` built on the power basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm};
use crate::dickson::{span_elements, NearfieldCtx};
use crate::error::{Error, Result};
use crate::gf::FFElem;
use crate::linalg::{linear_map_matrix, nullspace, MatFp, Subspace};

/// How `D(α, β)` sits inside `F_{q^n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    WholeField,
    Subfield { order: u64 },
    NotSubfield,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::WholeField => write!(f, "WHOLE_FIELD"),
            Classification::Subfield { order } => write!(f, "SUBFIELD({order})"),
            Classification::NotSubfield => write!(f, "NOT_SUBFIELD"),
        }
    }
}

/// Coset indices `(r, s, t)` of `α`, `β`, `α+β`; `None` for a zero entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CosetTriple {
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
}

impl CosetTriple {
    pub fn all_distinct(&self) -> bool {
        match (self.r, self.s, self.t) {
            (Some(r), Some(s), Some(t)) => r != s && s != t && r != t,
            _ => false,
        }
    }

    pub fn all_equal(&self) -> bool {
        matches!((self.r, self.s, self.t), (Some(r), Some(s), Some(t)) if r == s && s == t)
    }

    /// At least two of the three present indices coincide.
    pub fn two_coincide(&self) -> bool {
        let v: Vec<usize> = [self.r, self.s, self.t].into_iter().flatten().collect();
        v.len() == 3 && (v[0] == v[1] || v[1] == v[2] || v[0] == v[2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DSetResult {
    pub alpha: FFElem,
    pub beta: FFElem,
    pub cosets: CosetTriple,
    /// `F_p`-basis of `D(α, β)` (reduced kernel vectors).
    pub basis: Vec<FFElem>,
    pub dim_p: usize,
    pub classification: Classification,
}

/// The defect map with the three coset indices resolved once.
struct Defect<'a> {
    ctx: &'a NearfieldCtx,
    alpha: &'a FFElem,
    beta: &'a FFElem,
    sum: FFElem,
    cosets: CosetTriple,
}

impl<'a> Defect<'a> {
    fn new(ctx: &'a NearfieldCtx, alpha: &'a FFElem, beta: &'a FFElem) -> Self {
        let sum = ctx.field().add(alpha, beta);
        let idx = |a: &FFElem| if a.is_zero() { None } else { ctx.coset_index(a).ok() };
        let cosets = CosetTriple { r: idx(alpha), s: idx(beta), t: idx(&sum) };
        Defect { ctx, alpha, beta, sum, cosets }
    }

    fn eval(&self, lam: &FFElem) -> FFElem {
        let f = self.ctx.field();
        let term = |k: Option<usize>, a: &FFElem| match k {
            Some(k) => self.ctx.mul_in_coset(k, a, lam),
            None => f.zero(),
        };
        let lhs = term(self.cosets.t, &self.sum);
        let rhs = f.add(&term(self.cosets.r, self.alpha), &term(self.cosets.s, self.beta));
        f.sub(&lhs, &rhs)
    }

    fn matrix(&self) -> MatFp {
        linear_map_matrix(self.ctx.field(), |lam| self.eval(lam))
    }
}

/// `(α+β)∘λ - α∘λ - β∘λ`.
pub fn phi_eval(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem, lam: &FFElem) -> FFElem {
    let f = ctx.field();
    let lhs = ctx.nf_mul(&f.add(alpha, beta), lam);
    let rhs = f.add(&ctx.nf_mul(alpha, lam), &ctx.nf_mul(beta, lam));
    f.sub(&lhs, &rhs)
}

/// The matrix of the defect map on the power basis.
pub fn phi_matrix(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem) -> MatFp {
    Defect::new(ctx, alpha, beta).matrix()
}

/// Computes `D(α, β)` as a kernel and classifies it.
pub fn dset(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem) -> DSetResult {
    dset_from(ctx, Defect::new(ctx, alpha, beta))
}

/// As [`dset`], with the coset triple already known (sweeps cache it).
pub fn dset_with_cosets(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem, cosets: CosetTriple) -> DSetResult {
    let sum = ctx.field().add(alpha, beta);
    dset_from(ctx, Defect { ctx, alpha, beta, sum, cosets })
}

fn dset_from(ctx: &NearfieldCtx, defect: Defect<'_>) -> DSetResult {
    let (alpha, beta) = (defect.alpha, defect.beta);
    let f = ctx.field();
    let basis: Vec<FFElem> = nullspace(&defect.matrix())
        .into_iter()
        .map(|v| f.from_coeffs(&v).expect("kernel vector has field length"))
        .collect();
    let dim_p = basis.len();
    let classification = classify_basis(ctx, &basis);
    DSetResult { alpha: alpha.clone(), beta: beta.clone(), cosets: defect.cosets, basis, dim_p, classification }
}

/// Coset triple of `(α, β, α+β)`.
pub fn coset_triple(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem) -> CosetTriple {
    Defect::new(ctx, alpha, beta).cosets
}

fn classify_basis(ctx: &NearfieldCtx, basis: &[FFElem]) -> Classification {
    let f = ctx.field();
    if basis.len() == f.degree() {
        Classification::WholeField
    } else if subspace_is_subfield(ctx, basis) {
        Classification::Subfield { order: f.characteristic().pow(basis.len() as u32) }
    } else {
        Classification::NotSubfield
    }
}

pub fn classify_pair(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem) -> Classification {
    dset(ctx, alpha, beta).classification
}

/// `D(α, β)` by scanning every `λ`.
pub fn dset_brute(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem, cap: u64) -> Result<Vec<FFElem>> {
    if ctx.size() > cap {
        return Err(Error::TooLarge { size: ctx.size() as u128, cap: cap as u128 });
    }
    Ok(ctx.field().elements().filter(|lam| phi_eval(ctx, alpha, beta, lam).is_zero()).collect())
}

/// Whether the `F_p`-span of `basis` contains 1 and is closed under the
/// field product; pairwise products of basis elements suffice.
pub fn subspace_is_subfield(ctx: &NearfieldCtx, basis: &[FFElem]) -> bool {
    let f = ctx.field();
    let rows: Vec<Vec<u64>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
    let space = Subspace::new(f.characteristic(), f.degree(), &rows).expect("basis has field length");
    if !space.contains(f.one().coeffs()).expect("length checked") {
        return false;
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            if !space.contains(f.mul(a, b).coeffs()).expect("length checked") {
                return false;
            }
        }
    }
    true
}

/// `p^(l·gcd(t+n-s, n))`, the order of `D(α, β)` when `α, β ∈ g^[s]_q H` and
/// `α+β ∈ g^[t]_q H`.
pub fn predicted_two_coset_order(ctx: &NearfieldCtx, s: usize, t: usize) -> u128 {
    let pair = ctx.pair();
    let n = pair.n;
    let delta = gcd(t as u64 + n - s as u64, n);
    (pair.p as u128).pow(pair.l * delta as u32)
}

/// `S = {g^m : (q^n-1) | m(q^r-1) and (q^n-1) | m(q^s-1)}`, sorted
/// canonically.
pub fn lemma_s_set(ctx: &NearfieldCtx, r: usize, s: usize) -> Vec<FFElem> {
    let f = ctx.field();
    let order = f.order();
    let q = ctx.q() as u128;
    let step_for = |k: usize| {
        let qk1 = (q.pow(k as u32) - 1) % order as u128;
        let qk1 = qk1 as u64;
        order / gcd(order, qk1)
    };
    let step = lcm(step_for(r), step_for(s));
    let g = f.generator();
    let gs = f.pow(g, step);
    let mut out = Vec::new();
    let mut cur = f.one();
    for _ in 0..order / step {
        out.push(cur.clone());
        cur = f.mul(&cur, &gs);
    }
    out.sort_by_key(|e| f.encode(e));
    out
}

/// `F_{r,s,t}(α, β) = D(α, β) ∩ F_{q^(r-s)} ∩ F_{q^(r-t)}` for
/// `α ∈ g^[r]_q H`, `β ∈ g^[s]_q H`, `α+β ∈ g^[t]_q H` with
/// `0 < t < s < r <= n`, `(r-s) | n` and `(r-t) | n`.
pub fn f_rst(ctx: &NearfieldCtx, alpha: &FFElem, beta: &FFElem) -> Result<Vec<FFElem>> {
    let defect = Defect::new(ctx, alpha, beta);
    let (r, s, t) = match (defect.cosets.r, defect.cosets.s, defect.cosets.t) {
        (Some(r), Some(s), Some(t)) => (r, s, t),
        _ => return Err(Error::PreconditionViolated("α, β and α+β must be non-zero".into())),
    };
    let n = ctx.n() as usize;
    if !(0 < t && t < s && s < r && r <= n) {
        return Err(Error::PreconditionViolated(format!("coset pattern (r,s,t)=({r},{s},{t}) needs t < s < r")));
    }
    if !n.is_multiple_of(r - s) || !n.is_multiple_of(r - t) {
        return Err(Error::PreconditionViolated(format!("r-s={} and r-t={} must divide n={n}", r - s, r - t)));
    }
    let stacked =
        defect.matrix().vstack(&ctx.frobenius_minus_identity(r - s))?.vstack(&ctx.frobenius_minus_identity(r - t))?;
    let f = ctx.field();
    let basis: Vec<FFElem> =
        nullspace(&stacked).into_iter().map(|v| f.from_coeffs(&v).expect("kernel vector has field length")).collect();
    Ok(span_elements(f, &basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dickson::DEFAULT_SCAN_CAP;

    fn dn32() -> NearfieldCtx {
        NearfieldCtx::new(3, 2, Some(&[1, 0, 1]), None).unwrap()
    }

    fn dn54() -> NearfieldCtx {
        NearfieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), Some(&[2, 1])).unwrap()
    }

    #[test]
    fn defect_vanishes_on_zero_and_fq() {
        let r = dn54();
        let f = r.field();
        let a = f.parse("x+2").unwrap();
        let b = f.parse("x^3+x^2+2*x+3").unwrap();
        assert!(phi_eval(&r, &a, &b, &f.zero()).is_zero());
        for c in 0..5 {
            assert!(phi_eval(&r, &a, &b, &f.constant(c)).is_zero());
        }
        assert!(phi_eval(&r, &a, &b, &f.parse("x^2+3").unwrap()).is_zero());
        assert!(phi_eval(&r, &a, &b, &f.parse("3*x^2+2").unwrap()).is_zero());
    }

    #[test]
    fn dset_same_coset_is_whole_field() {
        let r = dn54();
        let f = r.field();
        // 1, 1, 2 all lie in H
        let res = dset(&r, &f.one(), &f.one());
        assert_eq!(res.classification, Classification::WholeField);
        assert_eq!(res.dim_p, 4);
        assert!(res.cosets.all_equal());
    }

    #[test]
    fn dset_dn32_is_f3_off_the_diagonal() {
        let r = dn32();
        let f = r.field();
        let a = f.one();
        let b = f.var();
        let res = dset(&r, &a, &b);
        assert!(!res.cosets.all_equal());
        assert_eq!(res.dim_p, 1);
        assert_eq!(res.classification, Classification::Subfield { order: 3 });
    }

    #[test]
    fn degenerate_pairs() {
        let r = dn54();
        let f = r.field();
        let a = f.parse("x+2").unwrap();
        assert_eq!(dset(&r, &f.zero(), &a).classification, Classification::WholeField);
        assert_eq!(dset(&r, &f.zero(), &f.zero()).classification, Classification::WholeField);
        assert_eq!(dset_brute(&r, &f.zero(), &f.zero(), DEFAULT_SCAN_CAP).unwrap().len(), 625);
        // α + β = 0 is decided by the kernel
        let neg = f.neg(&a);
        let res = dset(&r, &a, &neg);
        let brute = dset_brute(&r, &a, &neg, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(span_elements(f, &res.basis), brute);
        assert_eq!(res.cosets.t, None);
    }

    #[test]
    fn subfield_test_cases() {
        let r = dn54();
        let f = r.field();
        assert!(subspace_is_subfield(&r, &[f.one()]));
        let full: Vec<FFElem> = (0..4).map(|j| f.pow(&f.var(), j)).collect();
        assert!(subspace_is_subfield(&r, &full));
        assert!(!subspace_is_subfield(&r, &[f.var()]));
        assert!(!subspace_is_subfield(&r, &[f.one(), f.var()]));
    }

    #[test]
    fn two_coset_order_formula_values() {
        let r = dn54();
        assert_eq!(predicted_two_coset_order(&r, 2, 2), 625);
        assert_eq!(predicted_two_coset_order(&r, 1, 3), 25);
        let r79 = NearfieldCtx::new(7, 9, None, None).unwrap();
        assert_eq!(predicted_two_coset_order(&r79, 1, 4), 343);
    }

    #[test]
    fn s_set_contains_one() {
        let r = dn54();
        let s = lemma_s_set(&r, 1, 2);
        assert!(s.contains(&r.field().one()));
        for e in &s {
            assert!(r.h_member(e).unwrap());
        }
    }

    #[test]
    fn f_rst_rejects_wrong_pattern() {
        let r = dn54();
        let f = r.field();
        assert!(matches!(f_rst(&r, &f.one(), &f.one()), Err(Error::PreconditionViolated(_))));
    }
}
