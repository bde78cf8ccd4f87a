//! Dickson pairs and the nearfield multiplication `a ∘ b = a · b^(q^k)`,
//! where `k` indexes the coset `g^[k]_q H` containing `a` and
//! `H = <g^n>`.
//!
//! Cosets are identified without discrete logarithms: `a^((q^n-1)/n)` is an
//! `n`-th root of unity `ω^e` with `ω = g^((q^n-1)/n)`, and `e` is the
//! exponent of `a` modulo `n`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::arith::{divisors, prime_divisors, prime_power};
use crate::error::{Error, Result};
use crate::gf::{FFElem, FieldCtx};
use crate::linalg::{linear_map_matrix, nullspace, MatFp};

/// Default element limit for exhaustive scans.
pub const DEFAULT_SCAN_CAP: u64 = 10_000;

/// A validated Dickson pair `(q, n)` with `q = p^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DicksonPair {
    pub q: u64,
    pub n: u64,
    pub p: u64,
    pub l: u32,
}

impl DicksonPair {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        let not_pair = Error::NotDicksonPair { q, n };
        if n == 0 {
            return Err(not_pair);
        }
        let (p, l) = prime_power(q).ok_or(not_pair.clone())?;
        if prime_divisors(n).iter().any(|&r| !(q - 1).is_multiple_of(r)) {
            return Err(not_pair);
        }
        if q % 4 == 3 && n.is_multiple_of(4) {
            return Err(not_pair);
        }
        Ok(DicksonPair { q, n, p, l })
    }

    /// Degree of `F_{q^n}` over `F_p`.
    pub fn degree(&self) -> usize {
        self.l as usize * self.n as usize
    }
}

pub fn is_dickson_pair(q: u64, n: u64) -> bool {
    DicksonPair::new(q, n).is_ok()
}

/// All Dickson pairs `(p^l, n)` with `p <= max_p`, `l <= max_l`,
/// `n <= max_n`, sorted by `(q, n)`.
pub fn list_dickson_pairs(max_p: u64, max_l: u32, max_n: u64) -> Vec<DicksonPair> {
    let mut out = Vec::new();
    for p in (2..=max_p).filter(|&p| crate::arith::is_prime(p)) {
        for l in 1..=max_l {
            let Some(q) = p.checked_pow(l) else { break };
            out.extend((1..=max_n).filter_map(|n| DicksonPair::new(q, n).ok()));
        }
    }
    out.sort_by_key(|d| (d.q, d.n));
    out
}

/// `([1]_q mod n, ..., [n]_q mod n)` where `[k]_q = (q^k - 1)/(q - 1)`.
pub fn bracket_residues(q: u64, n: u64) -> Result<Vec<u64>> {
    DicksonPair::new(q, n)?;
    let qm = q % n;
    let mut x = 1 % n;
    let mut out = Vec::with_capacity(n as usize);
    for _ in 0..n {
        out.push(x);
        x = ((qm as u128 * x as u128 + 1) % n as u128) as u64;
    }
    Ok(out)
}

/// Orders `p^h` with `h | l n` of the subnearfields of `DN(q, n)`.
pub fn subnearfield_orders(q: u64, n: u64) -> Result<BTreeSet<u128>> {
    let pair = DicksonPair::new(q, n)?;
    Ok(divisors(pair.degree() as u64).into_iter().map(|h| (pair.p as u128).pow(h as u32)).collect())
}

/// A finite Dickson nearfield `DN_g(q, n)` on top of `F_{q^n}`.
#[derive(Clone, Debug)]
pub struct NearfieldCtx {
    pair: DicksonPair,
    field: FieldCtx,
    residues: Vec<u64>,
    coset_reps: Vec<FFElem>,
    h_exp: u64,
    frob_exps: Vec<u64>,
    // frob_images[k][j] = (x^j)^(q^k), k = 0..=n
    frob_images: Vec<Vec<FFElem>>,
    // encoding of ω^e -> e
    root_index: HashMap<u64, u64>,
    // e -> k with [k]_q ≡ e (mod n)
    k_of_residue: Vec<usize>,
}

impl NearfieldCtx {
    /// Builds `DN_g(q, n)`. The modulus and generator overrides follow
    /// [`FieldCtx::new`] for `F_{p^(l n)}`.
    pub fn new(q: u64, n: u64, modulus: Option<&[u64]>, generator: Option<&[u64]>) -> Result<Self> {
        let pair = DicksonPair::new(q, n)?;
        let field = FieldCtx::new(pair.p, pair.degree(), modulus, generator)?;
        Self::from_field(pair, field)
    }

    pub fn from_field(pair: DicksonPair, field: FieldCtx) -> Result<Self> {
        if field.characteristic() != pair.p || field.degree() != pair.degree() {
            return Err(Error::PreconditionViolated(format!(
                "field has degree {} over F_{}, pair needs degree {} over F_{}",
                field.degree(),
                field.characteristic(),
                pair.degree(),
                pair.p
            )));
        }
        let n = pair.n;
        let order = field.order();
        let residues = bracket_residues(pair.q, n)?;
        let mut k_of_residue = vec![0usize; n as usize];
        for (i, &r) in residues.iter().enumerate() {
            k_of_residue[r as usize] = i + 1;
        }
        if k_of_residue.contains(&0) || residues[n as usize - 1] != 0 {
            return Err(Error::Internal("bracket residues are not a complete system".into()));
        }

        let g = field.generator().clone();
        // [k]_q reduced modulo the group order: the coset only depends on it mod n,
        // but the representative g^[k]_q is the literal one.
        let mut coset_reps = Vec::with_capacity(n as usize);
        let mut bracket = 1u128 % order as u128;
        let qm = pair.q as u128 % order as u128;
        for _ in 0..n {
            coset_reps.push(field.pow(&g, bracket as u64));
            bracket = (bracket * qm + 1) % order as u128;
        }

        let h_exp = order / n;
        let omega = field.pow(&g, h_exp);
        let mut root_index = HashMap::with_capacity(n as usize);
        let mut w = field.one();
        for e in 0..n {
            root_index.insert(field.encode(&w), e);
            w = field.mul(&w, &omega);
        }

        let mut frob_exps = Vec::with_capacity(n as usize);
        let mut qk = 1u128;
        for _ in 0..n {
            qk = qk * pair.q as u128 % order as u128;
            frob_exps.push(qk as u64);
        }

        let d = field.degree();
        let mut frob_images = Vec::with_capacity(n as usize + 1);
        let mut current: Vec<FFElem> = (0..d)
            .map(|j| {
                let mut c = vec![0u64; d];
                c[j] = 1;
                field.from_coeffs(&c).expect("unit vector")
            })
            .collect();
        for _ in 0..=n {
            frob_images.push(current.clone());
            current = current.iter().map(|e| field.pow(e, pair.q)).collect();
        }

        Ok(NearfieldCtx { pair, field, residues, coset_reps, h_exp, frob_exps, frob_images, root_index, k_of_residue })
    }

    /// Swaps the coset labels of two residues, breaking the nearfield law.
    #[cfg(test)]
    pub(crate) fn corrupt_coset_table(&mut self) {
        self.k_of_residue.swap(0, 1);
    }

    pub fn pair(&self) -> DicksonPair {
        self.pair
    }

    pub fn q(&self) -> u64 {
        self.pair.q
    }

    pub fn n(&self) -> u64 {
        self.pair.n
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// `[k]_q mod n` for `k = 1..=n`.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// `g^[k]_q` for `k = 1..=n`.
    pub fn coset_reps(&self) -> &[FFElem] {
        &self.coset_reps
    }

    /// `(q^n - 1)/n`, the exponent of the index-`n` membership test.
    pub fn h_exp(&self) -> u64 {
        self.h_exp
    }

    /// `q^k mod (q^n - 1)` for `k = 1..=n`.
    pub fn frob_exps(&self) -> &[u64] {
        &self.frob_exps
    }

    /// Number of elements `q^n`.
    pub fn size(&self) -> u64 {
        self.field.size()
    }

    /// `b^(q^k)` through the precomputed `F_p`-linear Frobenius tables.
    pub fn frobenius_power(&self, k: usize, b: &FFElem) -> FFElem {
        let images = &self.frob_images[k % (self.pair.n as usize)];
        let mut acc = self.field.zero();
        for (j, &c) in b.coeffs().iter().enumerate() {
            if c != 0 {
                acc = self.field.add(&acc, &self.field.scale(&images[j], c));
            }
        }
        acc
    }

    /// Whether `a` lies in `H = <g^n>`.
    pub fn h_member(&self, a: &FFElem) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        Ok(self.field.pow(a, self.h_exp) == self.field.one())
    }

    /// Exponent of `a` with respect to `g`, reduced modulo `n`.
    pub fn log_residue(&self, a: &FFElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let z = self.field.pow(a, self.h_exp);
        self.root_index
            .get(&self.field.encode(&z))
            .copied()
            .ok_or_else(|| Error::Internal("power is not an n-th root of unity".into()))
    }

    /// The `k` in `1..=n` with `a ∈ g^[k]_q H`; `k = n` is `H` itself.
    pub fn coset_index(&self, a: &FFElem) -> Result<usize> {
        Ok(self.k_of_residue[self.log_residue(a)? as usize])
    }

    /// The `k` whose coset is `g^e H`.
    pub fn coset_of_power(&self, e: u64) -> usize {
        self.k_of_residue[(e % self.pair.n) as usize]
    }

    /// `a · b^(q^k)` for a known coset index `k` of `a`.
    pub fn mul_in_coset(&self, k: usize, a: &FFElem, b: &FFElem) -> FFElem {
        self.field.mul(a, &self.frobenius_power(k, b))
    }

    pub fn nf_mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        if a.is_zero() {
            return self.field.zero();
        }
        let k = self.coset_index(a).expect("non-zero element has a coset");
        self.mul_in_coset(k, a, b)
    }

    /// The inverse in `(R^*, ∘)`, `a^(-q^(n-k))` for `a ∈ g^[k]_q H`.
    pub fn nf_inv(&self, a: &FFElem) -> Result<FFElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = self.coset_index(a)?;
        let inv = self.field.inv(a)?;
        let b = self.frobenius_power(self.pair.n as usize - k, &inv);
        debug_assert_eq!(self.nf_mul(a, &b), self.field.one());
        Ok(b)
    }

    /// `F_p`-basis of the fixed field of `λ ↦ λ^(q^k)`, i.e. `F_{q^gcd(k,n)}`.
    pub fn fixed_field_basis(&self, k: usize) -> Vec<FFElem> {
        let m = self.frobenius_minus_identity(k);
        nullspace(&m).into_iter().map(|v| self.field.from_coeffs(&v).expect("kernel vector has field length")).collect()
    }

    /// Matrix of `λ ↦ λ^(q^k) - λ` over `F_p`.
    pub fn frobenius_minus_identity(&self, k: usize) -> MatFp {
        linear_map_matrix(&self.field, |lam| self.field.sub(&self.frobenius_power(k, lam), lam))
    }

    /// The distributive elements `D(R) = {λ : λ^q = λ}`, a copy of `F_q`,
    /// sorted canonically.
    pub fn dist_elements_dr(&self) -> Vec<FFElem> {
        span_elements(&self.field, &self.fixed_field_basis(1))
    }

    fn check_cap(&self, cap: u64) -> Result<()> {
        if self.size() > cap {
            return Err(Error::TooLarge { size: self.size() as u128, cap: cap as u128 });
        }
        Ok(())
    }

    /// The multiplicative centre, by exhaustive scan.
    pub fn center_cr(&self, cap: u64) -> Result<Vec<FFElem>> {
        self.check_cap(cap)?;
        let all: Vec<FFElem> = self.field.elements().collect();
        Ok(all.iter().filter(|x| all.iter().all(|y| self.nf_mul(x, y) == self.nf_mul(y, x))).cloned().collect())
    }

    /// Elements commuting with every element of `D(R)`.
    pub fn gen_center_gcr(&self, cap: u64) -> Result<Vec<FFElem>> {
        self.check_cap(cap)?;
        let dr = self.dist_elements_dr();
        Ok(self.field.elements().filter(|x| dr.iter().all(|c| self.nf_mul(x, c) == self.nf_mul(c, x))).collect())
    }

    /// The first triple `(α, β, λ)` in canonical order with
    /// `(α+β)∘λ ≠ α∘λ + β∘λ`; `None` when `R` is a field.
    pub fn first_non_distributive_triple(&self) -> Option<(FFElem, FFElem, FFElem)> {
        if self.pair.n == 1 {
            return None;
        }
        let f = &self.field;
        for a in f.elements().skip(1) {
            for b in f.elements().skip(1) {
                let s = f.add(&a, &b);
                for lam in f.elements().skip(1) {
                    let lhs = self.nf_mul(&s, &lam);
                    let rhs = f.add(&self.nf_mul(&a, &lam), &self.nf_mul(&b, &lam));
                    if lhs != rhs {
                        return Some((a, b, lam));
                    }
                }
            }
        }
        None
    }
}

/// Enumerates the `F_p`-span of `basis` in canonical order.
pub fn span_elements(field: &FieldCtx, basis: &[FFElem]) -> Vec<FFElem> {
    let p = field.characteristic();
    let mut out = vec![field.zero()];
    for b in basis {
        let prev = out.clone();
        for c in 1..p {
            let cb = field.scale(b, c);
            out.extend(prev.iter().map(|e| field.add(e, &cb)));
        }
    }
    out.sort_by_key(|e| field.encode(e));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dn32() -> NearfieldCtx {
        NearfieldCtx::new(3, 2, Some(&[1, 0, 1]), None).unwrap()
    }

    fn dn54() -> NearfieldCtx {
        NearfieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), Some(&[2, 1])).unwrap()
    }

    #[test]
    fn dickson_pair_conditions() {
        for (q, n) in [(7, 9), (3, 2), (4, 3), (5, 4), (5, 8)] {
            assert!(is_dickson_pair(q, n), "({q},{n})");
        }
        assert!(!is_dickson_pair(3, 4));
        assert!(!is_dickson_pair(6, 1));
        assert!(!is_dickson_pair(7, 5));
        for q in [2, 3, 4, 8, 9, 25, 49] {
            assert!(is_dickson_pair(q, 1));
        }
    }

    #[test]
    fn pair_listing() {
        let l = list_dickson_pairs(7, 1, 9);
        for (q, n) in [(3, 2), (5, 4), (7, 9), (5, 8)] {
            assert!(l.iter().any(|d| d.q == q && d.n == n));
        }
        assert!(!l.iter().any(|d| d.q == 4));
        assert!(list_dickson_pairs(2, 2, 3).iter().any(|d| (d.q, d.n) == (4, 3)));
        let tiny = list_dickson_pairs(2, 1, 1);
        assert_eq!(tiny.len(), 1);
        assert_eq!((tiny[0].q, tiny[0].n), (2, 1));
        assert!(l.windows(2).all(|w| (w[0].q, w[0].n) < (w[1].q, w[1].n)));
    }

    #[test]
    fn bracket_residue_examples() {
        let r79 = bracket_residues(7, 9).unwrap();
        assert_eq!(r79[1], 8);
        assert_eq!(bracket_residues(3, 2).unwrap(), vec![1, 0]);
        // n | q - 1: residues are 1, 2, ..., n-1, 0
        assert_eq!(bracket_residues(5, 4).unwrap(), vec![1, 2, 3, 0]);
        assert_eq!(bracket_residues(4, 3).unwrap(), vec![1, 2, 0]);
        assert_eq!(bracket_residues(3, 4), Err(Error::NotDicksonPair { q: 3, n: 4 }));
    }

    #[test]
    fn subnearfield_order_sets() {
        let s: Vec<u128> = subnearfield_orders(3, 2).unwrap().into_iter().collect();
        assert_eq!(s, vec![3, 9]);
        let s: Vec<u128> = subnearfield_orders(5, 4).unwrap().into_iter().collect();
        assert_eq!(s, vec![5, 25, 625]);
        let s: Vec<u128> = subnearfield_orders(4, 3).unwrap().into_iter().collect();
        assert_eq!(s, vec![2, 4, 8, 64]);
    }

    #[test]
    fn coset_indices_in_dn54() {
        let r = dn54();
        let f = r.field();
        assert_eq!(r.coset_index(&f.one()).unwrap(), 4);
        assert_eq!(r.coset_index(&f.constant(3)).unwrap(), 4);
        assert_eq!(r.coset_index(&f.parse("x^2+1").unwrap()).unwrap(), 2);
        assert_eq!(r.coset_index(&f.zero()), Err(Error::ZeroArgument));
        // exponent-based cross-check on g^e
        let g = f.generator();
        for e in 0..40 {
            assert_eq!(r.coset_index(&f.pow(g, e)).unwrap(), r.coset_of_power(e));
        }
    }

    #[test]
    fn h_membership() {
        let r = dn32();
        let f = r.field();
        assert!(r.h_member(&f.one()).unwrap());
        assert!(!r.h_member(f.generator()).unwrap());
        assert!(r.h_member(&f.constant(2)).unwrap());
        assert_eq!(r.h_member(&f.zero()), Err(Error::ZeroArgument));
    }

    #[test]
    fn nf_mul_examples() {
        let r = dn54();
        let f = r.field();
        let three = f.constant(3);
        let lam = f.parse("x^2+1").unwrap();
        assert_eq!(r.nf_mul(&three, &lam), f.parse("3*x^2+3").unwrap());

        let r = dn32();
        let f = r.field();
        let a = f.parse("x+1").unwrap();
        assert_eq!(r.nf_mul(&a, &f.var()), f.parse("2*x+1").unwrap());
        assert!(r.nf_mul(&f.zero(), &a).is_zero());
    }

    #[test]
    fn nf_inverse_matches_exhaustive_search() {
        let r = dn32();
        let f = r.field();
        for a in f.elements().skip(1) {
            let found: Vec<FFElem> = f.elements().filter(|b| r.nf_mul(&a, b) == f.one()).collect();
            assert_eq!(found.len(), 1);
            assert_eq!(r.nf_inv(&a).unwrap(), found[0]);
            assert_eq!(r.nf_mul(&found[0], &a), f.one());
        }
        assert_eq!(r.nf_inv(&f.one()).unwrap(), f.one());
        assert_eq!(r.nf_inv(&f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn distributive_elements_and_centres() {
        let r = dn32();
        let f = r.field();
        let dr = r.dist_elements_dr();
        assert_eq!(dr, vec![f.zero(), f.one(), f.constant(2)]);
        assert_eq!(r.center_cr(DEFAULT_SCAN_CAP).unwrap(), dr);
        assert_eq!(r.gen_center_gcr(DEFAULT_SCAN_CAP).unwrap().len(), 9);

        let r = dn54();
        assert_eq!(r.dist_elements_dr(), (0..5).map(|c| r.field().constant(c)).collect::<Vec<_>>());

        let r = NearfieldCtx::new(4, 3, None, None).unwrap();
        assert_eq!(r.dist_elements_dr().len(), 4);
        assert_eq!(r.center_cr(DEFAULT_SCAN_CAP).unwrap(), r.dist_elements_dr());
        assert!(matches!(r.center_cr(10), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn frobenius_tables_match_powering() {
        let r = NearfieldCtx::new(4, 3, None, None).unwrap();
        let f = r.field();
        for a in f.elements() {
            for k in 0..=3usize {
                assert_eq!(r.frobenius_power(k, &a), f.pow(&a, 4u64.pow(k as u32)));
            }
        }
    }

    #[test]
    fn field_case_has_no_bad_triple() {
        let r = NearfieldCtx::new(7, 1, None, None).unwrap();
        assert!(r.first_non_distributive_triple().is_none());
        assert!(dn32().first_non_distributive_triple().is_some());
    }
}
