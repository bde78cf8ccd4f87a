//! Replays the worked examples and structural claims as pass/fail checks.
//!
//! Every check uses fixed contexts and fixed seeds, so results are
//! reproducible; wall-clock time counts against each check's budget.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::census::{dset_sweep, dset_sweep_filtered, SweepMode};
use crate::dickson::{bracket_residues, list_dickson_pairs, span_elements, NearfieldCtx};
use crate::dist::{
    coset_triple, dset, dset_brute, phi_eval, predicted_two_coset_order, subspace_is_subfield, Classification,
};
use crate::gf::FFElem;
use crate::linalg::Subspace;
use crate::nearvec::{ege, lc_closure, pair_eliminate, parse_vectors, r_dim, seed_construct_full, NFVector};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    pub budget_ms: Option<u128>,
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let budget = self.budget_ms.map_or(String::new(), |b| format!(" / {b} ms"));
        write!(
            f,
            "[{}] {:>2} {} ({} ms{}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            budget,
            self.detail
        )
    }
}

type CheckFn = fn() -> Result<String, String>;

struct Check {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: CheckFn,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CHECKS: &[Check] = &[
    Check { id: 1, name: "DN(3,2) same-coset dichotomy", budget: secs(5), run: check_dn32_dichotomy },
    Check { id: 2, name: "DN(5,4) worked distributivity example", budget: secs(1), run: check_dn54_example },
    Check { id: 3, name: "DN(4,3) H/gH/g^2H pairs are subfields", budget: secs(30), run: check_dn43_pattern },
    Check { id: 4, name: "DN(5,4) full sweep has no non-subfield", budget: secs(180), run: check_dn54_sweep },
    Check { id: 5, name: "DN(7,9) dimension-2 non-subfield exists", budget: secs(120), run: check_dn79_existence },
    Check { id: 6, name: "DN(5,8) dimension-2 non-subfield", budget: secs(120), run: check_dn58 },
    Check { id: 7, name: "eGe on two vectors of R^19 gives 10", budget: secs(1), run: check_r19 },
    Check { id: 8, name: "rows vs columns R-dimension 4 and 3", budget: None, run: check_rows_columns },
    Check { id: 9, name: "gen(v, w) = R^5", budget: None, run: check_r5 },
    Check { id: 10, name: "two-vector seed sets for R^m, m <= 10", budget: secs(10), run: check_seed_construct },
    Check { id: 11, name: "eGe against LC-closure oracle", budget: secs(30), run: check_closure_oracle },
    Check { id: 12, name: "two-coset order formula", budget: secs(120), run: check_two_coset_order },
    Check { id: 13, name: "structural invariants", budget: secs(60), run: check_structure },
    Check { id: 14, name: "pair elimination preserves R-dimension", budget: secs(60), run: check_pair_elimination },
];

pub fn check_ids() -> Vec<u32> {
    CHECKS.iter().map(|c| c.id).collect()
}

/// Runs one check; `None` for an unknown id.
pub fn run_check(id: u32) -> Option<CheckOutcome> {
    let check = CHECKS.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = (check.run)();
    let elapsed = start.elapsed();
    let over = check.budget.is_some_and(|b| elapsed > b);
    let (passed, detail) = match result {
        Ok(d) if over => (false, format!("{d}; exceeded time budget")),
        Ok(d) => (true, d),
        Err(e) => (false, e),
    };
    Some(CheckOutcome {
        id,
        name: check.name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis(),
        budget_ms: check.budget.map(|b| b.as_millis()),
    })
}

pub fn run_all() -> Vec<CheckOutcome> {
    CHECKS.iter().filter_map(|c| run_check(c.id)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `DN(3,2)` over `x^2 + 1`; `H` is the set of non-zero squares.
pub fn dn32() -> NearfieldCtx {
    NearfieldCtx::new(3, 2, Some(&[1, 0, 1]), None).expect("valid context")
}

/// `DN(5,4)` over `x^4 + 2` with generator `x + 2`.
pub fn dn54() -> NearfieldCtx {
    NearfieldCtx::new(5, 4, Some(&[2, 0, 0, 0, 1]), Some(&[2, 1])).expect("valid context")
}

/// `DN(5,8)` over the Conway polynomial `x^8 + x^4 + 3x^2 + 4x + 2` with
/// generator `x`.
pub fn dn58_conway() -> NearfieldCtx {
    NearfieldCtx::new(5, 8, Some(&[2, 4, 3, 0, 1, 0, 0, 0, 1]), Some(&[0, 1])).expect("valid context")
}

fn nonzero(ctx: &NearfieldCtx) -> Vec<FFElem> {
    ctx.field().elements().skip(1).collect()
}

fn check_dn32_dichotomy() -> Result<String, String> {
    let r = dn32();
    let f = r.field();
    let whole: Vec<FFElem> = f.elements().collect();
    let fq = r.dist_elements_dr();
    let elems = nonzero(&r);
    let (mut same, mut other) = (0, 0);
    for a in &elems {
        for b in &elems {
            let res = dset(&r, a, b);
            let span = span_elements(f, &res.basis);
            let brute = dset_brute(&r, a, b, 100).map_err(err)?;
            ensure(span == brute, || format!("kernel and scan disagree at ({a:?}, {b:?})"))?;
            let c = res.cosets;
            // α + β = 0 counts as coincident exactly when α and β share a coset
            let coincide = match c.t {
                Some(_) => c.all_equal(),
                None => c.r == c.s,
            };
            if coincide {
                ensure(span == whole, || format!("expected R at ({a:?}, {b:?})"))?;
                same += 1;
            } else {
                ensure(span == fq, || format!("expected F_3 at ({a:?}, {b:?})"))?;
                other += 1;
            }
        }
    }
    Ok(format!("{} pairs: {same} give R, {other} give F_3", same + other))
}

fn check_dn54_example() -> Result<String, String> {
    let r = dn54();
    let f = r.field();
    let p = |s: &str| f.parse(s).map_err(err);
    let (a, b, lam) = (p("3")?, p("x^2+2")?, p("x^2+1")?);
    let lhs = r.nf_mul(&f.add(&a, &b), &lam);
    let rhs = f.add(&r.nf_mul(&a, &lam), &r.nf_mul(&b, &lam));
    ensure(lhs == rhs, || "(3 + (x^2+2))∘(x^2+1) differs from the sum".into())?;
    ensure(r.coset_index(&a) == Ok(4) && r.coset_index(&b) == Ok(4), || "3 and x^2+2 should lie in H".into())?;
    ensure(r.coset_index(&f.add(&a, &b)) == Ok(2), || "3 + x^2+2 should lie in g^2 H".into())?;
    ensure(r.coset_index(&lam) == Ok(2), || "x^2+1 should lie in g^2 H".into())?;
    ensure(!r.dist_elements_dr().contains(&lam), || "x^2+1 should not be in D(R)".into())?;

    let (alpha, beta) = (p("x+2")?, p("x^3+x^2+2*x+3")?);
    ensure(r.coset_index(&alpha) == Ok(1), || "x+2 should lie in gH".into())?;
    // x^3+x^2+2x+3 = g^3 exactly, so it sits in g^[3]H
    ensure(f.pow(f.generator(), 3) == beta, || "x^3+x^2+2x+3 should equal g^3".into())?;
    ensure(r.coset_index(&beta) == Ok(3), || "x^3+x^2+2x+3 should lie in g^3 H".into())?;
    ensure(r.coset_index(&f.add(&alpha, &beta)) == Ok(1), || "α+β should lie in gH".into())?;
    let (l1, l2) = (p("x^2+3")?, p("3*x^2+2")?);
    for l in [&l1, &l2] {
        ensure(phi_eval(&r, &alpha, &beta, l).is_zero(), || format!("{} should distribute", f.format(l)))?;
    }
    ensure(r.coset_index(&l1) == Ok(4), || "x^2+3 should lie in H".into())?;
    ensure(r.coset_index(&l2) == Ok(2), || "3x^2+2 should lie in g^2 H".into())?;
    Ok(format!("both sides equal {}; λ cosets H and g^2H confirmed", f.format(&lhs)))
}

fn check_dn43_pattern() -> Result<String, String> {
    let r = NearfieldCtx::new(4, 3, None, None).map_err(err)?;
    // H, gH, g^2H are the cosets labelled 3, 1, 2
    let census =
        dset_sweep_filtered(&r, SweepMode::Exhaustive, false, |c| c.r == Some(3) && c.s == Some(1) && c.t == Some(2))
            .map_err(err)?;
    ensure(census.pairs > 0, || "no pair with the required coset pattern".into())?;
    for row in &census.rows {
        ensure(matches!(row.classification, Classification::Subfield { .. }), || {
            format!("{} pairs classify as {}", row.count, row.classification)
        })?;
    }
    let orders: BTreeSet<String> = census.rows.iter().map(|r| r.classification.to_string()).collect();
    Ok(format!("{} pairs, classes {:?}", census.pairs, orders))
}

fn check_dn54_sweep() -> Result<String, String> {
    let r = dn54();
    let census = dset_sweep(&r, SweepMode::Exhaustive, false).map_err(err)?;
    ensure(census.pairs == 624 * 624, || format!("scanned {} pairs", census.pairs))?;
    let bad = census.count_where(|row| row.classification == Classification::NotSubfield);
    ensure(bad == 0, || format!("{bad} pairs are not subfields"))?;
    let whole = census.count_where(|row| row.classification == Classification::WholeField);
    Ok(format!("{} pairs: {whole} whole field, {} proper subfield", census.pairs, census.pairs - whole))
}

/// Samples pairs in pairwise distinct cosets until one has a 2-dimensional
/// `D(α, β)` that is not a subfield, then rechecks it by direct evaluation.
fn find_dim2_non_subfield(r: &NearfieldCtx, seed: u64, limit: usize) -> Result<(FFElem, FFElem, usize), String> {
    let f = r.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tried = 0;
    while tried < limit {
        let a = f.random_nonzero(&mut rng);
        let b = f.random_nonzero(&mut rng);
        if !coset_triple(r, &a, &b).all_distinct() {
            continue;
        }
        tried += 1;
        let res = dset(r, &a, &b);
        if res.dim_p == 2 && res.classification == Classification::NotSubfield {
            for lam in span_elements(f, &res.basis) {
                ensure(phi_eval(r, &a, &b, &lam).is_zero(), || "kernel element fails the identity".into())?;
            }
            return Ok((a, b, tried));
        }
    }
    Err(format!("no witness among {limit} pairs"))
}

fn check_dn79_existence() -> Result<String, String> {
    let r = NearfieldCtx::new(7, 9, None, None).map_err(err)?;
    let (a, b, tried) = find_dim2_non_subfield(&r, 79, 10_000)?;
    let f = r.field();
    Ok(format!(
        "witness after {tried} pairs: α = {}, β = {}, |D| = 49 and 2 does not divide 9",
        f.format(&a),
        f.format(&b)
    ))
}

fn check_dn58() -> Result<String, String> {
    let r = dn58_conway();
    let f = r.field();
    let p = |s: &str| f.parse(s).map_err(err);
    let alpha = p("3*x^6+4*x^4+3*x^3+3*x^2+2*x+2")?;
    let beta = p("4*x^7+x^6+x^5+3*x^4+4*x^2+3*x+2")?;
    let res = dset(&r, &alpha, &beta);
    ensure(res.cosets.all_distinct(), || format!("cosets {:?} not distinct", res.cosets))?;
    ensure(res.dim_p == 2, || format!("dimension {} instead of 2", res.dim_p))?;
    let v2 = p("2*x^7+3*x^6+x")?;
    let rows: Vec<Vec<u64>> = res.basis.iter().map(|b| b.coeffs().to_vec()).collect();
    let span = Subspace::new(5, 8, &rows).map_err(err)?;
    ensure(span.contains(f.one().coeffs()).map_err(err)?, || "1 not in D(α, β)".into())?;
    ensure(span.contains(v2.coeffs()).map_err(err)?, || "2g^7+3g^6+g not in D(α, β)".into())?;
    let sq = f.mul(&v2, &v2);
    ensure(sq == p("4*x^7+x^6+2*x^5+x^4+2*x^3+3*x^2+2*x+4")?, || "unexpected square of v_2".into())?;
    ensure(!span.contains(sq.coeffs()).map_err(err)?, || "v_2^2 lies in the span".into())?;
    ensure(!subspace_is_subfield(&r, &res.basis), || "span is closed".into())?;
    ensure(res.classification == Classification::NotSubfield, || "not classified NOT_SUBFIELD".into())?;

    let default = NearfieldCtx::new(5, 8, None, None).map_err(err)?;
    let (_, _, tried) = find_dim2_non_subfield(&default, 58, 10_000)?;
    Ok(format!("stated pair reproduced under the Conway modulus; default context witness after {tried} pairs"))
}

fn check_r19() -> Result<String, String> {
    let r = dn32();
    let v = "x+2;x+1;1;1;2*x+1;x+1;2;0;2*x+1;2*x+2;x+2;2*x;2*x+1;2*x+2;x+1;x+2;2*x+1;2*x+2;x+1";
    let w = "2*x;2;1;2*x+2;0;2*x;2;2*x;2*x+1;x+1;0;2*x+1;1;x+1;2*x+2;2*x+2;2*x+2;2*x+2;x+1";
    let vs = parse_vectors(&r, &format!("{v}|{w}")).map_err(err)?;
    let basis = ege(&r, &vs).map_err(err)?;
    ensure(basis.has_column_property(), || "output violates the column property".into())?;
    ensure(basis.dim == 10, || format!("R-dimension {}", basis.dim))?;
    Ok(format!("R-dimension 10 after {} trick steps", basis.trace.len()))
}

fn check_rows_columns() -> Result<String, String> {
    let r = dn32();
    let rows = parse_vectors(&r, "1;2;x;0;0|0;0;0;1;0|1;0;0;0;1").map_err(err)?;
    let cols = parse_vectors(&r, "1;0;1|2;0;0|x;0;0|0;1;0|0;0;1").map_err(err)?;
    let (a, b) = (r_dim(&r, &rows).map_err(err)?, r_dim(&r, &cols).map_err(err)?);
    ensure(a == 4 && b == 3, || format!("rows {a}, columns {b}"))?;
    Ok("rows 4, columns 3".into())
}

fn check_r5() -> Result<String, String> {
    let r = dn32();
    let vs = parse_vectors(&r, "1;2*x+2;x;0;x|2;2*x;1;2;x").map_err(err)?;
    let d = r_dim(&r, &vs).map_err(err)?;
    ensure(d == 5, || format!("R-dimension {d}"))?;
    Ok("R-dimension 5".into())
}

fn check_seed_construct() -> Result<String, String> {
    let r = dn32();
    for m in 2..=10 {
        let (v, w) = seed_construct_full(&r, m).map_err(err)?;
        let d = r_dim(&r, &[v, w]).map_err(err)?;
        ensure(d == m, || format!("m = {m} gives R-dimension {d}"))?;
    }
    ensure(seed_construct_full(&r, 11).is_err(), || "m = 11 accepted".into())?;
    Ok("m = 2..10 all full; m = 11 rejected".into())
}

fn random_vector(r: &NearfieldCtx, m: usize, rng: &mut ChaCha8Rng) -> NFVector {
    NFVector::new((0..m).map(|_| r.field().random(rng)).collect())
}

fn check_closure_oracle() -> Result<String, String> {
    let r = dn32();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut dims = [0usize; 4];
    for _ in 0..100 {
        let m = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=3);
        let vs: Vec<NFVector> = (0..k).map(|_| random_vector(&r, m, &mut rng)).collect();
        let basis = ege(&r, &vs).map_err(err)?;
        let closure = lc_closure(&r, &vs, 729).map_err(err)?;
        ensure(closure.len() == 9usize.pow(basis.dim as u32), || {
            format!("closure size {} but R-dimension {}", closure.len(), basis.dim)
        })?;
        for row in &basis.rows {
            ensure(closure.contains(&r, row), || "eGe row outside the closure".into())?;
        }
        dims[basis.dim] += 1;
    }
    Ok(format!("100 sets; R-dimension histogram {dims:?}"))
}

/// Pairs with `α, β` in one coset and `α + β` in another.
fn two_coset_pairs(r: &NearfieldCtx, count: usize, seed: u64) -> Vec<(FFElem, FFElem)> {
    let f = r.field();
    let n = r.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let a = f.random_nonzero(&mut rng);
        let j = rng.gen_range(0..f.order() / n);
        let b = f.mul(&a, &f.pow(f.generator(), n * j));
        let c = coset_triple(r, &a, &b);
        if c.t.is_some() && c.t != c.r {
            out.push((a, b));
        }
    }
    out
}

fn check_two_coset_order() -> Result<String, String> {
    let mut seen = BTreeSet::new();
    for (r, seed, brute) in [(dn54(), 12, true), (NearfieldCtx::new(7, 9, None, None).map_err(err)?, 13, false)] {
        let p = r.pair().p as u128;
        for (a, b) in two_coset_pairs(&r, 100, seed) {
            let res = dset(&r, &a, &b);
            let (s, t) = (res.cosets.s.expect("non-zero"), res.cosets.t.expect("non-zero"));
            let predicted = predicted_two_coset_order(&r, s, t);
            let size = p.pow(res.dim_p as u32);
            ensure(size == predicted, || format!("({s},{t}): |D| = {size}, formula {predicted}"))?;
            if brute {
                let scanned = dset_brute(&r, &a, &b, 1000).map_err(err)?.len() as u128;
                ensure(scanned == size, || format!("scan finds {scanned}, kernel {size}"))?;
            }
            seen.insert((r.q(), r.n(), s, t, size));
        }
    }
    Ok(format!("200 pairs over {} coset patterns", seen.len()))
}

/// Group axioms of `(R^*, ∘)` and left distributivity, exhaustive or on
/// `samples` random triples.
pub fn check_nearfield_axioms(r: &NearfieldCtx, samples: Option<usize>) -> Result<(), String> {
    let f = r.field();
    let one = f.one();
    let unit_ok = |a: &FFElem| -> Result<(), String> {
        ensure(r.nf_mul(a, &one) == *a && r.nf_mul(&one, a) == *a, || "1 is not an identity".into())?;
        let inv = r.nf_inv(a).map_err(err)?;
        ensure(r.nf_mul(a, &inv) == one && r.nf_mul(&inv, a) == one, || "inverse fails".into())
    };
    let triple_ok = |a: &FFElem, b: &FFElem, c: &FFElem| -> Result<(), String> {
        let ab = r.nf_mul(a, b);
        ensure(!ab.is_zero(), || "product of non-zero elements is zero".into())?;
        ensure(r.nf_mul(&ab, c) == r.nf_mul(a, &r.nf_mul(b, c)), || "associativity fails".into())?;
        let lhs = r.nf_mul(a, &f.add(b, c));
        ensure(lhs == f.add(&ab, &r.nf_mul(a, c)), || "left distributivity fails".into())
    };
    match samples {
        None => {
            let elems = nonzero(r);
            for a in &elems {
                unit_ok(a)?;
            }
            for a in &elems {
                for b in &elems {
                    for c in &elems {
                        triple_ok(a, b, c)?;
                    }
                }
            }
        }
        Some(n) => {
            let mut rng = ChaCha8Rng::seed_from_u64(r.q() * 1000 + r.n());
            for _ in 0..n {
                let (a, b, c) = (f.random_nonzero(&mut rng), f.random_nonzero(&mut rng), f.random_nonzero(&mut rng));
                unit_ok(&a)?;
                triple_ok(&a, &b, &c)?;
            }
        }
    }
    Ok(())
}

/// `D(R)` straight from the definition.
fn distributive_by_definition(r: &NearfieldCtx) -> Vec<FFElem> {
    let f = r.field();
    let all: Vec<FFElem> = f.elements().collect();
    all.iter()
        .filter(|lam| {
            all.iter()
                .all(|a| all.iter().all(|b| r.nf_mul(&f.add(a, b), lam) == f.add(&r.nf_mul(a, lam), &r.nf_mul(b, lam))))
        })
        .cloned()
        .collect()
}

fn check_structure() -> Result<String, String> {
    let dn43 = NearfieldCtx::new(4, 3, None, None).map_err(err)?;
    let dn79 = NearfieldCtx::new(7, 9, None, None).map_err(err)?;
    check_nearfield_axioms(&dn32(), None)?;
    check_nearfield_axioms(&dn43, None)?;
    check_nearfield_axioms(&dn54(), Some(20_000))?;
    check_nearfield_axioms(&dn79, Some(2_000))?;

    for r in [dn32(), dn43.clone(), dn54()] {
        let dr = r.dist_elements_dr();
        let cr = r.center_cr(1000).map_err(err)?;
        ensure(dr.len() as u64 == r.q(), || format!("|D(R)| = {} in DN({},{})", dr.len(), r.q(), r.n()))?;
        ensure(dr == cr, || format!("D(R) != C(R) in DN({},{})", r.q(), r.n()))?;
        if r.size() <= 64 {
            ensure(distributive_by_definition(&r) == dr, || "D(R) disagrees with its definition".into())?;
        }
    }

    // l | dim_p and F_q ⊆ D(α, β)
    let mut computed = 0u64;
    let census = dset_sweep(&dn43, SweepMode::Exhaustive, false).map_err(err)?;
    for row in &census.rows {
        ensure(row.dim_p % 2 == 0, || format!("dim_p = {} in DN(4,3)", row.dim_p))?;
    }
    computed += census.pairs;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for r in [dn32(), dn43, dn54(), dn79] {
        let f = r.field();
        let l = r.pair().l as usize;
        let fq = r.fixed_field_basis(1);
        for _ in 0..300 {
            let (a, b) = (f.random(&mut rng), f.random(&mut rng));
            let res = dset(&r, &a, &b);
            ensure(res.dim_p.is_multiple_of(l), || format!("l = {l} does not divide {}", res.dim_p))?;
            let rows: Vec<Vec<u64>> = res.basis.iter().map(|e| e.coeffs().to_vec()).collect();
            let span = Subspace::new(f.characteristic(), f.degree(), &rows).map_err(err)?;
            for c in &fq {
                ensure(span.contains(c.coeffs()).map_err(err)?, || "F_q not contained in D(α, β)".into())?;
            }
            computed += 1;
        }
    }

    let mut pairs = 0;
    for pair in list_dickson_pairs(200, 8, 200) {
        if pair.q > 200 {
            continue;
        }
        let res = bracket_residues(pair.q, pair.n).map_err(err)?;
        let set: BTreeSet<u64> = res.iter().copied().collect();
        ensure(set.len() == pair.n as usize && set.iter().all(|&x| x < pair.n), || {
            format!("incomplete residues for ({}, {})", pair.q, pair.n)
        })?;
        ensure(res[pair.n as usize - 1] == 0, || "[n]_q is not 0 mod n".into())?;
        pairs += 1;
    }
    Ok(format!("axioms on 4 contexts; {computed} distributive sets; residues for {pairs} Dickson pairs"))
}

fn check_pair_elimination() -> Result<String, String> {
    let r = dn32();
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let mut removed = 0;
    for _ in 0..100 {
        let v = random_vector(&r, 12, &mut rng);
        let w = random_vector(&r, 12, &mut rng);
        let before = r_dim(&r, &[v.clone(), w.clone()]).map_err(err)?;
        let (v2, w2) = pair_eliminate(&r, &v, &w).map_err(err)?;
        let after = r_dim(&r, &[v2.clone(), w2]).map_err(err)?;
        ensure(before == after, || format!("R-dimension {before} became {after}"))?;
        let bound = r.size() as usize + 1;
        ensure(v2.len() <= bound, || format!("{} columns survive", v2.len()))?;
        removed += 12 - v2.len();
    }
    Ok(format!("100 pairs; {removed} columns removed in total"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_coset_table_breaks_the_axioms() {
        let mut r = dn32();
        assert!(check_nearfield_axioms(&r, None).is_ok());
        r.corrupt_coset_table();
        assert!(check_nearfield_axioms(&r, None).is_err());
    }

    #[test]
    fn unknown_check_id() {
        assert!(run_check(99).is_none());
        assert_eq!(check_ids(), (1..=14).collect::<Vec<_>>());
    }

    #[test]
    fn quick_checks_pass() {
        for id in [2, 7, 8, 9] {
            let out = run_check(id).unwrap();
            assert!(out.passed, "{out}");
        }
    }
}
