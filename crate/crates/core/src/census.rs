//! Census of `D(α, β)` over many pairs, keyed by the coset triple.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dickson::NearfieldCtx;
use crate::dist::{dset_with_cosets, Classification, CosetTriple};
use crate::error::{Error, Result};
use crate::gf::FFElem;

/// Largest number of ordered pairs an unforced exhaustive sweep will scan.
pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepMode {
    Exhaustive,
    Sample { n: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusKey {
    pub cosets: CosetTriple,
    pub dim_p: usize,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub dim_p: usize,
    pub classification: Classification,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub pairs: u64,
    pub rows: Vec<CensusRow>,
}

impl Census {
    fn from_counts(counts: BTreeMap<CensusKey, u64>) -> Self {
        let pairs = counts.values().sum();
        let rows = counts
            .into_iter()
            .map(|(k, count)| CensusRow {
                r: k.cosets.r,
                s: k.cosets.s,
                t: k.cosets.t,
                dim_p: k.dim_p,
                classification: k.classification,
                count,
            })
            .collect();
        Census { pairs, rows }
    }

    /// CSV with header `r,s,t,dim_p,classification,count`; an empty `t`
    /// means `α + β = 0`.
    pub fn to_csv(&self) -> String {
        let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
        let mut out = String::from("r,s,t,dim_p,classification,count\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                opt(row.r),
                opt(row.s),
                opt(row.t),
                row.dim_p,
                row.classification,
                row.count
            ));
        }
        out
    }

    pub fn count_where(&self, pred: impl Fn(&CensusRow) -> bool) -> u64 {
        self.rows.iter().filter(|r| pred(r)).map(|r| r.count).sum()
    }
}

fn merge(mut a: BTreeMap<CensusKey, u64>, b: BTreeMap<CensusKey, u64>) -> BTreeMap<CensusKey, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// Runs the census over all ordered non-zero pairs, or over `n` pairs drawn
/// from a seeded generator. Output is independent of thread scheduling.
pub fn dset_sweep(ctx: &NearfieldCtx, mode: SweepMode, force: bool) -> Result<Census> {
    dset_sweep_filtered(ctx, mode, force, |_| true)
}

/// As [`dset_sweep`], counting only pairs whose coset triple passes `keep`.
pub fn dset_sweep_filtered<F>(ctx: &NearfieldCtx, mode: SweepMode, force: bool, keep: F) -> Result<Census>
where
    F: Fn(&CosetTriple) -> bool + Sync,
{
    let key_of = |a: &FFElem, b: &FFElem, cosets: CosetTriple| {
        let res = dset_with_cosets(ctx, a, b, cosets);
        CensusKey { cosets, dim_p: res.dim_p, classification: res.classification }
    };
    let counts = match mode {
        SweepMode::Exhaustive => {
            let nonzero = ctx.size() as u128 - 1;
            if nonzero * nonzero > EXHAUSTIVE_LIMIT && !force {
                return Err(Error::TooLarge { size: nonzero * nonzero, cap: EXHAUSTIVE_LIMIT });
            }
            let f = ctx.field();
            let elems: Vec<FFElem> = f.elements().skip(1).collect();
            let mut coset_by_code = vec![0usize; ctx.size() as usize];
            for e in &elems {
                coset_by_code[f.encode(e) as usize] = ctx.coset_index(e)?;
            }
            elems
                .par_iter()
                .map(|a| {
                    let mut local = BTreeMap::new();
                    let r = coset_by_code[f.encode(a) as usize];
                    for b in &elems {
                        let sum = f.add(a, b);
                        let t = (!sum.is_zero()).then(|| coset_by_code[f.encode(&sum) as usize]);
                        let cosets = CosetTriple { r: Some(r), s: Some(coset_by_code[f.encode(b) as usize]), t };
                        if keep(&cosets) {
                            *local.entry(key_of(a, b, cosets)).or_default() += 1;
                        }
                    }
                    local
                })
                .reduce(BTreeMap::new, merge)
        }
        SweepMode::Sample { n, seed } => {
            let f = ctx.field();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pairs: Vec<(FFElem, FFElem)> =
                (0..n).map(|_| (f.random_nonzero(&mut rng), f.random_nonzero(&mut rng))).collect();
            pairs
                .par_iter()
                .map(|(a, b)| {
                    let mut local = BTreeMap::new();
                    let cosets = crate::dist::coset_triple(ctx, a, b);
                    if keep(&cosets) {
                        local.insert(key_of(a, b, cosets), 1u64);
                    }
                    local
                })
                .reduce(BTreeMap::new, merge)
        }
    };
    Ok(Census::from_counts(counts))
}
