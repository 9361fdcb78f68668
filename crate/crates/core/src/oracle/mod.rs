//! Exact depth of `S/I` for a monomial ideal `I`.
//!
//! `Tor_i(k, S/I)_a` is the `i`-th homology of the degree-`a` strand of the
//! Koszul complex on the variables. Its basis in homological degree `i` is
//! the set of `T ⊆ supp(a)` with `|T| = i` and `x^{a - e_T} ∉ I`. Nonzero
//! strands occur only at lcms of generators. The projective dimension is
//! the top index with nonzero homology, and `depth = N - pd`.

pub mod linalg;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{divides_slice, Monomial, MonomialIdeal};
use crate::path::{path_ideal, WeightVector};
use linalg::{rank_exact, rank_mod_p, SparseRow, DEFAULT_PRIME};

pub const DEFAULT_MAX_DEGREES: usize = 2_000_000;
pub const DEFAULT_MAX_BASIS: usize = 10_000_000;

/// Arithmetic used for boundary ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    /// Fraction-free integer elimination on every strand.
    #[default]
    Exact,
    /// Ranks mod a word-sized prime. A strand with nonzero modular
    /// homology is recomputed exactly, so the answer stays exact: modular
    /// homology is never smaller than rational homology.
    Modular,
    /// Both, on every strand; disagreements are logged and the exact
    /// values are used.
    CrossCheck,
}

impl std::str::FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Backend::Exact),
            "modular" => Ok(Backend::Modular),
            "cross-check" => Ok(Backend::CrossCheck),
            other => Err(Error::Precondition(format!("unknown backend `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleOptions {
    pub backend: Backend,
    pub max_degrees: usize,
    pub max_basis: usize,
    pub parallel: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            backend: Backend::Exact,
            max_degrees: DEFAULT_MAX_DEGREES,
            max_basis: DEFAULT_MAX_BASIS,
            parallel: true,
        }
    }
}

/// Candidate multidegrees: `0` and all lcms of nonempty generator subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultidegreeSet {
    degrees: Vec<Monomial>,
    budget: usize,
}

impl MultidegreeSet {
    /// Degrees in ascending lexicographic order of exponent vectors.
    pub fn degrees(&self) -> &[Monomial] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.degrees.binary_search(m).is_ok()
    }
}

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

/// Closes `{0}` under lcm with generators, failing once the set would
/// exceed `budget` elements.
pub fn lcm_closure(ideal: &MonomialIdeal, budget: usize) -> Result<MultidegreeSet> {
    check_proper(ideal)?;
    let top = ideal.total_lcm();
    let bits = top
        .exponents()
        .iter()
        .map(|&e| 32 - e.leading_zeros())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut degrees = match Packing::new(ideal.n_vars(), bits) {
        Some(p) => closure_packed(ideal, budget, p)?,
        None => closure_vec(ideal, budget)?,
    };
    degrees.sort_unstable();
    Ok(MultidegreeSet { degrees, budget })
}

/// Exponent vectors packed into fixed-width fields of a `u128`.
#[derive(Clone, Copy)]
struct Packing {
    n: usize,
    bits: u32,
}

impl Packing {
    fn new(n: usize, bits: u32) -> Option<Self> {
        (n as u32 * bits <= 128).then_some(Packing { n, bits })
    }

    fn pack(&self, e: &[u32]) -> u128 {
        e.iter()
            .rev()
            .fold(0, |acc, &x| acc << self.bits | x as u128)
    }

    fn unpack(&self, mut k: u128) -> Monomial {
        let mask = (1u128 << self.bits) - 1;
        Monomial::new(
            (0..self.n)
                .map(|_| {
                    let x = (k & mask) as u32;
                    k >>= self.bits;
                    x
                })
                .collect(),
        )
    }

    fn lcm(&self, a: u128, b: u128) -> u128 {
        let mask = (1u128 << self.bits) - 1;
        (0..self.n).fold(0, |acc, j| {
            let s = j as u32 * self.bits;
            acc | ((a >> s) & mask).max((b >> s) & mask) << s
        })
    }
}

fn closure_packed(ideal: &MonomialIdeal, budget: usize, p: Packing) -> Result<Vec<Monomial>> {
    let gens: Vec<u128> = ideal
        .generators()
        .iter()
        .map(|g| p.pack(g.exponents()))
        .collect();
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(0);
    let mut frontier = vec![0u128];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for &g in &gens {
                let l = p.lcm(a, g);
                if l != a && seen.insert(l) {
                    if seen.len() > budget {
                        return Err(Error::BudgetExceeded {
                            what: "multidegrees",
                            limit: budget,
                        });
                    }
                    next.push(l);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().map(|k| p.unpack(k)).collect())
}

fn closure_vec(ideal: &MonomialIdeal, budget: usize) -> Result<Vec<Monomial>> {
    let gens: Vec<&[u32]> = ideal.generators().iter().map(Monomial::exponents).collect();
    let zero = vec![0; ideal.n_vars()];
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    let mut buf = vec![0u32; ideal.n_vars()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for g in gens.iter().filter(|g| !divides_slice(g, a)) {
                for ((b, x), y) in buf.iter_mut().zip(a).zip(*g) {
                    *b = (*x).max(*y);
                }
                if !seen.contains(buf.as_slice()) {
                    if seen.len() >= budget {
                        return Err(Error::BudgetExceeded {
                            what: "multidegrees",
                            limit: budget,
                        });
                    }
                    seen.insert(buf.clone());
                    next.push(buf.clone());
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().map(Monomial::new).collect())
}

/// Koszul strand basis of degree `a`, as bitmasks over `supp(a)` bucketed
/// by size. With `prune`, a strand that is a cone (some variable of
/// `supp(a)` avoids every minimal tight set) is reported empty, since it
/// is exact.
fn strand_basis(gens: &[Monomial], a: &[u32], prune: bool) -> Result<Vec<Vec<u64>>> {
    let supp: Vec<usize> = (0..a.len()).filter(|&j| a[j] > 0).collect();
    let s = supp.len();
    if s > 63 {
        return Err(Error::Precondition(format!(
            "multidegree support {s} exceeds 63 variables"
        )));
    }
    let mut tight: Vec<u64> = Vec::new();
    for g in gens
        .iter()
        .map(Monomial::exponents)
        .filter(|g| divides_slice(g, a))
    {
        let mask = supp
            .iter()
            .enumerate()
            .filter(|&(_, &j)| g[j] == a[j])
            .fold(0u64, |m, (k, _)| m | 1 << k);
        if mask == 0 {
            // x^a lies in I with room to spare: every x^{a - e_T} does too.
            return Ok(vec![Vec::new(); s + 1]);
        }
        tight.push(mask);
    }
    tight.sort_unstable_by_key(|m| m.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for m in tight {
        if !minimal.iter().any(|&k| (k & m) == k) {
            minimal.push(m);
        }
    }
    let full = if s == 0 { 0 } else { u64::MAX >> (64 - s) };
    if prune && minimal.iter().fold(0, |u, m| u | m) != full {
        return Ok(vec![Vec::new(); s + 1]);
    }
    let mut levels = vec![Vec::new(); s + 1];
    for t in 0..=full {
        if minimal.iter().all(|&m| m & t != 0) {
            levels[t.count_ones() as usize].push(t);
        }
    }
    Ok(levels)
}

/// Boundary `C_i -> C_{i-1}` as sparse rows, one per basis element of `C_i`.
fn boundary(upper: &[u64], lower: &[u64]) -> Vec<SparseRow> {
    upper
        .iter()
        .map(|&t| {
            let mut row: SparseRow = Vec::new();
            let mut rest = t;
            while rest != 0 {
                let k = rest.trailing_zeros();
                rest &= rest - 1;
                if let Ok(col) = lower.binary_search(&(t & !(1 << k))) {
                    let below = (t & ((1u64 << k) - 1)).count_ones();
                    row.push((col, if below.is_multiple_of(2) { 1 } else { -1 }));
                }
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect()
}

fn homology_from_ranks(levels: &[Vec<u64>], ranks: &[usize]) -> Vec<usize> {
    // ranks[i] = rank of C_i -> C_{i-1}; ranks[0] = 0.
    (0..levels.len())
        .map(|i| levels[i].len() - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0))
        .collect()
}

fn ranks_with(levels: &[Vec<u64>], rank: impl Fn(&[SparseRow]) -> usize) -> Vec<usize> {
    let mut ranks = vec![0; levels.len()];
    for i in 1..levels.len() {
        if !levels[i].is_empty() && !levels[i - 1].is_empty() {
            ranks[i] = rank(&boundary(&levels[i], &levels[i - 1]));
        }
    }
    ranks
}

struct StrandResult {
    homology: Vec<usize>,
    basis: usize,
    discrepancy: bool,
}

fn strand_homology(
    gens: &[Monomial],
    a: &[u32],
    backend: Backend,
    prune: bool,
) -> Result<StrandResult> {
    let levels = strand_basis(gens, a, prune)?;
    let basis = levels.iter().map(Vec::len).sum();
    if basis == 0 {
        return Ok(StrandResult {
            homology: vec![0; levels.len()],
            basis,
            discrepancy: false,
        });
    }
    let exact = || homology_from_ranks(&levels, &ranks_with(&levels, rank_exact));
    let modular = || {
        homology_from_ranks(
            &levels,
            &ranks_with(&levels, |m| rank_mod_p(m, DEFAULT_PRIME)),
        )
    };
    let (homology, discrepancy) = match backend {
        Backend::Exact => (exact(), false),
        Backend::Modular => {
            let hp = modular();
            if hp.iter().all(|&h| h == 0) {
                (hp, false)
            } else {
                let hq = exact();
                let differs = hq != hp;
                (hq, differs)
            }
        }
        Backend::CrossCheck => {
            let (hq, hp) = (exact(), modular());
            let differs = hq != hp;
            (hq, differs)
        }
    };
    if discrepancy {
        log::warn!(
            "strand {a:?}: homology differs between characteristic 0 and p = {DEFAULT_PRIME}"
        );
    }
    Ok(StrandResult {
        homology,
        basis,
        discrepancy,
    })
}

/// Homology dimensions `H_0, ..., H_{|supp a|}` of the degree-`a` Koszul
/// strand of `S/I`, computed exactly.
pub fn koszul_homology_dims(ideal: &MonomialIdeal, a: &Monomial) -> Result<Vec<usize>> {
    if a.n_vars() != ideal.n_vars() {
        return Err(Error::DimensionMismatch {
            left: ideal.n_vars(),
            right: a.n_vars(),
        });
    }
    Ok(strand_homology(ideal.generators(), a.exponents(), Backend::Exact, false)?.homology)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub n_vars: usize,
    pub num_gens: usize,
    pub depth: usize,
    pub pd: usize,
    /// `(i, number of multidegrees a with Tor_i(k, S/I)_a ≠ 0)`.
    pub betti_support: Vec<(usize, usize)>,
    /// Total Betti numbers `β_i(S/I)`.
    pub betti: Vec<usize>,
    pub degrees_examined: usize,
    pub basis_size: usize,
    pub elapsed_ms: u64,
    pub backend: Backend,
    pub modular_discrepancies: usize,
}

/// Depth of `S/I` through Auslander-Buchsbaum.
pub fn depth_oracle(ideal: &MonomialIdeal, opts: &OracleOptions) -> Result<DepthReport> {
    let start = Instant::now();
    let degrees = lcm_closure(ideal, opts.max_degrees)?;
    let gens = ideal.generators();
    let used = AtomicUsize::new(0);

    let run = |a: &Monomial| -> Result<StrandResult> {
        let r = strand_homology(gens, a.exponents(), opts.backend, true)?;
        if used.fetch_add(r.basis, Ordering::Relaxed) + r.basis > opts.max_basis {
            return Err(Error::BudgetExceeded {
                what: "strand basis elements",
                limit: opts.max_basis,
            });
        }
        Ok(r)
    };
    let strands: Vec<StrandResult> = if opts.parallel {
        degrees
            .degrees()
            .par_iter()
            .map(run)
            .collect::<Result<_>>()?
    } else {
        degrees.degrees().iter().map(run).collect::<Result<_>>()?
    };

    let n = ideal.n_vars();
    let mut betti = vec![0usize; n + 1];
    let mut support = vec![0usize; n + 1];
    for r in &strands {
        for (i, &h) in r.homology.iter().enumerate() {
            betti[i] += h;
            support[i] += usize::from(h > 0);
        }
    }
    let pd = betti
        .iter()
        .rposition(|&b| b > 0)
        .expect("H_0 in degree 0 is always nonzero");
    betti.truncate(pd + 1);
    Ok(DepthReport {
        weights: None,
        t: None,
        n_vars: n,
        num_gens: ideal.num_generators(),
        depth: n - pd,
        pd,
        betti_support: support[..=pd].iter().copied().enumerate().collect(),
        betti,
        degrees_examined: degrees.len(),
        basis_size: strands.iter().map(|r| r.basis).sum(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        backend: opts.backend,
        modular_discrepancies: strands.iter().filter(|r| r.discrepancy).count(),
    })
}

/// `depth(S/I^t)` for the weighted path ideal of `w`.
pub fn path_power_depth(w: &WeightVector, t: u32, opts: &OracleOptions) -> Result<DepthReport> {
    if t == 0 {
        return Err(Error::UnitIdeal);
    }
    let mut report = depth_oracle(&path_ideal(w).power(t)?, opts)?;
    report.weights = Some(w.as_slice().to_vec());
    report.t = Some(t);
    Ok(report)
}
