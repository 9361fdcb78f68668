//! Increasing weighted paths and the block calculus on their index set `Δ`.
//!
//! For a path with edge weights `w_1 <= ... <= w_n`, `Δ` collects the
//! indices `i <= n - 2` where two consecutive edges carry the same weight.
//! Everything else here (maximal blocks, gluing, the `a/b/c/k` counts, the
//! `A/B/C` partition and the depth function `d(Δ, t)`) is pure arithmetic on
//! that finite set.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

/// Edge weights `w_1, ..., w_n` of the path `x_1 - x_2 - ... - x_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightVector(Vec<u32>);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    /// `w_i <= w_{i+1}`; the convention used throughout.
    NonDecreasing,
    /// `w_i < w_{i+1}`.
    Strict,
}

impl WeightVector {
    pub fn new(w: Vec<u32>) -> Result<Self> {
        Self::with_monotonicity(w, Monotonicity::NonDecreasing)
    }

    pub fn with_monotonicity(w: Vec<u32>, mode: Monotonicity) -> Result<Self> {
        if let Some(pos) = w.iter().position(|&x| x == 0) {
            return Err(Error::InvalidWeights(format!(
                "w_{} = 0, weights must be positive",
                pos + 1
            )));
        }
        for (i, pair) in w.windows(2).enumerate() {
            let ok = match mode {
                Monotonicity::NonDecreasing => pair[0] <= pair[1],
                Monotonicity::Strict => pair[0] < pair[1],
            };
            if !ok {
                return Err(Error::InvalidWeights(format!(
                    "w_{} = {} and w_{} = {} violate {:?} order",
                    i + 1,
                    pair[0],
                    i + 2,
                    pair[1],
                    mode
                )));
            }
        }
        Ok(WeightVector(w))
    }

    /// Number of edges `n`.
    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Number of vertices / ring variables, `n + 1`.
    pub fn n_vars(&self) -> usize {
        self.0.len() + 1
    }

    /// `w_i`, 1-based.
    pub fn w(&self, i: usize) -> u32 {
        assert!(i >= 1 && i <= self.0.len(), "edge index {i} out of range");
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] < p[1])
    }

    /// Edge monomial `f_i = (x_i x_{i+1})^{w_i}`.
    pub fn edge_monomial(&self, i: usize) -> Result<Monomial> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.n(),
            });
        }
        let mut m = Monomial::one(self.n_vars());
        m.set_exponent(i, self.w(i))?;
        m.set_exponent(i + 1, self.w(i))?;
        Ok(m)
    }
}

impl TryFrom<Vec<u32>> for WeightVector {
    type Error = Error;
    fn try_from(w: Vec<u32>) -> Result<Self> {
        WeightVector::new(w)
    }
}

impl From<WeightVector> for Vec<u32> {
    fn from(w: WeightVector) -> Self {
        w.0
    }
}

impl FromStr for WeightVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return WeightVector::new(Vec::new());
        }
        let w = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| {
                    Error::InvalidWeights(format!("`{}` is not a positive integer", p.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        WeightVector::new(w)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Edge ideal `((x_i x_{i+1})^{w_i} : i ∈ [n])` in `n + 1` variables.
pub fn path_ideal(w: &WeightVector) -> MonomialIdeal {
    let gens = (1..=w.n()).map(|i| w.edge_monomial(i).expect("index in range"));
    MonomialIdeal::minimalize(w.n_vars(), gens).expect("same ambient ring")
}

/// Edge ideal of the induced subpath on `x_i, ..., x_j`, kept in the full
/// ring of `n + 1` variables. Empty when `i > j`.
pub fn induced_subpath_ideal(w: &WeightVector, i: usize, j: usize) -> Result<MonomialIdeal> {
    let n_vars = w.n_vars();
    for idx in [i, j] {
        if idx == 0 || idx > n_vars {
            return Err(Error::IndexOutOfRange {
                index: idx,
                lo: 1,
                hi: n_vars,
            });
        }
    }
    if i > j {
        return Ok(MonomialIdeal::zero(n_vars));
    }
    let gens = (i..j)
        .map(|k| w.edge_monomial(k))
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(n_vars, gens)
}

/// `Δ = { i ∈ [n-2] : w_i = w_{i+1} }`, ascending.
pub fn compute_delta(w: &WeightVector) -> Vec<usize> {
    let n = w.n();
    (1..=n.saturating_sub(2))
        .filter(|&i| w.w(i) == w.w(i + 1))
        .collect()
}

/// A maximal run `[start, end]` of consecutive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `|δ| mod 3`.
    pub fn block_type(&self) -> u8 {
        (self.len() % 3) as u8
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }

    /// Non-type-0 blocks separated by exactly one missing index.
    pub fn gluable_to(&self, next: &Block) -> bool {
        self.block_type() != 0 && next.block_type() != 0 && next.start == self.end + 2
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}:{}", parts.join(","), self.block_type())
    }
}

fn normalized(delta: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = delta.iter().copied().collect();
    set.into_iter().collect()
}

/// Maximal runs of consecutive integers of `delta`.
pub fn block_decomposition(delta: &[usize]) -> Vec<Block> {
    let mut blocks: Vec<Block> = Vec::new();
    for i in normalized(delta) {
        match blocks.last_mut() {
            Some(b) if b.end + 1 == i => b.end = i,
            _ => blocks.push(Block { start: i, end: i }),
        }
    }
    blocks
}

/// One part of the extended decomposition: a lone type-0 block or a maximal
/// chain of pairwise gluable type-1/type-2 blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedGroup {
    pub blocks: Vec<Block>,
    /// Number of type-1 blocks.
    pub type1: usize,
    /// Number of type-2 blocks.
    pub type2: usize,
    /// `type1 mod 2`.
    pub parity: usize,
}

impl ExtendedGroup {
    fn from_blocks(blocks: Vec<Block>) -> Self {
        let type1 = blocks.iter().filter(|b| b.block_type() == 1).count();
        let type2 = blocks.iter().filter(|b| b.block_type() == 2).count();
        ExtendedGroup {
            blocks,
            type1,
            type2,
            parity: type1 % 2,
        }
    }
}

pub fn extended_decomposition(blocks: &[Block]) -> Vec<ExtendedGroup> {
    let mut groups: Vec<Vec<Block>> = Vec::new();
    for (idx, b) in blocks.iter().enumerate() {
        let glued = idx > 0 && blocks[idx - 1].gluable_to(b);
        match groups.last_mut() {
            Some(g) if glued => g.push(*b),
            _ => groups.push(vec![*b]),
        }
    }
    groups.into_iter().map(ExtendedGroup::from_blocks).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BlockCounts {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub k: usize,
}

/// `a(Δ), b(Δ), c(Δ), k(Δ)` from the extended decomposition.
pub fn abc(delta: &[usize]) -> BlockCounts {
    let delta = normalized(delta);
    let groups = extended_decomposition(&block_decomposition(&delta));
    let a: usize = groups.iter().map(|g| g.parity).sum();
    let b: usize = groups
        .iter()
        .map(|g| g.type2 + (g.type1 - g.parity) / 2)
        .sum();
    let rest = delta.len() - a - 2 * b;
    assert_eq!(rest % 3, 0, "|Δ| - a - 2b must be divisible by 3");
    let c = rest / 3;
    BlockCounts {
        a,
        b,
        c,
        k: a + b + c,
    }
}

/// Piecewise depth function from the block counts of a set of size `size`.
pub fn d_from_counts(counts: &BlockCounts, size: usize, t: u32) -> Result<u32> {
    if t == 0 {
        return Err(Error::PowerOutOfRange {
            t,
            lo: 1,
            hi: u32::MAX,
        });
    }
    let t = t as i64;
    let (a, b, k) = (counts.a as i64, counts.b as i64, counts.k as i64);
    let size = size as i64;
    let d = if t <= a {
        k - t + 2
    } else if t <= a + 2 * b {
        k + 1 - (t + a - 1).div_euclid(2)
    } else if t <= size {
        k + 1 - (t + 2 * a + b - 1).div_euclid(3)
    } else {
        1
    };
    debug_assert!(d >= 1);
    Ok(d as u32)
}

/// `d(Δ, t)` for `t >= 1`.
pub fn d_function(delta: &[usize], t: u32) -> Result<u32> {
    let delta = normalized(delta);
    d_from_counts(&abc(&delta), delta.len(), t)
}

/// Predicted `depth(S / I^t)` for the increasing weighted path `w`.
pub fn depth_formula(w: &WeightVector, t: u32) -> Result<u32> {
    if t == 0 {
        return Err(Error::PowerOutOfRange {
            t,
            lo: 1,
            hi: u32::MAX,
        });
    }
    let delta = compute_delta(w);
    if w.n() <= 2 || delta.is_empty() {
        return Ok(1);
    }
    d_function(&delta, t)
}

/// The recursive partition `Δ = A ⊔ B ⊔ C`, each part ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AbcPartition {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(rename = "C")]
    pub c: Vec<usize>,
}

pub fn abc_partition(delta: &[usize]) -> AbcPartition {
    let delta = normalized(delta);
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    partition_into(&delta, &mut a, &mut b);
    let c = delta
        .iter()
        .copied()
        .filter(|i| !a.contains(i) && !b.contains(i))
        .collect();
    AbcPartition {
        a: a.into_iter().collect(),
        b: b.into_iter().collect(),
        c,
    }
}

fn partition_into(delta: &[usize], a: &mut BTreeSet<usize>, b: &mut BTreeSet<usize>) {
    let blocks = block_decomposition(delta);
    let Some(first) = blocks.first() else {
        return;
    };
    let own_b = |blk: &Block, b: &mut BTreeSet<usize>| {
        if blk.block_type() == 2 {
            b.insert(blk.end - 1);
            b.insert(blk.end);
        }
    };
    if blocks.len() == 1 {
        match first.block_type() {
            1 => {
                a.insert(first.end);
            }
            2 => own_b(first, b),
            _ => {}
        }
        return;
    }
    let rest: Vec<usize> = blocks[1..].iter().flat_map(Block::indices).collect();
    match first.block_type() {
        0 | 2 => {
            own_b(first, b);
            partition_into(&rest, a, b);
        }
        _ if !first.gluable_to(&blocks[1]) => {
            a.insert(first.end);
            partition_into(&rest, a, b);
        }
        _ => {
            let m2 = blocks[1].start;
            b.insert(first.end);
            b.insert(m2);
            let gamma: Vec<usize> = rest.into_iter().filter(|&i| i != m2).collect();
            partition_into(&gamma, a, b);
        }
    }
}

/// `desc(A) ++ desc(B) ++ desc(C)`.
pub fn mu_labeling(p: &AbcPartition) -> Vec<usize> {
    p.a.iter()
        .rev()
        .chain(p.b.iter().rev())
        .chain(p.c.iter().rev())
        .copied()
        .collect()
}

/// Everything derived from `Δ`, serializable as one JSON object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaProfile {
    pub delta: Vec<usize>,
    pub blocks: Vec<TypedBlock>,
    pub extended: Vec<ExtendedGroup>,
    #[serde(flatten)]
    pub counts: BlockCounts,
    #[serde(flatten)]
    pub partition: AbcPartition,
    pub mu: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedBlock {
    pub start: usize,
    pub end: usize,
    #[serde(rename = "type")]
    pub block_type: u8,
}

impl DeltaProfile {
    /// Builds the profile and cross-checks the two routes to `(a, b, c)`:
    /// the extended-block counts and the partition cardinalities.
    pub fn from_delta(delta: &[usize]) -> Self {
        let delta = normalized(delta);
        let blocks = block_decomposition(&delta);
        let extended = extended_decomposition(&blocks);
        let counts = abc(&delta);
        let partition = abc_partition(&delta);
        assert_eq!(partition.a.len(), counts.a, "|A| != a for Δ = {delta:?}");
        assert_eq!(
            partition.b.len(),
            2 * counts.b,
            "|B| != 2b for Δ = {delta:?}"
        );
        assert_eq!(
            partition.c.len(),
            3 * counts.c,
            "|C| != 3c for Δ = {delta:?}"
        );
        let mu = mu_labeling(&partition);
        let blocks = blocks
            .iter()
            .map(|b| TypedBlock {
                start: b.start,
                end: b.end,
                block_type: b.block_type(),
            })
            .collect();
        DeltaProfile {
            delta,
            blocks,
            extended,
            counts,
            partition,
            mu,
        }
    }

    pub fn of_weights(w: &WeightVector) -> Self {
        Self::from_delta(&compute_delta(w))
    }

    pub fn d(&self, t: u32) -> Result<u32> {
        d_from_counts(&self.counts, self.delta.len(), t)
    }
}

/// Outcome of the three `d`-inequalities for one `(Δ, t)`; `None` where an
/// inequality is outside its domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalityChecks {
    /// `d(Δ,t) <= min(d(Δ∖{min Δ}, t-1), d(Δ∖{min Δ}, t) + 1)`, needs `t >= 2`.
    pub drop_min: Option<bool>,
    /// `d(Δ,t) <= d(Δ ∩ [3,∞), t) + 1`, needs `1 ∈ Δ`.
    pub drop_below_3: Option<bool>,
    /// `d(Δ,t) <= d(Δ ∩ [4,∞), t) + 1`, needs `1 ∈ Δ`.
    pub drop_below_4: Option<bool>,
}

impl InequalityChecks {
    pub fn all_hold(&self) -> bool {
        [self.drop_min, self.drop_below_3, self.drop_below_4]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

/// Evaluates the three `d`-inequalities. `d(·, 0)` is never defined, so
/// the first one is skipped at `t = 1`.
pub fn d_inequality_lemmas(delta: &[usize], t: u32) -> Result<InequalityChecks> {
    let delta = normalized(delta);
    if delta.is_empty() {
        return Err(Error::Precondition("Δ must be nonempty".into()));
    }
    let d = d_function(&delta, t)?;
    let drop_min = if t >= 2 {
        let gamma = &delta[1..];
        Some(d <= d_function(gamma, t - 1)?.min(d_function(gamma, t)? + 1))
    } else {
        None
    };
    let (drop_below_3, drop_below_4) = if delta[0] == 1 {
        let g2: Vec<usize> = delta.iter().copied().filter(|&i| i >= 3).collect();
        let g3: Vec<usize> = delta.iter().copied().filter(|&i| i >= 4).collect();
        (
            Some(d <= d_function(&g2, t)? + 1),
            Some(d <= d_function(&g3, t)? + 1),
        )
    } else {
        (None, None)
    };
    Ok(InequalityChecks {
        drop_min,
        drop_below_3,
        drop_below_4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE_WEIGHTS: [u32; 11] = [1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5];

    fn wv(w: &[u32]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    #[test]
    fn weight_validation() {
        assert!(WeightVector::new(vec![1, 2, 1]).is_err());
        assert!(WeightVector::new(vec![0, 1]).is_err());
        assert!(WeightVector::with_monotonicity(vec![1, 1, 2], Monotonicity::Strict).is_err());
        assert!(WeightVector::with_monotonicity(vec![1, 2, 3], Monotonicity::Strict).is_ok());
        assert_eq!("1, 1,2".parse::<WeightVector>().unwrap(), wv(&[1, 1, 2]));
        assert!("1,x".parse::<WeightVector>().is_err());
        assert_eq!(wv(&[1, 1, 2]).to_string(), "1,1,2");
    }

    #[test]
    fn path_ideals() {
        assert_eq!(
            path_ideal(&wv(&[1, 1, 2])).to_string(),
            "(x1*x2, x2*x3, x3^2*x4^2)"
        );
        assert_eq!(path_ideal(&wv(&[2])).to_string(), "(x1^2*x2^2)");
        assert!(path_ideal(&wv(&[])).is_zero());
        let big = path_ideal(&wv(&EXAMPLE_WEIGHTS));
        assert_eq!(big.num_generators(), 11);
        assert_eq!(big.n_vars(), 12);
        let g = Monomial::parse("x6^3*x7^3", 12).unwrap();
        assert!(big.generators().contains(&g));
    }

    #[test]
    fn induced_subpaths() {
        let w = wv(&[1, 1, 2, 2]);
        assert_eq!(
            induced_subpath_ideal(&w, 4, 5).unwrap().to_string(),
            "(x4^2*x5^2)"
        );
        assert!(induced_subpath_ideal(&w, 2, 2).unwrap().is_zero());
        assert!(induced_subpath_ideal(&w, 3, 2).unwrap().is_zero());
        assert!(induced_subpath_ideal(&w, 0, 2).is_err());
        assert!(induced_subpath_ideal(&w, 1, 6).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(compute_delta(&wv(&EXAMPLE_WEIGHTS)), vec![1, 3, 4, 6, 7, 9]);
        assert!(compute_delta(&wv(&[1, 2, 3, 4])).is_empty());
        assert!(compute_delta(&wv(&[1, 1])).is_empty());
        // w_{n-1} = w_n never enters Δ
        assert_eq!(compute_delta(&wv(&[1, 2, 2])), Vec::<usize>::new());
        assert_eq!(compute_delta(&wv(&[1, 1, 2, 2])), vec![1]);
    }

    #[test]
    fn blocks_and_gluing() {
        let blocks = block_decomposition(&[1, 3, 4, 6, 7, 9]);
        let shown: Vec<String> = blocks.iter().map(Block::to_string).collect();
        assert_eq!(shown, ["{1}:1", "{3,4}:2", "{6,7}:2", "{9}:1"]);
        let groups = extended_decomposition(&blocks);
        assert_eq!(groups.len(), 1);
        assert_eq!(
            (groups[0].type1, groups[0].type2, groups[0].parity),
            (2, 2, 0)
        );

        let b = block_decomposition(&[2, 3, 4]);
        assert_eq!(b, vec![Block { start: 2, end: 4 }]);
        assert_eq!(b[0].block_type(), 0);
        let g = extended_decomposition(&b);
        assert_eq!((g.len(), g[0].type1, g[0].type2), (1, 0, 0));

        assert_eq!(block_decomposition(&[5])[0].block_type(), 1);
        assert!(block_decomposition(&[]).is_empty());

        let far = extended_decomposition(&block_decomposition(&[1, 4]));
        assert_eq!(far.len(), 2);
        assert!(far
            .iter()
            .all(|g| g.type1 == 1 && g.type2 == 0 && g.parity == 1));
    }

    #[test]
    fn counts_examples() {
        assert_eq!(
            abc(&[1, 3, 4, 6, 7, 9]),
            BlockCounts {
                a: 0,
                b: 3,
                c: 0,
                k: 3
            }
        );
        assert_eq!(
            abc(&[1, 2, 3]),
            BlockCounts {
                a: 0,
                b: 0,
                c: 1,
                k: 1
            }
        );
        assert_eq!(
            abc(&[1, 3, 4, 6, 8, 9, 11, 12, 13, 15]),
            BlockCounts {
                a: 1,
                b: 3,
                c: 1,
                k: 5
            }
        );
        assert_eq!(abc(&[]), BlockCounts::default());
    }

    #[test]
    fn d_examples() {
        let seq: Vec<u32> = (1..=7)
            .map(|t| d_function(&[1, 3, 4, 6, 7, 9], t).unwrap())
            .collect();
        assert_eq!(seq, vec![4, 4, 3, 3, 2, 2, 1]);
        assert_eq!(d_function(&[], 5).unwrap(), 1);
        let big = [1, 3, 4, 6, 8, 9, 11, 12, 13, 15];
        assert_eq!(d_function(&big, 1).unwrap(), 6);
        assert_eq!(d_function(&big, 8).unwrap(), 2);
        assert_eq!(d_function(&big, 11).unwrap(), 1);
        assert!(d_function(&big, 0).is_err());
    }

    #[test]
    fn depth_formula_examples() {
        assert_eq!(depth_formula(&wv(&EXAMPLE_WEIGHTS), 3).unwrap(), 3);
        assert_eq!(depth_formula(&wv(&[1, 2, 4]), 5).unwrap(), 1);
        assert_eq!(depth_formula(&wv(&[1, 1, 2]), 1).unwrap(), 2);
        assert_eq!(depth_formula(&wv(&[3, 3]), 1).unwrap(), 1);
    }

    #[test]
    fn partition_examples() {
        let p = abc_partition(&[1, 3, 4, 6, 8, 9, 11, 12, 13, 15]);
        assert_eq!(p.a, vec![15]);
        assert_eq!(p.b, vec![1, 3, 4, 6, 8, 9]);
        assert_eq!(p.c, vec![11, 12, 13]);
        assert_eq!(mu_labeling(&p), vec![15, 9, 8, 6, 4, 3, 1, 13, 12, 11]);

        let p = abc_partition(&[2, 3]);
        assert_eq!((p.a.len(), p.b.clone(), p.c.len()), (0, vec![2, 3], 0));

        let p = abc_partition(&[1, 3, 4, 5, 7, 9]);
        assert_eq!(
            (p.a.clone(), p.b.clone(), p.c.clone()),
            (vec![1], vec![7, 9], vec![3, 4, 5])
        );
        assert_eq!(mu_labeling(&p), vec![1, 9, 7, 5, 4, 3]);

        let p = AbcPartition {
            a: vec![],
            b: vec![],
            c: vec![1, 2, 3],
        };
        assert_eq!(mu_labeling(&p), vec![3, 2, 1]);
    }

    #[test]
    fn partition_of_worked_weight_examples() {
        let p = abc_partition(&compute_delta(&wv(&[1, 1, 2, 2, 2, 3])));
        assert_eq!((p.a, p.b), (vec![4], vec![1, 3]));
        let p = abc_partition(&compute_delta(&wv(&[1, 1, 1, 1, 3, 3, 3, 4])));
        assert_eq!((p.a, p.b, p.c), (vec![], vec![5, 6], vec![1, 2, 3]));
        let p = abc_partition(&compute_delta(&wv(&[1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3])));
        assert_eq!(
            (p.a, p.b, p.c),
            (vec![], vec![4, 6], vec![1, 2, 3, 7, 8, 9])
        );
    }

    #[test]
    fn inequality_examples() {
        let c = d_inequality_lemmas(&[1, 2], 2).unwrap();
        assert_eq!(c.drop_min, Some(true));
        let c = d_inequality_lemmas(&[5], 1).unwrap();
        assert_eq!(c.drop_min, None);
        assert_eq!(c.drop_below_3, None);
        assert!(d_inequality_lemmas(&[], 2).is_err());
    }

    #[test]
    fn profile_json_fields() {
        let p = DeltaProfile::from_delta(&[1, 3, 4, 6, 7, 9]);
        let v = serde_json::to_value(&p).unwrap();
        for key in [
            "delta", "blocks", "extended", "a", "b", "c", "k", "A", "B", "C", "mu",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["blocks"][1]["type"], 2);
        assert_eq!(p.d(1).unwrap(), 4);
    }
}
