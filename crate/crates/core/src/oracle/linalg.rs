//! Ranks of sparse integer matrices.
//!
//! Rows are sorted `(column, value)` lists. Exact ranks use fraction-free
//! elimination on `i64` with content normalization, restarting on `BigInt`
//! when a product overflows. Modular ranks work over `Z/p`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub type SparseRow = Vec<(usize, i64)>;

/// Large word-sized prime used by the modular backend.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn mul(&self, x: &Self) -> Option<Self>;
    fn sub(&self, x: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        self.checked_mul(*x)
    }
    fn sub(&self, x: &Self) -> Option<Self> {
        self.checked_sub(*x)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude() == &num_bigint::BigUint::from(1u8)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        Some(self * x)
    }
    fn sub(&self, x: &Self) -> Option<Self> {
        Some(self - x)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// `a*row - b*pivot`, merged over sorted columns, with zeros dropped.
fn combine<S: Scalar>(
    a: &S,
    row: &[(usize, S)],
    b: &S,
    pivot: &[(usize, S)],
) -> Option<Vec<(usize, S)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (col, v) = match (row.get(i), pivot.get(j)) {
            (Some(r), Some(p)) if r.0 == p.0 => {
                i += 1;
                j += 1;
                (r.0, a.mul(&r.1)?.sub(&b.mul(&p.1)?)?)
            }
            (Some(r), Some(p)) if r.0 < p.0 => {
                i += 1;
                (r.0, a.mul(&r.1)?)
            }
            (Some(r), None) => {
                i += 1;
                (r.0, a.mul(&r.1)?)
            }
            (_, Some(p)) => {
                j += 1;
                (p.0, b.mul(&p.1)?.neg()?)
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn normalize<S: Scalar>(row: &mut [(usize, S)]) {
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if !g.is_unit() {
        for (_, v) in row.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// Row echelon form keyed by leading column; `None` on overflow.
fn echelon_rank<S: Scalar>(rows: impl IntoIterator<Item = Vec<(usize, S)>>) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, S)>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some(&(lead, _)) = row.first() else { break };
            let Some(p) = pivots.get(&lead) else {
                normalize(&mut row);
                pivots.insert(lead, row);
                break;
            };
            let g = row[0].1.gcd(&p[0].1);
            let a = p[0].1.div_exact(&g);
            let b = row[0].1.div_exact(&g);
            row = combine(&a, &row, &b, p)?;
            if !row.is_empty() {
                normalize(&mut row);
            }
        }
    }
    Some(pivots.len())
}

/// Rank over the rationals.
pub fn rank_exact(rows: &[SparseRow]) -> usize {
    if let Some(r) = echelon_rank(rows.iter().cloned()) {
        return r;
    }
    log::debug!("i64 elimination overflowed; retrying with big integers");
    echelon_rank(rows.iter().map(|r| {
        r.iter()
            .map(|&(c, v)| (c, BigInt::from(v)))
            .collect::<Vec<_>>()
    }))
    .expect("big integer elimination cannot overflow")
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `Z/p`, `p` prime below `2^32`.
pub fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    assert!(
        p > 2 && p < (1 << 32),
        "modulus must be an odd prime below 2^32"
    );
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for source in rows {
        let mut row: Vec<(usize, u64)> = source
            .iter()
            .map(|&(c, v)| (c, reduce(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        loop {
            let Some(&(lead, lv)) = row.first() else {
                break;
            };
            let Some(piv) = pivots.get(&lead) else {
                let inv = inverse_mod(lv, p);
                row.iter_mut().for_each(|(_, v)| *v = *v * inv % p);
                pivots.insert(lead, row);
                break;
            };
            // Pivot rows are monic, so subtract lv * pivot.
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                let (col, v) = match (row.get(i), piv.get(j)) {
                    (Some(r), Some(q)) if r.0 == q.0 => {
                        i += 1;
                        j += 1;
                        (r.0, (r.1 + p - lv * q.1 % p) % p)
                    }
                    (Some(r), Some(q)) if r.0 < q.0 => {
                        i += 1;
                        (r.0, r.1)
                    }
                    (Some(r), None) => {
                        i += 1;
                        (r.0, r.1)
                    }
                    (_, Some(q)) => {
                        j += 1;
                        (q.0, (p - lv * q.1 % p) % p)
                    }
                    (None, None) => unreachable!(),
                };
                if v != 0 {
                    out.push((col, v));
                }
            }
            row = out;
        }
    }
    pivots.len()
}
