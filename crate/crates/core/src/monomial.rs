//! Monomials and monomial ideals in `k[x_1, ..., x_N]`.
//!
//! Variables are 1-based in every textual and user-facing position
//! (`x1` is the first variable); the exponent vector itself is stored 0-based.
//! Ideals always carry their minimal generating set in descending lexicographic
//! order of exponent vectors, so structural equality is ideal equality.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

fn same_ambient(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left: a, right: b })
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    /// The identity monomial in `n_vars` variables.
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    /// `x_j^e` with `j` 1-based.
    pub fn var_power(n_vars: usize, j: usize, e: u32) -> Result<Self> {
        let mut m = Self::one(n_vars);
        m.set_exponent(j, e)?;
        Ok(m)
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        assert!(j >= 1 && j <= self.0.len(), "variable x{j} out of range");
        self.0[j - 1]
    }

    pub fn set_exponent(&mut self, j: usize, e: u32) -> Result<()> {
        if j == 0 || j > self.0.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 1,
                hi: self.0.len(),
            });
        }
        self.0[j - 1] = e;
        Ok(())
    }

    /// Multiplies in `x_j^e` (1-based `j`).
    pub fn mul_var(&mut self, j: usize, e: u32) -> Result<()> {
        if j == 0 || j > self.0.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                lo: 1,
                hi: self.0.len(),
            });
        }
        self.0[j - 1] = self.0[j - 1]
            .checked_add(e)
            .ok_or(Error::ExponentOverflow)?;
        Ok(())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Variables (1-based) with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j + 1)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Replaces every positive exponent by 1.
    pub fn radical(&self) -> Monomial {
        Monomial(self.0.iter().map(|&e| e.min(1)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        same_ambient(self.n_vars(), other.n_vars())?;
        Ok(divides_slice(&self.0, &other.0))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        same_ambient(self.n_vars(), other.n_vars())?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        ))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        same_ambient(self.n_vars(), other.n_vars())?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        same_ambient(self.n_vars(), other.n_vars())?;
        let exps = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial(exps))
    }

    pub fn pow(&self, t: u32) -> Result<Monomial> {
        let exps = self
            .0
            .iter()
            .map(|a| a.checked_mul(t).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial(exps))
    }

    /// `self / gcd(self, f)`, the monomial generator of `(self) : f`.
    pub fn quotient_by_gcd(&self, f: &Monomial) -> Result<Monomial> {
        same_ambient(self.n_vars(), f.n_vars())?;
        Ok(Monomial(
            self.0
                .iter()
                .zip(&f.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        ))
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div(&self, divisor: &Monomial) -> Result<Option<Monomial>> {
        if !divisor.divides(self)? {
            return Ok(None);
        }
        Ok(Some(self.quotient_by_gcd(divisor)?))
    }

    /// Parses the textual form (`x1^2*x3`, `1`) in an ambient ring of
    /// `n_vars` variables.
    pub fn parse(s: &str, n_vars: usize) -> Result<Monomial> {
        let m: Monomial = s.parse()?;
        if m.n_vars() > n_vars {
            return Err(Error::DimensionMismatch {
                left: m.n_vars(),
                right: n_vars,
            });
        }
        let mut exps = m.0;
        exps.resize(n_vars, 0);
        Ok(Monomial(exps))
    }
}

pub(crate) fn divides_slice(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "x{}^{}", j + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Parses the textual form; the ambient dimension is the largest variable
/// index that occurs (use [`Monomial::parse`] to pad to a given ring).
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseMonomial(s.to_string());
        if s == "1" {
            return Ok(Monomial(Vec::new()));
        }
        let mut exps: Vec<u32> = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let j: usize = var.parse().map_err(|_| bad())?;
            if j == 0 {
                return Err(bad());
            }
            if exps.len() < j {
                exps.resize(j, 0);
            }
            exps[j - 1] = exps[j - 1]
                .checked_add(exp)
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial(exps))
    }
}

/// A monomial ideal, held as its minimal generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// identity monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n_vars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n_vars: usize) -> Self {
        MonomialIdeal {
            n_vars,
            generators: Vec::new(),
        }
    }

    pub fn unit(n_vars: usize) -> Self {
        MonomialIdeal {
            n_vars,
            generators: vec![Monomial::one(n_vars)],
        }
    }

    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn minimalize<I>(n_vars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = Vec::new();
        for g in gens {
            same_ambient(n_vars, g.n_vars())?;
            all.push(g);
        }
        Ok(MonomialIdeal {
            n_vars,
            generators: minimal_antichain(all),
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    /// Variables (1-based) dividing some generator.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n_vars)
            .filter(|&j| self.generators.iter().any(|g| g.exponent(j) > 0))
            .collect()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        same_ambient(self.n_vars, m.n_vars())?;
        Ok(self
            .generators
            .iter()
            .any(|g| divides_slice(g.exponents(), m.exponents())))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        same_ambient(self.n_vars, other.n_vars)?;
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ambient(self.n_vars, other.n_vars)?;
        let gens = self.generators.iter().chain(&other.generators).cloned();
        MonomialIdeal::minimalize(self.n_vars, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ambient(self.n_vars, other.n_vars)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b)?);
            }
        }
        MonomialIdeal::minimalize(self.n_vars, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        same_ambient(self.n_vars, other.n_vars)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b)?);
            }
        }
        MonomialIdeal::minimalize(self.n_vars, gens)
    }

    /// `(self : f)`, generated by `g / gcd(g, f)` over the generators `g`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        same_ambient(self.n_vars, f.n_vars())?;
        let gens = self
            .generators
            .iter()
            .map(|g| g.quotient_by_gcd(f))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(self.n_vars, gens)
    }

    /// `self^t`; `t = 0` gives the unit ideal.
    ///
    /// Built as iterated products, minimalizing after every step; a minimal
    /// generator of `I^t` is always a product of a minimal generator of
    /// `I^{t-1}` with one of `I`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n_vars);
        for _ in 0..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Replaces each generator by its radical and re-minimalizes.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            n_vars: self.n_vars,
            generators: minimal_antichain(self.generators.iter().map(Monomial::radical).collect()),
        }
    }

    /// Lcm of all generators (the identity for the zero ideal).
    pub fn total_lcm(&self) -> Monomial {
        let mut acc = vec![0u32; self.n_vars];
        for g in &self.generators {
            for (a, &e) in acc.iter_mut().zip(g.exponents()) {
                *a = (*a).max(e);
            }
        }
        Monomial(acc)
    }

    /// Same generators viewed in a ring with `extra` more variables appended.
    pub fn extend_ambient(&self, extra: usize) -> MonomialIdeal {
        let n_vars = self.n_vars + extra;
        let generators = self
            .generators
            .iter()
            .map(|g| {
                let mut e = g.exponents().to_vec();
                e.resize(n_vars, 0);
                Monomial(e)
            })
            .collect();
        MonomialIdeal { n_vars, generators }
    }
}

/// Antichain of `gens` under divisibility, in descending lexicographic order
/// of exponent vectors (so `x1*x2` is listed before `x2*x3`).
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // Any divisor of g has degree <= deg g, so scanning by degree only
    // needs to compare against already-kept generators.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept
            .iter()
            .any(|k| divides_slice(k.exponents(), g.exponents()))
        {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
