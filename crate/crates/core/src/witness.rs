//! Witness monomials for the depth upper bound and the closed-form colon
//! ideals they produce.
//!
//! For `2 <= t <= |Δ|+1` the witness `g_t` multiplies the modified edge
//! monomials `f̃_{μ_i+1}` of the first `t-1` labels; `ρ_t` pads `g_t` with
//! extra variable powers `x_j^{η_j}`. Each colon `(I^t : g_t)` and
//! `(I^t : ρ_t)` has a closed form assembled from per-factor ideals
//! `U, V, E, O`; every closed form here is checked against the brute-force
//! colon in the tests.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::path::{compute_delta, induced_subpath_ideal, path_ideal, DeltaProfile, WeightVector};

/// `f̃_i`: `f_i` when `w_i = w_{i+1}`, otherwise `f_i` times `x_j^{w_j - 1}`
/// along the strictly increasing run `w_i < w_{i+1} < ... < w_ℓ`.
pub fn modified_edge_monomial(w: &WeightVector, i: usize) -> Result<Monomial> {
    let n = w.n();
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: n.saturating_sub(1),
        });
    }
    let mut m = w.edge_monomial(i)?;
    if w.w(i) != w.w(i + 1) {
        let mut end = i + 1;
        while end < n && w.w(end) < w.w(end + 1) {
            end += 1;
        }
        for j in i + 1..=end {
            m.mul_var(j, w.w(j) - 1)?;
        }
    }
    Ok(m)
}

/// Last index of the support interval of `f̃_i`.
fn modified_edge_end(w: &WeightVector, i: usize) -> usize {
    let mut end = i + 1;
    if w.w(i) != w.w(i + 1) {
        while end < w.n() && w.w(end) < w.w(end + 1) {
            end += 1;
        }
    }
    end
}

/// One factor `D` of `g_t`: the modified edge monomials whose supports
/// merge into one maximal block of `supp(g_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    /// Indices `i` of the `f̃_i` in this factor, ascending.
    pub edges: Vec<usize>,
    pub monomial: Monomial,
    /// `D̄ = ∏ f_i` over the same edges.
    pub plain: Monomial,
    pub min: usize,
    pub max: usize,
    /// `supp(D / D̄)`.
    pub esupp: Vec<usize>,
}

/// `g_t` with its factorization into maximal-block factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GProduct {
    pub t: u32,
    /// `μ_i + 1` for `i < t`, in label order.
    pub edges: Vec<usize>,
    pub g: Monomial,
    pub factors: Vec<Factor>,
}

impl GProduct {
    /// `esupp(g_t)`, the union of the factors' extra supports.
    pub fn esupp(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|f| f.esupp.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

fn check_witness_range(delta_len: usize, t: u32) -> Result<()> {
    let hi = delta_len as u32 + 1;
    if t < 2 || t > hi {
        return Err(Error::PowerOutOfRange { t, lo: 2, hi });
    }
    Ok(())
}

pub fn g_monomial(w: &WeightVector, t: u32) -> Result<GProduct> {
    let profile = DeltaProfile::of_weights(w);
    check_witness_range(profile.delta.len(), t)?;
    let n_vars = w.n_vars();
    let edges: Vec<usize> = profile.mu[..(t - 1) as usize]
        .iter()
        .map(|m| m + 1)
        .collect();

    let mut g = Monomial::one(n_vars);
    for &i in &edges {
        g = g.mul(&modified_edge_monomial(w, i)?)?;
    }

    // Supports are intervals [i, end(i)]; merge overlapping or adjacent ones.
    let mut sorted = edges.clone();
    sorted.sort_unstable();
    let mut groups: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for i in sorted {
        let end = modified_edge_end(w, i);
        match groups.last_mut() {
            Some((_, hi, members)) if i <= *hi + 1 => {
                *hi = (*hi).max(end);
                members.push(i);
            }
            _ => groups.push((i, end, vec![i])),
        }
    }

    let mut factors = Vec::with_capacity(groups.len());
    for (min, max, members) in groups {
        let mut monomial = Monomial::one(n_vars);
        let mut plain = Monomial::one(n_vars);
        for &i in &members {
            monomial = monomial.mul(&modified_edge_monomial(w, i)?)?;
            plain = plain.mul(&w.edge_monomial(i)?)?;
        }
        let esupp = monomial.quotient_by_gcd(&plain)?.support();
        factors.push(Factor {
            edges: members,
            monomial,
            plain,
            min,
            max,
            esupp,
        });
    }

    let support = g.support();
    let blocks = crate::path::block_decomposition(&support);
    assert_eq!(
        blocks.len(),
        factors.len(),
        "factor supports must be the maximal blocks of supp(g_t)"
    );
    for (b, f) in blocks.iter().zip(&factors) {
        assert_eq!((b.start, b.end), (f.min, f.max));
    }

    Ok(GProduct {
        t,
        edges,
        g,
        factors,
    })
}

/// The ideals `U, V, E, O` of one factor, with their squarefree shadows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorIdeals {
    pub u: MonomialIdeal,
    pub v: MonomialIdeal,
    pub e: MonomialIdeal,
    pub o: MonomialIdeal,
}

impl FactorIdeals {
    /// `E + O + (U ∩ V)`.
    pub fn gamma(&self) -> Result<MonomialIdeal> {
        self.e.sum(&self.o)?.sum(&self.u.intersect(&self.v)?)
    }

    /// `E' + O' + (U' ∩ V')`, each ideal replaced by the variables of its support.
    pub fn upsilon(&self) -> Result<MonomialIdeal> {
        let (u, v, e, o) = (
            self.u.radical(),
            self.v.radical(),
            self.e.radical(),
            self.o.radical(),
        );
        e.sum(&o)?.sum(&u.intersect(&v)?)
    }
}

fn max_with_parity(set: &[usize], odd: bool) -> Option<usize> {
    set.iter().copied().filter(|j| (j % 2 == 1) == odd).max()
}

/// Builds `U(D), V(D), E(D), O(D)` for a factor `D` of `g_t`.
pub fn uveo(w: &WeightVector, d: &Factor) -> Result<FactorIdeals> {
    let n = w.n();
    let n_vars = w.n_vars();
    let lo = d.min - 1;
    let hi = d.max + 1;
    let exponent = |j: usize| -> u32 {
        if d.esupp.contains(&j) {
            1
        } else if j <= n {
            w.w(j)
        } else {
            w.w(n)
        }
    };
    let pure = |j: usize| Monomial::var_power(n_vars, j, exponent(j));
    let ideal_of = |js: Vec<usize>| -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(
            n_vars,
            js.into_iter().map(pure).collect::<Result<Vec<_>>>()?,
        )
    };

    let odd_top = max_with_parity(&d.esupp, true).unwrap_or(1);
    let even_top = max_with_parity(&d.esupp, false).unwrap_or(0);

    let u = ideal_of((lo..=hi).filter(|j| j % 2 == 1).collect())?;
    let v = ideal_of((lo..=hi).filter(|j| j % 2 == 0).collect())?;
    let e = ideal_of((lo..odd_top).filter(|j| j % 2 == 0).collect())?;
    let o = ideal_of((lo..even_top).filter(|j| j % 2 == 1).collect())?;
    Ok(FactorIdeals { u, v, e, o })
}

/// Closed form of `(I^t : g_t)`: `I + Σ_i (E(D_i) + O(D_i) + U(D_i) ∩ V(D_i))`.
pub fn colon_by_g(w: &WeightVector, t: u32) -> Result<MonomialIdeal> {
    let gp = g_monomial(w, t)?;
    let mut acc = path_ideal(w);
    for f in &gp.factors {
        acc = acc.sum(&uveo(w, f)?.gamma()?)?;
    }
    Ok(acc)
}

/// `g_t`, its factors, `Λ`, `η` and `ρ_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSet {
    pub weights: WeightVector,
    pub t: u32,
    pub g: Monomial,
    pub factors: Vec<Factor>,
    /// `[n+1] ∖ esupp(g_t)`.
    pub lambda: Vec<usize>,
    pub eta: BTreeMap<usize, u32>,
    pub rho: Monomial,
}

/// The `B`-pairs `(b_{2i-1}, b_{2i})` whose edge `f̃_{b_{2i}+1}` does not
/// divide `g_t`.
fn open_b_pairs(
    w: &WeightVector,
    profile: &DeltaProfile,
    g: &Monomial,
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for pair in profile.partition.b.chunks(2) {
        let (lo, hi) = (pair[0], pair[1]);
        if !modified_edge_monomial(w, hi + 1)?.divides(g)? {
            out.push((lo, hi));
        }
    }
    Ok(out)
}

pub fn eta_and_rho(w: &WeightVector, t: u32) -> Result<WitnessSet> {
    let profile = DeltaProfile::of_weights(w);
    let gp = g_monomial(w, t)?;
    let n = w.n();
    let esupp = gp.esupp();
    let lambda: Vec<usize> = (1..=n + 1).filter(|j| !esupp.contains(j)).collect();
    let open = open_b_pairs(w, &profile, &gp.g)?;

    let mut eta = BTreeMap::new();
    for &j in &lambda {
        let value = if j == n + 1 {
            w.w(j - 1) - 1
        } else if open.iter().any(|&(b, _)| j == b + 1) {
            w.w(j - 1)
        } else if open.iter().any(|&(b, _)| j == b + 2) {
            w.w(j - 2) - 1
        } else {
            w.w(j) - 1
        };
        eta.insert(j, value);
    }

    let mut rho = gp.g.clone();
    for (&j, &e) in &eta {
        rho.mul_var(j, e)?;
    }
    Ok(WitnessSet {
        weights: w.clone(),
        t,
        g: gp.g,
        factors: gp.factors,
        lambda,
        eta,
        rho,
    })
}

/// Closed form of `(I^t : ρ_t)` with its summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoColon {
    pub witness: WitnessSet,
    /// Squarefree path ideal `(x_j x_{j+1} : j ∈ [n])`.
    pub path: MonomialIdeal,
    pub phi: MonomialIdeal,
    pub psi: MonomialIdeal,
    pub upsilon: Vec<MonomialIdeal>,
    pub predicted: MonomialIdeal,
}

/// `I(P_{n+1}) + Φ_t + Ψ + Σ_i Υ_i`.
///
/// `Φ_t` holds `x_{b}, x_{b+2}` for every open pair `(b, b')`. `Ψ` holds
/// `x_j` for `j ∈ [n-1]` with `w_j < w_{j+1}`, except `j = b + 1` for an
/// open pair `(b, b')`; the exemption applies only to open pairs, exactly
/// where `η_{b+1}` is raised to `w_b`.
pub fn colon_by_rho(w: &WeightVector, t: u32) -> Result<RhoColon> {
    let profile = DeltaProfile::of_weights(w);
    let witness = eta_and_rho(w, t)?;
    let n = w.n();
    let n_vars = w.n_vars();
    let open = open_b_pairs(w, &profile, &witness.g)?;
    let var = |j: usize| Monomial::var_power(n_vars, j, 1);

    let path = MonomialIdeal::minimalize(
        n_vars,
        (1..=n)
            .map(|j| var(j)?.mul(&var(j + 1)?))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let phi = MonomialIdeal::minimalize(
        n_vars,
        open.iter()
            .flat_map(|&(b, _)| [var(b), var(b + 2)])
            .collect::<Result<Vec<_>>>()?,
    )?;
    let psi = MonomialIdeal::minimalize(
        n_vars,
        (1..n)
            .filter(|&j| w.w(j) < w.w(j + 1) && !open.iter().any(|&(b, _)| j == b + 1))
            .map(var)
            .collect::<Result<Vec<_>>>()?,
    )?;
    let upsilon = witness
        .factors
        .iter()
        .map(|f| uveo(w, f)?.upsilon())
        .collect::<Result<Vec<_>>>()?;

    let mut predicted = path.sum(&phi)?.sum(&psi)?;
    for u in &upsilon {
        predicted = predicted.sum(u)?;
    }
    Ok(RhoColon {
        witness,
        path,
        phi,
        psi,
        upsilon,
        predicted,
    })
}

/// Which end of the path supplies the leaf edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LeafEdge {
    /// `e_1 = x_1 x_2`.
    First,
    /// `e_n = x_n x_{n+1}`.
    Last,
}

/// `(I^t : f_e) == I^{t-1}` for a leaf edge `e` whose weight is minimal
/// among the edges at its inner vertex.
pub fn leaf_colon_identity(w: &WeightVector, t: u32, leaf: LeafEdge) -> Result<bool> {
    let n = w.n();
    if n == 0 {
        return Err(Error::Precondition("the path has no edges".into()));
    }
    if t < 2 {
        return Err(Error::PowerOutOfRange {
            t,
            lo: 2,
            hi: u32::MAX,
        });
    }
    let edge = match leaf {
        LeafEdge::First => {
            if n >= 2 && w.w(1) > w.w(2) {
                return Err(Error::Precondition("w_1 > w_2".into()));
            }
            1
        }
        LeafEdge::Last => {
            if n >= 2 && w.w(n) > w.w(n - 1) {
                return Err(Error::Precondition(format!("w_{n} > w_{}", n - 1)));
            }
            n
        }
    };
    let i = path_ideal(w);
    let lhs = i.power(t)?.colon(&w.edge_monomial(edge)?)?;
    Ok(lhs == i.power(t - 1)?)
}

/// Right-hand side `(x_1^{w_1}, x_3^{w_1}) I^{t-1} + J^t` with
/// `J = I(P^{[4, n+1]})`.
pub fn colon_x2_closed_form(w: &WeightVector, t: u32) -> Result<MonomialIdeal> {
    let n = w.n();
    if n < 2 {
        return Err(Error::Precondition("needs n >= 2".into()));
    }
    if w.w(1) != w.w(2) {
        return Err(Error::Precondition("needs w_1 = w_2".into()));
    }
    if t < 1 {
        return Err(Error::PowerOutOfRange {
            t,
            lo: 1,
            hi: u32::MAX,
        });
    }
    let n_vars = w.n_vars();
    let w1 = w.w(1);
    let pair = MonomialIdeal::minimalize(
        n_vars,
        [
            Monomial::var_power(n_vars, 1, w1)?,
            Monomial::var_power(n_vars, 3, w1)?,
        ],
    )?;
    let tail = if n_vars >= 4 {
        induced_subpath_ideal(w, 4, n_vars)?
    } else {
        MonomialIdeal::zero(n_vars)
    };
    let i = path_ideal(w);
    pair.product(&i.power(t - 1)?)?.sum(&tail.power(t)?)
}

/// `(I^t : x_2^{w_1}) == (x_1^{w_1}, x_3^{w_1}) I^{t-1} + J^t`, for `w_1 = w_2`.
pub fn colon_x2_identity(w: &WeightVector, t: u32) -> Result<bool> {
    let closed = colon_x2_closed_form(w, t)?;
    let x2 = Monomial::var_power(w.n_vars(), 2, w.w(1))?;
    let brute = path_ideal(w).power(t)?.colon(&x2)?;
    Ok(brute == closed)
}

/// The `t = 1` witness `f = x_{n+1}^{w_n - 1} ∏_{k=m+2}^{n} x_k^{w_{k-1}}`
/// with `m = max Δ`, together with the closed form of `(I : f)`:
/// `I(P^{[1,m]}) + (x_{m+1}^{w_{m+1}}, x_{m+2}^{w_{m+2}-w_{m+1}}, ...,
/// x_{n-1}^{w_{n-1}-w_{n-2}}, x_n^{w_n-w_{n-1}} x_{n+1})`.
pub fn first_power_witness(w: &WeightVector) -> Result<(Monomial, MonomialIdeal)> {
    let delta = compute_delta(w);
    let Some(&m) = delta.last() else {
        return Err(Error::Precondition("Δ is empty".into()));
    };
    let n = w.n();
    let n_vars = w.n_vars();

    let mut f = Monomial::var_power(n_vars, n + 1, w.w(n) - 1)?;
    for k in m + 2..=n {
        f.mul_var(k, w.w(k - 1))?;
    }

    let mut extra = vec![Monomial::var_power(n_vars, m + 1, w.w(m + 1))?];
    for j in m + 2..n {
        extra.push(Monomial::var_power(n_vars, j, w.w(j) - w.w(j - 1))?);
    }
    let mut last = Monomial::var_power(n_vars, n, w.w(n) - w.w(n - 1))?;
    last.mul_var(n + 1, 1)?;
    extra.push(last);

    let closed = induced_subpath_ideal(w, 1, m)?.sum(&MonomialIdeal::minimalize(n_vars, extra)?)?;
    Ok((f, closed))
}

/// Full witness report for `2 <= t <= |Δ|+1`, comparing the closed form
/// of `(I^t : ρ_t)` with the brute-force colon.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub weights: String,
    pub t: u32,
    pub g: String,
    pub factors: Vec<String>,
    pub lambda: Vec<usize>,
    pub eta: BTreeMap<usize, u32>,
    pub rho: String,
    pub rho_in_power: bool,
    pub predicted_colon: String,
    pub brute_colon: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn witness_report(w: &WeightVector, t: u32) -> Result<WitnessReport> {
    let model = colon_by_rho(w, t)?;
    let power = path_ideal(w).power(t)?;
    let brute = power.colon(&model.witness.rho)?;
    let ws = &model.witness;
    Ok(WitnessReport {
        weights: w.to_string(),
        t,
        g: ws.g.to_string(),
        factors: ws.factors.iter().map(|f| f.monomial.to_string()).collect(),
        lambda: ws.lambda.clone(),
        eta: ws.eta.clone(),
        rho: ws.rho.to_string(),
        rho_in_power: power.contains(&ws.rho)?,
        predicted_colon: model.predicted.to_string(),
        brute_colon: brute.to_string(),
        matches: brute == model.predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(w: &[u32]) -> WeightVector {
        WeightVector::new(w.to_vec()).unwrap()
    }

    fn mono(s: &str, w: &WeightVector) -> Monomial {
        Monomial::parse(s, w.n_vars()).unwrap()
    }

    fn ideal(gens: &[&str], w: &WeightVector) -> MonomialIdeal {
        MonomialIdeal::minimalize(w.n_vars(), gens.iter().map(|g| mono(g, w))).unwrap()
    }

    const REMARK: [u32; 11] = [1, 1, 2, 2, 2, 2, 4, 4, 6, 6, 6];

    #[test]
    fn modified_monomials() {
        let w = wv(&REMARK);
        assert_eq!(modified_edge_monomial(&w, 2).unwrap(), mono("x2*x3^2", &w));
        assert_eq!(
            modified_edge_monomial(&w, 10).unwrap(),
            mono("x10^6*x11^6", &w)
        );
        assert_eq!(
            modified_edge_monomial(&w, 8).unwrap(),
            mono("x8^4*x9^9", &w)
        );
        assert!(modified_edge_monomial(&w, 11).is_err());
        assert!(modified_edge_monomial(&w, 0).is_err());
    }

    #[test]
    fn g_products() {
        let w = wv(&REMARK);
        let g3 = g_monomial(&w, 3).unwrap();
        assert_eq!(g3.g, mono("x2*x3^2*x10^6*x11^6", &w));
        let shown: Vec<String> = g3.factors.iter().map(|f| f.monomial.to_string()).collect();
        assert_eq!(shown, ["x2*x3^2", "x10^6*x11^6"]);

        let g4 = g_monomial(&w, 4).unwrap();
        assert_eq!(g4.g, mono("x2*x3^2*x8^4*x9^9*x10^6*x11^6", &w));
        let shown: Vec<String> = g4.factors.iter().map(|f| f.monomial.to_string()).collect();
        assert_eq!(shown, ["x2*x3^2", "x8^4*x9^9*x10^6*x11^6"]);
        assert_eq!((g4.factors[1].min, g4.factors[1].max), (8, 11));

        let small = wv(&[1, 1, 2]);
        let g2 = g_monomial(&small, 2).unwrap();
        assert_eq!(g2.g, mono("x2*x3^2", &small));
        assert_eq!(g2.factors.len(), 1);

        assert!(g_monomial(&small, 1).is_err());
        assert!(g_monomial(&small, 3).is_err());
    }

    fn only_factor(w: &WeightVector, t: u32) -> Factor {
        let gp = g_monomial(w, t).unwrap();
        assert_eq!(gp.factors.len(), 1);
        gp.factors[0].clone()
    }

    #[test]
    fn uveo_first_worked_example() {
        let w = wv(&[1, 1, 2, 2, 2, 3]);
        let d = only_factor(&w, 2);
        assert_eq!(d.monomial, mono("x5^2*x6^4", &w));
        let m = uveo(&w, &d).unwrap();
        assert!(m.e.is_zero());
        assert_eq!(m.o, ideal(&["x5^2"], &w));
        assert_eq!(m.u, ideal(&["x5^2", "x7^3"], &w));
        assert_eq!(m.v, ideal(&["x4^2", "x6"], &w));
    }

    #[test]
    fn uveo_second_worked_example() {
        let w = wv(&[1, 1, 1, 1, 3, 3, 3, 4]);
        let d = only_factor(&w, 3);
        assert_eq!(d.monomial, mono("x6^3*x7^6*x8^6", &w));
        let m = uveo(&w, &d).unwrap();
        assert!(m.e.is_zero());
        assert_eq!(m.o, ideal(&["x5^3", "x7^3"], &w));
        assert_eq!(m.u, ideal(&["x5^3", "x7^3", "x9^4"], &w));
        assert_eq!(m.v, ideal(&["x6^3", "x8"], &w));
    }

    #[test]
    fn uveo_third_worked_example() {
        let w = wv(&[1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3]);
        let d = only_factor(&w, 6);
        assert_eq!(d.monomial, mono("x5*x6^2*x7^2*x8^4*x9^4*x10^4*x11^4", &w));
        let m = uveo(&w, &d).unwrap();
        assert_eq!(m.e, ideal(&["x4", "x6", "x8^2", "x10^2"], &w));
        assert_eq!(m.o, ideal(&["x5"], &w));
        assert_eq!(m.u, ideal(&["x5", "x7^2", "x9^2", "x11"], &w));
        assert_eq!(m.v, ideal(&["x4", "x6", "x8^2", "x10^2", "x12^3"], &w));
    }

    #[test]
    fn colon_by_g_examples() {
        let w = wv(&REMARK);
        let closed = colon_by_g(&w, 2).unwrap();
        let expected = path_ideal(&w)
            .sum(&ideal(&["x2", "x1*x4^2", "x3*x4^2"], &w))
            .unwrap();
        assert_eq!(closed, expected);
        let g2 = g_monomial(&w, 2).unwrap().g;
        assert_eq!(path_ideal(&w).power(2).unwrap().colon(&g2).unwrap(), closed);

        let small = wv(&[1, 1, 2]);
        let closed = colon_by_g(&small, 2).unwrap();
        let brute = path_ideal(&small)
            .power(2)
            .unwrap()
            .colon(&mono("x2*x3^2", &small))
            .unwrap();
        assert_eq!(closed, brute);
        assert!(path_ideal(&small).is_subset_of(&closed).unwrap());
    }

    #[test]
    fn plain_edge_colon_from_remark() {
        let w = wv(&REMARK);
        let c = path_ideal(&w)
            .power(2)
            .unwrap()
            .colon(&mono("x2*x3", &w))
            .unwrap();
        let expected = path_ideal(&w).sum(&ideal(&["x1*x3*x4^2"], &w)).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn eta_small_path() {
        let w = wv(&[1, 1, 2]);
        let ws = eta_and_rho(&w, 2).unwrap();
        assert_eq!(ws.lambda, vec![1, 2, 4]);
        assert_eq!(ws.eta, BTreeMap::from([(1, 0), (2, 0), (4, 1)]));
        assert_eq!(ws.rho, mono("x2*x3^2*x4", &w));
    }

    #[test]
    fn eta_with_open_b_pair() {
        // B(Δ) = {1, 3}; f̃_4 = (x4 x5)^2 does not divide g_2 = f̃_5.
        let w = wv(&[1, 1, 2, 2, 2, 3]);
        let ws = eta_and_rho(&w, 2).unwrap();
        assert_eq!(ws.g, mono("x5^2*x6^4", &w));
        assert_eq!(ws.lambda, vec![1, 2, 3, 4, 5, 7]);
        assert_eq!(
            ws.eta,
            BTreeMap::from([(1, 0), (2, 1), (3, 0), (4, 1), (5, 1), (7, 2)])
        );
        for t in 2..=4 {
            let ws = eta_and_rho(&w, t).unwrap();
            assert_eq!(ws.eta[&7], w.w(6) - 1);
        }
    }

    #[test]
    fn colon_by_rho_small() {
        let w = wv(&[1, 1, 2]);
        let model = colon_by_rho(&w, 2).unwrap();
        assert_eq!(model.predicted, ideal(&["x2", "x1*x4", "x3*x4"], &w));
        let brute = path_ideal(&w)
            .power(2)
            .unwrap()
            .colon(&model.witness.rho)
            .unwrap();
        assert_eq!(model.predicted, brute);
        assert!(model.path.is_subset_of(&model.predicted).unwrap());
    }

    #[test]
    fn psi_exemption_only_for_open_pairs() {
        // B(Δ) = {1, 3} and g_2 = f̃_4 = f_{b_2 + 1}, so the pair is closed:
        // x_2 belongs to the colon and must come from Ψ.
        let w = wv(&[1, 1, 2, 2, 2]);
        let model = colon_by_rho(&w, 2).unwrap();
        let x2 = Monomial::var_power(w.n_vars(), 2, 1).unwrap();
        assert!(model.psi.contains(&x2).unwrap());
        let brute = path_ideal(&w)
            .power(2)
            .unwrap()
            .colon(&model.witness.rho)
            .unwrap();
        assert_eq!(model.predicted, brute);
    }

    #[test]
    fn leaf_colons() {
        assert!(leaf_colon_identity(&wv(&[1, 2]), 2, LeafEdge::First).unwrap());
        assert!(leaf_colon_identity(&wv(&[1, 1, 2]), 3, LeafEdge::First).unwrap());
        assert!(leaf_colon_identity(&wv(&[1, 1]), 2, LeafEdge::Last).unwrap());
        assert!(leaf_colon_identity(&wv(&[1, 2]), 2, LeafEdge::Last).is_err());
        assert!(leaf_colon_identity(&wv(&[1, 2]), 1, LeafEdge::First).is_err());
    }

    #[test]
    fn x2_colons() {
        assert!(colon_x2_identity(&wv(&[1, 1, 2, 2]), 2).unwrap());
        let w = wv(&[1, 1]);
        assert!(colon_x2_identity(&w, 1).unwrap());
        assert_eq!(
            colon_x2_closed_form(&w, 1).unwrap(),
            ideal(&["x1", "x3"], &w)
        );
        assert!(colon_x2_identity(&wv(&[2, 2, 2]), 3).unwrap());
        assert!(colon_x2_identity(&wv(&[1, 2, 2]), 2).is_err());
    }

    #[test]
    fn first_power_witnesses() {
        let w = wv(&[1, 1, 2]);
        let (f, closed) = first_power_witness(&w).unwrap();
        assert_eq!(f, mono("x3*x4", &w));
        assert_eq!(closed, ideal(&["x2", "x3*x4"], &w));
        assert_eq!(path_ideal(&w).colon(&f).unwrap(), closed);

        let w = wv(&[1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 5]);
        let (f, closed) = first_power_witness(&w).unwrap();
        assert_eq!(path_ideal(&w).colon(&f).unwrap(), closed);

        assert!(first_power_witness(&wv(&[1, 2, 3])).is_err());
    }

    #[test]
    fn report_for_small_path() {
        let r = witness_report(&wv(&[1, 1, 2]), 2).unwrap();
        assert_eq!(r.rho, "x2*x3^2*x4");
        assert_eq!(r.predicted_colon, "(x1*x4, x2, x3*x4)");
        assert!(r.matches);
        assert!(!r.rho_in_power);
    }
}
