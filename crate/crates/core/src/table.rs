//! Depth tables `t ↦ depth(S/I^t)` from the combinatorial formula.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::Result;
use crate::path::{DeltaProfile, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthTable {
    pub weights: Vec<u32>,
    #[serde(flatten)]
    pub profile: DeltaProfile,
    /// `depth(S/I^t)` for `t = 1, ..., |Δ|+1`.
    pub depths: Vec<u32>,
    /// Power from which the depth stays at its limit value.
    pub plateau_from: usize,
    pub note: String,
}

impl DepthTable {
    pub fn new(w: &WeightVector) -> Result<Self> {
        let profile = DeltaProfile::of_weights(w);
        let last = profile.delta.len() as u32 + 1;
        let depths = (1..=last)
            .map(|t| crate::path::depth_formula(w, t))
            .collect::<Result<Vec<_>>>()?;
        let plateau_from = profile.delta.len() + 1;
        Ok(DepthTable {
            weights: w.as_slice().to_vec(),
            note: format!("depth is 1 for all t >= |Δ|+1 = {plateau_from}"),
            profile,
            depths,
            plateau_from,
        })
    }
}

fn set(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for DepthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.profile;
        let blocks: Vec<String> = p
            .blocks
            .iter()
            .map(|b| {
                format!(
                    "{}:{}",
                    set(&(b.start..=b.end).collect::<Vec<_>>()),
                    b.block_type
                )
            })
            .collect();
        let mut out = String::new();
        writeln!(out, "weights  {}", tuple(&self.weights))?;
        writeln!(out, "Delta    {}", set(&p.delta))?;
        writeln!(
            out,
            "blocks   {}",
            if blocks.is_empty() {
                "-".into()
            } else {
                blocks.join(" ")
            }
        )?;
        writeln!(
            out,
            "a b c k  {} {} {} {}",
            p.counts.a, p.counts.b, p.counts.c, p.counts.k
        )?;
        writeln!(out, "A        {}", set(&p.partition.a))?;
        writeln!(out, "B        {}", set(&p.partition.b))?;
        writeln!(out, "C        {}", set(&p.partition.c))?;
        writeln!(out, "mu       {}", tuple(&p.mu))?;
        writeln!(out, "depth    {}", tuple(&self.depths))?;
        let width = self.depths.len().to_string().len().max(2);
        let ts: Vec<String> = (1..=self.depths.len())
            .map(|t| format!("{t:>width$}"))
            .collect();
        let ds: Vec<String> = self.depths.iter().map(|d| format!("{d:>width$}")).collect();
        writeln!(out, "t        {}", ts.join(" "))?;
        writeln!(out, "d        {}", ds.join(" "))?;
        write!(out, "{}", self.note)?;
        f.write_str(&out)
    }
}
