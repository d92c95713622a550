use itertools::Itertools;

use crate::colored::{ColorCutResult, ColoredGraph, CutMode, Method};
use crate::error::{Error, Result};

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 20;

/// Exhaustive minimum color cut: tries every subset of the used colors in
/// order of size. Refuses graphs with more than `limit` used colors.
pub fn brute_force_min_cut(
    cg: &ColoredGraph,
    mode: CutMode,
    limit: usize,
) -> Result<ColorCutResult> {
    match mode {
        CutMode::Global => cg.require_global()?,
        CutMode::St { s, t } => cg.check_pair(s, t)?,
    }
    let used = cg.used_colors();
    if used.len() > limit {
        return Err(Error::LimitExceeded {
            what: "used colors",
            value: used.len(),
            limit,
        });
    }
    for k in 0..=used.len() {
        for colors in used.iter().copied().combinations(k) {
            let witness = match mode {
                CutMode::Global => cg.color_cut_witness(&colors)?,
                CutMode::St { s, t } => cg.color_st_cut_witness(&colors, s, t)?,
            };
            if let Some(witness_cut) = witness {
                return Ok(ColorCutResult {
                    value: k,
                    lower_bound: k,
                    colors,
                    witness_cut,
                    mode,
                    method: Method::Exact,
                    q: None,
                });
            }
        }
    }
    unreachable!("the full color set is always a cut")
}
