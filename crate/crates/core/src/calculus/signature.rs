use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Result;
use crate::graph::PlumbGraph;
use crate::invariants::intersection_data;

/// Numbers attached to a plumbing graph that the reduced calculus leaves alone.
///
/// `h1rank` = 2g + c + corank A and `h1rank_ai` = 2g + c + corank (A,I); with
/// dash-arrows A is read as (A | I_dash). `det_abs` is |det A| (0 when there are
/// dash-arrows); it moves together with `corank_a` under R5, see [`Self::equivalent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSignature {
    pub cg: i64,
    pub h1rank: i64,
    pub h1rank_ai: i64,
    pub n_arrows: usize,
    pub n_dashes: usize,
    pub torsion: Vec<BigInt>,
    pub det_abs: BigInt,
    pub corank_a: i64,
}

impl InvariantSignature {
    /// Equality of everything the reduced calculus preserves. A handle absorption
    /// trades a unit of corank A for a unit of genus, so |det A| is compared only
    /// when both coranks agree.
    pub fn equivalent(&self, other: &InvariantSignature) -> bool {
        self.cg == other.cg
            && self.h1rank == other.h1rank
            && self.h1rank_ai == other.h1rank_ai
            && self.n_arrows == other.n_arrows
            && self.n_dashes == other.n_dashes
            && self.torsion == other.torsion
            && (self.corank_a != other.corank_a || self.det_abs == other.det_abs)
    }
}

pub fn invariant_signature(g: &PlumbGraph) -> Result<InvariantSignature> {
    let st = g.stats();
    let d = intersection_data(g)?;
    let base = 2 * st.g_sum + st.c;
    Ok(InvariantSignature {
        cg: st.c + st.g_sum,
        h1rank: base + d.corank_a as i64,
        h1rank_ai: base + d.corank_ai as i64,
        n_arrows: d.n_arrows,
        n_dashes: d.n_dashes,
        torsion: d.torsion(),
        det_abs: d.det_abs.clone().unwrap_or_else(BigInt::zero),
        corank_a: d.corank_a as i64,
    })
}
