//! Γ_C ↦ plumbing graphs: preprocessing, the two covering algorithms, extraction.

mod collapse;
mod extract;
mod main_alg;
mod preprocess;
mod transversal;

pub use collapse::{collapse_subtrees, collapsing_algorithm, CollapseRecord, Collapsed};
pub use extract::{extract_g1, extract_g2, G1Mode};
pub use main_alg::{covering_data_main, main_algorithm, MainOutput};
pub use preprocess::{blowup_assumption_a, blowup_assumption_b};
pub use transversal::{transversal_data, CutEdge, TransversalData};

use crate::error::Result;
use crate::graph::{GammaCGraph, PlumbGraph};

/// Assumption A then B blow-ups.
pub fn preprocess_main(g: &GammaCGraph) -> GammaCGraph {
    blowup_assumption_b(&blowup_assumption_a(g))
}

/// Blow-up path: A, B, Main Algorithm. Returns the preprocessed graph with the output.
pub fn run_main(g: &GammaCGraph) -> Result<(GammaCGraph, MainOutput)> {
    let gab = preprocess_main(g);
    let out = main_algorithm(&gab)?;
    Ok((gab, out))
}

/// Collapsing path: A, then the Collapsing Main Algorithm.
pub fn run_collapse(g: &GammaCGraph) -> Result<(GammaCGraph, MainOutput)> {
    let ga = blowup_assumption_a(g);
    let out = collapsing_algorithm(&ga)?;
    Ok((ga, out))
}

/// G₂,ⱼ graphs along the blow-up path.
pub fn g2_graphs(g: &GammaCGraph) -> Result<Vec<PlumbGraph>> {
    let (gab, out) = run_main(g)?;
    extract_g2(&gab, &out)
}
