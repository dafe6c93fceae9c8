//! Deterministic fixpoint strategy over the reduced moves.

use crate::graph::PlumbGraph;

use super::ops::{r1_blowdown, r3_absorb, r5_handle, r6_naive, r8_annulus};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    R1,
    R3,
    R5,
    R8,
    R6,
}

impl Rule {
    /// Priority order used by [`reduce_step`].
    pub const ORDER: [Rule; 5] = [Rule::R1, Rule::R3, Rule::R5, Rule::R8, Rule::R6];
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::R3 => "R3",
            Rule::R5 => "R5",
            Rule::R8 => "R8",
            Rule::R1 => "R1",
            Rule::R6 => "R6",
        }
    }

    pub fn apply(self, g: &PlumbGraph, v: usize) -> crate::Result<PlumbGraph> {
        match self {
            Rule::R3 => r3_absorb(g, v),
            Rule::R5 => r5_handle(g, v),
            Rule::R8 => r8_annulus(g, v),
            Rule::R1 => r1_blowdown(g, v),
            Rule::R6 => r6_naive(g, v),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Leave oriented handle absorption out (the "strictly reduced" variant).
    pub no_r5: bool,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { no_r5: false }
    }
}

/// One applied move: the rule and the id of the vertex it fired on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub at: String,
}

/// Applies the first applicable move: rules in priority order R1, R3, R5, R8,
/// then the derived R6 as a last resort; vertices by lowest node index.
pub fn reduce_step(g: &PlumbGraph, opts: ReduceOptions) -> Option<(Step, PlumbGraph)> {
    for rule in Rule::ORDER {
        if rule == Rule::R5 && opts.no_r5 {
            continue;
        }
        for v in g.vertices() {
            if let Ok(h) = rule.apply(g, v) {
                return Some((Step { rule, at: g.nodes[v].id.clone() }, h));
            }
        }
    }
    None
}

/// Reduces to a fixpoint and records the moves. Terminates: every move removes a node.
pub fn reduce_traced(g: &PlumbGraph, opts: ReduceOptions) -> (PlumbGraph, Vec<Step>) {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while let Some((step, next)) = reduce_step(&cur, opts) {
        steps.push(step);
        cur = next;
    }
    (cur, steps)
}

pub fn reduce(g: &PlumbGraph) -> PlumbGraph {
    reduce_traced(g, ReduceOptions::default()).0
}

pub fn reduce_with(g: &PlumbGraph, opts: ReduceOptions) -> PlumbGraph {
    reduce_traced(g, opts).0
}
