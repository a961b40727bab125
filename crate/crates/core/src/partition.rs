//! Center location and distance-to-center layering.
//!
//! The driver raises the augmented adjacency matrix to successive powers and
//! watches rows fill up: row `i` of `R(A^n)` is full exactly when
//! `ecc(i) <= n`, so the first power with a full row is the radius and the
//! nodes whose rows fill at power `radius + k` form layer `k`. The radius can
//! be located either one power at a time or by repeated squaring followed by
//! a greedy binary composition of the collected powers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitmatrix::BoolSymMatrix;
use crate::error::Error;
use crate::graph::Graph;

/// Radius of a graph plus, for every node, its layer index: the node's
/// eccentricity minus the radius. Layer 0 is the Jordan center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionResult {
    radius: u32,
    depth: u32,
    layers: Vec<u32>,
}

impl PartitionResult {
    /// Builds the partition directly from per-node eccentricities.
    pub fn from_eccentricities(ecc: &[u32]) -> Self {
        assert!(!ecc.is_empty(), "no nodes");
        let radius = *ecc.iter().min().expect("non-empty");
        let layers: Vec<u32> = ecc.iter().map(|&e| e - radius).collect();
        let depth = *layers.iter().max().expect("non-empty");
        Self {
            radius,
            depth,
            layers,
        }
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Largest layer index, i.e. diameter minus radius.
    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn layer(&self, node: usize) -> u32 {
        self.layers[node]
    }

    pub fn layers(&self) -> &[u32] {
        &self.layers
    }

    /// Indices of the center nodes (layer 0). Never empty.
    pub fn center(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers
            .iter()
            .enumerate()
            .filter(|(_, &k)| k == 0)
            .map(|(i, _)| i)
    }
}

/// Label-keyed view of a [`PartitionResult`], the JSON interchange form.
/// Serialized keys are sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub radius: u32,
    pub depth: u32,
    pub layers: BTreeMap<String, u32>,
}

impl PartitionReport {
    pub fn new(g: &Graph, p: &PartitionResult) -> Self {
        let layers = (0..g.node_count())
            .map(|i| (g.label(i).to_string(), p.layer(i)))
            .collect();
        Self {
            radius: p.radius(),
            depth: p.depth(),
            layers,
        }
    }
}

/// Squares `a1 = R(A^1)` repeatedly, returning `[R(A^1), R(A^2), R(A^4), ...]`
/// up to the last power of two with no full row. Empty when `a1` itself has
/// a full row (radius <= 1), which callers short-circuit.
pub fn doubling_powers(a1: &BoolSymMatrix) -> Vec<BoolSymMatrix> {
    let mut powers = Vec::new();
    if a1.has_full_row() {
        return powers;
    }
    powers.push(a1.clone());
    loop {
        let last = powers.last().expect("non-empty");
        let square = last.multiply(last).expect("same width");
        if square.has_full_row() {
            return powers;
        }
        assert!(
            square != *last,
            "powers stabilized without a full row; the graph is not connected"
        );
        powers.push(square);
    }
}

/// Greedily composes the collected powers of two into the largest exponent
/// `e` whose power still has no full row; `e + 1` is then the radius. Returns
/// the composed matrix `R(A^e)` and `e`, whose binary digits are exactly the
/// kept powers.
pub fn assemble_below_radius(powers: &[BoolSymMatrix]) -> (BoolSymMatrix, u64) {
    assert!(!powers.is_empty(), "need at least the base power");
    let m = powers.len();
    let mut acc = powers[m - 1].clone();
    let mut exponent: u64 = 1 << (m - 1);
    for k in (0..m - 1).rev() {
        let candidate = acc.multiply(&powers[k]).expect("same width");
        if !candidate.has_full_row() {
            acc = candidate;
            exponent += 1 << k;
        }
    }
    (acc, exponent)
}

/// Partitions a connected graph by distance to its center.
///
/// With `use_doubling` the radius is located via [`doubling_powers`] and
/// [`assemble_below_radius`] before the layer sweep; without it the sweep
/// starts from power 1. Both settings return identical results; doubling
/// trades extra memory (all collected powers are retained) for far fewer
/// rounds on deep graphs.
pub fn partition(g: &Graph, use_doubling: bool) -> Result<PartitionResult, Error> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.node_count();
    if n == 1 {
        return Ok(PartitionResult::from_eccentricities(&[0]));
    }

    let a1 = BoolSymMatrix::from_graph(g);
    // fill_power[i] = first exponent at which row i is full = ecc(i).
    let mut fill_power: Vec<Option<u32>> = vec![None; n];
    let mut assigned = 0usize;

    let (mut m2, mut power) = if use_doubling && !a1.has_full_row() {
        let powers = doubling_powers(&a1);
        let (acc, exponent) = assemble_below_radius(&powers);
        (acc, exponent as u32)
    } else {
        for (i, slot) in fill_power.iter_mut().enumerate() {
            if a1.is_row_full(i) {
                *slot = Some(1);
                assigned += 1;
            }
        }
        (a1.clone(), 1)
    };

    while assigned < n {
        power += 1;
        assert!(
            (power as usize) <= n,
            "connected graph must complete within {n} powers"
        );
        m2 = a1.multiply_tracking(&m2, power, &mut fill_power)?;
        assigned = fill_power.iter().filter(|p| p.is_some()).count();
    }

    let ecc: Vec<u32> = fill_power
        .into_iter()
        .map(|p| p.expect("all rows assigned"))
        .collect();
    Ok(PartitionResult::from_eccentricities(&ecc))
}
