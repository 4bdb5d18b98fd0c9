//! Iterated sampling as a budgeted procedure.
//!
//! `multi_sample` applies a sampling step repeatedly, deleting the
//! drawn vertex each time, until either the remaining graph satisfies
//! the property or `⌊δ·t⌋` vertices have been removed. With success
//! probability q per draw, this realizes a (δ, φ(δ,q), r, T)-procedure:
//! the returned set S has `|S| ≤ ⌊δ·t⌋`, and if the input has a
//! solution of size k then, for t ≥ T, the remainder has one of size
//! `max(0, k − t)` with probability at least `φ(δ,q)^t / (t+1)^r`.

use crate::calculator::phi;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId, VertexSet};
use crate::sampling::{Rng, SamplingStep};
use crate::scalar::Scalar;
use num_rational::Ratio;

/// Polynomial-correction exponent of the procedure guarantee. The
/// tail bound behind the guarantee contributes (x+1)^{-2}, doubled by
/// the budget-floor adjustment.
pub const PROCEDURE_R: u32 = 4;

#[derive(Debug, Clone)]
pub struct ProcedureParams {
    /// Budget factor: up to ⌊δ·t⌋ vertices are removed for target t.
    pub delta: Scalar,
    /// Per-unit success base p = φ(δ, q).
    pub p: f64,
    /// Polynomial-correction exponent in the guarantee.
    pub r: u32,
    /// The guarantee holds for t ≥ T.
    pub big_t: u64,
}

/// Threshold T from which the procedure guarantee applies:
/// max(⌈δ⌉, ⌈1/(δ−1)⌉) for δ > 1, and 1 for δ = 1.
fn threshold(delta: &Scalar) -> u64 {
    let one = Scalar::from_int(1);
    if *delta == one {
        return 1;
    }
    let ceil_delta = delta.ceil().max(1) as u64;
    let inv_gap = (one / (*delta - one)).ceil().max(1) as u64;
    ceil_delta.max(inv_gap)
}

/// Packages a sampling step and a budget factor δ ∈ [1, 1/q] into
/// procedure parameters.
pub fn build_procedure(step: &SamplingStep, delta: Scalar) -> Result<ProcedureParams> {
    let q = step.q();
    let inv_q = Scalar::rat(Ratio::new(*q.denom(), *q.numer()));
    if delta < Scalar::from_int(1) || delta > inv_q {
        return Err(Error::Config(format!(
            "procedure budget factor delta = {delta} outside [1, 1/q] = [1, {inv_q}]"
        )));
    }
    let p = phi(delta.as_f64(), step.spec().q_f64())?;
    Ok(ProcedureParams { delta, p, r: PROCEDURE_R, big_t: threshold(&delta) })
}

/// Runs the sampling step up to ⌊δ·t⌋ times, deleting each drawn
/// vertex, and returns the removed set in `g`'s original vertex ids.
/// Stops early as soon as the remaining graph satisfies the property.
pub fn multi_sample(
    step: &SamplingStep,
    delta: &Scalar,
    g: &Hypergraph,
    t: u64,
    rng: &mut Rng,
) -> Result<VertexSet> {
    step.spec().validate(g)?;
    if *delta < Scalar::from_int(1) {
        return Err(Error::Config(format!("multi_sample needs delta >= 1, got {delta}")));
    }
    let budget = delta.floor_mul(t).max(0) as u64;
    let mut current = g.clone();
    // current id -> original id
    let mut origin: Vec<VertexId> = (0..g.n()).collect();
    let mut removed = Vec::new();
    while (removed.len() as u64) < budget && !step.spec().check_in_property(&current)? {
        let v = step.draw(&current, rng)?;
        removed.push(origin[v]);
        let (next, old_to_new) = current.delete_vertex(v)?;
        let mut next_origin = vec![0; next.n()];
        for (old, new) in old_to_new.iter().enumerate() {
            if let Some(new) = new {
                next_origin[*new] = origin[old];
            }
        }
        current = next;
        origin = next_origin;
    }
    Ok(VertexSet::new(removed))
}
