//! Randomized sampling steps.
//!
//! A sampling step with success probability q maps a graph outside Π
//! to a random vertex whose deletion drops the optimum by one with
//! probability at least q. Three steps are provided: a degree-weighted
//! step for feedback vertex set, a spider-or-cycle step for
//! pathwidth-one deletion, and the generic forbidden-witness step for
//! properties given by a finite pattern set.

use crate::error::{Error, Result};
use crate::hypergraph::{find_pattern, Hypergraph, Pattern, VertexId, VertexSet};
use crate::problems::{ProblemKind, ProblemSpec};
use num_rational::Ratio;
use rand::distributions::{Distribution, Uniform};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded deterministic random stream.
///
/// Streams are split by index: `Rng::stream(seed, i)` and
/// `Rng::stream(seed, j)` are independent for `i != j`, and every
/// `(seed, index)` pair replays identically across runs and platforms.
#[derive(Debug, Clone)]
pub struct Rng(ChaCha8Rng);

impl Rng {
    pub fn seeded(seed: u64) -> Self {
        Rng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn stream(seed: u64, index: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(index);
        Rng(inner)
    }

    /// Uniform draw from `0..n`; `n` must be positive.
    pub fn pick(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        Uniform::from(0..n).sample(&mut self.0)
    }

    /// Uniform element of a non-empty slice.
    pub fn pick_from<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.pick(items.len())]
    }

    /// Bernoulli trial with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        self.0.gen::<f64>() < p
    }

    /// Index drawn proportionally to non-negative integer weights.
    /// Uses one uniform draw against exact cumulative sums, so there
    /// is no floating-point bias.
    pub fn pick_weighted(&mut self, weights: &[u64]) -> usize {
        let total: u64 = weights.iter().sum();
        debug_assert!(total > 0);
        let mut x = Uniform::from(0..total).sample(&mut self.0);
        for (i, &w) in weights.iter().enumerate() {
            if x < w {
                return i;
            }
            x -= w;
        }
        unreachable!("weights sum to total")
    }
}

/// Exhaustively removes vertices of degree at most 1. Returns the
/// remaining graph and the new→old vertex-id mapping. The result does
/// not depend on removal order.
pub fn core(g: &Hypergraph) -> Result<(Hypergraph, Vec<VertexId>)> {
    if !g.is_two_uniform() {
        return Err(Error::Unsupported(
            "core is only defined for undirected 2-uniform graphs".into(),
        ));
    }
    let adj = g.adjacency()?;
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut alive = vec![true; g.n()];
    let mut queue: Vec<VertexId> = (0..g.n()).filter(|&v| degree[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 {
                    queue.push(w);
                }
            }
        }
    }
    let survivors: VertexSet = (0..g.n()).filter(|&v| alive[v]).collect();
    let mapping: Vec<VertexId> = survivors.iter().collect();
    Ok((g.induced(&survivors)?, mapping))
}

/// Degree-weighted sampling step for feedback vertex set.
///
/// After reducing to the core, a component that is a bare cycle
/// (maximum degree 2) yields a uniform vertex of that component;
/// otherwise vertices of degree 2 get weight zero, every other vertex
/// gets its degree as weight, and one vertex is drawn proportionally.
pub fn fvs_step(g: &Hypergraph, rng: &mut Rng) -> Result<VertexId> {
    let (h, back) = core(g)?;
    if h.n() == 0 {
        return Err(Error::Precondition("fvs sampling step needs a cyclic graph".into()));
    }
    let adj = h.adjacency()?;
    for comp in h.components()? {
        if comp.iter().all(|&v| adj[v].len() <= 2) {
            // Core vertices have degree >= 2, so this component is a
            // bare cycle; any of its vertices breaks it.
            let v = *rng.pick_from(&comp);
            return Ok(back[v]);
        }
    }
    let weights: Vec<u64> = (0..h.n())
        .map(|v| {
            let d = adj[v].len() as u64;
            if d == 2 {
                0
            } else {
                d
            }
        })
        .collect();
    let v = rng.pick_weighted(&weights);
    Ok(back[v])
}

/// Sampling step for pathwidth-one vertex deletion: a uniform vertex
/// of the first spider subgraph when one exists, otherwise the
/// feedback-vertex-set step (the graph must then contain a cycle).
pub fn povd_step(g: &Hypergraph, rng: &mut Rng) -> Result<VertexId> {
    if let Some(z) = g.find_spider()? {
        let idx = rng.pick(z.len());
        return Ok(z.as_slice()[idx]);
    }
    if !g.has_cycle()? {
        return Err(Error::Precondition(
            "povd sampling step needs a graph with a spider or a cycle".into(),
        ));
    }
    fvs_step(g, rng)
}

/// Generic sampling step for a finite forbidden set: a uniform vertex
/// of the first pattern witness (fixed pattern order, lexicographic
/// tuple order).
pub fn forbidden_step(g: &Hypergraph, patterns: &[Pattern], rng: &mut Rng) -> Result<VertexId> {
    for p in patterns {
        if let Some(z) = find_pattern(g, p)? {
            let idx = rng.pick(z.len());
            return Ok(z.as_slice()[idx]);
        }
    }
    Err(Error::Precondition(
        "forbidden-structure sampling step found no witness (graph already in the property)".into(),
    ))
}

/// A problem's sampling step: a randomized map from `G ∉ Π` to a
/// vertex of `G`, succeeding (dropping the optimum) with probability
/// at least `q()`.
#[derive(Debug, Clone)]
pub struct SamplingStep {
    spec: ProblemSpec,
}

impl SamplingStep {
    pub fn new(spec: &ProblemSpec) -> Self {
        SamplingStep { spec: spec.clone() }
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn q(&self) -> Ratio<i128> {
        self.spec.q()
    }

    /// Draws a vertex of `g`. Errors when `g ∈ Π` (checked) or `g` is
    /// outside the problem's input class.
    pub fn draw(&self, g: &Hypergraph, rng: &mut Rng) -> Result<VertexId> {
        if self.spec.check_in_property(g)? {
            return Err(Error::Precondition(format!(
                "sampling step for {} requires a graph outside the property",
                self.spec.name()
            )));
        }
        match self.spec.kind() {
            ProblemKind::Fvs => fvs_step(g, rng),
            ProblemKind::Povd => povd_step(g, rng),
            _ => forbidden_step(g, self.spec.patterns(), rng),
        }
    }
}
