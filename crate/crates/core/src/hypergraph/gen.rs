//! Seeded random instance generators for desk-scale experiments.
//!
//! All models draw from a ChaCha stream, so identical arguments give
//! identical graphs on every platform and run.

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::sampling::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomModel {
    /// G(n,p): every unordered pair is an edge independently.
    Gnp,
    /// Every unordered pair gets one uniformly oriented arc.
    Tournament,
    /// Every d-subset is a hyperedge independently.
    UniformHyper(usize),
}

pub fn gen_random(model: RandomModel, n: usize, param: f64, seed: u64) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::Input("generator needs n >= 1".into()));
    }
    if !(0.0..=1.0).contains(&param) {
        return Err(Error::Input(format!("edge probability {param} outside [0,1]")));
    }
    let mut rng = Rng::seeded(seed);
    match model {
        RandomModel::Gnp => {
            let mut edges = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.chance(param) {
                        edges.push(vec![i, j]);
                    }
                }
            }
            Hypergraph::new(n, edges)
        }
        RandomModel::Tournament => {
            let mut arcs = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if rng.chance(0.5) {
                        arcs.push((i, j));
                    } else {
                        arcs.push((j, i));
                    }
                }
            }
            Hypergraph::new_directed(n, arcs)
        }
        RandomModel::UniformHyper(d) => {
            if d == 0 || d > n {
                return Err(Error::Input(format!("edge size {d} outside 1..={n}")));
            }
            let mut edges = Vec::new();
            let mut subset: Vec<usize> = (0..d).collect();
            loop {
                if rng.chance(param) {
                    edges.push(subset.clone());
                }
                if !next_combination(&mut subset, n) {
                    break;
                }
            }
            Hypergraph::new(n, edges)
        }
    }
}

/// Advances `c` to the next d-combination of `0..n` in lexicographic
/// order; returns false after the last one.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let d = c.len();
    let mut i = d;
    while i > 0 {
        i -= 1;
        if c[i] < n - d + i {
            c[i] += 1;
            for j in (i + 1)..d {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
