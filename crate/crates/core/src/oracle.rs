//! Ground-truth optima and Monte-Carlo estimation harnesses.
//!
//! `brute_opt` computes exact optima by ascending-size subset
//! enumeration and backs every statistical check in the test suites.

use crate::error::{Error, Result};
use crate::framework::{sampling_with_a_black_box, BlackBoxSolver, RunConfig};
use crate::hypergraph::{Hypergraph, VertexId, VertexSet};
use crate::problems::ProblemSpec;
use crate::sampling::{Rng, SamplingStep};
use crate::scalar::Scalar;

/// Largest graph brute_opt will enumerate by default.
pub const DEFAULT_BRUTE_LIMIT: usize = 22;

#[derive(Debug, Clone)]
pub struct OptResult {
    pub opt: u64,
    /// One optimal solution (lexicographically first at its size).
    pub witness: VertexSet,
    /// Number of candidate subsets examined.
    pub explored: u64,
}

/// Exact minimum solution size by ascending-size enumeration,
/// lexicographic within each size, stopping at the first hit.
pub fn brute_opt(spec: &ProblemSpec, g: &Hypergraph) -> Result<OptResult> {
    brute_opt_bounded(spec, g, g.n())?.ok_or_else(|| {
        Error::Internal("deleting all vertices must satisfy a hereditary property".into())
    })
}

/// Like [`brute_opt`] but gives up (returns `None`) once subsets
/// larger than `max_size` would be needed.
pub fn brute_opt_bounded(
    spec: &ProblemSpec,
    g: &Hypergraph,
    max_size: usize,
) -> Result<Option<OptResult>> {
    if g.n() > DEFAULT_BRUTE_LIMIT {
        return Err(Error::Resource(format!(
            "brute-force enumeration capped at {DEFAULT_BRUTE_LIMIT} vertices, got {}",
            g.n()
        )));
    }
    spec.validate(g)?;
    let mut explored = 0u64;
    explored += 1;
    if spec.check_in_property(g)? {
        return Ok(Some(OptResult { opt: 0, witness: VertexSet::empty(), explored }));
    }
    for size in 1..=max_size.min(g.n()) {
        let mut subset: Vec<VertexId> = (0..size).collect();
        loop {
            explored += 1;
            let candidate = VertexSet::new(subset.clone());
            if spec.verify_solution(g, &candidate)? {
                return Ok(Some(OptResult { opt: size as u64, witness: candidate, explored }));
            }
            if !crate::hypergraph::next_combination(&mut subset, g.n()) {
                break;
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct EstimateReport {
    pub trials: u64,
    pub successes: u64,
    /// Point estimate successes/trials.
    pub estimate: f64,
    /// One-sided Hoeffding lower confidence bound, clipped at 0.
    pub lower_bound: f64,
    /// Confidence level of the bound (e.g. 0.999).
    pub confidence: f64,
}

impl EstimateReport {
    pub fn from_counts(trials: u64, successes: u64, confidence: f64) -> Self {
        let estimate = if trials == 0 { 0.0 } else { successes as f64 / trials as f64 };
        let delta = 1.0 - confidence;
        let margin = (1.0 / delta).ln() / (2.0 * trials as f64);
        let lower_bound = (estimate - margin.sqrt()).max(0.0);
        EstimateReport { trials, successes, estimate, lower_bound, confidence }
    }
}

/// Default confidence level for reported lower bounds.
pub const DEFAULT_CONFIDENCE: f64 = 0.999;

/// Monte-Carlo estimate of a sampling step's success probability on a
/// fixed instance: a draw succeeds when deleting the drawn vertex
/// drops the brute-force optimum by exactly one (the drop is never
/// larger for hereditary properties, so `≤ OPT − 1` and `= OPT − 1`
/// coincide).
pub fn estimate_sampling_success(
    step: &SamplingStep,
    g: &Hypergraph,
    trials: u64,
    rng: &mut Rng,
) -> Result<EstimateReport> {
    let spec = step.spec();
    if spec.check_in_property(g)? {
        return Err(Error::Precondition(
            "sampling-success estimation needs a graph outside the property".into(),
        ));
    }
    let opt = brute_opt(spec, g)?.opt;
    let mut opt_without: Vec<Option<u64>> = vec![None; g.n()];
    let mut successes = 0u64;
    for _ in 0..trials {
        let v = step.draw(g, rng)?;
        let ov = match opt_without[v] {
            Some(o) => o,
            None => {
                let (rest, _) = g.delete_vertex(v)?;
                let o = brute_opt(spec, &rest)?.opt;
                debug_assert!(o == opt || o + 1 == opt, "optimum dropped by more than 1");
                opt_without[v] = Some(o);
                o
            }
        };
        if ov + 1 == opt {
            successes += 1;
        }
    }
    Ok(EstimateReport::from_counts(trials, successes, DEFAULT_CONFIDENCE))
}

/// Repeated end-to-end driver runs on one instance; success means the
/// returned solution has size at most β·k. Every returned set is also
/// re-verified against the property decider, and any invalid one is an
/// error rather than a failed trial.
#[allow(clippy::too_many_arguments)]
pub fn estimate_driver_success(
    spec: &ProblemSpec,
    step: &SamplingStep,
    solver: &dyn BlackBoxSolver,
    g: &Hypergraph,
    k: u64,
    beta: &Scalar,
    config: &RunConfig,
    runs: u64,
) -> Result<EstimateReport> {
    let opt = brute_opt(spec, g)?.opt;
    if opt > k {
        return Err(Error::Precondition(format!(
            "driver-success estimation needs OPT <= k, got OPT = {opt}, k = {k}"
        )));
    }
    let mut successes = 0u64;
    for run in 0..runs {
        let mut cfg = config.clone();
        cfg.beta = *beta;
        cfg.seed = config.seed.wrapping_add(run);
        let report = sampling_with_a_black_box(spec, step, solver, g, k, &cfg)?;
        if !spec.verify_solution(g, &report.solution.set)? {
            return Err(Error::Internal("driver returned an invalid solution".into()));
        }
        let size = Scalar::from_int(report.solution.set.len() as i128);
        if size <= *beta * Scalar::from_int(k as i128) {
            successes += 1;
        }
    }
    Ok(EstimateReport::from_counts(runs, successes, DEFAULT_CONFIDENCE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    fn spec(name: &str) -> ProblemSpec {
        ProblemSpec::by_name(name).unwrap()
    }

    #[test]
    fn brute_opt_known_values() {
        let fvs = spec("fvs");
        assert_eq!(brute_opt(&fvs, &cycle(5)).unwrap().opt, 1);
        assert_eq!(brute_opt(&fvs, &complete(4)).unwrap().opt, 2);
        // K_n needs n-2 removals to become acyclic.
        assert_eq!(brute_opt(&fvs, &complete(5)).unwrap().opt, 3);
        let povd = spec("povd");
        let r = brute_opt(&povd, &spider_t2()).unwrap();
        assert_eq!(r.opt, 1);
        // Removing the centre is the lexicographically first optimum.
        assert_eq!(r.witness, VertexSet::new(vec![0]));
        assert_eq!(brute_opt(&spec("vc"), &complete(3)).unwrap().opt, 2);
        assert_eq!(brute_opt(&spec("dfvt"), &directed_triangle()).unwrap().opt, 1);
    }

    #[test]
    fn witness_is_valid_and_minimal() {
        let fvs = spec("fvs");
        for seed in 0..15u64 {
            let g = crate::hypergraph::gen_random(
                crate::hypergraph::RandomModel::Gnp,
                8,
                0.35,
                seed,
            )
            .unwrap();
            let r = brute_opt(&fvs, &g).unwrap();
            assert!(fvs.verify_solution(&g, &r.witness).unwrap());
            // Independent exhaustiveness check: scan all subsets of
            // size opt-1 and confirm none is valid.
            if r.opt > 0 {
                let smaller = brute_opt_bounded(&fvs, &g, r.opt as usize - 1).unwrap();
                assert!(smaller.is_none());
            }
        }
    }

    #[test]
    fn brute_opt_respects_size_cap() {
        let fvs = spec("fvs");
        assert!(brute_opt_bounded(&fvs, &complete(5), 2).unwrap().is_none());
        let big = Hypergraph::empty(40);
        assert!(matches!(brute_opt(&fvs, &big), Err(Error::Resource(_))));
    }

    #[test]
    fn sampling_success_certain_cases() {
        // Both endpoints of a single edge drop the cover optimum.
        let vc = spec("vc");
        let step = SamplingStep::new(&vc);
        let e = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let mut rng = Rng::seeded(5);
        let r = estimate_sampling_success(&step, &e, 500, &mut rng).unwrap();
        assert_eq!(r.successes, 500);
        assert!(r.lower_bound <= r.estimate);

        // Every vertex of C5 breaks the only cycle.
        let fvs = spec("fvs");
        let step = SamplingStep::new(&fvs);
        let r = estimate_sampling_success(&step, &cycle(5), 500, &mut rng).unwrap();
        assert_eq!(r.estimate, 1.0);
    }

    #[test]
    fn sampling_success_matches_enumerated_distribution() {
        // Triangle with a pendant path: the core is the triangle, the
        // step is uniform on it, and every triangle vertex drops the
        // optimum, so the exact success probability is 1.
        let g = Hypergraph::new(
            6,
            vec![vec![0, 1], vec![0, 2], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]],
        )
        .unwrap();
        let fvs = spec("fvs");
        let step = SamplingStep::new(&fvs);
        let opt = brute_opt(&fvs, &g).unwrap().opt;
        let mut exact = 0.0f64;
        for v in [0usize, 1, 2] {
            let (rest, _) = g.delete_vertex(v).unwrap();
            if brute_opt(&fvs, &rest).unwrap().opt + 1 == opt {
                exact += 1.0 / 3.0;
            }
        }
        assert!((exact - 1.0).abs() < 1e-12);
        let mut rng = Rng::seeded(11);
        let r = estimate_sampling_success(&step, &g, 600, &mut rng).unwrap();
        let sigma = (exact * (1.0 - exact) / 600.0).sqrt().max(1e-9);
        assert!((r.estimate - exact).abs() <= 3.0 * sigma + 1e-12);
    }

    #[test]
    fn dfvt_triangle_always_succeeds() {
        // Deleting any vertex of the directed 3-cycle makes the
        // tournament acyclic, so the success estimate is exactly 1.
        let dfvt = spec("dfvt");
        let step = SamplingStep::new(&dfvt);
        let mut rng = Rng::seeded(21);
        let r = estimate_sampling_success(&step, &directed_triangle(), 300, &mut rng).unwrap();
        assert_eq!(r.estimate, 1.0);
    }

    #[test]
    fn estimation_requires_graph_outside_property() {
        let fvs = spec("fvs");
        let step = SamplingStep::new(&fvs);
        let mut rng = Rng::seeded(0);
        assert!(matches!(
            estimate_sampling_success(&step, &path(4), 10, &mut rng),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn hoeffding_bound_formula() {
        let r = EstimateReport::from_counts(2000, 1000, 0.999);
        let margin = ((1.0 / 0.001f64).ln() / 4000.0).sqrt();
        assert!((r.lower_bound - (0.5 - margin)).abs() < 1e-12);
        // Degenerate zero-success case clips at 0.
        let z = EstimateReport::from_counts(10, 0, 0.999);
        assert_eq!(z.lower_bound, 0.0);
    }
}
