//! End-to-end drivers: iterated sampling followed by a black-box
//! solver, repeated until the target ratio is hit with constant
//! probability.
//!
//! `rand_and_extend` runs one trial: remove a sampled set S, hand the
//! remainder to the black box with a reduced budget, and return the
//! union. `sampling_with_a_black_box` chooses the number of sampling
//! units t*, repeats trials `2·p^(−t*)·(t*+1)^r` times, and keeps the
//! smallest valid answer. Every returned solution is re-verified
//! against the property decider before it leaves the driver.

use crate::error::{Error, Result};
use crate::hypergraph::{find_pattern, Hypergraph, VertexId, VertexSet};
use crate::oracle;
use crate::problems::{ProblemKind, ProblemSpec, Solution};
use crate::procedure::{build_procedure, multi_sample, ProcedureParams};
use crate::sampling::{Rng, SamplingStep};
use crate::scalar::Scalar;
use num_rational::Ratio;
use rayon::prelude::*;
use std::time::{Duration, Instant};

/// Stream indices: per-trial rng streams start here so that driver
/// trials never collide with streams the caller may already use.
const TRIAL_STREAM_BASE: u64 = 1 << 32;

/// A parameterized α-approximation used as a black box: on (G, k)
/// with OPT(G) ≤ k it returns a valid solution that has size ≤ α·k
/// with probability at least 1/2, in declared time c^k · poly(n).
pub trait BlackBoxSolver: Sync {
    /// Declared approximation ratio α ≥ 1.
    fn alpha(&self) -> Ratio<i128>;
    /// Declared exponent base c ≥ 1.
    fn c(&self) -> f64;
    /// Whether the declared α is actually guaranteed. Witness-greedy
    /// solvers for properties with an infinite forbidden set return
    /// valid solutions but carry no ratio guarantee.
    fn ratio_sound(&self) -> bool {
        true
    }
    fn name(&self) -> &'static str;
    /// Must return a valid solution for every input; the size bound
    /// may fail (with probability < 1/2) but validity may not.
    fn solve(&self, g: &Hypergraph, k: u64, rng: &mut Rng) -> Result<VertexSet>;
}

/// Exact solver by ascending-size subset enumeration. Ignores `k` and
/// always returns an optimum, so its α = 1 contract holds
/// deterministically. Intended for instances of at most ~22 vertices.
pub struct BruteForceSolver {
    spec: ProblemSpec,
}

impl BruteForceSolver {
    pub fn new(spec: &ProblemSpec) -> Self {
        BruteForceSolver { spec: spec.clone() }
    }
}

impl BlackBoxSolver for BruteForceSolver {
    fn alpha(&self) -> Ratio<i128> {
        Ratio::from_integer(1)
    }

    // Nominal declared base; the enumeration is exponential in n, not
    // in k, and the constant only steers δ selection and trial counts.
    fn c(&self) -> f64 {
        1.0
    }

    fn name(&self) -> &'static str {
        "brute"
    }

    fn solve(&self, g: &Hypergraph, _k: u64, _rng: &mut Rng) -> Result<VertexSet> {
        Ok(oracle::brute_opt(&self.spec, g)?.witness)
    }
}

/// First forbidden witness in the fixed search order: pattern
/// witnesses for finite forbidden sets, the first spider or a
/// shortest cycle otherwise.
fn find_witness(spec: &ProblemSpec, g: &Hypergraph) -> Result<VertexSet> {
    let missing = || Error::Internal("graph outside the property has no witness".into());
    match spec.kind() {
        ProblemKind::Fvs => g.shortest_cycle()?.ok_or_else(missing),
        ProblemKind::Povd => match g.find_spider()? {
            Some(z) => Ok(z),
            None => g.shortest_cycle()?.ok_or_else(missing),
        },
        _ => {
            for p in spec.patterns() {
                if let Some(z) = find_pattern(g, p)? {
                    return Ok(z);
                }
            }
            Err(missing())
        }
    }
}

/// Deletes whole forbidden witnesses until the property holds;
/// returns the union, in `g`'s vertex ids. Always valid; for a finite
/// forbidden set with at most η vertices per structure the size is at
/// most η·OPT.
pub fn greedy_complete(spec: &ProblemSpec, g: &Hypergraph) -> Result<VertexSet> {
    spec.validate(g)?;
    let mut current = g.clone();
    let mut origin: Vec<VertexId> = (0..g.n()).collect();
    let mut removed: Vec<VertexId> = Vec::new();
    while !spec.check_in_property(&current)? {
        let witness = find_witness(spec, &current)?;
        for v in witness.iter() {
            removed.push(origin[v]);
        }
        let (next, old_to_new) = current.delete(&witness)?;
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

/// Witness-deletion greedy as a black box. For problems with a finite
/// forbidden set this is an η(Ω)-approximation running in polynomial
/// time (c = 1); for the others the declared ratio 1/q is nominal and
/// the solver reports itself ratio-unsound.
pub struct GreedyEtaSolver {
    spec: ProblemSpec,
    alpha: Ratio<i128>,
    sound: bool,
}

impl GreedyEtaSolver {
    pub fn new(spec: &ProblemSpec) -> Self {
        let q = spec.q();
        let alpha = match spec.eta() {
            Some(eta) => Ratio::from_integer(eta as i128),
            None => Ratio::new(*q.denom(), *q.numer()),
        };
        GreedyEtaSolver { spec: spec.clone(), alpha, sound: spec.eta().is_some() }
    }
}

impl BlackBoxSolver for GreedyEtaSolver {
    fn alpha(&self) -> Ratio<i128> {
        self.alpha
    }

    fn c(&self) -> f64 {
        1.0
    }

    fn ratio_sound(&self) -> bool {
        self.sound
    }

    fn name(&self) -> &'static str {
        "greedy"
    }

    fn solve(&self, g: &Hypergraph, _k: u64, _rng: &mut Rng) -> Result<VertexSet> {
        greedy_complete(&self.spec, g)
    }
}

/// Picks the δ that minimizes the resulting exponent base for a black
/// box with declared (α, c): the relevant δ* when β lies strictly
/// inside the corresponding side bracket, otherwise β itself.
pub fn optimize_delta(spec: &ProblemSpec, alpha: Ratio<i128>, c: f64, beta: &Scalar) -> Result<Scalar> {
    let q = spec.q();
    let alpha_s = Scalar::rat(alpha);
    let alpha_f = alpha_s.as_f64();
    let beta_f = beta.as_f64();
    crate::calculator::RuntimeQuery::new(alpha_f, beta_f, c, spec.q_f64())?.validate()?;
    if *beta == alpha_s {
        return Err(Error::Config(format!(
            "beta = alpha = {beta}: the admissible interval for delta is undefined"
        )));
    }
    let inv_q = Scalar::rat(Ratio::new(*q.denom(), *q.numer()));
    if *beta > alpha_s {
        // δ*_right(α, 1, q) = 1/q and δ*_right(1, c, q) = 1/(qc) in
        // closed form; fall back to bisection otherwise.
        let ds = if c == 1.0 {
            inv_q
        } else if alpha == Ratio::from_integer(1) {
            Scalar::Real(1.0 / (spec.q_f64() * c))
        } else {
            Scalar::Real(crate::calculator::delta_star(
                crate::calculator::Side::Right,
                alpha_f,
                c,
                spec.q_f64(),
                crate::calculator::DELTA_STAR_TOL,
            )?)
        };
        Ok(if *beta < ds { ds } else { *beta })
    } else {
        let ds = if c == 1.0 && alpha == Ratio::from_integer(2) {
            // δ*_left(2, 1, q) = 1/(1−q), exactly rational.
            Scalar::rat(Ratio::new(*q.denom(), *q.denom() - *q.numer()))
        } else {
            Scalar::Real(crate::calculator::delta_star(
                crate::calculator::Side::Left,
                alpha_f,
                c,
                spec.q_f64(),
                crate::calculator::DELTA_STAR_TOL,
            )?)
        };
        Ok(if *beta > ds { ds } else { *beta })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Target approximation ratio β.
    pub beta: Scalar,
    /// Procedure budget factor; `None` selects the optimum for the
    /// solver's declared (α, c).
    pub delta: Option<Scalar>,
    /// Optional extra cap on the trial count.
    pub repeat_override: Option<u64>,
    pub seed: u64,
    /// Hard cap on trials; hitting it is recorded in the report and
    /// makes the probabilistic guarantee conditional.
    pub max_trials_safety: u64,
}

impl RunConfig {
    pub fn new(beta: Scalar) -> Self {
        RunConfig {
            beta,
            delta: None,
            repeat_override: None,
            seed: 0,
            max_trials_safety: 1_000_000,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_delta(mut self, delta: Scalar) -> Self {
        self.delta = Some(delta);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DriverPath {
    /// t* fell below the procedure threshold; solved by direct
    /// bounded enumeration.
    Enumeration,
    /// The full sample-then-extend loop ran.
    Sampled,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub solution: Solution,
    pub t_star: u64,
    pub delta: Scalar,
    pub trials_executed: u64,
    /// Solution size per trial, in trial order (empty on the
    /// enumeration path).
    pub trial_sizes: Vec<u64>,
    /// True when the trial count was truncated by a cap.
    pub capped: bool,
    /// True when no solution of size ≤ k exists and the driver fell
    /// back to greedy completion.
    pub budget_infeasible: bool,
    pub path: DriverPath,
    pub wall: Duration,
}

/// Number of optimum units the procedure must remove before the black
/// box takes over: `⌈((β−α)/(δ−α))·k⌉` when β < α and the floor when
/// β > α. Exact when all inputs are rational. Requires
/// δ ∈ interval(α, β), which makes the ratio positive.
pub fn t_star(alpha: &Scalar, beta: &Scalar, delta: &Scalar, k: u64) -> u64 {
    let ratio = (*beta - *alpha) / (*delta - *alpha);
    let signed = if *beta < *alpha {
        (ratio * Scalar::from_int(k as i128)).ceil()
    } else {
        (ratio * Scalar::from_int(k as i128)).floor()
    };
    signed.max(0) as u64
}

/// One sample-then-extend trial. Requires `T ≤ t ≤ (β/δ)·k`.
#[allow(clippy::too_many_arguments)]
pub fn rand_and_extend(
    step: &SamplingStep,
    params: &ProcedureParams,
    solver: &dyn BlackBoxSolver,
    g: &Hypergraph,
    k: u64,
    t: u64,
    beta: &Scalar,
    rng: &mut Rng,
) -> Result<VertexSet> {
    if k as usize > g.n() {
        return Err(Error::Config(format!("k = {k} exceeds the vertex count {}", g.n())));
    }
    let delta = params.delta;
    let alpha = Scalar::rat(solver.alpha());
    let t_s = Scalar::from_int(t as i128);
    let budget_bound = *beta * Scalar::from_int(k as i128) / delta;
    if t < params.big_t || t_s > budget_bound {
        return Err(Error::Config(format!(
            "t = {t} outside [T, (beta/delta)*k] = [{}, {}]",
            params.big_t, budget_bound
        )));
    }
    let sampled = multi_sample(step, &delta, g, t, rng)?;
    let (rest, old_to_new) = g.delete(&sampled)?;
    let solver_budget =
        ((*beta * Scalar::from_int(k as i128) - delta * t_s) / alpha).floor().max(0) as u64;
    let extension = solver.solve(&rest, solver_budget, rng)?;
    // Translate the extension back to g's vertex ids.
    let mut rest_origin = vec![0; rest.n()];
    for (old, new) in old_to_new.iter().enumerate() {
        if let Some(new) = new {
            rest_origin[*new] = old;
        }
    }
    let extension: VertexSet = extension.iter().map(|v| rest_origin[v]).collect();
    Ok(sampled.union(&extension))
}

/// Full driver: pick t*, then either solve small cases by bounded
/// enumeration or run independent `rand_and_extend` trials and keep
/// the smallest result. If OPT(G) ≤ k, the returned solution has size
/// at most β·k with probability at least 1/2; validity is
/// unconditional.
pub fn sampling_with_a_black_box(
    spec: &ProblemSpec,
    step: &SamplingStep,
    solver: &dyn BlackBoxSolver,
    g: &Hypergraph,
    k: u64,
    config: &RunConfig,
) -> Result<RunReport> {
    let start = Instant::now();
    spec.validate(g)?;
    if k as usize > g.n() {
        return Err(Error::Config(format!("k = {k} exceeds the vertex count {}", g.n())));
    }
    let alpha = Scalar::rat(solver.alpha());
    let beta = config.beta;
    if beta == alpha {
        return Err(Error::Config(format!(
            "beta = alpha = {beta}: the admissible interval for delta is undefined; \
             call the solver directly instead"
        )));
    }
    let delta = match config.delta {
        Some(d) => d,
        None => optimize_delta(spec, solver.alpha(), solver.c(), &beta)?,
    };
    let in_interval = if beta > alpha {
        delta >= beta
    } else {
        Scalar::from_int(1) <= delta && delta <= beta
    };
    if !in_interval {
        return Err(Error::Config(format!(
            "delta = {delta} outside interval(alpha = {alpha}, beta = {beta})"
        )));
    }
    let params = build_procedure(step, delta)?;
    let t_star = t_star(&alpha, &beta, &delta, k);

    if t_star < params.big_t {
        // Below the procedure threshold the guarantee degenerates;
        // enumerate solutions of size at most k directly.
        let (solution, infeasible) = match oracle::brute_opt_bounded(spec, g, k as usize)? {
            Some(opt) => (opt.witness, false),
            None => (greedy_complete(spec, g)?, true),
        };
        let solution = Solution::verified(spec, g, solution)?;
        return Ok(RunReport {
            solution,
            t_star,
            delta,
            trials_executed: 0,
            trial_sizes: Vec::new(),
            capped: false,
            budget_infeasible: infeasible,
            path: DriverPath::Enumeration,
            wall: start.elapsed(),
        });
    }

    let intended =
        2.0 * params.p.powi(-(t_star as i32)) * ((t_star + 1) as f64).powi(params.r as i32);
    let mut repeats = if intended.is_finite() && intended <= config.max_trials_safety as f64 {
        (intended.ceil() as u64).max(1)
    } else {
        config.max_trials_safety
    };
    let mut capped = (repeats as f64) < intended.ceil();
    if let Some(cap) = config.repeat_override {
        if cap < repeats {
            repeats = cap.max(1);
            capped = true;
        }
    }

    let results: Vec<VertexSet> = (0..repeats)
        .into_par_iter()
        .map(|trial| {
            let mut rng = Rng::stream(config.seed, TRIAL_STREAM_BASE + trial);
            rand_and_extend(step, &params, solver, g, k, t_star, &beta, &mut rng)
        })
        .collect::<Result<Vec<_>>>()?;
    let trial_sizes: Vec<u64> = results.iter().map(|s| s.len() as u64).collect();
    let best = results
        .into_iter()
        .enumerate()
        .min_by_key(|(i, s)| (s.len(), *i))
        .map(|(_, s)| s)
        .ok_or_else(|| Error::Internal("driver ran zero trials".into()))?;
    let solution = Solution::verified(spec, g, best)?;
    Ok(RunReport {
        solution,
        t_star,
        delta,
        trials_executed: repeats,
        trial_sizes,
        capped,
        budget_infeasible: false,
        path: DriverPath::Sampled,
        wall: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    fn setup(name: &str) -> (ProblemSpec, SamplingStep, BruteForceSolver) {
        let spec = ProblemSpec::by_name(name).unwrap();
        let step = SamplingStep::new(&spec);
        let solver = BruteForceSolver::new(&spec);
        (spec, step, solver)
    }

    #[test]
    fn c6_fvs_solved_with_exact_solver() {
        let (spec, step, solver) = setup("fvs");
        let g = cycle(6);
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let cfg = RunConfig::new(beta).with_seed(3).with_delta(beta);
        let report = sampling_with_a_black_box(&spec, &step, &solver, &g, 1, &cfg).unwrap();
        // t* = ((1.5-1)/(1.5-1))*1 = 1, below T = 2: enumeration path.
        assert_eq!(report.t_star, 1);
        assert_eq!(report.solution.set.len(), 1);
        assert!(spec.verify_solution(&g, &report.solution.set).unwrap());
    }

    #[test]
    fn sampled_path_runs_and_verifies() {
        let (spec, step, solver) = setup("vc");
        // Four disjoint edges, OPT = 4. With delta = 2 (= 1/q, p = 1)
        // and beta = 3/2: t* = floor(0.5 * 4) = 2 >= T = 2, so the
        // sampled path runs 2 * (t*+1)^4 = 162 trials. Every draw of
        // the cover step kills one edge, so each trial ends optimal.
        let g = Hypergraph::new(8, vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]]).unwrap();
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let cfg = RunConfig::new(beta).with_seed(9).with_delta(Scalar::from_int(2));
        let report = sampling_with_a_black_box(&spec, &step, &solver, &g, 4, &cfg).unwrap();
        assert_eq!(report.path, DriverPath::Sampled);
        assert_eq!(report.t_star, 2);
        assert_eq!(report.trials_executed, 162);
        assert!(!report.capped);
        assert_eq!(report.solution.set.len(), 4);
        assert!(spec.verify_solution(&g, &report.solution.set).unwrap());
    }

    #[test]
    fn driver_is_deterministic_per_seed() {
        let (spec, step, solver) = setup("vc");
        let g = crate::hypergraph::gen_random(crate::hypergraph::RandomModel::Gnp, 10, 0.4, 5)
            .unwrap();
        let k = oracle::brute_opt(&spec, &g).unwrap().opt;
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let cfg = RunConfig::new(beta).with_seed(77).with_delta(Scalar::from_int(2));
        let a = sampling_with_a_black_box(&spec, &step, &solver, &g, k, &cfg).unwrap();
        let b = sampling_with_a_black_box(&spec, &step, &solver, &g, k, &cfg).unwrap();
        assert_eq!(a.solution.set, b.solution.set);
        assert_eq!(a.trial_sizes, b.trial_sizes);
        assert_eq!(a.t_star, b.t_star);
    }

    #[test]
    fn beta_equal_alpha_is_rejected() {
        let (spec, step, solver) = setup("fvs");
        let cfg = RunConfig::new(Scalar::from_int(1));
        let err = sampling_with_a_black_box(&spec, &step, &solver, &cycle(5), 1, &cfg);
        assert!(matches!(err, Err(Error::Config(_))));
    }

    #[test]
    fn delta_outside_interval_is_rejected() {
        let (spec, step, solver) = setup("fvs");
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let cfg = RunConfig::new(beta).with_delta(Scalar::from_ratio(5, 4).unwrap());
        let err = sampling_with_a_black_box(&spec, &step, &solver, &cycle(5), 1, &cfg);
        assert!(matches!(err, Err(Error::Config(_))));
    }

    #[test]
    fn budget_infeasible_falls_back_to_greedy() {
        let (spec, step, solver) = setup("vc");
        // K4 has OPT 3 > k = 1; enumeration finds nothing and the
        // driver must still return a valid (flagged) solution.
        let g = complete(4);
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let cfg = RunConfig::new(beta).with_delta(Scalar::from_int(2));
        let report = sampling_with_a_black_box(&spec, &step, &solver, &g, 1, &cfg).unwrap();
        assert!(report.budget_infeasible);
        assert!(spec.verify_solution(&g, &report.solution.set).unwrap());
    }

    #[test]
    fn optimize_delta_piecewise_rule() {
        let fvs = ProblemSpec::by_name("fvs").unwrap();
        // alpha = 1, c = 2.7, q = 1/4: delta*_right = 1/(qc) = 1.4815.
        let one = Ratio::from_integer(1);
        let d = optimize_delta(&fvs, one, 2.7, &Scalar::from_ratio(11, 10).unwrap()).unwrap();
        assert!((d.as_f64() - 1.0 / (0.25 * 2.7)).abs() < 1e-9);
        // beta beyond delta*_right: delta = beta.
        let d = optimize_delta(&fvs, one, 2.7, &Scalar::from_ratio(8, 5).unwrap()).unwrap();
        assert_eq!(d, Scalar::from_ratio(8, 5).unwrap());
        // alpha = 2, c = 1, q = 1/4: delta*_left = 4/3 (exact).
        let two = Ratio::from_integer(2);
        let d = optimize_delta(&fvs, two, 1.0, &Scalar::from_ratio(19, 10).unwrap()).unwrap();
        assert_eq!(d, Scalar::from_ratio(4, 3).unwrap());
        assert!(d.is_rational());
        // beta below delta*_left: delta = beta.
        let d = optimize_delta(&fvs, two, 1.0, &Scalar::from_ratio(6, 5).unwrap()).unwrap();
        assert_eq!(d, Scalar::from_ratio(6, 5).unwrap());
        // beta = alpha rejected.
        assert!(optimize_delta(&fvs, one, 2.7, &Scalar::from_int(1)).is_err());
        // constraint violation: c too large for q.
        assert!(optimize_delta(&fvs, one, 5.0, &Scalar::from_ratio(3, 2).unwrap()).is_err());
    }

    #[test]
    fn greedy_solver_ratios() {
        let vc = ProblemSpec::by_name("vc").unwrap();
        let solver = GreedyEtaSolver::new(&vc);
        assert_eq!(solver.alpha(), Ratio::from_integer(2));
        assert!(solver.ratio_sound());
        // Perfect matching of m edges: greedy deletes both endpoints
        // of each edge, twice the optimum.
        let m = Hypergraph::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let mut rng = Rng::seeded(0);
        let s = solver.solve(&m, 3, &mut rng).unwrap();
        assert_eq!(s.len(), 6);
        assert!(vc.verify_solution(&m, &s).unwrap());

        let pvc = ProblemSpec::by_name("3pvc").unwrap();
        let s3 = GreedyEtaSolver::new(&pvc);
        let sol = s3.solve(&path(3), 1, &mut rng).unwrap();
        assert_eq!(sol.len(), 3);

        let dfvt = ProblemSpec::by_name("dfvt").unwrap();
        let sd = GreedyEtaSolver::new(&dfvt);
        let sol = sd.solve(&directed_triangle(), 1, &mut rng).unwrap();
        assert_eq!(sol.len(), 3);

        // fvs greedy is valid but ratio-unsound (alpha = 1/q = 4 nominal).
        let fvs = ProblemSpec::by_name("fvs").unwrap();
        let sf = GreedyEtaSolver::new(&fvs);
        assert!(!sf.ratio_sound());
        assert_eq!(sf.alpha(), Ratio::from_integer(4));
        let sol = sf.solve(&complete(5), 3, &mut rng).unwrap();
        assert!(fvs.verify_solution(&complete(5), &sol).unwrap());
    }

    #[test]
    fn rand_and_extend_respects_parameter_ranges() {
        let (_, step, solver) = setup("fvs");
        let params = build_procedure(&step, Scalar::from_int(2)).unwrap();
        let beta = Scalar::from_ratio(3, 2).unwrap();
        let mut rng = Rng::seeded(1);
        // t below the threshold T = 2 is rejected.
        let err = rand_and_extend(&step, &params, &solver, &cycle(6), 1, 1, &beta, &mut rng);
        assert!(matches!(err, Err(Error::Config(_))));
        // t beyond (beta/delta)*k is rejected.
        let err = rand_and_extend(&step, &params, &solver, &cycle(6), 2, 4, &beta, &mut rng);
        assert!(matches!(err, Err(Error::Config(_))));
    }
}
