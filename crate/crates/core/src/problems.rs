//! Registry of vertex-deletion problems.
//!
//! A [`ProblemSpec`] bundles an input-class validator (membership in
//! the closed graph family 𝒢), a polynomial-time decider for the
//! hereditary target property Π, the forbidden patterns that drive
//! the generic sampling step where the forbidden set is finite, and
//! published (α, c) solver constants that feed the running-time
//! calculator.

use crate::error::{Error, Result};
use crate::hypergraph::{find_pattern, Hypergraph, Pattern, VertexSet};
use num_rational::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    VertexCover,
    VertexCoverDeg3,
    HittingSet3,
    PathVc3,
    PathVc4,
    Fvs,
    Povd,
    Dfvt,
}

/// A published algorithm usable as a black box: an α-approximation
/// running in c^k · poly(n). The constants are data for the
/// calculator; the artifact does not implement these solvers.
#[derive(Debug, Clone)]
pub struct KnownAlgorithm {
    pub alpha: Ratio<i128>,
    pub c: f64,
    pub label: &'static str,
}

#[derive(Debug, Clone)]
pub struct ProblemSpec {
    name: &'static str,
    kind: ProblemKind,
    q: Ratio<i128>,
    patterns: Vec<Pattern>,
    eta: Option<usize>,
    known_algorithms: Vec<KnownAlgorithm>,
}

/// A vertex set whose deletion puts the graph into Π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub set: VertexSet,
}

impl Solution {
    /// Checks the defining invariant (`G \ set ∈ Π`) before wrapping.
    pub fn verified(spec: &ProblemSpec, g: &Hypergraph, set: VertexSet) -> Result<Solution> {
        if spec.verify_solution(g, &set)? {
            Ok(Solution { set })
        } else {
            Err(Error::Internal(format!(
                "candidate set {:?} is not a valid {} solution",
                set.as_slice(),
                spec.name()
            )))
        }
    }
}

fn alg(alpha: Ratio<i128>, c: f64, label: &'static str) -> KnownAlgorithm {
    KnownAlgorithm { alpha, c, label }
}

fn whole(n: i128) -> Ratio<i128> {
    Ratio::from_integer(n)
}

impl ProblemSpec {
    /// All shipped problems, in stable order.
    pub fn registry() -> Vec<ProblemSpec> {
        vec![
            ProblemSpec {
                name: "vc",
                kind: ProblemKind::VertexCover,
                q: Ratio::new(1, 2),
                patterns: vec![Pattern::single_edge(2)],
                eta: Some(2),
                known_algorithms: vec![
                    alg(whole(1), 1.2738, "exact fpt"),
                    alg(whole(2), 1.0, "poly 2-approx"),
                ],
            },
            ProblemSpec {
                name: "vc-deg3",
                kind: ProblemKind::VertexCoverDeg3,
                q: Ratio::new(1, 2),
                patterns: vec![Pattern::single_edge(2)],
                eta: Some(2),
                known_algorithms: vec![
                    alg(whole(1), 1.1616, "exact fpt"),
                    alg(Ratio::new(7, 6), 1.0, "poly 7/6-approx"),
                ],
            },
            // Hitting set ships for edge size 3 only. The d-uniform
            // generalization is mechanical: validate d-uniformity,
            // forbid the single d-edge pattern, set q = 1/d, eta = d.
            ProblemSpec {
                name: "3hs",
                kind: ProblemKind::HittingSet3,
                q: Ratio::new(1, 3),
                patterns: vec![Pattern::single_edge(3)],
                eta: Some(3),
                known_algorithms: vec![alg(whole(1), 2.076, "exact fpt")],
            },
            ProblemSpec {
                name: "3pvc",
                kind: ProblemKind::PathVc3,
                q: Ratio::new(1, 3),
                patterns: vec![Pattern::path(3)],
                eta: Some(3),
                known_algorithms: vec![
                    alg(whole(1), 1.708, "exact fpt"),
                    alg(whole(2), 1.0, "poly 2-approx"),
                ],
            },
            ProblemSpec {
                name: "4pvc",
                kind: ProblemKind::PathVc4,
                q: Ratio::new(1, 4),
                patterns: vec![Pattern::path(4)],
                eta: Some(4),
                known_algorithms: vec![
                    alg(whole(1), 2.138, "exact fpt"),
                    alg(whole(3), 1.0, "poly 3-approx"),
                ],
            },
            ProblemSpec {
                name: "fvs",
                kind: ProblemKind::Fvs,
                q: Ratio::new(1, 4),
                patterns: Vec::new(),
                eta: None,
                known_algorithms: vec![
                    alg(whole(1), 2.7, "exact fpt"),
                    alg(whole(2), 1.0, "poly 2-approx"),
                ],
            },
            ProblemSpec {
                name: "povd",
                kind: ProblemKind::Povd,
                q: Ratio::new(1, 7),
                patterns: Vec::new(),
                eta: None,
                known_algorithms: vec![alg(whole(1), 3.888, "exact fpt")],
            },
            ProblemSpec {
                name: "dfvt",
                kind: ProblemKind::Dfvt,
                q: Ratio::new(1, 3),
                patterns: vec![Pattern::directed_triangle()],
                eta: Some(3),
                known_algorithms: vec![
                    alg(whole(1), 1.618, "exact fpt"),
                    alg(whole(2), 1.0, "poly 2-approx"),
                ],
            },
        ]
    }

    pub fn by_name(name: &str) -> Result<ProblemSpec> {
        Self::registry()
            .into_iter()
            .find(|p| p.name == name)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::registry().iter().map(|p| p.name).collect();
                Error::Config(format!("unknown problem `{name}` (known: {})", names.join(", ")))
            })
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    /// Success probability of the attached sampling step.
    pub fn q(&self) -> Ratio<i128> {
        self.q
    }

    pub fn q_f64(&self) -> f64 {
        *self.q.numer() as f64 / *self.q.denom() as f64
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    /// Maximum vertex count over the forbidden set, when finite.
    pub fn eta(&self) -> Option<usize> {
        self.eta
    }

    pub fn known_algorithms(&self) -> &[KnownAlgorithm] {
        &self.known_algorithms
    }

    /// Membership of `g` in the problem's input class 𝒢.
    pub fn validate(&self, g: &Hypergraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Domain(format!("{}: {msg}", self.name)));
        match self.kind {
            ProblemKind::VertexCover | ProblemKind::PathVc3 | ProblemKind::PathVc4
            | ProblemKind::Fvs | ProblemKind::Povd => {
                if !g.is_two_uniform() {
                    return fail("input must be an undirected 2-uniform graph".into());
                }
            }
            ProblemKind::VertexCoverDeg3 => {
                if !g.is_two_uniform() {
                    return fail("input must be an undirected 2-uniform graph".into());
                }
                for v in 0..g.n() {
                    let d = g.degree(v)?;
                    if d > 3 {
                        return fail(format!("vertex {v} has degree {d} > 3"));
                    }
                }
            }
            ProblemKind::HittingSet3 => {
                if g.is_directed() || g.edges().iter().any(|e| e.len() != 3) {
                    return fail("input must be a 3-uniform hypergraph".into());
                }
            }
            ProblemKind::Dfvt => {
                if !g.is_directed() {
                    return fail("input must be a tournament".into());
                }
                for i in 0..g.n() {
                    for j in (i + 1)..g.n() {
                        let fwd = g.has_arc(i, j);
                        let back = g.has_arc(j, i);
                        if fwd == back {
                            return fail(format!(
                                "not a tournament: pair ({i},{j}) has {} arcs",
                                if fwd { 2 } else { 0 }
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Decides `g ∈ Π`. Errors when `g` is outside the input class.
    pub fn check_in_property(&self, g: &Hypergraph) -> Result<bool> {
        self.validate(g)?;
        Ok(match self.kind {
            ProblemKind::VertexCover | ProblemKind::VertexCoverDeg3 | ProblemKind::HittingSet3 => {
                g.edge_count() == 0
            }
            ProblemKind::PathVc3 | ProblemKind::PathVc4 => {
                find_pattern(g, &self.patterns[0])?.is_none()
            }
            ProblemKind::Fvs => !g.has_cycle()?,
            ProblemKind::Povd => !g.has_cycle()? && g.find_spider()?.is_none(),
            ProblemKind::Dfvt => !has_directed_triangle(g),
        })
    }

    /// `true` iff deleting `s` from `g` lands in Π.
    pub fn verify_solution(&self, g: &Hypergraph, s: &VertexSet) -> Result<bool> {
        s.validate_for(g)?;
        let (rest, _) = g.delete(s)?;
        self.check_in_property(&rest)
    }
}

fn has_directed_triangle(g: &Hypergraph) -> bool {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for e in g.edges() {
        m[e[0]][e[1]] = true;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if (m[i][j] && m[j][k] && m[k][i]) || (m[i][k] && m[k][j] && m[j][i]) {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;
    use crate::hypergraph::gen_random;
    use crate::hypergraph::RandomModel;

    fn spec(name: &str) -> ProblemSpec {
        ProblemSpec::by_name(name).unwrap()
    }

    #[test]
    fn registry_constants() {
        let fvs = spec("fvs");
        assert_eq!(fvs.q(), Ratio::new(1, 4));
        let povd = spec("povd");
        assert_eq!(povd.q(), Ratio::new(1, 7));
        let pvc3 = spec("3pvc");
        assert_eq!(pvc3.q(), Ratio::new(1, 3));
        assert_eq!(pvc3.eta(), Some(3));
        assert_eq!(spec("dfvt").q(), Ratio::new(1, 3));
        assert_eq!(spec("vc").q(), Ratio::new(1, 2));
        assert_eq!(spec("3hs").q(), Ratio::new(1, 3));
        assert_eq!(spec("4pvc").q(), Ratio::new(1, 4));
        assert_eq!(spec("vc-deg3").known_algorithms()[1].alpha, Ratio::new(7, 6));
    }

    #[test]
    fn fvs_property() {
        let fvs = spec("fvs");
        assert!(!fvs.check_in_property(&cycle(5)).unwrap());
        assert!(fvs.check_in_property(&path(7)).unwrap());
        assert!(fvs.check_in_property(&Hypergraph::empty(0)).unwrap());
    }

    #[test]
    fn povd_property() {
        let povd = spec("povd");
        assert!(!povd.check_in_property(&spider_t2()).unwrap());
        assert!(povd.check_in_property(&path(7)).unwrap());
        assert!(!povd.check_in_property(&cycle(4)).unwrap());
    }

    #[test]
    fn pvc_property() {
        let p3 = spec("3pvc");
        assert!(!p3.check_in_property(&path(3)).unwrap());
        assert!(p3.check_in_property(&path(2)).unwrap());
        // A perfect matching has no P3.
        let m = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert!(p3.check_in_property(&m).unwrap());
        let p4 = spec("4pvc");
        assert!(p4.check_in_property(&path(3)).unwrap());
        assert!(!p4.check_in_property(&path(4)).unwrap());
        // K3 contains P3 as a subgraph.
        assert!(!p3.check_in_property(&complete(3)).unwrap());
    }

    #[test]
    fn dfvt_property_and_validation() {
        let dfvt = spec("dfvt");
        assert!(!dfvt.check_in_property(&directed_triangle()).unwrap());
        let transitive = Hypergraph::new_directed(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(dfvt.check_in_property(&transitive).unwrap());
        // Missing arc: not a tournament.
        let partial = Hypergraph::new_directed(3, vec![(0, 1)]).unwrap();
        assert!(matches!(dfvt.check_in_property(&partial), Err(Error::Domain(_))));
        // Undirected input rejected.
        assert!(dfvt.validate(&complete(3)).is_err());
    }

    #[test]
    fn vc_deg3_validation() {
        let s = spec("vc-deg3");
        assert!(s.validate(&cycle(5)).is_ok());
        assert!(s.validate(&complete(5)).is_err());
    }

    #[test]
    fn hs3_validation() {
        let s = spec("3hs");
        let good = Hypergraph::new(5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(s.validate(&good).is_ok());
        assert!(!s.check_in_property(&good).unwrap());
        assert!(s.validate(&cycle(4)).is_err());
    }

    #[test]
    fn verify_solution_examples() {
        let fvs = spec("fvs");
        let k4 = complete(4);
        assert!(fvs.verify_solution(&k4, &VertexSet::new(vec![0, 1])).unwrap());
        assert!(!fvs.verify_solution(&k4, &VertexSet::new(vec![0])).unwrap());
        let vc = spec("vc");
        assert!(vc.verify_solution(&complete(3), &VertexSet::new(vec![0, 1])).unwrap());
    }

    #[test]
    fn property_deciders_agree_with_pattern_search_small() {
        // For the finite-forbidden-set problems the fast decider must
        // agree with exhaustive pattern search on all small graphs.
        for name in ["vc", "3hs", "3pvc", "4pvc"] {
            let s = spec(name);
            for seed in 0..60u64 {
                let g = if name == "3hs" {
                    gen_random(RandomModel::UniformHyper(3), 6, 0.3, seed).unwrap()
                } else {
                    gen_random(RandomModel::Gnp, 7, 0.35, seed).unwrap()
                };
                let fast = s.check_in_property(&g).unwrap();
                let search = s
                    .patterns()
                    .iter()
                    .all(|p| find_pattern(&g, p).unwrap().is_none());
                assert_eq!(fast, search, "{name} seed {seed}");
            }
        }
        // Same for dfvt over random tournaments.
        let dfvt = spec("dfvt");
        for seed in 0..60u64 {
            let g = gen_random(RandomModel::Tournament, 6, 0.5, seed).unwrap();
            let fast = dfvt.check_in_property(&g).unwrap();
            let search = find_pattern(&g, &dfvt.patterns()[0]).unwrap().is_none();
            assert_eq!(fast, search, "dfvt seed {seed}");
        }
    }

    #[test]
    fn hereditary_spot_check() {
        // Members of Π stay in Π under taking induced subgraphs.
        use crate::sampling::Rng;
        let mut rng = Rng::seeded(99);
        for s in ProblemSpec::registry() {
            let mut checked = 0;
            let mut seed = 0u64;
            while checked < 200 {
                seed += 1;
                let g = match s.kind() {
                    ProblemKind::Dfvt => {
                        gen_random(RandomModel::Tournament, 7, 0.5, seed).unwrap()
                    }
                    ProblemKind::HittingSet3 => {
                        gen_random(RandomModel::UniformHyper(3), 7, 0.15, seed).unwrap()
                    }
                    ProblemKind::VertexCoverDeg3 => {
                        let g = gen_random(RandomModel::Gnp, 7, 0.15, seed).unwrap();
                        if s.validate(&g).is_err() {
                            continue;
                        }
                        g
                    }
                    _ => gen_random(RandomModel::Gnp, 7, 0.15, seed).unwrap(),
                };
                if !s.check_in_property(&g).unwrap_or(false) {
                    continue;
                }
                let u: VertexSet = (0..g.n()).filter(|_| rng.chance(0.6)).collect();
                let sub = g.induced(&u).unwrap();
                assert!(
                    s.check_in_property(&sub).unwrap(),
                    "{}: induced subgraph left the property",
                    s.name()
                );
                checked += 1;
            }
        }
    }
}
