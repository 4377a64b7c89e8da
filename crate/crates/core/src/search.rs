//! Simulated annealing for gain functions with symmetric spectra on a fixed
//! underlying graph. Spanning-forest edges are pinned to gain 1, so each
//! point of the search space is one angle per cotree edge.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use num_complex::Complex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::cycles::{cycle_gain, fundamental_cycle_basis, spanning_forest, Cycle};
use crate::equivalence::{is_switching_isomorphic_with, EquivalenceOptions};
use crate::error::{Error, Result};
use crate::graph::{GainGraph, GainMatrix};
use crate::scalar::Scalar;
use crate::spectra::{eigenvalues, hermitian_eigenvalues, Spectrum};
use crate::unit::ComplexUnit;

/// Objective below which a result counts as spectrally symmetric.
pub const SUCCESS_THRESHOLD: f64 = 1e-6;
/// Cycle-gain tolerance when grouping approximate solutions into classes.
pub const DEDUPE_TOLERANCE: f64 = 1e-2;

#[derive(Debug, Clone, PartialEq)]
pub struct AnnealConfig {
    pub iterations: usize,
    pub restarts: usize,
    pub t0: f64,
    /// Geometric cooling factor, strictly between 0 and 1.
    pub cooling: f64,
    /// Angle step deviation in radians at temperature `t0`.
    pub step_sigma0: f64,
    /// Objective evaluations of the zero-temperature compass search that
    /// refines each restart's best point; 0 disables it.
    pub polish: usize,
    pub seed: u64,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        Self {
            iterations: 20_000,
            restarts: 5,
            t0: 1.0,
            cooling: 0.995,
            step_sigma0: 0.5,
            polish: 10_000,
            seed: 0,
        }
    }
}

impl AnnealConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidParameter(what.to_owned()));
        if self.iterations == 0 || self.restarts == 0 {
            return bad("iterations and restarts must be positive");
        }
        if !(self.t0 > 0.0 && self.t0.is_finite()) {
            return bad("t0 must be positive");
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return bad("cooling must lie strictly between 0 and 1");
        }
        if !(self.step_sigma0 > 0.0 && self.step_sigma0.is_finite()) {
            return bad("step_sigma0 must be positive");
        }
        Ok(())
    }

    /// Seed of the `run`-th independent search.
    pub fn derived_seed(&self, run: usize) -> u64 {
        self.seed
            .wrapping_add((run as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult<T> {
    pub gains: GainGraph<T>,
    pub objective: T,
    /// Fundamental cycles of the pinned spanning forest with their gains.
    pub basis_gains: Vec<(Cycle, ComplexUnit<T>)>,
    /// Cotree edges `(u, v)` and their angles, in edge order.
    pub angles: Vec<((usize, usize), T)>,
    pub accepted_moves: usize,
    pub restart_index: usize,
}

/// `Σ_j (λ_j + λ_{n+1−j})²` over the descending spectrum.
pub fn symmetry_objective<T: Scalar>(g: &GainGraph<T>) -> Result<T> {
    Ok(pairing_objective(&eigenvalues(g)?))
}

/// Progress callback: `(restart, iteration, current, best)` after each move.
pub type Observer<'a, T> = dyn FnMut(usize, usize, T, T) -> ControlFlow<()> + 'a;

/// Gain matrix with the forest pinned at 1 and one free angle per cotree
/// edge.
struct Landscape<T> {
    base: GainGraph<T>,
    cotree: Vec<(usize, usize)>,
    template: GainMatrix<T>,
}

impl<T: Scalar> Landscape<T> {
    fn new(underlying: &GainGraph<T>) -> Self {
        let base = underlying.map_gains(|_| ComplexUnit::one());
        let tree: HashSet<(usize, usize)> = spanning_forest(&base)
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let cotree = base
            .edges()
            .iter()
            .map(|e| (e.u, e.v))
            .filter(|uv| !tree.contains(uv))
            .collect();
        let template = base.gain_matrix();
        Self { base, cotree, template }
    }

    fn objective(&self, angles: &[f64]) -> Result<T> {
        let mut m = self.template.clone();
        for (&(u, v), &theta) in self.cotree.iter().zip(angles) {
            let z = Complex::from_polar(T::one(), T::of(theta));
            m.set(u, v, z);
            m.set(v, u, z.conj());
        }
        Ok(pairing_objective(&hermitian_eigenvalues(&m)?))
    }

    fn realize(&self, angles: &[f64]) -> GainGraph<T> {
        let free: HashMap<(usize, usize), f64> = self.cotree.iter().copied().zip(angles.iter().copied()).collect();
        self.base.map_gains(|e| match free.get(&(e.u, e.v)) {
            Some(&theta) => ComplexUnit::from_angle(T::of(theta)),
            None => ComplexUnit::one(),
        })
    }
}

fn pairing_objective<T: Scalar>(s: &Spectrum<T>) -> T {
    let v = s.values();
    let n = v.len();
    (0..n).fold(T::zero(), |acc, j| {
        let d = v[j] + v[n - 1 - j];
        acc + d * d
    })
}

struct Restart<T> {
    angles: Vec<f64>,
    objective: T,
    accepted: usize,
}

const TAU: f64 = 2.0 * std::f64::consts::PI;
const POLISH_MIN_STEP: f64 = 1e-12;

fn run_restart<T: Scalar>(
    land: &Landscape<T>,
    cfg: &AnnealConfig,
    restart: usize,
    observer: &mut Observer<'_, T>,
) -> Result<Restart<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let dims = land.cotree.len();

    let mut current: Vec<f64> = (0..dims).map(|_| rng.random::<f64>() * TAU).collect();
    let mut current_obj = land.objective(&current)?;
    let mut best = current.clone();
    let mut best_obj = current_obj;
    let mut accepted = 0;
    if dims == 0 {
        return Ok(Restart {
            angles: best,
            objective: best_obj,
            accepted,
        });
    }
    let unit_normal = Normal::new(0.0, 1.0).expect("valid normal");
    let mut temperature = cfg.t0;
    let mut step = 0;
    for _ in 0..cfg.iterations {
        let sigma = cfg.step_sigma0 * temperature / cfg.t0;
        let edge = rng.random_range(0..dims);
        let delta_angle = unit_normal.sample(&mut rng) * sigma;
        let old = current[edge];
        current[edge] = (old + delta_angle).rem_euclid(TAU);
        let proposal = land.objective(&current)?;
        let delta = (proposal - current_obj).as_f64();
        let draw: f64 = rng.random();
        if delta <= 0.0 || draw < (-delta / temperature).exp() {
            current_obj = proposal;
            accepted += 1;
            if current_obj < best_obj {
                best_obj = current_obj;
                best.clone_from(&current);
            }
        } else {
            current[edge] = old;
        }
        if observer(restart, step, current_obj, best_obj).is_break() {
            return Ok(Restart {
                angles: best,
                objective: best_obj,
                accepted,
            });
        }
        step += 1;
        temperature *= cfg.cooling;
    }

    // Compass search from the best point: try ±h on each angle, halve h
    // after a sweep without improvement.
    let mut h = cfg.step_sigma0 * 0.1;
    let mut evaluations = 0;
    while evaluations < cfg.polish && h >= POLISH_MIN_STEP && best_obj > T::zero() {
        let mut improved = false;
        'sweep: for i in 0..dims {
            for sign in [1.0, -1.0] {
                if evaluations >= cfg.polish {
                    break 'sweep;
                }
                let old = best[i];
                best[i] = (old + sign * h).rem_euclid(TAU);
                let trial = land.objective(&best)?;
                evaluations += 1;
                if trial < best_obj {
                    best_obj = trial;
                    accepted += 1;
                    improved = true;
                } else {
                    best[i] = old;
                }
                if observer(restart, step, best_obj, best_obj).is_break() {
                    break 'sweep;
                }
                step += 1;
                if improved {
                    break;
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    Ok(Restart {
        angles: best,
        objective: best_obj,
        accepted,
    })
}

pub fn anneal_search<T: Scalar>(underlying: &GainGraph<T>, cfg: &AnnealConfig) -> Result<SearchResult<T>> {
    anneal_search_observed(underlying, cfg, &mut |_, _, _, _| ControlFlow::Continue(()))
}

/// Best over all restarts: lowest objective, then lowest restart index.
/// Each restart draws from its own stream of the seeded generator.
pub fn anneal_search_observed<T: Scalar>(
    underlying: &GainGraph<T>,
    cfg: &AnnealConfig,
    observer: &mut Observer<'_, T>,
) -> Result<SearchResult<T>> {
    cfg.validate()?;
    let land = Landscape::new(underlying);
    let mut winner: Option<(usize, Restart<T>)> = None;
    for r in 0..cfg.restarts {
        let out = run_restart(&land, cfg, r, observer)?;
        if winner.as_ref().is_none_or(|(_, w)| out.objective < w.objective) {
            winner = Some((r, out));
        }
    }
    let (restart_index, best) = winner.expect("at least one restart");
    let gains = land.realize(&best.angles);
    let basis_gains = fundamental_cycle_basis(&gains)
        .cycles
        .into_iter()
        .map(|c| {
            let z = cycle_gain(&gains, &c)?;
            Ok((c, z))
        })
        .collect::<Result<_>>()?;
    let angles = land
        .cotree
        .iter()
        .zip(&best.angles)
        .map(|(&uv, &a)| (uv, T::of(a)))
        .collect();
    Ok(SearchResult {
        objective: symmetry_objective(&gains)?,
        gains,
        basis_gains,
        angles,
        accepted_moves: best.accepted,
        restart_index,
    })
}

/// Switching classes among successful runs.
#[derive(Debug, Clone, PartialEq)]
pub struct DistinctSolutions<T> {
    /// One representative per class, in order of discovery.
    pub representatives: Vec<SearchResult<T>>,
    /// Every run, successful or not, in run order.
    pub runs: Vec<SearchResult<T>>,
    pub successes: usize,
}

/// `runs` independent searches with derived seeds; results below the
/// success threshold are grouped by switching isomorphism.
pub fn distinct_solutions<T: Scalar>(
    underlying: &GainGraph<T>,
    cfg: &AnnealConfig,
    runs: usize,
) -> Result<DistinctSolutions<T>> {
    if runs == 0 {
        return Err(Error::InvalidParameter("runs must be positive".into()));
    }
    let opts = EquivalenceOptions {
        tolerance: DEDUPE_TOLERANCE,
        use_census: false,
        ..EquivalenceOptions::default()
    };
    let mut all = Vec::with_capacity(runs);
    let mut reps: Vec<SearchResult<T>> = Vec::new();
    let mut successes = 0;
    for run in 0..runs {
        let run_cfg = AnnealConfig {
            seed: cfg.derived_seed(run),
            ..cfg.clone()
        };
        let result = anneal_search(underlying, &run_cfg)?;
        if result.objective.as_f64() < SUCCESS_THRESHOLD {
            successes += 1;
            let mut known = false;
            for rep in &reps {
                if is_switching_isomorphic_with(&result.gains, &rep.gains, &opts)?.result {
                    known = true;
                    break;
                }
            }
            if !known {
                reps.push(result.clone());
            }
        }
        all.push(result);
    }
    Ok(DistinctSolutions {
        representatives: reps,
        runs: all,
        successes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unit::Turns;

    fn triangle(p: i64, q: i64) -> GainGraph<f64> {
        let one = ComplexUnit::one();
        let phi = ComplexUnit::from_turns(Turns::new(p, q).unwrap());
        GainGraph::new(3, [(0, 1, phi), (1, 2, one), (0, 2, one)]).unwrap()
    }

    fn quick() -> AnnealConfig {
        AnnealConfig {
            iterations: 3000,
            restarts: 2,
            seed: 7,
            ..AnnealConfig::default()
        }
    }

    #[test]
    fn objective_examples() {
        assert!(symmetry_objective(&triangle(1, 4)).unwrap() < 1e-24);
        assert!((symmetry_objective(&triangle(0, 1)).unwrap() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn triangle_converges_to_imaginary() {
        let r = anneal_search(&triangle(0, 1), &quick()).unwrap();
        assert!(r.objective < 1e-6);
        assert_eq!(r.basis_gains.len(), 1);
        assert!(r.basis_gains[0].1.re().abs() < 1e-3);
        assert!((symmetry_objective(&r.gains).unwrap() - r.objective).abs() <= 1e-12);
    }

    #[test]
    fn tree_needs_no_moves() {
        let path = GainGraph::<f64>::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = anneal_search(&path, &quick()).unwrap();
        assert!(r.objective < 1e-20);
        assert!(r.angles.is_empty());
        let d = distinct_solutions(&path, &quick(), 3).unwrap();
        assert_eq!(d.representatives.len(), 1);
    }

    #[test]
    fn config_validation() {
        let bad = AnnealConfig {
            cooling: 1.0,
            ..AnnealConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidParameter(_))));
        assert!(AnnealConfig::default().validate().is_ok());
    }
}
