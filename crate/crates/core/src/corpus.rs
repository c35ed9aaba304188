//! Deterministic corpora of monomial ideals.
//!
//! Trial `t` of a spec draws from `ChaCha8Rng::seed_from_u64(seed)` switched to
//! stream `t`, so every trial has its own substream and parallel execution
//! cannot perturb the ideals produced.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{minimal_generators, Monomial};

/// Largest box the exhaustive enumeration will walk.
pub const MAX_EXHAUSTIVE_BOX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub seed: u64,
    /// Number of variables.
    pub n: usize,
    /// Per-variable exponent cap.
    pub max_deg: u32,
    /// Generators drawn per ideal, before minimalization.
    pub gen_count: usize,
    pub trials: usize,
    pub squarefree: bool,
}

impl CorpusSpec {
    pub fn new(seed: u64, n: usize, max_deg: u32, gen_count: usize, trials: usize) -> Self {
        CorpusSpec {
            seed,
            n,
            max_deg,
            gen_count,
            trials,
            squarefree: false,
        }
    }

    pub fn squarefree(mut self, on: bool) -> Self {
        self.squarefree = on;
        self
    }

    fn exponent_cap(&self) -> u32 {
        if self.squarefree {
            1
        } else {
            self.max_deg
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::ring::MAX_VARS {
            return Err(Error::Config(format!(
                "variable count must be in 1..={}, got {}",
                crate::ring::MAX_VARS,
                self.n
            )));
        }
        if self.max_deg == 0 {
            return Err(Error::Config("max_deg must be positive".into()));
        }
        if self.gen_count == 0 {
            return Err(Error::Config("gen_count must be positive".into()));
        }
        // Non-unit monomials in the exponent box.
        let available = (self.exponent_cap() as u128 + 1)
            .checked_pow(self.n as u32)
            .map_or(u128::MAX, |b| b - 1);
        if (self.gen_count as u128) > available {
            return Err(Error::Config(format!(
                "cannot draw {} distinct non-unit monomials with {} variables and exponents <= {}",
                self.gen_count,
                self.n,
                self.exponent_cap()
            )));
        }
        Ok(())
    }
}

/// The PRNG of trial `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// A non-unit monomial with every exponent `≤ cap`.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, cap: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..n).map(|_| rng.random_range(0..=cap)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

/// A proper nonzero ideal from `gen_count` distinct random monomials.
pub fn random_ideal<R: Rng>(rng: &mut R, spec: &CorpusSpec) -> MonomialIdeal {
    let cap = spec.exponent_cap();
    let mut drawn: Vec<Monomial> = Vec::with_capacity(spec.gen_count);
    while drawn.len() < spec.gen_count {
        let m = random_monomial(rng, spec.n, cap);
        if !drawn.contains(&m) {
            drawn.push(m);
        }
    }
    MonomialIdeal::from_minimal(spec.n, minimal_generators(drawn))
}

/// The ideal of trial `trial`, together with the trial's PRNG positioned
/// just after it so harnesses can keep drawing.
pub fn ideal_for_trial(spec: &CorpusSpec, trial: usize) -> (MonomialIdeal, ChaCha8Rng) {
    let mut rng = trial_rng(spec.seed, trial);
    let ideal = random_ideal(&mut rng, spec);
    (ideal, rng)
}

/// The ideal stream of a spec; empty when `trials == 0`.
pub fn gen_ideals(spec: &CorpusSpec) -> Result<impl Iterator<Item = MonomialIdeal> + '_> {
    spec.validate()?;
    Ok((0..spec.trials).map(move |t| ideal_for_trial(spec, t).0))
}

/// Every proper nonzero monomial ideal of `K[x1..xn]` whose minimal generators
/// have all exponents `≤ cap`, in a fixed order.
pub fn exhaustive_ideals(n: usize, cap: u32) -> Result<Vec<MonomialIdeal>> {
    let points = crate::cleanness::box_points(&vec![cap; n]);
    if points.len() > MAX_EXHAUSTIVE_BOX {
        return Err(Error::Config(format!(
            "exhaustive enumeration needs a box of at most {MAX_EXHAUSTIVE_BOX} points, got {}",
            points.len()
        )));
    }
    // Antichains of the box, built by deciding each point in order.
    let candidates: Vec<Monomial> = points.into_iter().filter(|m| !m.is_one()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&candidates, 0, &mut chosen, &mut out);
    Ok(out
        .into_iter()
        .map(|gens| MonomialIdeal::from_minimal(n, minimal_generators(gens)))
        .collect())
}

fn antichains(
    cands: &[Monomial],
    i: usize,
    chosen: &mut Vec<Monomial>,
    out: &mut Vec<Vec<Monomial>>,
) {
    if i == cands.len() {
        if !chosen.is_empty() {
            out.push(chosen.clone());
        }
        return;
    }
    antichains(cands, i + 1, chosen, out);
    let m = &cands[i];
    if chosen
        .iter()
        .all(|c| !c.divides_unchecked(m) && !m.divides_unchecked(c))
    {
        chosen.push(m.clone());
        antichains(cands, i + 1, chosen, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let spec = CorpusSpec::new(1, 2, 2, 2, 5);
        let a: Vec<_> = gen_ideals(&spec).unwrap().collect();
        let b: Vec<_> = gen_ideals(&spec).unwrap().collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.is_proper() && !i.is_zero()));
        let other: Vec<_> = gen_ideals(&CorpusSpec::new(2, 2, 2, 2, 5)).unwrap().collect();
        assert_ne!(a, other);
    }

    #[test]
    fn squarefree_and_empty() {
        let spec = CorpusSpec::new(7, 4, 3, 3, 20).squarefree(true);
        assert!(gen_ideals(&spec).unwrap().all(|i| i.is_squarefree()));
        assert_eq!(gen_ideals(&CorpusSpec::new(7, 4, 3, 3, 0)).unwrap().count(), 0);
    }

    #[test]
    fn impossible_specs() {
        let spec = CorpusSpec::new(1, 2, 3, 4, 1).squarefree(true);
        assert!(matches!(gen_ideals(&spec).err(), Some(Error::Config(_))));
        assert!(gen_ideals(&CorpusSpec::new(1, 0, 3, 1, 1)).is_err());
    }

    #[test]
    fn exhaustive_two_variables() {
        // Antichains of a 4x4 grid are lattice paths: C(8,4) = 70, minus the
        // empty antichain and {1}.
        let all = exhaustive_ideals(2, 3).unwrap();
        assert_eq!(all.len(), 68);
        let mut dedup = all.clone();
        dedup.sort_by(|a, b| a.gens().cmp(b.gens()));
        dedup.dedup();
        assert_eq!(dedup.len(), 68);
    }
}
