//! Stanley decompositions of `S/I` through interval partitions of the
//! characteristic poset.
//!
//! With `g` the exponent vector of `lcm(G(I))`, the poset is
//! `P = {c ∈ [0, g] : x^c ∉ I}`. An interval `[a, b] ⊆ P` with
//! `Z_b = {x_j : b_j = g_j}` contributes the Stanley spaces `x^c K[Z_b]` for
//! every `c ∈ [a, b]` with `c_j = a_j` on `Z_b`; any partition of `P` into
//! intervals yields a Stanley decomposition of `S/I`, and the best partition
//! realizes `sdepth S/I` as `max min |Z_b|`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub const DEFAULT_MAX_POSET: usize = 5000;
/// Environment variable overriding [`DEFAULT_MAX_POSET`].
pub const MAX_POSET_ENV: &str = "MONOCLEAN_MAX_POSET";
/// Node budget of a single partition search.
pub const MAX_SEARCH_NODES: u64 = 20_000_000;

/// Poset size cap, honoring `MONOCLEAN_MAX_POSET` when it parses.
pub fn max_poset_from_env() -> usize {
    std::env::var(MAX_POSET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_POSET)
}

/// The standard exponent vectors below the lcm cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPoset {
    cap: Vec<u32>,
    points: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl CharacteristicPoset {
    pub fn new(ideal: &MonomialIdeal, max_points: usize) -> Result<Self> {
        if ideal.is_unit() {
            return Err(Error::Domain("S/I is zero for the unit ideal".into()));
        }
        let cap = ideal.lcm_exponents();
        let box_size = cap
            .iter()
            .try_fold(1usize, |acc, &c| acc.checked_mul(c as usize + 1))
            .unwrap_or(usize::MAX);
        // Only a box this large can hold more than `max_points` standard points;
        // bail out early on boxes that are absurdly large.
        if box_size > max_points.saturating_mul(64).max(1 << 20) {
            return Err(Error::Resource {
                what: "characteristic poset box",
                limit: max_points,
                actual: box_size,
            });
        }
        let mut points: Vec<Vec<u32>> = crate::cleanness::box_points(&cap)
            .into_iter()
            .filter(|m| !ideal.contains_unchecked(m))
            .map(|m| m.exponents().to_vec())
            .collect();
        if points.len() > max_points {
            return Err(Error::Resource {
                what: "characteristic poset size",
                limit: max_points,
                actual: points.len(),
            });
        }
        // Linear extension: total degree, then lexicographic with x1 first.
        points.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let index = points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Ok(CharacteristicPoset { cap, points, index })
    }

    pub fn cap(&self) -> &[u32] {
        &self.cap
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, c: &[u32]) -> bool {
        self.index.contains_key(c)
    }

    /// `|{j : b_j = g_j}|`.
    pub fn rho(&self, b: &[u32]) -> usize {
        b.iter().zip(&self.cap).filter(|(x, g)| x == g).count()
    }

    fn interval_points(&self, a: &[u32], b: &[u32]) -> Vec<usize> {
        crate::cleanness::box_points(
            &a.iter().zip(b).map(|(x, y)| y - x).collect::<Vec<_>>(),
        )
        .into_iter()
        .map(|d| {
            let c: Vec<u32> = d.exponents().iter().zip(a).map(|(x, y)| x + y).collect();
            self.index[&c]
        })
        .collect()
    }
}

/// An interval `[bottom, top]` of the characteristic poset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub bottom: Vec<u32>,
    pub top: Vec<u32>,
}

/// One Stanley space `u K[Z]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleySpace {
    pub generator: Monomial,
    /// Zero-based variable indices.
    pub vars: Vec<usize>,
}

/// A partition of the characteristic poset into intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyPartition {
    pub cap: Vec<u32>,
    pub intervals: Vec<Interval>,
}

impl StanleyPartition {
    fn free_vars(&self, top: &[u32]) -> Vec<usize> {
        (0..self.cap.len()).filter(|&j| top[j] == self.cap[j]).collect()
    }

    /// `min |Z_b|` over the intervals.
    pub fn sdepth(&self) -> usize {
        self.intervals
            .iter()
            .map(|iv| self.free_vars(&iv.top).len())
            .min()
            .unwrap_or(self.cap.len())
    }

    /// The Stanley decomposition this partition induces.
    pub fn stanley_spaces(&self) -> Vec<StanleySpace> {
        let mut out = Vec::new();
        for iv in &self.intervals {
            let z = self.free_vars(&iv.top);
            let spread: Vec<u32> = (0..self.cap.len())
                .map(|j| if z.contains(&j) { 0 } else { iv.top[j] - iv.bottom[j] })
                .collect();
            for d in crate::cleanness::box_points(&spread) {
                let exps = d.exponents().iter().zip(&iv.bottom).map(|(x, y)| x + y).collect();
                out.push(StanleySpace {
                    generator: Monomial::new(exps),
                    vars: z.clone(),
                });
            }
        }
        out
    }

    /// Largest generator degree among the induced Stanley spaces.
    pub fn max_generator_degree(&self) -> u64 {
        self.intervals
            .iter()
            .map(|iv| interval_generator_degree(&self.cap, &iv.bottom, &iv.top))
            .max()
            .unwrap_or(0)
    }

    /// Every poset point lies in exactly one interval and every interval lies
    /// inside the poset.
    pub fn validate(&self, poset: &CharacteristicPoset) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(m));
        if self.cap != poset.cap {
            return bad("partition cap differs from the poset cap".into());
        }
        let mut hits = vec![0usize; poset.len()];
        for iv in &self.intervals {
            if iv.bottom.len() != self.cap.len() || iv.top.len() != self.cap.len() {
                return bad("interval has the wrong number of coordinates".into());
            }
            if iv.bottom.iter().zip(&iv.top).any(|(a, b)| a > b) {
                return bad(format!("interval {:?} has bottom above top", iv));
            }
            if !poset.contains(&iv.top) {
                return bad(format!("interval top {:?} is not a standard point", iv.top));
            }
            for p in poset.interval_points(&iv.bottom, &iv.top) {
                hits[p] += 1;
            }
        }
        if let Some(p) = hits.iter().position(|&h| h != 1) {
            return bad(format!(
                "point {:?} is covered {} times",
                poset.points[p], hits[p]
            ));
        }
        Ok(())
    }
}

fn interval_generator_degree(cap: &[u32], bottom: &[u32], top: &[u32]) -> u64 {
    (0..cap.len())
        .map(|j| {
            if top[j] == cap[j] {
                u64::from(bottom[j])
            } else {
                u64::from(top[j])
            }
        })
        .sum()
}

/// Backtracking over interval partitions where every interval satisfies
/// `accept(bottom, top)`. Points are taken in linear-extension order, so the
/// first uncovered point is always the bottom of its interval; tops are tried
/// in lexicographic order, making the first solution the lexicographically
/// first interval list.
struct PartitionSearch<'a, F> {
    poset: &'a CharacteristicPoset,
    /// Per point: candidate tops with their interval point sets.
    options: Vec<Vec<(usize, Vec<usize>)>>,
    accept: F,
    covered: Vec<bool>,
    chosen: Vec<(usize, usize)>,
    dead: HashSet<Vec<u64>>,
    nodes: u64,
}

impl<'a, F: Fn(&[u32], &[u32]) -> bool> PartitionSearch<'a, F> {
    fn new(poset: &'a CharacteristicPoset, accept: F) -> Self {
        let n = poset.len();
        let mut options = Vec::with_capacity(n);
        for a in &poset.points {
            let mut tops: Vec<usize> = (0..n)
                .filter(|&b| {
                    let top = &poset.points[b];
                    a.iter().zip(top).all(|(x, y)| x <= y) && accept(a, top)
                })
                .collect();
            tops.sort_by(|&x, &y| poset.points[x].cmp(&poset.points[y]));
            options.push(
                tops.into_iter()
                    .map(|b| (b, poset.interval_points(a, &poset.points[b])))
                    .collect(),
            );
        }
        PartitionSearch {
            poset,
            options,
            accept,
            covered: vec![false; n],
            chosen: Vec::new(),
            dead: HashSet::new(),
            nodes: 0,
        }
    }

    fn key(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.covered.len().div_ceil(64)];
        for (i, &c) in self.covered.iter().enumerate() {
            if c {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        words
    }

    fn run(&mut self, start: usize) -> Result<bool> {
        let Some(a) = (start..self.covered.len()).find(|&i| !self.covered[i]) else {
            return Ok(true);
        };
        self.nodes += 1;
        if self.nodes > MAX_SEARCH_NODES {
            return Err(Error::Resource {
                what: "interval partition search nodes",
                limit: MAX_SEARCH_NODES as usize,
                actual: self.nodes as usize,
            });
        }
        let key = self.key();
        if self.dead.contains(&key) {
            return Ok(false);
        }
        for k in 0..self.options[a].len() {
            let (b, ref pts) = self.options[a][k];
            if pts.iter().any(|&p| self.covered[p]) {
                continue;
            }
            let pts = pts.clone();
            for &p in &pts {
                self.covered[p] = true;
            }
            self.chosen.push((a, b));
            if self.run(a + 1)? {
                return Ok(true);
            }
            self.chosen.pop();
            for &p in &pts {
                self.covered[p] = false;
            }
        }
        self.dead.insert(key);
        Ok(false)
    }

    /// Quick infeasibility: some point has no admissible interval above it.
    /// Only sound when every interval through a point has an admissible top
    /// above that point, as for the sdepth bound.
    fn hopeless(&self) -> bool {
        self.options.iter().any(Vec::is_empty)
    }

    fn partition(&self) -> StanleyPartition {
        let _ = &self.accept;
        StanleyPartition {
            cap: self.poset.cap.clone(),
            intervals: self
                .chosen
                .iter()
                .map(|&(a, b)| Interval {
                    bottom: self.poset.points[a].clone(),
                    top: self.poset.points[b].clone(),
                })
                .collect(),
        }
    }
}

fn partition_with<F>(
    poset: &CharacteristicPoset,
    accept: F,
    top_only: bool,
) -> Result<Option<StanleyPartition>>
where
    F: Fn(&[u32], &[u32]) -> bool,
{
    let mut search = PartitionSearch::new(poset, accept);
    if top_only && search.hopeless() {
        return Ok(None);
    }
    Ok(search.run(0)?.then(|| search.partition()))
}

/// A partition whose intervals all have `|Z_b| ≥ d`, if one exists.
pub fn partition_with_sdepth(
    poset: &CharacteristicPoset,
    d: usize,
) -> Result<Option<StanleyPartition>> {
    partition_with(poset, |_, b| poset.rho(b) >= d, true)
}

/// `sdepth S/I` and a witness partition, with the default poset cap.
pub fn sdepth(ideal: &MonomialIdeal) -> Result<(usize, StanleyPartition)> {
    sdepth_with_cap(ideal, max_poset_from_env())
}

pub fn sdepth_with_cap(ideal: &MonomialIdeal, max_poset: usize) -> Result<(usize, StanleyPartition)> {
    let poset = CharacteristicPoset::new(ideal, max_poset)?;
    // No interval through `a` can beat the best top above `a`.
    let upper = poset
        .points
        .iter()
        .map(|a| {
            poset
                .points
                .iter()
                .filter(|b| a.iter().zip(b.iter()).all(|(x, y)| x <= y))
                .map(|b| poset.rho(b))
                .max()
                .unwrap_or(0)
        })
        .min()
        .unwrap_or(ideal.nvars());
    for d in (0..=upper).rev() {
        if let Some(p) = partition_with_sdepth(&poset, d)? {
            return Ok((d, p));
        }
    }
    unreachable!("the partition into singletons always has sdepth ≥ 0")
}

/// A partition whose induced Stanley spaces all have generators of degree
/// `≤ bound`, if one exists.
pub fn partition_with_degree_bound(
    poset: &CharacteristicPoset,
    bound: u64,
) -> Result<Option<StanleyPartition>> {
    let cap = poset.cap.clone();
    partition_with(
        poset,
        move |a, b| interval_generator_degree(&cap, a, b) <= bound,
        false,
    )
}

/// `depth S/I ≤ sdepth S/I`.
pub fn stanley_conjecture_check(ideal: &MonomialIdeal) -> Result<bool> {
    let depth = homology::depth(ideal)?;
    let (sd, _) = sdepth(ideal)?;
    Ok(depth <= sd)
}

/// Whether some poset-induced Stanley decomposition has every generator of
/// degree `≤ reg S/I`; returns the witness when it exists.
pub fn h_regularity_check(ideal: &MonomialIdeal) -> Result<(bool, Option<StanleyPartition>)> {
    let reg = homology::regularity(ideal)?;
    let poset = CharacteristicPoset::new(ideal, max_poset_from_env())?;
    let witness = partition_with_degree_bound(&poset, reg.max(0) as u64)?;
    Ok((witness.is_some(), witness))
}

/// Smallest achievable maximum generator degree over poset-induced Stanley
/// decompositions.
pub fn min_max_generator_degree(ideal: &MonomialIdeal) -> Result<(u64, StanleyPartition)> {
    let poset = CharacteristicPoset::new(ideal, max_poset_from_env())?;
    let trivial = poset
        .points
        .iter()
        .map(|a| interval_generator_degree(&poset.cap, a, a))
        .max()
        .unwrap_or(0);
    for bound in 0..=trivial {
        if let Some(p) = partition_with_degree_bound(&poset, bound)? {
            return Ok((bound, p));
        }
    }
    unreachable!("the partition into singletons meets the trivial bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn setup(n: usize, s: &str) -> (RingContext, MonomialIdeal) {
        let r = RingContext::new(n).unwrap();
        let i = r.parse_ideal(s).unwrap();
        (r, i)
    }

    #[test]
    fn sdepth_examples() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        let (d, p) = sdepth(&i).unwrap();
        assert_eq!(d, 0);
        p.validate(&CharacteristicPoset::new(&i, 100).unwrap()).unwrap();

        let zero = MonomialIdeal::zero(3);
        let (d, p) = sdepth(&zero).unwrap();
        assert_eq!(d, 3);
        assert_eq!(p.intervals.len(), 1);

        let (_, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        assert_eq!(sdepth(&path).unwrap().0, 2);
    }

    #[test]
    fn pure_power_needs_all_generators() {
        // S/(x^2) = K ⊕ Kx: one interval [0, 1] with Z = ∅ and two generators.
        let (_, i) = setup(1, "x1^2");
        let (d, p) = sdepth(&i).unwrap();
        assert_eq!(d, 0);
        let spaces = p.stanley_spaces();
        assert_eq!(spaces.len(), 2);
        assert_eq!(p.max_generator_degree(), 1);
    }

    #[test]
    fn h_regularity_example() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        let (ok, witness) = h_regularity_check(&i).unwrap();
        assert!(ok);
        assert!(witness.unwrap().max_generator_degree() <= 1);
        assert!(h_regularity_check(&MonomialIdeal::zero(2)).unwrap().0);
        assert_eq!(min_max_generator_degree(&i).unwrap().0, 1);

        // (1,0,1) has no degree-1 interval of its own but is covered from below.
        let (_, path) = setup(3, "x1*x2, x2*x3");
        let (ok, witness) = h_regularity_check(&path).unwrap();
        assert!(ok);
        let poset = CharacteristicPoset::new(&path, 100).unwrap();
        witness.unwrap().validate(&poset).unwrap();
    }

    #[test]
    fn stanley_examples() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        assert!(stanley_conjecture_check(&i).unwrap());
        assert!(stanley_conjecture_check(&MonomialIdeal::zero(2)).unwrap());
    }

    #[test]
    fn poset_cap_is_enforced() {
        let (_, i) = setup(2, "x1^9*x2^9");
        assert!(matches!(
            CharacteristicPoset::new(&i, 10),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn validation_catches_overlap() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        let poset = CharacteristicPoset::new(&i, 100).unwrap();
        let overlapping = StanleyPartition {
            cap: vec![2, 1],
            intervals: vec![
                Interval { bottom: vec![0, 0], top: vec![0, 1] },
                Interval { bottom: vec![0, 1], top: vec![0, 1] },
                Interval { bottom: vec![1, 0], top: vec![1, 0] },
            ],
        };
        assert!(overlapping.validate(&poset).is_err());
    }
}
