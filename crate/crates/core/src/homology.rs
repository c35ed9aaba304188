//! Multigraded Betti numbers of `S/I` from upper Koszul simplicial complexes,
//! and the invariants read off them: projective dimension, depth, regularity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::rank;
use crate::monomial::Monomial;
use crate::ring::Characteristic;

pub const MAX_GENERATORS: usize = 15;
pub const MAX_MULTIDEGREES: usize = 20_000;

/// One nonzero Betti number `b_{i,a}(S/I)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Vec<u32>,
    pub value: u64,
}

/// Nonzero multigraded Betti numbers of `S/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawTable", try_from = "RawTable")]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, Vec<u32>), u64>,
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    nvars: usize,
    entries: Vec<BettiEntry>,
}

impl From<BettiTable> for RawTable {
    fn from(t: BettiTable) -> Self {
        RawTable {
            nvars: t.nvars,
            entries: t.entries().collect(),
        }
    }
}

impl TryFrom<RawTable> for BettiTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for e in raw.entries {
            Error::check_ring(raw.nvars, e.degree.len())?;
            if e.value > 0 {
                entries.insert((e.i, e.degree), e.value);
            }
        }
        Ok(BettiTable {
            nvars: raw.nvars,
            entries,
        })
    }
}

impl BettiTable {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, degree: &[u32]) -> u64 {
        self.entries
            .get(&(i, degree.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|((i, a), &v)| BettiEntry {
            i: *i,
            degree: a.clone(),
            value: v,
        })
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `max(|a| − i)` over nonzero entries.
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, a)| a.iter().map(|&e| i64::from(e)).sum::<i64>() - *i as i64)
            .max()
            .unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// `Σ_{i, a ≤ c} (−1)^i b_{i,a}`: the Hilbert function of `S/I` at `c`
    /// predicted by the resolution.
    pub fn euler_characteristic_at(&self, c: &[u32]) -> i64 {
        self.entries
            .iter()
            .filter(|((_, a), _)| a.iter().zip(c).all(|(x, y)| x <= y))
            .map(|((i, _), &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum()
    }

    /// Text diagram: one row per homological index, one column per total degree.
    pub fn diagram(&self) -> String {
        let mut graded: BTreeMap<(usize, u64), u64> = BTreeMap::new();
        for ((i, a), v) in &self.entries {
            let d = a.iter().map(|&e| u64::from(e)).sum();
            *graded.entry((*i, d)).or_default() += v;
        }
        let max_deg = graded.keys().map(|(_, d)| *d).max().unwrap_or(0);
        let mut out = String::new();
        let _ = write!(out, "{:>4}", "i\\d");
        for d in 0..=max_deg {
            let _ = write!(out, " {d:>4}");
        }
        out.push('\n');
        for i in 0..=self.projective_dimension() {
            let _ = write!(out, "{i:>4}");
            for d in 0..=max_deg {
                match graded.get(&(i, d)) {
                    Some(v) => {
                        let _ = write!(out, " {v:>4}");
                    }
                    None => out.push_str("    -"),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// All lcms of non-empty subsets of `G(I)`.
fn lcm_lattice(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for g in gens {
        let fresh: Vec<Monomial> = lattice.iter().map(|l| l.lcm_unchecked(g)).collect();
        lattice.insert(g.clone());
        lattice.extend(fresh);
        if lattice.len() > MAX_MULTIDEGREES {
            return Err(Error::Resource {
                what: "multidegree count",
                limit: MAX_MULTIDEGREES,
                actual: lattice.len(),
            });
        }
    }
    Ok(lattice.into_iter().collect())
}

/// Reduced homology ranks of the upper Koszul complex
/// `K^a(I) = {σ ⊆ supp(a) : x^{a−σ} ∈ I}`; entry `k + 1` holds `H̃_k`.
fn koszul_homology(
    ideal: &MonomialIdeal,
    a: &Monomial,
    characteristic: Characteristic,
) -> Result<Vec<u64>> {
    let support: Vec<usize> = (0..a.nvars()).filter(|&j| a.exponent(j) > 0).collect();
    let s = support.len();
    // Faces as bitmasks over positions in `support`, bucketed by cardinality.
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..1 << s {
        let mut exps = a.exponents().to_vec();
        for (pos, &j) in support.iter().enumerate() {
            if mask >> pos & 1 == 1 {
                exps[j] -= 1;
            }
        }
        if ideal.contains_unchecked(&Monomial::new(exps)) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // boundary[k]: C_k (k vertices) → C_{k−1}.
    let boundary_rank = |k: usize| -> Result<usize> {
        if k == 0 || faces[k].is_empty() || faces[k - 1].is_empty() {
            return Ok(0);
        }
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|&sigma| {
                faces[k - 1]
                    .iter()
                    .map(|&tau| {
                        if tau & !sigma != 0 {
                            return 0;
                        }
                        let removed = sigma & !tau;
                        let below = (sigma & (removed - 1)).count_ones();
                        if below % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .collect()
            })
            .collect();
        rank(&rows, characteristic)
    };
    let ranks: Vec<usize> = (0..=s + 1)
        .map(|k| if k <= s { boundary_rank(k) } else { Ok(0) })
        .collect::<Result<_>>()?;
    Ok((0..=s)
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect())
}

/// Multigraded Betti numbers of `S/I` over a field of the given characteristic.
pub fn betti_table(ideal: &MonomialIdeal, characteristic: Characteristic) -> Result<BettiTable> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    let gens = ideal.gens();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::Resource {
            what: "generator count",
            limit: MAX_GENERATORS,
            actual: gens.len(),
        });
    }
    let lattice = lcm_lattice(gens)?;
    let per_degree: Vec<(Monomial, Vec<u64>)> = lattice
        .into_par_iter()
        .map(|a| koszul_homology(ideal, &a, characteristic).map(|h| (a, h)))
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    entries.insert((0, vec![0; ideal.nvars()]), 1);
    for (a, ranks) in per_degree {
        // H̃_{k−1}(K^a) = b_{k,a}(I) = b_{k+1,a}(S/I); ranks[k] holds H̃_{k−1}.
        for (k, &v) in ranks.iter().enumerate() {
            if v > 0 {
                entries.insert((k + 1, a.exponents().to_vec()), v);
            }
        }
    }
    Ok(BettiTable {
        nvars: ideal.nvars(),
        entries,
    })
}

pub fn projective_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_table(ideal, Characteristic::Zero)?.projective_dimension())
}

/// `depth S/I = n − pd S/I`.
pub fn depth(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(ideal.nvars() - projective_dimension(ideal)?)
}

pub fn regularity(ideal: &MonomialIdeal) -> Result<i64> {
    Ok(betti_table(ideal, Characteristic::Zero)?.regularity())
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
    fn example_table() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        let t = betti_table(&i, Characteristic::Zero).unwrap();
        let got: Vec<(usize, Vec<u32>, u64)> =
            t.entries().map(|e| (e.i, e.degree, e.value)).collect();
        assert_eq!(
            got,
            vec![
                (0, vec![0, 0], 1),
                (1, vec![1, 1], 1),
                (1, vec![2, 0], 1),
                (2, vec![2, 1], 1)
            ]
        );
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!(t.regularity(), 1);
        assert_eq!(depth(&i).unwrap(), 0);
    }

    #[test]
    fn principal_and_trivial() {
        let (_, i) = setup(3, "x1^2*x2*x3^3");
        let t = betti_table(&i, Characteristic::Zero).unwrap();
        assert_eq!(t.projective_dimension(), 1);
        assert_eq!(t.regularity(), 5);
        let (_, m) = setup(1, "x1");
        let t = betti_table(&m, Characteristic::Zero).unwrap();
        assert_eq!(t.get(1, &[1]), 1);
        assert_eq!(depth(&MonomialIdeal::zero(3)).unwrap(), 3);
        assert_eq!(regularity(&MonomialIdeal::zero(3)).unwrap(), 0);
    }

    #[test]
    fn path_depth() {
        let (_, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        assert_eq!(depth(&path).unwrap(), 2);
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let (_, m) = setup(3, "x1, x2, x3");
        let t = betti_table(&m, Characteristic::Zero).unwrap();
        assert_eq!((0..=3).map(|i| t.total(i)).collect::<Vec<_>>(), [1, 3, 3, 1]);
    }

    #[test]
    fn diagram_renders() {
        let (_, i) = setup(2, "x1^2, x1*x2");
        let d = betti_table(&i, Characteristic::Zero).unwrap().diagram();
        assert!(d.lines().nth(2).unwrap().contains("   2"), "{d}");
    }
}
