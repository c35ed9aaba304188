//! Irreducible decomposition, associated and minimal primes of `S/I`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::Monomial;

/// An irreducible monomial ideal `(x_{i1}^{a1}, …, x_{it}^{at})`.
///
/// Stored as an exponent vector where a zero entry means the variable does
/// not occur. The radical is the prime on the nonzero positions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IrreducibleComponent {
    powers: Vec<u32>,
}

impl IrreducibleComponent {
    /// Component from an exponent vector; at least one entry must be positive.
    pub fn new(powers: Vec<u32>) -> Result<Self> {
        if powers.iter().all(|&e| e == 0) {
            return Err(Error::InvalidArgument(
                "irreducible component needs at least one pure power".into(),
            ));
        }
        if powers.len() > crate::ring::MAX_VARS {
            return Err(Error::Resource {
                what: "variable count",
                limit: crate::ring::MAX_VARS,
                actual: powers.len(),
            });
        }
        Ok(IrreducibleComponent { powers })
    }

    /// Reads a component off an ideal whose generators are all pure powers.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        if ideal.is_zero() || !ideal.gens().iter().all(Monomial::is_pure_power) {
            return None;
        }
        let mut powers = vec![0; ideal.nvars()];
        for g in ideal.gens() {
            let i = g.support().trailing_zeros() as usize;
            powers[i] = g.exponent(i);
        }
        Some(IrreducibleComponent { powers })
    }

    pub fn nvars(&self) -> usize {
        self.powers.len()
    }

    /// Exponent of `x_i` among the generators, zero when absent.
    pub fn power(&self, i: usize) -> u32 {
        self.powers[i]
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn radical(&self) -> MonomialPrime {
        let mask = self
            .powers
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        MonomialPrime::from_mask(self.nvars(), mask)
    }

    pub fn height(&self) -> usize {
        self.powers.iter().filter(|&&e| e > 0).count()
    }

    /// `m ∈ Q` iff some `x_i^{a_i} | m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.powers
            .iter()
            .zip(m.exponents())
            .any(|(&a, &e)| a > 0 && e >= a)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .zip(&other.powers)
            .all(|(&a, &b)| a == 0 || (b > 0 && b <= a))
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.nvars();
        MonomialIdeal::from_unchecked(
            n,
            self.powers
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| Monomial::pure_power(n, i, e)),
        )
    }

    fn canonical_key(&self) -> (MonomialPrime, std::cmp::Reverse<Vec<u32>>) {
        (self.radical(), std::cmp::Reverse(self.powers.clone()))
    }
}

impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct RawComponent {
    powers: BTreeMap<String, u32>,
    radical: Vec<String>,
    height: usize,
}

fn var_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn var_index(name: &str, nvars: usize) -> Result<usize> {
    name.strip_prefix('x')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| (1..=nvars).contains(&i))
        .map(|i| i - 1)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))
}

impl IrreducibleComponent {
    pub(crate) fn to_raw(&self) -> RawComponent {
        RawComponent {
            powers: self
                .powers
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (var_name(i), e))
                .collect(),
            radical: self.radical().variables().map(var_name).collect(),
            height: self.height(),
        }
    }

    pub(crate) fn from_raw(raw: RawComponent, nvars: usize) -> Result<Self> {
        let mut powers = vec![0; nvars];
        for (name, e) in raw.powers {
            if e == 0 {
                return Err(Error::InvalidArgument("zero exponent in component".into()));
            }
            powers[var_index(&name, nvars)?] = e;
        }
        let comp = IrreducibleComponent::new(powers)?;
        let radical: Vec<String> = comp.radical().variables().map(var_name).collect();
        if radical != raw.radical || comp.height() != raw.height {
            return Err(Error::InvalidArgument(
                "component radical or height inconsistent with its powers".into(),
            ));
        }
        Ok(comp)
    }
}

/// `I = Q_1 ∩ … ∩ Q_r` with irreducible `Q_i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(into = "RawDecomposition", try_from = "RawDecomposition")]
pub struct Decomposition {
    nvars: usize,
    components: Vec<IrreducibleComponent>,
    irredundant: bool,
}

#[derive(Serialize, Deserialize)]
struct RawDecomposition {
    nvars: usize,
    irredundant: bool,
    components: Vec<RawComponent>,
}

impl From<Decomposition> for RawDecomposition {
    fn from(d: Decomposition) -> Self {
        RawDecomposition {
            nvars: d.nvars,
            irredundant: d.irredundant,
            components: d.components.iter().map(IrreducibleComponent::to_raw).collect(),
        }
    }
}

impl TryFrom<RawDecomposition> for Decomposition {
    type Error = Error;

    fn try_from(raw: RawDecomposition) -> Result<Self> {
        let components = raw
            .components
            .into_iter()
            .map(|c| IrreducibleComponent::from_raw(c, raw.nvars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            nvars: raw.nvars,
            components,
            irredundant: raw.irredundant,
        })
    }
}

impl Decomposition {
    /// A decomposition in the given order; irredundancy is computed, not trusted.
    pub fn new(nvars: usize, components: Vec<IrreducibleComponent>) -> Result<Self> {
        for c in &components {
            Error::check_ring(nvars, c.nvars())?;
        }
        let irredundant = is_irredundant(&components);
        Ok(Decomposition {
            nvars,
            components,
            irredundant,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    pub fn radicals(&self) -> Vec<MonomialPrime> {
        self.components.iter().map(IrreducibleComponent::radical).collect()
    }

    /// The ideal `⋂ Q_i` (the unit ideal for an empty decomposition).
    pub fn intersection(&self) -> MonomialIdeal {
        self.components
            .iter()
            .fold(MonomialIdeal::unit(self.nvars), |acc, c| {
                acc.intersect_unchecked(&c.to_ideal())
            })
    }
}

/// No component contains another. For irreducible monomial ideals this is
/// equivalent to no component containing the intersection of the rest.
fn is_irredundant(components: &[IrreducibleComponent]) -> bool {
    components.iter().enumerate().all(|(i, a)| {
        components
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !b.is_subset(a))
    })
}

/// The unique irredundant irreducible decomposition of a proper nonzero ideal,
/// in canonical order (radical, then exponents).
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Err(Error::Domain("the zero ideal has no irreducible decomposition".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("the unit ideal has no irreducible decomposition".into()));
    }
    let n = ideal.nvars();
    let mut found: HashSet<IrreducibleComponent> = HashSet::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        match cur.gens().iter().find(|g| !g.is_pure_power()) {
            None => {
                found.insert(IrreducibleComponent::from_ideal(&cur).expect("pure powers"));
            }
            Some(g) => {
                // g = x_i^{a_i} · w with w coprime to x_i and both non-units.
                let i = g.support().trailing_zeros() as usize;
                let v = Monomial::pure_power(n, i, g.exponent(i));
                let w = g.quotient_unchecked(&v);
                stack.push(cur.add_monomial_unchecked(&v));
                stack.push(cur.add_monomial_unchecked(&w));
            }
        }
    }
    let all: Vec<IrreducibleComponent> = found.into_iter().collect();
    let mut kept: Vec<IrreducibleComponent> = all
        .iter()
        .filter(|a| !all.iter().any(|b| b != *a && b.is_subset(a)))
        .cloned()
        .collect();
    kept.sort();
    Ok(Decomposition {
        nvars: n,
        components: kept,
        irredundant: true,
    })
}

/// `Ass(S/I)`, sorted. `Ass(S/0) = {(0)}`.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    if ideal.is_zero() {
        return Ok(vec![MonomialPrime::from_mask(ideal.nvars(), 0)]);
    }
    let mut primes = irreducible_decomposition(ideal)?.radicals();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// Inclusion-minimal elements of `Ass(S/I)`.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let ass = associated_primes(ideal)?;
    Ok(minimal_elements(&ass))
}

pub(crate) fn minimal_elements(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.is_proper_subset(p)))
        .copied()
        .collect()
}

/// `m ∈ Ass(S/I)`, decided through `I^sat ≠ I`.
pub fn has_maximal_in_ass(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/S has no associated primes".into()));
    }
    Ok(ideal.saturate() != *ideal)
}

/// `u` is a non zero-divisor on `S/I` iff it lies outside every associated prime.
pub(crate) fn is_regular_on(ass: &[MonomialPrime], u: &Monomial) -> bool {
    ass.iter().all(|p| !p.contains_monomial(u))
}

/// Checks the quotient formulas for a regular monomial `u` on `S/I`:
/// `Ass(S/(I,u)) = {(p, x_k) : p ∈ Ass(S/I), x_k | u}`, the same for `Min`,
/// and `ht (p, x_k) = ht p + 1`.
pub fn quotient_formula_check(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    Error::check_ring(ideal.nvars(), u.nvars())?;
    if u.is_one() {
        return Err(Error::Precondition("u must be a non-unit monomial".into()));
    }
    let ass = associated_primes(ideal)?;
    if !is_regular_on(&ass, u) {
        return Err(Error::Precondition("u is a zero-divisor on S/I".into()));
    }
    let min = minimal_elements(&ass);
    let support: Vec<usize> = (0..ideal.nvars()).filter(|&k| u.exponent(k) > 0).collect();

    let extend = |primes: &[MonomialPrime]| {
        let mut out: Vec<MonomialPrime> = primes
            .iter()
            .flat_map(|p| support.iter().map(move |&k| p.with_var(k)))
            .collect();
        out.sort();
        out.dedup();
        out
    };

    let quotient = ideal.add_monomial_unchecked(u);
    let ass_q = associated_primes(&quotient)?;
    let min_q = minimal_primes(&quotient)?;
    let heights_ok = ass
        .iter()
        .all(|p| support.iter().all(|&k| p.with_var(k).height() == p.height() + 1));
    Ok(ass_q == extend(&ass) && min_q == extend(&min) && heights_ok)
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

    fn comps(r: &RingContext, d: &Decomposition) -> Vec<String> {
        d.components()
            .iter()
            .map(|c| r.format_ideal(&c.to_ideal()))
            .collect()
    }

    #[test]
    fn decomposition_examples() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps(&r, &d), ["x1", "x1^2, x2"]);
        assert_eq!(d.intersection(), i);

        let (r, i) = setup(4, "x1*x2, x2*x3, x3*x4");
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps(&r, &d), ["x1, x3", "x2, x3", "x2, x4"]);
        assert_eq!(d.intersection(), i);

        let (_, i) = setup(3, "x1^2, x3^4");
        assert_eq!(irreducible_decomposition(&i).unwrap().len(), 1);
    }

    #[test]
    fn equal_radicals_are_kept() {
        let (r, i) = setup(2, "x1^2, x1*x2, x2^2");
        let d = irreducible_decomposition(&i).unwrap();
        assert_eq!(comps(&r, &d), ["x1^2, x2", "x1, x2^2"]);
        assert_eq!(associated_primes(&i).unwrap().len(), 1);
    }

    #[test]
    fn zero_and_unit_are_domain_errors() {
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::zero(2)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::unit(2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn primes_of_examples() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let show = |ps: Vec<MonomialPrime>| -> Vec<String> {
            ps.iter().map(|p| p.display_with(r.names())).collect()
        };
        assert_eq!(show(associated_primes(&i).unwrap()), ["(x1)", "(x1, x2)"]);
        assert_eq!(show(minimal_primes(&i).unwrap()), ["(x1)"]);
        assert!(has_maximal_in_ass(&i).unwrap());

        let (_, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        assert_eq!(associated_primes(&path).unwrap(), minimal_primes(&path).unwrap());
        assert_eq!(associated_primes(&path).unwrap().len(), 3);
        assert!(!has_maximal_in_ass(&path).unwrap());

        let (_, p) = setup(3, "x1, x3");
        assert_eq!(associated_primes(&p).unwrap(), vec![p.as_prime().unwrap()]);
        let (_, q) = setup(2, "x1^2, x2^3");
        assert!(has_maximal_in_ass(&q).unwrap());
    }

    #[test]
    fn quotient_formula_examples() {
        let (r, i) = setup(3, "x1*x2");
        assert!(quotient_formula_check(&i, &r.var(2)).unwrap());
        let q = associated_primes(&i.add_monomial(&r.var(2)).unwrap()).unwrap();
        let shown: Vec<String> = q.iter().map(|p| p.display_with(r.names())).collect();
        assert_eq!(shown, ["(x1, x3)", "(x2, x3)"]);

        let zero = MonomialIdeal::zero(3);
        assert!(quotient_formula_check(&zero, &r.var(0)).unwrap());

        let (r, i) = setup(3, "x1^2");
        let u = r.parse_monomial("x2*x3").unwrap();
        assert!(quotient_formula_check(&i, &u).unwrap());
        let q = associated_primes(&i.add_monomial(&u).unwrap()).unwrap();
        let shown: Vec<String> = q.iter().map(|p| p.display_with(r.names())).collect();
        assert_eq!(shown, ["(x1, x2)", "(x1, x3)"]);

        assert!(matches!(
            quotient_formula_check(&i, &r.var(0)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let (_, i) = setup(3, "x1^2*x2, x2*x3^2");
        let d = irreducible_decomposition(&i).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains(r#""powers":{"x1":2,"x3":2}"#), "{json}");
        let back: Decomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }
}
