//! Exponent-vector monomials and the monomial lattice operations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a` in `K[x1..xn]`, stored as its exponent vector.
///
/// The derived ordering is lexicographic on the exponent vector; every
/// canonical ordering in the crate is built on it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// The variable `x_i` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::pure_power(nvars, i, 1)
    }

    pub fn pure_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Bitmask of the variables occurring in the monomial.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i))
    }

    /// Whether the monomial is a power of a single variable (and not 1).
    pub fn is_pure_power(&self) -> bool {
        self.support().count_ones() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        Error::check_ring(self.nvars(), other.nvars())?;
        Ok(self.divides_unchecked(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        Error::check_ring(self.nvars(), other.nvars())?;
        Ok(self.gcd_unchecked(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        Error::check_ring(self.nvars(), other.nvars())?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        Error::check_ring(self.nvars(), other.nvars())?;
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `self / other`, defined only when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        Error::check_ring(self.nvars(), other.nvars())?;
        if !other.divides_unchecked(self) {
            return Err(Error::InvalidArgument(format!(
                "{other:?} does not divide {self:?}"
            )));
        }
        Ok(self.quotient_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn gcd_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub(crate) fn quotient_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Result<Monomial> {
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::new)
    }

    /// Render with the given variable names (`x1^2*x3`, unit is `1`).
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayMonomial { mono: self, names }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        let shown = self.display_with(&names).to_string();
        f.write_str(&shown)
    }
}

struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The ⊆-minimal elements of `set` under divisibility, sorted and deduplicated.
pub fn minimal_generators<I>(set: I) -> Vec<Monomial>
where
    I: IntoIterator<Item = Monomial>,
{
    let mut items: Vec<Monomial> = set.into_iter().collect();
    // Sorting by degree first means a divisor is always seen before its multiples.
    items.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    items.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(items.len());
    for m in items {
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    sort_canonical(&mut kept);
    kept
}

/// Canonical generator order: lexicographic with `x1 > x2 > …`, largest first.
pub(crate) fn sort_canonical(gens: &mut [Monomial]) {
    gens.sort_by(|a, b| b.cmp(a));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])).unwrap());
        assert!(!m(&[2, 1]).divides(&m(&[1, 1])).unwrap());
        assert!(Monomial::one(3).divides(&m(&[0, 4, 1])).unwrap());
        assert_eq!(
            m(&[1, 0]).divides(&m(&[1, 0, 0])),
            Err(Error::RingMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn gcd_lcm_examples() {
        assert_eq!(m(&[1, 1, 0]).gcd(&m(&[0, 1, 1])).unwrap(), m(&[0, 1, 0]));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 1])).unwrap(), m(&[2, 1]));
        let u = m(&[3, 0, 2]);
        assert_eq!(u.gcd(&u).unwrap(), u);
        assert_eq!(u.lcm(&Monomial::one(3)).unwrap(), u);
    }

    #[test]
    fn mul_overflow_is_reported() {
        let big = m(&[u32::MAX]);
        assert_eq!(big.mul(&m(&[1])), Err(Error::Overflow));
    }

    #[test]
    fn minimal_generator_examples() {
        let got = minimal_generators([m(&[2, 0]), m(&[2, 1]), m(&[1, 1])]);
        assert_eq!(got, vec![m(&[2, 0]), m(&[1, 1])]);
        assert_eq!(
            minimal_generators([Monomial::one(1), m(&[1])]),
            vec![Monomial::one(1)]
        );
        assert!(minimal_generators(Vec::new()).is_empty());
    }

    #[test]
    fn display() {
        let names: Vec<String> = ["x1", "x2", "x3", "x4"].iter().map(|s| s.to_string()).collect();
        assert_eq!(m(&[2, 1, 0, 1]).display_with(&names).to_string(), "x1^2*x2*x4");
        assert_eq!(Monomial::one(4).display_with(&names).to_string(), "1");
    }
}
