//! Monomial ideals stored through their minimal generating set, and monomial primes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimal_generators, sort_canonical, Monomial};

/// A monomial ideal `I ⊆ K[x1..xn]`, represented by `G(I)`.
///
/// `gens` is divisibility-free and sorted lexicographically, so equal ideals
/// compare equal. The zero ideal has no generators; the unit ideal is `(1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

#[derive(Deserialize)]
struct RawIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl TryFrom<RawIdeal> for MonomialIdeal {
    type Error = Error;

    fn try_from(raw: RawIdeal) -> Result<Self> {
        MonomialIdeal::new(raw.nvars, raw.gens)
    }
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; non-minimal input is minimalized.
    pub fn new<I>(nvars: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            Error::check_ring(nvars, g.nvars())?;
        }
        Ok(Self::from_minimal(nvars, minimal_generators(gens)))
    }

    pub(crate) fn from_minimal(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens }
    }

    pub(crate) fn from_unchecked<I>(nvars: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Monomial>,
    {
        Self::from_minimal(nvars, minimal_generators(gens))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_minimal(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        Self::from_minimal(nvars, vec![Monomial::one(nvars)])
    }

    /// The maximal ideal `m = (x1, …, xn)`.
    pub fn maximal(nvars: usize) -> Self {
        MonomialPrime::maximal(nvars).to_ideal()
    }

    pub fn principal(u: Monomial) -> Self {
        let n = u.nvars();
        Self::from_minimal(n, vec![u])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `G(I)` in canonical order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// `Some(p)` when the ideal is a monomial prime, i.e. generated by variables.
    pub fn as_prime(&self) -> Option<MonomialPrime> {
        let mut vars = 0u64;
        for g in &self.gens {
            if g.degree() != 1 {
                return None;
            }
            vars |= g.support();
        }
        Some(MonomialPrime {
            nvars: self.nvars,
            vars,
        })
    }

    /// Componentwise exponents of `lcm(G(I))`; the zero vector for the zero ideal.
    pub fn lcm_exponents(&self) -> Vec<u32> {
        let mut cap = vec![0u32; self.nvars];
        for g in &self.gens {
            for (c, &e) in cap.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        cap
    }

    pub fn lcm_of_generators(&self) -> Monomial {
        Monomial::new(self.lcm_exponents())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        Error::check_ring(self.nvars, m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        Error::check_ring(self.nvars, other.nvars)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_ring(self.nvars, other.nvars)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        Self::from_unchecked(
            self.nvars,
            self.gens.iter().chain(&other.gens).cloned(),
        )
    }

    /// `I + (u)`.
    pub fn add_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        Error::check_ring(self.nvars, u.nvars())?;
        Ok(self.add_monomial_unchecked(u))
    }

    pub(crate) fn add_monomial_unchecked(&self, u: &Monomial) -> MonomialIdeal {
        if self.contains_unchecked(u) {
            return self.clone();
        }
        let mut gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| !u.divides_unchecked(g))
            .cloned()
            .collect();
        let at = gens.binary_search_by(|g| u.cmp(g)).unwrap_err();
        gens.insert(at, u.clone());
        Self::from_minimal(self.nvars, gens)
    }

    /// `I + (u1, …, ur)`.
    pub fn add_monomials<'a, I>(&self, us: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let mut out = self.clone();
        for u in us {
            out = out.add_monomial(u)?;
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_ring(self.nvars, other.nvars)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let lcms = self
            .gens
            .iter()
            .flat_map(|g| other.gens.iter().map(move |h| g.lcm_unchecked(h)));
        Self::from_unchecked(self.nvars, lcms)
    }

    /// `I : f`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        Error::check_ring(self.nvars, f.nvars())?;
        Ok(self.colon_unchecked(f))
    }

    pub(crate) fn colon_unchecked(&self, f: &Monomial) -> MonomialIdeal {
        Self::from_unchecked(self.nvars, self.gens.iter().map(|g| g.quotient_unchecked(f)))
    }

    /// `I : J = ⋂_{h ∈ G(J)} (I : h)`; `J` must be nonzero.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        Error::check_ring(self.nvars, other.nvars)?;
        if other.is_zero() {
            return Err(Error::InvalidArgument(
                "colon by the zero ideal is undefined".into(),
            ));
        }
        let mut gens = other.gens.iter();
        let first = self.colon_unchecked(gens.next().expect("nonzero ideal"));
        Ok(gens.fold(first, |acc, h| acc.intersect_unchecked(&self.colon_unchecked(h))))
    }

    /// `I : m^∞`, the ideal with `S/I^sat ≅ (S/I)/H⁰_m(S/I)`.
    pub fn saturate(&self) -> MonomialIdeal {
        let m = Self::maximal(self.nvars);
        let mut cur = self.clone();
        loop {
            let next = cur
                .colon_ideal(&m)
                .expect("maximal ideal is nonzero");
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g:?}")?;
        }
        f.write_str(")")
    }
}

/// A monomial prime `(x_i : i ∈ vars)`. The empty set is the zero ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawPrime", try_from = "RawPrime")]
pub struct MonomialPrime {
    nvars: usize,
    vars: u64,
}

#[derive(Serialize, Deserialize)]
struct RawPrime {
    nvars: usize,
    /// One-based variable indices.
    vars: Vec<usize>,
}

impl From<MonomialPrime> for RawPrime {
    fn from(p: MonomialPrime) -> Self {
        RawPrime {
            nvars: p.nvars,
            vars: p.variables().map(|i| i + 1).collect(),
        }
    }
}

impl TryFrom<RawPrime> for MonomialPrime {
    type Error = Error;

    fn try_from(raw: RawPrime) -> Result<Self> {
        if raw.vars.iter().any(|&v| v == 0 || v > raw.nvars) {
            return Err(Error::InvalidArgument("prime variable out of range".into()));
        }
        MonomialPrime::new(raw.nvars, raw.vars.into_iter().map(|v| v - 1))
    }
}

impl MonomialPrime {
    /// Prime on the given zero-based variable indices.
    pub fn new<I: IntoIterator<Item = usize>>(nvars: usize, vars: I) -> Result<Self> {
        if nvars > crate::ring::MAX_VARS {
            return Err(Error::Resource {
                what: "variable count",
                limit: crate::ring::MAX_VARS,
                actual: nvars,
            });
        }
        let mut mask = 0u64;
        for v in vars {
            if v >= nvars {
                return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
            }
            mask |= 1 << v;
        }
        Ok(MonomialPrime { nvars, vars: mask })
    }

    pub(crate) fn from_mask(nvars: usize, vars: u64) -> Self {
        MonomialPrime { nvars, vars }
    }

    pub fn maximal(nvars: usize) -> Self {
        let mask = if nvars >= 64 { u64::MAX } else { (1u64 << nvars) - 1 };
        MonomialPrime { nvars, vars: mask }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mask(&self) -> u64 {
        self.vars
    }

    pub fn variables(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nvars).filter(move |i| self.vars >> i & 1 == 1)
    }

    pub fn height(&self) -> usize {
        self.vars.count_ones() as usize
    }

    /// `dim S/p = n − ht p`.
    pub fn dim(&self) -> usize {
        self.nvars - self.height()
    }

    pub fn is_maximal(&self) -> bool {
        self.height() == self.nvars
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars & !other.vars == 0
    }

    pub fn is_proper_subset(&self, other: &MonomialPrime) -> bool {
        self.is_subset(other) && self.vars != other.vars
    }

    /// `u ∈ p` iff `u` involves some variable of `p`.
    pub fn contains_monomial(&self, u: &Monomial) -> bool {
        u.support() & self.vars != 0
    }

    /// `(p, x_k)`.
    pub fn with_var(&self, k: usize) -> MonomialPrime {
        MonomialPrime {
            nvars: self.nvars,
            vars: self.vars | 1 << k,
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_minimal(
            self.nvars,
            {
                let mut gens: Vec<Monomial> =
                    self.variables().map(|i| Monomial::var(self.nvars, i)).collect();
                sort_canonical(&mut gens);
                gens
            },
        )
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.vars == 0 {
            return "(0)".into();
        }
        let inner: Vec<&str> = self.variables().map(|i| names[i].as_str()).collect();
        format!("({})", inner.join(", "))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

/// Primes order by height, then by variable set (lowest variable first).
impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.nvars
            .cmp(&other.nvars)
            .then(self.height().cmp(&other.height()))
            .then_with(|| self.variables().cmp(other.variables()))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    fn ring(n: usize) -> RingContext {
        RingContext::new(n).unwrap()
    }

    fn ideal(r: &RingContext, s: &str) -> MonomialIdeal {
        r.parse_ideal(s).unwrap()
    }

    #[test]
    fn membership() {
        let r = ring(2);
        let i = ideal(&r, "x1^2, x1*x2");
        assert!(i.contains(&r.parse_monomial("x1^2*x2").unwrap()).unwrap());
        assert!(!i.contains(&r.parse_monomial("x2^3").unwrap()).unwrap());
        assert!(!MonomialIdeal::zero(2).contains(&r.one()).unwrap());
        assert!(MonomialIdeal::unit(2).contains(&r.parse_monomial("x2^5").unwrap()).unwrap());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let r = ring(2);
        let got = ideal(&r, "x1").intersect(&ideal(&r, "x1^2, x2")).unwrap();
        assert_eq!(got, ideal(&r, "x1^2, x1*x2"));

        let r4 = ring(4);
        let a = ideal(&r4, "x1, x3");
        let b = ideal(&r4, "x2, x3");
        let c = ideal(&r4, "x2, x4");
        let got = a.intersect(&b).unwrap().intersect(&c).unwrap();
        assert_eq!(got, ideal(&r4, "x1*x2, x2*x3, x3*x4"));

        let i = ideal(&r4, "x1^2*x2, x4");
        assert_eq!(i.sum(&MonomialIdeal::zero(4)).unwrap(), i);
        assert_eq!(i.intersect(&MonomialIdeal::unit(4)).unwrap(), i);
        assert_eq!(i.intersect(&MonomialIdeal::zero(4)).unwrap(), MonomialIdeal::zero(4));
    }

    #[test]
    fn colon_examples() {
        let r = ring(2);
        let i = ideal(&r, "x1^2, x1*x2");
        assert_eq!(i.colon(&r.var(0)).unwrap(), ideal(&r, "x1, x2"));
        assert_eq!(i.colon(&r.one()).unwrap(), i);

        let r4 = ring(4);
        let path = ideal(&r4, "x1*x2, x2*x3, x3*x4");
        let got = path.colon(&r4.parse_monomial("x1*x4").unwrap()).unwrap();
        assert_eq!(got, ideal(&r4, "x2, x3"));

        assert!(matches!(
            i.colon_ideal(&MonomialIdeal::zero(2)),
            Err(Error::InvalidArgument(_))
        ));
        assert_eq!(
            i.colon_ideal(&MonomialIdeal::maximal(2)).unwrap(),
            ideal(&r, "x1")
        );
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        assert_eq!(ideal(&r, "x1^2, x1*x2").saturate(), ideal(&r, "x1"));
        assert_eq!(ideal(&r, "x1^2*x2, x1*x2^2").saturate(), ideal(&r, "x1*x2"));
        let r4 = ring(4);
        let path = ideal(&r4, "x1*x2, x2*x3, x3*x4");
        assert_eq!(path.saturate(), path);
        assert_eq!(ideal(&r, "x1^3, x2^2").saturate(), MonomialIdeal::unit(2));
    }

    #[test]
    fn primes() {
        let p = MonomialPrime::new(4, [0, 2]).unwrap();
        assert_eq!(p.height(), 2);
        assert_eq!(p.dim(), 2);
        assert!(!p.is_maximal());
        assert!(MonomialPrime::maximal(4).is_maximal());
        assert_eq!(p.to_ideal().as_prime(), Some(p));
        assert!(p.is_proper_subset(&p.with_var(1)));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"nvars":4,"vars":[1,3]}"#);
        assert_eq!(serde_json::from_str::<MonomialPrime>(&json).unwrap(), p);
    }

    #[test]
    fn ideal_json_is_minimalized_on_read() {
        let i: MonomialIdeal =
            serde_json::from_str(r#"{"nvars":2,"gens":[[2,1],[1,0]]}"#).unwrap();
        assert_eq!(i.gens(), &[Monomial::new(vec![1, 0])]);
    }
}
