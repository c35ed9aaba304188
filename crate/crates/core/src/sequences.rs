//! Regular, filter-regular and d-sequences of monomials on `S/I`, plus the
//! gcd condition and the forest-type test on generator sets.

use serde::{Deserialize, Serialize};

use crate::decomposition::{associated_primes, is_regular_on};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Generator count above which [`is_forest_type`] refuses to run.
pub const FOREST_TYPE_MAX_GENERATORS: usize = 15;
/// Longest sequence the existential-over-orderings variants will permute.
pub const MAX_PERMUTED_LENGTH: usize = 8;

/// A non-empty ordered list of non-unit monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Monomial>", into = "Vec<Monomial>")]
pub struct MonomialSequence(Vec<Monomial>);

impl MonomialSequence {
    pub fn new(items: Vec<Monomial>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::InvalidArgument("sequence must be non-empty".into()));
        }
        if items.iter().any(Monomial::is_one) {
            return Err(Error::InvalidArgument(
                "sequence items must be non-unit monomials".into(),
            ));
        }
        let n = items[0].nvars();
        for u in &items {
            Error::check_ring(n, u.nvars())?;
        }
        Ok(MonomialSequence(items))
    }

    pub fn items(&self) -> &[Monomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<Monomial>> for MonomialSequence {
    type Error = Error;

    fn try_from(items: Vec<Monomial>) -> Result<Self> {
        MonomialSequence::new(items)
    }
}

impl From<MonomialSequence> for Vec<Monomial> {
    fn from(s: MonomialSequence) -> Self {
        s.0
    }
}

fn check_element(ideal: &MonomialIdeal, u: &Monomial) -> Result<()> {
    Error::check_ring(ideal.nvars(), u.nvars())?;
    if u.is_one() {
        return Err(Error::InvalidArgument("the unit monomial is excluded".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    Ok(())
}

/// `u` is a non zero-divisor on `S/I`.
pub fn is_regular_element(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    check_element(ideal, u)?;
    Ok(is_regular_on(&associated_primes(ideal)?, u))
}

/// `u ∉ p` for every `p ∈ Ass(S/I) ∖ {m}`.
pub fn is_filter_regular_element(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    check_element(ideal, u)?;
    Ok(associated_primes(ideal)?
        .iter()
        .filter(|p| !p.is_maximal())
        .all(|p| !p.contains_monomial(u)))
}

fn sequence_test(
    ideal: &MonomialIdeal,
    us: &[Monomial],
    element: impl Fn(&MonomialIdeal, &Monomial) -> Result<bool>,
) -> Result<bool> {
    if us.is_empty() {
        return Err(Error::InvalidArgument("sequence must be non-empty".into()));
    }
    let mut current = ideal.clone();
    for u in us {
        if !element(&current, u)? {
            return Ok(false);
        }
        current = current.add_monomial(u)?;
    }
    Ok(true)
}

/// Each `u_i` is regular on `S/(I, u_1, …, u_{i−1})`.
pub fn is_regular_sequence(ideal: &MonomialIdeal, us: &[Monomial]) -> Result<bool> {
    sequence_test(ideal, us, is_regular_element)
}

/// Each `u_i` is filter-regular on `S/(I, u_1, …, u_{i−1})`.
pub fn is_filter_regular_sequence(ideal: &MonomialIdeal, us: &[Monomial]) -> Result<bool> {
    sequence_test(ideal, us, is_filter_regular_element)
}

/// `u` filter-regular on `S/I` exactly when it is regular on `S/I^sat`.
/// Returns whether the two verdicts agree.
pub fn lemma32_check(ideal: &MonomialIdeal, u: &Monomial) -> Result<bool> {
    let filter_regular = is_filter_regular_element(ideal, u)?;
    let saturated = ideal.saturate();
    let regular_on_saturation = if saturated.is_unit() {
        // S/I^sat = 0: every element is a non zero-divisor.
        true
    } else {
        is_regular_element(&saturated, u)?
    };
    Ok(filter_regular == regular_on_saturation)
}

/// Non-unit monomials of total degree `≤ cap`, by degree then canonical order.
pub fn monomials_up_to_degree(nvars: usize, cap: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for d in 1..=cap {
        let mut layer = Vec::new();
        compositions(nvars, d, &mut vec![0; nvars], 0, &mut layer);
        layer.sort_by(|a, b| b.cmp(a));
        out.extend(layer);
    }
    out
}

fn compositions(n: usize, left: u32, cur: &mut Vec<u32>, i: usize, out: &mut Vec<Monomial>) {
    if i + 1 == n {
        cur[i] = left;
        out.push(Monomial::new(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in 0..=left {
        cur[i] = e;
        compositions(n, left - e, cur, i + 1, out);
    }
    cur[i] = 0;
}

fn search_sequence(
    ideal: &MonomialIdeal,
    length: usize,
    candidates: &[Monomial],
    element: &dyn Fn(&MonomialIdeal, &Monomial) -> Result<bool>,
    acc: &mut Vec<Monomial>,
) -> Result<bool> {
    if acc.len() == length {
        return Ok(true);
    }
    for u in candidates {
        if element(ideal, u)? {
            acc.push(u.clone());
            let next = ideal.add_monomial_unchecked(u);
            if search_sequence(&next, length, candidates, element, acc)? {
                return Ok(true);
            }
            acc.pop();
        }
    }
    Ok(false)
}

/// First filter-regular sequence of the given length among monomials of total
/// degree `≤ degree_cap`, in degree-then-lexicographic order.
pub fn find_filter_regular_sequence(
    ideal: &MonomialIdeal,
    length: usize,
    degree_cap: u32,
) -> Result<Option<MonomialSequence>> {
    find_sequence(ideal, length, degree_cap, &is_filter_regular_element)
}

/// First regular sequence of the given length, searched like
/// [`find_filter_regular_sequence`].
pub fn find_regular_sequence(
    ideal: &MonomialIdeal,
    length: usize,
    degree_cap: u32,
) -> Result<Option<MonomialSequence>> {
    find_sequence(ideal, length, degree_cap, &is_regular_element)
}

fn find_sequence(
    ideal: &MonomialIdeal,
    length: usize,
    degree_cap: u32,
    element: &dyn Fn(&MonomialIdeal, &Monomial) -> Result<bool>,
) -> Result<Option<MonomialSequence>> {
    if length == 0 {
        return Err(Error::InvalidArgument("sequence length must be positive".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    let candidates = monomials_up_to_degree(ideal.nvars(), degree_cap);
    let mut acc = Vec::with_capacity(length);
    if search_sequence(ideal, length, &candidates, element, &mut acc)? {
        Ok(Some(MonomialSequence(acc)))
    } else {
        Ok(None)
    }
}

fn no_divisibility(us: &[Monomial]) -> bool {
    us.iter().enumerate().all(|(i, a)| {
        us.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.divides_unchecked(b))
    })
}

/// d-sequence test on `S/I`: the `u_i` minimally generate `(u_1, …, u_t)`
/// and `(I, u_1..u_i) : u_{i+1}u_k = (I, u_1..u_i) : u_k` for `0 ≤ i < t`,
/// `k ≥ i+1`.
pub fn is_d_sequence_on(ideal: &MonomialIdeal, us: &[Monomial]) -> Result<bool> {
    if us.is_empty() {
        return Err(Error::InvalidArgument("sequence must be non-empty".into()));
    }
    for u in us {
        check_element(ideal, u)?;
    }
    if !no_divisibility(us) {
        return Ok(false);
    }
    let mut prefix = ideal.clone();
    for i in 0..us.len() {
        for uk in &us[i..] {
            let product = us[i].mul_unchecked(uk)?;
            if prefix.colon_unchecked(&product) != prefix.colon_unchecked(uk) {
                return Ok(false);
            }
        }
        prefix = prefix.add_monomial_unchecked(&us[i]);
    }
    Ok(true)
}

/// No `u_i | u_j` for `i ≠ j`, and `gcd(u_i, u_j) | u_k` for all `i < j < k`.
pub fn gcd_condition(us: &[Monomial]) -> Result<bool> {
    if let Some(first) = us.first() {
        for u in us {
            Error::check_ring(first.nvars(), u.nvars())?;
        }
    }
    if !no_divisibility(us) {
        return Ok(false);
    }
    let t = us.len();
    for i in 0..t {
        for j in i + 1..t {
            let g = us[i].gcd_unchecked(&us[j]);
            if us[j + 1..].iter().any(|uk| !g.divides_unchecked(uk)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Some ordering of `us` passes `test`; returns the first such ordering in
/// lexicographic order of index permutations.
pub fn exists_ordering<F>(us: &[Monomial], mut test: F) -> Result<Option<Vec<Monomial>>>
where
    F: FnMut(&[Monomial]) -> Result<bool>,
{
    if us.len() > MAX_PERMUTED_LENGTH {
        return Err(Error::Resource {
            what: "sequence length for ordering search",
            limit: MAX_PERMUTED_LENGTH,
            actual: us.len(),
        });
    }
    let mut idx: Vec<usize> = (0..us.len()).collect();
    loop {
        let candidate: Vec<Monomial> = idx.iter().map(|&i| us[i].clone()).collect();
        if test(&candidate)? {
            return Ok(Some(candidate));
        }
        if !next_permutation(&mut idx) {
            return Ok(None);
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn gcd_condition_any_order(us: &[Monomial]) -> Result<bool> {
    Ok(exists_ordering(us, gcd_condition)?.is_some())
}

pub fn is_d_sequence_any_order(ideal: &MonomialIdeal, us: &[Monomial]) -> Result<bool> {
    Ok(exists_ordering(us, |s| is_d_sequence_on(ideal, s))?.is_some())
}

/// Every non-empty subset of `G(I)` has a leaf: an element `u_t` that is alone,
/// or has a branch `u_j` with `gcd(u_t, u_i) | gcd(u_t, u_j)` for all other `u_i`.
pub fn is_forest_type(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::Domain("forest type needs a proper nonzero ideal".into()));
    }
    let gens = ideal.gens();
    let m = gens.len();
    if m > FOREST_TYPE_MAX_GENERATORS {
        return Err(Error::Resource {
            what: "generator count",
            limit: FOREST_TYPE_MAX_GENERATORS,
            actual: m,
        });
    }
    let gcds: Vec<Vec<Monomial>> = gens
        .iter()
        .map(|a| gens.iter().map(|b| a.gcd_unchecked(b)).collect())
        .collect();
    let has_leaf = |subset: u32| -> bool {
        let members: Vec<usize> = (0..m).filter(|i| subset >> i & 1 == 1).collect();
        if members.len() == 1 {
            return true;
        }
        members.iter().any(|&t| {
            let others = members.iter().copied().filter(|&i| i != t);
            // lcm of gcd(u_t, u_i) over the others must divide some gcd(u_t, u_j).
            let bound = others
                .clone()
                .map(|i| gcds[t][i].clone())
                .reduce(|a, b| a.lcm_unchecked(&b))
                .expect("at least two members");
            others.into_iter().any(|j| bound.divides_unchecked(&gcds[t][j]))
        })
    };
    Ok((1u32..1 << m).all(has_leaf))
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
    fn regular_elements() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        assert!(!is_regular_element(&i, &r.var(1)).unwrap());
        let (r3, j) = setup(3, "x1*x2");
        assert!(is_regular_element(&j, &r3.var(2)).unwrap());
        let zero = MonomialIdeal::zero(2);
        assert!(is_regular_element(&zero, &r.var(0)).unwrap());
        assert!(is_regular_element(&zero, &r.var(1)).unwrap());
        assert!(matches!(
            is_regular_element(&i, &r.one()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(is_regular_sequence(&zero, &[r.var(0), r.var(1)]).unwrap());
        assert!(!is_regular_sequence(&zero, &[r.var(0), r.var(0)]).unwrap());
    }

    #[test]
    fn filter_regular_elements() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        assert!(is_filter_regular_element(&i, &r.var(1)).unwrap());
        assert!(!is_filter_regular_element(&i, &r.var(0)).unwrap());
        let (_, q) = setup(2, "x1^2, x2^3");
        assert!(is_filter_regular_element(&q, &r.var(0)).unwrap());
        assert!(lemma32_check(&i, &r.var(1)).unwrap());
        assert!(lemma32_check(&i, &r.var(0)).unwrap());
        assert!(lemma32_check(&q, &r.var(0)).unwrap());
    }

    #[test]
    fn filter_regular_search() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let s = find_filter_regular_sequence(&i, 1, 2).unwrap().unwrap();
        assert_eq!(s.items(), &[r.var(1)]);
        let (_, q) = setup(2, "x1^2, x2^3");
        let s = find_filter_regular_sequence(&q, 1, 1).unwrap().unwrap();
        assert_eq!(s.items(), &[r.var(0)]);
        // Every variable lies in (x1) or (x2); nothing of degree ≤ 1 is filter-regular.
        let (_, j) = setup(3, "x1*x2, x1*x3");
        assert!(find_filter_regular_sequence(&j, 1, 1).unwrap().is_none());
    }

    #[test]
    fn d_sequences() {
        let (r, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        let u = r.parse_monomial("x4*x1").unwrap();
        assert!(is_d_sequence_on(&path, &[u]).unwrap());
        let zero = MonomialIdeal::zero(4);
        assert!(is_d_sequence_on(&zero, &[r.var(0), r.var(1)]).unwrap());
        let x1x2 = r.parse_monomial("x1*x2").unwrap();
        assert!(!is_d_sequence_on(&zero, &[r.var(0), x1x2]).unwrap());
    }

    #[test]
    fn gcd_conditions() {
        let r = RingContext::new(4).unwrap();
        let seq = r.parse_monomial_list("x1*x2, x3*x4, x2*x3").unwrap();
        assert!(gcd_condition(&seq).unwrap());
        let seq = r.parse_monomial_list("x1*x2, x2*x3, x3*x4").unwrap();
        assert!(!gcd_condition(&seq).unwrap());
        assert!(gcd_condition_any_order(&seq).unwrap());
        assert!(gcd_condition(&[r.var(2)]).unwrap());
        let divisible = r.parse_monomial_list("x1, x1*x2").unwrap();
        assert!(!gcd_condition(&divisible).unwrap());
    }

    #[test]
    fn forest_type() {
        let (_, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        assert!(is_forest_type(&path).unwrap());
        let (_, cycle) = setup(4, "x1*x2, x2*x3, x3*x4, x4*x1");
        assert!(!is_forest_type(&cycle).unwrap());
        let (_, principal) = setup(3, "x1^2*x3");
        assert!(is_forest_type(&principal).unwrap());
        let r = RingContext::new(16).unwrap();
        let many = MonomialIdeal::new(16, (0..16).map(|i| r.var(i))).unwrap();
        assert!(matches!(is_forest_type(&many), Err(Error::Resource { .. })));
    }

    #[test]
    fn degree_enumeration_order() {
        let r = RingContext::new(2).unwrap();
        let shown: Vec<String> = monomials_up_to_degree(2, 2)
            .iter()
            .map(|m| r.format_monomial(m))
            .collect();
        assert_eq!(shown, ["x1", "x2", "x1^2", "x1*x2", "x2^2"]);
    }
}
