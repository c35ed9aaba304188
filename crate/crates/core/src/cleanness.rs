//! Clean, pretty clean and almost clean quotients `S/I`.
//!
//! Two independent deciders live here:
//!
//! * [`decide`] searches decompositions into irreducible components for an
//!   ordering whose T-sets are all singletons, subject to the mode's
//!   height / radical-set side condition.
//! * [`find_filtration`] searches prime filtrations
//!   `I = I_0 ⊂ I_1 ⊂ … ⊂ I_r = S`, `I_i = I_{i−1} + (v_i)`,
//!   `I_{i−1} : v_i = p_i` directly, finding associated primes by colon
//!   witnesses rather than through the decomposition.
//!
//! [`validate_filtration`] re-checks a filtration certificate from scratch.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decomposition::{
    RawComponent,
    associated_primes, irreducible_decomposition, minimal_elements, minimal_primes,
    IrreducibleComponent,
};
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{minimal_generators, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CleannessMode {
    Clean,
    PrettyClean,
    AlmostClean,
}

impl CleannessMode {
    pub const ALL: [CleannessMode; 3] = [
        CleannessMode::Clean,
        CleannessMode::PrettyClean,
        CleannessMode::AlmostClean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CleannessMode::Clean => "clean",
            CleannessMode::PrettyClean => "pretty",
            CleannessMode::AlmostClean => "almost",
        }
    }
}

impl fmt::Display for CleannessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An ordered list of irreducible components `Q_1, …, Q_r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "RawOrdered", try_from = "RawOrdered")]
pub struct OrderedDecomposition {
    pub nvars: usize,
    pub components: Vec<IrreducibleComponent>,
}

#[derive(Serialize, Deserialize)]
struct RawOrdered {
    nvars: usize,
    components: Vec<RawComponent>,
}

impl From<OrderedDecomposition> for RawOrdered {
    fn from(d: OrderedDecomposition) -> Self {
        RawOrdered {
            nvars: d.nvars,
            components: d.components.iter().map(IrreducibleComponent::to_raw).collect(),
        }
    }
}

impl TryFrom<RawOrdered> for OrderedDecomposition {
    type Error = Error;

    fn try_from(raw: RawOrdered) -> Result<Self> {
        let components = raw
            .components
            .into_iter()
            .map(|c| IrreducibleComponent::from_raw(c, raw.nvars))
            .collect::<Result<Vec<_>>>()?;
        OrderedDecomposition::new(raw.nvars, components)
    }
}

impl OrderedDecomposition {
    pub fn new(nvars: usize, components: Vec<IrreducibleComponent>) -> Result<Self> {
        for c in &components {
            Error::check_ring(nvars, c.nvars())?;
        }
        Ok(OrderedDecomposition { nvars, components })
    }

    pub fn radicals(&self) -> Vec<MonomialPrime> {
        self.components.iter().map(IrreducibleComponent::radical).collect()
    }

    pub fn intersection(&self) -> MonomialIdeal {
        self.components
            .iter()
            .fold(MonomialIdeal::unit(self.nvars), |acc, c| {
                acc.intersect_unchecked(&c.to_ideal())
            })
    }

    /// `T_i = {g ∈ G(Q_1 ∩ … ∩ Q_{i−1}) : g ∉ Q_i}`, with `T_1 = {1}`.
    pub fn t_sets(&self) -> Vec<Vec<Monomial>> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        let mut out = Vec::with_capacity(self.components.len());
        for c in &self.components {
            out.push(t_set(&acc, c));
            acc = acc.intersect_unchecked(&c.to_ideal());
        }
        out
    }
}

fn t_set(prefix: &MonomialIdeal, q: &IrreducibleComponent) -> Vec<Monomial> {
    prefix
        .gens()
        .iter()
        .filter(|g| !q.contains(g))
        .cloned()
        .collect()
}

/// Free-standing form of [`OrderedDecomposition::t_sets`].
pub fn t_sets(d: &OrderedDecomposition) -> Vec<Vec<Monomial>> {
    d.t_sets()
}

fn heights_nondecreasing(primes: &[MonomialPrime]) -> bool {
    primes.windows(2).all(|w| w[0].height() <= w[1].height())
}

fn same_set(a: &[MonomialPrime], b: &[MonomialPrime]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort();
    a.dedup();
    b.sort();
    b.dedup();
    a == b
}

/// Whether the ordering witnesses the mode for `S/(⋂ Q_i)`: every T-set is a
/// singleton and the mode's side condition holds.
pub fn check_ordering(d: &OrderedDecomposition, mode: CleannessMode) -> Result<bool> {
    if d.components.is_empty() {
        return Ok(false);
    }
    if !d.t_sets().iter().all(|t| t.len() == 1) {
        return Ok(false);
    }
    let ideal = d.intersection();
    let radicals = d.radicals();
    Ok(match mode {
        CleannessMode::Clean => {
            heights_nondecreasing(&radicals) && same_set(&radicals, &minimal_primes(&ideal)?)
        }
        CleannessMode::PrettyClean => heights_nondecreasing(&radicals),
        CleannessMode::AlmostClean => same_set(&radicals, &associated_primes(&ideal)?),
    })
}

/// Which search settled a [`decide`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionRoute {
    /// `S/0 = S`, clean by convention.
    ZeroIdeal,
    /// An ordering of the irredundant irreducible components.
    Irredundant,
    /// The search over decompositions that may contain redundant components.
    Extended,
}

/// Outcome of [`decide`]. The certificate is absent for the zero ideal, where
/// `S` is clean by convention, and whenever the verdict is negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub certificate: Option<OrderedDecomposition>,
    pub route: DecisionRoute,
}

/// Candidate components of the extended search are capped at this many.
pub const MAX_BOX_COMPONENTS: usize = 4096;
/// Node budget of the extended search.
pub const MAX_CHAIN_NODES: u64 = 5_000_000;

fn check_decidable(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    Ok(())
}

/// Decides the mode for `S/I` through the singleton-T criterion over
/// decompositions `I = Q_1 ∩ … ∩ Q_r` into irreducible ideals.
///
/// Orderings of the irredundant components are tried first. When none works
/// the search widens to decompositions that may repeat radicals or contain
/// redundant components, drawn from the irreducible ideals containing `I`
/// whose exponents stay below the lcm of `G(I)`. Restricting to the
/// irredundant components alone is not enough: for
/// `(x1^2x2x3^2, x1^2x2x3x4, x1x2^3x4^3, x2^2x3^3x4^3)` no ordering of the
/// irredundant components works yet `S/I` is pretty clean (see the tests).
pub fn decide(ideal: &MonomialIdeal, mode: CleannessMode) -> Result<Verdict> {
    let first = decide_irredundant(ideal, mode)?;
    if first.holds || first.route == DecisionRoute::ZeroIdeal {
        return Ok(first);
    }
    if mode == CleannessMode::Clean && !clean_possible(ideal)? {
        return Ok(first);
    }
    decide_extended(ideal, mode)
}

/// Clean needs `Ass = Min`.
fn clean_possible(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    Ok(minimal_elements(&ass).len() == ass.len())
}

/// The restricted decider: orderings of the canonical irredundant components
/// only. A `false` here is not conclusive; see [`decide`].
pub fn decide_irredundant(ideal: &MonomialIdeal, mode: CleannessMode) -> Result<Verdict> {
    check_decidable(ideal)?;
    if ideal.is_zero() {
        return Ok(Verdict {
            holds: true,
            certificate: None,
            route: DecisionRoute::ZeroIdeal,
        });
    }
    let negative = Verdict {
        holds: false,
        certificate: None,
        route: DecisionRoute::Irredundant,
    };
    let decomposition = irreducible_decomposition(ideal)?;
    let comps = decomposition.components().to_vec();
    if comps.len() > 63 {
        return Err(Error::Resource {
            what: "irreducible component count",
            limit: 63,
            actual: comps.len(),
        });
    }
    if mode == CleannessMode::Clean && !clean_possible(ideal)? {
        return Ok(negative);
    }
    // The canonical components are irredundant, so their radical set is Ass;
    // the almost clean side condition is automatic.
    let ordered_heights = mode != CleannessMode::AlmostClean;
    let mut search = OrderingSearch {
        nvars: ideal.nvars(),
        comps: &comps,
        ordered_heights,
        prefix_cache: HashMap::new(),
        dead: HashSet::new(),
    };
    let mut order = Vec::with_capacity(comps.len());
    if !search.extend(0, &mut order) {
        return Ok(negative);
    }
    Ok(Verdict {
        holds: true,
        certificate: Some(OrderedDecomposition {
            nvars: ideal.nvars(),
            components: order.iter().map(|&i| comps[i].clone()).collect(),
        }),
        route: DecisionRoute::Irredundant,
    })
}

/// Irreducible ideals containing `I` with `0 < a_j ≤ g_j` on their support,
/// in canonical order.
fn box_components(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    let cap = ideal.lcm_exponents();
    let size = cap
        .iter()
        .try_fold(1usize, |acc, &g| acc.checked_mul(g as usize + 1))
        .unwrap_or(usize::MAX);
    if size > MAX_BOX_COMPONENTS {
        return Err(Error::Resource {
            what: "candidate irreducible components",
            limit: MAX_BOX_COMPONENTS,
            actual: size,
        });
    }
    let mut out: Vec<IrreducibleComponent> = box_points(&cap)
        .into_iter()
        .filter(|e| !e.is_one())
        .map(|e| IrreducibleComponent::new(e.exponents().to_vec()))
        .collect::<Result<_>>()?;
    out.retain(|c| ideal.gens().iter().all(|g| c.contains(g)));
    out.sort();
    Ok(out)
}

/// Top-down search for `S = J_0 ⊋ J_1 ⊋ … ⊋ J_r = I`, `J_i = J_{i−1} ∩ Q_i`,
/// with `G(J_{i−1}) ∖ Q_i` a singleton at every step.
struct ChainSearch<'a> {
    target: &'a MonomialIdeal,
    candidates: Vec<IrreducibleComponent>,
    /// `reach[h]`: intersection of the candidates of height `≥ h`. A chain at
    /// `J` with height floor `h` can only finish if `J ∩ reach[h] = I`.
    reach: Vec<MonomialIdeal>,
    ordered_heights: bool,
    dead: HashSet<(MonomialIdeal, usize)>,
    nodes: u64,
}

impl ChainSearch<'_> {
    fn extend(
        &mut self,
        current: &MonomialIdeal,
        floor: usize,
        order: &mut Vec<usize>,
    ) -> Result<bool> {
        if current == self.target {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > MAX_CHAIN_NODES {
            return Err(Error::Resource {
                what: "decomposition search nodes",
                limit: MAX_CHAIN_NODES as usize,
                actual: self.nodes as usize,
            });
        }
        let key = (current.clone(), floor);
        if self.dead.contains(&key) {
            return Ok(false);
        }
        if current.intersect_unchecked(&self.reach[floor]) != *self.target {
            self.dead.insert(key);
            return Ok(false);
        }
        for k in 0..self.candidates.len() {
            let c = &self.candidates[k];
            let height = c.height();
            if self.ordered_heights && height < floor {
                continue;
            }
            if t_set(current, c).len() != 1 {
                continue;
            }
            let next = current.intersect_unchecked(&c.to_ideal());
            order.push(k);
            let next_floor = if self.ordered_heights { height } else { 0 };
            if self.extend(&next, next_floor, order)? {
                return Ok(true);
            }
            order.pop();
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// The widened decider on its own; see [`decide`].
pub fn decide_extended(ideal: &MonomialIdeal, mode: CleannessMode) -> Result<Verdict> {
    check_decidable(ideal)?;
    if ideal.is_zero() {
        return Ok(Verdict {
            holds: true,
            certificate: None,
            route: DecisionRoute::ZeroIdeal,
        });
    }
    // Every primary decomposition has all of Ass among its radicals, so the
    // final radical set needs no separate check.
    let allowed = match mode {
        CleannessMode::Clean => Some(minimal_primes(ideal)?),
        CleannessMode::PrettyClean => None,
        CleannessMode::AlmostClean => Some(associated_primes(ideal)?),
    };
    let mut candidates = box_components(ideal)?;
    if let Some(allowed) = allowed {
        candidates.retain(|c| allowed.contains(&c.radical()));
    }
    let reach = (0..=ideal.nvars())
        .map(|h| {
            candidates
                .iter()
                .filter(|c| c.height() >= h)
                .fold(MonomialIdeal::unit(ideal.nvars()), |acc, c| {
                    acc.intersect_unchecked(&c.to_ideal())
                })
        })
        .collect();
    let mut search = ChainSearch {
        target: ideal,
        candidates,
        reach,
        ordered_heights: mode != CleannessMode::AlmostClean,
        dead: HashSet::new(),
        nodes: 0,
    };
    let mut order = Vec::new();
    let found = search.extend(&MonomialIdeal::unit(ideal.nvars()), 0, &mut order)?;
    Ok(Verdict {
        holds: found,
        certificate: found.then(|| OrderedDecomposition {
            nvars: ideal.nvars(),
            components: order
                .iter()
                .map(|&k| search.candidates[k].clone())
                .collect(),
        }),
        route: DecisionRoute::Extended,
    })
}

struct OrderingSearch<'a> {
    nvars: usize,
    comps: &'a [IrreducibleComponent],
    ordered_heights: bool,
    prefix_cache: HashMap<u64, MonomialIdeal>,
    dead: HashSet<u64>,
}

impl OrderingSearch<'_> {
    fn prefix(&mut self, mask: u64) -> MonomialIdeal {
        if let Some(i) = self.prefix_cache.get(&mask) {
            return i.clone();
        }
        let ideal = (0..self.comps.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(MonomialIdeal::unit(self.nvars), |acc, i| {
                acc.intersect_unchecked(&self.comps[i].to_ideal())
            });
        self.prefix_cache.insert(mask, ideal.clone());
        ideal
    }

    /// T_i only depends on the set of earlier components, so failure is
    /// memoized per set.
    fn extend(&mut self, mask: u64, order: &mut Vec<usize>) -> bool {
        let r = self.comps.len();
        if order.len() == r {
            return true;
        }
        if self.dead.contains(&mask) {
            return false;
        }
        let floor = order
            .iter()
            .map(|&i| self.comps[i].height())
            .max()
            .unwrap_or(0);
        let prefix = self.prefix(mask);
        for i in 0..r {
            if mask >> i & 1 == 1 {
                continue;
            }
            if self.ordered_heights && self.comps[i].height() < floor {
                continue;
            }
            if t_set(&prefix, &self.comps[i]).len() != 1 {
                continue;
            }
            order.push(i);
            if self.extend(mask | 1 << i, order) {
                return true;
            }
            order.pop();
        }
        self.dead.insert(mask);
        false
    }
}

/// One step `I_i = I_{i−1} + (v)` with `I_{i−1} : v = prime`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub v: Monomial,
    pub prime: MonomialPrime,
}

/// A prime filtration of `S/I`, recorded by its steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFiltration {
    pub nvars: usize,
    pub steps: Vec<FiltrationStep>,
}

impl PrimeFiltration {
    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.steps.iter().map(|s| s.prime).collect()
    }

    /// The chain `I_0 ⊆ I_1 ⊆ …` starting at `ideal`.
    pub fn chain(&self, ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
        let mut out = vec![ideal.clone()];
        for s in &self.steps {
            let next = out.last().expect("nonempty").add_monomial_unchecked(&s.v);
            out.push(next);
        }
        out
    }
}

/// Every point of the box `[0, cap]`, by total degree and then canonical order.
pub(crate) fn box_points(cap: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::<u32>::new()];
    for &c in cap {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=c).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    let mut monos: Vec<Monomial> = out.into_iter().map(Monomial::new).collect();
    monos.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    monos
}

/// `(v, I : v)` for every `v ∉ I` in the box whose colon is prime. The primes
/// arising are exactly `Ass(S/I)` once the box covers `lcm(G(I))`.
fn prime_witnesses(ideal: &MonomialIdeal, points: &[Monomial]) -> Vec<(Monomial, MonomialPrime)> {
    points
        .iter()
        .filter(|v| !ideal.contains_unchecked(v))
        .filter_map(|v| ideal.colon_unchecked(v).as_prime().map(|p| (v.clone(), p)))
        .collect()
}

/// `Ass(S/I)` through colon witnesses in the lcm box; independent of the
/// decomposition code.
pub fn associated_primes_by_witness(ideal: &MonomialIdeal) -> Vec<MonomialPrime> {
    let points = box_points(&ideal.lcm_exponents());
    let mut primes: Vec<MonomialPrime> =
        prime_witnesses(ideal, &points).into_iter().map(|(_, p)| p).collect();
    primes.sort();
    primes.dedup();
    primes
}

/// Searches for a prime filtration of `S/I` in the given mode, with every
/// `v_i` inside the box `[0, bound]` (default: exponents of `lcm(G(I))`).
pub fn find_filtration(
    ideal: &MonomialIdeal,
    mode: CleannessMode,
    bound: Option<&[u32]>,
) -> Result<Option<PrimeFiltration>> {
    if ideal.is_unit() {
        return Err(Error::Domain("S/I is zero for the unit ideal".into()));
    }
    let lcm = ideal.lcm_exponents();
    let cap = match bound {
        Some(b) => {
            Error::check_ring(ideal.nvars(), b.len())?;
            if b.iter().zip(&lcm).any(|(b, l)| b < l) {
                return Err(Error::Precondition(
                    "filtration bound must dominate lcm(G(I))".into(),
                ));
            }
            b.to_vec()
        }
        None => lcm,
    };
    let points = box_points(&cap);
    let ass = {
        let mut a: Vec<MonomialPrime> =
            prime_witnesses(ideal, &points).into_iter().map(|(_, p)| p).collect();
        a.sort();
        a.dedup();
        a
    };
    let allowed = match mode {
        CleannessMode::Clean => Some(minimal_elements(&ass)),
        CleannessMode::AlmostClean => Some(ass.clone()),
        CleannessMode::PrettyClean => None,
    };
    let mut search = FiltrationSearch {
        points,
        allowed,
        dead: HashSet::new(),
    };
    let mut steps = Vec::new();
    let mut used = Vec::new();
    if !search.extend(ideal, &mut used, &mut steps) {
        return Ok(None);
    }
    let filtration = PrimeFiltration {
        nvars: ideal.nvars(),
        steps,
    };
    let primes = filtration.primes();
    let accepted = match mode {
        CleannessMode::Clean => {
            let min = minimal_elements(&ass);
            primes.iter().all(|p| min.contains(p))
        }
        CleannessMode::PrettyClean => pretty_order_holds(&primes),
        CleannessMode::AlmostClean => same_set(&primes, &ass),
    };
    Ok(accepted.then_some(filtration))
}

/// No `i < j` with `p_i ⊊ p_j`.
fn pretty_order_holds(primes: &[MonomialPrime]) -> bool {
    primes
        .iter()
        .enumerate()
        .all(|(i, p)| primes[i + 1..].iter().all(|q| !p.is_proper_subset(q)))
}

struct FiltrationSearch {
    points: Vec<Monomial>,
    /// Primes a step may use; `None` means the pretty clean order rule instead.
    allowed: Option<Vec<MonomialPrime>>,
    dead: HashSet<(MonomialIdeal, Vec<MonomialPrime>)>,
}

impl FiltrationSearch {
    fn permitted(&self, p: &MonomialPrime, used: &[MonomialPrime]) -> bool {
        match &self.allowed {
            Some(allowed) => allowed.contains(p),
            None => used.iter().all(|q| !q.is_proper_subset(p)),
        }
    }

    fn extend(
        &mut self,
        current: &MonomialIdeal,
        used: &mut Vec<MonomialPrime>,
        steps: &mut Vec<FiltrationStep>,
    ) -> bool {
        if current.is_unit() {
            return true;
        }
        // For the pretty rule only the minimal used primes constrain the future.
        let key_primes = if self.allowed.is_some() {
            Vec::new()
        } else {
            let mut m = minimal_elements(used);
            m.sort();
            m.dedup();
            m
        };
        let key = (current.clone(), key_primes);
        if self.dead.contains(&key) {
            return false;
        }
        let witnesses = prime_witnesses(current, &self.points);
        // Every associated prime of S/I_cur must show up later in the chain.
        if witnesses.iter().any(|(_, p)| !self.permitted(p, used)) {
            self.dead.insert(key);
            return false;
        }
        for (v, p) in witnesses {
            let next = current.add_monomial_unchecked(&v);
            used.push(p);
            steps.push(FiltrationStep { v, prime: p });
            if self.extend(&next, used, steps) {
                return true;
            }
            steps.pop();
            used.pop();
        }
        self.dead.insert(key);
        false
    }
}

/// Re-verifies a filtration certificate for `S/I` in the given mode:
/// colon equations, strictness, termination at `S`, and the mode condition
/// on the prime sequence (against `Ass`/`Min` from the decomposition).
pub fn validate_filtration(
    filtration: &PrimeFiltration,
    ideal: &MonomialIdeal,
    mode: CleannessMode,
) -> Result<()> {
    let bad = |msg: String| Err(Error::MalformedFiltration(msg));
    if filtration.nvars != ideal.nvars() {
        return bad(format!(
            "filtration has {} variables, ideal has {}",
            filtration.nvars,
            ideal.nvars()
        ));
    }
    if filtration.steps.is_empty() {
        return bad("empty filtration".into());
    }
    let mut current = ideal.clone();
    for (i, step) in filtration.steps.iter().enumerate() {
        if step.v.nvars() != ideal.nvars() || step.prime.nvars() != ideal.nvars() {
            return bad(format!("step {}: ring mismatch", i + 1));
        }
        if current.contains_unchecked(&step.v) {
            return bad(format!("step {}: v already lies in I_{}", i + 1, i));
        }
        let colon = current.colon_unchecked(&step.v);
        if colon != step.prime.to_ideal() {
            return bad(format!(
                "step {}: I_{} : v is {:?}, not {:?}",
                i + 1,
                i,
                colon,
                step.prime
            ));
        }
        current = current.add_monomial_unchecked(&step.v);
    }
    if !current.is_unit() {
        return bad(format!("chain ends at {current:?}, not S"));
    }
    let last = filtration.steps.last().expect("nonempty");
    if !last.v.is_one() {
        return bad("last step must add the unit monomial".into());
    }
    let primes = filtration.primes();
    match mode {
        CleannessMode::Clean => {
            let min = minimal_primes(ideal)?;
            if !same_set(&primes, &min) {
                return bad("prime support differs from Min(S/I)".into());
            }
        }
        CleannessMode::PrettyClean => {
            if !pretty_order_holds(&primes) {
                return bad("an earlier prime is strictly contained in a later one".into());
            }
        }
        CleannessMode::AlmostClean => {
            let ass = associated_primes(ideal)?;
            if !same_set(&primes, &ass) {
                return bad("prime support differs from Ass(S/I)".into());
            }
        }
    }
    Ok(())
}

pub fn is_valid_filtration(
    filtration: &PrimeFiltration,
    ideal: &MonomialIdeal,
    mode: CleannessMode,
) -> bool {
    validate_filtration(filtration, ideal, mode).is_ok()
}

/// Minimal elements of `{m ∈ ⋂_{j<i} Q_j, m ∉ Q_i}` by enumeration over the
/// box `[0, cap]`; a brute-force reference for T-sets.
pub fn t_sets_by_enumeration(d: &OrderedDecomposition, cap: &[u32]) -> Vec<Vec<Monomial>> {
    let points = box_points(cap);
    (0..d.components.len())
        .map(|i| {
            let members = points.iter().filter(|m| {
                d.components[..i].iter().all(|q| q.contains(m)) && !d.components[i].contains(m)
            });
            minimal_generators(members.cloned())
        })
        .collect()
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

    fn comp(r: &RingContext, s: &str) -> IrreducibleComponent {
        IrreducibleComponent::from_ideal(&r.parse_ideal(s).unwrap()).unwrap()
    }

    #[test]
    fn t_set_examples() {
        let r = RingContext::new(2).unwrap();
        let d = OrderedDecomposition::new(2, vec![comp(&r, "x1"), comp(&r, "x1^2, x2")]).unwrap();
        assert_eq!(d.t_sets(), vec![vec![r.one()], vec![r.var(0)]]);
        let d = OrderedDecomposition::new(2, vec![comp(&r, "x1^2, x2"), comp(&r, "x1")]).unwrap();
        assert_eq!(d.t_sets()[1], vec![r.var(1)]);
        let d = OrderedDecomposition::new(2, vec![comp(&r, "x2^3")]).unwrap();
        assert_eq!(d.t_sets(), vec![vec![r.one()]]);
    }

    #[test]
    fn ordering_checks() {
        let r = RingContext::new(2).unwrap();
        let d = OrderedDecomposition::new(2, vec![comp(&r, "x1"), comp(&r, "x1^2, x2")]).unwrap();
        assert!(check_ordering(&d, CleannessMode::PrettyClean).unwrap());
        assert!(!check_ordering(&d, CleannessMode::Clean).unwrap());
        assert!(check_ordering(&d, CleannessMode::AlmostClean).unwrap());
        let single = OrderedDecomposition::new(2, vec![comp(&r, "x1^2, x2")]).unwrap();
        for mode in CleannessMode::ALL {
            assert!(check_ordering(&single, mode).unwrap());
        }
    }

    #[test]
    fn irredundant_orderings_are_not_enough() {
        let r = RingContext::new(4).unwrap();
        let i = r
            .parse_ideal("x1^2*x2*x3^2, x1^2*x2*x3*x4, x1*x2^3*x4^3, x2^2*x3^3*x4^3")
            .unwrap();
        let mode = CleannessMode::PrettyClean;
        assert!(!decide_irredundant(&i, mode).unwrap().holds);
        let f = find_filtration(&i, mode, None).unwrap().expect("pretty clean filtration");
        assert!(is_valid_filtration(&f, &i, mode));
        let v = decide(&i, mode).unwrap();
        assert!(v.holds);
        assert_eq!(v.route, DecisionRoute::Extended);
        let cert = v.certificate.unwrap();
        assert!(check_ordering(&cert, mode).unwrap());
        assert_eq!(cert.intersection(), i);
        // The witness needs more components than the irredundant decomposition has.
        assert!(cert.components.len() > irreducible_decomposition(&i).unwrap().len());
    }

    #[test]
    fn decide_examples() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let v = decide(&i, CleannessMode::PrettyClean).unwrap();
        assert!(v.holds);
        let cert = v.certificate.unwrap();
        assert_eq!(cert.components, vec![comp(&r, "x1"), comp(&r, "x1^2, x2")]);
        assert!(!decide(&i, CleannessMode::Clean).unwrap().holds);

        let (_, cycle) = setup(4, "x1*x2, x2*x3, x3*x4, x4*x1");
        assert!(!decide(&cycle, CleannessMode::PrettyClean).unwrap().holds);
        let (_, path) = setup(4, "x1*x2, x2*x3, x3*x4");
        assert!(decide(&path, CleannessMode::Clean).unwrap().holds);
        assert!(decide(&MonomialIdeal::zero(3), CleannessMode::Clean).unwrap().holds);
    }

    #[test]
    fn filtration_examples() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let f = find_filtration(&i, CleannessMode::PrettyClean, None)
            .unwrap()
            .unwrap();
        let shown: Vec<(String, String)> = f
            .steps
            .iter()
            .map(|s| (r.format_monomial(&s.v), s.prime.display_with(r.names())))
            .collect();
        assert_eq!(
            shown,
            [
                ("x1".to_string(), "(x1, x2)".to_string()),
                ("1".to_string(), "(x1)".to_string())
            ]
        );
        validate_filtration(&f, &i, CleannessMode::PrettyClean).unwrap();
        assert!(find_filtration(&i, CleannessMode::Clean, None).unwrap().is_none());

        let (_, p) = setup(3, "x1, x3");
        let f = find_filtration(&p, CleannessMode::Clean, None).unwrap().unwrap();
        assert_eq!(f.steps.len(), 1);
        assert!(f.steps[0].v.is_one());
        assert_eq!(Some(f.steps[0].prime), p.as_prime());

        let (_, cycle) = setup(4, "x1*x2, x2*x3, x3*x4, x4*x1");
        assert!(find_filtration(&cycle, CleannessMode::PrettyClean, None)
            .unwrap()
            .is_none());

        let zero = MonomialIdeal::zero(2);
        let f = find_filtration(&zero, CleannessMode::Clean, None).unwrap().unwrap();
        validate_filtration(&f, &zero, CleannessMode::Clean).unwrap();
    }

    #[test]
    fn validator_rejects_bad_chains() {
        let (r, i) = setup(2, "x1^2, x1*x2");
        let good = find_filtration(&i, CleannessMode::PrettyClean, None)
            .unwrap()
            .unwrap();
        let mut swapped = good.clone();
        swapped.steps.reverse();
        assert!(!is_valid_filtration(&swapped, &i, CleannessMode::PrettyClean));

        // (x2, (x1)) then (x1, (x1, x2)): colons hold, order rule fails.
        let wrong_order = PrimeFiltration {
            nvars: 2,
            steps: vec![
                FiltrationStep {
                    v: r.var(1),
                    prime: MonomialPrime::new(2, [0]).unwrap(),
                },
                FiltrationStep {
                    v: r.var(0),
                    prime: MonomialPrime::new(2, [0, 1]).unwrap(),
                },
                FiltrationStep {
                    v: r.one(),
                    prime: MonomialPrime::new(2, [0, 1]).unwrap(),
                },
            ],
        };
        let err = validate_filtration(&wrong_order, &i, CleannessMode::PrettyClean);
        assert!(matches!(err, Err(Error::MalformedFiltration(_))), "{err:?}");
        assert!(is_valid_filtration(&wrong_order, &i, CleannessMode::AlmostClean));

        let mut truncated = good.clone();
        truncated.steps.pop();
        let err = validate_filtration(&truncated, &i, CleannessMode::PrettyClean).unwrap_err();
        assert!(err.to_string().contains("not S"), "{err}");
    }

    #[test]
    fn witness_primes_match_decomposition() {
        let (_, i) = setup(3, "x1^2*x2, x2^2*x3, x1*x3^3");
        assert_eq!(associated_primes_by_witness(&i), associated_primes(&i).unwrap());
    }

    #[test]
    fn t_sets_match_enumeration() {
        let (_, i) = setup(3, "x1^2*x2, x2^2*x3, x1*x3^2");
        let d = irreducible_decomposition(&i).unwrap();
        let od = OrderedDecomposition::new(3, d.components().to_vec()).unwrap();
        assert_eq!(od.t_sets(), t_sets_by_enumeration(&od, &i.lcm_exponents()));
        let mut rev = od.clone();
        rev.components.reverse();
        assert_eq!(rev.t_sets(), t_sets_by_enumeration(&rev, &i.lcm_exponents()));
    }
}
