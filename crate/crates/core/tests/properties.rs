use monoclean::cleanness::{
    associated_primes_by_witness, decide, find_filtration, is_valid_filtration, CleannessMode,
};
use monoclean::decomposition::{associated_primes, irreducible_decomposition, minimal_primes};
use monoclean::homology::betti_table;
use monoclean::sequences::{is_filter_regular_element, is_regular_element, lemma32_check};
use monoclean::homology::regularity;
use monoclean::stanley::{h_regularity_check, sdepth, stanley_conjecture_check, CharacteristicPoset};
use monoclean::{Characteristic, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn monomial(n: usize, cap: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=cap, n).prop_map(Monomial::new)
}

fn nonunit(n: usize, cap: u32) -> impl Strategy<Value = Monomial> {
    monomial(n, cap).prop_map(move |m| {
        if m.is_one() {
            Monomial::var(n, 0)
        } else {
            m
        }
    })
}

fn proper_ideal(n: usize, cap: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(nonunit(n, cap), 1..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

fn any_ideal(n: usize, cap: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(n, cap), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).unwrap())
}

/// Every monomial with exponents `≤ cap`.
fn box_monomials(n: usize, cap: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=cap).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

fn pair(max_n: usize, cap: u32, gens: usize) -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=max_n).prop_flat_map(move |n| (any_ideal(n, cap, gens), any_ideal(n, cap, gens)))
}

fn single(max_n: usize, cap: u32, gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| proper_ideal(n, cap, gens))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn lattice_laws((i, j) in pair(3, 3, 3)) {
        prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
        prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
        prop_assert_eq!(i.intersect(&i.sum(&j).unwrap()).unwrap(), i.clone());
        prop_assert_eq!(i.sum(&i.intersect(&j).unwrap()).unwrap(), i.clone());
        prop_assert_eq!(i.intersect(&i).unwrap(), i.clone());
    }

    #[test]
    fn distributive((i, j) in pair(3, 2, 3), k in any::<u8>()) {
        let n = i.nvars();
        let third = MonomialIdeal::principal(Monomial::new((0..n).map(|t| u32::from(k >> t & 1)).collect()));
        let lhs = i.intersect(&j.sum(&third).unwrap()).unwrap();
        let rhs = i.intersect(&j).unwrap().sum(&i.intersect(&third).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_by_enumeration((i, j) in pair(3, 2, 3), f in monomial(3, 2)) {
        let n = i.nvars();
        let f = Monomial::new(f.exponents()[..n].to_vec());
        let sum = i.sum(&j).unwrap();
        let meet = i.intersect(&j).unwrap();
        let colon = i.colon(&f).unwrap();
        for m in box_monomials(n, 3) {
            let a = i.contains(&m).unwrap();
            let b = j.contains(&m).unwrap();
            prop_assert_eq!(sum.contains(&m).unwrap(), a || b);
            prop_assert_eq!(meet.contains(&m).unwrap(), a && b);
            prop_assert_eq!(colon.contains(&m).unwrap(), i.contains(&m.mul(&f).unwrap()).unwrap());
        }
    }

    #[test]
    fn generators_are_minimal(i in single(4, 3, 5)) {
        let g = i.gens();
        for (a, x) in g.iter().enumerate() {
            for (b, y) in g.iter().enumerate() {
                prop_assert!(a == b || !x.divides(y).unwrap());
            }
        }
        prop_assert_eq!(MonomialIdeal::new(i.nvars(), g.to_vec()).unwrap(), i.clone());
    }

    #[test]
    fn saturation_properties(i in single(3, 3, 4)) {
        let sat = i.saturate();
        prop_assert!(sat.contains_ideal(&i).unwrap());
        prop_assert_eq!(sat.saturate(), sat.clone());
        if !sat.is_unit() {
            let m = MonomialIdeal::maximal(i.nvars());
            prop_assert_eq!(sat.colon_ideal(&m).unwrap(), sat.clone());
        }
    }

    #[test]
    fn decomposition_recovers_ideal(i in single(4, 3, 4)) {
        let d = irreducible_decomposition(&i).unwrap();
        prop_assert!(d.is_irredundant());
        prop_assert_eq!(d.intersection(), i.clone());
        let min = minimal_primes(&i).unwrap();
        let ass = associated_primes(&i).unwrap();
        prop_assert!(min.iter().all(|p| ass.contains(p)));
    }

    #[test]
    fn ass_by_witness(i in single(3, 3, 4)) {
        prop_assert_eq!(associated_primes_by_witness(&i), associated_primes(&i).unwrap());
    }

    #[test]
    fn saturation_drops_only_the_maximal_ideal(i in single(3, 3, 4)) {
        let sat = i.saturate();
        let mut expected: Vec<_> = associated_primes(&i).unwrap().into_iter().filter(|p| !p.is_maximal()).collect();
        expected.sort();
        if sat.is_unit() {
            prop_assert!(expected.is_empty());
        } else {
            prop_assert_eq!(associated_primes(&sat).unwrap(), expected);
        }
    }

    #[test]
    fn oracle_agreement_and_chain(i in single(3, 2, 4)) {
        let mut verdicts = vec![];
        for mode in CleannessMode::ALL {
            let holds = decide(&i, mode).unwrap().holds;
            let f = find_filtration(&i, mode, None).unwrap();
            prop_assert_eq!(holds, f.is_some(), "{}", mode);
            if let Some(f) = f {
                prop_assert!(is_valid_filtration(&f, &i, mode));
            }
            verdicts.push(holds);
        }
        prop_assert!(!verdicts[0] || verdicts[1]);
        prop_assert!(!verdicts[1] || verdicts[2]);
    }

    #[test]
    fn regular_elements((i, u) in (1..=3usize).prop_flat_map(|n| (proper_ideal(n, 3, 4), nonunit(n, 2)))) {
        prop_assert!(lemma32_check(&i, &u).unwrap());
        if is_regular_element(&i, &u).unwrap() {
            prop_assert!(is_filter_regular_element(&i, &u).unwrap());
        }
    }

    #[test]
    fn euler_characteristic(i in single(3, 3, 4)) {
        let t = betti_table(&i, Characteristic::Zero).unwrap();
        for c in box_monomials(i.nvars(), 4) {
            let expected = i64::from(!i.contains(&c).unwrap());
            prop_assert_eq!(t.euler_characteristic_at(c.exponents()), expected);
        }
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<monoclean::BettiTable>(&json).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stanley_witness_is_exact(i in single(3, 2, 3)) {
        let (d, partition) = sdepth(&i).unwrap();
        let poset = CharacteristicPoset::new(&i, 5000).unwrap();
        prop_assert!(partition.validate(&poset).is_ok());
        prop_assert_eq!(partition.sdepth(), d);
        prop_assert!(d <= i.nvars());
        // One fewer than the optimum is still achievable.
        if d > 0 {
            prop_assert!(monoclean::stanley::partition_with_sdepth(&poset, d - 1).unwrap().is_some());
        }
        prop_assert!(monoclean::stanley::partition_with_sdepth(&poset, d + 1).unwrap().is_none());
    }

    #[test]
    fn json_round_trips(i in single(4, 3, 4)) {
        let json = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<MonomialIdeal>(&json).unwrap(), i.clone());
        let d = irreducible_decomposition(&i).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<monoclean::Decomposition>(&json).unwrap(), d);
        if let Some(cert) = decide(&i, CleannessMode::AlmostClean).unwrap().certificate {
            let json = serde_json::to_string(&cert).unwrap();
            prop_assert_eq!(serde_json::from_str::<monoclean::OrderedDecomposition>(&json).unwrap(), cert);
        }
    }

    #[test]
    fn squarefree_h_regularity_matches_stanley(i in single(4, 1, 4)) {
        let (hreg, witness) = h_regularity_check(&i).unwrap();
        prop_assert_eq!(hreg, stanley_conjecture_check(&i).unwrap());
        if let Some(w) = witness {
            let poset = CharacteristicPoset::new(&i, 5000).unwrap();
            prop_assert!(w.validate(&poset).is_ok());
            prop_assert!(w.max_generator_degree() as i64 <= regularity(&i).unwrap());
        }
    }
}
