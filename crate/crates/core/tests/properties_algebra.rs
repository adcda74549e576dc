use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use radix_core::arith::{
    depress_cubic, depress_quartic, factor_degree_pattern, first_primes, is_irreducible_q,
    is_squarefree, rat, rational_roots, reduce_mod_p, squarefree_part, Polynomial, Rational,
};
use radix_core::galois::{
    derived_series, group_closure, is_solvable, quintic_verdict, Permutation, SolvabilityVerdict,
};
use radix_core::parse::parse_polynomial;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn monic(degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), degree).prop_map(|mut c| {
        c.push(Rational::one());
        Polynomial::new(c)
    })
}

fn int_poly(degree: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-bound..=bound, degree), 1..=bound).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::from_ints(&c)
    })
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|m| Permutation::new(m).unwrap())
}

/// Brute-force reducibility of a primitive integer polynomial of degree at
/// most 4: a rational root, or a product of two integer quadratics whose
/// middle coefficient is searched exhaustively up to `bound`.
fn reducible_by_search(f: &Polynomial, bound: i64) -> bool {
    let n = f.degree().unwrap();
    if n <= 1 {
        return false;
    }
    let ints: Vec<i64> = f
        .to_primitive_integers()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect();
    let divisors = |k: i64| -> Vec<i64> {
        let k = k.abs();
        (1..=k)
            .filter(|d| k % d == 0)
            .flat_map(|d| [d, -d])
            .collect()
    };
    let has_linear = ints[0] == 0
        || divisors(ints[n]).iter().any(|&a| {
            divisors(ints[0])
                .iter()
                .any(|&b| f.eval(&rat(b, a)).is_zero())
        });
    if has_linear {
        return true;
    }
    if n < 4 {
        return false;
    }
    for &a in divisors(ints[4]).iter().filter(|a| **a > 0) {
        for &c in &divisors(ints[0]) {
            for b in -bound..=bound {
                let g = Polynomial::from_ints(&[c, b, a]);
                if f.div_rem(&g).unwrap().1.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn depressing_round_trips(f3 in monic(3), f4 in monic(4)) {
        let c = depress_cubic(&f3).unwrap();
        prop_assert_eq!(c.expand(), f3.clone());
        prop_assert!(c.to_polynomial().coeff(2).is_zero());
        let q = depress_quartic(&f4).unwrap();
        prop_assert_eq!(q.expand(), f4.clone());
        prop_assert!(q.to_polynomial().coeff(3).is_zero());
    }

    #[test]
    fn squarefree_part_is_coprime_to_its_derivative(
        a in monic(2),
        b in monic(1),
        k in 1u32..=3,
    ) {
        let f = a.mul(&b.pow(k));
        let (sqf, repeated) = squarefree_part(&f).unwrap();
        prop_assert!(sqf.gcd(&sqf.derivative()).degree() == Some(0));
        prop_assert!(is_squarefree(&sqf));
        prop_assert_eq!(sqf.mul(&repeated).monic(), f.monic());
    }

    #[test]
    fn factor_patterns_sum_to_degree(f in int_poly(5, 12), idx in 0usize..20) {
        let p = first_primes(20)[idx];
        if let Ok(g) = reduce_mod_p(&f, p) {
            if g.is_squarefree() {
                let pattern = factor_degree_pattern(&g).unwrap();
                prop_assert_eq!(pattern.total(), 5);
            }
        }
    }

    #[test]
    fn planted_rational_roots_are_found(
        roots in prop::collection::vec(rational(), 1..=3),
        cofactor in int_poly(2, 6),
    ) {
        let f = roots
            .iter()
            .fold(cofactor.clone(), |acc, r| acc.mul(&Polynomial::linear_root(r.clone())));
        let found = rational_roots(&f);
        for r in &roots {
            prop_assert!(found.contains(r), "{} missing from {:?}", r, found);
        }
        for r in &found {
            prop_assert!(f.eval(r).is_zero());
        }
    }

    #[test]
    fn irreducibility_matches_brute_force(f in (2usize..=4).prop_flat_map(|n| int_poly(n, 6))) {
        prop_assume!(is_squarefree(&f));
        // Mignotte: factor coefficients are bounded by 2^n times the 2-norm.
        let norm: f64 = f
            .to_primitive_integers()
            .iter()
            .map(|c| { let c = i64::try_from(c).unwrap() as f64; c * c })
            .sum::<f64>()
            .sqrt();
        let bound = (16.0 * norm).ceil() as i64;
        prop_assert_eq!(is_irreducible_q(&f).unwrap(), !reducible_by_search(&f, bound), "{}", f);
    }

    #[test]
    fn products_of_quadratics_are_reducible(g in int_poly(2, 8), h in int_poly(2, 8), l in int_poly(1, 8)) {
        let quartic = g.mul(&h);
        prop_assume!(is_squarefree(&quartic));
        prop_assert!(!is_irreducible_q(&quartic).unwrap());
        let quintic = quartic.mul(&l);
        if is_squarefree(&quintic) {
            prop_assert!(!is_irreducible_q(&quintic).unwrap());
        }
    }

    #[test]
    fn not_solvable_certificates_are_sound(f in int_poly(5, 10)) {
        prop_assume!(is_squarefree(&f));
        if let SolvabilityVerdict::NotSolvableByRadicals { prime, cycle_type } = quintic_verdict(&f, 30).unwrap() {
            prop_assert!(is_irreducible_q(&f).unwrap());
            let g = reduce_mod_p(&f, prime).unwrap();
            prop_assert!(g.is_squarefree());
            prop_assert_eq!(factor_degree_pattern(&g).unwrap(), cycle_type);
        }
    }

    #[test]
    fn quintics_with_a_rational_root_are_never_unsolvable(
        r in rational(),
        quartic in int_poly(4, 10),
    ) {
        let f = quartic.mul(&Polynomial::linear_root(r));
        prop_assume!(is_squarefree(&f));
        let verdict = quintic_verdict(&f, 50).unwrap();
        let solvable = matches!(verdict, SolvabilityVerdict::SolvableByRadicals { .. });
        prop_assert!(solvable, "{:?}", verdict);
    }

    #[test]
    fn derived_series_orders_divide(n in 2usize..=6, gens in prop::collection::vec(0u64..u64::MAX, 1..=3)) {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|seed| {
                let mut m: Vec<usize> = (0..n).collect();
                let mut s = *seed;
                for i in (1..n).rev() {
                    m.swap(i, (s % (i as u64 + 1)) as usize);
                    s /= i as u64 + 1;
                }
                Permutation::new(m).unwrap()
            })
            .collect();
        let g = group_closure(&perms).unwrap();
        let series = derived_series(&g);
        prop_assert_eq!(series[0].order(), g.order());
        for w in series.windows(2) {
            prop_assert!(w[1].is_subgroup_of(&w[0]));
            prop_assert_eq!(w[0].order() % w[1].order(), 0);
            prop_assert!(w[1].order() < w[0].order());
        }
        prop_assert_eq!(is_solvable(&g), series.last().unwrap().is_trivial());
    }

    #[test]
    fn subgroups_of_s4_are_solvable(gens in prop::collection::vec(perm(4), 1..=3)) {
        let g = group_closure(&gens).unwrap();
        prop_assert_eq!(24 % g.order(), 0);
        prop_assert!(is_solvable(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_then_parse_is_identity(
        f in (0usize..=6).prop_flat_map(|n| prop::collection::vec(rational(), n + 1)),
        var in prop::sample::select(vec!["x", "y", "t", "z1"]),
    ) {
        let f = Polynomial::new(f);
        let text = f.display_with(var);
        let parsed = parse_polynomial(&text).unwrap();
        prop_assert_eq!(&parsed.polynomial, &f, "{}", text);
        if f.degree().is_some_and(|d| d > 0) {
            prop_assert_eq!(parsed.variable_name, var);
        }
        let again = parse_polynomial(&parsed.polynomial.display_compact(var)).unwrap();
        prop_assert_eq!(again.polynomial, f);
    }
}

#[test]
fn rational_root_search_handles_large_constants() {
    let f = Polynomial::linear_root(Rational::from_integer(BigInt::from(10u64.pow(12))))
        .mul(&Polynomial::linear_root(rat(-7, 3)));
    let roots = rational_roots(&f);
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().any(|r| r.is_negative()));
}
