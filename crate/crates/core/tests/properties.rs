//! Randomized algebraic properties for the arithmetic kernels.
//!
//! Everything here is a law the implementation must satisfy for all
//! inputs, exercised over generated values: ring homomorphisms,
//! factorization round-trips, agreement between independent engines
//! for the same quantity, and totality of validation (errors, never
//! panics, on garbage input).  Failures shrink to minimal
//! counterexamples, which is why these live alongside the pinned
//! example-based suites instead of replacing them.

use monogen_core::{
    common_zero_verdict, dedekind_test, dedekind_test_with_lift, discriminant, discriminant_crt,
    eisenstein_test, enumerate_family, factor, fastpath, fp_factor, fp_gcd, is_prime, member,
    mod_pow, p_adic_valuation, primes_up_to, resultant, resultant_crt, verify_irreducible,
    FactorBudget, IntPoly, Lift, ModPoly, Quadrinomial, DEFAULT_SEED,
};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(&SMALL_PRIMES[..])
}

/// A monic integer polynomial of degree 1..=max_deg with lower
/// coefficients bounded by `bound`.
fn monic_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg).prop_flat_map(move |d| {
        prop::collection::vec(-bound..=bound, d).prop_map(|mut v| {
            v.push(1);
            IntPoly::from_i64(v)
        })
    })
}

/// A nonzero integer polynomial of degree 0..=max_deg.
fn nonzero_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (0..=max_deg).prop_flat_map(move |d| {
        prop::collection::vec(-bound..=bound, d + 1).prop_map(|mut v| {
            if v.iter().all(|&c| c == 0) {
                *v.last_mut().unwrap() = 1;
            }
            IntPoly::from_i64(v)
        })
    })
}

/// A nonzero polynomial over F_p, prime chosen from the small pool.
fn nonzero_modpoly(max_deg: usize) -> impl Strategy<Value = ModPoly> {
    (small_prime(), 0..=max_deg).prop_flat_map(|(p, d)| {
        prop::collection::vec(0..p, d + 1).prop_map(move |mut v| {
            if v.iter().all(|&c| c == 0) {
                *v.last_mut().unwrap() = 1;
            }
            ModPoly::new(p, v)
        })
    })
}

proptest! {
    /// factor() reassembles its input exactly, reports only genuine
    /// primes, and is complete on word-sized input (trial division up
    /// to 10^6 leaves at most a prime cofactor below 10^12).
    #[test]
    fn factorization_reassembles(x in -1_000_000_000_000i64..=1_000_000_000_000) {
        prop_assume!(x != 0);
        let v = BigInt::from(x);
        let factored = factor(&v, &FactorBudget::default()).unwrap();
        prop_assert!(factored.is_complete());
        prop_assert_eq!(factored.value(), v);
        for (p, e) in &factored.factors {
            prop_assert!(is_prime(p), "listed factor {} is not prime", p);
            prop_assert!(*e >= 1);
        }
    }

    /// is_prime agrees with full factorization.
    #[test]
    fn primality_matches_factorization(n in 2u64..=10_000_000) {
        let factored = factor(&BigInt::from(n), &FactorBudget::default()).unwrap();
        let single = factored.factors.len() == 1 && factored.factors[0].1 == 1;
        prop_assert_eq!(is_prime(&BigUint::from(n)), single);
    }

    /// p_adic_valuation recovers the construction x = p^v * u, p ∤ u,
    /// and returns the unit part unchanged.
    #[test]
    fn valuation_roundtrip(p in small_prime(), v in 0u32..=12, u in -1000i64..=1000) {
        prop_assume!(u != 0 && u.unsigned_abs() % p != 0);
        let x = BigInt::from(u) * BigInt::from(p).pow(v);
        let (got_v, got_u) = p_adic_valuation(&x, p).unwrap();
        prop_assert_eq!(got_v, v);
        prop_assert_eq!(got_u, BigInt::from(u));
    }

    /// mod_pow against naive exponentiation.
    #[test]
    fn mod_pow_matches_naive(base in -100i64..=100, exp in 0u32..=24, m in 2u64..=1_000_000) {
        let naive = BigInt::from(base).pow(exp);
        let naive = ((naive % m) + m) % m;
        let got = mod_pow(&BigInt::from(base), &BigUint::from(exp), &BigUint::from(m)).unwrap();
        prop_assert_eq!(BigInt::from(got), naive);
    }

    /// Polynomial multiplication commutes with evaluation.
    #[test]
    fn mul_eval_homomorphism(
        f in nonzero_poly(6, 30),
        g in nonzero_poly(6, 30),
        t in -20i64..=20,
    ) {
        let t = BigInt::from(t);
        prop_assert_eq!(f.mul(&g).eval(&t), f.eval(&t) * g.eval(&t));
    }

    /// The subresultant engine and the modular-reconstruction engine
    /// compute the same resultant.
    #[test]
    fn resultant_engines_agree(f in nonzero_poly(7, 40), g in nonzero_poly(7, 40)) {
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant_crt(&f, &g).unwrap());
    }

    /// Res(f, g*h) = Res(f, g) * Res(f, h) for monic f: the resultant
    /// is the product of g's values at the roots of f, so it splits
    /// across factors of the second argument.
    #[test]
    fn resultant_multiplicative(
        f in monic_poly(5, 25),
        g in nonzero_poly(4, 25),
        h in nonzero_poly(4, 25),
    ) {
        let lhs = resultant(&f, &g.mul(&h)).unwrap();
        let rhs = resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Degree-2 closed form: disc(x^2 + bx + c) = b^2 - 4c.
    #[test]
    fn quadratic_discriminant(b in -200i64..=200, c in -200i64..=200) {
        let f = IntPoly::from_i64([c, b, 1]);
        prop_assert_eq!(discriminant(&f).unwrap(), BigInt::from(b * b - 4 * c));
    }

    /// Degree-3 closed form:
    /// disc(x^3 + ax^2 + bx + c) = 18abc - 4a^3c + a^2b^2 - 4b^3 - 27c^2.
    #[test]
    fn cubic_discriminant(a in -60i64..=60, b in -60i64..=60, c in -60i64..=60) {
        let f = IntPoly::from_i64([c, b, a, 1]);
        let (a, b, c) = (i128::from(a), i128::from(b), i128::from(c));
        let expected = 18 * a * b * c - 4 * a * a * a * c + a * a * b * b
            - 4 * b * b * b - 27 * c * c;
        prop_assert_eq!(discriminant(&f).unwrap(), BigInt::from(expected));
    }

    /// Both discriminant engines agree on random monic input.
    #[test]
    fn discriminant_engines_agree(f in monic_poly(9, 50)) {
        prop_assert_eq!(discriminant(&f).unwrap(), discriminant_crt(&f).unwrap());
    }

    /// F_p factorization round-trips and every reported factor is
    /// independently certified irreducible.
    #[test]
    fn fp_factor_roundtrip(f in nonzero_modpoly(10)) {
        let factorization = fp_factor(&f, DEFAULT_SEED).unwrap();
        prop_assert_eq!(factorization.product(), f);
        for (g, e) in &factorization.factors {
            prop_assert!(*e >= 1);
            prop_assert!(verify_irreducible(g).unwrap(), "factor {} not irreducible", g);
        }
    }

    /// The gcd divides both inputs, is monic, and respects scaling by
    /// a common monic factor: gcd(f*h, g*h) = gcd(f, g) * h.
    #[test]
    fn gcd_laws(p in small_prime(), seed_f in 0u64..1000, seed_g in 0u64..1000, seed_h in 0u64..1000) {
        // Derive three polynomials from one prime so moduli match.
        let mk = |seed: u64, monic: bool| {
            let d = (seed % 4 + 1) as usize;
            let mut coeffs: Vec<u64> = (0..d).map(|i| (seed >> i) % p).collect();
            coeffs.push(if monic { 1 } else { 1 + seed % (p - 1).max(1) });
            ModPoly::new(p, coeffs)
        };
        let f = mk(seed_f, false);
        let g = mk(seed_g, false);
        let h = mk(seed_h, true);

        let d = fp_gcd(&f, &g).unwrap();
        prop_assert!(f.divisible_by(&d));
        prop_assert!(g.divisible_by(&d));

        let scaled = fp_gcd(&f.mul(&h), &g.mul(&h)).unwrap();
        prop_assert_eq!(scaled, d.mul(&h));
    }

    /// The criterion's verdict and witness cannot depend on which
    /// coefficient lift rebuilds the factorization over Z.
    #[test]
    fn lift_independence(p in small_prime(), f in monic_poly(8, 40)) {
        let canonical = dedekind_test_with_lift(&f, p, Lift::Canonical).unwrap();
        let symmetric = dedekind_test_with_lift(&f, p, Lift::Symmetric).unwrap();
        prop_assert_eq!(canonical.divides_index, symmetric.divides_index);
        prop_assert_eq!(canonical.witness, symmetric.witness);
    }

    /// On polynomials congruent to x^n mod p, the constant-coefficient
    /// shortcut and the full criterion give identical verdicts and
    /// witnesses.
    #[test]
    fn eisenstein_matches_criterion(
        p in small_prime(),
        tail in prop::collection::vec(-10i64..=10, 1..=8),
    ) {
        let mut coeffs: Vec<i64> = tail.iter().map(|t| t * p as i64).collect();
        coeffs.push(1);
        let f = IntPoly::from_i64(coeffs);
        let shortcut = eisenstein_test(&f, p).unwrap();
        let full = dedekind_test(&f, p).unwrap();
        prop_assert_eq!(shortcut.divides_index, full.divides_index);
        prop_assert_eq!(shortcut.witness, full.witness);
    }

    /// Where the shared-root reformulation is defined (p | n always;
    /// p | n-1 or p | n-3 when the reduced constant term is a unit),
    /// it must reproduce the closed-form verdict.
    #[test]
    fn shared_root_reformulation_consistent(
        n in prop::sample::select(&[6u32, 9, 12, 15, 18, 21][..]),
        s in -30i64..=30,
        p in prop::sample::select(&[2u64, 3, 5, 7, 11, 13, 17, 19, 23][..]),
    ) {
        prop_assume!(s != 0);
        let q = member(n, s).unwrap();
        if let Some(v) = common_zero_verdict(&q, p).unwrap() {
            let fast = fastpath(&q, p).unwrap();
            prop_assert_eq!(v, fast.divides_index);
        }
    }

    /// Validation is total: arbitrary coefficient tuples either build
    /// a verified member or fail with a domain error, never a panic
    /// and never an internal-invariant error.
    #[test]
    fn validation_is_total(n in 0u32..=40, a in -2000i64..=2000, b in -2000i64..=2000, c in -2000i64..=2000) {
        match Quadrinomial::new(n, a, b, c) {
            Ok(q) => {
                prop_assert_eq!((q.n(), q.a(), q.b(), q.c()), (n, a, b, c));
                prop_assert_eq!(u64::from(q.k()) * 3, u64::from(n));
            }
            Err(e) => prop_assert!(e.is_domain(), "non-domain error: {}", e),
        }
    }

    /// Scale factors come back out of the enumerator exactly as
    /// member() builds them, zero skipped.
    #[test]
    fn enumeration_matches_member(n in prop::sample::select(&[6u32, 9, 12, 15][..]), lo in -8i64..=0, len in 0i64..=10) {
        let hi = lo + len;
        let listed = enumerate_family(n, lo..=hi).unwrap();
        let mut expected = Vec::new();
        for s in lo..=hi {
            if s != 0 {
                expected.push((s, member(n, s).unwrap()));
            }
        }
        prop_assert_eq!(listed, expected);
    }
}

/// Deterministic spot check outside proptest: the prime sieve is
/// consistent with the Miller-Rabin path and has the right density.
#[test]
fn sieve_agrees_with_primality() {
    let sieve = primes_up_to(10_000);
    assert_eq!(sieve.len(), 1229, "pi(10^4) = 1229");
    assert!(sieve.iter().all(|&p| is_prime(&BigUint::from(p))));
    let in_sieve: std::collections::HashSet<u64> = sieve.iter().copied().collect();
    for n in 2..=10_000u64 {
        assert_eq!(in_sieve.contains(&n), is_prime(&BigUint::from(n)), "mismatch at {n}");
    }
}

/// Monic gcd with a shared factor built in: gcd((x+1)f, (x+1)g) is
/// divisible by x + 1 for any f, g over F_p.
#[test]
fn gcd_finds_planted_common_factor() {
    for p in SMALL_PRIMES {
        let shared = ModPoly::new(p, [1, 1]);
        let f = ModPoly::new(p, [2 % p, 0, 1]).mul(&shared);
        let g = ModPoly::new(p, [1, 1, 1]).mul(&shared);
        let d = fp_gcd(&f, &g).unwrap();
        assert!(d.divisible_by(&shared), "p = {p}: gcd lost the planted factor");
    }
}
