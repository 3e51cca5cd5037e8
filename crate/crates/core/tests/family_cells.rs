//! Pinned coverage cells for the specialized per-prime conditions.
//!
//! Sweeping the family over degrees 6..=18 and scale factors
//! -20..=20 and recording the first member that exercises each
//! reachable (case, subcase, verdict) combination yields the table
//! below: 26 cells covering every branch the family can reach through
//! its candidate primes.  (Three subcases are provably unreachable
//! for genuine members and are covered by unit tests against
//! synthetically constructed quantities instead: Case 2 subcase ii,
//! Case 3 subcase i, and the Case 5 residue-1 branch.)
//!
//! Each cell asserts the classification, the subcase label, the
//! closed-form verdict, and agreement with the general criterion.
//! Exactly one cell disagrees by design: the Case-3 p^2 | c branch,
//! which answers "divides" on membership evidence the criterion
//! refutes (the repeated factors of f mod 2 are exempt or fail the
//! divisibility).  That cell pins the disagreement itself.

use monogen_core::{
    classify_prime, dedekind_test, discriminant, factor, family_report, fastpath, member,
    AnalysisBudget, CaseQuantities, FactorBudget, Method, ModPoly, Verdict,
};
use num_bigint::BigInt;

struct Cell {
    n: u32,
    s: i64,
    p: u64,
    case: u8,
    subcase: &'static str,
    divides: bool,
    oracle_agrees: bool,
}

const fn cell(
    n: u32,
    s: i64,
    p: u64,
    case: u8,
    subcase: &'static str,
    divides: bool,
    oracle_agrees: bool,
) -> Cell {
    Cell {
        n,
        s,
        p,
        case,
        subcase,
        divides,
        oracle_agrees,
    }
}

/// First-occurrence table from the coverage sweep.  Columns:
/// degree, scale factor, prime, case, subcase, closed-form verdict,
/// agreement with the criterion.
const CELLS: &[Cell] = &[
    cell(6, -20, 2, 1, "", true, true),
    cell(6, -19, 19, 1, "", false, true),
    cell(12, -17, 2, 2, "all", true, true),
    cell(9, -19, 3, 2, "i", false, true),
    cell(9, -20, 3, 2, "iii", false, true),
    cell(9, -16, 3, 2, "iii", true, true),
    cell(6, -17, 2, 2, "iv", true, true),
    cell(15, -19, 5, 2, "iv", false, true),
    cell(6, -19, 2, 2, "v", false, true),
    cell(15, -14, 5, 2, "v", true, true),
    cell(6, -4, 5, 3, "ii", false, true),
    cell(6, -3, 5, 3, "ii", true, true),
    cell(6, -19, 5, 3, "iii", false, true),
    cell(6, -12, 5, 3, "iii", true, true),
    // The one branch that can contradict the criterion.
    cell(9, -19, 2, 3, "p^2|c", true, false),
    cell(12, -19, 3, 4, "i", false, true),
    cell(18, -13, 5, 4, "i", true, true),
    cell(12, -20, 3, 4, "ii", true, true),
    cell(12, -16, 3, 4, "ii", false, true),
    cell(18, -19, 5, 4, "iii", false, true),
    cell(18, -7, 5, 4, "iii", true, true),
    cell(15, -19, 2, 4, "p^2|c", true, true),
    cell(6, -20, 3, 5, "R2", false, true),
    cell(6, -17, 3, 5, "R2", true, true),
    cell(6, -8, 31, 6, "ii", false, true),
    cell(6, -5, 47, 6, "ii", true, true),
];

#[test]
fn every_reachable_branch_has_a_pinned_cell() {
    for c in CELLS {
        let ctx = format!("degree {}, s = {}, p = {}", c.n, c.s, c.p);
        let q = member(c.n, c.s).unwrap();

        let (case, _) = classify_prime(&q, c.p).unwrap();
        assert_eq!(case.number(), c.case, "classification changed at {ctx}");

        let fast = fastpath(&q, c.p).unwrap();
        match &fast.method {
            Method::Fastpath { case, subcase } => {
                assert_eq!(*case, c.case, "case label changed at {ctx}");
                assert_eq!(subcase, c.subcase, "subcase label changed at {ctx}");
            }
            other => panic!("non-closed-form method {other} at {ctx}"),
        }
        assert_eq!(fast.divides_index, c.divides, "verdict flipped at {ctx}");

        let oracle = dedekind_test(&q.polynomial(), c.p).unwrap();
        let oracle_expected = if c.oracle_agrees { c.divides } else { !c.divides };
        assert_eq!(
            oracle.divides_index, oracle_expected,
            "criterion verdict changed at {ctx}"
        );

        // Witness policy: a "divides" answer carries a repeated-factor
        // witness whenever the branch can certify one.  The divergent
        // p^2|c branch is the only one that may answer "divides"
        // without a witness, and when it disagrees with the criterion
        // it MUST not present one.
        if c.divides && c.oracle_agrees {
            assert!(
                fast.witness.is_some(),
                "missing witness for a clean divides verdict at {ctx}"
            );
        }
        if !c.oracle_agrees {
            assert!(
                fast.witness.is_none(),
                "fabricated witness on the divergent branch at {ctx}"
            );
        }
        if !c.divides {
            assert!(fast.witness.is_none(), "witness on a clean verdict at {ctx}");
        }

        // Any witness presented must be honest: (g, e) with g^e a
        // repeated divisor of f mod p and g dividing the criterion
        // polynomial is exactly what the criterion reports, so it must
        // also answer "divides".
        if let Some((g, e)) = &fast.witness {
            assert!(*e >= 2, "witness multiplicity below 2 at {ctx}");
            let fbar = q.polynomial().reduce_mod_p(c.p);
            let mut power = g.clone();
            for _ in 1..*e {
                power = power.mul(g);
            }
            assert!(
                fbar.divisible_by(&power),
                "witness power does not divide f mod p at {ctx}"
            );
        }
    }
}

/// The quantities feeding each case's closed forms, re-derived for the
/// degree-12 showcase member through the public API.
#[test]
fn showcase_case_quantities() {
    let q = member(12, 1).unwrap();

    // p = 2 divides a = 44, b = 36 and the degree; r = v_2(12) = 2,
    // m = 12 / 4 = 3, u0 = (c + c^4) / 2 = (33 + 33^4) / 2 = 592977,
    // u1 = b / 2, u2 = a / 2.
    match classify_prime(&q, 2).unwrap().1 {
        CaseQuantities::Case2 { r, m, u0, u1, u2 } => {
            assert_eq!((r, m), (2, 3));
            assert_eq!(u0, BigInt::from(592_977));
            assert_eq!(u1, BigInt::from(18));
            assert_eq!(u2, BigInt::from(22));
        }
        other => panic!("p = 2 classified as {other:?}"),
    }

    // p = 3 divides b and c but not a, and n - 3 = 9 = 3^2;
    // t = 2, m2 = 1, w0 = c / 3 = 11, w1 = b / 3 = 12.
    match classify_prime(&q, 3).unwrap().1 {
        CaseQuantities::Case4 { t, m2, w0, w1, .. } => {
            assert_eq!((t, m2), (2, 1));
            assert_eq!(w0, BigInt::from(11));
            assert_eq!(w1, BigInt::from(12));
        }
        other => panic!("p = 3 classified as {other:?}"),
    }

    // p = 11 divides a and c but not b, and n - 1 = 11;
    // s = 1, m1 = 1, v0 = c / 11 = 3, v2 = a / 11 = 4.
    match classify_prime(&q, 11).unwrap().1 {
        CaseQuantities::Case3 { s, m1, v0, v2, .. } => {
            assert_eq!((s, m1), (1, 1));
            assert_eq!(v0, BigInt::from(3));
            assert_eq!(v2, BigInt::from(4));
        }
        other => panic!("p = 11 classified as {other:?}"),
    }
}

/// A full report for the first non-monogenic member of the degree-9
/// line: x^9 + 36x^3 + 27x + 24 (scale factor 3).  Its discriminant is
/// 2^24 * 3^26 * 47^2, all three repeated primes are candidates, and
/// only p = 2 divides the index, with the genuine repeated-factor
/// witness (x + 1)^8.  Here the p^2|c branch and the criterion agree,
/// in contrast to the scale-factor-1 member.
#[test]
fn first_nonmonogenic_degree9_member_report() {
    let q = member(9, 3).unwrap();
    assert_eq!((q.a(), q.b(), q.c()), (36, 27, 24));

    let d = discriminant(&q.polynomial()).unwrap();
    let expected =
        BigInt::from(2).pow(24) * BigInt::from(3).pow(26) * BigInt::from(47) * BigInt::from(47);
    assert_eq!(d, expected);
    let factored = factor(&d, &FactorBudget::default()).unwrap();
    assert!(factored.is_complete());

    let report = family_report(&q, &AnalysisBudget::default()).unwrap();
    assert_eq!(report.base.verdict, Verdict::NotMonogenic(vec![2]));
    assert!(report.disagreements().is_empty(), "all rows must agree here");

    let ps: Vec<u64> = report.rows.iter().map(|r| r.p).collect();
    assert_eq!(ps, vec![2, 3, 47]);

    let p2 = &report.rows[0];
    assert!(p2.fastpath.divides_index);
    assert_eq!(p2.case.number(), 3);
    assert_eq!(
        p2.fastpath.witness,
        Some((ModPoly::new(2, [1, 1]), 8)),
        "p = 2 witness must be the repeated factor (x+1)^8"
    );
    assert_eq!(p2.fastpath.witness, p2.oracle.witness);

    // p = 3 divides all three coefficients (Case 1); the index test
    // there is 9 | c, and 9 does not divide 24.
    let p3 = &report.rows[1];
    assert_eq!(p3.case.number(), 1);
    assert!(!p3.fastpath.divides_index);

    let p47 = &report.rows[2];
    assert_eq!(p47.case.number(), 6);
    assert!(!p47.fastpath.divides_index);
}
