//! Exact-arithmetic certification of monogenicity for the quadrinomial
//! family x^n + a*x^3 + b*x + c (n = 3k > 4, a/(a - c) = k,
//! 2ab = 3ac - bc), plus the general-purpose kernels it runs on.
//!
//! Two independent routes answer "does p divide the index
//! [O_K : Z[theta]]?" for each candidate prime:
//!
//! * closed-form per-case tests exploiting the family's coefficient
//!   chain (`quadrinomial`), and
//! * the full factor-and-divide criterion over F_p (`dedekind`).
//!
//! Reports run both and surface every disagreement; the criterion is
//! the authority. Everything is exact: arbitrary-precision integers,
//! polynomial arithmetic over Z and F_p, two discriminant engines
//! (subresultant and modular/CRT) that cross-check each other, and
//! deterministic randomized factorization (fixed seeds, canonical
//! factor ordering) so identical inputs always yield identical output.
//!
//! Layer map, bottom up:
//!
//! * `error`: domain errors (caller-fixable) vs invariant violations
//!   (bugs; these must abort analyses, not be absorbed).
//! * `integer`: primality, deterministic factorization with an explicit
//!   budget, valuations, modular exponentiation.
//! * `poly_modp`: dense polynomials over F_p; gcd, squarefree
//!   decomposition, canonical randomized factorization, roots.
//! * `poly_int`: dense polynomials over Z; resultants and discriminants
//!   by subresultant PRS and by CRT, reductions mod p, rational-root
//!   and irreducibility certificates.
//! * `dedekind`: the index criterion at a prime, the Eisenstein-style
//!   shortcut, and whole-field monogenicity reports.
//! * `quadrinomial`: the constrained family; validation, complete
//!   enumeration, the six-case prime classification with its
//!   closed-form index tests, side-by-side reports, and the
//!   exponential solution template for the associated linear ODE.

pub mod dedekind;
mod error;
pub mod integer;
pub mod poly_int;
pub mod poly_modp;
pub mod quadrinomial;

pub use error::{Error, Result};

pub use integer::{
    factor, is_prime, mod_pow, p_adic_valuation, primes_up_to, FactorBudget, FactoredInteger,
    DEFAULT_SEED,
};

pub use poly_modp::{
    canonical_cmp, fp_factor, fp_gcd, fp_pow_mod, fp_roots, squarefree_decomposition,
    verify_irreducible, FpFactorization, ModPoly,
};

pub use poly_int::{
    discriminant, discriminant_crt, irreducibility_certificate, lift_poly, resultant,
    resultant_crt, Certificate, IntPoly, Lift,
};

pub use dedekind::{
    dedekind_test, dedekind_test_with_lift, eisenstein_test, index_divisor_primes,
    monogenicity_oracle, AnalysisBudget, IndexVerdict, Method, MonogenicityReport, Verdict,
};

pub use quadrinomial::{
    classify_prime, common_zero_verdict, enumerate_family, family_report, fastpath,
    fastpath_case1, fastpath_case2, fastpath_case3, fastpath_case4, fastpath_case5,
    fastpath_case6, member, ode_solution_template, CaseQuantities, FamilyPrimeRow, FamilyReport,
    PrimeCase, Quadrinomial,
};
