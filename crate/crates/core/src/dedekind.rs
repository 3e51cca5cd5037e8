//! The index-divisor test: does a prime p divide the index
//! [O_K : Z[theta]] of the order generated by a root theta of a monic
//! irreducible f? The criterion factors f mod p, lifts the factorization
//! back to Z, forms the exact quotient M = (f - product of lifts)/p, and
//! asks whether any repeated irreducible factor of f mod p divides M mod
//! p. Factors of multiplicity 1 are exempt: their divisibility of M
//! depends on the choice of lifts, while for multiplicity >= 2 it does
//! not (so the verdict is well defined).
//!
//! On top of the per-prime test sits a field-level verdict: theta
//! generates a power integral basis iff no prime divides the index, and
//! only primes whose square divides the polynomial discriminant can.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{domain, invariant, Result};
use crate::integer::{factor, is_prime_u64, FactorBudget, FactoredInteger, DEFAULT_SEED};
use crate::poly_int::{
    discriminant, irreducibility_certificate, lift_poly, Certificate, IntPoly, Lift,
};
use crate::poly_modp::{fp_factor, FpFactorization, ModPoly};

/// How an [`IndexVerdict`] was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    /// The full criterion: factor f mod p and test M-divisibility.
    Oracle,
    /// Shortcut for f congruent to x^n mod p: p divides the index iff
    /// p^2 divides the constant term (iff f is not Eisenstein at p).
    Eisenstein,
    /// A closed-form shortcut for the quadrinomial family, identified by
    /// its case number and subcase label.
    Fastpath { case: u8, subcase: String },
}

impl std::fmt::Display for Method {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Oracle => write!(out, "dedekind"),
            Method::Eisenstein => write!(out, "eisenstein"),
            Method::Fastpath { case, subcase } => {
                if subcase.is_empty() {
                    write!(out, "Case{case}")
                } else {
                    write!(out, "Case{case}({subcase})")
                }
            }
        }
    }
}

/// The answer to "does p divide the index?", with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVerdict {
    pub p: u64,
    pub divides_index: bool,
    /// For a positive verdict, when one is exhibited: a repeated
    /// irreducible factor of f mod p (with its multiplicity, always
    /// >= 2) that divides M mod p.
    pub witness: Option<(ModPoly, u32)>,
    pub method: Method,
}

/// Field-level conclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The index is 1: theta gives a power integral basis.
    Monogenic,
    /// These primes divide the index.
    NotMonogenic(Vec<u64>),
    /// The evidence ran out before a definite answer; the string says why
    /// (unfactored discriminant cofactor, or irreducibility undecided).
    Inconclusive(String),
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Monogenic => write!(out, "Monogenic"),
            Verdict::NotMonogenic(ps) => {
                let list: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
                write!(out, "NotMonogenic (index divisible by {})", list.join(", "))
            }
            Verdict::Inconclusive(reason) => write!(out, "Inconclusive: {reason}"),
        }
    }
}

/// Everything the field-level analysis established about one polynomial.
#[derive(Debug, Clone)]
pub struct MonogenicityReport {
    pub polynomial: IntPoly,
    /// Exact polynomial discriminant.
    pub discriminant: BigInt,
    /// Its (possibly partial) factorization under the given budget.
    pub disc_factored: FactoredInteger,
    /// One row per prime whose square divides the known part of the
    /// discriminant, in ascending order.
    pub per_prime: Vec<IndexVerdict>,
    /// Rational irreducibility evidence for the defining polynomial.
    pub certificate: Certificate,
    pub verdict: Verdict,
}

/// Effort knobs for the field-level analysis.
#[derive(Debug, Clone)]
pub struct AnalysisBudget {
    pub factor: FactorBudget,
    /// Primes tried, in order, as irreducibility witnesses.
    pub irr_primes: Vec<u64>,
}

impl Default for AnalysisBudget {
    fn default() -> Self {
        AnalysisBudget {
            factor: FactorBudget::default(),
            irr_primes: crate::integer::primes_up_to(200),
        }
    }
}

fn check_dedekind_inputs(f: &IntPoly, p: u64) -> Result<()> {
    if !is_prime_u64(p) {
        domain!("index test modulus {p} is not prime");
    }
    match f.degree() {
        Some(d) if d >= 1 => {}
        _ => domain!("index test needs a nonconstant polynomial, got {f}"),
    }
    if !f.is_monic() {
        domain!(
            "index test needs a monic polynomial, got leading coefficient {}",
            f.lc()
        );
    }
    Ok(())
}

/// Does p divide [O_K : Z[theta]]? Full criterion, canonical lifts.
pub fn dedekind_test(f: &IntPoly, p: u64) -> Result<IndexVerdict> {
    dedekind_test_with_lift(f, p, Lift::Canonical)
}

/// Same test with an explicit lift choice. The verdict is independent of
/// the choice (that independence is property-tested); the knob exists
/// exactly so the independence can be exercised.
pub fn dedekind_test_with_lift(f: &IntPoly, p: u64, lift: Lift) -> Result<IndexVerdict> {
    let (factorization, mbar) = criterion_parts_with_lift(f, p, lift)?;

    // p divides the index iff some repeated factor divides M mod p;
    // multiplicity-1 factors are exempt. The witness is the first
    // offender in canonical factor order.
    let mut witness = None;
    for (g, e) in &factorization.factors {
        if *e >= 2 && mbar.rem(g).is_zero() {
            witness = Some((g.clone(), *e));
            break;
        }
    }
    Ok(IndexVerdict {
        p,
        divides_index: witness.is_some(),
        witness,
        method: Method::Oracle,
    })
}

/// The criterion's raw ingredients for (f, p): the factorization of
/// f mod p and the reduction mod p of M = (f - product of lifted
/// factors)/p. Shared by the full test and by closed-form paths that
/// need M mod p for witness extraction.
pub(crate) fn criterion_parts(f: &IntPoly, p: u64) -> Result<(FpFactorization, ModPoly)> {
    criterion_parts_with_lift(f, p, Lift::Canonical)
}

pub(crate) fn criterion_parts_with_lift(
    f: &IntPoly,
    p: u64,
    lift: Lift,
) -> Result<(FpFactorization, ModPoly)> {
    check_dedekind_inputs(f, p)?;
    let fbar = f.reduce_mod_p(p);
    // Monic f keeps its degree mod p.
    invariant!(
        fbar.degree() == f.degree(),
        "degree dropped reducing a monic polynomial mod {p}"
    );
    let factorization = fp_factor(&fbar, DEFAULT_SEED)?;
    invariant!(factorization.unit == 1, "monic polynomial with unit != 1");

    let mut lifted_product = IntPoly::one();
    for (g, e) in &factorization.factors {
        let gl = lift_poly(g, lift);
        for _ in 0..*e {
            lifted_product = lifted_product.mul(&gl);
        }
    }
    // The lifted product reduces to f mod p, so the difference is exactly
    // divisible; div_scalar_exact fails as an invariant otherwise.
    let m = f.sub(&lifted_product).div_scalar_exact(&BigInt::from(p))?;
    Ok((factorization, m.reduce_mod_p(p)))
}

/// Shortcut for polynomials congruent to x^n mod p (every coefficient
/// below the leading one divisible by p): p divides the index iff p^2
/// divides the constant term. Equivalently, an Eisenstein polynomial at
/// p never has p as an index divisor, and in this congruence class the
/// converse holds too.
///
/// Why: f mod p = x^n, so the criterion's M mod p is the reduction of
/// (f - x^n)/p, whose constant term is c/p; the only irreducible factor
/// is x (multiplicity n), and x divides M mod p iff p divides c/p.
/// For n = 1 the factor x has multiplicity 1 and is exempt, so the
/// answer is "no" regardless of c.
pub fn eisenstein_test(f: &IntPoly, p: u64) -> Result<IndexVerdict> {
    check_dedekind_inputs(f, p)?;
    let n = f.degree().expect("checked nonconstant");
    let pb = BigInt::from(p);
    for i in 0..n {
        if !f.coeff(i).mod_floor(&pb).is_zero() {
            domain!(
                "coefficient of x^{i} is not divisible by {p}; the shortcut only applies to f congruent to x^n"
            );
        }
    }
    let p2 = &pb * &pb;
    let divides = n >= 2 && f.coeff(0).mod_floor(&p2).is_zero();
    let witness = divides.then(|| (ModPoly::x(p), n as u32));
    Ok(IndexVerdict {
        p,
        divides_index: divides,
        witness,
        method: Method::Eisenstein,
    })
}

/// The primes that could divide the index: those whose square divides
/// the known part of the discriminant's factorization. Primes hiding in
/// an unfactored cofactor are the caller's problem (they make the
/// field-level verdict inconclusive, handled in
/// [`monogenicity_oracle`]).
pub fn index_divisor_primes(disc: &FactoredInteger) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (p, e) in &disc.factors {
        if *e >= 2 {
            let digits = p.to_u64_digits();
            if digits.len() > 1 {
                domain!("repeated prime factor {p} exceeds the word-sized residue arithmetic");
            }
            out.push(digits[0]);
        }
    }
    Ok(out)
}

/// Field-level analysis of a monic polynomial: discriminant, candidate
/// primes, per-prime criterion runs, irreducibility certificate, and the
/// combined verdict.
///
/// Verdict policy, in order:
/// - zero discriminant: inconclusive (repeated roots, no field);
/// - a rational factor was exhibited: inconclusive (no single field);
/// - some tested prime divides the index and irreducibility is
///   certified: not monogenic (a partial discriminant factorization can
///   still prove this direction);
/// - irreducibility undecided: inconclusive;
/// - discriminant cofactor unfactored: inconclusive (an unseen repeated
///   prime could still divide the index);
/// - otherwise: monogenic.
pub fn monogenicity_oracle(f: &IntPoly, budget: &AnalysisBudget) -> Result<MonogenicityReport> {
    let disc = discriminant(f)?;
    if disc.is_zero() {
        let disc_factored = FactoredInteger {
            sign: 0,
            factors: Vec::new(),
            cofactor: num_bigint::BigUint::one(),
        };
        return Ok(MonogenicityReport {
            polynomial: f.clone(),
            discriminant: disc,
            disc_factored,
            per_prime: Vec::new(),
            certificate: Certificate::Unknown { diagnostic: None },
            verdict: Verdict::Inconclusive(
                "zero discriminant: the polynomial has repeated roots".into(),
            ),
        });
    }
    let disc_factored = factor(&disc, &budget.factor)?;
    let certificate = irreducibility_certificate(f, &budget.irr_primes)?;

    let mut per_prime = Vec::new();
    for p in index_divisor_primes(&disc_factored)? {
        per_prime.push(dedekind_test(f, p)?);
    }
    let dividers: Vec<u64> = per_prime
        .iter()
        .filter(|v| v.divides_index)
        .map(|v| v.p)
        .collect();

    let verdict = match &certificate {
        Certificate::Reducible { factor } => Verdict::Inconclusive(format!(
            "not irreducible: divisible by {factor}"
        )),
        Certificate::Unknown { .. } => Verdict::Inconclusive(
            "irreducibility not established with the supplied witness primes".into(),
        ),
        Certificate::Irreducible { .. } => {
            if !dividers.is_empty() {
                Verdict::NotMonogenic(dividers)
            } else if !disc_factored.is_complete() {
                Verdict::Inconclusive(format!(
                    "discriminant cofactor {} not factored within budget",
                    disc_factored.cofactor
                ))
            } else {
                Verdict::Monogenic
            }
        }
    };
    Ok(MonogenicityReport {
        polynomial: f.clone(),
        discriminant: disc,
        disc_factored,
        per_prime,
        certificate,
        verdict,
    })
}
