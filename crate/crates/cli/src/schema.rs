//! JSON output types, versioned by `schema_version`.
//!
//! Two commitments shape everything here.  First, big integers are
//! decimal strings, never JSON numbers: discriminants overflow f64 by
//! hundreds of digits and silent precision loss downstream is worse
//! than making callers parse.  Second, output is byte-deterministic
//! for a given input and budget: field order is struct order, lists
//! are emitted in the library's canonical orders, and nothing
//! serializes wall-clock time or hostnames.  Every type derives
//! `Deserialize` too, so round-tripping is testable.

use monogen_core::{Certificate, FactoredInteger, FamilyReport, IndexVerdict, ModPoly, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub n: u32,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    /// Human-readable rendering, descending powers.
    pub display: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FactorJson {
    /// Decimal string: repeated primes can exceed word size.
    pub p: String,
    pub e: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FactoredJson {
    pub value: String,
    pub sign: i8,
    pub factors: Vec<FactorJson>,
    /// "1" when the factorization is complete.
    pub cofactor: String,
    pub complete: bool,
}

impl FactoredJson {
    pub fn from_core(f: &FactoredInteger) -> Self {
        FactoredJson {
            value: f.value().to_string(),
            sign: f.sign,
            factors: f
                .factors
                .iter()
                .map(|(p, e)| FactorJson {
                    p: p.to_string(),
                    e: *e,
                })
                .collect(),
            cofactor: f.cofactor.to_string(),
            complete: f.is_complete(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    /// The repeated irreducible factor, rendered over F_p.
    pub factor: String,
    /// Its multiplicity in f mod p.
    pub multiplicity: u32,
}

impl WitnessJson {
    fn from_core(w: &(ModPoly, u32)) -> Self {
        WitnessJson {
            factor: w.0.to_string(),
            multiplicity: w.1,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IndexVerdictJson {
    pub divides_index: bool,
    /// How the verdict was reached: "dedekind", "eisenstein", or
    /// "CaseN(subcase)".
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

impl IndexVerdictJson {
    pub fn from_core(v: &IndexVerdict) -> Self {
        IndexVerdictJson {
            divides_index: v.divides_index,
            method: v.method.to_string(),
            witness: v.witness.as_ref().map(WitnessJson::from_core),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PrimeRowJson {
    pub p: u64,
    pub case: String,
    pub fastpath: IndexVerdictJson,
    pub oracle: IndexVerdictJson,
    pub agree: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct IrreducibilityJson {
    /// "irreducible", "reducible", or "unknown".
    pub status: String,
    /// The prime modulo which irreducibility was witnessed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_prime: Option<u64>,
    /// A nontrivial factor, when reducibility was witnessed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl IrreducibilityJson {
    pub fn from_core(c: &Certificate) -> Self {
        match c {
            Certificate::Irreducible { witness } => IrreducibilityJson {
                status: "irreducible".into(),
                witness_prime: Some(*witness),
                factor: None,
                diagnostic: None,
            },
            Certificate::Reducible { factor } => IrreducibilityJson {
                status: "reducible".into(),
                witness_prime: None,
                factor: Some(factor.to_string()),
                diagnostic: None,
            },
            Certificate::Unknown { diagnostic } => IrreducibilityJson {
                status: "unknown".into(),
                witness_prime: None,
                factor: None,
                diagnostic: diagnostic.clone(),
            },
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerdictJson {
    /// "monogenic", "not_monogenic", or "inconclusive".
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index_divisors: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl VerdictJson {
    pub fn from_core(v: &Verdict) -> Self {
        match v {
            Verdict::Monogenic => VerdictJson {
                status: "monogenic".into(),
                index_divisors: None,
                reason: None,
            },
            Verdict::NotMonogenic(ps) => VerdictJson {
                status: "not_monogenic".into(),
                index_divisors: Some(ps.clone()),
                reason: None,
            },
            Verdict::Inconclusive(why) => VerdictJson {
                status: "inconclusive".into(),
                index_divisors: None,
                reason: Some(why.clone()),
            },
        }
    }
}

/// `analyze` output: everything needed to audit the verdict.
#[derive(Debug, Serialize, Deserialize)]
pub struct AnalyzeJson {
    pub schema_version: u32,
    pub polynomial: PolynomialJson,
    pub discriminant: FactoredJson,
    pub irreducibility: IrreducibilityJson,
    pub primes: Vec<PrimeRowJson>,
    pub verdict: VerdictJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ode_template: Option<String>,
}

impl AnalyzeJson {
    pub fn from_report(report: &FamilyReport, ode: Option<String>) -> Self {
        let q = &report.member;
        AnalyzeJson {
            schema_version: SCHEMA_VERSION,
            polynomial: PolynomialJson {
                n: q.n(),
                a: q.a(),
                b: q.b(),
                c: q.c(),
                display: q.to_string(),
            },
            discriminant: FactoredJson::from_core(&report.base.disc_factored),
            irreducibility: IrreducibilityJson::from_core(&report.base.certificate),
            primes: report
                .rows
                .iter()
                .map(|row| PrimeRowJson {
                    p: row.p,
                    case: row.case.to_string(),
                    fastpath: IndexVerdictJson::from_core(&row.fastpath),
                    oracle: IndexVerdictJson::from_core(&row.oracle),
                    agree: row.agree,
                })
                .collect(),
            verdict: VerdictJson::from_core(&report.base.verdict),
            ode_template: ode,
        }
    }
}

/// `enumerate` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct EnumerateJson {
    pub schema_version: u32,
    pub degree: u32,
    pub members: Vec<MemberJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MemberJson {
    pub s: i64,
    pub n: u32,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub display: String,
}

/// `crosscheck` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct CrosscheckJson {
    pub schema_version: u32,
    pub degrees: Vec<u32>,
    pub scale_range: [i64; 2],
    pub cells: u32,
    pub agreements: u32,
    pub disagreements: Vec<DisagreementJson>,
    /// True when every disagreement sits in the one branch the
    /// criterion is known to overrule (Case 3, p^2 | c).
    pub all_disagreements_known_benign: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DisagreementJson {
    pub n: u32,
    pub s: i64,
    pub p: u64,
    pub case: String,
    pub method: String,
    pub fastpath_divides: bool,
    pub oracle_divides: bool,
}

/// `tools dedekind` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct DedekindJson {
    pub schema_version: u32,
    pub polynomial: String,
    pub p: u64,
    #[serde(flatten)]
    pub verdict: IndexVerdictJson,
}

/// `tools disc` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct DiscJson {
    pub schema_version: u32,
    pub polynomial: String,
    pub discriminant: String,
}

/// `tools factor-int` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct FactorIntJson {
    pub schema_version: u32,
    #[serde(flatten)]
    pub factored: FactoredJson,
}

/// `tools factor-fp` output.
#[derive(Debug, Serialize, Deserialize)]
pub struct FactorFpJson {
    pub schema_version: u32,
    pub polynomial: String,
    pub p: u64,
    pub unit: u64,
    pub factors: Vec<FpFactorJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FpFactorJson {
    pub factor: String,
    pub multiplicity: u32,
}

/// Helper for rendering any of the above deterministically.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("schema types serialize infallibly")
}
