//! JSON encodings of results. Big integers are always decimal strings.

use num_bigint::BigInt;
use polyprod::{CdSignCheck, EccCdReport, MultilinearPoly, Rational, UniPoly};
use serde::{Serialize, Serializer};

pub fn big<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Serialize)]
pub struct Term {
    pub vars: Vec<usize>,
    #[serde(serialize_with = "big")]
    pub coef: BigInt,
}

pub fn multilinear(p: &MultilinearPoly) -> Vec<Term> {
    p.terms().map(|(set, c)| Term { vars: set.to_vec(), coef: c.clone() }).collect()
}

#[derive(Serialize)]
pub struct Univariate {
    pub coeffs: Vec<String>,
}

pub fn univariate(p: &UniPoly) -> Univariate {
    Univariate { coeffs: p.coeffs().iter().map(ToString::to_string).collect() }
}

#[derive(Serialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

pub fn fraction(r: &Rational) -> Fraction {
    Fraction { num: r.numer().to_string(), den: r.denom().to_string() }
}

#[derive(Serialize)]
#[serde(untagged)]
pub enum Satisfied {
    Verdict(bool),
    NotApplicable(&'static str),
}

#[derive(Serialize)]
pub struct CdCheck {
    #[serde(serialize_with = "big")]
    pub quantity: BigInt,
    pub c: Option<usize>,
    pub satisfied: Satisfied,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

pub fn cd_check(check: &CdSignCheck, report: Option<&EccCdReport>) -> CdCheck {
    CdCheck {
        quantity: check.quantity.clone(),
        c: check.c,
        satisfied: match check.satisfied {
            Some(v) => Satisfied::Verdict(v),
            None => Satisfied::NotApplicable("not-applicable"),
        },
        report: report.map(Report::from),
    }
}

#[derive(Serialize)]
pub struct Report {
    pub d: usize,
    pub c: usize,
    pub dimension: u64,
    #[serde(serialize_with = "big")]
    pub chi: BigInt,
    #[serde(serialize_with = "big")]
    pub boundary_product: BigInt,
    #[serde(serialize_with = "big")]
    pub h_at_minus_one: BigInt,
    #[serde(serialize_with = "big")]
    pub ecc_quantity: BigInt,
    #[serde(serialize_with = "big")]
    pub cd_quantity: BigInt,
    pub ecc_sign: &'static str,
    pub cd_sign: &'static str,
    pub ecc_holds: bool,
    pub cd_holds: bool,
    pub verdicts_agree: bool,
    pub hypothesis: &'static str,
}

impl From<&EccCdReport> for Report {
    fn from(r: &EccCdReport) -> Self {
        Report {
            d: r.d,
            c: r.c,
            dimension: r.dimension,
            chi: r.chi.clone(),
            boundary_product: r.boundary_product.clone(),
            h_at_minus_one: r.h_at_minus_one.clone(),
            ecc_quantity: r.ecc_quantity.clone(),
            cd_quantity: r.cd_quantity.clone(),
            ecc_sign: r.ecc_sign.as_str(),
            cd_sign: r.cd_sign.as_str(),
            ecc_holds: r.ecc_holds,
            cd_holds: r.cd_holds,
            verdicts_agree: r.verdicts_agree,
            hypothesis: r.hypothesis,
        }
    }
}

#[derive(Serialize)]
pub struct VerifySummary {
    pub instances: u64,
    pub failures: u64,
}
