//! Text, LaTeX and JSON renderings of command results.
//!
//! JSON objects are built from structs so key order follows field order.

use std::fmt::Write;

use radix_core::arith::Rational;
use radix_core::galois::SolvabilityVerdict;
use radix_core::numeric::BigFloat;
use radix_core::oracle::{RootPairing, VerificationReport};
use radix_core::parse::ParsedInput;
use radix_core::radical::{render, ComplexApprox, Format};
use radix_core::solve::{Method, SolutionSet};
use serde::Serialize;

pub struct SolveReport<'a> {
    pub input: &'a ParsedInput,
    pub degree: usize,
    pub set: &'a SolutionSet,
    pub values: &'a [ComplexApprox],
    pub verification: &'a VerificationReport,
    pub notes: Vec<String>,
}

pub struct GaloisReport<'a> {
    pub input: &'a ParsedInput,
    pub verdict: &'a SolvabilityVerdict,
}

pub struct MethodCheck {
    pub set: SolutionSet,
    pub values: Vec<ComplexApprox>,
    pub verification: VerificationReport,
}

pub struct VerifyReport<'a> {
    pub input: &'a ParsedInput,
    pub degree: usize,
    pub precision: u32,
    pub checks: &'a [MethodCheck],
    pub cross: Option<&'a (Vec<RootPairing>, bool)>,
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct Document<'a> {
    input: &'a str,
    degree: usize,
    method: &'a str,
    roots: Vec<RootJson>,
    casus_irreducibilis: Option<bool>,
    classification: Option<&'a str>,
    verification: Option<VerificationJson>,
    verdict: Option<VerdictJson>,
    coefficients: Vec<RationalJson>,
}

#[derive(Serialize)]
struct RootJson {
    radical: String,
    latex: String,
    approx: ApproxJson,
}

#[derive(Serialize)]
struct ApproxJson {
    re: String,
    im: String,
    err: String,
}

#[derive(Serialize)]
struct VerificationJson {
    all_matched: bool,
    max_residual: String,
}

#[derive(Serialize)]
struct VerdictJson {
    status: &'static str,
    reason: Option<String>,
    prime: Option<u64>,
    cycle_type: Option<Vec<usize>>,
    primes_tested: Option<usize>,
}

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    input: &'a str,
    degree: usize,
    precision_bits: u32,
    methods: Vec<MethodJson<'a>>,
    cross_method: Option<CrossJson>,
}

#[derive(Serialize)]
struct MethodJson<'a> {
    method: &'a str,
    roots: Vec<RootJson>,
    verification: VerificationJson,
}

#[derive(Serialize)]
struct CrossJson {
    all_matched: bool,
    max_distance: String,
}

fn roots_json(set: &SolutionSet, values: &[ComplexApprox], precision: u32) -> Vec<RootJson> {
    set.roots
        .iter()
        .zip(values)
        .map(|(r, v)| RootJson {
            radical: render(r, Format::Text),
            latex: render(r, Format::Latex),
            approx: approx_json(v, precision),
        })
        .collect()
}

/// Digits shown for a value: what its error radius supports, capped by the
/// requested precision.
fn digits(v: &ComplexApprox, precision: u32) -> u32 {
    let requested = (f64::from(precision) * std::f64::consts::LOG10_2).floor() as u32;
    v.significant_digits().min(requested.max(1))
}

fn decimal(x: &BigFloat, digits: u32, radius: &BigFloat) -> String {
    if x.abs() <= *radius {
        "0".to_string()
    } else {
        x.to_decimal(digits)
    }
}

fn approx_text(v: &ComplexApprox, precision: u32) -> String {
    let d = digits(v, precision);
    let re = decimal(&v.re, d, &v.error_radius);
    if v.is_real() {
        return re;
    }
    let im = v.im.abs().to_decimal(d);
    let sign = if v.im.is_negative() { "-" } else { "+" };
    if re == "0" {
        let sign = if sign == "-" { "-" } else { "" };
        return format!("{sign}{im}i");
    }
    format!("{re} {sign} {im}i")
}

fn approx_json(v: &ComplexApprox, precision: u32) -> ApproxJson {
    let d = digits(v, precision);
    ApproxJson {
        re: decimal(&v.re, d, &v.error_radius),
        im: decimal(&v.im, d, &v.error_radius),
        err: short(&v.error_radius),
    }
}

fn short(x: &BigFloat) -> String {
    x.to_decimal(3)
}

fn verification_json(v: &VerificationReport) -> VerificationJson {
    VerificationJson {
        all_matched: v.all_matched,
        max_residual: short(&v.max_residual),
    }
}

fn rational_json(r: &Rational) -> RationalJson {
    RationalJson {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

fn coefficients_json(input: &ParsedInput) -> Vec<RationalJson> {
    input
        .polynomial
        .coeffs()
        .iter()
        .map(rational_json)
        .collect()
}

fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report structs serialize")
}

fn equation(input: &ParsedInput) -> String {
    format!(
        "{} = 0",
        input.polynomial.display_with(&input.variable_name)
    )
}

fn verification_line(v: &VerificationReport) -> String {
    let status = if v.all_matched {
        "all roots matched the numeric oracle"
    } else {
        "FAILED, roots do not match the numeric oracle"
    };
    format!(
        "{status} (max residual {}, {} bits)",
        short(&v.max_residual),
        v.precision_bits
    )
}

fn max_distance(pairs: &[RootPairing]) -> BigFloat {
    pairs
        .iter()
        .map(|p| p.distance.clone())
        .fold(BigFloat::zero(64), |m, d| if d > m { d } else { m })
}

impl SolveReport<'_> {
    fn casus(&self) -> Option<bool> {
        (self.set.method == Method::Cardano).then_some(self.set.casus_irreducibilis)
    }

    pub fn text(&self) -> String {
        let var = &self.input.variable_name;
        let mut out = String::new();
        writeln!(out, "equation: {}", equation(self.input)).unwrap();
        writeln!(out, "method: {}", self.set.method).unwrap();
        if let Some(casus) = self.casus() {
            writeln!(
                out,
                "casus irreducibilis: {}",
                if casus { "yes" } else { "no" }
            )
            .unwrap();
        }
        if let Some(class) = self.set.classification {
            writeln!(out, "classification: {class}").unwrap();
        }
        for note in &self.notes {
            writeln!(out, "{note}").unwrap();
        }
        for (i, (root, value)) in self.set.roots.iter().zip(self.values).enumerate() {
            let label = format!("{var}{}", i + 1);
            writeln!(out, "{label} = {}", render(root, Format::Text)).unwrap();
            let value = approx_text(value, self.verification.precision_bits);
            writeln!(out, "{} ~ {value}", " ".repeat(label.len())).unwrap();
        }
        writeln!(
            out,
            "verification: {}",
            verification_line(self.verification)
        )
        .unwrap();
        out
    }

    pub fn latex(&self) -> String {
        let var = &self.input.variable_name;
        let lines: Vec<String> = self
            .set
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| format!("  {var}_{{{}}} &= {}", i + 1, render(r, Format::Latex)))
            .collect();
        format!(
            "\\begin{{aligned}}\n{}\n\\end{{aligned}}\n",
            lines.join(" \\\\\n")
        )
    }

    pub fn json(&self) -> String {
        to_json(&Document {
            input: &self.input.source_text,
            degree: self.degree,
            method: self.set.method.as_str(),
            roots: roots_json(self.set, self.values, self.verification.precision_bits),
            casus_irreducibilis: self.casus(),
            classification: self.set.classification.map(|c| c.as_str()),
            verification: Some(verification_json(self.verification)),
            verdict: None,
            coefficients: coefficients_json(self.input),
        })
    }
}

impl GaloisReport<'_> {
    pub fn text(&self) -> String {
        format!("equation: {}\n{}\n", equation(self.input), self.verdict)
    }

    pub fn json(&self) -> String {
        let verdict = match self.verdict {
            SolvabilityVerdict::SolvableByRadicals { reason } => VerdictJson {
                status: "solvable",
                reason: Some(reason.clone()),
                prime: None,
                cycle_type: None,
                primes_tested: None,
            },
            SolvabilityVerdict::NotSolvableByRadicals { prime, cycle_type } => VerdictJson {
                status: "not_solvable",
                reason: None,
                prime: Some(*prime),
                cycle_type: Some(cycle_type.parts().to_vec()),
                primes_tested: None,
            },
            SolvabilityVerdict::Undetermined { primes_tested } => VerdictJson {
                status: "undetermined",
                reason: None,
                prime: None,
                cycle_type: None,
                primes_tested: Some(*primes_tested),
            },
        };
        to_json(&Document {
            input: &self.input.source_text,
            degree: 5,
            method: "frobenius",
            roots: Vec::new(),
            casus_irreducibilis: None,
            classification: None,
            verification: None,
            verdict: Some(verdict),
            coefficients: coefficients_json(self.input),
        })
    }
}

impl VerifyReport<'_> {
    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "equation: {}", equation(self.input)).unwrap();
        for note in &self.notes {
            writeln!(out, "{note}").unwrap();
        }
        for check in self.checks {
            writeln!(
                out,
                "{}: {}",
                check.set.method,
                verification_line(&check.verification)
            )
            .unwrap();
        }
        match self.cross {
            Some((pairs, ok)) => {
                let names: Vec<&str> = self.checks.iter().map(|c| c.set.method.as_str()).collect();
                let verdict = if *ok { "agree" } else { "DISAGREE" };
                writeln!(
                    out,
                    "cross-method: {} and {} roots {verdict} (max distance {})",
                    names[0],
                    names[1],
                    short(&max_distance(pairs))
                )
                .unwrap();
            }
            None => writeln!(
                out,
                "cross-method: single method for degree {}",
                self.degree
            )
            .unwrap(),
        }
        out
    }

    pub fn json(&self) -> String {
        to_json(&VerifyDocument {
            input: &self.input.source_text,
            degree: self.degree,
            precision_bits: self.precision,
            methods: self
                .checks
                .iter()
                .map(|c| MethodJson {
                    method: c.set.method.as_str(),
                    roots: roots_json(&c.set, &c.values, self.precision),
                    verification: verification_json(&c.verification),
                })
                .collect(),
            cross_method: self.cross.map(|(pairs, ok)| CrossJson {
                all_matched: *ok,
                max_distance: short(&max_distance(pairs)),
            }),
        })
    }
}
