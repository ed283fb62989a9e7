//! Text, LaTeX and JSON renderings of kernel expressions.
//!
//! Text grammar: terms joined by ` + ` / ` - `, each term
//! `coef*u^(e0+e1/k)*lambda^p*(1-lambda)^-d` (unit factors omitted; for
//! univariate sums `coef*X^p*(1-X)^-d`). JSON: `{"k": "n/d", "terms": [{"c":
//! "n/d", "d": int, "e0": "n/d", "e1": "n/d", "p": int}]}` in canonical term
//! order; parsing and re-emitting is byte-identical.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::expr::{KernelExpr, KernelTerm, Prefactor};
use super::uni::UniExpr;
use crate::algebra::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "latex" => Ok(Self::Latex),
            "json" => Ok(Self::Json),
            _ => Err(Error::Parse {
                what: "output format",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Text => "text",
            Self::Latex => "latex",
            Self::Json => "json",
        })
    }
}

/// Deterministic serialization of an expression.
pub trait Emit {
    fn emit(&self, format: Format) -> String;
}

pub fn emit<E: Emit + ?Sized>(expr: &E, format: Format) -> String {
    expr.emit(format)
}

fn plain(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn latex_abs(r: &Rational) -> String {
    let r = r.abs();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

/// Joins signed factor lists: `coef` first, then `*`-separated factors.
fn join_terms(parts: Vec<(bool, String)>, empty: &str) -> String {
    if parts.is_empty() {
        return empty.to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in parts.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn text_term(c: &Rational, factors: Vec<String>) -> (bool, String) {
    let mag = c.abs();
    let mut pieces = Vec::new();
    if !mag.is_one() || factors.is_empty() {
        pieces.push(plain(&mag));
    }
    pieces.extend(factors);
    (c.is_negative(), pieces.join("*"))
}

fn latex_term(c: &Rational, factors: Vec<String>) -> (bool, String) {
    let mag = c.abs();
    let mut pieces = Vec::new();
    if !mag.is_one() || factors.is_empty() {
        pieces.push(latex_abs(&mag));
    }
    pieces.extend(factors);
    (c.is_negative(), pieces.join("\\,"))
}

fn json_term(t: &KernelTerm) -> Value {
    json!({
        "c": format_rational(&t.c),
        "e0": format_rational(&t.e0),
        "e1": format_rational(&t.e1),
        "p": t.p,
        "d": t.d,
    })
}

fn json_doc(k: &Rational, terms: Vec<Value>) -> String {
    serde_json::to_string(&json!({ "k": format_rational(k), "terms": terms }))
        .expect("JSON values always serialize")
}

/// `e0 + e1/k` as text, or `None` for the zero exponent.
fn text_exponent(e0: &Rational, e1: &Rational) -> Option<String> {
    let k_part = |lead: bool| -> String {
        let sign = if e1.is_negative() { "-" } else if lead { "" } else { "+" };
        let mag = e1.abs();
        if mag.denom().is_one() {
            format!("{sign}{}/k", mag.numer())
        } else {
            format!("{sign}({})/k", plain(&mag))
        }
    };
    match (e0.is_zero(), e1.is_zero()) {
        (true, true) => None,
        (false, true) => Some(plain(e0)),
        (true, false) => Some(k_part(true)),
        (false, false) => Some(format!("{}{}", plain(e0), k_part(false))),
    }
}

fn latex_exponent(e0: &Rational, e1: &Rational) -> Option<String> {
    let signed_latex = |r: &Rational| {
        let body = latex_abs(r);
        if r.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    };
    let k_part = |lead: bool| -> String {
        let sign = if e1.is_negative() { "-" } else if lead { "" } else { "+" };
        let mag = e1.abs();
        if mag.is_one() {
            format!("{sign}\\frac{{1}}{{k}}")
        } else {
            format!("{sign}{}\\,\\frac{{1}}{{k}}", latex_abs(&mag))
        }
    };
    match (e0.is_zero(), e1.is_zero()) {
        (true, true) => None,
        (false, true) => Some(signed_latex(e0)),
        (true, false) => Some(k_part(true)),
        (false, false) => Some(format!("{}{}", signed_latex(e0), k_part(false))),
    }
}

fn power(base: &str, p: u32, text: bool) -> Option<String> {
    match p {
        0 => None,
        1 => Some(base.to_string()),
        _ if text => Some(format!("{base}^{p}")),
        _ => Some(format!("{base}^{{{p}}}")),
    }
}

fn pole(base: &str, d: u32, text: bool) -> Option<String> {
    match d {
        0 => None,
        _ if text => Some(format!("{base}^-{d}")),
        _ => Some(format!("{base}^{{-{d}}}")),
    }
}

impl Emit for UniExpr {
    fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => join_terms(
                self.terms()
                    .map(|(c, p, d)| {
                        let f = [power("X", p, true), pole("(1-X)", d, true)];
                        text_term(c, f.into_iter().flatten().collect())
                    })
                    .collect(),
                "0",
            ),
            Format::Latex => join_terms(
                self.terms()
                    .map(|(c, p, d)| {
                        let f = [power("X", p, false), pole("(1-X)", d, false)];
                        latex_term(c, f.into_iter().flatten().collect())
                    })
                    .collect(),
                "0",
            ),
            Format::Json => json_doc(
                self.k(),
                self.terms()
                    .map(|(c, p, d)| {
                        json_term(&KernelTerm {
                            c: c.clone(),
                            e0: Rational::zero(),
                            e1: Rational::zero(),
                            p,
                            d,
                        })
                    })
                    .collect(),
            ),
        }
    }
}

impl Emit for KernelExpr {
    fn emit(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let body = join_terms(
                    self.terms()
                        .map(|t| {
                            let f = [
                                text_exponent(&t.e0, &t.e1).map(|e| format!("u^({e})")),
                                power("lambda", t.p, true),
                                pole("(1-lambda)", t.d, true),
                            ];
                            text_term(&t.c, f.into_iter().flatten().collect())
                        })
                        .collect(),
                    "0",
                );
                match self.prefactor() {
                    Prefactor::One => body,
                    Prefactor::InvChi0Vol => format!("1/(chi(0)*vol)*({body})"),
                }
            }
            Format::Latex => {
                let body = join_terms(
                    self.terms()
                        .map(|t| {
                            let f = [
                                latex_exponent(&t.e0, &t.e1).map(|e| format!("(1-t_1)^{{{e}}}")),
                                power("\\lambda", t.p, false),
                                pole("(1-\\lambda)", t.d, false),
                            ];
                            latex_term(&t.c, f.into_iter().flatten().collect())
                        })
                        .collect(),
                    "0",
                );
                let body = match self.prefactor() {
                    Prefactor::One => body,
                    Prefactor::InvChi0Vol => {
                        format!("\\frac{{1}}{{\\chi(0)\\,\\mathrm{{vol}}(\\Omega)}}\\left[{body}\\right]")
                    }
                };
                format!(
                    "{body},\\quad \\lambda = t_2\\,(1-t_1)^{{-\\frac{{1}}{{k}}}},\\quad k = {}",
                    plain(self.k())
                )
            }
            Format::Json => json_doc(self.k(), self.terms().map(|t| json_term(&t)).collect()),
        }
    }
}

fn parse_err(input: &str) -> Error {
    Error::Parse {
        what: "kernel expression JSON",
        input: input.chars().take(200).collect(),
    }
}

/// Parses the JSON encoding back into a [`KernelExpr`] (prefactor `One`).
pub fn parse_kernel_json(input: &str) -> Result<KernelExpr> {
    let v: Value = serde_json::from_str(input).map_err(|_| parse_err(input))?;
    let rational = |field: &Value| -> Result<Rational> {
        field.as_str().ok_or_else(|| parse_err(input)).and_then(parse_rational)
    };
    let k = rational(&v["k"])?;
    let terms = v["terms"].as_array().ok_or_else(|| parse_err(input))?;
    let mut out = KernelExpr::zero(k)?;
    for t in terms {
        let int = |name: &str| -> Result<u32> {
            t[name]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| parse_err(input))
        };
        out.add_term(KernelTerm {
            c: rational(&t["c"])?,
            e0: rational(&t["e0"])?,
            e1: rational(&t["e1"])?,
            p: int("p")?,
            d: int("d")?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::domain::DomainSpec;
    use crate::kernel::{e_kernel_core, mixed_partial, sum_poly_series, y_kernel_core};

    #[test]
    fn text_examples() {
        let f = y_kernel_core(&DomainSpec::disc(), &rat(1, 1)).unwrap();
        assert_eq!(f.emit(Format::Text), "2*(1-X)^-3");
        let j = sum_poly_series(&crate::algebra::RatPoly::from_i64(&[0, 1]));
        assert_eq!(j.emit(Format::Text), "-(1-X)^-1 + (1-X)^-2");
        assert_eq!(UniExpr::zero(rat(1, 1)).emit(Format::Text), "0");
    }

    #[test]
    fn exponent_rendering() {
        assert_eq!(text_exponent(&rat(-3, 1), &rat(-1, 1)).unwrap(), "-3-1/k");
        assert_eq!(text_exponent(&rat(0, 1), &rat(2, 1)).unwrap(), "2/k");
        assert_eq!(text_exponent(&rat(1, 2), &rat(-3, 2)).unwrap(), "1/2-(3/2)/k");
        assert!(text_exponent(&rat(0, 1), &rat(0, 1)).is_none());
        assert_eq!(latex_exponent(&rat(-2, 1), &rat(-1, 1)).unwrap(), "-2-\\frac{1}{k}");
    }

    #[test]
    fn latex_mentions_variables() {
        let lam = e_kernel_core(&DomainSpec::disc(), &rat(1, 1)).unwrap();
        let s = lam.emit(Format::Latex);
        assert!(s.contains("(1-t_1)") && s.contains("\\lambda"), "{s}");
        assert!(s.contains("\\chi(0)"));
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let lam = e_kernel_core(&"IV:3".parse().unwrap(), &rat(3, 2)).unwrap();
        let d = mixed_partial(&lam, 2, 2).unwrap();
        for e in [lam, d] {
            let s = e.emit(Format::Json);
            let back = parse_kernel_json(&s).unwrap();
            assert_eq!(back.emit(Format::Json), s);
            assert_eq!(back.len(), e.len());
        }
        let f = y_kernel_core(&DomainSpec::disc(), &rat(2, 1)).unwrap();
        let s = f.emit(Format::Json);
        assert_eq!(parse_kernel_json(&s).unwrap().emit(Format::Json), s);
        assert!(s.starts_with("{\"k\":\"2/1\",\"terms\":[{\"c\":"), "{s}");
    }

    #[test]
    fn json_rejects_garbage() {
        for bad in ["", "{}", "{\"k\":\"1/1\"}", "{\"k\":\"0/1\",\"terms\":[]}", "{\"k\":\"1/1\",\"terms\":[{\"c\":\"1\"}]}"] {
            assert!(parse_kernel_json(bad).is_err(), "{bad}");
        }
    }
}
