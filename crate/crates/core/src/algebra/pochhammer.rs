use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::poly::RatPoly;
use super::rational::{format_rational, parse_rational, rat, rat_to_f64, Rational};
use crate::domain::{DomainKind, DomainSpec, JordanInvariants};
use crate::error::{Error, Result};

/// `(s + shift)_k = (s+shift)(s+shift+1)⋯(s+shift+k-1)` as a polynomial in `s`.
pub fn pochhammer(shift: &Rational, k: u32) -> RatPoly {
    (0..k).fold(RatPoly::one(), |acc, i| {
        &acc * &RatPoly::linear(shift + Rational::from_integer(i.into()))
    })
}

/// Exact rising factorial `(x)_k`.
pub fn pochhammer_value(x: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (x + Rational::from_integer(i.into())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochFactor {
    pub shift: Rational,
    pub length: u32,
}

/// A constant times a product of Pochhammer factors `(s + shift)_length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerForm {
    pub constant: Rational,
    pub factors: Vec<PochFactor>,
}

impl PochhammerForm {
    /// Builds a monic form; zero-length factors are dropped.
    pub fn new(factors: impl IntoIterator<Item = (Rational, u32)>) -> Self {
        Self {
            constant: Rational::one(),
            factors: factors
                .into_iter()
                .filter(|(_, len)| *len > 0)
                .map(|(shift, length)| PochFactor { shift, length })
                .collect(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.length).sum()
    }

    pub fn expand(&self) -> RatPoly {
        self.factors
            .iter()
            .fold(RatPoly::constant(self.constant.clone()), |acc, f| {
                &acc * &pochhammer(&f.shift, f.length)
            })
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.factors.iter().fold(self.constant.clone(), |acc, f| {
            acc * pochhammer_value(&(s + &f.shift), f.length)
        })
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        let mut acc = rat_to_f64(&self.constant);
        for f in &self.factors {
            let base = s + rat_to_f64(&f.shift);
            for i in 0..f.length {
                acc *= base + f64::from(i);
            }
        }
        acc
    }

    /// `ln |value|`, usable where the product itself would overflow.
    pub fn ln_abs_f64(&self, s: f64) -> f64 {
        let mut acc = rat_to_f64(&self.constant).abs().ln();
        for f in &self.factors {
            let base = s + rat_to_f64(&f.shift);
            for i in 0..f.length {
                acc += (base + f64::from(i)).abs().ln();
            }
        }
        acc
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            parts.push(self.constant.to_string());
        }
        for f in &self.factors {
            let inner = if f.shift.is_zero() {
                "s".to_string()
            } else if f.shift.is_negative() {
                format!("s-{}", -&f.shift)
            } else {
                format!("s+{}", f.shift)
            };
            parts.push(if f.length == 1 {
                format!("({inner})")
            } else {
                format!("({inner})_{}", f.length)
            });
        }
        parts.join(" * ")
    }

    /// JSON list of `{shift, length}`; a non-unit constant is carried as a
    /// leading `{constant}` entry.
    pub fn to_json(&self) -> Value {
        let mut items = Vec::new();
        if !self.constant.is_one() {
            items.push(json!({ "constant": format_rational(&self.constant) }));
        }
        items.extend(self.factors.iter().map(|f| {
            json!({ "shift": format_rational(&f.shift), "length": f.length })
        }));
        Value::Array(items)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "Pochhammer form",
            input: value.to_string(),
        };
        let items = value.as_array().ok_or_else(bad)?;
        let mut form = PochhammerForm::new([]);
        for item in items {
            if let Some(c) = item.get("constant") {
                form.constant = parse_rational(c.as_str().ok_or_else(bad)?)?;
                continue;
            }
            let shift = parse_rational(item.get("shift").and_then(Value::as_str).ok_or_else(bad)?)?;
            let length = item.get("length").and_then(Value::as_u64).ok_or_else(bad)?;
            form.factors.push(PochFactor {
                shift,
                length: u32::try_from(length).map_err(|_| bad())?,
            });
        }
        Ok(form)
    }
}

impl fmt::Display for PochhammerForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `χ(s) = ∏_{j=1}^r (s + 1 + (j-1)a/2)_{1 + b + (r-j)a}`.
pub fn chi_poly(inv: &JordanInvariants) -> PochhammerForm {
    PochhammerForm::new((1..=inv.r).map(|j| {
        let shift = Rational::one() + rat(i64::from((j - 1) * inv.a), 2);
        (shift, 1 + inv.b + (inv.r - j) * inv.a)
    }))
}

/// The alternative factorization printed in the per-type tables, where one
/// exists that differs from [`chi_poly`].
pub fn table_chi_form(spec: &DomainSpec) -> Option<PochhammerForm> {
    let int = |v: u32| Rational::from_integer(v.into());
    match *spec.kind() {
        DomainKind::I { m, n } => Some(PochhammerForm::new((1..=m).map(|j| (int(j), n)))),
        DomainKind::II { n } => {
            let p = n / 2;
            let len = if n % 2 == 0 { 2 * p - 1 } else { 2 * p + 1 };
            Some(PochhammerForm::new((1..=p).map(|j| (int(2 * j - 1), len))))
        }
        DomainKind::III { .. } | DomainKind::IV { .. } => None,
        DomainKind::V => Some(PochhammerForm::new([(int(1), 8), (int(4), 8)])),
        DomainKind::VI => Some(PochhammerForm::new([(int(1), 9), (int(5), 9), (int(9), 9)])),
    }
}
