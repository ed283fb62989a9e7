//! Command implementations. Each returns whether the command succeeded; errors
//! are mapped to exit codes by the caller.

use std::io::Read;

use bergman_eggs::algebra::{chi_poly, format_rational, table_chi_form, PochhammerForm, RatPoly, Rational};
use bergman_eggs::kernel::{emit as render, parse_kernel_json, EKernel, Format, YKernel};
use bergman_eggs::verify::{
    coeff_mc, mc_norm_moment, mc_volume, reproducing_check, series_kernel_e, series_kernel_y,
    CoeffIndex, Family, VerifyReport,
};
use bergman_eggs::{DomainKind, DomainSpec, Element, Error, Result};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::{cache, ChiArgs, DescribeArgs, EmitArgs, EvalArgs, FamilyArg, KernelArgs, Status, Suite, VerifyArgs};

fn type_name(spec: &DomainSpec) -> &'static str {
    match spec.kind() {
        DomainKind::I { .. } => "I",
        DomainKind::II { .. } => "II",
        DomainKind::III { .. } => "III",
        DomainKind::IV { .. } => "IV",
        DomainKind::V => "V",
        DomainKind::VI => "VI",
    }
}

pub fn describe(args: &DescribeArgs) -> Result<Status> {
    let spec = &args.domain;
    let inv = spec.invariants();
    let tube = if inv.is_tube_type() { "tube type" } else { "not of tube type" };
    match args.format {
        Format::Json => println!(
            "{}",
            json!({
                "domain": spec.to_string(),
                "type": type_name(spec),
                "invariants": inv,
                "dim": spec.dim(),
                "exceptional": spec.is_exceptional(),
                "tube_type": inv.is_tube_type(),
                "norm_formula": spec.norm_formula(),
                "membership_rule": spec.membership_rule(),
            })
        ),
        Format::Text | Format::Latex => {
            println!("domain: {spec} (type {})", type_name(spec));
            println!("invariants: r={}, a={}, b={}, g={}, n={}", inv.r, inv.a, inv.b, inv.g, inv.n);
            println!("generic norm: N(x,y) = m(1,x,y), {}", spec.norm_formula());
            println!("membership: {}", spec.membership_rule());
            println!("{tube}");
        }
    }
    Ok(Status::Ok)
}

fn coeff_json(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\"{}\"", format_rational(c))
    }
}

fn latex_form(form: &PochhammerForm) -> String {
    form.factors
        .iter()
        .map(|f| {
            let shift = if *f.shift.numer() == 0.into() {
                "s".to_string()
            } else if f.shift.is_integer() {
                format!("s+{}", f.shift)
            } else {
                format!("s+\\frac{{{}}}{{{}}}", f.shift.numer(), f.shift.denom())
            };
            if f.length == 1 {
                format!("({shift})")
            } else {
                format!("({shift})_{{{}}}", f.length)
            }
        })
        .collect()
}

pub fn chi(args: &ChiArgs) -> Result<Status> {
    let spec = &args.domain;
    let form = chi_poly(&spec.invariants());
    let table = table_chi_form(spec).filter(|t| *t != form);
    let poly: RatPoly = form.expand();
    match args.format {
        Format::Text => {
            println!("chi(s) = {}", form.to_text());
            if let Some(t) = &table {
                println!("       = {}", t.to_text());
            }
            println!("       = {}", poly.to_string_in("s"));
            println!("degree {}", form.degree());
        }
        Format::Latex => println!("\\chi(s) = {}", latex_form(&form)),
        Format::Json => {
            let coeffs: Vec<String> = poly.coeffs().iter().map(coeff_json).collect();
            println!(
                "{{\"coefficients\":[{}],\"degree\":{},\"domain\":{},\"factors\":{}}}",
                coeffs.join(","),
                form.degree(),
                json!(spec.to_string()),
                form.to_json()
            );
        }
    }
    Ok(Status::Ok)
}

pub fn kernel(family: FamilyArg, args: &KernelArgs) -> Result<Status> {
    let (spec, k) = (&args.domain, &args.k);
    let g = spec.invariants().g;
    match family {
        FamilyArg::Y => {
            let ker = YKernel::new(spec, k, args.q)?;
            match args.format {
                Format::Text => {
                    println!(
                        "K((W,Z),(W,Z)) = k/(chi(0)*vol) * F(X) * N(Z,Z)^(-q/k-g), X = |W|^2/N(Z,Z)^(1/k)"
                    );
                    println!("k = {k}, q = {}, g = {g}", args.q);
                    println!("F(X) = {}", render(ker.core(), Format::Text));
                }
                Format::Latex => println!("F(X) = {}", render(ker.core(), Format::Latex)),
                Format::Json => println!("{}", render(ker.core(), Format::Json)),
            }
        }
        FamilyArg::E => {
            let ker = EKernel::new(spec, k, args.p, args.q)?;
            match args.format {
                Format::Text => {
                    println!(
                        "K((W1,W2,Z),(W1,W2,Z)) = C(t1,t2) * N(Z,Z)^(-p-q/k-g), t1 = |W1|^2/N, t2 = |W2|^2/N^(1/k)"
                    );
                    println!("u = 1-t1, lambda = t2*u^(-1/k)");
                    println!("k = {k}, p = {}, q = {}, g = {g}", args.p, args.q);
                    println!("C = {}", render(ker.core(), Format::Text));
                }
                format => println!("{}", render(ker.core(), format)),
            }
        }
    }
    Ok(Status::Ok)
}

fn zeros(n: u32) -> Vec<Complex64> {
    vec![Complex64::default(); n as usize]
}

fn volume(spec: &DomainSpec, args: &EvalArgs) -> Result<Option<f64>> {
    if args.vol.is_some() || spec.known_volume().is_some() {
        return Ok(args.vol);
    }
    match &args.cache {
        Some(path) => cache::lookup(path, spec),
        None => Ok(None),
    }
}

pub fn eval(family: FamilyArg, args: &EvalArgs) -> Result<Status> {
    let kargs = &args.kernel;
    let spec = &kargs.domain;
    let z = match &args.z {
        Some(coords) => Element::from_coords(spec, &coords.0)?,
        None => Element::zero(spec),
    };
    let vol = volume(spec, args)?;
    let value = match family {
        FamilyArg::Y => {
            let w = args.w.as_ref().map(|p| p.0.clone()).unwrap_or_else(|| zeros(kargs.q));
            YKernel::new(spec, &kargs.k, kargs.q)?.eval(&w, &z, vol)?
        }
        FamilyArg::E => {
            let w1 = args.w1.as_ref().map(|p| p.0.clone()).unwrap_or_else(|| zeros(kargs.p));
            let w2 = args.w2.as_ref().map(|p| p.0.clone()).unwrap_or_else(|| zeros(kargs.q));
            EKernel::new(spec, &kargs.k, kargs.p, kargs.q)?.eval(&w1, &w2, &z, vol)?
        }
    };
    match kargs.format {
        Format::Json => println!("{}", json!({ "value": value })),
        _ => println!("{value}"),
    }
    Ok(Status::Ok)
}

fn report_all(reports: impl IntoIterator<Item = Result<VerifyReport>>) -> Result<Status> {
    let mut all_pass = true;
    for r in reports {
        let r = r?;
        println!("{}", r.to_json_line());
        all_pass &= r.pass;
    }
    Ok(if all_pass { Status::Ok } else { Status::Failed })
}

fn family_of(arg: FamilyArg) -> Family {
    match arg {
        FamilyArg::Y => Family::Y,
        FamilyArg::E => Family::E,
    }
}

pub fn verify(suite: Suite, args: &VerifyArgs) -> Result<Status> {
    let spec = &args.domain;
    let k = &args.k;
    let kf = bergman_eggs::algebra::rat_to_f64(k);
    let stochastic_tol = args.tol.unwrap_or(0.02);
    let series_tol = args.tol.unwrap_or(1e-8);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    match suite {
        Suite::Selberg => {
            let orders = args.s.clone().unwrap_or_else(|| {
                ["1/2", "1", "2"].iter().map(|s| bergman_eggs::algebra::parse_rational(s).expect("literal")).collect()
            });
            report_all(orders.iter().enumerate().map(|(i, s)| {
                mc_norm_moment(spec, s, args.samples, args.seed + i as u64, stochastic_tol)
            }))
        }
        Suite::SeriesY => {
            let ker = YKernel::new(spec, k, 1)?;
            report_all((0..args.points).map(|_| {
                let t = rng.random_range(0.0..0.5f64).powf(1.0 / kf);
                let closed = ker.eval_scaled(t, 1.0)?;
                let series = series_kernel_y(spec, k, t, args.truncate)?;
                Ok(VerifyReport::deterministic(
                    format!("series Y k={k} |W|^2={t}"),
                    spec,
                    closed,
                    series.value,
                    series_tol,
                ))
            }))
        }
        Suite::SeriesE => {
            let ker = EKernel::new(spec, k, 1, 1)?;
            report_all((0..args.points).map(|_| {
                let t1: f64 = rng.random_range(0.0..0.3);
                let lambda: f64 = rng.random_range(0.0..0.5);
                let t2 = lambda * (1.0 - t1).powf(1.0 / kf);
                let closed = ker.eval_scaled(t1, t2, 1.0)?;
                let series = series_kernel_e(spec, k, t1, t2, args.truncate)?;
                Ok(VerifyReport::deterministic(
                    format!("series E k={k} |W1|^2={t1} |W2|^2={t2}"),
                    spec,
                    closed,
                    series.value,
                    series_tol,
                ))
            }))
        }
        Suite::Coeffs => {
            let mut indices = Vec::new();
            if args.family != Some(FamilyArg::E) {
                indices.extend((0..=args.degree).map(CoeffIndex::Y));
            }
            if args.family != Some(FamilyArg::Y) {
                for a in 0..=args.degree {
                    indices.extend((0..=args.degree - a).map(|b| CoeffIndex::E(a, b)));
                }
            }
            report_all(indices.into_iter().enumerate().map(|(i, idx)| {
                coeff_mc(spec, k, idx, args.samples, args.seed + i as u64, stochastic_tol)
            }))
        }
        Suite::Volume => {
            let est = mc_volume(spec, args.samples, args.seed)?;
            if let Some(path) = &args.cache {
                cache::store(path, spec, &est)?;
            }
            match spec.known_volume() {
                Some(v) => report_all([Ok(VerifyReport::stochastic("volume", spec, est, v, stochastic_tol))]),
                None => {
                    println!(
                        "{}",
                        json!({
                            "quantity": "volume",
                            "domain": spec.to_string(),
                            "estimate": est.value,
                            "std_error": est.std_error,
                            "acceptance_ratio": est.acceptance_ratio,
                            "samples": est.samples,
                            "seed": est.seed,
                        })
                    );
                    Ok(Status::Ok)
                }
            }
        }
        Suite::Reproducing => {
            let family = args.family.unwrap_or(FamilyArg::Y);
            let arity = match family {
                FamilyArg::Y => 1,
                FamilyArg::E => 2,
            };
            let exponents = args.exponents.clone().unwrap_or_else(|| vec![1; arity]);
            let w0 = args.w.as_ref().map(|p| p.0.clone()).unwrap_or_else(|| vec![Complex64::new(0.3, 0.0); arity]);
            report_all([reproducing_check(
                spec,
                k,
                family_of(family),
                &exponents,
                &w0,
                args.samples,
                args.seed,
                stochastic_tol,
            )])
        }
    }
}

pub fn emit(args: &EmitArgs) -> Result<Status> {
    let read_err = |e: std::io::Error| Error::Parse {
        what: "kernel expression input",
        input: e.to_string(),
    };
    let text = match &args.input {
        Some(path) => std::fs::read_to_string(path).map_err(read_err)?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(read_err)?;
            s
        }
    };
    let expr = parse_kernel_json(text.trim())?;
    println!("{}", render(&expr, args.format));
    Ok(Status::Ok)
}
