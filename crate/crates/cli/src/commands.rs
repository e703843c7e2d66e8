use serde_json::{json, Value};

use zetanorm::numeric::{
    eval_zeta_poly, mc_norm_moment, quad_i, quad_moment_indep2, quad_moment_pair,
    sup_cdf_distance, PrecisionContext,
};
use zetanorm::series::{
    eval_truncated, i_series, ip_alt_form, moment_coeff_int, rdim_leading,
    rdim_prefactor, table_deviation, Coefficient, MomentSpec, TABULATED_MAX,
};
use zetanorm::verify::{self, Check, Suite};
use zetanorm::numeric::mzv_numeric;
use zetanorm::Result;

use crate::args::{Basis, CdfArgs, CoeffsArgs, EvalArgs, MomentsArgs, NormsArgs, SuiteArg, VerifyArgs};
use crate::report::{float, oracle_digits, Csv};

/// Command output before metadata is attached.
pub struct Output {
    pub params: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    pub table: Vec<String>,
    pub csv: Csv,
}

const TABLE_DIGITS: u32 = 6;

pub fn coeffs(args: &CoeffsArgs, ctx: &PrecisionContext) -> Result<Output> {
    let digits = ctx.digits;
    let mut rows = Vec::new();
    let mut table = Vec::new();
    let mut csv = Csv { header: vec!["p", "exact_form", "decimal"], rows: Vec::new() };
    let series = i_series(args.max_order)?;
    for p in 0..=args.max_order {
        let poly = series.coeff(p as usize).and_then(Coefficient::as_exact).expect("exact coefficients");
        let alt = if p >= 2 { Some(ip_alt_form(p)?) } else { None };
        let (decimal, short) = match args.basis {
            Basis::Alt if p >= 2 => {
                let v = alt.as_ref().expect("p ≥ 2").evaluate(|i| mzv_numeric(i, ctx))?;
                (float(v, oracle_digits(digits)), float(v, TABLE_DIGITS))
            }
            _ => {
                let v = eval_zeta_poly(poly, ctx)?;
                (v.to_decimal_string(digits), v.to_decimal_string(TABLE_DIGITS))
            }
        };
        let poly_text = poly.to_string();
        let alt_text = alt.as_ref().map(|a| a.to_string()).unwrap_or_else(|| poly_text.clone());
        let beyond = p > TABULATED_MAX;
        let deviation = table_deviation(p);
        let form = match args.basis {
            Basis::Poly => poly_text.clone(),
            Basis::Alt => alt_text.clone(),
            Basis::Both => format!("{poly_text} = {alt_text}"),
        };
        let mut line = format!("I{p} = {form} ≈ {short}");
        if beyond {
            line.push_str("  [beyond tabulated range]");
        }
        if !deviation.is_zero() {
            line.push_str(&format!("  [reference table differs by {deviation}]"));
        }
        table.push(line);
        csv.rows.push(vec![
            p.to_string(),
            if args.basis == Basis::Alt { alt_text.clone() } else { poly_text.clone() },
            decimal.clone(),
        ]);
        let mut row = json!({ "p": p, "decimal": decimal, "beyond_table": beyond });
        if args.basis != Basis::Alt {
            row["poly_form"] = json!(poly_text);
            row["poly_terms"] = serde_json::to_value(poly).expect("serializes");
        }
        if args.basis != Basis::Poly {
            row["alt_form"] = json!(alt_text);
            if let Some(a) = &alt {
                row["alt_terms"] = serde_json::to_value(a).expect("serializes");
            }
        }
        if !deviation.is_zero() {
            row["reference_table_deviation"] = json!(deviation.to_string());
        }
        rows.push(row);
    }
    Ok(Output {
        params: serde_json::to_value(args).expect("serializes"),
        results: json!({ "coefficients": rows }),
        checks: Vec::new(),
        table,
        csv,
    })
}

pub fn eval(args: &EvalArgs, ctx: &PrecisionContext) -> Result<Output> {
    let series = i_series(args.order.max(1))?;
    let od = oracle_digits(ctx.digits);
    let mut rows = Vec::new();
    let mut table = vec![format!("I(n) series truncated at P = {}", args.order)];
    let mut csv = Csv {
        header: vec!["n", "series", "quadrature", "abs_error", "order_estimate"],
        rows: Vec::new(),
    };
    let mut prev: Option<(f64, f64)> = None;
    for &n in &args.n {
        let value = eval_truncated(&series, n, args.order as usize, ctx)?;
        let mut row = json!({ "n": n, "series": value.to_decimal_string(ctx.digits) });
        let mut line = format!("n = {n}: series {}", value.to_decimal_string(12));
        let mut cells = vec![n.to_string(), value.to_decimal_string(ctx.digits)];
        if args.no_compare {
            cells.extend([String::new(), String::new(), String::new()]);
        } else {
            let quad = quad_i(n, ctx)?;
            let err = (quad - value.to_f64()).abs();
            row["quadrature"] = json!(float(quad, od));
            row["abs_error"] = json!(float(err, 6));
            line.push_str(&format!(", quadrature {}, |error| {}", float(quad, 12), float(err, 3)));
            let estimate = prev.map(|(pn, pe)| (pe / err).ln() / (n / pn).ln());
            if let Some(k) = estimate {
                row["order_estimate"] = json!(float(k, 6));
                line.push_str(&format!(", empirical order {}", float(k, 4)));
            }
            cells.extend([
                float(quad, od),
                float(err, 6),
                estimate.map(|k| float(k, 6)).unwrap_or_default(),
            ]);
            prev = Some((n, err));
        }
        rows.push(row);
        table.push(line);
        csv.rows.push(cells);
    }
    Ok(Output {
        params: serde_json::to_value(args).expect("serializes"),
        results: json!({ "order": args.order, "rows": rows }),
        checks: Vec::new(),
        table,
        csv,
    })
}

pub fn moments(args: &MomentsArgs, ctx: &PrecisionContext) -> Result<Output> {
    let spec = MomentSpec::dependent_pair(args.s);
    let real_path = args.real || spec.integer_s().is_none();
    let series = spec.series(args.max_order, real_path, ctx)?;
    let od = oracle_digits(ctx.digits);
    let route = if real_path { "bell" } else { "integer" };
    let mut table = vec![format!("E(Z_n^{}) for Z_n = ‖(U, 1−U)‖_n ({route} route)", args.s)];
    let mut csv = Csv { header: vec!["p", "exact_form", "decimal"], rows: Vec::new() };
    let mut rows = Vec::new();
    for (p, c) in series.coeffs().iter().enumerate() {
        let p = p as u32;
        let (decimal, short, exact) = match c {
            Coefficient::Exact(poly) => {
                let v = eval_zeta_poly(poly, ctx)?;
                (v.to_decimal_string(ctx.digits), v.to_decimal_string(TABLE_DIGITS), Some(poly.to_string()))
            }
            Coefficient::Numeric(x) => {
                let form = match (p >= 2, spec.integer_s(), real_path) {
                    (true, Some(s), false) => Some(moment_coeff_int(s, p)?.to_string()),
                    _ => None,
                };
                (float(*x, od), float(*x, TABLE_DIGITS), form)
            }
        };
        let mut line = format!("c{p} ≈ {short}");
        if let Some(form) = &exact {
            line = format!("c{p} = {form} ≈ {short}");
        }
        table.push(line);
        csv.rows.push(vec![p.to_string(), exact.clone().unwrap_or_default(), decimal.clone()]);
        rows.push(json!({ "p": p, "form": exact, "decimal": decimal }));
    }
    let mut results = json!({ "route": route, "limit": float(spec.limit(), od), "coefficients": rows });
    if let Some(n) = args.n {
        let value = eval_truncated(&series, n, args.max_order as usize, ctx)?.to_f64();
        results["n"] = json!(n);
        results["series_value"] = json!(float(value, od));
        table.push(format!("series at n = {n}: {}", float(value, 12)));
        if args.compare {
            let quad = quad_moment_pair(n, args.s, ctx)?;
            let diff = (quad - value).abs();
            results["quadrature"] = json!(float(quad, od));
            results["abs_error"] = json!(float(diff, 6));
            results["next_order_scale"] = json!(float(n.powi(-(args.max_order as i32 + 1)), 6));
            table.push(format!("quadrature:        {}  |difference| {}", float(quad, 12), float(diff, 3)));
        }
    }
    Ok(Output {
        params: serde_json::to_value(args).expect("serializes"),
        results,
        checks: Vec::new(),
        table,
        csv,
    })
}

pub fn norms(args: &NormsArgs, ctx: &PrecisionContext) -> Result<Output> {
    let est = mc_norm_moment(args.r, args.n, args.s, args.samples, ctx)?;
    let predicted = rdim_leading(args.r, args.s, args.n)?;
    let limit = rdim_prefactor(args.r, args.s);
    let z = (est.mean - predicted) / est.std_error;
    let od = oracle_digits(ctx.digits);
    let mut results = json!({
        "mean": float(est.mean, od),
        "std_error": float(est.std_error, 6),
        "samples": est.samples,
        "seed": est.seed,
        "leading_prediction": float(predicted, od),
        "z_score": float(z, 6),
        "limit": float(limit, od),
    });
    let mut table = vec![
        format!("E(‖(U₁…U_{})‖_{}^{}), {} samples, seed {}", args.r, args.n, args.s, est.samples, est.seed),
        format!("monte carlo:        {} ± {}", float(est.mean, 10), float(est.std_error, 3)),
        format!("leading prediction: {}  (z = {})", float(predicted, 10), float(z, 3)),
        format!("limit r/(r+s):      {}", float(limit, 10)),
    ];
    let mut csv = Csv {
        header: vec!["r", "s", "n", "samples", "seed", "mean", "std_error", "prediction", "z_score", "quadrature"],
        rows: Vec::new(),
    };
    let mut quad_cell = String::new();
    if args.r == 2 {
        let quad = quad_moment_indep2(args.n, args.s, ctx)?;
        let zq = (est.mean - quad) / est.std_error;
        results["quadrature"] = json!(float(quad, od));
        results["z_score_quadrature"] = json!(float(zq, 6));
        table.push(format!("quadrature:         {}  (z = {})", float(quad, 10), float(zq, 3)));
        quad_cell = float(quad, od);
    }
    csv.rows.push(vec![
        args.r.to_string(),
        args.s.to_string(),
        args.n.to_string(),
        est.samples.to_string(),
        est.seed.to_string(),
        float(est.mean, od),
        float(est.std_error, 6),
        float(predicted, od),
        float(z, 6),
        quad_cell,
    ]);
    Ok(Output {
        params: serde_json::to_value(args).expect("serializes"),
        results,
        checks: Vec::new(),
        table,
        csv,
    })
}

pub fn cdf(args: &CdfArgs) -> Result<Output> {
    let reports = args
        .n
        .iter()
        .map(|&n| sup_cdf_distance(n, args.grid as usize))
        .collect::<Result<Vec<_>>>()?;
    let mut table = Vec::new();
    let mut csv = Csv {
        header: vec!["n", "grid_points", "sup_distance", "argmax", "sup_times_n", "max_signed_excess"],
        rows: Vec::new(),
    };
    for r in &reports {
        table.push(format!(
            "n = {}: sup|F_n − F_∞| = {} at z = {}, times n = {}",
            r.n,
            float(r.sup_distance, 6),
            float(r.argmax, 6),
            float(r.sup_times_n, 6)
        ));
        csv.rows.push(vec![
            r.n.to_string(),
            r.grid_points.to_string(),
            float(r.sup_distance, 17),
            float(r.argmax, 17),
            float(r.sup_times_n, 17),
            float(r.max_signed_excess, 17),
        ]);
    }
    let mut checks = Vec::new();
    if reports.len() >= 2 {
        let scaled: Vec<f64> = reports.iter().map(|r| r.sup_times_n).collect();
        let lo = scaled.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = scaled.iter().cloned().fold(0.0, f64::max);
        checks.push(Check {
            name: "sup distance · n within a factor 2 band".into(),
            passed: hi <= 2.0 * lo,
            residual: Some(hi / lo),
            threshold: Some(2.0),
        });
    }
    let excess = reports.iter().map(|r| r.max_signed_excess).fold(f64::NEG_INFINITY, f64::max);
    checks.push(Check {
        name: "F_n ≤ F_∞ on the grid".into(),
        passed: excess <= 1e-12,
        residual: Some(excess),
        threshold: Some(1e-12),
    });
    Ok(Output {
        params: serde_json::to_value(args).expect("serializes"),
        results: serde_json::to_value(&reports).expect("serializes"),
        checks,
        table,
        csv,
    })
}

pub fn verify(args: &VerifyArgs, tol: f64, ctx: &PrecisionContext) -> Result<Output> {
    let suite = match args.suite {
        SuiteArg::Exact => Suite::Exact,
        SuiteArg::Numeric => Suite::Numeric,
        SuiteArg::All => Suite::All,
    };
    let checks = verify::run(suite, tol, ctx)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    let csv = Csv {
        header: vec!["name", "passed", "residual", "threshold"],
        rows: checks
            .iter()
            .map(|c| {
                vec![
                    c.name.clone(),
                    c.passed.to_string(),
                    c.residual.map(|r| float(r, 6)).unwrap_or_default(),
                    c.threshold.map(|t| float(t, 6)).unwrap_or_default(),
                ]
            })
            .collect(),
    };
    Ok(Output {
        params: json!({ "suite": args.suite, "tol": tol }),
        results: json!({ "total": checks.len(), "failed": failed }),
        checks,
        table: Vec::new(),
        csv,
    })
}
