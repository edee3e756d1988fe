use std::fmt::Write as _;

use partition_polys::bounds::{self, Enclosure};
use partition_polys::exactnum::{format_fixed, parse_rational};
use partition_polys::partpoly::partition_numbers;
use partition_polys::roots::{
    all_roots_float, isolate_real_roots_refined, largest_positive_real_root, largest_positive_real_root_within,
    decimal_epsilon, FloatRootOptions,
};
use partition_polys::verify::{self, BoundsSizes, VerificationReport};
use partition_polys::{Poly, PolyCache, Rational};
use serde_json::{json, Value};

use crate::{Command, Failure, Family, Format, GlobalOpts, Output, Suite};

const BO_NMAX: usize = 50;
const CFT_KMAX: usize = 5;
const CFT_NMAX: usize = 50;
const MAIN_NMAX: usize = 50;
const MONOTONE_NMAX: usize = 100;
const PRIME_NMAX: usize = 100;
const PROP7_NMAX: usize = 100;
const SUMMAND_AMAX: usize = 33;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn ok(body: String) -> Result<Output, Failure> {
    Ok(Output { body, verified: true })
}

fn cache_for(g: &GlobalOpts, needed: usize) -> PolyCache {
    PolyCache::build(g.max_n.unwrap_or(needed))
}

fn json_body(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_body(header: &str, rows: &[Vec<String>]) -> String {
    let mut s = format!("{header}\n");
    for r in rows {
        s.push_str(&r.join(","));
        s.push('\n');
    }
    s
}

pub fn execute(command: &Command, g: &GlobalOpts) -> Result<Output, Failure> {
    match command {
        Command::Poly { n } => poly(g, *n),
        Command::Eval { n, x } => eval(g, *n, x),
        Command::Roots { family, n, a, b, eps } => roots(g, *family, *n, *a, *b, eps),
        Command::Table1 { amax, bmax } => table1(g, *amax, *bmax),
        Command::Figure1 { nmax } => figure1(g, *nmax),
        Command::Figure2 { amax } => figure2(g, *amax),
        Command::Bounds { m, lehmer } => bounds_cmd(g, *m, *lehmer),
        Command::Verify { suite, nmax, amax, kmax, mmax } => verify_cmd(g, *suite, *nmax, *amax, *kmax, *mmax),
    }
}

fn poly(g: &GlobalOpts, n: usize) -> Result<Output, Failure> {
    let cache = cache_for(g, n);
    let p = cache.poly(n)?;
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    match g.format.unwrap_or(Format::Text) {
        Format::Text => ok(format!("P_{n}(x) = {p}\n")),
        Format::Csv => {
            let rows: Vec<Vec<String>> = coeffs.iter().enumerate().map(|(i, c)| vec![i.to_string(), c.clone()]).collect();
            ok(csv_body("degree,coefficient", &rows))
        }
        Format::Json => ok(json_body(&json!({ "n": n, "coefficients": coeffs }))),
    }
}

fn eval(g: &GlobalOpts, n: usize, x: &str) -> Result<Output, Failure> {
    let x = parse_rational(x)?;
    let cache = cache_for(g, n);
    let v = cache.eval(n, &x)?;
    let approx = format_fixed(&v, g.precision);
    match g.format.unwrap_or(Format::Text) {
        Format::Text => ok(format!("P_{n}({x}) = {v} ~ {approx}\n")),
        Format::Csv => ok(csv_body("n,x,value,approx", &[vec![n.to_string(), x.to_string(), v.to_string(), approx]])),
        Format::Json => ok(json_body(&json!({ "n": n, "x": x.to_string(), "value": v.to_string(), "approx": approx }))),
    }
}

fn family_poly(
    g: &GlobalOpts,
    family: Family,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
) -> Result<(String, Poly), Failure> {
    match (family, n, a, b) {
        (Family::Delta, Some(n), None, None) => Ok((format!("Delta_{n}"), cache_for(g, n + 1).delta(n)?)),
        (Family::Prop7, Some(n), None, None) => {
            Ok((format!("x*P_{n} - P_{}", n + 1), cache_for(g, n + 1).shifted_ratio_poly(n)?))
        }
        (Family::Bo, None, Some(a), Some(b)) => Ok((format!("P_{{{a},{b}}}"), cache_for(g, a + b).bo_poly(a, b)?)),
        (Family::Bo, ..) => Err(usage("family bo needs --a and --b (and no --n)")),
        _ => Err(usage("families delta and prop7 need --n (and no --a/--b)")),
    }
}

fn roots(g: &GlobalOpts, family: Family, n: Option<usize>, a: Option<usize>, b: Option<usize>, eps: &str) -> Result<Output, Failure> {
    let eps = parse_rational(eps)?;
    let (name, p) = family_poly(g, family, n, a, b)?;
    if p.degree().unwrap_or(0) == 0 {
        return Err(usage(format!("{name} is constant")));
    }
    let report = isolate_real_roots_refined(&p, &eps)?;
    let mut rows: Vec<(Rational, Vec<String>)> = report
        .exact_rational_roots
        .iter()
        .map(|r| (r.clone(), vec!["exact".into(), r.to_string(), r.to_string(), format_fixed(r, g.precision)]))
        .collect();
    rows.extend(report.intervals.iter().map(|iv| {
        (
            iv.lo.clone(),
            vec!["interval".into(), iv.lo.to_string(), iv.hi.to_string(), format_fixed(&iv.midpoint(), g.precision)],
        )
    }));
    rows.sort_by(|x, y| x.0.cmp(&y.0));
    let rows: Vec<Vec<String>> = rows.into_iter().map(|r| r.1).collect();
    match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!("{name}: {} real roots\n", rows.len());
            for r in &rows {
                if r[0] == "exact" {
                    let _ = writeln!(s, "  {} (exact)", r[1]);
                } else {
                    let _ = writeln!(s, "  [{}, {}] ~ {}", r[1], r[2], r[3]);
                }
            }
            ok(s)
        }
        Format::Csv => ok(csv_body("kind,lo,hi,approx", &rows)),
        Format::Json => {
            let items: Vec<Value> =
                rows.iter().map(|r| json!({ "kind": r[0], "lo": r[1], "hi": r[2], "approx": r[3] })).collect();
            ok(json_body(&json!({ "polynomial": name, "roots": items })))
        }
    }
}

fn root_text(root: Option<Rational>, digits: usize) -> String {
    root.map_or_else(|| "NA".to_string(), |r| format_fixed(&r, digits))
}

fn table1(g: &GlobalOpts, amax: usize, bmax: usize) -> Result<Output, Failure> {
    if amax == 0 || bmax == 0 {
        return Err(usage("--amax and --bmax must be positive"));
    }
    let cache = cache_for(g, amax + bmax);
    let mut rows = Vec::new();
    for a in 1..=amax {
        for b in 1..=bmax {
            let root = largest_positive_real_root(&cache.bo_poly(a, b)?)?.map(|r| r.value);
            rows.push(vec![a.to_string(), b.to_string(), root_text(root, 2)]);
        }
    }
    match g.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let items: Vec<Value> = rows.iter().map(|r| json!({ "a": r[0], "b": r[1], "root": r[2] })).collect();
            ok(json_body(&Value::Array(items)))
        }
        _ => ok(csv_body("a,b,root", &rows)),
    }
}

/// Fixed-point rendering that never prints a negative zero.
fn fixed_f64(v: f64, digits: usize) -> String {
    let s = format!("{v:.digits$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.chars().all(|c| c == '0' || c == '.') => rest.to_string(),
        _ => s,
    }
}

fn figure1(g: &GlobalOpts, nmax: usize) -> Result<Output, Failure> {
    if nmax == 0 {
        return Err(usage("--nmax must be positive"));
    }
    let cache = cache_for(g, nmax + 1);
    let d = g.precision;
    let mut rows = Vec::new();
    for n in 1..=nmax {
        for r in all_roots_float(&cache.delta(n)?, FloatRootOptions::default())? {
            if r.re > 0.0 {
                rows.push(vec![
                    n.to_string(),
                    fixed_f64(r.re, d),
                    fixed_f64(r.im, d),
                    format!("{:.3e}", r.residual),
                    r.converged.to_string(),
                ]);
            }
        }
    }
    match g.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "n": r[0], "re": r[1], "im": r[2], "residual": r[3], "converged": r[4] == "true" }))
                .collect();
            ok(json_body(&Value::Array(items)))
        }
        _ => ok(csv_body("n,re,im,residual,converged", &rows)),
    }
}

fn figure2(g: &GlobalOpts, amax: usize) -> Result<Output, Failure> {
    if amax == 0 {
        return Err(usage("--amax must be positive"));
    }
    let cache = cache_for(g, amax + 1);
    let eps = decimal_epsilon(g.precision as u32 + 2);
    let mut rows = Vec::new();
    for a in 1..=amax {
        let root = largest_positive_real_root_within(&cache.bo_poly(a, 1)?, &eps)?.map(|r| r.value);
        rows.push(vec![a.to_string(), root_text(root, g.precision)]);
    }
    match g.format.unwrap_or(Format::Csv) {
        Format::Json => {
            let items: Vec<Value> = rows.iter().map(|r| json!({ "a": r[0], "root": r[1] })).collect();
            ok(json_body(&Value::Array(items)))
        }
        _ => ok(csv_body("a,root", &rows)),
    }
}

fn approx(e: &Enclosure, digits: usize) -> String {
    format_fixed(&e.midpoint(), digits)
}

fn bounds_cmd(g: &GlobalOpts, m: u64, lehmer: Option<u64>) -> Result<Output, Failure> {
    let pair = bounds::bo2_bounds(m)?;
    let mu = bounds::mu(m)?;
    let p = partition_numbers(m as usize)[m as usize].clone();
    let holds = bounds::bo2_sandwich_holds(m, &p)?;
    let d = g.precision;
    let mut rows = vec![
        vec!["m".to_string(), m.to_string()],
        vec!["mu".into(), approx(&mu, d)],
        vec!["lower".into(), approx(&pair.lower, d)],
        vec!["p".into(), p.to_string()],
        vec!["upper".into(), approx(&pair.upper, d)],
        vec!["sandwich".into(), holds.to_string()],
    ];
    if let Some(terms) = lehmer {
        let bound = bounds::lehmer_error_bound(m, terms)?;
        rows.push(vec!["lehmer_terms".into(), terms.to_string()]);
        rows.push(vec!["lehmer_bound".into(), approx(&bound, d)]);
    }
    match g.format.unwrap_or(Format::Text) {
        Format::Text => ok(rows.iter().map(|r| format!("{} = {}\n", r[0], r[1])).collect()),
        Format::Csv => ok(csv_body("quantity,value", &rows)),
        Format::Json => {
            let map: serde_json::Map<String, Value> = rows.into_iter().map(|r| (r[0].clone(), Value::String(r[1].clone()))).collect();
            ok(json_body(&Value::Object(map)))
        }
    }
}

fn verify_cmd(
    g: &GlobalOpts,
    suite: Suite,
    nmax: Option<usize>,
    amax: Option<usize>,
    kmax: Option<usize>,
    mmax: Option<usize>,
) -> Result<Output, Failure> {
    let selected: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Bo,
            Suite::Cft,
            Suite::Monotone,
            Suite::PrimeRemark,
            Suite::Main,
            Suite::Summand,
            Suite::Prop7,
            Suite::Bounds,
        ],
        s => vec![s],
    };
    let bounds_sizes = {
        let d = BoundsSizes::default();
        BoundsSizes { mmax: mmax.unwrap_or(d.mmax), amax: amax.unwrap_or(d.amax), nmax: nmax.unwrap_or(d.nmax) }
    };
    let needed = selected
        .iter()
        .map(|s| match s {
            Suite::Bo => nmax.unwrap_or(BO_NMAX),
            Suite::Cft => nmax.unwrap_or(CFT_NMAX),
            Suite::Main => nmax.unwrap_or(MAIN_NMAX),
            Suite::Monotone => nmax.unwrap_or(MONOTONE_NMAX) + 1,
            Suite::PrimeRemark => nmax.unwrap_or(PRIME_NMAX) + 1,
            Suite::Prop7 => nmax.unwrap_or(PROP7_NMAX) + 1,
            Suite::Summand => 2 * amax.unwrap_or(SUMMAND_AMAX),
            Suite::Bounds => bounds_sizes.nmax,
            Suite::All => 0,
        })
        .max()
        .unwrap_or(0);
    let cache = cache_for(g, needed);
    let mut reports: Vec<VerificationReport> = Vec::new();
    for s in selected {
        match s {
            Suite::Bo => reports.push(verify::verify_bo_classical(&cache, nmax.unwrap_or(BO_NMAX))?),
            Suite::Cft => {
                reports.push(verify::verify_cft(&cache, kmax.unwrap_or(CFT_KMAX), nmax.unwrap_or(CFT_NMAX))?)
            }
            Suite::Monotone => reports.push(verify::verify_monotonicity(&cache, nmax.unwrap_or(MONOTONE_NMAX))?),
            Suite::PrimeRemark => reports.push(verify::verify_prime_remark(&cache, nmax.unwrap_or(PRIME_NMAX))?),
            Suite::Main => reports.push(verify::verify_main_theorem(&cache, nmax.unwrap_or(MAIN_NMAX))?),
            Suite::Summand => reports.push(verify::verify_summand(&cache, amax.unwrap_or(SUMMAND_AMAX))?),
            Suite::Prop7 => {
                reports.push(verify::verify_prop7_derivative_chain(&cache, nmax.unwrap_or(PROP7_NMAX))?)
            }
            Suite::Bounds => reports.extend(verify::verify_bounds(&cache, bounds_sizes)?),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let verified = reports.iter().all(VerificationReport::is_verified);
    let body = match g.format.unwrap_or(Format::Json) {
        Format::Json => json_body(&serde_json::to_value(&reports).expect("serializable")),
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.claim.clone(),
                        format!("\"{}\"", r.domain),
                        r.status.as_str().to_string(),
                        r.exceptions.len().to_string(),
                        r.equalities.len().to_string(),
                        r.elapsed_ms.to_string(),
                    ]
                })
                .collect();
            csv_body("claim,domain,status,exceptions,equalities,elapsed_ms", &rows)
        }
        Format::Text => reports
            .iter()
            .map(|r| {
                format!(
                    "{:<20} {:<9} exceptions={} equalities={} {} ms  [{}]\n",
                    r.claim,
                    r.status.as_str(),
                    r.exceptions.len(),
                    r.equalities.len(),
                    r.elapsed_ms,
                    r.domain
                )
            })
            .collect(),
    };
    Ok(Output { body, verified })
}
