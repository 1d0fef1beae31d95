use std::process::ExitCode;

use serde_json::json;
use wreath_mahonian::algebra::BiPoly;
use wreath_mahonian::distributions::{
    eulerian, eulerian_sequence, maj_a_enumerate, maj_a_recurrence, maj_a_sequence,
    verify_identity, EnumConfig, EulerianMethod, Identity, MahonianSpec, Source, VerifyParams,
};
use wreath_mahonian::perm::{descent_data, tilde_descent_data, ColoredPermutation, DescentData};
use wreath_mahonian::{Error, Result};

use crate::{
    ColorArgs, EnumArgs, Format, Method, PolyArgs, SourceArg, StatsArgs, TableArgs, VerifyArgs,
};

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::GuardExceeded { .. } => 3,
        _ => 2,
    }
}

fn parse_colors(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Error::InvalidParameter(format!("bad color {s:?} in --L")))
        })
        .collect()
}

/// Builds the spec from `--L` / `--ell`; `required` demands one of them.
fn spec_from(a: u32, colors: &ColorArgs, n: usize, required: bool) -> Result<MahonianSpec> {
    match (&colors.colors, colors.ell) {
        (Some(list), _) => MahonianSpec::with_colors(a, &parse_colors(list)?, n),
        (None, Some(ell)) => MahonianSpec::new(a, ell, n),
        (None, None) if !required => MahonianSpec::new(a, 0, n),
        (None, None) => Err(Error::InvalidParameter(
            "one of --L or --ell is required".into(),
        )),
    }
}

fn enum_config(args: &EnumArgs) -> EnumConfig {
    if args.jobs > 1 {
        // Fails only if the global pool already exists, which is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build_global();
    }
    EnumConfig {
        limit: if args.no_guard { u64::MAX } else { args.limit },
        parallel: args.jobs > 1,
    }
}

fn render(poly: &BiPoly, format: Format) -> String {
    match format {
        Format::Text => poly.to_text(),
        Format::Latex => poly.to_latex(),
        Format::Json => serde_json::to_string(poly).expect("polynomials serialise"),
    }
}

fn stats_json(d: &DescentData) -> serde_json::Value {
    json!({ "des": d.des, "set": d.descent_set, "rmaj": d.rmaj })
}

fn stats_text(d: &DescentData, tilde: bool) -> String {
    let set: Vec<String> = d.descent_set.iter().map(usize::to_string).collect();
    let set = set.join(",");
    if tilde {
        format!("tilde_des={} tilde_set=[{set}] tilde_maj={}", d.des, d.rmaj)
    } else {
        format!("des={} set=[{set}] rmaj={}", d.des, d.rmaj)
    }
}

fn stats_latex(d: &DescentData, n: usize, tilde: bool) -> String {
    let set: Vec<String> = d.descent_set.iter().map(usize::to_string).collect();
    if tilde {
        format!(
            "\\widetilde{{\\mathrm{{Des}}}}_L=\\{{{}\\}},\\ \\widetilde{{\\mathrm{{des}}}}_L={},\\ \\widetilde{{\\mathrm{{maj}}}}_L={}",
            set.join(","),
            d.des,
            d.rmaj
        )
    } else {
        format!(
            "\\mathrm{{Des}}_L=\\{{{}\\}},\\ \\mathrm{{des}}_L={},\\ \\mathrm{{rmaj}}_{{L,{n}}}={}",
            set.join(","),
            d.des,
            d.rmaj
        )
    }
}

pub fn stats(args: &StatsArgs) -> Result<ExitCode> {
    let sigma = ColoredPermutation::parse(&args.perm, args.a)?;
    let spec = spec_from(args.a, &args.colors, sigma.len(), true)?;
    let order = spec.order()?;
    let d = descent_data(&sigma, &order)?;
    let tilde = if args.tilde {
        Some(tilde_descent_data(&sigma, &order)?)
    } else {
        None
    };
    match args.format {
        Format::Json => {
            let mut v = stats_json(&d);
            if let Some(t) = &tilde {
                v["tilde"] = json!({ "des": t.des, "set": t.descent_set, "maj": t.rmaj });
            }
            println!("{v}");
        }
        Format::Text => {
            println!("{}", stats_text(&d, false));
            if let Some(t) = &tilde {
                println!("{}", stats_text(t, true));
            }
        }
        Format::Latex => {
            println!("{}", stats_latex(&d, sigma.len(), false));
            if let Some(t) = &tilde {
                println!("{}", stats_latex(t, sigma.len(), true));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn eulerian_method(method: Method) -> EulerianMethod {
    match method {
        Method::Enumerate => EulerianMethod::Enumerate,
        Method::Recurrence => EulerianMethod::Recurrence,
        Method::Derivative => EulerianMethod::Derivative,
        Method::Specialize => EulerianMethod::Specialize,
    }
}

fn require_q1_method(method: Method, q1: bool) -> Result<()> {
    if !q1 && matches!(method, Method::Derivative | Method::Specialize) {
        return Err(Error::InvalidParameter(
            "methods `derivative` and `specialize` build the Eulerian polynomial; add --q1".into(),
        ));
    }
    Ok(())
}

pub fn poly(args: &PolyArgs) -> Result<ExitCode> {
    require_q1_method(args.method, args.q1)?;
    let spec = spec_from(args.a, &args.colors, args.n, true)?;
    let cfg = enum_config(&args.enumeration);
    let poly = if args.q1 {
        eulerian(&spec, eulerian_method(args.method), &cfg)?
    } else if args.method == Method::Enumerate {
        maj_a_enumerate(&spec.order()?, args.n, &cfg)?
    } else {
        maj_a_recurrence(spec.a, spec.ell, args.n)?
    };
    println!("{}", render(&poly, args.format));
    Ok(ExitCode::SUCCESS)
}

pub fn table(args: &TableArgs) -> Result<ExitCode> {
    require_q1_method(args.method, args.q1)?;
    let spec = spec_from(args.a, &args.colors, args.max_n, true)?;
    let cfg = enum_config(&args.enumeration);
    let rows = if args.q1 {
        eulerian_sequence(&spec, eulerian_method(args.method), &cfg)?
    } else if args.method == Method::Enumerate {
        let order = spec.order()?;
        (0..=args.max_n)
            .map(|m| maj_a_enumerate(&order, m, &cfg))
            .collect::<Result<Vec<_>>>()?
    } else {
        maj_a_sequence(spec.a, spec.ell, args.max_n)?
    };
    let name = if args.q1 { "A" } else { "A^{maj}" };
    match args.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .enumerate()
                .map(|(n, p)| json!({ "n": n, "poly": p }))
                .collect();
            println!("{}", serde_json::Value::from(v));
        }
        Format::Text => {
            for (n, p) in rows.iter().enumerate() {
                println!("n={n}: {}", p.to_text());
            }
        }
        Format::Latex => {
            for (n, p) in rows.iter().enumerate() {
                println!(
                    "{name}_{{{},{},{n}}} &= {} \\\\",
                    spec.a,
                    spec.ell,
                    p.to_latex()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let identity: Identity = args.identity.parse()?;
    let spec = spec_from(args.a, &args.colors, args.n, false)?;
    let mut params = VerifyParams::new(spec)
        .source(match args.source {
            SourceArg::Recurrence => Source::Recurrence,
            SourceArg::Enumeration => Source::Enumeration,
        })
        .enumeration(enum_config(&args.enumeration));
    params.t_truncation = args.t_truncation;
    params.u_order = args.u_order;

    let report = verify_identity(identity, &params)?;
    let as_json = serde_json::to_string(&report).expect("reports serialise");
    match args.format {
        Format::Json => println!("{as_json}"),
        Format::Text | Format::Latex => {
            let verdict = if report.holds { "holds" } else { "FAILS" };
            println!("{}: {verdict}", report.identity);
            if let Some(w) = &report.witness {
                println!("{}", serde_json::to_string(w).expect("witness serialises"));
            }
        }
    }
    Ok(if report.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
