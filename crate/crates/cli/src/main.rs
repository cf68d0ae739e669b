use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use as_strata::algebra::ProfileEntry;
use as_strata::deform::{
    seeded_rng, verify_family_with, FamilySpec, VerificationReport, VerifyOptions,
};
use as_strata::graph::{
    build_cd, build_gd, connectivity_report, connectivity_report_d, ConnectivityReport,
};
use as_strata::partition::{d_from_genus, enumerate_omega, maximal_partitions, minimal_partitions};
use as_strata::strata::stratum_dims;
use as_strata::{is_prime, sweep};

#[derive(Parser)]
#[command(
    name = "as-strata",
    version,
    about = "Strata and closure graphs of Artin-Schreier moduli"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Target {
    /// Characteristic.
    #[arg(long)]
    p: u32,
    /// `d = sum(e_j) - 2`.
    #[arg(long, conflicts_with = "genus", required_unless_present = "genus")]
    d: Option<u32>,
    /// Genus; converted with `d = 2g/(p-1)`.
    #[arg(long)]
    genus: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gd,
    Cd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    A,
    B,
    C,
    D,
    E1,
    E2,
    Oss1,
    Oss2,
    Pz,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the partitions indexing the strata.
    Partitions {
        #[command(flatten)]
        target: Target,
        /// Only partitions without a coarser element.
        #[arg(long, conflicts_with = "maximal")]
        minimal: bool,
        /// Only partitions without a finer element.
        #[arg(long)]
        maximal: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Export the refinement graph or the closure graph.
    Graph {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Stratum dimensions.
    Dims {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Connectedness verdict for one genus.
    Connectedness {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify a deformation family fiber by fiber.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated `key=value` pairs; coefficient lists use `:`.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        p: u32,
        /// Prime-field parameter values to sample.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        t0: Option<Vec<i64>>,
        /// Largest field order sampled.
        #[arg(long)]
        ext_cap: Option<u64>,
        /// Seed for randomly drawn coefficients.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Connectedness table for `d = 0..=dmax`.
    Report {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        dmax: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Verdict(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn check_prime(p: u32) -> Result<(), Failure> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(usage(format!("{p} is not a prime")))
    }
}

/// `Ok(None)` means the genus admits no covers.
fn resolve(t: &Target) -> Result<Option<u32>, Failure> {
    check_prime(t.p)?;
    match (t.d, t.genus) {
        (Some(d), _) => Ok(Some(d)),
        (None, Some(g)) => d_from_genus(t.p, g).map_err(usage),
        (None, None) => Err(usage("one of --d or --genus is required")),
    }
}

fn empty_moduli(t: &Target) -> String {
    format!(
        "empty moduli: no covers of genus {} in characteristic {}\n",
        t.genus.unwrap_or(0),
        t.p
    )
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn partitions(target: Target, minimal: bool, maximal: bool, format: Format) -> Outcome {
    let Some(d) = resolve(&target)? else {
        return Ok(empty_moduli(&target));
    };
    let p = target.p;
    let list = if minimal {
        minimal_partitions(p, d)
    } else if maximal {
        maximal_partitions(p, d)
    } else {
        enumerate_omega(p, d)
    }
    .map_err(usage)?;
    Ok(match format {
        Format::Json => pretty(&json!({ "p": p, "d": d, "partitions": list })),
        Format::Text => list.iter().map(|x| format!("{x}\n")).collect(),
    })
}

fn graph(target: Target, kind: Kind, format: GraphFormat) -> Outcome {
    let Some(d) = resolve(&target)? else {
        return Ok(empty_moduli(&target));
    };
    let g = match kind {
        Kind::Gd => build_gd(target.p, d),
        Kind::Cd => build_cd(target.p, d),
    }
    .map_err(usage)?;
    Ok(match format {
        GraphFormat::Dot => g.to_dot(),
        GraphFormat::Json => pretty(&g.to_json()),
    })
}

fn dims(target: Target, format: Format) -> Outcome {
    let Some(d) = resolve(&target)? else {
        return Ok(empty_moduli(&target));
    };
    let dims = stratum_dims(target.p, d).map_err(usage)?;
    Ok(match format {
        Format::Json => pretty(&json!({ "p": target.p, "d": d, "strata": dims })),
        Format::Text => dims
            .iter()
            .map(|s| format!("{:<16} {}\n", s.partition.to_string(), s.dim))
            .collect(),
    })
}

fn report_text(r: &ConnectivityReport) -> String {
    let mut s = String::new();
    match r.d {
        Some(d) => {
            let _ = writeln!(s, "p = {}, g = {}, d = {d}", r.p, r.g);
        }
        None => {
            let _ = writeln!(s, "p = {}, g = {}: empty moduli", r.p, r.g);
        }
    }
    let _ = writeln!(s, "status: {:?} ({:?})", r.status, r.justification);
    if r.d.is_some() {
        let _ = writeln!(s, "components: {}", r.components.len());
        for c in &r.components {
            let names: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  {}", names.join(" "));
        }
    }
    if let Some(b) = r.bound {
        let _ = writeln!(
            s,
            "bound: threshold {}, d+2 reaches it: {}, d reaches it: {}",
            b.threshold, b.genus_form_met, b.degree_form_met
        );
    }
    s
}

fn connectedness(target: Target, format: Format) -> Outcome {
    check_prime(target.p)?;
    let r = match (target.d, target.genus) {
        (Some(d), _) => connectivity_report_d(target.p, d),
        (None, Some(g)) => connectivity_report(target.p, g),
        (None, None) => return Err(usage("one of --d or --genus is required")),
    }
    .map_err(usage)?;
    Ok(match format {
        Format::Json => pretty(&serde_json::to_value(&r).expect("serializable")),
        Format::Text => report_text(&r),
    })
}

fn parse_params(s: &str) -> Result<Vec<(String, String)>, Failure> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| usage(format!("parameter `{kv}` is not key=value")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

struct Params {
    map: Vec<(String, String)>,
    used: Vec<String>,
}

impl Params {
    fn int(&mut self, key: &str) -> Result<Option<u32>, Failure> {
        self.used.push(key.to_string());
        match self.map.iter().find(|x| x.0 == key) {
            None => Ok(None),
            Some((_, v)) => v
                .parse()
                .map(Some)
                .map_err(|_| usage(format!("parameter {key} must be a non-negative integer"))),
        }
    }

    fn req(&mut self, key: &str) -> Result<u32, Failure> {
        self.int(key)?
            .ok_or_else(|| usage(format!("missing parameter {key}")))
    }

    fn list(&mut self, key: &str) -> Result<Option<Vec<u32>>, Failure> {
        self.used.push(key.to_string());
        match self.map.iter().find(|x| x.0 == key) {
            None => Ok(None),
            Some((_, v)) if v.is_empty() => Ok(Some(Vec::new())),
            Some((_, v)) => v
                .split(':')
                .map(|x| {
                    x.parse()
                        .map_err(|_| usage(format!("bad entry `{x}` in {key}")))
                })
                .collect::<Result<Vec<u32>, Failure>>()
                .map(Some),
        }
    }

    fn finish(&self) -> Result<(), Failure> {
        match self.map.iter().find(|x| !self.used.contains(&x.0)) {
            Some((k, _)) => Err(usage(format!("unknown parameter {k}"))),
            None => Ok(()),
        }
    }
}

fn family_spec(family: Family, p: u32, params: &str, seed: u64) -> Result<FamilySpec, Failure> {
    let mut ps = Params {
        map: parse_params(params)?,
        used: Vec::new(),
    };
    let mut rng = seeded_rng(seed);
    let spec = match family {
        Family::A => FamilySpec::A {
            p,
            e1: ps.req("e1")?,
            e2: ps.req("e2")?,
        },
        Family::B => FamilySpec::B {
            p,
            e1: ps.req("e1")?,
            e2: ps.req("e2")?,
            e3: ps.req("e3")?,
        },
        Family::C => FamilySpec::C {
            p,
            e1: ps.req("e1")?,
            e2: ps.req("e2")?,
        },
        Family::D => FamilySpec::D { p, n: ps.req("n")? },
        Family::E1 => FamilySpec::E1 { p },
        Family::E2 => FamilySpec::E2 { p },
        Family::Pz => FamilySpec::Pz {
            p,
            e1: ps.req("e1")?,
            e2: ps.req("e2")?,
        },
        Family::Oss1 => {
            let q = ps.req("q")?;
            match ps.list("c")? {
                Some(coeffs) => FamilySpec::Oss1 { p, q, coeffs },
                None if q >= 1 => FamilySpec::random_oss1(p, q, &mut rng).map_err(usage)?,
                None => return Err(usage("OSS1 needs q >= 1")),
            }
        }
        Family::Oss2 => {
            let q = ps.req("q")?;
            let l = ps.req("l")?;
            match ps.list("c")? {
                Some(coeffs) => FamilySpec::Oss2 { p, q, l, coeffs },
                None if q >= 1 => FamilySpec::random_oss2(p, q, l, &mut rng).map_err(usage)?,
                None => return Err(usage("OSS2 needs q >= 1")),
            }
        }
    };
    ps.finish()?;
    spec.validate().map_err(usage)?;
    Ok(spec)
}

fn profile_text(entries: &[ProfileEntry]) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|e| format!("({}, {})", e.point, e.jump))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn verify_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "family {}", r.spec);
    let _ = writeln!(
        s,
        "special fiber: expected jump {}, observed {}: {}",
        r.special.expected,
        profile_text(&r.special.observed),
        if r.special.ok { "ok" } else { "FAIL" }
    );
    for g in &r.generic {
        let _ = writeln!(
            s,
            "t0 = {} in F_{}: jumps {:?} (expected {:?}) {}: {}",
            g.t0_repr,
            g.field,
            g.jumps_observed,
            g.jumps_expected,
            profile_text(&g.profile),
            if g.ok { "ok" } else { "FAIL" }
        );
    }
    for k in &r.skipped {
        let _ = writeln!(
            s,
            "skipped t0 = {} in F_{}: {}",
            k.t0_repr, k.field, k.reason
        );
    }
    match &r.verdict.first_discrepancy {
        None => s.push_str("verdict: pass\n"),
        Some(why) => {
            let _ = writeln!(s, "verdict: fail ({why})");
        }
    }
    s
}

#[allow(clippy::too_many_arguments)]
fn verify(
    family: Family,
    params: String,
    p: u32,
    t0: Option<Vec<i64>>,
    ext_cap: Option<u64>,
    seed: u64,
    format: Format,
) -> Outcome {
    check_prime(p)?;
    let spec = family_spec(family, p, &params, seed)?;
    let mut opts = VerifyOptions::for_prime(p);
    if let Some(t) = t0 {
        opts.t0 = t;
    }
    if let Some(cap) = ext_cap {
        opts.cap = cap;
    }
    let r = verify_family_with(&spec, &opts).map_err(usage)?;
    let out = match format {
        Format::Json => pretty(&serde_json::to_value(&r).expect("serializable")),
        Format::Text => verify_text(&r),
    };
    if r.passed() {
        Ok(out)
    } else {
        Err(Failure::Verdict(out))
    }
}

fn report(p: u32, dmax: u32, format: Format) -> Outcome {
    check_prime(p)?;
    let rows = sweep::connectivity_sweep(p, 0..=dmax).map_err(usage)?;
    Ok(match format {
        Format::Json => pretty(&serde_json::to_value(&rows).expect("serializable")),
        Format::Text => {
            let mut s = format!(
                "{:>4} {:>6} {:>8} {:>10}  {:<13} {}\n",
                "d", "g", "strata", "components", "status", "justification"
            );
            for r in &rows {
                let n: usize = r.components.iter().map(Vec::len).sum();
                let _ = writeln!(
                    s,
                    "{:>4} {:>6} {:>8} {:>10}  {:<13} {:?}",
                    r.d.unwrap_or(0),
                    r.g,
                    n,
                    r.components.len(),
                    format!("{:?}", r.status),
                    r.justification
                );
            }
            s
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.cmd {
        Cmd::Partitions {
            target,
            minimal,
            maximal,
            format,
        } => partitions(target, minimal, maximal, format),
        Cmd::Graph {
            target,
            kind,
            format,
        } => graph(target, kind, format),
        Cmd::Dims { target, format } => dims(target, format),
        Cmd::Connectedness { target, format } => connectedness(target, format),
        Cmd::Verify {
            family,
            params,
            p,
            t0,
            ext_cap,
            seed,
            format,
        } => verify(family, params, p, t0, ext_cap, seed, format),
        Cmd::Report { p, dmax, format } => report(p, dmax, format),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verdict(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
