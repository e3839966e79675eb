use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weakhopf_core::catalog::{self, AlgebraSpec, DEGREE_BOUND_ENV};
use weakhopf_core::findim::{self, AlphaMode};
use weakhopf_core::hopf::{self, Check, Sampling};
use weakhopf_core::isomap::{self, GenMap};
use weakhopf_core::report::{run_check, Report};
use weakhopf_core::scalar::parse_rational;
use weakhopf_core::{classify, repro, Error};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(name = "weakhopf", version, about = "Exact checks for weak Hopf algebras over U_q(sl_n) and Sweedler's algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count isomorphism classes of mixtures under the half swap and half reversal.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list_orbits: bool,
    },
    /// Run bialgebra and (weak) antipode checks on a catalog algebra.
    Verify {
        /// `wsl:<n>:<d>`, `uqsl:<n>` or `sweedler:H|H1|H2`.
        #[arg(long)]
        algebra: String,
        /// `all`, `bialgebra`, or a comma list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random degree-2 monomials drawn for sampled checks.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Completion degree bound.
        #[arg(long, env = DEGREE_BOUND_ENV)]
        degree: Option<usize>,
    },
    /// Dimensions, splits, slice isomorphisms, R-matrix and embedded copy for H_1 and H_2.
    Sweedler {
        /// `symbolic` or a rational value such as `3/2`.
        #[arg(long, default_value = "symbolic")]
        alpha: String,
    },
    /// Homomorphism, inverse and weak Hopf isomorphism checks for the built-in maps.
    Isocheck {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: u64,
        #[arg(long)]
        weak_hopf: bool,
        #[arg(long)]
        witness_noncoassoc: bool,
    },
    /// Run every acceptance criterion.
    Repro {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Rho,
    Omega,
    /// `wsl:3:10 → wsl:3:9`; `--n` and `--d` are ignored.
    Sec5Psi,
    Slice,
}

struct Outcome {
    passed: bool,
    json: Value,
    text: String,
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let mark = if c.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{mark} {} {} ({} ms)", c.algebra, c.check, c.elapsed_ms));
        if let Some(d) = &c.detail {
            out.push_str(&format!(" [{d}]"));
        }
        out.push('\n');
        if let Some(w) = &c.witness {
            out.push_str(&format!("  witness: {w}\n"));
        }
    }
    out
}

fn from_report(command: &str, extra: Value, report: Report) -> Outcome {
    let passed = report.all_passed();
    let mut json = json!({
        "schema": SCHEMA,
        "command": command,
        "passed": passed,
        "checks": report.checks,
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    Outcome {
        passed,
        text: report_text(&report),
        json,
    }
}

fn parse_checks(s: &str) -> Result<Vec<Check>, Error> {
    match s {
        "all" => Ok(Check::ALL.to_vec()),
        "bialgebra" => Ok(Check::BIALGEBRA.to_vec()),
        _ => s
            .split(',')
            .map(|t| Check::from_name(t.trim()).ok_or_else(|| Error::Config(format!("unknown check `{t}`"))))
            .collect(),
    }
}

fn classify_cmd(n: usize, list_orbits: bool) -> Result<Outcome, Error> {
    let r = classify::enumerate(n, list_orbits)?;
    let mut text = format!(
        "n = {n}: {} orbits (closed form {}, Burnside {})\ncensus: w(d)=d {}, r(d)=d {}, r(d)=w(d) {}, all three {}, none {}\n",
        r.count,
        r.closed_form,
        r.burnside,
        r.census.case1,
        r.census.case2,
        r.census.case3,
        r.census.triple_intersection,
        r.census.union_complement
    );
    if let Some(orbits) = &r.orbits {
        let parts: Vec<String> = orbits
            .iter()
            .map(|o| {
                let items: Vec<String> = o.iter().map(u64::to_string).collect();
                if o.len() == 1 {
                    items[0].clone()
                } else {
                    format!("{{{}}}", items.join(","))
                }
            })
            .collect();
        text.push_str(&format!("d = {}\n", parts.join(", ")));
    }
    Ok(Outcome {
        passed: r.consistent(),
        json: json!({ "schema": SCHEMA, "command": "classify", "passed": r.consistent(), "result": r }),
        text,
    })
}

fn verify_cmd(algebra: &str, checks: &str, seed: u64, samples: usize, degree: Option<usize>) -> Result<Outcome, Error> {
    let spec: AlgebraSpec = algebra.parse()?;
    let checks = parse_checks(checks)?;
    let alg = match degree {
        Some(b) => catalog::build_with_bound(spec, b)?,
        None => catalog::build(spec)?,
    };
    let sampling = Sampling {
        seed,
        degree2_samples: samples,
    };
    let report = hopf::verify_axioms(&alg, &checks, sampling)?;
    Ok(from_report(
        "verify",
        json!({ "algebra": spec.to_string(), "seed": seed, "rules": alg.system.rule_count() }),
        report,
    ))
}

fn sweedler_cmd(alpha: &str) -> Result<Outcome, Error> {
    let mode = if alpha == "symbolic" {
        AlphaMode::Symbolic
    } else {
        AlphaMode::Value(parse_rational(alpha)?)
    };
    let mut report = findim::verify_sweedler_structure()?;
    report.extend(findim::verify_rmatrix(&mode)?);
    report.extend(findim::verify_embedded_sweedler(&mode)?);
    Ok(from_report("sweedler", json!({ "alpha": alpha }), report))
}

fn map_checks(report: &mut Report, f: &GenMap, inverse: &GenMap, weak_hopf: bool, witness: bool) -> Result<(), Error> {
    report.push(isomap::check_algebra_hom(f));
    report.push(isomap::check_algebra_hom(inverse));
    report.push(isomap::check_inverse_pair(f, inverse));
    if weak_hopf {
        report.checks.extend(isomap::check_weak_hopf_iso(f)?);
    }
    if witness {
        let w = isomap::witness_noncoassoc(f, inverse)?;
        let induced: Vec<String> = w.induced.iter().map(|(g, t)| format!("Δ'({g}) = {t}")).collect();
        report.push(
            run_check(&f.name, "noncoassoc-witness", || match (&w.generator, &w.defect) {
                (Some(_), Some(_)) => Ok(()),
                _ => Err("induced coproduct is coassociative on every generator".into()),
            })
            .with_detail(match (&w.generator, &w.defect) {
                (Some(g), Some(d)) => format!("defect at {g}: {d}"),
                _ => induced.join("; "),
            }),
        );
    }
    Ok(())
}

fn isocheck_cmd(map: MapKind, n: usize, d: u64, weak_hopf: bool, witness: bool) -> Result<Outcome, Error> {
    let mut report = Report::default();
    match map {
        MapKind::Rho | MapKind::Omega => {
            let (f, g) = if map == MapKind::Rho {
                (isomap::rho_lift(n, d)?, isomap::rho_lift(n, classify::r_map(n, d)?)?)
            } else {
                (isomap::omega_lift(n, d)?, isomap::omega_lift(n, classify::w_map(n, d)?)?)
            };
            let mismatches = f.type_mismatches();
            report.push(run_check(&f.name, "type-preserving", || {
                if mismatches.is_empty() {
                    Ok(())
                } else {
                    Err(mismatches.join("; "))
                }
            }));
            map_checks(&mut report, &f, &g, weak_hopf, witness)?;
        }
        MapKind::Sec5Psi => {
            let (f, g) = isomap::unexpected_pair()?;
            map_checks(&mut report, &f, &g, weak_hopf, witness)?;
        }
        MapKind::Slice => report.extend(isomap::check_slice_iso(n, d)?),
    }
    Ok(from_report("isocheck", json!({ "n": n, "d": d }), report))
}

fn repro_cmd(criterion: Option<usize>) -> Result<Outcome, Error> {
    let results = match criterion {
        Some(id) => vec![repro::run_criterion(id)?],
        None => repro::run_all(),
    };
    let passed = results.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &results {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{:>2} {mark} {} ({} ms): {}\n", c.id, c.title, c.elapsed_ms, c.summary));
    }
    let n_pass = results.iter().filter(|c| c.passed).count();
    text.push_str(&format!("{n_pass}/{} criteria pass\n", results.len()));
    Ok(Outcome {
        passed,
        json: json!({ "schema": SCHEMA, "command": "repro", "passed": passed, "criteria": results }),
        text,
    })
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse(_) | Error::OutOfRange { .. } | Error::UnknownGenerator(_) | Error::Config(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Classify { n, list_orbits } => classify_cmd(n, list_orbits),
        Command::Verify {
            algebra,
            checks,
            seed,
            samples,
            degree,
        } => verify_cmd(&algebra, &checks, seed, samples, degree),
        Command::Sweedler { alpha } => sweedler_cmd(&alpha),
        Command::Isocheck {
            map,
            n,
            d,
            weak_hopf,
            witness_noncoassoc,
        } => isocheck_cmd(map, n, d, weak_hopf, witness_noncoassoc),
        Command::Repro { criterion } => repro_cmd(criterion),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if is_usage(&e) { 2 } else { 1 });
        }
    };
    let body = match cli.format {
        Format::Text => outcome.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("report serializes");
            s.push('\n');
            s
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
