use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use stperm_core::formats::load_complex;
use stperm_core::group::catalog;
use stperm_core::linalg::is_prime;
use stperm_core::report::{analyze, profile_text, self_check, survey, survey_text};
use stperm_core::sections::{section_graph, section_graph_dot};
use stperm_core::spectrum::{emit_dot, emit_json, emit_text, puncture, spectrum};
use stperm_core::stable::support_profile;
use stperm_core::Error;

/// Invariants of the stable permutation category of a finite group.
#[derive(Parser)]
#[command(name = "stperm", version)]
struct Cli {
    /// Compare both verdict routes on the catalog and check functoriality
    /// of the Brauer quotient before answering.
    #[arg(long, global = true)]
    self_check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Sylow type, sections, bottleneck, verdict and skeleton of a catalog group.
    Analyze {
        group: String,
        #[arg(long)]
        prime: u32,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Support profile and eq-perfection of a complex.v1 document.
    Eqperf {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Bottleneck and surrounding-section check over catalog p-groups.
    Survey {
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        prime: u32,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
    /// Spectrum poset (cyclic p-groups) or stratification skeleton.
    Spectrum {
        group: String,
        #[arg(long)]
        prime: u32,
        #[arg(long, value_enum, default_value_t = Emit::Text)]
        emit: Emit,
    },
}

enum Failure {
    Input(String),
    Inconsistent(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(m) => Failure::Inconsistent(m),
            other => Failure::Input(other.to_string()),
        }
    }
}

fn check_prime(p: u32) -> Result<usize, Failure> {
    if is_prime(p) {
        Ok(p as usize)
    } else {
        Err(Failure::Input(format!("{p} is not a prime")))
    }
}

fn no_dot(command: &str) -> Failure {
    Failure::Input(format!("`{command}` has no DOT output"))
}

fn run(cli: Cli) -> Result<String, Failure> {
    if cli.self_check {
        let failures = self_check()?;
        if !failures.is_empty() {
            return Err(Failure::Inconsistent(failures.join("\n")));
        }
    }
    match cli.command {
        Command::Analyze { group, prime, emit } => {
            let p = check_prime(prime)?;
            let g = catalog(&group)?;
            if g.order() % p != 0 {
                eprintln!(
                    "warning: {p} does not divide |{group}| = {}; every complex is perfect",
                    g.order()
                );
            }
            let report = analyze(&g, p)?;
            let out = match emit {
                Emit::Text => report.to_text(),
                Emit::Json => report.to_json(),
                Emit::Dot => section_graph_dot(&group, &section_graph(&g, p)?),
            };
            if report.consistent() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Inconsistent(format!(
                    "{group} at {p}: route A predicts {} components, the section graph has {}",
                    report.verdict.route_a_components, report.verdict.route_b_components
                )))
            }
        }
        Command::Eqperf { file, emit } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let (spec, c) = load_complex(&text)?;
            let profile = support_profile(&c)?;
            let acyclic = c.is_acyclic();
            let name = file
                .file_name()
                .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            let group = c
                .group()
                .name()
                .map_or_else(|| c.group().display_name(), str::to_string);
            match emit {
                Emit::Text => {
                    let mut out = format!(
                        "complex    {name}\ngroup      {group} (order {})\nprime      {}\ndegrees    {}..{}, dims {:?}\nprofile\n",
                        c.group().order(),
                        spec.prime,
                        c.lo(),
                        c.hi(),
                        c.dims()
                    );
                    out.push_str(&profile_text(&profile, acyclic));
                    Ok(out)
                }
                Emit::Json => {
                    let entries: Vec<_> = profile
                        .entries
                        .iter()
                        .map(|e| {
                            json!({
                                "representative": e.representative.elements(),
                                "class_size": e.class_size,
                                "kind": e.kind.to_string(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "schema": "profile.v1",
                        "complex": name,
                        "group": group,
                        "prime": spec.prime,
                        "lo": c.lo(),
                        "dims": c.dims(),
                        "acyclic": acyclic,
                        "perfect": profile.is_perfect(),
                        "eq_perf": profile.is_eq_perf(),
                        "profile": entries,
                    });
                    Ok(format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("serializes")
                    ))
                }
                Emit::Dot => Err(no_dot("eqperf")),
            }
        }
        Command::Survey {
            max_order,
            prime,
            emit,
        } => {
            let p = check_prime(prime)?;
            let rows = survey(max_order, p)?;
            let out = match emit {
                Emit::Text => survey_text(&rows),
                Emit::Json => {
                    let doc = json!({ "schema": "survey.v1", "prime": p, "max_order": max_order, "rows": rows });
                    format!(
                        "{}\n",
                        serde_json::to_string_pretty(&doc).expect("serializes")
                    )
                }
                Emit::Dot => return Err(no_dot("survey")),
            };
            match rows.iter().find(|r| !r.pass) {
                None => Ok(out),
                Some(r) => {
                    print!("{out}");
                    Err(Failure::Inconsistent(format!(
                        "survey row {} failed",
                        r.group
                    )))
                }
            }
        }
        Command::Spectrum { group, prime, emit } => {
            let p = check_prime(prime)?;
            let g = catalog(&group)?;
            let s = spectrum(&g, p)?;
            let punctured = puncture(&s)?;
            Ok(match emit {
                Emit::Text => emit_text(&s, &punctured),
                Emit::Json => emit_json(&s, &punctured),
                Emit::Dot => emit_dot(&s, &punctured),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Inconsistent(m)) => {
            eprintln!("internal inconsistency: {m}");
            ExitCode::from(3)
        }
    }
}
