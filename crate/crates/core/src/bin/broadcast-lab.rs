use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use broadcast_lab::constructions::Claim;
use broadcast_lab::harness::{property_suite, report_csv, report_json, reproduce_table, ReportRow};
use broadcast_lab::io::{graph_to_json, parse_graph6, serialize_result_labelled, write_graph6};
use broadcast_lab::{
    build, distances, generate, solve, CertificateName, CertificateSpec, FamilySpec, Graph,
    ParameterKind, SolveOptions,
};

#[derive(Parser)]
#[command(
    name = "broadcast-lab",
    version,
    about = "Exact broadcast parameters on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family name, e.g. `spider`, `grid`, `layered_Gk`.
    #[arg(long)]
    family: String,
    /// Family arguments, e.g. `2,2,2` or `3,4`. Products take `path:3;cycle:4`.
    #[arg(long, default_value = "")]
    args: String,
}

impl FamilyArgs {
    fn spec(&self) -> broadcast_lab::Result<FamilySpec> {
        FamilySpec::parse(&self.family, &self.args)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    G6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member.
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "g6")]
        out: GraphFormat,
    },
    /// Compute one parameter exactly.
    Compute {
        /// One of gamma_b, Gamma_b, alpha, alpha_h, alpha_bn, alpha_bnr, alpha_bnd, i_bn, alpha_hd.
        #[arg(long)]
        param: String,
        #[arg(long, conflicts_with = "family")]
        graph6: Option<String>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value = "")]
        args: String,
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Build and validate a named certificate.
    Verify {
        #[arg(long)]
        certificate: String,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Run the reproduction table.
    Reproduce {
        #[arg(long)]
        budget_nodes: Option<u64>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the randomized property suites.
    Props {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

fn options(budget_nodes: Option<u64>) -> SolveOptions {
    let o = SolveOptions::default();
    match budget_nodes {
        Some(b) => o.with_node_budget(b),
        None => o,
    }
}

fn print_rows(rows: &[ReportRow], csv: bool, json: bool) -> ExitCode {
    if json {
        println!("{}", report_json(rows));
    } else if csv {
        print!("{}", report_csv(rows));
    } else {
        for r in rows {
            println!(
                "{:<48} {:<16} {} ({} ms)",
                r.claim_id, r.status, r.computed, r.elapsed_ms
            );
        }
    }
    if rows.iter().any(ReportRow::is_fail) {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run(cli: Cli) -> broadcast_lab::Result<ExitCode> {
    match cli.command {
        Command::Gen { family, out } => {
            let g = generate(&family.spec()?)?;
            match out {
                GraphFormat::G6 => println!("{}", write_graph6(&g)),
                GraphFormat::Json => println!("{}", graph_to_json(&g)),
            }
        }
        Command::Compute {
            param,
            graph6,
            family,
            args,
            budget_nodes,
            json,
        } => {
            let kind = ParameterKind::from_str(&param)?;
            let g: Graph = match (graph6, family) {
                (Some(text), _) => parse_graph6(&text)?,
                (None, Some(name)) => generate(&FamilySpec::parse(&name, &args)?)?,
                (None, None) => {
                    return Err(broadcast_lab::Error::InvalidGraph(
                        "pass --graph6 or --family".into(),
                    ))
                }
            };
            let r = solve(&g, kind, &options(budget_nodes))?;
            if json {
                println!("{}", serialize_result_labelled(&r, &g)?);
            } else {
                let status = if r.optimal {
                    "optimal"
                } else {
                    "incumbent (budget exhausted)"
                };
                println!("{} = {} [{}]", r.kind, r.value, status);
                let witness: Vec<String> = r
                    .witness
                    .broadcasters()
                    .into_iter()
                    .map(|v| format!("{}:{}", g.label(v), r.witness.strength(v)))
                    .collect();
                println!("witness {}", witness.join(" "));
                println!("nodes {} elapsed {} ms", r.nodes_explored, r.elapsed_ms);
            }
        }
        Command::Verify {
            certificate,
            family,
        } => {
            let name = CertificateName::from_str(&certificate)?;
            let spec = CertificateSpec::new(name, family.spec()?);
            let g = generate(&spec.family)?;
            let d = distances(&g);
            let f = build(&spec)?;
            println!("{name} on {}: weight {}", spec.family, f.weight());
            for claim in [
                Claim::BnIndependent,
                Claim::HearingIndependent,
                Claim::Irredundant,
                Claim::Dominating,
                Claim::MinimalDominating,
            ] {
                println!("  {:<20} {}", claim.name(), claim.holds(&f, &g, &d));
            }
        }
        Command::Reproduce {
            budget_nodes,
            csv,
            json,
        } => {
            return Ok(print_rows(
                &reproduce_table(&options(budget_nodes)),
                csv,
                json,
            ));
        }
        Command::Props { seed, trials } => {
            return Ok(print_rows(&property_suite(seed, trials), false, false));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
