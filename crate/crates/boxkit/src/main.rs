use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boxkit::bounds::{parse_selection, run_bounds, BoundOptions};
use boxkit::config::{build_model, parse_rational, ExperimentConfig, ModelKind, ParamValue};
use boxkit::emit::{csv_string, json_string};
use boxkit::experiment::run_experiment;
use boxkit::io::{read_graph, write_edge_list};
use boxkit::report::{records_csv, records_json, BoundRecord};
use boxkit_core::families::{construct_bipartite_tight, construct_cobipartite_tight};
use boxkit_core::interval::{boxicity_le, EXACT_LIMIT};
use boxkit_core::random::{sample, RandomModelSpec};
use boxkit_core::spectral::{bipartite_spectrum, graph_spectrum};
use boxkit_core::{BipartiteGraph, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "boxkit", version, about = "Certified lower bounds on boxicity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Cobipartite,
    Bipartite,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate lower bounds on a graph
    Bound {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated bound names, or `all`
        #[arg(long, default_value = "all")]
        methods: String,
        #[arg(long, default_value_t = 2)]
        t_max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Exact boxicity by exhaustive search (at most 8 vertices)
    Exact {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Sample a random graph
    Gen {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a tight family member with its interval certificate
    Construct {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Adjacency spectrum of a graph
    Spectrum {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a parameter sweep described by a config file
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } | Error::VertexCount { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Bound {
            input: path,
            methods,
            t_max,
            format,
        } => {
            let g = read_graph(&path).map_err(input)?;
            let selection = parse_selection(&methods).map_err(Failure::Input)?;
            let reports = run_bounds(&g, &selection, &BoundOptions { t_max });
            let records: Vec<BoundRecord> = reports.iter().map(BoundRecord::from).collect();
            match format {
                Format::Csv => print!("{}", records_csv(&records)),
                Format::Json => println!("{}", records_json(&records)),
            }
        }
        Command::Exact { input: path, max_k } => {
            let g = read_graph(&path).map_err(input)?;
            if g.order() > EXACT_LIMIT {
                return Err(Failure::Budget(format!(
                    "exact search handles at most {EXACT_LIMIT} vertices, got {}",
                    g.order()
                )));
            }
            for k in 0..=max_k {
                if let Some(cert) = boxicity_le(&g, k)? {
                    println!("box = {k}");
                    for (i, o) in cert.orders.iter().enumerate() {
                        let seq: Vec<String> = o.sequence().iter().map(|v| v.to_string()).collect();
                        println!("order {}: {}", i + 1, seq.join(" "));
                    }
                    return Ok(());
                }
            }
            println!("box > {max_k}");
        }
        Command::Gen {
            model,
            n,
            p,
            m,
            k,
            seed,
            out,
        } => {
            let kind = ModelKind::parse(&model)
                .ok_or_else(|| Failure::Input(format!("unknown model `{model}`")))?;
            let param = match (kind.param_key(), p, m, k) {
                ("p", Some(p), None, None) => {
                    ParamValue::P(parse_rational(&p).map_err(Failure::Input)?)
                }
                ("m", None, Some(m), None) | ("k", None, None, Some(m)) => ParamValue::Count(m),
                (key, ..) => {
                    return Err(Failure::Input(format!(
                        "model `{model}` takes exactly --{key}"
                    )))
                }
            };
            let model = build_model(kind, n, param).map_err(Failure::Input)?;
            let g = sample(&RandomModelSpec { model, seed })?.into_graph();
            let header = format!(
                "# model={} n={} {} seed={seed}\n",
                model.name(),
                n,
                model.param()
            );
            write_file(&out, &(header + &write_edge_list(&g)))?;
        }
        Command::Construct {
            family,
            k,
            l,
            verify,
        } => {
            let cert = match family {
                FamilyName::Cobipartite => construct_cobipartite_tight(k, l)?,
                FamilyName::Bipartite => construct_bipartite_tight(k, l)?,
            };
            let reps: Vec<Vec<[String; 2]>> = cert
                .reps
                .iter()
                .map(|r| {
                    r.intervals()
                        .iter()
                        .map(|(a, b)| {
                            [
                                format!("{}/{}", a.numer(), a.denom()),
                                format!("{}/{}", b.numer(), b.denom()),
                            ]
                        })
                        .collect()
                })
                .collect();
            let mut doc = json!({
                "edge_list": write_edge_list(&cert.graph),
                "reps": reps,
                "claimed_box_lower": format!("{}/{}", cert.claimed_box_lower.numer(), cert.claimed_box_lower.denom()),
                "claimed_box_upper": cert.claimed_box_upper,
            });
            if verify {
                let ok = cert.verify();
                doc["verified"] = json!(ok);
                if !ok {
                    println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
                    return Err(Failure::Input("certificate does not verify".into()));
                }
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
        Command::Spectrum { input: path } => {
            let g = read_graph(&path).map_err(input)?;
            let s = graph_spectrum(&g)?;
            for x in &s.eigenvalues {
                println!("{x:.12}");
            }
            println!("# residual {:.3e}", s.residual);
            if let (Some(k), Some(l)) = (s.degree, s.lambda_second_abs) {
                println!("# regular degree {k}, lambda {l:.12}");
            }
            if let Some(sides) = g.bipartition() {
                let gb = BipartiteGraph::from_graph(&g, &sides)?;
                if let Some(lp) = bipartite_spectrum(&gb)?.lambda_prime {
                    println!("# bipartite lambda' {lp:.12}");
                }
            }
        }
        Command::Experiment {
            config,
            out,
            format,
        } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Failure::Input(format!("{}: {e}", config.display())))?;
            let cfg = ExperimentConfig::parse(&text).map_err(input)?;
            let result = run_experiment(&cfg).map_err(|e| match e.source {
                Error::Budget { .. } => Failure::Budget(e.to_string()),
                _ => Failure::Input(e.to_string()),
            })?;
            let body = match format {
                Format::Csv => csv_string(&result.rows),
                Format::Json => json_string(&result.rows) + "\n",
            };
            write_file(&out, &body)?;
            for c in &result.summary {
                let show =
                    |x: Option<f64>| x.map(|v| format!("{v:.4}")).unwrap_or_else(|| "-".into());
                println!(
                    "{} n={} {} {}: {}/{} applicable, mean value {}, mean ceiling {}",
                    c.model,
                    c.n,
                    c.param,
                    c.bound_name,
                    c.applicable,
                    c.samples,
                    show(c.mean_value),
                    show(c.mean_ceiling)
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
    }
}
