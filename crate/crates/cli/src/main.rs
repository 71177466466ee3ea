//! Command-line front end for the three-layer Hele-Shaw stability toolkit.
//!
//! Exit codes: 0 success, 1 bad invocation or config, 2 numerical
//! failure, 3 "incompatible/infeasible" verdict (a science outcome, not
//! an error). All artifacts are byte-deterministic for identical inputs.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use trilayer::analysis::{optimize_mu, param_scan, sweep, ScanAxis, ScanCell};
use trilayer::compatibility::{
    branch_limit_report, default_k_sequence, default_verdict_tolerance, feasible_mu,
    CompatError, Feasibility, Verdict,
};
use trilayer::eigenfunctions::{
    amplitude_ratio, boundary_residuals, eigenpair_for_branch, interface_ratio, Branch,
    Interface,
};
use trilayer::model::{parse_config, validate, ValidatedConfig};

#[derive(Parser)]
#[command(name = "trilayer", version, about = "Linear stability of three-layer Hele-Shaw displacement")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sweep the dispersion relation over a wavenumber grid (CSV).
    Dispersion {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        kmin: f64,
        #[arg(long)]
        kmax: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenfunction diagnostics for one branch at one wavenumber (JSON).
    Eigen {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        k: f64,
        #[arg(long)]
        branch: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Branch-limit compatibility report (JSON; exit 3 if incompatible).
    Compat {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        branch: String,
        /// Comma-separated ascending wavenumbers, e.g. 5,10,15.
        #[arg(long)]
        kseq: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Middle viscosity satisfying the tension-ratio restriction.
    FeasibleMu {
        #[arg(long = "muL")]
        mu_l: f64,
        #[arg(long = "muR")]
        mu_r: f64,
        #[arg(long = "Ta")]
        t_a: f64,
        #[arg(long = "Tb")]
        t_b: f64,
    },
    /// Minimize the maximal growth rate over the middle viscosity.
    Optimize {
        #[arg(long)]
        config: PathBuf,
        #[arg(long = "mu-lo")]
        mu_lo: f64,
        #[arg(long = "mu-hi")]
        mu_hi: f64,
        #[arg(long)]
        kmin: f64,
        #[arg(long)]
        kmax: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the (mu, objective) evaluation trace as CSV.
        #[arg(long = "trace-out")]
        trace_out: Option<PathBuf>,
    },
    /// Two-axis parameter scan of maximal growth and verdict (CSV).
    Scan {
        #[arg(long)]
        config: PathBuf,
        /// Axis spec name=v1,v2,... with name in mu|U|T_a|T_b|a|b.
        #[arg(long)]
        axis1: String,
        #[arg(long)]
        axis2: String,
        #[arg(long)]
        kmin: f64,
        #[arg(long)]
        kmax: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    /// Exit 1: bad invocation or config.
    Usage(String),
    /// Exit 2: numerical failure or I/O failure while emitting.
    Numeric(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn numeric<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Numeric(e.to_string())
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            eprint!("{e}");
            return 1;
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn load_config(path: &Path) -> Result<ValidatedConfig<f64>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    let raw = parse_config(&text)
        .map_err(|e| Failure::Usage(format!("config {}: {e}", path.display())))?;
    validate(raw).map_err(usage)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Numeric(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fmt(x: f64) -> String {
    format!("{x}")
}

fn complex_json(z: num_complex::Complex64) -> serde_json::Value {
    serde_json::json!([z.re, z.im])
}

fn parse_branch(s: &str) -> Result<Branch, Failure> {
    s.parse().map_err(Failure::Usage)
}

fn run(cmd: Cmd) -> Result<i32, Failure> {
    match cmd {
        Cmd::Dispersion {
            config,
            kmin,
            kmax,
            samples,
            out,
        } => {
            let cfg = load_config(&config)?;
            let curve = sweep(&cfg, kmin, kmax, samples).map_err(usage)?;
            let mut csv = String::from(
                "k,re_sigma_plus,im_sigma_plus,re_sigma_minus,im_sigma_minus,E_a,E_b,discriminant\n",
            );
            for p in &curve.points {
                csv.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    fmt(p.k),
                    fmt(p.sigma_plus.re),
                    fmt(p.sigma_plus.im),
                    fmt(p.sigma_minus.re),
                    fmt(p.sigma_minus.im),
                    fmt(p.e_a),
                    fmt(p.e_b),
                    fmt(p.discriminant),
                ));
            }
            emit(out.as_deref(), &csv)?;
            Ok(0)
        }
        Cmd::Eigen {
            config,
            k,
            branch,
            out,
        } => {
            let cfg = load_config(&config)?;
            let branch = parse_branch(&branch)?;
            if !(k > 0.0) {
                return Err(Failure::Usage(format!("k must be positive, got {k}")));
            }
            let pair = eigenpair_for_branch(&cfg, k, branch).map_err(numeric)?;
            let f_at_a = interface_ratio(&pair, &cfg, Interface::Left).map_err(numeric)?;
            let f_at_b = interface_ratio(&pair, &cfg, Interface::Right).map_err(numeric)?;
            let rows = boundary_residuals(&pair, &cfg);
            let amp_ratio = amplitude_ratio(&pair, &cfg).map_err(numeric)?;
            let doc = serde_json::json!({
                "k": pair.k,
                "branch": pair.branch.as_str(),
                "sigma": complex_json(pair.sigma),
                "a_hat": complex_json(pair.a_hat),
                "b_hat": complex_json(pair.b_hat),
                "F_at_a": complex_json(f_at_a),
                "F_at_b": complex_json(f_at_b),
                "row_a_residual": complex_json(rows.row_a),
                "row_b_residual": complex_json(rows.row_b),
                "scale_a": rows.scale_a,
                "scale_b": rows.scale_b,
                "amplitude_ratio": amp_ratio,
            });
            emit(out.as_deref(), &format!("{doc}\n"))?;
            Ok(0)
        }
        Cmd::Compat {
            config,
            branch,
            kseq,
            out,
        } => {
            let cfg = load_config(&config)?;
            let branch = parse_branch(&branch)?;
            let ks = match kseq {
                None => default_k_sequence(&cfg),
                Some(text) => text
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<f64>()
                            .map_err(|e| Failure::Usage(format!("bad kseq entry {t:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let report = branch_limit_report(&cfg, branch, &ks, default_verdict_tolerance())
                .map_err(|e| match e {
                    CompatError::BadSequence | CompatError::InvalidInput(_) => usage(e),
                    CompatError::SequenceTooShort { .. } | CompatError::Eigen(_) => numeric(e),
                })?;
            emit(out.as_deref(), &format!("{}\n", report.to_json()))?;
            Ok(match report.verdict {
                Verdict::Compatible => 0,
                Verdict::Incompatible => 3,
            })
        }
        Cmd::FeasibleMu { mu_l, mu_r, t_a, t_b } => {
            match feasible_mu(mu_l, mu_r, t_a, t_b).map_err(usage)? {
                Feasibility::Feasible(mu_hat) => {
                    println!("{}", fmt(mu_hat));
                    Ok(0)
                }
                Feasibility::EqualTensions => {
                    println!("infeasible: equal tensions would force mu_R = mu_L");
                    Ok(3)
                }
                Feasibility::BelowLower { mu_hat } => {
                    println!("infeasible: lower bound, mu = {} <= mu_L = {}", fmt(mu_hat), fmt(mu_l));
                    Ok(3)
                }
                Feasibility::AboveUpper { mu_hat } => {
                    println!("infeasible: upper bound, mu = {} >= mu_R = {}", fmt(mu_hat), fmt(mu_r));
                    Ok(3)
                }
            }
        }
        Cmd::Optimize {
            config,
            mu_lo,
            mu_hi,
            kmin,
            kmax,
            out,
            trace_out,
        } => {
            let cfg = load_config(&config)?;
            let opt = optimize_mu(&cfg, mu_lo, mu_hi, kmin, kmax).map_err(usage)?;
            let doc = serde_json::json!({
                "mu_star": opt.mu_star,
                "objective_star": opt.objective_star,
            });
            emit(out.as_deref(), &format!("{doc}\n"))?;
            if let Some(path) = trace_out {
                let mut csv = String::from("mu,objective\n");
                for (mu, j) in &opt.trace {
                    csv.push_str(&format!("{},{}\n", fmt(*mu), fmt(*j)));
                }
                emit(Some(&path), &csv)?;
            }
            Ok(0)
        }
        Cmd::Scan {
            config,
            axis1,
            axis2,
            kmin,
            kmax,
            out,
        } => {
            let cfg = load_config(&config)?;
            let (ax1, vals1) = parse_axis(&axis1)?;
            let (ax2, vals2) = parse_axis(&axis2)?;
            let table =
                param_scan(&cfg, (ax1, &vals1), (ax2, &vals2), kmin, kmax).map_err(usage)?;
            let mut csv = format!("{},{},sigma_star,k_star,verdict\n", ax1.as_str(), ax2.as_str());
            let n2 = table.axis2_values.len();
            for (idx, cell) in table.cells.iter().enumerate() {
                let v1 = table.axis1_values[idx / n2];
                let v2 = table.axis2_values[idx % n2];
                match cell {
                    ScanCell::Ok {
                        sigma_star,
                        k_star,
                        verdict,
                    } => {
                        csv.push_str(&format!(
                            "{},{},{},{},{}\n",
                            fmt(v1),
                            fmt(v2),
                            fmt(*sigma_star),
                            fmt(*k_star),
                            verdict.as_str(),
                        ));
                    }
                    ScanCell::Invalid { error } => {
                        eprintln!("cell ({},{}): {error}", idx / n2, idx % n2);
                        csv.push_str(&format!("{},{},,,invalid\n", fmt(v1), fmt(v2)));
                    }
                }
            }
            emit(out.as_deref(), &csv)?;
            Ok(0)
        }
    }
}

fn parse_axis(spec: &str) -> Result<(ScanAxis, Vec<f64>), Failure> {
    let (name, rest) = spec
        .split_once('=')
        .ok_or_else(|| Failure::Usage(format!("axis spec {spec:?} must look like name=v1,v2,...")))?;
    let axis: ScanAxis = name.parse().map_err(Failure::Usage)?;
    let values = rest
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Failure::Usage(format!("bad axis value {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(Failure::Usage(format!("axis {name} has no values")));
    }
    Ok((axis, values))
}
