use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cubelab::cubegraphs::{self, Family};
use cubelab::export;
use cubelab::harmonic::{self, positive_vertices};
use cubelab::oeis;
use cubelab::predicates::{caf, logistic, n_related, rational_to_f64};
use cubelab::sequences::{self, pow_hamming_extremes, SequenceId};
use cubelab::spectra::{self, DEFAULT_CLUSTER_TOL};
use cubelab::verify::{self, Claim, VerifyOptions};
use cubelab::{Error, OrderingScheme, Result};

#[derive(Parser)]
#[command(name = "cubelab", version, about = "Cube graph matrices, spectra and checks")]
struct Cli {
    /// Only use the OEIS cache and bundled fixtures.
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    offline: bool,
    /// Numeric tolerance (clustering for spectra, eigenvalue error for verify).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// binary, gray, ternary-natural, ternary-gray or custom:i;j;...
    #[arg(long, global = true, default_value = "binary")]
    ordering: String,
    /// Number vertices from 1 in printed output.
    #[arg(long, global = true)]
    one_based: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Plot {
    Caf,
    Spectrum,
    Extremes,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a family's matrix.
    Build {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of a family's matrix, or of a matrix file.
    Spectrum {
        #[arg(long, required_unless_present = "input")]
        family: Option<Family>,
        #[arg(long, required_unless_present = "input")]
        n: Option<usize>,
        /// Matrix CSV or JSON written by `build`.
        #[arg(long, conflicts_with_all = ["family", "n"])]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check claims and write a JSON report; exits nonzero on any failure.
    Verify {
        /// Comma-separated claim ids, or `all`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// `a..b`, `a..=b` or a single `n`; each claim's default when omitted.
        #[arg(long)]
        n: Option<String>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Activation rows: r, p, numerator, denominator, value, logistic(r scale, mu).
    Activation {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        p: u64,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
    },
    /// Least-energy balanced load on the triangulated n-cube.
    Poisson {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Sequence terms as `index value` lines.
    Seq {
        #[arg(long)]
        id: SequenceId,
        #[arg(long, default_value_t = 15)]
        count: usize,
        /// Also compare against the OEIS entry.
        #[arg(long)]
        check: bool,
    },
    /// Eulerian circuit of the regular triangulated n-cube.
    Euler {
        #[arg(long)]
        n: usize,
    },
    /// Plottable CSV.
    Plotdata {
        #[arg(long, value_enum)]
        what: Plot,
        /// Dimension, or a range for `extremes`.
        #[arg(long)]
        n: String,
        /// Active-vertex range for `caf`.
        #[arg(long)]
        p: Option<String>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(serde::Serialize)]
struct PoissonRecord {
    n: usize,
    best_energy_num: Option<String>,
    best_energy_den: Option<String>,
    best_energy_float: f64,
    /// Vertices carrying +1 in each minimizing pattern.
    patterns: Vec<Vec<usize>>,
    norm_l2: f64,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| Error::Parse(format!("range bound {t:?}: {e}")))
    };
    let (a, b) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let v = num(s)?;
        (v, v)
    };
    if a > b {
        return Err(Error::invalid(format!("empty range {s}")));
    }
    Ok(a..=b)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_matrix(path: &Path) -> Result<cubelab::GraphMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    if text.trim_start().starts_with('{') {
        export::read_matrix_json(&text)
    } else {
        export::read_matrix_csv(&text)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let ordering: OrderingScheme = cli.ordering.parse()?;
    let base = usize::from(cli.one_based);
    match cli.cmd {
        Cmd::Build { family, n, format, out } => {
            let m = cubegraphs::build(family, n, &ordering)?;
            let text = match format {
                Format::Csv => export::matrix_csv(&m),
                Format::Json => export::matrix_json(&m)? + "\n",
            };
            emit(out.as_deref(), &text)?;
        }
        Cmd::Spectrum { family, n, input, format, out } => {
            let m = match (input, family, n) {
                (Some(path), _, _) => read_matrix(&path)?,
                (None, Some(f), Some(n)) => cubegraphs::build(f, n, &ordering)?,
                _ => return Err(Error::invalid("need --family and --n, or --input")),
            };
            let spec = spectra::eigenvalues(&m, cli.tol.unwrap_or(DEFAULT_CLUSTER_TOL))?;
            let text = match format {
                Format::Csv => export::spectrum_csv(&spec),
                Format::Json => {
                    let stats = spectra::spectral_stats(&spec)?;
                    serde_json::to_string_pretty(&json!({
                        "matrix": spec.source,
                        "values": spec.values,
                        "clusters": spec.clusters,
                        "stats": stats,
                    }))? + "\n"
                }
            };
            emit(out.as_deref(), &text)?;
        }
        Cmd::Verify { claims, n, report } => {
            let claims = Claim::parse_list(&claims)?;
            let range = n.as_deref().map(parse_range).transpose()?;
            let opts = VerifyOptions {
                tol: cli.tol.unwrap_or(1e-8),
                offline: cli.offline,
                cache_dir: oeis::default_cache_dir(),
            };
            let rep = verify::run(&claims, range, &opts)?;
            let text = rep.to_json()?;
            match report {
                Some(path) => {
                    fs::write(&path, &text).map_err(|e| Error::io(&path, e))?;
                    for e in &rep.entries {
                        eprintln!("{:<13} n={:<3} {}", e.claim.id(), e.n, e.status);
                    }
                }
                None => print!("{text}"),
            }
            let s = rep.summary;
            eprintln!("{} pass, {} fail, {} discrepancy-noted", s.pass, s.fail, s.discrepancy_noted);
            if rep.has_failures() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Activation { n, p, scale, mu } => {
            print!("{}", activation_csv(n, p..=p, scale, mu)?);
        }
        Cmd::Poisson { n } => {
            let s = harmonic::min_energy_search(n)?;
            let q = s.best_energy_rational();
            let patterns: Vec<Vec<usize>> = s
                .best_patterns
                .iter()
                .map(|p| positive_vertices(p).into_iter().map(|v| v - 1 + base).collect())
                .collect();
            let rec = PoissonRecord {
                n,
                best_energy_num: q.as_ref().map(|q| q.numer().to_string()),
                best_energy_den: q.as_ref().map(|q| q.denom().to_string()),
                best_energy_float: s.best_energy,
                patterns,
                norm_l2: s.best_solution.norm_l2,
            };
            println!("{}", serde_json::to_string_pretty(&rec)?);
        }
        Cmd::Seq { id, count, check } => {
            for (i, v) in sequences::indexed(id, count)? {
                println!("{i} {v}");
            }
            if check {
                match oeis::check_generator(id, count, cli.offline, &oeis::default_cache_dir())? {
                    Some(g) => eprintln!(
                        "{} vs {} ({}): {}/{} match{}",
                        g.id,
                        g.anum,
                        g.source,
                        g.comparison.matched,
                        g.comparison.overlap,
                        g.comparison
                            .first_mismatch
                            .map(|m| format!(", first mismatch at {}: {} != {}", m.index, m.local, m.remote))
                            .unwrap_or_default()
                    ),
                    None => eprintln!("{id} has no OEIS entry"),
                }
            }
        }
        Cmd::Euler { n } => match cubegraphs::eulerian_circuit(n)? {
            Some(walk) => {
                let items: Vec<String> = walk.iter().map(|v| (v + base).to_string()).collect();
                println!("{}", items.join(" "));
                eprintln!("{} edges", walk.len() - 1);
            }
            None => {
                eprintln!(
                    "no Eulerian circuit: degree {} is odd",
                    cubegraphs::regular_tricube_degree(n)
                );
                return Ok(ExitCode::FAILURE);
            }
        },
        Cmd::Plotdata { what, n, p, family, out } => {
            let text = match what {
                Plot::Caf => {
                    let n = *parse_range(&n)?.start();
                    let ps = match p {
                        Some(p) => parse_range(&p)?,
                        None => 1..=1usize << n,
                    };
                    activation_csv(n, *ps.start() as u64..=*ps.end() as u64, 1.0, 1.0)?
                }
                Plot::Spectrum => {
                    let family = family.unwrap_or(Family::PowTriCube);
                    let m = cubegraphs::build(family, *parse_range(&n)?.start(), &ordering)?;
                    export::spectrum_csv(&spectra::eigenvalues(&m, cli.tol.unwrap_or(DEFAULT_CLUSTER_TOL))?)
                }
                Plot::Extremes => {
                    let mut s = String::from("n,lambda_min,lambda_max,sum,product\n");
                    for n in parse_range(&n)? {
                        let e = pow_hamming_extremes(n)?;
                        s.push_str(&format!("{n},{},{},{},{}\n", e.lambda_min, e.lambda_max, e.sum, e.product));
                    }
                    s
                }
            };
            emit(out.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn activation_csv(n: usize, ps: RangeInclusive<u64>, scale: f64, mu: f64) -> Result<String> {
    let mut s = String::from("r,p,numerator,denominator,value,logistic\n");
    for p in ps {
        for r in 1..=1u64 << n {
            let q = caf(n, r, p)?;
            // unreduced: related count over C(2^n, r)
            let num = n_related(n, r, p)?;
            let den = cubelab::predicates::binomial(1 << n, r);
            s.push_str(&format!(
                "{r},{p},{num},{den},{},{}\n",
                rational_to_f64(&q),
                logistic(r as f64 * scale, mu)
            ));
        }
    }
    Ok(s)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("cubelab: {e}");
            ExitCode::from(2)
        }
    }
}
