mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use greg_core::fps::{series_t, series_w};
use greg_core::numeric::{eval_w, nth_derivative_w};
use greg_core::polyseq::{gen_g, gen_q, generate, p_from_gs, Family};
use greg_core::trees::{
    enumerate_greg, imp_polynomial, max_unlabeled, unl_polynomial, Variant, MAX_VERTICES,
};
use greg_core::verify::{run_suite, Budget, Config};
use greg_core::Error;
use num_bigint::BigInt;
use num_complex::Complex64;

use render::Format;

#[derive(Parser, Debug)]
#[command(
    name = "greg",
    version,
    about = "Greg trees, tree-function derivatives and Lambert W"
)]
struct Cli {
    /// Output format; a trailing positional format on a subcommand wins.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,

    /// Seed for half-plane sampling.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Default budget profile for `check`.
    #[arg(long, global = true, env = "GREG_BUDGET", value_enum, default_value_t = Profile::Default)]
    budget: Profile,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Profile {
    Default,
    Minimal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial tables: F, G, H, P, Q, F-shift, G-shift, H-shift.
    Polys {
        family: String,
        n_max: usize,
        #[arg(value_name = "FORMAT")]
        fmt: Option<Format>,
    },
    /// Greg tree listings and censuses.
    Trees {
        variant: String,
        n: usize,
        what: TreeQuery,
        #[arg(value_name = "FORMAT")]
        fmt: Option<Format>,
    },
    /// Truncated power series of T0, T1, T2 or W, or their derivatives.
    Series {
        name: String,
        #[arg(long, default_value_t = 10)]
        order: usize,
        #[arg(long, default_value_t = 0)]
        deriv: usize,
        #[arg(value_name = "FORMAT")]
        fmt: Option<Format>,
    },
    /// Run verification checks by name or group (`all` for the full suite).
    Check {
        #[arg(required = true)]
        names: Vec<String>,
        /// Sample points for the generating-function checks, e.g. `-1/2`.
        #[arg(long = "x", allow_hyphen_values = true)]
        x: Vec<String>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Principal branch of Lambert W at a point, with derivatives on the positive reals.
    Wfun {
        #[arg(allow_hyphen_values = true)]
        z: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
        #[arg(long, default_value_t = 0)]
        deriv: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TreeQuery {
    List,
    CensusUnl,
    CensusImp,
}

/// Rendered output plus whether the command succeeded.
struct Outcome {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
    }
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let ok = |text: String| Ok(Outcome { text, ok: true });
    match &cli.command {
        Command::Polys { family, n_max, fmt } => {
            ok(cmd_polys(family, *n_max, fmt.unwrap_or(cli.format))?)
        }
        Command::Trees {
            variant,
            n,
            what,
            fmt,
        } => ok(cmd_trees(variant, *n, *what, fmt.unwrap_or(cli.format))?),
        Command::Series {
            name,
            order,
            deriv,
            fmt,
        } => ok(cmd_series(name, *order, *deriv, fmt.unwrap_or(cli.format))?),
        Command::Check {
            names,
            x,
            n_max,
            order,
            samples,
        } => {
            let mut budget = match cli.budget {
                Profile::Default => Budget::default(),
                Profile::Minimal => Budget::minimal(),
            };
            if let Some(n) = n_max {
                budget = budget.with_n_max(*n);
            }
            if let Some(k) = order {
                budget.series_order = *k;
                budget.basic_order = *k;
                budget.beta_order = *k;
            }
            if !x.is_empty() {
                budget.egf_samples = x.clone();
            }
            if let Some(s) = samples {
                budget.halfplane_samples = *s;
            }
            budget.seed = cli.seed;
            let config = Config {
                budget,
                jobs: cli.jobs.unwrap_or(0) as usize,
                only: Some(names.clone()),
                mutation: None,
            };
            let result = run_suite(&config)?;
            let text = render::suite(&result, cli.format)?;
            Ok(Outcome {
                text,
                ok: result.all_passed(),
            })
        }
        Command::Wfun { z, im, deriv } => ok(cmd_wfun(*z, *im, *deriv, cli.format)?),
    }
}

fn cmd_polys(family: &str, n_max: usize, format: Format) -> Result<String, Error> {
    let minus_one = BigInt::from(-1);
    let rows = match family {
        "F" => generate(Family::F, n_max),
        "G" => generate(Family::G, n_max),
        "H" => generate(Family::H, n_max),
        "P" => p_from_gs(&gen_g(n_max)),
        "F-shift" | "G-shift" | "H-shift" => {
            let fam = match &family[..1] {
                "F" => Family::F,
                "G" => Family::G,
                _ => Family::H,
            };
            generate(fam, n_max)
                .iter()
                .map(|p| p.shift(&minus_one))
                .collect()
        }
        "Q" => return render::triangle(&gen_q(n_max), format),
        _ => {
            return Err(Error::Unknown {
                kind: "family",
                name: family.to_string(),
            })
        }
    };
    render::polys(&rows, format)
}

fn cmd_trees(variant: &str, n: usize, what: TreeQuery, format: Format) -> Result<String, Error> {
    let variant = Variant::parse(variant)?;
    let vertices = match what {
        TreeQuery::CensusImp => n,
        _ => n + max_unlabeled(n, variant),
    };
    if vertices > MAX_VERTICES {
        return Err(Error::OverBudget {
            vertices,
            cap: MAX_VERTICES,
        });
    }
    match what {
        TreeQuery::List => render::trees(&enumerate_greg(n, variant), format),
        TreeQuery::CensusUnl => render::poly(&unl_polynomial(n, variant), format),
        TreeQuery::CensusImp => {
            let rooted = match variant {
                Variant::Unrooted => false,
                Variant::Rooted => true,
                _ => {
                    return Err(Error::Unknown {
                        kind: "variant for census-imp (use rooted or unrooted)",
                        name: variant.name().to_string(),
                    })
                }
            };
            render::poly(&imp_polynomial(n, rooted), format)
        }
    }
}

fn cmd_series(name: &str, order: usize, deriv: usize, format: Format) -> Result<String, Error> {
    let base = match name {
        "T0" => series_t(0, order + deriv),
        "T1" | "T" => series_t(1, order + deriv),
        "T2" => series_t(2, order + deriv),
        "W" => series_w(order + deriv),
        _ => {
            return Err(Error::Unknown {
                kind: "series",
                name: name.to_string(),
            })
        }
    };
    let s = base.nth_derivative(deriv)?.truncate(order);
    render::series(&s, format)
}

fn cmd_wfun(z: f64, im: f64, deriv: usize, format: Format) -> Result<String, Error> {
    let e = eval_w(Complex64::new(z, im))?;
    let mut derivatives = Vec::with_capacity(deriv);
    if deriv > 0 {
        if im != 0.0 || !(z > 0.0) {
            return Err(Error::BranchCut(format!(
                "{z}{im:+}i: derivatives are only available for real z > 0"
            )));
        }
        let g = gen_g(deriv);
        for n in 1..=deriv {
            derivatives.push(nth_derivative_w(z, n, &g[n - 1])?);
        }
    }
    render::wfun(&e, &derivatives, format)
}
