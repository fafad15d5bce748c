use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dinf_nichols::classify::{family_from_args, theorem_table, FamilyInstance, ParamGrid};
use dinf_nichols::field::{CyclotomicField, DEFAULT_ORDER};
use dinf_nichols::nichols::{growth_fit, BraidedSpace};
use dinf_nichols::repn::{alambda_report, ALambdaReport};
use dinf_nichols::verify::{self, Suite, VerifyOptions};
use dinf_nichols::ydmod::braiding_table_check;

#[derive(Parser)]
#[command(name = "dinf", version, about = "Yetter-Drinfeld modules and Nichols algebras over the infinite dihedral group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// h-class, g-class, gh-class or one-class
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<u64>,
    /// a = rho(h^n), e.g. -1, 2, z^4
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// sign, eps, s0+, s0-, slam+, slam-
    #[arg(long)]
    rep: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    zeta_order: u32,
}

impl FamilyArgs {
    fn build(&self) -> Result<FamilyInstance> {
        let k = CyclotomicField::new(self.zeta_order)?;
        Ok(family_from_args(
            &k,
            &self.family,
            self.n,
            self.a.as_deref(),
            self.rep.as_deref(),
            self.lambda.as_deref(),
        )?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structure of A_lambda as JSON.
    Alambda {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// structure, idempotents, radical or simples
        #[arg(long, default_value = "structure")]
        report: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        zeta_order: u32,
    },
    /// Braiding table of one module on a window of basis vectors.
    Braiding {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 8)]
        window: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded dimensions of the Nichols algebra (CSV) and a growth estimate (JSON).
    Nichols {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Classify every module in a parameter grid.
    Classify {
        #[arg(long)]
        all: bool,
        /// JSON grid: {"order": 12, "n": [..], "a": [..], "lambda": [..]}
        #[arg(long)]
        grid: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        zeta_order: Option<u32>,
    },
    /// Run property suites; exits nonzero on any failure.
    Verify {
        /// braid, yd, tables, alambda or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        window: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        zeta_order: u32,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Alambda { lambda, report, zeta_order } => {
            let k = CyclotomicField::new(zeta_order)?;
            let lambda = k.parse(&lambda)?;
            let report: ALambdaReport = report.parse()?;
            println!("{}", serde_json::to_string_pretty(&alambda_report(&lambda, report)?)?);
        }
        Command::Braiding { family, window, format } => {
            let f = family.build()?;
            let m = &f.module;
            let basis = m.window_basis(window);
            let mut rows = Vec::new();
            for &v in &basis {
                for &w in &basis {
                    rows.push((v, w, m.braid(v, w)?));
                }
            }
            let check = braiding_table_check(m, window)?;
            match format {
                Format::Json => {
                    let braiding: Vec<_> = rows
                        .iter()
                        .map(|(v, w, t)| serde_json::json!({"left": v, "right": w, "value": t}))
                        .collect();
                    let out = serde_json::json!({
                        "family": f.label(),
                        "support": m.support().label(),
                        "window": window,
                        "braiding": braiding,
                        "matrix": m.diagonal_type().ok().flatten().map(|q| q.to_rows()),
                        "table_check": check,
                    });
                    println!("{}", serde_json::to_string_pretty(&out)?);
                }
                Format::Text | Format::Csv => {
                    println!("# {} on {}", f.label(), m.support().label());
                    for (v, w, t) in &rows {
                        println!("c({v}⊗{w}) = {t}");
                    }
                    match check.first_mismatch() {
                        None => println!("# closed-form table: agrees"),
                        Some(x) => println!(
                            "# closed-form table: disagrees, e.g. c({}⊗{}) computed {} vs table {}",
                            x.left, x.right, x.computed, x.table
                        ),
                    }
                }
            }
        }
        Command::Nichols { family, max_degree } => {
            let f = family.build()?;
            let space = BraidedSpace::from_module(&f.module)?;
            let dims = space.graded_dims(max_degree)?;
            print!("{}", dims.to_csv());
            let fit = growth_fit(&dims).ok();
            let out = serde_json::json!({
                "family": f.label(),
                "dims": dims.dims,
                "growth_fit": fit,
                "estimate": true,
            });
            println!("{}", serde_json::to_string(&out)?);
        }
        Command::Classify { all, grid, format, zeta_order } => {
            if !all {
                bail!("classify needs --all (single families: use `nichols` or `braiding`)");
            }
            let mut g = match grid {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    ParamGrid::from_json(&text)?
                }
                None => ParamGrid::default(),
            };
            if let Some(order) = zeta_order {
                g.order = order;
            }
            let report = theorem_table(&g)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()),
                Format::Text => print!("{}", report.to_text()),
            }
        }
        Command::Verify { suite, window, seed, zeta_order } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions { window, seed, order: zeta_order };
            let results = verify::run(suite, &opts)?;
            let failed = results.iter().filter(|r| !r.passed).count();
            for r in &results {
                println!("{r}");
            }
            println!("{} checks, {} failed", results.len(), failed);
            if failed > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

