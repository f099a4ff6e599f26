//! `tanabe`: command line access to Tanabe algebra computations.

use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use tanabe_core::action::phi_vector;
use tanabe_core::bratteli::{build_tower_to, dims};
use tanabe_core::group::centralizer_dim;
use tanabe_core::limits::Limits;
use tanabe_core::spectrum::{compare_jm, jm_operators};
use tanabe_core::tanabe::{classify, multiply, tanabe_basis};
use tanabe_core::verify::{run_suite, VerifyConfig};
use tanabe_core::{Basis, Diagram, DiagramVector, Error, Level, TanabeParams};

#[derive(Parser)]
#[command(name = "tanabe", version, about = "Exact computations in Tanabe algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    n: usize,
}

impl ParamArgs {
    fn params(self) -> Result<TanabeParams, Error> {
        TanabeParams::new(self.r, self.p, self.n)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Diagram,
    X,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Diagram => Basis::Diagram,
            BasisArg::X => Basis::X,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    /// Pi diagrams with at most n blocks, plus Lambda
    Pi,
    /// Every diagram with a nonzero class
    Span,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List Tanabe basis diagrams at a level
    Basis {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        two_l: usize,
        #[arg(long, value_enum, default_value = "pi")]
        set: ClassArg,
    },
    /// Classify a diagram as Pi, Lambda, Theta or None
    Classify {
        #[command(flatten)]
        params: ParamArgs,
        diagram: String,
    },
    /// Multiply two vectors such as `2 * {1,1'} - {1};{1'}`
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "x")]
        basis: BasisArg,
        left: String,
        right: String,
        /// Also print the tensor action of the product as exact fractions
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Emit the Bratteli tower up to level two_l / 2
    Bratteli {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        two_l: usize,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Irreducible dimensions and path counts at a level
    Dims {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        two_l: usize,
    },
    /// Dimension of the group centralizer on the tensor space
    CentralizerDim {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        two_l: usize,
    },
    /// Predicted and computed joint spectra of the JM elements
    JmSpectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        two_l: usize,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Run the verification grid and print a JSON report
    Verify {
        #[arg(long)]
        only: Option<String>,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

/// Verification failures that are not errors.
struct Failed;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_) | Error::Params(_) | Error::Dimension(_) | Error::BasisMismatch(_)) => 2,
        Some(Error::SizeLimit(_)) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn stable_tower_check(params: TanabeParams, level: Level) -> Result<(), Error> {
    if Limits::from_env().tower_stable_only && level.two_l() > 2 * (params.n / 2) {
        return Err(Error::SizeLimit(format!(
            "two_l = {} exceeds 2·floor(n/2) = {}",
            level.two_l(),
            2 * (params.n / 2)
        )));
    }
    Ok(())
}

fn run(cmd: Command) -> anyhow::Result<Result<(), Failed>> {
    match cmd {
        Command::Basis { params, two_l, set } => {
            let b = tanabe_basis(Level::from_two_l(two_l), params.params()?)?;
            match set {
                ClassArg::Pi => b.pi_basis.iter().for_each(|d| println!("{d}")),
                ClassArg::Span => b.spanning().iter().for_each(|d| println!("{d}")),
                ClassArg::All => b.classified.iter().for_each(|(d, c)| println!("{d}\t{c}")),
            }
        }
        Command::Classify { params, diagram } => {
            let d: Diagram = diagram.parse()?;
            println!("{}", classify(&d, params.params()?));
        }
        Command::Multiply { n, basis, left, right, dump_matrix } => {
            let a = DiagramVector::parse(&left, basis.into()).context("left operand")?;
            let b = DiagramVector::parse(&right, basis.into()).context("right operand")?;
            let prod = multiply(&a, &b, n)?;
            println!("{prod}");
            if dump_matrix {
                println!("{}", phi_vector(&prod, n)?.to_json());
            }
        }
        Command::Bratteli { params, two_l, dot, json } => {
            let pr = params.params()?;
            let level = Level::from_two_l(two_l);
            stable_tower_check(pr, level)?;
            let g = build_tower_to(pr, level)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&g.to_json())?);
            } else if dot {
                print!("{}", g.to_dot());
            } else {
                for (t, nodes) in g.levels.iter().enumerate() {
                    let labels: Vec<&str> = nodes.iter().map(|x| x.label.as_str()).collect();
                    println!("{}: {}", Level::from_two_l(t), labels.join("  "));
                }
            }
        }
        Command::Dims { params, two_l } => {
            let pr = params.params()?;
            let level = Level::from_two_l(two_l);
            stable_tower_check(pr, level)?;
            let t = dims(&build_tower_to(pr, level)?, level)?;
            println!("node\tdim\tpaths");
            for row in &t.rows {
                println!("{}\t{}\t{}", row.label, row.irrep_dim, row.path_count);
            }
            println!("sum dim*paths = {}", t.sum_dim_paths);
            println!("sum paths^2 = {}", t.sum_paths_sq);
        }
        Command::CentralizerDim { params, two_l } => {
            let pr = params.params()?;
            let level = Level::from_two_l(two_l);
            let c = centralizer_dim(pr, level)?;
            let pi = tanabe_basis(level, pr)?.pi_basis.len();
            let verdict = if c == pi { "matches" } else { "differs from" };
            println!("{c} ({verdict} |Π_{level}{pr}| = {pi})");
        }
        Command::JmSpectrum { params, two_l, dump_matrix } => {
            let pr = params.params()?;
            let level = Level::from_two_l(two_l);
            if level.two_l() == 0 {
                return Err(anyhow!(Error::Params("JM elements start at level 1/2".into())));
            }
            stable_tower_check(pr, level)?;
            let c = compare_jm(pr, level)?;
            println!("tuple\tpredicted\tcomputed");
            for row in &c.rows {
                let t: Vec<String> = row.tuple.iter().map(i64::to_string).collect();
                println!("({})\t{}\t{}", t.join(","), row.predicted, row.computed);
            }
            println!("total computed = {} of {}", c.computed_total(), c.tensor_dim);
            if dump_matrix {
                for (j, m) in jm_operators(pr, level)?.iter().enumerate() {
                    println!("M[{j}] = {}", m.to_json());
                }
            }
            if !c.passed() {
                return Ok(Err(Failed));
            }
        }
        Command::Verify { only, inject_fault, seed } => {
            let report = run_suite(&VerifyConfig { only, inject_fault, seed })?;
            println!("{}", serde_json::to_string_pretty(&report.to_json())?);
            if !report.passed() {
                return Ok(Err(Failed));
            }
        }
    }
    Ok(Ok(()))
}
