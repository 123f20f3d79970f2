use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ellfan::battery;
use ellfan::formats::{self, CliError, CoordSpec, FanFile};
use ellfan_core::cech::{build_complex, fiber_complex, global_sections, support_stratification};
use ellfan_core::epoints::TorusPoint;
use ellfan_core::Error;
use ellfan_core::fan::{Cone, Fan};
use ellfan_core::local_model::hh_chart;
use ellfan_core::localization::{fixed_subfan, identity_fiber_check, t_of_e, verify_localization};

#[derive(Parser)]
#[command(
    name = "ellfan",
    version,
    about = "Exact equivariant elliptic homology sheaves of smooth toric fans"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the JSON document to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Cap on the number of maximal cones accepted into the nerve.
    #[arg(long, global = true, env = "ELLFAN_MAX_CONES", default_value_t = 20)]
    max_cones: usize,
    /// Treat the fan as complete even if its file does not say so.
    #[arg(long, global = true)]
    assume_complete: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check primitivity, smoothness and the face and wall conditions.
    Validate { fan: PathBuf },
    /// Dual weight data of every maximal chart.
    Charts { fan: PathBuf },
    /// Sheaf term of a single chart, chosen by its ray indices.
    ChartHh {
        fan: PathBuf,
        /// Comma-separated ray indices of the cone (omit for the origin).
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        cone: Vec<String>,
    },
    /// Terms of the sheaf complex over the nerve of the fan.
    Sheaf { fan: PathBuf },
    /// Bigraded dimensions of the derived fiber at a point.
    Fiber {
        fan: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Global sections complex and its cohomology.
    Gamma { fan: PathBuf },
    /// Distinct support subgroups appearing in the complex.
    Strata { fan: PathBuf },
    /// Smallest algebraic subgroup whose trivializing locus holds the point.
    Tsub { point: PathBuf },
    /// Faces of the fan fixed under the subgroup attached to a point.
    Fixed {
        fan: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Compare the full complex with the fixed one at every probe point.
    Localize {
        fan: PathBuf,
        #[arg(long)]
        point: PathBuf,
    },
    /// Identity fiber total against the Betti numbers of a complete fan.
    IdentityCheck { fan: PathBuf },
    /// Run the acceptance battery and print one line per check.
    Selftest {
        /// Only run checks whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
    },
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn load_fan(path: &Path, force_complete: bool) -> Result<(String, Fan), CliError> {
    let text = read_text(path)?;
    let file: FanFile = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let fan = file.build(force_complete)?;
    Ok((file.label(), fan))
}

fn load_point(path: &Path, rank: Option<usize>) -> Result<TorusPoint, CliError> {
    let text = read_text(path)?;
    let coords: Vec<CoordSpec> = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
    let point = formats::parse_point(&coords)?;
    if let Some(r) = rank {
        if point.rank() != r {
            return Err(Error::AmbientRankMismatch { left: r, right: point.rank() }.into());
        }
    }
    Ok(point)
}

fn to_value<T: serde::Serialize>(doc: &T) -> serde_json::Value {
    serde_json::to_value(doc).expect("documents serialize")
}

fn run(cli: &Cli) -> Result<serde_json::Value, CliError> {
    let cap = cli.max_cones;
    match &cli.cmd {
        Cmd::Validate { fan } => {
            let (name, fan) = load_fan(fan, cli.assume_complete)?;
            Ok(to_value(&formats::validate_doc(&name, &fan)))
        }
        Cmd::Charts { fan } => {
            let (name, fan) = load_fan(fan, cli.assume_complete)?;
            fan.require_valid()?;
            let mut charts = Vec::new();
            for cone in fan.max_cones() {
                let w = fan.chart_weights(cone)?;
                charts.push(formats::chart_doc(cone.ray_indices(), &w));
            }
            Ok(to_value(&formats::ChartsDoc { name, rank: fan.rank(), charts }))
        }
        Cmd::ChartHh { fan, cone } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            fan.require_valid()?;
            let mut indices = Vec::new();
            for part in cone.iter().filter(|s| !s.trim().is_empty()) {
                let idx: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| CliError::parse(format!("bad ray index `{part}`")))?;
                indices.push(idx);
            }
            let cone = Cone::new(indices);
            if !fan.is_face(&cone) {
                return Err(Error::NotAFace.into());
            }
            let term = hh_chart(&fan.chart_weights(&cone)?)?;
            Ok(to_value(&formats::ChartHhDoc {
                cone: cone.ray_indices().to_vec(),
                total_rank: term.total_rank(),
                term: formats::term_doc(cone.ray_indices(), &term),
            }))
        }
        Cmd::Sheaf { fan } => {
            let (name, fan) = load_fan(fan, cli.assume_complete)?;
            let cx = build_complex(&fan, cap)?;
            Ok(to_value(&formats::sheaf_doc(&name, &cx)))
        }
        Cmd::Fiber { fan, point } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let e = load_point(point, Some(fan.rank()))?;
            let cx = build_complex(&fan, cap)?;
            let fib = fiber_complex(&cx, &e)?;
            Ok(to_value(&formats::fiber_doc(&fib)))
        }
        Cmd::Gamma { fan } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let cx = build_complex(&fan, cap)?;
            let gamma = global_sections(&cx)?;
            Ok(to_value(&formats::gamma_doc(&gamma)))
        }
        Cmd::Strata { fan } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let cx = build_complex(&fan, cap)?;
            let strata: Vec<_> =
                support_stratification(&cx).iter().map(formats::support_doc).collect();
            Ok(to_value(&formats::StrataDoc { count: strata.len(), strata }))
        }
        Cmd::Tsub { point } => {
            let e = load_point(point, None)?;
            Ok(to_value(&formats::tsub_doc(&t_of_e(&e))))
        }
        Cmd::Fixed { fan, point } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let e = load_point(point, Some(fan.rank()))?;
            let report = fixed_subfan(&fan, &e)?;
            Ok(to_value(&formats::fixed_doc(&report)))
        }
        Cmd::Localize { fan, point } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let e = load_point(point, Some(fan.rank()))?;
            let report = verify_localization(&fan, &e, cap)?;
            Ok(to_value(&formats::localize_doc(&report)))
        }
        Cmd::IdentityCheck { fan } => {
            let (_, fan) = load_fan(fan, cli.assume_complete)?;
            let check = identity_fiber_check(&fan, cap)?;
            Ok(to_value(&formats::identity_doc(&check)))
        }
        Cmd::Selftest { .. } => unreachable!("handled in main"),
    }
}

fn emit(cli: &Cli, value: &serde_json::Value) -> Result<(), CliError> {
    let mut text = if cli.pretty {
        serde_json::to_string_pretty(value).expect("values print")
    } else {
        serde_json::to_string(value).expect("values print")
    };
    text.push('\n');
    match &cli.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_selftest(only: Option<&str>) -> ExitCode {
    let results = battery::run_all(only);
    if results.is_empty() {
        eprintln!("no checks match the filter");
        return ExitCode::FAILURE;
    }
    let mut ok = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status} {} - {}", r.name, r.detail);
        ok &= r.passed;
    }
    if ok {
        println!("{} checks passed", results.len());
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Cmd::Selftest { only } = &cli.cmd {
        return run_selftest(only.as_deref());
    }
    match run(&cli) {
        Ok(value) => match emit(&cli, &value) {
            Ok(()) => ExitCode::SUCCESS,
            Err(err) => {
                eprintln!("{}", err.message);
                ExitCode::FAILURE
            }
        },
        Err(err) => {
            let doc = serde_json::json!({ "error": err });
            println!("{}", serde_json::to_string(&doc).expect("error documents print"));
            ExitCode::FAILURE
        }
    }
}
