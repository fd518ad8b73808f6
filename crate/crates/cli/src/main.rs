//! `e6grad`: build the models, grade them, and run the full verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use e6grad::composition::CompositionKind;
use e6grad::gradings::{verify_named_grading, GradingName, ModelName, Models};
use e6grad::liemodels::{build_albert, build_chevalley_form, build_flag, build_tits, Part};
use e6grad::report::{verify_all, VerifyOptions};
use e6grad::structalg::{check_lie, killing_signature, AlgebraTable, AlgebraTableJson};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] e6grad::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Parser, Debug)]
#[command(name = "e6grad", version, about = "Exact models of e6(-14) and its fine gradings")]
struct Cli {
    /// Write the JSON result to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print JSON on stdout instead of a text summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a model and write its structure constants.
    Build {
        #[command(subcommand)]
        model: BuildModel,
    },
    /// Build a named grading on a model and verify it.
    Grade { model: String, grading: String },
    /// Run every check and print the summary table.
    VerifyAll {
        #[arg(long)]
        include_sp8: bool,
        #[arg(long)]
        include_twist: bool,
        #[arg(long)]
        include_split_octonions: bool,
    },
}

#[derive(Subcommand, Debug)]
enum BuildModel {
    Albert {
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        epsilon: i64,
    },
    Tits {
        /// Use the split octonions.
        #[arg(long)]
        split: bool,
    },
    Flag,
    Chevalley {
        /// Square root of 1 in the torus, as six signs.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-1,1,1,1,1,1")]
        t: Vec<i64>,
    },
}

fn parts_json(parts: &[Part]) -> Value {
    json!(parts.iter().map(|p| json!({"name": p.name, "start": p.start, "dim": p.dim})).collect::<Vec<_>>())
}

fn cache_path(key: &str) -> Option<PathBuf> {
    std::env::var_os("E6GRAD_CACHE").map(|d| Path::new(&d).join(format!("{key}.json")))
}

fn build_model(model: &BuildModel) -> Result<Value, CliError> {
    let (key, params) = match model {
        BuildModel::Albert { epsilon } => (format!("albert_eps{epsilon}"), json!({"epsilon": epsilon})),
        BuildModel::Tits { split } => (format!("tits_split{split}"), json!({"split": split})),
        BuildModel::Flag => ("flag".to_string(), json!({})),
        BuildModel::Chevalley { t } => (
            format!("chevalley_{}", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_")),
            json!({"t": t}),
        ),
    };
    if let Some(p) = cache_path(&key) {
        if p.exists() {
            let v: Value = serde_json::from_str(&fs::read_to_string(&p)?)?;
            let t: AlgebraTableJson = serde_json::from_value(v["table"].clone())?;
            AlgebraTable::from_json(&t)?;
            return Ok(v);
        }
    }
    let (name, parts, table) = match model {
        BuildModel::Albert { epsilon } => {
            if *epsilon != 1 && *epsilon != -1 {
                return Err(CliError::Usage("--epsilon must be 1 or -1".into()));
            }
            let m = build_albert(*epsilon)?;
            ("albert", m.parts(), m.table().clone())
        }
        BuildModel::Tits { split } => {
            let kind = if *split { CompositionKind::SplitOctonion } else { CompositionKind::Octonion };
            let m = build_tits(kind)?;
            ("tits", m.parts(), m.table().clone())
        }
        BuildModel::Flag => {
            let m = build_flag()?;
            ("flag", m.parts(), m.table().clone())
        }
        BuildModel::Chevalley { t } => {
            let s: [i64; 6] = t
                .as_slice()
                .try_into()
                .map_err(|_| CliError::Usage("--t needs six entries".into()))?;
            if s.iter().any(|&x| x != 1 && x != -1) {
                return Err(CliError::Usage("--t entries must be 1 or -1".into()));
            }
            let m = build_chevalley_form(s)?;
            ("chevalley", vec![Part::new("all", 0, m.table().dim())], m.table().clone())
        }
    };
    let v = json!({
        "model": name,
        "params": params,
        "dim": table.dim(),
        "parts": parts_json(&parts),
        "jacobi": check_lie(&table).passed,
        "signature": killing_signature(&table)?,
        "table": table.to_json(),
    });
    if let Some(p) = cache_path(&key) {
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir)?;
        }
        fs::write(&p, serde_json::to_string(&v)?)?;
    }
    Ok(v)
}

fn grade(model: &str, grading: &str) -> Result<(Value, bool), CliError> {
    let m: ModelName = model.parse().map_err(|e: e6grad::Error| CliError::Usage(e.to_string()))?;
    let g: GradingName = grading.parse().map_err(|e: e6grad::Error| CliError::Usage(e.to_string()))?;
    if g.model() != m {
        return Err(CliError::Usage(format!("{g} lives on the {} model, not {m}", g.model())));
    }
    let models = Models::new();
    let (dec, rep) = verify_named_grading(g, &models, None)?;
    let ok = rep.passed();
    Ok((json!({"report": rep, "grading": dec.to_json()}), ok))
}

fn emit(cli: &Cli, v: &Value, text: &str) -> Result<(), CliError> {
    let s = serde_json::to_string_pretty(v)?;
    if let Some(p) = &cli.out {
        fs::write(p, &s)?;
    }
    if cli.json {
        println!("{s}");
    } else {
        print!("{text}");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.cmd {
        Cmd::Build { model } => {
            let v = build_model(model)?;
            let parts: Vec<String> = v["parts"]
                .as_array()
                .map(|a| a.iter().map(|p| format!("{}={}", p["name"].as_str().unwrap_or("?"), p["dim"])).collect())
                .unwrap_or_default();
            let text = format!(
                "{} dim {} jacobi {} signature {}\nparts {}\n",
                v["model"].as_str().unwrap_or("?"),
                v["dim"],
                v["jacobi"],
                v["signature"],
                parts.join(" ")
            );
            emit(cli, &v, &text)?;
            Ok(v["jacobi"].as_bool().unwrap_or(false))
        }
        Cmd::Grade { model, grading } => {
            let (v, ok) = grade(model, grading)?;
            let r = &v["report"];
            let text = format!(
                "{} on {}: type {} group {} interval {} ({})\n",
                r["name"].as_str().unwrap_or("?"),
                model,
                r["type_vector"],
                r["universal_group"].as_str().unwrap_or("?"),
                r["interval"]["interval"].as_str().unwrap_or("?"),
                if ok { "ok" } else { "FAILED" }
            );
            emit(cli, &v, &text)?;
            Ok(ok)
        }
        Cmd::VerifyAll {
            include_sp8,
            include_twist,
            include_split_octonions,
        } => {
            let rep = verify_all(&VerifyOptions {
                include_sp8: *include_sp8,
                include_twist: *include_twist,
                include_split_octonions: *include_split_octonions,
            })?;
            let v = serde_json::to_value(&rep)?;
            emit(cli, &v, &rep.human())?;
            Ok(rep.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
