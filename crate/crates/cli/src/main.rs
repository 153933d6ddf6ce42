//! `philotope`: the stylometric persistence pipeline, one subcommand per stage.

mod config;
mod error;
mod fetch;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::{info, LevelFilter};
use philotope::corpus::{load_corpus, preprocess, ProcessedCorpus, StopWords};
use philotope::distance::bottleneck;
use philotope::embedding::{embed_poet, Checkpoint, PointCloud, SkipGram};
use philotope::stats::{boxplot_svg, run_trials, TrialResults};
use philotope::synthetic::{sample, Shape};
use philotope::tda::{format_diagrams, parse_diagrams, rips_diagrams, DistanceMatrix, Metric, PersistenceDiagram};

use config::{ConfigFile, ExperimentArgs, ExperimentConfig, SEED_ENV};
use error::{read_text, write_text, CliError};

#[derive(Debug, Parser)]
#[command(name = "philotope", version, about = "Distances between literary styles from persistent homology of word embeddings")]
struct Cli {
    /// TOML file whose keys mirror the long flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// More log output on stderr (-v info, -vv debug); RUST_LOG overrides.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Download the sonnet dataset and lay it out as `<root>/<poet>/*.txt`.
    FetchCorpus {
        #[arg(long, default_value = fetch::DATASET_URL)]
        url: String,
        /// Convert an existing checkout instead of cloning.
        #[arg(long)]
        source: Option<PathBuf>,
        #[command(flatten)]
        exp: ExperimentArgs,
    },
    /// Tokenize, drop stop words, stem and balance the corpus.
    Preprocess {
        #[command(flatten)]
        exp: ExperimentArgs,
        /// Defaults to `<output-dir>/corpus.json`.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Overwrite an existing checkpoint.
        #[arg(long)]
        force: bool,
    },
    /// Train one embedding and write it with a point cloud per poet.
    Embed {
        #[command(flatten)]
        exp: ExperimentArgs,
        /// Processed corpus; defaults to `<output-dir>/corpus.json`.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Rips persistence diagrams of a point cloud file.
    Diagram {
        cloud: PathBuf,
        #[arg(long, default_value_t = Metric::Cosine)]
        metric: Metric,
        /// Highest homology dimension.
        #[arg(long, default_value_t = 0)]
        dim: usize,
        /// Largest filtration value; defaults to the diameter for `--dim` above 0.
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bottleneck distance between the diagrams of one dimension in two files.
    Bottleneck {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 0)]
        dim: usize,
    },
    /// Sample a circle, a noisy circle or two circles.
    Synthetic {
        shape: Shape,
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Gaussian standard deviation; 0.1 for noisy-circle, 0 otherwise.
        #[arg(long)]
        noise: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full experiment: trials, ANOVA and box plot in the output directory.
    Run {
        #[command(flatten)]
        exp: ExperimentArgs,
        /// Processed corpus; defaults to `<output-dir>/corpus.json`, created if absent.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// ANOVA and pairwise tables for a trials file.
    Stats {
        trials: PathBuf,
        /// Also write the analysis as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Box plot of a trials file as SVG.
    Plot {
        trials: PathBuf,
        #[arg(long, default_value = "boxplot.svg")]
        output: PathBuf,
        #[arg(long, default_value = "bottleneck distance")]
        y_label: String,
    },
}

fn experiment(cli_config: Option<&Path>, exp: &ExperimentArgs) -> Result<ExperimentConfig, CliError> {
    let file = match cli_config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    ExperimentConfig::resolve(exp, &file)
}

fn processed_path(cfg: &ExperimentConfig, explicit: Option<&PathBuf>) -> PathBuf {
    explicit.cloned().unwrap_or_else(|| cfg.output_dir.join("corpus.json"))
}

fn build_corpus(cfg: &ExperimentConfig) -> Result<ProcessedCorpus, CliError> {
    let raw = load_corpus(&cfg.corpus_root, &cfg.poets)?.balance(cfg.sonnets_per_poet)?;
    Ok(preprocess(&raw, &StopWords::spanish()))
}

fn load_processed(path: &Path, cfg: &ExperimentConfig) -> Result<ProcessedCorpus, CliError> {
    let corpus = ProcessedCorpus::load(path)?;
    for p in &cfg.poets {
        if corpus.poet(p).is_none() {
            return Err(CliError::Data(format!("poet {p} is not in {}", path.display())));
        }
    }
    Ok(corpus)
}

fn write_stdout_or(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write_text(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn seed_or_env(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg_path = cli.config.as_deref();
    match cli.command {
        Command::FetchCorpus { url, source, exp } => {
            let cfg = experiment(cfg_path, &exp)?;
            let tmp;
            let source = match source {
                Some(s) => s,
                None => {
                    tmp = std::env::temp_dir().join(format!("philotope-fetch-{}", std::process::id()));
                    fetch::clone(&url, &tmp)?;
                    tmp.clone()
                }
            };
            let counts = fetch::convert(&source, &cfg.corpus_root, &cfg.poets)?;
            for (p, n) in cfg.poets.iter().zip(&counts) {
                println!("{p}: {n} sonnets");
            }
            if counts.contains(&0) {
                return Err(CliError::Data("some poets have no sonnets".into()));
            }
        }
        Command::Preprocess { exp, output, force } => {
            let cfg = experiment(cfg_path, &exp)?;
            let out = processed_path(&cfg, output.as_ref());
            if out.exists() && !force {
                return Err(CliError::Usage(format!("{} exists; pass --force to overwrite", out.display())));
            }
            let corpus = build_corpus(&cfg)?;
            write_text(&out, &corpus.to_json())?;
            println!(
                "{} sonnets from {} poets -> {}",
                corpus.sonnet_count(),
                corpus.poets.len(),
                out.display()
            );
        }
        Command::Embed { exp, corpus } => {
            let cfg = experiment(cfg_path, &exp)?;
            let corpus = load_processed(&processed_path(&cfg, corpus.as_ref()), &cfg)?;
            let (vocabulary, matrix) = SkipGram::new(cfg.embedding).train::<f64>(&corpus)?;
            let path = cfg.output_dir.join("embedding.bin");
            std::fs::create_dir_all(&cfg.output_dir).map_err(|source| CliError::Write {
                path: cfg.output_dir.clone(),
                source,
            })?;
            for p in &cfg.poets {
                let cloud = embed_poet(&corpus, p, &vocabulary, &matrix)?;
                let header = [format!("poet={p}"), format!("seed={}", cfg.base_seed)];
                let cpath = cfg.output_dir.join(format!("cloud-{p}.txt"));
                write_text(&cpath, &cloud.to_text(&header))?;
                println!("{p}: {} points -> {}", cloud.len(), cpath.display());
            }
            Checkpoint {
                config: cfg.embedding,
                vocabulary,
                matrix,
            }
            .save(&path)?;
            println!("embedding -> {}", path.display());
        }
        Command::Diagram {
            cloud,
            metric,
            dim,
            threshold,
            output,
        } => {
            let pc = PointCloud::<f64>::from_text(&read_text(&cloud)?)
                .map_err(|e| CliError::Data(format!("{}: {e}", cloud.display())))?;
            let dm = DistanceMatrix::from_cloud(&pc, metric)?;
            let max_value = match threshold {
                Some(t) if t.is_nan() || t < 0.0 => return Err(CliError::Usage("threshold must be non-negative".into())),
                Some(t) => t,
                None if dim == 0 => f64::INFINITY,
                None => dm.max_distance(),
            };
            // Zero-persistence pairs from simultaneous insertions carry no
            // information and the bottleneck distance ignores them.
            let diagrams: Vec<_> = rips_diagrams(&dm, dim, max_value)?
                .into_iter()
                .map(|d| PersistenceDiagram::new(d.dim, d.points.into_iter().filter(|p| !p.is_diagonal()).collect()))
                .collect();
            let header = vec![
                ("metric".to_string(), metric.to_string()),
                ("threshold".to_string(), max_value.to_string()),
                ("points".to_string(), pc.len().to_string()),
            ];
            write_stdout_or(output.as_ref(), &format_diagrams(&header, &diagrams))?;
        }
        Command::Bottleneck { a, b, dim } => {
            let load = |p: &Path| {
                parse_diagrams::<f64>(&read_text(p)?)
                    .map(|f| f.diagram(dim))
                    .map_err(|e| CliError::Data(format!("{}: {e}", p.display())))
            };
            let d = bottleneck(&load(&a)?, &load(&b)?)?;
            println!("{}", report::significant(d));
        }
        Command::Synthetic {
            shape,
            n,
            noise,
            seed,
            output,
        } => {
            let noise = noise.unwrap_or(shape.default_noise());
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            if !(noise >= 0.0 && noise.is_finite()) {
                return Err(CliError::Usage("--noise must be finite and non-negative".into()));
            }
            let seed = seed_or_env(seed)?;
            let cloud = sample::<f64>(shape, n, noise, seed);
            let header = [format!("shape={shape}"), format!("noise={noise}"), format!("seed={seed}")];
            write_stdout_or(output.as_ref(), &cloud.to_text(&header))?;
        }
        Command::Run { exp, corpus } => {
            let cfg = experiment(cfg_path, &exp)?;
            let cpath = processed_path(&cfg, corpus.as_ref());
            let corpus = if cpath.exists() {
                load_processed(&cpath, &cfg)?
            } else {
                info!("no processed corpus at {}; preprocessing", cpath.display());
                let c = build_corpus(&cfg)?;
                write_text(&cpath, &c.to_json())?;
                c
            };
            let results: TrialResults<f64> = run_trials(&corpus, &cfg.trial_config())?;
            let dir = &cfg.output_dir;
            write_text(&dir.join("trials.csv"), &results.to_csv())?;
            let analysis = report::analyse(&results, Some(&cfg))?;
            write_text(&dir.join("anova.json"), &analysis.to_json())?;
            write_text(&dir.join("boxplot.svg"), &boxplot_svg(&results, "bottleneck distance"))?;
            print!("{}", analysis.tables());
            println!("\noutputs in {}", dir.display());
        }
        Command::Stats { trials, json } => {
            let r = TrialResults::<f64>::from_csv(&read_text(&trials)?)
                .map_err(|e| CliError::Data(format!("{}: {e}", trials.display())))?;
            let analysis = report::analyse::<()>(&r, None)?;
            if let Some(p) = json {
                write_text(&p, &analysis.to_json())?;
            }
            print!("{}", analysis.tables());
        }
        Command::Plot {
            trials,
            output,
            y_label,
        } => {
            let r = TrialResults::<f64>::from_csv(&read_text(&trials)?)
                .map_err(|e| CliError::Data(format!("{}: {e}", trials.display())))?;
            write_text(&output, &boxplot_svg(&r, &y_label))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let level = match cli.verbose {
        0 => LevelFilter::Warn,
        1 => LevelFilter::Info,
        _ => LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).parse_default_env().init();

    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        Err(_) => ExitCode::from(CliError::Internal(String::new()).exit_code()),
    }
}
