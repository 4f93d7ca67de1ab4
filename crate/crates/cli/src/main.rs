use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use sytq::deformed::deformed_multinomial;
use sytq::genfun::{gmdn_fake_degree, syt_gf, wreath_fake_degree};
use sytq::mutations::{strong_poset, weak_poset};
use sytq::tableau::{canonical_orbit_tableaux, enumerate, enumerate_blocks};
use sytq::verify;
use sytq::zeros::{support_des, support_gmdn, support_type_a, support_wreath, verify_support};
use sytq::{par, BlockShape, Partition, QPoly, SkewShape, Tableau};

#[derive(Parser)]
#[command(name = "sytq", version, about = "Major index generating functions of standard tableaux and fake degrees of G(m,d,n)")]
struct Cli {
    /// Worker threads for batch work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Weak,
    Strong,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    Maj,
    Des,
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// A partition such as `4,2`, or a skew shape `outer/inner`.
    #[arg(long)]
    shape: Option<SkewShape>,
    /// Blocks separated by `|`, e.g. `2|3,1` or `|3,3`.
    #[arg(long)]
    blocks: Option<BlockShape>,
}

#[derive(Subcommand)]
enum Command {
    /// Maj generating function of a shape, or the fake degree of a block tuple.
    Fakedeg {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: PolyFormat,
    },
    /// Predicted support of a generating function.
    Support {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Statistic for `--shape`.
        #[arg(long, value_enum, default_value = "maj")]
        stat: Stat,
        /// Compare with the support found by enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// List standard tableaux with statistics.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "maj")]
        stats: Vec<Stat>,
    },
    /// Hasse diagram of the weak or strong poset on SYT(λ).
    Poset {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_enum, default_value = "weak")]
        order: Order,
        #[arg(long, value_enum, default_value = "dot")]
        format: PosetFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Deformed q-multinomial of a weak composition.
    Deformed {
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: PolyFormat,
    },
    /// Run oracle suites; exits 1 on any mismatch.
    Verify {
        /// One of the suite names, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Reports an argument error with usage text and exits with status 2.
fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(clap::error::ErrorKind::ValueValidation, msg)
        .exit()
}

fn block_args(blocks: &BlockShape, m: Option<usize>, d: usize) -> usize {
    let m = m.unwrap_or(blocks.m());
    if m != blocks.m() {
        usage_error(format!("--m {m} but {blocks} has {} blocks", blocks.m()));
    }
    if d == 0 || m % d != 0 {
        usage_error(format!("--d {d} does not divide --m {m}"));
    }
    m
}

fn straight(shape: &SkewShape) -> Partition {
    if !shape.is_straight() {
        usage_error(format!("{shape} is not a straight shape"));
    }
    shape.outer().clone()
}

/// Writes to standard output, exiting quietly once the reader has gone away.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn print_poly(p: &QPoly, format: PolyFormat) {
    match format {
        PolyFormat::Json => emit(&format!("{}\n", p.to_json())),
        PolyFormat::Text => emit(&format!("{p}\n")),
    }
}

fn gf(values: impl Iterator<Item = usize>) -> QPoly {
    values.map(QPoly::monomial).sum()
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Fakedeg { target, m, d, format } => {
            let p = match (target.shape, target.blocks) {
                (Some(s), _) => syt_gf(&straight(&s)),
                (_, Some(b)) => {
                    let m = block_args(&b, m, d);
                    if d == 1 {
                        wreath_fake_degree(&b, m)
                    } else {
                        gmdn_fake_degree(&b, m, d)
                    }
                    .unwrap_or_else(|e| usage_error(e))
                }
                _ => unreachable!("clap enforces one target"),
            };
            print_poly(&p, format);
        }
        Command::Support { target, m, d, stat, verify } => {
            let (name, prediction, actual) = match (target.shape, target.blocks) {
                (Some(s), _) => {
                    let pred = match stat {
                        Stat::Maj => support_type_a(&straight(&s)),
                        Stat::Des => support_des(&s),
                    };
                    let actual = verify.then(|| {
                        let tabs = enumerate(&s).unwrap_or_else(|e| usage_error(e));
                        match stat {
                            Stat::Maj => gf(tabs.map(|t| t.maj())),
                            Stat::Des => gf(tabs.map(|t| t.des())),
                        }
                    });
                    (s.to_string(), pred, actual)
                }
                (_, Some(b)) => {
                    let m = block_args(&b, m, d);
                    if b.n() == 0 {
                        usage_error("block tuple has no cells");
                    }
                    let pred = if d == 1 { support_wreath(&b, m) } else { support_gmdn(&b, m, d) }
                        .unwrap_or_else(|e| usage_error(e));
                    let actual = verify.then(|| {
                        let tabs = canonical_orbit_tableaux(&b, d).unwrap_or_else(|e| usage_error(e));
                        gf(tabs.into_iter().map(|(t, b)| b + m * t.maj()))
                    });
                    (b.to_string(), pred, actual)
                }
                _ => unreachable!("clap enforces one target"),
            };
            match actual {
                None => emit(&format!("{}\n", json!({ "degrees": prediction.degrees }))),
                Some(actual) => {
                    let report = verify_support(name, &prediction, &actual);
                    emit(&format!("{}\n", report.to_json()));
                    if !report.equal {
                        return ExitCode::from(1);
                    }
                }
            }
        }
        Command::Enumerate { target, stats } => {
            let tabs: Box<dyn Iterator<Item = Tableau>> = match (target.shape, target.blocks) {
                (Some(s), _) => Box::new(enumerate(&s).unwrap_or_else(|e| usage_error(e))),
                (_, Some(b)) => Box::new(enumerate_blocks(&b).unwrap_or_else(|e| usage_error(e))),
                _ => unreachable!("clap enforces one target"),
            };
            let mut unique: Vec<Stat> = Vec::new();
            for s in stats {
                if !unique.contains(&s) {
                    unique.push(s);
                }
            }
            for t in tabs {
                let mut line = t.to_string();
                for s in &unique {
                    match s {
                        Stat::Maj => line.push_str(&format!(" maj={}", t.maj())),
                        Stat::Des => line.push_str(&format!(" des={}", t.des())),
                    }
                }
                emit(&format!("{line}\n"));
            }
        }
        Command::Poset { shape, order, format, output } => {
            let poset = match order {
                Order::Weak => weak_poset(&shape),
                Order::Strong => strong_poset(&shape),
            }
            .unwrap_or_else(|e| usage_error(e));
            let text = match format {
                PosetFormat::Dot => poset.to_dot(),
                PosetFormat::Json => poset.to_json() + "\n",
            };
            match output {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => emit(&text),
            }
        }
        Command::Deformed { alpha, d, format } => {
            if d == 0 || alpha.len() % d != 0 {
                usage_error(format!("--d {d} does not divide the number of parts {}", alpha.len()));
            }
            let p = deformed_multinomial(&alpha, d).unwrap_or_else(|e| usage_error(e));
            print_poly(&p, format);
        }
        Command::Verify { suite, max_n, json } => {
            let Some(reports) = verify::run_suite(&suite, max_n) else {
                usage_error(format!(
                    "unknown suite {suite:?}; expected all or one of {}",
                    verify::SUITES.join(", ")
                ));
            };
            if json {
                emit(&format!("{}\n", serde_json::to_string(&reports).expect("serializable")));
            } else {
                for r in &reports {
                    emit(&format!("{}\n", r.summary()));
                }
            }
            if !reports.iter().all(|r| r.passed()) {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let mut msg = e.render().to_string();
            if !msg.contains("Usage:") {
                msg.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            eprint!("{msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            usage_error("--threads must be positive");
        }
        par::set_threads(n);
    }
    run(cli)
}
