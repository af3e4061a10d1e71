//! `matreg`: exact matroid invariants, symbolic-power regularity, and
//! verification suites on the command line.
//!
//! Exit codes: 0 success/all-pass, 1 findings present, 2 usage/parse error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use matreg::arboricity;
use matreg::error::Error;
use matreg::families;
use matreg::ideal;
use matreg::io;
use matreg::regularity::{self, Budget};
use matreg::subsets;
use matreg::suites::{self, SuiteOptions};
use matreg::Matroid;

#[derive(Parser)]
#[command(name = "matreg", version, about = "matroid invariants and regularity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant profile of a matroid file
    Analyze {
        path: PathBuf,
        /// largest symbolic power in the regularity table
        #[arg(long, default_value_t = 3)]
        t_max: u32,
    },
    /// Run a verification suite over a family stream
    Verify {
        #[arg(long)]
        suite: String,
        /// exhaustive enumeration cap (labeled matroids on 1..=n)
        #[arg(long, default_value_t = 4)]
        exhaustive_n: usize,
        /// symbolic powers, e.g. `2`, `1,3`, or `1..3` (inclusive)
        #[arg(long, default_value = "1..3")]
        t: String,
        /// field characteristics, comma separated
        #[arg(long, default_value = "2")]
        p: String,
        /// accepted randomized trials per lemma (degree_lemmas)
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 0x6d617472)]
        seed: u64,
        /// include the curated 5/6-element list (regsym)
        #[arg(long)]
        curated: bool,
        /// cross-check against the Betti oracle (regsym)
        #[arg(long)]
        betti: bool,
        /// machine-readable tab-separated output
        #[arg(long)]
        tsv: bool,
        /// disable instance-level parallelism
        #[arg(long)]
        sequential: bool,
    },
    /// Regularity of a symbolic power, by one or all methods
    Reg {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        #[arg(long, default_value_t = 2)]
        p: u32,
        /// extra search margin above c(M)(t-1); default c(M)
        #[arg(long)]
        slack: Option<i64>,
        #[arg(long)]
        tsv: bool,
    },
    /// Reduced homology of a complex file over GF(p)
    Homology {
        path: PathBuf,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Minimal generators of a symbolic power
    Ideal {
        path: PathBuf,
        #[arg(long, default_value_t = 1)]
        t: u32,
    },
    /// Arboricity, gamma, and the bound a(M) <= c(M*)
    Arbor { path: PathBuf },
    /// Enumerate all labeled matroids on [n]
    Enumerate {
        #[arg(long)]
        n: usize,
        /// `stdout` (default) or `files`
        #[arg(long, default_value = "stdout")]
        emit: String,
        /// output directory for --emit files
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Takayama,
    Betti,
    All,
}

fn main() -> ExitCode {
    match run() {
        Ok(findings) => {
            if findings {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn budget_from_env() -> Budget {
    match std::env::var("MATREG_BUDGET").ok().and_then(|v| v.parse().ok()) {
        Some(cap) => Budget::capped(cap),
        None => Budget::unlimited(),
    }
}

/// Ok(true) means the command completed but produced findings (exit 1).
fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { path, t_max } => {
            let m = io::parse_matroid(&read(&path)?)?;
            analyze(&m, t_max)?;
            Ok(false)
        }
        Command::Verify {
            suite,
            exhaustive_n,
            t,
            p,
            samples,
            seed,
            curated,
            betti,
            tsv,
            sequential,
        } => {
            let opts = SuiteOptions {
                exhaustive_n,
                t_list: parse_range(&t)?,
                p_list: parse_list(&p)?,
                samples,
                seed,
                curated,
                with_betti: betti,
                parallel: !sequential,
                budget_cap: std::env::var("MATREG_BUDGET")
                    .ok()
                    .and_then(|v| v.parse().ok()),
            };
            let result = suites::run_suite(&suite, &opts)?;
            print!("{}", result.render(tsv));
            Ok(!result.ok())
        }
        Command::Reg { path, t, method, p, slack, tsv } => {
            let m = io::parse_matroid(&read(&path)?)?;
            reg(&m, t, method, p, slack, tsv)?;
            Ok(false)
        }
        Command::Homology { path, p } => {
            let c = io::parse_complex(&read(&path)?)?;
            let report = c.reduced_homology(p)?;
            for (s, &dim) in report.dims.iter().enumerate() {
                println!("H~{} = {}", s as isize - 1, dim);
            }
            Ok(false)
        }
        Command::Ideal { path, t } => {
            let m = io::parse_matroid(&read(&path)?)?;
            let ideal = ideal::symbolic_generators(&m, t)?;
            for g in ideal.generators() {
                println!(
                    "{}",
                    g.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
                );
            }
            Ok(false)
        }
        Command::Arbor { path } => {
            let m = io::parse_matroid(&read(&path)?)?;
            let (a, cert) = arboricity::arboricity_exact(&m)?;
            let (edmonds, witness) = arboricity::arboricity_edmonds(&m)?;
            println!("a(M) = {a} (cover of {} bases)", cert.size);
            println!(
                "edmonds = {edmonds} (A = {{{}}})",
                join(&subsets::elements(witness))
            );
            match arboricity::gamma(&m.dual()) {
                Ok((g, _)) => println!("gamma(M*) = {g}"),
                Err(e) => println!("gamma(M*) undefined: {e}"),
            }
            let rec = arboricity::check_arbor(&m, "arbor")?;
            println!("{rec}");
            Ok(!rec.pass)
        }
        Command::Enumerate { n, emit, out } => {
            let ms = families::enumerate_all_matroids(n)?;
            match emit.as_str() {
                "stdout" => {
                    for m in &ms {
                        print!("{}", io::write_matroid(m));
                        println!();
                    }
                }
                "files" => {
                    let dir = out.ok_or_else(|| {
                        Error::Parse { line: 0, msg: "--emit files requires --out".into() }
                    })?;
                    std::fs::create_dir_all(&dir)
                        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
                    for m in &ms {
                        let text = io::write_matroid(m);
                        let name = format!("m{}-r{}-{:08x}.mat", n, m.rank(), fnv(&text));
                        std::fs::write(dir.join(name), text)
                            .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
                    }
                }
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("unknown emit mode `{other}`"),
                    })
                }
            }
            println!("# {} matroids", ms.len());
            Ok(false)
        }
    }
}

fn analyze(m: &Matroid, t_max: u32) -> Result<(), Error> {
    println!("n = {}", m.ground_size());
    println!("r(M) = {}", m.rank());
    println!("bases = {}", m.bases().len());
    let circuits = m.circuits();
    println!(
        "circuits = {}",
        circuits
            .iter()
            .map(|&c| format!("{{{}}}", join(&subsets::elements(c))))
            .collect::<Vec<_>>()
            .join(" ")
    );
    match m.circumference() {
        Some(c) => println!("c(M) = {c}"),
        None => println!("c(M) = undefined (free matroid)"),
    }
    println!("star centers = {{{}}}", join(&subsets::elements(m.star_centers())));
    match m.core() {
        Some((core, _)) => println!("core: n = {}, r = {}", core.ground_size(), core.rank()),
        None => println!("core: empty (free matroid)"),
    }
    println!("r(M*) = {}", m.dual().rank());
    if m.loops_mask() == 0 && m.rank() > 0 {
        let (a, _) = arboricity::arboricity_exact(m)?;
        let (e, _) = arboricity::arboricity_edmonds(m)?;
        println!("a(M) = {a} (edmonds {e})");
    } else {
        println!("a(M) = undefined");
    }
    match arboricity::gamma(m) {
        Ok((g, _)) => println!("gamma(M) = {g}"),
        Err(_) => println!("gamma(M) = undefined (star)"),
    }
    if m.circumference().is_some() {
        for t in 1..=t_max {
            println!("reg I^({t}) = {}", regularity::reg_formula(m, t)?);
        }
    }
    Ok(())
}

fn reg(
    m: &Matroid,
    t: u32,
    method: Method,
    p: u32,
    slack: Option<i64>,
    tsv: bool,
) -> Result<(), Error> {
    let budget = budget_from_env();
    let formula = regularity::reg_formula(m, t)?;
    let mut rows: Vec<(String, i64, String)> = Vec::new();
    if matches!(method, Method::Formula | Method::All) {
        rows.push(("formula".into(), formula, String::new()));
    }
    if matches!(method, Method::Takayama | Method::All) {
        let (v, top) = regularity::reg_takayama_opts(m, t, p, slack, true, &budget)?;
        rows.push(("takayama".into(), v, format!("{:?}", top.witness)));
    }
    if matches!(method, Method::Betti | Method::All) {
        let ideal = ideal::symbolic_generators(m, t)?;
        let v = regularity::reg_from_betti(&ideal, p, &budget)?;
        rows.push(("betti".into(), v, String::new()));
    }
    for (name, value, witness) in &rows {
        let agree = *value == formula;
        if tsv {
            println!("{name}\t{value}\t{witness}\t{agree}");
        } else {
            println!("method {name}: {value} (witness {witness}, agree {agree})");
        }
    }
    Ok(())
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn parse_list(text: &str) -> Result<Vec<u32>, Error> {
    text.split(',')
        .map(|tok| {
            tok.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("invalid number `{tok}`"),
            })
        })
        .collect()
}

/// `a..b` (inclusive), a single value, or a comma list.
fn parse_range(text: &str) -> Result<Vec<u32>, Error> {
    if let Some((a, b)) = text.split_once("..") {
        let lo: u32 = parse_list(a)?[0];
        let hi: u32 = parse_list(b)?[0];
        if lo > hi {
            return Err(Error::Parse {
                line: 0,
                msg: format!("empty range `{text}`"),
            });
        }
        return Ok((lo..=hi).collect());
    }
    parse_list(text)
}

fn join(elems: &[usize]) -> String {
    elems
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn fnv(text: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}
