//! CLI for numerical semigroups, their posets and ideal class monoids.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 resource limit,
//! 4 theorem violation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use numsgp::error::Error;
use numsgp::io::{poset_to_dot, MonoidDocument, PosetDocument};
use numsgp::monoid::{self, IdealClassMonoid};
use numsgp::poset::{self, AbstractPoset, GapPoset};
use numsgp::semigroup::NumericalSemigroup;
use numsgp::verify::{self, Theorem};
use numsgp::{ideal, InclusionPoset};

#[derive(Parser)]
#[command(name = "numsgp", version, about = "Numerical semigroups, gap posets and ideal class monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Gaps,
    Inclusion,
    Preceq,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReconstructMode {
    Gaps,
    Inclusion,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Gaps,
    Inclusion,
    Monoid,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariants of a semigroup (generators, gaps, F, type, ...)
    Info {
        /// Semigroup literal: "gens:4,6,9" or "gaps:1,2,3,5,7,11"
        semigroup: String,
    },
    /// Emit a poset attached to a semigroup
    Poset {
        semigroup: String,
        #[arg(long, value_enum, default_value = "gaps")]
        which: Which,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cap on the number of ideals enumerated
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Recover a semigroup from a poset JSON document (file or "-")
    Reconstruct {
        input: String,
        #[arg(long, value_enum, default_value = "gaps")]
        mode: ReconstructMode,
    },
    /// Recover a semigroup from a Cayley-table JSON document (file or "-")
    RecoverMonoid { input: String },
    /// Exhaustively check a rigidity theorem over the genus census
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, default_value_t = 5)]
        g_max: u64,
        /// Worker threads for the pairwise checks (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the census of semigroups up to a genus bound
    Census {
        #[arg(long, default_value_t = 5)]
        g_max: u64,
    },
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ResourceLimit(_) => 3,
        _ => 2,
    }
}

fn semigroup_report(s: &NumericalSemigroup) -> String {
    let mut out = format!("{s}\n");
    if s.is_full() {
        out.push_str("full monoid of non-negative integers\n");
        return out;
    }
    let pf = s.pseudo_frobenius().unwrap();
    let sg = s.special_gaps().unwrap();
    let join = |v: &[u64]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    out.push_str(&format!("C={} PF={{{}}} SG={{{}}}\n", s.conductor(), join(&pf), join(&sg)));
    let class = if s.is_symmetric().unwrap() {
        "symmetric (irreducible)"
    } else if s.is_pseudo_symmetric().unwrap() {
        "pseudo-symmetric (irreducible)"
    } else {
        "not irreducible"
    };
    out.push_str(&format!("{class}\n"));
    out
}

fn emit_poset(p: &AbstractPoset, highlight: &[usize], format: Format) -> String {
    match format {
        Format::Json => PosetDocument::from_poset(p).to_json(),
        Format::Dot => poset_to_dot(p, highlight),
        Format::Text => {
            let mut out = String::new();
            for (i, e) in p.elements().iter().enumerate() {
                out.push_str(&format!("{i}: {e}\n"));
            }
            for (lo, hi) in p.hasse_covers() {
                out.push_str(&format!("{lo} < {hi}\n"));
            }
            out
        }
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::parse();
    let fail = |e: Error| (exit_code_for(&e), e.to_string());
    match cli.command {
        Command::Info { semigroup } => {
            let s: NumericalSemigroup = semigroup.parse().map_err(fail)?;
            print!("{}", semigroup_report(&s));
            Ok(())
        }
        Command::Poset {
            semigroup,
            which,
            format,
            limit,
        } => {
            let s: NumericalSemigroup = semigroup.parse().map_err(fail)?;
            let cap = limit.unwrap_or(usize::MAX);
            let text = match which {
                Which::Gaps => {
                    if s.is_full() {
                        let empty = AbstractPoset::from_pairs(vec![], &[]).unwrap();
                        emit_poset(&empty, &[], format)
                    } else {
                        let gp = GapPoset::build(&s).map_err(fail)?;
                        emit_poset(gp.base(), &[], format)
                    }
                }
                Which::Inclusion => {
                    let p = InclusionPoset::build_limited(&s, cap).map_err(fail)?;
                    emit_poset(p.base(), &[], format)
                }
                Which::Preceq => {
                    let m = IdealClassMonoid::build_limited(&s, cap).map_err(fail)?;
                    let am = m.abstract_monoid();
                    let n = am.len();
                    let mut pairs = Vec::new();
                    for i in 0..n {
                        for j in 0..n {
                            if i != j && am.preceq(i, j) {
                                pairs.push((i, j));
                            }
                        }
                    }
                    let labels = m.elements().iter().map(|e| e.label()).collect();
                    let p = AbstractPoset::from_pairs(labels, &pairs).map_err(fail)?;
                    // idempotents are drawn gray, matching figure convention
                    emit_poset(&p, &am.idempotents(), format)
                }
            };
            println!("{}", text.trim_end());
            Ok(())
        }
        Command::Reconstruct { input, mode } => {
            let text = read_input(&input).map_err(|e| (2u8, e.to_string()))?;
            let doc = PosetDocument::from_json(&text).map_err(fail)?;
            let p = doc.to_poset().map_err(fail)?;
            let s = match mode {
                ReconstructMode::Gaps => poset::reconstruct(&p).map_err(fail)?,
                ReconstructMode::Inclusion => {
                    ideal::recover_from_inclusion_poset(&p).map_err(fail)?
                }
            };
            print!("{}", semigroup_report(&s));
            Ok(())
        }
        Command::RecoverMonoid { input } => {
            let text = read_input(&input).map_err(|e| (2u8, e.to_string()))?;
            let doc = MonoidDocument::from_json(&text).map_err(fail)?;
            let m = doc.to_monoid().map_err(fail)?;
            let s = monoid::recover_from_abstract_monoid(&m).map_err(fail)?;
            print!("{}", semigroup_report(&s));
            Ok(())
        }
        Command::Verify {
            theorem,
            g_max,
            jobs,
            seed,
        } => {
            if jobs > 0 {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .ok();
            }
            let theorem = match theorem {
                TheoremArg::Gaps => Theorem::GapPoset,
                TheoremArg::Inclusion => Theorem::InclusionPoset,
                TheoremArg::Monoid => Theorem::ClassMonoid,
            };
            let report = verify::run(theorem, g_max, seed).map_err(fail)?;
            println!(
                "theorem={} g_max={} census={} pairs={} violations={} time={:.2}s",
                report.theorem.id(),
                report.genus_bound,
                report.census_size,
                report.pairs_checked,
                report.violations.len(),
                report.wall_seconds
            );
            for v in &report.violations {
                println!("VIOLATION: {v}");
            }
            if report.confirmed() {
                Ok(())
            } else {
                Err((4, format!("{} violations found", report.violations.len())))
            }
        }
        Command::Census { g_max } => {
            for s in NumericalSemigroup::enumerate_by_genus(g_max) {
                println!("{s}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
