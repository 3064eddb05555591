use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ringlab::catalog::{self, Catalog, RingEntry, CATALOG_RINGS};
use ringlab::format::{ProfileJson, RingFile, VerdictJson};
use ringlab::registry::{run_registry, RunConfig};
use ringlab::report::{render_text, Report};
use ringlab::{parallel, search, LabError, LabResult};
use ringlab_core::verdict::{CheckConfig, Strategy, DEFAULT_PAIR_BUDGET};
use ringlab_core::{FiniteRing, Variant};

#[derive(Parser)]
#[command(
    name = "ringlab",
    version,
    about = "Finite rings, nil radicals and monoid-ring Armendariz checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the theorem registry; exits 1 when a check deviates from its expectation.
    Verify {
        /// Comma-separated id globs, e.g. `ex-*,prop-h3`.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Degree bound for every infinite monoid fragment (default: per ring order).
        #[arg(long)]
        degree: Option<usize>,
        /// Pair budget per scan.
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        budget: u128,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// List every instance, not only the ones that did not pass.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Nilpotents, N_*, N^* and class flags of one ring.
    Radicals {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        json: bool,
    },
    /// Decide an Armendariz-type property on a bounded monoid fragment.
    Check {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        monoid: String,
        #[arg(long, value_parser = parse_variant)]
        property: Variant,
        /// Fragment degree bound (ignored for finite monoids; default: per ring order).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Built-in rings, monoids, endomorphisms and ideals.
    Catalog,
    /// Catalog rings matching a class expression such as `two_primal & !semicommutative`.
    Search {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a ring's tables as a JSON ring file.
    Export {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
#[group(required = true, multiple = false)]
struct RingArg {
    /// Catalog-style ring name, e.g. `t2(z4)` or `z2xz2`.
    #[arg(long)]
    ring: Option<String>,
    /// JSON ring file as written by `export`.
    #[arg(long)]
    ring_file: Option<PathBuf>,
}

impl RingArg {
    fn load(&self) -> LabResult<FiniteRing> {
        match (&self.ring, &self.ring_file) {
            (Some(name), _) => catalog::ring(name),
            (_, Some(path)) => RingFile::from_json(&std::fs::read_to_string(path)?)?.to_ring(),
            _ => Err(LabError::usage("give --ring or --ring-file")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Direct,
    Reduced,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Variant::ALL.iter().map(|v| v.name()).collect();
        format!("unknown property `{s}` (use one of {})", names.join(", "))
    })
}

fn write_out(path: Option<&PathBuf>, text: &str) -> LabResult<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::write(p, text)?),
        _ => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_profile(e: &RingEntry) {
    let r = &e.ring;
    let p = &e.profile;
    let list = |s: &ringlab_core::ElemSet| {
        s.iter()
            .map(|x| r.label(x).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("ring {} (order {})", e.name, r.order());
    let nil: Vec<String> = p
        .nilpotents
        .iter()
        .map(|x| format!("{}^{}", r.label(x), p.nilpotency_index[x].unwrap_or(0)))
        .collect();
    println!("  N    = {{{}}}  (element^index)", nil.join(", "));
    println!("  N_*  = {{{}}}", list(&p.lower));
    println!("  N^*  = {{{}}}", list(&p.upper));
    let f = e.classes.flags;
    println!(
        "  reduced {}, semicommutative {}, 2-primal {}, NI {}, nilpotent p.p. {}, Dedekind finite {}, uniserial {}",
        yes(f.reduced),
        yes(f.semicommutative),
        yes(f.two_primal),
        yes(f.ni),
        yes(e.nilpotent_pp),
        yes(f.dedekind_finite),
        yes(e.uniserial)
    );
    if let Some((a, c, b)) = e.classes.semicommutative_witness {
        println!(
            "  not semicommutative: {}·{} = 0 but {}·{}·{} ≠ 0",
            r.label(a),
            r.label(b),
            r.label(a),
            r.label(c),
            r.label(b)
        );
    }
}

fn entry_for(ring: FiniteRing) -> LabResult<RingEntry> {
    let name = ring.name().to_string();
    if CATALOG_RINGS.contains(&name.as_str()) {
        return RingEntry::new(&name);
    }
    let profile = ringlab_core::RadicalProfile::compute(&ring)?;
    let classes = ringlab_core::radical::class_predicates_from(&ring, &profile);
    Ok(RingEntry {
        name,
        nilpotent_pp: ringlab_core::radical::is_nilpotent_pp(&ring).is_ok(),
        uniserial: catalog::is_uniserial(&ring),
        ring,
        profile,
        classes,
        ideals: None,
    })
}

fn run(cli: Cli) -> LabResult<ExitCode> {
    match cli.command {
        Command::Verify {
            filter,
            jobs,
            degree,
            budget,
            json,
            verbose,
        } => {
            if jobs == 0 {
                return Err(LabError::usage("--jobs must be at least 1"));
            }
            let catalog = Catalog::load()?;
            let config = RunConfig {
                budget,
                jobs,
                degree,
            };
            let results = run_registry(&catalog, filter.as_deref(), config);
            let report = Report::new(&results, &config);
            let to_stdout = json.as_ref().is_some_and(|p| p.as_os_str() == "-");
            if to_stdout {
                eprint!("{}", render_text(&results, verbose));
            } else {
                print!("{}", render_text(&results, verbose));
            }
            if let Some(path) = &json {
                write_out(Some(path), &report.to_json()?)?;
            }
            Ok(if report.has_deviation() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Radicals { ring, json } => {
            let e = entry_for(ring.load()?)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&ProfileJson::new(&e))?);
            } else {
                print_profile(&e);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            ring,
            monoid,
            property,
            degree,
            jobs,
            budget,
            strategy,
        } => {
            let r = ring.load()?;
            let m = catalog::monoid(&monoid)?;
            let d = degree.unwrap_or(if r.order() <= 4 { 3 } else { 2 });
            let frag = m.fragment(d)?;
            let strategy = match strategy {
                StrategyArg::Auto => Strategy::Auto,
                StrategyArg::Direct => Strategy::Direct,
                StrategyArg::Reduced => Strategy::Reduced,
            };
            let v = parallel::check(
                &r,
                &m,
                &frag,
                property,
                &CheckConfig { budget, strategy },
                jobs.max(1),
            )?;
            println!(
                "{}",
                serde_json::to_string_pretty(&VerdictJson::new(&v, &r, &m))?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog => {
            let catalog = Catalog::load()?;
            println!("rings:");
            for e in &catalog.rings {
                let f = e.classes.flags;
                let mut flags = Vec::new();
                for (on, name) in [
                    (f.reduced, "reduced"),
                    (f.semicommutative, "semicommutative"),
                    (f.two_primal, "two_primal"),
                    (f.ni, "NI"),
                    (e.nilpotent_pp, "nilpotent_pp"),
                    (f.dedekind_finite, "dedekind_finite"),
                    (e.uniserial, "uniserial"),
                ] {
                    if on {
                        flags.push(name);
                    }
                }
                let ideals = e.ideals.as_ref().map_or("not enumerated".to_string(), |v| {
                    format!("{} ideals", v.len())
                });
                println!(
                    "  {:<20} order {:>4}  endomorphisms {:<8}  {:<16} {}",
                    e.name,
                    e.ring.order(),
                    catalog.endomorphisms(e).join(","),
                    ideals,
                    flags.join(" ")
                );
            }
            println!("monoids:");
            for m in &catalog.monoids {
                let size = m
                    .order()
                    .map_or("infinite".to_string(), |n| format!("{n} elements"));
                println!(
                    "  {:<20} {:<12} u.p. {}",
                    m.name(),
                    size,
                    yes(m.up_status().is_up())
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { expr, json } => {
            let catalog = Catalog::load()?;
            let hits = search::search(&catalog, &expr)?;
            if json {
                let profiles: Vec<ProfileJson> = hits.iter().map(|e| ProfileJson::new(e)).collect();
                println!("{}", serde_json::to_string_pretty(&profiles)?);
            } else {
                for e in hits {
                    print_profile(e);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { ring, out } => {
            let r = catalog::ring(&ring)?;
            let mut text = RingFile::from_ring(&r).to_json()?;
            text.push('\n');
            write_out(out.as_ref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
