use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mzeta_core::dirichlet::{format_rational, DirichletPoly, DEFAULT_INDEX_CAP};
use mzeta_core::groups::DEFAULT_DEGREE_CAP;
use mzeta_core::indices::{almost_simple_socle, omega_from_lattice, w_of};
use mzeta_core::ladder::{
    descriptor_from_spec, diff_table, eliminate, nagura_check, published_table, simple_catalog,
    TABLE_ERRATUM,
};
use mzeta_core::perm::DEFAULT_ELEMENT_CAP;
use mzeta_core::zeta::{
    chief_factorization_of, pg_series_of, probgen_with_cap, report_json, DEFAULT_TUPLE_CAP,
};
use mzeta_core::{catalog_group_with, CatalogOptions, Error, PermGroup, SubgroupLattice};
use num_rational::BigRational;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "mzeta",
    version,
    about = "Exact probabilistic zeta polynomials of finite groups"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for tie-breaking between chief series.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, env = "MZ_ELEMENT_CAP", default_value_t = DEFAULT_ELEMENT_CAP)]
    element_cap: u64,

    #[arg(long, global = true, env = "MZ_TUPLE_CAP", default_value_t = DEFAULT_TUPLE_CAP)]
    tuple_cap: u64,

    #[arg(long, global = true, env = "MZ_INDEX_CAP", default_value_t = DEFAULT_INDEX_CAP)]
    index_cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print P_G(s).
    Zeta { group: String },
    /// Factorise P_G(s) along a chief series.
    Factorize {
        group: String,
        /// Also compare P_G(t) with the exhaustive generation probability.
        #[arg(long)]
        t: Option<u32>,
    },
    /// Subgroup lattice with Möbius values.
    Moebius { group: String },
    /// Subgroups with order, index, class size and maximality.
    Subgroups { group: String },
    /// Probability that t random elements generate the group.
    Probgen {
        group: String,
        #[arg(long)]
        t: u32,
    },
    /// Ω(X) and w(X) of an almost simple group, from its lattice.
    Omega { group: String },
    /// Minimal odd useful index of a simple group: alt:<p>, alt2t:<t>,
    /// psl2:<p> or a sporadic name.
    Wx { descriptor: String },
    /// Prime-elimination ladder over the catalogued simple groups.
    Ladder {
        /// Compare with the published table; exit 3 on mismatch.
        #[arg(long)]
        diff_paper: bool,
        /// With --diff-paper, compare with the table exactly as printed.
        #[arg(long, requires = "diff_paper")]
        strict: bool,
    },
    /// Integers x in [lo, hi] with no prime in [x, 6x/5].
    Nagura {
        #[arg(long, default_value_t = 1)]
        lo: u64,
        #[arg(long, default_value_t = 1_000_000)]
        hi: u64,
    },
    /// Arithmetic on Dirichlet polynomials stored as JSON files.
    Series {
        #[command(subcommand)]
        op: SeriesOp,
    },
}

#[derive(Debug, Subcommand)]
enum SeriesOp {
    Mul {
        a: PathBuf,
        b: PathBuf,
    },
    Divide {
        a: PathBuf,
        b: PathBuf,
    },
    PiPart {
        a: PathBuf,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    Shift {
        a: PathBuf,
        #[arg(long)]
        r: u32,
    },
    Eval {
        a: PathBuf,
        #[arg(long)]
        t: u32,
    },
    Latex {
        a: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 2,
            Error::Parse { .. }
            | Error::InvalidParameter(_)
            | Error::UnsupportedFamily(_)
            | Error::Data(_) => 1,
            _ => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a successful run prints: results on stdout, notes on stderr.
#[derive(Default)]
struct Output {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Output {
    fn text(stdout: String) -> Self {
        Output {
            stdout,
            ..Default::default()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn json_out(v: &Value) -> Output {
    Output::text(line(
        serde_json::to_string_pretty(v).expect("JSON values serialise"),
    ))
}

fn group(cli: &Cli, spec: &str) -> Result<PermGroup, Failure> {
    let opts = CatalogOptions {
        element_cap: cli.element_cap,
        degree_cap: DEFAULT_DEGREE_CAP,
    };
    Ok(catalog_group_with(spec, &opts)?)
}

fn series(cli: &Cli, p: &DirichletPoly) -> Output {
    match cli.format {
        Format::Json => json_out(&p.to_json()),
        Format::Latex => Output::text(line(p.to_latex())),
        Format::Text => Output::text(line(p)),
    }
}

fn rational(cli: &Cli, q: &BigRational) -> Output {
    match cli.format {
        Format::Json => json_out(&json!(format_rational(q))),
        Format::Latex if !q.is_integer() => {
            Output::text(line(format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())))
        }
        _ => Output::text(line(format_rational(q))),
    }
}

fn read_series(path: &PathBuf) -> Result<DirichletPoly, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
    })?;
    Ok(DirichletPoly::from_json(&value)?)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Zeta { group: spec } => {
            let g = group(cli, spec)?;
            let lattice = SubgroupLattice::new(&g)?;
            Ok(series(cli, &pg_series_of(&lattice, &lattice.moebius())))
        }
        Command::Factorize { group: spec, t } => {
            let g = group(cli, spec)?;
            let lattice = SubgroupLattice::new(&g)?;
            let mu = lattice.moebius();
            let fact = chief_factorization_of(&lattice, &mu, cli.seed)?;
            let hall = match t {
                Some(t) => Some((
                    *t,
                    fact.pg.evaluate(*t),
                    probgen_with_cap(&g, *t, cli.tuple_cap)?,
                )),
                None => None,
            };
            let hall_ref = hall.as_ref().map(|(t, l, r)| (*t, l, r));
            match cli.format {
                Format::Json => Ok(json_out(&report_json(spec, &fact, hall_ref))),
                _ => Ok(Output::text(factorize_text(cli, spec, &fact, hall_ref))),
            }
        }
        Command::Moebius { group: spec } => {
            let g = group(cli, spec)?;
            let lattice = SubgroupLattice::new(&g)?;
            let mu = lattice.moebius();
            match cli.format {
                Format::Json => Ok(json_out(&lattice.export_json(&mu))),
                _ => {
                    let mut out = String::from("id\torder\tindex\tmu\n");
                    for s in lattice.subgroups() {
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}",
                            s.id,
                            s.order,
                            lattice.index_of(s.id),
                            mu.get(s.id)
                        );
                    }
                    Ok(Output::text(out))
                }
            }
        }
        Command::Subgroups { group: spec } => {
            let g = group(cli, spec)?;
            let lattice = SubgroupLattice::new(&g)?;
            let rows: Vec<Value> = lattice
                .subgroups()
                .iter()
                .map(|s| {
                    json!({
                        "id": s.id,
                        "order": s.order,
                        "index": lattice.index_of(s.id),
                        "class_size": lattice.conjugacy_class(s.id).len(),
                        "normal": lattice.is_normal(s.id),
                        "maximal": lattice.maximal_ids().contains(&s.id),
                    })
                })
                .collect();
            match cli.format {
                Format::Json => Ok(json_out(&json!({
                    "order": lattice.order(),
                    "count": lattice.len(),
                    "classes": lattice.conjugacy_classes().len(),
                    "subgroups": rows,
                }))),
                _ => {
                    let mut out = format!(
                        "{} subgroups in {} conjugacy classes; |G| = {}\nid\torder\tindex\tclass\tnormal\tmaximal\n",
                        lattice.len(),
                        lattice.conjugacy_classes().len(),
                        lattice.order()
                    );
                    for r in &rows {
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}\t{}\t{}",
                            r["id"],
                            r["order"],
                            r["index"],
                            r["class_size"],
                            r["normal"],
                            r["maximal"]
                        );
                    }
                    Ok(Output::text(out))
                }
            }
        }
        Command::Probgen { group: spec, t } => {
            let g = group(cli, spec)?;
            Ok(rational(cli, &probgen_with_cap(&g, *t, cli.tuple_cap)?))
        }
        Command::Omega { group: spec } => {
            let g = group(cli, spec)?;
            let lattice = SubgroupLattice::new(&g)?;
            let soc = almost_simple_socle(&lattice)?;
            let profile = omega_from_lattice(&lattice, soc, spec.clone());
            match cli.format {
                Format::Json => Ok(json_out(
                    &serde_json::to_value(&profile).expect("profile serialises"),
                )),
                _ => {
                    let omega: Vec<String> = profile.omega.iter().map(|m| m.to_string()).collect();
                    let w = profile.w.map_or("undefined".to_string(), |w| w.to_string());
                    Ok(Output::text(format!(
                        "Omega = {{{}}}\nw = {w}\n",
                        omega.join(", ")
                    )))
                }
            }
        }
        Command::Wx { descriptor } => {
            let desc = descriptor_from_spec(descriptor)?;
            let info = w_of(&desc)?;
            let w = info.w.as_ref().map(|w| w.to_string());
            match cli.format {
                Format::Json => Ok(json_out(&json!({
                    "name": desc.name,
                    "w": w,
                    "useful_indices": info.useful_indices.iter().map(|u| u.to_string()).collect::<Vec<_>>(),
                    "signature_primes": desc.signature_primes,
                    "source": info.source,
                }))),
                _ => match w {
                    Some(w) => Ok(Output::text(line(w))),
                    None => Ok(Output {
                        stdout: line("undefined"),
                        stderr: line(format!(
                            "note: {} carries only its signature primes {:?} as table data",
                            desc.name, desc.signature_primes
                        )),
                        code: 0,
                    }),
                },
            }
        }
        Command::Ladder { diff_paper, strict } => {
            let report = eliminate(simple_catalog());
            let mut out = match cli.format {
                Format::Json => json_out(&report.to_json()),
                _ => Output::text(report.render_text()),
            };
            if *diff_paper {
                let diffs = diff_table(&report, &published_table(!strict));
                if diffs.is_empty() {
                    if !strict {
                        out.stderr = line(format!(
                            "matches the published table with one erratum: {} added to row {}",
                            TABLE_ERRATUM.1, TABLE_ERRATUM.0
                        ));
                    } else {
                        out.stderr = line("matches the published table");
                    }
                } else {
                    for d in diffs {
                        out.stderr.push_str(&line(format!("mismatch: {d}")));
                    }
                    out.code = 3;
                }
            }
            Ok(out)
        }
        Command::Nagura { lo, hi } => {
            if *lo == 0 {
                return Err(Failure {
                    code: 1,
                    message: "lo must be at least 1".into(),
                });
            }
            let fails = nagura_check(*lo, *hi);
            match cli.format {
                Format::Json => Ok(json_out(&json!(fails))),
                _ => Ok(Output::text(line(
                    fails
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                ))),
            }
        }
        Command::Series { op } => match op {
            SeriesOp::Mul { a, b } => Ok(series(cli, &(&read_series(a)? * &read_series(b)?))),
            SeriesOp::Divide { a, b } => Ok(series(
                cli,
                &read_series(a)?.try_divide(&read_series(b)?, cli.index_cap)?,
            )),
            SeriesOp::PiPart { a, primes } => {
                let pi: BTreeSet<u64> = primes.iter().copied().collect();
                Ok(series(cli, &read_series(a)?.pi_part(&pi)))
            }
            SeriesOp::Shift { a, r } => Ok(series(cli, &read_series(a)?.shift_transform(*r)?)),
            SeriesOp::Eval { a, t } => Ok(rational(cli, &read_series(a)?.evaluate(*t))),
            SeriesOp::Latex { a } => Ok(Output::text(line(read_series(a)?.to_latex()))),
        },
    }
}

fn factorize_text(
    cli: &Cli,
    spec: &str,
    fact: &mzeta_core::zeta::ChiefFactorization,
    hall: Option<(u32, &BigRational, &BigRational)>,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {spec}, order {}, seed {}", fact.order, cli.seed);
    let _ = writeln!(out, "P(s) = {}", fact.pg);
    for r in &fact.reports {
        let mut notes = Vec::new();
        if r.is_frattini {
            notes.push("Frattini".to_string());
        }
        if let Some(c) = r.complement_count {
            notes.push(format!("c = {c}"));
        }
        let _ = writeln!(
            out,
            "factor {}: {}{}  P_{} = {}",
            r.index_in_series,
            r.factor,
            if notes.is_empty() {
                String::new()
            } else {
                format!(" ({})", notes.join(", "))
            },
            r.index_in_series,
            r.local_series
        );
    }
    if let Some((t, lhs, rhs)) = hall {
        let _ = writeln!(
            out,
            "P({t}) = {}, generating {t}-tuples: {} ({})",
            format_rational(lhs),
            format_rational(rhs),
            if lhs == rhs { "equal" } else { "DIFFERENT" }
        );
    }
    out
}
