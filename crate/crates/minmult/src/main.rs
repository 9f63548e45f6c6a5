//! Command-line interface: analyze complexes and monomial ideals,
//! generate the golden example families, run the pure-complex census, and
//! execute the built-in verification suite.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minmult::families::FamilySpec;
use minmult::io::{
    family_files, full_report, CensusDocument, ComplexFile, IdealFile, ParsedInput,
    ReportDocument,
};
use minmult::linalg::FieldSpec;
use minmult::search::{census, CensusFilters};
use minmult::verify::run_verification;
use minmult::Error;

#[derive(Parser)]
#[command(
    name = "minmult",
    about = "Exact invariants and theorem verifiers for Stanley-Reisner rings and monomial \
             quotients with minimal multiplicity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a complex or ideal file and print the invariant report
    /// with all applicable checks.
    Analyze {
        /// Input is a complex file (vertices + 1-based facets).
        #[arg(long, conflicts_with = "ideal")]
        complex: Option<PathBuf>,
        /// Input is an ideal file (variables + generators).
        #[arg(long)]
        ideal: Option<PathBuf>,
        /// Field characteristic (0 or a prime).
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Relabel away vertices that appear in no facet (this changes
        /// the codimension); a warning lists the dropped labels.
        #[arg(long, default_value_t = false)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a golden family instance and its expected-assertion
    /// sidecar.
    Generate {
        /// Family: disjoint_simplices, goto_family, f_times_irrelevant,
        /// cyclic_dual, hanano, non_buchsbaum, exmulti2.
        family: String,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        /// Item number for exmulti2 (1..4).
        #[arg(long)]
        item: Option<u8>,
        /// Emit the two-generator variant of exmulti2 item 4 as printed.
        #[arg(long, default_value_t = false)]
        verbatim: bool,
        /// Explicit monomial for f_times_irrelevant, e.g. "Y^2" over
        /// X1..Xd, Y.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Enumerate pure complexes on n vertices of the given dimension up
    /// to isomorphism and print the census.
    Search {
        n: usize,
        dim: usize,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Keep only minimal-multiplicity rows.
        #[arg(long = "require-minimal", default_value_t = false)]
        require_minimal: bool,
        /// Keep only rows with this initial degree.
        #[arg(long = "fix-q")]
        fix_q: Option<u64>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the census document here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full golden verification suite.
    #[command(name = "verify-paper")]
    VerifyPaper {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) => ExitCode::from(2),
                Error::CapExceeded(_) => ExitCode::from(4),
                Error::EquivalenceViolation(_) | Error::InternalCrossCheck(_) => {
                    let path = write_violation_dump(&e.to_string());
                    eprintln!("counterexample dump: {}", path.display());
                    ExitCode::from(3)
                }
            }
        }
    }
}

fn write_violation_dump(message: &str) -> PathBuf {
    let path = PathBuf::from("minmult-violation-dump.json");
    let doc = serde_json::json!({ "violation": message });
    let _ = std::fs::write(&path, serde_json::to_string_pretty(&doc).unwrap());
    path
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze {
            complex,
            ideal,
            characteristic,
            normalize,
            format,
        } => {
            let field = FieldSpec::from_char(characteristic)?;
            let input = match (complex, ideal) {
                (Some(path), None) => {
                    let text = read_to_string(&path)?;
                    let file: ComplexFile = serde_json::from_str(&text).map_err(|e| {
                        Error::InvalidInput(format!("{}: {e}", path.display()))
                    })?;
                    ParsedInput::Complex(file.to_complex_normalizing(normalize)?)
                }
                (None, Some(path)) => {
                    let text = read_to_string(&path)?;
                    let file: IdealFile = serde_json::from_str(&text).map_err(|e| {
                        Error::InvalidInput(format!("{}: {e}", path.display()))
                    })?;
                    let names = file.variables.clone();
                    ParsedInput::Ideal(file.to_ideal()?, names)
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "pass exactly one of --complex or --ideal".into(),
                    ))
                }
            };
            let (report, checks, provenance) = full_report(&input, field)?;
            let doc = ReportDocument::from_report(&report, &checks, provenance);
            match format {
                Format::Text => print!("{}", doc.render_text()),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap())
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            family,
            c,
            d,
            q,
            e,
            item,
            verbatim,
            f,
            out,
        } => {
            let spec = build_family_spec(&family, c, d, q, e, item, verbatim, f)?;
            let instance = minmult::families::generate_family(&spec)?;
            let (object_json, sidecar) = family_files(&instance);
            std::fs::write(&out, &object_json)
                .map_err(|err| Error::InvalidInput(format!("cannot write {}: {err}", out.display())))?;
            let sidecar_path = out.with_extension("expected.json");
            std::fs::write(
                &sidecar_path,
                serde_json::to_string_pretty(&sidecar).unwrap(),
            )
            .map_err(|err| {
                Error::InvalidInput(format!("cannot write {}: {err}", sidecar_path.display()))
            })?;
            println!(
                "wrote {} and {} ({})",
                out.display(),
                sidecar_path.display(),
                instance.provenance
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Search {
            n,
            dim,
            characteristic,
            require_minimal,
            fix_q,
            jobs,
            out,
        } => {
            if let Some(k) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global()
                    .map_err(|e| Error::InvalidInput(e.to_string()))?;
            }
            let field = FieldSpec::from_char(characteristic)?;
            let rows = census(
                n,
                dim,
                field,
                CensusFilters {
                    require_minimal,
                    fix_q,
                },
            )?;
            let doc = CensusDocument::from_rows(n, dim, characteristic, &rows);
            let json = serde_json::to_string_pretty(&doc).unwrap();
            match out {
                Some(path) => {
                    std::fs::write(&path, &json).map_err(|e| {
                        Error::InvalidInput(format!("cannot write {}: {e}", path.display()))
                    })?;
                    println!("wrote {} ({} rows)", path.display(), doc.rows.len());
                }
                None => println!("{json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { characteristic } => {
            let field = FieldSpec::from_char(characteristic)?;
            let outcomes = run_verification(field);
            let mut first_failure: Option<String> = None;
            for o in &outcomes {
                println!(
                    "criterion {:>2} [{}] {} — {} ({} ms)",
                    o.id,
                    o.status(),
                    o.name,
                    o.detail,
                    o.millis
                );
                if !o.passed && first_failure.is_none() {
                    first_failure = Some(o.name.clone());
                }
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            println!("{passed}/{} criteria passed", outcomes.len());
            match first_failure {
                Some(name) => {
                    eprintln!("first failing criterion: {name}");
                    Ok(ExitCode::from(1))
                }
                None => Ok(ExitCode::SUCCESS),
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn build_family_spec(
    family: &str,
    c: Option<u32>,
    d: Option<u32>,
    q: Option<u32>,
    e: Option<u32>,
    item: Option<u8>,
    verbatim: bool,
    f: Option<String>,
) -> Result<FamilySpec, Error> {
    let need = |name: &str, v: Option<u32>| {
        v.ok_or_else(|| Error::InvalidInput(format!("{family} needs --{name}")))
    };
    match family {
        "disjoint_simplices" => Ok(FamilySpec::DisjointSimplices {
            d: need("d", d)?,
            e: need("e", e)?,
        }),
        "goto_family" => Ok(FamilySpec::GotoFamily {
            c: need("c", c)?,
            d: need("d", d)?,
            q: need("q", q)?,
        }),
        "f_times_irrelevant" => {
            let d = need("d", d)?;
            let q = need("q", q)?;
            let f_exps = match f {
                None => None,
                Some(text) => {
                    let v = d as usize + 1;
                    let mut names: Vec<String> =
                        (1..=d).map(|i| format!("X{i}")).collect();
                    names.push("Y".into());
                    let index: std::collections::BTreeMap<&str, usize> = names
                        .iter()
                        .enumerate()
                        .map(|(i, n)| (n.as_str(), i))
                        .collect();
                    let file = IdealFile {
                        variables: names.clone(),
                        generators: vec![minmult::io::GeneratorRepr::Text(text)],
                    };
                    let parsed = file.to_ideal()?;
                    let _ = index;
                    let gen = parsed
                        .gens()
                        .first()
                        .ok_or_else(|| Error::InvalidInput("empty monomial".into()))?;
                    let mut exps = vec![0u32; v];
                    exps.copy_from_slice(gen.exps());
                    Some(exps)
                }
            };
            Ok(FamilySpec::FTimesIrrelevant { d, q, f: f_exps })
        }
        "cyclic_dual" => Ok(FamilySpec::CyclicDual {
            q: need("q", q)?,
            d: need("d", d)?,
        }),
        "hanano" => Ok(FamilySpec::Hanano),
        "non_buchsbaum" => Ok(FamilySpec::NonBuchsbaum {
            d: need("d", d)?,
            q: need("q", q)?,
        }),
        "exmulti2" => Ok(FamilySpec::ExMulti2 {
            item: item.ok_or_else(|| Error::InvalidInput("exmulti2 needs --item".into()))?,
            d: need("d", d)?,
            c: c.unwrap_or(1),
            verbatim,
        }),
        other => Err(Error::InvalidInput(format!(
            "unknown family {other:?}; known: disjoint_simplices, goto_family, \
             f_times_irrelevant, cyclic_dual, hanano, non_buchsbaum, exmulti2"
        ))),
    }
}
