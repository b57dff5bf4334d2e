use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use finring::idem::{all_idempotents, idempotent_partition};
use finring::io::{read_hom_spec, read_ring_spec, RingInfo, RingSpec};
use finring::lifting::{lift_idempotent, lift_idempotent_mod_ideal, lift_regular};
use finring::ring::{
    check_power_associative, ideal_closure, validate_axioms, Limits, RawTables, Side,
    DEFAULT_MAX_ORDER,
};
use finring::suite::{verify_all, HomCase, Status};
use finring::zdgraph::{export_dot, idempotent_cliques, verify_clique_sum, zero_divisor_graph};
use finring::{Error, RingTable};

#[derive(Parser)]
#[command(
    name = "finring",
    version,
    about = "Idempotent partitions, lifting and zero-divisor graphs of finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ring definition file (JSON).
    #[arg(long, global = true)]
    ring: Option<PathBuf>,

    /// Homomorphism definition file (JSON); repeatable for verify-all.
    #[arg(long, global = true)]
    hom: Vec<PathBuf>,

    /// Comma-separated generator indices.
    #[arg(long, global = true, value_delimiter = ',')]
    ideal_generators: Option<Vec<usize>>,

    #[arg(long, global = true, default_value = "left")]
    side: Side,

    #[arg(long, global = true)]
    element: Option<usize>,

    /// The y in x*y*x - x for regular-lift.
    #[arg(long, global = true)]
    witness: Option<usize>,

    /// Restrict the graph to these vertices (comma-separated).
    #[arg(long, global = true, value_delimiter = ',')]
    vertices: Option<Vec<usize>>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Group graph vertices into one cluster per idempotent block.
    #[arg(long, global = true)]
    with_blocks: bool,

    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Check the ring axioms and classify associativity.
    Validate,
    Idempotents,
    /// The partition of the ring into blocks B_e.
    Partition,
    /// Lift an idempotent of the target of --hom.
    Lift,
    /// Lift an idempotent coset modulo the ideal generated by --ideal-generators.
    LiftIdeal,
    /// Lift x (--element) with x*y*x - x in I (y = --witness) to a regular element.
    RegularLift,
    /// The zero-divisor digraph.
    Graph,
    /// Maximal cliques of orthogonal non-zero idempotents and their sums.
    Cliques,
    /// Run every check; exit 0 iff all pass.
    VerifyAll,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Text,
}

enum Failure {
    Check(String),
    Input(String),
    Capability(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capability() {
            Failure::Capability(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

struct Loaded {
    spec: RingSpec,
    ring: RingTable,
}

impl Loaded {
    fn info(&self) -> RingInfo {
        RingInfo::new(&self.spec, &self.ring)
    }
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    ring: RingInfo,
    #[serde(flatten)]
    body: T,
}

/// Rendered output plus whether every check it carries passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capability(msg)) => {
            eprintln!("unsupported: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let limits = Limits::new(cli.max_order);
    if cli.format == Format::Dot && cli.command != Command::Graph {
        return Err(Failure::Input(
            "--format dot is only available for `graph`".into(),
        ));
    }
    let outcome = match cli.command {
        Command::Validate => validate(cli, &limits)?,
        Command::Idempotents => {
            let l = load_ring(cli, &limits)?;
            let set = all_idempotents(&l.ring);
            let text = match cli.format {
                Format::Text => format!("{}\n", join(&set.members)),
                _ => to_json(&Report {
                    ring: l.info(),
                    body: json!({ "idempotents": set.members }),
                })?,
            };
            Outcome { text, ok: true }
        }
        Command::Partition => {
            let l = load_ring(cli, &limits)?;
            let p = idempotent_partition(&l.ring)?;
            let text = match cli.format {
                Format::Text => p
                    .blocks
                    .iter()
                    .map(|(e, b)| format!("B_{e}: {}\n", join(b)))
                    .collect(),
                _ => to_json(&Report {
                    ring: l.info(),
                    body: &p,
                })?,
            };
            Outcome { text, ok: true }
        }
        Command::Lift => lift(cli, &limits)?,
        Command::LiftIdeal => {
            let l = load_ring(cli, &limits)?;
            let x = required(cli.element, "--element")?;
            let ideal = ideal_closure(
                &l.ring,
                &required(cli.ideal_generators.clone(), "--ideal-generators")?,
                cli.side,
            )?;
            let lift = lift_idempotent_mod_ideal(&l.ring, &ideal, x)?;
            let ok = lift.lift_is_idempotent && lift.difference_in_ideal;
            let body = json!({ "ideal": { "side": ideal.side(), "members": ideal.members() }, "lift": lift });
            Outcome {
                text: render(cli, &l, body, |_| format!("{x} lifts to {}\n", lift.lift))?,
                ok,
            }
        }
        Command::RegularLift => {
            let l = load_ring(cli, &limits)?;
            let x = required(cli.element, "--element")?;
            let y = required(cli.witness, "--witness")?;
            let ideal = ideal_closure(
                &l.ring,
                &required(cli.ideal_generators.clone(), "--ideal-generators")?,
                cli.side,
            )?;
            let lift = lift_regular(&l.ring, &ideal, x, y)?;
            let body = json!({ "ideal": { "side": ideal.side(), "members": ideal.members() }, "lift": lift });
            Outcome {
                text: render(cli, &l, body, |_| format!("{x} lifts to {}\n", lift.z))?,
                ok: lift.verified(),
            }
        }
        Command::Graph => {
            let l = load_ring(cli, &limits)?;
            let vertices: Vec<usize> = cli
                .vertices
                .clone()
                .unwrap_or_else(|| l.ring.elements().collect());
            let g = zero_divisor_graph(&l.ring, &vertices)?;
            let text = match cli.format {
                Format::Dot => {
                    let p = if cli.with_blocks {
                        Some(idempotent_partition(&l.ring)?)
                    } else {
                        None
                    };
                    export_dot(&g, p.as_ref())
                }
                Format::Text => g
                    .edges
                    .iter()
                    .map(|[a, b]| format!("{a} -> {b}\n"))
                    .collect(),
                Format::Json => to_json(&Report {
                    ring: l.info(),
                    body: &g,
                })?,
            };
            Outcome { text, ok: true }
        }
        Command::Cliques => {
            let l = load_ring(cli, &limits)?;
            let mut reports = Vec::new();
            for c in idempotent_cliques(&l.ring)? {
                reports.push(verify_clique_sum(&l.ring, &c)?);
            }
            let ok = reports.iter().all(|r| r.holds != Some(false));
            let text = match cli.format {
                Format::Text => reports
                    .iter()
                    .map(|r| format!("{{{}}} sums to {}\n", join(&r.members), r.sum))
                    .collect(),
                _ => to_json(&Report {
                    ring: l.info(),
                    body: json!({ "cliques": reports }),
                })?,
            };
            Outcome { text, ok }
        }
        Command::VerifyAll => verify(cli, &limits)?,
    };
    emit(cli.out.as_deref(), &outcome.text)?;
    if outcome.ok {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{} reported a violation",
            command_name(cli.command)
        )))
    }
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Validate => "validate",
        Command::Idempotents => "idempotents",
        Command::Partition => "partition",
        Command::Lift => "lift",
        Command::LiftIdeal => "lift-ideal",
        Command::RegularLift => "regular-lift",
        Command::Graph => "graph",
        Command::Cliques => "cliques",
        Command::VerifyAll => "verify-all",
    }
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Input(format!("{flag} is required for this command")))
}

fn join(items: &[usize]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::Input(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn render(
    cli: &Cli,
    l: &Loaded,
    body: Value,
    text: impl Fn(&Value) -> String,
) -> Result<String, Failure> {
    match cli.format {
        Format::Text => Ok(text(&body)),
        _ => to_json(&Report {
            ring: l.info(),
            body,
        }),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Input(e.to_string());
    match out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(io),
    }
}

fn load_ring(cli: &Cli, limits: &Limits) -> Result<Loaded, Failure> {
    let path = required(cli.ring.as_deref(), "--ring")?;
    let spec = read_ring_spec(path)?;
    let ring = spec.build(limits)?;
    Ok(Loaded { spec, ring })
}

fn validate(cli: &Cli, limits: &Limits) -> Result<Outcome, Failure> {
    let path = required(cli.ring.as_deref(), "--ring")?;
    let spec = read_ring_spec(path)?;
    // Explicit tables are checked as given so that a failing table still
    // produces a report; constructor forms are always well-formed rings.
    let (report, witness, ring) = match spec.as_tables() {
        Some(tables) => {
            let raw = RawTables::new(&tables)?;
            let report = validate_axioms(&raw);
            let witness = check_power_associative(&raw);
            let ring = if report.passed && witness.is_none() {
                Some(limits.from_tables(&tables)?)
            } else {
                None
            };
            (report, witness, ring)
        }
        None => {
            let ring = spec.construct(limits)?;
            (ring.validate(), check_power_associative(&ring), Some(ring))
        }
    };
    let ok = report.passed && witness.is_none();
    let body = json!({
        "descriptor": spec,
        "hash": ring.as_ref().map(|r| r.hash().to_owned()),
        "axioms": report,
        "power_associativity_witness": witness,
        "assoc": ring.as_ref().map(RingTable::assoc_flag),
    });
    let text = match cli.format {
        Format::Text => {
            let status = if ok { "valid" } else { "invalid" };
            match witness {
                Some(w) => format!(
                    "{status}: {}; x^{} * x^{} != x^{} for x = {}\n",
                    report.summary(),
                    w.i,
                    w.j,
                    w.i + w.j,
                    w.x
                ),
                None => format!("{status}: {}\n", report.summary()),
            }
        }
        _ => to_json(&body)?,
    };
    Ok(Outcome { text, ok })
}

fn lift(cli: &Cli, limits: &Limits) -> Result<Outcome, Failure> {
    let path = cli
        .hom
        .first()
        .ok_or_else(|| Failure::Input("--hom is required for this command".into()))?;
    let e = required(cli.element, "--element")?;
    let loaded = read_hom_spec(path)?.build(limits)?;
    let lift = lift_idempotent(&loaded.source, &loaded.target, &loaded.hom, e)?;
    let ok = lift.lift_is_idempotent && lift.maps_to_target;
    let body = json!({
        "source": RingInfo::new(&loaded.spec.source, &loaded.source),
        "target": RingInfo::new(&loaded.spec.target, &loaded.target),
        "lift": lift,
    });
    let text = match cli.format {
        Format::Text => format!("{e} lifts to {} (preimage {})\n", lift.lift, lift.preimage),
        _ => to_json(&body)?,
    };
    Ok(Outcome { text, ok })
}

fn verify(cli: &Cli, limits: &Limits) -> Result<Outcome, Failure> {
    let l = load_ring(cli, limits)?;
    let homs = cli
        .hom
        .iter()
        .map(|p| {
            let name = p.file_stem().map_or_else(
                || p.display().to_string(),
                |s| s.to_string_lossy().into_owned(),
            );
            Ok((name, read_hom_spec(p)?.build(limits)?))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let cases: Vec<HomCase<'_>> = homs
        .iter()
        .map(|(name, h)| HomCase {
            name: name.clone(),
            source: &h.source,
            target: &h.target,
            hom: &h.hom,
        })
        .collect();
    let report = verify_all(&l.ring, &cases)?;
    let text = match cli.format {
        Format::Text => report
            .checks
            .iter()
            .map(|c| {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                format!("{tag} {}\n", c.name)
            })
            .collect(),
        _ => to_json(&Report {
            ring: l.info(),
            body: &report,
        })?,
    };
    Ok(Outcome {
        text,
        ok: report.passed,
    })
}
