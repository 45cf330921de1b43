use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use permupark::counting::{fubini, stirling2, t_count};
use permupark::oracle::{brute_pf, brute_ppf, brute_upf, verify_all, CheckStatus};
use permupark::permutohedron::{dot_document, json_document};
use permupark::symmetry::{count_entry_permutations_preserving_upf, orbit, orbit_size, stabilizer};
use permupark::{
    build_face_lattice, enumerate_osps, is_upf_via_dyck, pf_to_labeled_dyck, phi, psi, Error,
    Limits, OrderedSetPartition, PrefList,
};

const EXIT_INPUT: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "permupark",
    version,
    about = "Unit-interval parking functions and permutohedron faces"
)]
struct Cli {
    /// Worker threads for enumerations (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the parking protocol.
    Park {
        #[arg(long)]
        pf: String,
    },
    /// Classify a preference list.
    Check {
        #[arg(long)]
        pf: String,
    },
    /// Prime decomposition of a parking function.
    Decompose {
        #[arg(long)]
        pf: String,
    },
    /// Labeled Dyck path of a parking function.
    Dyck {
        #[arg(long)]
        pf: String,
        #[arg(long, conflicts_with = "json")]
        ascii: bool,
        #[arg(long)]
        json: bool,
    },
    /// Translate between faces and unit-interval parking functions.
    Bij {
        #[command(subcommand)]
        direction: Direction,
    },
    /// Faces of the permutohedron.
    Faces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List or count objects of size n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        by_displacement: bool,
    },
    /// Orbit and stabilizer under the face action.
    Orbit {
        #[arg(long)]
        pf: String,
    },
    /// Run every brute-force cross-check for one n.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Direction {
    /// Ordered set partition of a unit-interval parking function.
    ToOsp { pf: String },
    /// Unit-interval parking function labelling a face.
    ToUpf { osp: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Pf,
    Upf,
    Osp,
    Ppf,
    Counts,
}

enum Failure {
    Input(Error),
    Verify(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<String, Failure>;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn park(pf: &str) -> Outcome {
    let a: PrefList = pf.parse()?;
    let r = a.park()?;
    let mut out = String::new();
    let _ = writeln!(out, "outcome: {}", r.outcome);
    let _ = writeln!(out, "displacement: {}", join(&r.displacement, ","));
    let _ = writeln!(out, "total: {}", r.total_displacement());
    let _ = writeln!(out, "partition: {}", a.displacement_partition()?);
    Ok(out)
}

fn check(pf: &str) -> Outcome {
    let a: PrefList = pf.parse()?;
    let mut out = String::new();
    let _ = writeln!(out, "parking function: {}", yes(a.is_parking_function()));
    if !a.is_parking_function() {
        return Ok(out);
    }
    let by_displacement = a.is_unit_interval();
    let by_components = a.characterize_unit_interval()?;
    let by_dyck = is_upf_via_dyck(&a)?;
    let _ = writeln!(out, "unit-interval: {}", yes(by_displacement));
    let _ = writeln!(out, "prime: {}", yes(a.is_prime()?));
    let _ = writeln!(out, "breakpoints: {}", join(&a.breakpoints()?, ","));
    let _ = writeln!(out, "decomposition: {}", a.prime_decompose()?);
    let _ = writeln!(
        out,
        "tests: displacement={} components={} dyck={}",
        yes(by_displacement),
        yes(by_components),
        yes(by_dyck)
    );
    if by_displacement != by_components || by_displacement != by_dyck {
        return Err(Failure::Verify(
            "disagreement".into(),
            format!("unit-interval tests disagree on {a}"),
        ));
    }
    Ok(out)
}

fn decompose(pf: &str) -> Outcome {
    let a: PrefList = pf.parse()?;
    let parts = a.prime_decompose()?;
    let mut out = String::new();
    let _ = writeln!(out, "rearrangement: {}", a.parking_rearrangement()?);
    let _ = writeln!(out, "breakpoints: {}", join(&a.breakpoints()?, ","));
    let _ = writeln!(out, "components: {parts}");
    let _ = writeln!(out, "lengths: {}", join(&parts.lengths(), ","));
    Ok(out)
}

fn dyck(pf: &str, ascii: bool, json: bool) -> Outcome {
    let a: PrefList = pf.parse()?;
    let path = pf_to_labeled_dyck(&a)?;
    if json {
        let mut s = serde_json::to_string(&path.to_json()).expect("plain data serializes");
        s.push('\n');
        return Ok(s);
    }
    if ascii {
        return Ok(path.render_ascii());
    }
    let mut out = String::new();
    let _ = writeln!(out, "steps: {}", path.step_string());
    let _ = writeln!(out, "labels: {}", join(path.labels(), ","));
    let _ = writeln!(out, "height: {}", path.height());
    let _ = writeln!(out, "returns: {}", join(&path.returns(), ","));
    Ok(out)
}

fn bij(direction: &Direction) -> Outcome {
    match direction {
        Direction::ToOsp { pf } => Ok(format!("{}\n", phi(&pf.parse()?)?)),
        Direction::ToUpf { osp } => {
            let p: OrderedSetPartition = osp.parse()?;
            Ok(format!("{}\n", psi(&p)))
        }
    }
}

fn faces(n: usize, dim: Option<usize>, format: Format, limits: &Limits) -> Outcome {
    if let Some(d) = dim {
        if d >= n {
            return Err(Error::Domain(format!("dimension {d} outside 0..{n}")).into());
        }
    }
    let lat = build_face_lattice(n, limits)?;
    Ok(match format {
        Format::Json => json_document(&lat.to_json_document(dim)),
        Format::Dot => dot_document(&lat, dim),
        Format::Table => {
            let mut out = String::from("id | dim | osp | upf | type\n");
            for (id, f) in lat.faces.iter().enumerate() {
                if dim.is_some_and(|d| d != f.dimension) {
                    continue;
                }
                let _ = writeln!(
                    out,
                    "{id} | {} | {} | {} | {}",
                    f.dimension,
                    f.osp,
                    f.upf_label,
                    join(&f.comb_type, "x")
                );
            }
            out
        }
    })
}

fn histogram(n: usize, displacements: impl Iterator<Item = usize>) -> String {
    let mut counts = vec![0usize; n * (n - 1) / 2 + 1];
    for d in displacements {
        counts[d] += 1;
    }
    let top = counts.iter().rposition(|&c| c > 0).unwrap_or(0);
    let mut out = String::from("displacement | count\n");
    for (d, c) in counts.iter().enumerate().take(top + 1) {
        let _ = writeln!(out, "{d} | {c}");
    }
    out
}

fn enumerate(n: usize, what: What, by_displacement: bool, limits: &Limits) -> Outcome {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()).into());
    }
    let me = |a: &PrefList| a.total_displacement().expect("parking function");
    let lines = |items: Vec<String>| items.into_iter().map(|s| s + "\n").collect::<String>();
    Ok(match what {
        What::Counts => {
            let mut out = String::from("k | S(n,k) | T(n,k)\n");
            for k in 1..=n {
                let _ = writeln!(out, "{k} | {} | {}", stirling2(n, k)?, t_count(n, k)?);
            }
            let _ = writeln!(out, "fubini: {}", fubini(n));
            out
        }
        What::Pf if by_displacement => histogram(n, brute_pf(n, limits)?.map(|a| me(&a))),
        What::Upf if by_displacement => histogram(n, brute_upf(n, limits)?.map(|a| me(&a))),
        What::Ppf if by_displacement => histogram(n, brute_ppf(n, limits)?.map(|a| me(&a))),
        What::Osp if by_displacement => histogram(
            n,
            enumerate_osps(n, None, limits)?.map(|p| n - p.block_count()),
        ),
        What::Pf => lines(brute_pf(n, limits)?.map(|a| a.to_string()).collect()),
        What::Upf => lines(brute_upf(n, limits)?.map(|a| a.to_string()).collect()),
        What::Ppf => lines(brute_ppf(n, limits)?.map(|a| a.to_string()).collect()),
        What::Osp => lines(
            enumerate_osps(n, None, limits)?
                .map(|p| p.to_string())
                .collect(),
        ),
    })
}

fn orbit_report(pf: &str, limits: &Limits) -> Outcome {
    let a: PrefList = pf.parse()?;
    let stab = stabilizer(&a)?;
    let count = count_entry_permutations_preserving_upf(&a, limits)?;
    let mut out = String::new();
    let _ = writeln!(out, "orbit size: {}", orbit_size(&a)?);
    let _ = writeln!(out, "stabilizer order: {}", stab.order);
    let generators: Vec<String> = stab
        .generators
        .iter()
        .map(|(i, j)| format!("({i} {j})"))
        .collect();
    let _ = writeln!(out, "stabilizer generators: {}", generators.join(" "));
    let _ = writeln!(out, "preserving permutations: {}", count.closed_form);
    match &count.enumerated {
        Some(e) => {
            let _ = writeln!(out, "preserving permutations (enumerated): {e}");
        }
        None => {
            let _ = writeln!(out, "preserving permutations (enumerated): skipped");
        }
    }
    if let Ok(members) = orbit(&a, limits) {
        let _ = writeln!(out, "orbit:");
        for b in members {
            let _ = writeln!(out, "{b}");
        }
    }
    if !count.agrees() {
        return Err(Failure::Verify(
            "disagreement".into(),
            format!(
                "closed form {} but enumerated {:?}",
                count.closed_form, count.enumerated
            ),
        ));
    }
    Ok(out)
}

fn verify(n: usize, json: bool, limits: &Limits) -> Result<(String, bool), Failure> {
    let report = verify_all(n, limits)?;
    let text = if json {
        let mut s = serde_json::to_string_pretty(&report).expect("plain data serializes");
        s.push('\n');
        s
    } else {
        let mut out = String::new();
        for c in &report.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            let _ = writeln!(out, "{status} {}: {}", c.name, c.actual);
        }
        let failed = report.failures().count();
        let _ = writeln!(out, "{} checks, {failed} failed", report.checks.len());
        out
    };
    Ok((text, report.passed))
}

fn run(cli: Cli) -> Result<(String, Option<PathBuf>, bool), Failure> {
    let limits = Limits::from_env();
    let text = match cli.command {
        Command::Park { pf } => park(&pf)?,
        Command::Check { pf } => check(&pf)?,
        Command::Decompose { pf } => decompose(&pf)?,
        Command::Dyck { pf, ascii, json } => dyck(&pf, ascii, json)?,
        Command::Bij { direction } => bij(&direction)?,
        Command::Faces {
            n,
            dim,
            format,
            out,
        } => {
            return Ok((faces(n, dim, format, &limits)?, out, true));
        }
        Command::Enumerate {
            n,
            what,
            by_displacement,
        } => enumerate(n, what, by_displacement, &limits)?,
        Command::Orbit { pf } => orbit_report(&pf, &limits)?,
        Command::Verify { n, json } => {
            let (text, passed) = verify(n, json, &limits)?;
            return Ok((text, None, passed));
        }
    };
    Ok((text, None, true))
}

fn diagnose(code: &str, message: &str) {
    let message = message.lines().next().unwrap_or("").trim();
    eprintln!("permupark: error: {code}: {message}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let message = rendered.trim_start_matches("error: ");
            diagnose("usage", message);
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            diagnose("threads", &e.to_string());
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok((text, target, passed)) => {
            match target {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        diagnose("io", &format!("{}: {e}", path.display()));
                        return ExitCode::from(EXIT_INPUT);
                    }
                }
                None => print!("{text}"),
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                diagnose("verification-failed", "one or more checks failed");
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(Failure::Input(e)) => {
            diagnose(e.code(), &e.to_string());
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Verify(code, message)) => {
            diagnose(&code, &message);
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
