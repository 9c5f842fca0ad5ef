//! `ulrich`: classify normal simplicial affine semigroups from their rays.
//!
//! Exit codes: 0 ok, 1 invalid input, 2 enumeration budget exceeded,
//! 3 oracle mismatch.
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ulrich_core::survey::CSV_HEADER;
use ulrich_core::{
    analyze, oracle_diff, parse_input, survey, Budget, ClassificationReport, DiffReport, Error,
    IntVector, Mutation, OrientedModel, SemigroupModel, SurveyRow, UlrichCertificate,
    UlrichVerdict,
};

#[derive(Parser, Debug)]
#[command(
    name = "ulrich",
    version,
    about = "Hilbert bases, canonical ideals and Ulrich elements of simplicial affine semigroups"
)]
struct Cli {
    /// Largest number of lattice points any single enumeration may visit.
    #[arg(long, global = true, default_value_t = Budget::default().max_points)]
    budget: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON.
    Structured,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full classification report for one semigroup.
    Analyze {
        /// Input document, or `-` for stdin.
        input: String,
        /// Add `timing_ms` to the report.
        #[arg(long)]
        timing: bool,
    },
    /// Hilbert basis only.
    Hilbert { input: String },
    /// Ulrich test for one interior element of a planar semigroup.
    CheckUlrich {
        input: String,
        /// Coordinates as `x,y`.
        #[arg(long)]
        element: String,
    },
    /// One row per ray pair with entries up to `--max`.
    Survey {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        require_ones_interior: bool,
        /// Same as `--format csv`.
        #[arg(long)]
        csv: bool,
    },
    /// Compare every fast path with its brute-force reference.
    OracleDiff {
        #[arg(long)]
        max: u64,
        /// Corrupt the residue inequality, to check that the diff notices.
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

enum Failure {
    Invalid(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let (out, code) = match run(&cli) {
        Ok((out, mismatch)) => (out, if mismatch { 3 } else { 0 }),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            (String::new(), 1)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            (String::new(), 2)
        }
    };
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}

// Output text, and whether a cross-check disagreed.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let budget = Budget::new(cli.budget);
    let mut mismatch = false;
    let out = match &cli.command {
        Command::Analyze { input, timing } => {
            let rays = read_rays(input)?;
            let start = Instant::now();
            let mut report = analyze(rays, &budget)?;
            if *timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            match cli.format {
                Format::Structured => json(&report),
                Format::Text => Ok(report_text(&report)),
                Format::Csv => Err(no_csv("analyze")),
            }
        }
        Command::Hilbert { input } => {
            let model = SemigroupModel::build(read_rays(input)?, &budget)?;
            let basis = model.hilbert_basis();
            match cli.format {
                Format::Structured => json(&serde_json::json!({ "hilbert_basis": basis })),
                Format::Text => Ok(basis.iter().map(|b| format!("{b}\n")).collect()),
                Format::Csv => Err(no_csv("hilbert")),
            }
        }
        Command::CheckUlrich { input, element } => {
            let element: IntVector = element.parse()?;
            let om = OrientedModel::build(read_rays(input)?, budget)?;
            let verdict = om.is_ulrich(&element)?;
            match cli.format {
                Format::Structured => json(&verdict),
                Format::Text => Ok(verdict_text(&verdict)),
                Format::Csv => Err(no_csv("check-ulrich")),
            }
        }
        Command::Survey {
            max,
            require_ones_interior,
            csv,
        } => {
            let rows = survey(*max, *require_ones_interior, &budget)?;
            mismatch = rows.iter().any(|r| r.mismatch);
            match (cli.format, csv) {
                (Format::Csv, _) | (_, true) => survey_csv(&rows),
                (Format::Structured, _) => json(&rows),
                (Format::Text, _) => Ok(survey_text(&rows)),
            }
        }
        Command::OracleDiff { max, mutate } => {
            let mutation = if *mutate {
                Mutation::FlipAgResidue
            } else {
                Mutation::None
            };
            let report = oracle_diff(*max, mutation, &budget)?;
            mismatch = !report.mismatches.is_empty();
            match cli.format {
                Format::Structured => json(&report),
                Format::Text => Ok(diff_text(&report)),
                Format::Csv => diff_csv(&report),
            }
        }
    }?;
    Ok((out, mismatch))
}

fn no_csv(command: &str) -> Failure {
    Failure::Invalid(format!("{command} has no csv output"))
}

fn read_rays(path: &str) -> Result<Vec<IntVector>, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{path}: {e}")))?;
    }
    Ok(parse_input(&text)?.rays)
}

fn json<T: Serialize>(value: &T) -> Outcome {
    let mut out =
        serde_json::to_string_pretty(value).map_err(|e| Failure::Invalid(e.to_string()))?;
    out.push('\n');
    Ok(out)
}

fn list(points: &[IntVector]) -> String {
    if points.is_empty() {
        return "none".into();
    }
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn report_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "rays              {}", list(&r.rays));
    let _ = writeln!(s, "dimension         {}", r.dimension);
    let _ = writeln!(s, "determinant       {}", r.determinant);
    let _ = writeln!(s, "hilbert basis     {}", list(&r.hilbert_basis));
    let _ = writeln!(s, "omega generators  {}", list(&r.omega_generators));
    match (&r.slim.witness, &r.slim.witness_sum) {
        (Some(w), Some(sum)) => {
            let _ = writeln!(
                s,
                "slim              no (witness {w}, coordinate sum {sum})"
            );
        }
        _ => {
            let _ = writeln!(s, "slim              yes");
        }
    }
    match &r.bottom {
        Some(b) => {
            let _ = writeln!(s, "bottom            {b}");
        }
        None => {
            let _ = writeln!(
                s,
                "bottom            none (minimal elements {})",
                list(&r.omega_minimal_elements)
            );
        }
    }
    let _ = writeln!(s, "gorenstein        {}", yes(r.gorenstein));
    let _ = write!(s, "nearly gorenstein {}", yes(r.nearly_gorenstein));
    if !r.nearly_gorenstein {
        let _ = write!(
            s,
            " (outside the trace: {})",
            list(&r.nearly_gorenstein_failures)
        );
    }
    s.push('\n');
    if let Some(p) = &r.plane {
        let _ = writeln!(s, "a1 a2             {} {}", p.a1, p.a2);
        let _ = writeln!(
            s,
            "H_1^*             {} ({})",
            list(&p.h_star_1.points),
            p.h_star_1.count
        );
        let _ = writeln!(
            s,
            "H_2^*             {} ({})",
            list(&p.h_star_2.points),
            p.h_star_2.count
        );
        let _ = writeln!(s, "AG1 AG2           {} {}", yes(p.ag1), yes(p.ag2));
        let _ = writeln!(s, "bottom ulrich     {}", yes(p.bottom_ulrich));
        if let Some(ones) = p.ones_criterion {
            let _ = writeln!(s, "(1,1) residues    {}", yes(ones));
        }
        let _ = writeln!(s, "ulrich elements   {}", list(&p.ulrich_elements.elements));
    }
    if let Some(ag) = r.almost_gorenstein {
        let _ = writeln!(s, "almost gorenstein {}", yes(ag));
    }
    if let Some(ms) = r.timing_ms {
        let _ = writeln!(s, "time              {ms} ms");
    }
    s
}

fn verdict_text(v: &UlrichVerdict) -> String {
    match &v.certificate {
        UlrichCertificate::AllPairsCovered => format!("{} is an Ulrich element\n", v.element),
        UlrichCertificate::Violation { p, q } => format!(
            "{} is not an Ulrich element: {p} + {q} is not covered\n",
            v.element
        ),
    }
}

fn survey_csv(rows: &[SurveyRow]) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Invalid(e.to_string());
    w.write_record(CSV_HEADER).map_err(io_err)?;
    for row in rows {
        w.write_record(row.csv_record()).map_err(io_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Invalid(e.to_string()))
}

fn survey_text(rows: &[SurveyRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let mut flags = Vec::new();
        for (on, name) in [
            (r.gorenstein, "gorenstein"),
            (r.ag1, "AG1"),
            (r.ag2, "AG2"),
            (r.bottom_ulrich, "bottom-ulrich"),
            (r.nearly_gorenstein, "nearly"),
            (r.mismatch, "MISMATCH"),
        ] {
            if on {
                flags.push(name);
            }
        }
        let _ = writeln!(
            s,
            "({},{}) ({},{}) b=({},{}) {}",
            r.x1,
            r.y1,
            r.x2,
            r.y2,
            r.u,
            r.v,
            flags.join(" ")
        );
    }
    let _ = writeln!(
        s,
        "{} semigroups, {} mismatches",
        rows.len(),
        rows.iter().filter(|r| r.mismatch).count()
    );
    s
}

fn diff_text(report: &DiffReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} instances", report.instances);
    for (check, n) in &report.checks {
        let bad = report.mismatches_for(check).len();
        let _ = writeln!(s, "{n:>9} compared {bad:>6} mismatched  {check}");
    }
    for m in &report.mismatches {
        let _ = writeln!(
            s,
            "MISMATCH {} {} [{}] fast {} oracle {}",
            m.a1, m.a2, m.check, m.fast, m.oracle
        );
    }
    s
}

fn diff_csv(report: &DiffReport) -> Outcome {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Failure::Invalid(e.to_string());
    w.write_record(["a1", "a2", "check", "fast", "oracle"])
        .map_err(io_err)?;
    for m in &report.mismatches {
        w.write_record([
            &m.a1.to_string(),
            &m.a2.to_string(),
            m.check,
            &m.fast,
            &m.oracle,
        ])
        .map_err(io_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::Invalid(e.to_string()))
}
