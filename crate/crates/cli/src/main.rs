use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chilab::constants::{metallic, named_constants, phi};
use chilab::exact::rational::{parse_rational, to_ratio_string};
use chilab::fold::{fold_cf, fold_golden_from, fold_harmonic, FoldTrace};
use chilab::rect::{extend_length, extend_sequence, subdivide, Branch, Length};
use chilab::render::{Figure, FigureSpec, Style, Target};
use chilab::sequences::{
    cf_convergents, cf_convergents_exact, fibonacci_ratios, h_sequence, nested_radical, CfConfig,
    RadicalConfig,
};
use chilab::verify::run_identities;
use chilab::{Element, Error, Rational};

/// `println!` that exits quietly once stdout is closed, e.g. piped into `head`.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! out_raw {
    ($($t:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const USAGE_ERROR: u8 = 1;
const VERIFY_FAILED: u8 = 2;

/// Exact golden-ratio, chi-ratio and proportional-rectangle toolkit.
#[derive(Parser, Debug)]
#[command(name = "chilab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the named constants.
    Constants {
        #[arg(long, default_value_t = 10)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Convergent sequences.
    Converge(ConvergeArgs),
    /// Proportional extension of a rectangle.
    Extend(ExtendArgs),
    /// Folding constructions.
    Fold {
        #[command(subcommand)]
        kind: FoldCmd,
        #[arg(long, global = true)]
        json: bool,
    },
    /// Write an SVG figure.
    Render(RenderArgs),
    /// Run the exact identity suite.
    Verify,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Cf,
    Radical,
    HSeq,
    Fib,
}

#[derive(Args, Debug)]
struct ConvergeArgs {
    family: Family,
    /// Repeated partial quotient, or the radical coefficient.
    #[arg(long, default_value = "1")]
    term: String,
    /// Innermost value, or the radical start.
    #[arg(long, default_value = "1")]
    seed: String,
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 10)]
    digits: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ExtendArgs {
    /// Long side over short side.
    #[arg(
        long,
        conflicts_with = "sequence",
        required_unless_present = "sequence"
    )]
    rho: Option<String>,
    #[arg(long, default_value = "above")]
    branch: String,
    /// Print x₀ … x_K of the iterated extension instead.
    #[arg(long)]
    sequence: Option<usize>,
    #[arg(long, default_value_t = 10)]
    digits: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum FoldCmd {
    /// n + 1/(n + 1/(… + 1/n)).
    Cf {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        depth: usize,
    },
    /// 2 / (1/m + 1/n).
    Harmonic {
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: String,
    },
    /// 1 + 1/(1 + … 1/(1 + x)).
    Golden {
        #[arg(long)]
        x: String,
        #[arg(long)]
        depth: usize,
    },
    /// Check a trace saved as JSON lines.
    Replay {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct RenderArgs {
    #[command(subcommand)]
    figure: RenderCmd,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Pixels per unit length.
    #[arg(long, global = true, default_value_t = 100)]
    unit_px: u32,
    #[arg(long, global = true, default_value = "3/2")]
    stroke_px: String,
    #[arg(long, global = true, default_value = "#cccccc")]
    grey_fill: String,
    #[arg(long, global = true, default_value = "6 4")]
    dash_pattern: String,
}

#[derive(Subcommand, Debug)]
enum RenderCmd {
    /// Rectangle 1 × x split by the diagonal and its perpendicular.
    Subdivision {
        #[arg(long, default_value = "phi")]
        x: String,
    },
    /// Rectangles x₀ … x_count of the iterated extension.
    Extend {
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// One panel per fold step.
    Fold {
        #[command(subcommand)]
        kind: FoldCmd,
    },
    /// Ruler-and-compass construction of phi or chi.
    Construction {
        #[arg(long, default_value = "phi")]
        target: String,
    },
}

fn parse_element(s: &str) -> Result<Element, Error> {
    s.parse()
}

fn print_json(v: &Value) {
    out!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn constants(digits: u32, as_json: bool) -> Result<(), Error> {
    let all = named_constants();
    if as_json {
        print_json(&Value::Array(all.iter().map(|c| c.to_json()).collect()));
        return Ok(());
    }
    for c in &all {
        out!("{} {}", c.name, c.decimal(digits)?);
    }
    Ok(())
}

fn exact_row(k: usize, x: &Element, digits: u32) -> Result<(String, Value), Error> {
    let d = x.decimal(digits)?.digits;
    let text = format!("{k} {} {d}", x.closed_form());
    Ok((text, json!({"k": k, "exact": x.to_json(), "decimal": d})))
}

fn converge(a: &ConvergeArgs) -> Result<(), Error> {
    let mut rows: Vec<(String, Value)> = Vec::new();
    match a.family {
        Family::Cf => {
            let (term, seed) = (parse_element(&a.term)?, parse_element(&a.seed)?);
            let values: Vec<Element> = match (term.to_rational(), seed.to_rational()) {
                (Some(t), Some(s))
                    if t > Rational::from_integer(0.into())
                        && s > Rational::from_integer(0.into()) =>
                {
                    cf_convergents(&CfConfig::new(t, s, a.count))?
                        .into_iter()
                        .map(Element::Rational)
                        .collect()
                }
                _ => cf_convergents_exact(&CfConfig::new(term, seed, a.count))?,
            };
            for (k, x) in values.iter().enumerate() {
                rows.push(exact_row(k + 1, x, a.digits)?);
            }
        }
        Family::Radical => {
            let cfg = RadicalConfig {
                coefficient: parse_element(&a.term)?,
                start: parse_rational(&a.seed)?,
                count: a.count,
            };
            for (k, d) in nested_radical(&cfg, a.digits)?.iter().enumerate() {
                rows.push((
                    format!("{} {}", k + 1, d.digits),
                    json!({"k": k + 1, "decimal": d.digits}),
                ));
            }
        }
        Family::HSeq => {
            for (k, h) in h_sequence(a.count)?.into_iter().enumerate() {
                rows.push(exact_row(k + 1, &Element::Golden(h), a.digits)?);
            }
        }
        Family::Fib => {
            let run = fibonacci_ratios(a.count)?;
            for (k, t) in run.terms.iter().enumerate() {
                let ratio = run.ratios.get(k).map(to_ratio_string);
                let text = match &ratio {
                    Some(r) => format!("{} {t} {r}", k + 1),
                    None => format!("{} {t}", k + 1),
                };
                rows.push((
                    text,
                    json!({"k": k + 1, "term": t.to_string(), "next_ratio": ratio}),
                ));
            }
        }
    }
    if a.json {
        print_json(&Value::Array(rows.into_iter().map(|(_, v)| v).collect()));
    } else {
        for (t, _) in rows {
            out!("{t}");
        }
    }
    Ok(())
}

fn length_row(k: usize, x: &Length, digits: u32) -> Result<(String, Value), Error> {
    let d = x.decimal(digits)?.digits;
    Ok(match x.as_exact() {
        Some(e) => (
            format!("{k} {} ≈ {d}", e.closed_form()),
            json!({"k": k, "exact": e.to_json(), "decimal": d}),
        ),
        None => (
            format!("{k} ≈ {d}"),
            json!({"k": k, "exact": null, "decimal": d}),
        ),
    })
}

fn extend(a: &ExtendArgs) -> Result<(), Error> {
    if let Some(count) = a.sequence {
        let xs = extend_sequence(count)?;
        let rows = xs
            .iter()
            .enumerate()
            .map(|(k, x)| length_row(k, x, a.digits))
            .collect::<Result<Vec<_>, _>>()?;
        if a.json {
            print_json(&Value::Array(rows.into_iter().map(|(_, v)| v).collect()));
        } else {
            for (t, _) in rows {
                out!("{t}");
            }
        }
        return Ok(());
    }
    let rho = parse_element(a.rho.as_deref().expect("clap requires rho or sequence"))?;
    let branch: Branch = a.branch.parse()?;
    let x = extend_length(&Length::Exact(rho), branch)?;
    let d = x.decimal(a.digits)?.digits;
    if a.json {
        let mut v = json!({
            "exact": x.as_exact().map_or(Value::Null, Element::to_json),
            "decimal": d,
        });
        if let Some(e) = x.as_exact() {
            v["subdivision"] = subdivide(e)?.to_json(a.digits)?;
        }
        print_json(&v);
    } else {
        match x.as_exact() {
            Some(e) => out!("{} ≈ {d}", e.canonical().closed_form()),
            None => out!("≈ {d}"),
        }
    }
    Ok(())
}

enum Folded {
    Single {
        value: Rational,
        error: Option<String>,
        trace: FoldTrace,
    },
    Harmonic {
        sum_recip: Rational,
        mean: Rational,
        trace: FoldTrace,
    },
}

impl Folded {
    fn trace(&self) -> &FoldTrace {
        match self {
            Folded::Single { trace, .. } | Folded::Harmonic { trace, .. } => trace,
        }
    }
}

fn run_fold(kind: &FoldCmd) -> Result<Folded, Error> {
    Ok(match kind {
        FoldCmd::Cf { n, depth } => {
            let s = fold_cf(*n, *depth)?;
            let error = Some(distance(&s.length, &metallic(*n)?)?);
            Folded::Single {
                value: s.length,
                error,
                trace: s.trace,
            }
        }
        FoldCmd::Harmonic { m, n } => {
            let h = fold_harmonic(&parse_rational(m)?, &parse_rational(n)?)?;
            Folded::Harmonic {
                sum_recip: h.sum_recip,
                mean: h.mean,
                trace: h.trace,
            }
        }
        FoldCmd::Golden { x, depth } => {
            let s = fold_golden_from(&parse_rational(x)?, *depth)?;
            let error = Some(distance(&s.length, &Element::Golden(phi()))?);
            Folded::Single {
                value: s.length,
                error,
                trace: s.trace,
            }
        }
        FoldCmd::Replay { file } => {
            let text = fs::read_to_string(file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let trace = FoldTrace::from_json_lines(&text)?;
            Folded::Single {
                value: trace.last_length().clone(),
                error: None,
                trace,
            }
        }
    })
}

fn decimal10(x: &Rational) -> Result<String, Error> {
    Ok(Element::Rational(x.clone()).decimal(10)?.digits)
}

/// `|value − limit|` in scientific notation.
fn distance(value: &Rational, limit: &Element) -> Result<String, Error> {
    let d = Element::Rational(value.clone()).checked_sub(limit)?;
    let d = if d.sign() < 0 { d.neg() } else { d };
    let digits = d.decimal(60)?.digits;
    Ok(format!("{:.3e}", digits.parse::<f64>().unwrap_or(0.0)))
}

fn fold(kind: &FoldCmd, as_json: bool) -> Result<(), Error> {
    let folded = run_fold(kind)?;
    let steps: Vec<Value> = folded.trace().steps.iter().map(|s| s.to_json()).collect();
    match &folded {
        Folded::Single { value, error, .. } => {
            if as_json {
                let mut v = json!({
                    "value": to_ratio_string(value),
                    "decimal": decimal10(value)?,
                });
                if let Some(e) = error {
                    v["error"] = json!(e);
                }
                v["trace"] = Value::Array(steps);
                print_json(&v);
            } else {
                out_raw!("{}", folded.trace().to_json_lines());
                out!("{} ≈ {}", to_ratio_string(value), decimal10(value)?);
                if let Some(e) = error {
                    out!("error {e}");
                }
            }
        }
        Folded::Harmonic {
            sum_recip, mean, ..
        } => {
            if as_json {
                print_json(&json!({
                    "sum_recip": to_ratio_string(sum_recip),
                    "mean": to_ratio_string(mean),
                    "trace": steps,
                }));
            } else {
                out_raw!("{}", folded.trace().to_json_lines());
                out!("sum_recip {}", to_ratio_string(sum_recip));
                out!("mean {} ≈ {}", to_ratio_string(mean), decimal10(mean)?);
            }
        }
    }
    Ok(())
}

fn render(a: &RenderArgs) -> Result<(), Error> {
    let style = Style {
        unit_px: a.unit_px,
        stroke_px: parse_rational(&a.stroke_px)?,
        grey_fill: a.grey_fill.clone(),
        dash_pattern: a.dash_pattern.clone(),
    };
    let figure = match &a.figure {
        RenderCmd::Subdivision { x } => Figure::Subdivision(parse_element(x)?),
        RenderCmd::Extend { count } => Figure::ExtendSequence(*count),
        RenderCmd::Fold { kind } => Figure::FoldTrace(run_fold(kind)?.trace().clone()),
        RenderCmd::Construction { target } => Figure::Construction(target.parse::<Target>()?),
    };
    let svg = FigureSpec { figure, style }.render()?;
    match &a.out {
        Some(path) => fs::write(path, svg)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            out_raw!("{svg}");
            Ok(())
        }
    }
}

fn verify() -> ExitCode {
    let results = run_identities();
    let mut failed = 0;
    for r in &results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        match &r.detail {
            Some(d) => out!("{mark} {} ({d})", r.name),
            None => out!("{mark} {}", r.name),
        }
        failed += usize::from(!r.passed);
    }
    out!(
        "{} of {} identities hold",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VERIFY_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_ERROR } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Constants { digits, json } => constants(*digits, *json),
        Command::Converge(a) => converge(a),
        Command::Extend(a) => extend(a),
        Command::Fold { kind, json } => fold(kind, *json),
        Command::Render(a) => render(a),
        Command::Verify => return verify(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run `chilab --help` for usage");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
