//! `negabeta`: command-line access to expansions, languages, codes, series and gaps.

mod beta;
mod plot;

use clap::{Args, Parser, Subcommand, ValueEnum};
use negabeta::codes::{
    block_structure, build_code_c_from, build_delta_evn, build_delta_odd, build_gamma, delta_families, is_uniquely_decodable,
    is_prefix_code, kraft_sum, support_code, SupportCode, WordSet,
};
use negabeta::expansion::{expand, reference_pair, ReferencePair, TailStatus};
use negabeta::gaps::{all_gaps, cascade_classify, decompose_expansion, gamma_n, morphism_words};
use negabeta::language::{classify, factor_complexity, count_periodic_points_in, Language, PeriodicTarget, ShiftVariant};
use negabeta::laps::laps;
use negabeta::numerics::{BetaSpec, RationalInterval};
use negabeta::order::format_word;
use negabeta::series::{lap_series_from, verify_identities, zeta_shift_from, zeta_transformation_from, IntSeries};
use negabeta::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

const SCHEMA: u32 = 1;
const HORIZON_ENV: &str = "NEGABETA_MAX_HORIZON";

#[derive(Parser)]
#[command(name = "negabeta", version, about = "Exact (−β)-expansions, their languages, codes and zeta functions")]
struct Cli {
    #[command(flatten)]
    job: Job,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Job {
    /// Base: 5/2, 2.5, golden, gamma:N or root:c_n,...,c_0@lo:hi
    #[arg(long, global = true, default_value = "golden")]
    beta: String,
    /// Digits of d(l) computed before giving up on periodicity
    #[arg(long, global = true, default_value_t = 512)]
    horizon: usize,
    /// Series order N
    #[arg(long, global = true, default_value_t = 32)]
    order: usize,
    /// Word length L for enumerations
    #[arg(long, global = true, default_value_t = 12)]
    length: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, value_enum, default_value_t = Variant::Corrected)]
    variant: Variant,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Ito,
    Corrected,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Shift,
    Transformation,
}

#[derive(Subcommand)]
enum Command {
    /// Digits of the expansion of x (default l_β)
    Expand {
        #[arg(long, default_value_t = 32)]
        digits: usize,
        /// A rational such as -1/3 or 0.25, or `l`
        #[arg(long, default_value = "l", allow_hyphen_values = true)]
        x: String,
    },
    /// Codedness, transitivity and witnesses
    Classify,
    /// Block structure and code families up to --length
    Codes,
    /// Factor complexity by recurrence and by enumeration
    Complexity,
    /// Lap-counting series and geometric lap counts
    Laps {
        /// Largest iterate counted geometrically
        #[arg(long, default_value_t = 6)]
        iterate: usize,
    },
    /// Zeta functions of the transformation and the shift
    Zeta {
        #[arg(long)]
        assume_nonperiodic: bool,
    },
    /// Brute-force periodic point counts for n = 1..=L
    PeriodicPoints {
        #[arg(long, value_enum, default_value_t = Target::Transformation)]
        target: Target,
    },
    /// Cascade level, gap intervals and factorization below the golden ratio
    Gaps,
    /// Coefficient-wise identity residuals
    Verify,
    /// SVG graph of T^n
    Plot {
        #[arg(long, default_value_t = 3)]
        iterate: usize,
    },
}

enum Output {
    Done(String),
    /// Something was left undecided; the text is still emitted.
    Partial(String),
}

struct Context {
    beta: BetaSpec,
    beta_text: String,
    horizon: usize,
    job: Job,
}

impl Context {
    fn reference(&self) -> Result<ReferencePair, Error> {
        reference_pair(&self.beta, self.horizon)
    }

    fn variant(&self) -> ShiftVariant {
        match self.job.variant {
            Variant::Ito => ShiftVariant::ItoSadahiro,
            Variant::Corrected => ShiftVariant::Corrected,
        }
    }

    fn header(&self, command: &str) -> serde_json::Map<String, Value> {
        let mut m = serde_json::Map::new();
        m.insert("schema".into(), json!(SCHEMA));
        m.insert("command".into(), json!(command));
        m.insert("beta".into(), json!(self.beta_text));
        m.insert("beta_value".into(), json!(self.beta.to_string()));
        m.insert("horizon".into(), json!(self.horizon));
        m
    }
}

fn horizon_cap() -> Result<Option<usize>, String> {
    match std::env::var(HORIZON_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| format!("{HORIZON_ENV} is not a number: {v}")),
        Err(_) => Ok(None),
    }
}

fn status_name(s: TailStatus) -> &'static str {
    match s {
        TailStatus::Periodic => "periodic",
        TailStatus::Aperiodic => "aperiodic",
        TailStatus::Unknown => "unknown",
    }
}

fn strings(s: &IntSeries) -> Value {
    json!(s.to_strings())
}

fn big_strings(v: &[BigInt]) -> Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

/// Decimal string of x rounded toward −∞ (`up = false`) or +∞, with `places` digits.
fn decimal(x: &BigRational, places: usize, up: bool) -> String {
    let scale = num_traits::pow(BigInt::from(10), places);
    let y = x * BigRational::from_integer(scale.clone());
    let n = if up { y.ceil().to_integer() } else { y.floor().to_integer() };
    let neg = n.is_negative();
    let digits = n.abs().to_string();
    let digits = format!("{:0>width$}", digits, width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    format!("{}{int}.{frac}", if neg { "-" } else { "" })
}

fn interval_json(i: &RationalInterval) -> Value {
    json!([decimal(&i.lo, 20, false), decimal(&i.hi, 20, true)])
}

fn word_set_json(s: &WordSet) -> Value {
    let mut v = s.to_json();
    v["prefix_code"] = json!(is_prefix_code(s));
    v["uniquely_decodable"] = json!(is_uniquely_decodable(s));
    if s.contains_empty() {
        v["contains_empty"] = json!(true);
    }
    v
}

fn csv(header: &str, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = format!("{header}\n");
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn pretty(m: serde_json::Map<String, Value>) -> String {
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json");
    s.push('\n');
    s
}

fn require_format(ctx: &Context, allowed: &[Format]) -> Result<(), String> {
    if allowed.contains(&ctx.job.format) {
        Ok(())
    } else {
        Err("output format not available for this command".into())
    }
}

fn run_expand(ctx: &Context, digits: usize, x: &str) -> Result<Output, String> {
    require_format(ctx, &[Format::Json, Format::Csv])?;
    if digits > ctx.horizon {
        return Err(format!("--digits {digits} exceeds horizon {}", ctx.horizon));
    }
    let point = if x == "l" { ctx.beta.l() } else { ctx.beta.from_rational(beta::parse_rational(x).map_err(|e| e.to_string())?) };
    let e = expand(&point, &ctx.beta, digits).map_err(|e| e.to_string())?;
    let shown = match e.seq.known_len() {
        Some(k) => e.seq.take(k.min(digits)),
        None => e.seq.take(digits),
    }
    .map_err(|e| e.to_string())?;
    if ctx.job.format == Format::Csv {
        return Ok(Output::Done(csv("index,digit", shown.iter().enumerate().map(|(i, d)| vec![(i + 1).to_string(), d.to_string()]))));
    }
    let mut m = ctx.header("expand");
    m.insert("horizon".into(), json!(digits));
    m.insert("x".into(), json!(x));
    m.insert("integer_part_length".into(), json!(e.integer_part_length));
    m.insert("digits".into(), json!(shown.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")));
    m.insert("sequence".into(), json!(e.seq.to_string()));
    m.insert("status".into(), json!(status_name(e.status)));
    Ok(Output::Done(pretty(m)))
}

fn run_classify(ctx: &Context) -> Result<Output, String> {
    require_format(ctx, &[Format::Json])?;
    let mut m = ctx.header("classify");
    match classify(&ctx.beta, ctx.horizon) {
        Ok(c) => {
            m.insert("status".into(), json!("decided"));
            m.insert("s_coded".into(), json!(c.s_coded));
            m.insert("s_tilde_coded".into(), json!(c.s_tilde_coded));
            m.insert("transitive".into(), json!(c.transitive));
            m.insert("at_least_golden".into(), json!(c.at_least_golden));
            m.insert("odd_period".into(), json!(c.periodic_odd));
            m.insert(
                "witness".into(),
                match c.witness {
                    Some(w) => json!({"left": format_word(&w.left), "right": format_word(&w.right), "joined": format_word(&w.joined())}),
                    None => Value::Null,
                },
            );
            Ok(Output::Done(pretty(m)))
        }
        Err(Error::UnknownAtHorizon { horizon }) => {
            m.insert("status".into(), json!("unknown_at_horizon"));
            m.insert("horizon".into(), json!(horizon));
            Ok(Output::Partial(pretty(m)))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_codes(ctx: &Context) -> Result<Output, String> {
    require_format(ctx, &[Format::Json])?;
    let rp = ctx.reference().map_err(|e| e.to_string())?;
    let l = ctx.job.length;
    let e = |e: Error| e.to_string();
    let blocks = block_structure(&rp.d_star, l + 2).map_err(e)?;
    let gamma = build_gamma(&rp.d, l).map_err(e)?;
    let c = build_code_c_from(&rp.d, l).map_err(e)?;
    let mut m = ctx.header("codes");
    m.insert("d".into(), json!(rp.d.to_string()));
    m.insert("d_star".into(), json!(rp.d_star.to_string()));
    m.insert(
        "blocks".into(),
        json!(blocks.blocks.iter().map(|b| json!({"word_length": b.word_len(), "p": b.p, "p_exact": b.p_exact})).collect::<Vec<_>>()),
    );
    let support = support_code(&ctx.beta).map_err(e)?;
    m.insert(
        "support_code".into(),
        json!(match support {
            SupportCode::CFull => "c".to_string(),
            SupportCode::DeltaOdd => "delta_odd".to_string(),
            SupportCode::DeltaI(i) => format!("delta_{i}"),
        }),
    );
    m.insert("gamma0".into(), word_set_json(&gamma.gamma0));
    m.insert("gamma0_prime".into(), word_set_json(&gamma.gamma0_prime));
    m.insert("gamma1".into(), word_set_json(&gamma.gamma1));
    m.insert("gamma1_prime".into(), word_set_json(&gamma.gamma1_prime));
    m.insert("delta_odd".into(), word_set_json(&build_delta_odd(&rp.d, l).map_err(e)?));
    m.insert("delta_evn".into(), word_set_json(&build_delta_evn(&rp.d, l).map_err(e)?));
    let fams = delta_families(&rp.d, l).map_err(e)?;
    m.insert(
        "delta_i".into(),
        Value::Object(fams.iter().map(|(i, s)| (i.to_string(), word_set_json(s))).collect()),
    );
    m.insert("c".into(), word_set_json(&c));
    m.insert("kraft_c".into(), interval_json(&kraft_sum(&c, &ctx.beta, l)));
    Ok(Output::Done(pretty(m)))
}

fn run_complexity(ctx: &Context) -> Result<Output, String> {
    require_format(ctx, &[Format::Json, Format::Csv])?;
    let rp = ctx.reference().map_err(|e| e.to_string())?;
    let l = ctx.job.length;
    let h = factor_complexity(l, &rp.d_star).map_err(|e| e.to_string())?;
    let lang = Language::from_reference(&ctx.beta, ctx.variant(), rp);
    let census = lang.census(l).map_err(|e| e.to_string())?;
    if ctx.job.format == Format::Csv {
        return Ok(Output::Done(csv(
            "n,recurrence,census",
            (0..=l).map(|n| vec![n.to_string(), h[n].to_string(), census[n].to_string()]),
        )));
    }
    let mut m = ctx.header("complexity");
    m.insert("variant".into(), json!(if ctx.job.variant == Variant::Ito { "ito" } else { "corrected" }));
    m.insert("recurrence".into(), big_strings(&h));
    m.insert("census".into(), json!(census.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    Ok(Output::Done(pretty(m)))
}

fn run_laps(ctx: &Context, iterate: usize) -> Result<Output, String> {
    require_format(ctx, &[Format::Json, Format::Csv])?;
    let rp = ctx.reference().map_err(|e| e.to_string())?;
    let n = ctx.job.order;
    let series = lap_series_from(&rp, n).map_err(|e| e.to_string())?;
    let geo: Vec<usize> = (1..=iterate.min(n)).map(|k| laps(&ctx.beta, k).map(|v| v.len())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    if ctx.job.format == Format::Csv {
        return Ok(Output::Done(csv(
            "n,laps,geometric",
            series.to_strings().into_iter().enumerate().map(|(i, c)| {
                let g = if i == 0 { "1".to_string() } else { geo.get(i - 1).map(|x| x.to_string()).unwrap_or_default() };
                vec![i.to_string(), c, g]
            }),
        )));
    }
    let mut m = ctx.header("laps");
    m.insert("order".into(), json!(n));
    m.insert("laps".into(), strings(&series));
    m.insert("geometric".into(), json!(geo.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    Ok(Output::Done(pretty(m)))
}

fn run_zeta(ctx: &Context, assume: bool) -> Result<Output, String> {
    require_format(ctx, &[Format::Json, Format::Csv])?;
    let rp = ctx.reference().map_err(|e| e.to_string())?;
    let n = ctx.job.order;
    let (z, zs) = match (zeta_transformation_from(&rp, n, assume), zeta_shift_from(&rp, n, assume)) {
        (Ok(z), Ok(zs)) => (z, zs),
        (Err(Error::UnknownTail), _) | (_, Err(Error::UnknownTail)) => {
            let mut m = ctx.header("zeta");
            m.insert("status".into(), json!("unknown_tail"));
            m.insert("laps".into(), strings(&lap_series_from(&rp, n).map_err(|e| e.to_string())?));
            return Ok(Output::Partial(pretty(m)));
        }
        (Err(e), _) | (_, Err(e)) => return Err(e.to_string()),
    };
    let p = z.log_derivative().map_err(|e| e.to_string())?;
    let ps = zs.log_derivative().map_err(|e| e.to_string())?;
    if ctx.job.format == Format::Csv {
        let (a, b, c, d) = (z.to_strings(), zs.to_strings(), p.to_strings(), ps.to_strings());
        return Ok(Output::Done(csv(
            "n,zeta,zeta_shift,fixed_points,fixed_points_shift",
            (0..=n).map(|i| vec![i.to_string(), a[i].clone(), b[i].clone(), c[i].clone(), d[i].clone()]),
        )));
    }
    let mut m = ctx.header("zeta");
    m.insert("status".into(), json!("decided"));
    m.insert("order".into(), json!(n));
    m.insert("zeta".into(), strings(&z));
    m.insert("zeta_shift".into(), strings(&zs));
    m.insert("fixed_points".into(), strings(&p));
    m.insert("fixed_points_shift".into(), strings(&ps));
    Ok(Output::Done(pretty(m)))
}

fn run_periodic(ctx: &Context, target: Target) -> Result<Output, String> {
    require_format(ctx, &[Format::Json, Format::Csv])?;
    let rp = ctx.reference().map_err(|e| e.to_string())?;
    let lang = Language::from_reference(&ctx.beta, ShiftVariant::ItoSadahiro, rp);
    let t = match target {
        Target::Shift => PeriodicTarget::Shift,
        Target::Transformation => PeriodicTarget::Transformation,
    };
    let counts: Vec<u64> = (1..=ctx.job.length).map(|n| count_periodic_points_in(&lang, n, t)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    if ctx.job.format == Format::Csv {
        return Ok(Output::Done(csv("n,count", counts.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), c.to_string()]))));
    }
    let mut m = ctx.header("periodic-points");
    m.insert("target".into(), json!(if target == Target::Shift { "shift" } else { "transformation" }));
    m.insert("counts".into(), json!(counts.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    Ok(Output::Done(pretty(m)))
}

fn run_gaps(ctx: &Context) -> Result<Output, String> {
    require_format(ctx, &[Format::Json])?;
    let e = |e: Error| e.to_string();
    let level = cascade_classify(&ctx.beta).map_err(e)?;
    let words = morphism_words(level);
    let mut m = ctx.header("gaps");
    m.insert("level".into(), json!(level));
    m.insert("u".into(), json!(format_word(&words.u)));
    m.insert("v".into(), json!(format_word(&words.v)));
    m.insert(
        "gamma".into(),
        json!((0..=level + 1).map(|n| json!({"n": n, "enclosure": interval_json(&gamma_n(n).enclosure(80))})).collect::<Vec<_>>()),
    );
    let gaps = all_gaps(&ctx.beta).map_err(e)?;
    m.insert(
        "gaps".into(),
        json!(gaps
            .iter()
            .map(|g| json!({
                "k": g.k,
                "i": g.i,
                "left_index": g.left_index,
                "right_index": g.right_index,
                "left": interval_json(&g.left_enclosure),
                "right": interval_json(&g.right_enclosure),
            }))
            .collect::<Vec<_>>()),
    );
    let dec = decompose_expansion(&ctx.beta, ctx.horizon.min(400)).map_err(e)?;
    m.insert("v_runs".into(), json!(dec.v_runs));
    m.insert("parsed_digits".into(), json!(dec.parsed_len));
    Ok(Output::Done(pretty(m)))
}

fn run_verify(ctx: &Context) -> Result<Output, String> {
    require_format(ctx, &[Format::Json])?;
    let r = verify_identities(&ctx.beta, ctx.job.order, ctx.job.length).map_err(|e| e.to_string())?;
    let mut m = ctx.header("verify");
    m.insert("certified_order".into(), json!(r.order));
    m.insert(
        "residuals".into(),
        Value::Object(
            r.residuals
                .iter()
                .map(|x| (x.name.to_string(), json!({"max_abs": x.max_abs().to_string(), "zero": x.is_zero()})))
                .collect(),
        ),
    );
    m.insert("skipped".into(), Value::Object(r.skipped.iter().map(|(k, why)| (k.to_string(), json!(why))).collect()));
    m.insert("all_zero".into(), json!(r.all_zero()));
    if r.all_zero() {
        Ok(Output::Done(pretty(m)))
    } else {
        Err(pretty(m))
    }
}

fn run_plot(ctx: &Context, iterate: usize) -> Result<Output, String> {
    if ctx.job.format == Format::Csv {
        return Err("output format not available for this command".into());
    }
    if iterate == 0 || iterate > 8 {
        return Err("--iterate must be between 1 and 8".into());
    }
    let pieces = laps(&ctx.beta, iterate).map_err(|e| e.to_string())?;
    Ok(Output::Done(plot::render(&ctx.beta, iterate, &pieces)))
}

fn run(cli: Cli) -> Result<Output, String> {
    let mut job = cli.job;
    if let Some(cap) = horizon_cap()? {
        job.horizon = job.horizon.min(cap);
    }
    let needed = job.order.max(job.length);
    if job.horizon < needed {
        return Err(format!("horizon {} is below max(order, length) = {needed}", job.horizon));
    }
    let beta = beta::parse_beta(&job.beta).map_err(|e| e.to_string())?;
    let ctx = Context { beta, beta_text: job.beta.clone(), horizon: job.horizon, job };
    match cli.command {
        Command::Expand { digits, x } => run_expand(&ctx, digits, &x),
        Command::Classify => run_classify(&ctx),
        Command::Codes => run_codes(&ctx),
        Command::Complexity => run_complexity(&ctx),
        Command::Laps { iterate } => run_laps(&ctx, iterate),
        Command::Zeta { assume_nonperiodic } => run_zeta(&ctx, assume_nonperiodic),
        Command::PeriodicPoints { target } => run_periodic(&ctx, target),
        Command::Gaps => run_gaps(&ctx),
        Command::Verify => run_verify(&ctx),
        Command::Plot { iterate } => run_plot(&ctx, iterate),
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.job.out.clone();
    match run(cli) {
        Ok(Output::Done(text)) => match emit(&text, &out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Ok(Output::Partial(text)) => {
            let _ = emit(&text, &out);
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
