use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use negbeta::decomposition::{c_entropy_profile, glue, in_g, DecompError};
use negbeta::factors::{factor_for_beta, verify_factor, ClaimStatus, FactorError};
use negbeta::graph::{build_graph, parse_b_sequence, to_dot, to_json, GraphError, GraphSlice};
use negbeta::language::{LanguageError, ShiftSpec};
use negbeta::measures::{gibbs_check, htop_estimate, mu_n, weakstar_diagnostic, MeasureError};
use negbeta::numeric::{
    classify_d1, expand, golden_test, Beta, ExpansionStatus, NumericError, UnitPoint,
};
use negbeta::order::Word;
use serde::Serialize;
use serde_json::{json, Value};

const FORMAT_VERSION: &str = "negbeta-output/1";

#[derive(Parser)]
#[command(
    name = "negbeta",
    version,
    about = "Negative beta shifts: expansions, graphs, entropy, gluing, measures, factors"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Digits of the expansion of a point, with the classification of the expansion of 1.
    Expand(Config),
    /// Graph slice as DOT or JSON, with path counts.
    Graph(Config),
    /// Word counts, C^(L) profiles and the entropy estimate.
    Entropy(Config),
    /// Glue words listed in `--words` into a periodic block.
    Glue(Config),
    /// Periodic-orbit measure with Gibbs and weak* reports.
    Measure(Config),
    /// Build and verify the sliding block code for the base.
    Factor(Config),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Args, Clone, Debug, Serialize)]
struct Config {
    /// `golden`, `p/q`, an integer or an exact decimal such as `1.3`.
    #[arg(long)]
    beta: Option<String>,
    /// Upper bound sequence: digits separated by whitespace or commas, optionally `PRE|PER`.
    #[arg(long = "b-file")]
    b_file: Option<PathBuf>,
    /// Graph truncation depth.
    #[arg(long = "K")]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long = "M")]
    big_m: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
    #[arg(long)]
    depth: Option<usize>,
    /// Replace beta by a dyadic enclosure with this many bits.
    #[arg(long = "precision-bits")]
    precision_bits: Option<u32>,
    #[arg(long)]
    horizon: Option<usize>,
    /// Point to expand, default 1.
    #[arg(long)]
    x: Option<String>,
    /// Words to glue, separated by whitespace or commas.
    #[arg(long)]
    words: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Truncation(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Truncation(_) => 3,
            Failure::Verification(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Invalid(s) | Failure::Truncation(s) | Failure::Verification(s) => s,
        }
    }
}

impl From<NumericError> for Failure {
    fn from(e: NumericError) -> Self {
        match e {
            NumericError::PrecisionExhausted { .. }
            | NumericError::AmbiguousDigit(_)
            | NumericError::Undecidable { .. } => Failure::Truncation(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<LanguageError> for Failure {
    fn from(e: LanguageError) -> Self {
        match e {
            LanguageError::Numeric(inner) => inner.into(),
            LanguageError::SpecPrefixTooShort { .. } | LanguageError::HorizonExhausted { .. } => {
                Failure::Truncation(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Language(inner) => inner.into(),
            GraphError::PrefixTooShort { .. } | GraphError::TruncationInsufficient { .. } => {
                Failure::Truncation(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<DecompError> for Failure {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::Graph(inner) => inner.into(),
            DecompError::Language(inner) => inner.into(),
            DecompError::NoConnector { .. } | DecompError::NoLFound { .. } => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<MeasureError> for Failure {
    fn from(e: MeasureError) -> Self {
        match e {
            MeasureError::Language(inner) => inner.into(),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<FactorError> for Failure {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::Numeric(inner) => inner.into(),
            FactorError::Language(inner) => inner.into(),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

/// Rendered output plus a failure to report after writing it.
struct Output {
    body: String,
    failed: Option<Failure>,
}

impl Config {
    fn echo(&self, verb: &str) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v["verb"] = json!(verb);
        v
    }

    fn beta(&self) -> Result<Beta, Failure> {
        let s = self
            .beta
            .as_deref()
            .ok_or_else(|| Failure::Invalid("--beta is required".into()))?;
        let beta: Beta = s.parse()?;
        Ok(match self.precision_bits {
            Some(bits) => beta.enclose(bits),
            None => beta,
        })
    }

    fn horizon(&self) -> usize {
        self.horizon.unwrap_or(60)
    }

    fn spec(&self) -> Result<ShiftSpec, Failure> {
        match (&self.beta, &self.b_file) {
            (Some(_), None) => Ok(ShiftSpec::from_beta(&self.beta()?, self.horizon())?),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
                let bound = parse_b_sequence(&text)?;
                Ok(ShiftSpec::from_bound(bound)?)
            }
            _ => Err(Failure::Invalid(
                "give exactly one of --beta and --b-file".into(),
            )),
        }
    }

    fn formats(&self, allowed: &[Format]) -> Result<(), Failure> {
        if allowed.contains(&self.format) {
            Ok(())
        } else {
            Err(Failure::Invalid(format!(
                "format {:?} is not available for this verb",
                self.format
            )))
        }
    }
}

fn wrap_json(config: &Value, result: Value) -> String {
    let doc = json!({ "format_version": FORMAT_VERSION, "config": config, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn header(config: &Value, comment: &str) -> String {
    format!("{comment} format_version={FORMAT_VERSION}\n{comment} config={config}\n")
}

fn cmd_expand(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json, Format::Csv])?;
    let beta = c.beta()?;
    let x = match &c.x {
        Some(s) => UnitPoint::new(s.parse::<Beta>().map(|b| b.value().clone()).or_else(|_| {
            if s.trim() == "0" {
                Ok(UnitPoint::zero().value().clone())
            } else {
                Err(Failure::Invalid(format!("cannot parse point {s:?}")))
            }
        })?)?,
        None => UnitPoint::one(),
    };
    let n = c.n.unwrap_or(20);
    let digits = expand(&beta, &x, n)?;
    let failed = match digits.status {
        ExpansionStatus::PrecisionExhausted { at } => Some(Failure::Truncation(format!(
            "precision exhausted after {at} digits"
        ))),
        ExpansionStatus::Complete => None,
    };
    let class = classify_d1(&beta, c.horizon())
        .map(|v| json!(v))
        .unwrap_or_else(|e| json!(e.to_string()));
    let side = golden_test(&beta, c.horizon())
        .map(|v| json!(v))
        .unwrap_or_else(|e| json!(e.to_string()));
    let body = match c.format {
        Format::Csv => {
            let mut s = header(echo, "#");
            s.push_str("i,digit,certified\n");
            for (i, d) in digits.digits.iter().enumerate() {
                let _ = writeln!(s, "{},{d},{}", i + 1, i < digits.certified);
            }
            s
        }
        _ => wrap_json(
            echo,
            json!({
                "beta": beta.to_string(),
                "x": x.to_string(),
                "digits": digits.digits.to_string(),
                "certified": digits.certified,
                "status": digits.status,
                "d1_class": class,
                "golden_side": side,
            }),
        ),
    };
    Ok(Output { body, failed })
}

fn graph_for(c: &Config, spec: &ShiftSpec, default_k: usize) -> Result<GraphSlice, Failure> {
    Ok(build_graph(spec, c.k.unwrap_or(default_k))?)
}

fn cmd_graph(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json, Format::Dot])?;
    let spec = c.spec()?;
    let g = graph_for(c, &spec, 16)?;
    let body = match c.format {
        Format::Dot => header(echo, "//") + &to_dot(&g),
        _ => {
            let n = c.n.unwrap_or(10);
            let counts: Vec<String> = (1..=n)
                .map(|i| g.path_count(i, 0).map(|c| c.to_string()))
                .collect::<Result<_, _>>()?;
            let home: Vec<Option<usize>> = (0..=g.depth())
                .map(|i| g.shortest_path_to_v0(i).ok().map(|p| p.len))
                .collect();
            let gap = g.gap_scan(c.big_m.unwrap_or(4));
            wrap_json(
                echo,
                json!({
                    "graph": to_json(&g),
                    "path_counts": counts,
                    "distance_to_v0": home,
                    "gap_scan": gap,
                }),
            )
        }
    };
    Ok(Output { body, failed: None })
}

fn cmd_entropy(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json, Format::Csv])?;
    let spec = c.spec()?;
    let nmax = c.n.unwrap_or(14);
    let lmax = c.l.unwrap_or(8);
    let eps = c.epsilon.unwrap_or(0.3);
    let counts = spec.count_words(nmax, c.m.unwrap_or(0))?;
    let htop = htop_estimate(&spec, nmax, 0)?;
    let profile = if spec.is_two_sided() {
        None
    } else {
        let g = graph_for(c, &spec, nmax + lmax + 2)?;
        Some(c_entropy_profile(&g, lmax, nmax, eps)?)
    };
    let body = match c.format {
        Format::Csv => {
            let mut s = header(echo, "#");
            s.push_str("kind,L,n,count,estimate\n");
            for r in profile.iter().flat_map(|p| &p.rows) {
                let _ = writeln!(s, "C,{},{},{},{:.6}", r.l, r.n, r.count, r.estimate);
            }
            for (r, e) in counts.rows.iter().zip(&htop.language) {
                let _ = writeln!(s, "L,,{},{},{e:.6}", r.n, r.count_l);
            }
            s
        }
        _ => wrap_json(
            echo,
            json!({
                "counts": counts,
                "htop": htop,
                "c_profile": profile,
                "l_hat": profile.as_ref().and_then(|p| p.l_hat),
            }),
        ),
    };
    Ok(Output { body, failed: None })
}

fn read_words(c: &Config) -> Result<Vec<Word>, Failure> {
    let path = c
        .words
        .as_ref()
        .ok_or_else(|| Failure::Invalid("--words is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let words: Vec<Word> = text
        .split(|ch: char| ch.is_whitespace() || ch == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<Word>()
                .map_err(|e| Failure::Invalid(format!("{s}: {e}")))
        })
        .collect::<Result<_, _>>()?;
    if words.is_empty() {
        return Err(Failure::Invalid("no words to glue".into()));
    }
    Ok(words)
}

fn cmd_glue(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json])?;
    let spec = c.spec()?;
    let words = read_words(c)?;
    let g = graph_for(c, &spec, 16)?;
    let r = glue(&g, &spec, c.l.unwrap_or(2), c.big_m.unwrap_or(4), &words)?;
    let failed = (!r.admissible)
        .then(|| Failure::Verification(format!("glued block {} is not admissible", r.block)));
    Ok(Output {
        body: wrap_json(echo, json!(r)),
        failed,
    })
}

fn cmd_measure(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json, Format::Csv])?;
    let spec = c.spec()?;
    let n = c.n.unwrap_or(8);
    let m = c.m.unwrap_or(4);
    let ns: Vec<usize> = (n.saturating_sub(3).max(1)..=n).collect();
    let weak = weakstar_diagnostic(&spec, &ns, m)?;
    if c.format == Format::Csv {
        return Ok(Output {
            body: header(echo, "#") + &weak.to_csv(),
            failed: None,
        });
    }
    let mu = mu_n(&spec, n, m)?;
    let h = htop_estimate(&spec, c.depth.unwrap_or(14), 0)?.value;
    let gibbs = if spec.is_two_sided() {
        None
    } else {
        let l = c.l.unwrap_or(2);
        let g = graph_for(c, &spec, m + l + 2)?;
        let mut good = Vec::new();
        for len in 1..=m {
            for w in spec.enumerate_words(len)? {
                if in_g(&g, l, &w)? {
                    good.push(w);
                }
            }
        }
        Some(gibbs_check(&mu, &good, h))
    };
    Ok(Output {
        body: wrap_json(
            echo,
            json!({
                "measure": mu.to_json(),
                "normalized": mu.is_normalized(),
                "consistent": mu.is_consistent(),
                "gibbs": gibbs,
                "weak_star": weak,
            }),
        ),
        failed: None,
    })
}

fn cmd_factor(c: &Config, echo: &Value) -> Result<Output, Failure> {
    c.formats(&[Format::Json])?;
    let beta = c.beta()?;
    let (code, spec) = factor_for_beta(&beta, c.horizon())?;
    let d = expand(&beta, &UnitPoint::one(), c.horizon())?;
    let d = Word::from(&d.digits[..d.certified]);
    let report = verify_factor(&code, &spec, c.depth.unwrap_or(10), &d);
    let failed = (report.status() != ClaimStatus::Pass)
        .then(|| Failure::Verification(format!("factor verification: {:?}", report.status())));
    Ok(Output {
        body: wrap_json(echo, json!({ "code": code, "report": report.to_json() })),
        failed,
    })
}

type Command = fn(&Config, &Value) -> Result<Output, Failure>;

fn run(verb: &Verb) -> Result<(), Failure> {
    let (name, c, cmd): (&str, &Config, Command) = match verb {
        Verb::Expand(c) => ("expand", c, cmd_expand),
        Verb::Graph(c) => ("graph", c, cmd_graph),
        Verb::Entropy(c) => ("entropy", c, cmd_entropy),
        Verb::Glue(c) => ("glue", c, cmd_glue),
        Verb::Measure(c) => ("measure", c, cmd_measure),
        Verb::Factor(c) => ("factor", c, cmd_factor),
    };
    let out = cmd(c, &c.echo(name))?;
    match &c.out {
        Some(path) => std::fs::write(path, &out.body)
            .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
        None => print!("{}", out.body),
    }
    out.failed.map_or(Ok(()), Err)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.verb) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("negbeta: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
