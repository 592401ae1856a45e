use std::io::Write as _;
use std::process::ExitCode;

use bruhat_core::bruhat::{ideal_capped, interval_capped};
use bruhat_core::structure::decompose_capped;
use bruhat_core::words::reduced_words_capped;
use bruhat_core::{
    atlas, bruhat_leq, detect_swap_string, forces_factor, is_isomorphic, nonforcing_witness,
    swap_string_factorization, AtlasOptions, Caps, Error, Interval, Permutation, SearchOptions,
    Word,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "bruhat", version, about = "Bruhat order on symmetric groups")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,

    /// Ambient group size; permutation arguments are embedded into S_n.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest symmetric group any enumeration may range over.
    #[arg(long, global = true, default_value_t = Caps::default().max_n)]
    cap_n: usize,
    /// Largest length whose reduced words may be enumerated.
    #[arg(long, global = true, default_value_t = Caps::default().max_length)]
    cap_length: usize,
    /// Largest number of reduced words that may be materialized.
    #[arg(long, global = true, default_value_t = Caps::default().max_words)]
    cap_words: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_n: self.cap_n,
            max_length: self.cap_length,
            max_words: self.cap_words,
        }
    }
}

#[derive(Args)]
struct Format {
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// All reduced words of a permutation, sorted.
    Words {
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// The permutation named by a word (requires --n).
    Eval { word: String },
    /// Whether x ≤ y in Bruhat order.
    Leq { x: String, y: String },
    /// The interval [x, y].
    Interval {
        x: String,
        y: String,
        #[command(flatten)]
        format: Format,
    },
    /// The principal order ideal [e, w].
    Ideal {
        w: String,
        #[command(flatten)]
        format: Format,
    },
    /// Whether two intervals are isomorphic. A spec is `w` for the ideal
    /// of w, or `x:y` for the interval [x, y].
    Iso { spec1: String, spec2: String },
    /// Isomorphism classes of intervals and ideals by length (requires --n).
    Atlas {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// A reduced word split into a small-letter and a large-letter block.
    Decompose { w: String },
    /// An interval isomorphic to [e, w] admitting no factor deletion.
    Witness { w: String },
    /// The swap-string of a pair x ≤ y.
    Swapstring { x: String, y: String },
    /// Reduced words a·c of x and a·b·c of y through the swap-string.
    Factorize { x: String, y: String },
    /// Bounded search for an interval isomorphic to [e, w] with no factor
    /// deletion, over S_m for m up to --max-n.
    Forces {
        w: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Examine one interval per symmetry orbit.
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        json: bool,
        /// Include wall-clock time; output is then no longer reproducible.
        #[arg(long)]
        timing: bool,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if !out.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("bruhat: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("bruhat: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Ctx {
    caps: Caps,
    n: Option<usize>,
}

impl Ctx {
    fn perm(&self, s: &str) -> Result<Permutation, Failure> {
        let w: Permutation = s.parse()?;
        match self.n {
            Some(n) => Ok(w.embed(n)?),
            None => Ok(w),
        }
    }

    /// Two permutations embedded into a common group.
    fn pair(&self, x: &str, y: &str) -> Result<(Permutation, Permutation), Failure> {
        let (x, y) = (self.perm(x)?, self.perm(y)?);
        let n = x.n().max(y.n());
        Ok((x.embed(n)?, y.embed(n)?))
    }

    fn require_n(&self, what: &str) -> Result<usize, Failure> {
        self.n
            .ok_or_else(|| Failure::Usage(format!("{what} requires --n")))
    }

    fn spec(&self, s: &str) -> Result<Interval, Failure> {
        match s.split_once(':') {
            Some((x, y)) => {
                let (x, y) = self.pair(x, y)?;
                Ok(interval_capped(&x, &y, &self.caps)?)
            }
            None => Ok(ideal_capped(&self.perm(s)?, &self.caps)?.into_interval()),
        }
    }
}

fn json<T: Serialize>(value: &T) -> Outcome {
    Ok(serde_json::to_string_pretty(value)?)
}

fn render(iv: &Interval, format: &Format) -> Outcome {
    if format.dot {
        return Ok(iv.to_dot());
    }
    if format.json {
        return json(iv);
    }
    let profile: Vec<String> = iv.rank_profile().iter().map(|c| c.to_string()).collect();
    let mut out = format!(
        "[{}, {}] length {}, {} elements, rank profile {}\n",
        iv.low(),
        iv.high(),
        iv.length(),
        iv.len(),
        profile.join(" ")
    );
    for r in 0..=iv.length() {
        let row: Vec<String> = iv
            .elements()
            .iter()
            .filter(|z| iv.rank_of(z) == Some(r))
            .map(|z| z.to_string())
            .collect();
        out.push_str(&format!("rank {r}: {}\n", row.join(" ")));
    }
    Ok(out)
}

#[derive(Serialize)]
struct AtlasReport {
    n: usize,
    rows: Vec<bruhat_core::AtlasRow>,
    stats: AtlasStatsReport,
}

#[derive(Serialize)]
struct AtlasStatsReport {
    intervals_examined: u64,
    caps: Caps,
}

#[derive(Serialize)]
struct SwapStringReport {
    #[serde(flatten)]
    swap: bruhat_core::SwapString,
    /// Shift taking a reduced word of the reversed block to one of w0 in S_k.
    t: i32,
}

fn run(cli: &Cli) -> Outcome {
    let ctx = Ctx {
        caps: cli.caps.caps(),
        n: cli.n,
    };
    match &cli.command {
        Command::Words { w, json: as_json } => {
            let w = ctx.perm(w)?;
            let set = reduced_words_capped(&w, &ctx.caps)?;
            if *as_json {
                return json(&set);
            }
            let lines: Vec<String> = set.words.iter().map(|v| v.to_string()).collect();
            Ok(lines.join("\n"))
        }
        Command::Eval { word } => {
            let n = ctx.require_n("eval")?;
            let word: Word = word.parse()?;
            Ok(word.evaluate(n)?.to_string())
        }
        Command::Leq { x, y } => {
            let (x, y) = ctx.pair(x, y)?;
            Ok(bruhat_leq(&x, &y)?.to_string())
        }
        Command::Interval { x, y, format } => {
            let (x, y) = ctx.pair(x, y)?;
            render(&interval_capped(&x, &y, &ctx.caps)?, format)
        }
        Command::Ideal { w, format } => {
            let w = ctx.perm(w)?;
            render(&ideal_capped(&w, &ctx.caps)?.into_interval(), format)
        }
        Command::Iso { spec1, spec2 } => {
            let (p, q) = (ctx.spec(spec1)?, ctx.spec(spec2)?);
            Ok(is_isomorphic(&p.to_poset(), &q.to_poset()).to_string())
        }
        Command::Atlas { max_len, jobs } => {
            let n = ctx.require_n("atlas")?;
            let options = AtlasOptions {
                caps: ctx.caps,
                jobs: *jobs,
            };
            let a = atlas(n, *max_len, &options)?;
            json(&AtlasReport {
                n: a.n,
                rows: a.rows,
                stats: AtlasStatsReport {
                    intervals_examined: a.stats.intervals_examined,
                    caps: ctx.caps,
                },
            })
        }
        Command::Decompose { w } => {
            let w = ctx.perm(w)?;
            json(&decompose_capped(&w, &ctx.caps)?)
        }
        Command::Witness { w } => {
            let w = ctx.perm(w)?;
            let d = decompose_capped(&w, &ctx.caps)?
                .ok_or_else(|| Failure::Usage(format!("{w} is indecomposable")))?;
            json(&nonforcing_witness(&w, &d)?)
        }
        Command::Swapstring { x, y } => {
            let (x, y) = ctx.pair(x, y)?;
            let report = match detect_swap_string(&x, &y) {
                Some(swap) => {
                    let t = swap_string_factorization(&x, &y, &swap)?.t;
                    Some(SwapStringReport { swap, t })
                }
                None => None,
            };
            json(&report)
        }
        Command::Factorize { x, y } => {
            let (x, y) = ctx.pair(x, y)?;
            let ss = detect_swap_string(&x, &y)
                .ok_or_else(|| Failure::Usage(format!("no swap-string for [{x}, {y}]")))?;
            json(&swap_string_factorization(&x, &y, &ss)?)
        }
        Command::Forces {
            w,
            max_n,
            jobs,
            symmetry,
            json: as_json,
            timing,
        } => {
            let w = ctx.perm(w)?;
            let options = SearchOptions {
                caps: ctx.caps,
                jobs: *jobs,
                symmetry_pruning: *symmetry,
            };
            let verdict = forces_factor(&w, *max_n, &options)?;
            let report = verdict.report(&ctx.caps, *timing);
            if *as_json {
                return json(&report);
            }
            let mut out = String::new();
            match &report.counterexample {
                Some(c) => {
                    out.push_str(&format!("counterexample [{}, {}] in S_{}\n", c.x, c.y, c.m))
                }
                None => out.push_str(&format!("no counterexample in S_{}..S_{}\n", w.n(), max_n)),
            }
            out.push_str(&format!(
                "intervals examined: {}\n",
                report.stats.intervals_examined
            ));
            if let Some(s) = report.stats.seconds {
                out.push_str(&format!("seconds: {s:.3}\n"));
            }
            Ok(out)
        }
    }
}
