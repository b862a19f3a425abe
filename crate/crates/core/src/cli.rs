//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation error, 3 arithmetic
//! overflow, 4 internal-consistency failure. Errors go to stderr prefixed
//! with `error:<code>:`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cache::{cache_load, cache_save};
use crate::error::{Error, Result};
use crate::jh::{
    coxeter_criterion, jh_generalized_steinberg, jh_induced, jh_steinberg, steinberg_multiplicity,
    verify_smooth_complex, verify_tits_euler,
};
use crate::kl::{kl_polynomial, mu, verma_multiplicity, KlStore};
use crate::render::{word_str, SeriesDoc};
use crate::root_data::{CartanType, Weight};
use crate::weyl::{SimpleSubset, WeylElem, WeylGroup};

#[derive(Debug, Parser)]
#[command(
    name = "steinberg",
    version,
    about = "Jordan-Hölder factors of locally analytic Steinberg representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Jordan-Hölder series of the (generalized, twisted) Steinberg representation
    Jh {
        #[command(flatten)]
        common: Common,
        /// Parabolic subset I (comma-separated indices, empty for B)
        #[arg(long, default_value = "")]
        parabolic: String,
        /// Twist w as a word in simple reflections
        #[arg(long, default_value = "")]
        twist: String,
    },
    /// Jordan-Hölder series of the induced representation I^G_{P_K}(w)
    Induced {
        #[command(flatten)]
        common: Common,
        #[arg(long = "K")]
        k: String,
        #[arg(long, default_value = "")]
        twist: String,
    },
    /// Kazhdan-Lusztig polynomial P_{x,y} and multiplicity m(x,y)
    Kl {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// |W^I_p|, the number of w with I(w) = I
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long = "I")]
        i: String,
    },
    /// Consistency checks
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Cartan type, e.g. A3, B2, G2
    #[arg(long = "type")]
    cartan: String,
    /// Dominant weight in fundamental-weight coordinates; defaults to 0
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Persistent Kazhdan-Lusztig cache file
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Lift the element-count guard
    #[arg(long)]
    allow_large: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Euler,
    Smooth,
    Support,
    Coxeter,
    Kl,
}

struct Context {
    group: WeylGroup,
    store: KlStore,
    lambda: Weight,
    format: Format,
    cache: Option<PathBuf>,
}

impl Context {
    fn new(common: &Common) -> Result<Self> {
        let t: CartanType = common.cartan.parse()?;
        let mut group = WeylGroup::new(t);
        if common.allow_large {
            group = group.allow_large();
        }
        let lambda = match &common.lambda {
            Some(s) => s.parse::<Weight>()?,
            None => Weight::zero(t.rank()),
        };
        group.root_system().check_dominant(&lambda)?;
        let store = match &common.cache {
            Some(p) if p.exists() => cache_load(p, &group)?,
            _ => KlStore::new(t),
        };
        Ok(Context {
            group,
            store,
            lambda,
            format: common.format,
            cache: common.cache.clone(),
        })
    }

    fn save(&self) -> Result<()> {
        if let Some(p) = &self.cache {
            cache_save(&self.store, p)?;
        }
        Ok(())
    }
}

/// Parses `argv` (program name first), runs one subcommand and returns the
/// exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("usage error");
            let _ = writeln!(err, "error:1:{}", first.trim_start_matches("error: "));
            return 1;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let code = e.exit_code();
            let _ = writeln!(err, "error:{code}:{e}");
            code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let io = |source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match command {
        Command::Jh {
            common,
            parabolic,
            twist,
        } => {
            let ctx = Context::new(&common)?;
            let g = &ctx.group;
            let i = SimpleSubset::parse(&parabolic, g.rank())?;
            let w = g.parse_word(&twist)?;
            let series = if i.is_empty() && w.is_identity() {
                jh_steinberg(g, &ctx.lambda, &ctx.store)?
            } else {
                jh_generalized_steinberg(g, i, &w, &ctx.lambda, &ctx.store)?
            };
            let doc = SeriesDoc::new(g.cartan_type(), &ctx.lambda, i, w.to_word(), &series);
            emit_series(&doc, ctx.format, out).map_err(io)?;
            ctx.save()?;
        }
        Command::Induced { common, k, twist } => {
            let ctx = Context::new(&common)?;
            let g = &ctx.group;
            let k = SimpleSubset::parse(&k, g.rank())?;
            let w = g.parse_word(&twist)?;
            let series = jh_induced(g, k, &w, &ctx.lambda, &ctx.store)?;
            let doc = SeriesDoc::new(g.cartan_type(), &ctx.lambda, k, w.to_word(), &series);
            emit_series(&doc, ctx.format, out).map_err(io)?;
            ctx.save()?;
        }
        Command::Kl { common, x, y } => {
            let ctx = Context::new(&common)?;
            let g = &ctx.group;
            let x = g.parse_word(&x)?;
            let y = g.parse_word(&y)?;
            let p = kl_polynomial(g, &x, &y, &ctx.store)?;
            let report = KlReport {
                cartan: g.cartan_type().to_string(),
                x: x.to_word(),
                y: y.to_word(),
                bruhat_leq: g.bruhat_leq(&x, &y)?,
                polynomial: p.to_string(),
                coeffs: p.coeffs().to_vec(),
                multiplicity: verma_multiplicity(g, &x, &y, &ctx.store)?,
                mu: mu(g, &x, &y, &ctx.store)?,
            };
            match ctx.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap()),
                Format::Table => writeln!(
                    out,
                    "P_{{{},{}}} = {}\nm = {}\nmu = {}",
                    word_str(&report.x),
                    word_str(&report.y),
                    report.polynomial,
                    report.multiplicity,
                    report.mu
                ),
            }
            .map_err(io)?;
            ctx.save()?;
        }
        Command::Count { common, i } => {
            let ctx = Context::new(&common)?;
            let i = SimpleSubset::parse(&i, ctx.group.rank())?;
            let n = ctx.group.parabolic_class_count(i)?;
            writeln!(out, "{n}").map_err(io)?;
        }
        Command::Verify { common, suite } => {
            let ctx = Context::new(&common)?;
            let failures = run_verify(&ctx, suite, out)?;
            ctx.save()?;
            if failures > 0 {
                return Err(Error::InternalInconsistency(format!(
                    "{failures} verification check(s) failed"
                )));
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct KlReport {
    #[serde(rename = "type")]
    cartan: String,
    x: Vec<usize>,
    y: Vec<usize>,
    bruhat_leq: bool,
    polynomial: String,
    coeffs: Vec<u64>,
    multiplicity: u64,
    mu: u64,
}

fn emit_series(doc: &SeriesDoc, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", doc.to_json()),
        Format::Table => write!(out, "{}", doc.to_table()),
    }
}

fn run_verify(ctx: &Context, suite: Suite, out: &mut dyn Write) -> Result<usize> {
    let g = &ctx.group;
    let st = &ctx.store;
    let lam = &ctx.lambda;
    let mut failures = 0;
    let mut line = |name: &str, ok: bool, detail: String| -> Result<()> {
        if !ok {
            failures += 1;
        }
        let tag = if ok { "ok" } else { "FAIL" };
        writeln!(out, "{}", format!("{tag} {name} {detail}").trim_end()).map_err(|source| Error::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
    };
    let want = |s: Suite| suite == Suite::All || suite == s;
    let elems: Vec<WeylElem> = g.enumerate()?.to_vec();

    if want(Suite::Euler) {
        for i in g.all_subsets() {
            let r = verify_tits_euler(g, i, lam, st)?;
            line("euler", r.passed(), format!("I={i} {}", r.violations.join("; ")))?;
        }
    }
    if want(Suite::Smooth) {
        for i in g.all_subsets() {
            let r = verify_smooth_complex(g, i, lam, st)?;
            line("smooth", r.passed(), format!("I={i} {}", r.violations.join("; ")))?;
        }
    }
    if want(Suite::Support) {
        let mut bad = Vec::new();
        for w in &elems {
            let supp = g.support(w);
            let mut nonzero = 0usize;
            for j in g.i_max(w).subsets() {
                let m = steinberg_multiplicity(g, w, j, st)?;
                if (m > 0) != j.is_subset(supp) {
                    bad.push(format!("({w},{j})"));
                }
                nonzero += (m > 0) as usize;
            }
            let expected = 1usize << g.i_max(w).intersection(supp).len();
            if nonzero != expected {
                bad.push(format!("{w}: {nonzero} factors, expected {expected}"));
            }
        }
        line("support", bad.is_empty(), bad.join(" "))?;
    }
    if want(Suite::Coxeter) {
        let mut bad = Vec::new();
        for i in g.all_subsets() {
            for w in &elems {
                if coxeter_criterion(g, i, w)? != i.is_subset(g.support(w)) {
                    bad.push(format!("(I={i},{w})"));
                }
            }
        }
        line("coxeter", bad.is_empty(), bad.join(" "))?;
    }
    if want(Suite::Kl) {
        let unfolded = KlStore::without_inverse_folding(g.cartan_type());
        let mut bad = Vec::new();
        for y in &elems {
            for x in &elems {
                let p = kl_polynomial(g, x, y, st)?;
                if g.bruhat_leq(x, y)? {
                    if let Err(e) = p.check_shape(y.len() - x.len()) {
                        bad.push(e);
                    }
                } else if !p.is_zero() {
                    bad.push(format!("P_({x},{y}) nonzero off the Bruhat order"));
                }
                if p != kl_polynomial(g, &x.inverse(), &y.inverse(), &unfolded)? {
                    bad.push(format!("P_({x},{y}) differs from inverse pair"));
                }
            }
        }
        line("kl", bad.is_empty(), bad.join(" "))?;
    }
    writeln!(out, "failures={failures}").map_err(|source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })?;
    Ok(failures)
}
