mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use stralg::artheory::{ar_sequence, defect_vector, enumerate_indecomposables, full_catalog, ArTable, Catalog};
use stralg::classify::{build_witness, classify, find_witness_triple, Evidence, RepType};
use stralg::decomp::{decompose, DecomposeOptions, DEFAULT_SEED};
use stralg::homalg::{ext1_dim, hom_dim, join, middle_census, CensusLimits};
use stralg::repmod::{parse_module, string_module};
use stralg::runs::{degeneration_sweep, test_modules, verify_main_theorem, Named};
use stralg::words::{enumerate_words, parse_walk};
use stralg::{Field, Presentation, Representation, Walk};

use report::{Format, Report};

#[derive(Parser)]
#[command(name = "stralg", version, about = "Exact computations with modules over string algebras")]
struct Cli {
    /// Override the coefficient field with F_q.
    #[arg(long, global = true)]
    field: Option<u64>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run catalog-based commands on presentations failing the string axioms.
    #[arg(long, global = true)]
    allow_non_string: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Presentation file.
    path: PathBuf,
}

#[derive(Args)]
struct Pair {
    /// First module: a module file or a word such as "a b^-1".
    #[arg(long)]
    m: String,
    /// Second module, as for `--m`.
    #[arg(long)]
    n: String,
}

#[derive(Subcommand)]
enum Command {
    /// Check the string axioms and finite dimensionality.
    Validate(Input),
    /// List words up to a length.
    Words {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Finite, domestic or non-domestic representation type.
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// String modules up to a dimension.
    Modules {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    Hom {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pair: Pair,
    },
    Ext {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pair: Pair,
    },
    /// Summand counts of middle terms over every line of Ext¹(M, N).
    MiddleCensus {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        pair: Pair,
    },
    /// Almost split sequence ending at a string module.
    Ar {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
    },
    /// Hom-order sweep over direct sums of catalog modules.
    Degeneration {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    /// Extension of two band modules with many middle summands.
    Witness {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 11)]
        p: u64,
        #[arg(long, default_value_t = 23)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        search_len: usize,
    },
    /// Middle-term census over all pairs of indecomposables.
    VerifyMainTheorem {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Extra indecomposable module files to include.
        #[arg(long = "module")]
        modules: Vec<PathBuf>,
    },
}

struct Ctx {
    field: Option<u64>,
    opts: DecomposeOptions,
    allow_non_string: bool,
}

impl Ctx {
    fn load(&self, path: &Path) -> anyhow::Result<Arc<Presentation>> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut p = Presentation::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(q) = self.field {
            p = p.with_field(Field::new(q)?);
        }
        Ok(Arc::new(p))
    }
}

fn module_arg(p: &Arc<Presentation>, spec: &str) -> anyhow::Result<Representation> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok(parse_module(p, &text)?);
    }
    let w = parse_walk(p.quiver(), spec).with_context(|| format!("`{spec}` is neither a module file nor a word"))?;
    Ok(string_module(p, &w)?)
}

fn word_name(p: &Presentation, w: &Walk) -> String {
    if w.is_trivial() {
        format!("e({})", p.quiver().vertex_name(w.source()))
    } else {
        w.display(p.quiver())
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_validate(ctx: &Ctx, input: &Input, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let ax = p.validate_axioms();
    let fd = p.check_finite_dimensional();
    let string = ax.all_hold() && fd.finite;
    let mut lines = vec![format!("string: {}", yes(string))];
    lines.extend(ax.violations.iter().map(|v| v.to_string()));
    if !fd.finite {
        let cyc = fd.witness_cycle.unwrap_or_default();
        let names: Vec<&str> = cyc.iter().map(|&a| p.quiver().arrow(a).name.as_str()).collect();
        lines.push(format!("infinite dimensional: cycle {}", names.join(" ")));
    }
    r.lines("report", lines);
    r.set("s1", yes(ax.s1))
        .set("s2", yes(ax.s2))
        .set("s3", yes(ax.s3))
        .set("finite", yes(fd.finite));
    if let Some(n) = fd.surviving_paths {
        r.set("algebra_dim", n);
    }
    if !string {
        r.fail();
    }
    Ok(())
}

fn cmd_words(ctx: &Ctx, input: &Input, max_len: usize, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let words = enumerate_words(&p, max_len);
    r.set("max_len", max_len).set("count", words.len());
    r.lines("words", words.iter().map(|w| format!("word {}", word_name(&p, w))).collect());
    Ok(())
}

fn cmd_classify(ctx: &Ctx, input: &Input, bound: Option<usize>, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let c = classify(&p, bound);
    let q = p.quiver();
    let verdict = match c.verdict {
        RepType::Finite => "finite",
        RepType::Domestic { .. } => "domestic",
        RepType::NonDomestic => "non-domestic",
        RepType::Unknown { .. } => "unknown",
    };
    r.set("type", verdict).set("bound", c.bound);
    match &c.evidence {
        Evidence::NoCyclicWord { states } => {
            r.set("evidence", "no-cyclic-word").set("automaton_states", *states);
        }
        Evidence::Bands { bands, generators } => {
            r.set("evidence", "bands");
            let mut lines: Vec<String> = bands.iter().map(|b| format!("band {}", b.display(q))).collect();
            for (alpha, gens) in generators {
                let g: Vec<String> = gens.iter().map(|w| w.display(q)).collect();
                lines.push(format!("generators alpha={} count={} words={}", q.arrow(*alpha).name, g.len(), g.join(" | ")));
            }
            r.lines("bands", lines);
        }
        Evidence::GeneratorPair {
            alpha,
            first,
            second,
            common_prefix,
            fine_wolf,
        } => {
            r.set("evidence", "generator-pair")
                .set("alpha", q.arrow(*alpha).name.clone())
                .set("first", first.display(q))
                .set("second", second.display(q))
                .set("common_prefix", *common_prefix)
                .set("fine_wolf", format!("{fine_wolf:?}"));
        }
        Evidence::Exhausted { work } => {
            r.set("evidence", "work-cap").set("work", *work);
        }
    }
    Ok(())
}

fn cmd_modules(ctx: &Ctx, input: &Input, max_dim: usize, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let cat = enumerate_indecomposables(&p, max_dim)?;
    r.set("max_dim", max_dim).set("count", cat.len()).set("complete", yes(cat.is_complete()));
    let lines = (0..cat.len())
        .map(|i| format!("module {} dimvec={}", cat.name(i), join(cat.modules()[i].dims())))
        .collect();
    r.lines("modules", lines);
    Ok(())
}

fn cmd_pair(ctx: &Ctx, input: &Input, pair: &Pair, which: &str, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let (m, n) = (module_arg(&p, &pair.m)?, module_arg(&p, &pair.n)?);
    r.set("m", pair.m.clone()).set("n", pair.n.clone());
    match which {
        "hom" => {
            r.set("hom_dim", hom_dim(&m, &n)?);
        }
        "ext" => {
            r.set("ext1_dim", ext1_dim(&m, &n)?);
        }
        _ => {
            let c = middle_census(&m, &n, CensusLimits::default(), &ctx.opts)?;
            r.set("ext1_dim", c.ext_dim);
            r.lines("lines", c.lines.iter().map(|l| l.render()).collect());
            let h: Vec<String> = c.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            r.set("histogram", h.join(","));
        }
    }
    Ok(())
}

fn catalog_for(p: &Arc<Presentation>) -> anyhow::Result<Catalog> {
    Ok(full_catalog(p)?)
}

fn cmd_ar(ctx: &Ctx, input: &Input, word: &str, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let cat = catalog_for(&p)?;
    let w = parse_walk(p.quiver(), word)?;
    let v = cat.index_of(&w).with_context(|| format!("`{word}` is not a word"))?;
    let s = ar_sequence(&cat, v, &ctx.opts)?;
    let defect = defect_vector(&cat, &s.sequence)?;
    let defect_ok = defect.iter().enumerate().all(|(u, &d)| d == (u == v) as i64);
    let middle: Vec<String> = s.middle_words.iter().map(|m| word_name(&p, m)).collect();
    r.set("end", cat.name(v))
        .set("tau", cat.name(s.tau_index))
        .set("middle", middle.join(" | "))
        .set("middle_summands", s.middle_summand_count)
        .set("defect", join(&defect))
        .set("defect_ok", yes(defect_ok));
    if !defect_ok || s.middle_summand_count > 2 {
        r.fail();
    }
    Ok(())
}

fn cmd_degeneration(ctx: &Ctx, input: &Input, max_dim: usize, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let cat = catalog_for(&p)?;
    let table = ArTable::new(&cat, &ctx.opts)?;
    let rep = degeneration_sweep(&cat, &table, max_dim, &ctx.opts)?;
    r.set("max_dim", max_dim)
        .set("sums", rep.sums.len())
        .set("pairs", rep.lines.len())
        .set("leq_pairs", rep.leq_pairs().count());
    r.lines("lines", rep.lines.iter().map(|l| l.render(&rep.sums, &cat)).collect());
    if !rep.all_counts_ok() {
        r.fail();
    }
    Ok(())
}

fn cmd_witness(ctx: &Ctx, input: &Input, prime: u64, q: u64, search_len: usize, r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let p = Arc::new(p.with_field(Field::new(q)?));
    let t = find_witness_triple(&p, search_len)?.with_context(|| format!("no witness triple up to length {search_len}"))?;
    let w = build_witness(&p, &t, prime)?;
    w.sequence.verify()?;
    let quiver = p.quiver();
    let rep = decompose(&w.glued, &ctx.opts)?;
    r.set("x", t.x.display(quiver))
        .set("y", t.y.display(quiver))
        .set("z", t.z.display(quiver))
        .set("u", w.u.display(quiver))
        .set("v", w.v.display(quiver))
        .set("p", prime)
        .set("q", q)
        .set("dim_M", w.glued.total_dim())
        .set("sequence", "verified")
        .set("summands", rep.count());
    r.lines("summand_lines", rep.lines());
    if rep.count() < prime as usize {
        r.fail();
    }
    Ok(())
}

fn cmd_verify(ctx: &Ctx, input: &Input, max_dim: usize, extra: &[PathBuf], r: &mut Report) -> anyhow::Result<()> {
    let p = ctx.load(&input.path)?;
    let mut mods = test_modules(&p, max_dim, ctx.allow_non_string)?;
    for path in extra {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        mods.push(Named {
            name: path.file_stem().map_or("module".into(), |s| s.to_string_lossy().into_owned()),
            module: parse_module(&p, &text)?,
        });
    }
    let rep = verify_main_theorem(&mods, CensusLimits::default(), &ctx.opts)?;
    let mut lines = Vec::new();
    for pc in &rep.pairs {
        for l in &pc.census.lines {
            lines.push(format!("M={} N={} {}", pc.m, pc.n, l.render()));
        }
    }
    r.set("max_dim", max_dim).set("modules", rep.modules).set("pairs", rep.pairs.len());
    r.lines("lines", lines);
    if let Some((pc, i)) = rep.violation() {
        r.set("violation", format!("M={} N={} summands={}", pc.m, pc.n, pc.census.lines[i].summands));
        r.fail();
    }
    Ok(())
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Validate(_) => "validate",
        Command::Words { .. } => "words",
        Command::Classify { .. } => "classify",
        Command::Modules { .. } => "modules",
        Command::Hom { .. } => "hom",
        Command::Ext { .. } => "ext",
        Command::MiddleCensus { .. } => "middle-census",
        Command::Ar { .. } => "ar",
        Command::Degeneration { .. } => "degeneration",
        Command::Witness { .. } => "witness",
        Command::VerifyMainTheorem { .. } => "verify-main-theorem",
    }
}

fn run(cli: &Cli, r: &mut Report) -> anyhow::Result<()> {
    let ctx = Ctx {
        field: cli.field,
        opts: DecomposeOptions {
            seed: cli.seed,
            ..DecomposeOptions::default()
        },
        allow_non_string: cli.allow_non_string,
    };
    match &cli.command {
        Command::Validate(i) => cmd_validate(&ctx, i, r),
        Command::Words { input, max_len } => cmd_words(&ctx, input, *max_len, r),
        Command::Classify { input, bound } => cmd_classify(&ctx, input, *bound, r),
        Command::Modules { input, max_dim } => cmd_modules(&ctx, input, *max_dim, r),
        Command::Hom { input, pair } => cmd_pair(&ctx, input, pair, "hom", r),
        Command::Ext { input, pair } => cmd_pair(&ctx, input, pair, "ext", r),
        Command::MiddleCensus { input, pair } => cmd_pair(&ctx, input, pair, "census", r),
        Command::Ar { input, word } => cmd_ar(&ctx, input, word, r),
        Command::Degeneration { input, max_dim } => cmd_degeneration(&ctx, input, *max_dim, r),
        Command::Witness { input, p, q, search_len } => cmd_witness(&ctx, input, *p, *q, *search_len, r),
        Command::VerifyMainTheorem { input, max_dim, modules } => cmd_verify(&ctx, input, *max_dim, modules, r),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut r = Report::new(name(&cli.command), cli.seed);
    match run(&cli, &mut r) {
        Ok(()) => {
            print!("{}", r.render(cli.format));
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
