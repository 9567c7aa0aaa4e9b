use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use rackqm::adjoint::presentation;
use rackqm::builtin;
use rackqm::certify::{boundedness_refutation, independence_certificate};
use rackqm::cochain::{coboundary, cohomology_dims, DEFAULT_CAP};
use rackqm::free_product::FreeProductRack;
use rackqm::io;
use rackqm::num::{format_rational, parse_rational};
use rackqm::quasimorphism::{
    brooks_qm, exhaustive_group_defect, rack_defect_estimate, rolli_qm, sampled_group_defect, v0_dim, ExhaustiveBudget,
    HomogenizeError, Homogenizer, LambdaFamily, RolliQm,
};
use rackqm::rack::FiniteRack;
use rackqm::sample::SamplerConfig;
use rackqm::word::GroupWord;
use rackqm::{Execution, Rational, Sign};

#[derive(Parser)]
#[command(name = "rackqm", version, about = "Racks, quandles, free products and rack quasimorphisms")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Free product used for elements and λ files: rack:a,b | quandle:a,b |
    /// trivial:a=2,b=3 | product:a=rack,b=2
    #[arg(long, global = true, default_value = "rack:a,b")]
    parent: String,

    /// Run loops on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite racks given as JSON Cayley tables.
    #[command(subcommand)]
    Rack(RackCommand),
    /// Free-group words.
    #[command(subcommand)]
    Word(WordCommand),
    /// Elements of the free product selected by --parent.
    #[command(subcommand)]
    Fp(FpCommand),
    /// Quasimorphisms.
    #[command(subcommand)]
    Qm(QmCommand),
    /// Independence certificates.
    #[command(subcommand)]
    Certify(CertifyCommand),
}

#[derive(Subcommand)]
enum RackCommand {
    /// Validate the rack axioms. FILE may also be builtin:NAME (T3, R4, …).
    Check { file: PathBuf },
    /// Orbits under the inner automorphisms.
    Components { file: PathBuf },
    /// Dimensions of H⁰ … Hⁿ over the rationals.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Use cochains vanishing on tuples with equal neighbours.
        #[arg(long)]
        quandle: bool,
        /// Also print the matrix of δ at the top degree.
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Presentation of the adjoint group.
    Presentation {
        file: PathBuf,
        #[arg(long, default_value = "e")]
        prefix: String,
    },
}

#[derive(Subcommand)]
enum WordCommand {
    /// Free reduction.
    Reduce { word: String },
}

#[derive(Subcommand)]
enum FpCommand {
    /// p ◁ q, or p ◁⁻¹ q with --inverse.
    Op {
        p: String,
        q: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Equality of canonical forms.
    Equal { p: String, q: String },
}

#[derive(Args)]
struct SamplerArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 12)]
    max_syllables: usize,
    #[arg(long, default_value_t = 5)]
    max_exponent: u32,
}

#[derive(Subcommand)]
enum QmCommand {
    /// φ̂_λ(p) for an element p, or φ_λ(g) for a word with --word.
    Eval {
        lambda: PathBuf,
        element: String,
        #[arg(long)]
        word: bool,
    },
    /// Observed defect, compared against 3‖λ‖ (group) or 4‖λ‖ (rack).
    Defect {
        lambda: PathBuf,
        #[arg(long, conflicts_with = "rack")]
        group: bool,
        #[arg(long)]
        rack: bool,
        #[command(flatten)]
        sampler: SamplerArgs,
        /// Add an exhaustive group enumeration up to this many syllables.
        #[arg(long, requires = "group")]
        exhaustive: Option<usize>,
    },
    /// Linear-growth witness and its value table.
    Witness {
        lambda: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "1,10,100")]
        n: Vec<u64>,
    },
    /// Interval estimates of the homogenized Brooks quasimorphism of --word.
    Homogenize {
        #[arg(long)]
        word: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        defect_bound: String,
        /// Stop doubling once the radius drops below this.
        #[arg(long, default_value = "1/1000")]
        tolerance: String,
        #[arg(long, default_value_t = 20)]
        max_log2: u32,
        #[command(flatten)]
        sampler: SamplerArgs,
    },
    /// Dimension of the odd functions on a product of finite groups.
    V0dim {
        #[arg(required = true)]
        groups: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum CertifyCommand {
    /// Evaluation matrix of k indicator families on k periodic witnesses.
    Independence {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        n: u64,
    },
    /// Re-evaluate a JSON certificate.
    Check { file: PathBuf },
}

enum Outcome {
    Ok,
    Violated,
}

struct Ctx {
    json: bool,
    parent_descriptor: String,
    execution: Execution,
}

impl Ctx {
    fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("reports serialize"));
        } else {
            let t = text();
            print!("{t}");
            if !t.ends_with('\n') {
                println!();
            }
        }
    }

    fn parent(&self) -> Result<FreeProductRack> {
        FreeProductRack::from_descriptor(&self.parent_descriptor).context("invalid --parent")
    }

    fn sampler(&self, a: &SamplerArgs) -> SamplerConfig {
        SamplerConfig {
            seed: a.seed,
            samples: a.samples,
            max_syllables: a.max_syllables,
            max_exponent: a.max_exponent,
            execution: self.execution,
        }
    }
}

fn q(v: &Rational) -> String {
    format_rational(v)
}

fn builtin_name(file: &Path) -> Option<&str> {
    file.to_str().and_then(|s| s.strip_prefix("builtin:"))
}

fn load_rack(file: &Path) -> Result<FiniteRack> {
    if let Some(name) = builtin_name(file) {
        return builtin::rack(name).ok_or_else(|| anyhow!("no built-in rack {name:?}"));
    }
    io::load_rack(file).with_context(|| format!("loading {}", file.display()))
}

fn load_lambda(file: &Path, parent: &FreeProductRack) -> Result<(LambdaFamily, RolliQm)> {
    let family = match builtin_name(file) {
        Some(name) => builtin::lambda(name, parent)
            .ok_or_else(|| anyhow!("no built-in λ {name:?}; known: {}", builtin::LAMBDA_NAMES.join(", ")))?,
        None => io::load_lambda(file, parent).with_context(|| format!("loading {}", file.display()))?,
    };
    let qm = rolli_qm(&family, parent)?;
    Ok((family, qm))
}

fn rack_command(ctx: &Ctx, cmd: RackCommand) -> Result<Outcome> {
    match cmd {
        RackCommand::Check { file } => {
            let loaded = match builtin_name(&file) {
                Some(_) => Ok(load_rack(&file)?),
                None => io::load_rack(&file),
            };
            match loaded {
                Ok(r) => {
                    ctx.emit(json!({"valid": true, "name": r.name(), "size": r.size(), "kind": r.kind().to_string()}), || {
                        format!("ok: {} is a {} with {} elements", r.name(), r.kind(), r.size())
                    });
                    Ok(Outcome::Ok)
                }
                Err(e) => match e.rack_error().and_then(|re| re.axiom().map(|a| (a, re))) {
                    Some((axiom, re)) => {
                        ctx.emit(json!({"valid": false, "axiom": axiom, "witness": re.to_string()}), || format!("violation: {re}"));
                        Ok(Outcome::Violated)
                    }
                    None => Err(anyhow!(e).context(format!("loading {}", file.display()))),
                },
            }
        }
        RackCommand::Components { file } => {
            let r = load_rack(&file)?;
            let comps = r.components();
            let members: Vec<Vec<&str>> = (0..comps.count)
                .map(|c| comps.members(c).into_iter().map(|i| r.labels()[i].as_str()).collect())
                .collect();
            ctx.emit(json!({"count": comps.count, "components": members}), || {
                let mut out = format!("components: {}\n", comps.count);
                for (c, m) in members.iter().enumerate() {
                    out.push_str(&format!("  {c}: {}\n", m.join(" ")));
                }
                out
            });
            Ok(Outcome::Ok)
        }
        RackCommand::Cohomology { file, degree, quandle, dump_matrix } => {
            let r = load_rack(&file)?;
            let dims = cohomology_dims(&r, degree, quandle, ctx.execution, DEFAULT_CAP)?;
            let matrix = if dump_matrix {
                let d = coboundary(&r, degree as i64, ctx.execution, DEFAULT_CAP)?;
                Some(if quandle { d.nondegenerate_block(r.size()) } else { d })
            } else {
                None
            };
            let mode = if quandle { "quandle" } else { "rack" };
            ctx.emit(
                json!({"mode": mode, "dims": dims, "matrix": matrix.as_ref().map(|m| m.to_dense())}),
                || {
                    let mut out = String::new();
                    for (k, d) in dims.iter().enumerate() {
                        out.push_str(&format!("H^{k} = {d}\n"));
                    }
                    if let Some(m) = &matrix {
                        out.push_str(&m.dump());
                    }
                    out
                },
            );
            Ok(Outcome::Ok)
        }
        RackCommand::Presentation { file, prefix } => {
            let r = load_rack(&file)?;
            let p = presentation(&r, &prefix);
            let relators: Vec<String> = p.relators.iter().map(ToString::to_string).collect();
            ctx.emit(json!({"generators": p.generators, "relators": relators}), || p.to_text());
            Ok(Outcome::Ok)
        }
    }
}

fn word_command(ctx: &Ctx, cmd: WordCommand) -> Result<Outcome> {
    match cmd {
        WordCommand::Reduce { word } => {
            let w: GroupWord = word.parse()?;
            let s = w.to_string();
            ctx.emit(json!({"word": s}), || if s.is_empty() { "1".into() } else { s.clone() });
            Ok(Outcome::Ok)
        }
    }
}

fn fp_command(ctx: &Ctx, cmd: FpCommand) -> Result<Outcome> {
    let parent = ctx.parent()?;
    match cmd {
        FpCommand::Op { p, q, inverse } => {
            let (p, q) = (parent.parse_element(&p)?, parent.parse_element(&q)?);
            let sign = if inverse { Sign::Minus } else { Sign::Plus };
            let r = parent.render(&parent.rack_op(&p, &q, sign)?);
            ctx.emit(json!({"result": r}), || r.clone());
        }
        FpCommand::Equal { p, q } => {
            let (p, q) = (parent.parse_element(&p)?, parent.parse_element(&q)?);
            let eq = parent.equal(&p, &q)?;
            ctx.emit(json!({"equal": eq, "left": parent.render(&p), "right": parent.render(&q)}), || eq.to_string());
        }
    }
    Ok(Outcome::Ok)
}

fn qm_command(ctx: &Ctx, cmd: QmCommand) -> Result<Outcome> {
    match cmd {
        QmCommand::Eval { lambda, element, word } => {
            let parent = ctx.parent()?;
            let (_, qm) = load_lambda(&lambda, &parent)?;
            let (value, canonical) = if word {
                let g = parent.parse_word(&element)?;
                (qm.value(&g), parent.render_word(&g))
            } else {
                let p = parent.parse_element(&element)?;
                (qm.rack_value(&p), parent.render(&p))
            };
            ctx.emit(json!({"input": canonical, "value": q(&value)}), || q(&value));
            Ok(Outcome::Ok)
        }
        QmCommand::Defect { lambda, group, rack: _, sampler, exhaustive } => {
            let parent = ctx.parent()?;
            let (family, qm) = load_lambda(&lambda, &parent)?;
            let cfg = ctx.sampler(&sampler);
            let (kind, factor, max, witness, pairs) = if group {
                let mut report = sampled_group_defect(&qm, &parent, &cfg);
                if let Some(len) = exhaustive {
                    let budget = ExhaustiveBudget { max_syllables: len, max_exponent: sampler.max_exponent };
                    let ex = exhaustive_group_defect(&qm, &parent, budget, ctx.execution);
                    let pairs = report.pairs + ex.pairs;
                    if ex.max > report.max {
                        report = ex;
                    }
                    report.pairs = pairs;
                }
                let w = report.witness.map(|(g, h)| vec![parent.render_word(&g), parent.render_word(&h)]);
                ("group", 3, report.max, w, report.pairs.to_string())
            } else {
                let report = rack_defect_estimate(&qm, &parent, &cfg);
                let w = report.witness.map(|(p, r)| vec![parent.render(&p), parent.render(&r)]);
                ("rack", 4, report.max, w, report.samples.to_string())
            };
            let bound = Rational::from(factor) * family.bound();
            let ok = max <= bound;
            ctx.emit(
                json!({"kind": kind, "max": q(&max), "bound": q(&bound), "within_bound": ok, "pairs": pairs,
                       "seed": sampler.seed, "witness": witness}),
                || {
                    let mut out = format!("{kind} defect: max {} over {pairs} pairs (bound {factor}·‖λ‖ = {})\n", q(&max), q(&bound));
                    if let Some(w) = &witness {
                        out.push_str(&format!("attained at: {}  and  {}\n", w[0], w[1]));
                    }
                    out.push_str(if ok { "within bound\n" } else { "VIOLATION: bound exceeded\n" });
                    out
                },
            );
            Ok(if ok { Outcome::Ok } else { Outcome::Violated })
        }
        QmCommand::Witness { lambda, n } => {
            let parent = ctx.parent()?;
            let (_, qm) = load_lambda(&lambda, &parent)?;
            let report = boundedness_refutation(&qm, &parent, &n)?;
            let w = &report.witness;
            let base = format!("{}.{}", parent.factor_name(w.base_factor), w.base);
            let period = parent.render_word(&w.period(&parent));
            let table: Vec<Value> = report.table.iter().map(|(n, v)| json!({"n": n, "value": q(v)})).collect();
            let linear = report.is_linear();
            ctx.emit(
                json!({"base": base, "period": period, "slope": q(&w.slope), "factor_orbit_sum": report.factor_orbit_sum,
                       "table": table, "linear": linear}),
                || {
                    let mut out = format!("witness: ({base} | ({period})^n)\nslope: {}\nfactor-orbit sum: {}\n", q(&w.slope), report.factor_orbit_sum);
                    out.push_str("n\tvalue\n");
                    for (n, v) in &report.table {
                        out.push_str(&format!("{n}\t{}\n", q(v)));
                    }
                    out
                },
            );
            Ok(if linear { Outcome::Ok } else { Outcome::Violated })
        }
        QmCommand::Homogenize { word, target, defect_bound, tolerance, max_log2, sampler } => {
            let w: GroupWord = word.parse()?;
            let g: GroupWord = target.parse()?;
            let bound = parse_rational(&defect_bound).map_err(|_| anyhow!("--defect-bound {defect_bound:?} is not a rational"))?;
            let tol = parse_rational(&tolerance).map_err(|_| anyhow!("--tolerance {tolerance:?} is not a rational"))?;
            let qm = brooks_qm(w.clone())?;
            let letters: Vec<String> = w.generators().union(&g.generators()).cloned().collect();
            let h = match Homogenizer::checked(&qm, bound, &letters, &ctx.sampler(&sampler)) {
                Ok(h) => h,
                Err(e @ HomogenizeError::BoundBelowObserved { .. }) => {
                    ctx.emit(json!({"error": e.to_string()}), || format!("VIOLATION: {e}"));
                    return Ok(Outcome::Violated);
                }
                Err(e) => return Err(e.into()),
            };
            let steps = h.doubling(&g, &tol, max_log2);
            let consistent = steps.windows(2).all(|p| p[0].intersects(&p[1]));
            let rows: Vec<Value> = steps
                .iter()
                .map(|e| json!({"n": e.exponent, "center": q(&e.center), "radius": q(&e.radius)}))
                .collect();
            ctx.emit(
                json!({"word": w.to_string(), "target": g.to_string(), "defect_bound": q(h.defect_bound()),
                       "observed_defect": q(h.observed_defect()), "estimates": rows, "intervals_intersect": consistent}),
                || {
                    let mut out = format!("observed defect {} ≤ bound {}\nN\tcenter\tradius\n", q(h.observed_defect()), q(h.defect_bound()));
                    for e in &steps {
                        out.push_str(&format!("{}\t{}\t{}\n", e.exponent, q(&e.center), q(&e.radius)));
                    }
                    out
                },
            );
            Ok(if consistent { Outcome::Ok } else { Outcome::Violated })
        }
        QmCommand::V0dim { groups } => {
            let gs = groups
                .iter()
                .map(|p| io::load_group(p).with_context(|| format!("loading {}", p.display())))
                .collect::<Result<Vec<_>>>()?;
            let d = v0_dim(&gs);
            ctx.emit(json!({"dim": d}), || d.to_string());
            Ok(Outcome::Ok)
        }
    }
}

fn certify_command(ctx: &Ctx, cmd: CertifyCommand) -> Result<Outcome> {
    match cmd {
        CertifyCommand::Independence { rank, n } => {
            let parent = ctx.parent()?;
            let cert = independence_certificate(&parent, rank, n, ctx.execution)?;
            if ctx.json {
                println!("{}", io::certificate_to_json(&cert, &parent));
            } else {
                println!("parent: {}", parent.describe());
                println!("M[i][j] = φ̂_i(w_j({n})) / {n}");
                for row in &cert.matrix {
                    println!("{}", row.iter().map(q).collect::<Vec<_>>().join(" "));
                }
                println!("rank = {}", cert.verdict);
            }
            Ok(if cert.verdict == rank { Outcome::Ok } else { Outcome::Violated })
        }
        CertifyCommand::Check { file } => {
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let check = io::check_certificate(&text)?;
            ctx.emit(
                json!({"matrix_matches": check.matrix_matches, "verdict_matches": check.verdict_matches}),
                || if check.is_valid() { "certificate verified".into() } else { "VIOLATION: certificate does not re-evaluate".into() },
            );
            Ok(if check.is_valid() { Outcome::Ok } else { Outcome::Violated })
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    let ctx = Ctx {
        json: cli.json,
        parent_descriptor: cli.parent,
        execution: if cli.sequential { Execution::Sequential } else { Execution::Parallel },
    };
    match cli.command {
        Command::Rack(c) => rack_command(&ctx, c),
        Command::Word(c) => word_command(&ctx, c),
        Command::Fp(c) => fp_command(&ctx, c),
        Command::Qm(c) => qm_command(&ctx, c),
        Command::Certify(c) => certify_command(&ctx, c),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violated) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
