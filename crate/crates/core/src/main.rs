use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use confalg::algebra::SHIFT_DEPTH;
use confalg::cohomology::{central_extend, cocycle_check, h2_dimension};
use confalg::modes::{expand_module_modes, expand_modes, jacobi_check, module_mode_check};
use confalg::module::ConformalModule;
use confalg::structure::{
    center, default_depth, derived_series, find_proper_ideal, is_ideal, is_nilpotent, is_solvable,
    lower_central_series, IdealSearch, SeriesVerdict, Verdict,
};
use confalg::submodule::Submodule;
use confalg::{builtins, dsl, json, ConformalSuperalgebra, Element};

#[derive(Parser)]
#[command(name = "cfa", version, about = "Exact computations with finite conformal superalgebras and their modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Algebra file, or a built-in name (vir, current-sl2, vir-current-sl2, wN, sN, kN, ck6)
    #[arg(long, short)]
    algebra: String,
    /// Write a JSON report to this path (`-` for stdout)
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the axioms on generators
    Check {
        #[command(flatten)]
        common: Common,
        /// Number of ∂-shifts used for the right derivation rule
        #[arg(long, default_value_t = SHIFT_DEPTH)]
        shift_depth: usize,
    },
    /// Print the product table in the text format
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Derived series
    Derived {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Lower central series
    Lcs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Center (annihilator of the algebra)
    Center {
        #[command(flatten)]
        common: Common,
    },
    Solvable {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: Option<usize>,
    },
    Nilpotent {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Search for a proper nonzero ideal; exits 1 when one is found
    Simple {
        #[command(flatten)]
        common: Common,
        /// Number of candidate closures to examine
        #[arg(long)]
        budget: Option<usize>,
        /// Only accept solvable ideals
        #[arg(long)]
        solvable_only: bool,
    },
    /// Dimension of the second cohomology within the given bounds
    H2 {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        n_bound: usize,
        #[arg(long, default_value_t = 8)]
        f_degree_bound: usize,
    },
    /// Central extension by a 2-cocycle file
    Extend {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cocycle: PathBuf,
        /// Write the extended algebra here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand to modes and re-verify the identities in a window
    Modes {
        #[command(flatten)]
        common: Common,
        /// Mode window `lo..hi`
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        check_jacobi: bool,
        /// Module file or built-in spec whose mode actions are also checked
        #[arg(long)]
        module: Option<String>,
    },
    /// Module commands
    Module {
        #[command(subcommand)]
        sub: ModuleCmd,
    },
}

#[derive(Args, Clone)]
struct ModArgs {
    /// Module file, or a built-in spec (mad:ALPHA:DELTA, ext-quotient:ALPHA,
    /// ext-torsion:ALPHA:DELTA, ext-killing:LIE, current-std-sl2,
    /// current-adjoint:LIE, vir-current-std-sl2:DELTA)
    #[arg(long, short)]
    module: String,
    /// Algebra file the module refers to
    #[arg(long, short)]
    algebra: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ModuleCmd {
    Check(ModArgs),
    Invariants(ModArgs),
    /// Does the extension `0 → S → M → M/S → 0` split?
    Split {
        #[command(flatten)]
        args: ModArgs,
        /// Generators of `S`, e.g. "c" or "d v + 2 v"; defaults to the
        /// built-in choice or the torsion part
        #[arg(long)]
        sub: Option<String>,
        #[arg(long, default_value_t = 4)]
        degree_bound: usize,
    },
    /// Irreducibility of a free rank-1 module
    Irreducible(ModArgs),
    /// Representation in gc_N
    ToGc(ModArgs),
}

/// Result of a command: pass or a verified negative.
enum Outcome {
    Pass,
    Negative,
}

type Run = Result<Outcome, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_algebra(spec: &str) -> Result<Arc<ConformalSuperalgebra>, String> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = read(path)?;
        return dsl::parse_algebra(&text).map(Arc::new).map_err(|e| format!("{spec}:{e}"));
    }
    builtins::algebra(spec).map(Arc::new).map_err(|e| e.to_string())
}

fn load_module(args: &ModArgs) -> Result<(ConformalModule, Option<Submodule>), String> {
    let path = Path::new(&args.module);
    if path.is_file() {
        let known = match &args.algebra {
            Some(a) => vec![load_algebra(a)?],
            None => Vec::new(),
        };
        let text = read(path)?;
        let m = dsl::parse_module(&text, &known).map_err(|e| format!("{}:{e}", args.module))?;
        return Ok((m, None));
    }
    builtins::module(&args.module).map_err(|e| e.to_string())
}

static TEXT_TO_STDERR: AtomicBool = AtomicBool::new(false);

/// Human-readable output; moves to stderr when the JSON report takes stdout.
macro_rules! say {
    ($($t:tt)*) => {
        if TEXT_TO_STDERR.load(Ordering::Relaxed) {
            eprintln!($($t)*)
        } else {
            println!($($t)*)
        }
    };
}

fn emit(target: &Option<PathBuf>, value: Value) -> Result<(), String> {
    let Some(path) = target else { return Ok(()) };
    let bytes = json::to_bytes(&value);
    if path.as_os_str() == "-" {
        std::io::stdout().write_all(&bytes).map_err(|e| e.to_string())
    } else {
        fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn status(o: &Outcome) -> &'static str {
    match o {
        Outcome::Pass => "pass",
        Outcome::Negative => "fail",
    }
}

fn report(command: &str, subject: &str, outcome: &Outcome, body: Value) -> Value {
    let mut v = json!({ "command": command, "subject": subject, "status": status(outcome) });
    if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
        m.extend(b);
    }
    v
}

fn series(
    name: &str,
    r: &ConformalSuperalgebra,
    members: Vec<Submodule>,
    depth: usize,
    common: &Common,
) -> Run {
    say!("{name} series of {} (depth {depth}):", r.name());
    let mut all_ideals = true;
    let mut rows = Vec::new();
    for (k, s) in members.iter().enumerate() {
        let ideal = is_ideal(r, s);
        all_ideals &= ideal;
        let sz = s.size();
        say!("  [{k}] size ({}, {}) ideal: {}  {}", sz.r, sz.d, if ideal { "yes" } else { "NO" }, s.display());
        rows.push(json!({ "member": json::submodule(s), "ideal": ideal }));
    }
    let outcome = if all_ideals { Outcome::Pass } else { Outcome::Negative };
    emit(&common.json, report(name, r.name(), &outcome, json!({ "depth": depth, "series": rows })))?;
    Ok(outcome)
}

fn verdict(name: &str, r: &ConformalSuperalgebra, v: SeriesVerdict, common: &Common) -> Run {
    let sizes: Vec<String> = v.sizes().iter().map(|s| format!("({}, {})", s.r, s.d)).collect();
    say!("{}: {name}: {} (depth {}; series sizes {})", r.name(), v.verdict, v.depth, sizes.join(" > "));
    let outcome = if v.verdict == Verdict::Yes { Outcome::Pass } else { Outcome::Negative };
    emit(
        &common.json,
        report(
            name,
            r.name(),
            &outcome,
            json!({
                "verdict": v.verdict.to_string(),
                "depth": v.depth,
                "series": v.series.iter().map(json::submodule).collect::<Vec<_>>(),
            }),
        ),
    )?;
    Ok(outcome)
}

fn parse_window(w: &str) -> Result<(i64, i64), String> {
    let bad = || format!("bad window `{w}`, expected lo..hi");
    let (a, b) = w.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn run(cli: Cli) -> Run {
    match cli.cmd {
        Cmd::Check { common, shift_depth } => {
            let r = load_algebra(&common.algebra)?;
            let rep = r.check_axioms_with_depth(shift_depth);
            for v in &rep.violations {
                say!("{v}");
            }
            say!(
                "{}: {} violations ({} pairs, {} triples checked)",
                r.name(),
                rep.violations.len(),
                rep.pairs_checked,
                rep.triples_checked
            );
            let outcome = if rep.passed() { Outcome::Pass } else { Outcome::Negative };
            emit(&common.json, report("check", r.name(), &outcome, json::axiom_report(r.basis(), &rep)))?;
            Ok(outcome)
        }
        Cmd::Table { common } => {
            let r = load_algebra(&common.algebra)?;
            say!("{}", dsl::emit_algebra(&r).trim_end());
            emit(&common.json, json::algebra_table(&r))?;
            Ok(Outcome::Pass)
        }
        Cmd::Derived { common, depth } => {
            let r = load_algebra(&common.algebra)?;
            let depth = depth.unwrap_or_else(|| default_depth(&r));
            series("derived", &r, derived_series(&r, depth), depth, &common)
        }
        Cmd::Lcs { common, depth } => {
            let r = load_algebra(&common.algebra)?;
            let depth = depth.unwrap_or_else(|| default_depth(&r));
            series("lcs", &r, lower_central_series(&r, depth), depth, &common)
        }
        Cmd::Center { common } => {
            let r = load_algebra(&common.algebra)?;
            let z = center(&r);
            let sz = z.size();
            say!("center of {}: size ({}, {})  {}", r.name(), sz.r, sz.d, z.display());
            emit(&common.json, report("center", r.name(), &Outcome::Pass, json!({ "center": json::submodule(&z) })))?;
            Ok(Outcome::Pass)
        }
        Cmd::Solvable { common, depth } => {
            let r = load_algebra(&common.algebra)?;
            let depth = depth.unwrap_or_else(|| default_depth(&r));
            verdict("solvable", &r, is_solvable(&r, depth), &common)
        }
        Cmd::Nilpotent { common, depth } => {
            let r = load_algebra(&common.algebra)?;
            let depth = depth.unwrap_or_else(|| default_depth(&r));
            verdict("nilpotent", &r, is_nilpotent(&r, depth), &common)
        }
        Cmd::Simple { common, budget, solvable_only } => {
            let r = load_algebra(&common.algebra)?;
            let mut opts = IdealSearch::new(&r);
            if let Some(b) = budget {
                opts.budget = b;
            }
            opts.solvable_only = solvable_only;
            let res = find_proper_ideal(&r, opts);
            let (outcome, body) = match &res.ideal {
                Some(s) => {
                    let sz = s.size();
                    say!("{}: proper ideal of size ({}, {}): {}", r.name(), sz.r, sz.d, s.display());
                    (Outcome::Negative, json!({ "ideal": json::submodule(s), "verified": is_ideal(&r, s) }))
                }
                None => {
                    say!(
                        "{}: no proper ideal found ({} candidates examined, budget {})",
                        r.name(),
                        res.candidates_examined,
                        opts.budget
                    );
                    (Outcome::Pass, json!({ "ideal": null }))
                }
            };
            let mut body = body;
            body["candidates_examined"] = json!(res.candidates_examined);
            body["budget"] = json!(opts.budget);
            body["budget_exhausted"] = json!(res.budget_exhausted);
            emit(&common.json, report("simple", r.name(), &outcome, body))?;
            Ok(outcome)
        }
        Cmd::H2 { common, n_bound, f_degree_bound } => {
            let r = load_algebra(&common.algebra)?;
            let h = h2_dimension(&r, n_bound, f_degree_bound);
            say!(
                "{}: dim H2 = {} (cocycles {}, coboundaries {}; n_bound {}, f_degree_bound {})",
                r.name(),
                h.dimension,
                h.cocycle_dim,
                h.trivial_dim,
                n_bound,
                f_degree_bound
            );
            for c in &h.representatives {
                say!("  representative: {}", c.display());
            }
            emit(&common.json, report("h2", r.name(), &Outcome::Pass, json::h2(&h)))?;
            Ok(Outcome::Pass)
        }
        Cmd::Extend { common, cocycle, out } => {
            let r = load_algebra(&common.algebra)?;
            let text = read(&cocycle)?;
            let alpha = dsl::parse_cocycle(&text, std::slice::from_ref(&r)).map_err(|e| format!("{}:{e}", cocycle.display()))?;
            let rep = cocycle_check(&alpha);
            if !rep.passed() {
                for v in &rep.violations {
                    say!("{v:?}");
                }
                say!("not a 2-cocycle: {} violations", rep.violations.len());
                emit(&common.json, report("extend", r.name(), &Outcome::Negative, json!({ "violations": rep.violations.len() })))?;
                return Ok(Outcome::Negative);
            }
            let ext = central_extend(&alpha).map_err(|e| e.to_string())?;
            let text = dsl::emit_algebra(&ext.extended);
            match &out {
                Some(p) => fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?,
                None => say!("{}", text.trim_end()),
            }
            let axioms = ext.extended.check_axioms();
            let outcome = if axioms.passed() { Outcome::Pass } else { Outcome::Negative };
            emit(
                &common.json,
                report(
                    "extend",
                    r.name(),
                    &outcome,
                    json!({ "extended": json::algebra_table(&ext.extended), "axioms": json::axiom_report(ext.extended.basis(), &axioms) }),
                ),
            )?;
            Ok(outcome)
        }
        Cmd::Modes { common, window, check_jacobi, module } => {
            let r = load_algebra(&common.algebra)?;
            let w = parse_window(&window)?;
            let t = expand_modes(&r, w);
            say!("{}: {} modes in window {}..{}", r.name(), t.len(), w.0, w.1);
            let mut outcome = Outcome::Pass;
            let mut body = json!({ "table": json::mode_table(&t) });
            if check_jacobi {
                let rep = jacobi_check(&t);
                for v in rep.violations.iter().take(20) {
                    say!("  {} violation at ({})", v.kind, v.modes.join(", "));
                }
                say!(
                    "  jacobi: {} violations, {} triples checked, {} skipped (window edge)",
                    rep.violations.len(),
                    rep.checked,
                    rep.skipped
                );
                if !rep.passed() {
                    outcome = Outcome::Negative;
                }
                body["jacobi"] = json::mode_report(&rep);
            }
            if let Some(spec) = module {
                let args = ModArgs { module: spec, algebra: Some(common.algebra.clone()), json: None };
                let (m, _) = load_module(&args)?;
                let mt = expand_module_modes(&m, w);
                let rep = module_mode_check(&mt);
                say!(
                    "  module {}: {} violations, {} checked, {} skipped",
                    m.name(),
                    rep.violations.len(),
                    rep.checked,
                    rep.skipped
                );
                if !rep.passed() {
                    outcome = Outcome::Negative;
                }
                body["module"] = json::mode_report(&rep);
            }
            emit(&common.json, report("modes", r.name(), &outcome, body))?;
            Ok(outcome)
        }
        Cmd::Module { sub } => run_module(sub),
    }
}

fn run_module(cmd: ModuleCmd) -> Run {
    match cmd {
        ModuleCmd::Check(args) => {
            let (m, _) = load_module(&args)?;
            let rep = m.check();
            for v in &rep.violations {
                say!("{v}");
            }
            say!("{}: {} violations", m.name(), rep.violations.len());
            let outcome = if rep.passed() { Outcome::Pass } else { Outcome::Negative };
            emit(&args.json, report("module check", m.name(), &outcome, json::axiom_report(m.basis(), &rep)))?;
            Ok(outcome)
        }
        ModuleCmd::Invariants(args) => {
            let (m, _) = load_module(&args)?;
            let inv = m.invariants();
            let sz = inv.size();
            say!("{}: invariants of size ({}, {}): {}", m.name(), sz.r, sz.d, inv.display());
            emit(&args.json, report("module invariants", m.name(), &Outcome::Pass, json!({ "invariants": json::submodule(&inv) })))?;
            Ok(Outcome::Pass)
        }
        ModuleCmd::Split { args, sub, degree_bound } => {
            let (m, default_sub) = load_module(&args)?;
            let s = match sub {
                Some(text) => {
                    let seeds: Vec<Element> = dsl::parse_elements(m.basis(), &text).map_err(|e| format!("--sub:{e}"))?;
                    Submodule::new(m.basis(), &seeds)
                }
                None => default_sub.unwrap_or_else(|| {
                    let b = m.basis();
                    let seeds: Vec<Element> = (0..b.len()).filter(|&k| b.get(k).is_torsion()).map(Element::unit).collect();
                    Submodule::new(b, &seeds)
                }),
            };
            let split = m.is_split(&s, degree_bound).map_err(|e| e.to_string())?;
            say!("{}: extension by {} {}", m.name(), s.display(), if split { "splits" } else { "does not split" });
            let outcome = if split { Outcome::Pass } else { Outcome::Negative };
            emit(
                &args.json,
                report("module split", m.name(), &outcome, json!({ "sub": json::submodule(&s), "split": split, "degree_bound": degree_bound })),
            )?;
            Ok(outcome)
        }
        ModuleCmd::Irreducible(args) => {
            let (m, _) = load_module(&args)?;
            let (irr, g) = m.irreducibility_rank1().map_err(|e| e.to_string())?;
            say!("{}: {} (gcd {})", m.name(), if irr { "irreducible" } else { "reducible" }, g);
            let outcome = if irr { Outcome::Pass } else { Outcome::Negative };
            emit(&args.json, report("module irreducible", m.name(), &outcome, json!({ "irreducible": irr, "gcd": json::poly(&g) })))?;
            Ok(outcome)
        }
        ModuleCmd::ToGc(args) => {
            let (m, _) = load_module(&args)?;
            let rep = m.rep_to_gc().map_err(|e| e.to_string())?;
            say!(
                "{}: homomorphism: {} ({} products checked, {} failures), faithful: {}",
                m.name(),
                rep.is_homomorphism(),
                rep.pairs_checked,
                rep.failures.len(),
                rep.faithful
            );
            let outcome = if rep.is_homomorphism() { Outcome::Pass } else { Outcome::Negative };
            emit(
                &args.json,
                report(
                    "module to-gc",
                    m.name(),
                    &outcome,
                    json!({
                        "homomorphism": rep.is_homomorphism(),
                        "faithful": rep.faithful,
                        "pairs_checked": rep.pairs_checked,
                        "kernel": rep.kernel.iter().map(|x| json::element(m.algebra().basis(), x)).collect::<Vec<_>>(),
                    }),
                ),
            )?;
            Ok(outcome)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::env::args().collect();
    let json_stdout = args.windows(2).any(|w| w[0] == "--json" && w[1] == "-") || args.iter().any(|a| a == "--json=-");
    TEXT_TO_STDERR.store(json_stdout, Ordering::Relaxed);
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
