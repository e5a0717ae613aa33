//! Command line interface behind the `zz` binary.
//!
//! Four subcommands: `zz` computes the polynomial and its invariants by
//! one or all methods, `interface` prints the fragment/order analysis,
//! `verify` sweeps the cross-checks over a parameter box, and `bench`
//! times the methods. Every subcommand takes `--json`; exit codes are
//! 0 success, 2 usage or bad parameters, 3 verification mismatch,
//! 4 unsupported combination or over the enumeration budget.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed_form::{
    clar_cover_count_ribbon, clar_number_formula, kekule_ribbon, v3_ribbon, v4_ribbon,
    zz_parallelogram, zz_ribbon, zz_ribbon_special,
};
use crate::covers::{enumerate_covers, zz_brute};
use crate::engine::{CacheStats, Engine};
use crate::interfaces::{analyze, central_decomposition, classify_cover, cover_edge_orders};
use crate::lattice::{Benzenoid, ParallelogramParams, RibbonParams};
use crate::poly::Polynomial;

const DEFAULT_BRUTE_BUDGET: u64 = 40;

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout (exit 0) and usage
            // errors to stderr (exit 2)
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn mismatch(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn unsupported(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "zz",
    version,
    about = "Exact Zhang-Zhang (Clar covering) polynomials of benzenoids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the ZZ polynomial and the invariants it carries
    Zz(ZzArgs),
    /// Fragment shapes, interface orders, and edge counts
    Interface(InterfaceArgs),
    /// Sweep the cross-checks over a parameter box
    Verify(VerifyArgs),
    /// Time each method on one structure
    Bench(BenchArgs),
}

#[derive(Args)]
struct FamilyArgs {
    /// Structure family
    #[arg(long, value_enum)]
    family: Family,
    /// Family parameters: parallelogram m n; ribbon n1 n2 m1 m2;
    /// v3 k m n; v4 k1 k2 m n; file <path to a hexagon-list JSON>
    #[arg(required = true)]
    params: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Parallelogram,
    Ribbon,
    V3,
    V4,
    File,
}

impl Family {
    fn name(&self) -> &'static str {
        match self {
            Family::Parallelogram => "parallelogram",
            Family::Ribbon => "ribbon",
            Family::V3 => "v3",
            Family::V4 => "v4",
            Family::File => "file",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Engine,
    Brute,
    All,
}

#[derive(Args)]
struct ZzArgs {
    #[command(flatten)]
    target: FamilyArgs,
    /// Computation method; all runs every applicable one and compares
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct InterfaceArgs {
    #[command(flatten)]
    target: FamilyArgs,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Upper bound of the ribbon parameter box [1, max]^4
    #[arg(long, default_value_t = 2)]
    ribbon_max: u32,
    /// Upper bound of the parallelogram box [0, max]^2
    #[arg(long, default_value_t = 3)]
    parallelogram_max: u32,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    target: FamilyArgs,
    /// Methods to time
    #[arg(long, value_enum, default_value = "all")]
    method: Method,
    /// Emit CSV rows (family,params,method,ms,poly_degree)
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

// ---- Target resolution ----

enum Structure {
    Parallelogram(ParallelogramParams),
    Ribbon(RibbonParams),
    Loaded(Benzenoid),
}

struct Target {
    family: &'static str,
    params: Vec<String>,
    structure: Structure,
}

impl Target {
    fn resolve(args: &FamilyArgs) -> Result<Target, Failure> {
        let family = args.family.name();
        let params = args.params.clone();
        let structure = match args.family {
            Family::File => {
                let [path] = exact_params::<1>(family, &params)?;
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
                let b = Benzenoid::from_json(&text)
                    .map_err(|e| Failure::usage(format!("{path}: {e}")))?;
                Structure::Loaded(b)
            }
            Family::Parallelogram => {
                let [m, n] = int_params::<2>(family, &params)?;
                Structure::Parallelogram(ParallelogramParams::new(m, n))
            }
            Family::Ribbon => {
                let [n1, n2, m1, m2] = int_params::<4>(family, &params)?;
                Structure::Ribbon(
                    RibbonParams::new(n1, n2, m1, m2)
                        .map_err(|e| Failure::usage(e.to_string()))?,
                )
            }
            Family::V3 => {
                let [k, m, n] = int_params::<3>(family, &params)?;
                Structure::Ribbon(v3_ribbon(k, m, n).map_err(|e| Failure::usage(e.to_string()))?)
            }
            Family::V4 => {
                let [k1, k2, m, n] = int_params::<4>(family, &params)?;
                Structure::Ribbon(
                    v4_ribbon(k1, k2, m, n).map_err(|e| Failure::usage(e.to_string()))?,
                )
            }
        };
        Ok(Target {
            family,
            params,
            structure,
        })
    }

    fn describe(&self) -> String {
        match &self.structure {
            Structure::Parallelogram(p) => p.to_string(),
            Structure::Ribbon(p) => p.to_string(),
            Structure::Loaded(b) => {
                format!("{} ({} hexagons)", self.params[0], b.hexagons().len())
            }
        }
    }

    fn build(&self) -> Benzenoid {
        match &self.structure {
            Structure::Parallelogram(p) => Benzenoid::parallelogram(*p),
            Structure::Ribbon(p) => Benzenoid::ribbon(p),
            Structure::Loaded(b) => b.clone(),
        }
    }

    fn hexagon_count(&self) -> u64 {
        match &self.structure {
            Structure::Parallelogram(p) => p.hexagon_count(),
            Structure::Ribbon(p) => p.hexagon_count(),
            Structure::Loaded(b) => b.hexagons().len() as u64,
        }
    }

    fn closed_zz(&self) -> Option<Polynomial> {
        match &self.structure {
            Structure::Parallelogram(p) => Some(zz_parallelogram(p.m, p.n)),
            Structure::Ribbon(p) => Some(zz_ribbon(p)),
            Structure::Loaded(_) => None,
        }
    }

    fn ribbon(&self) -> Option<&RibbonParams> {
        match &self.structure {
            Structure::Ribbon(p) => Some(p),
            _ => None,
        }
    }
}

fn exact_params<const N: usize>(family: &str, params: &[String]) -> Result<[String; N], Failure> {
    <[String; N]>::try_from(params.to_vec()).map_err(|_| {
        Failure::usage(format!(
            "family {family} takes exactly {N} parameter{}, got {}",
            if N == 1 { "" } else { "s" },
            params.len()
        ))
    })
}

fn int_params<const N: usize>(family: &str, params: &[String]) -> Result<[u32; N], Failure> {
    let raw = exact_params::<N>(family, params)?;
    let mut out = [0u32; N];
    for (slot, text) in out.iter_mut().zip(raw.iter()) {
        *slot = text.parse().map_err(|_| {
            Failure::usage(format!("parameter {text:?} is not a nonnegative integer"))
        })?;
    }
    Ok(out)
}

fn brute_budget() -> Result<u64, Failure> {
    match std::env::var("ZZ_BRUTE_BUDGET") {
        Ok(text) => text.parse().map_err(|_| {
            Failure::usage(format!(
                "ZZ_BRUTE_BUDGET must be a hexagon count, got {text:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BRUTE_BUDGET),
    }
}

// ---- Polynomial rendering ----

/// Human form in descending powers: `x^2 + 5x + 5`.
pub fn poly_descending(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let one = BigUint::from(1u32);
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match k {
            0 => write!(out, "{c}").unwrap(),
            1 if *c == one => out.push('x'),
            1 => write!(out, "{c}x").unwrap(),
            _ if *c == one => write!(out, "x^{k}").unwrap(),
            _ => write!(out, "{c}x^{k}").unwrap(),
        }
    }
    out
}

// ---- zz ----

#[derive(Serialize, Deserialize)]
pub struct ZzReport {
    pub family: String,
    pub params: Vec<String>,
    pub structure: String,
    pub hexagons: u64,
    /// Polynomial per method actually run
    pub methods: BTreeMap<String, Polynomial>,
    pub agree: bool,
    pub zz: Polynomial,
    /// Decimal counts; `clar_number`/`clar_structures` are absent for a
    /// structure with no covers
    pub kekule: String,
    pub clar_covers: String,
    pub clar_number: Option<usize>,
    pub clar_structures: Option<String>,
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Zz(args) => cmd_zz(args),
        Command::Interface(args) => cmd_interface(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn cmd_zz(args: ZzArgs) -> Result<(), Failure> {
    let target = Target::resolve(&args.target)?;
    let budget = brute_budget()?;
    let mut methods: BTreeMap<String, Polynomial> = BTreeMap::new();

    match args.method {
        Method::Closed | Method::All => {
            if let Some(poly) = target.closed_zz() {
                methods.insert("closed".into(), poly);
            } else if args.method == Method::Closed {
                return Err(Failure::unsupported(format!(
                    "family {} has no closed form; use --method engine or brute",
                    target.family
                )));
            }
        }
        _ => {}
    }
    if matches!(args.method, Method::Engine | Method::All) {
        methods.insert("engine".into(), Engine::new().zz_decompose(&target.build()));
    }
    if matches!(args.method, Method::Brute | Method::All) {
        if target.hexagon_count() <= budget {
            methods.insert("brute".into(), zz_brute(&target.build()));
        } else if args.method == Method::Brute {
            return Err(Failure::unsupported(format!(
                "{} hexagons exceed the enumeration budget of {budget}; \
                 raise ZZ_BRUTE_BUDGET to force it",
                target.hexagon_count()
            )));
        }
    }

    let mut polys = methods.values();
    let reference = polys.next().expect("at least one method ran").clone();
    let agree = polys.all(|p| *p == reference);

    let (kekule, clar_covers) = (reference.coeff(0), reference.eval_u64(1));
    let report = ZzReport {
        family: target.family.to_string(),
        params: target.params.clone(),
        structure: target.describe(),
        hexagons: target.hexagon_count(),
        agree,
        zz: reference.clone(),
        kekule: kekule.to_string(),
        clar_covers: clar_covers.to_string(),
        clar_number: reference.degree(),
        clar_structures: reference.leading_coeff().map(BigUint::to_string),
        methods,
    };

    if args.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("structure: {}", report.structure);
        for (name, poly) in &report.methods {
            println!("{name}: {}", poly_descending(poly));
        }
        println!("agree: {}", if report.agree { "yes" } else { "NO" });
        println!("zz: {}", poly_descending(&report.zz));
        println!("kekule: {}", report.kekule);
        println!("clar_covers: {}", report.clar_covers);
        match report.clar_number {
            Some(n) => println!("clar_number: {n}"),
            None => println!("clar_number: undefined (no covers)"),
        }
        if let Some(s) = &report.clar_structures {
            println!("clar_structures: {s}");
        }
    }

    if !agree {
        let detail: Vec<String> = report
            .methods
            .iter()
            .map(|(name, poly)| format!("{name} = {}", poly_descending(poly)))
            .collect();
        return Err(Failure::mismatch(format!(
            "methods disagree on {}: {}",
            report.structure,
            detail.join("; ")
        )));
    }
    Ok(())
}

// ---- interface ----

#[derive(Serialize, Deserialize)]
pub struct InterfaceCmdReport {
    pub family: String,
    pub params: Vec<String>,
    pub structure: String,
    pub report: crate::interfaces::InterfaceReport,
    /// For ribbons: index and order of the central interface
    pub central: Option<CentralSummary>,
}

#[derive(Serialize, Deserialize)]
pub struct CentralSummary {
    pub index: u32,
    pub order: u32,
    pub edges: u32,
}

fn cmd_interface(args: InterfaceArgs) -> Result<(), Failure> {
    let target = Target::resolve(&args.target)?;
    let report = analyze(&target.build()).map_err(|e| Failure::unsupported(e.to_string()))?;

    let central = target.ribbon().map(|p| {
        let index = p.central_interface_index();
        CentralSummary {
            index,
            order: report.orders[index as usize],
            edges: report.edge_counts[index as usize],
        }
    });

    let out = InterfaceCmdReport {
        family: target.family.to_string(),
        params: target.params.clone(),
        structure: target.describe(),
        report,
        central,
    };

    if args.json {
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        println!("structure: {}", out.structure);
        println!("shapes: {}", out.report.shapes_string());
        println!("orders: {}", join(&out.report.orders));
        println!("edge_counts: {}", join(&out.report.edge_counts));
        if let Some(c) = &out.central {
            println!(
                "central_interface: index {}, order {}, edges {}",
                c.index, c.order, c.edges
            );
        }
    }
    Ok(())
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

// ---- verify ----

#[derive(Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckRow>,
    pub all_pass: bool,
}

#[derive(Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub pass: bool,
    pub cases: u64,
    pub counterexample: Option<String>,
}

struct Sweep {
    rows: Vec<CheckRow>,
}

impl Sweep {
    fn run(
        &mut self,
        name: &str,
        check: impl FnOnce() -> (u64, Option<String>),
    ) {
        let (cases, counterexample) = check();
        self.rows.push(CheckRow {
            name: name.to_string(),
            pass: counterexample.is_none(),
            cases,
            counterexample,
        });
    }
}

fn ribbon_box(max: u32) -> Vec<RibbonParams> {
    let mut out = Vec::new();
    for n1 in 1..=max {
        for n2 in 1..=max {
            for m1 in 1..=max {
                for m2 in 1..=max {
                    out.push(RibbonParams::new(n1, n2, m1, m2).expect("positive"));
                }
            }
        }
    }
    out
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    if args.ribbon_max < 1 {
        return Err(Failure::usage("--ribbon-max must be at least 1"));
    }
    let budget = brute_budget()?;
    let worst_ribbon = 3 * (args.ribbon_max as u64).pow(2);
    let worst_parallelogram = (args.parallelogram_max as u64).pow(2);
    if worst_ribbon.max(worst_parallelogram) > budget {
        return Err(Failure::unsupported(format!(
            "the sweep reaches {} hexagons but the enumeration budget is {budget}; \
             lower --ribbon-max/--parallelogram-max or raise ZZ_BRUTE_BUDGET",
            worst_ribbon.max(worst_parallelogram)
        )));
    }

    let ribbons = ribbon_box(args.ribbon_max);
    let small_ribbons = ribbon_box(args.ribbon_max.min(2));
    let pmax = args.parallelogram_max;
    let mut engine = Engine::new();
    let mut sweep = Sweep { rows: Vec::new() };

    sweep.run("triple-oracle-agreement", || {
        let mut cases = 0;
        for p in &ribbons {
            cases += 1;
            let closed = zz_ribbon(p);
            let b = Benzenoid::ribbon(p);
            let eng = engine.zz_decompose(&b);
            let brute = zz_brute(&b);
            if closed != eng || closed != brute {
                return (
                    cases,
                    Some(format!(
                        "{p}: closed = {}, engine = {}, brute = {}",
                        poly_descending(&closed),
                        poly_descending(&eng),
                        poly_descending(&brute)
                    )),
                );
            }
        }
        (cases, None)
    });

    sweep.run("parallelogram-vs-brute", || {
        let mut cases = 0;
        for m in 0..=pmax {
            for n in 0..=pmax {
                cases += 1;
                let closed = zz_parallelogram(m, n);
                let brute = zz_brute(&Benzenoid::parallelogram(ParallelogramParams::new(m, n)));
                if closed != brute {
                    return (
                        cases,
                        Some(format!(
                            "M({m}, {n}): closed = {}, brute = {}",
                            poly_descending(&closed),
                            poly_descending(&brute)
                        )),
                    );
                }
            }
        }
        (cases, None)
    });

    sweep.run("axis-swap-symmetry", || {
        let mut cases = 0;
        for p in &ribbons {
            cases += 1;
            if zz_ribbon(p) != zz_ribbon(&p.swapped()) {
                return (cases, Some(format!("{p} vs {}", p.swapped())));
            }
        }
        (cases, None)
    });

    sweep.run("clar-number-vs-degree", || {
        let mut cases = 0;
        for p in &ribbons {
            cases += 1;
            let formula = clar_number_formula(p) as usize;
            let degree = zz_ribbon(p).degree().expect("ribbons are coverable");
            if formula != degree {
                return (cases, Some(format!("{p}: formula {formula}, degree {degree}")));
            }
        }
        (cases, None)
    });

    sweep.run("count-formulas-vs-evaluations", || {
        let mut cases = 0;
        for p in &ribbons {
            cases += 1;
            let zz = zz_ribbon(p);
            if kekule_ribbon(p) != zz.coeff(0) || clar_cover_count_ribbon(p) != zz.eval_u64(1) {
                return (cases, Some(p.to_string()));
            }
        }
        (cases, None)
    });

    sweep.run("special-case-vs-closed", || {
        let mut cases = 0;
        for p in &ribbons {
            if p.n1() > 2 {
                continue;
            }
            cases += 1;
            let special = zz_ribbon_special(p).expect("n1 in {1, 2}");
            let closed = zz_ribbon(p);
            if special != closed {
                return (
                    cases,
                    Some(format!(
                        "{p}: special = {}, closed = {}",
                        poly_descending(&special),
                        poly_descending(&closed)
                    )),
                );
            }
        }
        (cases, None)
    });

    sweep.run("central-partition", || {
        let mut cases = 0;
        for p in &small_ribbons {
            cases += 1;
            let b = Benzenoid::ribbon(p);
            let mut per_class: BTreeMap<(crate::interfaces::CentralKind, u32), Polynomial> =
                BTreeMap::new();
            let mut bad = None;
            enumerate_covers(&b, |c| {
                if bad.is_some() {
                    return;
                }
                match classify_cover(p, c) {
                    Ok(class) => {
                        *per_class
                            .entry((class.kind, class.k))
                            .or_insert_with(Polynomial::zero) +=
                            &Polynomial::x().pow(c.order() as u32);
                    }
                    Err(e) => bad = Some(e.to_string()),
                }
            });
            if let Some(e) = bad {
                return (cases, Some(format!("{p}: {e}")));
            }
            for class in central_decomposition(p) {
                let got = per_class.remove(&(class.kind, class.k));
                if got.as_ref() != Some(&class.zz()) {
                    return (
                        cases,
                        Some(format!("{p}: class {:?} {} off", class.kind, class.k)),
                    );
                }
            }
            if !per_class.is_empty() {
                return (cases, Some(format!("{p}: spurious classes")));
            }
        }
        (cases, None)
    });

    sweep.run("first-rule", || {
        let mut cases = 0;
        let mut structures: Vec<Benzenoid> =
            small_ribbons.iter().map(Benzenoid::ribbon).collect();
        for m in 1..=pmax.min(3) {
            for n in 1..=pmax.min(3) {
                structures.push(Benzenoid::parallelogram(ParallelogramParams::new(m, n)));
            }
        }
        for b in &structures {
            cases += 1;
            let report = analyze(b).expect("family geometry");
            let expected: Vec<u32> = report.orders.iter().map(|&o| 2 * o).collect();
            let mut bad = false;
            enumerate_covers(b, |c| {
                if !bad {
                    bad = cover_edge_orders(b, c).expect("valid cover").interface_sums
                        != expected;
                }
            });
            if bad {
                return (cases, Some(format!("structure #{cases}")));
            }
        }
        (cases, None)
    });

    let all_pass = sweep.rows.iter().all(|r| r.pass);
    let report = VerifyReport {
        checks: sweep.rows,
        all_pass,
    };

    if args.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        let width = report
            .checks
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(0);
        for row in &report.checks {
            println!(
                "{:width$}  {}  ({} cases)",
                row.name,
                if row.pass { "pass" } else { "FAIL" },
                row.cases
            );
        }
        println!(
            "verify: {}",
            if report.all_pass { "all checks pass" } else { "FAILURES" }
        );
    }

    if !all_pass {
        let first = report
            .checks
            .iter()
            .find(|r| !r.pass)
            .expect("a failing row exists");
        return Err(Failure::mismatch(format!(
            "{}: {}",
            first.name,
            first.counterexample.as_deref().unwrap_or("failed")
        )));
    }
    Ok(())
}

// ---- bench ----

#[derive(Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

#[derive(Serialize, Deserialize)]
pub struct BenchRow {
    pub family: String,
    pub params: Vec<String>,
    pub method: String,
    pub ms: u64,
    pub poly_degree: Option<usize>,
    pub cache: Option<CacheStats>,
}

fn cmd_bench(args: BenchArgs) -> Result<(), Failure> {
    let target = Target::resolve(&args.target)?;
    let budget = brute_budget()?;
    let mut rows = Vec::new();

    let mut push = |method: &str, poly: Polynomial, ms: u64, cache: Option<CacheStats>| {
        rows.push(BenchRow {
            family: target.family.to_string(),
            params: target.params.clone(),
            method: method.to_string(),
            ms,
            poly_degree: poly.degree(),
            cache,
        });
    };

    if matches!(args.method, Method::Closed | Method::All) {
        let t = Instant::now();
        match target.closed_zz() {
            Some(poly) => push("closed", poly, t.elapsed().as_millis() as u64, None),
            None if args.method == Method::Closed => {
                return Err(Failure::unsupported(format!(
                    "family {} has no closed form",
                    target.family
                )));
            }
            None => {}
        }
    }
    if matches!(args.method, Method::Engine | Method::All) {
        let b = target.build();
        let t = Instant::now();
        let mut engine = Engine::new();
        let poly = engine.zz_decompose(&b);
        push(
            "engine",
            poly,
            t.elapsed().as_millis() as u64,
            Some(engine.stats()),
        );
    }
    if matches!(args.method, Method::Brute | Method::All) {
        if target.hexagon_count() <= budget {
            let b = target.build();
            let t = Instant::now();
            let poly = zz_brute(&b);
            push("brute", poly, t.elapsed().as_millis() as u64, None);
        } else if args.method == Method::Brute {
            return Err(Failure::unsupported(format!(
                "{} hexagons exceed the enumeration budget of {budget}",
                target.hexagon_count()
            )));
        } else {
            eprintln!(
                "note: skipping brute ({} hexagons over budget {budget})",
                target.hexagon_count()
            );
        }
    }

    let report = BenchReport { rows };
    if args.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else if args.csv {
        println!("family,params,method,ms,poly_degree");
        for r in &report.rows {
            println!(
                "{},{},{},{},{}",
                r.family,
                r.params.join(" "),
                r.method,
                r.ms,
                r.poly_degree.map(|d| d.to_string()).unwrap_or_default()
            );
        }
    } else {
        for r in &report.rows {
            let cache = r
                .cache
                .map(|c| format!("  cache {}h/{}m depth {}", c.hits, c.misses, c.max_depth))
                .unwrap_or_default();
            println!(
                "{} {}  {}  {} ms  degree {}{}",
                r.family,
                r.params.join(" "),
                r.method,
                r.ms,
                r.poly_degree
                    .map(|d| d.to_string())
                    .unwrap_or_else(|| "-".into()),
                cache
            );
        }
    }
    Ok(())
}
