//! Command-line front end: every library operation as a subcommand, plus `verify`.
//!
//! Exit codes: 0 success, 1 invalid input or usage, 2 a verification check
//! failed, 3 a search or enumeration budget ran out.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use toric_betti::graph::{build_grd, build_k2d, parse_graph};
use toric_betti::grobner::{buchberger, initial_ideal, BuchbergerConfig};
use toric_betti::invariants::{
    betti_formula_grd, betti_formula_k2d, hilbert_enumeration_oracle, hilbert_formula_grd, hilbert_from_betti,
    hvector_extract, lower_bounds_from_induced, EnumerationBudget, HilbertSeries,
};
use toric_betti::quotients::{
    betti_from_linear_quotients, betti_taylor_oracle_with_cap, quotient_profile, sort_ascending, DEFAULT_TAYLOR_CAP,
};
use toric_betti::walks::{default_max_len, search_primitive_walks, walk_to_binomial, WalkEnumeration, WalkSearchConfig};
use toric_betti::{BettiTable, Binomial, Error, Family, MonomialOrder, SimpleGraph};

mod verify;

pub use verify::{verify_grd, Check, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "toric-betti", version, about = "Toric ideals of graphs: walks, Groebner bases, Betti numbers, Hilbert series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph as JSON.
    Gen(GraphArgs),
    /// List primitive closed even walks and their binomials.
    Walks(WalkArgs),
    /// Reduced Groebner basis of the toric ideal.
    Gb(GbArgs),
    /// Minimal generators of the initial ideal, ascending.
    Initial(GbArgs),
    /// Graded Betti numbers.
    Betti(BettiArgs),
    /// Hilbert series of the edge ring.
    Hilbert(HilbertArgs),
    /// Lower bounds on reg and pdim from disjoint induced copies of G_{r,d}.
    Bounds(BoundsArgs),
    /// Run every cross-check for G_{r,d}.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Graph JSON file.
    #[arg(long, value_name = "FILE")]
    graph: Option<std::path::PathBuf>,
    /// The family graph G_{r,d}.
    #[arg(long, num_args = 2, value_names = ["R", "D"])]
    grd: Option<Vec<usize>>,
    /// The complete bipartite graph K_{2,d}.
    #[arg(long, value_name = "D")]
    k2d: Option<usize>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Compact single-line JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct WalkArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Longest walk searched; defaults to the length known to suffice.
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Maximum number of search nodes.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct GbArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Comma-separated edge names from highest to lowest priority.
    #[arg(long, value_name = "SPEC")]
    order: Option<String>,
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Maximum number of critical pairs.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BettiMethod {
    Formula,
    Quotients,
    Oracle,
}

#[derive(Args, Debug)]
struct BettiArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "quotients")]
    method: BettiMethod,
    #[arg(long, value_name = "SPEC")]
    order: Option<String>,
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Generator cap for the Taylor oracle.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HilbertMethod {
    Formula,
    Betti,
    Enumerate,
}

#[derive(Args, Debug)]
struct HilbertArgs {
    #[command(flatten)]
    source: GraphSource,
    #[arg(long, value_enum, default_value = "formula")]
    method: HilbertMethod,
    /// Highest degree listed.
    #[arg(long, value_name = "N", default_value_t = 4)]
    max_deg: usize,
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Maximum number of edge monomials enumerated.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Parameters of the induced components, e.g. "(3,2),(4,3)".
    #[arg(long, value_name = "LIST")]
    components: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, num_args = 2, value_names = ["R", "D"], required = true)]
    grd: Vec<usize>,
    #[arg(long)]
    json: bool,
    /// Include elapsed milliseconds per check in JSON output.
    #[arg(long)]
    timings: bool,
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Budget { .. } => EXIT_BUDGET,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> toric_betti::Result<i32> {
    match command {
        Command::Gen(a) => {
            let g = load(&a.source)?;
            emit(out, if a.json { g.to_json() } else { g.to_json_pretty() });
        }
        Command::Walks(a) => walks(a, out, err)?,
        Command::Gb(a) => gb(a, out, err, false)?,
        Command::Initial(a) => gb(a, out, err, true)?,
        Command::Betti(a) => betti(a, out, err)?,
        Command::Hilbert(a) => hilbert(a, out, err)?,
        Command::Bounds(a) => bounds(a, out)?,
        Command::Verify(a) => {
            let report = verify_grd(a.grd[0], a.grd[1])?;
            if a.json {
                emit(out, report.to_json(a.timings));
            } else {
                emit(out, report.to_text());
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY });
        }
    }
    Ok(EXIT_OK)
}

fn emit(out: &mut dyn Write, text: String) {
    let _ = if text.ends_with('\n') { write!(out, "{text}") } else { writeln!(out, "{text}") };
}

fn load(source: &GraphSource) -> toric_betti::Result<SimpleGraph> {
    if let Some(path) = &source.graph {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            context: path.display().to_string(),
            message: e.to_string(),
        })?;
        parse_graph(&text)
    } else if let Some(rd) = &source.grd {
        build_grd(rd[0], rd[1])
    } else if let Some(d) = source.k2d {
        build_k2d(d)
    } else {
        unreachable!("clap requires one graph source")
    }
}

fn order_for(graph: &SimpleGraph, spec: &Option<String>) -> toric_betti::Result<MonomialOrder> {
    match spec {
        Some(s) => MonomialOrder::parse(s, graph),
        None => Ok(MonomialOrder::for_graph(graph)),
    }
}

fn search(graph: &SimpleGraph, max_len: Option<usize>, budget: Option<u64>) -> toric_betti::Result<WalkEnumeration> {
    let mut config = WalkSearchConfig::default();
    if let Some(b) = budget {
        config.node_budget = b;
    }
    search_primitive_walks(graph, max_len.unwrap_or_else(|| default_max_len(graph)), config)
}

fn warn_cap(err: &mut dyn Write, e: &WalkEnumeration) {
    if e.cap_binds {
        let _ = writeln!(err, "warning: walks longer than {} were not searched; the result may be incomplete", e.max_len);
    }
}

#[derive(Serialize)]
struct WalkJson {
    edges: Vec<String>,
    binomial: String,
}

#[derive(Serialize)]
struct WalksJson {
    max_len: usize,
    cap_binds: bool,
    walks: Vec<WalkJson>,
}

fn walks(a: WalkArgs, out: &mut dyn Write, err: &mut dyn Write) -> toric_betti::Result<()> {
    let g = load(&a.source)?;
    let e = search(&g, a.max_len, a.budget)?;
    warn_cap(err, &e);
    let names = g.edge_names();
    let walks: Vec<WalkJson> = e
        .walks
        .iter()
        .map(|w| WalkJson { edges: w.edge_names(&g), binomial: walk_to_binomial(w).format(&names) })
        .collect();
    if a.json {
        emit(out, serde_json::to_string(&WalksJson { max_len: e.max_len, cap_binds: e.cap_binds, walks }).expect("serializable"));
    } else {
        for w in walks {
            emit(out, format!("({})  {}", w.edges.join(", "), w.binomial));
        }
    }
    Ok(())
}

/// Reduced Groebner basis computed from the primitive-walk binomials.
fn groebner(
    g: &SimpleGraph,
    ord: &MonomialOrder,
    max_len: Option<usize>,
    budget: Option<u64>,
    err: &mut dyn Write,
) -> toric_betti::Result<Vec<Binomial>> {
    let e = search(g, max_len, None)?;
    warn_cap(err, &e);
    let gens: Vec<Binomial> = e.walks.iter().map(walk_to_binomial).collect();
    let mut config = BuchbergerConfig::default();
    if let Some(b) = budget {
        config.max_pairs = b;
    }
    buchberger(&gens, ord, config)
}

fn gb(a: GbArgs, out: &mut dyn Write, err: &mut dyn Write, initial: bool) -> toric_betti::Result<()> {
    let g = load(&a.source)?;
    let ord = order_for(&g, &a.order)?;
    let basis = groebner(&g, &ord, a.max_len, a.budget, err)?;
    let names = g.edge_names();
    let lines: Vec<String> = if initial {
        let mut gens = initial_ideal(&basis, &ord).generators().to_vec();
        ord.sort(&mut gens);
        gens.iter().map(|m| m.format(&names)).collect()
    } else {
        basis.iter().map(|b| b.format(&names)).collect()
    };
    if a.json {
        emit(out, serde_json::to_string(&lines).expect("serializable"));
    } else {
        emit(out, lines.join("\n"));
    }
    Ok(())
}

fn family_betti(g: &SimpleGraph) -> toric_betti::Result<BettiTable> {
    match g.family() {
        Some(Family::Grd { r, d }) => betti_formula_grd(r, d),
        Some(Family::K2d { d }) => betti_formula_k2d(d),
        None => Err(Error::Domain("the formula method needs --grd or --k2d".into())),
    }
}

/// Betti table of the initial ideal, by linear quotients or by the Taylor oracle.
fn computed_betti(
    g: &SimpleGraph,
    ord: &MonomialOrder,
    max_len: Option<usize>,
    oracle: bool,
    cap: usize,
    err: &mut dyn Write,
) -> toric_betti::Result<BettiTable> {
    let basis = groebner(g, ord, max_len, None, err)?;
    let ideal = initial_ideal(&basis, ord);
    if oracle {
        return betti_taylor_oracle_with_cap(&ideal, cap);
    }
    let sorted = sort_ascending(ideal.generators().to_vec(), ord)?;
    betti_from_linear_quotients(&sorted, &quotient_profile(&sorted))
}

fn betti(a: BettiArgs, out: &mut dyn Write, err: &mut dyn Write) -> toric_betti::Result<()> {
    let g = load(&a.source)?;
    let ord = order_for(&g, &a.order)?;
    let cap = a.budget.map_or(DEFAULT_TAYLOR_CAP, |b| b as usize);
    let table = match a.method {
        BettiMethod::Formula => family_betti(&g)?,
        BettiMethod::Quotients => computed_betti(&g, &ord, a.max_len, false, cap, err)?,
        BettiMethod::Oracle => computed_betti(&g, &ord, a.max_len, true, cap, err)?,
    };
    emit(out, if a.json { table.to_json() } else { table.to_grid() });
    Ok(())
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    numerator: &'a [i64],
    denom_power: usize,
    h_vector: Vec<i64>,
    unimodal: bool,
    dims: Vec<i64>,
}

fn hilbert(a: HilbertArgs, out: &mut dyn Write, err: &mut dyn Write) -> toric_betti::Result<()> {
    let g = load(&a.source)?;
    let series = match a.method {
        HilbertMethod::Enumerate => {
            let budget = a.budget.map_or_else(EnumerationBudget::default, EnumerationBudget);
            let dims = hilbert_enumeration_oracle(&g, a.max_deg, budget)?;
            if a.json {
                emit(out, serde_json::to_string(&serde_json::json!({ "dims": dims })).expect("serializable"));
            } else {
                emit(out, dims.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
            }
            return Ok(());
        }
        HilbertMethod::Formula => match g.family() {
            Some(Family::Grd { r, d }) => hilbert_formula_grd(r, d)?,
            _ => hilbert_from_betti(&family_betti(&g)?, g.num_edges())?,
        },
        HilbertMethod::Betti => {
            let ord = MonomialOrder::for_graph(&g);
            hilbert_from_betti(&computed_betti(&g, &ord, a.max_len, false, DEFAULT_TAYLOR_CAP, err)?, g.num_edges())?
        }
    };
    print_series(out, &series, a.max_deg, a.json);
    Ok(())
}

fn print_series(out: &mut dyn Write, series: &HilbertSeries, max_deg: usize, json: bool) {
    let hv = hvector_extract(series);
    let dims = series.coefficients(max_deg);
    if json {
        let body = SeriesJson {
            numerator: series.numerator(),
            denom_power: series.denom_power(),
            h_vector: hv.h,
            unimodal: hv.unimodal,
            dims,
        };
        emit(out, serde_json::to_string(&body).expect("serializable"));
    } else {
        let h: Vec<String> = hv.h.iter().map(i64::to_string).collect();
        let dims: Vec<String> = dims.iter().map(i64::to_string).collect();
        emit(out, format!("HS(t) = {}", series.format()));
        emit(out, format!("h-vector: ({}){}", h.join(", "), if hv.unimodal { ", unimodal" } else { ", not unimodal" }));
        emit(out, format!("dims 0..{max_deg}: {}", dims.join(" ")));
    }
}

fn parse_components(text: &str) -> toric_betti::Result<Vec<(usize, usize)>> {
    let bad = || Error::Parse { context: "--components".into(), message: format!("expected \"(r,d),(r,d),...\", got \"{text}\"") };
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Ok(Vec::new());
    }
    let inner = cleaned.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    inner
        .split("),(")
        .map(|pair| {
            let (r, d) = pair.split_once(',').ok_or_else(bad)?;
            Ok((r.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn bounds(a: BoundsArgs, out: &mut dyn Write) -> toric_betti::Result<()> {
    let (reg, pdim) = lower_bounds_from_induced(&parse_components(&a.components)?)?;
    if a.json {
        emit(out, serde_json::to_string(&serde_json::json!({ "reg_lower_bound": reg, "pdim_lower_bound": pdim })).expect("serializable"));
    } else {
        emit(out, format!("reg >= {reg}\npdim >= {pdim}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components() {
        assert_eq!(parse_components("(3,2),(4,3)").unwrap(), [(3, 2), (4, 3)]);
        assert_eq!(parse_components(" (3, 5) ").unwrap(), [(3, 5)]);
        assert!(parse_components("").unwrap().is_empty());
        assert!(parse_components("3,5").is_err());
        assert!(parse_components("(3,x)").is_err());
    }
}
