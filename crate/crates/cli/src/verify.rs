//! End-to-end cross-check of every computed invariant of `G_{r,d}`.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use toric_betti::graph::{build_grd, build_k2d};
use toric_betti::grobner::{buchberger, initial_ideal, is_reduced, same_binomials_up_to_sign, BuchbergerConfig};
use toric_betti::invariants::{
    betti_formula_grd, binomial, family_initial_generators, hilbert_enumeration_oracle, hilbert_formula_grd,
    hilbert_from_betti, hvector_extract, krull_dim, minimal_generators_oracle, strand_transfer, EnumerationBudget,
    HomologicalSummary,
};
use toric_betti::quotients::{
    betti_from_linear_quotients, betti_taylor_oracle, quotient_profile, sort_ascending, DEFAULT_TAYLOR_CAP,
};
use toric_betti::walks::{canonical_form, enumerate_primitive_walks, grd_primitive_walks, walk_to_binomial};
use toric_betti::{BettiTable, Binomial, Monomial, MonomialIdeal, MonomialOrder, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not run because the input exceeds a configured limit.
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub r: usize,
    pub d: usize,
    pub checks: Vec<Check>,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    #[serde(flatten)]
    check: &'a Check,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    graph: String,
    status: Status,
    cohen_macaulay: &'static str,
    checks: Vec<CheckJson<'a>>,
}

const CM_NOTE: &str = "assumed from the literature; Krull dimension and Auslander-Buchsbaum arithmetic are checked";

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn overall(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Deterministic unless `timings` is set.
    pub fn to_json(&self, timings: bool) -> String {
        let body = ReportJson {
            graph: format!("G_{{{},{}}}", self.r, self.d),
            status: self.overall(),
            cohen_macaulay: CM_NOTE,
            checks: self
                .checks
                .iter()
                .map(|check| CheckJson { check, elapsed_ms: timings.then_some(check.elapsed_ms) })
                .collect(),
        };
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify G_{{{},{}}}\n", self.r, self.d);
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            out += &format!("{tag}  {:width$}  {} ms\n", c.name, c.elapsed_ms);
            out += &format!("      expected: {}\n", c.expected);
            out += &format!("      actual:   {}\n", c.actual);
        }
        out += &format!("cohen-macaulay: {CM_NOTE}\n");
        out += &format!("overall: {}\n", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

struct Recorder {
    checks: Vec<Check>,
    started: Instant,
}

impl Recorder {
    fn push(&mut self, name: &'static str, expected: String, actual: String, ok: bool) {
        self.push_status(name, expected, actual, if ok { Status::Pass } else { Status::Fail });
    }

    fn push_status(&mut self, name: &'static str, expected: String, actual: String, status: Status) {
        let elapsed_ms = self.started.elapsed().as_millis();
        self.checks.push(Check { name, status, expected, actual, elapsed_ms });
        self.started = Instant::now();
    }
}

fn join(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(", ")
}

fn table_text(t: &BettiTable) -> String {
    join(t.entries().map(|(i, j, b)| format!("b{i},{j}={b}")))
}

fn expected_profile(d: usize) -> Vec<usize> {
    (0..d).flat_map(|k| std::iter::repeat_n(k, k + 1)).collect()
}

/// Runs every check in a fixed order. Errors only for parameters outside the family.
pub fn verify_grd(r: usize, d: usize) -> Result<VerifyReport> {
    let g = build_grd(r, d)?;
    let ord = MonomialOrder::for_graph(&g);
    let names = g.edge_names();
    let fmt_mons = |ms: &[Monomial]| join(ms.iter().map(|m| m.format(&names)));
    let mut rec = Recorder { checks: Vec::new(), started: Instant::now() };

    // primitive walks
    let found = enumerate_primitive_walks(&g, 2 * r)?;
    let closed = grd_primitive_walks(r, d)?;
    let found_set: BTreeSet<Vec<String>> = found.iter().map(|w| w.edge_names(&g)).collect();
    let closed_set: BTreeSet<Vec<String>> = closed.iter().map(|w| canonical_form(&g, w).edge_names(&g)).collect();
    rec.push(
        "primitive walks",
        format!("{} walks: C(d,2) squares and d walks through the path", d * (d + 1) / 2),
        format!("{} walks found, {}", found.len(), if found_set == closed_set { "same set" } else { "different set" }),
        found_set == closed_set,
    );

    // Groebner basis
    let gens: Vec<Binomial> = found.iter().map(walk_to_binomial).collect();
    let basis = buchberger(&gens, &ord, BuchbergerConfig::default())?;
    let closed_bins: Vec<Binomial> = closed.iter().map(walk_to_binomial).collect();
    let gb_ok = same_binomials_up_to_sign(&basis, &closed_bins) && is_reduced(&basis, &ord);
    rec.push(
        "groebner basis",
        format!("{} reduced binomials: {}", closed_bins.len(), join(closed_bins.iter().map(|b| b.format(&names)))),
        format!("{} binomials: {}", basis.len(), join(basis.iter().map(|b| b.format(&names)))),
        gb_ok,
    );

    // initial ideal
    let init = initial_ideal(&basis, &ord);
    let sorted = sort_ascending(init.generators().to_vec(), &ord)?;
    let mut want = family_initial_generators(r, d)?;
    ord.sort(&mut want);
    rec.push("initial ideal", fmt_mons(&want), fmt_mons(sorted.generators()), sorted.generators() == want.as_slice());

    // linear quotients
    let profile = quotient_profile(&sorted);
    let want_n = expected_profile(d);
    rec.push(
        "quotient profile",
        format!("linear, n = {want_n:?}"),
        format!("{}, n = {:?}", if profile.linear { "linear" } else { "not linear" }, profile.n),
        profile.linear && profile.n == want_n,
    );

    // Betti tables
    let formula = betti_formula_grd(r, d)?;
    let lq = betti_from_linear_quotients(&sorted, &profile).ok();
    rec.push(
        "betti: formula vs linear quotients",
        table_text(&formula),
        lq.as_ref().map_or_else(|| "formula not applicable".into(), table_text),
        lq.as_ref() == Some(&formula),
    );
    if init.len() <= DEFAULT_TAYLOR_CAP {
        let taylor = betti_taylor_oracle(&init)?;
        rec.push("betti: formula vs taylor oracle", table_text(&formula), table_text(&taylor), taylor == formula);
    } else {
        rec.push_status(
            "betti: formula vs taylor oracle",
            table_text(&formula),
            format!("skipped: {} generators exceed the cap of {DEFAULT_TAYLOR_CAP}", init.len()),
            Status::Skip,
        );
    }

    // generator degrees of the toric ideal itself
    let oracle = minimal_generators_oracle(&g, r, EnumerationBudget::default())?;
    let in_counts = init.degree_counts();
    let want_counts: BTreeMap<usize, u64> = (2..=r)
        .map(|j| (j, if j == 2 { binomial(d as u64, 2) } else { 0 } + if j == r { d as u64 } else { 0 }))
        .collect();
    let in_counts_by_j: BTreeMap<usize, u64> =
        (2..=r).map(|j| (j, in_counts.get(&(j as u32)).copied().unwrap_or(0) as u64)).collect();
    rec.push(
        "minimal generators of the toric ideal",
        format!("{want_counts:?}, equal to the initial ideal"),
        format!("{oracle:?}, initial ideal {in_counts_by_j:?}"),
        oracle == want_counts && oracle == in_counts_by_j,
    );

    // Hilbert series
    let hs = hilbert_formula_grd(r, d)?;
    let from_formula = hilbert_from_betti(&formula, g.num_edges())?;
    let from_lq = lq.as_ref().map(|t| hilbert_from_betti(t, g.num_edges())).transpose()?;
    let top = (r + 1).max(4);
    let dims = hilbert_enumeration_oracle(&g, top, EnumerationBudget::default())?;
    let series = hs.coefficients(top);
    let dims_i: Vec<i64> = dims.iter().map(|&x| x as i64).collect();
    let hs_ok = from_formula == hs && from_lq.as_ref() == Some(&hs) && dims_i == series;
    rec.push(
        "hilbert series",
        format!("{}; dims {series:?}", hs.format()),
        format!(
            "from betti {}; enumerated dims {dims_i:?}",
            from_lq.as_ref().map_or_else(|| "unavailable".into(), |h| h.format())
        ),
        hs_ok,
    );

    // strand transfer from in(I) to I
    let k2d = build_k2d(d)?;
    let k2d_ord = MonomialOrder::for_graph(&k2d);
    let k2d_gens: Vec<Binomial> = enumerate_primitive_walks(&k2d, 4)?.iter().map(walk_to_binomial).collect();
    let k2d_init: MonomialIdeal = initial_ideal(&buchberger(&k2d_gens, &k2d_ord, BuchbergerConfig::default())?, &k2d_ord);
    let k2d_table = betti_taylor_oracle(&k2d_init)?;
    let matched: BTreeSet<usize> =
        if k2d_table.strand(2) == formula.strand(2) { BTreeSet::from([2]) } else { BTreeSet::new() };
    let (status, actual) = match strand_transfer(&formula, &matched, hs_ok) {
        Ok(cert) => (Status::Pass, cert.audit.join("; ")),
        Err(e) => (Status::Fail, e.to_string()),
    };
    rec.push_status(
        "strand transfer to the toric ideal",
        format!("strand 2 matched with K_{{2,{d}}}, strand {r} forced"),
        actual,
        status,
    );

    // homological invariants
    let summary = HomologicalSummary::new(&formula, krull_dim(&g))?;
    let n = g.num_edges();
    let hom_ok = summary.reg == r
        && summary.pdim == d - 1
        && summary.krull_dim == d + 2 * r - 2
        && summary.is_cohen_macaulay_consistent(n);
    rec.push(
        "reg, pdim, dim",
        format!("reg {r}, pdim {}, dim {}, {n} - (pdim + 1) = dim", d - 1, d + 2 * r - 2),
        format!(
            "reg {}, pdim {}, dim {}, {n} - {} = {}",
            summary.reg,
            summary.pdim,
            summary.krull_dim,
            summary.pdim_quotient(),
            n as i64 - summary.pdim_quotient() as i64
        ),
        hom_ok,
    );

    // h-vector
    let hv = hvector_extract(&hs);
    let mut want_h = vec![d as i64; r];
    want_h[0] = 1;
    rec.push(
        "h-vector",
        format!("{want_h:?}, unimodal"),
        format!("{:?}, {}", hv.h, if hv.unimodal { "unimodal" } else { "not unimodal" }),
        hv.h == want_h && hv.unimodal,
    );

    Ok(VerifyReport { r, d, checks: rec.checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_shape() {
        assert_eq!(expected_profile(3), [0, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn small_case_passes() {
        let report = verify_grd(3, 2).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.checks.len(), 11);
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    }
}
