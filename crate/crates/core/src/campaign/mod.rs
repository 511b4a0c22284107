//! Verification campaigns: sweeps over generated instances that check the
//! characterizations, the step rule, the structural facts and the planners.
//! Reports are deterministic for a given name, seed and budget.

mod fuzz;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, ChainOp};
use crate::graph::Graph;
use crate::model::{enumerate_models, EnumOptions, DEFAULT_BUDGET};
use crate::recon::{build_recon_graph, is_host, Diameter};
use crate::vertex_set::VertexSet;

pub use fuzz::FUZZ_RUNS;

pub const CAMPAIGNS: &[&str] = &[
    "k2-characterization",
    "k3-3connected",
    "wheels",
    "k4-bases",
    "frozen-fixtures",
    "step-rule-oracle",
    "structural-lemmas",
    "planner-fuzz",
    "split-addedge-closure",
    "chain-search",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl InstanceResult {
    fn new(instance: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        InstanceResult { instance: instance.into(), verdict, detail: detail.into() }
    }

    fn skipped(instance: impl Into<String>, detail: impl Into<String>) -> Self {
        InstanceResult { instance: instance.into(), verdict: Verdict::Skipped, detail: detail.into() }
    }

    /// A failed check or a budget overrun, whichever `err` is.
    fn from_error(instance: impl Into<String>, err: Error) -> Self {
        match err {
            Error::StateSpaceExceeded { .. } => Self::skipped(instance, err.to_string()),
            _ => Self::new(instance, false, err.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CampaignParams {
    pub seed: u64,
    pub budget: u64,
    /// Largest host size for sweeps over small graphs; each campaign has
    /// its own default.
    pub n_max: Option<usize>,
    /// Successful runs required per planner in `planner-fuzz`.
    pub runs: Option<usize>,
}

impl Default for CampaignParams {
    fn default() -> Self {
        CampaignParams { seed: 0, budget: DEFAULT_BUDGET, n_max: None, runs: None }
    }
}

impl CampaignParams {
    fn opts(&self) -> EnumOptions {
        EnumOptions { budget: self.budget, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub seed: u64,
    pub budget: u64,
    pub counts: Counts,
    pub instances: Vec<InstanceResult>,
}

impl CampaignReport {
    fn new(campaign: &str, params: &CampaignParams, instances: Vec<InstanceResult>) -> Self {
        let mut counts = Counts::default();
        for r in &instances {
            match r.verdict {
                Verdict::Pass => counts.pass += 1,
                Verdict::Fail => counts.fail += 1,
                Verdict::Skipped => counts.skipped += 1,
            }
        }
        CampaignReport { campaign: campaign.into(), seed: params.seed, budget: params.budget, counts, instances }
    }

    pub fn passed(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn to_text(&self) -> String {
        let c = self.counts;
        let mut s = format!("campaign {} seed={} budget={}\n", self.campaign, self.seed, self.budget);
        let _ = writeln!(s, "pass {} fail {} skipped {}", c.pass, c.fail, c.skipped);
        for r in &self.instances {
            let tag = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
            };
            let _ = write!(s, "{tag} {}", r.instance);
            if !r.detail.is_empty() {
                let _ = write!(s, ": {}", r.detail);
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs the campaign called `name`.
pub fn run_campaign(name: &str, params: &CampaignParams) -> Result<CampaignReport> {
    let instances = match name {
        "k2-characterization" => k2_characterization(params)?,
        "k3-3connected" => k3_three_connected(params)?,
        "wheels" => wheels(params)?,
        "k4-bases" => k4_bases(params)?,
        "frozen-fixtures" => frozen_fixtures(params)?,
        "step-rule-oracle" => step_rule_oracle(params)?,
        "structural-lemmas" => structural_lemmas(params)?,
        "planner-fuzz" => fuzz::planner_fuzz(params)?,
        "split-addedge-closure" => split_addedge_closure(params)?,
        "chain-search" => chain_search()?,
        _ => {
            return Err(Error::BadParameter(format!("unknown campaign {name:?}; expected one of {}", CAMPAIGNS.join(", "))))
        }
    };
    Ok(CampaignReport::new(name, params, instances))
}

fn describe(g: &Graph) -> String {
    format!("n={} g6={}", g.n(), g.to_graph6())
}

fn clique(n: usize) -> Graph {
    families::gen_clique(n).expect("cliques exist for every n >= 1")
}

fn small_graphs(lo: usize, hi: usize, require: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(families::enumerate_small_graphs(n, require)?);
    }
    Ok(out)
}

fn k2_characterization(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let k2 = clique(2);
    let graphs = small_graphs(3, p.n_max.unwrap_or(6), 1)?;
    Ok(graphs
        .par_iter()
        .map(|g| {
            let expect = g.is_k_connected(2);
            match is_host(g, &k2, p.opts()) {
                Ok(got) => InstanceResult::new(describe(g), got == expect, format!("host={got} 2-connected={expect}")),
                Err(e) => InstanceResult::from_error(describe(g), e),
            }
        })
        .collect())
}

fn k3_three_connected(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let k3 = clique(3);
    let graphs = small_graphs(4, p.n_max.unwrap_or(7), 3)?;
    Ok(graphs
        .par_iter()
        .map(|g| match is_host(g, &k3, p.opts()) {
            Ok(got) => InstanceResult::new(describe(g), got, format!("host={got}")),
            Err(e) => InstanceResult::from_error(describe(g), e),
        })
        .collect())
}

fn wheels(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let k3 = clique(3);
    let hi = p.n_max.unwrap_or(7);
    let wheels: Vec<Graph> = (3..=hi).map(families::gen_wheel).collect::<Result<_>>()?;
    Ok(wheels
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let name = format!("wheel:{}", i + 3);
            let run = || -> Result<(bool, String)> {
                let rg = build_recon_graph(g, &k3, p.opts())?;
                if !rg.is_connected() {
                    return Ok((false, format!("{} components", rg.component_count())));
                }
                // Every model is planned to the canonical model with the hub
                // labeled 0, the special vertex 1 and the rest 2.
                let mut labels = vec![2; g.n()];
                labels[0] = 0;
                labels[1] = 1;
                let canon = crate::model::HModel::valid(g, &k3, labels)?;
                let mut longest = 0;
                for i in 0..rg.len() {
                    let from = rg.model(i);
                    let seq = crate::planner::plan_genwheel(&from, &canon)?;
                    if seq.replay()? != canon {
                        return Ok((false, format!("plan from {from} ends elsewhere")));
                    }
                    longest = longest.max(seq.len());
                }
                Ok((true, format!("models={} diameter={} longest plan={longest}", rg.len(), rg.diameter())))
            };
            match run() {
                Ok((ok, detail)) => InstanceResult::new(name, ok, detail),
                Err(e) => InstanceResult::from_error(name, e),
            }
        })
        .collect())
}

fn membership(name: String, g: &Graph, h: &Graph, p: &CampaignParams) -> InstanceResult {
    match is_host(g, h, p.opts()) {
        Ok(got) => InstanceResult::new(name, got, format!("host={got}")),
        Err(e) => InstanceResult::from_error(name, e),
    }
}

fn k4_bases(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let cases = [("c2:6", "k4"), ("k5", "k4"), ("k6", "k4"), ("k5", "k3"), ("k4", "k3")];
    Ok(cases
        .par_iter()
        .map(|&(g, h)| {
            let name = format!("{g} / {h}");
            match (crate::format::named_graph(g), crate::format::named_graph(h)) {
                (Ok(g), Ok(h)) => membership(name, &g, &h, p),
                (Err(e), _) | (_, Err(e)) => InstanceResult::from_error(name, e),
            }
        })
        .collect())
}

fn frozen_fixtures(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let k2 = clique(2);
    let mut out = Vec::new();

    let p3 = families::gen_path(3)?;
    let s = build_recon_graph(&p3, &k2, p.opts())?.summary();
    out.push(InstanceResult::new("path:3 / k2", s.nodes == 4 && s.components == 2, format!("{s:?}")));

    let star = families::gen_star(3)?;
    let s = build_recon_graph(&star, &k2, p.opts())?.summary();
    out.push(InstanceResult::new("star:3 / k2", s.nodes == 6 && s.frozen == 6, format!("{s:?}")));

    let k3 = clique(3);
    let rg = build_recon_graph(&k3, &k2, p.opts())?;
    let s = rg.summary();
    let cycle = s.nodes == 6 && s.edges == 6 && s.components == 1 && (0..rg.len()).all(|i| rg.neighbors(i).len() == 2);
    out.push(InstanceResult::new("k3 / k2", cycle && s.diameter == Diameter::Finite(3), format!("{s:?}")));
    Ok(out)
}

/// Compares the single-step rule with the definition: a relabeling is legal
/// exactly when the result is again a model.
fn step_rule_oracle(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let targets = [("k2", clique(2)), ("path:3", families::gen_path(3)?), ("k3", clique(3))];
    let graphs = small_graphs(1, p.n_max.unwrap_or(6), 1)?;
    let jobs: Vec<(&Graph, &str, &Graph)> =
        graphs.iter().flat_map(|g| targets.iter().map(move |(name, h)| (g, *name, h))).collect();
    Ok(jobs
        .par_iter()
        .map(|&(g, hname, h)| {
            let name = format!("{} / {hname}", describe(g));
            let models = match enumerate_models(g, h, p.opts()) {
                Ok(m) => m,
                Err(e) => return InstanceResult::from_error(name, e),
            };
            let mut triples = 0u64;
            let mut bad = Vec::new();
            for m in &models {
                for v in 0..g.n() {
                    for b in (0..h.n()).filter(|&b| b != m.label(v)) {
                        triples += 1;
                        let legal = m.legal_step(v, b).expect("in range").legal;
                        let oracle = m.with_label(v, b).is_valid();
                        let shortcut = m.legal_step_universal(v, b).expect("in range").legal;
                        if legal != oracle || (shortcut && !legal) {
                            bad.push(format!("{m} v={v} b={b} rule={legal} oracle={oracle} universal={shortcut}"));
                        }
                    }
                }
            }
            let detail = match bad.first() {
                None => format!("models={} triples={triples}", models.len()),
                Some(first) => format!("{} disagreements, first: {first}", bad.len()),
            };
            InstanceResult::new(name, bad.is_empty(), detail)
        })
        .collect())
}

fn structural_lemmas(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let (k3, k4) = (clique(3), clique(4));
    let mut jobs: Vec<(String, Graph, &Graph, usize)> = vec![
        ("k4 / k3".into(), clique(4), &k3, 3),
        ("c2:6 / k4".into(), families::gen_squared_cycle(6)?, &k4, 4),
        ("k5 / k4".into(), clique(5), &k4, 4),
    ];
    for g in small_graphs(3, p.n_max.unwrap_or(6), 2)? {
        jobs.push((format!("{} / k3", describe(&g)), g, &k3, 2));
    }
    Ok(jobs
        .par_iter()
        .map(|(name, g, h, k)| {
            let run = || -> Result<(bool, String)> {
                let models = enumerate_models(g, h, p.opts())?;
                let mut applied = std::collections::BTreeSet::new();
                for m in &models {
                    let report = m.check_structural_lemmas(*k)?;
                    applied.extend(report.applied.iter().copied());
                    if let Some(v) = report.violations.first() {
                        return Ok((false, format!("{m}: {:?} {}", v.check, v.detail)));
                    }
                }
                Ok((true, format!("models={} checks={applied:?}", models.len())))
            };
            match run() {
                Ok((ok, detail)) => InstanceResult::new(name.clone(), ok, detail),
                Err(e) => InstanceResult::from_error(name.clone(), e),
            }
        })
        .collect())
}

/// Every split of `v` with both new vertices of degree at least three, one
/// per unordered partition of its neighbourhood.
fn all_splits(g: &Graph, v: usize) -> Vec<Graph> {
    let nbrs = g.neighbors(v).to_vec();
    let d = nbrs.len();
    if d < 4 {
        return Vec::new();
    }
    // The first neighbour always stays with v, so each partition is seen once.
    (0u64..1 << (d - 1))
        .filter_map(|mask| {
            let part2: VertexSet = (1..d).filter(|&i| mask >> (i - 1) & 1 == 1).map(|i| nbrs[i]).collect();
            let part1 = g.neighbors(v) - part2;
            g.split_vertex(v, part1, part2).ok()
        })
        .collect()
}

fn split_addedge_closure(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let (k3, k4) = (clique(3), clique(4));
    let hi = p.n_max.unwrap_or(7).max(5);
    let hosts: Vec<(String, Graph)> = (0..50u64)
        .map(|i| {
            let n = 5 + (i as usize) % (hi - 4);
            let seed = p.seed.wrapping_add(i);
            families::gen_random_3connected(n, seed).map(|g| (format!("rand3:n={n},seed={seed}"), g))
        })
        .collect::<Result<_>>()?;

    let mut out: Vec<InstanceResult> = hosts
        .par_iter()
        .map(|(name, g)| {
            let run = || -> Result<(bool, String)> {
                if !is_host(g, &k3, p.opts())? {
                    return Ok((false, "base graph is not in host(K3)".into()));
                }
                let mut derived: Vec<(String, Graph)> = Vec::new();
                for (u, v) in (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))) {
                    if !g.has_edge(u, v) {
                        derived.push((format!("+{u}{v}"), g.add_edge(u, v)?));
                    }
                }
                for v in 0..g.n() {
                    for (i, s) in all_splits(g, v).into_iter().enumerate() {
                        derived.push((format!("split {v}#{i}"), s));
                    }
                }
                for (what, d) in &derived {
                    if !is_host(d, &k3, p.opts())? {
                        return Ok((false, format!("{what} leaves host(K3): {}", d.to_graph6())));
                    }
                }
                Ok((true, format!("{} edge additions and splits checked", derived.len())))
            };
            match run() {
                Ok((ok, detail)) => InstanceResult::new(name.clone(), ok, detail),
                Err(e) => InstanceResult::from_error(name.clone(), e),
            }
        })
        .collect();

    for base in ["c2:6", "k5"] {
        let g = crate::format::named_graph(base)?;
        let missing: Vec<(usize, usize)> =
            (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect();
        if missing.is_empty() {
            out.push(membership(format!("{base} / k4 (no edge to add)"), &g, &k4, p));
        }
        for (u, v) in missing {
            out.push(membership(format!("{base}+{u}{v} / k4"), &g.add_edge(u, v)?, &k4, p));
        }
    }
    Ok(out)
}

fn chain_search() -> Result<Vec<InstanceResult>> {
    let k5 = clique(5);
    let c6 = families::gen_squared_cycle(6)?;
    let mut out = Vec::new();
    let k6 = clique(6);
    match families::find_chain(&k6, ChainOp::Contraction)? {
        Some(chain) => {
            let end = chain.last().expect("chains are nonempty");
            out.push(InstanceResult::new(
                "k6 contraction",
                end.is_isomorphic(&k5),
                format!("length {} ending at n={}", chain.len(), end.n()),
            ));
        }
        None => out.push(InstanceResult::new("k6 contraction", false, "no chain")),
    }
    // The removal reading and the other hosts are informational only.
    let extra = [("k6", ChainOp::Removal), ("k7", ChainOp::Contraction), ("c2:7", ChainOp::Contraction), ("c2:7", ChainOp::Removal)];
    for (name, op) in extra {
        let g = crate::format::named_graph(name)?;
        let label = format!("{name} {op}");
        out.push(match families::find_chain(&g, op)? {
            Some(chain) => {
                let end = chain.last().expect("chains are nonempty");
                let which = if end.is_isomorphic(&k5) { "K5" } else if end.is_isomorphic(&c6) { "C6^2" } else { "?" };
                InstanceResult::new(label, true, format!("length {} ending at {which}", chain.len()))
            }
            None => InstanceResult::skipped(label, "no chain (informational)"),
        });
    }
    Ok(out)
}
