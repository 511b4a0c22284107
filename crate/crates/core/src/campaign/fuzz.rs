//! Randomized planner runs. Each planner is invoked on seeded random
//! instances until it has succeeded the required number of times; a
//! refused precondition is a skip, any other error or a wrong end model a
//! failure.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{clique, small_graphs, CampaignParams, InstanceResult};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::model::{enumerate_models, HModel};
use crate::planner;
use crate::sequence::ReconSequence;
use crate::vertex_set::VertexSet;

/// Default number of successful runs per planner.
pub const FUZZ_RUNS: usize = 1000;

/// Give up after this many attempts per required success.
const ATTEMPTS_PER_RUN: usize = 20;

const PLANNERS: [&str; 6] = ["k2", "clique", "slurp-component", "slurp-siphon", "relabel-leafblock", "lift-split"];

#[derive(Default)]
struct Tally {
    ok: usize,
    skipped: usize,
    attempts: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

/// Outcome of one attempt.
enum Run {
    Ok,
    /// No suitable instance was drawn, or a precondition was refused.
    Skip,
    Fail(String),
}

fn outcome(seq: Result<ReconSequence>, expect: impl FnOnce(&HModel) -> std::result::Result<(), String>) -> Run {
    match seq {
        Err(Error::PreconditionFailed { .. }) => Run::Skip,
        Err(e) => Run::Fail(e.to_string()),
        Ok(seq) => match seq.replay() {
            Err(e) => Run::Fail(format!("replay: {e}")),
            Ok(end) => match expect(&end) {
                Ok(()) => Run::Ok,
                Err(msg) => Run::Fail(msg),
            },
        },
    }
}

/// A host together with every model of it for one target.
struct Pool<'g> {
    models: Vec<HModel<'g>>,
}

fn pools<'g>(hosts: &'g [Graph], h: &'g Graph, p: &CampaignParams) -> Result<Vec<Pool<'g>>> {
    let opts = p.opts();
    let all: Vec<Result<Vec<HModel<'g>>>> = hosts.par_iter().map(|g| enumerate_models(g, h, opts)).collect();
    let mut out = Vec::new();
    for models in all {
        let models = models?;
        if !models.is_empty() {
            out.push(Pool { models });
        }
    }
    Ok(out)
}

fn pick<'a, 'g>(pools: &'a [Pool<'g>], rng: &mut ChaCha8Rng) -> &'a HModel<'g> {
    let pool = pools.choose(rng).expect("pools are nonempty");
    pool.models.choose(rng).expect("pools hold models")
}

/// A short random walk of legal steps from `start`.
fn random_walk<'g>(start: &HModel<'g>, len: usize, rng: &mut ChaCha8Rng) -> ReconSequence<'g> {
    let mut seq = ReconSequence::new(start.clone());
    let mut cur = start.clone();
    for _ in 0..len {
        let Some(&(v, b)) = cur.legal_moves().choose(rng) else { break };
        cur.set_label(v, b);
        seq.steps.push(crate::sequence::Step { vertex: v, label: b });
    }
    seq
}

pub(super) fn planner_fuzz(p: &CampaignParams) -> Result<Vec<InstanceResult>> {
    let runs = p.runs.unwrap_or(FUZZ_RUNS);
    let (k2, k3, k4) = (clique(2), clique(3), clique(4));
    let p3 = families::gen_path(3)?;

    // 2-connected hosts: every one on 4 to 6 vertices plus some larger
    // random 3-connected ones.
    let mut two: Vec<Graph> = small_graphs(4, 6, 2)?;
    for i in 0..24u64 {
        two.push(families::gen_random_3connected(7 + (i as usize) % 2, p.seed.wrapping_add(i))?);
    }
    let mut three: Vec<Graph> = small_graphs(4, 7, 3)?;
    for i in 0..24u64 {
        three.push(families::gen_random_3connected(8, p.seed.wrapping_add(1000 + i))?);
    }
    let two_k2 = pools(&two, &k2, p)?;
    let two_k3 = pools(&two, &k3, p)?;
    let two_k4 = pools(&two, &k4, p)?;
    let two_p3 = pools(&two, &p3, p)?;
    let three_k3 = pools(&three, &k3, p)?;

    let results: Vec<Tally> = PLANNERS
        .par_iter()
        .enumerate()
        .map(|(idx, &name)| {
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed.wrapping_mul(31).wrapping_add(idx as u64));
            let mut t = Tally::default();
            let mut long_k2 = 0usize;
            while t.ok < runs && t.attempts < runs * ATTEMPTS_PER_RUN {
                t.attempts += 1;
                let run = match name {
                    "k2" => {
                        let a = pick(&two_k2, &mut rng);
                        let pool = two_k2.iter().find(|q| q.models[0].host() == a.host()).expect("a came from a pool");
                        let b = pool.models.choose(&mut rng).expect("nonempty");
                        let seq = planner::plan_k2(a, b);
                        if let Ok(s) = &seq {
                            if s.len() > 3 * a.host().n() {
                                long_k2 += 1;
                            }
                        }
                        outcome(seq, |end| if end == b { Ok(()) } else { Err(format!("{a} -> {b} ended at {end}")) })
                    }
                    "clique" => fuzz_clique(&mut rng),
                    "slurp-component" => {
                        let pools = [&two_k3, &two_k4, &two_p3];
                        fuzz_slurp(pick(pools.choose(&mut rng).expect("nonempty"), &mut rng), &mut rng)
                    }
                    "slurp-siphon" => fuzz_siphon(pick(&three_k3, &mut rng), &mut rng),
                    "relabel-leafblock" => {
                        let pools = [&two_k3, &two_k4, &two_p3, &two_k2];
                        fuzz_leafblock(pick(pools.choose(&mut rng).expect("nonempty"), &mut rng), &mut rng)
                    }
                    "lift-split" => {
                        let pools = [&two_k3, &two_k4];
                        fuzz_lift(pick(pools.choose(&mut rng).expect("nonempty"), &mut rng), &mut rng)
                    }
                    _ => unreachable!("planner names are fixed"),
                };
                match run {
                    Run::Ok => t.ok += 1,
                    Run::Skip => t.skipped += 1,
                    Run::Fail(msg) => t.failures.push(msg),
                }
            }
            if name == "k2" {
                t.notes.push(format!("plans longer than 3n: {long_k2}"));
            }
            t
        })
        .collect();

    Ok(PLANNERS
        .iter()
        .zip(results)
        .map(|(name, t)| {
            let mut detail = format!("ok={} skipped={} attempts={} failures={}", t.ok, t.skipped, t.attempts, t.failures.len());
            for n in &t.notes {
                detail.push_str("; ");
                detail.push_str(n);
            }
            if let Some(f) = t.failures.first() {
                detail.push_str("; first failure: ");
                detail.push_str(f);
            }
            InstanceResult::new(*name, t.failures.is_empty() && t.ok >= runs, detail)
        })
        .collect())
}

/// A random surjective labeling of `K_m` by `K_l`; every such labeling is a
/// model.
fn fuzz_clique(rng: &mut ChaCha8Rng) -> Run {
    let m = rng.gen_range(3..=8);
    let l = rng.gen_range(1..m);
    let (g, h) = (clique(m), clique(l));
    let labeling = |rng: &mut ChaCha8Rng| {
        let mut labels: Vec<usize> = (0..m).map(|i| if i < l { i } else { rng.gen_range(0..l) }).collect();
        labels.shuffle(rng);
        HModel::valid(&g, &h, labels).expect("surjective labelings of a clique are models")
    };
    let (a, b) = (labeling(rng), labeling(rng));
    outcome(planner::plan_clique(&a, &b), |end| if *end == b { Ok(()) } else { Err(format!("{a} -> {b} ended at {end}")) })
}

fn unchanged_outside(start: &HModel, end: &HModel, set: VertexSet) -> std::result::Result<(), String> {
    for v in 0..start.host().n() {
        let moved = start.label(v) != end.label(v);
        if moved != set.contains(v) {
            return Err(format!("{start} -> {end}: vertex {v} moved={moved}, expected {}", set.contains(v)));
        }
    }
    Ok(())
}

fn fuzz_slurp(m: &HModel, rng: &mut ChaCha8Rng) -> Run {
    let host = m.host();
    let mut cands = Vec::new();
    for (a, b) in m.target().edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
        let branch = m.branch(a);
        for x in branch {
            if !host.is_cut_vertex_within(branch, x) {
                continue;
            }
            for comp in host.components_within(branch.without(x)) {
                if host.neighborhood(comp).intersects(m.branch(b)) {
                    cands.push((a, b, x, comp));
                }
            }
        }
    }
    let Some(&(a, b, x, comp)) = cands.choose(rng) else { return Run::Skip };
    outcome(planner::plan_slurp_component(m, a, b, x, comp), |end| {
        unchanged_outside(m, end, comp)?;
        if host.neighbors(x).intersects(end.branch(b)) {
            Ok(())
        } else {
            Err(format!("{m}: {x} has no neighbour labeled {b} at the end {end}"))
        }
    })
}

fn fuzz_siphon(m: &HModel, rng: &mut ChaCha8Rng) -> Run {
    let host = m.host();
    let mut cands = Vec::new();
    for a in 0..3 {
        for b in (0..3).filter(|&b| b != a) {
            let c = 3 - a - b;
            for x in m.branch(a) {
                if m.branch(a).len() >= 2 && host.neighbors(x).intersects(m.branch(b)) && !m.is_essential_for(x, c) {
                    cands.push((a, b, x));
                }
            }
        }
    }
    let Some(&(a, b, x)) = cands.choose(rng) else { return Run::Skip };
    outcome(planner::plan_slurp_siphon(m, a, b, x), |end| {
        if end.label(x) != b {
            return Err(format!("{m}: {x} ends labeled {}", end.label(x)));
        }
        let branch = m.branch(a);
        let kept: Vec<VertexSet> = host
            .components_within(branch.without(x))
            .into_iter()
            .filter(|comp| comp.iter().all(|v| end.label(v) == a))
            .collect();
        let changed_outside = (0..host.n()).any(|v| !branch.contains(v) && end.label(v) != m.label(v));
        if kept.len() == 1 && !changed_outside && (end.branch(a) == kept[0]) {
            Ok(())
        } else {
            Err(format!("{m} -> {end}: expected exactly one component of {branch} minus {x} to stay"))
        }
    })
}

fn fuzz_leafblock(m: &HModel, rng: &mut ChaCha8Rng) -> Run {
    let mut cands = Vec::new();
    for a in 0..m.label_count() {
        let tree = m.branch_block_tree(a);
        if tree.len() < 2 {
            continue;
        }
        for i in tree.leaf_blocks() {
            cands.push((a, tree.blocks[i], tree.interior(i)));
        }
    }
    let Some(&(a, leaf, interior)) = cands.choose(rng) else { return Run::Skip };
    outcome(planner::plan_relabel_leafblock(m, a, leaf), |end| unchanged_outside(m, end, interior))
}

fn fuzz_lift(m: &HModel, rng: &mut ChaCha8Rng) -> Run {
    let host = m.host();
    let Some(v) = (0..host.n()).filter(|&v| host.degree(v) >= 4).choose(rng) else { return Run::Skip };
    let mut nbrs = host.neighbors(v).to_vec();
    nbrs.shuffle(rng);
    let cut = rng.gen_range(2..=nbrs.len() - 2);
    let part1: VertexSet = nbrs[..cut].iter().collect();
    let part2: VertexSet = nbrs[cut..].iter().collect();
    let g2 = host.split_vertex(v, part1, part2).expect("parts have at least two vertices");
    let len = rng.gen_range(0..=6);
    let seq = random_walk(m, len, rng);
    let expect = planner::lift_model(&seq.end(), &g2, m.target(), v).expect("labels are in range");
    outcome(planner::lift_sequence_through_split(&seq, &g2, v), |end| {
        if *end == expect {
            Ok(())
        } else {
            Err(format!("lifting {} steps from {m} ended at {end}, expected {expect}", seq.len()))
        }
    })
}
