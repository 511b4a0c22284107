use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::genwheel::{GeneralizedWheel, PartShape};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Compact description of a generated graph, written `tag:params`.
///
/// ```text
/// wheel:5  c2:6  k:5  cycle:5  path:3  star:3  kb:3,3
/// genwheel:l=2,m=3,n=3,part=triangle  rand3:n=8,seed=42
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Wheel(usize),
    SquaredCycle(usize),
    Clique(usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    GeneralizedWheel { l: usize, m: usize, n: usize, part: PartShape },
    Random3Connected { n: usize, seed: u64 },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Wheel(k) => super::gen_wheel(k),
            FamilySpec::SquaredCycle(k) => super::gen_squared_cycle(k),
            FamilySpec::Clique(k) => super::gen_clique(k),
            FamilySpec::Cycle(k) => super::gen_cycle(k),
            FamilySpec::Path(k) => super::gen_path(k),
            FamilySpec::Star(k) => super::gen_star(k),
            FamilySpec::CompleteBipartite(p, q) => super::gen_complete_bipartite(p, q),
            FamilySpec::GeneralizedWheel { .. } => Ok(self.generalized_wheel()?.expect("spec is a generalized wheel").graph),
            FamilySpec::Random3Connected { n, seed } => super::gen_random_3connected(n, seed),
        }
    }

    /// Layout for specs describing generalized wheels; plain wheels count
    /// as the one-hub, single-vertex-part case.
    pub fn generalized_wheel(&self) -> Result<Option<GeneralizedWheel>> {
        let (l, m, n, part) = match *self {
            FamilySpec::GeneralizedWheel { l, m, n, part } => (l, m, n, part),
            FamilySpec::Wheel(k) => (1, k, 1, PartShape::Single),
            _ => return Ok(None),
        };
        let p = part.graph(n)?;
        GeneralizedWheel::new(&vec![p; m], n, l, m).map(Some)
    }
}

fn number<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim().parse().map_err(|_| Error::BadParameter(format!("{key} must be a non-negative integer, got {v:?}")))
}

fn keyed(params: &str) -> Result<BTreeMap<&str, &str>> {
    params
        .split(',')
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::BadParameter(format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn take<T: FromStr>(map: &mut BTreeMap<&str, &str>, key: &str) -> Result<Option<T>> {
    map.remove(key).map(|v| number(key, v)).transpose()
}

fn required<T: FromStr>(map: &mut BTreeMap<&str, &str>, key: &str) -> Result<T> {
    take(map, key)?.ok_or_else(|| Error::BadParameter(format!("missing parameter {key}")))
}

fn no_extra(map: &BTreeMap<&str, &str>) -> Result<()> {
    match map.keys().next() {
        Some(k) => Err(Error::BadParameter(format!("unknown parameter {k}"))),
        None => Ok(()),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, params) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::BadParameter(format!("family spec {s:?} has no ':'")))?;
        let one = |p: &str| number::<usize>(tag, p);
        Ok(match tag.trim() {
            "wheel" => FamilySpec::Wheel(one(params)?),
            "c2" | "squared_cycle" => FamilySpec::SquaredCycle(one(params)?),
            "k" | "clique" => FamilySpec::Clique(one(params)?),
            "cycle" => FamilySpec::Cycle(one(params)?),
            "path" => FamilySpec::Path(one(params)?),
            "star" => FamilySpec::Star(one(params)?),
            "kb" => {
                let (p, q) = params
                    .split_once(',')
                    .ok_or_else(|| Error::BadParameter(format!("kb needs two sizes, got {params:?}")))?;
                FamilySpec::CompleteBipartite(one(p)?, one(q)?)
            }
            "genwheel" | "generalized_wheel" => {
                let mut map = keyed(params)?;
                let part = map.remove("part").map(str::parse).transpose()?.unwrap_or(PartShape::Single);
                let l = required(&mut map, "l")?;
                let m = required(&mut map, "m")?;
                let n = match (take(&mut map, "n")?, part.natural_size()) {
                    (Some(n), _) | (None, Some(n)) => n,
                    (None, None) => return Err(Error::BadParameter(format!("part shape {part} needs n"))),
                };
                no_extra(&map)?;
                FamilySpec::GeneralizedWheel { l, m, n, part }
            }
            "rand3" | "random_3conn" => {
                let mut map = keyed(params)?;
                let n = required(&mut map, "n")?;
                let seed = take(&mut map, "seed")?.unwrap_or(0);
                no_extra(&map)?;
                FamilySpec::Random3Connected { n, seed }
            }
            other => return Err(Error::BadParameter(format!("unknown graph family {other:?}"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Wheel(k) => write!(f, "wheel:{k}"),
            FamilySpec::SquaredCycle(k) => write!(f, "c2:{k}"),
            FamilySpec::Clique(k) => write!(f, "k:{k}"),
            FamilySpec::Cycle(k) => write!(f, "cycle:{k}"),
            FamilySpec::Path(k) => write!(f, "path:{k}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::CompleteBipartite(p, q) => write!(f, "kb:{p},{q}"),
            FamilySpec::GeneralizedWheel { l, m, n, part } => write!(f, "genwheel:l={l},m={m},n={n},part={part}"),
            FamilySpec::Random3Connected { n, seed } => write!(f, "rand3:n={n},seed={seed}"),
        }
    }
}
