//! Reconfiguration sequences: a start model plus single-vertex relabelings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::HModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub vertex: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconSequence<'g> {
    pub start: HModel<'g>,
    pub steps: Vec<Step>,
}

impl<'g> ReconSequence<'g> {
    pub fn new(start: HModel<'g>) -> Self {
        ReconSequence { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies the steps without checking legality.
    pub fn end(&self) -> HModel<'g> {
        let mut m = self.start.clone();
        for s in &self.steps {
            m.set_label(s.vertex, s.label);
        }
        m
    }

    /// Applies every step, checking each against the single-step rule, and
    /// returns the final model.
    pub fn replay(&self) -> Result<HModel<'g>> {
        if let Err(v) = self.start.validate() {
            return Err(Error::InvalidModel(v));
        }
        let mut m = self.start.clone();
        for (index, s) in self.steps.iter().enumerate() {
            if s.vertex >= m.host().n() || s.label >= m.label_count() {
                return Err(Error::IllegalStep { index, detail: format!("step {} {} is out of range", s.vertex, s.label) });
            }
            let verdict = m.legal_step(s.vertex, s.label).map_err(|e| Error::IllegalStep { index, detail: e.to_string() })?;
            if let Some(c) = verdict.failed_condition {
                return Err(Error::IllegalStep {
                    index,
                    detail: format!("relabeling {} to {} in {m} fails condition {c}", s.vertex, s.label),
                });
            }
            m.set_label(s.vertex, s.label);
        }
        Ok(m)
    }

    /// Every model along the sequence, start and end included.
    pub fn models(&self) -> Vec<HModel<'g>> {
        let mut out = vec![self.start.clone()];
        let mut m = self.start.clone();
        for s in &self.steps {
            m.set_label(s.vertex, s.label);
            out.push(m.clone());
        }
        out
    }

    /// The same walk traversed backwards. Single steps are reversible, so a
    /// legal sequence reverses to a legal sequence.
    pub fn reversed(&self) -> ReconSequence<'g> {
        let models = self.models();
        let steps = self
            .steps
            .iter()
            .enumerate()
            .rev()
            .map(|(i, s)| Step { vertex: s.vertex, label: models[i].label(s.vertex) })
            .collect();
        ReconSequence { start: models.last().expect("models is never empty").clone(), steps }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn concat(mut self, other: ReconSequence<'g>) -> Result<ReconSequence<'g>> {
        if self.end().labels() != other.start.labels() {
            return Err(Error::BadParameter(format!(
                "cannot join a sequence ending at {} to one starting at {}",
                self.end(),
                other.start
            )));
        }
        self.steps.extend(other.steps);
        Ok(self)
    }

    /// Text form: header `<vertex count> <step count>`, then one
    /// `<vertex> <new label>` line per step. The start model is not part of
    /// the text.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.start.host().n(), self.steps.len());
        for st in &self.steps {
            writeln!(s, "{} {}", st.vertex, st.label).unwrap();
        }
        s
    }

    /// Parses [`ReconSequence::to_text`] output against a start model.
    pub fn parse_text(start: HModel<'g>, text: &str) -> Result<ReconSequence<'g>> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing \"n steps\" header"))?;
        let [n, count] = pair(hline, header)?;
        if n != start.host().n() {
            return Err(Error::parse(hline, format!("sequence is for {n} vertices, host has {}", start.host().n())));
        }
        let mut steps = Vec::with_capacity(count);
        for (line, l) in lines {
            let [vertex, label] = pair(line, l)?;
            if vertex >= n || label >= start.label_count() {
                return Err(Error::parse(line, format!("step {vertex} {label} out of range")));
            }
            steps.push(Step { vertex, label });
        }
        if steps.len() != count {
            return Err(Error::parse(hline, format!("header announces {count} steps, found {}", steps.len())));
        }
        Ok(ReconSequence { start, steps })
    }
}

fn pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let mut it = l.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::parse(line, format!("expected two non-negative integers, got {l:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn replay_reverse_and_text_round_trip() {
        let (k3, k2) = (families::gen_clique(3).unwrap(), families::gen_clique(2).unwrap());
        let start = HModel::valid(&k3, &k2, vec![0, 1, 1]).unwrap();
        let mut seq = ReconSequence::new(start.clone());
        seq.steps.push(Step { vertex: 1, label: 0 });
        seq.steps.push(Step { vertex: 0, label: 1 });
        assert_eq!(seq.replay().unwrap().labels(), &[1, 0, 1]);
        let back = seq.reversed();
        assert_eq!(back.replay().unwrap().labels(), start.labels());
        let text = seq.to_text();
        assert_eq!(text, "3 2\n1 0\n0 1\n");
        assert_eq!(ReconSequence::parse_text(start.clone(), &text).unwrap(), seq);
        let joined = seq.clone().concat(back).unwrap();
        assert_eq!(joined.len(), 4);
        assert_eq!(joined.replay().unwrap(), start);
    }

    #[test]
    fn illegal_step_reports_index() {
        let (k3, k2) = (families::gen_clique(3).unwrap(), families::gen_clique(2).unwrap());
        let start = HModel::valid(&k3, &k2, vec![0, 1, 1]).unwrap();
        let seq = ReconSequence { start, steps: vec![Step { vertex: 1, label: 0 }, Step { vertex: 2, label: 0 }] };
        assert!(matches!(seq.replay(), Err(Error::IllegalStep { index: 1, .. })));
    }

    #[test]
    fn parse_errors() {
        let (k3, k2) = (families::gen_clique(3).unwrap(), families::gen_clique(2).unwrap());
        let start = HModel::valid(&k3, &k2, vec![0, 1, 1]).unwrap();
        assert!(ReconSequence::parse_text(start.clone(), "4 0\n").is_err());
        assert!(ReconSequence::parse_text(start.clone(), "3 1\n").is_err());
        assert!(ReconSequence::parse_text(start.clone(), "3 1\n0 5\n").is_err());
        assert!(ReconSequence::parse_text(start, "3 1\n0 x\n").is_err());
    }
}
