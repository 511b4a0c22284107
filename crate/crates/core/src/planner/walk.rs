use crate::error::{Error, Result};
use crate::model::HModel;
use crate::sequence::{ReconSequence, Step};

/// A sequence under construction. Every step is checked against the
/// single-step rule before it is applied, so a planner can only ever emit
/// legal sequences; a rejected step is a bug in the planner.
pub(crate) struct Walk<'g> {
    planner: &'static str,
    start: HModel<'g>,
    cur: HModel<'g>,
    steps: Vec<Step>,
}

impl<'g> Walk<'g> {
    pub fn new(planner: &'static str, start: &HModel<'g>) -> Self {
        Walk { planner, start: start.clone(), cur: start.clone(), steps: Vec::new() }
    }

    pub fn model(&self) -> &HModel<'g> {
        &self.cur
    }

    pub fn step(&mut self, v: usize, b: usize) -> Result<()> {
        let verdict = self.cur.legal_step(v, b).map_err(|e| self.invariant(e.to_string()))?;
        if let Some(c) = verdict.failed_condition {
            return Err(self.invariant(format!("relabeling {v} to {b} in {} fails {c}", self.cur)));
        }
        self.cur.set_label(v, b);
        self.steps.push(Step { vertex: v, label: b });
        Ok(())
    }

    pub fn extend(&mut self, seq: &ReconSequence<'g>) -> Result<()> {
        if seq.start.labels() != self.cur.labels() {
            return Err(self.invariant(format!("sequence starts at {}, walk is at {}", seq.start, self.cur)));
        }
        for s in &seq.steps {
            self.step(s.vertex, s.label)?;
        }
        Ok(())
    }

    pub fn invariant(&self, detail: impl Into<String>) -> Error {
        Error::PlanInvariant { planner: self.planner, detail: detail.into() }
    }

    pub fn finish(self) -> ReconSequence<'g> {
        ReconSequence { start: self.start, steps: self.steps }
    }
}
