//! Constructive planners. Each one emits a sequence whose every step has
//! been checked against the single-step rule.

mod clique;
mod genwheel;
mod k2;
mod leafblock;
mod lift;
mod walk;

pub use clique::plan_clique;
pub use genwheel::plan_genwheel;
pub use k2::plan_k2;
pub use leafblock::{plan_relabel_leafblock, plan_slurp_component, plan_slurp_siphon};
pub use lift::{lift_model, lift_sequence_through_split};

use crate::error::{Error, Result};
use crate::model::HModel;

fn same_instance(from: &HModel, to: &HModel) -> Result<()> {
    if from.host() != to.host() || from.target() != to.target() {
        return Err(Error::BadParameter("models live on different host or target graphs".into()));
    }
    Ok(())
}
