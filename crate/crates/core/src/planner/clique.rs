//! Complete hosts with complete targets.

use super::walk::Walk;
use crate::error::{Error, Result};
use crate::model::HModel;
use crate::sequence::ReconSequence;

const CLIQUE: &str = "clique";

/// Reconfigures between two `K_l`-models of `K_m`, `m > l`, through the
/// canonical model that labels vertex `i` with `i` for `i < l` and every
/// later vertex with `l - 1`.
pub fn plan_clique<'g>(from: &HModel<'g>, to: &HModel<'g>) -> Result<ReconSequence<'g>> {
    super::same_instance(from, to)?;
    let (g, h) = (from.host(), from.target());
    if !g.is_complete() {
        return Err(Error::NotComplete);
    }
    if !h.is_complete() {
        return Err(Error::precondition(CLIQUE, "target is not complete"));
    }
    if g.n() <= h.n() {
        return Err(Error::SizeMismatch(format!("host K{} must be larger than target K{}", g.n(), h.n())));
    }
    from.validate().map_err(Error::InvalidModel)?;
    to.validate().map_err(Error::InvalidModel)?;

    let mut back = Walk::new(CLIQUE, to);
    to_canonical(&mut back)?;
    let mut walk = Walk::new(CLIQUE, from);
    to_canonical(&mut walk)?;
    walk.extend(&back.finish().reversed())?;
    Ok(walk.finish())
}

fn to_canonical(walk: &mut Walk) -> Result<()> {
    let m = walk.model().host().n();
    let l = walk.model().label_count();
    let last = l - 1;

    // Tail vertices take the last label. A tail vertex alone in its branch
    // set first gets company from some vertex in a larger branch set.
    for i in l..m {
        let f = walk.model();
        let a = f.label(i);
        if a == last {
            continue;
        }
        if f.branch(a).len() == 1 {
            let j = (0..m)
                .filter(|&j| j != i && !(l..i).contains(&j))
                .find(|&j| f.branch(f.label(j)).len() >= 2)
                .ok_or_else(|| walk.invariant(format!("no vertex of {f} can join {i}")))?;
            walk.step(j, a)?;
        }
        walk.step(i, last)?;
    }

    // The heads now carry every label but possibly the last; a repeated
    // head label is dropped to the last label, preferring the copy that
    // sits in the wrong place.
    let f = walk.model();
    let dup = (0..l).find(|&i| (0..l).any(|j| j != i && f.label(j) == f.label(i)) && f.label(i) != i);
    if let Some(i) = dup {
        walk.step(i, last)?;
    }

    // Pairwise swaps through the tail vertex l.
    let k = l;
    for i in 0..l {
        let f = walk.model();
        let (a, want) = (f.label(i), i);
        if a == want {
            continue;
        }
        let j = (0..l).find(|&j| f.label(j) == want).ok_or_else(|| walk.invariant(format!("no head carries {want} in {f}")))?;
        let b = f.label(j);
        if a == last {
            walk.step(i, b)?;
            walk.step(j, last)?;
        } else {
            walk.step(k, a)?;
            walk.step(i, b)?;
            walk.step(j, a)?;
            walk.step(k, last)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_clique;
    use crate::model::enumerate_models;

    #[test]
    fn canonical_is_a_fixed_point() {
        let (k5, k4) = (gen_clique(5).unwrap(), gen_clique(4).unwrap());
        let c = HModel::valid(&k5, &k4, vec![0, 1, 2, 3, 3]).unwrap();
        assert!(plan_clique(&c, &c).unwrap().is_empty());
    }

    #[test]
    fn swap_with_the_last_label() {
        let (k5, k4) = (gen_clique(5).unwrap(), gen_clique(4).unwrap());
        let from = HModel::valid(&k5, &k4, vec![3, 1, 2, 0, 3]).unwrap();
        let to = HModel::valid(&k5, &k4, vec![0, 1, 2, 3, 3]).unwrap();
        let seq = plan_clique(&from, &to).unwrap();
        assert_eq!(seq.replay().unwrap(), to);
        assert_eq!(seq.len(), 2);
    }

    #[test]
    fn all_pairs_on_k5_to_k3() {
        let (k5, k3) = (gen_clique(5).unwrap(), gen_clique(3).unwrap());
        let models = enumerate_models(&k5, &k3, Default::default()).unwrap();
        let to = &models[models.len() / 2];
        for from in &models {
            assert_eq!(&plan_clique(from, to).unwrap().replay().unwrap(), to);
            assert_eq!(plan_clique(to, from).unwrap().replay().unwrap(), *from);
        }
    }

    #[test]
    fn sizes_and_shapes() {
        let k4 = gen_clique(4).unwrap();
        let m = HModel::valid(&k4, &k4, vec![0, 1, 2, 3]).unwrap();
        assert!(matches!(plan_clique(&m, &m), Err(Error::SizeMismatch(_))));
        let c5 = crate::families::gen_cycle(5).unwrap();
        let k2 = gen_clique(2).unwrap();
        let m = HModel::valid(&c5, &k2, vec![0, 0, 1, 1, 1]).unwrap();
        assert_eq!(plan_clique(&m, &m).unwrap_err(), Error::NotComplete);
    }
}
