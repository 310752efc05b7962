use std::collections::{HashMap, VecDeque};
use std::marker::PhantomData;
use std::sync::OnceLock;

use super::{Group, LengthOracle};
use crate::error::{Error, Result};

/// Word length by breadth-first search over the right Cayley graph.
///
/// The distance table is computed on first use and memoized; an instance is
/// bound to the first group it measures.
pub struct CayleyBfs<G: Group> {
    table: OnceLock<HashMap<G::Elem, usize>>,
    _group: PhantomData<fn() -> G>,
}

impl<G: Group> CayleyBfs<G> {
    pub fn new() -> Self {
        Self {
            table: OnceLock::new(),
            _group: PhantomData,
        }
    }

    fn distances(group: &G) -> HashMap<G::Elem, usize> {
        let gens = group.generators();
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        let e = group.identity();
        dist.insert(e.clone(), 0usize);
        queue.push_back(e);
        while let Some(x) = queue.pop_front() {
            let dx = dist[&x];
            for s in &gens {
                let y = group.mul(&x, s);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

impl<G: Group> Default for CayleyBfs<G> {
    fn default() -> Self {
        Self::new()
    }
}

impl<G: Group> LengthOracle<G> for CayleyBfs<G> {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn length(&self, group: &G, x: &G::Elem) -> Result<usize> {
        if !group.is_finite() {
            return Err(Error::Domain(format!(
                "breadth-first length needs a finite group, {} is infinite",
                group.name()
            )));
        }
        let table = self.table.get_or_init(|| Self::distances(group));
        table.get(x).copied().ok_or_else(|| {
            Error::Domain(format!(
                "{} is not in the monoid generated by the generators",
                group.format(x)
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{CycleFormula, Integers, SymmetricGroup};
    use super::*;

    #[test]
    fn bfs_agrees_with_cycle_formula() {
        for d in 1..=5 {
            let g = SymmetricGroup::new(d).unwrap();
            let bfs = CayleyBfs::<SymmetricGroup>::new();
            for x in g.elements().unwrap() {
                assert_eq!(
                    bfs.length(&g, &x).unwrap(),
                    CycleFormula.length(&g, &x).unwrap(),
                    "{x} in Sym_{d}"
                );
            }
        }
    }

    #[test]
    fn bfs_refuses_infinite_groups() {
        let bfs = CayleyBfs::<Integers>::new();
        assert!(bfs.length(&Integers, &3).is_err());
    }
}
