use std::collections::HashMap;

use super::Group;
use crate::error::{Error, Result};

/// A finite group given by its multiplication table. Elements are indices
/// into the table; `names` supplies their text forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
    names: Vec<String>,
}

impl TableGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>, generators: Vec<usize>, names: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Domain("multiplication table must be square and named".into()));
        }
        if table.iter().flatten().any(|&v| v >= n) {
            return Err(Error::Domain("table entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Domain("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| Error::Domain(format!("{} has no inverse", names[x])))?;
            inverses.push(inv);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(Error::Domain("multiplication is not associative".into()));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= n) {
            return Err(Error::Domain("generator out of range".into()));
        }
        let mut generators = generators;
        generators.sort_unstable();
        generators.dedup();
        Ok(Self {
            table,
            identity,
            inverses,
            generators,
            names,
        })
    }

    /// Tabulates a finite group, keeping its generators and text forms.
    pub fn from_group<G: Group>(group: &G) -> Result<Self> {
        let elems = group
            .elements()
            .ok_or_else(|| Error::Domain(format!("{} is infinite", group.name())))?;
        let index: HashMap<&G::Elem, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let table = elems
            .iter()
            .map(|x| elems.iter().map(|y| index[&group.mul(x, y)]).collect())
            .collect();
        let generators = group.generators().iter().map(|x| index[x]).collect();
        let names = elems.iter().map(|x| group.format(x)).collect();
        Self::new(table, generators, names)
    }

    /// Replaces the generating set by the elements with the given names.
    pub fn with_generators_named(mut self, names: &[&str]) -> Result<Self> {
        let mut gens = Vec::new();
        for name in names {
            gens.push(
                self.index_of(name)
                    .ok_or_else(|| Error::Domain(format!("no element named {name}")))?,
            );
        }
        gens.sort_unstable();
        self.generators = gens;
        Ok(self)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

impl Group for TableGroup {
    type Elem = usize;

    fn name(&self) -> String {
        format!("table group of order {}", self.table.len())
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.table[*x][*y]
    }

    fn inv(&self, x: &usize) -> usize {
        self.inverses[*x]
    }

    fn generators(&self) -> Vec<usize> {
        self.generators.clone()
    }

    fn format(&self, x: &usize) -> String {
        self.names[*x].clone()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.table.len()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{MarkedGroup, SymmetricGroup};
    use super::*;

    #[test]
    fn tabulated_sym4_matches_permutation_backend() {
        let sym = MarkedGroup::symmetric(4).unwrap();
        let table = TableGroup::from_group(sym.group()).unwrap();
        let marked = MarkedGroup::table(table.clone()).unwrap();
        let delta = table.index_of("(1 2 3 4)").unwrap();
        assert_eq!(marked.length(&delta).unwrap(), 3);
        assert_eq!(marked.interval(&delta).unwrap().len(), 14);
        for x in SymmetricGroup::new(4).unwrap().elements().unwrap() {
            let i = table.index_of(&x.to_string()).unwrap();
            assert_eq!(marked.length(&i).unwrap(), sym.length(&x).unwrap());
        }
    }

    #[test]
    fn cyclic_group_of_order_four() {
        // Z/4 with generators {1, 3} (closed under conjugation, abelian).
        let table = (0..4).map(|x| (0..4).map(|y| (x + y) % 4).collect()).collect();
        let names = (0..4).map(|x| x.to_string()).collect();
        let g = MarkedGroup::table(TableGroup::new(table, vec![1, 3], names).unwrap()).unwrap();
        assert_eq!(g.length(&2).unwrap(), 2);
        assert_eq!(g.length(&3).unwrap(), 1);
        assert_eq!(g.interval(&2).unwrap().len(), 4);
    }

    #[test]
    fn rejects_non_group_tables() {
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(TableGroup::new(bad, vec![1], vec!["e".into(), "x".into()]).is_err());
    }
}
