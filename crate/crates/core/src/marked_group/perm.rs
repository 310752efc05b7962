use std::fmt;

use super::{Group, LengthOracle};
use crate::error::{Error, Result};

/// A permutation of `{1, ..., d}` stored in one-line notation.
///
/// The derived ordering is lexicographic on the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u8).collect(),
        }
    }

    /// The d-cycle `(1 2 ... d)`.
    pub fn delta(degree: usize) -> Self {
        Self {
            images: (0..degree).map(|i| ((i + 1) % degree) as u8).collect(),
        }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(degree, &[vec![i, j]])
    }

    /// From one-line notation with values in `1..=d`.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let d = one_line.len();
        if d > u8::MAX as usize {
            return Err(Error::Domain(format!("degree {d} too large")));
        }
        let mut seen = vec![false; d];
        let mut images = Vec::with_capacity(d);
        for &v in one_line {
            if v == 0 || v > d || seen[v - 1] {
                return Err(Error::Domain(format!("{one_line:?} is not a bijection on 1..={d}")));
            }
            seen[v - 1] = true;
            images.push((v - 1) as u8);
        }
        Ok(Self { images })
    }

    /// From disjoint cycles with 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree || used[x - 1] {
                    return Err(Error::Domain(format!(
                        "cycles {cycles:?} are not disjoint cycles on 1..={degree}"
                    )));
                }
                used[x - 1] = true;
                let y = cycle[(k + 1) % cycle.len()];
                images[x - 1] = (y - 1) as u8;
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{text}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{text}`")))?;
            let body = &open[..close];
            let cycle = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point `{t}` in `{text}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Disjoint cycles, each starting at its least point, ordered by that
    /// point. Fixed points are included as 1-cycles on request.
    pub fn cycles(&self, include_fixed: bool) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if include_fixed || cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        self.cycles(true).len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles(false);
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let body: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Sym_d` generated by all transpositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetricGroup {
    degree: usize,
}

impl SymmetricGroup {
    pub fn new(degree: usize) -> Result<Self> {
        if degree == 0 || degree > u8::MAX as usize {
            return Err(Error::Domain(format!("unsupported degree {degree}")));
        }
        Ok(Self { degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

impl Group for SymmetricGroup {
    type Elem = Permutation;

    fn name(&self) -> String {
        format!("Sym_{}", self.degree)
    }

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn mul(&self, x: &Permutation, y: &Permutation) -> Permutation {
        x.compose(y)
    }

    fn inv(&self, x: &Permutation) -> Permutation {
        x.inverse()
    }

    fn generators(&self) -> Vec<Permutation> {
        let d = self.degree;
        let mut gens: Vec<Permutation> = (1..=d)
            .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
            .map(|(i, j)| Permutation::from_cycles(d, &[vec![i, j]]).expect("valid transposition"))
            .collect();
        gens.sort();
        gens
    }

    fn format(&self, x: &Permutation) -> String {
        x.to_string()
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn elements(&self) -> Option<Vec<Permutation>> {
        // Lexicographic next-permutation walk.
        let mut current: Vec<usize> = (1..=self.degree).collect();
        let mut out = vec![Permutation::from_one_line(&current).expect("identity")];
        loop {
            let Some(i) = (0..current.len().saturating_sub(1))
                .rev()
                .find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..current.len())
                .rev()
                .find(|&j| current[j] > current[i])
                .expect("successor exists");
            current.swap(i, j);
            current[i + 1..].reverse();
            out.push(Permutation::from_one_line(&current).expect("bijection"));
        }
        Some(out)
    }
}

/// Absolute reflection length `d - #cycles`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CycleFormula;

impl LengthOracle<SymmetricGroup> for CycleFormula {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn length(&self, group: &SymmetricGroup, x: &Permutation) -> Result<usize> {
        if x.degree() != group.degree() {
            return Err(Error::Domain(format!(
                "{x} has degree {} but the group is {}",
                x.degree(),
                group.name()
            )));
        }
        Ok(x.degree() - x.cycle_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Permutation::parse(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.one_line(), vec![2, 1, 4, 3]);
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::parse(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(5).to_string(), "()");
        assert_eq!(Permutation::delta(4).to_string(), "(1 2 3 4)");
        assert!(Permutation::parse(3, "(1 4)").is_err());
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse(3, "1 2").is_err());
    }

    #[test]
    fn cycle_decomposition() {
        let p = Permutation::parse(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.cycles(false), vec![vec![1, 2], vec![3, 4]]);
        let q = Permutation::parse(4, "(2 4)").unwrap();
        assert_eq!(q.cycles(true), vec![vec![1], vec![2, 4], vec![3]]);
    }

    #[test]
    fn group_axioms_spot_check() {
        let g = SymmetricGroup::new(4).unwrap();
        let all = g.elements().unwrap();
        assert_eq!(all.len(), 24);
        let e = g.identity();
        for x in all.iter().step_by(5) {
            assert_eq!(g.mul(x, &e), *x);
            assert_eq!(g.mul(&g.inv(x), x), e);
            for y in all.iter().step_by(7) {
                for z in all.iter().step_by(3) {
                    assert_eq!(g.mul(&g.mul(x, y), z), g.mul(x, &g.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn elements_sorted_and_distinct() {
        let all = SymmetricGroup::new(5).unwrap().elements().unwrap();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn transpositions() {
        let g = SymmetricGroup::new(4).unwrap();
        let gens = g.generators();
        assert_eq!(gens.len(), 6);
        assert!(gens.iter().all(|t| CycleFormula.length(&g, t).unwrap() == 1));
    }
}
