//! Groups with a fixed conjugacy-closed generating set.
//!
//! A [`MarkedGroup`] pairs a concrete [`Group`] with a [`LengthOracle`]
//! measuring word length over the generators. Absolute order, intervals
//! `[1, g]` and complements are derived from the length alone:
//! `h <= g` iff `l(h) + l(h^-1 g) = l(g)`.
//!
//! Products are written left to right and evaluated as functions, so for
//! permutations `(x * y)(i) = x(y(i))`. With `a = (1 2)`, `b = (2 3)`,
//! `c = (1 3)` this gives `ab = bc = ca = (1 2 3)`.

mod biane;
mod integers;
mod oracle;
mod partition;
mod perm;
mod table;

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

pub use biane::{biane_psi, biane_psi_inv};
pub use integers::{IntegerLength, Integers};
pub use oracle::CayleyBfs;
pub use partition::SetPartition;
pub use perm::{CycleFormula, Permutation, SymmetricGroup};
pub use table::TableGroup;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::registry::Registry;

/// Default cap on the number of elements produced by any enumeration.
pub const DEFAULT_SIZE_GUARD: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_SIZE_GUARD`].
pub const SIZE_GUARD_ENV: &str = "NCFACT_SIZE_GUARD";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_SIZE_GUARD,
        }
    }
}

impl Limits {
    pub fn new(max_elements: usize) -> Self {
        Self { max_elements }
    }

    /// Reads `NCFACT_SIZE_GUARD`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(SIZE_GUARD_ENV) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .map(Self::new)
                .map_err(|_| Error::Parse(format!("{SIZE_GUARD_ENV}={v} is not a count"))),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn check(&self, what: &str, count: usize) -> Result<()> {
        if count > self.max_elements {
            Err(Error::Resource {
                what: what.to_string(),
                limit: self.max_elements,
            })
        } else {
            Ok(())
        }
    }
}

/// A group presented by an explicit finite generating set.
pub trait Group: Send + Sync + 'static {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn inv(&self, x: &Self::Elem) -> Self::Elem;
    fn generators(&self) -> Vec<Self::Elem>;
    /// Canonical text form of an element.
    fn format(&self, x: &Self::Elem) -> String;
    fn is_finite(&self) -> bool;
    /// All elements, for finite groups.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
}

/// Strategy computing word length over the generators.
pub trait LengthOracle<G: Group>: Send + Sync {
    fn name(&self) -> &'static str;
    fn length(&self, group: &G, x: &G::Elem) -> Result<usize>;
}

pub struct MarkedGroup<G: Group> {
    group: G,
    oracle: Arc<dyn LengthOracle<G>>,
    limits: Limits,
}

impl<G: Group> fmt::Debug for MarkedGroup<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MarkedGroup")
            .field("group", &self.group.name())
            .field("oracle", &self.oracle.name())
            .field("limits", &self.limits)
            .finish()
    }
}

impl MarkedGroup<SymmetricGroup> {
    /// `Sym_d` with all transpositions, measured by the cycle-count formula.
    pub fn symmetric(degree: usize) -> Result<Self> {
        Self::new(SymmetricGroup::new(degree)?, Arc::new(CycleFormula))
    }

    pub fn length_oracles() -> Registry<dyn LengthOracle<SymmetricGroup>> {
        Registry::new("length oracle")
            .with("formula", || Arc::new(CycleFormula) as Arc<dyn LengthOracle<SymmetricGroup>>)
            .with("bfs", || {
                Arc::new(CayleyBfs::<SymmetricGroup>::new()) as Arc<dyn LengthOracle<SymmetricGroup>>
            })
    }

    /// The standard d-cycle `(1 2 ... d)`.
    pub fn delta(&self) -> Permutation {
        Permutation::delta(self.group.degree())
    }
}

impl MarkedGroup<Integers> {
    /// The integers with generating set `{1}`.
    pub fn integers() -> Self {
        Self::new(Integers, Arc::new(IntegerLength)).expect("{1} generates a marked monoid")
    }
}

impl MarkedGroup<TableGroup> {
    pub fn table(group: TableGroup) -> Result<Self> {
        Self::new(group, Arc::new(CayleyBfs::<TableGroup>::new()))
    }
}

impl<G: Group> MarkedGroup<G> {
    /// Pairs a group with a length oracle. For finite groups the generating
    /// set is checked to be closed under conjugation.
    pub fn new(group: G, oracle: Arc<dyn LengthOracle<G>>) -> Result<Self> {
        let marked = Self {
            group,
            oracle,
            limits: Limits::default(),
        };
        if marked.group.is_finite() {
            marked.check_conjugacy_closed()?;
        }
        Ok(marked)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn oracle_name(&self) -> &'static str {
        self.oracle.name()
    }

    /// Closure under conjugation by each generator suffices, since the
    /// generators generate the (finite) group.
    pub fn check_conjugacy_closed(&self) -> Result<()> {
        let gens = self.group.generators();
        let set: HashSet<_> = gens.iter().cloned().collect();
        for y in &gens {
            for x in &gens {
                let c = self.conjugate(y, x);
                if !set.contains(&c) {
                    return Err(Error::Domain(format!(
                        "generating set not conjugacy-closed: {} conjugates {} to {}",
                        self.format(y),
                        self.format(x),
                        self.format(&c)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(&self) -> G::Elem {
        self.group.identity()
    }

    pub fn is_identity(&self, x: &G::Elem) -> bool {
        *x == self.group.identity()
    }

    pub fn mul(&self, x: &G::Elem, y: &G::Elem) -> G::Elem {
        self.group.mul(x, y)
    }

    pub fn inv(&self, x: &G::Elem) -> G::Elem {
        self.group.inv(x)
    }

    /// Left-to-right product of a sequence.
    pub fn product<'a, I>(&self, items: I) -> G::Elem
    where
        I: IntoIterator<Item = &'a G::Elem>,
    {
        items
            .into_iter()
            .fold(self.group.identity(), |acc, x| self.group.mul(&acc, x))
    }

    pub fn format(&self, x: &G::Elem) -> String {
        self.group.format(x)
    }

    /// Absolute length: minimal word length over the generators.
    pub fn length(&self, x: &G::Elem) -> Result<usize> {
        self.oracle.length(&self.group, x)
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: &G::Elem, x: &G::Elem) -> G::Elem {
        self.group.mul(&self.group.mul(g, x), &self.group.inv(g))
    }

    /// Absolute order `h <= g`.
    pub fn leq(&self, h: &G::Elem, g: &G::Elem) -> Result<bool> {
        let lg = self.length(g)?;
        let lh = self.length(h)?;
        let rest = self.mul(&self.inv(h), g);
        // h^-1 g outside the generated monoid means h is not a prefix of g.
        Ok(match self.length(&rest) {
            Ok(lr) => lh + lr == lg,
            Err(_) => false,
        })
    }

    /// The element `h' = h^-1 g` with `h h' = g` and lengths adding.
    pub fn complement(&self, h: &G::Elem, g: &G::Elem) -> Result<G::Elem> {
        if !self.leq(h, g)? {
            return Err(Error::Order(format!(
                "{} is not below {}",
                self.format(h),
                self.format(g)
            )));
        }
        Ok(self.mul(&self.inv(h), g))
    }

    /// The interval `[1, g]` as a graded poset, ranked by length and ordered
    /// by `(rank, element)`. Built by walking geodesics out of the identity
    /// in the right Cayley graph, so only the interval and its immediate
    /// neighbourhood are ever visited.
    pub fn interval(&self, g: &G::Elem) -> Result<GradedPoset<G::Elem>> {
        let height = self.length(g)?;
        let gens = self.group.generators();
        let mut levels: Vec<BTreeSet<G::Elem>> = vec![BTreeSet::from([self.identity()])];
        let mut covers = Vec::new();
        let mut total = 1usize;
        for r in 0..height {
            let mut next = BTreeSet::new();
            for h in &levels[r] {
                for x in &gens {
                    let hx = self.mul(h, x);
                    if self.length(&hx).ok() != Some(r + 1) || !self.leq(&hx, g)? {
                        continue;
                    }
                    covers.push((h.clone(), hx.clone()));
                    if next.insert(hx) {
                        total += 1;
                        self.limits.check("interval", total)?;
                    }
                }
            }
            levels.push(next);
        }
        let entries = levels
            .into_iter()
            .enumerate()
            .flat_map(|(r, level)| level.into_iter().map(move |h| (h, r)))
            .collect::<Vec<_>>();
        GradedPoset::from_entries(entries, |_| String::new(), covers)
    }

    /// The label `h^-1 h''` of a cover `h < h''` in the Hasse diagram.
    pub fn cover_label(&self, lower: &G::Elem, upper: &G::Elem) -> G::Elem {
        self.mul(&self.inv(lower), upper)
    }

    /// Smallest `k >= 1` with `g^k h g^-k = h`, capped at `cap`.
    pub fn cover_degree(&self, g: &G::Elem, h: &G::Elem, cap: usize) -> usize {
        let mut x = h.clone();
        for k in 1..=cap.max(1) {
            x = self.conjugate(g, &x);
            if x == *h {
                return k;
            }
        }
        cap.max(1)
    }

    /// Order of `g`, or `None` when it exceeds `cap`.
    pub fn order_of(&self, g: &G::Elem, cap: usize) -> Option<usize> {
        let mut x = g.clone();
        for k in 1..=cap {
            if self.is_identity(&x) {
                return Some(k);
            }
            x = self.mul(&x, g);
        }
        None
    }
}
