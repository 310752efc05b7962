//! Linear and circular factorization posets.
//!
//! A linear factorization of `g` is a row `[x_L x_1 ... x_k x_R]` with
//! nontrivial inner entries whose lengths add up to `l(g)` and whose product
//! is `g`. Its cells in the order complex `O_g` are ordered by merging
//! adjacent entries. Circular factorizations forget how the outer entries
//! split: two linear factorizations are equivalent when their inner entries
//! agree, and the class is written `[g x_R g^-1 x_L | x_1 ... x_k | 1]`.
//!
//! Compositions are factorizations over the integers.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::marked_group::{Group, Integers, MarkedGroup};
use crate::poset::GradedPoset;

/// `[x_L x_1 ... x_k x_R]`, a cell of the order complex `O_g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearFactorization<E> {
    target: E,
    entries: Vec<E>,
}

/// `[z_L | x_1 ... x_k | 1]`, a cell of the interval complex `K_g`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CircularFactorization<E> {
    target: E,
    fold: E,
    inner: Vec<E>,
}

pub type Composition = LinearFactorization<i64>;
pub type CircularComposition = CircularFactorization<i64>;

fn bracket(parts: &[String]) -> String {
    format!("[{}]", parts.join(" "))
}

impl<E: Clone + Eq + Hash + Ord + Debug> LinearFactorization<E> {
    /// Validates the factorization conditions against `target`.
    pub fn new<G: Group<Elem = E>>(mg: &MarkedGroup<G>, target: E, entries: Vec<E>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::Domain("a linear factorization has at least two entries".into()));
        }
        let inner = &entries[1..entries.len() - 1];
        if let Some(x) = inner.iter().find(|x| mg.is_identity(x)) {
            return Err(Error::Domain(format!("inner entry {} is trivial", mg.format(x))));
        }
        let mut total = 0;
        for x in &entries {
            total += mg.length(x)?;
        }
        if total != mg.length(&target)? {
            return Err(Error::Domain(format!(
                "entry lengths sum to {total}, not l({}) = {}",
                mg.format(&target),
                mg.length(&target)?
            )));
        }
        if mg.product(&entries) != target {
            return Err(Error::Domain(format!(
                "entries do not multiply to {}",
                mg.format(&target)
            )));
        }
        Ok(Self { target, entries })
    }

    pub fn target(&self) -> &E {
        &self.target
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn left(&self) -> &E {
        &self.entries[0]
    }

    pub fn right(&self) -> &E {
        &self.entries[self.entries.len() - 1]
    }

    pub fn inner(&self) -> &[E] {
        &self.entries[1..self.entries.len() - 1]
    }

    /// Number of inner entries, which is also the rank and the dimension of
    /// the corresponding simplex.
    pub fn k(&self) -> usize {
        self.entries.len() - 2
    }

    pub fn rank(&self) -> usize {
        self.k()
    }

    /// Replaces entries `i` and `i + 1` by their product (`0 <= i <= k`).
    pub fn merge<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>, i: usize) -> Result<Self> {
        let k = self.k();
        if k == 0 {
            return Err(Error::Merge("merging a two-entry factorization leaves one entry".into()));
        }
        if i > k {
            return Err(Error::Merge(format!("merge position {i} out of range 0..={k}")));
        }
        let mut entries = Vec::with_capacity(self.entries.len() - 1);
        entries.extend_from_slice(&self.entries[..i]);
        entries.push(mg.mul(&self.entries[i], &self.entries[i + 1]));
        entries.extend_from_slice(&self.entries[i + 2..]);
        Ok(Self {
            target: self.target.clone(),
            entries,
        })
    }

    /// The chain `x_L <= x_L x_1 <= ... <= x_L x_1 ... x_k` in `[1, g]`.
    pub fn chain<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Vec<E> {
        let mut acc = self.entries[0].clone();
        let mut chain = vec![acc.clone()];
        for x in self.inner() {
            acc = mg.mul(&acc, x);
            chain.push(acc.clone());
        }
        chain
    }

    /// Inverse of [`LinearFactorization::chain`]:
    /// `y_0 < ... < y_k` becomes `[y_0  y_0^-1 y_1 ... y_k^-1 g]`.
    pub fn from_chain<G: Group<Elem = E>>(mg: &MarkedGroup<G>, target: E, chain: &[E]) -> Result<Self> {
        let Some(last) = chain.last() else {
            return Err(Error::Domain("empty chain".into()));
        };
        for w in chain.windows(2) {
            if w[0] == w[1] || !mg.leq(&w[0], &w[1])? {
                return Err(Error::Domain(format!(
                    "{} < {} fails in the absolute order",
                    mg.format(&w[0]),
                    mg.format(&w[1])
                )));
            }
        }
        if !mg.leq(last, &target)? {
            return Err(Error::Domain(format!(
                "chain leaves [1, {}]",
                mg.format(&target)
            )));
        }
        let mut entries = vec![chain[0].clone()];
        for w in chain.windows(2) {
            entries.push(mg.mul(&mg.inv(&w[0]), &w[1]));
        }
        entries.push(mg.mul(&mg.inv(last), &target));
        Self::new(mg, target, entries)
    }

    /// The quotient map `q` onto circular factorizations.
    pub fn circularize<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> CircularFactorization<E> {
        let fold = mg.mul(&mg.conjugate(&self.target, self.right()), self.left());
        CircularFactorization {
            target: self.target.clone(),
            fold,
            inner: self.inner().to_vec(),
        }
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String) -> String {
        bracket(&self.entries.iter().map(label).collect::<Vec<_>>())
    }
}

impl<E: Clone + Eq + Hash + Ord + Debug> CircularFactorization<E> {
    pub(crate) fn from_parts(target: E, fold: E, inner: Vec<E>) -> Self {
        Self { target, fold, inner }
    }

    pub fn target(&self) -> &E {
        &self.target
    }

    /// The folded endpoint entry `z_L = g x_R g^-1 x_L`.
    pub fn fold(&self) -> &E {
        &self.fold
    }

    pub fn inner(&self) -> &[E] {
        &self.inner
    }

    pub fn rank(&self) -> usize {
        self.inner.len()
    }

    /// The canonical representative `[z_L x_1 ... x_k 1]`.
    pub fn canonical<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> LinearFactorization<E> {
        let mut entries = vec![self.fold.clone()];
        entries.extend(self.inner.iter().cloned());
        entries.push(mg.identity());
        LinearFactorization {
            target: self.target.clone(),
            entries,
        }
    }

    /// All linear factorizations in this class: every way of splitting the
    /// ends as `x_L, x_R` with `x_L (x_1 ... x_k) x_R = g`, lengths adding.
    pub fn representatives<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<Vec<LinearFactorization<E>>> {
        let interval = mg.interval(&self.target)?;
        let middle = mg.product(&self.inner);
        let mut reps = Vec::new();
        for left in interval.items() {
            let right = mg.mul(&mg.inv(&mg.mul(left, &middle)), &self.target);
            let mut entries = vec![left.clone()];
            entries.extend(self.inner.iter().cloned());
            entries.push(right);
            if let Ok(f) = LinearFactorization::new(mg, self.target.clone(), entries) {
                reps.push(f);
            }
        }
        Ok(reps)
    }

    /// `[z_L | x_1 ... x_k | 1]`, with `||` when there are no inner entries.
    pub fn text(&self, label: &dyn Fn(&E) -> String, identity: &E) -> String {
        let inner: Vec<String> = self.inner.iter().map(label).collect();
        if inner.is_empty() {
            format!("[{} || {}]", label(&self.fold), label(identity))
        } else {
            format!("[{} | {} | {}]", label(&self.fold), inner.join(" "), label(identity))
        }
    }
}

/// Merges at position `i`.
pub fn merge<G: Group>(
    mg: &MarkedGroup<G>,
    f: &LinearFactorization<G::Elem>,
    i: usize,
) -> Result<LinearFactorization<G::Elem>> {
    f.merge(mg, i)
}

pub fn chain_iso<G: Group>(mg: &MarkedGroup<G>, f: &LinearFactorization<G::Elem>) -> Vec<G::Elem> {
    f.chain(mg)
}

pub fn chain_iso_inv<G: Group>(
    mg: &MarkedGroup<G>,
    target: &G::Elem,
    chain: &[G::Elem],
) -> Result<LinearFactorization<G::Elem>> {
    LinearFactorization::from_chain(mg, target.clone(), chain)
}

pub fn circularize<G: Group>(
    mg: &MarkedGroup<G>,
    f: &LinearFactorization<G::Elem>,
) -> CircularFactorization<G::Elem> {
    f.circularize(mg)
}

/// `Fact(G, g, I)`: all linear factorizations, covers given by single
/// merges, ordered by `(rank, canonical text)`.
pub fn enumerate_linear<G: Group>(
    mg: &MarkedGroup<G>,
    g: &G::Elem,
) -> Result<GradedPoset<LinearFactorization<G::Elem>>> {
    let interval = mg.interval(g)?;
    let chains = interval.nonempty_chains(mg.limits().max_elements)?;
    let mut entries = Vec::with_capacity(chains.len());
    let mut covers = Vec::new();
    for chain in chains {
        let elems: Vec<G::Elem> = chain.iter().map(|&i| interval.item(i).clone()).collect();
        let f = LinearFactorization::from_chain(mg, g.clone(), &elems)?;
        for i in 0..=f.k() {
            if f.k() > 0 {
                covers.push((f.merge(mg, i)?, f.clone()));
            }
        }
        let rank = f.rank();
        entries.push((f, rank));
    }
    GradedPoset::from_entries(entries, |f| f.text(&|x| mg.format(x)), covers)
}

/// `Fact(G, g, S)`: the image of `q`, with covers inherited from linear
/// covers.
pub fn enumerate_circular<G: Group>(
    mg: &MarkedGroup<G>,
    g: &G::Elem,
) -> Result<GradedPoset<CircularFactorization<G::Elem>>> {
    let linear = enumerate_linear(mg, g)?;
    circular_from_linear(mg, &linear)
}

pub fn circular_from_linear<G: Group>(
    mg: &MarkedGroup<G>,
    linear: &GradedPoset<LinearFactorization<G::Elem>>,
) -> Result<GradedPoset<CircularFactorization<G::Elem>>> {
    let images: Vec<CircularFactorization<G::Elem>> =
        linear.items().iter().map(|f| f.circularize(mg)).collect();
    let entries = images.iter().map(|c| (c.clone(), c.rank())).collect();
    let covers = linear
        .covers()
        .iter()
        .map(|&(lo, hi)| (images[lo].clone(), images[hi].clone()))
        .collect::<Vec<_>>();
    let id = mg.identity();
    GradedPoset::from_entries(entries, |c| c.text(&|x| mg.format(x), &id), covers)
}

/// `x <= y` in `Fact(G, g, S)`: some representative of `x` is obtained by
/// merges from some representative of `y`.
pub fn circular_leq<G: Group>(
    mg: &MarkedGroup<G>,
    x: &CircularFactorization<G::Elem>,
    y: &CircularFactorization<G::Elem>,
) -> Result<bool> {
    if x.rank() > y.rank() {
        return Ok(false);
    }
    for rep in y.representatives(mg)? {
        let chain = rep.chain(mg);
        let n = chain.len();
        for mask in 1u64..(1u64 << n) {
            if mask.count_ones() as usize != x.rank() + 1 {
                continue;
            }
            let sub: Vec<G::Elem> = (0..n)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| chain[b].clone())
                .collect();
            let f = LinearFactorization::from_chain(mg, y.target().clone(), &sub)?;
            if f.circularize(mg) == *x {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `L`: entrywise length, landing in `Comp(Z, l(g), I)`.
pub fn length_map_l<G: Group>(mg: &MarkedGroup<G>, f: &LinearFactorization<G::Elem>) -> Result<Composition> {
    let mut entries = Vec::with_capacity(f.entries().len());
    for x in f.entries() {
        entries.push(mg.length(x)? as i64);
    }
    Ok(LinearFactorization {
        target: mg.length(f.target())? as i64,
        entries,
    })
}

/// `L-bar`: entrywise length on circular factorizations.
pub fn length_map_lbar<G: Group>(
    mg: &MarkedGroup<G>,
    c: &CircularFactorization<G::Elem>,
) -> Result<CircularComposition> {
    let mut inner = Vec::with_capacity(c.inner().len());
    for x in c.inner() {
        inner.push(mg.length(x)? as i64);
    }
    Ok(CircularFactorization {
        target: mg.length(c.target())? as i64,
        fold: mg.length(c.fold())? as i64,
        inner,
    })
}

/// Builds a composition of `n` from its entries.
pub fn composition(entries: Vec<i64>) -> Result<Composition> {
    let z = MarkedGroup::<Integers>::integers();
    let n = entries.iter().sum();
    LinearFactorization::new(&z, n, entries)
}
