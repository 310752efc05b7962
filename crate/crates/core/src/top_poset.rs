//! Graded topological posets of weighted factorizations, handled through
//! exact points on finite supports.
//!
//! A point of `F(G, g, I)` is a multiset `u` on `[0, 1]` whose labels form a
//! weighted linear factorization of `rho(u) <= g`. Points are compared
//! pointwise in the absolute order. The circular poset `F(G, g, S)` identifies
//! points with equal interiors and equal `g u(1) g^-1 u(0)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factor_posets::{enumerate_linear, CircularFactorization, LinearFactorization};
use crate::marked_group::{Group, MarkedGroup};
use crate::poset::GradedPoset;
use crate::weighted_complexes::position::{one, zero};
use crate::weighted_complexes::{ComplexSummary, CoverDegree, Multiset, Position, WeightedLinearFactorization};

/// A point of `F(G, g, I)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TopPosetPoint<E> {
    ambient: E,
    labels: Multiset<E>,
}

/// A point of `F(G, g, S)` in its canonical form `0^z s_1^{x_1} ... 1^1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CircularClass<E> {
    ambient: E,
    fold: E,
    interior: Vec<(Position, E)>,
}

impl<E: Clone + Eq + Hash + Ord + Debug> TopPosetPoint<E> {
    pub fn new<G: Group<Elem = E>>(mg: &MarkedGroup<G>, ambient: E, labels: Multiset<E>) -> Result<Self> {
        let h = labels.rho(mg);
        WeightedLinearFactorization::from_multiset(mg, h.clone(), &labels)?;
        if !mg.leq(&h, &ambient)? {
            return Err(Error::Order(format!(
                "{} is not below {}",
                mg.format(&h),
                mg.format(&ambient)
            )));
        }
        Ok(Self { ambient, labels })
    }

    pub fn from_points<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        ambient: E,
        points: Vec<(Position, E)>,
    ) -> Result<Self> {
        let labels = Multiset::new(mg, points)?;
        Self::new(mg, ambient, labels)
    }

    pub fn ambient(&self) -> &E {
        &self.ambient
    }

    pub fn labels(&self) -> &Multiset<E> {
        &self.labels
    }

    pub fn label<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>, s: &Position) -> E {
        self.labels.label(mg, s)
    }

    pub fn rho<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> E {
        self.labels.rho(mg)
    }

    /// `l(rho(u))`.
    pub fn rank<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> usize {
        mg.length(&self.rho(mg)).expect("points lie in the generated monoid")
    }

    /// The point as a weighted linear factorization of `rho(u)`.
    pub fn weighted<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> WeightedLinearFactorization<E> {
        WeightedLinearFactorization::from_multiset(mg, self.rho(mg), &self.labels).expect("validated on construction")
    }

    pub fn interior(&self) -> Vec<(Position, E)> {
        self.labels
            .iter()
            .filter(|(s, _)| !s.is_zero() && !s.is_one())
            .map(|(s, x)| (s.clone(), x.clone()))
            .collect()
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String) -> String {
        self.labels.text(label)
    }
}

impl<E: Clone + Eq + Hash + Ord + Debug> CircularClass<E> {
    pub fn ambient(&self) -> &E {
        &self.ambient
    }

    pub fn fold(&self) -> &E {
        &self.fold
    }

    pub fn interior(&self) -> &[(Position, E)] {
        &self.interior
    }

    pub fn canonical<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<TopPosetPoint<E>> {
        let mut points = vec![(zero(), self.fold.clone())];
        points.extend(self.interior.iter().cloned());
        TopPosetPoint::from_points(mg, self.ambient.clone(), points)
    }

    pub fn rank<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<usize> {
        Ok(self.canonical(mg)?.rank(mg))
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String, identity: &E) -> String {
        let mut parts = vec![format!("0^{}", label(&self.fold))];
        for (s, x) in &self.interior {
            parts.push(format!("({s})^{}", label(x)));
        }
        parts.push(format!("1^{}", label(identity)));
        parts.join(" ")
    }
}

/// `v <= u`: `v(r) <= u(r)` at every position.
pub fn subfact_leq<G: Group>(
    mg: &MarkedGroup<G>,
    v: &TopPosetPoint<G::Elem>,
    u: &TopPosetPoint<G::Elem>,
) -> Result<bool> {
    let support: BTreeSet<&Position> = v.labels.support().chain(u.labels.support()).collect();
    for s in support {
        if !mg.leq(&v.label(mg, s), &u.label(mg, s))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(uv)(r) = u(r) v(r)`.
pub fn multiset_product<G: Group>(
    mg: &MarkedGroup<G>,
    u: &Multiset<G::Elem>,
    v: &Multiset<G::Elem>,
) -> Multiset<G::Elem> {
    let support: BTreeSet<&Position> = u.support().chain(v.support()).collect();
    let points = support
        .into_iter()
        .map(|s| (s.clone(), mg.mul(&u.label(mg, s), &v.label(mg, s))));
    Multiset::new(mg, points).expect("positions come from valid multisets")
}

/// `u^-1(r) = u(r)^-1`.
pub fn multiset_inverse<G: Group>(mg: &MarkedGroup<G>, u: &Multiset<G::Elem>) -> Multiset<G::Elem> {
    Multiset::new(mg, u.iter().map(|(s, x)| (s.clone(), mg.inv(x)))).expect("positions come from a valid multiset")
}

/// `prod_{s > r} v(s)` for every `r` in `positions`.
fn tail_products<G: Group>(
    mg: &MarkedGroup<G>,
    v: &Multiset<G::Elem>,
    positions: &BTreeSet<Position>,
) -> BTreeMap<Position, G::Elem> {
    positions
        .iter()
        .map(|r| {
            let tail = mg.product(v.iter().filter(|(s, _)| *s > r).map(|(_, x)| x));
            (r.clone(), tail)
        })
        .collect()
}

/// The lower set of `u`: every point below it, which lives on the same
/// support and is a product of the intervals `[1, u(r)]`.
pub fn lower_set<G: Group>(
    mg: &MarkedGroup<G>,
    u: &TopPosetPoint<G::Elem>,
) -> Result<GradedPoset<TopPosetPoint<G::Elem>>> {
    let mut positions: Vec<Position> = u.labels.support().cloned().collect();
    for end in [zero(), one()] {
        if !positions.contains(&end) {
            positions.push(end);
        }
    }
    positions.sort();
    let factors: Vec<GradedPoset<G::Elem>> = positions
        .iter()
        .map(|s| mg.interval(&u.label(mg, s)))
        .collect::<Result<_>>()?;
    let total = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.len()));
    match total {
        Some(n) => mg.limits().check("lower set", n)?,
        None => mg.limits().check("lower set", usize::MAX)?,
    }
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for f in &factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..f.len()).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    let point = |t: &[usize]| -> Result<TopPosetPoint<G::Elem>> {
        let points = positions
            .iter()
            .zip(t)
            .zip(&factors)
            .map(|((s, &i), f)| (s.clone(), f.item(i).clone()));
        TopPosetPoint::from_points(mg, u.ambient.clone(), points.collect())
    };
    let mut entries = Vec::with_capacity(tuples.len());
    let mut covers = Vec::new();
    for t in &tuples {
        let p = point(t)?;
        let rank = p.rank(mg);
        for (j, f) in factors.iter().enumerate() {
            for &up in f.upper_covers(t[j]) {
                let mut t2 = t.clone();
                t2[j] = up;
                covers.push((p.clone(), point(&t2)?));
            }
        }
        entries.push((p, rank));
    }
    GradedPoset::from_entries(entries, |p| p.text(&|x| mg.format(x)), covers)
}

/// `phi(u)(r) = C_r^-1 (v^-1 u)(r) C_r` with `C_r = prod_{s > r} v(s)`,
/// sending the upper set of `v` onto `F(G, h', I)` where `rho(v) h' = g`.
pub fn upper_set_phi<G: Group>(
    mg: &MarkedGroup<G>,
    v: &TopPosetPoint<G::Elem>,
    u: &TopPosetPoint<G::Elem>,
) -> Result<TopPosetPoint<G::Elem>> {
    if v.ambient != u.ambient || !subfact_leq(mg, v, u)? {
        return Err(Error::Order("phi needs v to be a subfactorization of u".into()));
    }
    let h_prime = mg.complement(&v.rho(mg), &v.ambient)?;
    let w = multiset_product(mg, &multiset_inverse(mg, &v.labels), &u.labels);
    let positions: BTreeSet<Position> = w.support().cloned().collect();
    let tails = tail_products(mg, &v.labels, &positions);
    let points = w
        .iter()
        .map(|(r, x)| {
            let c = &tails[r];
            (r.clone(), mg.mul(&mg.mul(&mg.inv(c), x), c))
        })
        .collect();
    TopPosetPoint::from_points(mg, h_prime, points)
}

/// Inverse of [`upper_set_phi`]: `w(r) -> v(r) C_r w(r) C_r^-1`.
pub fn upper_set_phi_inv<G: Group>(
    mg: &MarkedGroup<G>,
    v: &TopPosetPoint<G::Elem>,
    w: &TopPosetPoint<G::Elem>,
) -> Result<TopPosetPoint<G::Elem>> {
    let h_prime = mg.complement(&v.rho(mg), &v.ambient)?;
    if w.ambient != h_prime {
        return Err(Error::Order(format!(
            "expected a point of F(G, {}, I)",
            mg.format(&h_prime)
        )));
    }
    let positions: BTreeSet<Position> = v.labels.support().chain(w.labels.support()).cloned().collect();
    let tails = tail_products(mg, &v.labels, &positions);
    let points = positions
        .iter()
        .map(|r| {
            let c = &tails[r];
            let inner = mg.mul(&mg.mul(c, &w.label(mg, r)), &mg.inv(c));
            (r.clone(), mg.mul(&v.label(mg, r), &inner))
        })
        .collect();
    TopPosetPoint::from_points(mg, v.ambient.clone(), points)
}

fn fold_of<G: Group>(mg: &MarkedGroup<G>, u: &TopPosetPoint<G::Elem>) -> G::Elem {
    let left = u.label(mg, &zero());
    let right = u.label(mg, &one());
    mg.mul(&mg.conjugate(&u.ambient, &right), &left)
}

/// Same ambient, same interior, and `g u(1) g^-1 u(0) = g v(1) g^-1 v(0)`.
pub fn circ_equiv<G: Group>(
    mg: &MarkedGroup<G>,
    u: &TopPosetPoint<G::Elem>,
    v: &TopPosetPoint<G::Elem>,
) -> bool {
    u.ambient == v.ambient && u.interior() == v.interior() && fold_of(mg, u) == fold_of(mg, v)
}

pub fn circ_quotient<G: Group>(mg: &MarkedGroup<G>, u: &TopPosetPoint<G::Elem>) -> CircularClass<G::Elem> {
    CircularClass {
        ambient: u.ambient.clone(),
        fold: fold_of(mg, u),
        interior: u.interior(),
    }
}

/// Every point of `F(G, g, I)` supported on `support` together with the
/// endpoints `0` and `1`.
pub fn skeleton<G: Group>(
    mg: &MarkedGroup<G>,
    g: &G::Elem,
    support: &[Position],
) -> Result<Vec<TopPosetPoint<G::Elem>>> {
    let mut positions: BTreeSet<Position> = support.iter().cloned().collect();
    positions.insert(zero());
    positions.insert(one());
    let positions: Vec<Position> = positions.into_iter().collect();
    if positions.iter().any(|s| *s < zero() || *s > one()) {
        return Err(Error::Domain("support must lie in [0, 1]".into()));
    }
    let interval = mg.interval(g)?;
    let limit = mg.limits().max_elements;
    let mut out = Vec::new();
    let mut stack: Vec<(usize, G::Elem, Vec<(Position, G::Elem)>)> = vec![(0, mg.identity(), Vec::new())];
    while let Some((i, acc, chosen)) = stack.pop() {
        if i == positions.len() {
            out.push(TopPosetPoint::from_points(mg, g.clone(), chosen)?);
            if out.len() > limit {
                return Err(Error::Resource {
                    what: "skeleton enumeration".into(),
                    limit,
                });
            }
            continue;
        }
        let base = interval.rank(interval.index_of(&acc).expect("prefixes stay in [1, g]"));
        for x in interval.items() {
            let next = mg.mul(&acc, x);
            let Some(j) = interval.index_of(&next) else {
                continue;
            };
            if interval.rank(j) != base + mg.length(x)? {
                continue;
            }
            let mut c = chosen.clone();
            c.push((positions[i].clone(), x.clone()));
            stack.push((i + 1, next, c));
        }
    }
    out.sort();
    Ok(out)
}

/// The circular classes of a skeleton, with every representative kept so
/// that the induced order can be computed by lifting.
#[derive(Debug, Clone)]
pub struct CircularSkeleton<E> {
    classes: Vec<CircularClass<E>>,
    reps: Vec<Vec<TopPosetPoint<E>>>,
}

impl<E: Clone + Eq + Hash + Ord + Debug> CircularSkeleton<E> {
    pub fn classes(&self) -> &[CircularClass<E>] {
        &self.classes
    }

    pub fn representatives(&self, i: usize) -> &[TopPosetPoint<E>] {
        &self.reps[i]
    }

    pub fn index_of(&self, c: &CircularClass<E>) -> Option<usize> {
        self.classes.binary_search(c).ok()
    }

    /// `[x] <= [y]` iff some representative of `x` lies below some
    /// representative of `y`.
    pub fn leq<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>, i: usize, j: usize) -> Result<bool> {
        for x in &self.reps[i] {
            for y in &self.reps[j] {
                if subfact_leq(mg, x, y)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

pub fn circular_skeleton<G: Group>(
    mg: &MarkedGroup<G>,
    g: &G::Elem,
    support: &[Position],
) -> Result<CircularSkeleton<G::Elem>> {
    let mut by_class: BTreeMap<CircularClass<G::Elem>, Vec<TopPosetPoint<G::Elem>>> = BTreeMap::new();
    for p in skeleton(mg, g, support)? {
        by_class.entry(circ_quotient(mg, &p)).or_default().push(p);
    }
    let (classes, reps) = by_class.into_iter().unzip();
    Ok(CircularSkeleton { classes, reps })
}

/// The map `[u] -> [phi(u)]` from the upper set of `c` onto
/// `F(G, h', S)`, restricted to a finite support and checked to be an
/// order isomorphism there.
pub fn circ_upper_set<G: Group>(
    mg: &MarkedGroup<G>,
    c: &CircularClass<G::Elem>,
    support: &[Position],
) -> Result<Vec<(CircularClass<G::Elem>, CircularClass<G::Elem>)>> {
    if c.interior.iter().any(|(s, _)| !support.contains(s)) {
        return Err(Error::Domain("the support must contain the class's own positions".into()));
    }
    let v = c.canonical(mg)?;
    let g = c.ambient.clone();
    let h_prime = mg.complement(&v.rho(mg), &g)?;
    let source = circular_skeleton(mg, &g, support)?;
    let target = circular_skeleton(mg, &h_prime, support)?;

    let mut map: BTreeMap<CircularClass<G::Elem>, CircularClass<G::Elem>> = BTreeMap::new();
    for u in skeleton(mg, &g, support)? {
        if !subfact_leq(mg, &v, &u)? {
            continue;
        }
        let from = circ_quotient(mg, &u);
        let to = circ_quotient(mg, &upper_set_phi(mg, &v, &u)?);
        if let Some(prev) = map.insert(from.clone(), to.clone()) {
            if prev != to {
                return Err(Error::Invariant(format!("{from:?} has two images")));
            }
        }
    }

    let ci = source.index_of(c).ok_or_else(|| Error::Invariant("class missing from its skeleton".into()))?;
    let mut above = BTreeSet::new();
    for j in 0..source.classes.len() {
        if source.leq(mg, ci, j)? {
            above.insert(source.classes[j].clone());
        }
    }
    if above.iter().ne(map.keys()) {
        return Err(Error::Invariant("q of the upper set differs from the upper set of the class".into()));
    }
    let images: BTreeSet<&CircularClass<G::Elem>> = map.values().collect();
    if images.len() != map.len() || images.len() != target.classes.len() {
        return Err(Error::Invariant("upper set map is not a bijection".into()));
    }
    let pairs: Vec<(usize, usize)> = map
        .iter()
        .map(|(a, b)| (source.index_of(a).expect("in skeleton"), target.index_of(b).expect("in skeleton")))
        .collect();
    for &(a1, b1) in &pairs {
        for &(a2, b2) in &pairs {
            if source.leq(mg, a1, a2)? != target.leq(mg, b1, b2)? {
                return Err(Error::Invariant("upper set map does not preserve order".into()));
            }
        }
    }
    Ok(map.into_iter().collect())
}

/// One component family of a stratum: the order complex `O_h` and the
/// number of sheets `k(h)` it contributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sheet<E> {
    pub h: E,
    pub k: usize,
    pub dims: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct StratumReport<E> {
    pub rank: usize,
    pub summary: ComplexSummary,
    pub sheets: Vec<Sheet<E>>,
    pub cells: Vec<CircularFactorization<E>>,
}

impl<E> StratumReport<E> {
    /// Cells of `⊔ O_h` per dimension before identification.
    pub fn cells_before_quotient(&self) -> Vec<usize> {
        let top = self.sheets.iter().map(|s| s.dims.len()).max().unwrap_or(0);
        let mut dims = vec![0; top];
        for s in &self.sheets {
            for (j, n) in s.dims.iter().enumerate() {
                dims[j] += n;
            }
        }
        dims
    }
}

/// The rank-`r` stratum of `F(G, g, S)`: the cells of `O_h` for every
/// `h <= g` of length `r`, identified by interior and fold.
pub fn stratum_complex<G: Group>(mg: &MarkedGroup<G>, g: &G::Elem, r: usize) -> Result<StratumReport<G::Elem>> {
    let interval = mg.interval(g)?;
    let mut sheets = Vec::new();
    let mut reps: BTreeMap<CircularFactorization<G::Elem>, Vec<LinearFactorization<G::Elem>>> = BTreeMap::new();
    let key = |f: &LinearFactorization<G::Elem>| {
        let fold = mg.mul(&mg.conjugate(g, f.right()), f.left());
        CircularFactorization::from_parts(g.clone(), fold, f.inner().to_vec())
    };
    let cap = mg.limits().max_elements;
    for i in interval.indices_of_rank(r) {
        let h = interval.item(i).clone();
        let linear = enumerate_linear(mg, &h)?;
        let k = mg.cover_degree(g, &h, cap);
        sheets.push(Sheet {
            h: h.clone(),
            k,
            dims: linear.rank_profile(),
        });
        for f in linear.items() {
            reps.entry(key(f)).or_default().push(f.clone());
        }
    }
    if sheets.is_empty() {
        return Err(Error::Domain(format!("no element of rank {r} below {}", mg.format(g))));
    }
    let id = mg.identity();
    let mut cells: Vec<CircularFactorization<G::Elem>> = reps.keys().cloned().collect();
    cells.sort_by_cached_key(|c| (c.rank(), c.text(&|x| mg.format(x), &id), c.clone()));
    let index: BTreeMap<&CircularFactorization<G::Elem>, usize> =
        cells.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut faces = Vec::new();
    for (c, cell) in cells.iter().enumerate() {
        let mut expected: Option<Vec<usize>> = None;
        for f in &reps[cell] {
            if f.k() == 0 {
                continue;
            }
            let got = (0..=f.k())
                .map(|p| Ok(index[&key(&f.merge(mg, p)?)]))
                .collect::<Result<Vec<usize>>>()?;
            match &expected {
                None => expected = Some(got),
                Some(e) if *e != got => {
                    return Err(Error::Invariant(format!("faces of {cell:?} depend on the representative")));
                }
                Some(_) => {}
            }
        }
        for (p, face) in expected.into_iter().flatten().enumerate() {
            faces.push([c, face, p]);
        }
    }
    let dims: Vec<usize> = cells.iter().map(|c| c.rank()).collect();
    let mut summary = ComplexSummary::new(&dims, faces)?;
    summary.covers = Some(
        sheets
            .iter()
            .map(|s| CoverDegree {
                h: mg.format(&s.h),
                k: s.k,
            })
            .collect(),
    );
    Ok(StratumReport {
        rank: r,
        summary,
        sheets,
        cells,
    })
}
