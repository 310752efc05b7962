use std::fmt::Debug;
use std::hash::Hash;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::factor_posets::{CircularFactorization, Composition, LinearFactorization};
use crate::marked_group::{Group, MarkedGroup};

use super::multiset::{position_token, Multiset};
use super::position::{one, zero, Position};

/// `0^{x_L} s_1^{x_1} ... s_k^{x_k} 1^{x_R}`: a point of the order complex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightedLinearFactorization<E> {
    target: E,
    left: E,
    interior: Vec<(Position, E)>,
    right: E,
}

/// `0^{z} s_1^{x_1} ... s_k^{x_k}` with the identity at `1`: a point of the
/// interval complex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct WeightedCircularFactorization<E> {
    target: E,
    fold: E,
    interior: Vec<(Position, E)>,
}

fn check_interior<G: Group>(mg: &MarkedGroup<G>, interior: &[(Position, G::Elem)]) -> Result<()> {
    let mut prev = zero();
    for (s, x) in interior {
        if *s <= prev || *s >= one() {
            return Err(Error::Domain(format!(
                "interior positions must increase strictly inside (0, 1), got {s}"
            )));
        }
        if mg.is_identity(x) {
            return Err(Error::Domain(format!("trivial label at interior position {s}")));
        }
        prev = s.clone();
    }
    Ok(())
}

impl<E: Clone + Eq + Hash + Ord + Debug> WeightedLinearFactorization<E> {
    pub fn new<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        target: E,
        left: E,
        interior: Vec<(Position, E)>,
        right: E,
    ) -> Result<Self> {
        check_interior(mg, &interior)?;
        let u = Self {
            target,
            left,
            interior,
            right,
        };
        u.support_vector(mg)?;
        Ok(u)
    }

    /// Places the inner entries of `f` at the given interior positions.
    pub fn from_factorization<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        f: &LinearFactorization<E>,
        positions: Vec<Position>,
    ) -> Result<Self> {
        if positions.len() != f.k() {
            return Err(Error::Domain(format!(
                "{} positions for {} inner entries",
                positions.len(),
                f.k()
            )));
        }
        let interior = positions.into_iter().zip(f.inner().iter().cloned()).collect();
        Self::new(mg, f.target().clone(), f.left().clone(), interior, f.right().clone())
    }

    /// The point of the closed simplex of `f` with inner entries placed at
    /// `ts`, a nondecreasing sequence in `[0, 1]`. Entries sharing a position
    /// are multiplied together.
    pub fn in_closed_simplex<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        f: &LinearFactorization<E>,
        ts: &[Position],
    ) -> Result<Self> {
        if ts.len() != f.k() {
            return Err(Error::Domain(format!("{} positions for {} inner entries", ts.len(), f.k())));
        }
        let mut positions = vec![zero()];
        positions.extend(ts.iter().cloned());
        positions.push(one());
        if positions.windows(2).any(|w| w[0] > w[1]) || !ts.iter().all(super::position::in_unit_interval) {
            return Err(Error::Domain("positions must be nondecreasing in [0, 1]".into()));
        }
        let mut groups: Vec<(Position, E)> = Vec::new();
        for (s, x) in positions.into_iter().zip(f.entries()) {
            match groups.last_mut() {
                Some((t, acc)) if *t == s => *acc = mg.mul(acc, x),
                _ => groups.push((s, x.clone())),
            }
        }
        let left = groups.remove(0).1;
        let right = if groups.last().is_some_and(|(s, _)| s.is_one()) {
            groups.pop().expect("nonempty").1
        } else {
            mg.identity()
        };
        Self::new(mg, f.target().clone(), left, groups, right)
    }

    /// Reads a multiset on `[0, 1]` as a weighted linear factorization.
    pub fn from_multiset<G: Group<Elem = E>>(mg: &MarkedGroup<G>, target: E, m: &Multiset<E>) -> Result<Self> {
        let left = m.label(mg, &zero());
        let right = m.label(mg, &one());
        let interior = m
            .iter()
            .filter(|(s, _)| !s.is_zero() && !s.is_one())
            .map(|(s, x)| (s.clone(), x.clone()))
            .collect();
        Self::new(mg, target, left, interior, right)
    }

    pub fn to_multiset<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Multiset<E> {
        let mut points = vec![(zero(), self.left.clone())];
        points.extend(self.interior.iter().cloned());
        points.push((one(), self.right.clone()));
        Multiset::new(mg, points).expect("valid positions")
    }

    pub fn target(&self) -> &E {
        &self.target
    }

    pub fn interior(&self) -> &[(Position, E)] {
        &self.interior
    }

    /// `P(u) = [x_L x_1 ... x_k x_R]`.
    pub fn support_vector<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<LinearFactorization<E>> {
        let mut entries = vec![self.left.clone()];
        entries.extend(self.interior.iter().map(|(_, x)| x.clone()));
        entries.push(self.right.clone());
        LinearFactorization::new(mg, self.target.clone(), entries)
    }

    /// Product of the labels by increasing position.
    pub fn rho<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> E {
        let labels = std::iter::once(&self.left)
            .chain(self.interior.iter().map(|(_, x)| x))
            .chain(std::iter::once(&self.right));
        mg.product(labels)
    }

    /// `L(u)`: labels replaced by their lengths.
    pub fn lengths<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<WeightedLinearFactorization<i64>> {
        let len = |x: &E| mg.length(x).map(|n| n as i64);
        let mut interior = Vec::with_capacity(self.interior.len());
        for (s, x) in &self.interior {
            interior.push((s.clone(), len(x)?));
        }
        Ok(WeightedLinearFactorization {
            target: len(&self.target)?,
            left: len(&self.left)?,
            interior,
            right: len(&self.right)?,
        })
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String) -> String {
        let mut parts = vec![format!("0^{}", label(&self.left))];
        parts.extend(self.interior.iter().map(|(s, x)| format!("{}^{}", position_token(s), label(x))));
        parts.push(format!("1^{}", label(&self.right)));
        parts.join(" ")
    }
}

impl<E: Clone + Eq + Hash + Ord + Debug> WeightedCircularFactorization<E> {
    pub fn new<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        target: E,
        fold: E,
        interior: Vec<(Position, E)>,
    ) -> Result<Self> {
        check_interior(mg, &interior)?;
        let u = Self {
            target,
            fold,
            interior,
        };
        u.canonical(mg)?;
        Ok(u)
    }

    pub fn fold(&self) -> &E {
        &self.fold
    }

    pub fn interior(&self) -> &[(Position, E)] {
        &self.interior
    }

    /// The unique representative `0^{z} s_1^{x_1} ... s_k^{x_k} 1^1`.
    pub fn canonical<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<WeightedLinearFactorization<E>> {
        WeightedLinearFactorization::new(
            mg,
            self.target.clone(),
            self.fold.clone(),
            self.interior.clone(),
            mg.identity(),
        )
    }

    /// The open cell containing this point.
    pub fn cell<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> Result<CircularFactorization<E>> {
        Ok(self.canonical(mg)?.support_vector(mg)?.circularize(mg))
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String) -> String {
        let mut parts = vec![format!("0^{}", label(&self.fold))];
        parts.extend(self.interior.iter().map(|(s, x)| format!("{}^{}", position_token(s), label(x))));
        parts.join(" ")
    }
}

pub fn support_vector_p<G: Group>(
    mg: &MarkedGroup<G>,
    u: &WeightedLinearFactorization<G::Elem>,
) -> Result<LinearFactorization<G::Elem>> {
    u.support_vector(mg)
}

pub fn rho<G: Group>(mg: &MarkedGroup<G>, u: &WeightedLinearFactorization<G::Elem>) -> G::Elem {
    u.rho(mg)
}

/// Each position carrying weight `a` contributes `a` copies of itself; the
/// result is the sorted point of the standard orthoscheme.
pub fn ortho_coordinates(w: &WeightedLinearFactorization<i64>) -> Result<Vec<Position>> {
    let mut coords = Vec::new();
    let mut push = |s: &Position, a: i64| -> Result<()> {
        if a < 0 {
            return Err(Error::Domain(format!("negative weight {a}")));
        }
        coords.extend(std::iter::repeat_n(s.clone(), a as usize));
        Ok(())
    };
    push(&zero(), w.left)?;
    for (s, a) in &w.interior {
        push(s, *a)?;
    }
    push(&one(), w.right)?;
    if coords.len() as i64 != w.target {
        return Err(Error::Domain(format!(
            "weights sum to {}, not {}",
            coords.len(),
            w.target
        )));
    }
    Ok(coords)
}

fn chain_union_is_chain<G: Group>(mg: &MarkedGroup<G>, chains: &[Vec<G::Elem>]) -> Result<bool> {
    let mut all: Vec<(usize, G::Elem)> = Vec::new();
    for x in chains.iter().flatten() {
        all.push((mg.length(x)?, x.clone()));
    }
    all.sort();
    all.dedup();
    for w in all.windows(2) {
        if w[0].0 == w[1].0 || !mg.leq(&w[0].1, &w[1].1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distance inside a common closed simplex, measured in the pulled-back
/// orthoscheme metric.
pub fn simplex_distance<G: Group>(
    mg: &MarkedGroup<G>,
    u: &WeightedLinearFactorization<G::Elem>,
    v: &WeightedLinearFactorization<G::Elem>,
) -> Result<f64> {
    if u.target() != v.target() {
        return Err(Error::MetricScope("points of different complexes".into()));
    }
    let cu = u.support_vector(mg)?.chain(mg);
    let cv = v.support_vector(mg)?.chain(mg);
    if !chain_union_is_chain(mg, &[cu, cv])? {
        return Err(Error::MetricScope(
            "the two points share no closed simplex".into(),
        ));
    }
    let xu = ortho_coordinates(&u.lengths(mg)?)?;
    let xv = ortho_coordinates(&v.lengths(mg)?)?;
    let squared: BigRational = xu
        .iter()
        .zip(&xv)
        .map(|(a, b)| (a - b) * (a - b))
        .fold(BigRational::zero(), |acc, x| acc + x);
    Ok(squared.to_f64().unwrap_or(f64::INFINITY).sqrt())
}

/// The inner entries of a composition. Faces with equal shapes are
/// isometric.
pub fn face_shape(c: &Composition) -> Vec<i64> {
    c.inner().to_vec()
}

/// Moves a point of the column `x_1 <= ... <= x_n <= x_1 + 1` into the
/// fundamental orthoscheme `0 <= x_1 <= ... <= x_n <= 1` using
/// `T(x) = (x_2, ..., x_n, x_1 + 1)` and its inverse.
pub fn column_normalize(x: &[Position]) -> Result<Vec<Position>> {
    let Some(first) = x.first() else {
        return Ok(Vec::new());
    };
    if x.windows(2).any(|w| w[0] > w[1]) || *x.last().expect("nonempty") > first + one() {
        return Err(Error::Domain("not a point of the column".into()));
    }
    let mut v = x.to_vec();
    while v[0].is_negative() {
        let head = v.remove(0);
        v.push(head + one());
    }
    while *v.last().expect("nonempty") > one() {
        let tail = v.pop().expect("nonempty");
        v.insert(0, tail - one());
    }
    Ok(v)
}

/// Folds the endpoint label at `1` into position `0`: the weighted
/// circular factorization `0^{g x_R g^-1 x_L} s_1^{x_1} ... s_k^{x_k}`.
pub fn circular_normalize<G: Group>(
    mg: &MarkedGroup<G>,
    u: &WeightedLinearFactorization<G::Elem>,
) -> WeightedCircularFactorization<G::Elem> {
    let fold = mg.mul(&mg.conjugate(&u.target, &u.right), &u.left);
    WeightedCircularFactorization {
        target: u.target.clone(),
        fold,
        interior: u.interior.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor_posets::composition;
    use crate::labels::letters;
    use crate::marked_group::{Permutation, SymmetricGroup};
    use crate::weighted_complexes::position::pos;

    fn s3() -> (MarkedGroup<SymmetricGroup>, [Permutation; 5]) {
        let g = MarkedGroup::symmetric(3).unwrap();
        let p = |s: &str| Permutation::parse(3, s).unwrap();
        (g, [p("()"), p("(1 2)"), p("(2 3)"), p("(1 3)"), Permutation::delta(3)])
    }

    fn w(
        mg: &MarkedGroup<SymmetricGroup>,
        left: &Permutation,
        interior: &[(Position, &Permutation)],
        right: &Permutation,
    ) -> WeightedLinearFactorization<Permutation> {
        let interior = interior.iter().map(|(s, x)| (s.clone(), (*x).clone())).collect();
        WeightedLinearFactorization::new(mg, mg.delta(), left.clone(), interior, right.clone()).unwrap()
    }

    #[test]
    fn support_vector_and_rho() {
        let (mg, [e, a, b, c, d]) = s3();
        let u = w(&mg, &e, &[(pos(1, 3), &a), (pos(2, 3), &b)], &e);
        assert_eq!(u.support_vector(&mg).unwrap().text(&letters), "[1 a b 1]");
        assert_eq!(u.rho(&mg), d);
        assert_eq!(u.text(&letters), "0^1 (1/3)^a (2/3)^b 1^1");
        let v = w(&mg, &d, &[], &e);
        assert_eq!(v.support_vector(&mg).unwrap().text(&letters), "[δ 1]");
        let h = w(&mg, &e, &[(pos(1, 2), &d)], &e);
        assert_eq!(h.support_vector(&mg).unwrap().text(&letters), "[1 δ 1]");
        let ca = w(&mg, &c, &[(pos(1, 2), &a)], &e);
        assert_eq!(ca.rho(&mg), d);
        assert!(Multiset::<Permutation>::empty().rho(&mg) == e);
        let m = u.to_multiset(&mg);
        assert_eq!(WeightedLinearFactorization::from_multiset(&mg, d.clone(), &m).unwrap(), u);
    }

    #[test]
    fn rejects_bad_points() {
        let (mg, [e, a, b, _c, d]) = s3();
        let bad = |left: &Permutation, inner: Vec<(Position, Permutation)>, right: &Permutation| {
            WeightedLinearFactorization::new(&mg, d.clone(), left.clone(), inner, right.clone()).is_err()
        };
        assert!(bad(&e, vec![(pos(2, 3), a.clone()), (pos(1, 3), b.clone())], &e));
        assert!(bad(&e, vec![(pos(1, 3), b.clone()), (pos(2, 3), a.clone())], &e));
        assert!(bad(&e, vec![(pos(1, 3), e.clone()), (pos(2, 3), d.clone())], &e));
        assert!(bad(&e, vec![(one(), d.clone())], &e));
    }

    #[test]
    fn ortho_coordinates_examples() {
        let z = MarkedGroup::integers();
        let s = WeightedLinearFactorization::new(&z, 5, 0, vec![(pos(1, 5), 2), (pos(3, 5), 3)], 0).unwrap();
        let (a, b) = (pos(1, 5), pos(3, 5));
        assert_eq!(ortho_coordinates(&s).unwrap(), vec![a.clone(), a, b.clone(), b.clone(), b]);
        let all_zero = WeightedLinearFactorization::new(&z, 3, 3, vec![], 0).unwrap();
        assert_eq!(ortho_coordinates(&all_zero).unwrap(), vec![zero(); 3]);
        let t = WeightedLinearFactorization::new(&z, 2, 0, vec![(pos(1, 4), 1), (pos(3, 4), 1)], 0).unwrap();
        assert_eq!(ortho_coordinates(&t).unwrap(), vec![pos(1, 4), pos(3, 4)]);
    }

    #[test]
    fn distances() {
        let (mg, [e, a, b, _c, d]) = s3();
        let u = w(&mg, &e, &[(pos(1, 4), &a), (pos(1, 2), &b)], &e);
        let v = w(&mg, &e, &[(pos(1, 2), &a), (pos(3, 4), &b)], &e);
        assert!((simplex_distance(&mg, &u, &v).unwrap() - 2f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(simplex_distance(&mg, &u, &u).unwrap(), 0.0);
        let bottom = w(&mg, &d, &[], &e);
        let top = w(&mg, &e, &[], &d);
        let corner = w(&mg, &a, &[], &b);
        assert!((simplex_distance(&mg, &bottom, &top).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!((simplex_distance(&mg, &bottom, &corner).unwrap() - 1.0).abs() < 1e-12);
        let other = w(&mg, &b, &[], &_c);
        assert!(matches!(
            simplex_distance(&mg, &corner, &other),
            Err(Error::MetricScope(_))
        ));
    }

    #[test]
    fn face_shapes_follow_inner_entries() {
        let c = |v: Vec<i64>| composition(v).unwrap();
        assert_eq!(face_shape(&c(vec![1, 1, 0])), face_shape(&c(vec![0, 1, 1])));
        assert_eq!(face_shape(&c(vec![0, 2, 0])), vec![2]);
        assert_ne!(face_shape(&c(vec![0, 1, 1, 0])), face_shape(&c(vec![1, 1, 1])));
    }

    #[test]
    fn column_normalization() {
        let x = [pos(1, 2), pos(9, 10), pos(6, 5)];
        assert_eq!(column_normalize(&x).unwrap(), vec![pos(1, 5), pos(1, 2), pos(9, 10)]);
        let y = [pos(1, 5), pos(1, 2)];
        assert_eq!(column_normalize(&y).unwrap(), y.to_vec());
        let low = [pos(-3, 2), pos(-1, 1), pos(-7, 10)];
        let n = column_normalize(&low).unwrap();
        assert!(n.windows(2).all(|w| w[0] <= w[1]) && n[0] >= zero() && n[2] <= one());
        assert!(column_normalize(&[pos(0, 1), pos(3, 2)]).is_err());
        assert!(column_normalize(&[pos(1, 2), pos(0, 1)]).is_err());
    }

    #[test]
    fn circular_normal_form() {
        let (mg, [e, a, b, c, _d]) = s3();
        let u = w(&mg, &e, &[(pos(1, 2), &a)], &b);
        let n = circular_normalize(&mg, &u);
        assert_eq!(n.text(&letters), "0^c (1/2)^a");
        let u2 = w(&mg, &c, &[(pos(1, 2), &a)], &e);
        assert_eq!(circular_normalize(&mg, &u2), n);
        assert_eq!(n.cell(&mg).unwrap().text(&letters, &e), "[c | a | 1]");
        assert_eq!(n.canonical(&mg).unwrap(), u2);
    }
}
