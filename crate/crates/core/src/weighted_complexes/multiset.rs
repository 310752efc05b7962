use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::marked_group::{Group, MarkedGroup};

use super::position::{format_position, in_unit_interval, Position};

/// A finitely supported map from positions in `[0, 1]` to group elements.
/// Only nontrivial labels are stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Multiset<E> {
    points: BTreeMap<Position, E>,
}

impl<E: Clone + Eq + Ord + std::fmt::Debug> Multiset<E> {
    pub fn new<G: Group<Elem = E>>(
        mg: &MarkedGroup<G>,
        points: impl IntoIterator<Item = (Position, E)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (s, x) in points {
            if !in_unit_interval(&s) {
                return Err(Error::Domain(format!("position {s} outside [0, 1]")));
            }
            if map.contains_key(&s) {
                return Err(Error::Domain(format!("position {s} listed twice")));
            }
            if !mg.is_identity(&x) {
                map.insert(s, x);
            }
        }
        Ok(Self { points: map })
    }

    pub fn empty() -> Self {
        Self {
            points: BTreeMap::new(),
        }
    }

    pub fn get(&self, s: &Position) -> Option<&E> {
        self.points.get(s)
    }

    pub fn label<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>, s: &Position) -> E {
        self.points.get(s).cloned().unwrap_or_else(|| mg.identity())
    }

    pub fn support(&self) -> impl Iterator<Item = &Position> {
        self.points.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Position, &E)> {
        self.points.iter()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Product of the labels by increasing position.
    pub fn rho<G: Group<Elem = E>>(&self, mg: &MarkedGroup<G>) -> E {
        mg.product(self.points.values())
    }

    pub fn text(&self, label: &dyn Fn(&E) -> String) -> String {
        if self.points.is_empty() {
            return "∅".into();
        }
        self.points
            .iter()
            .map(|(s, x)| format!("{}^{}", position_token(s), label(x)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn position_token(s: &Position) -> String {
    if s.is_integer() {
        format_position(s)
    } else {
        format!("({})", format_position(s))
    }
}
