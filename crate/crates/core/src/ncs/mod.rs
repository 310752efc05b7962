//! Degree-d noncrossing partitions of the circle.
//!
//! A point is a finitely supported map from `[0, 1)` to set partitions of
//! `{1, ..., d}`. Block element `m` at position `s` sits at angle
//! `(s + m - 1) / d` turns, and the point is valid when the union of all
//! hulls is noncrossing.

mod noncrossing;
mod psi;
mod regions;
mod shuffle;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::marked_group::SetPartition;
use crate::weighted_complexes::position::{format_position, parse_position, zero};
use crate::weighted_complexes::Position;

pub use noncrossing::{is_noncrossing, is_noncrossing_brute};
pub use psi::{psi_big, psi_big_inv, random_below, random_ncs, random_point, random_reduced_word};
pub use regions::{complementary_regions, Regions};
pub use shuffle::{armstrong_check, lengths_add, shuffle, unshuffle};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawNcs", into = "RawNcs")]
pub struct NcsPartition {
    d: usize,
    /// Sorted by position; position `0` is always present.
    parts: Vec<(Position, SetPartition)>,
}

#[derive(Serialize, Deserialize)]
struct RawNcs {
    d: usize,
    support: Vec<RawPart>,
}

#[derive(Serialize, Deserialize)]
struct RawPart {
    s: String,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawNcs> for NcsPartition {
    type Error = Error;
    fn try_from(raw: RawNcs) -> Result<Self> {
        let parts = raw
            .support
            .into_iter()
            .map(|p| Ok((parse_position(&p.s)?, SetPartition::new(raw.d, p.blocks)?)))
            .collect::<Result<Vec<_>>>()?;
        let p = NcsPartition::new(raw.d, parts)?;
        p.validate()?;
        Ok(p)
    }
}

impl From<NcsPartition> for RawNcs {
    fn from(p: NcsPartition) -> Self {
        RawNcs {
            d: p.d,
            support: p
                .parts
                .into_iter()
                .filter(|(_, part)| !part.is_discrete())
                .map(|(s, part)| RawPart {
                    s: format_position(&s),
                    blocks: part.blocks().to_vec(),
                })
                .collect(),
        }
    }
}

impl NcsPartition {
    /// Normalizes the support: discrete parts away from `0` are dropped and a
    /// discrete part at `0` is added when missing. Noncrossing is not
    /// checked here; see [`NcsPartition::validate`].
    pub fn new(d: usize, parts: Vec<(Position, SetPartition)>) -> Result<Self> {
        let mut kept: Vec<(Position, SetPartition)> = Vec::with_capacity(parts.len() + 1);
        for (s, part) in parts {
            if s < zero() || s >= Position::from_integer(1.into()) {
                return Err(Error::Domain(format!("position {s} is outside [0, 1)")));
            }
            if part.ground() != d {
                return Err(Error::Domain(format!(
                    "partition of {} points at {s} in degree {d}",
                    part.ground()
                )));
            }
            if let Some((last, _)) = kept.last() {
                if *last >= s {
                    return Err(Error::Domain("positions must be strictly increasing".into()));
                }
            }
            if s.is_zero() || !part.is_discrete() {
                kept.push((s, part));
            }
        }
        if kept.first().is_none_or(|(s, _)| !s.is_zero()) {
            kept.insert(0, (zero(), SetPartition::singletons(d)));
        }
        Ok(Self { d, parts: kept })
    }

    pub fn discrete(d: usize) -> Self {
        Self {
            d,
            parts: vec![(zero(), SetPartition::singletons(d))],
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parts(&self) -> &[(Position, SetPartition)] {
        &self.parts
    }

    pub fn part(&self, s: &Position) -> SetPartition {
        self.parts
            .iter()
            .find(|(t, _)| t == s)
            .map_or_else(|| SetPartition::singletons(self.d), |(_, p)| p.clone())
    }

    /// `(position, block)` for every block with at least two points.
    pub fn nontrivial_blocks(&self) -> Vec<(Position, Vec<usize>)> {
        self.parts
            .iter()
            .flat_map(|(s, p)| p.nontrivial_blocks().map(move |b| (s.clone(), b.clone())))
            .collect()
    }

    /// All parts shuffled onto `d (k + 1)` points in counterclockwise order.
    pub fn lifted(&self) -> SetPartition {
        let parts: Vec<SetPartition> = self.parts.iter().map(|(_, p)| p.clone()).collect();
        shuffle(&parts).expect("parts share the ground set")
    }

    /// Angle in turns of point `m` of part index `j`.
    pub fn lifted_angle(&self, j: usize, m: usize) -> Position {
        (self.parts[j].0.clone() + Position::from_integer((m as i64 - 1).into()))
            / Position::from_integer((self.d as i64).into())
    }

    pub fn is_valid(&self) -> bool {
        is_noncrossing(&self.lifted())
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Domain(format!("{self} has crossing hulls")))
        }
    }

    /// Reference check on every quadruple of lifted points.
    pub fn is_valid_brute(&self) -> bool {
        is_noncrossing_brute(&self.lifted())
    }

    /// `sum_s (d - #blocks of p(s))`.
    pub fn total_criticality(&self) -> usize {
        self.parts.iter().map(|(_, p)| self.d - p.blocks().len()).sum()
    }

    pub fn is_maximal(&self) -> bool {
        self.d > 0 && self.total_criticality() == self.d - 1
    }

    /// Positionwise refinement.
    pub fn refinement_leq(&self, other: &NcsPartition) -> bool {
        self.d == other.d && self.parts.iter().all(|(s, p)| p.refines(&other.part(s)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for NcsPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .filter(|(_, p)| !p.is_discrete())
            .map(|(s, p)| format!("({})^{p}", format_position(s)))
            .collect();
        if parts.is_empty() {
            write!(f, "discrete({})", self.d)
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for NcsPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
