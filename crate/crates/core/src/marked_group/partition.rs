use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `{1, ..., m}`.
///
/// Canonical form: each block sorted, blocks ordered by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct SetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;
    fn try_from(raw: RawPartition) -> Result<Self> {
        SetPartition::new(raw.ground, raw.blocks)
    }
}

impl From<SetPartition> for RawPartition {
    fn from(p: SetPartition) -> Self {
        RawPartition {
            ground: p.ground,
            blocks: p.blocks,
        }
    }
}

impl SetPartition {
    /// Validates that the blocks are nonempty, disjoint and cover `1..=ground`.
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; ground];
        let mut canon = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            block.sort_unstable();
            for &x in &block {
                if x == 0 || x > ground || seen[x - 1] {
                    return Err(Error::Domain(format!(
                        "point {x} out of range or repeated in a partition of {ground}"
                    )));
                }
                seen[x - 1] = true;
            }
            canon.push(block);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Domain(format!("point {} not covered", missing + 1)));
        }
        canon.sort_unstable();
        Ok(Self {
            ground,
            blocks: canon,
        })
    }

    /// Like [`SetPartition::new`] but points missing from `blocks` become
    /// singletons.
    pub fn from_nontrivial(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut covered = vec![false; ground];
        for &x in blocks.iter().flatten() {
            if x == 0 || x > ground {
                return Err(Error::Domain(format!("point {x} out of range 1..={ground}")));
            }
            covered[x - 1] = true;
        }
        let mut all = blocks;
        all.extend((1..=ground).filter(|&x| !covered[x - 1]).map(|x| vec![x]));
        Self::new(ground, all)
    }

    pub fn singletons(ground: usize) -> Self {
        Self {
            ground,
            blocks: (1..=ground).map(|x| vec![x]).collect(),
        }
    }

    /// Block labels: `labels[i-1]` is the index of the block holding `i`.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.ground];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x - 1] = b;
            }
        }
        labels
    }

    /// Builds a partition from per-point block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = std::collections::HashMap::new();
        for (i, &l) in labels.iter().enumerate() {
            let b = *slot.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i + 1);
        }
        Self::new(labels.len(), blocks).expect("labels define a partition")
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    pub fn is_discrete(&self) -> bool {
        self.blocks.len() == self.ground
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.ground != other.ground {
            return false;
        }
        let labels = other.block_labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&x| labels[x - 1] == labels[b[0] - 1]))
    }

    /// Every set partition of `{1, ..., m}`, via restricted growth strings.
    pub fn all(m: usize) -> Vec<SetPartition> {
        fn grow(prefix: &mut Vec<usize>, max: usize, m: usize, out: &mut Vec<SetPartition>) {
            if prefix.len() == m {
                out.push(SetPartition::from_labels(prefix));
                return;
            }
            for v in 0..=max + 1 {
                prefix.push(v);
                grow(prefix, max.max(v), m, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if m == 0 {
            out.push(SetPartition {
                ground: 0,
                blocks: vec![],
            });
            return out;
        }
        let mut prefix = vec![0];
        grow(&mut prefix, 0, m, &mut out);
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        write!(f, "{{{}}}", blocks.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
