//! Finite graded posets stored as Hasse diagrams.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite graded poset in canonical order: elements sorted by rank, then
/// by a caller-supplied key. Covers are `(lower, upper)` index pairs.
#[derive(Debug, Clone)]
pub struct GradedPoset<T: Clone + Eq + Hash> {
    items: Vec<T>,
    ranks: Vec<usize>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash + Ord + Debug> GradedPoset<T> {
    /// Builds the poset from `(element, rank)` entries and cover pairs given
    /// as `(lower, upper)` elements. Entries are sorted by `(rank, key)`, with
    /// the element itself breaking ties. Duplicate covers are collapsed.
    pub fn from_entries<K: Ord>(
        mut entries: Vec<(T, usize)>,
        key: impl Fn(&T) -> K,
        covers: impl IntoIterator<Item = (T, T)>,
    ) -> Result<Self> {
        entries.sort_by(|(x, rx), (y, ry)| {
            rx.cmp(ry).then_with(|| key(x).cmp(&key(y))).then_with(|| x.cmp(y))
        });
        entries.dedup_by(|a, b| a.0 == b.0);
        let mut index = HashMap::with_capacity(entries.len());
        for (i, (x, _)) in entries.iter().enumerate() {
            if index.insert(x.clone(), i).is_some() {
                return Err(Error::Invariant(format!("{x:?} listed with two ranks")));
            }
        }
        let (items, ranks): (Vec<T>, Vec<usize>) = entries.into_iter().unzip();
        let mut pairs = HashSet::new();
        for (lo, hi) in covers {
            let (Some(&i), Some(&j)) = (index.get(&lo), index.get(&hi)) else {
                return Err(Error::Invariant(format!("cover {lo:?} < {hi:?} leaves the poset")));
            };
            if ranks[i] + 1 != ranks[j] {
                return Err(Error::Invariant(format!(
                    "cover {lo:?} < {hi:?} does not raise rank by one"
                )));
            }
            pairs.insert((i, j));
        }
        let mut covers: Vec<(usize, usize)> = pairs.into_iter().collect();
        covers.sort_unstable();
        let mut up = vec![Vec::new(); items.len()];
        let mut down = vec![Vec::new(); items.len()];
        for &(i, j) in &covers {
            up[i].push(j);
            down[j].push(i);
        }
        Ok(Self {
            items,
            ranks,
            covers,
            up,
            down,
            index,
        })
    }
}

impl<T: Clone + Eq + Hash> GradedPoset<T> {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[T] {
        &self.items
    }

    pub fn item(&self, i: usize) -> &T {
        &self.items[i]
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Number of elements in each rank.
    pub fn rank_profile(&self) -> Vec<usize> {
        let mut profile = vec![0; self.height().map_or(0, |h| h + 1)];
        for &r in &self.ranks {
            profile[r] += 1;
        }
        profile
    }

    pub fn height(&self) -> Option<usize> {
        self.ranks.iter().copied().max()
    }

    pub fn indices_of_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.ranks[i] == r)
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    /// Everything at or above `i`.
    pub fn upper_set(&self, i: usize) -> Vec<usize> {
        self.closure(i, &self.up)
    }

    /// Everything at or below `i`.
    pub fn lower_set(&self, i: usize) -> Vec<usize> {
        self.closure(i, &self.down)
    }

    fn closure(&self, i: usize, adj: &[Vec<usize>]) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([i]);
        seen[i] = true;
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        if self.ranks[i] >= self.ranks[j] {
            return false;
        }
        let mut seen = HashSet::from([i]);
        let mut queue = VecDeque::from([i]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.up[x] {
                if y == j {
                    return true;
                }
                if self.ranks[y] < self.ranks[j] && seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    /// The closed interval `[i, j]`, empty unless `i <= j`.
    pub fn closed_interval(&self, i: usize, j: usize) -> Vec<usize> {
        if !self.leq(i, j) {
            return Vec::new();
        }
        let above: HashSet<usize> = self.upper_set(i).into_iter().collect();
        self.lower_set(j)
            .into_iter()
            .filter(|x| above.contains(x))
            .collect()
    }

    /// Whether `[i, j]` is a Boolean lattice: `C(m, r)` elements at relative
    /// rank `r`, and every pair has a unique join and meet inside it.
    pub fn interval_is_boolean(&self, i: usize, j: usize) -> bool {
        let iv = self.closed_interval(i, j);
        if iv.is_empty() {
            return false;
        }
        let m = self.ranks[j] - self.ranks[i];
        let mut profile = vec![0usize; m + 1];
        for &x in &iv {
            profile[self.ranks[x] - self.ranks[i]] += 1;
        }
        if (0..=m).any(|r| profile[r] != binomial(m, r)) {
            return false;
        }
        let bounds = |x: usize, y: usize, upper: bool| -> Vec<usize> {
            iv.iter()
                .copied()
                .filter(|&z| {
                    if upper {
                        self.leq(x, z) && self.leq(y, z)
                    } else {
                        self.leq(z, x) && self.leq(z, y)
                    }
                })
                .collect()
        };
        for (a, &x) in iv.iter().enumerate() {
            for &y in &iv[a + 1..] {
                for upper in [true, false] {
                    let b = bounds(x, y, upper);
                    let extreme = b.iter().filter(|&&z| {
                        b.iter().all(|&w| if upper { self.leq(z, w) } else { self.leq(w, z) })
                    });
                    if extreme.count() != 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All nonempty chains, as ascending index lists. Errors once more than
    /// `limit` chains would be produced.
    pub fn nonempty_chains(&self, limit: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = (0..self.len()).rev().map(|i| vec![i]).collect();
        let above: Vec<Vec<usize>> = (0..self.len())
            .map(|i| self.upper_set(i).into_iter().filter(|&j| j != i).collect())
            .collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().expect("nonempty");
            for &next in above[last].iter().rev() {
                let mut longer = chain.clone();
                longer.push(next);
                stack.push(longer);
            }
            out.push(chain);
            if out.len() > limit {
                return Err(Error::Resource {
                    what: "chain enumeration".into(),
                    limit,
                });
            }
        }
        Ok(out)
    }

    /// Number of maximal chains from the minimal to the maximal elements,
    /// by dynamic programming over covers.
    pub fn maximal_chain_count(&self) -> u128 {
        let mut ways = vec![0u128; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| self.ranks[i]);
        for &i in &order {
            if self.down[i].is_empty() {
                ways[i] = 1;
            } else {
                ways[i] = self.down[i].iter().map(|&j| ways[j]).sum();
            }
        }
        self.maximal().iter().map(|&i| ways[i]).sum()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
