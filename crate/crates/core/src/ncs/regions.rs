use crate::error::{Error, Result};

use super::NcsPartition;

/// Complementary regions of a noncrossing partition of the circle and its
/// dual bipartite graph: one black vertex per nontrivial hull, one white
/// vertex per region, one edge per hull side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    /// Regions found by walking the boundary of the disk.
    pub count: usize,
    /// `edges - black + 1`, valid once the dual graph is known to be a tree.
    pub euler_count: usize,
    pub black: usize,
    /// `(black vertex, white vertex)` pairs.
    pub edges: Vec<(usize, usize)>,
}

/// Walks the boundary: the region left of the arc `p -> p+1` continues
/// along the hull side from `p+1` back to the previous point of its block,
/// then along the arc leaving that point.
pub fn complementary_regions(p: &NcsPartition) -> Result<Regions> {
    if !p.is_valid() {
        return Err(Error::Domain("regions are defined for noncrossing partitions".into()));
    }
    let lifted = p.lifted();
    let n = lifted.ground();
    let mut prev = vec![0; n];
    for block in lifted.blocks() {
        for (i, &x) in block.iter().enumerate() {
            prev[block[(i + 1) % block.len()] - 1] = x - 1;
        }
    }
    let mut region_of_arc = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if region_of_arc[start] != usize::MAX {
            continue;
        }
        let mut arc = start;
        while region_of_arc[arc] == usize::MAX {
            region_of_arc[arc] = count;
            arc = prev[(arc + 1) % n];
        }
        if arc != start {
            return Err(Error::Invariant("boundary walk did not close up".into()));
        }
        count += 1;
    }
    if n == 0 {
        count = 1;
    }

    let mut edges = Vec::new();
    let mut black = 0;
    for block in lifted.blocks().iter().filter(|b| b.len() > 1) {
        // The side from the previous point of the block to `x` bounds the
        // region of the arc ending at `x`.
        for &x in block {
            let arc = (x - 1 + n - 1) % n;
            edges.push((black, region_of_arc[arc]));
        }
        black += 1;
    }

    // Tree check on black + white vertices.
    let total = black + count;
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(b, w) in &edges {
        let (x, y) = (find(&mut parent, b), find(&mut parent, black + w));
        if x == y {
            return Err(Error::Invariant("dual graph has a cycle".into()));
        }
        parent[x] = y;
    }
    let roots = (0..total).filter(|&v| find(&mut parent, v) == v).count();
    if roots != 1 {
        return Err(Error::Invariant(format!("dual graph has {roots} components")));
    }
    let euler_count = edges.len() + 1 - black;
    Ok(Regions {
        count,
        euler_count,
        black,
        edges,
    })
}
