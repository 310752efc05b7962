use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_posets::{circular_from_linear, enumerate_linear};
use crate::marked_group::{Group, MarkedGroup};

/// Cover degree `k(h)` of one component in a rank stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverDegree {
    pub h: String,
    pub k: usize,
}

/// Cell counts, face incidences and Euler characteristic of a finite
/// Δ-complex. Cells carry global ids in canonical `(dimension, text)` order;
/// `faces` lists `[cell, face, position]` where `position` is the index of
/// the dropped vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexSummary {
    pub dims: Vec<usize>,
    pub faces: Vec<[usize; 3]>,
    pub euler: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<CoverDegree>>,
    /// For quotient complexes: the image of each cell of the parent complex.
    #[serde(skip)]
    pub identification: Option<Vec<usize>>,
}

impl ComplexSummary {
    /// `cell_dims` must be sorted.
    pub fn new(cell_dims: &[usize], mut faces: Vec<[usize; 3]>) -> Result<Self> {
        if cell_dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invariant("cells not sorted by dimension".into()));
        }
        let top = cell_dims.last().map_or(0, |&d| d + 1);
        let mut dims = vec![0; top];
        for &d in cell_dims {
            dims[d] += 1;
        }
        for &[c, f, p] in &faces {
            if c >= cell_dims.len() || f >= cell_dims.len() || cell_dims[f] + 1 != cell_dims[c] || p > cell_dims[c] {
                return Err(Error::Invariant(format!("bad face record [{c}, {f}, {p}]")));
            }
        }
        faces.sort_unstable();
        let euler = dims
            .iter()
            .enumerate()
            .map(|(j, &n)| if j % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum();
        Ok(Self {
            dims,
            faces,
            euler,
            covers: None,
            identification: None,
        })
    }

    pub fn cell_count(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.dims.len().checked_sub(1)
    }

    /// Vertices of every edge, as `(edge, tail, head)` in global ids.
    fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut ends: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
        let n0 = self.dims.first().copied().unwrap_or(0);
        for &[c, f, p] in &self.faces {
            if c >= n0 && f < n0 && p <= 1 {
                ends.entry(c).or_default()[p] = f;
            }
        }
        // Dropping vertex 1 leaves the tail, dropping vertex 0 the head.
        ends.into_iter().map(|(e, [head, tail])| (e, tail, head)).collect()
    }

    /// Connected components as sets of vertex ids.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n0 = self.dims.first().copied().unwrap_or(0);
        let mut parent: Vec<usize> = (0..n0).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for (_, t, h) in self.edges() {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n0 {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Components of the `j`-skeleton, for each `j`.
    pub fn components_by_dimension(&self) -> Vec<usize> {
        let c = self.components().len();
        self.dims
            .iter()
            .enumerate()
            .map(|(j, &n)| if j == 0 { n } else { c })
            .collect()
    }

    /// For a 1-dimensional complex: the length of each component if every
    /// component is a circle.
    pub fn circle_lengths(&self) -> Option<Vec<usize>> {
        if self.dims.len() != 2 {
            return None;
        }
        let mut degree = vec![0; self.dims[0]];
        let edges = self.edges();
        for &(_, t, h) in &edges {
            degree[t] += 1;
            degree[h] += 1;
        }
        if degree.iter().any(|&d| d != 2) {
            return None;
        }
        Some(self.components().iter().map(|c| c.len()).collect())
    }

    /// `1 vertex, 4 edges, 3 triangles, χ=0`.
    pub fn counts_text(&self) -> String {
        let mut parts: Vec<String> = self
            .dims
            .iter()
            .enumerate()
            .map(|(j, &n)| {
                let noun = match (j, n == 1) {
                    (0, true) => "vertex".to_string(),
                    (0, false) => "vertices".to_string(),
                    (1, true) => "edge".to_string(),
                    (1, false) => "edges".to_string(),
                    (2, true) => "triangle".to_string(),
                    (2, false) => "triangles".to_string(),
                    (j, true) => format!("{j}-simplex"),
                    (j, false) => format!("{j}-simplices"),
                };
                format!("{n} {noun}")
            })
            .collect();
        parts.push(format!("χ={}", self.euler));
        parts.join(", ")
    }

    /// `1 component, circle of length 3`.
    pub fn shape_text(&self) -> String {
        let comps = self.components();
        let head = format!(
            "{} component{}",
            comps.len(),
            if comps.len() == 1 { "" } else { "s" }
        );
        match self.circle_lengths() {
            Some(lengths) => {
                let circles: Vec<String> = lengths.iter().map(|n| format!("circle of length {n}")).collect();
                format!("{head}, {}", circles.join(", "))
            }
            None => head,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

/// `O_g`: cells are linear factorizations, faces are merges.
pub fn build_order_complex<G: Group>(mg: &MarkedGroup<G>, g: &G::Elem) -> Result<ComplexSummary> {
    let cells = enumerate_linear(mg, g)?;
    let dims: Vec<usize> = (0..cells.len()).map(|i| cells.rank(i)).collect();
    let mut faces = Vec::new();
    for (c, f) in cells.items().iter().enumerate() {
        if f.k() == 0 {
            continue;
        }
        for p in 0..=f.k() {
            let face = f.merge(mg, p)?;
            let id = cells
                .index_of(&face)
                .ok_or_else(|| Error::Invariant(format!("face {face:?} missing")))?;
            faces.push([c, id, p]);
        }
    }
    ComplexSummary::new(&dims, faces)
}

/// `K_g`: cells are circular factorizations. Faces are read off the
/// canonical representative, and every other representative is checked to
/// produce the same faces.
pub fn build_interval_complex<G: Group>(mg: &MarkedGroup<G>, g: &G::Elem) -> Result<ComplexSummary> {
    let linear = enumerate_linear(mg, g)?;
    let cells = circular_from_linear(mg, &linear)?;
    let dims: Vec<usize> = (0..cells.len()).map(|i| cells.rank(i)).collect();
    let mut faces = Vec::new();
    for (c, cell) in cells.items().iter().enumerate() {
        if cell.rank() == 0 {
            continue;
        }
        let rep = cell.canonical(mg);
        for p in 0..=rep.k() {
            let face = rep.merge(mg, p)?.circularize(mg);
            let id = cells
                .index_of(&face)
                .ok_or_else(|| Error::Invariant(format!("face {face:?} missing")))?;
            faces.push([c, id, p]);
        }
    }
    let mut identification = Vec::with_capacity(linear.len());
    for f in linear.items() {
        let image = f.circularize(mg);
        let c = cells.index_of(&image).expect("image of q");
        identification.push(c);
        if f.k() == 0 {
            continue;
        }
        for p in 0..=f.k() {
            let face = f.merge(mg, p)?.circularize(mg);
            let expected = cells.index_of(&face).expect("image of q");
            if !faces.contains(&[c, expected, p]) {
                return Err(Error::Invariant(format!(
                    "face {p} of {f:?} is not glued consistently"
                )));
            }
        }
    }
    let mut summary = ComplexSummary::new(&dims, faces)?;
    summary.identification = Some(identification);
    Ok(summary)
}
