use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::subset::SubsetMask;

use super::binary::BinaryMatroid;

/// Multigraph on `0..vertex_count`; loops and parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > 64 {
            return Err(Error::TooManyColumns { got: edges.len() });
        }
        for &(u, v) in &edges {
            let vertex = u.max(v);
            if vertex >= vertex_count {
                return Err(Error::VertexOutOfRange { vertex, vertex_count });
            }
        }
        Ok(Graph { vertex_count, edges })
    }

    pub fn complete(v: usize) -> Result<Self> {
        let edges = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        Self::new(v, edges)
    }

    pub fn cycle(v: usize) -> Result<Self> {
        Self::new(v, (0..v).map(|a| (a, (a + 1) % v)).collect())
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph { vertex_count: 10, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// `V E` on the first line, then `E` lines `u v`. Lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let nums: Vec<usize> = l
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse { line, msg: format!("bad integer {t:?}") }))
                .collect::<Result<_>>()?;
            match nums[..] {
                [a, b] => Ok((a, b)),
                _ => Err(Error::Parse { line, msg: format!("expected two integers, got {}", nums.len()) }),
            }
        };
        let (line, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
        let (v, e) = pair(line, header)?;
        let edges = lines.map(|(line, l)| pair(line, l)).collect::<Result<Vec<_>>>()?;
        if edges.len() != e {
            return Err(Error::Parse { line: text.lines().count(), msg: format!("expected {e} edges, got {}", edges.len()) });
        }
        Self::new(v, edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

/// Components of `(V, S)`, isolated vertices included.
pub fn connected_components(g: &Graph, s: SubsetMask) -> usize {
    let mut dsu = Dsu::new(g.vertex_count);
    for i in s.indices().filter(|&i| i < g.edges.len()) {
        let (u, v) = g.edges[i];
        dsu.union(u, v);
    }
    dsu.components
}

/// Vertex-edge incidence matrix over GF(2); a loop gives a zero column.
pub fn graphic_matroid(g: &Graph) -> BinaryMatroid {
    let mut rows = vec![0u64; g.vertex_count];
    for (i, &(u, v)) in g.edges.iter().enumerate() {
        rows[u] ^= 1 << i;
        rows[v] ^= 1 << i;
    }
    let matrix = BitMatrix::new(g.edges.len(), rows).expect("edge count checked at construction");
    BinaryMatroid::new(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroids::matroid_rank;

    #[test]
    fn component_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(connected_components(&k3, SubsetMask::EMPTY), 3);
        assert_eq!(connected_components(&k3, SubsetMask::from_indices([0])), 2);
        assert_eq!(connected_components(&k3, SubsetMask::from_indices([0, 1])), 1);
    }

    #[test]
    fn graphic_rank_examples() {
        let edge = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(matroid_rank(&graphic_matroid(&edge), SubsetMask::full(1)), 1);
        let lp = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(matroid_rank(&graphic_matroid(&lp), SubsetMask::full(1)), 0);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(graphic_matroid(&k3).k(), 2);
    }

    #[test]
    fn rank_identity_petersen() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        let m = graphic_matroid(&g);
        for s in SubsetMask::all(15) {
            assert_eq!(matroid_rank(&m, s), 10 - connected_components(&g, s));
        }
    }

    #[test]
    fn parse_roundtrip_and_errors() {
        let g = Graph::parse("# multigraph\n3 4\n0 1\n1 2\n1 2\n2 2\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(matches!(Graph::parse("2 1\n0 2\n"), Err(Error::VertexOutOfRange { vertex: 2, .. })));
        assert!(matches!(Graph::parse("2 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(Graph::parse("2 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
    }
}
