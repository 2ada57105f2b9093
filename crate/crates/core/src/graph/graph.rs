use serde::{Deserialize, Serialize};

use super::GraphError;
use crate::linalg::DenseMatrix;

/// Simple undirected graph. Pair `(i, j)`, `i < j`, lives at bit
/// `j(j−1)/2 + i`, which is also the graph6 bit order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    bits: Vec<u64>,
}

#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    // largest j with j(j−1)/2 <= idx
    let mut j = (((8 * idx + 1) as f64).sqrt() as usize).div_ceil(2);
    while j * (j - 1) / 2 > idx {
        j -= 1;
    }
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}

pub fn pair_count(order: usize) -> usize {
    order * order.saturating_sub(1) / 2
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self {
            order,
            bits: vec![0; pair_count(order).div_ceil(64)],
        }
    }

    pub fn complete(order: usize) -> Self {
        Self::empty(order).complement()
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    order,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Graph whose pair bitset is the low `n(n−1)/2` bits of `code`.
    pub fn from_code(order: usize, code: u64) -> Self {
        let pairs = pair_count(order);
        assert!(pairs <= 64, "code form needs at most 64 pairs");
        let mut g = Self::empty(order);
        if pairs > 0 {
            let mask = if pairs == 64 {
                u64::MAX
            } else {
                (1u64 << pairs) - 1
            };
            g.bits[0] = code & mask;
        }
        g
    }

    /// Bitset as an integer; `None` when the graph has more than 64 pairs.
    pub fn code(&self) -> Option<u64> {
        match self.bits.len() {
            0 => Some(0),
            1 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pair_count(&self) -> usize {
        pair_count(self.order)
    }

    #[inline]
    pub fn pair_bit(&self, idx: usize) -> bool {
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    #[inline]
    pub fn toggle_pair(&mut self, idx: usize) {
        self.bits[idx / 64] ^= 1 << (idx % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        self.pair_bit(pair_index(u.min(v), u.max(v)))
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v && u < self.order && v < self.order);
        let idx = pair_index(u.min(v), u.max(v));
        if self.pair_bit(idx) != present {
            self.toggle_pair(idx);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(i, j)` with `i < j`, in bitset order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.pair_count())
            .filter(|&idx| self.pair_bit(idx))
            .map(pair_from_index)
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for (i, j) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    pub fn complement(&self) -> Self {
        let pairs = self.pair_count();
        let mut bits: Vec<u64> = self.bits.iter().map(|w| !w).collect();
        if !pairs.is_multiple_of(64) {
            if let Some(last) = bits.last_mut() {
                *last &= (1u64 << (pairs % 64)) - 1;
            }
        }
        Self {
            order: self.order,
            bits,
        }
    }

    /// Neighbourhoods as bitsets over vertices.
    pub fn neighbour_sets(&self) -> Vec<Vec<u64>> {
        let words = self.order.div_ceil(64);
        let mut rows = vec![vec![0u64; words]; self.order];
        for (i, j) in self.edges() {
            rows[i][j / 64] |= 1 << (j % 64);
            rows[j][i / 64] |= 1 << (i % 64);
        }
        rows
    }

    /// Symmetric (0,1) matrix with zero diagonal. Panics for the null graph.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut entries = vec![0.0; self.order * self.order];
        for (i, j) in self.edges() {
            entries[i * self.order + j] = 1.0;
            entries[j * self.order + i] = 1.0;
        }
        DenseMatrix::new(self.order, self.order, entries).expect("order must be positive")
    }

    /// Reads an adjacency matrix: square, symmetric, zero diagonal, entries exactly 0 or 1.
    pub fn from_adjacency(m: &DenseMatrix) -> Result<Self, GraphError> {
        if !m.is_square() {
            return Err(GraphError::NotAdjacency("matrix is not square".into()));
        }
        let n = m.rows();
        let mut g = Self::empty(n);
        for i in 0..n {
            if m.get(i, i) != 0.0 {
                return Err(GraphError::NotAdjacency(format!("nonzero diagonal at {i}")));
            }
            for j in i + 1..n {
                let (a, b) = (m.get(i, j), m.get(j, i));
                if a != b || (a != 0.0 && a != 1.0) {
                    return Err(GraphError::NotAdjacency(format!(
                        "entry ({i}, {j}) is not a symmetric 0/1 value"
                    )));
                }
                if a == 1.0 {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut g = Self::empty(self.order);
        for (i, j) in self.edges() {
            g.set_edge(perm[i], perm[j], true);
        }
        g
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.order,
            edges: self.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(list.n, &edges)
    }

    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        let n = self.order;
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let pairs = self.pair_count();
        for chunk in 0..pairs.div_ceil(6) {
            let mut byte = 0u8;
            for b in 0..6 {
                let idx = chunk * 6 + b;
                byte <<= 1;
                if idx < pairs && self.pair_bit(idx) {
                    byte |= 1;
                }
            }
            out.push(byte + 63);
        }
        String::from_utf8(out).expect("graph6 output is ASCII")
    }

    pub fn from_graph6(text: &str) -> Result<Self, GraphError> {
        let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
        let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(GraphError::Graph6(format!("invalid byte 0x{b:02x}")));
        }
        let take = |from: usize, count: usize| -> Result<usize, GraphError> {
            let slice = bytes
                .get(from..from + count)
                .ok_or_else(|| GraphError::Graph6("truncated order field".into()))?;
            Ok(slice
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
        };
        let (n, body) = match bytes {
            [] => return Err(GraphError::Graph6("empty input".into())),
            [126, 126, ..] => (take(2, 6)?, 8),
            [126, ..] => (take(1, 3)?, 4),
            [b, ..] => ((b - 63) as usize, 1),
        };
        let pairs = pair_count(n);
        let needed = pairs.div_ceil(6);
        let data = &bytes[body..];
        if data.len() != needed {
            return Err(GraphError::Graph6(format!(
                "expected {needed} data bytes for order {n}, found {}",
                data.len()
            )));
        }
        let mut g = Self::empty(n);
        for (chunk, &b) in data.iter().enumerate() {
            let v = b - 63;
            for bit in 0..6 {
                let idx = chunk * 6 + bit;
                if v >> (5 - bit) & 1 == 1 {
                    if idx >= pairs {
                        return Err(GraphError::Graph6("nonzero padding bits".into()));
                    }
                    g.toggle_pair(idx);
                }
            }
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

/// JSON edge-list form `{"n": int, "edges": [[i, j], ...]}`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Serialises as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        Graph::from_graph6(&s).map_err(serde::de::Error::custom)
    }
}

/// The cycle `0 − 1 − ⋯ − (n−1) − 0`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle needs n >= 3")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).expect("valid petersen")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing_roundtrip() {
        for j in 1..40 {
            for i in 0..j {
                assert_eq!(pair_from_index(pair_index(i, j)), (i, j));
            }
        }
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement(), Graph::empty(4));
        let g = cycle(9);
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 36 - 9);
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(Graph::empty(3).adjacency_matrix(), DenseMatrix::zeros(3, 3));
        assert_eq!(
            Graph::complete(2).adjacency_matrix().entries(),
            &[0.0, 1.0, 1.0, 0.0]
        );
        let c5 = cycle(5).adjacency_matrix();
        assert_eq!(c5.row(0), &[0.0, 1.0, 0.0, 0.0, 1.0]);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(c5.get(i, j), c5.get(0, (j + 5 - i) % 5));
            }
        }
        assert_eq!(Graph::from_adjacency(&c5).unwrap(), cycle(5));
    }

    #[test]
    fn graph6_known_vector() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(Graph::from_graph6("DQc").unwrap(), g);
        assert_eq!(petersen().to_graph6(), "IheA@GUAo");
        assert_eq!(Graph::complete(4).to_graph6(), "C~");
        assert_eq!(Graph::empty(1).to_graph6(), "@");
    }

    #[test]
    fn graph6_large_order_header() {
        let g = cycle(100);
        let s = g.to_graph6();
        assert!(s.starts_with('~'));
        assert_eq!(Graph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("D").is_err());
        assert!(Graph::from_graph6("DQc?").is_err());
        assert!(Graph::from_graph6("A!").is_err());
        // n = 2 has one pair; the remaining five bits must be zero
        assert!(Graph::from_graph6("A_").is_ok());
        assert!(Graph::from_graph6("Ao").is_err());
    }

    #[test]
    fn edge_list_json() {
        let g = path(3);
        let json = serde_json::to_string(&g.to_edge_list()).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: EdgeList = serde_json::from_str(&json).unwrap();
        assert_eq!(Graph::from_edge_list(&back).unwrap(), g);
        let bad = EdgeList {
            n: 2,
            edges: vec![[0, 2]],
        };
        assert!(Graph::from_edge_list(&bad).is_err());
    }
}
