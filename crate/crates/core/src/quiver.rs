//! Coloured quivers of type A: a path graph on k vertices, each vertex
//! coloured even (white) or odd (crossed), each edge oriented. Vertices are
//! indexed 0..k internally and printed 1-based.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::parity::Parity;

/// An oriented edge of the underlying A_k path. Adjacent vertices only.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
}

impl Edge {
    /// The smaller endpoint: edge `e` sits between `slot(e)` and `slot(e)+1`.
    pub fn slot(self) -> usize {
        self.source.min(self.target)
    }

    pub fn reverse(self) -> Edge {
        Edge {
            source: self.target,
            target: self.source,
        }
    }

    pub fn is_incident(self, v: usize) -> bool {
        self.source == v || self.target == v
    }

    pub fn other(self, v: usize) -> usize {
        if self.source == v {
            self.target
        } else {
            self.source
        }
    }
}

/// Coloured quiver of type A_k: colours per vertex, one oriented edge per
/// adjacent pair, edges stored in slot order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ColouredQuiver {
    pub colours: Vec<Parity>,
    pub edges: Vec<Edge>,
}

impl ColouredQuiver {
    pub fn new(colours: Vec<Parity>, edges: Vec<Edge>) -> Result<Self, Error> {
        let k = colours.len();
        if k == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        if edges.len() != k - 1 {
            return Err(Error::InvalidQuiver(format!(
                "expected {} edges for {} vertices, got {}",
                k - 1,
                k,
                edges.len()
            )));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.slot() != i || e.source.max(e.target) != i + 1 || e.source == e.target {
                return Err(Error::InvalidQuiver(format!(
                    "edge {} must join vertices {} and {}",
                    i,
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(ColouredQuiver { colours, edges })
    }

    /// Build from an orientation string: character `j` is `>` for the arrow
    /// j→j+1 or `<` for j+1→j.
    pub fn from_orient_str(colours: Vec<Parity>, orient: &str) -> Result<Self, Error> {
        let k = colours.len();
        if orient.chars().count() != k.saturating_sub(1) {
            return Err(Error::InvalidQuiver(format!(
                "orientation string must have {} characters",
                k.saturating_sub(1)
            )));
        }
        let mut edges = Vec::new();
        for (j, ch) in orient.chars().enumerate() {
            let e = match ch {
                '>' => Edge {
                    source: j,
                    target: j + 1,
                },
                '<' => Edge {
                    source: j + 1,
                    target: j,
                },
                _ => {
                    return Err(Error::InvalidQuiver(format!(
                        "orientation character must be '<' or '>', got {:?}",
                        ch
                    )))
                }
            };
            edges.push(e);
        }
        ColouredQuiver::new(colours, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, v: usize) -> Parity {
        self.colours[v]
    }

    pub fn edges_at(&self, v: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.is_incident(v))
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges_at(v).map(|e| e.other(v)).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.edges_at(v).all(|e| e.target == v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.edges_at(v).all(|e| e.source == v)
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.num_vertices()).filter(|&v| self.is_source(v)).collect()
    }

    /// Reflect the quiver at `v`: reverse the edges incident to `v`, and if
    /// `v` is odd-coloured, flip the colours of its neighbours.
    pub fn reflect(&self, v: usize) -> ColouredQuiver {
        let mut q = self.clone();
        for e in q.edges.iter_mut() {
            if e.is_incident(v) {
                *e = e.reverse();
            }
        }
        if self.colour(v) == Parity::Odd {
            for u in self.neighbours(v) {
                q.colours[u] = q.colours[u].flip();
            }
        }
        q
    }

    /// Reflect at a vertex, requiring it to be a sink.
    pub fn reflect_at_sink(&self, v: usize) -> Result<ColouredQuiver, Error> {
        if !self.is_sink(v) {
            return Err(Error::NotASink { vertex: v });
        }
        Ok(self.reflect(v))
    }

    /// Reflect at a vertex, requiring it to be a source.
    pub fn reflect_at_source(&self, v: usize) -> Result<ColouredQuiver, Error> {
        if !self.is_source(v) {
            return Err(Error::NotASource { vertex: v });
        }
        Ok(self.reflect(v))
    }

    /// Vertices in an order where every arrow goes from later to earlier
    /// (sinks first), smallest index breaking ties. Used for the Coxeter
    /// element and for admissible sink sequences.
    pub fn sink_order(&self) -> Vec<usize> {
        let k = self.num_vertices();
        let mut remaining: Vec<bool> = vec![true; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            let v = (0..k)
                .find(|&v| {
                    remaining[v]
                        && self
                            .edges_at(v)
                            .all(|e| e.target == v || !remaining[e.other(v)])
                })
                .expect("acyclic quiver always has a sink");
            remaining[v] = false;
            order.push(v);
        }
        order
    }

    /// Height function with h(target) = h(source) + 1 along every arrow,
    /// normalised so the minimum height is 0.
    pub fn height_function(&self) -> Vec<i64> {
        let k = self.num_vertices();
        let mut h = vec![0i64; k];
        for e in &self.edges {
            let (lo, hi) = (e.slot(), e.slot() + 1);
            // walk left to right; fix h[hi] relative to h[lo]
            h[hi] = if e.source == lo { h[lo] + 1 } else { h[lo] - 1 };
        }
        let min = *h.iter().min().unwrap();
        for x in h.iter_mut() {
            *x -= min;
        }
        h
    }

    /// Orientation determined by a height function: the arrow on each edge
    /// points from the lower to the higher vertex. Heights of adjacent
    /// vertices must differ by exactly 1.
    pub fn from_heights(colours: Vec<Parity>, heights: &[i64]) -> Result<Self, Error> {
        if heights.len() != colours.len() {
            return Err(Error::InvalidQuiver(
                "height function length must match vertex count".into(),
            ));
        }
        let mut edges = Vec::new();
        for j in 0..heights.len().saturating_sub(1) {
            let e = match heights[j + 1] - heights[j] {
                1 => Edge {
                    source: j,
                    target: j + 1,
                },
                -1 => Edge {
                    source: j + 1,
                    target: j,
                },
                d => {
                    return Err(Error::InvalidQuiver(format!(
                        "adjacent heights must differ by 1, got {} between vertices {} and {}",
                        d,
                        j + 1,
                        j + 2
                    )))
                }
            };
            edges.push(e);
        }
        ColouredQuiver::new(colours, edges)
    }

    /// Orientation string as accepted by `from_orient_str`.
    pub fn orient_str(&self) -> String {
        self.edges
            .iter()
            .map(|e| if e.source == e.slot() { '>' } else { '<' })
            .collect()
    }

    /// One-line picture, e.g. `○←⊗←○` (or `o<-x<-o` in ASCII).
    pub fn render(&self, ascii: bool) -> String {
        let mut s = String::new();
        for v in 0..self.num_vertices() {
            s.push_str(match (self.colour(v), ascii) {
                (Parity::Even, false) => "○",
                (Parity::Odd, false) => "⊗",
                (Parity::Even, true) => "o",
                (Parity::Odd, true) => "x",
            });
            if v + 1 < self.num_vertices() {
                let forward = self.edges[v].source == v;
                s.push_str(match (forward, ascii) {
                    (true, false) => "→",
                    (false, false) => "←",
                    (true, true) => "->",
                    (false, true) => "<-",
                });
            }
        }
        s
    }

    /// Graphviz rendering with colours as node shapes.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n  rankdir=LR;\n");
        for v in 0..self.num_vertices() {
            let shape = match self.colour(v) {
                Parity::Even => "circle",
                Parity::Odd => "circle, style=dashed",
            };
            s.push_str(&format!("  v{} [label=\"{}\", shape={}];\n", v + 1, v + 1, shape));
        }
        for e in &self.edges {
            s.push_str(&format!("  v{} -> v{};\n", e.source + 1, e.target + 1));
        }
        s.push_str("}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::{Even, Odd};

    fn q(colours: &[Parity], orient: &str) -> ColouredQuiver {
        ColouredQuiver::from_orient_str(colours.to_vec(), orient).unwrap()
    }

    #[test]
    fn sinks_and_sources() {
        // o <- x <- o : vertex 0 is the only sink, vertex 2 the only source
        let quiver = q(&[Even, Odd, Even], "<<");
        assert_eq!(quiver.sinks(), vec![0]);
        assert_eq!(quiver.sources(), vec![2]);

        let alt = q(&[Even, Even, Even], "><");
        assert_eq!(alt.sinks(), vec![1]);
        assert_eq!(alt.sources(), vec![0, 2]);
    }

    #[test]
    fn reflect_even_vertex_keeps_colours() {
        let quiver = q(&[Even, Even, Even], "<<");
        let r = quiver.reflect_at_sink(0).unwrap();
        assert_eq!(r.orient_str(), "><");
        assert_eq!(r.colours, quiver.colours);
        // reflecting twice restores the orientation
        assert_eq!(r.reflect(0), quiver);
    }

    #[test]
    fn reflect_odd_vertex_flips_neighbour_colours() {
        let quiver = q(&[Even, Odd, Even], "><");
        let r = quiver.reflect_at_sink(1).unwrap();
        assert_eq!(r.orient_str(), "<>");
        assert_eq!(r.colours, vec![Odd, Odd, Odd]);
        assert_eq!(r.reflect(1), quiver);
    }

    #[test]
    fn reflect_guards() {
        let quiver = q(&[Even, Even], ">");
        assert!(quiver.reflect_at_sink(0).is_err());
        assert!(quiver.reflect_at_source(1).is_err());
        assert!(quiver.reflect_at_sink(1).is_ok());
        assert!(quiver.reflect_at_source(0).is_ok());
    }

    #[test]
    fn height_round_trip() {
        let quiver = q(&[Even, Odd, Even, Odd], "<><");
        let h = quiver.height_function();
        assert_eq!(h, vec![1, 0, 1, 0]);
        let back = ColouredQuiver::from_heights(quiver.colours.clone(), &h).unwrap();
        assert_eq!(back, quiver);

        // arrows point towards increasing height
        for e in &quiver.edges {
            assert_eq!(h[e.target], h[e.source] + 1);
        }
    }

    #[test]
    fn sink_order_is_admissible() {
        let quiver = q(&[Even, Even, Even, Even], ">><");
        let order = quiver.sink_order();
        assert_eq!(order.len(), 4);
        // each vertex is a sink once all earlier ones are removed
        let mut current = quiver.clone();
        for &v in &order {
            assert!(current.is_sink(v), "vertex {} not a sink in order", v);
            current = current.reflect(v);
        }
    }

    #[test]
    fn render_examples() {
        let quiver = q(&[Even, Odd, Even], "<<");
        assert_eq!(quiver.render(false), "○←⊗←○");
        assert_eq!(quiver.render(true), "o<-x<-o");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ColouredQuiver::from_orient_str(vec![Even, Even], "").is_err());
        assert!(ColouredQuiver::from_orient_str(vec![Even, Even], "v").is_err());
        assert!(ColouredQuiver::from_heights(vec![Even, Even], &[0, 2]).is_err());
    }
}
