//! Super-representations of coloured quivers: Z₂-graded spaces at vertices
//! and homogeneous edge maps whose degree is forced to p(s(e))+p(t(e)).
//! Provides the parity-change functor P, the splitting X = X′⊕X″, the
//! embedding/forgetful pair G ⊣ F to classical representations, and the
//! graded reflection functors at sinks and sources.

use serde_json::json;

use crate::error::Error;
use crate::linalg::{parity_change, parity_change_map, GradedMap, Matrix, SuperDim};
use crate::parity::Parity;
use crate::quiver::ColouredQuiver;
use crate::rep::Representation;
use crate::scalar::Field;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Minus,
    Plus,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SuperRep<K> {
    pub quiver: ColouredQuiver,
    pub spaces: Vec<SuperDim>,
    pub maps: Vec<GradedMap<K>>,
}

impl<K: Field> SuperRep<K> {
    pub fn new(
        quiver: ColouredQuiver,
        spaces: Vec<SuperDim>,
        maps: Vec<GradedMap<K>>,
    ) -> Result<Self, Error> {
        if spaces.len() != quiver.num_vertices() || maps.len() != quiver.edges.len() {
            return Err(Error::DimensionMismatch {
                context: "super-representation data must match the quiver".into(),
            });
        }
        for (e, f) in quiver.edges.iter().zip(&maps) {
            let degree = quiver.colour(e.source) + quiver.colour(e.target);
            if f.source != spaces[e.source] || f.target != spaces[e.target] || f.degree != degree
            {
                return Err(Error::DimensionMismatch {
                    context: format!(
                        "edge {}->{} needs a degree-{} map {} -> {}",
                        e.source + 1,
                        e.target + 1,
                        degree.as_u8(),
                        spaces[e.source],
                        spaces[e.target]
                    ),
                });
            }
        }
        Ok(SuperRep {
            quiver,
            spaces,
            maps,
        })
    }

    pub fn zero(quiver: ColouredQuiver, spaces: Vec<SuperDim>) -> Result<Self, Error> {
        let maps = quiver
            .edges
            .iter()
            .map(|e| {
                GradedMap::zero(
                    spaces[e.source],
                    spaces[e.target],
                    quiver.colour(e.source) + quiver.colour(e.target),
                )
            })
            .collect();
        SuperRep::new(quiver, spaces, maps)
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|d| d.total()).sum()
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.spaces.iter().map(|d| d.total() as i64).collect()
    }

    /// Total odd dimension mod 2; on indecomposables with homogeneous
    /// spaces this is Σ_i p(X(i)).
    pub fn parity_value(&self) -> Parity {
        Parity::from_u8((self.spaces.iter().map(|d| d.odd).sum::<usize>() % 2) as u8)
    }

    /// One-line picture, e.g. `○^{1|0} ← ⊗^{0|1} ← ○^{0|0}`.
    pub fn render(&self, ascii: bool) -> String {
        let mut s = String::new();
        for v in 0..self.quiver.num_vertices() {
            s.push_str(match (self.quiver.colour(v), ascii) {
                (Parity::Even, false) => "○",
                (Parity::Odd, false) => "⊗",
                (Parity::Even, true) => "o",
                (Parity::Odd, true) => "x",
            });
            s.push_str(&format!("^{{{}}}", self.spaces[v]));
            if v + 1 < self.quiver.num_vertices() {
                let forward = self.quiver.edges[v].source == v;
                s.push_str(match (forward, ascii) {
                    (true, false) => " → ",
                    (false, false) => " ← ",
                    (true, true) => " -> ",
                    (false, true) => " <- ",
                });
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "spaces": self.spaces,
            "maps": self.maps.iter().map(|f| json!({
                "degree": f.degree.as_u8(),
                "matrix": f.matrix().entries_as_strings(),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn direct_sum(&self, rhs: &SuperRep<K>) -> Result<SuperRep<K>, Error> {
        if self.quiver != rhs.quiver {
            return Err(Error::DimensionMismatch {
                context: "direct sum needs a shared quiver".into(),
            });
        }
        let spaces: Vec<SuperDim> = self
            .spaces
            .iter()
            .zip(&rhs.spaces)
            .map(|(a, b)| SuperDim::new(a.even + b.even, a.odd + b.odd))
            .collect();
        // coordinate c of the sum at v: which summand, and which coordinate
        let locate = |v: usize, c: usize| -> (bool, usize) {
            let (a, b, s) = (self.spaces[v], rhs.spaces[v], spaces[v]);
            if c < s.even {
                if c < a.even {
                    (true, c)
                } else {
                    (false, c - a.even)
                }
            } else {
                let o = c - s.even;
                if o < a.odd {
                    (true, a.even + o)
                } else {
                    (false, b.even + o - a.odd)
                }
            }
        };
        let maps = self
            .quiver
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let mat = Matrix::from_fn(
                    spaces[e.target].total(),
                    spaces[e.source].total(),
                    |r, c| {
                        let (rl, rr) = locate(e.target, r);
                        let (cl, cc) = locate(e.source, c);
                        if rl && cl {
                            self.maps[k].matrix()[(rr, cc)].clone()
                        } else if !rl && !cl {
                            rhs.maps[k].matrix()[(rr, cc)].clone()
                        } else {
                            K::zero()
                        }
                    },
                );
                GradedMap::new(spaces[e.source], spaces[e.target], self.maps[k].degree, mat)
            })
            .collect::<Result<Vec<_>, _>>()?;
        SuperRep::new(self.quiver.clone(), spaces, maps)
    }
}

/// The simple super object at vertex `i` with prescribed parity.
pub fn simple_super<K: Field>(quiver: &ColouredQuiver, i: usize, p: Parity) -> SuperRep<K> {
    let mut spaces = vec![SuperDim::new(0, 0); quiver.num_vertices()];
    spaces[i] = match p {
        Parity::Even => SuperDim::new(1, 0),
        Parity::Odd => SuperDim::new(0, 1),
    };
    SuperRep::zero(quiver.clone(), spaces).expect("simple super object is well-formed")
}

/// The parity-change functor: flip every grading, conjugate every map.
pub fn parity_functor<K: Field>(x: &SuperRep<K>) -> SuperRep<K> {
    SuperRep {
        quiver: x.quiver.clone(),
        spaces: x.spaces.iter().map(|&d| parity_change(d)).collect(),
        maps: x.maps.iter().map(parity_change_map).collect(),
    }
}

/// The vertexwise degree-1 identity maps X(v) → P X(v); together they form
/// an isomorphism X ≅ P(X).
pub fn parity_iso<K: Field>(x: &SuperRep<K>) -> Vec<GradedMap<K>> {
    x.spaces
        .iter()
        .map(|&d| GradedMap::<K>::identity(d).flip_target())
        .collect()
}

/// Check that a vertex-indexed family of graded maps of one common degree
/// is a morphism X → Y (all squares commute).
pub fn is_morphism<K: Field>(
    x: &SuperRep<K>,
    y: &SuperRep<K>,
    maps: &[GradedMap<K>],
) -> Result<bool, Error> {
    if x.quiver.edges != y.quiver.edges || maps.len() != x.quiver.num_vertices() {
        return Err(Error::DimensionMismatch {
            context: "morphism data must match the quiver".into(),
        });
    }
    for (k, e) in x.quiver.edges.iter().enumerate() {
        let lhs = maps[e.target].compose(&x.maps[k])?;
        let rhs = y.maps[k].compose(&maps[e.source])?;
        if lhs.matrix() != rhs.matrix() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Split off the colour-matching component: X′ keeps the even part at even
/// vertices and the odd part at odd vertices, X″ the complement. Edge maps
/// restrict because every edge map has degree p(s)+p(t).
pub fn split_even_odd<K: Field>(x: &SuperRep<K>) -> (SuperRep<K>, SuperRep<K>) {
    let part = |matching: bool| -> SuperRep<K> {
        let spaces: Vec<SuperDim> = x
            .spaces
            .iter()
            .zip(0..)
            .map(|(&d, v)| {
                let keep_even = (x.quiver.colour(v) == Parity::Even) == matching;
                if keep_even {
                    SuperDim::new(d.even, 0)
                } else {
                    SuperDim::new(0, d.odd)
                }
            })
            .collect();
        let coords = |v: usize| -> Vec<usize> {
            let d = x.spaces[v];
            if (x.quiver.colour(v) == Parity::Even) == matching {
                (0..d.even).collect()
            } else {
                (d.even..d.total()).collect()
            }
        };
        let maps = x
            .quiver
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let mat = x.maps[k]
                    .matrix()
                    .select_rows(&coords(e.target))
                    .select_cols(&coords(e.source));
                GradedMap::new(spaces[e.source], spaces[e.target], x.maps[k].degree, mat)
                    .expect("restriction of a homogeneous map is homogeneous")
            })
            .collect();
        SuperRep {
            quiver: x.quiver.clone(),
            spaces,
            maps,
        }
    };
    (part(true), part(false))
}

/// The embedding of classical representations: each space is placed in the
/// grading component matching the vertex colour.
#[allow(non_snake_case)]
pub fn embed_G<K: Field>(quiver: &ColouredQuiver, x: &Representation<K>) -> SuperRep<K> {
    assert_eq!(
        &quiver.edges, &x.quiver.edges,
        "classical representation must live on the same underlying quiver"
    );
    let spaces: Vec<SuperDim> = x
        .dims
        .iter()
        .zip(0..)
        .map(|(&d, v)| match quiver.colour(v) {
            Parity::Even => SuperDim::new(d, 0),
            Parity::Odd => SuperDim::new(0, d),
        })
        .collect();
    let maps = quiver
        .edges
        .iter()
        .enumerate()
        .map(|(k, e)| {
            GradedMap::new(
                spaces[e.source],
                spaces[e.target],
                quiver.colour(e.source) + quiver.colour(e.target),
                x.maps[k].clone(),
            )
            .expect("purely graded spaces admit any matrix at the forced degree")
        })
        .collect();
    SuperRep {
        quiver: quiver.clone(),
        spaces,
        maps,
    }
}

/// The forgetful functor: drop gradings, keep the raw matrices (even-first
/// basis order).
#[allow(non_snake_case)]
pub fn forget_F<K: Field>(x: &SuperRep<K>) -> Representation<K> {
    Representation::new(
        x.quiver.clone(),
        x.spaces.iter().map(|d| d.total()).collect(),
        x.maps.iter().map(|f| f.matrix().clone()).collect(),
    )
    .expect("shapes agree by construction")
}

/// Grading of the concatenated sum space ⊕_e X(endpoint of e): coordinate
/// parities shifted by each edge's degree, making the classical sum map
/// degree-0. The induced kernel/cokernel grading at the reflected vertex.
fn sum_space_parities<K: Field>(x: &SuperRep<K>, incident: &[usize], at_source: bool) -> Vec<Parity> {
    let mut lambda = Vec::new();
    for &k in incident {
        let e = x.quiver.edges[k];
        let v = if at_source { e.source } else { e.target };
        let d = x.spaces[v];
        for c in 0..d.total() {
            lambda.push(d.coord_parity(c) + x.maps[k].degree);
        }
    }
    lambda
}

/// Stable even-first ordering of indices by the given parities.
fn sort_even_first(parities: &[Parity]) -> (Vec<usize>, SuperDim) {
    let mut order: Vec<usize> = (0..parities.len()).collect();
    order.sort_by_key(|&i| parities[i].as_u8());
    let even = parities.iter().filter(|&&p| p == Parity::Even).count();
    (order, SuperDim::new(even, parities.len() - even))
}

/// The graded reflection functor at a sink (Minus) or source (Plus). The
/// underlying classical representation is the classical reflection; the new
/// grading at `i` is the kernel/cokernel grading, and when p(i) = 1 the
/// gradings at `i`'s neighbours are parity-flipped along with their colours.
pub fn super_reflect<K: Field>(
    x: &SuperRep<K>,
    i: usize,
    direction: Direction,
) -> Result<SuperRep<K>, Error> {
    let new_quiver = match direction {
        Direction::Minus => x.quiver.reflect_at_sink(i)?,
        Direction::Plus => x.quiver.reflect_at_source(i)?,
    };
    let odd_vertex = x.quiver.colour(i) == Parity::Odd;
    let flipped = |v: usize| odd_vertex && x.quiver.neighbours(i).contains(&v);

    let incident: Vec<usize> = x
        .quiver
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| match direction {
            Direction::Minus => e.target == i,
            Direction::Plus => e.source == i,
        })
        .map(|(k, _)| k)
        .collect();
    let blocks: Vec<&Matrix<K>> = incident.iter().map(|&k| x.maps[k].matrix()).collect();

    // new space at i, with the kernel columns / cokernel rows sorted
    // even-first by the λ-grading of the sum space
    let (new_dim_i, sorted_basis) = match direction {
        Direction::Minus => {
            let sum_map = Matrix::hstack(&blocks, x.spaces[i].total());
            let (kernel, free) = sum_map.kernel_basis_with_free();
            let lambda = sum_space_parities(x, &incident, true);
            // each kernel column is homogeneous of the parity of its free
            // coordinate (the sum map is degree 0 for the λ-grading)
            let col_parities: Vec<Parity> = free.iter().map(|&f| lambda[f]).collect();
            let (order, dim) = sort_even_first(&col_parities);
            (dim, kernel.select_cols(&order))
        }
        Direction::Plus => {
            let sum_map = Matrix::vstack(&blocks, x.spaces[i].total());
            let (proj, coords) = sum_map.cokernel_projection_with_coords();
            let lambda = sum_space_parities(x, &incident, false);
            let row_parities: Vec<Parity> = coords.iter().map(|&q| lambda[q]).collect();
            let (order, dim) = sort_even_first(&row_parities);
            (dim, proj.select_rows(&order))
        }
    };

    let mut spaces = x.spaces.clone();
    spaces[i] = new_dim_i;
    for v in 0..spaces.len() {
        if flipped(v) {
            spaces[v] = parity_change(spaces[v]);
        }
    }

    // rewrap a matrix whose source/target spaces had their grading flipped:
    // permute to the new even-first order
    let swap_indices = |d: SuperDim| -> Vec<usize> {
        (d.even..d.total()).chain(0..d.even).collect()
    };

    let mut maps: Vec<GradedMap<K>> = Vec::with_capacity(x.maps.len());
    let mut offset = 0usize;
    for (k, e) in x.quiver.edges.iter().enumerate() {
        let new_degree = new_quiver.colour(e.source) + new_quiver.colour(e.target);
        if incident.contains(&k) {
            let other = e.other(i);
            let span = x.spaces[other].total();
            let idx: Vec<usize> = (offset..offset + span).collect();
            offset += span;
            let mut mat = match direction {
                Direction::Minus => sorted_basis.select_rows(&idx),
                Direction::Plus => sorted_basis.select_cols(&idx),
            };
            if flipped(other) {
                let perm = swap_indices(x.spaces[other]);
                mat = match direction {
                    Direction::Minus => mat.select_rows(&perm),
                    Direction::Plus => mat.select_cols(&perm),
                };
            }
            let ne = new_quiver.edges[k];
            maps.push(GradedMap::new(
                spaces[ne.source],
                spaces[ne.target],
                new_degree,
                mat,
            )?);
        } else {
            let mut mat = x.maps[k].matrix().clone();
            if flipped(e.source) {
                mat = mat.select_cols(&swap_indices(x.spaces[e.source]));
            }
            if flipped(e.target) {
                mat = mat.select_rows(&swap_indices(x.spaces[e.target]));
            }
            maps.push(GradedMap::new(
                spaces[e.source],
                spaces[e.target],
                new_degree,
                mat,
            )?);
        }
    }
    SuperRep::new(new_quiver, spaces, maps)
}

/// Dimension of the degree-`d` Hom space between super-representations on
/// the same coloured quiver: families f_v of degree-d graded maps with
/// commuting squares.
pub fn hom_dim_degree<K: Field>(
    x: &SuperRep<K>,
    y: &SuperRep<K>,
    d: Parity,
) -> Result<usize, Error> {
    if x.quiver != y.quiver {
        return Err(Error::DimensionMismatch {
            context: "hom requires a shared coloured quiver".into(),
        });
    }
    let k = x.quiver.num_vertices();
    // unknowns: only the entries allowed by degree d at each vertex
    let mut index: Vec<Vec<Option<usize>>> = Vec::with_capacity(k);
    let mut unknowns = 0usize;
    for v in 0..k {
        let (sx, ty) = (x.spaces[v], y.spaces[v]);
        let mut grid = vec![None; ty.total() * sx.total()];
        for r in 0..ty.total() {
            for c in 0..sx.total() {
                if ty.coord_parity(r) + sx.coord_parity(c) == d {
                    grid[r * sx.total() + c] = Some(unknowns);
                    unknowns += 1;
                }
            }
        }
        index.push(grid);
    }
    let entry = |v: usize, r: usize, c: usize| index[v][r * x.spaces[v].total() + c];

    let mut rows: Vec<Vec<K>> = Vec::new();
    for (eidx, e) in x.quiver.edges.iter().enumerate() {
        let (s, t) = (e.source, e.target);
        let xe = x.maps[eidx].matrix();
        let ye = y.maps[eidx].matrix();
        for r in 0..y.spaces[t].total() {
            for c in 0..x.spaces[s].total() {
                let mut row = vec![K::zero(); unknowns];
                let mut nonzero = false;
                for m in 0..x.spaces[t].total() {
                    if let Some(u) = entry(t, r, m) {
                        row[u] = row[u].clone() + xe[(m, c)].clone();
                        nonzero = true;
                    }
                }
                for m in 0..y.spaces[s].total() {
                    if let Some(u) = entry(s, m, c) {
                        row[u] = row[u].clone() - ye[(r, m)].clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::<K>::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    Ok(unknowns - system.rank())
}
