//! Classical quiver representations: vector spaces at vertices, linear maps
//! along arrows, BGP reflection functors at sinks and sources, Hom-space
//! computations and indecomposability.

use serde_json::json;

use crate::error::Error;
use crate::linalg::Matrix;
use crate::quiver::ColouredQuiver;
use crate::roots::adapted_longest_word;
use crate::scalar::Field;

/// A representation of the underlying quiver (colours are ignored here).
/// `maps[e]` has shape `dims[t(e)] × dims[s(e)]`.
#[derive(Clone, PartialEq, Debug)]
pub struct Representation<K> {
    pub quiver: ColouredQuiver,
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<K>>,
}

impl<K: Field> Representation<K> {
    pub fn new(
        quiver: ColouredQuiver,
        dims: Vec<usize>,
        maps: Vec<Matrix<K>>,
    ) -> Result<Self, Error> {
        if dims.len() != quiver.num_vertices() || maps.len() != quiver.edges.len() {
            return Err(Error::DimensionMismatch {
                context: "representation data must match the quiver".into(),
            });
        }
        for (e, m) in quiver.edges.iter().zip(&maps) {
            if m.rows() != dims[e.target] || m.cols() != dims[e.source] {
                return Err(Error::DimensionMismatch {
                    context: format!(
                        "map on edge {}->{} has shape {}x{}, expected {}x{}",
                        e.source + 1,
                        e.target + 1,
                        m.rows(),
                        m.cols(),
                        dims[e.target],
                        dims[e.source]
                    ),
                });
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: ColouredQuiver, dims: Vec<usize>) -> Result<Self, Error> {
        let maps = quiver
            .edges
            .iter()
            .map(|e| Matrix::zero(dims[e.target], dims[e.source]))
            .collect();
        Representation::new(quiver, dims, maps)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "dims": self.dims,
            "maps": self.maps.iter().map(|m| m.entries_as_strings()).collect::<Vec<_>>(),
        })
    }

    pub fn direct_sum(&self, rhs: &Representation<K>) -> Result<Representation<K>, Error> {
        if self.quiver != rhs.quiver {
            return Err(Error::DimensionMismatch {
                context: "direct sum needs a shared quiver".into(),
            });
        }
        let dims: Vec<usize> = self
            .dims
            .iter()
            .zip(&rhs.dims)
            .map(|(a, b)| a + b)
            .collect();
        let maps = self
            .quiver
            .edges
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let a = &self.maps[k];
                let b = &rhs.maps[k];
                Matrix::from_fn(dims[e.target], dims[e.source], |r, c| {
                    if r < a.rows() && c < a.cols() {
                        a[(r, c)].clone()
                    } else if r >= a.rows() && c >= a.cols() {
                        b[(r - a.rows(), c - a.cols())].clone()
                    } else {
                        K::zero()
                    }
                })
            })
            .collect();
        Representation::new(self.quiver.clone(), dims, maps)
    }
}

/// The simple representation supported at vertex `i`.
pub fn simple_rep<K: Field>(quiver: &ColouredQuiver, i: usize) -> Representation<K> {
    let mut dims = vec![0; quiver.num_vertices()];
    dims[i] = 1;
    Representation::zero(quiver.clone(), dims).expect("simple rep is well-formed")
}

/// Reflection functor at a sink: the space at `i` becomes the kernel of the
/// sum map ⊕_{e: t(e)=i} X(s(e)) → X(i), with the kernel-inclusion
/// components as the new maps out of `i`.
pub fn bgp_minus<K: Field>(x: &Representation<K>, i: usize) -> Result<Representation<K>, Error> {
    let new_quiver = x.quiver.reflect_at_sink(i)?;
    // incident edges in slot order; their sources make up the sum space
    let incident: Vec<usize> = x
        .quiver
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.target == i)
        .map(|(k, _)| k)
        .collect();
    let blocks: Vec<&Matrix<K>> = incident.iter().map(|&k| &x.maps[k]).collect();
    let sum_map = Matrix::hstack(&blocks, x.dims[i]);
    let kernel = sum_map.kernel_basis();

    let mut dims = x.dims.clone();
    dims[i] = kernel.cols();
    let mut maps = x.maps.clone();
    let mut offset = 0;
    for &k in &incident {
        let src = x.quiver.edges[k].source;
        let rows: Vec<usize> = (offset..offset + x.dims[src]).collect();
        maps[k] = kernel.select_rows(&rows);
        offset += x.dims[src];
    }
    Representation::new(new_quiver, dims, maps)
}

/// Reflection functor at a source: the space at `i` becomes the cokernel of
/// X(i) → ⊕_{e: s(e)=i} X(t(e)), with the quotient-projection components
/// as the new maps into `i`.
pub fn bgp_plus<K: Field>(x: &Representation<K>, i: usize) -> Result<Representation<K>, Error> {
    let new_quiver = x.quiver.reflect_at_source(i)?;
    let incident: Vec<usize> = x
        .quiver
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| e.source == i)
        .map(|(k, _)| k)
        .collect();
    let blocks: Vec<&Matrix<K>> = incident.iter().map(|&k| &x.maps[k]).collect();
    let cols = x.dims[i];
    let sum_map = Matrix::vstack(&blocks, cols);
    let proj = sum_map.cokernel_projection();

    let mut dims = x.dims.clone();
    dims[i] = proj.rows();
    let mut maps = x.maps.clone();
    let mut offset = 0;
    for &k in &incident {
        let tgt = x.quiver.edges[k].target;
        let cols: Vec<usize> = (offset..offset + x.dims[tgt]).collect();
        maps[k] = proj.select_cols(&cols);
        offset += x.dims[tgt];
    }
    Representation::new(new_quiver, dims, maps)
}

/// dim Hom(X, Y): the solution-space dimension of the commuting-square
/// system f_{t(e)} ∘ x_e = y_e ∘ f_{s(e)} over all edges.
pub fn hom_dim<K: Field>(x: &Representation<K>, y: &Representation<K>) -> Result<usize, Error> {
    if x.quiver != y.quiver {
        return Err(Error::DimensionMismatch {
            context: "hom requires a shared quiver".into(),
        });
    }
    let k = x.quiver.num_vertices();
    // unknowns: entries of f_v (shape y.dims[v] × x.dims[v]), row-major,
    // vertex blocks in order
    let mut offsets = vec![0usize; k + 1];
    for v in 0..k {
        offsets[v + 1] = offsets[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offsets[k];
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * x.dims[v] + c;

    let mut rows: Vec<Vec<K>> = Vec::new();
    for (eidx, e) in x.quiver.edges.iter().enumerate() {
        let (s, t) = (e.source, e.target);
        let xe = &x.maps[eidx];
        let ye = &y.maps[eidx];
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                let mut row = vec![K::zero(); unknowns];
                // (f_t · x_e)[r, c]
                for m in 0..x.dims[t] {
                    row[var(t, r, m)] = row[var(t, r, m)].clone() + xe[(m, c)].clone();
                }
                // −(y_e · f_s)[r, c]
                for m in 0..y.dims[s] {
                    row[var(s, m, c)] = row[var(s, m, c)].clone() - ye[(r, m)].clone();
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    Ok(unknowns - system.rank())
}

/// Indecomposability via the brick criterion dim End(X) = 1; valid because
/// indecomposables over a Dynkin quiver are bricks.
pub fn is_indecomposable<K: Field>(x: &Representation<K>) -> Result<bool, Error> {
    if x.total_dim() == 0 {
        return Err(Error::InvalidParameters(
            "indecomposability is undefined for the zero representation".into(),
        ));
    }
    Ok(hom_dim(x, x)? == 1)
}

/// Isomorphism test for bricks: equal dimension vectors and all four
/// Hom-space dimensions equal to 1.
pub fn iso_bricks<K: Field>(x: &Representation<K>, y: &Representation<K>) -> Result<bool, Error> {
    Ok(x.dims == y.dims
        && hom_dim(x, y)? == 1
        && hom_dim(y, x)? == 1
        && hom_dim(x, x)? == 1
        && hom_dim(y, y)? == 1)
}

/// All indecomposables, one per positive root, built by the reflection
/// chain along the adapted longest word: the j-th object is
/// S⁺_{i_1} ⋯ S⁺_{i_{j−1}} applied to the simple at i_j, and realizes the
/// prefix root γ_j as its dimension vector.
pub fn all_indecomposables<K: Field>(
    quiver: &ColouredQuiver,
) -> Result<Vec<Representation<K>>, Error> {
    let word = adapted_longest_word(quiver);
    let mut out = Vec::with_capacity(word.len());
    for j in 0..word.len() {
        // the simple lives over the quiver reflected along the prefix
        let mut q = quiver.clone();
        for &l in &word[..j] {
            q = q.reflect(l);
        }
        let mut x = simple_rep::<K>(&q, word[j]);
        for &l in word[..j].iter().rev() {
            x = bgp_plus(&x, l)?;
        }
        out.push(x);
    }
    Ok(out)
}

/// Express dim X as a nonnegative integer combination of the given
/// indecomposables by solving the Hom-dimension system
/// Σ_Z μ_Z · hom(Z′, Z) = hom(Z′, X); returns the summand dimension
/// vectors (Krull–Schmidt bookkeeping for tests).
pub fn decompose_check<K: Field>(
    x: &Representation<K>,
    indecomposables: &[Representation<K>],
) -> Result<Vec<Vec<i64>>, Error> {
    let n = indecomposables.len();
    let mut aug = Matrix::<K>::zero(n, n + 1);
    for (r, zp) in indecomposables.iter().enumerate() {
        for (c, z) in indecomposables.iter().enumerate() {
            aug[(r, c)] = K::from_i64(hom_dim(zp, z)? as i64);
        }
        aug[(r, n)] = K::from_i64(hom_dim(zp, x)? as i64);
    }
    let (rref, pivots) = aug.rref();
    if pivots.len() != n || pivots.contains(&n) {
        return Err(Error::VerificationFailed(
            "hom system has no unique solution".into(),
        ));
    }
    let mut summands = Vec::new();
    let mut total = vec![0i64; x.dims.len()];
    for (row, z) in indecomposables.iter().enumerate() {
        let mu = rref[(row, n)].clone();
        let mut count = 0i64;
        while K::from_i64(count) != mu {
            count += 1;
            if count > x.total_dim() as i64 {
                return Err(Error::VerificationFailed(
                    "multiplicity is not a small nonnegative integer".into(),
                ));
            }
        }
        for _ in 0..count {
            summands.push(z.dim_vector());
        }
        for (t, d) in total.iter_mut().zip(z.dim_vector()) {
            *t += count * d;
        }
    }
    if total != x.dim_vector() {
        return Err(Error::VerificationFailed(
            "decomposition does not reproduce the dimension vector".into(),
        ));
    }
    summands.sort();
    Ok(summands)
}

/// Oracle for linearly oriented A_k: the interval representation supported
/// on vertices a..=b with identity maps inside the interval.
pub fn interval_rep<K: Field>(
    quiver: &ColouredQuiver,
    a: usize,
    b: usize,
) -> Result<Representation<K>, Error> {
    if a > b || b >= quiver.num_vertices() {
        return Err(Error::InvalidParameters("invalid interval".into()));
    }
    let dims: Vec<usize> = (0..quiver.num_vertices())
        .map(|v| usize::from(a <= v && v <= b))
        .collect();
    let maps = quiver
        .edges
        .iter()
        .map(|e| {
            if a <= e.slot() && e.slot() + 1 <= b {
                Matrix::identity(1)
            } else {
                Matrix::zero(dims[e.target], dims[e.source])
            }
        })
        .collect();
    Representation::new(quiver.clone(), dims, maps)
}
