//! The Z₂-graded path algebra of a coloured quiver, the double quiver with
//! its mesh elements θ_i, the graded preprojective algebra computed
//! degree-by-degree, and super-modules equivalent to super-representations.

use std::collections::BTreeMap;

use serde_json::json;

use crate::error::Error;
use crate::linalg::{GradedMap, Matrix, SuperDim};
use crate::parity::Parity;
use crate::quiver::ColouredQuiver;
use crate::scalar::Field;
use crate::srep::SuperRep;

/// A path in the double quiver of a type-A coloured quiver, stored as its
/// vertex itinerary (consecutive vertices adjacent). Length-0 paths are the
/// idempotents v_i.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Path {
    pub vertices: Vec<usize>,
}

impl Path {
    pub fn trivial(i: usize) -> Path {
        Path { vertices: vec![i] }
    }

    pub fn new(vertices: Vec<usize>) -> Result<Path, Error> {
        if vertices.is_empty() {
            return Err(Error::InvalidParameters("empty path".into()));
        }
        if !vertices
            .windows(2)
            .all(|w| w[0].abs_diff(w[1]) == 1)
        {
            return Err(Error::InvalidParameters(
                "path steps must join adjacent vertices".into(),
            ));
        }
        Ok(Path { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn source(&self) -> usize {
        self.vertices[0]
    }

    pub fn target(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Z₂ degree: sum of p(s)+p(t) over the steps.
    pub fn z2degree(&self, quiver: &ColouredQuiver) -> Parity {
        self.vertices
            .windows(2)
            .map(|w| quiver.colour(w[0]) + quiver.colour(w[1]))
            .fold(Parity::Even, |a, b| a + b)
    }

    /// Concatenation a·b with b acting first: requires t(b) = s(a).
    pub fn compose_after(&self, b: &Path) -> Option<Path> {
        if b.target() != self.source() {
            return None;
        }
        let mut vertices = b.vertices.clone();
        vertices.extend_from_slice(&self.vertices[1..]);
        Some(Path { vertices })
    }
}

/// A formal linear combination of paths (canonical: no zero coefficients).
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<K> {
    terms: BTreeMap<Path, K>,
}

impl<K: Field> AlgebraElement<K> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_path(p: Path) -> Self {
        AlgebraElement {
            terms: BTreeMap::from([(p, K::one())]),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &K)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Path, c: K) {
        let entry = self.terms.entry(p.clone()).or_insert_with(K::zero);
        *entry = entry.clone() + c;
        if self.terms[&p].is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, rhs: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = self.clone();
        for (p, c) in rhs.terms() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &K) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        for (p, x) in self.terms() {
            out.add_term(p.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Bilinear concatenation product (self · rhs: rhs acts first);
    /// non-composable pairs contribute 0.
    pub fn multiply(&self, rhs: &AlgebraElement<K>) -> AlgebraElement<K> {
        let mut out = AlgebraElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                if let Some(p) = a.compose_after(b) {
                    out.add_term(p, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// The common Z₂ degree of all terms, if the element is homogeneous.
    pub fn z2degree(&self, quiver: &ColouredQuiver) -> Option<Parity> {
        let mut degrees = self.terms.keys().map(|p| p.z2degree(quiver));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }
}

/// The double quiver: one reversed companion per base arrow, with a sign
/// function ε satisfying ε(e) + ε(ē) = 0, stored as the sign of the
/// original arrow per edge slot.
#[derive(Clone, Debug)]
pub struct DoubleQuiver {
    pub base: ColouredQuiver,
    pub signs: Vec<i64>,
}

impl DoubleQuiver {
    pub fn new(base: ColouredQuiver) -> Self {
        let signs = vec![1; base.edges.len()];
        DoubleQuiver { base, signs }
    }

    pub fn with_signs(base: ColouredQuiver, signs: Vec<i64>) -> Result<Self, Error> {
        if signs.len() != base.edges.len() || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameters(
                "need one sign ±1 per base edge".into(),
            ));
        }
        Ok(DoubleQuiver { base, signs })
    }

    /// ε of the arrow from `a` to adjacent `b`.
    pub fn sign(&self, a: usize, b: usize) -> i64 {
        let slot = a.min(b);
        if self.base.edges[slot].source == a {
            self.signs[slot]
        } else {
            -self.signs[slot]
        }
    }

    /// All paths i → j of length k in the double quiver.
    pub fn paths(&self, i: usize, j: usize, k: usize) -> Vec<Path> {
        let nv = self.base.num_vertices();
        let mut partial = vec![vec![i]];
        for _ in 0..k {
            let mut next = Vec::new();
            for p in partial {
                let last = *p.last().unwrap();
                for w in [last.wrapping_sub(1), last + 1] {
                    if w < nv {
                        let mut q = p.clone();
                        q.push(w);
                        next.push(q);
                    }
                }
            }
            partial = next;
        }
        partial
            .into_iter()
            .filter(|p| *p.last().unwrap() == j)
            .map(|vertices| Path { vertices })
            .collect()
    }

    pub fn all_paths_of_length(&self, k: usize) -> Vec<Path> {
        let nv = self.base.num_vertices();
        let mut out = Vec::new();
        for i in 0..nv {
            for j in 0..nv {
                out.extend(self.paths(i, j, k));
            }
        }
        out.sort();
        out
    }
}

/// Basis of the component P_{i,j;k} (paths i→j of length k) with Z₂ tags.
pub fn graded_component(
    dq: &DoubleQuiver,
    i: usize,
    j: usize,
    k: usize,
) -> Vec<(Path, Parity)> {
    dq.paths(i, j, k)
        .into_iter()
        .map(|p| {
            let d = p.z2degree(&dq.base);
            (p, d)
        })
        .collect()
}

/// The mesh elements θ_i = Σ_{s(a)=i} ε(a) ā a.
pub fn mesh_elements<K: Field>(dq: &DoubleQuiver) -> Vec<AlgebraElement<K>> {
    (0..dq.base.num_vertices())
        .map(|i| {
            let mut theta = AlgebraElement::zero();
            for w in dq.base.neighbours(i) {
                theta.add_term(
                    Path {
                        vertices: vec![i, w, i],
                    },
                    K::from_i64(dq.sign(i, w)),
                );
            }
            theta
        })
        .collect()
}

/// Graded dimensions (even, odd) of the preprojective algebra Π(Γ) per
/// path-length degree, computed as the quotient of length-k paths by the
/// degree-k slice x·θ_i·y of the mesh ideal. A zero slice propagates, so
/// dimensions beyond the cutoff vanish if the last slice is zero.
pub fn preprojective_dims<K: Field>(
    dq: &DoubleQuiver,
    max_len: usize,
) -> Result<Vec<(usize, usize)>, Error> {
    let thetas = mesh_elements::<K>(dq);
    let mut out = Vec::with_capacity(max_len + 1);
    for k in 0..=max_len {
        let basis = dq.all_paths_of_length(k);
        if basis.is_empty() {
            out.push((0, 0));
            continue;
        }
        // ideal generators in this length degree: x · θ_v · y with
        // |x| + |y| = k − 2
        let mut generators: Vec<AlgebraElement<K>> = Vec::new();
        if k >= 2 {
            for lx in 0..=(k - 2) {
                let ly = k - 2 - lx;
                let xs = dq.all_paths_of_length(lx);
                let ys = dq.all_paths_of_length(ly);
                for x in &xs {
                    let theta = &thetas[x.source()];
                    let left = AlgebraElement::from_path(x.clone()).multiply(theta);
                    for y in ys.iter().filter(|y| y.target() == x.source()) {
                        let g = left.multiply(&AlgebraElement::from_path(y.clone()));
                        if !g.is_zero() {
                            generators.push(g);
                        }
                    }
                }
            }
        }
        // the mesh ideal is Z₂-homogeneous: handle each parity class apart
        let mut dims = [0usize; 2];
        for parity in [Parity::Even, Parity::Odd] {
            let class: Vec<&Path> = basis
                .iter()
                .filter(|p| p.z2degree(&dq.base) == parity)
                .collect();
            let gens: Vec<&AlgebraElement<K>> = generators
                .iter()
                .filter(|g| g.z2degree(&dq.base) == Some(parity))
                .collect();
            let mat = Matrix::<K>::from_fn(gens.len(), class.len(), |r, c| {
                gens[r]
                    .terms
                    .get(class[c])
                    .cloned()
                    .unwrap_or_else(K::zero)
            });
            dims[parity.as_u8() as usize] = class.len() - mat.rank();
        }
        out.push((dims[0], dims[1]));
    }
    Ok(out)
}

/// A module over the graded path algebra: the total space with an ordered
/// vertex-block decomposition (all even coordinates first, grouped by
/// vertex, then all odd coordinates grouped by vertex), the idempotent
/// actions v_i and the arrow actions.
#[derive(Clone, PartialEq, Debug)]
pub struct SuperModule<K> {
    pub quiver: ColouredQuiver,
    pub block_dims: Vec<SuperDim>,
    pub total: SuperDim,
    pub idempotents: Vec<GradedMap<K>>,
    pub edge_actions: Vec<GradedMap<K>>,
}

impl<K: Field> SuperModule<K> {
    /// Global coordinates of vertex v's block inside the total space.
    pub fn block_coords(&self, v: usize) -> Vec<usize> {
        let even_before: usize = self.block_dims[..v].iter().map(|d| d.even).sum();
        let odd_before: usize = self.block_dims[..v].iter().map(|d| d.odd).sum();
        let d = self.block_dims[v];
        (even_before..even_before + d.even)
            .chain(
                (self.total.even + odd_before)..(self.total.even + odd_before + d.odd),
            )
            .collect()
    }
}

/// Assemble the super-representation into one module over the path algebra.
pub fn module_from_srep<K: Field>(x: &SuperRep<K>) -> SuperModule<K> {
    let block_dims = x.spaces.clone();
    let total = SuperDim::new(
        block_dims.iter().map(|d| d.even).sum(),
        block_dims.iter().map(|d| d.odd).sum(),
    );
    let mut module = SuperModule {
        quiver: x.quiver.clone(),
        block_dims,
        total,
        idempotents: Vec::new(),
        edge_actions: Vec::new(),
    };
    for v in 0..x.quiver.num_vertices() {
        let coords = module.block_coords(v);
        let mat = Matrix::from_fn(total.total(), total.total(), |r, c| {
            if r == c && coords.contains(&r) {
                K::one()
            } else {
                K::zero()
            }
        });
        module
            .idempotents
            .push(GradedMap::new(total, total, Parity::Even, mat).expect("diagonal idempotent"));
    }
    for (k, e) in x.quiver.edges.iter().enumerate() {
        let src = module.block_coords(e.source);
        let tgt = module.block_coords(e.target);
        let block = x.maps[k].matrix();
        let mat = Matrix::from_fn(total.total(), total.total(), |r, c| {
            match (tgt.iter().position(|&t| t == r), src.iter().position(|&s| s == c)) {
                (Some(br), Some(bc)) => block[(br, bc)].clone(),
                _ => K::zero(),
            }
        });
        module.edge_actions.push(
            GradedMap::new(total, total, x.maps[k].degree, mat)
                .expect("edge action inherits the map degree"),
        );
    }
    module
}

/// Recover the super-representation X_M(i) = v_i M from a module.
pub fn srep_from_module<K: Field>(m: &SuperModule<K>) -> Result<SuperRep<K>, Error> {
    let nv = m.quiver.num_vertices();
    if m.idempotents.len() != nv || m.edge_actions.len() != m.quiver.edges.len() {
        return Err(Error::DimensionMismatch {
            context: "module data must match the quiver".into(),
        });
    }
    // validate the idempotent system: orthogonal diagonal projectors
    // summing to the identity, matching the block decomposition
    let t = m.total.total();
    let mut seen = vec![false; t];
    for v in 0..nv {
        let coords = m.block_coords(v);
        let mat = m.idempotents[v].matrix();
        for r in 0..t {
            for c in 0..t {
                let expected = if r == c && coords.contains(&r) {
                    K::one()
                } else {
                    K::zero()
                };
                if mat[(r, c)] != expected {
                    return Err(Error::InvalidParameters(
                        "idempotents must be the block-diagonal projectors".into(),
                    ));
                }
            }
        }
        for &r in &coords {
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::InvalidParameters(
                    "idempotent blocks overlap".into(),
                ));
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        return Err(Error::InvalidParameters(
            "idempotents must sum to the identity".into(),
        ));
    }

    let mut maps = Vec::with_capacity(m.quiver.edges.len());
    for (k, e) in m.quiver.edges.iter().enumerate() {
        let src = m.block_coords(e.source);
        let tgt = m.block_coords(e.target);
        let full = m.edge_actions[k].matrix();
        // the action must be supported on the target←source block
        for r in 0..t {
            for c in 0..t {
                if !full[(r, c)].is_zero() && !(tgt.contains(&r) && src.contains(&c)) {
                    return Err(Error::InvalidParameters(format!(
                        "edge action {} acts outside its blocks",
                        k + 1
                    )));
                }
            }
        }
        let mat = full.select_rows(&tgt).select_cols(&src);
        maps.push(GradedMap::new(
            m.block_dims[e.source],
            m.block_dims[e.target],
            m.edge_actions[k].degree,
            mat,
        )?);
    }
    SuperRep::new(m.quiver.clone(), m.block_dims.clone(), maps)
}

/// Action of an algebra element on a module, by composing generator actions.
pub fn module_action<K: Field>(
    m: &SuperModule<K>,
    element: &AlgebraElement<K>,
) -> Result<Matrix<K>, Error> {
    let t = m.total.total();
    let mut out = Matrix::<K>::zero(t, t);
    for (path, coeff) in element.terms() {
        let mut acc = m.idempotents[path.source()].matrix().clone();
        for w in path.vertices.windows(2) {
            let slot = w[0].min(w[1]);
            let base = m.quiver.edges[slot];
            if (base.source, base.target) == (w[0], w[1]) {
                acc = m.edge_actions[slot].matrix().mul(&acc)?;
            } else {
                // reversed arrows act by zero on modules over the plain
                // path algebra
                acc = Matrix::zero(t, t);
            }
        }
        for r in 0..t {
            for c in 0..t {
                out[(r, c)] = out[(r, c)].clone() + coeff.clone() * acc[(r, c)].clone();
            }
        }
    }
    Ok(out)
}

/// Dimension of the degree-d Hom space between modules: graded maps of the
/// total spaces commuting with every idempotent and every edge action.
pub fn module_hom_dim<K: Field>(
    a: &SuperModule<K>,
    b: &SuperModule<K>,
    d: Parity,
) -> Result<usize, Error> {
    if a.quiver != b.quiver {
        return Err(Error::DimensionMismatch {
            context: "module hom requires a shared quiver".into(),
        });
    }
    let (ta, tb) = (a.total, b.total);
    // unknowns: entries of f allowed by degree d
    let mut index = vec![None; tb.total() * ta.total()];
    let mut unknowns = 0usize;
    for r in 0..tb.total() {
        for c in 0..ta.total() {
            if tb.coord_parity(r) + ta.coord_parity(c) == d {
                index[r * ta.total() + c] = Some(unknowns);
                unknowns += 1;
            }
        }
    }
    let mut rows: Vec<Vec<K>> = Vec::new();
    let mut constrain = |ga: &Matrix<K>, gb: &Matrix<K>| {
        for r in 0..tb.total() {
            for c in 0..ta.total() {
                let mut row = vec![K::zero(); unknowns];
                let mut nonzero = false;
                for k in 0..ta.total() {
                    if let Some(u) = index[r * ta.total() + k] {
                        row[u] = row[u].clone() + ga[(k, c)].clone();
                        nonzero = true;
                    }
                }
                for k in 0..tb.total() {
                    if let Some(u) = index[k * ta.total() + c] {
                        row[u] = row[u].clone() - gb[(r, k)].clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    };
    for v in 0..a.quiver.num_vertices() {
        constrain(a.idempotents[v].matrix(), b.idempotents[v].matrix());
    }
    for k in 0..a.quiver.edges.len() {
        constrain(a.edge_actions[k].matrix(), b.edge_actions[k].matrix());
    }
    let system = Matrix::<K>::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    Ok(unknowns - system.rank())
}

pub fn dims_to_json(dims: &[(usize, usize)]) -> serde_json::Value {
    json!(dims
        .iter()
        .enumerate()
        .map(|(k, &(e, o))| json!({"length": k, "even": e, "odd": o}))
        .collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parity::Parity::{Even, Odd};
    use crate::scalar::Rat;
    use crate::srep::{hom_dim_degree, simple_super};

    fn quiver(colours: &[Parity], orient: &str) -> ColouredQuiver {
        ColouredQuiver::from_orient_str(colours.to_vec(), orient).unwrap()
    }

    fn el(vertices: &[usize]) -> AlgebraElement<Rat> {
        AlgebraElement::from_path(Path::new(vertices.to_vec()).unwrap())
    }

    #[test]
    fn idempotents_and_units() {
        let v1 = el(&[0]);
        let v2 = el(&[1]);
        assert_eq!(v1.multiply(&v1), v1);
        assert!(v1.multiply(&v2).is_zero());

        let e = el(&[0, 1]); // arrow 1→2
        assert_eq!(e.multiply(&v1), e); // e · v_{s(e)} = e
        assert_eq!(v2.multiply(&e), e); // v_{t(e)} · e = e
        assert!(v1.multiply(&e).is_zero());
    }

    #[test]
    fn z2_degrees() {
        let q = quiver(&[Even, Odd, Even], ">>");
        let e = Path::new(vec![0, 1]).unwrap();
        assert_eq!(e.z2degree(&q), Odd);
        // ē e is even for any edge
        let loop_path = Path::new(vec![0, 1, 0]).unwrap();
        assert_eq!(loop_path.z2degree(&q), Even);
        // telescoping: p(1) + p(3) for the length-2 through path
        let through = Path::new(vec![0, 1, 2]).unwrap();
        assert_eq!(through.z2degree(&q), Even);
    }

    #[test]
    fn multiplicativity_of_grading() {
        let q = quiver(&[Even, Odd, Odd, Even], ">><");
        let dq = DoubleQuiver::new(q.clone());
        for a in dq.all_paths_of_length(2) {
            for b in dq.all_paths_of_length(3) {
                if let Some(p) = a.compose_after(&b) {
                    assert_eq!(p.z2degree(&q), a.z2degree(&q) + b.z2degree(&q));
                }
            }
        }
    }

    #[test]
    fn associativity_on_random_elements() {
        let q = quiver(&[Even, Odd, Even], ">>");
        let dq = DoubleQuiver::new(q);
        let mut pool = Vec::new();
        for k in 0..=3 {
            pool.extend(dq.all_paths_of_length(k));
        }
        // deterministic pseudo-random coefficients
        let mut state = 7u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            Rat::from_i64((state >> 33) as i64 % 5 - 2)
        };
        let mut make = |stride: usize| {
            let mut x = AlgebraElement::<Rat>::zero();
            for p in pool.iter().step_by(stride) {
                x.add_term(p.clone(), next());
            }
            x
        };
        let (a, b, c) = (make(2), make(3), make(5));
        assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn graded_component_examples() {
        let q = quiver(&[Even, Odd, Even], ">>");
        let dq = DoubleQuiver::new(q);
        assert_eq!(graded_component(&dq, 0, 0, 0).len(), 1);
        assert_eq!(graded_component(&dq, 0, 1, 0).len(), 0);
        let comp = graded_component(&dq, 0, 2, 2);
        assert_eq!(comp.len(), 1);
        assert_eq!(comp[0].1, Even); // p(1)+p(3) = 0
    }

    #[test]
    fn mesh_element_shapes() {
        let q = quiver(&[Even, Odd, Even], ">>");
        let dq = DoubleQuiver::new(q.clone());
        let thetas = mesh_elements::<Rat>(&dq);
        assert_eq!(thetas.len(), 3);
        assert_eq!(thetas[0].terms().count(), 1); // endpoint
        assert_eq!(thetas[1].terms().count(), 2); // interior
        for theta in &thetas {
            assert_eq!(theta.z2degree(&q), Some(Even));
        }
        // θ₁ = ε(e) ē e lives in P_{1,1;2}
        let (p, c) = thetas[0].terms().next().unwrap();
        assert_eq!((p.source(), p.target(), p.len()), (0, 0, 2));
        assert_eq!(c, &Rat::from_i64(1));
    }

    #[test]
    fn mesh_degree_zero_for_every_colouring() {
        for k in 1..=4usize {
            for bits in 0..(1u32 << k) {
                let colours: Vec<Parity> = (0..k)
                    .map(|i| Parity::from_u8((bits >> i & 1) as u8))
                    .collect();
                let q = ColouredQuiver::from_orient_str(colours, &">".repeat(k - 1)).unwrap();
                let dq = DoubleQuiver::new(q.clone());
                for theta in mesh_elements::<Rat>(&dq) {
                    assert!(theta.is_zero() || theta.z2degree(&q) == Some(Even));
                }
            }
        }
    }

    #[test]
    fn preprojective_a1_and_a2() {
        let q = quiver(&[Even], "");
        let dims = preprojective_dims::<Rat>(&DoubleQuiver::new(q), 3).unwrap();
        assert_eq!(dims.iter().map(|&(e, o)| e + o).sum::<usize>(), 1);

        let q = quiver(&[Even, Odd], ">");
        let dims = preprojective_dims::<Rat>(&DoubleQuiver::new(q), 5).unwrap();
        // {v1, v2} in length 0, {e, ē} in length 1, nothing above
        assert_eq!(dims[0], (2, 0));
        assert_eq!(dims[1].0 + dims[1].1, 2);
        assert!(dims[2..].iter().all(|&(e, o)| e + o == 0));
        assert_eq!(dims.iter().map(|&(e, o)| e + o).sum::<usize>(), 4);
    }

    #[test]
    fn preprojective_sign_independence() {
        for orient in [">>", "<>", "<<"] {
            let q = quiver(&[Even, Odd, Even], orient);
            let a = preprojective_dims::<Rat>(&DoubleQuiver::new(q.clone()), 8).unwrap();
            let b = preprojective_dims::<Rat>(
                &DoubleQuiver::with_signs(q, vec![-1, 1]).unwrap(),
                8,
            )
            .unwrap();
            assert_eq!(a, b);
            // Dynkin type: the quotient dies before the cutoff
            assert_eq!(a.last(), Some(&(0, 0)));
        }
    }

    #[test]
    fn module_round_trip() {
        let q = quiver(&[Even, Odd, Even], "<<");
        let x = simple_super::<Rat>(&q, 1, Odd);
        let m = module_from_srep(&x);
        assert_eq!(m.total, SuperDim::new(0, 1));
        assert_eq!(srep_from_module(&m).unwrap(), x);

        // a richer representation round-trips too
        let mk = |s: SuperDim, t: SuperDim, d: Parity, rows: &[&[i64]]| {
            GradedMap::new(s, t, d, Matrix::<Rat>::from_int_rows(rows)).unwrap()
        };
        let sp = vec![SuperDim::new(1, 0), SuperDim::new(0, 1), SuperDim::new(1, 1)];
        let x = SuperRep::new(
            q,
            sp.clone(),
            vec![
                mk(sp[1], sp[0], Odd, &[&[2]]),
                mk(sp[2], sp[1], Odd, &[&[3, 0]]),
            ],
        )
        .unwrap();
        let m = module_from_srep(&x);
        assert_eq!(srep_from_module(&m).unwrap(), x);

        // malformed idempotents are rejected
        let mut bad = m.clone();
        bad.idempotents.swap(0, 1);
        assert!(srep_from_module(&bad).is_err());
    }

    #[test]
    fn path_action_is_composition() {
        let q = quiver(&[Even, Odd, Even], ">>");
        let mk = |s: SuperDim, t: SuperDim, d: Parity, rows: &[&[i64]]| {
            GradedMap::new(s, t, d, Matrix::<Rat>::from_int_rows(rows)).unwrap()
        };
        let sp = vec![SuperDim::new(1, 0), SuperDim::new(0, 1), SuperDim::new(1, 0)];
        let x = SuperRep::new(
            q,
            sp.clone(),
            vec![
                mk(sp[0], sp[1], Odd, &[&[2]]),
                mk(sp[1], sp[2], Odd, &[&[3]]),
            ],
        )
        .unwrap();
        let m = module_from_srep(&x);
        let long = el(&[0, 1, 2]);
        let step1 = el(&[0, 1]);
        let step2 = el(&[1, 2]);
        let lhs = module_action(&m, &long).unwrap();
        let rhs = module_action(&m, &step2)
            .unwrap()
            .mul(&module_action(&m, &step1).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn module_homs_agree_with_srep_homs() {
        let q = quiver(&[Even, Odd], ">");
        let a = simple_super::<Rat>(&q, 0, Even);
        let b = simple_super::<Rat>(&q, 0, Odd);
        for (x, y) in [(&a, &a), (&a, &b), (&b, &a)] {
            for d in [Even, Odd] {
                assert_eq!(
                    module_hom_dim(&module_from_srep(x), &module_from_srep(y), d).unwrap(),
                    hom_dim_degree(x, y, d).unwrap()
                );
            }
        }
    }
}
