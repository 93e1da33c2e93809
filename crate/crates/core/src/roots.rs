//! The root system A(n,m): roots ε_i−ε_j, δ_i−δ_j (even) and ±(ε_i−δ_j)
//! (odd), simple systems, odd/even reflections, the identification with
//! A_{n+m−1}, and adapted reduced words for the longest element.
//!
//! Vertex/letter indices are 0-based internally and printed 1-based.

use std::fmt;

use serde_json::json;

use crate::error::Error;
use crate::parity::Parity;
use crate::quiver::ColouredQuiver;

/// One of the basis functionals ε_1..ε_n, δ_1..δ_m (1-based index).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BasisVector {
    Eps(usize),
    Delta(usize),
}

impl BasisVector {
    pub fn parity_class(self) -> Parity {
        // not a parity per se; two functionals from different blocks pair
        // to an odd root
        match self {
            BasisVector::Eps(_) => Parity::Even,
            BasisVector::Delta(_) => Parity::Odd,
        }
    }

    /// Index in the combined e-basis of A_{n+m−1}: ε_i ↦ e_i, δ_i ↦ e_{n+i}
    /// (0-based output).
    pub fn flatten(self, n: usize) -> usize {
        match self {
            BasisVector::Eps(i) => i - 1,
            BasisVector::Delta(i) => n + i - 1,
        }
    }

    pub fn render(self, ascii: bool) -> String {
        match (self, ascii) {
            (BasisVector::Eps(i), false) => format!("ε{}", i),
            (BasisVector::Delta(i), false) => format!("δ{}", i),
            (BasisVector::Eps(i), true) => format!("e{}", i),
            (BasisVector::Delta(i), true) => format!("d{}", i),
        }
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// A root plus − minus of A(n,m).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SuperRoot {
    pub plus: BasisVector,
    pub minus: BasisVector,
}

impl SuperRoot {
    pub fn new(plus: BasisVector, minus: BasisVector) -> Self {
        assert_ne!(plus, minus, "root must have distinct endpoints");
        SuperRoot { plus, minus }
    }

    pub fn parity(self) -> Parity {
        match self.plus.parity_class() == self.minus.parity_class() {
            true => Parity::Even,
            false => Parity::Odd,
        }
    }

    pub fn negate(self) -> SuperRoot {
        SuperRoot {
            plus: self.minus,
            minus: self.plus,
        }
    }

    /// Formal sum of two roots sharing an endpoint (η_a−η_b)+(η_b−η_c).
    pub fn add(self, rhs: SuperRoot) -> Option<SuperRoot> {
        if self.minus == rhs.plus && self.plus != rhs.minus {
            Some(SuperRoot::new(self.plus, rhs.minus))
        } else if rhs.minus == self.plus && rhs.plus != self.minus {
            Some(SuperRoot::new(rhs.plus, self.minus))
        } else {
            None
        }
    }

    pub fn render(self, ascii: bool) -> String {
        format!("{}-{}", self.plus.render(ascii), self.minus.render(ascii))
    }

    /// Parse "e1-d2" / "ε1-δ2" style notation.
    pub fn parse(s: &str) -> Result<SuperRoot, Error> {
        fn basis(part: &str) -> Option<BasisVector> {
            let part = part.trim();
            let (kind, idx) = if let Some(rest) = part.strip_prefix('e').or(part.strip_prefix('ε'))
            {
                ('e', rest)
            } else if let Some(rest) = part.strip_prefix('d').or(part.strip_prefix('δ')) {
                ('d', rest)
            } else {
                return None;
            };
            let i: usize = idx.parse().ok().filter(|&i| i >= 1)?;
            Some(match kind {
                'e' => BasisVector::Eps(i),
                _ => BasisVector::Delta(i),
            })
        }
        let (a, b) = s
            .split_once('-')
            .ok_or_else(|| Error::InvalidParameters(format!("cannot parse root {:?}", s)))?;
        match (basis(a), basis(b)) {
            (Some(p), Some(q)) if p != q => Ok(SuperRoot::new(p, q)),
            _ => Err(Error::InvalidParameters(format!(
                "cannot parse root {:?}",
                s
            ))),
        }
    }
}

impl fmt::Display for SuperRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

/// The root system A(n,m).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SuperRootSystem {
    pub n: usize,
    pub m: usize,
}

impl SuperRootSystem {
    pub fn new(n: usize, m: usize) -> Result<Self, Error> {
        if n < 1 || m < 1 {
            return Err(Error::InvalidParameters("need n ≥ 1 and m ≥ 1".into()));
        }
        Ok(SuperRootSystem { n, m })
    }

    /// Dimension of the ambient lattice (and the combined e-basis).
    pub fn dim(self) -> usize {
        self.n + self.m
    }

    /// Number of simple roots.
    pub fn rank(self) -> usize {
        self.dim() - 1
    }

    fn basis_vectors(self) -> Vec<BasisVector> {
        (1..=self.n)
            .map(BasisVector::Eps)
            .chain((1..=self.m).map(BasisVector::Delta))
            .collect()
    }

    /// All roots, even block first, each block in lexicographic index order.
    pub fn all_roots(self) -> Vec<SuperRoot> {
        let basis = self.basis_vectors();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for &a in &basis {
            for &b in &basis {
                if a == b {
                    continue;
                }
                let r = SuperRoot::new(a, b);
                match r.parity() {
                    Parity::Even => even.push(r),
                    Parity::Odd => odd.push(r),
                }
            }
        }
        even.extend(odd);
        even
    }

    /// A root as an integer vector in the combined e-basis of length n+m;
    /// this realizes the identification with the A_{n+m−1} root lattice.
    pub fn flatten(self, root: SuperRoot) -> Vec<i64> {
        let mut v = vec![0i64; self.dim()];
        v[root.plus.flatten(self.n)] = 1;
        v[root.minus.flatten(self.n)] = -1;
        v
    }

    /// Inverse of `flatten` on root vectors.
    pub fn unflatten(self, v: &[i64]) -> Result<SuperRoot, Error> {
        let plus = v.iter().position(|&x| x == 1);
        let minus = v.iter().position(|&x| x == -1);
        let ok = v.len() == self.dim()
            && v.iter().filter(|&&x| x != 0).count() == 2
            && plus.is_some()
            && minus.is_some();
        if !ok {
            return Err(Error::InvalidParameters(format!(
                "{:?} is not a root vector",
                v
            )));
        }
        let basis = self.basis_vectors();
        Ok(SuperRoot::new(basis[plus.unwrap()], basis[minus.unwrap()]))
    }

    pub fn root_json(self, root: SuperRoot) -> serde_json::Value {
        json!({
            "root": root.render(true),
            "coords": self.flatten(root),
            "parity": root.parity().as_u8(),
        })
    }
}

/// A simple system of A(n,m): ±{η_1−η_2, ..., η_{n+m−1}−η_{n+m}} for an
/// ordering η of all basis functionals. Every simple system reachable by
/// even and odd reflections has this shape, because each reflection merely
/// transposes two adjacent η's.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleSystem {
    pub n: usize,
    pub m: usize,
    eta: Vec<BasisVector>,
    negative: bool,
}

impl SimpleSystem {
    /// Build from a shuffle string of `E`/`D` characters: the k-th character
    /// says whether η_k is the next unused ε or δ.
    pub fn from_shuffle(n: usize, m: usize, shuffle: &str, negative: bool) -> Result<Self, Error> {
        let rs = SuperRootSystem::new(n, m)?;
        let mut ne = 0;
        let mut nd = 0;
        let mut eta = Vec::with_capacity(rs.dim());
        for ch in shuffle.chars() {
            match ch.to_ascii_uppercase() {
                'E' => {
                    ne += 1;
                    eta.push(BasisVector::Eps(ne));
                }
                'D' => {
                    nd += 1;
                    eta.push(BasisVector::Delta(nd));
                }
                _ => {
                    return Err(Error::InvalidSimpleSystem(format!(
                        "shuffle characters must be E or D, got {:?}",
                        ch
                    )))
                }
            }
        }
        if ne != n || nd != m {
            return Err(Error::InvalidSimpleSystem(format!(
                "shuffle must contain {} E's and {} D's",
                n, m
            )));
        }
        Ok(SimpleSystem {
            n,
            m,
            eta,
            negative,
        })
    }

    /// Build from the two strictly increasing position sequences S (for ε)
    /// and T (for δ) partitioning 1..n+m.
    pub fn from_st(n: usize, m: usize, s: &[usize], t: &[usize], negative: bool) -> Result<Self, Error> {
        if s.len() != n || t.len() != m {
            return Err(Error::InvalidSimpleSystem(format!(
                "need |S| = {} and |T| = {}",
                n, m
            )));
        }
        for w in [s, t] {
            if !w.windows(2).all(|p| p[0] < p[1]) {
                return Err(Error::InvalidSimpleSystem(
                    "S and T must be strictly increasing".into(),
                ));
            }
        }
        let mut shuffle = vec!['?'; n + m];
        for (&pos, ch) in s.iter().map(|p| (p, 'E')).chain(t.iter().map(|p| (p, 'D'))) {
            if pos < 1 || pos > n + m || shuffle[pos - 1] != '?' {
                return Err(Error::InvalidSimpleSystem(
                    "S and T must partition 1..n+m".into(),
                ));
            }
            shuffle[pos - 1] = ch;
        }
        SimpleSystem::from_shuffle(n, m, &shuffle.iter().collect::<String>(), negative)
    }

    /// The standard system {ε_1−ε_2, ..., ε_n−δ_1, ..., δ_{m−1}−δ_m}.
    pub fn standard(n: usize, m: usize) -> Result<Self, Error> {
        let shuffle: String = std::iter::repeat('E')
            .take(n)
            .chain(std::iter::repeat('D').take(m))
            .collect();
        SimpleSystem::from_shuffle(n, m, &shuffle, false)
    }

    pub fn system(&self) -> SuperRootSystem {
        SuperRootSystem {
            n: self.n,
            m: self.m,
        }
    }

    pub fn rank(&self) -> usize {
        self.eta.len() - 1
    }

    pub fn simple_root(&self, i: usize) -> SuperRoot {
        let r = SuperRoot::new(self.eta[i], self.eta[i + 1]);
        if self.negative {
            r.negate()
        } else {
            r
        }
    }

    pub fn simple_roots(&self) -> Vec<SuperRoot> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn colours(&self) -> Vec<Parity> {
        (0..self.rank()).map(|i| self.simple_root(i).parity()).collect()
    }

    /// Reflect the simple system at simple root i. For even α_i this is the
    /// Weyl reflection s_{α_i}, for odd α_i the odd reflection; both amount
    /// to transposing η_{i+1} and η_{i+2}.
    pub fn reflect(&self, i: usize) -> Result<SimpleSystem, Error> {
        if i >= self.rank() {
            return Err(Error::InvalidParameters(format!(
                "simple root index {} out of range",
                i + 1
            )));
        }
        let mut out = self.clone();
        out.eta.swap(i, i + 1);
        Ok(out)
    }

    /// Position of a basis vector in the η ordering.
    fn position(&self, b: BasisVector) -> usize {
        self.eta.iter().position(|&x| x == b).expect("basis vector in eta")
    }

    /// Coefficients of a root over the simple roots: an interval indicator
    /// with sign.
    pub fn coefficients(&self, root: SuperRoot) -> Vec<i64> {
        let p = self.position(root.plus);
        let q = self.position(root.minus);
        let sign = if (p < q) != self.negative { 1 } else { -1 };
        let (lo, hi) = (p.min(q), p.max(q));
        (0..self.rank())
            .map(|i| if lo <= i && i < hi { sign } else { 0 })
            .collect()
    }

    /// Coordinates of a root in the η-chain ordering (+chain sign), i.e.
    /// over the basis in which the i-th simple root is e_i − e_{i+1}.
    pub fn chain_coordinates(&self, root: SuperRoot) -> Vec<i64> {
        let mut v = vec![0i64; self.eta.len()];
        let s = if self.negative { -1 } else { 1 };
        v[self.position(root.plus)] = s;
        v[self.position(root.minus)] = -s;
        v
    }

    /// Inverse of `chain_coordinates`: recover the root from a ±1 pair.
    pub fn unchain(&self, v: &[i64]) -> Result<SuperRoot, Error> {
        let s = if self.negative { -1 } else { 1 };
        let p = v.iter().position(|&x| x == s);
        let q = v.iter().position(|&x| x == -s);
        match (p, q) {
            (Some(p), Some(q))
                if v.len() == self.eta.len()
                    && v.iter().map(|x| x.abs()).sum::<i64>() == 2 =>
            {
                Ok(SuperRoot::new(self.eta[p], self.eta[q]))
            }
            _ => Err(Error::InvalidParameters(format!(
                "{:?} is not a root in chain coordinates",
                v
            ))),
        }
    }

    pub fn is_positive(&self, root: SuperRoot) -> bool {
        (self.position(root.plus) < self.position(root.minus)) != self.negative
    }

    /// Positive roots in lexicographic (η-interval) order.
    pub fn positive_roots(&self) -> Vec<SuperRoot> {
        let mut out = Vec::new();
        for p in 0..self.eta.len() {
            for q in (p + 1)..self.eta.len() {
                let r = SuperRoot::new(self.eta[p], self.eta[q]);
                out.push(if self.negative { r.negate() } else { r });
            }
        }
        out
    }

    /// The coloured Dynkin diagram of this simple system with a chosen
    /// orientation string.
    pub fn dynkin_quiver(&self, orient: &str) -> Result<ColouredQuiver, Error> {
        ColouredQuiver::from_orient_str(self.colours(), orient)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rs = self.system();
        json!(self
            .simple_roots()
            .into_iter()
            .map(|r| rs.root_json(r))
            .collect::<Vec<_>>())
    }
}

/// A word in the simple reflections (0-based letters).
pub type Word = Vec<usize>;

pub fn word_to_string(word: &[usize]) -> String {
    word.iter().map(|&l| format!("s{}", l + 1)).collect()
}

/// The reflection s_k of A_{d−1} on the e-basis: transpose coordinates
/// k, k+1 (0-based).
pub fn simple_reflection_action(k: usize, v: &[i64]) -> Vec<i64> {
    let mut w = v.to_vec();
    w.swap(k, k + 1);
    w
}

/// Apply s_{i_1}···s_{i_r} to v (rightmost letter acts first).
pub fn apply_word(word: &[usize], v: &[i64]) -> Vec<i64> {
    let mut w = v.to_vec();
    for &l in word.iter().rev() {
        w.swap(l, l + 1);
    }
    w
}

/// e-vector of the k-th simple root of A_{d−1} (0-based).
pub fn simple_root_vector(k: usize, d: usize) -> Vec<i64> {
    let mut v = vec![0i64; d];
    v[k] = 1;
    v[k + 1] = -1;
    v
}

fn is_positive_vector(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

/// A reduced word for the longest element adapted to the orientation of
/// `quiver`: letter k is a sink of the (k−1)-fold reflected orientation.
///
/// Construction: cycle through the sink-order Coxeter word, appending each
/// letter whose prefix root γ stays a new positive root and skipping the
/// rest, until the word reaches length |R⁺|.
pub fn adapted_longest_word(quiver: &ColouredQuiver) -> Word {
    let k = quiver.num_vertices();
    let d = k + 1;
    let target = k * (k + 1) / 2;
    let cox = quiver.sink_order();
    let mut word = Word::new();
    let mut gammas: Vec<Vec<i64>> = Vec::new();
    while word.len() < target {
        let before = word.len();
        for &l in &cox {
            if word.len() == target {
                break;
            }
            let gamma = apply_word(&word, &simple_root_vector(l, d));
            if is_positive_vector(&gamma) && !gammas.contains(&gamma) {
                word.push(l);
                gammas.push(gamma);
            }
        }
        assert!(word.len() > before, "adapted word construction stalled");
    }
    word
}

/// Prefix roots γ_k = s_{i_1}···s_{i_{k−1}} α_{i_k} of a word, failing if a
/// prefix root repeats or goes negative (i.e. the word is not reduced).
pub fn enumerate_positive_roots(word: &[usize], d: usize) -> Result<Vec<Vec<i64>>, Error> {
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(word.len());
    for (j, &l) in word.iter().enumerate() {
        let gamma = apply_word(&word[..j], &simple_root_vector(l, d));
        if !is_positive_vector(&gamma) {
            return Err(Error::InvalidParameters(format!(
                "word is not reduced: prefix root {} is negative",
                j + 1
            )));
        }
        if out.contains(&gamma) {
            return Err(Error::InvalidParameters(format!(
                "word is not reduced: prefix root {} repeats",
                j + 1
            )));
        }
        out.push(gamma);
    }
    Ok(out)
}

/// Coxeter word: every vertex once, in sink order.
pub fn coxeter_word(quiver: &ColouredQuiver) -> Word {
    quiver.sink_order()
}

/// The Coxeter element as a permutation of the e-basis (image[a] = C(e_a)).
pub fn coxeter_permutation(word: &[usize], d: usize) -> Vec<usize> {
    (0..d)
        .map(|a| {
            let mut x = a;
            for &l in word.iter().rev() {
                if x == l {
                    x = l + 1;
                } else if x == l + 1 {
                    x = l;
                }
            }
            x
        })
        .collect()
}

/// Simple-root coordinates of an e-basis lattice vector with coordinate sum
/// zero; for a positive root this is its dimension-vector realization.
pub fn to_simple_coords(v: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    v[..v.len() - 1]
        .iter()
        .map(|&x| {
            acc += x;
            acc
        })
        .collect()
}

pub fn apply_permutation(perm: &[usize], v: &[i64]) -> Vec<i64> {
    let mut w = vec![0i64; v.len()];
    for (a, &img) in perm.iter().enumerate() {
        w[img] = v[a];
    }
    w
}
