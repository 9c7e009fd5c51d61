//! Simplicial complexes on `[n]`.
//!
//! Faces are stored explicitly alongside the facet antichain. The void
//! complex (no faces at all) is distinct from `{∅}`, the complex whose only
//! face is the empty face.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::codeword::{self, maximal_elements, Codeword, NeuralCode, NotationForm};
use crate::error::{Error, Result};

/// A vertex index in `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize, n: usize) -> Result<Self> {
        if index == 0 || index > n {
            return Err(Error::NeuronOutOfRange { index, n });
        }
        Ok(VertexId(index))
    }

    pub fn index(&self) -> usize {
        self.0
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    faces: BTreeSet<u64>,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(n: usize) -> Result<Self> {
        Codeword::empty(n)?;
        Ok(SimplicialComplex { n, faces: BTreeSet::new(), facets: Vec::new() })
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Result<Self> {
        closure_of([Codeword::empty(n)?], n)
    }

    /// Full simplex on `[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        closure_of([Codeword::full(n)?], n)
    }

    /// Boundary of the full simplex on `[n]`.
    pub fn hollow_simplex(n: usize) -> Result<Self> {
        let full = Codeword::full(n)?;
        let facets: Vec<Codeword> = (1..=n).map(|v| full.without(v)).collect::<Result<_>>()?;
        closure_of(facets, n)
    }

    pub fn from_facets<I: IntoIterator<Item = Codeword>>(n: usize, facets: I) -> Result<Self> {
        closure_of(facets, n)
    }

    /// Internal constructor from a downward-closed set of raw faces.
    pub(crate) fn from_closed_faces(n: usize, faces: BTreeSet<u64>) -> Self {
        let full = codeword::mask(n);
        let facets = faces
            .iter()
            .copied()
            .filter(|&f| {
                let mut rest = full & !f;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest &= rest - 1;
                    if faces.contains(&(f | b)) {
                        return false;
                    }
                }
                true
            })
            .collect();
        let k = SimplicialComplex { n, faces, facets };
        debug_assert!(k.is_downward_closed());
        k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Number of faces, counting ∅.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    /// Faces in increasing bit-value order.
    pub fn faces(&self) -> impl Iterator<Item = Codeword> + '_ {
        let n = self.n;
        self.faces.iter().map(move |&b| Codeword::from_raw(n, b))
    }

    pub fn face_set(&self) -> BTreeSet<Codeword> {
        self.faces().collect()
    }

    pub fn facets(&self) -> Vec<Codeword> {
        self.facets.iter().map(|&b| Codeword::from_raw(self.n, b)).collect()
    }

    pub(crate) fn raw_faces(&self) -> &BTreeSet<u64> {
        &self.faces
    }

    pub(crate) fn raw_facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn contains(&self, face: &Codeword) -> bool {
        face.n() == self.n && self.faces.contains(&face.bits())
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    /// Vertex set `V_K`, as a codeword.
    pub fn vertex_set(&self) -> Codeword {
        Codeword::from_raw(self.n, self.facets.iter().fold(0, |acc, f| acc | f))
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.vertex_set().neurons().map(VertexId).collect()
    }

    /// Faces of dimension `d` in increasing bit-value order.
    pub fn faces_of_dim(&self, d: i32) -> Vec<Codeword> {
        self.faces().filter(|f| f.dim() == d).collect()
    }

    /// Reduced Euler characteristic, `Σ (-1)^dim σ` over all faces including ∅.
    pub fn euler_characteristic(&self) -> Result<i64> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        Ok(self.faces.iter().map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 }).sum())
    }

    fn require(&self, face: &Codeword) -> Result<()> {
        if face.n() != self.n {
            return Err(Error::WidthMismatch { expected: self.n, found: face.n() });
        }
        if !self.contains(face) {
            return Err(Error::FaceNotInComplex { face: face.to_binary() });
        }
        Ok(())
    }

    /// Induced subcomplex on all vertices except `v` (`K ∖ v`).
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        VertexId::new(v, self.n)?;
        let bit = 1u64 << (v - 1);
        let faces = self.faces.iter().copied().filter(|f| f & bit == 0).collect();
        Ok(SimplicialComplex::from_closed_faces(self.n, faces))
    }

    /// The same faces seen on `m >= n` vertices.
    pub fn widen(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::WidthMismatch { expected: self.n, found: m });
        }
        Codeword::empty(m)?;
        Ok(SimplicialComplex { n: m, faces: self.faces.clone(), facets: self.facets.clone() })
    }

    /// Minimal non-faces, i.e. minimal `τ ⊆ [n]` with `τ ∉ K`, sorted.
    pub fn minimal_nonfaces(&self) -> Vec<Codeword> {
        if self.is_void() {
            return vec![Codeword::from_raw(self.n, 0)];
        }
        let mut found = BTreeSet::new();
        for v in 0..self.n {
            let single = 1u64 << v;
            if !self.faces.contains(&single) {
                found.insert(single);
            }
        }
        let verts = self.vertex_set().bits();
        for &f in &self.faces {
            let mut rest = verts & !f;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let t = f | b;
                if self.faces.contains(&t) || found.contains(&t) {
                    continue;
                }
                let mut bits = f;
                let mut minimal = true;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    if !self.faces.contains(&(t & !low)) {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    found.insert(t);
                }
            }
        }
        let mut out: Vec<Codeword> = found.into_iter().map(|b| Codeword::from_raw(self.n, b)).collect();
        out.sort();
        out
    }

    fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            let mut bits = f;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                bits &= bits - 1;
                if !self.faces.contains(&(f & !low)) {
                    return false;
                }
            }
            true
        })
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "SimplicialComplex(n={}, void)", self.n);
        }
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets())
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    n: usize,
    facets: Vec<String>,
}

impl Serialize for SimplicialComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let facets = self.facets();
        ComplexRepr { n: self.n, facets: codeword::sorted_binary(facets.iter()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(d)?;
        let facets = repr
            .facets
            .iter()
            .map(|t| codeword::parse_codeword(t, NotationForm::Binary, repr.n))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        closure_of(facets, repr.n).map_err(serde::de::Error::custom)
    }
}

/// Smallest simplicial complex containing every given face.
pub fn closure_of<I: IntoIterator<Item = Codeword>>(faces: I, n: usize) -> Result<SimplicialComplex> {
    let mut generators = Vec::new();
    for f in faces {
        if f.n() != n {
            return Err(Error::WidthMismatch { expected: n, found: f.n() });
        }
        generators.push(f);
    }
    let mut out = SimplicialComplex::void(n)?;
    let tops = maximal_elements(generators.iter());
    for top in &tops {
        let f = top.bits();
        let mut s = f;
        loop {
            out.faces.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    out.facets = tops.iter().map(Codeword::bits).collect();
    Ok(out)
}

/// `Δ(C)`: all subsets of codewords of `C`.
pub fn delta(code: &NeuralCode) -> SimplicialComplex {
    closure_of(code.words().iter().copied(), code.n()).expect("code words share the code width")
}

/// `Lk_σ(K) = {ω ∈ K : ω ∩ σ = ∅, ω ∪ σ ∈ K}`.
pub fn link(k: &SimplicialComplex, sigma: &Codeword) -> Result<SimplicialComplex> {
    k.require(sigma)?;
    let s = sigma.bits();
    let faces = k.faces.iter().copied().filter(|&w| w & s == 0 && k.faces.contains(&(w | s))).collect();
    Ok(SimplicialComplex::from_closed_faces(k.n, faces))
}

/// `K|_Γ = K ∩ Δ(Γ)`.
pub fn restriction<'a, I: IntoIterator<Item = &'a Codeword>>(k: &SimplicialComplex, gamma: I) -> Result<SimplicialComplex> {
    let mut tops = Vec::new();
    for g in gamma {
        if g.n() != k.n {
            return Err(Error::WidthMismatch { expected: k.n, found: g.n() });
        }
        tops.push(g.bits());
    }
    let faces = k.faces.iter().copied().filter(|&a| tops.iter().any(|&g| a & !g == 0)).collect();
    Ok(SimplicialComplex::from_closed_faces(k.n, faces))
}

/// `st(σ, K) = {τ ∈ K : σ ⊆ τ}`; not downward closed in general.
pub fn star(k: &SimplicialComplex, sigma: &Codeword) -> Result<Vec<Codeword>> {
    k.require(sigma)?;
    let s = sigma.bits();
    Ok(k.faces.iter().filter(|&&t| t & s == s).map(|&t| Codeword::from_raw(k.n, t)).collect())
}

/// `K|^σ = Δ(st(σ, K))`.
pub fn closed_star(k: &SimplicialComplex, sigma: &Codeword) -> Result<SimplicialComplex> {
    closure_of(star(k, sigma)?, k.n)
}

/// `cone_v(K) = K ∪ {σ ∪ v : σ ∈ K}`. When `v = n + 1` the result lives on `n + 1` vertices.
pub fn cone(k: &SimplicialComplex, v: usize) -> Result<SimplicialComplex> {
    let target_n = if v == k.n + 1 { k.n + 1 } else { k.n };
    VertexId::new(v, target_n)?;
    let k = k.widen(target_n)?;
    let bit = 1u64 << (v - 1);
    if k.vertex_set().bits() & bit != 0 {
        return Err(Error::VertexAlreadyPresent { vertex: v });
    }
    let mut faces = k.faces.clone();
    faces.extend(k.faces.iter().map(|f| f | bit));
    let facets = k.facets.iter().map(|f| f | bit).collect();
    Ok(SimplicialComplex { n: target_n, faces, facets })
}

/// Intersection of all facets of `K` containing `σ`.
pub fn f_sigma(k: &SimplicialComplex, sigma: &Codeword) -> Result<Codeword> {
    k.require(sigma)?;
    let s = sigma.bits();
    let bits = k.facets.iter().filter(|&&f| f & s == s).fold(codeword::mask(k.n), |acc, f| acc & f);
    Ok(Codeword::from_raw(k.n, bits))
}

/// Alexander dual `K* = {σ ⊆ [n] : [n] ∖ σ ∉ K}`.
///
/// Facets of `K*` are the complements of the minimal non-faces of `K`.
pub fn dual_complex(k: &SimplicialComplex) -> SimplicialComplex {
    let full = codeword::mask(k.n);
    let tops: Vec<Codeword> =
        k.minimal_nonfaces().iter().map(|t| Codeword::from_raw(k.n, full & !t.bits())).collect();
    closure_of(tops, k.n).expect("complements share the complex width")
}
