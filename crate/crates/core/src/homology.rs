//! Reduced simplicial homology over a field.
//!
//! Chains live in the augmented complex: the empty face spans degree -1, so
//! `{∅}` has `dim H̃_{-1} = 1`. Faces of each degree are ordered by bit value;
//! a face is oriented by ascending vertex order and deleting its `j`-th vertex
//! carries sign `(-1)^j`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{FieldId, FieldScalar, Gf2};
use crate::linalg::{BitMatrix, Matrix};

/// `dim H̃_i(K; k)` for `i = -1 ..= dim K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    field: FieldId,
    dims: BTreeMap<i32, usize>,
}

impl HomologyProfile {
    pub fn field(&self) -> FieldId {
        self.field
    }

    /// Betti number in degree `i`; zero outside the stored range.
    pub fn dim(&self, i: i32) -> usize {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// Lowest degree with nonzero homology.
    pub fn first_nonzero(&self) -> Option<(i32, usize)> {
        self.dims.iter().find(|(_, &d)| d > 0).map(|(&i, &d)| (i, d))
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.dims.iter().map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// Same Betti numbers in every degree, ignoring the field tag.
    pub fn same_dims(&self, other: &HomologyProfile) -> bool {
        let lo = self.dims.keys().chain(other.dims.keys()).copied().min().unwrap_or(-1);
        let hi = self.dims.keys().chain(other.dims.keys()).copied().max().unwrap_or(-1);
        (lo..=hi).all(|i| self.dim(i) == other.dim(i))
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Dims<'a>(&'a BTreeMap<i32, usize>);
        impl Serialize for Dims<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let nonzero: Vec<_> = self.0.iter().filter(|(_, &d)| d > 0).collect();
                let mut m = s.serialize_map(Some(nonzero.len()))?;
                for (i, d) in nonzero {
                    m.serialize_entry(&i.to_string(), d)?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("field", &self.field)?;
        m.serialize_entry("dims", &Dims(&self.dims))?;
        m.end()
    }
}

/// Faces grouped by degree: `levels[i + 1]` holds the degree-`i` faces.
struct Levels {
    levels: Vec<Vec<u64>>,
    index: Vec<HashMap<u64, usize>>,
}

impl Levels {
    fn new(k: &SimplicialComplex) -> Self {
        let top = k.dim().map_or(0, |d| (d + 2) as usize);
        let mut levels = vec![Vec::new(); top];
        for &f in k.raw_faces() {
            levels[f.count_ones() as usize].push(f);
        }
        let index = levels.iter().map(|l| l.iter().enumerate().map(|(i, &f)| (f, i)).collect()).collect();
        Levels { levels, index }
    }

    fn count(&self, degree: i32) -> usize {
        self.levels.get((degree + 1) as usize).map_or(0, Vec::len)
    }

    /// Nonzero entries of `∂_degree` as `(row, col, positive)`.
    fn entries(&self, degree: i32) -> Vec<(usize, usize, bool)> {
        let mut out = Vec::new();
        if degree < 0 {
            return out;
        }
        let cols = &self.levels[(degree + 1) as usize];
        let rows = &self.index[degree as usize];
        for (c, &face) in cols.iter().enumerate() {
            let mut bits = face;
            let mut j = 0;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                bits &= bits - 1;
                out.push((rows[&(face & !low)], c, j % 2 == 0));
                j += 1;
            }
        }
        out
    }

    fn generic_matrix<F: FieldScalar>(&self, degree: i32) -> Matrix<F> {
        let mut m = Matrix::zeros(self.count(degree - 1), self.count(degree));
        for (r, c, positive) in self.entries(degree) {
            m.set(r, c, if positive { F::one() } else { -F::one() });
        }
        m
    }

    fn bit_matrix(&self, degree: i32) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.count(degree - 1), self.count(degree));
        for (r, c, _) in self.entries(degree) {
            m.set(r, c);
        }
        m
    }
}

fn check_degree(k: &SimplicialComplex, degree: i32) -> Result<()> {
    let max = k.dim().ok_or(Error::VoidComplex)?;
    if degree < -1 || degree > max {
        return Err(Error::DegreeOutOfRange { degree, max });
    }
    Ok(())
}

/// Matrix of `∂_i : C̃_i → C̃_{i-1}` over any scalar type.
pub fn boundary_matrix_over<F: FieldScalar>(k: &SimplicialComplex, degree: i32) -> Result<Matrix<F>> {
    check_degree(k, degree)?;
    Ok(Levels::new(k).generic_matrix(degree))
}

/// A boundary matrix tagged with its field.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryMatrix {
    Gf2(Matrix<Gf2>),
    Rational(Matrix<BigRational>),
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        match self {
            BoundaryMatrix::Gf2(m) => m.rows(),
            BoundaryMatrix::Rational(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            BoundaryMatrix::Gf2(m) => m.cols(),
            BoundaryMatrix::Rational(m) => m.cols(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            BoundaryMatrix::Gf2(m) => m.rank(),
            BoundaryMatrix::Rational(m) => m.rank(),
        }
    }
}

pub fn boundary_matrix(k: &SimplicialComplex, degree: i32, field: FieldId) -> Result<BoundaryMatrix> {
    Ok(match field {
        FieldId::Gf2 => BoundaryMatrix::Gf2(boundary_matrix_over(k, degree)?),
        FieldId::Rational => BoundaryMatrix::Rational(boundary_matrix_over(k, degree)?),
    })
}

fn profile_from_ranks(k: &SimplicialComplex, field: FieldId, rank: impl Fn(&Levels, i32) -> usize) -> Result<HomologyProfile> {
    let top = k.dim().ok_or(Error::VoidComplex)?;
    let levels = Levels::new(k);
    // ranks[i + 1] = rank ∂_i for i in -1..=top+1
    let ranks: Vec<usize> = (-1..=top + 1).map(|i| if i < 0 || i > top { 0 } else { rank(&levels, i) }).collect();
    let dims = (-1..=top)
        .map(|i| {
            let idx = (i + 1) as usize;
            (i, levels.count(i) - ranks[idx] - ranks[idx + 1])
        })
        .collect();
    Ok(HomologyProfile { field, dims })
}

/// Reduced homology by generic exact elimination over `F`.
pub fn reduced_homology_over<F: FieldScalar>(k: &SimplicialComplex, field: FieldId) -> Result<HomologyProfile> {
    profile_from_ranks(k, field, |levels, i| levels.generic_matrix::<F>(i).rank())
}

/// Reduced homology; GF(2) uses packed bit rows, the rationals use exact fractions.
pub fn reduced_homology(k: &SimplicialComplex, field: FieldId) -> Result<HomologyProfile> {
    match field {
        FieldId::Gf2 => profile_from_ranks(k, field, |levels, i| levels.bit_matrix(i).rank()),
        FieldId::Rational => reduced_homology_over::<BigRational>(k, field),
    }
}

/// `χ̃(K) = Σ_{σ ∈ K} (-1)^{|σ| - 1}`.
pub fn euler_characteristic(k: &SimplicialComplex) -> Result<i64> {
    k.euler_characteristic()
}
