//! Square-free monomial ideals: Stanley-Reisner ideals and Alexander duals.
//!
//! A generator `τ ⊆ [n]` stands for the monomial `x^τ = Π_{i∈τ} x_i`; the
//! empty generator is the unit monomial `1`.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::codemaps::Permutation;
use crate::codeword::Codeword;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Ideal given by its minimal square-free generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    min_gens: Vec<Codeword>,
}

fn minimize(gens: BTreeSet<u64>) -> Vec<u64> {
    let mut by_size: Vec<u64> = gens.into_iter().collect();
    by_size.sort_by_key(|g| (g.count_ones(), *g));
    let mut kept: Vec<u64> = Vec::new();
    for g in by_size {
        if !kept.iter().any(|&k| k & !g == 0) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Ideal generated by the given monomials, reduced to its minimal generators.
    pub fn from_generators<I: IntoIterator<Item = Codeword>>(n: usize, gens: I) -> Result<Self> {
        Codeword::empty(n)?;
        let mut bits = BTreeSet::new();
        for g in gens {
            if g.n() != n {
                return Err(Error::WidthMismatch { expected: n, found: g.n() });
            }
            bits.insert(g.bits());
        }
        Ok(Self::from_raw(n, bits))
    }

    pub(crate) fn from_raw(n: usize, gens: BTreeSet<u64>) -> Self {
        let min_gens = minimize(gens).into_iter().map(|b| Codeword::from_raw(n, b)).collect();
        MonomialIdeal { n, min_gens }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_generators(n, [])
    }

    pub fn unit(n: usize) -> Result<Self> {
        Self::from_generators(n, [Codeword::empty(n)?])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minimal generators, sorted by bit value.
    pub fn min_gens(&self) -> &[Codeword] {
        &self.min_gens
    }

    pub fn is_zero(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.min_gens.iter().any(Codeword::is_empty)
    }

    /// `x^σ ∈ I`.
    pub fn contains_monomial(&self, sigma: &Codeword) -> bool {
        self.min_gens.iter().any(|g| g.bits() & sigma.bits() == g.bits())
    }

    /// The same ideal in `m ≥ n` variables.
    pub fn pad_to(&self, m: usize) -> Result<Self> {
        if m < self.n {
            return Err(Error::WidthMismatch { expected: self.n, found: m });
        }
        Ok(MonomialIdeal { n: m, min_gens: self.min_gens.iter().map(|g| g.widen(m)).collect::<Result<_>>()? })
    }

    /// Generators as sorted lists of 1-based variable indices.
    pub fn index_lists(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.min_gens.iter().map(|g| g.neurons().collect()).collect();
        out.sort();
        out
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.index_lists().serialize(s)
    }
}

/// `I_K`, generated by the minimal non-faces of `K`.
pub fn sr_ideal(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    MonomialIdeal::from_generators(k.n(), k.minimal_nonfaces())
}

/// `I* = m^{σ_1} ∩ … ∩ m^{σ_r}`: minimal transversals of the generators.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::DegenerateDual);
    }
    let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
    for g in ideal.min_gens() {
        let vars: Vec<u64> = g.neurons().map(|i| 1u64 << (i - 1)).collect();
        let mut next = BTreeSet::new();
        for &t in &acc {
            if t & g.bits() != 0 {
                next.insert(t);
            } else {
                next.extend(vars.iter().map(|v| t | v));
            }
        }
        acc = minimize(next).into_iter().collect();
    }
    Ok(MonomialIdeal::from_raw(ideal.n(), acc))
}

/// `I ⊇ J`; the narrower ideal is padded with unused variables first.
pub fn ideal_contains(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    let m = i.n().max(j.n());
    let (i, j) = (i.pad_to(m)?, j.pad_to(m)?);
    Ok(j.min_gens().iter().all(|g| i.contains_monomial(g)))
}

/// Relabels `x_i ↦ x_{γ(i)}`.
pub fn permute_ideal(ideal: &MonomialIdeal, gamma: &Permutation) -> Result<MonomialIdeal> {
    if gamma.n() != ideal.n() {
        return Err(Error::NotAPermutation { n: ideal.n(), reason: format!("permutation acts on {} points", gamma.n()) });
    }
    MonomialIdeal::from_generators(ideal.n(), ideal.min_gens().iter().map(|g| gamma.relabel(g)))
}
