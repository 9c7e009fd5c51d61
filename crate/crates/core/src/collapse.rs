//! Strong and elementary collapses, and a three-valued contractibility verdict.

use serde::Serialize;

use crate::codeword::Codeword;
use crate::complex::{star, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldId;
use crate::homology::reduced_homology;

/// `dominated` lies only in facets that also contain `dominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DominationWitness {
    pub dominated: usize,
    pub dominator: usize,
}

/// A run of elementary strong collapses and the complex it ends in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseSequence {
    pub steps: Vec<DominationWitness>,
    pub core: SimplicialComplex,
}

impl CollapseSequence {
    /// Re-applies every step to `start`, checking each domination, and
    /// returns the resulting complex.
    pub fn replay(&self, start: &SimplicialComplex) -> Result<SimplicialComplex> {
        let mut k = start.clone();
        for step in &self.steps {
            if !is_dominated_by(&k, step.dominated, step.dominator) {
                return Err(Error::FaceNotInComplex { face: format!("domination {}<{}", step.dominated, step.dominator) });
            }
            k = k.delete_vertex(step.dominated)?;
        }
        Ok(k)
    }

    /// Core is `{∅, v}` for a single vertex `v`.
    pub fn ends_in_point(&self) -> bool {
        self.core.len() == 2
    }
}

fn is_dominated_by(k: &SimplicialComplex, v: usize, by: usize) -> bool {
    if v == by || v == 0 || by == 0 || v > k.n() || by > k.n() {
        return false;
    }
    let (bv, bw) = (1u64 << (v - 1), 1u64 << (by - 1));
    let mut any = false;
    for &f in k.raw_facets() {
        if f & bv != 0 {
            any = true;
            if f & bw == 0 {
                return false;
            }
        }
    }
    any
}

/// All ordered pairs `(v, v')` with `v` dominated by `v'`, sorted.
pub fn dominated_vertices(k: &SimplicialComplex) -> Result<Vec<DominationWitness>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut out = Vec::new();
    for v in k.vertex_set().neurons() {
        let bit = 1u64 << (v - 1);
        let common = k.raw_facets().iter().filter(|&&f| f & bit != 0).fold(u64::MAX, |acc, f| acc & f) & !bit;
        let others = Codeword::from_raw(k.n(), common & crate::codeword::mask(k.n()));
        out.extend(others.neurons().map(|w| DominationWitness { dominated: v, dominator: w }));
    }
    Ok(out)
}

/// Strong-collapses `k` by repeatedly deleting the lowest-indexed dominated
/// vertex (witnessed by its lowest-indexed dominator).
pub fn strong_collapse_core(k: &SimplicialComplex) -> Result<CollapseSequence> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut core = k.clone();
    let mut steps = Vec::new();
    while let Some(&w) = dominated_vertices(&core)?.first() {
        core = core.delete_vertex(w.dominated)?;
        steps.push(w);
    }
    Ok(CollapseSequence { steps, core })
}

/// Pairs `σ ⊊ τ` with `st(σ, K) = {σ, τ}`, `σ` nonempty.
pub fn free_face_pairs(k: &SimplicialComplex) -> Vec<(Codeword, Codeword)> {
    let mut out = Vec::new();
    for sigma in k.faces().filter(|f| !f.is_empty()) {
        let st = star(k, &sigma).expect("face of k");
        if st.len() == 2 {
            let tau = if st[0] == sigma { st[1] } else { st[0] };
            out.push((sigma, tau));
        }
    }
    out
}

/// Removes a free face pair.
pub fn elementary_collapse(k: &SimplicialComplex, sigma: &Codeword, tau: &Codeword) -> Result<SimplicialComplex> {
    let bad = || Error::NotAFreeFacePair { sigma: sigma.to_binary(), tau: tau.to_binary() };
    if sigma.is_empty() || sigma == tau || !sigma.is_subset(tau) || !k.contains(sigma) || !k.contains(tau) {
        return Err(bad());
    }
    let st = star(k, sigma)?;
    if st.len() != 2 {
        return Err(bad());
    }
    let faces = k.raw_faces().iter().copied().filter(|&f| f != sigma.bits() && f != tau.bits()).collect();
    Ok(SimplicialComplex::from_closed_faces(k.n(), faces))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ContractibilityVerdict {
    /// The strong-collapse core is a single vertex.
    ContractibleCertified { certificate: CollapseSequence },
    /// Reduced homology is nonzero in `degree`.
    NonContractibleCertified { degree: i32, dim: usize, field: FieldId },
    Unknown,
}

/// A verdict without its certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Contractible,
    NonContractible,
    Unknown,
}

impl ContractibilityVerdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            ContractibilityVerdict::ContractibleCertified { .. } => VerdictKind::Contractible,
            ContractibilityVerdict::NonContractibleCertified { .. } => VerdictKind::NonContractible,
            ContractibilityVerdict::Unknown => VerdictKind::Unknown,
        }
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self, ContractibilityVerdict::ContractibleCertified { .. })
    }

    pub fn is_non_contractible(&self) -> bool {
        matches!(self, ContractibilityVerdict::NonContractibleCertified { .. })
    }

    /// Re-checks the certificate against `k`.
    pub fn check(&self, k: &SimplicialComplex) -> bool {
        match self {
            ContractibilityVerdict::ContractibleCertified { certificate } => {
                certificate.ends_in_point() && certificate.replay(k).is_ok_and(|c| c == certificate.core)
            }
            ContractibilityVerdict::NonContractibleCertified { degree, dim, field } => {
                reduced_homology(k, *field).is_ok_and(|h| h.dim(*degree) == *dim && *dim > 0)
            }
            ContractibilityVerdict::Unknown => true,
        }
    }
}

/// Strong collapse first; nonzero reduced homology second; otherwise unknown.
pub fn contractibility(k: &SimplicialComplex, field: FieldId) -> Result<ContractibilityVerdict> {
    let seq = strong_collapse_core(k)?;
    if seq.ends_in_point() {
        return Ok(ContractibilityVerdict::ContractibleCertified { certificate: seq });
    }
    let h = reduced_homology(k, field)?;
    Ok(match h.first_nonzero() {
        Some((degree, dim)) => ContractibilityVerdict::NonContractibleCertified { degree, dim, field },
        None => ContractibilityVerdict::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::{NeuralCode, NotationForm};
    use crate::complex::{cone, delta};

    fn w(n: usize, s: &str) -> Codeword {
        crate::codeword::parse_codeword(s, NotationForm::Word, n).unwrap()
    }

    fn cx(n: usize, s: &str) -> SimplicialComplex {
        delta(&NeuralCode::parse(n, NotationForm::Word, s.split(',')).unwrap())
    }

    #[test]
    fn dominated_examples() {
        let d = dominated_vertices(&cx(2, "12")).unwrap();
        assert_eq!(
            d,
            vec![DominationWitness { dominated: 1, dominator: 2 }, DominationWitness { dominated: 2, dominator: 1 }]
        );
        assert!(dominated_vertices(&SimplicialComplex::hollow_simplex(3).unwrap()).unwrap().is_empty());
        // duplicate neuron 1 of {12, 23}: neuron 4 copies neuron 1
        let dup = cx(4, "124,23");
        assert!(dominated_vertices(&dup).unwrap().contains(&DominationWitness { dominated: 4, dominator: 1 }));
        assert_eq!(dominated_vertices(&SimplicialComplex::void(2).unwrap()), Err(Error::VoidComplex));
    }

    #[test]
    fn core_examples() {
        let s = strong_collapse_core(&SimplicialComplex::simplex(4).unwrap()).unwrap();
        assert!(s.ends_in_point());
        assert_eq!(s.steps.len(), 3);
        let h = SimplicialComplex::hollow_simplex(3).unwrap();
        let s = strong_collapse_core(&h).unwrap();
        assert!(s.steps.is_empty());
        assert_eq!(s.core, h);
        let c = cone(&h, 4).unwrap();
        let s = strong_collapse_core(&c).unwrap();
        assert!(s.ends_in_point());
        assert_eq!(s.replay(&c).unwrap(), s.core);
    }

    #[test]
    fn free_face_examples() {
        let k = cx(2, "12");
        let pairs = free_face_pairs(&k);
        assert!(pairs.contains(&(w(2, "1"), w(2, "12"))));
        assert_eq!(elementary_collapse(&k, &w(2, "1"), &w(2, "12")).unwrap(), cx(2, "2"));
        assert!(free_face_pairs(&SimplicialComplex::hollow_simplex(3).unwrap()).is_empty());
        let t = SimplicialComplex::simplex(3).unwrap();
        assert!(free_face_pairs(&t).contains(&(w(3, "12"), w(3, "123"))));
        assert!(matches!(
            elementary_collapse(&t, &w(3, "1"), &w(3, "12")),
            Err(Error::NotAFreeFacePair { .. })
        ));
        assert!(elementary_collapse(&k, &w(2, "∅"), &w(2, "1")).is_err());
    }

    #[test]
    fn verdict_examples() {
        let v = contractibility(&SimplicialComplex::simplex(5).unwrap(), FieldId::Gf2).unwrap();
        assert!(v.is_contractible());
        assert!(v.check(&SimplicialComplex::simplex(5).unwrap()));
        let h = SimplicialComplex::hollow_simplex(3).unwrap();
        assert_eq!(
            contractibility(&h, FieldId::Gf2).unwrap(),
            ContractibilityVerdict::NonContractibleCertified { degree: 1, dim: 1, field: FieldId::Gf2 }
        );
        let e = SimplicialComplex::empty_face(3).unwrap();
        assert_eq!(
            contractibility(&e, FieldId::Rational).unwrap(),
            ContractibilityVerdict::NonContractibleCertified { degree: -1, dim: 1, field: FieldId::Rational }
        );
    }

    #[test]
    fn forged_certificates_fail_check() {
        let h = SimplicialComplex::hollow_simplex(3).unwrap();
        let fake = ContractibilityVerdict::ContractibleCertified {
            certificate: CollapseSequence {
                steps: vec![DominationWitness { dominated: 1, dominator: 2 }],
                core: cx(3, "23"),
            },
        };
        assert!(!fake.check(&h));
        let fake = ContractibilityVerdict::NonContractibleCertified { degree: 0, dim: 1, field: FieldId::Gf2 };
        assert!(!fake.check(&h));
    }
}
