//! The homological mandatory set `M_H(Δ)` and a certified `C_min(Δ)`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::codeword::{sorted_binary, Codeword, NeuralCode};
use crate::collapse::{contractibility, VerdictKind};
use crate::complex::{delta, f_sigma, link, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldId;
use crate::homology::reduced_homology;

/// How link contractibility is decided per face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LinkStrategy {
    /// Faces with `σ ≠ f_σ` have cone links and are settled without homology.
    #[default]
    ConeShortcut,
    /// Every link goes through the full computation.
    Exhaustive,
}

/// `M_H(Δ)`: faces whose link has nonzero reduced homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MandatorySet {
    pub faces: BTreeSet<Codeword>,
    pub field: FieldId,
}

impl MandatorySet {
    pub fn contains(&self, face: &Codeword) -> bool {
        self.faces.contains(face)
    }
}

impl Serialize for MandatorySet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MandatorySet", 2)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("mh", &sorted_binary(&self.faces))?;
        st.end()
    }
}

/// `C_min(Δ)` split by what could be certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CminReport {
    pub certified_in: BTreeSet<Codeword>,
    pub certified_out: BTreeSet<Codeword>,
    pub unknown: BTreeSet<Codeword>,
    pub field: FieldId,
    /// Verdict for `Δ` itself; `∅` is in `certified_in` regardless.
    pub delta_verdict: VerdictKind,
}

impl CminReport {
    pub fn is_complete(&self) -> bool {
        self.unknown.is_empty()
    }
}

impl Serialize for CminReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CminReport", 5)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("cmin_in", &sorted_binary(&self.certified_in))?;
        st.serialize_field("cmin_out", &sorted_binary(&self.certified_out))?;
        st.serialize_field("cmin_unknown", &sorted_binary(&self.unknown))?;
        st.serialize_field("delta_verdict", &self.delta_verdict)?;
        st.end()
    }
}

/// `M_H` and `C_min` of one complex, serialized together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MandatoryReport {
    pub mh: MandatorySet,
    pub cmin: CminReport,
}

impl Serialize for MandatoryReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MandatoryReport", 6)?;
        st.serialize_field("field", &self.mh.field)?;
        st.serialize_field("mh", &sorted_binary(&self.mh.faces))?;
        st.serialize_field("cmin_in", &sorted_binary(&self.cmin.certified_in))?;
        st.serialize_field("cmin_out", &sorted_binary(&self.cmin.certified_out))?;
        st.serialize_field("cmin_unknown", &sorted_binary(&self.cmin.unknown))?;
        st.serialize_field("delta_verdict", &self.cmin.delta_verdict)?;
        st.end()
    }
}

pub fn analyze(k: &SimplicialComplex, field: FieldId) -> Result<MandatoryReport> {
    Ok(MandatoryReport { mh: compute_mh(k, field)?, cmin: compute_cmin(k, field)? })
}

fn is_cone_link(k: &SimplicialComplex, sigma: &Codeword) -> Result<bool> {
    Ok(f_sigma(k, sigma)? != *sigma)
}

pub fn compute_mh(k: &SimplicialComplex, field: FieldId) -> Result<MandatorySet> {
    compute_mh_with(k, field, LinkStrategy::default())
}

pub fn compute_mh_with(k: &SimplicialComplex, field: FieldId, strategy: LinkStrategy) -> Result<MandatorySet> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces: Vec<Codeword> = k.faces().collect();
    let flags = faces
        .par_iter()
        .map(|sigma| {
            if strategy == LinkStrategy::ConeShortcut && is_cone_link(k, sigma)? {
                return Ok(false);
            }
            Ok(!reduced_homology(&link(k, sigma)?, field)?.is_zero())
        })
        .collect::<Result<Vec<bool>>>()?;
    let faces = faces.into_iter().zip(flags).filter_map(|(f, keep)| keep.then_some(f)).collect();
    Ok(MandatorySet { faces, field })
}

pub fn compute_cmin(k: &SimplicialComplex, field: FieldId) -> Result<CminReport> {
    compute_cmin_with(k, field, LinkStrategy::default())
}

pub fn compute_cmin_with(k: &SimplicialComplex, field: FieldId, strategy: LinkStrategy) -> Result<CminReport> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let faces: Vec<Codeword> = k.faces().collect();
    let kinds = faces
        .par_iter()
        .map(|sigma| {
            if strategy == LinkStrategy::ConeShortcut && is_cone_link(k, sigma)? {
                return Ok(VerdictKind::Contractible);
            }
            Ok(contractibility(&link(k, sigma)?, field)?.kind())
        })
        .collect::<Result<Vec<VerdictKind>>>()?;
    let mut report = CminReport {
        certified_in: BTreeSet::new(),
        certified_out: BTreeSet::new(),
        unknown: BTreeSet::new(),
        field,
        delta_verdict: VerdictKind::Unknown,
    };
    for (sigma, kind) in faces.into_iter().zip(kinds) {
        if sigma.is_empty() {
            report.delta_verdict = kind;
            report.certified_in.insert(sigma);
            continue;
        }
        match kind {
            VerdictKind::NonContractible => report.certified_in.insert(sigma),
            VerdictKind::Contractible => report.certified_out.insert(sigma),
            VerdictKind::Unknown => report.unknown.insert(sigma),
        };
    }
    Ok(report)
}

/// Outcome of testing whether a code contains its mandatory set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalObstructionCheck {
    pub passes: bool,
    pub missing: Vec<String>,
}

/// A code missing a face of `M_H(Δ(C))` has a local obstruction.
pub fn check_no_local_obstruction_necessary(code: &NeuralCode, field: FieldId) -> Result<LocalObstructionCheck> {
    let k = delta(code);
    if k.is_void() {
        return Ok(LocalObstructionCheck { passes: true, missing: Vec::new() });
    }
    let mh = compute_mh(&k, field)?;
    let missing: Vec<&Codeword> = mh.faces.iter().filter(|f| !code.contains(f)).collect();
    Ok(LocalObstructionCheck { passes: missing.is_empty(), missing: sorted_binary(missing) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::{parse_codeword, NotationForm};

    fn code(n: usize, s: &str) -> NeuralCode {
        NeuralCode::parse(n, NotationForm::Word, s.split(',')).unwrap()
    }

    fn words(n: usize, s: &str) -> BTreeSet<Codeword> {
        s.split(',').filter(|t| !t.is_empty()).map(|t| parse_codeword(t, NotationForm::Word, n).unwrap()).collect()
    }

    #[test]
    fn mh_examples() {
        // the link of 2 is {1, 3, 13} plus the isolated vertex 4, so 2 is mandatory
        let mh = compute_mh(&delta(&code(4, "123,24,2")), FieldId::Gf2).unwrap();
        assert_eq!(mh.faces, words(4, "2,24,123"));
        assert_eq!(serde_json::to_string(&mh).unwrap(), r#"{"field":"GF2","mh":["0100","0101","1110"]}"#);
        assert_eq!(compute_mh(&delta(&code(3, "123,2")), FieldId::Gf2).unwrap().faces, words(3, "123"));
        assert_eq!(compute_mh(&delta(&code(2, "12")), FieldId::Rational).unwrap().faces, words(2, "12"));
        assert_eq!(compute_mh(&SimplicialComplex::void(2).unwrap(), FieldId::Gf2), Err(Error::VoidComplex));
    }

    #[test]
    fn cmin_examples() {
        let r = compute_cmin(&delta(&code(2, "12")), FieldId::Gf2).unwrap();
        assert_eq!(r.certified_in, words(2, "∅,12"));
        assert_eq!(r.certified_out, words(2, "1,2"));
        assert!(r.unknown.is_empty());
        assert_eq!(r.delta_verdict, VerdictKind::Contractible);

        let r = compute_cmin(&delta(&code(4, "123,24,2")), FieldId::Gf2).unwrap();
        assert!(r.certified_in.is_superset(&words(4, "∅,24,123")));

        let full = SimplicialComplex::simplex(4).unwrap();
        let r = compute_cmin(&full, FieldId::Gf2).unwrap();
        assert_eq!(r.certified_in, words(4, "∅,1234"));
        assert_eq!(r.certified_out.len(), 14);

        let r = compute_cmin(&delta(&code(2, "1,2")), FieldId::Gf2).unwrap();
        assert_eq!(r.delta_verdict, VerdictKind::NonContractible);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["cmin_in"], serde_json::json!(["00", "01", "10"]));
    }

    #[test]
    fn strategies_agree_on_examples() {
        for (n, s) in [(4, "123,24,2"), (6, "24,35,45,123"), (3, "12,13,23"), (4, "12,23,34,14,13")] {
            let k = delta(&code(n, s));
            for field in FieldId::ALL {
                assert_eq!(
                    compute_mh_with(&k, field, LinkStrategy::ConeShortcut).unwrap(),
                    compute_mh_with(&k, field, LinkStrategy::Exhaustive).unwrap()
                );
                assert_eq!(
                    compute_cmin_with(&k, field, LinkStrategy::ConeShortcut).unwrap(),
                    compute_cmin_with(&k, field, LinkStrategy::Exhaustive).unwrap()
                );
            }
        }
    }

    #[test]
    fn local_obstruction_examples() {
        let c = check_no_local_obstruction_necessary(&code(4, "123,24,2"), FieldId::Gf2).unwrap();
        assert!(c.passes);
        let c = check_no_local_obstruction_necessary(&code(3, "2"), FieldId::Gf2).unwrap();
        assert!(c.passes);
        assert!(check_no_local_obstruction_necessary(&code(2, "12,1,2"), FieldId::Gf2).unwrap().passes);
        // every face of the hollow triangle is mandatory
        let c = check_no_local_obstruction_necessary(&code(3, "12,13,23,1"), FieldId::Gf2).unwrap();
        assert!(!c.passes);
        assert_eq!(c.missing, vec!["000", "001", "010"]);
    }
}
