//! Mechanical checks that the elementary code maps transform `Δ`, links,
//! `M_H`, `C_min` and Stanley-Reisner ideals as the preservation theorems state.
//!
//! Every check stores both sides as sorted binary strings so its outcome can
//! be recomputed from the report alone.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codemaps::{image_of, insert_coordinate, CodeMap, ElementaryMap, Permutation};
use crate::codeword::{parse_codeword, sorted_binary, Codeword, NeuralCode, NotationForm};
use crate::collapse::VerdictKind;
use crate::complex::{closed_star, closure_of, delta, link, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::FieldId;
use crate::homology::reduced_homology;
use crate::mandatory::{compute_cmin, compute_mh, CminReport};
use crate::sr::{alexander_dual, ideal_contains, permute_ideal, sr_ideal, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Permutation,
    AddTrivialOn,
    AddTrivialOff,
    Duplicate,
    Projection,
    Composition,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::Permutation,
        Theorem::AddTrivialOn,
        Theorem::AddTrivialOff,
        Theorem::Duplicate,
        Theorem::Projection,
        Theorem::Composition,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::Permutation => "permutation",
            Theorem::AddTrivialOn => "add_trivial_on",
            Theorem::AddTrivialOff => "add_trivial_off",
            Theorem::Duplicate => "duplicate",
            Theorem::Projection => "projection",
            Theorem::Composition => "composition",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| format!("unknown theorem '{s}'"))
    }
}

/// How the two sides of a check are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = "⊆")]
    Subset,
    #[serde(rename = "⊊")]
    ProperSubset,
    /// The ideal generated by `lhs` lies in the ideal generated by `rhs`.
    #[serde(rename = "⊆ideal")]
    IdealSubset,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "=",
            Relation::Subset => "⊆",
            Relation::ProperSubset => "⊊",
            Relation::IdealSubset => "⊆ideal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub relation: Relation,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub holds: bool,
    /// Informational checks never affect the verdict.
    pub required: bool,
}

fn ideal_from_strings(words: &[String]) -> MonomialIdeal {
    let n = words.iter().map(|w| w.chars().count()).max().unwrap_or(1).max(1);
    let gens = words.iter().map(|w| {
        let cw = parse_codeword(w, NotationForm::Binary, w.chars().count()).expect("stored generator");
        cw.widen(n).expect("padding")
    });
    MonomialIdeal::from_generators(n, gens).expect("stored generators")
}

impl Check {
    fn new<'a, L, R>(name: &str, relation: Relation, lhs: L, rhs: R, required: bool) -> Self
    where
        L: IntoIterator<Item = &'a Codeword>,
        R: IntoIterator<Item = &'a Codeword>,
    {
        let mut check = Check {
            name: name.to_string(),
            relation,
            lhs: sorted_binary(lhs),
            rhs: sorted_binary(rhs),
            holds: false,
            required,
        };
        check.holds = check.evaluate();
        check
    }

    /// Records the faces where a per-face identity failed; holds iff none did.
    fn per_face(name: &str, failures: &BTreeSet<Codeword>) -> Self {
        Check::new(name, Relation::Equal, failures, &BTreeSet::new(), true)
    }

    /// Recomputes `holds` from the stored sides.
    pub fn evaluate(&self) -> bool {
        let l: BTreeSet<&String> = self.lhs.iter().collect();
        let r: BTreeSet<&String> = self.rhs.iter().collect();
        match self.relation {
            Relation::Equal => l == r,
            Relation::Subset => l.is_subset(&r),
            Relation::ProperSubset => l.is_subset(&r) && l != r,
            Relation::IdealSubset => {
                ideal_contains(&ideal_from_strings(&self.rhs), &ideal_from_strings(&self.lhs)).expect("padded widths")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    /// No required check failed, but some comparison could not be made
    /// because a contractibility verdict was unknown.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub code: NeuralCode,
    pub map: String,
    pub field: FieldId,
    pub checks: Vec<Check>,
    pub partial: bool,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn new(theorem: Theorem, code: &NeuralCode, map: String, field: FieldId, checks: Vec<Check>, partial: bool) -> Self {
        let mut report = VerificationReport { theorem, code: code.clone(), map, field, checks, partial, verdict: Verdict::Holds };
        report.verdict = report.recompute_verdict();
        report
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn recompute_verdict(&self) -> Verdict {
        if self.checks.iter().any(|c| c.required && !c.evaluate()) {
            Verdict::Violated
        } else if self.partial {
            Verdict::Partial
        } else {
            Verdict::Holds
        }
    }

    pub fn is_violated(&self) -> bool {
        self.verdict == Verdict::Violated
    }
}

/// `Δ`, `M_H(Δ)` and `C_min(Δ)` of one code; a void `Δ` has empty sets.
#[derive(Debug, Clone)]
struct Side {
    k: SimplicialComplex,
    mh: BTreeSet<Codeword>,
    cmin: Option<CminReport>,
}

impl Side {
    fn of(code: &NeuralCode, field: FieldId) -> Result<Self> {
        let k = delta(code);
        if k.is_void() {
            return Ok(Side { k, mh: BTreeSet::new(), cmin: None });
        }
        Ok(Side { mh: compute_mh(&k, field)?.faces, cmin: Some(compute_cmin(&k, field)?), k })
    }

    fn cmin_in(&self) -> BTreeSet<Codeword> {
        self.cmin.as_ref().map(|c| c.certified_in.clone()).unwrap_or_default()
    }

    fn cmin_out(&self) -> BTreeSet<Codeword> {
        self.cmin.as_ref().map(|c| c.certified_out.clone()).unwrap_or_default()
    }

    fn complete(&self) -> bool {
        self.cmin.as_ref().is_none_or(CminReport::is_complete)
    }

    fn faces(&self) -> BTreeSet<Codeword> {
        self.k.face_set()
    }
}

/// `I_K`, with the void complex giving the unit ideal.
fn sr_of(k: &SimplicialComplex) -> MonomialIdeal {
    MonomialIdeal::from_generators(k.n(), k.minimal_nonfaces()).expect("same width")
}

/// `I_{K*}` by the ideal route; the dual of the zero ideal is the unit ideal.
fn dual_sr_of(k: &SimplicialComplex) -> Result<MonomialIdeal> {
    if k.is_void() {
        return MonomialIdeal::zero(k.n());
    }
    match alexander_dual(&sr_ideal(k)?) {
        Err(Error::DegenerateDual) => MonomialIdeal::unit(k.n()),
        other => other,
    }
}

fn without_empty(set: &BTreeSet<Codeword>) -> BTreeSet<Codeword> {
    set.iter().filter(|f| !f.is_empty()).copied().collect()
}

fn closure_faces(faces: &BTreeSet<Codeword>, n: usize) -> Result<BTreeSet<Codeword>> {
    Ok(closure_of(faces.iter().copied(), n)?.face_set())
}

/// Runs the theorem checks for one domain code, reusing its analysis.
#[derive(Debug, Clone)]
pub struct Verifier {
    code: NeuralCode,
    field: FieldId,
    base: Side,
}

impl Verifier {
    pub fn new(code: &NeuralCode, field: FieldId) -> Result<Self> {
        Ok(Verifier { code: code.clone(), field, base: Side::of(code, field)? })
    }

    pub fn code(&self) -> &NeuralCode {
        &self.code
    }

    fn target(&self, step: &ElementaryMap) -> Result<(NeuralCode, Side)> {
        let image = CodeMap::single(self.code.clone(), step.clone())?.image_code()?;
        let side = Side::of(&image, self.field)?;
        Ok((image, side))
    }

    fn report(&self, theorem: Theorem, map: String, checks: Vec<Check>, partial: bool) -> VerificationReport {
        VerificationReport::new(theorem, &self.code, map, self.field, checks, partial)
    }

    /// `q(C_min) = C_min′` on the certified parts; partial if either side
    /// has unknowns. Certified-out faces are compared inside `q(Δ)`, since
    /// `Δ′` may have faces outside the image.
    fn cmin_equal(&self, step: &ElementaryMap, other: &Side, checks: &mut Vec<Check>) -> Result<bool> {
        let complete = self.base.complete() && other.complete();
        let q_in = image_of(step, &self.base.cmin_in())?;
        let q_out = image_of(step, &self.base.cmin_out())?;
        let q_delta = image_of(step, &self.base.faces())?;
        let out_on_image: BTreeSet<Codeword> = other.cmin_out().intersection(&q_delta).copied().collect();
        checks.push(Check::new("cmin_in", Relation::Equal, &q_in, &other.cmin_in(), complete));
        checks.push(Check::new("cmin_out", Relation::Equal, &q_out, &out_on_image, complete));
        Ok(!complete)
    }

    pub fn permutation(&self, gamma: &Permutation) -> Result<VerificationReport> {
        let step = ElementaryMap::Permute(gamma.clone());
        let (_, other) = self.target(&step)?;
        let mut checks = vec![
            Check::new("mh", Relation::Equal, &image_of(&step, &self.base.mh)?, &other.mh, true),
            Check::new("delta_image", Relation::Equal, &image_of(&step, &self.base.faces())?, &other.faces(), true),
        ];
        let partial = self.cmin_equal(&step, &other, &mut checks)?;
        // The word map moves neuron j to position γ⁻¹(j), so the matching
        // relabelling of variables is by γ⁻¹.
        let dual = dual_sr_of(&self.base.k)?;
        let dual_other = dual_sr_of(&other.k)?;
        let relabelled = permute_ideal(&dual, &gamma.inverse())?;
        checks.push(Check::new("sr_dual_relabel", Relation::Equal, relabelled.min_gens(), dual_other.min_gens(), true));
        let literal = permute_ideal(&dual, gamma)?;
        checks.push(Check::new("sr_dual_relabel_literal", Relation::Equal, literal.min_gens(), dual_other.min_gens(), false));
        Ok(self.report(Theorem::Permutation, step.to_string(), checks, partial))
    }

    pub fn add_trivial_on(&self) -> Result<VerificationReport> {
        let step = ElementaryMap::AddTrivialOn;
        let (_, other) = self.target(&step)?;
        let n1 = other.k.n();
        let q_delta = image_of(&step, &self.base.faces())?;
        let mut checks = vec![Check::new("mh", Relation::Equal, &image_of(&step, &self.base.mh)?, &other.mh, true)];

        let mut failures = BTreeSet::new();
        for sigma in self.base.k.faces() {
            let lhs = link(&other.k, &step.apply_word(&sigma)?)?;
            if lhs != link(&self.base.k, &sigma)?.widen(n1)? {
                failures.insert(sigma);
            }
        }
        checks.push(Check::per_face("link_lemma", &failures));
        checks.push(Check::new("mh_in_image", Relation::Subset, &other.mh, &q_delta, true));
        checks.push(Check::new("delta_closure", Relation::Equal, &closure_faces(&q_delta, n1)?, &other.faces(), true));
        let (i, i1) = (sr_of(&self.base.k), sr_of(&other.k));
        checks.push(Check::new("sr_containment", Relation::IdealSubset, i.min_gens(), i1.min_gens(), true));

        let mut partial = false;
        if let Some(cmin) = &self.base.cmin {
            let complete = self.base.complete() && other.complete();
            partial |= !complete;
            let q_in = image_of(&step, &cmin.certified_in)?;
            let in1 = other.cmin_in();
            match cmin.delta_verdict {
                VerdictKind::Contractible => {
                    let lhs = image_of(&step, &without_empty(&cmin.certified_in))?;
                    checks.push(Check::new("cmin_contractible", Relation::Equal, &lhs, &without_empty(&in1), complete));
                }
                VerdictKind::NonContractible => {
                    let empty = BTreeSet::from([Codeword::empty(n1)?]);
                    checks.push(Check::new("cmin_non_contractible", Relation::Equal, &q_in, &without_empty(&in1), complete));
                    checks.push(Check::new("cmin_empty_mandatory", Relation::Subset, &empty, &in1, true));
                    checks.push(Check::new("cmin_strict", Relation::ProperSubset, &q_in, &in1, complete));
                }
                VerdictKind::Unknown => partial = true,
            }
        }
        Ok(self.report(Theorem::AddTrivialOn, step.to_string(), checks, partial))
    }

    pub fn add_trivial_off(&self) -> Result<VerificationReport> {
        let step = ElementaryMap::AddTrivialOff;
        let (_, other) = self.target(&step)?;
        let n1 = other.k.n();
        let mut checks = vec![
            Check::new("mh", Relation::Equal, &image_of(&step, &self.base.mh)?, &other.mh, true),
            Check::new("delta_image", Relation::Equal, &image_of(&step, &self.base.faces())?, &other.faces(), true),
        ];
        let partial = self.cmin_equal(&step, &other, &mut checks)?;

        let new_var = Codeword::from_neurons(n1, [n1])?;
        let padded = |i: &MonomialIdeal| -> Result<Vec<Codeword>> { i.min_gens().iter().map(|g| g.widen(n1)).collect() };

        let sr = sr_of(&self.base.k);
        let expected = MonomialIdeal::from_generators(n1, padded(&sr)?.into_iter().chain([new_var]))?;
        checks.push(Check::new("sr_trivial_off", Relation::Equal, sr_of(&other.k).min_gens(), expected.min_gens(), true));

        let dual = dual_sr_of(&self.base.k)?;
        let dual1 = dual_sr_of(&other.k)?;
        let multiplied = padded(&dual)?.into_iter().map(|g| g.with(n1)).collect::<Result<Vec<_>>>()?;
        let expected = MonomialIdeal::from_generators(n1, multiplied)?;
        checks.push(Check::new("sr_dual_trivial_off", Relation::Equal, dual1.min_gens(), expected.min_gens(), true));
        let literal = MonomialIdeal::from_generators(n1, padded(&dual)?.into_iter().chain([new_var]))?;
        checks.push(Check::new("sr_dual_trivial_off_literal", Relation::Equal, dual1.min_gens(), literal.min_gens(), false));
        Ok(self.report(Theorem::AddTrivialOff, step.to_string(), checks, partial))
    }

    pub fn duplicate(&self, source: usize) -> Result<VerificationReport> {
        let step = ElementaryMap::Duplicate { source };
        let (_, other) = self.target(&step)?;
        let n1 = other.k.n();
        let q_delta = image_of(&step, &self.base.faces())?;
        let mut checks = vec![Check::new("mh", Relation::Equal, &image_of(&step, &self.base.mh)?, &other.mh, true)];

        let mut homology_failures = BTreeSet::new();
        let mut formula_failures = BTreeSet::new();
        for sigma in self.base.k.faces() {
            let l = link(&self.base.k, &sigma)?;
            let l1 = link(&other.k, &step.apply_word(&sigma)?)?;
            if !reduced_homology(&l, self.field)?.same_dims(&reduced_homology(&l1, self.field)?) {
                homology_failures.insert(sigma);
            }
            let expected = if sigma.contains(source) {
                l.widen(n1)?
            } else {
                closure_of(image_of(&step, &l.face_set())?, n1)?
            };
            if l1 != expected {
                formula_failures.insert(sigma);
            }
        }
        checks.push(Check::per_face("link_homology", &homology_failures));
        checks.push(Check::per_face("link_formula", &formula_failures));
        checks.push(Check::new("mh_in_image", Relation::Subset, &other.mh, &q_delta, true));
        checks.push(Check::new("delta_closure", Relation::Equal, &closure_faces(&q_delta, n1)?, &other.faces(), true));
        let (i, i1) = (sr_of(&self.base.k), sr_of(&other.k));
        checks.push(Check::new("sr_containment", Relation::IdealSubset, i.min_gens(), i1.min_gens(), true));
        let partial = self.cmin_equal(&step, &other, &mut checks)?;
        Ok(self.report(Theorem::Duplicate, step.to_string(), checks, partial))
    }

    pub fn projection(&self, delete: usize) -> Result<VerificationReport> {
        let step = ElementaryMap::Project { delete };
        let (image, other) = self.target(&step)?;
        let k = &self.base.k;
        let q_mh = image_of(&step, &self.base.mh)?;
        let mut checks = vec![
            Check::new("mh_containment", Relation::Subset, &other.mh, &q_mh, true),
            Check::new("mh_reverse", Relation::Subset, &q_mh, &other.mh, false),
            Check::new("surjective", Relation::Equal, &image_of(&step, &self.base.faces())?, &other.faces(), true),
        ];

        let mut lift = BTreeSet::new();
        let mut link_failures = BTreeSet::new();
        let mut eq4_failures = BTreeSet::new();
        let mut star_failures = BTreeSet::new();
        for face in other.k.faces() {
            let sigma0 = insert_coordinate(&face, delete, false)?;
            if !k.contains(&sigma0) {
                lift.insert(face);
                continue;
            }
            let l = link(k, &sigma0)?;
            if link(&other.k, &face)?.face_set() != image_of(&step, &l.face_set())? {
                link_failures.insert(face);
            }
            let reembedded = image_of(&step, &l.face_set())?
                .iter()
                .map(|w| insert_coordinate(w, delete, false))
                .collect::<Result<BTreeSet<_>>>()?;
            if !reembedded.is_subset(&l.face_set()) {
                eq4_failures.insert(face);
            }
            let sigma1 = insert_coordinate(&face, delete, true)?;
            if k.contains(&sigma1) {
                let v = Codeword::from_neurons(k.n(), [delete])?;
                let lhs = image_of(&step, &closed_star(&l, &v)?.face_set())?;
                let rhs = image_of(&step, &link(k, &sigma1)?.face_set())?;
                if lhs != rhs {
                    star_failures.insert(face);
                }
            }
        }
        checks.push(Check::per_face("lift_with_zero", &lift));
        checks.push(Check::per_face("link_lemma", &link_failures));
        checks.push(Check::per_face("link_image_containment", &eq4_failures));
        checks.push(Check::per_face("closed_star", &star_failures));

        let reembedded = NeuralCode::new(
            k.n(),
            image.words().iter().map(|w| insert_coordinate(w, delete, false)).collect::<Result<Vec<_>>>()?,
        )?;
        let (i, i2) = (sr_of(k), sr_of(&delta(&reembedded)));
        checks.push(Check::new("sr_projection", Relation::IdealSubset, i.min_gens(), i2.min_gens(), true));
        checks.push(Check::new("sr_projection_literal", Relation::IdealSubset, i2.min_gens(), i.min_gens(), false));
        Ok(self.report(Theorem::Projection, step.to_string(), checks, false))
    }

    /// End-to-end `q(M_H) = M_H′` for a composition of permutations,
    /// trivial neurons and duplications.
    pub fn composition(&self, map: &CodeMap) -> Result<VerificationReport> {
        if map.domain() != &self.code {
            return Err(Error::WidthMismatch { expected: self.code.n(), found: map.domain().n() });
        }
        for step in map.steps() {
            if matches!(step, ElementaryMap::Project { .. } | ElementaryMap::Include { .. }) {
                return Err(Error::UnsupportedStep {
                    step: step.to_string(),
                    reason: "composition checks cover permutations, trivial neurons and duplications".into(),
                });
            }
        }
        let other = Side::of(&map.image_code()?, self.field)?;
        let q = |set: &BTreeSet<Codeword>| -> Result<BTreeSet<Codeword>> { set.iter().map(|w| map.apply_to_face(w)).collect() };
        let q_delta = q(&self.base.faces())?;
        let checks = vec![
            Check::new("mh", Relation::Equal, &q(&self.base.mh)?, &other.mh, true),
            Check::new("delta_closure", Relation::Equal, &closure_faces(&q_delta, other.k.n())?, &other.faces(), true),
        ];
        Ok(self.report(Theorem::Composition, map.to_string(), checks, false))
    }
}

pub fn verify_permutation(code: &NeuralCode, gamma: &Permutation, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(code, field)?.permutation(gamma)
}

pub fn verify_add_trivial_on(code: &NeuralCode, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(code, field)?.add_trivial_on()
}

pub fn verify_add_trivial_off(code: &NeuralCode, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(code, field)?.add_trivial_off()
}

pub fn verify_duplicate(code: &NeuralCode, source: usize, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(code, field)?.duplicate(source)
}

pub fn verify_projection(code: &NeuralCode, delete: usize, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(code, field)?.projection(delete)
}

pub fn verify_composition(map: &CodeMap, field: FieldId) -> Result<VerificationReport> {
    Verifier::new(map.domain(), field)?.composition(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, s: &str) -> NeuralCode {
        NeuralCode::parse(n, NotationForm::Word, s.split(',').filter(|t| !t.is_empty())).unwrap()
    }

    fn assert_holds(r: &VerificationReport) {
        assert_eq!(r.verdict, Verdict::Holds, "{}", serde_json::to_string_pretty(r).unwrap());
    }

    #[test]
    fn permutation_examples() {
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_holds(&verify_permutation(&code(2, "1,12"), &swap, FieldId::Gf2).unwrap());
        let c = code(4, "123,24,2");
        for g in Permutation::all(4) {
            assert_holds(&verify_permutation(&c, &g, FieldId::Gf2).unwrap());
        }
        assert_holds(&verify_permutation(&c, &Permutation::identity(4).unwrap(), FieldId::Rational).unwrap());
    }

    #[test]
    fn literal_relabelling_fails_for_a_three_cycle() {
        let g = Permutation::new(vec![2, 3, 1]).unwrap();
        let r = verify_permutation(&code(3, "1"), &g, FieldId::Gf2).unwrap();
        assert_holds(&r);
        assert!(!r.check("sr_dual_relabel_literal").unwrap().holds);
    }

    #[test]
    fn add_trivial_on_examples() {
        let r = verify_add_trivial_on(&code(2, "12"), FieldId::Gf2).unwrap();
        assert_holds(&r);
        assert!(r.check("cmin_contractible").is_some());
        let r = verify_add_trivial_on(&code(2, "1,2"), FieldId::Gf2).unwrap();
        assert_holds(&r);
        assert!(r.check("cmin_strict").unwrap().holds);
        assert_holds(&verify_add_trivial_on(&code(4, "123,24,2"), FieldId::Gf2).unwrap());
    }

    #[test]
    fn add_trivial_off_examples() {
        assert_holds(&verify_add_trivial_off(&code(2, "12"), FieldId::Gf2).unwrap());
        assert_holds(&verify_add_trivial_off(&code(4, "123,24,2"), FieldId::Gf2).unwrap());
        let r = verify_add_trivial_off(&code(1, "∅"), FieldId::Gf2).unwrap();
        assert_holds(&r);
        let literal = r.check("sr_dual_trivial_off_literal").unwrap();
        assert!(!literal.holds);
        assert_eq!(literal.lhs, vec!["11"]);
    }

    #[test]
    fn duplicate_examples() {
        assert_holds(&verify_duplicate(&code(2, "1,2"), 1, FieldId::Gf2).unwrap());
        assert_holds(&verify_duplicate(&code(4, "123,24,2"), 1, FieldId::Gf2).unwrap());
        assert_holds(&verify_duplicate(&code(1, "1"), 1, FieldId::Gf2).unwrap());
        assert_holds(&verify_duplicate(&code(4, "123,24,2"), 4, FieldId::Rational).unwrap());
    }

    #[test]
    fn projection_examples() {
        let r = verify_projection(&code(4, "123,24,2"), 4, FieldId::Gf2).unwrap();
        assert_holds(&r);
        let reverse = r.check("mh_reverse").unwrap();
        assert!(!reverse.holds);
        assert_eq!(reverse.lhs, vec!["010", "111"]);
        assert_eq!(reverse.rhs, vec!["111"]);

        let r = verify_projection(&code(2, "12"), 2, FieldId::Gf2).unwrap();
        assert_holds(&r);
        assert!(r.check("mh_reverse").unwrap().holds);
        assert_eq!(r.check("mh_containment").unwrap().lhs, vec!["1"]);
        assert!(!r.check("sr_projection_literal").unwrap().holds);
        assert!(verify_projection(&code(1, "1"), 1, FieldId::Gf2).is_err());
    }

    #[test]
    fn empty_code_holds_vacuously() {
        let c = NeuralCode::empty(3).unwrap();
        let v = Verifier::new(&c, FieldId::Gf2).unwrap();
        assert_holds(&v.add_trivial_on().unwrap());
        assert_holds(&v.add_trivial_off().unwrap());
        assert_holds(&v.duplicate(2).unwrap());
        assert_holds(&v.projection(1).unwrap());
        assert_holds(&v.permutation(&Permutation::new(vec![3, 1, 2]).unwrap()).unwrap());
    }

    #[test]
    fn composition_example() {
        let c = code(3, "12,23,13");
        let map = CodeMap::new(
            c,
            vec![
                ElementaryMap::Duplicate { source: 2 },
                ElementaryMap::Permute(Permutation::new(vec![4, 1, 3, 2]).unwrap()),
                ElementaryMap::AddTrivialOn,
            ],
        )
        .unwrap();
        assert_holds(&verify_composition(&map, FieldId::Gf2).unwrap());
        let bad = CodeMap::single(code(2, "12"), ElementaryMap::Project { delete: 1 }).unwrap();
        assert!(matches!(verify_composition(&bad, FieldId::Gf2), Err(Error::UnsupportedStep { .. })));
    }

    #[test]
    fn verdict_recomputes_from_stored_sets() {
        let r = verify_projection(&code(4, "123,24,2"), 4, FieldId::Gf2).unwrap();
        for c in &r.checks {
            assert_eq!(c.evaluate(), c.holds, "{}", c.name);
        }
        let mut tampered = r.clone();
        tampered.checks[0].lhs.push("001".into());
        assert_eq!(tampered.recompute_verdict(), Verdict::Violated);
        let line = serde_json::to_string(&r).unwrap();
        assert!(line.starts_with(r#"{"theorem":"projection","code":{"n":4"#));
    }
}
