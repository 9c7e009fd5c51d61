mod common;

use std::collections::BTreeSet;

use common::{all_complexes, complex};
use obstrukt::collapse::VerdictKind;
use obstrukt::complex::link;
use obstrukt::mandatory::{compute_cmin_with, compute_mh_with, LinkStrategy};
use obstrukt::{compute_cmin, compute_mh, reduced_homology, Codeword, FieldId, SimplicialComplex};
use proptest::prelude::*;

const FIELDS: [FieldId; 2] = [FieldId::Gf2, FieldId::Rational];

fn mh_by_definition(k: &SimplicialComplex, field: FieldId) -> BTreeSet<Codeword> {
    k.faces().filter(|s| !reduced_homology(&link(k, s).unwrap(), field).unwrap().is_zero()).collect()
}

fn check_invariants(k: &SimplicialComplex, field: FieldId) -> Result<(), TestCaseError> {
    let mh = compute_mh(k, field).unwrap();
    let cmin = compute_cmin(k, field).unwrap();
    prop_assert_eq!(&mh.faces, &mh_by_definition(k, field));
    for f in k.facets() {
        prop_assert!(mh.contains(&f));
    }
    let empty = Codeword::empty(k.n()).unwrap();
    prop_assert_eq!(mh.contains(&empty), !reduced_homology(k, field).unwrap().is_zero());
    prop_assert!(mh.faces.is_subset(&cmin.certified_in));
    prop_assert!(cmin.certified_in.contains(&empty));

    let parts = [&cmin.certified_in, &cmin.certified_out, &cmin.unknown];
    let total: usize = parts.iter().map(|p| p.len()).sum();
    prop_assert_eq!(total, k.len());
    let union: BTreeSet<Codeword> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    prop_assert_eq!(union, k.face_set());

    let acyclic = reduced_homology(k, field).unwrap().is_zero();
    prop_assert_eq!(cmin.delta_verdict == VerdictKind::NonContractible, !acyclic);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn mandatory_sets_satisfy_their_invariants(k in complex(6)) {
        for field in FIELDS {
            check_invariants(&k, field)?;
        }
    }

    #[test]
    fn link_strategies_agree(k in complex(6)) {
        for field in FIELDS {
            prop_assert_eq!(
                compute_mh_with(&k, field, LinkStrategy::ConeShortcut).unwrap(),
                compute_mh_with(&k, field, LinkStrategy::Exhaustive).unwrap()
            );
            prop_assert_eq!(
                compute_cmin_with(&k, field, LinkStrategy::ConeShortcut).unwrap(),
                compute_cmin_with(&k, field, LinkStrategy::Exhaustive).unwrap()
            );
        }
    }
}

#[test]
fn invariants_hold_on_every_small_complex() {
    for n in 1..=4 {
        for k in all_complexes(n).into_iter().filter(|k| !k.is_void()) {
            for field in FIELDS {
                check_invariants(&k, field).unwrap();
                assert_eq!(
                    compute_mh_with(&k, field, LinkStrategy::ConeShortcut).unwrap(),
                    compute_mh_with(&k, field, LinkStrategy::Exhaustive).unwrap()
                );
            }
        }
    }
}
