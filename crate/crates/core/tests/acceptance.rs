//! Acceptance criteria, one test each. Every test prints a single
//! `criterion N: PASS|FAIL ...` line to stdout, bypassing output capture.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

mod common;

use common::all_complexes;
use obstrukt::codemaps::Permutation;
use obstrukt::collapse::strong_collapse_core;
use obstrukt::complex::{cone, delta, dual_complex, f_sigma, link, restriction};
use obstrukt::homology::boundary_matrix_over;
use obstrukt::mandatory::compute_mh;
use obstrukt::random::random_complex;
use obstrukt::sr::{alexander_dual, ideal_contains, permute_ideal, sr_ideal};
use obstrukt::suite::{exhaustive_codes, run_suite, sampled_codes, PermutationChoice, SuiteOptions};
use obstrukt::verify::{Theorem, Verdict, VerificationReport};
use obstrukt::{
    parse_codeword, reduced_homology, CodeMap, Codeword, ElementaryMap, Error, FieldId, Gf2, NeuralCode, NotationForm,
    Rational, SimplicialComplex,
};

fn report(id: u32, ok: bool, detail: &str) {
    let status = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "criterion {id}: {status} {detail}").unwrap();
    out.flush().unwrap();
}

fn code(n: usize, words: &str) -> NeuralCode {
    NeuralCode::parse(n, NotationForm::Word, words.split(',').filter(|t| !t.is_empty())).unwrap()
}

fn words(n: usize, text: &str) -> BTreeSet<Codeword> {
    text.split(',').filter(|t| !t.is_empty()).map(|t| parse_codeword(t, NotationForm::Word, n).unwrap()).collect()
}

fn show(set: &BTreeSet<Codeword>) -> String {
    let parts: Vec<String> = set.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Random non-void complexes with `n` cycling through `1..=6`.
fn random_complexes(count: usize, seed: u64) -> Vec<SimplicialComplex> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let n = out.len() % 6 + 1;
        let density = [0.15, 0.3, 0.5][out.len() % 3];
        let k = random_complex(n, s, density).unwrap();
        s += 1;
        if !k.is_void() {
            out.push(k);
        }
    }
    out
}

#[test]
fn criterion_01_projection_example() {
    let start = Instant::now();
    let c = code(4, "123,24,2");
    let mh = compute_mh(&delta(&c), FieldId::Gf2).unwrap().faces;
    let image = CodeMap::single(c, ElementaryMap::Project { delete: 4 }).unwrap().image_code().unwrap();
    let mh_proj = compute_mh(&delta(&image), FieldId::Gf2).unwrap().faces;
    let step = ElementaryMap::Project { delete: 4 };
    let q_mh: BTreeSet<Codeword> = mh.iter().map(|w| step.apply_word(w).unwrap()).collect();

    let mh_matches = mh == words(4, "24,123");
    let proj_matches = mh_proj == words(3, "123");
    let forward = mh_proj.is_subset(&q_mh);
    let reverse_fails = !q_mh.is_subset(&mh_proj);
    let fast = start.elapsed() < Duration::from_secs(1);
    let ok = mh_matches && proj_matches && forward && reverse_fails && fast;
    report(
        1,
        ok,
        &format!(
            "M_H(C)={} (expected {{24,123}}: {mh_matches}), M_H(C')={} ({proj_matches}), M_H(C') ⊆ q(M_H(C)): {forward}, q(M_H(C)) ⊄ M_H(C'): {reverse_fails}, {:?}",
            show(&mh),
            show(&mh_proj),
            start.elapsed()
        ),
    );
    assert!(ok, "M_H(Δ({{123,24,2}})) = {}; vertex 2 has a disconnected link", show(&mh));
}

#[test]
fn criterion_02_complex_link_restriction() {
    let start = Instant::now();
    let k = delta(&code(6, "24,35,45,123"));
    let expected_delta = words(6, "∅,1,2,3,4,5,12,13,23,24,35,45,123");
    let lk = link(&k, &parse_codeword("2", NotationForm::Word, 6).unwrap()).unwrap();
    let gamma = words(6, "35,45,123,6");
    let res = restriction(&k, gamma.iter()).unwrap();
    let expected_res = words(6, "∅,1,2,3,4,5,12,13,23,35,45,123");

    let ok = k.face_set() == expected_delta
        && lk.face_set() == words(6, "∅,1,3,4,13")
        && res.face_set() == expected_res
        && start.elapsed() < Duration::from_secs(1);
    report(2, ok, &format!("Δ(C), Lk_2 = {}, Δ(C)|Γ = {}", show(&lk.face_set()), show(&res.face_set())));
    assert!(ok);
}

#[test]
fn criterion_03_sr_ideal() {
    let k = delta(&code(2, "1,2"));
    let i = sr_ideal(&k).unwrap();
    let ok = i.index_lists() == vec![vec![1, 2]] && k.face_set() == words(2, "∅,1,2");
    report(3, ok, &format!("I_K = {}", serde_json::to_string(&i).unwrap()));
    assert!(ok);
}

fn exact_suite(codes: &[NeuralCode], options: &SuiteOptions) -> (bool, String) {
    let reports = run_suite(codes, options).unwrap();
    let mh_failures = reports.iter().filter(|r| !mh_check_holds(r)).count();
    let violated = reports.iter().filter(|r| r.verdict == Verdict::Violated).count();
    let partial = reports.iter().filter(|r| r.verdict == Verdict::Partial).count();
    let theorems: BTreeSet<Theorem> = reports.iter().map(|r| r.theorem).collect();
    let detail = format!(
        "{} codes, {} reports over {} theorems, M_H failures {mh_failures}, violated {violated}, partial {partial}",
        codes.len(),
        reports.len(),
        theorems.len()
    );
    (mh_failures == 0 && violated == 0, detail)
}

fn mh_check_holds(r: &VerificationReport) -> bool {
    let name = if r.theorem == Theorem::Projection { "mh_containment" } else { "mh" };
    r.check(name).is_some_and(|c| c.holds)
}

#[test]
fn criterion_04_exhaustive_n3() {
    let start = Instant::now();
    let codes = exhaustive_codes(3).unwrap();
    let mut options = SuiteOptions::exhaustive(FieldId::Gf2);
    options.theorems.remove(&Theorem::Composition);
    let (ok, detail) = exact_suite(&codes, &options);
    let ok = ok && codes.len() == 256 && start.elapsed() < Duration::from_secs(300);
    report(4, ok, &format!("{detail}, {:?}", start.elapsed()));
    assert!(ok);
}

#[test]
fn criterion_05_sampled_n4_n5() {
    let start = Instant::now();
    let mut details = Vec::new();
    let mut ok = true;
    for n in [4, 5] {
        let codes = sampled_codes(n, 1000, 1_000 * n as u64, 0.3).unwrap();
        let mut options = SuiteOptions::sampled(FieldId::Gf2, 42);
        options.permutations = PermutationChoice::Sampled { per_code: 4, seed: 42 };
        let (pass, detail) = exact_suite(&codes, &options);
        ok &= pass;
        details.push(format!("n={n}: {detail}"));
    }
    ok &= start.elapsed() < Duration::from_secs(600);
    report(5, ok, &format!("{}, {:?}", details.join("; "), start.elapsed()));
    assert!(ok);
}

#[test]
fn criterion_06_homology_engine() {
    let complexes = random_complexes(500, 6_000);
    let mut bad_boundary = 0;
    let mut bad_euler = 0;
    for k in &complexes {
        let top = k.dim().unwrap();
        for i in 0..=top {
            let g = boundary_matrix_over::<Gf2>(k, i - 1).unwrap().mul(&boundary_matrix_over::<Gf2>(k, i).unwrap());
            let q = boundary_matrix_over::<Rational>(k, i - 1).unwrap().mul(&boundary_matrix_over::<Rational>(k, i).unwrap());
            if !g.is_some_and(|m| m.is_zero()) || !q.is_some_and(|m| m.is_zero()) {
                bad_boundary += 1;
            }
        }
        let chi = k.euler_characteristic().unwrap();
        for field in FieldId::ALL {
            if reduced_homology(k, field).unwrap().alternating_sum() != chi {
                bad_euler += 1;
            }
        }
    }
    let hollow_ok = (2..=6).all(|n| {
        let h = SimplicialComplex::hollow_simplex(n).unwrap();
        FieldId::ALL.into_iter().all(|f| {
            let p = reduced_homology(&h, f).unwrap();
            p.dim(n as i32 - 2) == 1 && p.dims().values().sum::<usize>() == 1
        })
    });
    let ok = bad_boundary == 0 && bad_euler == 0 && hollow_ok;
    report(6, ok, &format!("500 complexes: ∂∂≠0 in {bad_boundary}, Euler mismatches {bad_euler}; hollow simplices: {hollow_ok}"));
    assert!(ok);
}

#[test]
fn criterion_07_collapse_coherence() {
    let complexes = random_complexes(500, 7_000);
    let mut core_mismatch = 0;
    let mut cone_nonzero = 0;
    let mut cone_faces = 0;
    for k in &complexes {
        let core = strong_collapse_core(k).unwrap().core;
        for field in FieldId::ALL {
            if !reduced_homology(k, field).unwrap().same_dims(&reduced_homology(&core, field).unwrap()) {
                core_mismatch += 1;
            }
        }
        for sigma in k.faces() {
            if f_sigma(k, &sigma).unwrap() != sigma {
                cone_faces += 1;
                let l = link(k, &sigma).unwrap();
                if FieldId::ALL.into_iter().any(|f| !reduced_homology(&l, f).unwrap().is_zero()) {
                    cone_nonzero += 1;
                }
            }
        }
    }
    let ok = core_mismatch == 0 && cone_nonzero == 0;
    report(
        7,
        ok,
        &format!("500 complexes: core homology mismatches {core_mismatch}; {cone_faces} faces with σ≠f_σ, nonzero link homology {cone_nonzero}"),
    );
    assert!(ok);
}

#[test]
fn criterion_08_alexander_duality() {
    let mut compared = 0;
    let mut failures = 0;
    let mut degenerate = 0;
    for n in 1..=4 {
        for k in all_complexes(n) {
            let dual = dual_complex(&k);
            if dual_complex(&dual) != k {
                failures += 1;
            }
            if k.is_void() || dual.is_void() {
                // full simplex ↔ void: I_K = 0 has no dual and K* has no SR ideal
                degenerate += 1;
                let (full, void) = if k.is_void() { (&dual, &k) } else { (&k, &dual) };
                let paired = full == &SimplicialComplex::simplex(n).unwrap()
                    && sr_ideal(void) == Err(Error::VoidComplex)
                    && alexander_dual(&sr_ideal(full).unwrap()) == Err(Error::DegenerateDual);
                if !paired {
                    failures += 1;
                }
                continue;
            }
            compared += 1;
            if sr_ideal(&dual).unwrap() != alexander_dual(&sr_ideal(&k).unwrap()).unwrap() {
                failures += 1;
            }
        }
    }
    let ok = failures == 0 && compared + degenerate == 3 + 6 + 20 + 168;
    report(8, ok, &format!("{compared} complexes compared, {degenerate} degenerate pairs, {failures} failures"));
    assert!(ok);
}

#[test]
fn criterion_09_sr_containments() {
    let mut codes = exhaustive_codes(3).unwrap();
    codes.extend(sampled_codes(5, 1000, 9_000, 0.3).unwrap());
    let mut failures = 0;
    let mut literal_failures = 0;
    let mut instances = 0;
    for c in &codes {
        let k = delta(c);
        if k.is_void() {
            continue;
        }
        let i = sr_ideal(&k).unwrap();
        let n = c.n();
        let mut steps = vec![ElementaryMap::AddTrivialOn];
        steps.extend((1..=n).map(|source| ElementaryMap::Duplicate { source }));
        for step in steps {
            let image = CodeMap::single(c.clone(), step).unwrap().image_code().unwrap();
            instances += 1;
            if !ideal_contains(&sr_ideal(&delta(&image)).unwrap(), &i).unwrap() {
                failures += 1;
            }
        }
        let perms = if n == 3 { Permutation::all(3) } else { vec![Permutation::new(vec![2, 3, 4, 5, 1]).unwrap(), Permutation::new(vec![2, 1, 4, 5, 3]).unwrap()] };
        for g in perms {
            let image = CodeMap::single(c.clone(), ElementaryMap::Permute(g.clone())).unwrap().image_code().unwrap();
            let k1 = delta(&image);
            if k == SimplicialComplex::simplex(n).unwrap() {
                // both duals are degenerate
                if k1 != k {
                    failures += 1;
                }
                continue;
            }
            instances += 1;
            let dual = alexander_dual(&i).unwrap();
            let dual1 = alexander_dual(&sr_ideal(&k1).unwrap()).unwrap();
            // the word map sends neuron j to position γ⁻¹(j)
            if permute_ideal(&dual, &g.inverse()).unwrap() != dual1 {
                failures += 1;
            }
            if permute_ideal(&dual, &g).unwrap() != dual1 {
                literal_failures += 1;
            }
        }
    }
    let ok = failures == 0;
    report(
        9,
        ok,
        &format!("{} codes, {instances} instances, {failures} failures ({literal_failures} permutation instances fail under x_i ↦ x_γ(i) taken literally)", codes.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_10_field_sensitivity() {
    let rp2 = SimplicialComplex::from_facets(6, words(6, "124,126,135,136,145,234,235,256,346,456")).unwrap();
    let h2 = reduced_homology(&rp2, FieldId::Gf2).unwrap();
    let hq = reduced_homology(&rp2, FieldId::Rational).unwrap();
    let coned = cone(&rp2, 7).unwrap();
    let apex = parse_codeword("7", NotationForm::Word, 7).unwrap();
    let in_gf2 = compute_mh(&coned, FieldId::Gf2).unwrap().contains(&apex);
    let in_q = compute_mh(&coned, FieldId::Rational).unwrap().contains(&apex);
    let ok = h2.dim(1) == 1 && h2.dim(2) == 1 && hq.is_zero() && in_gf2 && !in_q;
    report(
        10,
        ok,
        &format!("RP²: dim H̃_1 = {} over GF2, {} over Q; apex of the cone in M_H over GF2: {in_gf2}, over Q: {in_q}", h2.dim(1), hq.dim(1)),
    );
    assert!(ok);
}
