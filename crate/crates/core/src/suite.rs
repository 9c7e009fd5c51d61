//! Batch verification over exhaustive or sampled families of codes.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codemaps::{CodeMap, ElementaryMap, Permutation};
use crate::codeword::{Codeword, NeuralCode};
use crate::error::{Error, Result};
use crate::field::FieldId;
use crate::random::random_code;
use crate::verify::{Theorem, Verdict, VerificationReport, Verifier};

/// Largest `n` accepted by [`exhaustive_codes`].
pub const MAX_EXHAUSTIVE_NEURONS: usize = 4;

/// Every code on `[n]`: each set of nonempty codewords, with and without `∅`.
pub fn exhaustive_codes(n: usize) -> Result<Vec<NeuralCode>> {
    if n == 0 {
        return Err(Error::InvalidNeuronCount { n });
    }
    if n > MAX_EXHAUSTIVE_NEURONS {
        return Err(Error::TooManyNeurons { what: "exhaustive enumeration", n, max: MAX_EXHAUSTIVE_NEURONS });
    }
    let nonempty = (1usize << n) - 1;
    let mut out = Vec::with_capacity(1 << (nonempty + 1));
    for with_empty in [false, true] {
        for choice in 0u64..1 << nonempty {
            let words = (0..nonempty)
                .filter(|i| choice >> i & 1 == 1)
                .map(|i| Codeword::from_raw(n, i as u64 + 1))
                .chain(with_empty.then(|| Codeword::from_raw(n, 0)));
            out.push(NeuralCode::new(n, words)?);
        }
    }
    Ok(out)
}

/// `count` random codes on `[n]`, the `i`-th drawn with seed `seed + i`.
pub fn sampled_codes(n: usize, count: usize, seed: u64, density: f64) -> Result<Vec<NeuralCode>> {
    (0..count as u64).map(|i| random_code(n, seed.wrapping_add(i), density)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermutationChoice {
    /// All of `S_n`.
    All,
    /// `per_code` seeded random permutations for each code.
    Sampled { per_code: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub theorems: BTreeSet<Theorem>,
    pub field: FieldId,
    pub permutations: PermutationChoice,
    /// Random compositions checked per code when the composition theorem is selected.
    pub compositions_per_code: usize,
    pub seed: u64,
}

impl SuiteOptions {
    /// Every theorem with all permutations; suitable for small `n`.
    pub fn exhaustive(field: FieldId) -> Self {
        SuiteOptions {
            theorems: Theorem::ALL.into_iter().collect(),
            field,
            permutations: PermutationChoice::All,
            compositions_per_code: 2,
            seed: 0,
        }
    }

    /// Every theorem with a few seeded permutations per code.
    pub fn sampled(field: FieldId, seed: u64) -> Self {
        SuiteOptions {
            permutations: PermutationChoice::Sampled { per_code: 4, seed },
            seed,
            ..Self::exhaustive(field)
        }
    }
}

fn instance_rng(seed: u64, index: usize, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

/// A random composition of two or three permutations, trivial neurons and duplications.
pub fn random_composition(code: &NeuralCode, rng: &mut ChaCha8Rng) -> Result<CodeMap> {
    let mut n = code.n();
    let mut steps = Vec::new();
    for _ in 0..rng.random_range(2..=3) {
        let step = match rng.random_range(0..4) {
            0 => ElementaryMap::Permute(random_permutation(n, rng)),
            1 => ElementaryMap::AddTrivialOn,
            2 => ElementaryMap::AddTrivialOff,
            _ => ElementaryMap::Duplicate { source: rng.random_range(1..=n) },
        };
        n = step.output_width(n)?;
        steps.push(step);
    }
    CodeMap::new(code.clone(), steps)
}

/// All reports for one code, in a fixed order.
pub fn reports_for_code(code: &NeuralCode, index: usize, options: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let v = Verifier::new(code, options.field)?;
    let n = code.n();
    let mut out = Vec::new();
    for theorem in &options.theorems {
        match theorem {
            Theorem::Permutation => {
                let perms = match options.permutations {
                    PermutationChoice::All => Permutation::all(n),
                    PermutationChoice::Sampled { per_code, seed } => {
                        let mut rng = instance_rng(seed, index, 1);
                        (0..per_code).map(|_| random_permutation(n, &mut rng)).collect()
                    }
                };
                for g in &perms {
                    out.push(v.permutation(g)?);
                }
            }
            Theorem::AddTrivialOn => out.push(v.add_trivial_on()?),
            Theorem::AddTrivialOff => out.push(v.add_trivial_off()?),
            Theorem::Duplicate => {
                for s in 1..=n {
                    out.push(v.duplicate(s)?);
                }
            }
            Theorem::Projection => {
                if n >= 2 {
                    for d in 1..=n {
                        out.push(v.projection(d)?);
                    }
                }
            }
            Theorem::Composition => {
                let mut rng = instance_rng(options.seed, index, 2);
                for _ in 0..options.compositions_per_code {
                    out.push(v.composition(&random_composition(code, &mut rng)?)?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub codes: usize,
    pub reports: usize,
    pub holds: usize,
    pub partial: usize,
    pub violated: usize,
}

impl SuiteSummary {
    pub fn from_reports(codes: usize, reports: &[VerificationReport]) -> Self {
        let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
        SuiteSummary {
            codes,
            reports: reports.len(),
            holds: count(Verdict::Holds),
            partial: count(Verdict::Partial),
            violated: count(Verdict::Violated),
        }
    }
}

/// Verifies every code on the worker pool; reports come back in code order.
pub fn run_suite(codes: &[NeuralCode], options: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let per_code = codes
        .par_iter()
        .enumerate()
        .map(|(i, c)| reports_for_code(c, i, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_code.into_iter().flatten().collect())
}
