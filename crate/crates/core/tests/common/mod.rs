#![allow(dead_code)]

use obstrukt::complex::closure_of;
use obstrukt::{Codeword, NeuralCode, SimplicialComplex};
use proptest::prelude::*;

/// Every simplicial complex on `[n]`, the void complex included.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let subsets = 1usize << n;
    let mut out = Vec::new();
    for family in 0u64..1 << subsets {
        let member = |s: usize| family >> s & 1 == 1;
        let closed = (0..subsets).filter(|&s| member(s)).all(|s| (0..n).filter(|i| s >> i & 1 == 1).all(|i| member(s & !(1 << i))));
        if closed {
            let faces = (0..subsets).filter(|&s| member(s)).map(|s| Codeword::from_bits(n, s as u64).unwrap());
            out.push(closure_of(faces, n).unwrap());
        }
    }
    out
}

/// Non-void complexes on `1..=max_n` vertices given by up to six random facets.
pub fn complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u64..1 << n, 1..=6)
            .prop_map(move |gens| closure_of(gens.into_iter().map(|b| Codeword::from_bits(n, b).unwrap()), n).unwrap())
    })
}

/// Random codes on `1..=max_n` neurons, possibly empty.
pub fn neural_code(max_n: usize) -> impl Strategy<Value = NeuralCode> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::btree_set(0u64..1 << n, 0..=8)
            .prop_map(move |words| NeuralCode::new(n, words.into_iter().map(|b| Codeword::from_bits(n, b).unwrap())).unwrap())
    })
}
