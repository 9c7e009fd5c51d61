//! Seeded random codes and complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codeword::{Codeword, NeuralCode};
use crate::complex::{delta, SimplicialComplex};
use crate::error::{Error, Result};

/// Largest `n` for which every nonempty subset is drawn.
pub const MAX_RANDOM_NEURONS: usize = 16;

/// Includes each nonempty subset of `[n]` independently with probability
/// `density`, visiting subsets in increasing bit order with a ChaCha8 stream
/// seeded from `seed`.
pub fn random_code(n: usize, seed: u64, density: f64) -> Result<NeuralCode> {
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::BadDensity { density });
    }
    if n == 0 {
        return Err(Error::InvalidNeuronCount { n });
    }
    if n > MAX_RANDOM_NEURONS {
        return Err(Error::TooManyNeurons { what: "random_code", n, max: MAX_RANDOM_NEURONS });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Codeword> = (1u64..1 << n).filter(|_| rng.random_bool(density)).map(|b| Codeword::from_raw(n, b)).collect();
    NeuralCode::new(n, words)
}

/// `Δ` of a random code.
pub fn random_complex(n: usize, seed: u64, density: f64) -> Result<SimplicialComplex> {
    Ok(delta(&random_code(n, seed, density)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_one_takes_everything() {
        assert_eq!(random_code(2, 99, 1.0).unwrap().len(), 3);
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_code(3, 7, 0.5).unwrap(), random_code(3, 7, 0.5).unwrap());
        let distinct: std::collections::HashSet<_> = (0..20).map(|s| random_code(4, s, 0.3).unwrap()).collect();
        assert!(distinct.len() > 10);
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(random_code(3, 1, 0.0), Err(Error::BadDensity { .. })));
        assert!(matches!(random_code(3, 1, 1.5), Err(Error::BadDensity { .. })));
        assert!(matches!(random_code(3, 1, f64::NAN), Err(Error::BadDensity { .. })));
        assert!(matches!(random_code(17, 1, 0.5), Err(Error::TooManyNeurons { .. })));
    }
}
