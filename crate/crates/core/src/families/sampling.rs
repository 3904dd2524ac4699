use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{validate_params, FamilyId, FamilyParams};
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Sampled numerators lie in `[-SAMPLE_BOUND, SAMPLE_BOUND]`, denominators
/// in `[1, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 50;

/// Draws rejected by [`validate_params`] before giving up.
pub const SAMPLE_RETRIES: usize = 1000;

/// Stream seed for one `(family, dim, seed)` triple.
pub(crate) fn stream_seed(tag: u64, dim: u64, seed: u64) -> u64 {
    // splitmix64 finalizer over a simple combination
    let mut z = seed
        .wrapping_add(tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(dim.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stream seed for the scalar-identity trials at `(n, N, seed)`.
pub(crate) fn stream_seed_for_identity(n: u64, big_n: u64, seed: u64) -> u64 {
    stream_seed(0x51_AC ^ (n << 32), big_n, seed)
}

pub(crate) fn small_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num, den)
}

/// Deterministic valid parameters for `(family, dim, seed)`.
pub fn sample_params(family: FamilyId, dim: usize, seed: u64) -> Result<FamilyParams> {
    let tag = FamilyId::ALL.iter().position(|&f| f == family).unwrap() as u64 + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(tag, dim as u64, seed));
    let arity = family.param_names().len();
    for _ in 0..SAMPLE_RETRIES {
        let values = (0..arity)
            .map(|_| small_rational(&mut rng, SAMPLE_BOUND))
            .collect();
        let params = FamilyParams::from_values(family, values);
        if validate_params(family, dim, &params).is_empty() {
            return Ok(params);
        }
    }
    Err(Error::SamplingExhausted {
        attempts: SAMPLE_RETRIES,
        context: format!("{family} dim {dim} seed {seed}"),
    })
}
