//! Seeded random descriptors for property sweeps.
//!
//! Draws small integer gamma coefficients with `c_0 = chi` in `[1, 24]`, a
//! non-negative top coefficient, and up to three spectrum entries with
//! `h(0) = chi` and degree below `g`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::rat;
use crate::sheaf::{DiagonalClass, SheafDescriptor, SpectrumEntry};

pub fn random_descriptor<R: Rng>(rng: &mut R, max_g: usize) -> SheafDescriptor {
    let g = rng.gen_range(1..=max_g.max(1));
    let chi = rng.gen_range(1..=24i64);
    let mut gamma = vec![chi];
    gamma.extend((1..g).map(|_| rng.gen_range(-3..=3i64)));
    gamma.push(rng.gen_range(0..=3i64));
    let entries = rng.gen_range(0..=3usize);
    let spectrum = (0..entries)
        .map(|_| {
            let mut h = vec![chi];
            h.extend((1..g).map(|_| rng.gen_range(-3..=3i64)));
            SpectrumEntry::from_ints(&h)
        })
        .collect();
    SheafDescriptor {
        g,
        chi: rat(chi),
        gamma: DiagonalClass::from_ints(g, &gamma),
        spectrum,
    }
}

/// `count` descriptors with `g <= max_g`, reproducible from `seed`.
pub fn random_descriptors(count: usize, seed: u64, max_g: usize) -> Vec<SheafDescriptor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_descriptor(&mut rng, max_g)).collect()
}
