//! Named braids plus seeded random braids used by the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{preset, BraidWord, PRESET_NAMES};
use crate::diagram::Diagram;
use crate::states::{eliminate, Convention, Potential, StateError};

pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Every preset, in listing order.
pub fn named() -> Vec<(String, BraidWord)> {
    PRESET_NAMES.iter().map(|&n| (n.to_string(), preset(n).expect("preset listed"))).collect()
}

/// `count` braids on 2..=`max_strands` strands with 1..=`max_crossings`
/// letters, drawn from ChaCha8 with `seed`.
pub fn random_braids(seed: u64, count: usize, max_strands: usize, max_crossings: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let s = rng.gen_range(2..=max_strands.max(2));
            let len = rng.gen_range(1..=max_crossings.max(1));
            let letters = (0..len)
                .map(|_| {
                    let k = rng.gen_range(1..s as i32);
                    if rng.gen_bool(0.5) {
                        k
                    } else {
                        -k
                    }
                })
                .collect();
            BraidWord::new(s, letters).expect("letters within strands")
        })
        .collect()
}

/// Presets followed by 50 random braids with at most 4 strands and 8
/// crossings.
pub fn standard(seed: u64) -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = named().into_iter().map(|(_, b)| b).collect();
    out.extend(random_braids(seed, 50, 4, 8));
    out
}

/// A random integer potential satisfying the cycle relations: free jumps
/// and bases uniform in `[-bound, bound]`, dependent jumps solved.
pub fn random_z_potential(d: &Diagram, bound: i64, rng: &mut impl Rng) -> Result<Potential, StateError> {
    let elim = eliminate(d)?;
    let mut p = Potential::zero(d, Convention::Plus);
    for b in &mut p.bases {
        *b = rng.gen_range(-bound..=bound);
    }
    for &w in &elim.free_jumps {
        p.jumps[w] = rng.gen_range(-bound..=bound);
    }
    for (c, form) in &elim.dependent {
        p.jumps[*c] = form.iter().map(|&(w, a)| a * p.jumps[w]).sum();
    }
    Ok(p)
}
