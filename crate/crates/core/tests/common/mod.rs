#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistcert::catalog::CurveCatalog;
use twistcert::mcg::{MappingClassWord, Twist};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Names of catalog curves with a known action.
pub fn concrete_curves(cat: &CurveCatalog) -> Vec<String> {
    cat.curves()
        .filter(|c| !c.is_abstract())
        .map(|c| c.name.clone())
        .collect()
}

/// Random word of signed catalog twists, length `0..=max_len`.
pub fn random_word(cat: &CurveCatalog, rng: &mut ChaCha8Rng, max_len: usize) -> MappingClassWord {
    let names = concrete_curves(cat);
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let name = names.choose(rng).unwrap();
            Twist::new(name.clone(), if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect()
}
