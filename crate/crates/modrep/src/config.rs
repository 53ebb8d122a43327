use crate::field::FieldSpec;
use serde::{Deserialize, Serialize};

/// Global caps and the random seed.
///
/// Every randomized code path derives its stream from `seed` together with a
/// content hash of its inputs, so results do not depend on evaluation order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Config {
    /// Largest number of candidates an exhaustive enumeration may visit.
    pub enum_cap: u64,
    /// Largest number of random trials before reporting `Indeterminate`.
    pub iteration_cap: u64,
    /// Base seed for all randomized searches.
    pub seed: u64,
    /// Optional coefficient-field override for suites that accept one.
    pub field: Option<FieldSpec>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enum_cap: 1 << 16,
            iteration_cap: 1 << 12,
            seed: 0xB41C,
            field: None,
        }
    }
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }

    /// `base^exp` if it stays within `enum_cap`, else `None`.
    pub fn within_enum_cap(&self, base: u64, exp: usize) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..exp {
            acc = acc.checked_mul(base)?;
            if acc > self.enum_cap {
                return None;
            }
        }
        Some(acc)
    }
}

/// 64-bit FNV-1a, used to derive per-call seeds from input content.
/// Stable across platforms and releases, unlike `DefaultHasher`.
pub(crate) fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

pub(crate) fn rng_for(cfg: &Config, tag: &str, content: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    let mut seed_bytes = [0u8; 32];
    seed_bytes[..8].copy_from_slice(&cfg.seed.to_le_bytes());
    seed_bytes[8..16].copy_from_slice(&fnv64(tag.as_bytes()).to_le_bytes());
    seed_bytes[16..24].copy_from_slice(&content.to_le_bytes());
    rand_chacha::ChaCha8Rng::from_seed(seed_bytes)
}
