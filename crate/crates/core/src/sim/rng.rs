use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generator for replication `index` of the batch identified by
/// `(master_seed, domain)`. The key is built from the master seed and the
/// domain, and the replication index selects the ChaCha stream, so every
/// replication is reproducible on its own.
pub fn replication_rng(master_seed: u64, domain: u64, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&master_seed.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

/// SplitMix64 finalizer over `master ^ f(index)`; used to hand each sweep cell
/// its own master seed.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
