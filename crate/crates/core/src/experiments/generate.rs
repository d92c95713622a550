use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Erdos-Renyi graph: every pair is an edge independently with
/// probability `p`.
pub fn gen_erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    sample(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Connected Erdos-Renyi sample. Attempt `i` draws from stream `i` of the
/// generator seeded with `seed`; returns the graph and the number of
/// rejected samples.
pub fn gen_connected_erdos_renyi(
    n: usize,
    p: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<(Graph, usize)> {
    for attempt in 0..max_attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let g = sample(n, p, &mut rng)?;
        if g.is_connected(&[]) {
            return Ok((g, attempt));
        }
    }
    Err(Error::GiveUp(max_attempts))
}

fn sample(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Invalid(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Seed for one named stream of one instance of an experiment.
pub fn derive_seed(seed: u64, instance: usize, stream: u64) -> u64 {
    // splitmix64 over the combined inputs
    let mut z = seed
        ^ (instance as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ stream.wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
