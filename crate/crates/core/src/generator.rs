//! Arc-model generators: rings, wheels, complete graphs and seeded random
//! real models.
//!
//! Random models are drawn with ChaCha8 seeded from the `u64` seed, and all
//! arithmetic is integral, so a seed yields the same model on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Arc, ArcModel};

/// Continuous circle used before endpoints are ranked into positions.
const CIRCLE: u64 = 1 << 32;
const TRIES_PER_SCALE: usize = 16;

/// Cycle `C_k`: arc `i` spans `[2i, 2i+3 mod 2k]`.
pub fn gen_ring(k: usize) -> Result<ArcModel> {
    if k < 3 {
        return Err(Error::MalformedModel(format!("ring needs k >= 3, got {k}")));
    }
    ArcModel::new(ring_arcs(k, 0))
}

fn ring_arcs(k: usize, offset: usize) -> Vec<Arc> {
    let c = 2 * k;
    (0..k)
        .map(|i| Arc {
            start: 2 * i + offset,
            end: (2 * i + 3) % c + offset,
        })
        .collect()
}

/// Wheel with `k` outer vertices `0..k` and hub `k`.
///
/// The outer ring occupies positions `1..=2k` of a `2(k+1)` circle; the hub
/// runs from 0 to `2k+1` and so meets every outer arc. The gap it misses is
/// covered by the wrapping outer arc.
pub fn gen_wheel(k: usize) -> Result<ArcModel> {
    if k < 3 {
        return Err(Error::MalformedModel(format!("wheel needs k >= 3, got {k}")));
    }
    let mut arcs = ring_arcs(k, 1);
    arcs.push(Arc {
        start: 0,
        end: 2 * k + 1,
    });
    ArcModel::new(arcs)
}

/// Complete graph `K_n`: arc `i` runs from `2i` to `2i-1`, missing one gap each.
pub fn gen_complete(n: usize) -> Result<ArcModel> {
    if n < 2 {
        return Err(Error::MalformedModel(format!("complete graph needs n >= 2, got {n}")));
    }
    let c = 2 * n;
    ArcModel::new(
        (0..n)
            .map(|i| Arc {
                start: 2 * i,
                end: (2 * i + c - 1) % c,
            })
            .collect(),
    )
}

/// Seeded random real model with `n` arcs.
///
/// Each model first draws a length cap so that densities range from sparse,
/// long-diameter rings of short arcs to dense models full of long arcs. Arcs
/// get uniform starts and lengths in `[1, cap]`; non-covering draws are
/// rejected, and after every batch of rejections the cap grows by a quarter.
pub fn gen_random(n: usize, seed: u64) -> Result<ArcModel> {
    if n < 3 {
        return Err(Error::MalformedModel(format!("random model needs n >= 3, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom = rng.gen_range(1..=(n as u64 / 2).max(1));
    let mut cap = (2 * CIRCLE / denom).min(CIRCLE - 1);
    loop {
        for _ in 0..TRIES_PER_SCALE {
            let model = sample(&mut rng, n, cap);
            if model.is_real() {
                return Ok(model);
            }
        }
        cap = (cap + cap / 4).min(CIRCLE - 1);
    }
}

fn sample(rng: &mut ChaCha8Rng, n: usize, cap: u64) -> ArcModel {
    let mut ends: Vec<(u64, usize)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let start = rng.gen_range(0..CIRCLE);
        let len = rng.gen_range(1..=cap);
        ends.push((start, 2 * i));
        ends.push(((start + len) % CIRCLE, 2 * i + 1));
    }
    ends.sort_unstable();
    let mut arcs = vec![Arc { start: 0, end: 0 }; n];
    for (pos, &(_, tag)) in ends.iter().enumerate() {
        if tag % 2 == 0 {
            arcs[tag / 2].start = pos;
        } else {
            arcs[tag / 2].end = pos;
        }
    }
    ArcModel::new(arcs).expect("ranked endpoints are distinct")
}
