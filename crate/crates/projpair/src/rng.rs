//! Seeded pseudo-randomness for reproducible sampling.
//!
//! The generator is SplitMix64: 64-bit state advanced by the golden-gamma
//! increment, output finalized by two xor-shift multiplies. It is trivially
//! portable, so sampled vectors can be reproduced from the seed in any
//! language. Substream `k` of seed `s` starts from state
//! `s + k * 0x9E3779B97F4A7C15`, which is exactly the state the base stream
//! reaches after `k` draws.

use num_complex::Complex64;

use crate::matrix::vec_norm;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Independent substream for sample `index` of a given seed.
    pub fn substream(seed: u64, index: u64) -> Self {
        Self {
            state: seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1) with 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        // Guard the log against u = 0.
        let u = loop {
            let u = self.next_f64();
            if u > 0.0 {
                break u;
            }
        };
        let v = self.next_f64();
        (-2.0 * u.ln()).sqrt() * (std::f64::consts::TAU * v).cos()
    }

    /// Complex vector with independent N(0,1) real and imaginary parts.
    pub fn next_complex_vector(&mut self, dim: usize) -> Vec<Complex64> {
        (0..dim)
            .map(|_| Complex64::new(self.next_gaussian(), self.next_gaussian()))
            .collect()
    }

    /// Unit vector uniform on the complex sphere.
    pub fn next_unit_vector(&mut self, dim: usize) -> Vec<Complex64> {
        loop {
            let v = self.next_complex_vector(dim);
            let norm = vec_norm(&v);
            if norm > 1e-6 {
                return v.into_iter().map(|z| z / norm).collect();
            }
        }
    }
}
