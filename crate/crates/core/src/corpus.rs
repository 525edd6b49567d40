//! Deterministic random corpora for the property suites: supports of
//! bounded size with exact rational valuations, and small unimodular maps.

use crate::lattice::{pt, LatticePoint, UnimodularMap};
use crate::tropical::TropicalPolynomial;
use crate::{rat, Rat};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random tropical polynomial: support of at most `max_points` points
/// inside a small box (guaranteed 2-dimensional), valuations with small
/// numerators and denominators.
pub fn random_polynomial(rng: &mut ChaCha8Rng, max_points: usize) -> TropicalPolynomial {
    loop {
        let mut box_pts: Vec<LatticePoint> = (0..=4)
            .flat_map(|i| (0..=4).map(move |j| pt(i, j)))
            .collect();
        box_pts.shuffle(rng);
        let n = rng.gen_range(3..=max_points.min(box_pts.len()));
        let support: Vec<(LatticePoint, Rat)> = box_pts
            .into_iter()
            .take(n)
            .map(|p| {
                let num = rng.gen_range(-20i64..=20);
                let den = rng.gen_range(1i64..=8);
                (p, rat(num, den))
            })
            .collect();
        if let Ok(f) = TropicalPolynomial::new(support) {
            return f;
        }
    }
}

/// A random element of Aff(Z^2) with entries bounded by `bound`.
pub fn random_unimodular(rng: &mut ChaCha8Rng, bound: i64) -> UnimodularMap {
    loop {
        let a = rng.gen_range(-bound..=bound);
        let b = rng.gen_range(-bound..=bound);
        let c = rng.gen_range(-bound..=bound);
        let d = rng.gen_range(-bound..=bound);
        if (a * d - b * c).abs() == 1 {
            let tx = rng.gen_range(-bound..=bound);
            let ty = rng.gen_range(-bound..=bound);
            return UnimodularMap::new(a, b, c, d, tx, ty);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_under_seed() {
        let mut r1 = seeded_rng(7);
        let mut r2 = seeded_rng(7);
        for _ in 0..5 {
            assert_eq!(random_polynomial(&mut r1, 12), random_polynomial(&mut r2, 12));
            assert_eq!(random_unimodular(&mut r1, 5), random_unimodular(&mut r2, 5));
        }
    }
}
