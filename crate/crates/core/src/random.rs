//! Seeded random parity-preserving basis changes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, Matrix};
use crate::superalg::{BasisChange, LieSuperalgebra};

/// Environment variable holding the seed for randomized checks.
pub const SEED_ENV: &str = "SUPERSCHUR_SEED";
pub const DEFAULT_SEED: u64 = 1729;

/// `SUPERSCHUR_SEED` if set and parseable, else [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = q(rng.gen_range(-3..=3));
            }
        }
        if m.rank() == n {
            return m;
        }
    }
}

/// Uniformly random small-integer invertible blocks for each parity.
pub fn random_basis_change<R: Rng>(rng: &mut R, algebra: &LieSuperalgebra) -> BasisChange {
    let (m, n) = algebra.dims();
    BasisChange {
        even: random_invertible(rng, m),
        odd: random_invertible(rng, n),
    }
}

/// The algebra rewritten in a random homogeneous basis.
pub fn random_rebasis<R: Rng>(rng: &mut R, algebra: &LieSuperalgebra) -> LieSuperalgebra {
    let change = random_basis_change(rng, algebra);
    algebra
        .change_basis(&change)
        .expect("random blocks are invertible by construction")
}
