//! Seeded generators and naive reference computations shared by the test
//! suites of the workspace.
//!
//! Everything here is deterministic in the seed. Reference computations use
//! plain `i128`/`BigInt` arithmetic and do not call into the Smith form code
//! they are meant to check.

pub mod groups;
pub mod modules;
pub mod reference;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Rng = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
