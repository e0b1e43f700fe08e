//! Finite table-presented rings and modules, strict 2-rings, and 2-modules
//! over discrete 2-rings.
//!
//! Elements are `usize` indices into Cayley tables. Every validator checks its
//! axioms exhaustively, and derived structures (quotients, kernels, free
//! modules) pick representatives by lowest index so results are deterministic.

mod mod2;
mod module;
mod projective;
mod ring;
mod two_ring;

pub use mod2::{
    canonical_quotient_mod, check_mod_2morphism, dis_module, dis_module_hom, is_mod_essentially_surjective, pi0_module,
    pi0_module_hom, pi0_module_with_projection, pi1_module, Mod2, Mod2Hom, ModHomotopy,
};
pub use module::{FinMod, ModHom};
pub use projective::{
    find_basis, free_cover_mod, is_discrete_free_mod, lift_discrete_free_mod, module_projective_presentation,
    ModPresentationCert,
};
pub use ring::FinRing;
pub use two_ring::{dis_ring, pi0_ring, pi0_ring_with_projection, FinGroupTable, Strict2Ring};

use crate::error::{Error, Result};

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidTable(msg.into()))
}

pub(crate) fn check_shape(name: &str, t: &[Vec<usize>], rows: usize, cols: usize, bound: usize) -> Result<()> {
    if t.len() != rows || t.iter().any(|r| r.len() != cols) {
        return invalid(format!("{name} table must be {rows}x{cols}"));
    }
    if t.iter().flatten().any(|&x| x >= bound) {
        return invalid(format!("{name} table has an entry out of range"));
    }
    Ok(())
}

pub(crate) fn check_map(name: &str, m: &[usize], len: usize, bound: usize) -> Result<()> {
    if m.len() != len || m.iter().any(|&x| x >= bound) {
        return invalid(format!("{name} must list {len} indices below {bound}"));
    }
    Ok(())
}

/// The element acting as an additive identity, if any.
pub(crate) fn find_zero(add: &[Vec<usize>]) -> Option<usize> {
    (0..add.len()).find(|&e| (0..add.len()).all(|x| add[e][x] == x && add[x][e] == x))
}

/// Checks the abelian group axioms and returns the negation table.
pub(crate) fn check_abelian_group(name: &str, size: usize, add: &[Vec<usize>], zero: usize) -> Result<Vec<usize>> {
    if size == 0 {
        return invalid(format!("{name} must be nonempty"));
    }
    check_shape(name, add, size, size, size)?;
    if zero >= size {
        return invalid(format!("{name} zero out of range"));
    }
    let mut neg = vec![usize::MAX; size];
    for x in 0..size {
        if add[zero][x] != x || add[x][zero] != x {
            return invalid(format!("{name}: {zero} is not an additive identity"));
        }
        match (0..size).find(|&y| add[x][y] == zero) {
            Some(y) => neg[x] = y,
            None => return invalid(format!("{name}: element {x} has no negative")),
        }
        for y in 0..size {
            if add[x][y] != add[y][x] {
                return invalid(format!("{name}: addition not commutative at ({x}, {y})"));
            }
            for z in 0..size {
                if add[add[x][y]][z] != add[x][add[y][z]] {
                    return invalid(format!("{name}: addition not associative at ({x}, {y}, {z})"));
                }
            }
        }
    }
    Ok(neg)
}

/// Negation table of a group already known to be valid.
pub(crate) fn negation(add: &[Vec<usize>], zero: usize) -> Vec<usize> {
    (0..add.len()).map(|x| (0..add.len()).find(|&y| add[x][y] == zero).expect("valid group")).collect()
}

/// Cosets of the subgroup `sub` (given as a membership mask). Returns the
/// lowest-index representative of each coset in increasing order, and the
/// coset number of every element.
pub(crate) fn cosets(add: &[Vec<usize>], sub: &[bool]) -> (Vec<usize>, Vec<usize>) {
    let members: Vec<usize> = (0..sub.len()).filter(|&s| sub[s]).collect();
    let mut reps = Vec::new();
    let mut class_of = vec![usize::MAX; add.len()];
    for x in 0..add.len() {
        if class_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &s in &members {
            class_of[add[x][s]] = c;
        }
    }
    (reps, class_of)
}

/// Restricts a binary table to a subset (given in increasing order) closed under it.
pub(crate) fn restrict_table(t: &[Vec<usize>], rows: &[usize], cols: &[usize], pos: &[usize]) -> Vec<Vec<usize>> {
    rows.iter().map(|&a| cols.iter().map(|&b| pos[t[a][b]]).collect()).collect()
}

/// Induced binary table on cosets.
pub(crate) fn quotient_table(
    t: &[Vec<usize>],
    row_reps: &[usize],
    col_reps: &[usize],
    class_of: &[usize],
) -> Vec<Vec<usize>> {
    row_reps.iter().map(|&a| col_reps.iter().map(|&b| class_of[t[a][b]]).collect()).collect()
}
