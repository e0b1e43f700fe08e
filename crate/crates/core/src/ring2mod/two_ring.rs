use super::ring::FinRing;
use super::{check_abelian_group, check_map, check_shape, cosets, invalid, quotient_table};
use crate::error::Result;

/// Finite abelian group given by its addition table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinGroupTable {
    size: usize,
    add: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
}

impl FinGroupTable {
    pub fn new(size: usize, add: Vec<Vec<usize>>, zero: usize) -> Result<Self> {
        let neg = check_abelian_group("group", size, &add, zero)?;
        Ok(FinGroupTable { size, add, zero, neg })
    }

    pub fn trivial() -> Self {
        FinGroupTable { size: 1, add: vec![vec![0]], zero: 0, neg: vec![0] }
    }

    /// Additive group of `Z/n`.
    pub fn cyclic(n: usize) -> Self {
        FinGroupTable::new(n, (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(), 0)
            .expect("Z/n is a group")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
}

/// Crossed module of rings `delta: r1 -> r0`, with `r0` acting on `r1` on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Strict2Ring {
    r1: FinGroupTable,
    r0: FinRing,
    delta: Vec<usize>,
    left: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
}

impl Strict2Ring {
    pub fn new(
        r1: FinGroupTable,
        r0: FinRing,
        delta: Vec<usize>,
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let (n1, n0) = (r1.size(), r0.size());
        check_map("2-ring delta", &delta, n1, n0)?;
        check_shape("left action", &left, n0, n1, n1)?;
        check_shape("right action", &right, n1, n0, n1)?;
        for s in 0..n1 {
            for t in 0..n1 {
                if delta[r1.add(s, t)] != r0.add(delta[s], delta[t]) {
                    return invalid(format!("delta not additive at ({s}, {t})"));
                }
                if left[delta[s]][t] != right[s][delta[t]] {
                    return invalid(format!("Peiffer identity fails at ({s}, {t})"));
                }
            }
        }
        for r in 0..n0 {
            for s in 0..n1 {
                if delta[left[r][s]] != r0.mul(r, delta[s]) || delta[right[s][r]] != r0.mul(delta[s], r) {
                    return invalid(format!("delta not equivariant at ({r}, {s})"));
                }
                for t in 0..n1 {
                    if left[r][r1.add(s, t)] != r1.add(left[r][s], left[r][t])
                        || right[r1.add(s, t)][r] != r1.add(right[s][r], right[t][r])
                    {
                        return invalid(format!("action not additive in r1 at ({r}, {s}, {t})"));
                    }
                }
                for q in 0..n0 {
                    if left[r0.add(r, q)][s] != r1.add(left[r][s], left[q][s])
                        || right[s][r0.add(r, q)] != r1.add(right[s][r], right[s][q])
                    {
                        return invalid(format!("action not additive in r0 at ({r}, {q}, {s})"));
                    }
                    if left[r0.mul(r, q)][s] != left[r][left[q][s]] || right[s][r0.mul(r, q)] != right[right[s][r]][q] {
                        return invalid(format!("action not associative at ({r}, {q}, {s})"));
                    }
                    if left[r][right[s][q]] != right[left[r][s]][q] {
                        return invalid(format!("left and right actions do not commute at ({r}, {s}, {q})"));
                    }
                }
            }
            if left[r0.one()].iter().enumerate().any(|(s, &x)| x != s) || (0..n1).any(|s| right[s][r0.one()] != s) {
                return invalid("unit does not act trivially");
            }
        }
        let image = image_mask(&delta, n0);
        for r in 0..n0 {
            for a in (0..n0).filter(|&a| image[a]) {
                if !image[r0.mul(r, a)] || !image[r0.mul(a, r)] {
                    return invalid(format!("image of delta is not an ideal at ({r}, {a})"));
                }
            }
        }
        Ok(Strict2Ring { r1, r0, delta, left, right })
    }

    pub fn r1(&self) -> &FinGroupTable {
        &self.r1
    }

    pub fn r0(&self) -> &FinRing {
        &self.r0
    }

    pub fn delta(&self) -> &[usize] {
        &self.delta
    }

    pub fn left(&self) -> &[Vec<usize>] {
        &self.left
    }

    pub fn right(&self) -> &[Vec<usize>] {
        &self.right
    }
}

fn image_mask(map: &[usize], size: usize) -> Vec<bool> {
    let mut mask = vec![false; size];
    map.iter().for_each(|&x| mask[x] = true);
    mask
}

/// `R_dis`: `0 -> R` with trivial actions.
pub fn dis_ring(r: &FinRing) -> Strict2Ring {
    let k = r.size();
    Strict2Ring::new(FinGroupTable::trivial(), r.clone(), vec![r.zero()], vec![vec![0]; k], vec![vec![0; k]])
        .expect("discrete 2-ring is valid")
}

/// `r0 / image(delta)` with the projection from `r0`.
pub fn pi0_ring_with_projection(r: &Strict2Ring) -> Result<(FinRing, Vec<usize>)> {
    let r0 = r.r0();
    let (reps, class_of) = cosets(r0.add_table(), &image_mask(r.delta(), r0.size()));
    let add = quotient_table(r0.add_table(), &reps, &reps, &class_of);
    let mul = quotient_table(r0.mul_table(), &reps, &reps, &class_of);
    let q = FinRing::new(reps.len(), add, mul, class_of[r0.zero()], class_of[r0.one()])?;
    Ok((q, class_of))
}

pub fn pi0_ring(r: &Strict2Ring) -> Result<FinRing> {
    pi0_ring_with_projection(r).map(|(q, _)| q)
}
