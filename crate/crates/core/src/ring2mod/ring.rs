use super::{check_abelian_group, check_shape, invalid};
use crate::error::Result;

/// Finite ring with unit, given by addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinRing {
    size: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
}

impl FinRing {
    pub fn new(size: usize, add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let neg = check_abelian_group("ring addition", size, &add, zero)?;
        check_shape("ring multiplication", &mul, size, size, size)?;
        if one >= size {
            return invalid("ring one out of range");
        }
        for a in 0..size {
            if mul[one][a] != a || mul[a][one] != a {
                return invalid(format!("{one} is not a multiplicative unit at {a}"));
            }
            for b in 0..size {
                for c in 0..size {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return invalid(format!("multiplication not associative at ({a}, {b}, {c})"));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return invalid(format!("left distributivity fails at ({a}, {b}, {c})"));
                    }
                    if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                        return invalid(format!("right distributivity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FinRing { size, add, mul, zero, one, neg })
    }

    /// `Z/n` with element `i` the residue `i`.
    pub fn zmod(n: usize) -> Self {
        assert!(n >= 1, "Z/0 is not finite");
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        FinRing::new(n, add, mul, 0, 1 % n).expect("Z/n is a ring")
    }

    /// `F2[x]/(x^2)` with `a + b x` stored at index `a + 2b`.
    pub fn f2_dual_numbers() -> Self {
        let split = |i: usize| (i & 1, i >> 1);
        let add = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        let mul = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        let ((a, b), (c, d)) = (split(i), split(j));
                        (a * c) % 2 + 2 * ((a * d + b * c) % 2)
                    })
                    .collect()
            })
            .collect();
        FinRing::new(4, add, mul, 0, 1).expect("dual numbers form a ring")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
}
