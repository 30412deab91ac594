use std::collections::HashMap;

use num_traits::Zero;

use super::{BinaryWeights, Boundary};
use crate::arith::Rat;
use crate::error::{Error, Result};

/// Largest size accepted by the exhaustive enumerators.
pub const MAX_ORACLE_SIZE: usize = 10;

/// Node kinds as (weight index into `v1, v2, w1, w2, w3`, child label offsets).
const KINDS: &[(usize, &[i32])] = &[
    (0, &[-1]),
    (0, &[1]),
    (1, &[0]),
    (2, &[-1, 1]),
    (3, &[0, 0]),
    (4, &[0, -1]),
    (4, &[0, 1]),
];

type Tally = HashMap<(usize, i32, [u8; 5]), u64>;

struct Walk<'a> {
    kinds: Vec<(usize, &'a [i32])>,
    leaf_labels: bool,
    out: Tally,
}

impl Walk<'_> {
    fn go(
        &mut self,
        stack: &mut Vec<i32>,
        left: usize,
        size: usize,
        maxl: i32,
        exps: &mut [u8; 5],
    ) {
        let Some(l) = stack.pop() else {
            *self.out.entry((size, maxl, *exps)).or_insert(0) += 1;
            return;
        };
        let leaf_max = if self.leaf_labels { maxl.max(l) } else { maxl };
        self.go(stack, left, size, leaf_max, exps);
        if left > 0 {
            for k in 0..self.kinds.len() {
                let (wi, offs) = self.kinds[k];
                let depth = stack.len();
                for o in offs.iter().rev() {
                    stack.push(l + o);
                }
                exps[wi] += 1;
                self.go(stack, left - 1, size + 1, maxl.max(l), exps);
                exps[wi] -= 1;
                stack.truncate(depth);
            }
        }
        stack.push(l);
    }
}

/// Every weighted tree with at most `n_max` internal nodes, tallied by size,
/// largest label and node-kind multiplicities.
fn enumerate(w: &BinaryWeights, boundary: Boundary, n_max: usize) -> Result<Tally> {
    if n_max > MAX_ORACLE_SIZE {
        return Err(Error::SizeTooLarge(n_max, MAX_ORACLE_SIZE));
    }
    let ws = w.all();
    let mut walk = Walk {
        kinds: KINDS
            .iter()
            .copied()
            .filter(|(i, _)| !ws[*i].is_zero())
            .collect(),
        leaf_labels: boundary == Boundary::Zero,
        out: HashMap::new(),
    };
    let mut stack = vec![0];
    walk.go(&mut stack, n_max, 0, i32::MIN, &mut [0; 5]);
    Ok(walk.out)
}

/// Rows `j = −1..=j_max` of weighted counts of trees whose labels are all `≤ j`,
/// root at label 0, sizes `0..=n_max`; leaves carry labels iff `boundary` is `Zero`.
pub fn binary_oracle_table(
    w: &BinaryWeights,
    boundary: Boundary,
    j_max: usize,
    n_max: usize,
) -> Result<Vec<Vec<Rat>>> {
    let tally = enumerate(w, boundary, n_max)?;
    let ws = w.all();
    let mut rows = vec![vec![Rat::zero(); n_max + 1]; j_max + 2];
    for ((size, maxl, exps), count) in tally {
        let mut weight = Rat::from_integer(count.into());
        for (i, e) in exps.iter().enumerate() {
            for _ in 0..*e {
                weight *= ws[i];
            }
        }
        for (r, row) in rows.iter_mut().enumerate() {
            if maxl < r as i32 {
                row[size] += &weight;
            }
        }
    }
    Ok(rows)
}

/// Weighted counts `[z^0..=z^{n_max}]` of trees with all labels `≤ j`.
pub fn brute_force_embedded_binary(
    w: &BinaryWeights,
    boundary: Boundary,
    j: i64,
    n_max: usize,
) -> Result<Vec<Rat>> {
    if j < -1 {
        return Ok(vec![Rat::zero(); n_max + 1]);
    }
    let rows = binary_oracle_table(w, boundary, (j + 1) as usize, n_max)?;
    Ok(rows[(j + 1) as usize].clone())
}

#[cfg(test)]
mod tests {
    use num_traits::One;

    use super::*;
    use crate::arith::rat;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn unconstrained_catalan() {
        let w = BinaryWeights::ints([0, 0, 1, 0, 0]);
        let r = brute_force_embedded_binary(&w, Boundary::One, 10, 4).unwrap();
        assert_eq!(r, ints(&[1, 1, 2, 5, 14]));
        assert_eq!(r[0], Rat::one());
    }

    #[test]
    fn small_bound_by_hand() {
        // j = 0, binary trees: the root may only have a left chain of children at −1, −2, ...
        // but any right child returns to 0 and then further right children go to +1.
        let w = BinaryWeights::ints([0, 0, 1, 0, 0]);
        let r = brute_force_embedded_binary(&w, Boundary::One, 0, 3).unwrap();
        assert_eq!(r[1], rat(1));
        assert_eq!(r[2], rat(1));
        let r = brute_force_embedded_binary(&w, Boundary::One, -1, 3).unwrap();
        assert_eq!(r, ints(&[1, 0, 0, 0]));
        let w = BinaryWeights::ints([0, 0, 0, 1, 1]);
        let r = brute_force_embedded_binary(&w, Boundary::Zero, -1, 3).unwrap();
        assert_eq!(r, ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn too_large() {
        let w = BinaryWeights::ints([0, 0, 1, 0, 0]);
        assert!(matches!(
            brute_force_embedded_binary(&w, Boundary::One, 0, 11),
            Err(Error::SizeTooLarge(11, 10))
        ));
    }
}
