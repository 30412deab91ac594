use std::collections::HashMap;

use num_traits::Zero;

use super::DaryFamily;
use crate::arith::Rat;
use crate::error::{Error, Result};

/// Largest size accepted by [`brute_force_dary`].
pub const MAX_DARY_ORACLE_SIZE: usize = 8;

struct Walk {
    offsets: Vec<i64>,
    /// Trees tallied by (internal nodes, largest internal label).
    out: HashMap<(usize, i64), u64>,
}

impl Walk {
    fn go(&mut self, stack: &mut Vec<i64>, left: usize, size: usize, maxl: i64) {
        let Some(l) = stack.pop() else {
            *self.out.entry((size, maxl)).or_insert(0) += 1;
            return;
        };
        self.go(stack, left, size, maxl);
        if left > 0 {
            let depth = stack.len();
            for k in (0..self.offsets.len()).rev() {
                stack.push(l + self.offsets[k]);
            }
            self.go(stack, left - 1, size + 1, maxl.max(l));
            stack.truncate(depth);
        }
        stack.push(l);
    }
}

/// Rows `j = −c..=j_max`: counts of trees with at most `n_max` internal nodes,
/// root at 0, whose internal nodes all carry labels `≤ j`.
pub fn dary_oracle_table(fam: &DaryFamily, j_max: usize, n_max: usize) -> Result<Vec<Vec<Rat>>> {
    if n_max > MAX_DARY_ORACLE_SIZE {
        return Err(Error::SizeTooLarge(n_max, MAX_DARY_ORACLE_SIZE));
    }
    let mut walk = Walk {
        offsets: fam.offsets(),
        out: HashMap::new(),
    };
    walk.go(&mut vec![0], n_max, 0, i64::MIN);
    let c = fam.c() as i64;
    let mut rows = vec![vec![Rat::zero(); n_max + 1]; j_max + 1 + c as usize];
    for ((size, maxl), count) in walk.out {
        for (r, row) in rows.iter_mut().enumerate() {
            if maxl <= r as i64 - c {
                row[size] += Rat::from_integer(count.into());
            }
        }
    }
    Ok(rows)
}

/// Counts `[z^0..=z^{n_max}]` of trees with all internal labels `≤ j`, by
/// exhaustive generation.
pub fn brute_force_dary(fam: &DaryFamily, j: i64, n_max: usize) -> Result<Vec<Rat>> {
    let c = fam.c() as i64;
    if j < -c {
        let mut v = vec![Rat::zero(); n_max + 1];
        v[0] = Rat::from_integer(1.into());
        return Ok(v);
    }
    let rows = dary_oracle_table(fam, j.max(0) as usize, n_max)?;
    Ok(rows[(j + c) as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::kernel::fuss_catalan;

    #[test]
    fn unbounded_counts_are_fuss_catalan() {
        let f = DaryFamily::odd(1);
        let r = brute_force_dary(&f, 100, 5).unwrap();
        for (n, x) in r.iter().enumerate() {
            assert_eq!(*x, fuss_catalan(n as u64, 3));
        }
        assert_eq!(r[3], rat(12));
        let f = DaryFamily::even(2);
        let r = brute_force_dary(&f, 100, 4).unwrap();
        assert_eq!(r[4], fuss_catalan(4, 4));
    }

    #[test]
    fn negative_bounds_keep_only_the_leaf() {
        let f = DaryFamily::even(2);
        let r = brute_force_dary(&f, -1, 3).unwrap();
        assert_eq!(r, vec![rat(1), rat(0), rat(0), rat(0)]);
        let r = brute_force_dary(&f, -7, 3).unwrap();
        assert_eq!(r[0], rat(1));
    }

    #[test]
    fn left_ternary_trees() {
        // j = 0: the root's right child is forbidden, so [z^2] counts the left and middle child.
        let r = brute_force_dary(&DaryFamily::odd(1), 0, 2).unwrap();
        assert_eq!(r, vec![rat(1), rat(1), rat(2)]);
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            brute_force_dary(&DaryFamily::odd(1), 0, 9),
            Err(Error::SizeTooLarge(9, 8))
        ));
    }
}
