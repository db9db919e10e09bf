//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! Rim hooks are removed on the beta-set (abacus) of the shape: taking a
//! rim hook of length `k` off `lam` moves one bead from position `b` to
//! the empty position `b - k`, with sign `(-1)^(beads strictly between)`.
//! The longest cycle of the class is always removed first.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::permutations::Permutation;

/// A conjugacy class of `S_n`, given by its multiset of cycle lengths.
pub type CycleType = Partition;

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `chi^lam` on the class `ct`.
pub fn mn_character(lam: &Partition, ct: &CycleType) -> Result<i64> {
    if lam.n() != ct.n() {
        return Err(Error::SizeMismatch { partition: lam.n(), cycle_type: ct.n() });
    }
    Ok(mn(lam.parts(), ct.parts()))
}

fn mn(shape: &[usize], cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    if rest.is_empty() && shape.len() <= 1 {
        // one row of length k, one k-cycle
        return 1;
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo().read().expect("memo poisoned").get(&key) {
        return v;
    }

    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + (len - 1 - i)).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        let smaller = from_beta(moved);
        let value = mn(&smaller, rest);
        total += if height % 2 == 0 { value } else { -value };
    }

    // Racing writers store the same value.
    memo().write().expect("memo poisoned").insert(key, total);
    total
}

fn from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let mut parts: Vec<usize> = beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// `chi^mu` evaluated on a permutation of `{1..n}` fixing 1, read as a
/// permutation of `{2..n}` relabeled to `{1..n-1}`.
pub fn restricted_character(mu: &Partition, h: &Permutation) -> Result<i64> {
    if !h.fixes(1) {
        return Err(Error::DoesNotFixOne);
    }
    if mu.n() + 1 != h.degree() {
        return Err(Error::SizeMismatch { partition: mu.n() + 1, cycle_type: h.degree() });
    }
    // dropping the fixed point 1 removes one part equal to 1
    let mut parts = h.cycle_type().parts().to_vec();
    parts.pop();
    let ct = Partition::new(parts)?;
    mn_character(mu, &ct)
}
