//! Subset-sum tables and the power-of-two test.

use crate::error::{Error, Result};
use crate::set::{full_mask, BinarySet, Word};

/// Default largest order for which a full `2^n` count table is built.
pub const DEFAULT_ZETA_MAX_ORDER: usize = 24;

/// Resource caps shared by the table-based checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for which a [`ZetaTable`] may be allocated.
    pub zeta_max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            zeta_max_order: DEFAULT_ZETA_MAX_ORDER,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, order: usize) -> Result<()> {
        if order > self.zeta_max_order {
            Err(Error::OrderTooLarge {
                order,
                max: self.zeta_max_order,
            })
        } else {
            Ok(())
        }
    }
}

/// `counts[m]` is the number of members contained in mask `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTable {
    order: usize,
    counts: Vec<u32>,
}

impl ZetaTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Members contained in `mask`.
    pub fn at(&self, mask: Word) -> u32 {
        self.counts[mask.0 as usize]
    }

    /// Members that are zero on every coordinate of `x`.
    pub fn zero_on(&self, x: Word) -> u32 {
        self.counts[(full_mask(self.order) & !x.0) as usize]
    }
}

#[inline]
pub fn is_power_of_two(x: u64) -> bool {
    x != 0 && x & (x - 1) == 0
}

/// In-place subset sums over the boolean lattice.
pub(crate) fn subset_sums(counts: &mut [u32]) {
    let len = counts.len();
    let mut step = 1;
    while step < len {
        for block in counts.chunks_exact_mut(step * 2) {
            let (lo, hi) = block.split_at_mut(step);
            for (l, h) in lo.iter().zip(hi) {
                *h += *l;
            }
        }
        step *= 2;
    }
}

pub fn zeta_transform(set: &BinarySet) -> Result<ZetaTable> {
    zeta_transform_with(set, &Limits::default())
}

pub fn zeta_transform_with(set: &BinarySet, limits: &Limits) -> Result<ZetaTable> {
    limits.check(set.order())?;
    let mut counts = vec![0u32; 1 << set.order()];
    for w in set.iter() {
        counts[w.0 as usize] = 1;
    }
    subset_sums(&mut counts);
    Ok(ZetaTable {
        order: set.order(),
        counts,
    })
}

/// Number of members that are zero on all of `x`.
pub fn count_zero_on(set: &BinarySet, x: Word) -> usize {
    set.iter().filter(|w| w.0 & x.0 == 0).count()
}

/// A coordinate set whose zero-count is not a power of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerWitness {
    pub x: Word,
    pub count: u32,
}

/// Smallest `X` (as an integer) violating the power-of-two property, if any.
pub fn first_failure(set: &BinarySet) -> Result<Option<PowerWitness>> {
    first_failure_with(set, &Limits::default())
}

pub fn first_failure_with(set: &BinarySet, limits: &Limits) -> Result<Option<PowerWitness>> {
    let table = zeta_transform_with(set, limits)?;
    let full = full_mask(set.order());
    Ok((0..=full).find_map(|x| {
        let count = table.counts[(full & !x) as usize];
        (!is_power_of_two(count as u64)).then_some(PowerWitness { x: Word(x), count })
    }))
}

pub fn is_powerful(set: &BinarySet) -> Result<bool> {
    is_powerful_with(set, &Limits::default())
}

pub fn is_powerful_with(set: &BinarySet, limits: &Limits) -> Result<bool> {
    limits.check(set.order())?;
    if !set.contains_zero() || !is_power_of_two(set.len() as u64) {
        return Ok(false);
    }
    let table = zeta_transform_with(set, limits)?;
    Ok(table.counts.iter().all(|&c| is_power_of_two(c as u64)))
}

/// Dimension over GF(2) of the span of `words`.
pub(crate) fn gf2_rank<I: IntoIterator<Item = u32>>(words: I) -> u32 {
    // basis[b] holds a vector whose highest set bit is b
    let mut basis = [0u32; 32];
    let mut rank = 0;
    for mut w in words {
        while w != 0 {
            let top = 31 - w.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = w;
                rank += 1;
                break;
            }
            w ^= basis[top];
        }
    }
    rank
}

/// Zero word present and closed under XOR.
pub fn is_linear(set: &BinarySet) -> bool {
    if !set.contains_zero() {
        return false;
    }
    // span(S) ⊇ S, with equality exactly when |S| = 2^rank
    let rank = gf2_rank(set.iter().map(|w| w.0));
    set.len() as u64 == 1u64 << rank
}

/// `log2 |S|`.
pub fn dim(set: &BinarySet) -> Result<u32> {
    let size = set.len();
    if !is_power_of_two(size as u64) {
        return Err(Error::NotPowerOfTwoSize { size });
    }
    Ok(size.trailing_zeros())
}
