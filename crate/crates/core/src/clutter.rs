//! Minimal nonzero members and reconstruction of a powerful set from them.
//!
//! A powerful set is fixed by its clutter of inclusion-minimal nonzero
//! members. [`reconstruct`] rebuilds the indicator function one coordinate set
//! at a time, in order of increasing size, using only the number of members
//! already placed below each set. [`enumerate_antichains`] walks every
//! candidate clutter of a small ground set, which is what the census feeds
//! into reconstruction.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::{full_mask, BinarySet, Word};
use crate::zeta::{is_power_of_two, is_powerful};

/// Default cap on the order accepted by [`reconstruct`].
pub const MAX_RECONSTRUCT_ORDER: usize = 16;
/// Cap on the order accepted by [`enumerate_antichains`].
pub const MAX_ANTICHAIN_ORDER: usize = 6;

/// An antichain of nonzero words.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clutter {
    order: usize,
    members: Vec<Word>,
}

impl Clutter {
    pub fn new<I: IntoIterator<Item = Word>>(order: usize, members: I) -> Result<Self> {
        let set = BinarySet::new(order, members)?;
        let members = set.into_words();
        if members.first() == Some(&Word::ZERO) {
            return Err(Error::InvalidClutter {
                word: 0,
                reason: "the zero word cannot be a member",
            });
        }
        for (i, a) in members.iter().enumerate() {
            if let Some(b) = members[i + 1..].iter().find(|b| a.is_subset_of(**b)) {
                return Err(Error::InvalidClutter {
                    word: b.0,
                    reason: "contains another member",
                });
            }
        }
        Ok(Clutter { order, members })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The clutter as a set of words (without the zero word).
    pub fn as_set(&self) -> BinarySet {
        BinarySet::from_sorted_unchecked(self.order, self.members.clone())
    }
}

/// Inclusion-minimal nonzero members of `S`.
pub fn min_members(set: &BinarySet) -> Clutter {
    let mut by_weight: Vec<Word> = set.iter().filter(|w| !w.is_zero()).collect();
    by_weight.sort_by_key(|w| (w.weight(), w.0));
    let mut minimal: Vec<Word> = Vec::new();
    for w in by_weight {
        if !minimal.iter().any(|m| m.is_subset_of(w)) {
            minimal.push(w);
        }
    }
    minimal.sort_unstable();
    debug_assert!(minimal.iter().enumerate().all(|(i, a)| minimal
        .iter()
        .skip(i + 1)
        .all(|b| !a.is_subset_of(*b) && !b.is_subset_of(*a))));
    Clutter {
        order: set.order(),
        members: minimal,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PostCheckFailure {
    NotPowerful,
    ClutterMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReconstructionOutcome {
    /// The unique powerful set whose minimal members are the input clutter.
    Accepted(BinarySet),
    /// `witness` had `subset_sum` members strictly below it, which is neither
    /// a power of two nor one less than a power of two.
    Rejected { witness: Word, subset_sum: u32 },
    /// The cascade completed but its output failed verification.
    RejectedPostCheck(PostCheckFailure),
}

impl ReconstructionOutcome {
    pub fn accepted(&self) -> Option<&BinarySet> {
        match self {
            ReconstructionOutcome::Accepted(s) => Some(s),
            _ => None,
        }
    }

    pub fn into_accepted(self) -> Option<BinarySet> {
        match self {
            ReconstructionOutcome::Accepted(s) => Some(s),
            _ => None,
        }
    }
}

/// Masks of `[n]` ordered by size, then by value.
fn masks_by_size(order: usize) -> &'static [u32] {
    static CACHE: [OnceLock<Vec<u32>>; MAX_RECONSTRUCT_ORDER + 1] =
        [const { OnceLock::new() }; MAX_RECONSTRUCT_ORDER + 1];
    CACHE[order].get_or_init(|| {
        let mut masks: Vec<u32> = (0..1u32 << order).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks
    })
}

/// Reusable scratch space for repeated reconstructions at one order.
pub struct Reconstructor {
    order: usize,
    /// `layers[i * 2^n + x]`: sum of `f(y)` over `y ⊆ x` agreeing with `x`
    /// on bits `i` and above.
    layers: Vec<u32>,
    in_clutter: Vec<bool>,
    partial: Vec<u32>,
}

impl Reconstructor {
    pub fn new(order: usize) -> Result<Self> {
        if order > MAX_RECONSTRUCT_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_RECONSTRUCT_ORDER,
            });
        }
        let size = 1usize << order;
        Ok(Reconstructor {
            order,
            layers: vec![0; (order + 1) * size],
            in_clutter: vec![false; size],
            partial: vec![0; order + 1],
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Runs the reconstruction on a clutter given as its member list.
    ///
    /// `members` must be an antichain of nonzero words of this order.
    pub fn run(&mut self, members: &[Word]) -> ReconstructionOutcome {
        for m in members {
            self.in_clutter[m.0 as usize] = true;
        }
        let outcome = self.cascade(members);
        for m in members {
            self.in_clutter[m.0 as usize] = false;
        }
        outcome
    }

    fn cascade(&mut self, members: &[Word]) -> ReconstructionOutcome {
        let n = self.order;
        let size = 1usize << n;
        let mut support = Vec::new();
        for &x in masks_by_size(n) {
            let xi = x as usize;
            let f = if x == 0 {
                for i in 0..=n {
                    self.partial[i] = 0;
                }
                1
            } else {
                let mut acc = 0;
                for i in 0..n {
                    self.partial[i] = acc;
                    if x >> i & 1 == 1 {
                        acc += self.layers[i * size + (xi ^ 1 << i)];
                    }
                }
                self.partial[n] = acc;
                // acc is the number of members strictly below x
                let s = acc;
                if self.in_clutter[xi] {
                    1
                } else if s == 1 || s == 2 {
                    0
                } else if s >= 3 && is_power_of_two(s as u64 + 1) {
                    1
                } else if s >= 4 && is_power_of_two(s as u64) {
                    0
                } else {
                    return ReconstructionOutcome::Rejected {
                        witness: Word(x),
                        subset_sum: s,
                    };
                }
            };
            for i in 0..=n {
                self.layers[i * size + xi] = self.partial[i] + f;
            }
            if f == 1 {
                support.push(Word(x));
            }
        }

        let result = BinarySet::from_unsorted(n, support);
        if !is_powerful(&result).unwrap_or(false) {
            return ReconstructionOutcome::RejectedPostCheck(PostCheckFailure::NotPowerful);
        }
        if min_members(&result).members() != members {
            return ReconstructionOutcome::RejectedPostCheck(PostCheckFailure::ClutterMismatch);
        }
        ReconstructionOutcome::Accepted(result)
    }
}

/// Rebuilds the powerful set whose minimal nonzero members are `clutter`.
pub fn reconstruct(clutter: &Clutter) -> Result<ReconstructionOutcome> {
    Ok(Reconstructor::new(clutter.order())?.run(clutter.members()))
}

/// One top-level branch of the antichain search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AntichainPartition {
    /// Just the empty antichain.
    Empty,
    /// Antichains whose smallest member (as an integer) is this word.
    First(Word),
}

fn check_antichain_order(order: usize) -> Result<()> {
    if order > MAX_ANTICHAIN_ORDER {
        Err(Error::OrderTooLarge {
            order,
            max: MAX_ANTICHAIN_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Disjoint branches whose union is the whole antichain search.
pub fn antichain_partitions(order: usize) -> Result<Vec<AntichainPartition>> {
    check_antichain_order(order)?;
    let mut parts = vec![AntichainPartition::Empty];
    parts.extend((1..=full_mask(order)).map(|w| AntichainPartition::First(Word(w))));
    Ok(parts)
}

/// Words comparable to `w` (subsets and supersets), as a bitset over words.
fn comparability(order: usize) -> Vec<u64> {
    let words = 1u32 << order;
    (0..words)
        .map(|w| {
            (1..words)
                .filter(|&v| v & !w == 0 || w & !v == 0)
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect()
}

struct AntichainWalk<'a, F> {
    comparable: Vec<u64>,
    chosen: Vec<Word>,
    visitor: &'a mut F,
    visited: u64,
}

impl<F: FnMut(&[Word])> AntichainWalk<'_, F> {
    fn descend(&mut self, mut allowed: u64) {
        self.visited += 1;
        (self.visitor)(&self.chosen);
        while allowed != 0 {
            let w = allowed.trailing_zeros();
            allowed &= allowed - 1;
            self.chosen.push(Word(w));
            self.descend(allowed & !self.comparable[w as usize]);
            self.chosen.pop();
        }
    }
}

/// Visits every antichain in one partition; returns how many were visited.
pub fn enumerate_antichain_partition<F: FnMut(&[Word])>(
    order: usize,
    partition: AntichainPartition,
    mut visitor: F,
) -> Result<u64> {
    check_antichain_order(order)?;
    match partition {
        AntichainPartition::Empty => {
            visitor(&[]);
            Ok(1)
        }
        AntichainPartition::First(first) => {
            if first.is_zero() || first.0 > full_mask(order) {
                return Err(Error::WordOutOfRange {
                    word: first.0,
                    order,
                });
            }
            let comparable = comparability(order);
            let words = 1u32 << order;
            let nonzero = if words == 64 {
                u64::MAX
            } else {
                (1u64 << words) - 1
            } & !1;
            let later = if first.0 == 63 {
                0
            } else {
                nonzero & (u64::MAX << (first.0 + 1))
            };
            let mut walk = AntichainWalk {
                comparable,
                chosen: vec![first],
                visitor: &mut visitor,
                visited: 0,
            };
            let allowed = later & !walk.comparable[first.0 as usize];
            walk.descend(allowed);
            Ok(walk.visited)
        }
    }
}

/// Visits every antichain of nonzero subsets of `[order]` exactly once.
///
/// Members are handed to the visitor in increasing integer order; antichains
/// are produced depth-first, extending by larger words only.
pub fn enumerate_antichains<F: FnMut(&[Word])>(order: usize, mut visitor: F) -> Result<u64> {
    let mut total = 0;
    for part in antichain_partitions(order)? {
        total += enumerate_antichain_partition(order, part, &mut visitor)?;
    }
    Ok(total)
}
