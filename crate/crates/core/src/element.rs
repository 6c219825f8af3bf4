//! Special elements: loops, coloops, frames, near-frames and stars.

use std::collections::HashSet;

use crate::error::Result;
use crate::set::{drop_bit, BinarySet, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementKind {
    Loop,
    Coloop,
    Frame,
    /// The unique nonzero member that is also zero on the element.
    NearFrame {
        partner: Word,
    },
    Star,
    Ordinary,
}

impl ElementKind {
    pub fn name(&self) -> &'static str {
        match self {
            ElementKind::Loop => "loop",
            ElementKind::Coloop => "coloop",
            ElementKind::Frame => "frame",
            ElementKind::NearFrame { .. } => "near-frame",
            ElementKind::Star => "star",
            ElementKind::Ordinary => "ordinary",
        }
    }
}

pub fn is_loop(set: &BinarySet, element: usize) -> Result<bool> {
    let bit = set.check_element(element)?;
    Ok(set.iter().all(|w| w.0 >> bit & 1 == 0))
}

/// Flipping the element maps the set onto itself.
pub fn is_coloop(set: &BinarySet, element: usize) -> Result<bool> {
    let bit = set.check_element(element)?;
    Ok(!set.is_empty() && set.iter().all(|w| set.contains(Word(w.0 ^ 1 << bit))))
}

/// Members (in storage order) that are zero on the element.
fn zero_members(set: &BinarySet, bit: usize) -> impl Iterator<Item = Word> + '_ {
    set.iter().filter(move |w| w.0 >> bit & 1 == 0)
}

pub fn is_frame(set: &BinarySet, element: usize) -> Result<bool> {
    let bit = set.check_element(element)?;
    let mut zeros = zero_members(set, bit);
    Ok(zeros.next() == Some(Word::ZERO) && zeros.next().is_none())
}

/// The partner `v` when the element is zero exactly on `0` and one nonzero `v`.
pub fn near_frame_partner(set: &BinarySet, element: usize) -> Result<Option<Word>> {
    let bit = set.check_element(element)?;
    let mut zeros = zero_members(set, bit);
    Ok(match (zeros.next(), zeros.next(), zeros.next()) {
        (Some(Word::ZERO), Some(v), None) => Some(v),
        _ => None,
    })
}

/// `|S| = 2^(n-1)` and dropping the element is injective.
pub fn is_star(set: &BinarySet, element: usize) -> Result<bool> {
    let bit = set.check_element(element)?;
    if set.len() as u64 != 1u64 << (set.order() - 1) {
        return Ok(false);
    }
    let mut seen = HashSet::with_capacity(set.len());
    Ok(set.iter().all(|w| seen.insert(drop_bit(w.0, bit))))
}

/// Classifies `element` (1-based), testing loop, coloop, frame, near-frame
/// and star in that order.
pub fn classify_element(set: &BinarySet, element: usize) -> Result<ElementKind> {
    if is_loop(set, element)? {
        return Ok(ElementKind::Loop);
    }
    if is_coloop(set, element)? {
        return Ok(ElementKind::Coloop);
    }
    if is_frame(set, element)? {
        return Ok(ElementKind::Frame);
    }
    if let Some(partner) = near_frame_partner(set, element)? {
        return Ok(ElementKind::NearFrame { partner });
    }
    if is_star(set, element)? {
        return Ok(ElementKind::Star);
    }
    Ok(ElementKind::Ordinary)
}

/// Classification of every element, 1 through `order`.
pub fn classify_all(set: &BinarySet) -> Vec<ElementKind> {
    (1..=set.order())
        .map(|e| classify_element(set, e).expect("element in range"))
        .collect()
}
