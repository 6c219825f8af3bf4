//! Words and binary sets.
//!
//! A [`Word`] is a subset of the ground set `[n]` stored as a bitmask, with
//! coordinate 1 in the least significant bit. A [`BinarySet`] is a
//! duplicate-free collection of words over a fixed order, kept sorted
//! ascending as integers so that equality, hashing and printing are canonical.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order a [`BinarySet`] may carry.
pub const MAX_ORDER: usize = 31;

/// One codeword, or equivalently one subset of the ground set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub u32);

impl Word {
    pub const ZERO: Word = Word(0);

    /// The word with every coordinate of `[order]` set.
    pub fn full(order: usize) -> Word {
        Word(full_mask(order))
    }

    /// The singleton `{element}` (1-based).
    pub fn unit(element: usize) -> Word {
        Word(1 << (element - 1))
    }

    /// Builds a word from 1-based coordinates.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Word {
        Word(elements.into_iter().fold(0, |acc, e| acc | 1 << (e - 1)))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Whether 1-based coordinate `element` is set.
    #[inline]
    pub fn contains(self, element: usize) -> bool {
        self.0 >> (element - 1) & 1 == 1
    }

    /// `self ⊆ other` as subsets of the ground set.
    #[inline]
    pub fn is_subset_of(self, other: Word) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based coordinates that are set, ascending.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1).map(|i| i + 1)
    }

    /// Renders the word as `order` characters, coordinate 1 leftmost.
    pub fn to_text(self, order: usize) -> String {
        (0..order)
            .map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parses a string of `0`/`1`, coordinate 1 leftmost.
    pub fn parse_text(text: &str) -> Option<(Word, usize)> {
        if text.len() > MAX_ORDER {
            return None;
        }
        let mut bits = 0u32;
        for (i, c) in text.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return None,
            }
        }
        Some((Word(bits), text.len()))
    }
}

impl fmt::Binary for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Binary::fmt(&self.0, f)
    }
}

#[inline]
pub(crate) fn full_mask(order: usize) -> u32 {
    if order >= 32 {
        u32::MAX
    } else {
        (1u32 << order) - 1
    }
}

/// Removes bit `bit` (0-based) and shifts the higher bits down by one.
#[inline]
pub(crate) fn drop_bit(word: u32, bit: usize) -> u32 {
    let low = word & ((1 << bit) - 1);
    let high = (word >> (bit + 1)) << bit;
    low | high
}

/// Opens a zero gap at bit `bit` (0-based), shifting the higher bits up.
#[inline]
#[cfg(test)]
pub(crate) fn insert_zero_bit(word: u32, bit: usize) -> u32 {
    let low = word & ((1 << bit) - 1);
    let high = (word >> bit) << (bit + 1);
    low | high
}

/// A set of binary words of a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinarySet {
    order: usize,
    words: Vec<Word>,
}

impl BinarySet {
    /// Builds a set from arbitrary words, sorting and dropping duplicates.
    pub fn new<I: IntoIterator<Item = Word>>(order: usize, words: I) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mask = full_mask(order);
        let mut words: Vec<Word> = words.into_iter().collect();
        if let Some(w) = words.iter().find(|w| w.0 & !mask != 0) {
            return Err(Error::WordOutOfRange { word: w.0, order });
        }
        words.sort_unstable();
        words.dedup();
        Ok(BinarySet { order, words })
    }

    /// Trusts the caller: `words` must be strictly increasing and in range.
    pub(crate) fn from_sorted_unchecked(order: usize, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(words.iter().all(|w| w.0 & !full_mask(order) == 0));
        BinarySet { order, words }
    }

    /// Sorts and dedups without range checks; the caller guarantees the width.
    pub(crate) fn from_unsorted(order: usize, mut words: Vec<Word>) -> Self {
        words.sort_unstable();
        words.dedup();
        Self::from_sorted_unchecked(order, words)
    }

    /// Builds a set from text words such as `["000", "011"]`.
    ///
    /// All strings must have the same length; an empty slice gives the empty
    /// set of order 0.
    pub fn from_strs<S: AsRef<str>>(texts: &[S]) -> Result<Self> {
        let mut order = None;
        let mut words = Vec::with_capacity(texts.len());
        for (i, t) in texts.iter().enumerate() {
            let t = t.as_ref();
            let (w, len) = Word::parse_text(t).ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("{t:?} is not a binary word"),
            })?;
            match order {
                None => order = Some(len),
                Some(o) if o != len => {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("expected length {o}, found {len}"),
                    })
                }
                _ => {}
            }
            words.push(w);
        }
        Self::new(order.unwrap_or(0), words)
    }

    /// `{0}` of the given order.
    pub fn zero(order: usize) -> Self {
        BinarySet {
            order,
            words: vec![Word::ZERO],
        }
    }

    /// The whole space `F_2^order`.
    pub fn full_space(order: usize) -> Self {
        BinarySet {
            order,
            words: (0..1u32 << order).map(Word).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: Word) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.words.first() == Some(&Word::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().copied()
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub(crate) fn check_element(&self, element: usize) -> Result<usize> {
        if element == 0 || element > self.order {
            Err(Error::IndexOutOfRange {
                element,
                order: self.order,
            })
        } else {
            Ok(element - 1)
        }
    }

    pub fn intersection(&self, other: &BinarySet) -> Result<BinarySet> {
        self.same_order(other)?;
        let words = self
            .words
            .iter()
            .copied()
            .filter(|w| other.contains(*w))
            .collect();
        Ok(BinarySet::from_sorted_unchecked(self.order, words))
    }

    pub(crate) fn same_order(&self, other: &BinarySet) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        } else {
            Ok(())
        }
    }

    /// Number of members with a 1 in each coordinate, indexed by bit.
    pub fn column_weights(&self) -> Vec<usize> {
        let mut weights = vec![0; self.order];
        for w in &self.words {
            for (bit, weight) in weights.iter_mut().enumerate() {
                *weight += (w.0 >> bit & 1) as usize;
            }
        }
        weights
    }

    /// Text lines, coordinate 1 leftmost, in storage order.
    pub fn to_lines(&self) -> Vec<String> {
        self.words.iter().map(|w| w.to_text(self.order)).collect()
    }
}

impl fmt::Display for BinarySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&w.to_text(self.order))?;
        }
        f.write_str("}")
    }
}

/// Builds a [`BinarySet`] from text words; panics on malformed input.
#[macro_export]
macro_rules! set {
    ($($w:expr),* $(,)?) => {
        $crate::BinarySet::from_strs(&[$($w),*]).expect("well-formed set literal")
    };
}
