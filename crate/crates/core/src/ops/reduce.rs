use crate::error::Result;
use crate::set::{drop_bit, BinarySet, Word};

/// Outcome of removing a column without removing rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionResult {
    pub result: BinarySet,
    /// Two members became equal once the column was dropped.
    pub had_duplicates: bool,
}

/// `S/e`: members avoiding `element`, with that coordinate removed.
pub fn contract(set: &BinarySet, element: usize) -> Result<BinarySet> {
    let bit = set.check_element(element)?;
    // dropping a zero bit is monotone, so the order is preserved
    let words = set
        .iter()
        .filter(|w| w.0 >> bit & 1 == 0)
        .map(|w| Word(drop_bit(w.0, bit)))
        .collect();
    Ok(BinarySet::from_sorted_unchecked(set.order() - 1, words))
}

/// `S\e`: drops the coordinate from every member and collapses duplicates.
pub fn delete(set: &BinarySet, element: usize) -> Result<DeletionResult> {
    let bit = set.check_element(element)?;
    let words: Vec<Word> = set.iter().map(|w| Word(drop_bit(w.0, bit))).collect();
    let before = words.len();
    let result = BinarySet::from_unsorted(set.order() - 1, words);
    Ok(DeletionResult {
        had_duplicates: result.len() < before,
        result,
    })
}

/// Deletion followed by removal of repeated rows.
pub fn puncture(set: &BinarySet, element: usize) -> Result<BinarySet> {
    delete(set, element).map(|d| d.result)
}
