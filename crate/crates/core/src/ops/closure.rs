use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};

/// Cap on `|S|` for [`disjunctive_closure`].
pub const MAX_CLOSURE_GENERATORS: usize = 20;

/// Columns (1-based, ascending) whose rows in `S` form a permutation matrix.
///
/// Only weight-one columns can take part, and each of them is adjacent to a
/// single row, so a perfect row/column matching exists iff every row owns at
/// least one such column. The smallest owned column is picked per row.
pub fn is_permutative(set: &BinarySet) -> Option<Vec<usize>> {
    let weights = set.column_weights();
    let unit_columns: u32 = weights
        .iter()
        .enumerate()
        .filter(|(_, &w)| w == 1)
        .fold(0, |acc, (bit, _)| acc | 1 << bit);
    let mut columns = Vec::with_capacity(set.len());
    for w in set.iter() {
        let owned = w.0 & unit_columns;
        if owned == 0 {
            return None;
        }
        columns.push(owned.trailing_zeros() as usize + 1);
    }
    columns.sort_unstable();
    Some(columns)
}

/// All coordinatewise ORs of subsets of `S`, including the empty OR.
pub fn disjunctive_closure(set: &BinarySet) -> Result<BinarySet> {
    if set.len() > MAX_CLOSURE_GENERATORS {
        return Err(Error::TooManyGenerators {
            count: set.len(),
            max: MAX_CLOSURE_GENERATORS,
        });
    }
    let mut closure = vec![Word::ZERO];
    for g in set.iter() {
        let grown: Vec<Word> = closure.iter().map(|w| Word(w.0 | g.0)).collect();
        closure.extend(grown);
        closure.sort_unstable();
        closure.dedup();
    }
    Ok(BinarySet::from_sorted_unchecked(set.order(), closure))
}
