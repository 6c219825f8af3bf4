use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};
use crate::zeta::Limits;

/// Single-element extensions. The new element becomes coordinate `order + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extension {
    /// Appends a zero column.
    Loop,
    /// Every member appears with both values of the new coordinate.
    Coloop,
    /// New coordinate is 0 on the zero word and 1 elsewhere.
    Frame,
    /// New coordinate is 0 on the zero word and on `partner`, 1 elsewhere.
    NearFrame(Word),
    /// `{v0 : v ∈ T} ∪ {v1 : v ∉ T}`.
    Star,
    /// Duplicates the column of the given (1-based) element.
    Parallel(usize),
}

pub fn extend(set: &BinarySet, kind: Extension) -> Result<BinarySet> {
    let order = set.order();
    let new_bit = 1u32 << order;
    let words: Vec<Word> = match kind {
        Extension::Loop => set.words().to_vec(),
        Extension::Coloop => set.iter().flat_map(|w| [w, Word(w.0 | new_bit)]).collect(),
        Extension::Frame => {
            if !set.contains_zero() {
                return Err(Error::MissingZeroWord);
            }
            set.iter()
                .map(|w| if w.is_zero() { w } else { Word(w.0 | new_bit) })
                .collect()
        }
        Extension::NearFrame(partner) => {
            if !set.contains_zero() {
                return Err(Error::MissingZeroWord);
            }
            if partner.is_zero() || !set.contains(partner) {
                return Err(Error::InvalidNearFramePartner);
            }
            set.iter()
                .map(|w| {
                    if w.is_zero() || w == partner {
                        w
                    } else {
                        Word(w.0 | new_bit)
                    }
                })
                .collect()
        }
        Extension::Star => {
            Limits::default().check(order)?;
            (0..new_bit)
                .map(|v| {
                    if set.contains(Word(v)) {
                        Word(v)
                    } else {
                        Word(v | new_bit)
                    }
                })
                .collect()
        }
        Extension::Parallel(element) => {
            let bit = set.check_element(element)?;
            set.iter()
                .map(|w| Word(w.0 | (w.0 >> bit & 1) << order))
                .collect()
        }
    };
    BinarySet::new(order + 1, words)
}
