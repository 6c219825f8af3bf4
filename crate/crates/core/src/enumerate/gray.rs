use crate::error::{Error, Result};
use crate::set::{BinarySet, Word, MAX_ORDER};

/// Binary image of a `Z_4` code, rows in input order (repeats kept).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    pub order: usize,
    pub rows: Vec<Word>,
}

impl GrayImage {
    pub fn has_duplicates(&self) -> bool {
        self.to_set().len() < self.rows.len()
    }

    pub fn to_set(&self) -> BinarySet {
        BinarySet::new(self.order, self.rows.iter().copied()).expect("rows fit the order")
    }
}

/// `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`, digit by digit.
pub fn gray_map(code: &[Vec<u8>]) -> Result<GrayImage> {
    let length = code.first().map_or(0, Vec::len);
    let order = 2 * length;
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let mut rows = Vec::with_capacity(code.len());
    for (i, word) in code.iter().enumerate() {
        if word.len() != length {
            return Err(Error::Parse {
                line: i + 1,
                message: format!("expected {length} digits, found {}", word.len()),
            });
        }
        let mut bits = 0u32;
        for (j, &digit) in word.iter().enumerate() {
            // pair written first-coordinate-first
            let pair = match digit {
                0 => 0b00,
                1 => 0b10,
                2 => 0b11,
                3 => 0b01,
                _ => {
                    return Err(Error::InvalidDigit {
                        line: i + 1,
                        digit: char::from_digit(digit as u32, 10).unwrap_or('?'),
                    })
                }
            };
            bits |= pair << (2 * j);
        }
        rows.push(Word(bits));
    }
    Ok(GrayImage { order, rows })
}
