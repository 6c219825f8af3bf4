//! Plain-text formats.
//!
//! A set file holds one word per line as a string over `{0,1}`, coordinate 1
//! leftmost. Blank lines and lines starting with `#` are ignored. All data
//! lines must have the same length. Clutter files use the same layout with
//! the all-zero row forbidden. `Z_4` code files hold one word per line over
//! `{0,1,2,3}`.

use std::collections::HashSet;

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};

/// The data lines of a set file, in file order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFile {
    pub order: usize,
    /// `(line number, word)` pairs, 1-based line numbers.
    pub rows: Vec<(usize, Word)>,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

impl SetFile {
    /// Parses data lines; duplicates are allowed here and checked by
    /// [`SetFile::into_set`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut order = None;
        let mut rows = Vec::new();
        for (line, data) in data_lines(text) {
            let (word, len) = Word::parse_text(data).ok_or_else(|| Error::Parse {
                line,
                message: format!("{data:?} is not a string over {{0,1}}"),
            })?;
            match order {
                None => order = Some(len),
                Some(o) if o != len => {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected {o} characters, found {len}"),
                    })
                }
                _ => {}
            }
            rows.push((line, word));
        }
        Ok(SetFile {
            order: order.unwrap_or(0),
            rows,
        })
    }

    pub fn from_set(set: &BinarySet) -> Self {
        SetFile {
            order: set.order(),
            rows: set.iter().enumerate().map(|(i, w)| (i + 1, w)).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// One word per line, in row order, each terminated by a newline.
    pub fn render(&self) -> String {
        let mut out = String::with_capacity(self.rows.len() * (self.order + 1));
        for (_, w) in &self.rows {
            out.push_str(&w.to_text(self.order));
            out.push('\n');
        }
        out
    }

    /// Converts to a set, rejecting empty input and repeated rows.
    pub fn into_set(self) -> Result<BinarySet> {
        if self.rows.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no words found".into(),
            });
        }
        let mut seen = HashSet::with_capacity(self.rows.len());
        for (line, w) in &self.rows {
            if !seen.insert(*w) {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("duplicate word {}", w.to_text(self.order)),
                });
            }
        }
        BinarySet::new(self.order, self.rows.into_iter().map(|(_, w)| w))
    }

    /// Converts to a clutter. An empty file needs `order` to be supplied.
    pub fn into_clutter(self, order: Option<usize>) -> Result<Clutter> {
        let order = match (self.rows.is_empty(), order) {
            (true, Some(o)) => o,
            (true, None) => {
                return Err(Error::Parse {
                    line: 0,
                    message: "empty clutter needs an explicit order".into(),
                })
            }
            (false, Some(o)) if o != self.order => {
                return Err(Error::Parse {
                    line: self.rows[0].0,
                    message: format!("expected order {o}, found {}", self.order),
                })
            }
            (false, _) => self.order,
        };
        if let Some((line, _)) = self.rows.iter().find(|(_, w)| w.is_zero()) {
            return Err(Error::Parse {
                line: *line,
                message: "a clutter cannot contain the zero word".into(),
            });
        }
        Clutter::new(order, self.rows.into_iter().map(|(_, w)| w))
    }
}

pub fn parse_set(text: &str) -> Result<BinarySet> {
    SetFile::parse(text)?.into_set()
}

pub fn render_set(set: &BinarySet) -> String {
    SetFile::from_set(set).render()
}

/// Parses `Z_4` words over `{0,1,2,3}`, all of one length.
pub fn parse_z4(text: &str) -> Result<Vec<Vec<u8>>> {
    let mut code: Vec<Vec<u8>> = Vec::new();
    for (line, data) in data_lines(text) {
        let word = data
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::InvalidDigit { line, digit: c }),
            })
            .collect::<Result<Vec<u8>>>()?;
        if let Some(first) = code.first() {
            if first.len() != word.len() {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {} digits, found {}", first.len(), word.len()),
                });
            }
        }
        code.push(word);
    }
    Ok(code)
}
