//! Canonical forms under permutation of the ground set.
//!
//! The canonical form of `S` is the smallest sorted word list obtainable by
//! relabelling coordinates, taken over the permutations that survive an
//! individualisation/refinement search. Columns are first split into cells by
//! an invariant (column weight, then the multiset of pairwise intersection
//! sizes against each cell), refined until stable. When a cell still holds
//! several columns, each of them is tried in turn as the next fixed point and
//! the partition is refined again. Every step depends only on isomorphism
//! invariants, so isomorphic sets reach the same minimum.

use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub order: usize,
    /// Relabelled words, sorted ascending.
    pub words: Vec<Word>,
    /// `witness[i]` is the new (1-based) position of element `i + 1`.
    pub witness: Vec<usize>,
}

impl CanonicalForm {
    pub fn to_set(&self) -> BinarySet {
        BinarySet::from_sorted_unchecked(self.order, self.words.clone())
    }
}

/// Relabels coordinates: element `i + 1` moves to position `perm[i]` (1-based).
pub fn apply_permutation(set: &BinarySet, perm: &[usize]) -> Result<BinarySet> {
    let n = set.order();
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true))
    {
        return Err(Error::Parse {
            line: 0,
            message: format!("{perm:?} is not a permutation of 1..={n}"),
        });
    }
    let targets: Vec<usize> = perm.iter().map(|p| p - 1).collect();
    Ok(BinarySet::from_unsorted(
        n,
        set.iter().map(|w| relabel(w, &targets)).collect(),
    ))
}

#[inline]
fn relabel(w: Word, targets: &[usize]) -> Word {
    let mut bits = w.0;
    let mut out = 0u32;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        out |= 1 << targets[c];
    }
    Word(out)
}

struct Search<'a> {
    set: &'a BinarySet,
    /// `pairs[c * n + d]`: members having both coordinates `c` and `d`.
    pairs: Vec<u32>,
    best: Option<(Vec<Word>, Vec<usize>)>,
    scratch: Vec<Word>,
}

impl Search<'_> {
    fn n(&self) -> usize {
        self.set.order()
    }

    /// Splits cells by their pair profile against the current partition
    /// until no cell splits further.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut cell_of = vec![0usize; n];
        loop {
            for (i, cell) in cells.iter().enumerate() {
                for &c in cell {
                    cell_of[c] = i;
                }
            }
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell
                    .iter()
                    .map(|&c| {
                        let mut key: Vec<(usize, u32)> = (0..n)
                            .filter(|&d| d != c)
                            .map(|d| (cell_of[d], self.pairs[c * n + d]))
                            .collect();
                        key.sort_unstable();
                        key.push((usize::MAX, self.pairs[c * n + c]));
                        (key, c)
                    })
                    .collect();
                // weight first, then the profile
                keyed.sort_by(|a, b| {
                    a.0.last()
                        .cmp(&b.0.last())
                        .then_with(|| a.0.cmp(&b.0))
                        .then(a.1.cmp(&b.1))
                });
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|k| k.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        match cells.iter().position(|c| c.len() > 1) {
            None => self.leaf(&cells),
            Some(target) => {
                for k in 0..cells[target].len() {
                    let mut child = Vec::with_capacity(cells.len() + 1);
                    child.extend_from_slice(&cells[..target]);
                    let cell = &cells[target];
                    child.push(vec![cell[k]]);
                    child.push(
                        cell.iter()
                            .enumerate()
                            .filter(|&(i, _)| i != k)
                            .map(|(_, &c)| c)
                            .collect(),
                    );
                    child.extend_from_slice(&cells[target + 1..]);
                    let refined = self.refine(child);
                    self.descend(refined);
                }
            }
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut targets = vec![0usize; self.n()];
        for (pos, cell) in cells.iter().enumerate() {
            targets[cell[0]] = pos;
        }
        self.scratch.clear();
        self.scratch
            .extend(self.set.iter().map(|w| relabel(w, &targets)));
        self.scratch.sort_unstable();
        let better = match &self.best {
            None => true,
            Some((words, _)) => self.scratch < *words,
        };
        if better {
            self.best = Some((self.scratch.clone(), targets));
        }
    }
}

pub fn canonical_form(set: &BinarySet) -> Result<CanonicalForm> {
    let n = set.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm {
            order: 0,
            words: set.words().to_vec(),
            witness: Vec::new(),
        });
    }
    let mut pairs = vec![0u32; n * n];
    for w in set.iter() {
        let mut bits = w.0;
        while bits != 0 {
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let mut rest = w.0;
            while rest != 0 {
                let d = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                pairs[c * n + d] += 1;
            }
        }
    }
    let mut search = Search {
        set,
        pairs,
        best: None,
        scratch: Vec::with_capacity(set.len()),
    };
    let start = search.refine(vec![(0..n).collect()]);
    search.descend(start);
    let (words, targets) = search.best.expect("at least one leaf");
    Ok(CanonicalForm {
        order: n,
        words,
        witness: targets.into_iter().map(|t| t + 1).collect(),
    })
}

/// Whether some relabelling of the ground set maps one set onto the other.
pub fn is_isomorphic(a: &BinarySet, b: &BinarySet) -> Result<bool> {
    if a.order() != b.order() || a.len() != b.len() {
        return Ok(false);
    }
    let mut wa = a.column_weights();
    let mut wb = b.column_weights();
    wa.sort_unstable();
    wb.sort_unstable();
    if wa != wb {
        return Ok(false);
    }
    Ok(canonical_form(a)?.words == canonical_form(b)?.words)
}
