use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm, MAX_CANON_ORDER};
use crate::element::{is_frame, is_loop};
use crate::error::{Error, Result};
use crate::ops::diamond;
use crate::set::{BinarySet, Word};
use crate::zeta::{is_linear, is_powerful};

/// Families are grown only while the result stays canonicalisable.
pub const MAX_FAMILY_ORDER: usize = MAX_CANON_ORDER;

/// The two nonisomorphic loopless, frameless, nonlinear powerful sets of
/// order 5 and size 8 that seed the diamond construction: the disjunctive
/// closure of `{00011, 01100, 10101}` and a set with no injective deletion.
pub fn family_seeds() -> [BinarySet; 2] {
    let words = |texts: &[&str]| {
        BinarySet::new(5, texts.iter().map(|t| Word::parse_text(t).unwrap().0)).unwrap()
    };
    [
        words(&[
            "00000", "00011", "01100", "10101", "01111", "10111", "11101", "11111",
        ]),
        words(&[
            "00000", "00111", "01011", "01111", "10101", "10111", "11010", "11011",
        ]),
    ]
}

#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub seeds: Vec<BinarySet>,
    /// Final-round members, in generation order (`S1` major, `S2` minor).
    pub members: Vec<BinarySet>,
    pub canonical: Vec<CanonicalForm>,
    /// Member count after each round.
    pub round_sizes: Vec<usize>,
    pub all_powerful: bool,
    pub all_loopless: bool,
    pub all_frameless: bool,
    pub all_nonlinear: bool,
    pub pairwise_nonisomorphic: bool,
}

impl FamilyReport {
    pub fn order(&self) -> usize {
        self.members.first().map_or(0, BinarySet::order)
    }
}

fn has_element(set: &BinarySet, test: fn(&BinarySet, usize) -> Result<bool>) -> Result<bool> {
    for e in 1..=set.order() {
        if test(set, e)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_seeds(seeds: &[BinarySet]) -> Result<usize> {
    let violated = |seed: usize, predicate: &str| Error::SeedPreconditionViolated {
        seed,
        predicate: predicate.to_string(),
    };
    let n = seeds
        .first()
        .ok_or_else(|| violated(0, "at least one seed"))?
        .order();
    for (i, s) in seeds.iter().enumerate() {
        if s.order() != n {
            return Err(violated(i, "all seeds share one order"));
        }
        if n < 2 || s.len() as u64 != 1u64 << (n - 2) {
            return Err(violated(i, "size 2^(n-2)"));
        }
        if !is_powerful(s)? {
            return Err(violated(i, "powerful"));
        }
        if has_element(s, is_loop)? {
            return Err(violated(i, "loopless"));
        }
        if has_element(s, is_frame)? {
            return Err(violated(i, "frameless"));
        }
    }
    Ok(n)
}

/// Closes `seeds` under `rounds` rounds of pairwise diamonds and checks the
/// properties every member is expected to have.
pub fn diamond_family(seeds: &[BinarySet], rounds: usize) -> Result<FamilyReport> {
    let n = check_seeds(seeds)?;
    let final_order = n + 3 * rounds;
    if rounds == 0 || final_order > MAX_FAMILY_ORDER {
        return Err(Error::OrderTooLarge {
            order: final_order,
            max: MAX_FAMILY_ORDER,
        });
    }
    let mut current = seeds.to_vec();
    let mut round_sizes = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let mut next = Vec::with_capacity(current.len() * current.len());
        for a in &current {
            for b in &current {
                next.push(diamond(a, b)?);
            }
        }
        round_sizes.push(next.len());
        current = next;
    }

    let mut all_powerful = true;
    let mut all_loopless = true;
    let mut all_frameless = true;
    let mut all_nonlinear = true;
    for s in &current {
        all_powerful &= is_powerful(s)?;
        all_loopless &= !has_element(s, is_loop)?;
        all_frameless &= !has_element(s, is_frame)?;
        all_nonlinear &= !is_linear(s);
    }
    let canonical = current
        .iter()
        .map(canonical_form)
        .collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<&[Word]> = canonical.iter().map(|c| c.words.as_slice()).collect();
    Ok(FamilyReport {
        seeds: seeds.to_vec(),
        pairwise_nonisomorphic: distinct.len() == canonical.len(),
        members: current,
        canonical,
        round_sizes,
        all_powerful,
        all_loopless,
        all_frameless,
        all_nonlinear,
    })
}
