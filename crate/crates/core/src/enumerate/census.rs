use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::clutter::{
    antichain_partitions, enumerate_antichain_partition, AntichainPartition, Reconstructor,
};
use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};
use crate::zeta::is_linear;

/// Largest order the census accepts.
pub const MAX_CENSUS_ORDER: usize = 6;

const KNOWN_COUNTS: [(usize, u64, u64); 6] = [
    (1, 2, 0),
    (2, 4, 0),
    (3, 9, 1),
    (4, 25, 9),
    (5, 102, 70),
    (6, 900, 832),
];

/// Published `(p, p_nonlinear)` for orders 1 through 6.
pub fn known_counts(n: usize) -> Option<(u64, u64)> {
    KNOWN_COUNTS
        .iter()
        .find(|(order, _, _)| *order == n)
        .map(|&(_, p, pnl)| (p, pnl))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CensusConfig {
    /// Worker threads; `0` uses the rayon default.
    pub threads: usize,
    pub keep_representatives: bool,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    /// Isomorphism classes of powerful sets.
    pub p: u64,
    /// Classes that are not linear.
    pub p_nonlinear: u64,
    /// Labelled powerful sets found, one per accepted clutter.
    pub labelled: u64,
    /// Clutters examined.
    pub antichains: u64,
    /// Canonical representatives, sorted, when requested.
    pub classes: Option<Vec<BinarySet>>,
    pub wall_time: Duration,
}

impl CensusReport {
    /// Fields that must not depend on scheduling.
    pub fn fingerprint(&self) -> (usize, u64, u64, u64, u64, Option<&[BinarySet]>) {
        (
            self.n,
            self.p,
            self.p_nonlinear,
            self.labelled,
            self.antichains,
            self.classes.as_deref(),
        )
    }
}

pub fn census(n: usize, keep_representatives: bool) -> Result<CensusReport> {
    census_with(
        n,
        &CensusConfig {
            keep_representatives,
            ..CensusConfig::default()
        },
    )
}

#[derive(Default)]
struct Tally {
    classes: HashSet<Vec<Word>>,
    labelled: u64,
    antichains: u64,
}

impl Tally {
    fn merge(mut self, mut other: Tally) -> Tally {
        self.labelled += other.labelled;
        self.antichains += other.antichains;
        if self.classes.len() < other.classes.len() {
            std::mem::swap(&mut self.classes, &mut other.classes);
        }
        self.classes.extend(other.classes);
        self
    }
}

fn census_partition(n: usize, partition: AntichainPartition) -> Result<Tally> {
    let mut reconstructor = Reconstructor::new(n)?;
    let mut tally = Tally::default();
    let mut failure = None;
    tally.antichains = enumerate_antichain_partition(n, partition, |members| {
        if let Some(set) = reconstructor.run(members).into_accepted() {
            tally.labelled += 1;
            match canonical_form(&set) {
                Ok(form) => {
                    tally.classes.insert(form.words);
                }
                Err(e) => failure = Some(e),
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(tally),
    }
}

/// Enumerates every clutter of `[n]`, reconstructs the powerful sets they
/// determine and counts the resulting isomorphism classes.
///
/// The result does not depend on the number of worker threads.
pub fn census_with(n: usize, config: &CensusConfig) -> Result<CensusReport> {
    if n > MAX_CENSUS_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_CENSUS_ORDER,
        });
    }
    let started = Instant::now();
    let partitions = antichain_partitions(n)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::Workers(e.to_string()))?;
    let tally = pool.install(|| {
        partitions
            .par_iter()
            .map(|&part| census_partition(n, part))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })?;

    let mut keys: Vec<Vec<Word>> = tally.classes.into_iter().collect();
    keys.sort_unstable();
    let classes: Vec<BinarySet> = keys
        .into_iter()
        .map(|words| BinarySet::from_sorted_unchecked(n, words))
        .collect();
    let p = classes.len() as u64;
    let p_linear = classes.iter().filter(|s| is_linear(s)).count() as u64;
    Ok(CensusReport {
        n,
        p,
        p_nonlinear: p - p_linear,
        labelled: tally.labelled,
        antichains: tally.antichains,
        classes: config.keep_representatives.then_some(classes),
        wall_time: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::is_powerful;

    #[test]
    fn small_orders_match_known_counts() {
        for n in 1..=4 {
            let report = census(n, true).unwrap();
            let (p, pnl) = known_counts(n).unwrap();
            assert_eq!((report.p, report.p_nonlinear), (p, pnl), "order {n}");
            let classes = report.classes.unwrap();
            assert!(classes.iter().all(|s| is_powerful(s).unwrap()));
        }
    }

    #[test]
    fn order_one_classes() {
        let report = census(1, true).unwrap();
        assert_eq!(
            report.classes.unwrap(),
            vec![BinarySet::zero(1), BinarySet::full_space(1)]
        );
    }

    #[test]
    fn order_zero_is_trivial() {
        let report = census(0, false).unwrap();
        assert_eq!((report.p, report.p_nonlinear), (1, 0));
    }

    #[test]
    fn order_cap() {
        assert!(census(7, false).is_err());
    }
}
