//! Independent oracles and the property checks shared by the integration
//! tests and the acceptance runner.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use powerful::clutter::{enumerate_antichains, Reconstructor};
use powerful::element::{classify_element, is_frame, is_loop};
use powerful::ops::{
    bullet, bullet_rank_profile, contract, delete, diamond, direct_sum, disjunctive_closure,
    extend, is_permutative, mutual_framing, Extension,
};
use powerful::{canonical_form, is_linear, is_powerful, rank, BinarySet, ElementKind, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

pub fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

pub fn set_of(n: usize, words: &[u32]) -> BinarySet {
    BinarySet::new(n, words.iter().map(|&w| Word(w))).unwrap()
}

/// Naive power-of-two test: one scan of the set per coordinate subset.
pub fn naive_powerful(n: usize, words: &[u32]) -> bool {
    (0u32..1 << n).all(|x| {
        let c = words.iter().filter(|&&w| w & x == 0).count();
        c > 0 && c & (c - 1) == 0
    })
}

/// Rank of a list of vectors over GF(2) by row reduction.
pub fn gf2_rank(rows: &[u32]) -> usize {
    let mut rows = rows.to_vec();
    let mut rank = 0;
    for bit in 0..32 {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        for i in 0..rows.len() {
            if i != rank && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Every subset of `F_2^n` that contains the zero word.
pub fn zero_sets(n: usize) -> Vec<BinarySet> {
    let nonzero = (1u64 << n) - 1;
    (0u64..1 << nonzero)
        .map(|pick| {
            let words = std::iter::once(0)
                .chain((1..=nonzero).filter(|w| pick >> (w - 1) & 1 == 1))
                .map(|w| Word(w as u32));
            BinarySet::new(n, words).unwrap()
        })
        .collect()
}

/// Every nonempty subset of `F_2^n`.
pub fn nonempty_sets(n: usize) -> Vec<BinarySet> {
    (1u64..1 << (1u64 << n))
        .map(|pick| {
            let words = (0u32..1 << n).filter(|w| pick >> w & 1 == 1).map(Word);
            BinarySet::new(n, words).unwrap()
        })
        .collect()
}

/// Labelled powerful sets of order `n <= 4` by brute force over subsets.
pub fn brute_force_powerful(n: usize) -> Vec<BinarySet> {
    zero_sets(n)
        .into_iter()
        .filter(|s| {
            let words: Vec<u32> = s.iter().map(|w| w.0).collect();
            s.len().is_power_of_two() && naive_powerful(n, &words)
        })
        .collect()
}

/// Labelled powerful sets of order `n` through the clutter pipeline.
pub fn labelled_powerful(n: usize) -> Vec<BinarySet> {
    let mut rec = Reconstructor::new(n).unwrap();
    let mut out = Vec::new();
    enumerate_antichains(n, |members| {
        if let Some(s) = rec.run(members).into_accepted() {
            out.push(s);
        }
    })
    .unwrap();
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i + 1);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Relabels by `perm` (element `i + 1` goes to `perm[i]`) without the library.
pub fn permute_words(words: &[u32], perm: &[usize]) -> Vec<u32> {
    let mut out: Vec<u32> = words
        .iter()
        .map(|&w| {
            (0..perm.len())
                .filter(|i| w >> i & 1 == 1)
                .fold(0, |acc, i| acc | 1 << (perm[i] - 1))
        })
        .collect();
    out.sort_unstable();
    out
}

/// Minimum sorted word list over all `n!` relabellings.
pub fn brute_canonical(set: &BinarySet, perms: &[Vec<usize>]) -> Vec<u32> {
    let words: Vec<u32> = set.iter().map(|w| w.0).collect();
    perms
        .iter()
        .map(|p| permute_words(&words, p))
        .min()
        .unwrap()
}

pub fn has_kind(set: &BinarySet, test: fn(&BinarySet, usize) -> powerful::Result<bool>) -> bool {
    (1..=set.order()).any(|e| test(set, e).unwrap())
}

fn powerful(s: &BinarySet) -> bool {
    is_powerful(s).unwrap()
}

// ---- theorem checks ----

pub fn contraction_closure() -> Check {
    let mut cases = 0;
    for n in 1..=4 {
        for s in labelled_powerful(n) {
            for e in 1..=n {
                let c = contract(&s, e).unwrap();
                ensure(powerful(&c), || format!("{s} / {e} = {c} is not powerful"))?;
                if is_linear(&s) {
                    ensure(is_linear(&c), || format!("{s} / {e} lost linearity"))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} contractions"))
}

fn drop_coordinate(x: u32, bit: usize) -> u32 {
    (x & ((1 << bit) - 1)) | (x >> (bit + 1)) << bit
}

pub fn contraction_rank_identity() -> Check {
    let mut cases = 0;
    for n in 1..=4 {
        for s in labelled_powerful(n) {
            for e in 1..=n {
                let c = contract(&s, e).unwrap();
                let bit = e - 1;
                let re = rank(&s, Word::unit(e)).unwrap().exact_log2.unwrap();
                for x in (0u32..1 << n).filter(|x| x >> bit & 1 == 0) {
                    let lhs = rank(&c, Word(drop_coordinate(x, bit))).unwrap().exact_log2;
                    let rhs = rank(&s, Word(x | 1 << bit)).unwrap().exact_log2.unwrap() - re;
                    ensure(lhs == Some(rhs), || format!("{s}, e={e}, X={x:#b}"))?;
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} rank evaluations"))
}

pub fn extension_theorems() -> Check {
    let mut cases = 0;
    for n in 1..=3 {
        for t in zero_sets(n) {
            let p = powerful(&t);
            let iff = |kind: Extension| -> Result<(), String> {
                let s = extend(&t, kind).unwrap();
                ensure(powerful(&s) == p, || format!("{kind:?} on {t}: {s}"))
            };
            iff(Extension::Loop)?;
            iff(Extension::Coloop)?;
            iff(Extension::Frame)?;
            iff(Extension::Star)?;
            for e in 1..=n {
                iff(Extension::Parallel(e))?;
            }
            let framed = extend(&t, Extension::Frame).unwrap();
            let removed = delete(&framed, n + 1).unwrap();
            ensure(!removed.had_duplicates && removed.result == t, || {
                format!("deleting the frame of {framed} does not give {t}")
            })?;
            if p {
                for v in t.iter().filter(|v| !v.is_zero()) {
                    let s = extend(&t, Extension::NearFrame(v)).unwrap();
                    ensure(powerful(&s), || format!("near-frame {v:?} on {t}"))?;
                }
                let linear = is_linear(&t);
                if linear {
                    let s = extend(&t, Extension::Coloop).unwrap();
                    ensure(is_linear(&s), || {
                        format!("coloop extension of {t} is nonlinear")
                    })?;
                }
                for e in 1..=n {
                    let s = extend(&t, Extension::Parallel(e)).unwrap();
                    ensure(is_linear(&s) == linear, || format!("parallel {e} on {t}"))?;
                }
            }
            cases += 1;
        }
        // the star theorem also covers sets without the zero word
        for t in nonempty_sets(n) {
            let s = extend(&t, Extension::Star).unwrap();
            ensure(powerful(&s) == powerful(&t), || format!("star on {t}"))?;
        }
    }
    Ok(format!("{cases} base sets"))
}

pub fn special_element_ranks() -> Check {
    let mut cases = 0;
    for n in 1..=3 {
        for t in labelled_powerful(n) {
            let d = t.len().trailing_zeros();
            let new = Word::unit(n + 1);
            let rank_of = |kind: Extension| {
                let s = extend(&t, kind).unwrap();
                rank(&s, new).unwrap().exact_log2.unwrap()
            };
            ensure(rank_of(Extension::Loop) == 0, || format!("loop on {t}"))?;
            ensure(rank_of(Extension::Coloop) == 1, || format!("coloop on {t}"))?;
            ensure(rank_of(Extension::Frame) == d, || format!("frame on {t}"))?;
            ensure(rank_of(Extension::Star) == n as u32 - d, || {
                format!("star on {t}")
            })?;
            for v in t.iter().filter(|v| !v.is_zero()) {
                ensure(rank_of(Extension::NearFrame(v)) == d - 1, || {
                    format!("near-frame on {t}")
                })?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} sets"))
}

pub fn combinator_theorems() -> Check {
    let mut cases = 0;
    let small: Vec<BinarySet> = (1..=2).flat_map(nonempty_sets).collect();
    for q in &small {
        for r in &small {
            let s = direct_sum(q, r).unwrap();
            ensure(powerful(&s) == (powerful(q) && powerful(r)), || {
                format!("{q} + {r}")
            })?;
            ensure(is_linear(&s) == (is_linear(q) && is_linear(r)), || {
                format!("linearity of {q} + {r}")
            })?;
            cases += 1;
        }
    }

    let powerful_sets: Vec<BinarySet> = (1..=3).flat_map(labelled_powerful).collect();
    for q in &powerful_sets {
        for r in &powerful_sets {
            let (s, verdict) = mutual_framing(q, r).unwrap();
            ensure(verdict.powerful == powerful(&s), || {
                format!("{q} # {r}: {verdict:?}")
            })?;
            let trivial =
                |x: &BinarySet| x.iter().all(|w| w.is_zero() || w == Word::full(x.order()));
            if verdict.powerful && !(trivial(q) && trivial(r)) {
                ensure(!is_linear(&s), || format!("{q} # {r} is linear"))?;
            }
            cases += 1;
        }
    }

    for n in 1..=3 {
        let sets = zero_sets(n);
        for q in &sets {
            for r in &sets {
                let s = bullet(q, r).unwrap();
                let i = q.intersection(r).unwrap();
                let expected = powerful(q) && powerful(r) && powerful(&i);
                ensure(powerful(&s) == expected, || format!("{q} . {r}"))?;
                if expected {
                    for x in 0u32..1 << n {
                        let profile = bullet_rank_profile(q, r, Word(x)).unwrap();
                        ensure(profile.holds(), || {
                            format!("{q} . {r} at {x:#b}: {profile:?}")
                        })?;
                    }
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} operand pairs"))
}

fn check_closure(s: &BinarySet) -> Result<(), String> {
    let c = disjunctive_closure(s).unwrap();
    ensure(c.len() == 1 << s.len() && powerful(&c), || {
        format!("closure of {s} is {c}")
    })
}

/// A random permutative set of order `n`: `m` rows, each owning one unit column.
pub fn random_permutative(rng: &mut impl Rng, n: usize) -> BinarySet {
    let m = rng.gen_range(1..=n);
    let mut columns: Vec<usize> = (0..n).collect();
    columns.shuffle(rng);
    let owned = &columns[..m];
    let free: u32 = columns[m..].iter().fold(0, |acc, c| acc | 1 << c);
    loop {
        let words: Vec<u32> = owned
            .iter()
            .map(|&c| 1 << c | rng.gen::<u32>() & free)
            .collect();
        let distinct: BTreeSet<u32> = words.iter().copied().collect();
        if distinct.len() == m {
            return set_of(n, &words);
        }
    }
}

pub fn closure_theorem(random_cases: usize, seed: u64) -> Check {
    let mut exhaustive = 0;
    for n in 1..=4 {
        let nonzero: Vec<u32> = (1..1 << n).collect();
        for pick in 1u32..1 << nonzero.len() {
            if pick.count_ones() as usize > n {
                continue;
            }
            let words: Vec<u32> = (0..nonzero.len())
                .filter(|i| pick >> i & 1 == 1)
                .map(|i| nonzero[i])
                .collect();
            let s = set_of(n, &words);
            if is_permutative(&s).is_some() {
                check_closure(&s)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random_cases {
        let s = random_permutative(&mut rng, 5);
        ensure(is_permutative(&s).is_some(), || {
            format!("{s} should be permutative")
        })?;
        check_closure(&s)?;
    }
    Ok(format!(
        "{exhaustive} exhaustive + {random_cases} random permutative sets"
    ))
}

fn check_diamond(a: &BinarySet, b: &BinarySet, nonlinear: bool) -> Result<(), String> {
    let s = diamond(a, b).unwrap();
    ensure(powerful(&s), || format!("{a} <> {b} is not powerful"))?;
    if a.len() == 1 || b.len() == 1 {
        // loops and frames are only excluded for nontrivial operands
        return Ok(());
    }
    ensure(!has_kind(&s, is_loop) && !has_kind(&s, is_frame), || {
        format!("{a} <> {b} has a loop or frame")
    })?;
    if nonlinear {
        ensure(!is_linear(&s), || format!("{a} <> {b} is linear"))?;
    }
    Ok(())
}

pub fn diamond_theorem(samples: usize, seed: u64) -> Check {
    let three = labelled_powerful(3);
    for a in &three {
        for b in &three {
            check_diamond(a, b, false)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 4..=5 {
        let sets = labelled_powerful(n);
        for _ in 0..samples {
            let a = sets.choose(&mut rng).unwrap();
            let b = sets.choose(&mut rng).unwrap();
            check_diamond(a, b, true)?;
        }
    }
    Ok(format!(
        "{} pairs at order 3, {samples} sampled at orders 4 and 5",
        three.len().pow(2)
    ))
}

/// Classes of labelled powerful sets under the brute-force canonical form.
pub fn brute_force_classes(n: usize) -> (usize, BTreeSet<Vec<u32>>) {
    let perms = permutations(n);
    let labelled = brute_force_powerful(n);
    let classes = labelled
        .iter()
        .map(|s| brute_canonical(s, &perms))
        .collect();
    (labelled.len(), classes)
}

/// Linear classes counted as subspaces up to isomorphism.
pub fn linear_class_count(classes: &BTreeSet<Vec<u32>>) -> usize {
    classes
        .iter()
        .filter(|c| c.len() == 1 << gf2_rank(c))
        .count()
}

pub fn canonical_words(set: &BinarySet) -> Vec<u32> {
    canonical_form(set)
        .unwrap()
        .words
        .iter()
        .map(|w| w.0)
        .collect()
}

pub fn kind_histogram(sets: &[BinarySet]) -> HashMap<&'static str, usize> {
    let mut out = HashMap::new();
    for s in sets {
        for e in 1..=s.order() {
            let k: ElementKind = classify_element(s, e).unwrap();
            *out.entry(k.name()).or_default() += 1;
        }
    }
    out
}
