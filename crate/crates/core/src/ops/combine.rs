use crate::error::{Error, Result};
use crate::ops::extend::{extend, Extension};
use crate::rank::{exact_rank, rank, RankValue};
use crate::set::{BinarySet, Word, MAX_ORDER};
use crate::zeta::{dim, is_powerful, Limits};

fn joint_order(m: usize, n: usize) -> Result<usize> {
    let order = m + n;
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(order)
}

/// `Q ⊕ R`: every concatenation `uv`.
pub fn direct_sum(q: &BinarySet, r: &BinarySet) -> Result<BinarySet> {
    let m = q.order();
    let order = joint_order(m, r.order())?;
    // u < u' implies uv < u'v' only when v is the high part, so sort afterwards
    let words = q
        .iter()
        .flat_map(|u| r.iter().map(move |v| Word(u.0 | v.0 << m)))
        .collect();
    Ok(BinarySet::from_unsorted(order, words))
}

/// Which clause of the mutual-framing criterion the operands meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FramingCase {
    /// One operand is `{0}` or `{0, 1}` and the other contains the all-one word.
    CaseA,
    /// Equal sizes and neither operand contains its all-one word.
    CaseB,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MutualFramingVerdict {
    pub powerful: bool,
    pub case: FramingCase,
}

fn zero_and_maybe_ones(set: &BinarySet) -> bool {
    let ones = Word::full(set.order());
    set.contains_zero() && set.iter().all(|w| w.is_zero() || w == ones)
}

fn framing_case(q: &BinarySet, r: &BinarySet) -> FramingCase {
    let q_ones = q.contains(Word::full(q.order()));
    let r_ones = r.contains(Word::full(r.order()));
    if (zero_and_maybe_ones(q) && r_ones) || (zero_and_maybe_ones(r) && q_ones) {
        FramingCase::CaseA
    } else if q.len() == r.len() && !q_ones && !r_ones {
        FramingCase::CaseB
    } else {
        FramingCase::Neither
    }
}

/// `Q # R`, returned together with the verdict predicted from the operands.
///
/// The construction is returned even when it is not powerful.
pub fn mutual_framing(q: &BinarySet, r: &BinarySet) -> Result<(BinarySet, MutualFramingVerdict)> {
    let m = q.order();
    let order = joint_order(m, r.order())?;
    let q_ones = Word::full(m).0;
    let r_ones = Word::full(r.order()).0 << m;
    let mut words = vec![Word::ZERO, Word(q_ones | r_ones)];
    words.extend(
        q.iter()
            .filter(|u| !u.is_zero())
            .map(|u| Word(u.0 | r_ones)),
    );
    words.extend(
        r.iter()
            .filter(|v| !v.is_zero())
            .map(|v| Word(q_ones | v.0 << m)),
    );
    let result = BinarySet::from_unsorted(order, words);

    let case = framing_case(q, r);
    let powerful = case != FramingCase::Neither && is_powerful(q)? && is_powerful(r)?;
    Ok((result, MutualFramingVerdict { powerful, case }))
}

/// `Q • R`: every `v ∈ F_2^n` tagged with two bits recording `v ∉ Q`, `v ∉ R`.
pub fn bullet(q: &BinarySet, r: &BinarySet) -> Result<BinarySet> {
    q.same_order(r)?;
    let n = q.order();
    joint_order(n, 2)?;
    Limits::default().check(n)?;
    let words = (0u32..1 << n)
        .map(|v| {
            let not_q = !q.contains(Word(v)) as u32;
            let not_r = !r.contains(Word(v)) as u32;
            Word(v | not_q << n | not_r << (n + 1))
        })
        .collect();
    Ok(BinarySet::from_unsorted(n + 2, words))
}

/// Both sides of one rank identity for `Q • R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankIdentity {
    pub lhs: RankValue,
    pub rhs: u32,
}

impl RankIdentity {
    pub fn holds(&self) -> bool {
        self.lhs.exact_log2 == Some(self.rhs)
    }
}

/// Ranks of `X`, `X ∪ {n+1}`, `X ∪ {n+2}` and `X ∪ {n+1, n+2}` in `Q • R`,
/// each paired with the value predicted from `Q`, `R` and `Q ∩ R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BulletRankProfile {
    pub plain: RankIdentity,
    pub with_first_tag: RankIdentity,
    pub with_second_tag: RankIdentity,
    pub with_both_tags: RankIdentity,
}

impl BulletRankProfile {
    pub fn holds(&self) -> bool {
        [
            self.plain,
            self.with_first_tag,
            self.with_second_tag,
            self.with_both_tags,
        ]
        .iter()
        .all(RankIdentity::holds)
    }
}

pub fn bullet_rank_profile(q: &BinarySet, r: &BinarySet, x: Word) -> Result<BulletRankProfile> {
    q.same_order(r)?;
    let n = q.order();
    if !x.is_subset_of(Word::full(n)) {
        return Err(Error::WordOutOfRange {
            word: x.0,
            order: n,
        });
    }
    let both = q.intersection(r)?;
    for (set, what) in [(q, "Q"), (r, "R"), (&both, "Q ∩ R")] {
        if !is_powerful(set)? {
            return Err(Error::NotPowerful { what });
        }
    }
    let s = bullet(q, r)?;
    let first = 1u32 << n;
    let second = 1u32 << (n + 1);
    let predicted =
        |set: &BinarySet| -> Result<u32> { Ok(n as u32 - dim(set)? + exact_rank(set, x)?) };
    Ok(BulletRankProfile {
        plain: RankIdentity {
            lhs: rank(&s, x)?,
            rhs: x.weight(),
        },
        with_first_tag: RankIdentity {
            lhs: rank(&s, Word(x.0 | first))?,
            rhs: predicted(q)?,
        },
        with_second_tag: RankIdentity {
            lhs: rank(&s, Word(x.0 | second))?,
            rhs: predicted(r)?,
        },
        with_both_tags: RankIdentity {
            lhs: rank(&s, Word(x.0 | first | second))?,
            rhs: predicted(&both)?,
        },
    })
}

/// `S1 ◇ S2 = (S1 + loop) • (S2 + frame)`.
pub fn diamond(s1: &BinarySet, s2: &BinarySet) -> Result<BinarySet> {
    s1.same_order(s2)?;
    bullet(
        &extend(s1, Extension::Loop)?,
        &extend(s2, Extension::Frame)?,
    )
}
