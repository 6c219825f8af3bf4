use crate::error::{Error, Result};
use crate::set::{BinarySet, Word};
use crate::zeta::{count_zero_on, is_power_of_two};

/// The rank transform at one coordinate set, kept as an exact ratio.
///
/// The rank is `log2(total / zeros)`. It is an integer for every `X` exactly
/// when the set is powerful; otherwise `exact_log2` may be absent and only the
/// pair is meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankValue {
    pub total: usize,
    pub zeros: usize,
    pub exact_log2: Option<u32>,
}

impl RankValue {
    pub fn new(total: usize, zeros: usize) -> Self {
        let exact_log2 =
            (zeros > 0 && total.is_multiple_of(zeros) && is_power_of_two((total / zeros) as u64))
                .then(|| (total / zeros).trailing_zeros());
        RankValue {
            total,
            zeros,
            exact_log2,
        }
    }

    /// Real-valued rank, for reporting non-integral cases only.
    pub fn approx(&self) -> f64 {
        (self.total as f64 / self.zeros as f64).log2()
    }
}

pub fn rank(set: &BinarySet, x: Word) -> Result<RankValue> {
    if !set.contains_zero() {
        return Err(Error::UndefinedRank);
    }
    Ok(RankValue::new(set.len(), count_zero_on(set, x)))
}

/// Integer rank; errors unless the ratio is an exact power of two.
pub(crate) fn exact_rank(set: &BinarySet, x: Word) -> Result<u32> {
    rank(set, x)?.exact_log2.ok_or(Error::NotPowerful {
        what: "rank operand",
    })
}
