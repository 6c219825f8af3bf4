//! Inputs shared by the benchmarks.

use powerful::enumerate::family_seeds;
use powerful::ops::diamond;
use powerful::BinarySet;

/// An order-8 powerful set of size 64.
pub fn order_eight() -> BinarySet {
    let [a, b] = family_seeds();
    diamond(&a, &b).expect("seeds share an order")
}

/// An order-11 powerful set of size 512.
pub fn order_eleven() -> BinarySet {
    let s = order_eight();
    let [a, _] = family_seeds();
    let t = diamond(&a, &a).expect("seeds share an order");
    diamond(&s, &t).expect("members share an order")
}
