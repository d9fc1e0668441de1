//! Fixtures shared by the benchmarks.

use chanmetric::rational::{int, rat};
use chanmetric::{Channel, Rat, SubsetVector, WeightVector};

/// Binary symmetric channel on `bits`-bit messages with crossover `p`.
pub fn bsc(bits: u32, p: &Rat) -> Channel {
    let q = int(1) - p;
    let n = 1usize << bits;
    let rows = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let h = (x ^ y).count_ones();
                    (0..bits).map(|b| if b < h { p.clone() } else { q.clone() }).product()
                })
                .collect()
        })
        .collect();
    Channel::from_rows(rows).unwrap()
}

/// A dense channel with no structure: row `i` gets weights `1 + (i·7 + j·3) mod 5`.
pub fn scrambled_channel(n: usize) -> Channel {
    let rows = (0..n)
        .map(|i| {
            let w: Vec<i64> = (0..n).map(|j| 1 + ((i * 7 + j * 3) % 5) as i64).collect();
            let total: i64 = w.iter().sum();
            w.into_iter().map(|v| rat(v, total)).collect()
        })
        .collect();
    Channel::from_rows(rows).unwrap()
}

/// The three-set example weight (3,2,1,3,3,2,3) in graded order.
pub fn example_weight() -> WeightVector {
    let values = [3, 2, 1, 3, 3, 2, 3].into_iter().map(int).collect();
    WeightVector::new(SubsetVector::from_graded(3, values).unwrap()).unwrap()
}

/// A strictly positive weight on `n` generators with many distinct values.
pub fn spread_weight(n: usize) -> WeightVector {
    let values = SubsetVector::from_fn(n, |mask| int(1 + (mask as i64 * 5) % 7));
    WeightVector::new(values).unwrap()
}
