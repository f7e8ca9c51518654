//! Classical integer-partition counters.
//!
//! These are the per-section building blocks: every section of a
//! partition is an integer partition of its scale sum, so counting a
//! class over the field reduces to products (or composition sums) of
//! the counters below. All of them are exact `i64` computations.
//!
//! * [`partition_count`] — the ordinary partition function, via the
//!   pentagonal-number recurrence;
//! * [`sylvester_odd_distinct`] / [`sylvester_distinct_runs`] — odd
//!   parts with exactly `k` distinct values, and distinct parts forming
//!   exactly `k` runs of consecutive integers (Sylvester's refinement);
//! * [`gordon_allowed_residues`] / [`gordon_difference`] — parts
//!   avoiding residues `0, ±i mod 2k+1`, and the matching
//!   difference-condition count (Gordon's generalization of
//!   Rogers–Ramanujan);
//! * [`parts_in_residues_mod5`] — parts restricted to a residue set
//!   mod 5.

use std::sync::OnceLock;

/// Largest argument the shared partition-function table covers; beyond
/// this `p(n)` would no longer be certain to fit in `i64` anyway.
const P_TABLE_MAX: usize = 400;

fn p_table() -> &'static [i64] {
    static TABLE: OnceLock<Vec<i64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut p = vec![0i64; P_TABLE_MAX + 1];
        p[0] = 1;
        for n in 1..=P_TABLE_MAX {
            // Partial sums overshoot the final value (the leading two
            // terms share a sign), so accumulate wide and narrow once.
            let mut acc: i128 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > n {
                    break;
                }
                let sign: i128 = if k % 2 == 0 { -1 } else { 1 };
                acc += sign * p[n - g1] as i128;
                if g2 <= n {
                    acc += sign * p[n - g2] as i128;
                }
                k += 1;
            }
            p[n] = i64::try_from(acc).expect("partition number fits i64");
        }
        p
    })
}

/// Number of partitions of `n` (1 for `n == 0`, 0 for `n < 0`).
pub fn partition_count(n: i64) -> i64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    assert!(
        n <= P_TABLE_MAX,
        "partition_count table capped at {P_TABLE_MAX}"
    );
    p_table()[n]
}

/// Runs a callback on every partition of `n` whose parts satisfy
/// `allowed`, parts nonincreasing. The callback sees the parts slice.
fn for_each_partition(
    n: i64,
    allowed: &dyn Fn(i64) -> bool,
    distinct: bool,
    f: &mut dyn FnMut(&[i64]),
) {
    fn rec(
        rem: i64,
        max_part: i64,
        allowed: &dyn Fn(i64) -> bool,
        distinct: bool,
        parts: &mut Vec<i64>,
        f: &mut dyn FnMut(&[i64]),
    ) {
        if rem == 0 {
            f(parts);
            return;
        }
        let mut part = rem.min(max_part);
        while part >= 1 {
            if allowed(part) {
                parts.push(part);
                let cap = if distinct { part - 1 } else { part };
                rec(rem - part, cap, allowed, distinct, parts, f);
                parts.pop();
            }
            part -= 1;
        }
    }
    if n < 0 {
        return;
    }
    rec(n, n, allowed, distinct, &mut Vec::new(), f);
}

/// Partitions of `n` into odd parts with exactly `k` distinct values.
pub fn sylvester_odd_distinct(n: i64, k: i64) -> i64 {
    let mut count = 0i64;
    for_each_partition(n, &|p| p % 2 == 1, false, &mut |parts| {
        let mut distinct = 0i64;
        let mut last = 0i64;
        for &p in parts {
            if p != last {
                distinct += 1;
                last = p;
            }
        }
        if distinct == k {
            count += 1;
        }
    });
    count
}

/// Partitions of `n` into distinct parts forming exactly `k` maximal
/// runs of consecutive integers.
pub fn sylvester_distinct_runs(n: i64, k: i64) -> i64 {
    let mut count = 0i64;
    for_each_partition(n, &|_| true, true, &mut |parts| {
        // parts are distinct and nonincreasing.
        let mut runs = 0i64;
        let mut prev: Option<i64> = None;
        for &p in parts {
            if prev != Some(p + 1) {
                runs += 1;
            }
            prev = Some(p);
        }
        if runs == k {
            count += 1;
        }
    });
    count
}

/// Partitions of `n` with every part allowed by `pred`, counted by a
/// coin-style dynamic program.
fn count_allowed_parts(n: i64, pred: impl Fn(i64) -> bool) -> i64 {
    if n < 0 {
        return 0;
    }
    let n = n as usize;
    let mut dp = vec![0i64; n + 1];
    dp[0] = 1;
    for part in 1..=n {
        if !pred(part as i64) {
            continue;
        }
        for m in part..=n {
            dp[m] += dp[m - part];
        }
    }
    dp[n]
}

/// Partitions of `n` into parts not congruent to `0, i, -i` mod
/// `2k + 1` (the product side of Gordon's theorem).
pub fn gordon_allowed_residues(n: i64, k: i64, i: i64) -> i64 {
    let m = 2 * k + 1;
    count_allowed_parts(n, |p| {
        let r = p.rem_euclid(m);
        r != 0 && r != i.rem_euclid(m) && r != (-i).rem_euclid(m)
    })
}

/// Partitions `b_1 >= b_2 >= ... >= b_s` of `n` with
/// `b_j - b_{j+k-1} >= 2` for all `j`, and at most `i - 1` parts equal
/// to 1 (the sum side of Gordon's theorem).
pub fn gordon_difference(n: i64, k: i64, i: i64) -> i64 {
    let mut count = 0i64;
    for_each_partition(n, &|_| true, false, &mut |parts| {
        let s = parts.len();
        let k = k as usize;
        if k >= 1 {
            for j in 0..s {
                if j + k - 1 < s && parts[j] - parts[j + k - 1] < 2 {
                    return;
                }
            }
        }
        let ones = parts.iter().filter(|&&p| p == 1).count() as i64;
        if ones < i {
            count += 1;
        }
    });
    count
}

/// Partitions of `n` with every part congruent mod 5 to a member of
/// `residues`.
pub fn parts_in_residues_mod5(n: i64, residues: &[u8]) -> i64 {
    count_allowed_parts(n, |p| residues.contains(&(p.rem_euclid(5) as u8)))
}

/// Partitions of `n` into distinct parts with gaps of at least 2 and
/// at most `ones_cap` parts equal to 1. With `ones_cap = 1` this is
/// the first Rogers–Ramanujan shape, with `ones_cap = 0` the second.
pub fn distinct_gap2_with_ones_cap(n: i64, ones_cap: i64) -> i64 {
    // Gaps >= 2 is exactly k = 2 of the difference conditions.
    gordon_difference(n, 2, ones_cap + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_count_small() {
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(partition_count(n as i64), e);
        }
        assert_eq!(partition_count(-3), 0);
        assert_eq!(partition_count(42), 53174);
    }

    #[test]
    fn sylvester_counters_at_seven() {
        // Odd parts, exactly k distinct values, n = 7:
        //   k=1: 7, 1^7            k=2: 5+1+1, 3+3+1, 3+1^4
        assert_eq!(sylvester_odd_distinct(7, 1), 2);
        assert_eq!(sylvester_odd_distinct(7, 2), 3);
        // Distinct parts, exactly k runs, n = 7:
        //   k=1: 7, 4+3            k=2: 6+1, 5+2, 4+2+1
        assert_eq!(sylvester_distinct_runs(7, 1), 2);
        assert_eq!(sylvester_distinct_runs(7, 2), 3);
    }

    #[test]
    fn sylvester_refinement_matches_by_level() {
        for n in 0..=40 {
            for k in 0..=5 {
                assert_eq!(
                    sylvester_odd_distinct(n, k),
                    sylvester_distinct_runs(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn gordon_counters_match() {
        for n in 0..=30 {
            for k in 2..=4 {
                for i in 1..=k {
                    assert_eq!(
                        gordon_allowed_residues(n, k, i),
                        gordon_difference(n, k, i),
                        "n={n} k={k} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn rogers_ramanujan_shapes() {
        // First RR shape at 7: {7, 6+1, 5+2}.
        assert_eq!(distinct_gap2_with_ones_cap(7, 1), 3);
        assert_eq!(gordon_difference(7, 2, 2), 3);
        // Second RR shape at 7 (no ones): {7, 5+2}.
        assert_eq!(gordon_difference(7, 2, 1), 2);
        // Residue products at 7.
        assert_eq!(gordon_allowed_residues(7, 2, 2), 3); // parts = 1,4 mod 5
        assert_eq!(gordon_allowed_residues(7, 2, 1), 2); // parts = 2,3 mod 5
        assert_eq!(parts_in_residues_mod5(7, &[1, 4]), 3);
        assert_eq!(parts_in_residues_mod5(7, &[2, 3]), 2);
        // Larger spot checks.
        assert_eq!(parts_in_residues_mod5(9, &[1, 4]), 5);
        assert_eq!(gordon_difference(9, 2, 2), 5);
    }
}
