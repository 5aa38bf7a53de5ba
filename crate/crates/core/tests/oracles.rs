//! Brute-force cross-checks for the semigroup and staircase arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;

use tamedeg_core::degree::{
    frobenius_number, least_combination_exceeding, semigroup_member, w_star, GroupElem, Weight,
};

fn reachable(u1: usize, u2: usize, limit: usize) -> Vec<bool> {
    let mut ok = vec![false; limit + 1];
    ok[0] = true;
    for t in 1..=limit {
        ok[t] = (t >= u1 && ok[t - u1]) || (t >= u2 && ok[t - u2]);
    }
    ok
}

#[test]
fn membership_and_frobenius_match_dp() {
    for u1 in 1..=30usize {
        for u2 in 1..=30usize {
            if u1.gcd(&u2) != 1 {
                continue;
            }
            // Everything past u1·u2 is representable, so this range holds the
            // largest gap.
            let ok = reachable(u1, u2, 200.max(u1 * u2));
            let e1 = GroupElem::int(u1 as i64);
            let e2 = GroupElem::int(u2 as i64);
            for (t, &expect) in ok.iter().enumerate().take(201) {
                let got = semigroup_member(&GroupElem::int(t as i64), &e1, &e2).unwrap();
                assert_eq!(got.is_some(), expect, "{t} in <{u1},{u2}>");
                if let Some((a, b)) = got {
                    assert_eq!(a * u1 + b * u2, BigInt::from(t));
                }
            }
            if u1 >= 2 && u2 >= 2 {
                let f = frobenius_number(&BigInt::from(u1), &BigInt::from(u2)).unwrap();
                let dp_frob = (0..ok.len()).rev().find(|&t| !ok[t]).unwrap();
                assert_eq!(f, BigInt::from(dp_frob), "<{u1},{u2}>");
            } else {
                assert!(frobenius_number(&BigInt::from(u1), &BigInt::from(u2)).is_err());
            }
        }
    }
}

fn g(v: &[i64]) -> GroupElem {
    GroupElem::from_i64s(v)
}

/// Every `a·e1 + b·e2` with `1 <= a, b <= 80`, keeping the least one above `t`.
fn enumerate_min(e1: &[i64], e2: &[i64], t: &[i64]) -> Option<Vec<i64>> {
    let mut best: Option<Vec<i64>> = None;
    for a in 1..=80 {
        for b in 1..=80 {
            let c: Vec<i64> = e1.iter().zip(e2).map(|(x, y)| a * x + b * y).collect();
            if c.as_slice() > t && best.as_ref().is_none_or(|cur| c < *cur) {
                best = Some(c);
            }
        }
    }
    best
}

fn oracle_w_star(w: [&[i64]; 3]) -> Vec<i64> {
    let mut s = w.to_vec();
    s.sort();
    let t: Vec<i64> = s[0].iter().zip(s[2]).map(|(x, y)| x + y).collect();
    let fallback: Vec<i64> = t.iter().zip(s[0]).map(|(x, y)| x + y).collect();
    match enumerate_min(s[0], s[1], &t) {
        Some(c) if c < fallback => c,
        _ => fallback,
    }
}

#[test]
fn integer_staircase_matches_enumeration() {
    for a in 1..=12i64 {
        for b in a..=12 {
            for c in b..=12 {
                let w = Weight::from_ints(a, b, c).unwrap();
                assert_eq!(w_star(&w), g(&oracle_w_star([&[a], &[b], &[c]])), "w=({a},{b},{c})");
                let got = least_combination_exceeding(&g(&[a]), &g(&[b]), &g(&[c])).unwrap();
                assert_eq!(got, enumerate_min(&[a], &[b], &[c]).map(|v| g(&v)));
            }
        }
    }
}

fn rank2_positive() -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for x in 0..=8 {
        for y in -8..=8 {
            if [x, y] > [0, 0] {
                out.push([x, y]);
            }
        }
    }
    out
}

#[test]
fn rank_two_staircase_matches_enumeration() {
    let pos = rank2_positive();
    let targets: Vec<[i64; 2]> = (-4..=8).flat_map(|x| (-8..=8).map(move |y| [x, y])).collect();
    // A sparse sweep: every pair of generators against a rotating target.
    for (i, e1) in pos.iter().enumerate() {
        for (j, e2) in pos.iter().enumerate() {
            let t = targets[(i * 31 + j * 7) % targets.len()];
            let got = least_combination_exceeding(&g(e1), &g(e2), &g(&t)).unwrap();
            let want = enumerate_min(e1, e2, &t);
            match (&got, &want) {
                (Some(x), Some(y)) => assert_eq!(*x, g(y), "{e1:?} {e2:?} > {t:?}"),
                (None, None) => {}
                _ => panic!("{e1:?} {e2:?} > {t:?}: engine {got:?}, enumeration {want:?}"),
            }
        }
    }
}

#[test]
fn rank_two_w_star_matches_enumeration() {
    let pos: Vec<[i64; 2]> = rank2_positive().into_iter().filter(|v| v[0] <= 3 && v[1].abs() <= 4).collect();
    for (i, a) in pos.iter().enumerate() {
        for (j, b) in pos.iter().enumerate().skip(i) {
            for c in pos.iter().skip(j) {
                let w = Weight::new(g(a), g(b), g(c)).unwrap();
                assert_eq!(w_star(&w), g(&oracle_w_star([a, b, c])), "w=({a:?},{b:?},{c:?})");
            }
        }
    }
}
