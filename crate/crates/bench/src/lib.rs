//! Fixtures shared by the benchmarks.

use tamedeg_core::automorphism::{ElementaryAut, TameWord};
use tamedeg_core::poly::{parse_polynomial, Polynomial};

/// A dense-ish cubic in three variables raised to `k`.
pub fn dense(k: u32) -> Polynomial {
    parse_polynomial("x1 + 2*x2 - x3 + x1*x2 - 3*x2*x3 + x1^2*x3 + 1", 3)
        .expect("fixture parses")
        .pow(k)
}

/// Six shears cycling through the targets, each shifting by a quadratic in
/// the other two variables.
pub fn shear_word(len: usize) -> TameWord {
    let shifts = ["x2^2 + x3", "x1*x3", "x1^2 - x2"];
    let steps = (0..len)
        .map(|i| {
            let t = i % 3;
            let p = parse_polynomial(shifts[t], 3).expect("fixture parses");
            ElementaryAut::shear(t, p).expect("shift avoids the target")
        })
        .collect();
    TameWord::from_steps(3, steps).expect("three variables")
}
