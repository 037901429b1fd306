//! Term-by-term expected payoffs for groups of two and three under random
//! mixing. These are written out independently of the general-`n` sums and
//! serve as oracles for them.

use crate::binomial::binomial_coefficient as choose;
use crate::hierarchy::hierarchicalness;

fn h3(x: usize) -> f64 {
    hierarchicalness(3, x)
}

/// `W(C)` for `n = 2`.
pub fn wc_n2(fc: f64, c: f64, b: f64) -> f64 {
    let hi = 0.5_f64;
    let lo = (2.0 - 1.0) / 2.0_f64;
    // Meets a cooperator: both high or both low -> nobody contributes; exactly
    // one high -> both contribute and each receives b.
    let with_coop = choose(2, 2) * hi.powi(2) * lo.powi(0) * c
        + choose(2, 0) * hi.powi(0) * lo.powi(2) * c
        + choose(2, 1) * hi.powi(1) * lo.powi(1) * b;
    // Meets a defector: stays low and keeps c, or leads and shares b two ways.
    let with_defector = choose(1, 0) * hi.powi(0) * lo.powi(1) * c
        + choose(1, 1) * hi.powi(1) * lo.powi(0) * (b / 2.0);
    fc * with_coop + (1.0 - fc) * with_defector
}

/// `W(D)` for `n = 2`.
pub fn wd_n2(fc: f64, c: f64, b: f64) -> f64 {
    let hi = 0.5_f64;
    let lo = (2.0 - 1.0) / 2.0_f64;
    c + fc * (choose(1, 1) * hi.powi(1) * lo.powi(0) * (b / 2.0))
}

/// `W(C)` for `n = 3`.
pub fn wc_n3(fc: f64, c: f64, b: f64) -> f64 {
    let third = 1.0 / 3.0_f64;
    let two_thirds = 2.0 / 3.0_f64;
    let h2 = h3(2);
    let g = 1.0 - fc;

    let keep = g.powi(2) * two_thirds * c
        + choose(2, 1) * fc * g * (two_thirds.powi(2) + third.powi(2) * (1.0 - h2)) * c
        // Three cooperators with two leaders: C(3,2) (1/3)^2 (2/3)^1.
        + fc.powi(2)
            * (two_thirds.powi(3)
                + choose(3, 2) * third.powi(2) * two_thirds.powi(1) * (1.0 - h2)
                + third.powi(3))
            * c;

    let share = g.powi(2) * third * third * b
        + choose(2, 1)
            * fc
            * g
            * (choose(2, 1) * third * two_thirds * two_thirds
                + choose(2, 2)
                    * third.powi(2)
                    * (choose(2, 1) * h2 * (1.0 - h2) * third
                        + choose(2, 2) * h2.powi(2) * two_thirds))
            * b
        + fc.powi(2)
            * (choose(3, 1) * third * two_thirds.powi(2)
                + choose(3, 2)
                    * third.powi(2)
                    * two_thirds.powi(1)
                    * (choose(3, 1) * h2 * (1.0 - h2).powi(2) * third
                        + choose(3, 2) * h2.powi(2) * (1.0 - h2).powi(1) * two_thirds
                        + h2.powi(3)))
            * b;

    keep + share
}

/// `W(D)` for `n = 3`.
pub fn wd_n3(fc: f64, c: f64, b: f64) -> f64 {
    let third = 1.0 / 3.0_f64;
    let two_thirds = 2.0 / 3.0_f64;
    let h2 = h3(2);
    c + 2.0 * fc * (1.0 - fc) * (third * h3(1) * third) * b
        + fc.powi(2)
            * (choose(2, 1) * third * two_thirds * two_thirds
                + third.powi(2)
                    * (choose(2, 1) * h2 * (1.0 - h2) * third + h2.powi(2) * two_thirds))
            * b
}
