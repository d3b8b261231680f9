//! Finite-difference weights on uniform windows, used for derivatives of
//! sampled paths. Weights come from Fornberg's recursion, so interior nodes
//! get the centered stencil and edge nodes the matching one-sided one at the
//! same order.

use crate::minkowski::MinkowskiVec;

/// First-derivative weights at node `position` of a `window`-point uniform
/// grid with unit spacing.
pub fn derivative_weights(window: usize, position: usize) -> Vec<f64> {
    fornberg(position as f64, window, 1)
}

/// Fornberg weights for the `m`-th derivative at `x0` over nodes `0..n`.
fn fornberg(x0: f64, n: usize, m: usize) -> Vec<f64> {
    let xs: Vec<f64> = (0..n).map(|i| i as f64).collect();
    let mut c = vec![vec![0.0; m + 1]; n];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = xs[0] - x0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = xs[i] - x0;
        for j in 0..i {
            let c3 = xs[i] - xs[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * ((k as f64) * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - (k as f64) * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Derivative of a uniformly sampled scalar sequence with step `h`.
/// Uses a sliding 7-point window (or the whole sequence when shorter).
pub fn sequence_derivative(h: f64, values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let w = n.min(7);
    let mut cache: Vec<Option<Vec<f64>>> = vec![None; w];
    (0..n)
        .map(|i| {
            let start = i.saturating_sub(w / 2).min(n - w);
            let pos = i - start;
            let weights = cache[pos].get_or_insert_with(|| derivative_weights(w, pos));
            let mut acc = 0.0;
            for (j, wgt) in weights.iter().enumerate() {
                acc += wgt * values[start + j];
            }
            acc / h
        })
        .collect()
}

/// Componentwise derivative of a sampled vector sequence.
pub fn vector_sequence_derivative(h: f64, values: &[MinkowskiVec]) -> Vec<MinkowskiVec> {
    let x1: Vec<f64> = values.iter().map(|v| v.x1).collect();
    let x2: Vec<f64> = values.iter().map(|v| v.x2).collect();
    let x3: Vec<f64> = values.iter().map(|v| v.x3).collect();
    let d1 = sequence_derivative(h, &x1);
    let d2 = sequence_derivative(h, &x2);
    let d3 = sequence_derivative(h, &x3);
    (0..values.len())
        .map(|i| MinkowskiVec::new(d1[i], d2[i], d3[i]))
        .collect()
}
