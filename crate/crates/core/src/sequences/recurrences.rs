//! Residuals of the linear recurrences satisfied by `d_n`, `d_n^2`, the
//! single-sum square and the double sums `A_n`, `B_n`. Each residual is the
//! left side minus the right side and must vanish identically.

use super::families::{d_poly, dn_square_rhs, double_sum_a, double_sum_b};
use crate::exact::{int, ExactInt};
use crate::poly::PolyX;

fn c(v: i64) -> PolyX {
    PolyX::from_ints(&[v])
}

/// `2x + 1`
fn two_x_plus_one() -> PolyX {
    PolyX::from_ints(&[1, 2])
}

/// `(n+2) d_{n+2} - (2x+1) d_{n+1} - (n+1) d_n`
pub fn zeil1_residual(n: u32) -> PolyX {
    let ni = n as i64;
    let (d0, d1, d2) = (d_poly(n), d_poly(n + 1), d_poly(n + 2));
    &(&(&c(ni + 2) * &d2) - &(&two_x_plus_one() * &d1)) - &(&c(ni + 1) * &d0)
}

/// `(n+2)^2 d_{n+2}^2 - (2x+1)^2 d_{n+1}^2 - (n+1)^2 d_n^2 - 2(n+1)(2x+1) d_{n+1} d_n`
pub fn zeil3_residual(n: u32) -> PolyX {
    let ni = n as i64;
    let (d0, d1, d2) = (d_poly(n), d_poly(n + 1), d_poly(n + 2));
    let t = two_x_plus_one();
    let lhs = &c((ni + 2).pow(2)) * &d2.pow(2);
    let rhs = [
        &t.pow(2) * &d1.pow(2),
        &c((ni + 1).pow(2)) * &d0.pow(2),
        &(&c(2 * (ni + 1)) * &t) * &(&d1 * &d0),
    ]
    .into_iter()
    .sum();
    &lhs - &rhs
}

/// `(n+2) d_{n+2} d_{n+1} - (2x+1) d_{n+1}^2 - (n+1) d_{n+1} d_n`
pub fn zeil4_residual(n: u32) -> PolyX {
    let ni = n as i64;
    let (d0, d1, d2) = (d_poly(n), d_poly(n + 1), d_poly(n + 2));
    let lhs = &c(ni + 2) * &(&d2 * &d1);
    let rhs = &(&two_x_plus_one() * &d1.pow(2)) + &(&c(ni + 1) * &(&d1 * &d0));
    &lhs - &rhs
}

/// Order-3 recurrence
/// `(n+1)^2 u_n - (n^2+4n+4x^2+4x+5)(u_{n+1} + u_{n+2}) + (n+3)^2 u_{n+3}`
/// applied to `u = f(n), ..., f(n+3)`.
fn square_order3(n: u32, f: impl Fn(u32) -> PolyX) -> PolyX {
    let ni = n as i64;
    let mid = PolyX::from_ints(&[ni * ni + 4 * ni + 5, 4, 4]);
    let u: Vec<PolyX> = (0..4).map(|i| f(n + i)).collect();
    let head = &c((ni + 1).pow(2)) * &u[0];
    let middle = &mid * &(&u[1] + &u[2]);
    let tail = &c((ni + 3).pow(2)) * &u[3];
    &(&head - &middle) + &tail
}

/// The order-3 recurrence on `d_n(x)^2`.
pub fn d_square_order3_residual(n: u32) -> PolyX {
    square_order3(n, |i| d_poly(i).pow(2))
}

/// The order-3 recurrence on the single-sum right side.
pub fn single_sum_order3_residual(n: u32) -> PolyX {
    square_order3(n, dn_square_rhs)
}

/// The order-3 recurrence satisfied by `A_n(r)`.
pub fn rec_one_residual(n: u32, r: u32) -> ExactInt {
    let (n, r) = (n as i64, r as i64);
    let a: Vec<ExactInt> = (0..4)
        .map(|i| double_sum_a((n + i) as u32, r as u32))
        .collect();
    let c3 = (n + 3).pow(2) * (2 * n - r + 5) * (2 * n - r + 6);
    let c2 = 12 * n.pow(4) - 4 * n.pow(3) * r + 3 * n * n * r * r + 110 * n.pow(3) - 17 * n * n * r
        + 14 * n * r * r
        + 394 * n * n
        - 18 * n * r
        + 17 * r * r
        + 650 * n
        + r
        + 414;
    let c1 = 12 * n.pow(4)
        + 4 * n.pow(3) * r
        + 3 * n * n * r * r
        + 82 * n.pow(3)
        + 31 * n * n * r
        + 10 * n * r * r
        + 226 * n * n
        + 74 * n * r
        + 9 * r * r
        + 294 * n
        + 57 * r
        + 150;
    let c0 = (n + 1).pow(2) * (2 * n + r + 2) * (2 * n + r + 3);
    int(c3) * &a[3] - int(c2) * &a[2] + int(c1) * &a[1] - int(c0) * &a[0]
}

/// The order-3 recurrence satisfied by `B_n(r)`.
pub fn rec_two_residual(n: u32, r: u32) -> ExactInt {
    let (n, r) = (n as i64, r as i64);
    let b: Vec<ExactInt> = (0..4)
        .map(|i| double_sum_b((n + i) as u32, r as u32))
        .collect();
    let c3 = (n + 3) * (2 * n + 3) * (2 * n - r + 5) * (2 * n - r + 6);
    let c2 = (2 * n + 5)
        * (4 * n.pow(3)
            + 4 * n * n * r
            + n * r * r
            + 30 * n * n
            + 17 * n * r
            + r * r
            + 72 * n
            + 17 * r
            + 54);
    let c1 = (2 * n + 3)
        * (4 * n.pow(3) - 4 * n * n * r + n * r * r + 18 * n * n - 15 * n * r + 3 * r * r + 24 * n
            - 13 * r
            + 10);
    let c0 = (n + 1) * (2 * n + 5) * (2 * n + r + 2) * (2 * n + r + 3);
    int(c3) * &b[3] - int(c2) * &b[2] - int(c1) * &b[1] + int(c0) * &b[0]
}

/// The shared order-2 recurrence, applied to `u_n, u_{n+1}, u_{n+2}`.
pub fn order2_residual(n: u32, r: u32, u: [&ExactInt; 3]) -> ExactInt {
    let (n, r) = (n as i64, r as i64);
    let c2 = (n + 2) * (2 * n - r + 3) * (2 * n - r + 4);
    let c1 = (2 * n + 3) * (4 * n * n + r * r + 12 * n + r + 10);
    let c0 = (n + 1) * (2 * n + r + 2) * (2 * n + r + 3);
    int(c2) * u[2] - int(c1) * u[1] + int(c0) * u[0]
}

pub fn order2_residual_a(n: u32, r: u32) -> ExactInt {
    let a: Vec<ExactInt> = (0..3).map(|i| double_sum_a(n + i, r)).collect();
    order2_residual(n, r, [&a[0], &a[1], &a[2]])
}

pub fn order2_residual_b(n: u32, r: u32) -> ExactInt {
    let b: Vec<ExactInt> = (0..3).map(|i| double_sum_b(n + i, r)).collect();
    order2_residual(n, r, [&b[0], &b[1], &b[2]])
}
