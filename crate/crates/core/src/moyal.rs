//! Bidifferential operators `P^l`, the Moyal star product at `t = -i/2`,
//! the normalized Moyal bracket and the Poisson bracket.
//!
//! `P^l(u, v)` contracts `l` derivatives of `u` against `l` derivatives of
//! `v` through `l` copies of the canonical symplectic matrix. Since the
//! matrix pairs `p_k` with `q_k` only, `P^l` expands multinomially:
//!
//! ```text
//! P^l(u,v) = sum_{|a|+|b|=l} l!/(a! b!) (-1)^|b| d_p^a d_q^b u * d_q^a d_p^b v
//! ```
//!
//! which is what [`bidiff_p`] evaluates term by term.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::{factorial, MultiIndex, Polynomial, SpaceKind};
use crate::scalar::GaussianRational;

/// The canonical structure on `R^{2n}` with coordinates `x = (p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticStructure {
    n: usize,
}

impl SymplecticStructure {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Lambda^{ij}` over `0..2n`: `+1` at `(k, n+k)`, `-1` at `(n+k, k)`.
    pub fn lambda(&self, i: usize, j: usize) -> i64 {
        if i < self.n && j == i + self.n {
            1
        } else if i >= self.n && i - self.n == j {
            -1
        } else {
            0
        }
    }
}

/// The specialization of the formal parameter used by the star product.
pub fn t_value() -> GaussianRational {
    GaussianRational::from_parts(0, 1, -1, 2)
}

fn check_phase(u: &Polynomial, v: &Polynomial) -> Result<()> {
    if u.space() != v.space() || u.space().kind() != SpaceKind::Phase {
        return Err(Error::SpaceMismatch {
            left: u.space().to_string(),
            right: v.space().to_string(),
        });
    }
    Ok(())
}

fn min_degree(u: &Polynomial, v: &Polynomial) -> Option<u32> {
    Some(u.degree()?.min(v.degree()?))
}

/// `sum_l weights[l] * P^l(u, v)`, all orders in one pass over term pairs.
fn bidiff_sum(u: &Polynomial, v: &Polynomial, weights: &[GaussianRational]) -> Polynomial {
    let space = u.space();
    let n = space.half();
    let mut out = Polynomial::zero(space);
    if weights.is_empty() {
        return out;
    }
    let max_l = weights.len() as u32 - 1;
    // weights[l] * l!, with the (-1)^|b| sign applied per term
    let scaled: Vec<GaussianRational> = weights
        .iter()
        .enumerate()
        .map(|(l, w)| w * &factorial(l as u32))
        .collect();
    for (mu, cu) in u.terms() {
        for (mv, cv) in v.terms() {
            // gamma = (a, b) differentiates u; its half-swap (b, a) differentiates v
            let cap: Vec<u32> = (0..2 * n)
                .map(|k| {
                    let swapped = if k < n { k + n } else { k - n };
                    mu.exps()[k].min(mv.exps()[swapped])
                })
                .collect();
            for gamma in MultiIndex::new(cap).divisors() {
                let l = gamma.degree();
                if l > max_l || scaled[l as usize].is_zero() {
                    continue;
                }
                let swapped: Vec<u32> = (0..2 * n)
                    .map(|k| {
                        if k < n {
                            gamma.exps()[k + n]
                        } else {
                            gamma.exps()[k - n]
                        }
                    })
                    .collect();
                let swapped = MultiIndex::new(swapped);
                let (ku, ru) = mu.derive(&gamma).expect("gamma <= mu");
                let (kv, rv) = mv.derive(&swapped).expect("swap(gamma) <= mv");
                let q_order: u32 = gamma.exps()[n..].iter().sum();
                let mut c = &(&(&ku * &kv) * &(cu * cv)) * &scaled[l as usize];
                c = &c / &gamma.factorial();
                if q_order % 2 == 1 {
                    c = -c;
                }
                out.add_term(ru.add(&rv), &c);
            }
        }
    }
    out
}

/// `P^l(u, v)` exactly. Vanishes once `l` exceeds `min(deg u, deg v)`.
pub fn bidiff_p(l: u32, u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    check_phase(u, v)?;
    if min_degree(u, v).is_none_or(|d| l > d) {
        return Ok(Polynomial::zero(u.space()));
    }
    let mut w = alloc::vec![GaussianRational::zero(); l as usize + 1];
    w[l as usize] = GaussianRational::one();
    Ok(bidiff_sum(u, v, &w))
}

/// `u * v = sum_l t^l / l! P^l(u, v)` at `t = -i/2`.
pub fn star(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    check_phase(u, v)?;
    let Some(top) = min_degree(u, v) else {
        return Ok(Polynomial::zero(u.space()));
    };
    let t = t_value();
    let w: Vec<GaussianRational> = (0..=top)
        .map(|l| &t.powi(l as i32) / &factorial(l))
        .collect();
    Ok(bidiff_sum(u, v, &w))
}

/// `[u, v]_* = (1/2t)(u*v - v*u) = sum_l t^{2l}/(2l+1)! P^{2l+1}(u, v)`,
/// which at `t = -i/2` equals `i (u*v - v*u)`.
pub fn moyal_bracket(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    check_phase(u, v)?;
    let Some(top) = min_degree(u, v) else {
        return Ok(Polynomial::zero(u.space()));
    };
    let t = t_value();
    let w: Vec<GaussianRational> = (0..=top)
        .map(|l| {
            if l % 2 == 1 {
                &t.powi(l as i32 - 1) / &factorial(l)
            } else {
                GaussianRational::zero()
            }
        })
        .collect();
    Ok(bidiff_sum(u, v, &w))
}

/// `{u, v} = sum_k du/dp_k dv/dq_k - du/dq_k dv/dp_k`.
pub fn poisson(u: &Polynomial, v: &Polynomial) -> Result<Polynomial> {
    check_phase(u, v)?;
    let s = u.space();
    let mut out = Polynomial::zero(s);
    for k in 1..=s.half() {
        let a = &u.partial(s.p(k))? * &v.partial(s.q(k))?;
        let b = &u.partial(s.q(k))? * &v.partial(s.p(k))?;
        out = &(&out + &a) - &b;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Space;

    fn ph(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Space::phase(n), s).unwrap()
    }

    #[test]
    fn symplectic_matrix() {
        let s = SymplecticStructure::new(2);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s.lambda(i, j), -s.lambda(j, i));
            }
        }
        assert_eq!(s.lambda(0, 2), 1);
        assert_eq!(s.lambda(3, 1), -1);
        assert_eq!(s.lambda(0, 3), 0);
    }

    #[test]
    fn bidiff_examples() {
        assert_eq!(bidiff_p(1, &ph(1, "p1"), &ph(1, "q1")).unwrap(), ph(1, "1"));
        assert_eq!(
            bidiff_p(1, &ph(1, "q1"), &ph(1, "p1")).unwrap(),
            ph(1, "-1")
        );
        // by hand: only the (p1,p1)x(q1,q1) contraction survives, 2*2*1*1
        assert_eq!(
            bidiff_p(2, &ph(1, "p1^2"), &ph(1, "q1^2")).unwrap(),
            ph(1, "4")
        );
        assert_eq!(
            bidiff_p(0, &ph(1, "p1"), &ph(1, "q1")).unwrap(),
            ph(1, "p1*q1")
        );
        assert!(bidiff_p(3, &ph(1, "p1^2"), &ph(1, "q1^5"))
            .unwrap()
            .is_zero());
        // q-degree 1 in the first slot caps this pair at order 2
        assert!(bidiff_p(3, &ph(2, "p1*p2*q2"), &ph(2, "q1*q2*p1"))
            .unwrap()
            .is_zero());
        // a cubic coordinate function does have a third-order contraction
        let p3 = bidiff_p(3, &ph(2, "p1*p2*q2"), &ph(2, "p2*q1*q2")).unwrap();
        // 3!/(1!1!0!0!0!1!) * (-1)^1
        assert_eq!(p3, ph(2, "-6"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            star(&ph(1, "p1"), &ph(1, "q1")).unwrap(),
            ph(1, "p1*q1 - 1/2*i")
        );
        assert_eq!(
            star(&ph(1, "q1"), &ph(1, "p1")).unwrap(),
            ph(1, "p1*q1 + 1/2*i")
        );
        let u = ph(2, "p1^2*q2 - 3*q1 + i*p2");
        assert_eq!(star(&u, &ph(2, "1")).unwrap(), u);
        assert_eq!(star(&ph(2, "1"), &u).unwrap(), u);
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(
            moyal_bracket(&ph(1, "p1"), &ph(1, "q1")).unwrap(),
            ph(1, "1")
        );
        let u = ph(2, "p1^3*q1^2 + q2");
        assert!(moyal_bracket(&u, &u).unwrap().is_zero());
        assert_eq!(poisson(&ph(1, "p1*q1"), &ph(1, "q1")).unwrap(), ph(1, "q1"));
        assert!(poisson(&u, &ph(2, "7")).unwrap().is_zero());
        assert_eq!(
            poisson(&ph(1, "-p1^2*q1"), &ph(1, "q1")).unwrap(),
            ph(1, "-2*p1*q1")
        );
    }

    #[test]
    fn space_checks() {
        let a = ph(1, "p1");
        let b = Polynomial::one(&Space::phase(2));
        assert!(star(&a, &b).is_err());
        let z = Polynomial::one(&Space::representation(1));
        assert!(poisson(&z, &z).is_err());
    }
}
