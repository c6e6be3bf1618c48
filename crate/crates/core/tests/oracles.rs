//! Independent reference computations, checked against the engine.

use minreal_core::cohom::{self, TruncatedCohomology};
use minreal_core::liealg::{MatrixG, SlAlgebra};
use minreal_core::moyal::{bidiff_p, moyal_bracket, poisson, SymplecticStructure};
use minreal_core::reps::{self, RepParam};
use minreal_core::weylop::{op_apply, weyl_w};
use minreal_core::{GaussianRational, MultiIndex, Polynomial, Space};

fn gr(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

fn ph(n: usize, s: &str) -> Polynomial {
    Polynomial::parse(&Space::phase(n), s).unwrap()
}

/// `sum Lambda^{i1 j1} ... Lambda^{il jl} d_{i1..il} u d_{j1..jl} v` over
/// every index tuple.
fn bidiff_bruteforce(l: u32, u: &Polynomial, v: &Polynomial) -> Polynomial {
    let n = u.space().half();
    let lam = SymplecticStructure::new(n);
    let dim = 2 * n;
    let mut out = Polynomial::zero(u.space());
    let total = dim.pow(l);
    for code in 0..total.pow(2) {
        let (mut a, mut b) = (code % total, code / total);
        let mut sign = 1i64;
        let mut du = u.clone();
        let mut dv = v.clone();
        for _ in 0..l {
            let (i, j) = (a % dim, b % dim);
            a /= dim;
            b /= dim;
            sign *= lam.lambda(i, j);
            if sign == 0 {
                break;
            }
            du = du.partial(i).unwrap();
            dv = dv.partial(j).unwrap();
        }
        if sign != 0 {
            out = &out + &(&du * &dv).scale(&GaussianRational::from_int(sign));
        }
    }
    out
}

#[test]
fn bidiff_matches_index_sum() {
    let n1 = ["p1^2*q1", "q1^3 - 2*p1", "3/2*p1*q1^2 + i*q1", "p1^3"];
    for u in n1 {
        for v in n1 {
            let (u, v) = (ph(1, u), ph(1, v));
            for l in 0..=4 {
                assert_eq!(
                    bidiff_p(l, &u, &v).unwrap(),
                    bidiff_bruteforce(l, &u, &v),
                    "l={l} u={u} v={v}"
                );
            }
        }
    }
    let n2 = [
        "p1*p2*q2",
        "q1*q2*p1",
        "p2*q1*q2 - p1^2",
        "q1^2*p2 + 1/3*q2",
    ];
    for u in n2 {
        for v in n2 {
            let (u, v) = (ph(2, u), ph(2, v));
            for l in 0..=3 {
                assert_eq!(
                    bidiff_p(l, &u, &v).unwrap(),
                    bidiff_bruteforce(l, &u, &v),
                    "l={l} u={u} v={v}"
                );
            }
        }
    }
    assert_eq!(
        bidiff_bruteforce(1, &ph(1, "p1^2*q1"), &ph(1, "q1^3")),
        poisson(&ph(1, "p1^2*q1"), &ph(1, "q1^3")).unwrap()
    );
}

/// Defining formula for `W(u(p) q^alpha)`: expand `u(p + s/2) phi(p + s)`,
/// apply `(i d/ds)^alpha`, set `s = 0`.
fn weyl_by_substitution(u: &Polynomial, alpha: &[u32], phi: &Polynomial) -> Polynomial {
    let n = alpha.len();
    let names: Vec<String> = (1..=n)
        .map(|k| format!("p{k}"))
        .chain((1..=n).map(|k| format!("s{k}")))
        .collect();
    let ps = Space::custom(&names);
    let shift = |f: &Polynomial, c: &GaussianRational| -> Polynomial {
        let mut out = Polynomial::zero(&ps);
        for (m, coef) in f.terms() {
            let mut term = Polynomial::constant(&ps, coef.clone());
            for k in 0..n {
                let lin = &Polynomial::var(&ps, k) + &Polynomial::var(&ps, n + k).scale(c);
                term = &term * &lin.pow(m.exps()[k]);
            }
            out = &out + &term;
        }
        out
    };
    let mut g = &shift(u, &gr("1/2")) * &shift(phi, &gr("1"));
    for (k, &a) in alpha.iter().enumerate() {
        for _ in 0..a {
            g = g.partial(n + k).unwrap().scale(&GaussianRational::i());
        }
    }
    let pos = Space::position(n);
    let mut out = Polynomial::zero(&pos);
    for (m, c) in g.terms() {
        if m.exps()[n..].iter().all(|&e| e == 0) {
            out = &out
                + &Polynomial::monomial(&pos, MultiIndex::new(m.exps()[..n].to_vec()), c.clone());
        }
    }
    out
}

#[test]
fn weyl_closed_form_matches_definition() {
    for n in 1..=2usize {
        let phase = Space::phase(n);
        let pos = Space::position(n);
        for ua in MultiIndex::all_up_to(n, 3) {
            for alpha in MultiIndex::all_up_to(n, 3) {
                let u = Polynomial::monomial(&pos, ua.clone(), GaussianRational::one());
                let mut e = ua.exps().to_vec();
                e.extend_from_slice(alpha.exps());
                let symbol =
                    Polynomial::monomial(&phase, MultiIndex::new(e), GaussianRational::one());
                let w = weyl_w(&symbol).unwrap();
                // an operator of order |alpha| is pinned down by monomials of degree <= |alpha|
                for g in MultiIndex::all_up_to(n, alpha.degree() + 1) {
                    let phi = Polynomial::monomial(&pos, g, GaussianRational::one());
                    let expect = weyl_by_substitution(&u, alpha.exps(), &phi);
                    assert_eq!(
                        op_apply(&w, &phi).unwrap(),
                        expect,
                        "u={u} alpha={:?} phi={phi}",
                        alpha.exps()
                    );
                }
            }
        }
    }
}

/// `(mult (beta z + alpha) f) + sum_j ((alpha + beta z) z_j - gamma_j - (delta z)_j) d_j f`,
/// evaluated directly on `f`.
fn block_action(n: usize, mult: &GaussianRational, x: &MatrixG, f: &Polynomial) -> Polynomial {
    let s = f.space().clone();
    let zv = |k: usize| Polynomial::var(&s, k - 1);
    let mut scalar = Polynomial::constant(&s, x.get(1, 1).clone());
    for l in 1..=n {
        scalar = &scalar + &zv(l).scale(x.get(1, l + 1));
    }
    let mut out = (&scalar * f).scale(mult);
    for j in 1..=n {
        let mut vj = &scalar * &zv(j);
        vj = &vj - &Polynomial::constant(&s, x.get(j + 1, 1).clone());
        for l in 1..=n {
            vj = &vj - &zv(l).scale(x.get(j + 1, l + 1));
        }
        out = &out + &(&vj * &f.partial(j - 1).unwrap());
    }
    out
}

#[test]
fn rho_lambda_matches_block_action() {
    for n in 1..=3usize {
        let alg = SlAlgebra::new(n).unwrap();
        let s = Space::representation(n);
        for lam in ["0", "1", "-1/2", "3", "i", "-4"] {
            let lam = gr(lam);
            let real = reps::Realization::rho_lambda(&RepParam::generic(n, lam.clone())).unwrap();
            for (k, x) in alg.basis().elements().iter().enumerate() {
                for p in MultiIndex::all_up_to(n, 3) {
                    let f = Polynomial::monomial(&s, p, GaussianRational::one());
                    assert_eq!(
                        op_apply(&real.basis_ops()[k], &f).unwrap(),
                        block_action(n, &lam, x, &f),
                        "n={n} lambda={lam} X={}",
                        alg.basis().label(k)
                    );
                }
            }
        }
    }
}

#[test]
fn gram_tables_match_recurrences() {
    // (lambda + |p|) alpha(p + e_k) = (p_k + 1) alpha(p)
    for n in 1..=2usize {
        for lam in ["2", "3", "7/2"] {
            let p = RepParam::generic(n, gr(lam));
            let g = reps::gram_discrete(&p, 5).unwrap();
            for q in MultiIndex::all_up_to(n, 4) {
                for k in 0..n {
                    let up = q.with(k, q.exps()[k] + 1);
                    let lhs = &(&p.lambda + &GaussianRational::from_int(q.degree().into()))
                        * g.get(&up).unwrap();
                    let rhs =
                        &GaussianRational::from_int((q.exps()[k] + 1).into()) * g.get(&q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
    // beta(p + e_k) (m - |p|) = (p_k + 1) beta(p)
    for n in 1..=2usize {
        for m in 1..=4u32 {
            let b = reps::gram_solve(
                &RepParam::compact(n, m),
                minreal_core::liealg::RealForm::Compact,
                m,
            )
            .unwrap();
            for q in MultiIndex::all_up_to(n, m - 1) {
                for k in 0..n {
                    let up = q.with(k, q.exps()[k] + 1);
                    let lhs = b.get(&up).unwrap()
                        * &GaussianRational::from_int(i64::from(m - q.degree()));
                    let rhs =
                        &GaussianRational::from_int((q.exps()[k] + 1).into()) * b.get(&q).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn casimir_matches_sl2_formula() {
    // h^2/2 + ef + fe on the highest vector of the (m+1)-dim module: m^2/2 + m
    for m in 0..=5u32 {
        let expect = GaussianRational::from_frac(i64::from(m * (m + 2)), 2);
        assert_eq!(reps::casimir_scalar(1, m).unwrap(), expect);
    }
}

#[test]
fn block_split_matches_dense_system() {
    for (n, d) in [(1usize, 1u32), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)] {
        let alg = SlAlgebra::new(n).unwrap();
        let split = TruncatedCohomology::compute(&alg, d).unwrap();
        let dense = TruncatedCohomology::compute_dense(&alg, d).unwrap();
        assert_eq!(
            (split.dim_z1(), split.dim_b1()),
            (dense.dim_z1(), dense.dim_b1()),
            "n={n} d={d}"
        );
        let phi = cohom::phi1(&alg);
        assert!(dense.generated_by(&phi));
    }
}

#[test]
fn moyal_equals_poisson_for_linear_q_dependence() {
    let alg = SlAlgebra::new(3).unwrap();
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            let (u, v) = (alg.tilde_basis(i), alg.tilde_basis(j));
            assert_eq!(moyal_bracket(u, v).unwrap(), poisson(u, v).unwrap());
        }
    }
}
