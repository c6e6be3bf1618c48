//! Verification suites. Each returns a [`SuiteReport`] with one check per
//! claim instance; parameters are explicit so the acceptance run and the
//! CLI can choose their own ranges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use minreal_core::cohom::{
    self, apply_equivalence, cobord1_basis, deformation_check, deformation_defect, reparametrize,
    star_inverse_series, Cochain1, FormalDeformation,
};
use minreal_core::liealg::{heisenberg_check, RealForm, SlAlgebra};
use minreal_core::moyal::{moyal_bracket, poisson, star};
use minreal_core::poly::{binomial, factorial};
use minreal_core::reps::{
    self, a_of_m, block_formula, gram_discrete, gram_solve, invariant_subspace_scan, skew_check,
    Realization, RepParam, TruncatedRep,
};
use minreal_core::weylop::{minimal_realization_basis, op_apply, op_compose, weyl_w};
use minreal_core::{Error, GaussianRational, MultiIndex, Polynomial, Space};

use crate::report::SuiteReport;

/// Suite ids in run order.
pub const SUITE_IDS: [&str; 10] = [
    "tilde-homomorphism",
    "weyl-multiplicativity",
    "star-algebra",
    "bridge",
    "h1",
    "deformation",
    "gram",
    "invariant-subspace",
    "su2",
    "heisenberg",
];

fn gr(s: &str) -> GaussianRational {
    s.parse().expect("literal")
}

/// `moyal_bracket(X~, Y~) = poisson(X~, Y~) = [X,Y]~` and
/// `[rho_0(X), rho_0(Y)] = rho_0([X,Y])` on every ordered basis pair.
pub fn tilde_homomorphism(ns: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[0],
        "coordinate functions and rho_0 are homomorphisms",
    );
    for &n in ns {
        let alg = match SlAlgebra::new(n) {
            Ok(a) => a,
            Err(e) => {
                r.error(format!("n={n}"), e);
                continue;
            }
        };
        let b = alg.basis();
        let mut bad = None;
        let mut pairs = 0;
        'outer: for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                pairs += 1;
                let (u, v) = (alg.tilde_basis(i), alg.tilde_basis(j));
                let t = alg.tilde(&b.element(i).bracket(b.element(j)));
                let (m, p) = (moyal_bracket(u, v), poisson(u, v));
                if m.as_ref() != Ok(&t) || p.as_ref() != Ok(&t) {
                    bad = Some(format!("[{}, {}]", b.label(i), b.label(j)));
                    break 'outer;
                }
            }
        }
        r.check(
            format!("n={n} brackets of coordinate functions"),
            bad.is_none(),
            bad.unwrap_or(format!("{pairs} pairs")),
        );
        match minimal_realization_basis(&alg) {
            Ok(ops) => {
                let real = Realization::from_ops(b.clone(), ops);
                let fail = real.homomorphism_failure();
                r.check(
                    format!("n={n} rho_0 homomorphism"),
                    fail.is_none(),
                    fail.map_or(format!("{pairs} pairs"), |(i, j)| {
                        format!("[{}, {}]", b.label(i), b.label(j))
                    }),
                );
            }
            Err(e) => r.error(format!("n={n} rho_0"), e),
        }
    }
    r
}

/// `W(u(p) q^alpha) phi` from the definition: expand
/// `u(p + s/2) phi(p + s)`, apply `(i d/ds)^alpha`, set `s = 0`.
pub fn weyl_by_definition(symbol: &Polynomial, phi: &Polynomial) -> Polynomial {
    let n = symbol.space().half();
    let names: Vec<String> = (1..=n)
        .map(|k| format!("p{k}"))
        .chain((1..=n).map(|k| format!("s{k}")))
        .collect();
    let ps = Space::custom(&names);
    let pos = Space::position(n);
    let shift = |exps: &[u32], c: &GaussianRational, scale: &GaussianRational| -> Polynomial {
        let mut term = Polynomial::constant(&ps, c.clone());
        for k in 0..n {
            let lin = &Polynomial::var(&ps, k) + &Polynomial::var(&ps, n + k).scale(scale);
            term = &term * &lin.pow(exps[k]);
        }
        term
    };
    let mut shifted_phi = Polynomial::zero(&ps);
    for (m, c) in phi.terms() {
        shifted_phi = &shifted_phi + &shift(m.exps(), c, &GaussianRational::one());
    }
    let mut out = Polynomial::zero(&pos);
    for (m, c) in symbol.terms() {
        let mut g = &shift(&m.exps()[..n], c, &gr("1/2")) * &shifted_phi;
        for k in 0..n {
            for _ in 0..m.exps()[n + k] {
                g = g
                    .partial(n + k)
                    .expect("in range")
                    .scale(&GaussianRational::i());
            }
        }
        for (gm, gc) in g.terms() {
            if gm.exps()[n..].iter().all(|&e| e == 0) {
                out = &out
                    + &Polynomial::monomial(
                        &pos,
                        MultiIndex::new(gm.exps()[..n].to_vec()),
                        gc.clone(),
                    );
            }
        }
    }
    out
}

/// `W(f1 * f2) = W(f1) o W(f2)` on all monomial pairs of degree
/// `<= symbol_deg`, and the closed form of `W` against its definition on
/// `u(p) q^alpha` with `deg u <= u_deg`, `|alpha| <= alpha_deg`.
pub fn weyl_multiplicativity(
    ns: &[usize],
    symbol_deg: u32,
    u_deg: u32,
    alpha_deg: u32,
) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[1],
        "Weyl map intertwines star product and composition",
    );
    for &n in ns {
        let s = Space::phase(n);
        let monos: Vec<Polynomial> = MultiIndex::all_up_to(2 * n, symbol_deg)
            .into_iter()
            .map(|m| Polynomial::monomial(&s, m, GaussianRational::one()))
            .collect();
        let ws: Vec<_> = monos
            .iter()
            .map(|m| weyl_w(m).expect("phase space"))
            .collect();
        let mut bad = None;
        'outer: for (a, wa) in monos.iter().zip(&ws) {
            for (b, wb) in monos.iter().zip(&ws) {
                let lhs = star(a, b).and_then(|p| weyl_w(&p));
                let rhs = op_compose(wa, wb);
                if lhs != rhs {
                    bad = Some(format!("f1={a}, f2={b}"));
                    break 'outer;
                }
            }
        }
        let pairs = monos.len() * monos.len();
        r.check(
            format!("n={n} multiplicativity, degree <= {symbol_deg}"),
            bad.is_none(),
            bad.unwrap_or(format!("{pairs} pairs")),
        );

        let pos = Space::position(n);
        let mut bad = None;
        let mut count = 0;
        'def: for ua in MultiIndex::all_up_to(n, u_deg) {
            for alpha in MultiIndex::all_up_to(n, alpha_deg) {
                let mut e = ua.exps().to_vec();
                e.extend_from_slice(alpha.exps());
                let symbol = Polynomial::monomial(&s, MultiIndex::new(e), GaussianRational::one());
                let w = weyl_w(&symbol).expect("phase space");
                count += 1;
                for g in MultiIndex::all_up_to(n, alpha.degree() + 1) {
                    let phi = Polynomial::monomial(&pos, g, GaussianRational::one());
                    if op_apply(&w, &phi).ok() != Some(weyl_by_definition(&symbol, &phi)) {
                        bad = Some(format!("symbol {symbol} on {phi}"));
                        break 'def;
                    }
                }
            }
        }
        r.check(
            format!("n={n} closed form against definition"),
            bad.is_none(),
            bad.unwrap_or(format!("{count} symbols")),
        );
    }
    r
}

/// A random phase-space polynomial with `1..=max_terms` terms of degree
/// `<= deg` and small Gaussian-rational coefficients.
pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, deg: u32, max_terms: usize) -> Polynomial {
    let s = Space::phase(n);
    let mut out = Polynomial::zero(&s);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let d = rng.gen_range(0..=deg);
        let mut e = vec![0u32; 2 * n];
        for _ in 0..d {
            e[rng.gen_range(0..2 * n)] += 1;
        }
        let c = GaussianRational::from_parts(
            rng.gen_range(-5..=5),
            rng.gen_range(1..=4),
            rng.gen_range(-3..=3),
            rng.gen_range(1..=3),
        );
        out = &out + &Polynomial::monomial(&s, MultiIndex::new(e), c);
    }
    out
}

/// Star associativity and bracket Jacobi on seeded random triples.
pub fn star_algebra(n: usize, seed: u64, count: usize, deg: u32) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[2],
        "star associativity and Moyal-bracket Jacobi on random triples",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assoc_bad = None;
    let mut jacobi_bad = None;
    for k in 0..count {
        let a = random_polynomial(&mut rng, n, deg, 3);
        let b = random_polynomial(&mut rng, n, deg, 3);
        let c = random_polynomial(&mut rng, n, deg, 3);
        let st = |x: &Polynomial, y: &Polynomial| star(x, y).expect("phase space");
        if assoc_bad.is_none() && st(&st(&a, &b), &c) != st(&a, &st(&b, &c)) {
            assoc_bad = Some(format!("triple {k}: {a} | {b} | {c}"));
        }
        let br = |x: &Polynomial, y: &Polynomial| moyal_bracket(x, y).expect("phase space");
        let j = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        if jacobi_bad.is_none() && !j.is_zero() {
            jacobi_bad = Some(format!("triple {k}: {a} | {b} | {c}"));
        }
    }
    let ok = format!("{count} triples, n={n}, degree <= {deg}, seed {seed}");
    r.check(
        "associativity",
        assoc_bad.is_none(),
        assoc_bad.unwrap_or(ok.clone()),
    );
    r.check("jacobi", jacobi_bad.is_none(), jacobi_bad.unwrap_or(ok));
    r
}

/// `rho_a` through the Weyl map equals `rho^lambda` at `lambda = -m(a)`;
/// `rho^m` and `rho^{-m}` equal the block-matrix formulas with `+m`, `-m`.
pub fn bridge(ns: &[usize], ms: &[u32]) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[3],
        "rho_a from the Weyl map recovers the rho^lambda family",
    );
    for &n in ns {
        let alg = match SlAlgebra::new(n) {
            Ok(a) => a,
            Err(e) => {
                r.error(format!("n={n}"), e);
                continue;
            }
        };
        let mut avals = vec![
            GaussianRational::zero(),
            GaussianRational::one(),
            GaussianRational::from_int(-(n as i64) - 1),
        ];
        avals.extend(
            ms.iter()
                .map(|&m| a_of_m(n, &GaussianRational::from_int(m.into()))),
        );
        for a in &avals {
            let res = Realization::rho_a(n, a).and_then(|w| {
                let d = Realization::rho_lambda(&RepParam::deformation(n, a.clone()))?;
                Ok(w.basis_ops()
                    .iter()
                    .zip(d.basis_ops())
                    .position(|(x, y)| x != y))
            });
            match res {
                Ok(bad) => r.check(
                    format!("n={n} a={a} rho_a = rho^(-m(a))"),
                    bad.is_none(),
                    bad.map_or(format!("m(a)={}", reps::m_of_a(n, a)), |i| {
                        alg.basis().label(i).to_string()
                    }),
                ),
                Err(e) => r.error(format!("n={n} a={a}"), e),
            }
        }
        for &m in ms {
            let mg = GaussianRational::from_int(m.into());
            for (name, param, mult) in [
                (
                    "discrete series",
                    RepParam::discrete_series(n, m),
                    mg.clone(),
                ),
                ("compact", RepParam::compact(n, m), -&mg),
            ] {
                let res = Realization::rho_lambda(&param).map(|real| {
                    (0..alg.dim()).find(|&i| {
                        real.basis_ops()[i] != block_formula(n, &mult, alg.basis().element(i))
                    })
                });
                match res {
                    Ok(bad) => r.check(
                        format!("n={n} m={m} {name} display = block formula"),
                        bad.is_none(),
                        bad.map_or("all basis elements".into(), |i| {
                            alg.basis().label(i).to_string()
                        }),
                    ),
                    Err(e) => r.error(format!("n={n} m={m} {name}"), e),
                }
            }
        }
    }
    r
}

/// Truncated `H^1` over degree windows `(n, dmin, dmax)`.
pub fn h1(windows: &[(usize, u32, u32)]) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[4],
        "first cohomology is one-dimensional, generated by phi_1",
    );
    for &(n, dmin, dmax) in windows {
        let rows = match cohom::h1_scan(n, dmin, dmax) {
            Ok(rows) => rows,
            Err(e) => {
                r.error(format!("n={n}"), e);
                continue;
            }
        };
        for h in rows {
            let d = h.d;
            r.check(
                format!("n={n} d={d} dim H1 = 1"),
                h.dim_h1 == 1,
                format!("Z1={} B1={} H1={}", h.dim_z1, h.dim_b1, h.dim_h1),
            );
            r.check(
                format!("n={n} d={d} stabilized"),
                h.stabilized,
                format!("{}", h.stabilized),
            );
            r.check(
                format!("n={n} d={d} phi_1 cocycle"),
                h.phi1_is_cocycle,
                format!("{}", h.phi1_is_cocycle),
            );
            r.check(
                format!("n={n} d={d} phi_1 not a coboundary"),
                !h.phi1_is_coboundary,
                if h.phi1_is_coboundary {
                    "solve found a potential"
                } else {
                    "solve infeasible"
                },
            );
            r.check(
                format!("n={n} d={d} phi_1 generates"),
                h.generator_check,
                format!("{}", h.generator_check),
            );
        }
    }
    r
}

fn equivalence_series(alg: &SlAlgebra) -> Vec<Polynomial> {
    let s = alg.phase();
    let n = alg.n();
    let p = |k| Polynomial::var(s, s.p(k));
    let q = |k| Polynomial::var(s, s.q(k));
    vec![
        &p(1) * &q(n),
        &(&q(1) * &q(1)) - &p(n).scale(&gr("2")),
        Polynomial::constant(s, gr("1/2+i")),
    ]
}

/// `Phi_a` is a formal deformation; a broken cochain fails at order 1;
/// reparametrized and conjugated deformations stay deformations.
pub fn deformation(ns: &[usize], order: usize, derived_order: usize) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[5],
        "formal deformations Phi_a, reparametrization and equivalence",
    );
    for &n in ns {
        let alg = match SlAlgebra::new(n) {
            Ok(a) => a,
            Err(e) => {
                r.error(format!("n={n}"), e);
                continue;
            }
        };
        let describe = |rep: Result<cohom::DeformationReport, Error>| -> (bool, String) {
            match rep {
                Ok(rep) => match rep.failure {
                    None => (true, format!("orders 0..={}", rep.checked_to)),
                    Some((k, i, j)) => (
                        false,
                        format!(
                            "order {k} at [{}, {}]",
                            alg.basis().label(i),
                            alg.basis().label(j)
                        ),
                    ),
                },
                Err(e) => (false, format!("error: {e}")),
            }
        };
        for a in ["1", "i", "-3"] {
            let phi = FormalDeformation::phi_a(&alg, &gr(a), order);
            let (ok, d) = describe(deformation_check(&alg, &phi, order));
            r.check(format!("n={n} Phi_a, a={a}"), ok, d);
        }

        let phi = FormalDeformation::phi_a(&alg, &GaussianRational::one(), order);
        let mut same = true;
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = deformation_defect(&alg, &phi, 1, i, j);
                let rhs = cobord1_basis(&alg, phi.coeff(1), i, j);
                same &= lhs.is_ok() && lhs == rhs;
            }
        }
        r.check(
            format!("n={n} order-1 identity is the cocycle condition"),
            same,
            "all basis pairs",
        );

        let mut broken = phi.clone();
        let mut c: Cochain1 = broken.coeff(1).clone();
        let s = alg.phase();
        c.set(0, Polynomial::var(s, s.q(1)));
        broken.set_coeff(1, c);
        let fail = deformation_check(&alg, &broken, order).map(|rep| rep.failure.map(|f| f.0));
        r.check(
            format!("n={n} broken cochain fails at order 1"),
            fail == Ok(Some(1)),
            format!("{fail:?}"),
        );

        let base = FormalDeformation::phi_a(&alg, &gr("2"), derived_order);
        let cs = [gr("1"), gr("2"), gr("-1/2"), gr("i")];
        match reparametrize(&alg, &base, &cs, derived_order) {
            Ok(re) => {
                let (ok, d) = describe(deformation_check(&alg, &re, derived_order));
                r.check(format!("n={n} reparametrized"), ok, d);
                r.check(
                    format!("n={n} reparametrized differs at order 2"),
                    re.coeff(2) != base.coeff(2),
                    "Phi^c_2 != Phi_2",
                );
            }
            Err(e) => r.error(format!("n={n} reparametrize"), e),
        }

        let series = equivalence_series(&alg);
        let res = apply_equivalence(&alg, &series, &base, derived_order).and_then(|psi| {
            let inv = star_inverse_series(&series, derived_order)?;
            let back = apply_equivalence(&alg, &inv, &psi, derived_order)?;
            Ok((psi, back))
        });
        match res {
            Ok((psi, back)) => {
                let (ok, d) = describe(deformation_check(&alg, &psi, derived_order));
                r.check(format!("n={n} conjugated"), ok, d);
                r.check(
                    format!("n={n} inverse conjugation recovers Phi"),
                    back == base,
                    format!("orders 0..={derived_order}"),
                );
            }
            Err(e) => r.error(format!("n={n} apply_equivalence"), e),
        }
    }
    r
}

/// Solved su(1,n) Gram tables equal the closed form; negative integers
/// are rejected; the tables pass the skew check; at integer `lambda = m`
/// the values are `(m-1)! p! / (m+|p|-1)!`.
pub fn gram(ns: &[usize], lambdas: &[&str], pmax: u32) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[6],
        "invariant Hermitian forms for the rho^lambda family",
    );
    for &n in ns {
        for &l in lambdas {
            let param = RepParam::generic(n, gr(l));
            match (
                gram_solve(&param, RealForm::Noncompact, pmax),
                gram_discrete(&param, pmax),
            ) {
                (Ok(s), Ok(d)) => {
                    r.check(
                        format!("n={n} lambda={l} solved = closed form"),
                        s == d,
                        format!("{} values", d.values.len()),
                    );
                    let skew = skew_check(&param, RealForm::Noncompact, &d, pmax);
                    r.check(
                        format!("n={n} lambda={l} skew check"),
                        skew == Ok(true),
                        format!("{skew:?}"),
                    );
                    r.check(
                        format!("n={n} lambda={l} positive"),
                        d.all_positive(),
                        "all values > 0",
                    );
                    if let Some(m) = param.lambda.to_i64().filter(|&m| m >= 1) {
                        let m = m as u32;
                        let ok = d.values.iter().all(|(p, v)| {
                            let f = &(&factorial(m - 1) * &p.factorial())
                                / &factorial(m + p.degree() - 1);
                            *v == f
                        });
                        r.check(
                            format!("n={n} lambda={l} = (m-1)!p!/(m+|p|-1)!"),
                            ok,
                            "all |p| <= pmax",
                        );
                    }
                }
                (s, d) => r.check(
                    format!("n={n} lambda={l}"),
                    false,
                    format!("solve: {:?}, closed form: {:?}", s.err(), d.err()),
                ),
            }
        }
        for k in 0..=3i64 {
            let param = RepParam::generic(n, GaussianRational::from_int(-k));
            let rej = gram_discrete(&param, pmax);
            r.check(
                format!("n={n} lambda={} rejected", -k),
                matches!(rej, Err(Error::NegativeNatural(_))),
                format!("{:?}", rej.err()),
            );
        }
    }
    r
}

/// `P_{m(a)}` is found exactly when `m(a)` is a natural number; absence is
/// certified otherwise.
pub fn invariant_subspace(ns: &[usize], ms: &[u32], controls: &[&str], dmax: u32) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[7],
        "finite-dimensional invariant subspaces of rho_a",
    );
    for &n in ns {
        for &m in ms {
            let a = a_of_m(n, &GaussianRational::from_int(m.into()));
            match invariant_subspace_scan(n, &a, dmax) {
                Ok(rep) => {
                    let dim = binomial(n as u32 + m, n as u32).to_i64();
                    let got = rep
                        .subspace
                        .as_ref()
                        .map(|s| (s.degree, s.dimension as i64));
                    let ok = rep.found() == Some(m)
                        && got.map(|g| Some(g.1)) == Some(dim)
                        && rep.formulas_hold();
                    r.check(
                        format!("n={n} m(a)={m} finds P_{m}"),
                        ok,
                        format!("{got:?}"),
                    );
                }
                Err(e) => r.error(format!("n={n} m(a)={m}"), e),
            }
        }
        for &c in controls {
            let a = a_of_m(n, &gr(c));
            match invariant_subspace_scan(n, &a, dmax) {
                Ok(rep) => r.check(
                    format!("n={n} m(a)={c} none up to degree {dmax}"),
                    rep.certifies_absence(),
                    format!(
                        "{} escaping degrees",
                        rep.degrees.iter().filter(|d| d.escapes()).count()
                    ),
                ),
                Err(e) => r.error(format!("n={n} m(a)={c}"), e),
            }
        }
    }
    r
}

/// One row of the SU(2) table.
#[derive(Clone, Debug, serde::Serialize, PartialEq, Eq)]
pub struct Su2Row {
    pub m: u32,
    pub dimension: usize,
    pub weights: Vec<String>,
    pub casimir: Option<String>,
    pub irreducible: bool,
    pub positive_gram: bool,
}

pub fn su2_row(m: u32) -> Result<Su2Row, Error> {
    let dimension = TruncatedRep::new(1, m).dim();
    let w = reps::weights(1, m)?;
    let weights = w
        .weights
        .iter()
        .map(|(v, _)| v.coords[0].to_string())
        .collect();
    let casimir = reps::casimir_scalar(1, m).ok().map(|c| c.to_string());
    let irreducible = reps::irreducibility_check(1, m)?;
    let param = RepParam::compact(1, m);
    let g = gram_solve(&param, RealForm::Compact, m)?;
    let positive_gram = g.all_positive() && skew_check(&param, RealForm::Compact, &g, m)?;
    Ok(Su2Row {
        m,
        dimension,
        weights,
        casimir,
        irreducible,
        positive_gram,
    })
}

/// `rho^{-m}` on `P_m` for `n = 1`, `m = 0..=mmax`.
pub fn su2(mmax: u32) -> SuiteReport {
    let mut r = SuiteReport::new(SUITE_IDS[8], "unitary irreducibles of SU(2) from P_m");
    for m in 0..=mmax {
        match su2_row(m) {
            Ok(row) => {
                let expect: Vec<String> = (0..=m)
                    .map(|k| (i64::from(m) - 2 * i64::from(k)).to_string())
                    .collect();
                r.check(
                    format!("m={m} dimension"),
                    row.dimension == m as usize + 1,
                    row.dimension.to_string(),
                );
                r.check(
                    format!("m={m} weights"),
                    row.weights == expect,
                    row.weights.join(","),
                );
                r.check(
                    format!("m={m} scalar Casimir"),
                    row.casimir.is_some(),
                    row.casimir.clone().unwrap_or("not scalar".into()),
                );
                r.check(
                    format!("m={m} irreducible"),
                    row.irreducible,
                    row.irreducible.to_string(),
                );
                r.check(
                    format!("m={m} positive invariant Gram"),
                    row.positive_gram,
                    row.positive_gram.to_string(),
                );
            }
            Err(e) => r.error(format!("m={m}"), e),
        }
    }
    r
}

pub fn heisenberg(ns: &[usize]) -> SuiteReport {
    let mut r = SuiteReport::new(
        SUITE_IDS[9],
        "Heisenberg subalgebra and its coordinate functions",
    );
    for &n in ns {
        match heisenberg_check(n) {
            Ok(h) => {
                r.check(
                    format!("n={n} dimension 2n-1"),
                    h.dimension == 2 * n - 1,
                    h.dimension.to_string(),
                );
                r.check(
                    format!("n={n} closed, center {}", h.center),
                    h.closes && h.only_expected_brackets,
                    h.labels.join(","),
                );
                r.check(
                    format!("n={n} coordinate functions"),
                    h.tilde_identities,
                    format!("center -> {}", h.center_tilde),
                );
                r.check(
                    format!("n={n} Poisson brackets match"),
                    h.tilde_brackets,
                    h.tilde_brackets.to_string(),
                );
            }
            Err(e) => r.error(format!("n={n}"), e),
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definition_of_w_on_simple_symbols() {
        let s = Space::phase(1);
        let pos = Space::position(1);
        let phi = Polynomial::parse(&pos, "p1^2").unwrap();
        let q = Polynomial::parse(&s, "q1").unwrap();
        assert_eq!(
            weyl_by_definition(&q, &phi),
            Polynomial::parse(&pos, "2*i*p1").unwrap()
        );
        let pq = Polynomial::parse(&s, "p1*q1").unwrap();
        assert_eq!(
            weyl_by_definition(&pq, &phi),
            Polynomial::parse(&pos, "5/2*i*p1^2").unwrap()
        );
    }

    #[test]
    fn random_polynomials_are_seeded() {
        let a = random_polynomial(&mut ChaCha8Rng::seed_from_u64(3), 2, 5, 3);
        let b = random_polynomial(&mut ChaCha8Rng::seed_from_u64(3), 2, 5, 3);
        assert_eq!(a, b);
        assert!(a.degree().unwrap_or(0) <= 5);
    }

    #[test]
    fn small_suites_pass() {
        assert!(heisenberg(&[2]).passed);
        assert!(su2(2).passed);
        assert!(gram(&[1], &["3"], 3).passed);
    }

    #[test]
    fn broken_inputs_are_reported() {
        let r = tilde_homomorphism(&[0]);
        assert!(!r.passed);
        assert!(r.checks[0].detail.starts_with("error:"));
        let r = gram(&[1], &["-1"], 2);
        assert!(!r.passed);
    }
}
