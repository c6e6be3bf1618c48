use proptest::prelude::*;

use minreal_core::cohom::{coboundary_of, is_cocycle, module_action};
use minreal_core::liealg::SlAlgebra;
use minreal_core::moyal::{bidiff_p, moyal_bracket, poisson, star};
use minreal_core::poly::potential_in;
use minreal_core::weylop::{op_compose, weyl_w, DiffOperator};
use minreal_core::xla::{nullspace, rank, solve, ExactMatrix, SpanBuilder};
use minreal_core::{GaussianRational, MultiIndex, Polynomial, Space};

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2, 1i64..=2)
        .prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn poly_on(space: Space, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let arity = space.arity();
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, arity), scalar()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut out = Polynomial::zero(&space);
        for (e, c) in terms {
            let m = MultiIndex::new(e);
            if m.degree() <= max_deg {
                out = &out + &Polynomial::monomial(&space, m, c);
            }
        }
        out
    })
}

fn phase(n: usize, d: u32, t: usize) -> impl Strategy<Value = Polynomial> {
    poly_on(Space::phase(n), d, t)
}

fn operator(n: usize) -> impl Strategy<Value = DiffOperator> {
    let s = Space::position(n);
    prop::collection::vec(
        (prop::collection::vec(0u32..=2, n), poly_on(s.clone(), 2, 3)),
        0..=3,
    )
    .prop_map(move |terms| {
        DiffOperator::from_terms(&s, terms.into_iter().map(|(b, c)| (MultiIndex::new(b), c)))
            .unwrap()
    })
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec(
        prop::collection::vec((-3i64..=3).prop_map(GaussianRational::from_int), cols),
        rows,
    )
    .prop_map(move |r| ExactMatrix::from_rows(cols, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in phase(2, 3, 4), b in phase(2, 3, 4), c in phase(2, 3, 4)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in phase(2, 4, 6)) {
        prop_assert_eq!(Polynomial::parse(a.space(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn mixed_partials_commute(a in phase(2, 4, 5), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(a.partial(i).unwrap().partial(j).unwrap(), a.partial(j).unwrap().partial(i).unwrap());
    }

    #[test]
    fn potential_inverts_gradient(a in phase(2, 4, 5)) {
        let vars: Vec<usize> = (0..4).collect();
        let grad: Vec<_> = vars.iter().map(|&v| a.partial(v).unwrap()).collect();
        let f = potential_in(&grad, &vars).unwrap();
        let shifted = &a - &Polynomial::constant(a.space(), a.constant_term());
        prop_assert_eq!(f, shifted);
    }

    #[test]
    fn bidiff_antisymmetry(u in phase(2, 3, 3), v in phase(2, 3, 3), l in 0u32..=3) {
        let sign = GaussianRational::from_int(if l % 2 == 0 { 1 } else { -1 });
        prop_assert_eq!(bidiff_p(l, &u, &v).unwrap(), bidiff_p(l, &v, &u).unwrap().scale(&sign));
    }

    #[test]
    fn first_order_is_poisson(u in phase(2, 3, 3), v in phase(2, 3, 3)) {
        prop_assert_eq!(bidiff_p(1, &u, &v).unwrap(), poisson(&u, &v).unwrap());
    }

    #[test]
    fn bracket_is_normalized_commutator(u in phase(1, 4, 3), v in phase(1, 4, 3)) {
        let comm = &star(&u, &v).unwrap() - &star(&v, &u).unwrap();
        prop_assert_eq!(moyal_bracket(&u, &v).unwrap(), comm.scale(&GaussianRational::i()));
    }

    #[test]
    fn star_associative(a in phase(1, 3, 3), b in phase(1, 3, 3), c in phase(1, 3, 3)) {
        let l = star(&star(&a, &b).unwrap(), &c).unwrap();
        let r = star(&a, &star(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn weyl_multiplicative(a in phase(2, 2, 3), b in phase(2, 2, 3)) {
        let lhs = weyl_w(&star(&a, &b).unwrap()).unwrap();
        let rhs = op_compose(&weyl_w(&a).unwrap(), &weyl_w(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn compose_associative(a in operator(2), b in operator(2), c in operator(2)) {
        let l = op_compose(&op_compose(&a, &b).unwrap(), &c).unwrap();
        let r = op_compose(&a, &op_compose(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn rank_nullity(a in matrix(4, 5)) {
        let ns = nullspace(&a);
        prop_assert_eq!(rank(&a) + ns.len(), 5);
        for v in &ns {
            prop_assert!(a.mul_vec(v).unwrap().iter().all(GaussianRational::is_zero));
        }
        let mut span = SpanBuilder::new(5);
        for r in 0..4 {
            span.insert(a.row(r));
        }
        prop_assert_eq!(span.rank(), rank(&a));
    }

    #[test]
    fn solve_reproduces_rhs(a in matrix(4, 3), x in prop::collection::vec((-3i64..=3).prop_map(GaussianRational::from_int), 3)) {
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn moyal_jacobi(a in phase(2, 3, 3), b in phase(2, 3, 3), c in phase(2, 3, 3)) {
        let br = |x: &Polynomial, y: &Polynomial| moyal_bracket(x, y).unwrap();
        let s = &(&br(&a, &br(&b, &c)) + &br(&b, &br(&c, &a))) + &br(&c, &br(&a, &b));
        prop_assert!(s.is_zero());
    }

    #[test]
    fn module_axiom(f in phase(2, 3, 3), i in 0usize..8, j in 0usize..8) {
        let alg = SlAlgebra::new(2).unwrap();
        let (x, y) = (alg.basis().element(i), alg.basis().element(j));
        let xy = module_action(&alg, x, &module_action(&alg, y, &f).unwrap()).unwrap();
        let yx = module_action(&alg, y, &module_action(&alg, x, &f).unwrap()).unwrap();
        prop_assert_eq!(&xy - &yx, module_action(&alg, &x.bracket(y), &f).unwrap());
    }

    #[test]
    fn coboundaries_are_cocycles(f in phase(2, 4, 4)) {
        let alg = SlAlgebra::new(2).unwrap();
        prop_assert!(is_cocycle(&alg, &coboundary_of(&alg, &f).unwrap()).unwrap());
    }
}
