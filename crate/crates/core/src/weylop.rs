//! Differential operators with polynomial coefficients in normal order,
//! the Weyl correspondence on polynomial symbols, and the minimal
//! realization `rho_0(X) = W(i X~)`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::liealg::{MatrixG, SlAlgebra};
use crate::poly::{fmt_monomial, MultiIndex, Polynomial, Space, SpaceKind};
use crate::scalar::GaussianRational;

/// `sum_beta c_beta(x) d^beta`, coefficients to the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    space: Space,
    terms: BTreeMap<MultiIndex, Polynomial>,
}

impl DiffOperator {
    pub fn zero(space: &Space) -> Self {
        Self {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(space: &Space) -> Self {
        Self::multiplication(&Polynomial::one(space))
    }

    pub fn multiplication(u: &Polynomial) -> Self {
        let mut op = Self::zero(u.space());
        op.add_term(MultiIndex::zero(u.space().arity()), u.clone());
        op
    }

    /// `d / d x_var`.
    pub fn derivative(space: &Space, var: usize) -> Self {
        let mut op = Self::zero(space);
        op.add_term(MultiIndex::unit(space.arity(), var), Polynomial::one(space));
        op
    }

    pub fn from_terms<I>(space: &Space, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Polynomial)>,
    {
        let mut op = Self::zero(space);
        for (beta, c) in terms {
            c.space().check_same(space)?;
            if beta.arity() != space.arity() {
                return Err(Error::DimensionMismatch(alloc::format!(
                    "derivative index of arity {} on {}",
                    beta.arity(),
                    space
                )));
            }
            op.add_term(beta, c);
        }
        Ok(op)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, beta: &MultiIndex) -> Polynomial {
        self.terms
            .get(beta)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.space))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order, `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// Highest coefficient degree.
    pub fn coefficient_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Polynomial::degree).max()
    }

    fn add_term(&mut self, beta: MultiIndex, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&beta) {
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(beta, sum);
                }
            }
            None => {
                self.terms.insert(beta, c);
            }
        }
    }

    pub fn add(&self, rhs: &DiffOperator) -> Result<DiffOperator> {
        self.space.check_same(&rhs.space)?;
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &DiffOperator) -> Result<DiffOperator> {
        self.add(&rhs.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> DiffOperator {
        let mut out = Self::zero(&self.space);
        for (b, p) in &self.terms {
            out.add_term(b.clone(), p.scale(c));
        }
        out
    }

    /// Moves the operator to an isomorphic space (`p_k <-> z_k`).
    pub fn relabel(&self, target: &Space) -> Result<DiffOperator> {
        let mut out = Self::zero(target);
        for (b, c) in &self.terms {
            out.terms.insert(b.clone(), c.relabel(target)?);
        }
        Ok(out)
    }

    /// `[A, B] = A o B - B o A`.
    pub fn commutator(&self, rhs: &DiffOperator) -> Result<DiffOperator> {
        op_compose(self, rhs)?.sub(&op_compose(rhs, self)?)
    }

    /// The scalar `c` when the operator is multiplication by a constant.
    pub fn scalar_value(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (b, c) = self.terms.iter().next()?;
                (b.is_zero() && c.degree() == Some(0)).then(|| c.constant_term())
            }
            _ => None,
        }
    }
}

/// Text form: one `(c)*monomial*d[x]^k` item per coefficient term,
/// grouped by derivative in ascending order, e.g. `(-1) + (-2)*p1*d[p1]`.
impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.space.names();
        let mut first = true;
        for (beta, c) in &self.terms {
            let mut d = Vec::new();
            for (name, &e) in names.iter().zip(beta.exps()) {
                match e {
                    0 => {}
                    1 => d.push(alloc::format!("d[{name}]")),
                    e => d.push(alloc::format!("d[{name}]^{e}")),
                }
            }
            for (m, v) in c.terms() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "({v})")?;
                let mono = fmt_monomial(names, m);
                if !mono.is_empty() {
                    write!(f, "*{mono}")?;
                }
                for x in &d {
                    write!(f, "*{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `W(u(p) q^alpha) = i^|alpha| sum_{beta <= alpha} binom(alpha, beta)
/// 2^-|beta| (d^beta u) d^(alpha - beta)`, extended linearly. The result
/// acts on the position space `p_1..p_n`.
pub fn weyl_w(f: &Polynomial) -> Result<DiffOperator> {
    if f.space().kind() != SpaceKind::Phase {
        return Err(Error::SpaceMismatch {
            left: f.space().to_string(),
            right: String::from("phase space"),
        });
    }
    let n = f.space().half();
    let pos = Space::position(n);
    let half = GaussianRational::from_frac(1, 2);
    let mut out = DiffOperator::zero(&pos);
    for (m, c) in f.terms() {
        let a = MultiIndex::new(m.exps()[..n].to_vec());
        let alpha = MultiIndex::new(m.exps()[n..].to_vec());
        let lead = c * &GaussianRational::i().powi(alpha.degree() as i32);
        for beta in alpha.divisors() {
            let Some((k, rest)) = a.derive(&beta) else {
                continue;
            };
            let coef = &(&(&lead * &alpha.binomial(&beta)) * &half.powi(beta.degree() as i32)) * &k;
            let order = alpha.checked_sub(&beta).expect("beta <= alpha");
            out.add_term(order, Polynomial::monomial(&pos, rest, coef));
        }
    }
    Ok(out)
}

/// Normal-ordered `A o B`:
/// `c_b d^b o e_g d^g = c_b sum_{d <= b} binom(b, d) (d^d e_g) d^(b - d + g)`.
pub fn op_compose(a: &DiffOperator, b: &DiffOperator) -> Result<DiffOperator> {
    a.space.check_same(&b.space)?;
    let mut out = DiffOperator::zero(&a.space);
    for (beta, c) in &a.terms {
        for delta in beta.divisors() {
            let bin = beta.binomial(&delta);
            let rest = beta.checked_sub(&delta).expect("delta <= beta");
            for (gamma, e) in &b.terms {
                let de = e.derive(&delta);
                if de.is_zero() {
                    continue;
                }
                out.add_term(rest.add(gamma), (c * &de).scale(&bin));
            }
        }
    }
    Ok(out)
}

pub fn op_apply(a: &DiffOperator, f: &Polynomial) -> Result<Polynomial> {
    a.space.check_same(f.space())?;
    let mut out = Polynomial::zero(&a.space);
    for (beta, c) in &a.terms {
        let df = f.derive(beta);
        if !df.is_zero() {
            out = &out + &(c * &df);
        }
    }
    Ok(out)
}

/// `rho_0(X) = W(i X~)`, acting on `p_1..p_n`.
pub fn minimal_realization(alg: &SlAlgebra, x: &MatrixG) -> Result<DiffOperator> {
    weyl_w(&alg.tilde(x).scale(&GaussianRational::i()))
}

/// `rho_0` on every basis element, in basis order.
pub fn minimal_realization_basis(alg: &SlAlgebra) -> Result<Vec<DiffOperator>> {
    (0..alg.dim())
        .map(|i| weyl_w(&alg.tilde_basis(i).scale(&GaussianRational::i())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moyal::star;

    fn ph(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Space::phase(n), s).unwrap()
    }

    fn pos(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Space::position(n), s).unwrap()
    }

    fn d(n: usize, k: usize) -> DiffOperator {
        DiffOperator::derivative(&Space::position(n), k - 1)
    }

    #[test]
    fn weyl_examples() {
        let u = ph(2, "p1^2 - 3*p2 + i");
        assert_eq!(weyl_w(&u).unwrap().to_string(), "(i) + (-3)*p2 + (1)*p1^2");
        // i((1/2) + p1 d1)
        let w = weyl_w(&ph(1, "p1*q1")).unwrap();
        let expect = DiffOperator::multiplication(&pos(1, "1/2*i"))
            .add(&op_compose(&DiffOperator::multiplication(&pos(1, "i*p1")), &d(1, 1)).unwrap())
            .unwrap();
        assert_eq!(w, expect);
        assert_eq!(
            weyl_w(&ph(1, "q1")).unwrap(),
            d(1, 1).scale(&GaussianRational::i())
        );
        let q1 = ph(1, "q1");
        let lhs = weyl_w(&star(&q1, &q1).unwrap()).unwrap();
        let rhs = op_compose(&weyl_w(&q1).unwrap(), &weyl_w(&q1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "(-1)*d[p1]^2");
        assert!(weyl_w(&pos(1, "p1")).is_err());
    }

    #[test]
    fn compose_and_apply() {
        let s = Space::position(1);
        let p1 = DiffOperator::multiplication(&pos(1, "p1"));
        assert_eq!(
            op_compose(&d(1, 1), &p1).unwrap().to_string(),
            "(1) + (1)*p1*d[p1]"
        );
        let a = weyl_w(&ph(1, "p1^2*q1 + q1^3")).unwrap();
        assert_eq!(op_compose(&a, &DiffOperator::identity(&s)).unwrap(), a);
        assert_eq!(op_compose(&DiffOperator::identity(&s), &a).unwrap(), a);
        let euler = op_compose(&p1, &d(1, 1)).unwrap();
        assert_eq!(op_apply(&euler, &pos(1, "p1^3")).unwrap(), pos(1, "3*p1^3"));
        assert!(op_apply(&a, &Polynomial::zero(&s)).unwrap().is_zero());
        assert_eq!(
            op_apply(&weyl_w(&ph(1, "q1")).unwrap(), &pos(1, "p1^2")).unwrap(),
            pos(1, "2*i*p1")
        );
        assert!(op_apply(&a, &pos(2, "p1")).is_err());
    }

    #[test]
    fn minimal_realization_examples() {
        let alg = SlAlgebra::new(1).unwrap();
        let r = minimal_realization(&alg, &MatrixG::e(1, 2, 1)).unwrap();
        assert_eq!(r.to_string(), "(-1)*d[p1]");
        let r = minimal_realization(&alg, &MatrixG::h(1, 1)).unwrap();
        assert_eq!(r.to_string(), "(-1) + (-2)*p1*d[p1]");
        let ops = minimal_realization_basis(&alg).unwrap();
        let b = alg.basis();
        for i in 0..3 {
            for j in 0..3 {
                let lhs = ops[i].commutator(&ops[j]).unwrap();
                let rhs = minimal_realization(&alg, &b.element(i).bracket(b.element(j))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn relabel_and_scalar() {
        let z = Space::representation(1);
        let r = d(1, 1).relabel(&z).unwrap();
        assert_eq!(r.to_string(), "(1)*d[z1]");
        assert!(d(1, 1).relabel(&Space::representation(2)).is_err());
        assert_eq!(
            DiffOperator::multiplication(&pos(1, "7")).scalar_value(),
            Some(GaussianRational::from_int(7))
        );
        assert_eq!(d(1, 1).scalar_value(), None);
    }
}
