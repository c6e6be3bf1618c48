//! Sparse multivariate polynomials over `Q(i)` on named variable spaces.
//!
//! Terms are kept in graded reverse-lexicographic key order: lower total
//! degree first, and within a degree the larger exponent on an earlier
//! variable first (`p1` before `p2` before `q1`). This order drives every
//! printed form, so output is reproducible.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceKind {
    /// `p1..pn, q1..qn`.
    Phase,
    /// `p1..pn`, the space the Weyl operators act on.
    Position,
    /// `z1..zn`, the representation space.
    Representation,
    Custom,
}

/// A variable-space descriptor: an ordered list of variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Space {
    kind: SpaceKind,
    names: Arc<[String]>,
}

impl Space {
    pub fn phase(n: usize) -> Self {
        let names = (1..=n)
            .map(|k| format!("p{k}"))
            .chain((1..=n).map(|k| format!("q{k}")))
            .collect();
        Self {
            kind: SpaceKind::Phase,
            names,
        }
    }

    pub fn position(n: usize) -> Self {
        Self {
            kind: SpaceKind::Position,
            names: (1..=n).map(|k| format!("p{k}")).collect(),
        }
    }

    pub fn representation(n: usize) -> Self {
        Self {
            kind: SpaceKind::Representation,
            names: (1..=n).map(|k| format!("z{k}")).collect(),
        }
    }

    pub fn custom<S: AsRef<str>>(names: &[S]) -> Self {
        Self {
            kind: SpaceKind::Custom,
            names: names.iter().map(|s| String::from(s.as_ref())).collect(),
        }
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownVariable(String::from(name)))
    }

    /// Half the arity of a phase space.
    pub fn half(&self) -> usize {
        self.arity() / 2
    }

    /// Index of `p_k` (1-based `k`) in a phase or position space.
    pub fn p(&self, k: usize) -> usize {
        k - 1
    }

    /// Index of `q_k` (1-based `k`) in a phase space.
    pub fn q(&self, k: usize) -> usize {
        debug_assert_eq!(self.kind, SpaceKind::Phase);
        self.half() + k - 1
    }

    /// The declared isomorphism `p_k <-> z_k` between position and
    /// representation spaces of equal arity.
    pub fn isomorphic(&self, other: &Space) -> bool {
        use SpaceKind::*;
        self == other
            || (matches!(
                (self.kind, other.kind),
                (Position, Representation) | (Representation, Position)
            ) && self.arity() == other.arity())
    }

    pub(crate) fn check_same(&self, other: &Space) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpaceMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        Self(exps)
    }

    pub fn zero(arity: usize) -> Self {
        Self(vec![0; arity])
    }

    pub fn unit(arity: usize, var: usize) -> Self {
        let mut e = vec![0; arity];
        e[var] = 1;
        Self(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `p! = prod p_i!` as an exact scalar.
    pub fn factorial(&self) -> GaussianRational {
        self.0
            .iter()
            .fold(GaussianRational::one(), |acc, &e| &acc * &factorial(e))
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` unless `other <= self` componentwise.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn with(&self, var: usize, exp: u32) -> MultiIndex {
        let mut e = self.0.clone();
        e[var] = exp;
        MultiIndex(e)
    }

    /// Coefficient produced by `d^beta x^self`, i.e. `prod a!/(a-b)!`,
    /// together with the remaining exponent; `None` if it vanishes.
    pub fn derive(&self, beta: &MultiIndex) -> Option<(GaussianRational, MultiIndex)> {
        let rest = self.checked_sub(beta)?;
        let mut c: i64 = 1;
        let mut big = GaussianRational::one();
        for (a, b) in self.0.iter().zip(&beta.0) {
            for k in 0..*b {
                let f = i64::from(a - k);
                match c.checked_mul(f) {
                    Some(v) => c = v,
                    None => {
                        big = &big * &GaussianRational::from_int(c);
                        c = f;
                    }
                }
            }
        }
        Some((&big * &GaussianRational::from_int(c), rest))
    }

    /// All multi-indices of the given arity with total degree `<= max`,
    /// in canonical order.
    pub fn all_up_to(arity: usize, max: u32) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = (0..=max)
            .flat_map(|d| Self::all_of_degree(arity, d))
            .collect();
        out.sort();
        out
    }

    /// All multi-indices of the given arity and total degree exactly `d`.
    pub fn all_of_degree(arity: usize, d: u32) -> Vec<MultiIndex> {
        fn rec(prefix: &mut Vec<u32>, left: usize, rem: u32, out: &mut Vec<MultiIndex>) {
            if left == 1 {
                prefix.push(rem);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=rem).rev() {
                prefix.push(e);
                rec(prefix, left - 1, rem - e, out);
                prefix.pop();
            }
        }
        if arity == 0 {
            return if d == 0 {
                vec![MultiIndex(Vec::new())]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(arity), arity, d, &mut out);
        out
    }

    /// Every `beta <= self` componentwise.
    pub fn divisors(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::<u32>::new()];
        for &a in &self.0 {
            out = out
                .into_iter()
                .flat_map(|pre| {
                    (0..=a).map(move |b| {
                        let mut v = pre.clone();
                        v.push(b);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }

    /// `prod binom(self_i, beta_i)`.
    pub fn binomial(&self, beta: &MultiIndex) -> GaussianRational {
        let mut acc = GaussianRational::one();
        for (a, b) in self.0.iter().zip(&beta.0) {
            acc = &acc * &binomial(*a, *b);
        }
        acc
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn factorial(n: u32) -> GaussianRational {
    let mut acc = num_bigint::BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    GaussianRational::from_rational(num_rational::BigRational::from_integer(acc))
}

pub fn binomial(n: u32, k: u32) -> GaussianRational {
    if k > n {
        return GaussianRational::zero();
    }
    let mut acc = num_bigint::BigInt::from(1);
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    GaussianRational::from_rational(num_rational::BigRational::from_integer(acc))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A polynomial: a canonical sparse map from exponent vectors to nonzero
/// coefficients on a fixed [`Space`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    space: Space,
    terms: BTreeMap<MultiIndex, GaussianRational>,
}

impl Polynomial {
    pub fn zero(space: &Space) -> Self {
        Self {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(space: &Space, c: GaussianRational) -> Self {
        Self::monomial(space, MultiIndex::zero(space.arity()), c)
    }

    pub fn one(space: &Space) -> Self {
        Self::constant(space, GaussianRational::one())
    }

    pub fn var(space: &Space, var: usize) -> Self {
        Self::monomial(
            space,
            MultiIndex::unit(space.arity(), var),
            GaussianRational::one(),
        )
    }

    pub fn monomial(space: &Space, exps: MultiIndex, c: GaussianRational) -> Self {
        assert_eq!(exps.arity(), space.arity(), "exponent arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self {
            space: space.clone(),
            terms,
        }
    }

    /// Builds from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(space: &Space, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, GaussianRational)>,
    {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &MultiIndex) -> GaussianRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// Degree in the given subset of variables.
    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.exps()[v]).sum())
            .max()
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&MultiIndex::zero(self.space.arity()))
    }

    pub(crate) fn add_term(&mut self, m: MultiIndex, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.arity(), self.space.arity());
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Exact `lhs op rhs`; fails when the spaces differ.
    pub fn arith(lhs: &Polynomial, rhs: &Polynomial, op: ArithOp) -> Result<Polynomial> {
        lhs.space.check_same(&rhs.space)?;
        Ok(match op {
            ArithOp::Add => lhs.add_unchecked(rhs, false),
            ArithOp::Sub => lhs.add_unchecked(rhs, true),
            ArithOp::Mul => lhs.mul_unchecked(rhs),
        })
    }

    fn add_unchecked(&self, rhs: &Polynomial, negate: bool) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            if negate {
                out.add_term(m.clone(), &-c);
            } else {
                out.add_term(m.clone(), c);
            }
        }
        out
    }

    fn mul_unchecked(&self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.space);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.add(b), &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.space);
        }
        Polynomial {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &MultiIndex, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.space);
        }
        Polynomial {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.add(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.space);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Formal partial derivative with respect to the variable index.
    pub fn partial(&self, var: usize) -> Result<Polynomial> {
        if var >= self.space.arity() {
            return Err(Error::UnknownVariable(format!("#{var}")));
        }
        Ok(self.derive(&MultiIndex::unit(self.space.arity(), var)))
    }

    /// Partial derivative by variable name.
    pub fn partial_by_name(&self, name: &str) -> Result<Polynomial> {
        self.partial(self.space.var(name)?)
    }

    /// Mixed derivative `d^beta`.
    pub fn derive(&self, beta: &MultiIndex) -> Polynomial {
        let mut out = Polynomial::zero(&self.space);
        for (m, c) in &self.terms {
            if let Some((k, rest)) = m.derive(beta) {
                out.add_term(rest, &(c * &k));
            }
        }
        out
    }

    /// Homogeneous components by total degree, ascending; empty degrees
    /// are omitted.
    pub fn homogeneous_components(&self) -> Vec<(u32, Polynomial)> {
        self.graded_by(|m| m.degree())
    }

    /// Components graded by the total degree in a subset of the variables.
    pub fn homogeneous_components_in(&self, vars: &[usize]) -> Vec<(u32, Polynomial)> {
        self.graded_by(|m| vars.iter().map(|&v| m.exps()[v]).sum())
    }

    fn graded_by(&self, grade: impl Fn(&MultiIndex) -> u32) -> Vec<(u32, Polynomial)> {
        let mut parts: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(grade(m))
                .or_insert_with(|| Polynomial::zero(&self.space))
                .add_term(m.clone(), c);
        }
        parts.into_iter().collect()
    }

    /// Part of total degree `<= d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.space.arity() {
            return Err(Error::DimensionMismatch(format!(
                "point of length {} for {} variables",
                point.len(),
                self.space.arity()
            )));
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &x.powi(e as i32);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Moves the polynomial to an isomorphic space (`p_k <-> z_k`).
    pub fn relabel(&self, target: &Space) -> Result<Polynomial> {
        if !self.space.isomorphic(target) {
            return Err(Error::SpaceMismatch {
                left: self.space.to_string(),
                right: target.to_string(),
            });
        }
        Ok(Polynomial {
            space: target.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Re-indexes variables: variable `k` of `self` becomes `map[k]` in
    /// `target`.
    pub fn embed(&self, target: &Space, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.space.arity());
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.arity()];
            for (k, &x) in m.exps().iter().enumerate() {
                e[map[k]] += x;
            }
            out.add_term(MultiIndex::new(e), c);
        }
        out
    }

    /// True iff every term has the given total degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Reads the printed form back on a given space.
    pub fn parse(space: &Space, s: &str) -> Result<Polynomial> {
        crate::parse::parse_polynomial(space, s)
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Add).expect("space mismatch")
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Sub).expect("space mismatch")
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::arith(self, rhs, ArithOp::Mul).expect("space mismatch")
    }
}

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&GaussianRational::from_int(-1))
    }
}

pub(crate) fn fmt_monomial(names: &[String], m: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Prints terms in canonical order, e.g. `1 + 3/2*p1^2*q2 - 1/2*i*q1`.
/// Real negative coefficients become subtraction; coefficients with
/// both parts nonzero are parenthesized.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative =
                c.is_real() && c.re().is_negative() || c.re().is_zero() && c.im().is_negative();
            let shown = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = fmt_monomial(&self.space.names, m);
            let coef = if !shown.is_real() && !shown.re().is_zero() {
                format!("({shown})")
            } else {
                shown.to_string()
            };
            match (mono.is_empty(), shown.is_one()) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{coef}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Constructive Poincare lemma for polynomial gradients.
///
/// Given `fields[k] = F_k` and the variables `vars[k]` they pair with,
/// returns `F` with `dF/dvars[k] = F_k` and no term of degree zero in
/// `vars`; other variables act as parameters. Each part of `F_k` that is
/// homogeneous of degree `d` in `vars` contributes `vars[k] * F_k / (d+1)`.
pub fn potential_in(fields: &[Polynomial], vars: &[usize]) -> Result<Polynomial> {
    if fields.len() != vars.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} components for {} variables",
            fields.len(),
            vars.len()
        )));
    }
    let Some(first) = fields.first() else {
        return Err(Error::DimensionMismatch(String::from("empty gradient")));
    };
    let space = first.space().clone();
    for f in fields {
        space.check_same(f.space())?;
    }
    for i in 0..fields.len() {
        for j in (i + 1)..fields.len() {
            if fields[i].partial(vars[j])? != fields[j].partial(vars[i])? {
                return Err(Error::NotClosed { i: i + 1, j: j + 1 });
            }
        }
    }
    let mut out = Polynomial::zero(&space);
    for (f, &v) in fields.iter().zip(vars) {
        for (d, part) in f.homogeneous_components_in(vars) {
            let scale = GaussianRational::from_frac(1, i64::from(d) + 1);
            out = &out + &part.mul_monomial(&MultiIndex::unit(space.arity(), v), &scale);
        }
    }
    Ok(out)
}

/// [`potential_in`] for polynomials in `q1..qn` on a phase space, or in
/// all variables of any other space.
pub fn potential(fields: &[Polynomial]) -> Result<Polynomial> {
    let Some(first) = fields.first() else {
        return Err(Error::DimensionMismatch(String::from("empty gradient")));
    };
    let space = first.space();
    let vars: Vec<usize> = if space.kind() == SpaceKind::Phase {
        (1..=space.half()).map(|k| space.q(k)).collect()
    } else {
        (0..space.arity()).collect()
    };
    potential_in(fields, &vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(s: &str) -> Polynomial {
        Polynomial::parse(&Space::phase(2), s).unwrap()
    }

    #[test]
    fn ring_examples() {
        let a = ph("p1 + q1");
        let b = ph("p1 - q1");
        assert_eq!(&a * &b, ph("p1^2 - q1^2"));
        assert!((&a * &Polynomial::zero(&Space::phase(2))).is_zero());
        assert_eq!(&ph("p1*q1") * &ph("p1*q1"), ph("p1^2*q1^2"));
        let other = Polynomial::one(&Space::representation(2));
        assert!(matches!(
            Polynomial::arith(&a, &other, ArithOp::Add),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn partial_examples() {
        let s = Space::phase(2);
        assert_eq!(ph("p1*q1^2").partial(s.q(1)).unwrap(), ph("2*p1*q1"));
        assert!(ph("p1*q1").partial(s.p(2)).unwrap().is_zero());
        assert_eq!(
            ph("p1^2*q2 + p1").partial(s.p(1)).unwrap(),
            ph("2*p1*q2 + 1")
        );
        assert!(ph("p1").partial(7).is_err());
        assert!(ph("p1").partial_by_name("z1").is_err());
    }

    #[test]
    fn homogeneous_examples() {
        let comps = ph("1 + q1 + q1*q2").homogeneous_components();
        assert_eq!(comps, vec![(0, ph("1")), (1, ph("q1")), (2, ph("q1*q2"))]);
        assert!(ph("0").homogeneous_components().is_empty());
        assert_eq!(
            ph("q1^2 + q2^2").homogeneous_components(),
            vec![(2, ph("q1^2 + q2^2"))]
        );
    }

    #[test]
    fn potential_examples() {
        let s = Space::phase(2);
        let f = potential(&[ph("q2"), ph("q1")]).unwrap();
        assert_eq!(f, ph("q1*q2"));
        let f = potential(&[ph("2*q1"), ph("3*q2^2")]).unwrap();
        // check by differentiating the output
        assert_eq!(f.partial(s.q(1)).unwrap(), ph("2*q1"));
        assert_eq!(f.partial(s.q(2)).unwrap(), ph("3*q2^2"));
        assert_eq!(f, ph("q1^2 + q2^3"));
        assert_eq!(
            potential(&[ph("q2"), ph("-q1")]),
            Err(Error::NotClosed { i: 1, j: 2 })
        );
    }

    #[test]
    fn canonical_order() {
        let p = ph("q1 + p2 + p1 + 1 + p1^2");
        let keys: Vec<String> = p
            .terms()
            .map(|(m, _)| fmt_monomial(p.space().names(), m))
            .collect();
        assert_eq!(keys, ["", "p1", "p2", "q1", "p1^2"]);
    }

    #[test]
    fn mono_enumeration() {
        assert_eq!(MultiIndex::all_up_to(4, 3).len(), 35);
        assert_eq!(MultiIndex::all_of_degree(2, 3).len(), 4);
        let m = MultiIndex::new(vec![3, 2]);
        assert_eq!(
            m.derive(&MultiIndex::new(vec![2, 1])).unwrap().0,
            GaussianRational::from_int(12)
        );
        assert!(m.derive(&MultiIndex::new(vec![4, 0])).is_none());
        assert_eq!(m.divisors().len(), 12);
    }

    #[test]
    fn relabel_declared_isomorphism() {
        let p = Polynomial::var(&Space::position(2), 1);
        let z = p.relabel(&Space::representation(2)).unwrap();
        assert_eq!(z.to_string(), "z2");
        assert!(p.relabel(&Space::representation(3)).is_err());
        assert!(p.relabel(&Space::phase(1)).is_err());
    }
}
