//! The family `rho^lambda` of `sl(n+1, C)` representations on
//! `C[z_1..z_n]`, the deformed family `rho_a` obtained through the Weyl
//! map, invariant Hermitian forms, invariant subspaces, weights and the
//! Casimir on the finite-dimensional quotients.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::cohom;
use crate::error::{Error, Result};
use crate::liealg::{real_form_basis, LieBasis, MatrixG, RealForm, SlAlgebra};
use crate::poly::{factorial, MultiIndex, Polynomial, Space};
use crate::scalar::GaussianRational;
use crate::weylop::{op_apply, op_compose, weyl_w, DiffOperator};
use crate::xla::{self, ExactMatrix, SpanBuilder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Generic,
    /// `lambda = m`.
    DiscreteSeries(u32),
    /// `lambda = -m`.
    Compact(u32),
    /// `lambda = -m(a)`.
    Deformation(GaussianRational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepParam {
    pub n: usize,
    pub lambda: GaussianRational,
    pub origin: Origin,
}

/// `m(a) = -(a + n + 1) / 2`.
pub fn m_of_a(n: usize, a: &GaussianRational) -> GaussianRational {
    let s = a + &GaussianRational::from_int(n as i64 + 1);
    &s * &GaussianRational::from_frac(-1, 2)
}

/// Inverse of [`m_of_a`]: `a = -2m - n - 1`.
pub fn a_of_m(n: usize, m: &GaussianRational) -> GaussianRational {
    &(m * &GaussianRational::from_int(-2)) - &GaussianRational::from_int(n as i64 + 1)
}

impl RepParam {
    pub fn generic(n: usize, lambda: GaussianRational) -> Self {
        Self {
            n,
            lambda,
            origin: Origin::Generic,
        }
    }

    pub fn discrete_series(n: usize, m: u32) -> Self {
        Self {
            n,
            lambda: GaussianRational::from_int(m.into()),
            origin: Origin::DiscreteSeries(m),
        }
    }

    pub fn compact(n: usize, m: u32) -> Self {
        Self {
            n,
            lambda: GaussianRational::from_int(-i64::from(m)),
            origin: Origin::Compact(m),
        }
    }

    pub fn deformation(n: usize, a: GaussianRational) -> Self {
        Self {
            n,
            lambda: -m_of_a(n, &a),
            origin: Origin::Deformation(a),
        }
    }
}

fn rep_space(n: usize) -> Space {
    Space::representation(n)
}

fn z(s: &Space, k: usize) -> Polynomial {
    Polynomial::var(s, k - 1)
}

fn euler(s: &Space) -> DiffOperator {
    let mut acc = DiffOperator::zero(s);
    for j in 1..=s.arity() {
        let t = op_compose(
            &DiffOperator::multiplication(&z(s, j)),
            &DiffOperator::derivative(s, j - 1),
        )
        .expect("same space");
        acc = acc.add(&t).expect("same space");
    }
    acc
}

fn mul(u: &Polynomial) -> DiffOperator {
    DiffOperator::multiplication(u)
}

fn compose(a: &DiffOperator, b: &DiffOperator) -> DiffOperator {
    op_compose(a, b).expect("same space")
}

/// The basis operators of `rho^lambda`, in [`LieBasis`] order:
///
/// ```text
/// H_k         -> -lambda - z_k d_k - sum_j z_j d_j
/// E_{1,k+1}   ->  lambda z_k + z_k sum_j z_j d_j
/// E_{k+1,1}   -> -d_k
/// E_{i+1,j+1} -> -z_j d_i
/// ```
pub fn rho_lambda_basis(param: &RepParam, basis: &LieBasis) -> Vec<DiffOperator> {
    let n = param.n;
    assert_eq!(basis.n(), n);
    let s = rep_space(n);
    let e = euler(&s);
    let neg = GaussianRational::from_int(-1);
    basis
        .labels()
        .iter()
        .enumerate()
        .map(|(idx, _)| {
            let x = basis.element(idx);
            if idx < n {
                let k = idx + 1;
                let zk_dk = compose(&mul(&z(&s, k)), &DiffOperator::derivative(&s, k - 1));
                mul(&Polynomial::constant(&s, -&param.lambda))
                    .sub(&zk_dk)
                    .and_then(|o| o.sub(&e))
                    .expect("same space")
            } else {
                let (i, j) = off_diagonal(x);
                if i == 1 {
                    let k = j - 1;
                    let zk = z(&s, k);
                    mul(&zk.scale(&param.lambda))
                        .add(&compose(&mul(&zk), &e))
                        .expect("same space")
                } else if j == 1 {
                    DiffOperator::derivative(&s, i - 2).scale(&neg)
                } else {
                    compose(&mul(&z(&s, j - 1)), &DiffOperator::derivative(&s, i - 2)).scale(&neg)
                }
            }
        })
        .collect()
}

fn off_diagonal(x: &MatrixG) -> (usize, usize) {
    let d = x.dim();
    for i in 1..=d {
        for j in 1..=d {
            if i != j && !x.get(i, j).is_zero() {
                return (i, j);
            }
        }
    }
    unreachable!("elementary matrix expected")
}

fn combine(ops: &[DiffOperator], coords: &[GaussianRational], space: &Space) -> DiffOperator {
    let mut acc = DiffOperator::zero(space);
    for (c, o) in coords.iter().zip(ops) {
        if !c.is_zero() {
            acc = acc.add(&o.scale(c)).expect("same space");
        }
    }
    acc
}

/// A representation of `sl(n+1, C)` on polynomials, given by its basis
/// operators.
#[derive(Clone, Debug)]
pub struct Realization {
    basis: LieBasis,
    ops: Vec<DiffOperator>,
    space: Space,
}

impl Realization {
    pub fn from_ops(basis: LieBasis, ops: Vec<DiffOperator>) -> Self {
        let space = ops.first().expect("nonempty basis").space().clone();
        Self { basis, ops, space }
    }

    pub fn rho_lambda(param: &RepParam) -> Result<Self> {
        let basis = LieBasis::new(param.n)?;
        let ops = rho_lambda_basis(param, &basis);
        Ok(Self::from_ops(basis, ops))
    }

    /// `rho_a(X) = W(i X~ + (a/2) phi_1(X))`, moved from `p` to `z`.
    pub fn rho_a(n: usize, a: &GaussianRational) -> Result<Self> {
        let alg = SlAlgebra::new(n)?;
        let phi = cohom::phi1(&alg);
        let half_a = a * &GaussianRational::from_frac(1, 2);
        let target = rep_space(n);
        let ops = (0..alg.dim())
            .map(|i| {
                let symbol = &alg.tilde_basis(i).scale(&GaussianRational::i())
                    + &phi.value(i).scale(&half_a);
                weyl_w(&symbol)?.relabel(&target)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_ops(alg.basis().clone(), ops))
    }

    pub fn basis(&self) -> &LieBasis {
        &self.basis
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn basis_ops(&self) -> &[DiffOperator] {
        &self.ops
    }

    pub fn op(&self, x: &MatrixG) -> Result<DiffOperator> {
        Ok(combine(&self.ops, &self.basis.coords(x)?, &self.space))
    }

    /// `[rho(b_i), rho(b_j)] = rho([b_i, b_j])` on all ordered basis pairs;
    /// returns the first failing pair.
    pub fn homomorphism_failure(&self) -> Option<(usize, usize)> {
        let d = self.basis.dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.ops[i].commutator(&self.ops[j]).expect("same space");
                let rhs = combine(&self.ops, self.basis.structure_constants(i, j), &self.space);
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

pub fn rho_lambda(param: &RepParam, x: &MatrixG) -> Result<DiffOperator> {
    Realization::rho_lambda(param)?.op(x)
}

pub fn rho_a(n: usize, a: &GaussianRational, x: &MatrixG) -> Result<DiffOperator> {
    Realization::rho_a(n, a)?.op(x)
}

/// `(mult (beta z^t + alpha) f)(z) + df(z) ((alpha + beta z^t) z - (gamma + delta z^t)^t)`
/// for the block decomposition `X = [[alpha, beta], [gamma, delta]]`.
/// With `mult = m` this is the discrete-series formula, with `mult = -m`
/// the compact one.
pub fn block_formula(n: usize, mult: &GaussianRational, x: &MatrixG) -> DiffOperator {
    let s = rep_space(n);
    let alpha = x.get(1, 1).clone();
    let mut lin = Polynomial::constant(&s, alpha);
    for l in 1..=n {
        lin = &lin + &z(&s, l).scale(x.get(1, l + 1));
    }
    let mut out = mul(&lin.scale(mult));
    for j in 1..=n {
        let mut v = &lin * &z(&s, j);
        v = &v - &Polynomial::constant(&s, x.get(j + 1, 1).clone());
        for l in 1..=n {
            v = &v - &z(&s, l).scale(x.get(j + 1, l + 1));
        }
        out = out
            .add(&compose(&mul(&v), &DiffOperator::derivative(&s, j - 1)))
            .expect("same space");
    }
    out
}

/// Diagonal values `<z^p, z^p>` of an invariant Hermitian form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramTable {
    pub n: usize,
    pub c: GaussianRational,
    pub values: BTreeMap<MultiIndex, GaussianRational>,
}

impl GramTable {
    pub fn get(&self, p: &MultiIndex) -> Option<&GaussianRational> {
        self.values.get(p)
    }

    /// Largest `d` such that every monomial of degree `<= d` is present.
    pub fn coverage(&self) -> u32 {
        let mut d = 0;
        loop {
            if MultiIndex::all_of_degree(self.n, d)
                .iter()
                .any(|p| !self.values.contains_key(p))
            {
                return d.saturating_sub(1);
            }
            d += 1;
            if d > 1 + self
                .values
                .keys()
                .map(MultiIndex::degree)
                .max()
                .unwrap_or(0)
            {
                return d - 1;
            }
        }
    }

    pub fn all_positive(&self) -> bool {
        self.values.values().all(GaussianRational::is_positive_real)
    }

    /// All values set to one; the natural example of a non-invariant form.
    pub fn ones(n: usize, pmax: u32) -> Self {
        let values = MultiIndex::all_up_to(n, pmax)
            .into_iter()
            .map(|p| (p, GaussianRational::one()))
            .collect();
        Self {
            n,
            c: GaussianRational::one(),
            values,
        }
    }
}

fn negative_natural(l: &GaussianRational) -> bool {
    (-l).is_natural()
}

/// `alpha(p) = C p! / (lambda (lambda+1) ... (lambda+|p|-1))`, `C = 1`.
pub fn gram_discrete(param: &RepParam, pmax: u32) -> Result<GramTable> {
    let l = &param.lambda;
    if !l.is_real() {
        return Err(Error::NonReal(format!("lambda = {l}")));
    }
    if negative_natural(l) {
        return Err(Error::NegativeNatural(format!(
            "lambda = {l}: no invariant form for lambda in -N"
        )));
    }
    let mut rising = vec![GaussianRational::one()];
    for k in 0..pmax {
        let next = &rising[k as usize] * &(l + &GaussianRational::from_int(k.into()));
        rising.push(next);
    }
    let values = MultiIndex::all_up_to(param.n, pmax)
        .into_iter()
        .map(|p| {
            let v = &p.factorial() / &rising[p.degree() as usize];
            (p, v)
        })
        .collect();
    Ok(GramTable {
        n: param.n,
        c: GaussianRational::one(),
        values,
    })
}

/// `<z^p, z^p>` for the compact form on `P_m`: `p! (m - |p|)! / m!`.
pub fn gram_compact_closed_form(n: usize, m: u32) -> GramTable {
    let values = MultiIndex::all_up_to(n, m)
        .into_iter()
        .map(|p| {
            let v = &(&p.factorial() * &factorial(m - p.degree())) / &factorial(m);
            (p, v)
        })
        .collect();
    GramTable {
        n,
        c: GaussianRational::one(),
        values,
    }
}

/// Matrix columns of `rho(X)` on the monomials of degree `<= dmax`:
/// `images[p]` maps `q` to the coefficient of `z^q` in `rho(X) z^p`.
fn monomial_images(
    op: &DiffOperator,
    monos: &[MultiIndex],
) -> Vec<BTreeMap<MultiIndex, GaussianRational>> {
    let s = op.space();
    monos
        .iter()
        .map(|p| {
            let f = Polynomial::monomial(s, p.clone(), GaussianRational::one());
            op_apply(op, &f)
                .expect("same space")
                .terms()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect()
        })
        .collect()
}

/// One equation `A_qp g(q) + conj(A_pq) g(p) = 0` per real-form element
/// and unordered monomial pair, as a row over the unknowns.
fn skew_rows(
    real: &Realization,
    form: RealForm,
    monos: &[MultiIndex],
) -> Result<Vec<(String, Vec<GaussianRational>)>> {
    let index: BTreeMap<&MultiIndex, usize> =
        monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows = Vec::new();
    for (r, x) in real_form_basis(real.basis.n(), form).iter().enumerate() {
        let op = real.op(x)?;
        let images = monomial_images(&op, monos);
        let mut pairs = BTreeSet::new();
        for (pi, img) in images.iter().enumerate() {
            for q in img.keys() {
                if let Some(&qi) = index.get(q) {
                    pairs.insert((pi.min(qi), pi.max(qi)));
                }
            }
        }
        for (pi, qi) in pairs {
            let a_qp = images[pi]
                .get(&monos[qi])
                .cloned()
                .unwrap_or_else(GaussianRational::zero);
            let a_pq = images[qi]
                .get(&monos[pi])
                .cloned()
                .unwrap_or_else(GaussianRational::zero);
            let mut row = vec![GaussianRational::zero(); monos.len()];
            row[qi] += &a_qp;
            row[pi] += &a_pq.conj();
            if row.iter().all(GaussianRational::is_zero) {
                continue;
            }
            let tag = format!(
                "{} element {}, z^{:?} against z^{:?}",
                form.name(real.basis.n()),
                r + 1,
                monos[pi].exps(),
                monos[qi].exps()
            );
            rows.push((tag, row));
        }
    }
    Ok(rows)
}

/// Solves the skew-adjointness constraints for a diagonal real Gram
/// ansatz on monomials of degree `<= pmax`, normalized by `g(0) = 1`.
/// The constraints only pair monomials inside the degree window, so the
/// truncated problem is exact.
pub fn gram_solve(param: &RepParam, form: RealForm, pmax: u32) -> Result<GramTable> {
    let real = Realization::rho_lambda(param)?;
    let monos = MultiIndex::all_up_to(param.n, pmax);
    let nvars = monos.len();
    let mut coef = SpanBuilder::new(nvars);
    let mut aug = SpanBuilder::new(nvars + 1);
    let mut kept: Vec<(Vec<GaussianRational>, GaussianRational)> = Vec::new();

    let mut push = |tag: &str, row: Vec<GaussianRational>, rhs: GaussianRational| -> Result<()> {
        let mut a = row.clone();
        a.push(rhs.clone());
        coef.insert(&row);
        if aug.insert(&a) {
            if aug.rank() > coef.rank() {
                return Err(Error::InconsistentGram(String::from(tag)));
            }
            kept.push((row, rhs));
        }
        Ok(())
    };

    let mut norm = vec![GaussianRational::zero(); nvars];
    norm[0] = GaussianRational::one();
    push("normalization g(0) = 1", norm, GaussianRational::one())?;
    for (tag, row) in skew_rows(&real, form, &monos)? {
        let re: Vec<_> = row
            .iter()
            .map(|v| GaussianRational::from_rational(v.re().clone()))
            .collect();
        let im: Vec<_> = row
            .iter()
            .map(|v| GaussianRational::from_rational(v.im().clone()))
            .collect();
        push(&format!("{tag} (real part)"), re, GaussianRational::zero())?;
        push(
            &format!("{tag} (imaginary part)"),
            im,
            GaussianRational::zero(),
        )?;
    }
    if coef.rank() < nvars {
        return Err(Error::GramNotUnique(nvars - coef.rank()));
    }
    let a = ExactMatrix::from_rows(nvars, kept.iter().map(|(r, _)| r.clone()).collect())?;
    let b: Vec<_> = kept.iter().map(|(_, v)| v.clone()).collect();
    let g = xla::solve(&a, &b)?.expect("consistent by construction");
    Ok(GramTable {
        n: param.n,
        c: GaussianRational::one(),
        values: monos.into_iter().zip(g).collect(),
    })
}

/// Checks `<rho(X) z^p, z^q> + <z^p, rho(X) z^q> = 0` for every real-form
/// basis element and all monomials of degree `<= dmax`, with the form
/// conjugate-linear in its second slot. Only Gram values inside the
/// degree window enter, so coverage through `dmax` is required.
pub fn skew_check(param: &RepParam, form: RealForm, gram: &GramTable, dmax: u32) -> Result<bool> {
    Ok(skew_violation(param, form, gram, dmax)?.is_none())
}

/// The first violated identity, if any.
pub fn skew_violation(
    param: &RepParam,
    form: RealForm,
    gram: &GramTable,
    dmax: u32,
) -> Result<Option<String>> {
    let monos = MultiIndex::all_up_to(param.n, dmax);
    if monos.iter().any(|p| gram.get(p).is_none()) {
        return Err(Error::InsufficientCoverage {
            have: gram.coverage(),
            need: dmax,
        });
    }
    let real = Realization::rho_lambda(param)?;
    let g: Vec<&GaussianRational> = monos
        .iter()
        .map(|p| gram.get(p).expect("covered"))
        .collect();
    for (tag, row) in skew_rows(&real, form, &monos)? {
        let mut acc = GaussianRational::zero();
        for (c, v) in row.iter().zip(&g) {
            acc += &(c * *v);
        }
        if !acc.is_zero() {
            return Ok(Some(tag));
        }
    }
    Ok(None)
}

/// The monomial basis of `P_m` in graded order, and matrices of
/// operators preserving it.
#[derive(Clone, Debug)]
pub struct TruncatedRep {
    pub n: usize,
    pub m: u32,
    pub basis: Vec<MultiIndex>,
    index: BTreeMap<MultiIndex, usize>,
}

impl TruncatedRep {
    pub fn new(n: usize, m: u32) -> Self {
        let basis = MultiIndex::all_up_to(n, m);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, p)| (p, k))
            .collect();
        Self { n, m, basis, index }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Fails with [`Error::NotPreserved`] when the image leaves `P_m`.
    pub fn matrix_of(&self, op: &DiffOperator) -> Result<ExactMatrix> {
        let d = self.dim();
        let mut out = ExactMatrix::zeros(d, d);
        for (col, img) in monomial_images(op, &self.basis).into_iter().enumerate() {
            for (q, c) in img {
                let row = *self.index.get(&q).ok_or(Error::NotPreserved(self.m))?;
                out.set(row, col, c);
            }
        }
        Ok(out)
    }

    pub fn matrices(&self, real: &Realization) -> Result<Vec<ExactMatrix>> {
        real.basis_ops().iter().map(|o| self.matrix_of(o)).collect()
    }
}

/// Matrix of `rho^lambda(X)` on the monomial basis of `P_m`.
pub fn matrix_on_pm(param: &RepParam, x: &MatrixG, m: u32) -> Result<ExactMatrix> {
    let op = rho_lambda(param, x)?;
    TruncatedRep::new(param.n, m).matrix_of(&op)
}

/// Evidence that a representation on a monomial basis is irreducible.
/// Every invariant subspace is stable under the diagonal Cartan
/// operators, so when the joint eigenvalues separate the monomials it is
/// spanned by monomials; cyclicity from each monomial then leaves only
/// the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub dimension: usize,
    pub cartan_diagonal: bool,
    pub multiplicity_free: bool,
    /// Orbit-closure rank reached from each basis vector, in basis order.
    pub orbit_ranks: Vec<usize>,
}

impl IrreducibilityReport {
    pub fn cyclic_from_every_vector(&self) -> bool {
        self.orbit_ranks.iter().all(|&r| r == self.dimension)
    }

    pub fn irreducible(&self) -> bool {
        self.cartan_diagonal && self.multiplicity_free && self.cyclic_from_every_vector()
    }
}

fn unit_vector(d: usize, k: usize) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::zero(); d];
    v[k] = GaussianRational::one();
    v
}

/// Dimension of the smallest subspace containing `start` and stable
/// under every matrix.
pub fn orbit_closure_rank(mats: &[ExactMatrix], start: &[GaussianRational]) -> usize {
    let mut span = SpanBuilder::new(start.len());
    let mut queue = vec![start.to_vec()];
    span.insert(start);
    while let Some(v) = queue.pop() {
        for m in mats {
            let w = m.mul_vec(&v).expect("square");
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    span.rank()
}

/// `n_cartan` leading matrices are the Cartan operators.
pub fn irreducibility_of(mats: &[ExactMatrix], n_cartan: usize) -> IrreducibilityReport {
    let d = mats.first().map_or(0, ExactMatrix::rows);
    let cartan = &mats[..n_cartan];
    let cartan_diagonal = cartan
        .iter()
        .all(|h| (0..d).all(|r| (0..d).all(|c| r == c || h.get(r, c).is_zero())));
    let tuples: BTreeSet<Vec<String>> = (0..d)
        .map(|k| cartan.iter().map(|h| format!("{}", h.get(k, k))).collect())
        .collect();
    let multiplicity_free = tuples.len() == d;
    let orbit_ranks = (0..d)
        .map(|k| orbit_closure_rank(mats, &unit_vector(d, k)))
        .collect();
    IrreducibilityReport {
        dimension: d,
        cartan_diagonal,
        multiplicity_free,
        orbit_ranks,
    }
}

pub fn irreducibility_report(n: usize, m: u32) -> Result<IrreducibilityReport> {
    let real = Realization::rho_lambda(&RepParam::compact(n, m))?;
    let mats = TruncatedRep::new(n, m).matrices(&real)?;
    Ok(irreducibility_of(&mats, n))
}

/// Irreducibility of `rho^{-m}` on `P_m`.
pub fn irreducibility_check(n: usize, m: u32) -> Result<bool> {
    Ok(irreducibility_report(n, m)?.irreducible())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    /// Eigenvalues of `H_1..H_n`.
    pub coords: Vec<GaussianRational>,
    pub carriers: Vec<MultiIndex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeight {
    /// Coordinates of the vector over the monomial basis of `P_m`.
    pub vector: Vec<GaussianRational>,
    pub weight: Vec<GaussianRational>,
    pub monomial: Option<MultiIndex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub n: usize,
    pub m: u32,
    pub weights: Vec<(WeightVector, usize)>,
    pub highest: Vec<HighestWeight>,
}

impl WeightReport {
    pub fn multiplicity_sum(&self) -> usize {
        self.weights.iter().map(|(_, k)| k).sum()
    }
}

/// Weight decomposition of `rho^{-m}` on `P_m`, and the joint kernel of
/// the positive-root operators `E_ij`, `i < j`.
pub fn weights(n: usize, m: u32) -> Result<WeightReport> {
    let real = Realization::rho_lambda(&RepParam::compact(n, m))?;
    let pm = TruncatedRep::new(n, m);
    let mats = pm.matrices(&real)?;
    let d = pm.dim();
    let mut by_weight: BTreeMap<Vec<String>, WeightVector> = BTreeMap::new();
    let mut order = Vec::new();
    for (k, p) in pm.basis.iter().enumerate() {
        let mut coords = Vec::with_capacity(n);
        for h in &mats[..n] {
            let col = h.column(k);
            if col.iter().enumerate().any(|(r, v)| r != k && !v.is_zero()) {
                return Err(Error::DimensionMismatch(format!(
                    "z^{:?} is not a weight vector",
                    p.exps()
                )));
            }
            coords.push(col[k].clone());
        }
        let key: Vec<String> = coords.iter().map(|c| format!("{c}")).collect();
        by_weight
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key.clone());
                WeightVector {
                    coords,
                    carriers: Vec::new(),
                }
            })
            .carriers
            .push(p.clone());
    }
    let weights = order
        .into_iter()
        .map(|k| {
            let w = by_weight.remove(&k).expect("present");
            let mult = w.carriers.len();
            (w, mult)
        })
        .collect();

    let basis = real.basis();
    let mut positive = ExactMatrix::zeros(0, d);
    for i in 1..=n + 1 {
        for j in (i + 1)..=n + 1 {
            positive = positive.vstack(&mats[basis.e_index(i, j)])?;
        }
    }
    let kernel = if positive.rows() == 0 {
        (0..d).map(|k| unit_vector(d, k)).collect()
    } else {
        xla::nullspace(&positive)
    };
    let mut highest = Vec::new();
    for v in kernel {
        let mut weight = Vec::with_capacity(n);
        for h in &mats[..n] {
            let hv = h.mul_vec(&v)?;
            let k = v
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero kernel vector");
            let ratio = &hv[k] / &v[k];
            if hv.iter().zip(&v).any(|(a, b)| *a != b * &ratio) {
                return Err(Error::DimensionMismatch(String::from(
                    "highest-weight line is not a weight vector",
                )));
            }
            weight.push(ratio);
        }
        let support: Vec<usize> = (0..d).filter(|&k| !v[k].is_zero()).collect();
        let monomial = (support.len() == 1).then(|| pm.basis[support[0]].clone());
        highest.push(HighestWeight {
            vector: v,
            weight,
            monomial,
        });
    }
    Ok(WeightReport {
        n,
        m,
        weights,
        highest,
    })
}

/// `sum_i rho(b_i) rho(b^i)` on `P_m` with trace-form dual bases.
pub fn casimir_scalar(n: usize, m: u32) -> Result<GaussianRational> {
    let real = Realization::rho_lambda(&RepParam::compact(n, m))?;
    let mats = TruncatedRep::new(n, m).matrices(&real)?;
    casimir_of(real.basis(), &mats)
}

/// The Casimir of a matrix representation given on the basis.
pub fn casimir_of(basis: &LieBasis, mats: &[ExactMatrix]) -> Result<GaussianRational> {
    let d = mats[0].rows();
    let dual = basis.trace_dual();
    let mut acc = ExactMatrix::zeros(d, d);
    for (i, coords) in dual.iter().enumerate() {
        let mut up = ExactMatrix::zeros(d, d);
        for (c, mj) in coords.iter().zip(mats) {
            if !c.is_zero() {
                up = up.add(&mj.scale(c))?;
            }
        }
        acc = acc.add(&mats[i].mul(&up)?)?;
    }
    acc.scalar_value().ok_or(Error::NonScalarCasimir)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub degree: u32,
    /// `d - m(a)`, the factor by which `rho_a(E_{1,l+1})` raises the top
    /// degree.
    pub coefficient: GaussianRational,
    /// The top-degree part of `rho_a(E_{1,l+1}) z^p` equals
    /// `coefficient * z_l z^p` over every `|p| = d` and every `l`.
    pub formula_holds: bool,
    /// A degree-`d` monomial pushed out of `P_d`, when one exists.
    pub witness: Option<MultiIndex>,
}

impl DegreeCertificate {
    pub fn escapes(&self) -> bool {
        self.witness.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceCertificate {
    pub degree: u32,
    pub dimension: usize,
    pub invariant: bool,
    pub irreducible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantScanReport {
    pub n: usize,
    pub a: GaussianRational,
    pub m_a: GaussianRational,
    pub dmax: u32,
    pub degrees: Vec<DegreeCertificate>,
    pub subspace: Option<SubspaceCertificate>,
}

impl InvariantScanReport {
    /// Degree `d` of the invariant `P_d`, if one was certified.
    pub fn found(&self) -> Option<u32> {
        self.subspace
            .as_ref()
            .filter(|s| s.invariant && s.irreducible)
            .map(|s| s.degree)
    }

    pub fn formulas_hold(&self) -> bool {
        self.degrees.iter().all(|c| c.formula_holds)
    }

    /// No `P_d` with `d <= dmax` is invariant.
    pub fn certifies_absence(&self) -> bool {
        self.subspace.is_none()
            && self.formulas_hold()
            && self.degrees.iter().all(DegreeCertificate::escapes)
    }
}

/// Searches `P_0, ..., P_dmax` for a subspace invariant under `rho_a`.
pub fn invariant_subspace_scan(
    n: usize,
    a: &GaussianRational,
    dmax: u32,
) -> Result<InvariantScanReport> {
    if dmax < 1 {
        return Err(Error::DimensionMismatch(String::from(
            "dmax must be at least 1",
        )));
    }
    let real = Realization::rho_a(n, a)?;
    let s = real.space().clone();
    let m_a = m_of_a(n, a);
    let basis = real.basis();
    let raising: Vec<&DiffOperator> = (1..=n)
        .map(|l| &real.basis_ops()[basis.e_index(1, l + 1)])
        .collect();
    let mut degrees = Vec::new();
    for d in 0..=dmax {
        let coefficient = &GaussianRational::from_int(d.into()) - &m_a;
        let mut formula_holds = true;
        let mut witness = None;
        for p in MultiIndex::all_of_degree(n, d) {
            let f = Polynomial::monomial(&s, p.clone(), GaussianRational::one());
            for (l, op) in raising.iter().enumerate() {
                let img = op_apply(op, &f)?;
                let top = img
                    .homogeneous_components()
                    .into_iter()
                    .find(|(k, _)| *k == d + 1);
                let top = top.map_or_else(|| Polynomial::zero(&s), |(_, t)| t);
                let expect =
                    Polynomial::monomial(&s, p.with(l, p.exps()[l] + 1), coefficient.clone());
                formula_holds &= top == expect;
                if !top.is_zero() && witness.is_none() {
                    witness = Some(p.clone());
                }
            }
        }
        degrees.push(DegreeCertificate {
            degree: d,
            coefficient,
            formula_holds,
            witness,
        });
    }
    let subspace = match degrees.iter().find(|c| !c.escapes()) {
        None => None,
        Some(c) => {
            let pm = TruncatedRep::new(n, c.degree);
            match pm.matrices(&real) {
                Ok(mats) => Some(SubspaceCertificate {
                    degree: c.degree,
                    dimension: pm.dim(),
                    invariant: true,
                    irreducible: irreducibility_of(&mats, n).irreducible(),
                }),
                Err(Error::NotPreserved(_)) => Some(SubspaceCertificate {
                    degree: c.degree,
                    dimension: pm.dim(),
                    invariant: false,
                    irreducible: false,
                }),
                Err(e) => return Err(e),
            }
        }
    };
    Ok(InvariantScanReport {
        n,
        a: a.clone(),
        m_a,
        dmax,
        degrees,
        subspace,
    })
}
