//! The module `M = C[p, q]` with `X . f = [X~, f]_*`, 1-cochains and the
//! cobord operator, degree-truncated `Z^1`, `B^1`, `H^1`, and formal
//! deformations of `X -> X~` with reparametrization and equivalence.
//!
//! All linear systems here split by weight. Write `key(p^a q^b) = b - a`;
//! the key is additive under the star product, so a cochain coefficient
//! on `(b_i, z^mu)` lives in block `key(mu) - key(b_i~)` and every cobord
//! equation stays inside one block.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::liealg::{monomial_weight, MatrixG, SlAlgebra};
use crate::moyal::{moyal_bracket, star};
use crate::poly::{binomial, MultiIndex, Polynomial};
use crate::scalar::GaussianRational;
use crate::xla::{self, ExactMatrix, SpanBuilder};

/// A linear map `g -> M` given on the preferred basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    pub n: usize,
    values: Vec<Polynomial>,
}

impl Cochain1 {
    pub fn new(alg: &SlAlgebra, values: Vec<Polynomial>) -> Result<Self> {
        if values.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for a basis of size {}",
                values.len(),
                alg.dim()
            )));
        }
        for v in &values {
            if v.space() != alg.phase() {
                return Err(Error::SpaceMismatch {
                    left: format!("{}", v.space()),
                    right: format!("{}", alg.phase()),
                });
            }
        }
        Ok(Self { n: alg.n(), values })
    }

    pub fn zero(alg: &SlAlgebra) -> Self {
        Self {
            n: alg.n(),
            values: vec![Polynomial::zero(alg.phase()); alg.dim()],
        }
    }

    /// `X -> X~`.
    pub fn tilde(alg: &SlAlgebra) -> Self {
        Self {
            n: alg.n(),
            values: (0..alg.dim()).map(|i| alg.tilde_basis(i).clone()).collect(),
        }
    }

    /// Value on basis element `i`.
    pub fn value(&self, i: usize) -> &Polynomial {
        &self.values[i]
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn set(&mut self, i: usize, v: Polynomial) {
        self.values[i] = v;
    }

    /// Linear extension to an arbitrary traceless matrix.
    pub fn eval(&self, alg: &SlAlgebra, x: &MatrixG) -> Result<Polynomial> {
        Ok(self.eval_coords(alg, &alg.basis().coords(x)?))
    }

    fn eval_coords(&self, alg: &SlAlgebra, c: &[GaussianRational]) -> Polynomial {
        let mut acc = Polynomial::zero(alg.phase());
        for (v, p) in c.iter().zip(&self.values) {
            if !v.is_zero() {
                acc = &acc + &p.scale(v);
            }
        }
        acc
    }

    pub fn add(&self, rhs: &Cochain1) -> Cochain1 {
        Cochain1 {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Cochain1 {
        Cochain1 {
            n: self.n,
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Polynomial::is_zero)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.values.iter().filter_map(Polynomial::degree).max()
    }
}

/// `X . f = [X~, f]_*`.
pub fn module_action(alg: &SlAlgebra, x: &MatrixG, f: &Polynomial) -> Result<Polynomial> {
    moyal_bracket(&alg.tilde(x), f)
}

/// `[X~, phi(Y)]_* + [phi(X), Y~]_* - phi([X, Y])`.
pub fn cobord1(alg: &SlAlgebra, phi: &Cochain1, x: &MatrixG, y: &MatrixG) -> Result<Polynomial> {
    let a = moyal_bracket(&alg.tilde(x), &phi.eval(alg, y)?)?;
    let b = moyal_bracket(&phi.eval(alg, x)?, &alg.tilde(y))?;
    let c = phi.eval(alg, &x.bracket(y))?;
    Ok(&(&a + &b) - &c)
}

/// [`cobord1`] on basis elements `i`, `j`.
pub fn cobord1_basis(alg: &SlAlgebra, phi: &Cochain1, i: usize, j: usize) -> Result<Polynomial> {
    let a = moyal_bracket(alg.tilde_basis(i), phi.value(j))?;
    let b = moyal_bracket(phi.value(i), alg.tilde_basis(j))?;
    let c = phi.eval_coords(alg, alg.basis().structure_constants(i, j));
    Ok(&(&a + &b) - &c)
}

/// First basis pair `(i, j)`, `i < j`, on which the cobord does not vanish.
pub fn cocycle_failure(alg: &SlAlgebra, phi: &Cochain1) -> Result<Option<(usize, usize)>> {
    for i in 0..alg.dim() {
        for j in (i + 1)..alg.dim() {
            if !cobord1_basis(alg, phi, i, j)?.is_zero() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn is_cocycle(alg: &SlAlgebra, phi: &Cochain1) -> Result<bool> {
    Ok(cocycle_failure(alg, phi)?.is_none())
}

/// `X -> [X~, f]_*`.
pub fn coboundary_of(alg: &SlAlgebra, f: &Polynomial) -> Result<Cochain1> {
    let values = (0..alg.dim())
        .map(|i| moyal_bracket(alg.tilde_basis(i), f))
        .collect::<Result<_>>()?;
    Cochain1::new(alg, values)
}

/// `phi_1(H_k) = -1`, `phi_1(E_{1,k+1}) = p_k`, zero on every other `E_ij`.
pub fn phi1(alg: &SlAlgebra) -> Cochain1 {
    let n = alg.n();
    let s = alg.phase();
    let mut phi = Cochain1::zero(alg);
    for k in 1..=n {
        phi.set(
            alg.basis().h_index(k),
            Polynomial::constant(s, GaussianRational::from_int(-1)),
        );
        phi.set(alg.basis().e_index(1, k + 1), Polynomial::var(s, s.p(k)));
    }
    phi
}

/// Monomial basis of `M_{<=d}` in graded order.
#[derive(Clone, Debug)]
pub struct TruncatedModule {
    pub n: usize,
    pub d: u32,
    pub basis: Vec<MultiIndex>,
}

impl TruncatedModule {
    pub fn new(n: usize, d: u32) -> Self {
        Self {
            n,
            d,
            basis: MultiIndex::all_up_to(2 * n, d),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `binom(2n + d, 2n)`.
    pub fn expected_dim(&self) -> GaussianRational {
        binomial(2 * self.n as u32 + self.d, 2 * self.n as u32)
    }
}

type Key = Vec<i64>;

/// Unknown `(basis index, monomial)` pairs grouped by weight block.
struct CochainBlocks {
    blocks: BTreeMap<Key, Vec<(usize, MultiIndex)>>,
}

impl CochainBlocks {
    fn new(alg: &SlAlgebra, module: &TruncatedModule, split: bool) -> Self {
        let n = alg.n();
        let mut blocks: BTreeMap<Key, Vec<(usize, MultiIndex)>> = BTreeMap::new();
        for i in 0..alg.dim() {
            let w = alg.weight(i);
            for mu in &module.basis {
                let key = if split {
                    monomial_weight(n, mu)
                        .iter()
                        .zip(&w)
                        .map(|(a, b)| a - b)
                        .collect()
                } else {
                    Vec::new()
                };
                blocks.entry(key).or_default().push((i, mu.clone()));
            }
        }
        Self { blocks }
    }
}

/// Rows of the cobord system restricted to one block: one row per
/// `(pair, target monomial)` over the block's unknowns.
fn cobord_system(alg: &SlAlgebra, unknowns: &[(usize, MultiIndex)]) -> Result<ExactMatrix> {
    let dim = alg.dim();
    let s = alg.phase();
    let mut rows: BTreeMap<(usize, usize, MultiIndex), Vec<GaussianRational>> = BTreeMap::new();
    let ncols = unknowns.len();
    let mut put = |i: usize, j: usize, poly: &Polynomial, col: usize, sign: &GaussianRational| {
        for (m, c) in poly.terms() {
            let row = rows
                .entry((i, j, m.clone()))
                .or_insert_with(|| vec![GaussianRational::zero(); ncols]);
            row[col] += &(c * sign);
        }
    };
    let one = GaussianRational::one();
    let neg = GaussianRational::from_int(-1);
    for (col, (l, mu)) in unknowns.iter().enumerate() {
        let f = Polynomial::monomial(s, mu.clone(), GaussianRational::one());
        for other in 0..dim {
            if other == *l {
                continue;
            }
            let br = moyal_bracket(alg.tilde_basis(other), &f)?;
            if br.is_zero() {
                continue;
            }
            // pair (other, l): [b_other~, phi(b_l)]; pair (l, other): -[b_other~, phi(b_l)]
            if other < *l {
                put(other, *l, &br, col, &one);
            } else {
                put(*l, other, &br, col, &neg);
            }
        }
        for i in 0..dim {
            for j in (i + 1)..dim {
                let c = &alg.basis().structure_constants(i, j)[*l];
                if !c.is_zero() {
                    put(i, j, &f, col, &(-c));
                }
            }
        }
    }
    ExactMatrix::from_rows(ncols, rows.into_values().collect())
}

fn cochain_from(
    alg: &SlAlgebra,
    unknowns: &[(usize, MultiIndex)],
    v: &[GaussianRational],
) -> Cochain1 {
    let s = alg.phase();
    let mut phi = Cochain1::zero(alg);
    for ((i, mu), c) in unknowns.iter().zip(v) {
        if !c.is_zero() {
            let next = &phi.values[*i] + &Polynomial::monomial(s, mu.clone(), c.clone());
            phi.values[*i] = next;
        }
    }
    phi
}

/// Coordinates of a cochain over a block's unknowns; `None` when some
/// value has a term outside the block.
fn cochain_coords(
    phi: &Cochain1,
    unknowns: &[(usize, MultiIndex)],
) -> Option<Vec<GaussianRational>> {
    let index: BTreeMap<(usize, &MultiIndex), usize> = unknowns
        .iter()
        .enumerate()
        .map(|(k, (i, m))| ((*i, m), k))
        .collect();
    let mut v = vec![GaussianRational::zero(); unknowns.len()];
    for (i, p) in phi.values.iter().enumerate() {
        for (m, c) in p.terms() {
            v[*index.get(&(i, m))?] = c.clone();
        }
    }
    Some(v)
}

struct BlockResult {
    unknowns: Vec<(usize, MultiIndex)>,
    cocycles: Vec<Vec<GaussianRational>>,
    coboundaries: Vec<Vec<GaussianRational>>,
}

fn solve_block(
    alg: &SlAlgebra,
    d: u32,
    key: &[i64],
    split: bool,
    unknowns: Vec<(usize, MultiIndex)>,
) -> Result<BlockResult> {
    let sys = cobord_system(alg, &unknowns)?;
    let cocycles = if sys.rows() == 0 {
        (0..unknowns.len())
            .map(|k| {
                let mut e = vec![GaussianRational::zero(); unknowns.len()];
                e[k] = GaussianRational::one();
                e
            })
            .collect()
    } else {
        xla::nullspace(&sys)
    };

    // potentials of this block with degree <= d+1
    let n = alg.n();
    let s = alg.phase();
    let potentials: Vec<MultiIndex> = MultiIndex::all_up_to(2 * n, d + 1)
        .into_iter()
        .filter(|m| !split || monomial_weight(n, m) == key)
        .collect();
    let images: Vec<Cochain1> = potentials
        .iter()
        .map(|m| {
            coboundary_of(
                alg,
                &Polynomial::monomial(s, m.clone(), GaussianRational::one()),
            )
        })
        .collect::<Result<_>>()?;
    // kill the part of degree > d
    let mut high_rows: BTreeMap<(usize, MultiIndex), Vec<GaussianRational>> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (i, p) in img.values.iter().enumerate() {
            for (m, c) in p.terms() {
                if m.degree() > d {
                    high_rows
                        .entry((i, m.clone()))
                        .or_insert_with(|| vec![GaussianRational::zero(); images.len()])[col] =
                        c.clone();
                }
            }
        }
    }
    let combos = if high_rows.is_empty() {
        (0..images.len())
            .map(|k| {
                let mut e = vec![GaussianRational::zero(); images.len()];
                e[k] = GaussianRational::one();
                e
            })
            .collect()
    } else {
        xla::nullspace(&ExactMatrix::from_rows(
            images.len(),
            high_rows.into_values().collect(),
        )?)
    };
    let mut span = SpanBuilder::new(unknowns.len());
    for c in combos {
        let mut phi = Cochain1::zero(alg);
        for (k, img) in c.iter().zip(&images) {
            if !k.is_zero() {
                phi = phi.add(&img.scale(k));
            }
        }
        let v = cochain_coords(&phi, &unknowns)
            .expect("coboundary of a block potential stays in the block");
        span.insert(&v);
    }
    Ok(BlockResult {
        unknowns,
        cocycles,
        coboundaries: span.basis(),
    })
}

/// `Z^1`, `B^1` at cap `d`, block by block.
pub struct TruncatedCohomology {
    pub n: usize,
    pub d: u32,
    blocks: Vec<(Key, BlockResult)>,
}

impl TruncatedCohomology {
    pub fn compute(alg: &SlAlgebra, d: u32) -> Result<Self> {
        Self::compute_with(alg, d, true)
    }

    /// One undivided system; used to cross-check the block split.
    pub fn compute_dense(alg: &SlAlgebra, d: u32) -> Result<Self> {
        Self::compute_with(alg, d, false)
    }

    fn compute_with(alg: &SlAlgebra, d: u32, split: bool) -> Result<Self> {
        let module = TruncatedModule::new(alg.n(), d);
        let blocks = CochainBlocks::new(alg, &module, split)
            .blocks
            .into_iter()
            .map(|(k, u)| {
                let r = solve_block(alg, d, &k, split, u)?;
                Ok((k, r))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n: alg.n(),
            d,
            blocks,
        })
    }

    pub fn dim_z1(&self) -> usize {
        self.blocks.iter().map(|(_, b)| b.cocycles.len()).sum()
    }

    pub fn dim_b1(&self) -> usize {
        self.blocks.iter().map(|(_, b)| b.coboundaries.len()).sum()
    }

    pub fn dim_h1(&self) -> usize {
        self.dim_z1() - self.dim_b1()
    }

    pub fn cocycles(&self, alg: &SlAlgebra) -> Vec<Cochain1> {
        self.blocks
            .iter()
            .flat_map(|(_, b)| {
                b.cocycles
                    .iter()
                    .map(|v| cochain_from(alg, &b.unknowns, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    pub fn coboundaries(&self, alg: &SlAlgebra) -> Vec<Cochain1> {
        self.blocks
            .iter()
            .flat_map(|(_, b)| {
                b.coboundaries
                    .iter()
                    .map(|v| cochain_from(alg, &b.unknowns, v))
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Dimensions `(Z, B)` of each nonzero block, keyed by weight.
    pub fn block_dims(&self) -> Vec<(Key, usize, usize)> {
        self.blocks
            .iter()
            .filter(|(_, b)| !b.cocycles.is_empty())
            .map(|(k, b)| (k.clone(), b.cocycles.len(), b.coboundaries.len()))
            .collect()
    }

    fn locate(&self, phi: &Cochain1) -> Option<(&BlockResult, Vec<GaussianRational>)> {
        if phi.is_zero() {
            return None;
        }
        self.blocks
            .iter()
            .find_map(|(_, b)| cochain_coords(phi, &b.unknowns).map(|v| (b, v)))
    }

    /// Membership of a single-block cochain in `Z^1`.
    pub fn in_cocycles(&self, phi: &Cochain1) -> bool {
        phi.is_zero()
            || self
                .locate(phi)
                .is_some_and(|(b, v)| in_span(&b.cocycles, &v))
    }

    /// Membership of a single-block cochain in `B^1`.
    pub fn in_coboundaries(&self, phi: &Cochain1) -> bool {
        phi.is_zero()
            || self
                .locate(phi)
                .is_some_and(|(b, v)| in_span(&b.coboundaries, &v))
    }

    /// `Z^1 = B^1 + span(phi)` with `phi` outside `B^1`.
    pub fn generated_by(&self, phi: &Cochain1) -> bool {
        let Some((home, v)) = self.locate(phi) else {
            return false;
        };
        self.blocks.iter().all(|(_, b)| {
            if core::ptr::eq(b, home) {
                let mut span = SpanBuilder::new(b.unknowns.len());
                for c in &b.coboundaries {
                    span.insert(c);
                }
                span.insert(&v) && b.cocycles.iter().all(|c| span.contains(c))
            } else {
                b.cocycles.len() == b.coboundaries.len()
            }
        })
    }
}

fn in_span(basis: &[Vec<GaussianRational>], v: &[GaussianRational]) -> bool {
    let mut span = SpanBuilder::new(v.len());
    for b in basis {
        span.insert(b);
    }
    span.contains(v)
}

/// Basis of the cocycles valued in `M_{<=d}`.
pub fn cocycle_space(n: usize, d: u32) -> Result<Vec<Cochain1>> {
    let alg = SlAlgebra::new(n)?;
    Ok(TruncatedCohomology::compute(&alg, d)?.cocycles(&alg))
}

/// Basis of `{df : f in M_{<=d+1}}` intersected with `M_{<=d}`-valued cochains.
pub fn coboundary_space(n: usize, d: u32) -> Result<Vec<Cochain1>> {
    let alg = SlAlgebra::new(n)?;
    Ok(TruncatedCohomology::compute(&alg, d)?.coboundaries(&alg))
}

/// Solves `df = phi` with `f` of degree `<= fmax`; `None` certifies that
/// `phi` is no coboundary of such an `f`.
pub fn solve_coboundary(alg: &SlAlgebra, phi: &Cochain1, fmax: u32) -> Result<Option<Polynomial>> {
    let s = alg.phase();
    let pots = MultiIndex::all_up_to(2 * alg.n(), fmax);
    let images: Vec<Cochain1> = pots
        .iter()
        .map(|m| {
            coboundary_of(
                alg,
                &Polynomial::monomial(s, m.clone(), GaussianRational::one()),
            )
        })
        .collect::<Result<_>>()?;
    let mut rows: BTreeMap<(usize, MultiIndex), Vec<GaussianRational>> = BTreeMap::new();
    let width = pots.len();
    let mut rhs_terms: BTreeMap<(usize, MultiIndex), GaussianRational> = BTreeMap::new();
    for (col, img) in images.iter().enumerate() {
        for (i, p) in img.values.iter().enumerate() {
            for (m, c) in p.terms() {
                rows.entry((i, m.clone()))
                    .or_insert_with(|| vec![GaussianRational::zero(); width])[col] = c.clone();
            }
        }
    }
    for (i, p) in phi.values.iter().enumerate() {
        for (m, c) in p.terms() {
            rows.entry((i, m.clone()))
                .or_insert_with(|| vec![GaussianRational::zero(); width]);
            rhs_terms.insert((i, m.clone()), c.clone());
        }
    }
    let keys: Vec<_> = rows.keys().cloned().collect();
    let a = ExactMatrix::from_rows(width, rows.into_values().collect())?;
    let b: Vec<_> = keys
        .iter()
        .map(|k| {
            rhs_terms
                .get(k)
                .cloned()
                .unwrap_or_else(GaussianRational::zero)
        })
        .collect();
    Ok(xla::solve(&a, &b)?.map(|x| {
        let mut f = Polynomial::zero(s);
        for (m, c) in pots.iter().zip(x) {
            f = &f + &Polynomial::monomial(s, m.clone(), c);
        }
        f
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Report {
    pub n: usize,
    pub d: u32,
    pub dim_z1: usize,
    pub dim_b1: usize,
    pub dim_h1: usize,
    pub stabilized: bool,
    pub phi1_is_cocycle: bool,
    pub phi1_is_coboundary: bool,
    pub generator_check: bool,
}

/// `dim Z^1 - dim B^1` at cap `d`, with the class of `phi_1` tested as a
/// generator. `stabilized` compares against cap `d - 1`.
pub fn h1_dimension(n: usize, d: u32) -> Result<H1Report> {
    if d < 1 {
        return Err(Error::DimensionMismatch(String::from(
            "degree cap must be at least 1",
        )));
    }
    let alg = SlAlgebra::new(n)?;
    let prev = if d >= 2 {
        Some(TruncatedCohomology::compute(&alg, d - 1)?.dim_h1())
    } else {
        None
    };
    h1_report(&alg, d, prev)
}

fn h1_report(alg: &SlAlgebra, d: u32, prev: Option<usize>) -> Result<H1Report> {
    let coh = TruncatedCohomology::compute(alg, d)?;
    let phi = phi1(alg);
    let phi1_is_cocycle = is_cocycle(alg, &phi)? && coh.in_cocycles(&phi);
    let phi1_is_coboundary = solve_coboundary(alg, &phi, d + 1)?.is_some();
    let dim_h1 = coh.dim_h1();
    Ok(H1Report {
        n: alg.n(),
        d,
        dim_z1: coh.dim_z1(),
        dim_b1: coh.dim_b1(),
        dim_h1,
        stabilized: prev == Some(dim_h1),
        phi1_is_cocycle,
        phi1_is_coboundary,
        generator_check: coh.generated_by(&phi),
    })
}

/// [`h1_dimension`] for each cap in `dmin..=dmax`.
pub fn h1_scan(n: usize, dmin: u32, dmax: u32) -> Result<Vec<H1Report>> {
    let alg = SlAlgebra::new(n)?;
    let dmin = dmin.max(1);
    let mut prev = if dmin >= 2 {
        Some(TruncatedCohomology::compute(&alg, dmin - 1)?.dim_h1())
    } else {
        None
    };
    let mut out = Vec::new();
    for d in dmin..=dmax {
        let r = h1_report(&alg, d, prev)?;
        prev = Some(r.dim_h1);
        out.push(r);
    }
    Ok(out)
}

/// `Phi = sum_k t^k Phi_k`, truncated after `Phi_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalDeformation {
    pub n: usize,
    coeffs: Vec<Cochain1>,
}

impl FormalDeformation {
    pub fn new(coeffs: Vec<Cochain1>) -> Result<Self> {
        let n = coeffs
            .first()
            .ok_or_else(|| Error::DimensionMismatch(String::from("no coefficients")))?
            .n;
        Ok(Self { n, coeffs })
    }

    /// `Phi_0 = X~`, `Phi_1 = a phi_1`, higher terms zero, through order `d`.
    pub fn phi_a(alg: &SlAlgebra, a: &GaussianRational, d: usize) -> Self {
        let mut coeffs = vec![Cochain1::tilde(alg)];
        if d >= 1 {
            coeffs.push(phi1(alg).scale(a));
        }
        while coeffs.len() <= d {
            coeffs.push(Cochain1::zero(alg));
        }
        Self { n: alg.n(), coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Cochain1 {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Cochain1] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: Cochain1) {
        self.coeffs[k] = c;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    pub checked_to: usize,
    /// First failing `(order, i, j)`.
    pub failure: Option<(usize, usize, usize)>,
}

impl DeformationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The order-`k` part of `Phi([X, Y]) = [Phi(X), Phi(Y)]_*` on basis
/// elements `i`, `j`: `sum_{l<=k} [Phi_l(X), Phi_{k-l}(Y)]_* - Phi_k([X, Y])`.
pub fn deformation_defect(
    alg: &SlAlgebra,
    phi: &FormalDeformation,
    k: usize,
    i: usize,
    j: usize,
) -> Result<Polynomial> {
    let mut acc = Polynomial::zero(alg.phase());
    for l in 0..=k {
        let br = moyal_bracket(phi.coeffs[l].value(i), phi.coeffs[k - l].value(j))?;
        acc = &acc + &br;
    }
    Ok(&acc - &phi.coeffs[k].eval_coords(alg, alg.basis().structure_constants(i, j)))
}

/// Checks orders `0..=d` on every ordered basis pair.
pub fn deformation_check(
    alg: &SlAlgebra,
    phi: &FormalDeformation,
    d: usize,
) -> Result<DeformationReport> {
    if phi.order() < d {
        return Err(Error::Truncated {
            have: phi.order(),
            need: d,
        });
    }
    for k in 0..=d {
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                if !deformation_defect(alg, phi, k, i, j)?.is_zero() {
                    return Ok(DeformationReport {
                        checked_to: d,
                        failure: Some((k, i, j)),
                    });
                }
            }
        }
    }
    Ok(DeformationReport {
        checked_to: d,
        failure: None,
    })
}

/// Coefficients of `S^r` through `t^d` for `S = sum_{k>=1} c_k t^k`,
/// `c[0] = c_1`.
fn series_powers(c: &[GaussianRational], d: usize) -> Vec<Vec<GaussianRational>> {
    let mut s = vec![GaussianRational::zero(); d + 1];
    for (k, v) in c.iter().enumerate() {
        if k < d {
            s[k + 1] = v.clone();
        }
    }
    let mut powers = Vec::with_capacity(d + 1);
    let mut cur = vec![GaussianRational::zero(); d + 1];
    cur[0] = GaussianRational::one();
    for _ in 0..=d {
        powers.push(cur.clone());
        let mut next = vec![GaussianRational::zero(); d + 1];
        for (a, x) in cur.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in s.iter().enumerate() {
                if a + b <= d && !y.is_zero() {
                    next[a + b] += &(x * y);
                }
            }
        }
        cur = next;
    }
    powers
}

/// `Phi^c = sum_r S_c(t)^r Phi_r`, truncated at order `d`.
pub fn reparametrize(
    alg: &SlAlgebra,
    phi: &FormalDeformation,
    c: &[GaussianRational],
    d: usize,
) -> Result<FormalDeformation> {
    let powers = series_powers(c, d);
    let mut coeffs = vec![Cochain1::zero(alg); d + 1];
    for (r, pw) in powers.iter().enumerate() {
        for (k, v) in pw.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if r > phi.order() {
                return Err(Error::Truncated {
                    have: phi.order(),
                    need: r,
                });
            }
            coeffs[k] = coeffs[k].add(&phi.coeffs[r].scale(v));
        }
    }
    FormalDeformation::new(coeffs)
}

/// `b = a^{-1}` under the star product for `a = 1 + sum_k t^k a_k`:
/// `b_0 = 1`, `b_k = -sum_{j>=1} a_j * b_{k-j}`. Returns `b_1..b_d`.
pub fn star_inverse_series(a: &[Polynomial], d: usize) -> Result<Vec<Polynomial>> {
    let s = a
        .first()
        .ok_or_else(|| Error::DimensionMismatch(String::from("empty series")))?
        .space()
        .clone();
    let mut b = vec![Polynomial::one(&s)];
    for k in 1..=d {
        let mut acc = Polynomial::zero(&s);
        for j in 1..=k.min(a.len()) {
            acc = &acc - &star(&a[j - 1], &b[k - j])?;
        }
        b.push(acc);
    }
    Ok(b.split_off(1))
}

/// `Psi(X) = a^{-1} * Phi(X) * a` for `a = 1 + t a_1 + ... + t^D a_D`,
/// truncated at order `d`.
pub fn apply_equivalence(
    alg: &SlAlgebra,
    a: &[Polynomial],
    phi: &FormalDeformation,
    d: usize,
) -> Result<FormalDeformation> {
    if phi.order() < d {
        return Err(Error::Truncated {
            have: phi.order(),
            need: d,
        });
    }
    let s = alg.phase();
    let series = |v: &[Polynomial]| -> Vec<Polynomial> {
        let mut out = vec![Polynomial::one(s)];
        out.extend((1..=d).map(|k| v.get(k - 1).cloned().unwrap_or_else(|| Polynomial::zero(s))));
        out
    };
    let a_full = series(a);
    let b_full = series(&star_inverse_series(&a_full[1..], d)?);
    let mut coeffs = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut values = Vec::with_capacity(alg.dim());
        for x in 0..alg.dim() {
            let mut acc = Polynomial::zero(s);
            for i in 0..=k {
                if b_full[i].is_zero() {
                    continue;
                }
                for j in 0..=(k - i) {
                    let v = phi.coeffs[j].value(x);
                    if v.is_zero() {
                        continue;
                    }
                    let left = star(&b_full[i], v)?;
                    let l = k - i - j;
                    if !a_full[l].is_zero() {
                        acc = &acc + &star(&left, &a_full[l])?;
                    }
                }
            }
            values.push(acc);
        }
        coeffs.push(Cochain1::new(alg, values)?);
    }
    FormalDeformation::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Space;

    fn ph(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Space::phase(n), s).unwrap()
    }

    #[test]
    fn action_examples() {
        let alg = SlAlgebra::new(1).unwrap();
        assert_eq!(
            module_action(&alg, &MatrixG::e(1, 2, 1), &ph(1, "p1")).unwrap(),
            ph(1, "-1")
        );
        for x in alg.basis().elements() {
            assert!(module_action(&alg, x, &ph(1, "1")).unwrap().is_zero());
        }
    }

    #[test]
    fn phi1_examples() {
        let alg = SlAlgebra::new(2).unwrap();
        let phi = phi1(&alg);
        assert_eq!(phi.eval(&alg, &MatrixG::h(2, 1)).unwrap(), ph(2, "-1"));
        assert_eq!(phi.eval(&alg, &MatrixG::h(2, 2)).unwrap(), ph(2, "-1"));
        assert!(phi.eval(&alg, &MatrixG::e(2, 2, 1)).unwrap().is_zero());
        assert_eq!(phi.eval(&alg, &MatrixG::e(2, 1, 3)).unwrap(), ph(2, "p2"));
        // E11 - E22 = -H1
        let d = MatrixG::e(2, 1, 1).sub(&MatrixG::e(2, 2, 2));
        assert_eq!(phi.eval(&alg, &d).unwrap(), ph(2, "1"));
        assert!(is_cocycle(&alg, &phi).unwrap());
        // the homomorphism property leaves exactly one copy of [X,Y]~
        let t = Cochain1::tilde(&alg);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let br = alg.basis().element(i).bracket(alg.basis().element(j));
                assert_eq!(cobord1_basis(&alg, &t, i, j).unwrap(), alg.tilde(&br));
            }
        }
        assert!(is_cocycle(&alg, &coboundary_of(&alg, &ph(2, "p1^2*q2 + q1")).unwrap()).unwrap());
        let mut broken = phi.clone();
        broken.set(0, ph(2, "p1"));
        assert!(!is_cocycle(&alg, &broken).unwrap());
    }

    #[test]
    fn truncated_module_dim() {
        for (n, d) in [(1, 3), (2, 4)] {
            let m = TruncatedModule::new(n, d);
            assert_eq!(GaussianRational::from_int(m.dim() as i64), m.expected_dim());
        }
    }

    #[test]
    fn h1_small() {
        let alg = SlAlgebra::new(1).unwrap();
        for d in 1..=3 {
            let blocks = TruncatedCohomology::compute(&alg, d).unwrap();
            let dense = TruncatedCohomology::compute_dense(&alg, d).unwrap();
            assert_eq!(
                (blocks.dim_z1(), blocks.dim_b1()),
                (dense.dim_z1(), dense.dim_b1())
            );
            assert_eq!(blocks.dim_h1(), 1);
            assert!(blocks.generated_by(&phi1(&alg)));
        }
        let r = h1_dimension(1, 3).unwrap();
        assert!(r.stabilized && r.phi1_is_cocycle && !r.phi1_is_coboundary && r.generator_check);
        assert!(
            solve_coboundary(&alg, &coboundary_of(&alg, &ph(1, "p1*q1^2")).unwrap(), 3)
                .unwrap()
                .is_some()
        );
    }

    #[test]
    fn spaces_contain_expected() {
        let alg = SlAlgebra::new(1).unwrap();
        let coh = TruncatedCohomology::compute(&alg, 3).unwrap();
        for z in coh.cocycles(&alg) {
            assert!(is_cocycle(&alg, &z).unwrap());
            assert!(z.max_degree().unwrap_or(0) <= 3);
        }
        for b in coh.coboundaries(&alg) {
            assert!(is_cocycle(&alg, &b).unwrap());
        }
        let f = coboundary_of(&alg, &ph(1, "p1")).unwrap();
        assert!(coh.in_coboundaries(&f));
        assert!(coboundary_of(&alg, &ph(1, "5")).unwrap().is_zero());
        assert!(coh.in_cocycles(&phi1(&alg)));
        assert!(!coh.in_coboundaries(&phi1(&alg)));
    }

    #[test]
    fn deformation_examples() {
        let alg = SlAlgebra::new(1).unwrap();
        for a in ["1", "i", "-3"] {
            let phi = FormalDeformation::phi_a(&alg, &a.parse().unwrap(), 5);
            assert!(deformation_check(&alg, &phi, 5).unwrap().passed());
        }
        let mut bad = FormalDeformation::phi_a(&alg, &GaussianRational::one(), 3);
        let mut c = bad.coeff(1).clone();
        c.set(1, ph(1, "q1"));
        bad.set_coeff(1, c);
        assert_eq!(
            deformation_check(&alg, &bad, 3)
                .unwrap()
                .failure
                .map(|f| f.0),
            Some(1)
        );
        assert!(deformation_check(
            &alg,
            &FormalDeformation::phi_a(&alg, &GaussianRational::zero(), 0),
            0
        )
        .unwrap()
        .passed());
    }

    #[test]
    fn reparametrize_examples() {
        let alg = SlAlgebra::new(1).unwrap();
        let phi = FormalDeformation::phi_a(&alg, &GaussianRational::from_int(2), 4);
        let one = GaussianRational::one();
        let zero = GaussianRational::zero();
        assert_eq!(
            reparametrize(&alg, &phi, core::slice::from_ref(&one), 4).unwrap(),
            phi
        );
        let shifted = reparametrize(&alg, &phi, &[zero.clone(), one.clone()], 4).unwrap();
        assert!(shifted.coeff(1).is_zero());
        assert_eq!(shifted.coeff(2), phi.coeff(1));
        assert!(deformation_check(&alg, &shifted, 4).unwrap().passed());
        let flat = reparametrize(&alg, &phi, &[], 4).unwrap();
        assert_eq!(flat.coeff(0), phi.coeff(0));
        assert!((1..=4).all(|k| flat.coeff(k).is_zero()));
    }

    #[test]
    fn equivalence_examples() {
        let alg = SlAlgebra::new(1).unwrap();
        let phi = FormalDeformation::phi_a(&alg, &GaussianRational::one(), 3);
        assert_eq!(apply_equivalence(&alg, &[], &phi, 3).unwrap(), phi);
        let a = [ph(1, "p1*q1"), ph(1, "q1^2 - 2*p1")];
        let psi = apply_equivalence(&alg, &a, &phi, 3).unwrap();
        assert!(deformation_check(&alg, &psi, 3).unwrap().passed());
        let inv = star_inverse_series(&a, 3).unwrap();
        assert_eq!(apply_equivalence(&alg, &inv, &psi, 3).unwrap(), phi);
        // first order: Phi_1 + (-i) df
        let undeformed = FormalDeformation::phi_a(&alg, &GaussianRational::zero(), 1);
        let f = ph(1, "p1^2*q1");
        let psi = apply_equivalence(&alg, core::slice::from_ref(&f), &undeformed, 1).unwrap();
        let expect = coboundary_of(&alg, &f)
            .unwrap()
            .scale(&GaussianRational::from_parts(0, 1, -1, 1));
        assert_eq!(psi.coeff(1), &expect);
    }
}
