//! `sl(n+1, C)` as matrices: the preferred basis and its structure
//! constants, the real forms `su(n+1)` and `su(1,n)`, the rank-one orbit
//! parametrization `Psi(p, q)`, and the coordinate functions
//! `X~(p, q) = Tr(Psi(p, q) X)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::moyal;
use crate::poly::{MultiIndex, Polynomial, Space};
use crate::scalar::GaussianRational;
use crate::xla::{self, ExactMatrix};

/// An `(n+1) x (n+1)` complex matrix. Elements of `sl(n+1, C)` are the
/// traceless ones; products of basis elements need not be.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixG {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl MatrixG {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![GaussianRational::zero(); (n + 1) * (n + 1)],
        }
    }

    /// Elementary matrix `E_ij`, 1-based indices.
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(n);
        m.set(i, j, GaussianRational::one());
        m
    }

    /// `H_k = E_{k+1,k+1} - E_11`.
    pub fn h(n: usize, k: usize) -> Self {
        let mut m = Self::e(n, k + 1, k + 1);
        m.set(1, 1, GaussianRational::from_int(-1));
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[(i - 1) * self.dim() + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        let d = self.dim();
        self.entries[(i - 1) * d + (j - 1)] = v;
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for k in 1..=self.dim() {
            acc += self.get(k, k);
        }
        acc
    }

    pub fn is_traceless(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_zero)
    }

    pub fn add(&self, rhs: &MatrixG) -> MatrixG {
        assert_eq!(self.n, rhs.n);
        MatrixG {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &MatrixG) -> MatrixG {
        self.add(&rhs.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> MatrixG {
        MatrixG {
            n: self.n,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, rhs: &MatrixG) -> MatrixG {
        assert_eq!(self.n, rhs.n);
        let d = self.dim();
        let mut out = MatrixG::zero(self.n);
        for i in 1..=d {
            for k in 1..=d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 1..=d {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[(i - 1) * d + (j - 1)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `[X, Y] = XY - YX`.
    pub fn bracket(&self, rhs: &MatrixG) -> MatrixG {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn conj_transpose(&self) -> MatrixG {
        let d = self.dim();
        let mut out = MatrixG::zero(self.n);
        for i in 1..=d {
            for j in 1..=d {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    /// `J = diag(-1, I_n)`.
    pub fn j_form(n: usize) -> MatrixG {
        let mut m = MatrixG::zero(n);
        m.set(1, 1, GaussianRational::from_int(-1));
        for k in 2..=n + 1 {
            m.set(k, k, GaussianRational::one());
        }
        m
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let d = self.dim();
        let rows = (1..=d)
            .map(|i| (1..=d).map(|j| self.get(i, j).clone()).collect())
            .collect();
        ExactMatrix::from_rows(d, rows).expect("square")
    }
}

impl fmt::Debug for MatrixG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.to_exact(), f)
    }
}

/// The preferred basis `H_1..H_n`, then `E_ij` (`i != j`) in
/// lexicographic order, with its structure constants.
#[derive(Clone, Debug)]
pub struct LieBasis {
    n: usize,
    labels: Vec<String>,
    elements: Vec<MatrixG>,
    /// `structure[i][j]` = coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<Vec<GaussianRational>>>,
}

fn e_label(i: usize, j: usize) -> String {
    if i < 10 && j < 10 {
        format!("E{i}{j}")
    } else {
        format!("E{i},{j}")
    }
}

impl LieBasis {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRank(n));
        }
        let mut labels = Vec::new();
        let mut elements = Vec::new();
        for k in 1..=n {
            labels.push(format!("H{k}"));
            elements.push(MatrixG::h(n, k));
        }
        for i in 1..=n + 1 {
            for j in 1..=n + 1 {
                if i != j {
                    labels.push(e_label(i, j));
                    elements.push(MatrixG::e(n, i, j));
                }
            }
        }
        let mut basis = Self {
            n,
            labels,
            elements,
            structure: Vec::new(),
        };
        let structure = (0..basis.dim())
            .map(|i| {
                (0..basis.dim())
                    .map(|j| {
                        basis
                            .coords(&basis.elements[i].bracket(&basis.elements[j]))
                            .expect("traceless")
                    })
                    .collect()
            })
            .collect();
        basis.structure = structure;
        Ok(basis)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn element(&self, i: usize) -> &MatrixG {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[MatrixG] {
        &self.elements
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(String::from(label)))
    }

    /// Position of `E_ij` (1-based, `i != j`).
    pub fn e_index(&self, i: usize, j: usize) -> usize {
        self.index(&e_label(i, j)).expect("valid E label")
    }

    pub fn h_index(&self, k: usize) -> usize {
        k - 1
    }

    /// Coordinates of a traceless matrix. Off-diagonal entries are the
    /// `E_ij` coordinates; the `H_k` coordinate is the `(k+1, k+1)` entry.
    pub fn coords(&self, x: &MatrixG) -> Result<Vec<GaussianRational>> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "matrix for n={} in basis for n={}",
                x.n(),
                self.n
            )));
        }
        if !x.is_traceless() {
            return Err(Error::NotTraceless);
        }
        let mut c = Vec::with_capacity(self.dim());
        for k in 1..=self.n {
            c.push(x.get(k + 1, k + 1).clone());
        }
        for i in 1..=self.n + 1 {
            for j in 1..=self.n + 1 {
                if i != j {
                    c.push(x.get(i, j).clone());
                }
            }
        }
        Ok(c)
    }

    pub fn from_coords(&self, c: &[GaussianRational]) -> MatrixG {
        let mut acc = MatrixG::zero(self.n);
        for (v, b) in c.iter().zip(&self.elements) {
            if !v.is_zero() {
                acc = acc.add(&b.scale(v));
            }
        }
        acc
    }

    pub fn structure_constants(&self, i: usize, j: usize) -> &[GaussianRational] {
        &self.structure[i][j]
    }

    /// Recomputes every bracket as a matrix commutator and checks it
    /// against the table, plus antisymmetry and Jacobi of the table.
    pub fn verify_structure(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let direct = self.elements[i].bracket(&self.elements[j]);
                if self.from_coords(&self.structure[i][j]) != direct {
                    return false;
                }
                let neg: Vec<_> = self.structure[j][i].iter().map(|v| -v).collect();
                if self.structure[i][j] != neg {
                    return false;
                }
            }
        }
        // Jacobi via the table: sum over cyclic [[b_i,b_j],b_k]
        let bracket_c = |a: &[GaussianRational], k: usize| -> Vec<GaussianRational> {
            let mut out = vec![GaussianRational::zero(); d];
            for (m, am) in a.iter().enumerate() {
                if am.is_zero() {
                    continue;
                }
                for (o, v) in self.structure[m][k].iter().enumerate() {
                    out[o] += &(am * v);
                }
            }
            out
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let a = bracket_c(&self.structure[i][j], k);
                    let b = bracket_c(&self.structure[j][k], i);
                    let c = bracket_c(&self.structure[k][i], j);
                    if a.iter()
                        .zip(&b)
                        .zip(&c)
                        .any(|((x, y), z)| !(&(x + y) + z).is_zero())
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Coordinates of the trace-form dual basis: `Tr(b_i b^j) = delta_ij`.
    pub fn trace_dual(&self) -> Vec<Vec<GaussianRational>> {
        let d = self.dim();
        let mut gram = ExactMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                gram.set(i, j, self.elements[i].mul(&self.elements[j]).trace());
            }
        }
        // b^j = sum_m c_{jm} b_m with sum_m G_{im} c_{jm} = delta_ij
        (0..d)
            .map(|j| {
                let mut e = vec![GaussianRational::zero(); d];
                e[j] = GaussianRational::one();
                xla::solve(&gram, &e)
                    .expect("square")
                    .expect("trace form is nondegenerate")
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealForm {
    /// `su(n+1)`: `X* = -X`.
    Compact,
    /// `su(1,n)`: `X* = -J X J`, `J = diag(-1, I_n)`.
    Noncompact,
}

impl RealForm {
    pub fn name(self, n: usize) -> String {
        match self {
            RealForm::Compact => format!("su({})", n + 1),
            RealForm::Noncompact => format!("su(1,{n})"),
        }
    }

    pub fn contains(self, x: &MatrixG) -> bool {
        let star = x.conj_transpose();
        let target = match self {
            RealForm::Compact => x.scale(&GaussianRational::from_int(-1)),
            RealForm::Noncompact => {
                let j = MatrixG::j_form(x.n());
                j.mul(x).mul(&j).scale(&GaussianRational::from_int(-1))
            }
        };
        star == target && x.is_traceless()
    }
}

/// A real basis (over `R`) of the real form, of size `(n+1)^2 - 1`.
pub fn real_form_basis(n: usize, form: RealForm) -> Vec<MatrixG> {
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let neg = GaussianRational::from_int(-1);
    let mut out = Vec::new();
    for k in 1..=n {
        out.push(MatrixG::h(n, k).scale(&i));
    }
    // first row/column block: b and -b* (compact) or b* (noncompact)
    let col_sign = match form {
        RealForm::Compact => &neg,
        RealForm::Noncompact => &one,
    };
    for k in 2..=n + 1 {
        let row = MatrixG::e(n, 1, k);
        let col = MatrixG::e(n, k, 1);
        out.push(row.add(&col.scale(col_sign)));
        out.push(row.sub(&col.scale(col_sign)).scale(&i));
    }
    // anti-Hermitian n x n block
    for a in 2..=n + 1 {
        for b in (a + 1)..=n + 1 {
            out.push(MatrixG::e(n, a, b).sub(&MatrixG::e(n, b, a)));
            out.push(MatrixG::e(n, a, b).add(&MatrixG::e(n, b, a)).scale(&i));
        }
    }
    out
}

/// A matrix of phase-space polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

impl SymbolicMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based entry.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[(i - 1) * (self.n + 1) + (j - 1)]
    }

    pub fn trace(&self) -> Polynomial {
        let mut acc = Polynomial::zero(self.get(1, 1).space());
        for k in 1..=self.n + 1 {
            acc = &acc + self.get(k, k);
        }
        acc
    }

    /// True iff every 2x2 minor vanishes identically.
    pub fn minors_vanish(&self) -> bool {
        let d = self.n + 1;
        for r1 in 1..=d {
            for r2 in (r1 + 1)..=d {
                for c1 in 1..=d {
                    for c2 in (c1 + 1)..=d {
                        let m = &(self.get(r1, c1) * self.get(r2, c2))
                            - &(self.get(r1, c2) * self.get(r2, c1));
                        if !m.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn eval(&self, point: &[GaussianRational]) -> Result<ExactMatrix> {
        let d = self.n + 1;
        let mut m = ExactMatrix::zeros(d, d);
        for i in 1..=d {
            for j in 1..=d {
                m.set(i - 1, j - 1, self.get(i, j).eval(point)?);
            }
        }
        Ok(m)
    }
}

/// `Psi(p, q)`: first row `(-sum p_j q_j, q_1..q_n)`, row `k+1` equal to
/// `p_k` times the first row.
pub fn psi(n: usize) -> SymbolicMatrix {
    let s = Space::phase(n);
    let mut pq = Polynomial::zero(&s);
    for j in 1..=n {
        pq = &pq + &(&Polynomial::var(&s, s.p(j)) * &Polynomial::var(&s, s.q(j)));
    }
    let first: Vec<Polynomial> = core::iter::once(-&pq)
        .chain((1..=n).map(|j| Polynomial::var(&s, s.q(j))))
        .collect();
    let mut entries = first.clone();
    for k in 1..=n {
        let pk = Polynomial::var(&s, s.p(k));
        entries.extend(first.iter().map(|f| &pk * f));
    }
    SymbolicMatrix { n, entries }
}

/// Everything needed repeatedly for one rank `n`: the basis, `Psi`, and
/// the coordinate function of every basis element.
#[derive(Clone, Debug)]
pub struct SlAlgebra {
    basis: LieBasis,
    phase: Space,
    psi: SymbolicMatrix,
    tilde_basis: Vec<Polynomial>,
}

impl SlAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        let basis = LieBasis::new(n)?;
        let psi = psi(n);
        let phase = Space::phase(n);
        let tilde_basis = basis
            .elements()
            .iter()
            .map(|x| tilde_with(&psi, x))
            .collect();
        Ok(Self {
            basis,
            phase,
            psi,
            tilde_basis,
        })
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &LieBasis {
        &self.basis
    }

    pub fn phase(&self) -> &Space {
        &self.phase
    }

    pub fn psi(&self) -> &SymbolicMatrix {
        &self.psi
    }

    /// `X~` for a basis index.
    pub fn tilde_basis(&self, i: usize) -> &Polynomial {
        &self.tilde_basis[i]
    }

    /// `X~ = Tr(Psi X)`.
    pub fn tilde(&self, x: &MatrixG) -> Polynomial {
        tilde_with(&self.psi, x)
    }

    /// `sum_i c_i b_i~` from basis coordinates.
    pub fn tilde_coords(&self, c: &[GaussianRational]) -> Polynomial {
        let mut acc = Polynomial::zero(&self.phase);
        for (v, t) in c.iter().zip(&self.tilde_basis) {
            if !v.is_zero() {
                acc = &acc + &t.scale(v);
            }
        }
        acc
    }

    /// Weight of a basis element under the Cartan subalgebra, encoded as
    /// the `(q-exponent - p-exponent)` vector shared by every monomial of
    /// its coordinate function.
    pub fn weight(&self, i: usize) -> Vec<i64> {
        let (m, _) = self.tilde_basis[i]
            .terms()
            .next()
            .expect("nonzero coordinate function");
        monomial_weight(self.n(), m)
    }
}

/// Cartan weight of a phase-space monomial `p^a q^b`, encoded as `b - a`.
/// The Poisson bracket with `H_k~` multiplies `p^a q^b` by
/// `(b_k - a_k) + sum_j (b_j - a_j)`, an invertible function of `b - a`.
pub fn monomial_weight(n: usize, m: &MultiIndex) -> Vec<i64> {
    (0..n)
        .map(|k| i64::from(m.exps()[n + k]) - i64::from(m.exps()[k]))
        .collect()
}

fn tilde_with(psi: &SymbolicMatrix, x: &MatrixG) -> Polynomial {
    let d = psi.n() + 1;
    let mut acc = Polynomial::zero(psi.get(1, 1).space());
    for i in 1..=d {
        for j in 1..=d {
            let c = x.get(i, j);
            if !c.is_zero() {
                acc = &acc + &psi.get(j, i).scale(c);
            }
        }
    }
    acc
}

pub fn basis_sl(n: usize) -> Result<LieBasis> {
    LieBasis::new(n)
}

/// `X~` for a standalone matrix.
pub fn tilde(x: &MatrixG) -> Polynomial {
    tilde_with(&psi(x.n()), x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeisenbergReport {
    pub n: usize,
    pub labels: Vec<String>,
    pub dimension: usize,
    pub center: String,
    pub center_tilde: Polynomial,
    pub closes: bool,
    pub only_expected_brackets: bool,
    pub tilde_identities: bool,
    /// The coordinate functions Poisson-commute exactly as the matrices
    /// bracket.
    pub tilde_brackets: bool,
}

impl HeisenbergReport {
    pub fn passed(&self) -> bool {
        self.closes
            && self.only_expected_brackets
            && self.tilde_identities
            && self.tilde_brackets
            && self.dimension == 2 * self.n - 1
    }
}

/// Checks that `E_{n+1,2..n}, E_{21..n+1,1}` span a Heisenberg algebra
/// with center `E_{n+1,1}`, that the only nonzero brackets are
/// `[E_{n+1,k}, E_{k,1}] = E_{n+1,1}`, and that the coordinate functions
/// are the expected monomials.
pub fn heisenberg_check(n: usize) -> Result<HeisenbergReport> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    let alg = SlAlgebra::new(n)?;
    let mut members: Vec<(usize, usize)> = (2..=n).map(|k| (n + 1, k)).collect();
    members.extend((2..=n + 1).map(|k| (k, 1)));
    let mats: Vec<MatrixG> = members.iter().map(|&(i, j)| MatrixG::e(n, i, j)).collect();
    let center = MatrixG::e(n, n + 1, 1);

    let mut span = xla::SpanBuilder::new((n + 1) * (n + 1));
    let flat = |m: &MatrixG| -> Vec<GaussianRational> {
        (1..=n + 1)
            .flat_map(|i| (1..=n + 1).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j).clone())
            .collect()
    };
    for m in &mats {
        span.insert(&flat(m));
    }
    let dimension = span.rank();

    let mut closes = true;
    let mut only_expected = true;
    let mut tilde_brackets = true;
    for (a, (ia, ja)) in members.iter().enumerate() {
        for (b, (ib, jb)) in members.iter().enumerate() {
            let br = mats[a].bracket(&mats[b]);
            if !span.contains(&flat(&br)) {
                closes = false;
            }
            let expected = if *ia == n + 1 && *jb == 1 && ja == ib {
                center.clone()
            } else if *ib == n + 1 && *ja == 1 && jb == ia {
                center.scale(&GaussianRational::from_int(-1))
            } else {
                MatrixG::zero(n)
            };
            if br != expected {
                only_expected = false;
            }
            let pb = moyal::poisson(&alg.tilde(&mats[a]), &alg.tilde(&mats[b]))?;
            if pb != alg.tilde(&br) {
                tilde_brackets = false;
            }
        }
    }
    // center commutes with everything in the span
    if mats.iter().any(|m| !m.bracket(&center).is_zero()) {
        only_expected = false;
    }

    let s = alg.phase();
    let var = |v: usize| Polynomial::var(s, v);
    let mut tilde_identities = true;
    for k in 2..=n {
        tilde_identities &= alg.tilde(&MatrixG::e(n, n + 1, k)) == &var(s.p(k - 1)) * &var(s.q(n));
        tilde_identities &= alg.tilde(&MatrixG::e(n, k, 1)) == var(s.q(k - 1));
    }
    let center_tilde = alg.tilde(&center);
    tilde_identities &= center_tilde == var(s.q(n));

    Ok(HeisenbergReport {
        n,
        labels: members.iter().map(|&(i, j)| e_label(i, j)).collect(),
        dimension,
        center: e_label(n + 1, 1),
        center_tilde,
        closes,
        only_expected_brackets: only_expected,
        tilde_identities,
        tilde_brackets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(&Space::phase(n), s).unwrap()
    }

    #[test]
    fn basis_examples() {
        let b = LieBasis::new(1).unwrap();
        assert_eq!(b.labels(), ["H1", "E12", "E21"]);
        assert_eq!(LieBasis::new(2).unwrap().dim(), 8);
        assert_eq!(LieBasis::new(0).unwrap_err(), Error::InvalidRank(0));
        let h = b.element(b.index("H1").unwrap());
        let e = b.element(b.index("E12").unwrap());
        assert_eq!(h.bracket(e), e.scale(&GaussianRational::from_int(-2)));
        assert!(b.verify_structure());
        assert!(LieBasis::new(3).unwrap().verify_structure());
        assert!(b.index("E13").is_err());
    }

    #[test]
    fn coords_round_trip() {
        let b = LieBasis::new(2).unwrap();
        for (k, x) in b.elements().iter().enumerate() {
            let c = b.coords(x).unwrap();
            assert_eq!(c.iter().filter(|v| !v.is_zero()).count(), 1);
            assert!(c[k].is_one());
        }
        assert_eq!(b.coords(&MatrixG::e(2, 1, 1)), Err(Error::NotTraceless));
    }

    #[test]
    fn real_forms() {
        for n in 1..=3 {
            for form in [RealForm::Compact, RealForm::Noncompact] {
                let basis = real_form_basis(n, form);
                assert_eq!(basis.len(), (n + 1) * (n + 1) - 1);
                assert!(basis
                    .iter()
                    .all(|x| form.contains(x) && x.trace().is_zero()));
            }
        }
        let x = MatrixG::e(1, 1, 2).add(&MatrixG::e(1, 2, 1));
        assert!(RealForm::Noncompact.contains(&x));
        assert!(!RealForm::Compact.contains(&x));
        let j = MatrixG::j_form(1);
        assert!(x.conj_transpose().mul(&j).add(&j.mul(&x)).is_zero());
    }

    #[test]
    fn psi_examples() {
        let p = psi(1);
        assert_eq!(p.get(1, 1), &ph(1, "-p1*q1"));
        assert_eq!(p.get(1, 2), &ph(1, "q1"));
        assert_eq!(p.get(2, 1), &ph(1, "-p1^2*q1"));
        assert_eq!(p.get(2, 2), &ph(1, "p1*q1"));
        for n in 1..=3 {
            assert!(psi(n).trace().is_zero());
            assert!(psi(n).minors_vanish());
        }
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(tilde(&MatrixG::e(1, 2, 1)), ph(1, "q1"));
        assert_eq!(tilde(&MatrixG::h(1, 1)), ph(1, "2*p1*q1"));
        assert_eq!(tilde(&MatrixG::e(1, 1, 2)), ph(1, "-p1^2*q1"));
        for n in 2..=3 {
            for k in 2..=n {
                let expect =
                    Polynomial::parse(&Space::phase(n), &format!("p{}*q{}", k - 1, n)).unwrap();
                assert_eq!(tilde(&MatrixG::e(n, n + 1, k)), expect);
            }
        }
    }

    #[test]
    fn tilde_degree_bounds() {
        let alg = SlAlgebra::new(3).unwrap();
        let qs: Vec<usize> = (1..=3).map(|k| alg.phase().q(k)).collect();
        for i in 0..alg.dim() {
            let t = alg.tilde_basis(i);
            assert!(t.degree().unwrap() <= 3);
            assert!(t.degree_in(&qs).unwrap() <= 1);
            let w = alg.weight(i);
            assert!(t.terms().all(|(m, _)| monomial_weight(3, m) == w));
        }
    }

    #[test]
    fn heisenberg_examples() {
        let r = heisenberg_check(2).unwrap();
        assert_eq!(r.dimension, 3);
        assert_eq!(r.center_tilde, ph(2, "q2"));
        assert!(r.passed());
        let r = heisenberg_check(3).unwrap();
        assert_eq!(r.dimension, 5);
        assert!(r.passed());
        assert_eq!(
            MatrixG::e(2, 3, 2).bracket(&MatrixG::e(2, 2, 1)),
            MatrixG::e(2, 3, 1)
        );
        assert!(heisenberg_check(1).is_err());
    }
}
