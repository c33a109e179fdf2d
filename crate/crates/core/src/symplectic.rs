//! Symplectic forms on Chevalley–Eilenberg models.
//!
//! A degree-2 element `omega = sum_{i<j} a_ij x_i x_j` is symplectic when it
//! is closed and its skew coefficient matrix is nonsingular, i.e. the
//! contraction `omega(X, -)` vanishes only for `X = 0`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, Monomial};
use crate::cohomology::{slice, Cohomology, CohomologyError};
use crate::lie::CeModel;
use crate::linalg::Matrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymplecticError {
    #[error("expected a homogeneous degree-2 element")]
    NotDegreeTwo,
    #[error("element belongs to a different algebra")]
    ForeignElement,
    #[error("coefficient ({i}, {j}) out of range: need 1 <= i < j <= {dim}")]
    BadIndex { i: usize, j: usize, dim: usize },
    #[error("alpha has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not symplectic: {0}")]
    NotSymplectic(Box<SymplecticCertificate>),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// A degree-2 element of a CE model together with its coefficients
/// `a_ij`, `i < j` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoForm {
    dim: usize,
    omega: Element,
    upper: BTreeMap<(usize, usize), Rational>,
}

impl TwoForm {
    pub fn from_element(ce: &CeModel, omega: &Element) -> Result<Self, SymplecticError> {
        if !omega.algebra().same_as(ce.algebra()) {
            return Err(SymplecticError::ForeignElement);
        }
        if !omega.is_zero() && omega.homogeneous_degree() != Some(2) {
            return Err(SymplecticError::NotDegreeTwo);
        }
        let upper = omega
            .terms()
            .iter()
            .map(|(m, c)| {
                let f = m.factors();
                ((f[0].0 + 1, f[1].0 + 1), c.clone())
            })
            .collect();
        Ok(TwoForm {
            dim: ce.dim(),
            omega: omega.clone(),
            upper,
        })
    }

    /// `omega = sum c x_i x_j` over the given `(i, j, c)` with `i < j`.
    pub fn from_coefficients(
        ce: &CeModel,
        coefficients: &[(usize, usize, Rational)],
    ) -> Result<Self, SymplecticError> {
        let n = ce.dim();
        let mut terms = Vec::new();
        for (i, j, c) in coefficients {
            if *i == 0 || i >= j || *j > n {
                return Err(SymplecticError::BadIndex {
                    i: *i,
                    j: *j,
                    dim: n,
                });
            }
            terms.push((
                Monomial::from_exponents([(i - 1, 1), (j - 1, 1)]),
                c.clone(),
            ));
        }
        Self::from_element(ce, &Element::from_terms(ce.algebra(), terms))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn omega(&self) -> &Element {
        &self.omega
    }

    /// Nonzero `a_ij`, `i < j`, 1-based.
    pub fn coefficients(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.upper
    }

    pub fn a(&self, i: usize, j: usize) -> Rational {
        self.upper
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Full antisymmetric matrix, `A[i][j] = a_ij` above the diagonal.
    pub fn skew_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for ((i, j), c) in &self.upper {
            m[(i - 1, j - 1)] = c.clone();
            m[(j - 1, i - 1)] = -c.clone();
        }
        m
    }

    /// `omega(X, -) = sum_{i<j} a_ij (alpha_i x_j - alpha_j x_i)` where
    /// `alpha_k = x_k(X)`.
    pub fn contraction(&self, alpha: &[Rational]) -> Result<Element, SymplecticError> {
        if alpha.len() != self.dim {
            return Err(SymplecticError::LengthMismatch {
                expected: self.dim,
                found: alpha.len(),
            });
        }
        let algebra = self.omega.algebra();
        let terms = self.upper.iter().flat_map(|((i, j), a)| {
            [
                (Monomial::generator(j - 1), a * &alpha[i - 1]),
                (Monomial::generator(i - 1), -(a * &alpha[j - 1])),
            ]
        });
        Ok(Element::from_terms(algebra, terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticCertificate {
    pub dim: usize,
    pub closed: bool,
    pub d_omega: Element,
    pub rank: usize,
    /// A nonzero `X` with `omega(X, -) = 0`, when one exists.
    pub kernel_witness: Option<Vec<Rational>>,
}

impl SymplecticCertificate {
    pub fn nondegenerate(&self) -> bool {
        self.rank == self.dim
    }

    pub fn is_symplectic(&self) -> bool {
        self.closed && self.nondegenerate()
    }
}

impl fmt::Display for SymplecticCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.closed {
            write!(f, "closed")?;
        } else {
            write!(f, "not closed (d omega = {})", self.d_omega)?;
        }
        write!(f, ", rank {}/{}", self.rank, self.dim)
    }
}

pub fn is_symplectic(
    ce: &CeModel,
    omega: &Element,
) -> Result<SymplecticCertificate, SymplecticError> {
    let form = TwoForm::from_element(ce, omega)?;
    Ok(certify(ce, &form))
}

fn certify(ce: &CeModel, form: &TwoForm) -> SymplecticCertificate {
    let d_omega = ce.d(form.omega());
    let a = form.skew_matrix();
    let rank = a.rank();
    let kernel_witness = (rank < form.dim).then(|| a.kernel().swap_remove(0));
    SymplecticCertificate {
        dim: form.dim,
        closed: d_omega.is_zero(),
        d_omega,
        rank,
        kernel_witness,
    }
}

/// A two-form that passed both symplectic conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    form: TwoForm,
}

impl SymplecticForm {
    pub fn certify(ce: &CeModel, omega: &Element) -> Result<Self, SymplecticError> {
        Self::from_form(ce, TwoForm::from_element(ce, omega)?)
    }

    pub fn from_coefficients(
        ce: &CeModel,
        coefficients: &[(usize, usize, Rational)],
    ) -> Result<Self, SymplecticError> {
        Self::from_form(ce, TwoForm::from_coefficients(ce, coefficients)?)
    }

    fn from_form(ce: &CeModel, form: TwoForm) -> Result<Self, SymplecticError> {
        let cert = certify(ce, &form);
        if cert.is_symplectic() {
            Ok(SymplecticForm { form })
        } else {
            Err(SymplecticError::NotSymplectic(Box::new(cert)))
        }
    }

    pub fn form(&self) -> &TwoForm {
        &self.form
    }

    pub fn omega(&self) -> &Element {
        self.form.omega()
    }

    pub fn dim(&self) -> usize {
        self.form.dim
    }

    pub fn contraction(&self, alpha: &[Rational]) -> Result<Element, SymplecticError> {
        self.form.contraction(alpha)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub budget: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            budget: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoneReason {
    OddDimension,
    /// The Pfaffian of the generic closed 2-form is the zero polynomial.
    PfaffianVanishes {
        closed_forms: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticSearch {
    Found { form: SymplecticForm, trials: usize },
    DefinitelyNone(NoneReason),
    Exhausted { trials: usize },
}

/// Basis of closed forms in `Lambda^2`, as two-forms.
pub fn closed_two_forms(ce: &CeModel) -> Vec<TwoForm> {
    let s = slice(ce.dga(), 2).expect("degree-2 exterior slice");
    s.d_out
        .kernel()
        .iter()
        .map(|v| TwoForm::from_element(ce, &s.element(ce.algebra(), v)).expect("degree 2"))
        .collect()
}

/// Random search over closed 2-forms, falling back to an exact Pfaffian
/// expansion to decide whether none exists.
pub fn find_symplectic(ce: &CeModel, options: SearchOptions) -> SymplecticSearch {
    let n = ce.dim();
    if n % 2 == 1 {
        return SymplecticSearch::DefinitelyNone(NoneReason::OddDimension);
    }
    let closed = closed_two_forms(ce);
    if closed.is_empty() {
        return SymplecticSearch::DefinitelyNone(NoneReason::PfaffianVanishes { closed_forms: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for trial in 0..options.budget {
        let bound = 2 + (trial / 8) as i64;
        let mut omega = Element::zero(ce.algebra());
        for z in &closed {
            let mut c: i64 = 0;
            while c == 0 {
                c = rng.random_range(-bound..=bound);
            }
            omega = &omega + &z.omega().scale(&Rational::from_integer(c.into()));
        }
        let form = TwoForm::from_element(ce, &omega).expect("degree 2");
        if form.skew_matrix().determinant().is_zero() {
            continue;
        }
        if let Ok(form) = SymplecticForm::from_form(ce, form) {
            return SymplecticSearch::Found {
                form,
                trials: trial + 1,
            };
        }
    }
    let matrices: Vec<Matrix> = closed.iter().map(TwoForm::skew_matrix).collect();
    if generic_pfaffian(&matrices, n).is_empty() {
        SymplecticSearch::DefinitelyNone(NoneReason::PfaffianVanishes {
            closed_forms: closed.len(),
        })
    } else {
        SymplecticSearch::Exhausted {
            trials: options.budget,
        }
    }
}

/// Sparse polynomial: exponent vector to coefficient, no zero coefficients.
type Poly = BTreeMap<Vec<u32>, Rational>;

fn poly_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (e1, c1) in p {
        for (e2, c2) in q {
            let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            let v = out.entry(e).or_insert_with(Rational::zero);
            *v += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_add_assign(p: &mut Poly, q: &Poly, negate: bool) {
    for (e, c) in q {
        let v = p.entry(e.clone()).or_insert_with(Rational::zero);
        if negate {
            *v -= c;
        } else {
            *v += c;
        }
    }
    p.retain(|_, c| !c.is_zero());
}

/// Pfaffian of `sum_l c_l A_l` as a polynomial in the `c_l`.
pub(crate) fn generic_pfaffian(matrices: &[Matrix], n: usize) -> BTreeMap<Vec<u32>, Rational> {
    let r = matrices.len();
    let entry = |i: usize, j: usize| -> Poly {
        let mut p = Poly::new();
        for (l, m) in matrices.iter().enumerate() {
            if !m[(i, j)].is_zero() {
                let mut e = vec![0; r];
                e[l] = 1;
                p.insert(e, m[(i, j)].clone());
            }
        }
        p
    };
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    pfaffian_rec(&entries, (1u64 << n) - 1, r, &mut memo)
}

/// Expansion along the first remaining row: `Pf = sum_t (-1)^{t-1} a_{i0,it} Pf(minor)`.
fn pfaffian_rec(entries: &[Vec<Poly>], mask: u64, r: usize, memo: &mut HashMap<u64, Poly>) -> Poly {
    if mask == 0 {
        let mut one = Poly::new();
        one.insert(vec![0; r], Rational::one());
        return one;
    }
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let idx: Vec<usize> = (0..64).filter(|b| mask & (1 << b) != 0).collect();
    let mut out = Poly::new();
    if idx.len().is_multiple_of(2) {
        let first = idx[0];
        for (t, &other) in idx.iter().enumerate().skip(1) {
            let a = &entries[first][other];
            if a.is_empty() {
                continue;
            }
            let minor = pfaffian_rec(entries, mask & !(1 << first) & !(1 << other), r, memo);
            poly_add_assign(&mut out, &poly_mul(a, &minor), t % 2 == 0);
        }
    }
    memo.insert(mask, out.clone());
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzRow {
    pub k: usize,
    pub source_degree: u32,
    pub target_degree: u32,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
}

impl LefschetzRow {
    pub fn isomorphism(&self) -> bool {
        self.source_dim == self.target_dim && self.rank == self.source_dim
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzReport {
    pub rows: Vec<LefschetzRow>,
}

impl LefschetzReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(LefschetzRow::isomorphism)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.rows.iter().find(|r| !r.isomorphism()).map(|r| r.k)
    }
}

/// For dim `2m`, checks `[omega]^k : H^{m-k} -> H^{m+k}` for `k = 0..=m`.
pub fn hard_lefschetz(
    ce: &CeModel,
    sf: &SymplecticForm,
) -> Result<LefschetzReport, SymplecticError> {
    let n = ce.dim() as u32;
    let h = Cohomology::compute(ce.dga(), n)?;
    hard_lefschetz_with(&h, sf)
}

pub fn hard_lefschetz_with(
    h: &Cohomology,
    sf: &SymplecticForm,
) -> Result<LefschetzReport, SymplecticError> {
    let half = sf.dim() / 2;
    let mut rows = Vec::new();
    for k in 0..=half {
        let source_degree = (half - k) as u32;
        let target_degree = (half + k) as u32;
        let source = h.basis(source_degree)?;
        let target = h.basis(target_degree)?;
        let power = sf.omega().pow(k as u32);
        let columns = source
            .representatives
            .iter()
            .map(|rep| target.reduce(&(&power * rep)))
            .collect::<Result<Vec<_>, _>>()?;
        let rank = Matrix::from_columns(target.betti(), &columns).rank();
        rows.push(LefschetzRow {
            k,
            source_degree,
            target_degree,
            source_dim: source.betti(),
            target_dim: target.betti(),
            rank,
        });
    }
    Ok(LefschetzReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ce_model, Bracket, LieAlgebraSpec};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn kt() -> CeModel {
        ce_model(&LieAlgebraSpec::new(4, vec![Bracket::unit(1, 2, 3)]).unwrap()).unwrap()
    }

    fn torus(n: usize) -> CeModel {
        ce_model(&LieAlgebraSpec::abelian(n)).unwrap()
    }

    #[test]
    fn contraction_examples() {
        let t2 = torus(2);
        let f = TwoForm::from_coefficients(&t2, &[(1, 2, q(1))]).unwrap();
        assert!(f.contraction(&[q(0), q(0)]).unwrap().is_zero());
        assert_eq!(f.contraction(&[q(1), q(0)]).unwrap(), t2.x(2));

        let ce = kt();
        let f = TwoForm::from_coefficients(&ce, &[(1, 4, q(1)), (2, 3, q(1))]).unwrap();
        assert_eq!(f.contraction(&[q(0), q(0), q(1), q(0)]).unwrap(), -&ce.x(2));
        assert!(matches!(
            f.contraction(&[q(1)]),
            Err(SymplecticError::LengthMismatch {
                expected: 4,
                found: 1
            })
        ));
    }

    #[test]
    fn certificates() {
        let t4 = torus(4);
        let std4 = &(&t4.x(1) * &t4.x(2)) + &(&t4.x(3) * &t4.x(4));
        assert!(is_symplectic(&t4, &std4).unwrap().is_symplectic());

        let ce = kt();
        let good = &(&ce.x(1) * &ce.x(4)) + &(&ce.x(2) * &ce.x(3));
        let c = is_symplectic(&ce, &good).unwrap();
        assert!(c.closed && c.nondegenerate());

        let bad = &(&ce.x(1) * &ce.x(2)) + &(&ce.x(3) * &ce.x(4));
        let c = is_symplectic(&ce, &bad).unwrap();
        assert!(!c.closed);
        let x124 = &(&ce.x(1) * &ce.x(2)) * &ce.x(4);
        assert_eq!(c.d_omega, -&x124);
        assert!(c.nondegenerate());

        let degenerate = &t4.x(1) * &t4.x(2);
        let c = is_symplectic(&t4, &degenerate).unwrap();
        assert_eq!(c.rank, 2);
        let w = c.kernel_witness.unwrap();
        let f = TwoForm::from_element(&t4, &degenerate).unwrap();
        assert!(f.contraction(&w).unwrap().is_zero());

        assert_eq!(
            is_symplectic(&t4, &t4.x(1)).unwrap_err(),
            SymplecticError::NotDegreeTwo
        );
    }

    #[test]
    fn scaling_preserves_verdict() {
        let ce = kt();
        let good = &(&ce.x(1) * &ce.x(4)) + &(&ce.x(2) * &ce.x(3));
        for s in [q(-3), Rational::new(1.into(), 7.into())] {
            assert!(is_symplectic(&ce, &good.scale(&s)).unwrap().is_symplectic());
        }
    }

    #[test]
    fn search_outcomes() {
        for ce in [torus(2), torus(4), kt()] {
            match find_symplectic(&ce, SearchOptions::default()) {
                SymplecticSearch::Found { form, .. } => {
                    assert!(is_symplectic(&ce, form.omega()).unwrap().is_symplectic())
                }
                other => panic!("expected a symplectic form, got {other:?}"),
            }
        }
        let h3 = ce_model(&LieAlgebraSpec::new(3, vec![Bracket::unit(1, 2, 3)]).unwrap()).unwrap();
        assert_eq!(
            find_symplectic(&h3, SearchOptions::default()),
            SymplecticSearch::DefinitelyNone(NoneReason::OddDimension)
        );
    }

    #[test]
    fn zero_budget_falls_back_to_pfaffian() {
        assert_eq!(
            find_symplectic(&kt(), SearchOptions { seed: 1, budget: 0 }),
            SymplecticSearch::Exhausted { trials: 0 }
        );
    }

    #[test]
    fn pfaffian_of_standard_form() {
        // Pf of c1 (e12 - e21) + c2 (e34 - e43) is c1 c2
        let f = TwoForm::from_coefficients(&torus(4), &[(1, 2, q(1))]).unwrap();
        let g = TwoForm::from_coefficients(&torus(4), &[(3, 4, q(1))]).unwrap();
        let p = generic_pfaffian(&[f.skew_matrix(), g.skew_matrix()], 4);
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![1, 1], q(1))]);
        // Pf = a12 a34 - a13 a24 + a14 a23, here -c^2
        let h = TwoForm::from_coefficients(&torus(4), &[(1, 3, q(1)), (2, 4, q(1))]).unwrap();
        let p = generic_pfaffian(&[h.skew_matrix()], 4);
        assert_eq!(p.into_iter().collect::<Vec<_>>(), vec![(vec![2], q(-1))]);
    }

    #[test]
    fn lefschetz_torus_and_kt() {
        let t4 = torus(4);
        let sf = SymplecticForm::from_coefficients(&t4, &[(1, 2, q(1)), (3, 4, q(1))]).unwrap();
        let r = hard_lefschetz(&t4, &sf).unwrap();
        assert!(r.holds());
        assert_eq!(r.rows.len(), 3);

        let ce = kt();
        let sf = SymplecticForm::from_coefficients(&ce, &[(1, 4, q(1)), (2, 3, q(1))]).unwrap();
        let r = hard_lefschetz(&ce, &sf).unwrap();
        assert_eq!(r.first_failure(), Some(1));
        assert!(r.rows[0].isomorphism());
        assert!(r.rows[2].isomorphism());
        assert_eq!((r.rows[1].source_dim, r.rows[1].target_dim), (3, 3));
        assert!(r.rows[1].rank < 3);
    }
}
