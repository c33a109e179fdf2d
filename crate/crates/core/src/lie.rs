//! Nilpotent Lie algebras given by rational structure constants, and their
//! Chevalley–Eilenberg models.
//!
//! Brackets are listed only for `i < j` (1-based): `[X_i, X_j] = sum_k c X_k`.
//! The dual generators `x_1..x_n` have degree 1 and
//! `d x_k = -sum_{i<j} c_ij^k x_i x_j`.

use std::fmt;

use num::{One, Zero};

use crate::algebra::{Algebra, Element, FreeDga, Monomial};
use crate::linalg::Matrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

impl Bracket {
    pub fn new(i: usize, j: usize, k: usize, c: Rational) -> Self {
        Bracket { i, j, k, c }
    }

    pub fn unit(i: usize, j: usize, k: usize) -> Self {
        Bracket::new(i, j, k, Rational::one())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("bracket #{index}: {reason}")]
    MalformedBracket { index: usize, reason: String },
    #[error("invalid Lie algebra: {0}")]
    Invalid(Box<ValidationReport>),
}

/// Dimension plus structure constants with `1 <= i < j <= dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraSpec {
    dim: usize,
    brackets: Vec<Bracket>,
}

impl LieAlgebraSpec {
    /// Structural checks only: index ranges, `i < j`, no repeated `(i, j, k)`.
    /// Zero coefficients are dropped.
    pub fn new(dim: usize, brackets: Vec<Bracket>) -> Result<Self, LieError> {
        if dim == 0 {
            return Err(LieError::ZeroDimension);
        }
        let mut seen = std::collections::HashSet::new();
        for (index, b) in brackets.iter().enumerate() {
            let reason = if b.i == 0 || b.j == 0 || b.k == 0 {
                Some("indices are 1-based".to_string())
            } else if b.i >= b.j {
                Some(format!("need i < j, got i={} j={}", b.i, b.j))
            } else if b.j > dim || b.k > dim {
                Some(format!("index exceeds dimension {dim}"))
            } else if !seen.insert((b.i, b.j, b.k)) {
                Some(format!("repeated entry ({}, {}, {})", b.i, b.j, b.k))
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(LieError::MalformedBracket { index, reason });
            }
        }
        let brackets = brackets.into_iter().filter(|b| !b.c.is_zero()).collect();
        Ok(LieAlgebraSpec { dim, brackets })
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, Vec::new()).expect("positive dimension")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn brackets(&self) -> &[Bracket] {
        &self.brackets
    }

    /// Dense table `t[i][j][k]`, 0-based and antisymmetric in `(i, j)`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Rational>>> {
        let n = self.dim;
        let mut t = vec![vec![vec![Rational::zero(); n]; n]; n];
        for b in &self.brackets {
            t[b.i - 1][b.j - 1][b.k - 1] = b.c.clone();
            t[b.j - 1][b.i - 1][b.k - 1] = -b.c.clone();
        }
        t
    }

    fn bracket_vectors(
        &self,
        t: &[Vec<Vec<Rational>>],
        u: &[Rational],
        v: &[Rational],
    ) -> Vec<Rational> {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                for k in 0..n {
                    if !t[i][j][k].is_zero() {
                        out[k] += &s * &t[i][j][k];
                    }
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiFailure {
    /// 1-based triple `i < j < l`.
    pub triple: (usize, usize, usize),
    /// `[[X_i,X_j],X_l] + [[X_j,X_l],X_i] + [[X_l,X_i],X_j]` in the basis `X_k`.
    pub residual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub dim: usize,
    pub jacobi_failures: Vec<JacobiFailure>,
    /// Dimensions of `g = g_1, g_2 = [g, g], g_3 = [g, g_2], ...` up to the
    /// first zero or repeated term.
    pub lower_central_dims: Vec<usize>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub derived_dim: usize,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.jacobi_failures.is_empty() && self.nilpotent
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(first) = self.jacobi_failures.first() {
            write!(
                f,
                "Jacobi identity fails on {} triple(s), first ({}, {}, {}); ",
                self.jacobi_failures.len(),
                first.triple.0,
                first.triple.1,
                first.triple.2
            )?;
        }
        if self.nilpotent {
            write!(f, "nilpotent")
        } else {
            write!(
                f,
                "not nilpotent: lower central series stabilizes at dimension {}",
                self.lower_central_dims.last().copied().unwrap_or(0)
            )
        }
    }
}

/// Jacobi identity on all triples and nilpotency via the lower central series.
pub fn validate(spec: &LieAlgebraSpec) -> ValidationReport {
    let n = spec.dim;
    let t = spec.structure_constants();
    let unit = |i: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    };

    let mut jacobi_failures = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let (xi, xj, xl) = (unit(i), unit(j), unit(l));
                let a = spec.bracket_vectors(&t, &spec.bracket_vectors(&t, &xi, &xj), &xl);
                let b = spec.bracket_vectors(&t, &spec.bracket_vectors(&t, &xj, &xl), &xi);
                let c = spec.bracket_vectors(&t, &spec.bracket_vectors(&t, &xl, &xi), &xj);
                let residual: Vec<Rational> = (0..n).map(|k| &a[k] + &b[k] + &c[k]).collect();
                if residual.iter().any(|v| !v.is_zero()) {
                    jacobi_failures.push(JacobiFailure {
                        triple: (i + 1, j + 1, l + 1),
                        residual,
                    });
                }
            }
        }
    }

    // g_1 = g; g_{s+1} = span [X_i, g_s]
    let mut current: Vec<Vec<Rational>> = (0..n).map(unit).collect();
    let mut dims = vec![n];
    let mut nilpotent = false;
    for _ in 0..=n {
        let mut spanning = Vec::new();
        for i in 0..n {
            for v in &current {
                spanning.push(spec.bracket_vectors(&t, &unit(i), v));
            }
        }
        let next = row_space_basis(spanning);
        let dim = next.len();
        let stalled = dim == *dims.last().unwrap();
        dims.push(dim);
        if dim == 0 {
            nilpotent = true;
            break;
        }
        if stalled {
            break;
        }
        current = next;
    }
    let nilpotency_class = nilpotent.then(|| dims.len() - 1);
    let derived_dim = dims.get(1).copied().unwrap_or(0);

    ValidationReport {
        dim: n,
        jacobi_failures,
        lower_central_dims: dims,
        nilpotent,
        nilpotency_class,
        derived_dim,
    }
}

fn row_space_basis(vectors: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = Matrix::from_rows(vectors).rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Global sign in front of the dualized bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignConvention {
    /// `d x_k = -sum c_ij^k x_i x_j` (the default).
    Negative,
    Positive,
}

/// The exterior algebra on `x_1..x_n` with the dualized bracket as
/// differential. No validation is performed.
pub fn ce_dga(spec: &LieAlgebraSpec, sign: SignConvention) -> FreeDga {
    let n = spec.dim;
    let algebra = Algebra::new((1..=n).map(|k| (format!("x{k}"), 1))).expect("distinct names");
    let mut terms: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); n];
    for b in &spec.brackets {
        let c = match sign {
            SignConvention::Negative => -b.c.clone(),
            SignConvention::Positive => b.c.clone(),
        };
        terms[b.k - 1].push((Monomial::from_exponents([(b.i - 1, 1), (b.j - 1, 1)]), c));
    }
    let images = terms
        .into_iter()
        .map(|t| Element::from_terms(&algebra, t))
        .collect();
    FreeDga::new(algebra, images).expect("quadratic images have degree 2")
}

/// Chevalley–Eilenberg model of a validated nilpotent Lie algebra.
#[derive(Debug, Clone)]
pub struct CeModel {
    spec: LieAlgebraSpec,
    dga: FreeDga,
    report: ValidationReport,
}

/// Validates `spec` and builds its CE model, re-checking `d^2 = 0`.
pub fn ce_model(spec: &LieAlgebraSpec) -> Result<CeModel, LieError> {
    let report = validate(spec);
    if !report.is_ok() {
        return Err(LieError::Invalid(Box::new(report)));
    }
    let dga = ce_dga(spec, SignConvention::Negative);
    assert!(
        dga.square_defect().is_none(),
        "Jacobi holds but d^2 != 0; derivation extension is broken"
    );
    Ok(CeModel {
        spec: spec.clone(),
        dga,
        report,
    })
}

impl CeModel {
    pub fn spec(&self) -> &LieAlgebraSpec {
        &self.spec
    }

    pub fn dga(&self) -> &FreeDga {
        &self.dga
    }

    pub fn algebra(&self) -> &Algebra {
        self.dga.algebra()
    }

    pub fn dim(&self) -> usize {
        self.spec.dim
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    /// `x_k`, 1-based.
    pub fn x(&self, k: usize) -> Element {
        Element::generator(self.algebra(), k - 1)
    }

    pub fn d(&self, u: &Element) -> Element {
        self.dga.d(u)
    }
}
