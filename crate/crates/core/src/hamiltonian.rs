//! Twisted models of nilmanifold bundles and the forcing of the twist.
//!
//! Fiber generators have degree 1, so a twisted differential can only add
//! degree-2 base cocycles: `D x_k = sum_j alpha_kj a_j + dbar x_k`. The base
//! is either the minimal model of `S^2` (`da = 0`, `db = a^2`) or a formal
//! base `Lambda(a_1..a_m)` with zero differential.
//!
//! In both cases every degree-2 extension of `omega` differs from `omega` by
//! a combination of the closed `a_j`, so the class `[omega]` extends exactly
//! when `D(omega) = 0`. That is the Hamiltonian condition used here.

use std::fmt;

use num::Zero;

use crate::algebra::{apply_morphism, extend_derivation, Algebra, Element, FreeDga, Monomial};
use crate::cohomology::{ce_betti, Cohomology, CohomologyError};
use crate::lie::CeModel;
use crate::linalg::Matrix;
use crate::symplectic::TwoForm;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TwistError {
    #[error("formal base needs at least one generator")]
    EmptyBase,
    #[error("alpha must be {rows}x{cols}, got {found_rows}x{found_cols}")]
    AlphaShape {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    #[error("D^2 {generator} = {witness} != 0")]
    NotADifferential { generator: String, witness: Element },
    #[error("column {column} out of range 1..={count}")]
    ColumnRange { column: usize, count: usize },
    #[error("pullback needs a formal base")]
    NotFormal,
    #[error("two-form lives on a different fiber")]
    ForeignForm,
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseModel {
    /// `Lambda(a, b)`, `|a| = 2`, `|b| = 3`, `db = a^2`.
    SphereS2,
    /// `Lambda(a_1..a_m)`, all of degree 2, zero differential.
    FormalEven(usize),
}

impl BaseModel {
    pub fn dga(&self) -> FreeDga {
        match *self {
            BaseModel::SphereS2 => {
                let alg = Algebra::new([("a", 2), ("b", 3)]).expect("distinct names");
                let a = Element::generator(&alg, 0);
                FreeDga::new(alg.clone(), vec![Element::zero(&alg), a.pow(2)])
                    .expect("db = a^2 has degree 4")
            }
            BaseModel::FormalEven(m) => FreeDga::trivial(
                Algebra::new((1..=m).map(|j| (format!("a{j}"), 2))).expect("distinct names"),
            ),
        }
    }

    /// Number of degree-2 generators a fiber generator can be twisted by.
    pub fn twist_count(&self) -> usize {
        match *self {
            BaseModel::SphereS2 => 1,
            BaseModel::FormalEven(m) => m,
        }
    }

    /// Indices (in the base algebra) of the degree-2 generators.
    pub fn twist_generators(&self) -> Vec<usize> {
        (0..self.twist_count()).collect()
    }

    pub fn generator_count(&self) -> usize {
        match *self {
            BaseModel::SphereS2 => 2,
            BaseModel::FormalEven(m) => m,
        }
    }
}

impl fmt::Display for BaseModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseModel::SphereS2 => write!(f, "s2"),
            BaseModel::FormalEven(m) => write!(f, "formal:{m}"),
        }
    }
}

/// `(Lambda V_B (x) Lambda V_F, D)` with base generators first.
#[derive(Debug, Clone)]
pub struct TwistedModel {
    base: BaseModel,
    base_dga: FreeDga,
    fiber: CeModel,
    alpha: Vec<Vec<Rational>>,
    total: FreeDga,
}

pub fn build_twisted(
    fiber: &CeModel,
    base: BaseModel,
    alpha: Vec<Vec<Rational>>,
) -> Result<TwistedModel, TwistError> {
    let n = fiber.dim();
    let m = base.twist_count();
    if m == 0 {
        return Err(TwistError::EmptyBase);
    }
    if alpha.len() != n || alpha.iter().any(|row| row.len() != m) {
        return Err(TwistError::AlphaShape {
            rows: n,
            cols: m,
            found_rows: alpha.len(),
            found_cols: alpha.first().map_or(0, Vec::len),
        });
    }
    let base_dga = base.dga();
    let offset = base.generator_count();
    let total_alg = Algebra::new(
        base_dga
            .algebra()
            .generators()
            .iter()
            .chain(fiber.algebra().generators())
            .map(|g| (g.name.clone(), g.degree)),
    )
    .expect("base and fiber names are disjoint");

    let base_embed = embedding(base_dga.algebra(), &total_alg, 0);
    let fiber_embed = embedding(fiber.algebra(), &total_alg, offset);
    let mut images: Vec<Element> = base_dga
        .images()
        .iter()
        .map(|e| apply_morphism(&total_alg, &base_embed, e))
        .collect();
    for (k, row) in alpha.iter().enumerate() {
        let mut image = apply_morphism(&total_alg, &fiber_embed, fiber.dga().d_generator(k));
        for (j, c) in row.iter().enumerate() {
            let a_j = Element::generator(&total_alg, base.twist_generators()[j]);
            image = &image + &a_j.scale(c);
        }
        images.push(image);
    }
    let total = FreeDga::new(total_alg, images).expect("twisted images have degree 2");
    if let Some((g, witness)) = total.square_defect() {
        return Err(TwistError::NotADifferential {
            generator: total.algebra().generator(g).name.clone(),
            witness,
        });
    }
    Ok(TwistedModel {
        base,
        base_dga,
        fiber: fiber.clone(),
        alpha,
        total,
    })
}

/// Generator `i` of `source` goes to generator `offset + i` of `target`.
fn embedding(source: &Algebra, target: &Algebra, offset: usize) -> Vec<Element> {
    (0..source.len())
        .map(|i| Element::generator(target, offset + i))
        .collect()
}

impl TwistedModel {
    pub fn base(&self) -> BaseModel {
        self.base
    }

    pub fn base_dga(&self) -> &FreeDga {
        &self.base_dga
    }

    pub fn fiber(&self) -> &CeModel {
        &self.fiber
    }

    pub fn total(&self) -> &FreeDga {
        &self.total
    }

    /// `alpha[k][j]`: coefficient of `a_j` in `D x_{k+1}`.
    pub fn alpha(&self) -> &[Vec<Rational>] {
        &self.alpha
    }

    pub fn alpha_column(&self, j: usize) -> Vec<Rational> {
        self.alpha.iter().map(|row| row[j].clone()).collect()
    }

    pub fn is_untwisted(&self) -> bool {
        self.alpha.iter().flatten().all(Zero::is_zero)
    }

    fn offset(&self) -> usize {
        self.base.generator_count()
    }

    pub fn embed_fiber(&self, u: &Element) -> Element {
        let images = embedding(self.fiber.algebra(), self.total.algebra(), self.offset());
        apply_morphism(self.total.algebra(), &images, u)
    }

    pub fn embed_base(&self, u: &Element) -> Element {
        let images = embedding(self.base_dga.algebra(), self.total.algebra(), 0);
        apply_morphism(self.total.algebra(), &images, u)
    }

    /// `x_k` in the total algebra, 1-based.
    pub fn fiber_generator(&self, k: usize) -> Element {
        Element::generator(self.total.algebra(), self.offset() + k - 1)
    }

    /// `a_j` in the total algebra, 1-based.
    pub fn twist_generator(&self, j: usize) -> Element {
        Element::generator(self.total.algebra(), self.base.twist_generators()[j - 1])
    }

    /// Structure conditions of the twisted model: `D` restricts to the base
    /// differential, and `D v - dbar v` lies in the ideal of positive-degree
    /// base elements for every fiber generator `v`.
    pub fn ght_conditions(&self) -> bool {
        let offset = self.offset();
        let base_ok = (0..offset)
            .all(|i| *self.total.d_generator(i) == self.embed_base(self.base_dga.d_generator(i)));
        let fiber_ok = (0..self.fiber.dim()).all(|k| {
            let diff = self.total.d_generator(offset + k)
                - &self.embed_fiber(self.fiber.dga().d_generator(k));
            diff.terms()
                .keys()
                .all(|m| m.factors().iter().any(|&(g, _)| g < offset))
        });
        base_ok && fiber_ok
    }

    /// `D` is literally `d (x) 1 + 1 (x) dbar`.
    pub fn is_tensor_product(&self) -> bool {
        let offset = self.offset();
        let base_ok = (0..offset)
            .all(|i| *self.total.d_generator(i) == self.embed_base(self.base_dga.d_generator(i)));
        let fiber_ok = (0..self.fiber.dim()).all(|k| {
            *self.total.d_generator(offset + k) == self.embed_fiber(self.fiber.dga().d_generator(k))
        });
        base_ok && fiber_ok
    }

    /// Formal dimension of the fiber plus 2.
    pub fn default_cap(&self) -> u32 {
        self.fiber.dim() as u32 + 2
    }

    /// Terms of `u` of the form `a_j * (fiber monomial)`, as a fiber element.
    pub fn twist_coefficient(&self, u: &Element, j: usize) -> Element {
        let offset = self.offset();
        let a_index = self.base.twist_generators()[j - 1];
        let terms = u.terms().iter().filter_map(|(m, c)| {
            let (base, fiber): (Vec<_>, Vec<_>) =
                m.factors().iter().partition(|&&(g, _)| g < offset);
            (base == [(a_index, 1)]).then(|| {
                let shifted = fiber.iter().map(|&(g, e)| (g - offset, e));
                (Monomial::from_exponents(shifted), c.clone())
            })
        });
        Element::from_terms(self.fiber.algebra(), terms.collect::<Vec<_>>())
    }
}

/// `D(omega)` in the total model and its `a_j`-coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub full: Element,
    /// One fiber element per twist generator `a_j`.
    pub eq1: Vec<Element>,
}

impl Obstruction {
    pub fn is_hamiltonian(&self) -> bool {
        self.full.is_zero()
    }
}

pub fn hamiltonian_obstruction(
    tm: &TwistedModel,
    form: &TwoForm,
) -> Result<Obstruction, TwistError> {
    if !form.omega().algebra().same_as(tm.fiber.algebra()) {
        return Err(TwistError::ForeignForm);
    }
    let full = tm.total.d(&tm.embed_fiber(form.omega()));
    let eq1 = (1..=tm.base.twist_count())
        .map(|j| tm.twist_coefficient(&full, j))
        .collect();
    Ok(Obstruction { full, eq1 })
}

/// Solution space of `{D^2 = 0, D(omega) = 0}` over all twist matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingReport {
    pub base: BaseModel,
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    /// Basis of admissible Hamiltonian twists, each an `n x m` matrix.
    pub solutions: Vec<Vec<Vec<Rational>>>,
    /// For a nonzero solution space: whether the first basis twist builds a
    /// valid model with `D(omega) = 0` when checked directly.
    pub witness_verified: Option<bool>,
}

impl ForcingReport {
    pub fn dimension(&self) -> usize {
        self.solutions.len()
    }

    /// Only `alpha = 0` survives, so the model is the tensor product.
    pub fn forced_zero(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// `D_alpha = D_0 + sum alpha_kj E_kj` with `E_kj` the derivation
/// `x_k -> a_j`. Both `D_alpha^2 x_k = sum alpha E(dbar x_k)` and
/// `D_alpha(omega) = sum alpha E(omega)` are linear in `alpha`, giving one
/// exact linear system.
pub fn forcing_check(
    fiber: &CeModel,
    form: &TwoForm,
    base: BaseModel,
) -> Result<ForcingReport, TwistError> {
    let n = fiber.dim();
    let m = base.twist_count();
    let zero_alpha = vec![vec![Rational::zero(); m]; n];
    let product = build_twisted(fiber, base, zero_alpha)?;
    if !form.omega().algebra().same_as(fiber.algebra()) {
        return Err(TwistError::ForeignForm);
    }
    let total = product.total.algebra();
    let offset = product.offset();

    let mut targets: Vec<Element> = (0..n)
        .map(|k| product.embed_fiber(fiber.dga().d_generator(k)))
        .collect();
    targets.push(product.embed_fiber(form.omega()));

    let unknowns = n * m;
    // columns[u][t] = E_u(targets[t])
    let mut columns: Vec<Vec<Element>> = Vec::with_capacity(unknowns);
    for k in 0..n {
        for j in 0..m {
            let mut images = vec![Element::zero(total); total.len()];
            images[offset + k] = product.twist_generator(j + 1);
            columns.push(
                targets
                    .iter()
                    .map(|t| extend_derivation(&images, t).expect("degree-matched images"))
                    .collect(),
            );
        }
    }

    let mut row_keys: Vec<(usize, Monomial)> = columns
        .iter()
        .flat_map(|col| {
            col.iter()
                .enumerate()
                .flat_map(|(t, e)| e.terms().keys().map(move |mono| (t, mono.clone())))
        })
        .collect();
    row_keys.sort();
    row_keys.dedup();
    let mut system = Matrix::zeros(row_keys.len(), unknowns);
    for (u, col) in columns.iter().enumerate() {
        for (t, e) in col.iter().enumerate() {
            for (mono, c) in e.terms() {
                let r = row_keys
                    .binary_search(&(t, mono.clone()))
                    .expect("row key collected above");
                system[(r, u)] = c.clone();
            }
        }
    }

    let rank = system.rank();
    let solutions: Vec<Vec<Vec<Rational>>> = system
        .kernel()
        .into_iter()
        .map(|v| v.chunks(m).map(<[Rational]>::to_vec).collect())
        .collect();
    debug_assert_eq!(rank + solutions.len(), unknowns);

    let witness_verified = solutions.first().map(|alpha| {
        build_twisted(fiber, base, alpha.clone())
            .ok()
            .and_then(|tm| hamiltonian_obstruction(&tm, form).ok())
            .is_some_and(|o| o.is_hamiltonian())
    });

    Ok(ForcingReport {
        base,
        unknowns,
        equations: row_keys.len(),
        rank,
        solutions,
        witness_verified,
    })
}

/// Betti numbers of the total model in degrees `0..=cap`.
pub fn total_betti(tm: &TwistedModel, cap: Option<u32>) -> Result<Vec<usize>, TwistError> {
    let cap = cap.unwrap_or_else(|| tm.default_cap());
    Ok(Cohomology::compute(&tm.total, cap)?.betti_numbers())
}

/// `(f * g)_k = sum_{i+j=k} f_i g_j`, truncated to `0..=cap`.
pub fn convolve(f: &[usize], g: &[usize], cap: u32) -> Vec<usize> {
    (0..=cap as usize)
        .map(|k| {
            (0..=k)
                .filter_map(|i| Some(f.get(i)? * g.get(k - i)?))
                .sum()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsplitVerdict {
    pub cap: u32,
    pub total: Vec<usize>,
    pub base: Vec<usize>,
    pub fiber: Vec<usize>,
    /// Convolution of base and fiber Betti numbers.
    pub expected: Vec<usize>,
    pub untwisted: bool,
    /// The total differential is literally the tensor-product differential.
    pub tensor_product: bool,
}

impl CsplitVerdict {
    pub fn additive(&self) -> bool {
        self.total == self.expected
    }

    pub fn ring_level(&self) -> bool {
        self.untwisted && self.tensor_product
    }
}

pub fn csplit_compare(tm: &TwistedModel, cap: Option<u32>) -> Result<CsplitVerdict, TwistError> {
    let cap = cap.unwrap_or_else(|| tm.default_cap());
    let total = total_betti(tm, Some(cap))?;
    let base = Cohomology::compute(&tm.base_dga, cap)?.betti_numbers();
    let fiber = ce_betti(&tm.fiber);
    let expected = convolve(&base, &fiber, cap);
    Ok(CsplitVerdict {
        cap,
        total,
        base,
        fiber,
        expected,
        untwisted: tm.is_untwisted(),
        tensor_product: tm.is_tensor_product(),
    })
}

/// Model over `S^2` obtained by pulling back along the map dual to `a_i`
/// (1-based): its twist vector is column `i`.
pub fn pullback_column(tm: &TwistedModel, i: usize) -> Result<TwistedModel, TwistError> {
    let BaseModel::FormalEven(m) = tm.base else {
        return Err(TwistError::NotFormal);
    };
    if i == 0 || i > m {
        return Err(TwistError::ColumnRange {
            column: i,
            count: m,
        });
    }
    let alpha = tm
        .alpha
        .iter()
        .map(|row| vec![row[i - 1].clone()])
        .collect();
    build_twisted(&tm.fiber, BaseModel::SphereS2, alpha)
}

/// The morphism `a_j -> delta_ij a`, `x_k -> x_k` from `source` (formal
/// base) to `target` (its `i`-th pullback).
pub fn pullback_map(source: &TwistedModel, target: &TwistedModel, i: usize) -> Vec<Element> {
    let t = target.total.algebra();
    let mut images = Vec::with_capacity(source.total.algebra().len());
    for j in 1..=source.base.generator_count() {
        images.push(if j == i {
            target.twist_generator(1)
        } else {
            Element::zero(t)
        });
    }
    for k in 1..=source.fiber.dim() {
        images.push(target.fiber_generator(k));
    }
    images
}

/// Compares `f(D~ x_k)` with `D(f x_k)` for every fiber generator.
pub fn pullback_commutes(source: &TwistedModel, i: usize) -> Result<bool, TwistError> {
    let target = pullback_column(source, i)?;
    let f = pullback_map(source, &target, i);
    let t = target.total.algebra();
    Ok((1..=source.fiber.dim()).all(|k| {
        let lhs = apply_morphism(t, &f, &source.total.d(&source.fiber_generator(k)));
        let rhs = target
            .total
            .d(&apply_morphism(t, &f, &source.fiber_generator(k)));
        lhs == rhs
    }))
}

/// `alpha` as a single-column matrix, for `S^2` bases.
pub fn column(alpha: &[Rational]) -> Vec<Vec<Rational>> {
    alpha.iter().map(|c| vec![c.clone()]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ce_model, Bracket, LieAlgebraSpec};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn torus(n: usize) -> CeModel {
        ce_model(&LieAlgebraSpec::abelian(n)).unwrap()
    }

    fn kt() -> CeModel {
        ce_model(&LieAlgebraSpec::new(4, vec![Bracket::unit(1, 2, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn product_model_is_tensor_product() {
        let tm = build_twisted(&kt(), BaseModel::SphereS2, column(&qs(&[0, 0, 0, 0]))).unwrap();
        assert!(tm.is_tensor_product() && tm.ght_conditions() && tm.is_untwisted());
        assert_eq!(tm.total().algebra().generator(0).name, "a");
        assert_eq!(tm.total().algebra().generator(2).name, "x1");
    }

    #[test]
    fn torus_fiber_accepts_any_twist() {
        let tm = build_twisted(&torus(2), BaseModel::SphereS2, column(&qs(&[3, -7]))).unwrap();
        assert!(tm.ght_conditions());
        assert!(!tm.is_tensor_product());
    }

    #[test]
    fn kt_twist_on_x3_is_valid_but_x1_is_not() {
        let ok = build_twisted(&kt(), BaseModel::SphereS2, column(&qs(&[0, 0, 1, 0])));
        assert!(ok.is_ok());
        let err =
            build_twisted(&kt(), BaseModel::SphereS2, column(&qs(&[1, 0, 0, 0]))).unwrap_err();
        match err {
            TwistError::NotADifferential { generator, witness } => {
                assert_eq!(generator, "x3");
                assert_eq!(witness.to_string(), "-a*x2");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn alpha_shape_checked() {
        assert!(matches!(
            build_twisted(&torus(2), BaseModel::SphereS2, column(&qs(&[1]))),
            Err(TwistError::AlphaShape {
                rows: 2,
                cols: 1,
                ..
            })
        ));
        assert_eq!(
            build_twisted(&torus(2), BaseModel::FormalEven(0), vec![vec![], vec![]]).unwrap_err(),
            TwistError::EmptyBase
        );
    }

    #[test]
    fn torus2_obstruction() {
        let ce = torus(2);
        let form = TwoForm::from_coefficients(&ce, &[(1, 2, q(1))]).unwrap();
        let tm = build_twisted(&ce, BaseModel::SphereS2, column(&qs(&[1, 0]))).unwrap();
        let o = hamiltonian_obstruction(&tm, &form).unwrap();
        assert_eq!(o.full.to_string(), "a*x2");
        assert_eq!(o.eq1, vec![ce.x(2)]);
        assert!(!o.is_hamiltonian());

        let tm0 = build_twisted(&ce, BaseModel::SphereS2, column(&qs(&[0, 0]))).unwrap();
        let o = hamiltonian_obstruction(&tm0, &form).unwrap();
        assert!(o.is_hamiltonian() && o.eq1.iter().all(Element::is_zero));
    }

    #[test]
    fn torus2_twisted_betti() {
        let tm = build_twisted(&torus(2), BaseModel::SphereS2, column(&qs(&[1, 0]))).unwrap();
        let v = csplit_compare(&tm, Some(4)).unwrap();
        assert_eq!(v.total, vec![1, 1, 0, 1, 1]);
        assert_eq!(v.expected, vec![1, 2, 2, 2, 1]);
        assert!(!v.additive());

        let tm0 = build_twisted(&torus(2), BaseModel::SphereS2, column(&qs(&[0, 0]))).unwrap();
        let v = csplit_compare(&tm0, Some(4)).unwrap();
        assert_eq!(v.total, vec![1, 2, 2, 2, 1]);
        assert!(v.additive() && v.ring_level());
    }

    #[test]
    fn kt_product_betti() {
        let tm = build_twisted(&kt(), BaseModel::SphereS2, column(&qs(&[0, 0, 0, 0]))).unwrap();
        assert_eq!(total_betti(&tm, None).unwrap(), vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn forcing_on_symplectic_and_degenerate_forms() {
        let ce = kt();
        let form = TwoForm::from_coefficients(&ce, &[(1, 4, q(1)), (2, 3, q(1))]).unwrap();
        let r = forcing_check(&ce, &form, BaseModel::SphereS2).unwrap();
        assert!(r.forced_zero());
        assert_eq!(r.unknowns, 4);
        assert_eq!(r.witness_verified, None);

        let t4 = torus(4);
        let degenerate = TwoForm::from_coefficients(&t4, &[(1, 2, q(1))]).unwrap();
        let r = forcing_check(&t4, &degenerate, BaseModel::SphereS2).unwrap();
        assert_eq!(r.dimension(), 2);
        assert_eq!(r.witness_verified, Some(true));
    }

    #[test]
    fn formal_base_forcing_and_pullback() {
        let ce = kt();
        let form = TwoForm::from_coefficients(&ce, &[(1, 4, q(1)), (2, 3, q(1))]).unwrap();
        let r = forcing_check(&ce, &form, BaseModel::FormalEven(2)).unwrap();
        assert!(r.forced_zero());
        assert_eq!(r.unknowns, 8);

        let alpha = vec![qs(&[0, 0]), qs(&[0, 0]), qs(&[2, -1]), qs(&[5, 3])];
        let tm = build_twisted(&ce, BaseModel::FormalEven(2), alpha).unwrap();
        let p = pullback_column(&tm, 2).unwrap();
        assert_eq!(p.alpha_column(0), qs(&[0, 0, -1, 3]));
        assert!(pullback_commutes(&tm, 1).unwrap());
        assert!(pullback_commutes(&tm, 2).unwrap());
        assert!(matches!(
            pullback_column(&tm, 3),
            Err(TwistError::ColumnRange {
                column: 3,
                count: 2
            })
        ));
        assert_eq!(pullback_column(&p, 1).unwrap_err(), TwistError::NotFormal);
    }

    #[test]
    fn convolution() {
        assert_eq!(
            convolve(&[1, 0, 1], &[1, 3, 4, 3, 1], 6),
            vec![1, 3, 5, 6, 5, 3, 1]
        );
        assert_eq!(convolve(&[1, 0, 1], &[1, 2, 1], 4), vec![1, 2, 2, 2, 1]);
    }
}
