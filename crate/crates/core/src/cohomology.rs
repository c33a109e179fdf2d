//! Cohomology of finite-type free DGAs, one degree at a time.
//!
//! Every degree has a finite monomial basis (odd generators appear at most
//! once, even ones are bounded by the degree), so `H^k` is computed from the
//! two differential matrices touching degree `k`.

use std::collections::HashMap;

use num::Zero;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element, FreeDga, Monomial};
use crate::lie::CeModel;
use crate::linalg::{ColumnSolver, Matrix};
use crate::Rational;

/// Slices larger than this are refused rather than computed densely.
pub const MAX_SLICE_DIMENSION: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("degree {requested} is beyond the computed cap {cap}")]
    DegreeCap { requested: u32, cap: u32 },
    #[error("degree {degree} has {size} basis monomials (limit {MAX_SLICE_DIMENSION})")]
    SliceTooLarge { degree: u32, size: usize },
    #[error("element is not homogeneous of degree {0}")]
    WrongDegree(u32),
    #[error("element is not a cocycle")]
    NotACocycle,
    #[error("class has {found} coordinates, expected {expected}")]
    CoordinateLength { expected: usize, found: usize },
    #[error("element belongs to a different algebra")]
    ForeignElement,
}

/// All normal-form monomials of degree `k`, sorted.
pub fn monomial_basis(algebra: &Algebra, k: u32) -> Vec<Monomial> {
    fn rec(
        algebra: &Algebra,
        index: usize,
        remaining: u32,
        current: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial::from_exponents(current.iter().copied()));
            return;
        }
        if index == algebra.len() {
            return;
        }
        let g = algebra.generator(index);
        let max_exp = if g.is_odd() { 1 } else { remaining / g.degree };
        for e in 0..=max_exp.min(remaining / g.degree) {
            if e > 0 {
                current.push((index, e));
            }
            rec(algebra, index + 1, remaining - e * g.degree, current, out);
            if e > 0 {
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(algebra, 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Degree-`k` basis with the differentials into and out of it.
#[derive(Debug, Clone)]
pub struct DegreeSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    /// `d_k`: columns indexed by `basis`, rows by the degree `k+1` basis.
    pub d_out: Matrix,
    /// `d_{k-1}`: rows indexed by `basis`, columns by the degree `k-1` basis.
    pub d_in: Matrix,
    index: HashMap<Monomial, usize>,
}

fn checked_basis(algebra: &Algebra, k: u32) -> Result<Vec<Monomial>, CohomologyError> {
    let basis = monomial_basis(algebra, k);
    if basis.len() > MAX_SLICE_DIMENSION {
        return Err(CohomologyError::SliceTooLarge {
            degree: k,
            size: basis.len(),
        });
    }
    Ok(basis)
}

/// Matrix of `d` from the `source` basis to the `target` basis.
fn differential_matrix(dga: &FreeDga, source: &[Monomial], target: &[Monomial]) -> Matrix {
    let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut m = Matrix::zeros(target.len(), source.len());
    let one = Rational::from_integer(1.into());
    for (j, mono) in source.iter().enumerate() {
        let image = dga.d(&Element::monomial(dga.algebra(), mono.clone(), one.clone()));
        for (t, c) in image.terms() {
            m[(index[t], j)] = c.clone();
        }
    }
    m
}

pub fn slice(dga: &FreeDga, k: u32) -> Result<DegreeSlice, CohomologyError> {
    let algebra = dga.algebra();
    let basis = checked_basis(algebra, k)?;
    let above = checked_basis(algebra, k + 1)?;
    let below = if k == 0 {
        Vec::new()
    } else {
        checked_basis(algebra, k - 1)?
    };
    let d_out = differential_matrix(dga, &basis, &above);
    let d_in = differential_matrix(dga, &below, &basis);
    let index = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    Ok(DegreeSlice {
        degree: k,
        basis,
        d_out,
        d_in,
        index,
    })
}

impl DegreeSlice {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a degree-`k` element in `basis`.
    pub fn coordinates(&self, u: &Element) -> Result<Vec<Rational>, CohomologyError> {
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in u.terms() {
            let &i = self
                .index
                .get(m)
                .ok_or(CohomologyError::WrongDegree(self.degree))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn element(&self, algebra: &Algebra, coords: &[Rational]) -> Element {
        Element::from_terms(
            algebra,
            self.basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }

    pub fn betti(&self) -> usize {
        self.dim() - self.d_out.rank() - self.d_in.rank()
    }
}

pub fn betti(dga: &FreeDga, k: u32) -> Result<usize, CohomologyError> {
    Ok(slice(dga, k)?.betti())
}

/// A basis of `H^k` by representative cocycles, with reduction of cocycles
/// to coordinates.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub degree: u32,
    pub representatives: Vec<Element>,
    slice: DegreeSlice,
    solver: ColumnSolver,
}

impl CohomologyBasis {
    pub fn betti(&self) -> usize {
        self.representatives.len()
    }

    pub fn slice(&self) -> &DegreeSlice {
        &self.slice
    }

    /// Coordinates of the class of a degree-`k` cocycle.
    pub fn reduce(&self, z: &Element) -> Result<Vec<Rational>, CohomologyError> {
        if !z.is_zero() && z.homogeneous_degree() != Some(self.degree) {
            return Err(CohomologyError::WrongDegree(self.degree));
        }
        let v = self.slice.coordinates(z)?;
        let y = self.solver.solve(&v).ok_or(CohomologyError::NotACocycle)?;
        Ok(y[..self.betti()].to_vec())
    }

    /// The representative cocycle `sum c_i rep_i`.
    pub fn element(
        &self,
        algebra: &Algebra,
        coords: &[Rational],
    ) -> Result<Element, CohomologyError> {
        if coords.len() != self.betti() {
            return Err(CohomologyError::CoordinateLength {
                expected: self.betti(),
                found: coords.len(),
            });
        }
        let mut out = Element::zero(algebra);
        for (rep, c) in self.representatives.iter().zip(coords) {
            out = &out + &rep.scale(c);
        }
        Ok(out)
    }
}

/// Representatives chosen greedily: image basis first, then kernel basis
/// vectors in order, keeping those independent of everything before them.
pub fn representatives(dga: &FreeDga, k: u32) -> Result<CohomologyBasis, CohomologyError> {
    let slice = slice(dga, k)?;
    let dim = slice.dim();
    let (_, image_pivots) = slice.d_in.rref();
    let image: Vec<Vec<Rational>> = image_pivots.iter().map(|&j| slice.d_in.column(j)).collect();
    let kernel = slice.d_out.kernel();

    let mut combined = image.clone();
    combined.extend(kernel.iter().cloned());
    let (_, pivots) = Matrix::from_columns(dim, &combined).rref();
    let chosen: Vec<Vec<Rational>> = pivots
        .iter()
        .filter(|&&p| p >= image.len())
        .map(|&p| combined[p].clone())
        .collect();

    let representatives = chosen
        .iter()
        .map(|v| slice.element(dga.algebra(), v))
        .collect();
    let mut columns = chosen;
    columns.extend(image);
    let solver = ColumnSolver::new(dim, &columns);
    Ok(CohomologyBasis {
        degree: k,
        representatives,
        slice,
        solver,
    })
}

/// Cohomology of a DGA in degrees `0..=cap`.
#[derive(Debug, Clone)]
pub struct Cohomology {
    dga: FreeDga,
    bases: Vec<CohomologyBasis>,
}

impl Cohomology {
    /// Degrees are independent and computed in parallel.
    pub fn compute(dga: &FreeDga, cap: u32) -> Result<Self, CohomologyError> {
        let bases = (0..=cap)
            .into_par_iter()
            .map(|k| representatives(dga, k))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Cohomology {
            dga: dga.clone(),
            bases,
        })
    }

    pub fn dga(&self) -> &FreeDga {
        &self.dga
    }

    pub fn cap(&self) -> u32 {
        self.bases.len() as u32 - 1
    }

    pub fn basis(&self, k: u32) -> Result<&CohomologyBasis, CohomologyError> {
        self.bases
            .get(k as usize)
            .ok_or(CohomologyError::DegreeCap {
                requested: k,
                cap: self.cap(),
            })
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.bases.iter().map(CohomologyBasis::betti).collect()
    }

    /// Class of a homogeneous cocycle.
    pub fn class_of(&self, z: &Element) -> Result<(u32, Vec<Rational>), CohomologyError> {
        if !z.algebra().same_as(self.dga.algebra()) {
            return Err(CohomologyError::ForeignElement);
        }
        let k = z
            .homogeneous_degree()
            .ok_or(CohomologyError::WrongDegree(0))?;
        Ok((k, self.basis(k)?.reduce(z)?))
    }

    /// Product of the classes `c1` in `H^p` and `c2` in `H^q`, as coordinates in `H^{p+q}`.
    pub fn cup(
        &self,
        p: u32,
        c1: &[Rational],
        q: u32,
        c2: &[Rational],
    ) -> Result<Vec<Rational>, CohomologyError> {
        let target = self.basis(p + q)?;
        let u = self.basis(p)?.element(self.dga.algebra(), c1)?;
        let v = self.basis(q)?.element(self.dga.algebra(), c2)?;
        target.reduce(&(&u * &v))
    }
}

pub fn euler_characteristic(betti: &[usize]) -> i64 {
    betti
        .iter()
        .enumerate()
        .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

/// Betti numbers `b_0..b_n` of a CE model.
pub fn ce_betti(ce: &CeModel) -> Vec<usize> {
    let n = ce.dim() as u32;
    (0..=n)
        .into_par_iter()
        .map(|k| betti(ce.dga(), k).expect("exterior slices of a catalog-sized model"))
        .collect()
}

/// `b_k = b_{n-k}` for all `0 <= k <= n`.
pub fn poincare_check(ce: &CeModel) -> bool {
    let b = ce_betti(ce);
    b.iter().eq(b.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ce_model, Bracket, LieAlgebraSpec};
    use num::One;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sphere() -> FreeDga {
        let alg = Algebra::new([("a", 2), ("b", 3)]).unwrap();
        let a = Element::generator(&alg, 0);
        FreeDga::new(alg.clone(), vec![Element::zero(&alg), a.pow(2)]).unwrap()
    }

    fn kt() -> CeModel {
        ce_model(&LieAlgebraSpec::new(4, vec![Bracket::unit(1, 2, 3)]).unwrap()).unwrap()
    }

    #[test]
    fn torus_slice() {
        let t4 = ce_model(&LieAlgebraSpec::abelian(4)).unwrap();
        let s = slice(t4.dga(), 2).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(s.d_out.is_zero() && s.d_in.is_zero());
        assert_eq!(ce_betti(&t4), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn sphere_slices() {
        let s2 = sphere();
        let s4 = slice(&s2, 4).unwrap();
        assert_eq!(s4.basis, vec![Monomial::from_exponents([(0, 2)])]);
        assert!(s4.d_out.is_zero());
        let b: Vec<usize> = (0..=10).map(|k| betti(&s2, k).unwrap()).collect();
        assert_eq!(b, vec![1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn heisenberg_slice_one() {
        let h3 = ce_model(&LieAlgebraSpec::new(3, vec![Bracket::unit(1, 2, 3)]).unwrap()).unwrap();
        let s = slice(h3.dga(), 1).unwrap();
        assert_eq!(s.dim(), 3);
        // single nonzero column: x3 -> -x1x2
        let nonzero: Vec<usize> = (0..3)
            .filter(|&j| !s.d_out.column(j).iter().all(Zero::is_zero))
            .collect();
        assert_eq!(nonzero, vec![2]);
        assert_eq!(ce_betti(&h3), vec![1, 2, 2, 1]);
        assert!(poincare_check(&h3));
    }

    #[test]
    fn kodaira_thurston_representatives() {
        let ce = kt();
        assert_eq!(ce_betti(&ce), vec![1, 3, 4, 3, 1]);
        let h1 = representatives(ce.dga(), 1).unwrap();
        assert_eq!(h1.representatives, vec![ce.x(1), ce.x(2), ce.x(4)]);
        for (i, rep) in h1.representatives.iter().enumerate() {
            let mut e = vec![q(0); 3];
            e[i] = Rational::one();
            assert_eq!(h1.reduce(rep).unwrap(), e);
        }
        assert_eq!(h1.reduce(&ce.x(3)), Err(CohomologyError::NotACocycle));
    }

    #[test]
    fn kt_cup_product_vanishes() {
        let ce = kt();
        let h = Cohomology::compute(ce.dga(), 4).unwrap();
        let x1 = h.class_of(&ce.x(1)).unwrap().1;
        let x2 = h.class_of(&ce.x(2)).unwrap().1;
        let x4 = h.class_of(&ce.x(4)).unwrap().1;
        assert!(h.cup(1, &x1, 1, &x2).unwrap().iter().all(Zero::is_zero));
        assert!(h.cup(1, &x1, 1, &x4).unwrap().iter().any(|c| !c.is_zero()));
        assert!(matches!(
            h.cup(3, &[q(1), q(0), q(0)], 2, &[q(1), q(0), q(0), q(0)]),
            Err(CohomologyError::DegreeCap {
                requested: 5,
                cap: 4
            })
        ));
    }

    #[test]
    fn torus_cup_nonzero() {
        let t4 = ce_model(&LieAlgebraSpec::abelian(4)).unwrap();
        let h = Cohomology::compute(t4.dga(), 4).unwrap();
        let x1 = h.class_of(&t4.x(1)).unwrap().1;
        let x2 = h.class_of(&t4.x(2)).unwrap().1;
        let prod = h.cup(1, &x1, 1, &x2).unwrap();
        assert_eq!(prod, h.class_of(&(&t4.x(1) * &t4.x(2))).unwrap().1);
        assert!(prod.iter().any(|c| !c.is_zero()));
        // odd class squared
        assert!(h.cup(1, &x1, 1, &x1).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn empty_cohomology_has_no_representatives() {
        let s2 = sphere();
        let h3 = representatives(&s2, 3).unwrap();
        assert_eq!(h3.betti(), 0);
        assert!(h3.representatives.is_empty());
    }

    #[test]
    fn euler() {
        assert_eq!(euler_characteristic(&[1, 3, 4, 3, 1]), 0);
        assert_eq!(euler_characteristic(&[1, 0, 1]), 2);
    }
}
