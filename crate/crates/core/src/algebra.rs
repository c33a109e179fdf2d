//! Free graded-commutative algebras over the rationals.
//!
//! An [`Algebra`] is a fixed, totally ordered list of named generators with
//! positive degrees. Elements are finite sums of normal-form [`Monomial`]s
//! with nonzero rational coefficients. Odd generators anticommute and square
//! to zero; even generators are central and generate a polynomial algebra.
//!
//! The product sign is the Koszul sign obtained by counting the
//! transpositions of odd factors needed to merge two monomials into
//! ascending generator order.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    MismatchedAlgebras,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegree(String),
    #[error("generator index {0} out of range")]
    UnknownGenerator(usize),
    #[error("expected {expected} derivation images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of `{generator}` has degree {found:?}, expected {expected}")]
    ImageDegree {
        generator: String,
        expected: u32,
        found: Option<u32>,
    },
}

/// A named generator with a positive degree and a fixed position in its algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub index: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

#[derive(Debug, PartialEq, Eq)]
struct GeneratorSet {
    generators: Vec<Generator>,
}

/// Shared handle to a generator set. Cloning is cheap.
#[derive(Debug, Clone)]
pub struct Algebra(Arc<GeneratorSet>);

impl Algebra {
    /// Builds an algebra from `(name, degree)` pairs; the list order is the
    /// global generator order.
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = (S, u32)>,
    ) -> Result<Self, AlgebraError> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (index, (name, degree)) in generators.into_iter().enumerate() {
            let name = name.into();
            if degree == 0 {
                return Err(AlgebraError::ZeroDegree(name));
            }
            if !seen.insert(name.clone()) {
                return Err(AlgebraError::DuplicateGenerator(name));
            }
            out.push(Generator {
                name,
                degree,
                index,
            });
        }
        Ok(Algebra(Arc::new(GeneratorSet { generators: out })))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0.generators
    }

    pub fn len(&self) -> usize {
        self.0.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.generators.is_empty()
    }

    pub fn generator(&self, index: usize) -> &Generator {
        &self.0.generators[index]
    }

    pub fn degree_of(&self, index: usize) -> u32 {
        self.0.generators[index].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.generators.iter().position(|g| g.name == name)
    }

    /// Same generator list (pointer-equal handles short-circuit).
    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Algebra {}

/// A normal-form monomial: `(generator index, exponent)` pairs in ascending
/// index order with positive exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(index: usize) -> Self {
        Monomial(vec![(index, 1)])
    }

    /// Builds a monomial from arbitrary `(index, exponent)` pairs, merging
    /// repeated indices and dropping zero exponents. Does not check the
    /// odd-square rule; see [`Monomial::is_valid_in`].
    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (i, e) in pairs {
            *map.entry(i).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|p| self.0[p].1)
            .unwrap_or(0)
    }

    pub fn degree(&self, algebra: &Algebra) -> u32 {
        self.0.iter().map(|&(i, e)| e * algebra.degree_of(i)).sum()
    }

    /// Indices in range and odd generators appear at most once.
    pub fn is_valid_in(&self, algebra: &Algebra) -> bool {
        self.0
            .iter()
            .all(|&(i, e)| i < algebra.len() && (e == 1 || !algebra.generator(i).is_odd()))
    }

    /// Product in normal form together with its Koszul sign, or `None` when
    /// an odd generator would appear twice.
    pub fn mul_signed(&self, other: &Monomial, algebra: &Algebra) -> Option<(Monomial, bool)> {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut negative = false;
        // odd factors of `self` not yet passed by the merge
        let mut odd_left: usize = self
            .0
            .iter()
            .filter(|&&(i, _)| algebra.generator(i).is_odd())
            .count();
        let (mut p, mut q) = (0, 0);
        while p < self.0.len() || q < other.0.len() {
            let take_left = match (self.0.get(p), other.0.get(q)) {
                (Some(&(i, _)), Some(&(j, _))) => {
                    if i == j {
                        if algebra.generator(i).is_odd() {
                            return None;
                        }
                        let e = self.0[p].1 + other.0[q].1;
                        out.push((i, e));
                        p += 1;
                        q += 1;
                        continue;
                    }
                    i < j
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => unreachable!(),
            };
            if take_left {
                let (i, e) = self.0[p];
                if algebra.generator(i).is_odd() {
                    odd_left -= 1;
                }
                out.push((i, e));
                p += 1;
            } else {
                let (j, e) = other.0[q];
                if algebra.generator(j).is_odd() && odd_left % 2 == 1 {
                    negative = !negative;
                }
                out.push((j, e));
                q += 1;
            }
        }
        Some((Monomial(out), negative))
    }

    /// Splits at factor position `pos`: factors before, the factor itself, factors after.
    fn split_at(&self, pos: usize) -> (Monomial, (usize, u32), Monomial) {
        (
            Monomial(self.0[..pos].to_vec()),
            self.0[pos],
            Monomial(self.0[pos + 1..].to_vec()),
        )
    }

    pub fn display_in(&self, algebra: &Algebra) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(i, e)| {
                let name = &algebra.generator(i).name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A finite rational combination of monomials of one algebra.
#[derive(Debug, Clone)]
pub struct Element {
    algebra: Algebra,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(algebra: &Algebra) -> Self {
        Element {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(algebra: &Algebra) -> Self {
        Self::scalar(algebra, Rational::one())
    }

    pub fn scalar(algebra: &Algebra, c: Rational) -> Self {
        Self::monomial(algebra, Monomial::one(), c)
    }

    pub fn generator(algebra: &Algebra, index: usize) -> Self {
        assert!(
            index < algebra.len(),
            "generator index {index} out of range"
        );
        Self::monomial(algebra, Monomial::generator(index), Rational::one())
    }

    /// Single term; zero if `c` is zero or the monomial squares an odd generator.
    pub fn monomial(algebra: &Algebra, m: Monomial, c: Rational) -> Self {
        Self::from_terms(algebra, [(m, c)])
    }

    /// Sums the given terms into normal form. Terms that square an odd
    /// generator are zero and dropped.
    pub fn from_terms(
        algebra: &Algebra,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut out = Element::zero(algebra);
        for (m, c) in terms {
            assert!(
                m.factors().iter().all(|&(i, _)| i < algebra.len()),
                "monomial refers to a generator outside the algebra"
            );
            if m.is_valid_in(algebra) {
                out.add_term(m, c);
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degrees of the nonzero homogeneous components.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.terms.keys().map(|m| m.degree(&self.algebra)).collect()
    }

    /// `Some(k)` when every term has degree `k`; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let degrees = self.degrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn component(&self, degree: u32) -> Element {
        Element {
            algebra: self.algebra.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(&self.algebra) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(&self.algebra);
        }
        Element {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        if !self.algebra.same_as(&other.algebra) {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        let mut out = Element::zero(&self.algebra);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul_signed(m2, &self.algebra) {
                    let c = c1 * c2;
                    out.add_term(m, if negative { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut out = Element::one(&self.algebra);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Applies `f` to each monomial and sums `coefficient * f(monomial)`.
    /// `f` must return elements of `target`.
    pub fn map_monomials(
        &self,
        target: &Algebra,
        mut f: impl FnMut(&Monomial) -> Element,
    ) -> Element {
        let mut out = Element::zero(target);
        for (m, c) in &self.terms {
            let image = f(m);
            assert!(
                image.algebra.same_as(target),
                "image outside target algebra"
            );
            for (m2, c2) in image.terms {
                out.add_term(m2, c2 * c);
            }
        }
        out
    }

    /// Re-collects the terms; a normalized element is returned unchanged.
    pub fn normalized(&self) -> Element {
        Element::from_terms(&self.algebra, self.terms.clone())
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        self.checked_add(rhs)
            .expect("adding elements of different algebras")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        self.checked_add(&-rhs)
            .expect("subtracting elements of different algebras")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        self.checked_mul(rhs)
            .expect("multiplying elements of different algebras")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display_in(&self.algebra))?;
            } else {
                write!(f, "{abs}*{}", m.display_in(&self.algebra))?;
            }
        }
        Ok(())
    }
}

/// Extends `images` (one per generator) to the unique degree +1 derivation
/// and applies it to `u`:
/// `D(vw) = D(v) w + (-1)^{|v|} v D(w)`.
pub fn extend_derivation(images: &[Element], u: &Element) -> Result<Element, AlgebraError> {
    let algebra = u.algebra();
    check_images(algebra, images)?;
    Ok(apply_derivation(algebra, images, u))
}

fn check_images(algebra: &Algebra, images: &[Element]) -> Result<(), AlgebraError> {
    if images.len() != algebra.len() {
        return Err(AlgebraError::ImageCount {
            expected: algebra.len(),
            found: images.len(),
        });
    }
    for (g, image) in algebra.generators().iter().zip(images) {
        if !image.algebra().same_as(algebra) {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        if !image.is_zero() && image.homogeneous_degree() != Some(g.degree + 1) {
            return Err(AlgebraError::ImageDegree {
                generator: g.name.clone(),
                expected: g.degree + 1,
                found: image.homogeneous_degree(),
            });
        }
    }
    Ok(())
}

fn apply_derivation(algebra: &Algebra, images: &[Element], u: &Element) -> Element {
    let mut out = Element::zero(algebra);
    for (m, c) in u.terms() {
        let dm = derivation_on_monomial(algebra, images, m);
        for (m2, c2) in dm.terms {
            out.add_term(m2, c2 * c);
        }
    }
    out
}

fn derivation_on_monomial(algebra: &Algebra, images: &[Element], m: &Monomial) -> Element {
    let mut out = Element::zero(algebra);
    for pos in 0..m.factors().len() {
        let (prefix, (g, e), suffix) = m.split_at(pos);
        let image = &images[g];
        if image.is_zero() {
            continue;
        }
        // D(g^e) = e g^{e-1} D(g); only even g can have e > 1
        let power_rest = Monomial::from_exponents([(g, e - 1)]);
        let dpow =
            &Element::monomial(algebra, power_rest, Rational::from_integer(e.into())) * image;
        let left = Element::monomial(algebra, prefix.clone(), Rational::one());
        let right = Element::monomial(algebra, suffix, Rational::one());
        let mut term = &(&left * &dpow) * &right;
        if prefix.degree(algebra) % 2 == 1 {
            term = -&term;
        }
        for (m2, c2) in term.terms {
            out.add_term(m2, c2);
        }
    }
    out
}

/// Applies the algebra morphism sending generator `i` of `u`'s algebra to
/// `images[i]` (elements of `target` of the same parity).
pub fn apply_morphism(target: &Algebra, images: &[Element], u: &Element) -> Element {
    assert_eq!(images.len(), u.algebra().len(), "one image per generator");
    u.map_monomials(target, |m| {
        m.factors()
            .iter()
            .fold(Element::one(target), |acc, &(g, e)| {
                &acc * &images[g].pow(e)
            })
    })
}

/// A free graded-commutative algebra with a degree +1 derivation given on generators.
#[derive(Debug, Clone)]
pub struct FreeDga {
    algebra: Algebra,
    images: Vec<Element>,
}

impl FreeDga {
    pub fn new(algebra: Algebra, images: Vec<Element>) -> Result<Self, AlgebraError> {
        check_images(&algebra, &images)?;
        Ok(FreeDga { algebra, images })
    }

    /// The algebra with zero differential.
    pub fn trivial(algebra: Algebra) -> Self {
        let images = vec![Element::zero(&algebra); algebra.len()];
        FreeDga { algebra, images }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn d_generator(&self, index: usize) -> &Element {
        &self.images[index]
    }

    pub fn d(&self, u: &Element) -> Element {
        assert!(
            u.algebra().same_as(&self.algebra),
            "element outside this DGA"
        );
        apply_derivation(&self.algebra, &self.images, u)
    }

    /// First generator (in order) with `d(d(g)) != 0`, and that element.
    pub fn square_defect(&self) -> Option<(usize, Element)> {
        (0..self.algebra.len()).find_map(|i| {
            let dd = self.d(&self.images[i]);
            (!dd.is_zero()).then_some((i, dd))
        })
    }

    /// Differential vanishes on every generator.
    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(Element::is_zero)
    }
}
