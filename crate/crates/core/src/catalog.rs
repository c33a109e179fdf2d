//! Built-in nilpotent Lie algebras.
//!
//! Symplectic entries carry a closed nondegenerate form in the `(i, j, c)`
//! coefficient notation of [`TwoForm::from_coefficients`](crate::symplectic::TwoForm::from_coefficients).

use crate::lie::{Bracket, LieAlgebraSpec};
use crate::Rational;

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub spec: LieAlgebraSpec,
    pub omega: Option<Vec<(usize, usize, Rational)>>,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn entry(
    name: &'static str,
    description: &'static str,
    dim: usize,
    brackets: &[(usize, usize, usize)],
    omega: Option<&[(usize, usize, i64)]>,
) -> CatalogEntry {
    let spec = LieAlgebraSpec::new(
        dim,
        brackets
            .iter()
            .map(|&(i, j, k)| Bracket::unit(i, j, k))
            .collect(),
    )
    .expect("catalog entries are well formed");
    CatalogEntry {
        name,
        description,
        spec,
        omega: omega.map(|w| w.iter().map(|&(i, j, c)| (i, j, q(c))).collect()),
    }
}

pub fn entries() -> Vec<CatalogEntry> {
    vec![
        entry("torus2", "abelian R^2", 2, &[], Some(&[(1, 2, 1)])),
        entry(
            "torus4",
            "abelian R^4",
            4,
            &[],
            Some(&[(1, 2, 1), (3, 4, 1)]),
        ),
        entry(
            "torus6",
            "abelian R^6",
            6,
            &[],
            Some(&[(1, 2, 1), (3, 4, 1), (5, 6, 1)]),
        ),
        entry(
            "heisenberg3",
            "Heisenberg algebra h3",
            3,
            &[(1, 2, 3)],
            None,
        ),
        entry(
            "kodaira-thurston",
            "h3 + R, the Kodaira-Thurston nilmanifold",
            4,
            &[(1, 2, 3)],
            Some(&[(1, 4, 1), (2, 3, 1)]),
        ),
        entry(
            "heisenberg5-r",
            "h5 + R (not symplectic)",
            6,
            &[(1, 2, 5), (3, 4, 5)],
            None,
        ),
        entry(
            "n6-12-13",
            "(0,0,0,0,12,13)",
            6,
            &[(1, 2, 5), (1, 3, 6)],
            Some(&[(1, 4, 1), (2, 6, 1), (3, 5, 1)]),
        ),
        entry(
            "n6-free-2-step",
            "(0,0,0,12,13,23), free 2-step nilpotent on 3 generators",
            6,
            &[(1, 2, 4), (1, 3, 5), (2, 3, 6)],
            Some(&[(1, 6, 1), (2, 5, 2), (3, 4, 1)]),
        ),
        entry(
            "n6-filiform",
            "(0,0,12,13,14,15), filiform of class 5",
            6,
            &[(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6)],
            Some(&[(1, 6, 1), (2, 5, 1), (3, 4, -1)]),
        ),
    ]
}

pub fn get(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ce_model, validate};
    use crate::symplectic::SymplecticForm;

    #[test]
    fn every_entry_is_nilpotent() {
        for e in entries() {
            assert!(validate(&e.spec).is_ok(), "{}", e.name);
        }
    }

    #[test]
    fn stored_forms_are_symplectic() {
        let mut symplectic = 0;
        for e in entries() {
            if let Some(w) = &e.omega {
                let ce = ce_model(&e.spec).unwrap();
                SymplecticForm::from_coefficients(&ce, w)
                    .unwrap_or_else(|err| panic!("{}: {err}", e.name));
                symplectic += 1;
            }
        }
        assert_eq!(symplectic, 7);
        assert!(entries().len() >= 7);
    }

    #[test]
    fn lookup() {
        assert_eq!(get("kodaira-thurston").unwrap().spec.dim(), 4);
        assert!(get("nope").is_none());
    }
}
