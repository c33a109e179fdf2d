//! Shared fixtures for the criterion benches.

use nilsplit_core::catalog;
use nilsplit_core::lie::{ce_model, CeModel};
use nilsplit_core::symplectic::SymplecticForm;

/// Catalog algebras that carry a stored symplectic form, with the form.
pub fn symplectic_fixtures() -> Vec<(&'static str, CeModel, SymplecticForm)> {
    catalog::entries()
        .into_iter()
        .filter_map(|e| {
            let w = e.omega?;
            let ce = ce_model(&e.spec).ok()?;
            let sf = SymplecticForm::from_coefficients(&ce, &w).ok()?;
            Some((e.name, ce, sf))
        })
        .collect()
}

pub fn model(name: &str) -> CeModel {
    let entry = catalog::get(name).expect("catalog entry");
    ce_model(&entry.spec).expect("catalog entries are valid")
}
