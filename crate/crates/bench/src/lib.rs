//! Shared fixtures for the enumeration benchmarks: one smooth and one
//! nodal surface over fields small enough to keep a benchmark run short
//! but large enough that the kernels dominate the measurement.

pub use cubist_core::geometry::{CubicForm, ExtField, PrimeField};

pub fn fermat_surface(p: u64) -> (CubicForm, PrimeField) {
    let form = CubicForm::fermat(2, p).expect("valid parameters");
    let field = PrimeField::new(p).expect("prime");
    (form, field)
}

pub fn nodal_surface(p: u64) -> (CubicForm, PrimeField) {
    let form = CubicForm::node(2, p).expect("valid parameters");
    let field = PrimeField::new(p).expect("prime");
    (form, field)
}

pub fn quadratic_extension(field: PrimeField) -> ExtField {
    ExtField::new(field, 2).expect("degree two")
}
