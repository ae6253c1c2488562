//! End-to-end walk through the library: enumerate points and lines on a
//! cubic surface by brute force, then reproduce the line count from the
//! symbolic relation realized at raw point counts.
//!
//! Run with `cargo run -p cubist-core --example relation`.

use cubist_core::geometry::{count_points, verify_yfy_counting, CubicForm, ExtField, PrimeField};
use cubist_core::hodge::{cubic_hodge, e_polynomial, fano_hodge};
use cubist_core::motivic::{fano_class_from_defect, projective_space, VirtualClass};
use cubist_core::realize::{chi_fano, psi_polynomial, Environment};

fn main() {
    let p = 3;
    let dim = 2;
    let form = CubicForm::node(dim, p).expect("valid cubic");
    let field = PrimeField::new(p).expect("prime");

    println!("cubic: {form}");

    let report = verify_yfy_counting(&form, &field).expect("reduced cubic");
    println!(
        "points over F_{p}: {}   over F_{}: {}   singular: {}",
        report.n1,
        p * p,
        report.n2,
        report.n_singular
    );
    println!(
        "pairs: {}   length-2 subschemes: {}   lines: {}",
        report.sym2_points, report.hilb2_points, report.fano_lines
    );
    println!("relation holds: {}", report.holds);

    // The same line count, out of the symbolic identity: build the class
    // of the variety of lines from the defect of the cubic, then realize
    // it at nothing but the point counts above.
    let y = VirtualClass::atom("Y");
    let m_y = (&y - &projective_space(dim)).shift_l(-1);
    let fano = fano_class_from_defect(&m_y, dim, &VirtualClass::atom("S"));
    println!("line class: {fano}");

    let n2 = count_points(&form, &ExtField::new(field, 2).expect("quadratic extension"));
    let env = Environment::count(p)
        .assign("Y", report.n1)
        .with_companion("Y", n2)
        .assign("S", report.n_singular);
    let realized = env.realize(&fano).expect("resolvable environment");
    println!("line class realized at the counts: {realized}");

    // And the Euler-characteristic shadow: a smooth complex cubic surface
    // has chi = 9 and 27 lines; one node trades chi for a line count of 21.
    println!("chi -> lines, smooth surface: {}", chi_fano(9, 0));
    println!("chi -> lines, one-node surface: {}", chi_fano(8, 1));

    assert_eq!(realized.as_integer().expect("integral"), report.fano_lines.into());
    println!("symbolic count matches enumeration");

    // Over the complex numbers the same assembly runs in Hodge theory:
    // the diamond of the surface of lines on a smooth cubic threefold.
    let fano3 = fano_hodge(3);
    println!("\nlines on a cubic threefold, Hodge diamond:\n{fano3}");
    let e = e_polynomial(&fano3);
    println!("E-polynomial: {e}");
    println!("holomorphic forms: {}", psi_polynomial(&e));
    println!(
        "Euler characteristics, cubic and its lines: {} -> {}",
        cubic_hodge(3).euler_characteristic(),
        fano3.euler_characteristic()
    );
}
