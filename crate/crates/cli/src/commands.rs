//! Implementations of the subcommands. Each returns `Ok(())` for a pass,
//! `CliError::Input` for unusable input (exit 1), and `CliError::Failed`
//! when a checked relation does not hold (exit 2).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use cubist_core::geometry::{
    count_fano_by_formula, count_lines, count_points, count_singular, count_sym2_points,
    verify_yfy_counting, zeta_sym_counts, CubicForm, ExtField, VerifyError,
};
use cubist_core::hodge::{cubic_hodge, e_polynomial, fano_hodge, HodgeDiamond};
use cubist_core::motivic::{
    fano_class_from_defect, hilb2_class, projective_space, sym2, sym_series, Monomial, Symbol,
    SymSeries, VirtualClass,
};
use cubist_core::realize::{chi_fano, chi_real_fano, psi_polynomial};

use crate::catalog;
use crate::report::{
    print_breakdown, print_count_check, print_json, Breakdown, CountCheck, CubicInput,
    IdentityCheck, NamedCheck, Verdict, ZetaReport,
};
use crate::{Cli, CliError, Command, EulerArgs, GeometricArgs, HodgeArgs, Parity, RealArgs, Suite,
    SymbolicArgs, ZetaArgs};

pub fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Lines(args) => cmd_lines(args, cli.json),
        Command::Verify(args) => cmd_verify(args, cli.json),
        Command::Hodge(args) => cmd_hodge(args, cli.json),
        Command::Euler(args) => cmd_euler(args, cli.json),
        Command::Real(args) => cmd_real(args, cli.json),
        Command::Symbolic(args) => cmd_symbolic(args, cli.json),
        Command::Zeta(args) => cmd_zeta(args, cli.json),
    }
}

/// Splits verification-layer errors by exit code: a non-integral or
/// negative line count is evidence against the relation on this input
/// (exit 2); everything else is a problem with the input itself.
fn verify_error(e: VerifyError) -> CliError {
    match e {
        VerifyError::NonIntegral { .. } | VerifyError::NegativeCount(_) => {
            CliError::Failed(e.to_string())
        }
        _ => CliError::Input(e.to_string()),
    }
}

fn input_from(id: &str, form: &CubicForm) -> CubicInput {
    CubicInput {
        cubic: id.to_string(),
        p: form.p(),
        dim: form.dim(),
    }
}

fn ensure_passed(v: Verdict, what: &str) -> Result<(), CliError> {
    if v.passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{what} did not hold")))
    }
}

fn cmd_lines(args: &GeometricArgs, json: bool) -> Result<(), CliError> {
    let (form, id) = catalog::resolve(args)?;
    if !form.is_reduced() {
        return Err(CliError::Input(
            "the cubic is not reduced; the line-count formula does not apply".to_string(),
        ));
    }
    let field = form.base_field();
    let t0 = Instant::now();
    let n1 = count_points(&form, &field);
    let ext2 = ExtField::new(field, 2).map_err(|e| CliError::Input(e.to_string()))?;
    let n2 = count_points(&form, &ext2);
    let n_singular = count_singular(&form, &field);
    let enumerated = count_lines(&form, &field);
    let formula =
        count_fano_by_formula(n1, n2, n_singular, field.p(), form.dim()).map_err(verify_error)?;
    let check = CountCheck {
        relation: "lines-from-point-counts".to_string(),
        input: input_from(&id, &form),
        lhs: enumerated,
        rhs: formula,
        breakdown: Breakdown {
            n1,
            n2,
            n_singular,
            lines: Some(enumerated),
            lines_by_formula: Some(formula),
            ..Breakdown::default()
        },
        verdict: Verdict::from_eq(enumerated, formula),
        wall_ms: t0.elapsed().as_millis(),
    };
    if json {
        print_json(&check)?;
    } else {
        print_count_check(&check);
        eprintln!("completed in {} ms", check.wall_ms);
    }
    ensure_passed(check.verdict, &check.relation)
}

fn cmd_verify(args: &GeometricArgs, json: bool) -> Result<(), CliError> {
    let (form, id) = catalog::resolve(args)?;
    let field = form.base_field();
    let t0 = Instant::now();
    let r = verify_yfy_counting(&form, &field).map_err(verify_error)?;
    let wall_ms = t0.elapsed().as_millis();
    let input = input_from(&id, &form);
    let breakdown = Breakdown {
        n1: r.n1,
        n2: r.n2,
        n_singular: r.n_singular,
        lines: Some(r.fano_lines),
        lines_by_formula: Some(r.fano_by_formula),
        sym2_points: Some(r.sym2_points),
        hilb2_points: Some(r.hilb2_points),
    };
    // The pair count the relation predicts: (1 + q^d) N1 + q^2 #F - q^d Ns.
    let qd = i128::from(r.p).pow(r.dim);
    let sym2_expected = (1 + qd) * i128::from(r.n1) + i128::from(r.p * r.p * r.fano_lines)
        - qd * i128::from(r.n_singular);
    let sym2_expected = u64::try_from(sym2_expected)
        .map_err(|_| CliError::Failed("predicted pair count is negative".to_string()))?;
    let checks = vec![
        CountCheck {
            relation: "two-point-subschemes".to_string(),
            input: input.clone(),
            lhs: r.hilb2_points,
            rhs: r.expected_hilb2,
            breakdown: breakdown.clone(),
            verdict: Verdict::from_eq(r.hilb2_points, r.expected_hilb2),
            wall_ms,
        },
        CountCheck {
            relation: "point-pairs".to_string(),
            input: input.clone(),
            lhs: r.sym2_points,
            rhs: sym2_expected,
            breakdown: breakdown.clone(),
            verdict: Verdict::from_eq(r.sym2_points, sym2_expected),
            wall_ms,
        },
    ];
    if json {
        print_json(&checks)?;
    } else {
        println!("cubic: {} (d={}, p={})", input.cubic, input.dim, input.p);
        print_breakdown(&breakdown);
        for c in &checks {
            println!("{}", c.identity_line());
        }
        let overall = checks.iter().all(|c| c.verdict.passed());
        println!("verdict: {}", if overall { "pass" } else { "fail" });
        eprintln!("completed in {wall_ms} ms");
    }
    for c in &checks {
        ensure_passed(c.verdict, &c.relation)?;
    }
    Ok(())
}

/// One variety's worth of Hodge data in the `hodge` report.
#[derive(Serialize)]
struct DiamondSection {
    diamond: HodgeDiamond,
    /// Betti numbers for weights `0 ..= 2n`.
    betti: Vec<u64>,
    chi: i64,
    /// Generating polynomial of the holomorphic column.
    psi: String,
}

#[derive(Serialize)]
struct HodgeReport {
    dim: u32,
    cubic: DiamondSection,
    lines: DiamondSection,
}

fn section(h: &HodgeDiamond) -> DiamondSection {
    let top = h.max_weight().unwrap_or(0);
    let betti = (0..=top).map(|w| h.betti(w)).collect();
    let e = e_polynomial(h);
    DiamondSection {
        diamond: h.clone(),
        betti,
        chi: h.euler_characteristic(),
        psi: psi_polynomial(&e).to_string(),
    }
}

fn print_section(s: &DiamondSection) {
    println!("{}", s.diamond);
    let betti: Vec<String> = s.betti.iter().map(u64::to_string).collect();
    println!("betti: {}", betti.join(" "));
    println!("chi: {}", s.chi);
    println!("psi: {}", s.psi);
}

fn cmd_hodge(args: &HodgeArgs, json: bool) -> Result<(), CliError> {
    if args.dim < 2 {
        return Err(CliError::Input(
            "--dim must be at least 2 (the variety of lines is empty below that)".to_string(),
        ));
    }
    let y = cubic_hodge(args.dim);
    let f = fano_hodge(args.dim);
    if json {
        print_json(&HodgeReport {
            dim: args.dim,
            cubic: section(&y),
            lines: section(&f),
        })
    } else {
        println!("cubic hypersurface Y, dimension {}", args.dim);
        print_section(&section(&y));
        println!();
        println!("variety of lines F(Y), dimension {}", 2 * args.dim - 4);
        print_section(&section(&f));
        Ok(())
    }
}

fn cmd_euler(args: &EulerArgs, json: bool) -> Result<(), CliError> {
    let lines = chi_fano(args.chi, args.sing);
    if json {
        print_json(&serde_json::json!({
            "chi": args.chi,
            "sing": args.sing,
            "lines": lines,
        }))
    } else {
        println!("{lines}");
        Ok(())
    }
}

fn cmd_real(args: &RealArgs, json: bool) -> Result<(), CliError> {
    let d = match args.parity {
        Parity::Even => 2,
        Parity::Odd => 3,
    };
    let lines = chi_real_fano(args.chi_r, args.chi_c, d, args.chi_r_sing)
        .map_err(|e| CliError::Input(e.to_string()))?;
    if json {
        print_json(&serde_json::json!({
            "chi_r": args.chi_r,
            "chi_c": args.chi_c,
            "parity": match args.parity { Parity::Even => "even", Parity::Odd => "odd" },
            "chi_r_sing": args.chi_r_sing,
            "lines": lines,
        }))
    } else {
        println!("{lines}");
        Ok(())
    }
}

fn check(name: String, holds: bool) -> IdentityCheck {
    IdentityCheck {
        identity: name,
        verdict: if holds { Verdict::Pass } else { Verdict::Fail },
    }
}

/// The two-point identity rearranged through the defect: with
/// `M = ([Y] - [P^d]) L^{-1}` the assembled class of the variety of lines
/// satisfies `[Hilb2 Y] = [P^d][Y] + L^2 [F]` identically in `[Y]` and the
/// singular-locus class.
fn rearrangement_suite() -> Vec<IdentityCheck> {
    let y = VirtualClass::atom("Y");
    let s = VirtualClass::atom("S");
    (2..=8)
        .map(|d| {
            let m = (&y - &projective_space(d)).shift_l(-1);
            let f = fano_class_from_defect(&m, d, &s);
            let lhs = hilb2_class(&y, d, &s);
            let rhs = &(&projective_space(d) * &y) + &f.shift_l(2);
            check(format!("two-point rearrangement, d={d}"), lhs == rhs)
        })
        .collect()
}

/// `Sym2 [P^d]` in closed form: the coefficient of `L^k` is
/// `floor(min(k, 2d - k) / 2) + 1`.
fn squares_suite() -> Vec<IdentityCheck> {
    (2u32..=8)
        .map(|d| {
            let lhs = sym2(&projective_space(d));
            let mut rhs = VirtualClass::zero();
            let top = 2 * i64::from(d);
            for k in 0..=top {
                rhs.add_term(k, Monomial::one(), k.min(top - k) / 2 + 1);
            }
            check(format!("symmetric square of projective {d}-space"), lhs == rhs)
        })
        .collect()
}

/// One-node cubics, where projection from the node computes the defect
/// exactly and the variety of lines has a closed description.
fn singular_suite() -> Vec<IdentityCheck> {
    let one = VirtualClass::one();
    let mut out = Vec::new();
    // Surface: the defect is six points minus a point, and the 21 lines
    // are the pairs among the six.
    let m2 = &VirtualClass::int(6) - &projective_space(0);
    let f2 = fano_class_from_defect(&m2, 2, &one);
    out.push(check(
        "one-node surface, twenty-one lines".to_string(),
        f2 == VirtualClass::int(21),
    ));
    // Threefold: the defect is a curve C minus a line minus a point, and
    // the lines form Sym2 C glued to itself along C.
    let c = VirtualClass::atom("C");
    let m3 = &(&c - &projective_space(1)) - &one;
    let f3 = fano_class_from_defect(&m3, 3, &one);
    out.push(check(
        "one-node threefold, lines from the sextic curve".to_string(),
        f3 == &sym2(&c) - &c,
    ));
    // Fourfold: the defect is a surface V minus a plane, and the lines
    // form Sym2 V on the nose.
    let v = VirtualClass::atom("V");
    let m4 = &v - &projective_space(2);
    let f4 = fano_class_from_defect(&m4, 4, &one);
    out.push(check(
        "one-node fourfold, lines from the degree-six surface".to_string(),
        f4 == sym2(&v),
    ));
    out
}

fn random_class(rng: &mut ChaCha8Rng) -> VirtualClass {
    let atoms = ["Y", "S", "C"];
    let mut a = VirtualClass::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let l_power = rng.gen_range(-2..=3);
        let coeff = loop {
            let c = rng.gen_range(-3..=3i64);
            if c != 0 {
                break c;
            }
        };
        let monomial = match rng.gen_range(0..=atoms.len()) {
            0 => Monomial::one(),
            i => Monomial::from_symbol(Symbol::atomic(atoms[i - 1])),
        };
        a.add_term(l_power, monomial, coeff);
    }
    a
}

/// `Sym_t(a) Sym_t(-a) = 1` through the truncation order, on seeded
/// random classes.
fn inverse_suite(cases: u32, seed: u64) -> Vec<IdentityCheck> {
    let order = 4;
    let identity = SymSeries::one(order);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut holds = true;
    for _ in 0..cases {
        let a = random_class(&mut rng);
        let neg = -&a;
        if sym_series(&a, order).mul(&sym_series(&neg, order)) != identity {
            holds = false;
            break;
        }
    }
    vec![check(
        format!("symmetric series inverse on {cases} random classes"),
        holds,
    )]
}

fn cmd_symbolic(args: &SymbolicArgs, json: bool) -> Result<(), CliError> {
    let all = args.suite == Suite::All;
    let mut checks: Vec<IdentityCheck> = Vec::new();
    if all || args.suite == Suite::Rearrangement {
        checks.extend(rearrangement_suite());
    }
    if all || args.suite == Suite::Squares {
        checks.extend(squares_suite());
    }
    if all || args.suite == Suite::Singular {
        checks.extend(singular_suite());
    }
    if all || args.suite == Suite::Inverse {
        checks.extend(inverse_suite(args.cases, args.seed));
    }
    let overall = checks.iter().all(|c| c.verdict.passed());
    if json {
        print_json(&checks)?;
    } else {
        for c in &checks {
            println!("identity {}: {}", c.identity, c.verdict.word());
        }
        println!("verdict: {}", if overall { "pass" } else { "fail" });
    }
    if overall {
        Ok(())
    } else {
        Err(CliError::Failed("a symbolic identity failed".to_string()))
    }
}

fn cmd_zeta(args: &ZetaArgs, json: bool) -> Result<(), CliError> {
    if !(1..=3).contains(&args.order) {
        return Err(CliError::Input(format!(
            "--order must be between 1 and 3, got {}",
            args.order
        )));
    }
    let (form, id) = catalog::resolve(&args.geo)?;
    let field = form.base_field();
    let t0 = Instant::now();
    let mut point_counts = Vec::new();
    for m in 1..=args.order {
        let count = if m == 1 {
            count_points(&form, &field)
        } else {
            let ext = ExtField::new(field, m).map_err(|e| CliError::Input(e.to_string()))?;
            count_points(&form, &ext)
        };
        point_counts.push(count);
    }
    let sym_counts = zeta_sym_counts(&form, &field, args.order).map_err(verify_error)?;
    let mut checks = Vec::new();
    if args.order >= 2 {
        // Independent route: literal enumeration of Frobenius-stable
        // unordered point pairs.
        let pairs = count_sym2_points(&form, &field).map_err(verify_error)?;
        checks.push(NamedCheck::new("pair-enumeration", sym_counts[2], pairs));
    }
    if args.order >= 3 {
        // Independent route: multisets of closed points of total degree 3.
        let n1 = u128::from(point_counts[0]);
        let n2 = u128::from(point_counts[1]);
        let n3 = u128::from(point_counts[2]);
        if (n2 - n1) % 2 != 0 || (n3 - n1) % 3 != 0 {
            return Err(CliError::Failed(
                "closed-point counts are inconsistent with Frobenius orbits".to_string(),
            ));
        }
        let c2 = (n2 - n1) / 2;
        let c3 = (n3 - n1) / 3;
        let multisets = n1 * (n1 + 1) * (n1 + 2) / 6 + n1 * c2 + c3;
        let multisets = u64::try_from(multisets)
            .map_err(|_| CliError::Input("degree-3 multiset count overflows".to_string()))?;
        checks.push(NamedCheck::new(
            "closed-point-multisets",
            sym_counts[3],
            multisets,
        ));
    }
    let overall = checks.iter().all(|c| c.verdict.passed());
    let report = ZetaReport {
        input: input_from(&id, &form),
        order: args.order,
        point_counts,
        sym_counts,
        checks,
        verdict: if overall { Verdict::Pass } else { Verdict::Fail },
        wall_ms: t0.elapsed().as_millis(),
    };
    if json {
        print_json(&report)?;
    } else {
        println!(
            "cubic: {} (d={}, p={})",
            report.input.cubic, report.input.dim, report.input.p
        );
        for m in 1..=args.order as usize {
            println!(
                "m = {m}: N = {}   Sym^{m} = {}",
                report.point_counts[m - 1],
                report.sym_counts[m]
            );
        }
        for c in &report.checks {
            println!("check {}: {} = {}   {}", c.name, c.lhs, c.rhs, c.verdict.word());
        }
        println!("verdict: {}", report.verdict.word());
        eprintln!("completed in {} ms", report.wall_ms);
    }
    ensure_passed(report.verdict, "a symmetric-power cross-check")
}
