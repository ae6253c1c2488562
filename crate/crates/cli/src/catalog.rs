//! The named-cubic catalog and resolution of the three input sources.

use std::fs;

use cubist_core::geometry::{CubicError, CubicForm};

use crate::{CliError, GeometricArgs};

/// Catalog entries: name and a one-line description (used in errors).
pub const CATALOG: &[(&str, &str)] = &[
    ("fermat", "sum of cubes; smooth away from characteristic 3"),
    ("node", "one ordinary double point at a rational point"),
    ("cayley", "the four-node cubic surface (dimension 2 only)"),
];

/// The four-node surface: the sum of the four products of three
/// distinct coordinates.
fn cayley(p: u64) -> Result<CubicForm, CubicError> {
    let terms = vec![
        (vec![1, 1, 1, 0], 1),
        (vec![1, 1, 0, 1], 1),
        (vec![1, 0, 1, 1], 1),
        (vec![0, 1, 1, 1], 1),
    ];
    CubicForm::new(2, p, terms)
}

fn named(name: &str, dim: u32, p: u64) -> Result<CubicForm, CliError> {
    let build = match name {
        "fermat" => CubicForm::fermat(dim, p),
        "node" => CubicForm::node(dim, p),
        "cayley" => {
            if dim != 2 {
                return Err(CliError::Input(format!(
                    "the cayley surface has dimension 2, not {dim}"
                )));
            }
            cayley(p)
        }
        other => {
            let names: Vec<&str> = CATALOG.iter().map(|(n, _)| *n).collect();
            return Err(CliError::Input(format!(
                "unknown cubic '{other}'; the catalog has: {}",
                names.join(", ")
            )));
        }
    };
    build.map_err(|e| CliError::Input(e.to_string()))
}

fn require_dim_p(args: &GeometricArgs) -> Result<(u32, u64), CliError> {
    match (args.dim, args.p) {
        (Some(d), Some(p)) => Ok((d, p)),
        _ => Err(CliError::Input(
            "--dim and --p are required for this cubic source".to_string(),
        )),
    }
}

/// Resolves the cubic named by the arguments, together with a stable
/// identifier for reports.
pub fn resolve(args: &GeometricArgs) -> Result<(CubicForm, String), CliError> {
    if args.seed.is_some() && !args.random {
        return Err(CliError::Input(
            "--seed only makes sense together with --random".to_string(),
        ));
    }
    if let Some(name) = &args.named {
        let (dim, p) = require_dim_p(args)?;
        return Ok((named(name, dim, p)?, name.clone()));
    }
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        let form = CubicForm::parse(&text).map_err(|e| CliError::Input(e.to_string()))?;
        if let Some(dim) = args.dim {
            if dim != form.dim() {
                return Err(CliError::Input(format!(
                    "--dim {dim} contradicts the file header (d={})",
                    form.dim()
                )));
            }
        }
        if let Some(p) = args.p {
            if p != form.p() {
                return Err(CliError::Input(format!(
                    "--p {p} contradicts the file header (p={})",
                    form.p()
                )));
            }
        }
        return Ok((form, format!("file:{}", path.display())));
    }
    // clap's source group guarantees --random here.
    let (dim, p) = require_dim_p(args)?;
    let seed = args.seed.unwrap_or(0);
    let form = CubicForm::random(dim, p, seed).map_err(|e| CliError::Input(e.to_string()))?;
    Ok((form, format!("random:{seed}")))
}
