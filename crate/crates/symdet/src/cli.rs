//! Batch command-line front end. Every verb validates its inputs, computes
//! through the library, self-verifies where a round-trip is available, and
//! prints either plain text or a single JSON document.
//!
//! Exit codes: 0 success, 1 validation/precondition failure, 2 syntax
//! error in a polynomial or in the argument grammar.

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::divdiff::{divdiff_at_nodes, divdiff_determinant_expr, divdiff_recursive};
use crate::error::Error;
use crate::exterior::{decompose_rank1, wedge_of};
use crate::fundamental::{
    bialternant_to_sigma, express_in_elementary, express_in_elementary_with_delta, norm_resultant,
    verify_theorem, HTuple, SigmaExpr,
};
use crate::poly::{parse, Poly, Rational, VarId};
use crate::sym::vandermonde;

#[derive(Parser)]
#[command(
    name = "symdet",
    about = "Exact determinantal algorithms for symmetric polynomials",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Express a symmetric polynomial in the elementary symmetric polynomials
    Express(ExpressArgs),
    /// Quotient of an alternant of r polynomials by the Vandermonde determinant
    Bialternant(BialternantArgs),
    /// Divided difference of a univariate polynomial over r nodes
    Divdiff(DivdiffArgs),
    /// Resultant of a monic polynomial with another via the norm form
    Resultant(ResultantArgs),
    /// Decompose a wedge of polynomials over the rank-1 generator
    WedgeDecompose(WedgeArgs),
    /// Check the bialternant identity for a given sigma-expression
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ExpressArgs {
    /// Number of x-variables (default: highest index used)
    #[arg(short)]
    r: Option<usize>,
    /// Degree bound (default: computed from the input)
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Symmetric polynomial in x1..xr ('-' reads stdin)
    poly: String,
}

#[derive(Args)]
struct BialternantArgs {
    /// Number of rows (default: number of polynomials)
    #[arg(short)]
    r: Option<usize>,
    /// Degree headroom above r-1 (default: computed from the inputs)
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    json: bool,
    /// The r univariate column polynomials
    polys: Vec<String>,
}

#[derive(Args)]
struct DivdiffArgs {
    /// Number of nodes
    #[arg(short)]
    r: usize,
    /// Coefficient window (default: max(degree, r-1))
    #[arg(short)]
    d: Option<usize>,
    /// Comma-separated rational nodes for numeric evaluation
    #[arg(long)]
    nodes: Option<String>,
    #[arg(long)]
    json: bool,
    /// Univariate polynomial ('-' reads stdin)
    poly: String,
}

#[derive(Args)]
struct ResultantArgs {
    /// Monic polynomial whose roots are taken
    #[arg(short)]
    f: String,
    /// Polynomial evaluated at the roots
    #[arg(short = 'F')]
    big_f: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WedgeArgs {
    /// Basis window (default: max degree of the inputs)
    #[arg(short)]
    d: Option<usize>,
    #[arg(long)]
    json: bool,
    /// The r univariate polynomials to wedge
    polys: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of rows (default: number of h-polynomials)
    #[arg(short)]
    r: Option<usize>,
    /// Degree headroom above r-1 (default: computed from the inputs)
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    json: bool,
    /// Sigma-expression followed by the r column polynomials
    polys: Vec<String>,
}

/// Run the CLI on the given arguments. `stdin` supplies the text used when
/// a positional polynomial is `-`. Returns (exit code, stdout, stderr).
pub fn run(argv: &[String], stdin: &str) -> (i32, String, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let rendered = e.render().to_string();
            if code == 0 {
                return (0, rendered, String::new());
            }
            return (2, String::new(), rendered);
        }
    };
    match dispatch(cli, stdin) {
        Ok(stdout) => (0, stdout, String::new()),
        Err(e) => {
            let code = match e {
                Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::ExponentOverflow { .. } => 2,
                _ => 1,
            };
            (code, String::new(), format!("error: {e}\n"))
        }
    }
}

fn read_poly(text: &str, stdin: &str) -> Result<Poly, Error> {
    let source = if text == "-" { stdin.trim() } else { text };
    parse(source)
}

fn infer_r(poly: &Poly) -> usize {
    poly.variables()
        .iter()
        .filter_map(|v| match v {
            VarId::X(i) => Some(*i as usize),
            _ => None,
        })
        .max()
        .unwrap_or(1)
}

fn check_count(expected: Option<usize>, got: usize) -> Result<usize, Error> {
    match expected {
        Some(r) if r != got => Err(Error::ArityMismatch { expected: r, got }),
        Some(r) => Ok(r),
        None => Ok(got),
    }
}

fn parse_nodes(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',')
        .map(|part| {
            let poly = parse(part.trim())?;
            poly.as_constant().ok_or_else(|| Error::Syntax {
                offset: 0,
                message: "node is not a rational constant".to_string(),
            })
        })
        .collect()
}

fn htuple_from(polys: &[Poly], r: usize, delta: Option<usize>) -> Result<HTuple, Error> {
    let max_deg = polys
        .iter()
        .map(|h| h.per_var_degree(VarId::Y).max(0) as usize)
        .max()
        .unwrap_or(0);
    let inferred = max_deg.saturating_sub(r.saturating_sub(1));
    HTuple::new(polys.to_vec(), r, delta.unwrap_or(inferred))
}

fn express_lines(expr: &SigmaExpr) -> String {
    format!("{}\n{}\n", expr.sigma_string(), expr.e_string())
}

fn dispatch(cli: Cli, stdin: &str) -> Result<String, Error> {
    match cli.verb {
        Verb::Express(a) => {
            let poly = read_poly(&a.poly, stdin)?;
            let r = a.r.unwrap_or_else(|| infer_r(&poly));
            let expr = match a.delta {
                Some(delta) => express_in_elementary_with_delta(&poly, r, delta)?,
                None => express_in_elementary(&poly, r)?,
            };
            let verified = expr.substitute_sigmas() == poly;
            if a.json {
                let doc = json!({
                    "verb": "express",
                    "r": expr.r,
                    "delta": expr.delta,
                    "sigma_expr": expr.sigma_string(),
                    "e_expr": expr.e_string(),
                    "verified": verified,
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(express_lines(&expr))
            }
        }
        Verb::Bialternant(a) => {
            let polys: Vec<Poly> = a
                .polys
                .iter()
                .map(|t| read_poly(t, stdin))
                .collect::<Result<_, _>>()?;
            let r = check_count(a.r, polys.len())?;
            let h = htuple_from(&polys, r, a.delta)?;
            let expr = bialternant_to_sigma(&h)?;
            let verified = verify_theorem(&h, &expr)?;
            if a.json {
                let doc = json!({
                    "verb": "bialternant",
                    "r": expr.r,
                    "delta": expr.delta,
                    "sigma_expr": expr.sigma_string(),
                    "e_expr": expr.e_string(),
                    "verified": verified,
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(express_lines(&expr))
            }
        }
        Verb::Divdiff(a) => {
            let poly = read_poly(&a.poly, stdin)?;
            let r = a.r;
            let deg = poly.per_var_degree(VarId::Y).max(0) as usize;
            let d = a.d.unwrap_or(deg.max(r.saturating_sub(1)));
            if let Some(nodes_text) = &a.nodes {
                let nodes = parse_nodes(nodes_text)?;
                if nodes.len() != r {
                    return Err(Error::ArityMismatch {
                        expected: r,
                        got: nodes.len(),
                    });
                }
                let value = divdiff_at_nodes(&poly, &nodes, d)?;
                if a.json {
                    let doc = json!({
                        "verb": "divdiff",
                        "r": r,
                        "d": d,
                        "nodes": nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
                        "value": value.to_string(),
                    });
                    return Ok(format!("{doc}\n"));
                }
                return Ok(format!("{value}\n"));
            }
            let expr = divdiff_determinant_expr(&poly, r, d)?;
            let value = expr.substitute_sigmas();
            debug_assert_eq!(value, divdiff_recursive(&poly, r)?.value);
            if a.json {
                let doc = json!({
                    "verb": "divdiff",
                    "r": r,
                    "d": d,
                    "sigma_expr": expr.sigma_string(),
                    "value": value.to_string(),
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(format!("{value}\n"))
            }
        }
        Verb::Resultant(a) => {
            let f = read_poly(&a.f, stdin)?;
            let big_f = read_poly(&a.big_f, stdin)?;
            let value = norm_resultant(&f, &big_f)?;
            if a.json {
                let doc = json!({
                    "verb": "resultant",
                    "r": f.per_var_degree(VarId::Y).max(0),
                    "value": value.to_string(),
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(format!("{value}\n"))
            }
        }
        Verb::WedgeDecompose(a) => {
            let polys: Vec<Poly> = a
                .polys
                .iter()
                .map(|t| read_poly(t, stdin))
                .collect::<Result<_, _>>()?;
            let r = polys.len();
            if r == 0 {
                return Err(Error::ZeroArity);
            }
            let max_deg = polys
                .iter()
                .map(|h| h.per_var_degree(VarId::Y).max(0) as usize)
                .max()
                .unwrap_or(0);
            let d = a.d.unwrap_or(max_deg.max(r - 1));
            let w = wedge_of(&polys, r, d)?;
            let (s, expr) = decompose_rank1(&w)?;
            let verified = s.mul(&vandermonde(r)) == w.atr_embed()
                && expr.substitute_sigmas() == s;
            if a.json {
                let doc = json!({
                    "verb": "wedge-decompose",
                    "r": r,
                    "d": d,
                    "delta": expr.delta,
                    "symmetric": s.to_string(),
                    "sigma_expr": expr.sigma_string(),
                    "e_expr": expr.e_string(),
                    "verified": verified,
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(format!("{s}\n{}", express_lines(&expr)))
            }
        }
        Verb::Verify(a) => {
            if a.polys.len() < 2 {
                return Err(Error::ArityMismatch {
                    expected: 2,
                    got: a.polys.len(),
                });
            }
            let sigma = read_poly(&a.polys[0], stdin)?;
            let polys: Vec<Poly> = a.polys[1..]
                .iter()
                .map(|t| read_poly(t, stdin))
                .collect::<Result<_, _>>()?;
            let r = check_count(a.r, polys.len())?;
            let h = htuple_from(&polys, r, a.delta)?;
            let expr = SigmaExpr {
                poly: sigma,
                r,
                delta: h.delta,
            };
            let holds = verify_theorem(&h, &expr)?;
            if a.json {
                let doc = json!({
                    "verb": "verify",
                    "holds": holds,
                });
                Ok(format!("{doc}\n"))
            } else {
                Ok(format!("{holds}\n"))
            }
        }
    }
}
