//! Divided-difference operators: recursive definition, determinantal
//! closed forms, the alternant quotient form, and evaluation at concrete
//! (possibly repeated) nodes.


use crate::error::{Error, Result};
use crate::fundamental::SigmaExpr;
use crate::matrix::{build_matrix, ColumnSpec};
use crate::poly::{Poly, Rational, VarId};
use crate::sym::{alternant, is_symmetric, vandermonde};

/// The divided difference of a univariate polynomial over r symbolic
/// nodes x1..xr. Always a symmetric polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividedDifference {
    pub r: usize,
    pub value: Poly,
}

impl DividedDifference {
    fn new(r: usize, value: Poly) -> Self {
        debug_assert!(is_symmetric(&value, r).unwrap_or(false));
        DividedDifference { r, value }
    }
}

fn check_univariate(f: &Poly) -> Result<()> {
    for v in f.variables() {
        if v != VarId::Y {
            return Err(Error::VariableOutOfRange(v, 0));
        }
    }
    Ok(())
}

/// The recursive form: the two-point operator divides out one node at a
/// time, then the single-node operator substitutes x1.
pub fn divdiff_recursive(f: &Poly, r: usize) -> Result<DividedDifference> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    check_univariate(f)?;
    let mut cur = f.clone();
    for k in (2..=r as u32).rev() {
        let at_node = cur.substitute_one(VarId::Y, &Poly::x(k));
        cur = cur
            .sub(&at_node)
            .exact_divide(&Poly::y().sub(&Poly::x(k)))
            .expect("two-point divided difference divides exactly");
    }
    Ok(DividedDifference::new(
        r,
        cur.substitute_one(VarId::Y, &Poly::x(1)),
    ))
}

/// The determinantal closed form as an expression in the s-variables: the
/// window-d determinant with columns y^(d-r)*sigma(y), ..., sigma(y),
/// then F(y), then y^(r-2), ..., y^0.
pub fn divdiff_determinant_expr(f: &Poly, r: usize, d: usize) -> Result<SigmaExpr> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    check_univariate(f)?;
    if d + 1 < r {
        return Err(Error::BoundViolation(format!(
            "window bound {d} is below r - 1 = {}",
            r - 1
        )));
    }
    let deg = f.per_var_degree(VarId::Y);
    if deg > d as i64 {
        return Err(Error::DegreeExceeded {
            found: deg,
            bound: d as i64,
        });
    }
    // the sigma block y^(d-r)*sigma(y), ..., sigma(y) is empty when d < r
    let shifts = if d >= r { d - r + 1 } else { 0 };
    let mut specs: Vec<ColumnSpec> = (0..shifts).rev().map(ColumnSpec::SigmaShift).collect();
    specs.push(ColumnSpec::HCoeffs(f.clone()));
    specs.extend((0..r - 1).rev().map(ColumnSpec::MonomialUnit));
    let det = build_matrix(d, r, &specs)?.det()?;
    Ok(SigmaExpr {
        poly: det.substitute_one(VarId::S(0), &Poly::one()),
        r,
        delta: d + 1 - r,
    })
}

/// The determinantal closed form with the elementary symmetric
/// polynomials substituted.
pub fn divdiff_determinant(f: &Poly, r: usize, d: usize) -> Result<DividedDifference> {
    let expr = divdiff_determinant_expr(f, r, d)?;
    Ok(DividedDifference::new(r, expr.substitute_sigmas()))
}

/// The alternant quotient form: det|F(x_i), x_i^(r-2), ..., x_i^0| divided
/// by the Vandermonde determinant.
pub fn divdiff_alternant(f: &Poly, r: usize) -> Result<DividedDifference> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    check_univariate(f)?;
    let mut cols = vec![f.clone()];
    cols.extend((0..r - 1).rev().map(|e| Poly::y_pow(e as u32)));
    let det = alternant(&cols, r)?;
    let value = det
        .exact_divide(&vandermonde(r))
        .expect("alternants are divisible by the Vandermonde");
    Ok(DividedDifference::new(r, value))
}

/// Evaluate the divided difference at concrete nodes through the numeric
/// determinant form with f(y) = prod (y - lambda_i). Repeated nodes are
/// allowed: the determinant is polynomial in the nodes and yields the
/// confluent (derivative) values.
pub fn divdiff_at_nodes(f: &Poly, nodes: &[Rational], d: usize) -> Result<Rational> {
    let r = nodes.len();
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    check_univariate(f)?;
    if d + 1 < r {
        return Err(Error::BoundViolation(format!(
            "window bound {d} is below r - 1 = {}",
            r - 1
        )));
    }
    let deg = f.per_var_degree(VarId::Y);
    if deg > d as i64 {
        return Err(Error::DegreeExceeded {
            found: deg,
            bound: d as i64,
        });
    }
    let mut node_poly = Poly::one();
    for lambda in nodes {
        node_poly = node_poly.mul(&Poly::y().sub(&Poly::constant(lambda.clone())));
    }
    let shifts = if d >= r { d - r + 1 } else { 0 };
    let mut specs: Vec<ColumnSpec> = (0..shifts)
        .rev()
        .map(|a| ColumnSpec::HCoeffs(Poly::y_pow(a as u32).mul(&node_poly)))
        .collect();
    specs.push(ColumnSpec::HCoeffs(f.clone()));
    specs.extend((0..r - 1).rev().map(ColumnSpec::MonomialUnit));
    let det = build_matrix(d, r, &specs)?.det()?;
    Ok(det.as_constant().expect("numeric determinant"))
}
