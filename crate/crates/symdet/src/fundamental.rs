//! Expressing symmetric polynomials in the (signed) elementary symmetric
//! polynomials through determinantal identities, and the resultant
//! specialization.

use std::collections::BTreeMap;


use crate::error::{Error, Result};
use crate::matrix::{build_matrix, ColumnSpec};
use crate::poly::{Poly, Rational, VarId};
use crate::sym::{alternant, alternant_expand, is_symmetric, sigma_p, vandermonde};

/// A polynomial in the formal variables s1..sr (s0 eliminated) expressing
/// a symmetric polynomial of per-variable degree at most `delta` through
/// the signed elementary symmetric polynomials s_p = (-1)^p e_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaExpr {
    pub poly: Poly,
    pub r: usize,
    pub delta: usize,
}

impl SigmaExpr {
    /// Substitute s_p by the signed elementary symmetric polynomial of
    /// x1..xr, recovering the symmetric polynomial this expression encodes.
    pub fn substitute_sigmas(&self) -> Poly {
        let mut bindings = BTreeMap::new();
        for p in 0..=self.r {
            bindings.insert(VarId::S(p as u32), sigma_p(self.r, p));
        }
        self.poly.substitute(&bindings)
    }

    /// Substitute numeric values for s1..sr.
    pub fn substitute_values(&self, values: &[Rational]) -> Result<Poly> {
        if values.len() != self.r {
            return Err(Error::ArityMismatch {
                expected: self.r,
                got: values.len(),
            });
        }
        let mut bindings = BTreeMap::new();
        bindings.insert(VarId::S(0), Poly::one());
        for (p, v) in values.iter().enumerate() {
            bindings.insert(VarId::S(p as u32 + 1), Poly::constant(v.clone()));
        }
        Ok(self.poly.substitute(&bindings))
    }

    /// Flip to the conventional elementary symmetric variables via
    /// e_p = (-1)^p s_p. The resulting polynomial reads its s-variables as
    /// e-variables; applying the conversion twice is the identity.
    pub fn to_conventional_e(&self) -> SigmaExpr {
        let mut bindings = BTreeMap::new();
        for p in 0..=self.r {
            let v = Poly::s(p as u32);
            bindings.insert(
                VarId::S(p as u32),
                if p % 2 == 0 { v } else { v.neg() },
            );
        }
        SigmaExpr {
            poly: self.poly.substitute(&bindings),
            r: self.r,
            delta: self.delta,
        }
    }

    /// Text form over s-variables.
    pub fn sigma_string(&self) -> String {
        self.poly.format_with_s_name("s")
    }

    /// Text form over conventional e-variables.
    pub fn e_string(&self) -> String {
        self.to_conventional_e().poly.format_with_s_name("e")
    }
}

/// A tuple of r univariate polynomials (in y) of degree at most d + delta,
/// the columns of the bialternant determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTuple {
    pub polys: Vec<Poly>,
    pub r: usize,
    pub delta: usize,
}

impl HTuple {
    pub fn new(polys: Vec<Poly>, r: usize, delta: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroArity);
        }
        if polys.len() != r {
            return Err(Error::ArityMismatch {
                expected: r,
                got: polys.len(),
            });
        }
        let bound = (r - 1 + delta) as i64;
        for h in &polys {
            for v in h.variables() {
                if v != VarId::Y {
                    return Err(Error::VariableOutOfRange(v, 0));
                }
            }
            let deg = h.per_var_degree(VarId::Y);
            if deg > bound {
                return Err(Error::DegreeExceeded { found: deg, bound });
            }
        }
        Ok(HTuple { polys, r, delta })
    }

    /// Maximal degree any member may have: d + delta with d = r - 1.
    pub fn degree_bound(&self) -> usize {
        self.r - 1 + self.delta
    }
}

fn eliminate_s0(poly: &Poly) -> Poly {
    poly.substitute_one(VarId::S(0), &Poly::one())
}

/// The symmetric quotient S with det|h_j(x_i)| = S * vandermonde(r),
/// expressed directly in the s-variables: the determinant of the window
/// matrix whose columns are y^(delta-1)*sigma(y), ..., sigma(y) followed
/// by the members of h.
pub fn bialternant_to_sigma(h: &HTuple) -> Result<SigmaExpr> {
    let r = h.r;
    let delta = h.delta;
    let window = r - 1 + delta;
    let mut specs: Vec<ColumnSpec> = (0..delta).rev().map(ColumnSpec::SigmaShift).collect();
    specs.extend(h.polys.iter().cloned().map(ColumnSpec::HCoeffs));
    let det = build_matrix(window, r, &specs)?.det()?;
    Ok(SigmaExpr {
        poly: eliminate_s0(&det),
        r,
        delta,
    })
}

/// Express a symmetric polynomial in the signed elementary symmetric
/// polynomials, with the degree bound taken from the input itself.
pub fn express_in_elementary(s: &Poly, r: usize) -> Result<SigmaExpr> {
    let delta = s.max_x_degree(r).max(0) as usize;
    express_in_elementary_with_delta(s, r, delta)
}

/// Same, with a caller-supplied bound. The bound must dominate the actual
/// per-variable degree; larger bounds give an equivalent (possibly
/// different-looking) expression.
pub fn express_in_elementary_with_delta(s: &Poly, r: usize, delta: usize) -> Result<SigmaExpr> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    let found = s.max_x_degree(r);
    if found > delta as i64 {
        return Err(Error::DegreeExceeded {
            found,
            bound: delta as i64,
        });
    }
    if !is_symmetric(s, r)? {
        return Err(Error::NotSymmetric { r });
    }
    let d = r - 1;
    let window = d + delta;
    let a = s.mul(&vandermonde(r));
    let coords = alternant_expand(&a, r, window)?;
    let mut out = Poly::zero();
    for (mu, c) in coords {
        let mut specs: Vec<ColumnSpec> = (0..delta).rev().map(ColumnSpec::SigmaShift).collect();
        specs.extend(mu.0.iter().map(|&m| ColumnSpec::MonomialUnit(m as usize)));
        let det = build_matrix(window, r, &specs)?.det()?;
        out = out.add(&det.scale(&c));
    }
    Ok(SigmaExpr {
        poly: eliminate_s0(&out),
        r,
        delta,
    })
}

/// Check the bialternant identity det|h_j(x_i)| = S(sigma) * vandermonde
/// exactly after substituting the elementary symmetric polynomials.
pub fn verify_theorem(h: &HTuple, s: &SigmaExpr) -> Result<bool> {
    if h.r != s.r {
        return Err(Error::ArityMismatch {
            expected: h.r,
            got: s.r,
        });
    }
    let lhs = alternant(&h.polys, h.r)?;
    let rhs = s.substitute_sigmas().mul(&vandermonde(h.r));
    Ok(lhs == rhs)
}

/// The norm form of the resultant: for monic f of degree r with roots
/// lambda_i and any F, equals the product of F(lambda_i) — the resultant
/// of f and F. Computed by expressing prod F(x_i) in the s-variables and
/// substituting the coefficients of f for them.
pub fn norm_resultant(f: &Poly, big_f: &Poly) -> Result<Rational> {
    for q in [f, big_f] {
        for v in q.variables() {
            if v != VarId::Y {
                return Err(Error::VariableOutOfRange(v, 0));
            }
        }
    }
    let deg = f.per_var_degree(VarId::Y);
    if deg < 1 {
        return Err(Error::NotMonic {
            degree: deg,
            var: "y".to_string(),
        });
    }
    let r = deg as usize;
    if !f.coeff_of_y(r as u32).is_one() {
        return Err(Error::NotMonic {
            degree: deg,
            var: "y".to_string(),
        });
    }
    let mut product = Poly::one();
    for i in 1..=r as u32 {
        product = product.mul(&big_f.substitute_one(VarId::Y, &Poly::x(i)));
    }
    let expr = express_in_elementary(&product, r)?;
    // s_p is the coefficient of y^{r-p} in the monic f
    let values: Vec<Rational> = (1..=r)
        .map(|p| {
            f.coeff_of_y((r - p) as u32)
                .as_constant()
                .expect("univariate coefficients are constants")
        })
        .collect();
    let result = expr.substitute_values(&values)?;
    Ok(result.as_constant().expect("full substitution is constant"))
}
