//! The r-th exterior power of the univariate polynomial ring with a
//! degree window, realized as a free coordinate module over the
//! monomial-wedge basis, its action by symmetric polynomials, the rank-one
//! decomposition, and the determinantal wedge expansion.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fundamental::{express_in_elementary_with_delta, SigmaExpr};
use crate::matrix::{build_matrix, wedge_row_expand, ColumnSpec};
use crate::poly::{Poly, Rational, VarId};
use crate::sym::{alternant, alternant_expand, atr, is_symmetric, vandermonde, DecreasingExponents};

/// An element of the r-th exterior power with all basis exponents in the
/// window [0, d], stored as coordinates over the strictly decreasing
/// monomial wedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeElement {
    pub r: usize,
    pub d: usize,
    coords: BTreeMap<DecreasingExponents, Rational>,
}

impl WedgeElement {
    pub fn new(
        r: usize,
        d: usize,
        coords: BTreeMap<DecreasingExponents, Rational>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroArity);
        }
        for (mu, c) in &coords {
            if mu.len() != r {
                return Err(Error::ArityMismatch {
                    expected: r,
                    got: mu.len(),
                });
            }
            if let Some(&top) = mu.0.first() {
                if top as usize > d {
                    return Err(Error::DegreeExceeded {
                        found: top as i64,
                        bound: d as i64,
                    });
                }
            }
            if c.is_zero() {
                return Err(Error::DimensionMismatch(
                    "zero coordinate stored".to_string(),
                ));
            }
        }
        Ok(WedgeElement { r, d, coords })
    }

    pub fn zero(r: usize, d: usize) -> Self {
        WedgeElement {
            r,
            d,
            coords: BTreeMap::new(),
        }
    }

    /// The generator wedge x^{r-1} ^ ... ^ x^0.
    pub fn basis(r: usize, d: usize) -> Result<Self> {
        if d + 1 < r {
            return Err(Error::DegreeExceeded {
                found: (r - 1) as i64,
                bound: d as i64,
            });
        }
        let mu = DecreasingExponents((0..r as u32).rev().collect());
        let mut coords = BTreeMap::new();
        coords.insert(mu, Rational::from_integer(1.into()));
        WedgeElement::new(r, d, coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &BTreeMap<DecreasingExponents, Rational> {
        &self.coords
    }

    /// Same coordinates inside a wider window.
    pub fn widen(&self, d: usize) -> Result<Self> {
        WedgeElement::new(self.r, d, self.coords.clone())
    }

    /// The antisymmetric polynomial this element maps to under the
    /// alternant embedding.
    pub fn atr_embed(&self) -> Poly {
        let mut out = Poly::zero();
        for (mu, c) in &self.coords {
            out = out.add(&atr(mu).scale(c));
        }
        out
    }
}

/// The wedge of r univariate polynomials (given in y), each of degree at
/// most d, in basis coordinates.
pub fn wedge_of(h: &[Poly], r: usize, d: usize) -> Result<WedgeElement> {
    for hj in h {
        let deg = hj.per_var_degree(VarId::Y);
        if deg > d as i64 {
            return Err(Error::DegreeExceeded {
                found: deg,
                bound: d as i64,
            });
        }
    }
    let a = alternant(h, r)?;
    from_antisym(&a, r, d)
}

/// Inverse of the alternant embedding: recover coordinates from an
/// antisymmetric polynomial with per-variable degree at most d.
pub fn from_antisym(a: &Poly, r: usize, d: usize) -> Result<WedgeElement> {
    let coords = alternant_expand(a, r, d)?;
    WedgeElement::new(r, d, coords)
}

/// Multiply a wedge element by a symmetric polynomial: the module action
/// of symmetric tensors. Widens the window by the per-variable degree of
/// the multiplier.
pub fn ts_action(s: &Poly, w: &WedgeElement) -> Result<WedgeElement> {
    if !is_symmetric(s, w.r)? {
        return Err(Error::NotSymmetric { r: w.r });
    }
    let delta = s.max_x_degree(w.r).max(0) as usize;
    let product = s.mul(&w.atr_embed());
    from_antisym(&product, w.r, w.d + delta)
}

/// Split a wedge element over the rank-one generator: the unique
/// symmetric S with S * (x^{r-1} ^ ... ^ x^0) = w, together with its
/// expression in the s-variables of degree at most d - (r-1).
pub fn decompose_rank1(w: &WedgeElement) -> Result<(Poly, SigmaExpr)> {
    let r = w.r;
    let embedded = w.atr_embed();
    let s = embedded
        .exact_divide(&vandermonde(r))
        .expect("alternants are divisible by the Vandermonde");
    let delta = (w.d + 1).saturating_sub(r);
    let expr = express_in_elementary_with_delta(&s, r, delta)?;
    Ok((s, expr))
}

/// One term of the determinantal wedge expansion: a coefficient in the
/// s-variables paired with a basis wedge of the target window.
pub type SigmaWedgeTerm = (SigmaExpr, DecreasingExponents);

/// Expand the wedge of r polynomials of degree at most d + delta'+delta''
/// over the basis wedges of window d, with coefficients of s-degree at
/// most delta = delta' + delta''. The expansion is the signed wedge-row
/// determinant of the four-block window matrix: delta'' high-shift sigma
/// columns, d+1 shifted monomial columns carrying the wedge row, delta'
/// low sigma columns, and the r coefficient columns of h.
pub fn wedge_expand(
    h: &[Poly],
    r: usize,
    d: usize,
    delta_prime: usize,
    delta_second: usize,
) -> Result<Vec<SigmaWedgeTerm>> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    if d + 1 < r {
        return Err(Error::BoundViolation(format!(
            "window bound {d} is below r - 1 = {}",
            r - 1
        )));
    }
    if h.len() != r {
        return Err(Error::ArityMismatch {
            expected: r,
            got: h.len(),
        });
    }
    let delta = delta_prime + delta_second;
    let window = d + delta;
    for hj in h {
        for v in hj.variables() {
            if v != VarId::Y {
                return Err(Error::VariableOutOfRange(v, 0));
            }
        }
        let deg = hj.per_var_degree(VarId::Y);
        if deg > window as i64 {
            return Err(Error::DegreeExceeded {
                found: deg,
                bound: window as i64,
            });
        }
    }

    let mut specs: Vec<ColumnSpec> = Vec::new();
    let mut occupied = Vec::new();
    // high-shift sigma block: y^(d-r+1+delta') * sigma(y), ..., shifted up
    // by delta''-1 more
    for delta_idx in (0..delta_second).rev() {
        specs.push(ColumnSpec::SigmaShift(d + 1 - r + delta_prime + delta_idx));
        occupied.push(false);
    }
    // monomial block y^(mu+delta') for mu = d..0; the wedge row holds
    // x^mu under these columns
    for mu in (0..=d).rev() {
        specs.push(ColumnSpec::MonomialUnit(mu + delta_prime));
        occupied.push(true);
    }
    // low sigma block: y^(delta'-1) * sigma(y), ..., sigma(y)
    for delta_idx in (0..delta_prime).rev() {
        specs.push(ColumnSpec::SigmaShift(delta_idx));
        occupied.push(false);
    }
    for hj in h {
        specs.push(ColumnSpec::HCoeffs(hj.clone()));
        occupied.push(false);
    }

    let ordinary = build_matrix(window, r, &specs)?;
    let terms = wedge_row_expand(&ordinary, &occupied)?;
    let negate = (r * delta_prime + r) % 2 == 1;
    let monomial_offset = delta_second;
    let mut out = Vec::new();
    for (coeff, selected) in terms {
        let exps: Vec<u32> = selected
            .iter()
            .map(|&j| (d - (j - monomial_offset)) as u32)
            .collect();
        let mu = DecreasingExponents::new(exps)?;
        let signed = if negate { coeff.neg() } else { coeff };
        let poly = signed.substitute_one(VarId::S(0), &Poly::one());
        if poly.is_zero() {
            continue;
        }
        out.push((
            SigmaExpr {
                poly,
                r,
                delta,
            },
            mu,
        ));
    }
    Ok(out)
}
