//! Permutation action on x-variables, elementary symmetric machinery,
//! alternants, and the antisymmetric-expansion algorithm.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, Rational, VarId};

/// A permutation of {1, ..., r}, stored as the image list: `images[i-1]`
/// is the image of i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        if r == 0 {
            return Err(Error::ZeroArity);
        }
        let mut seen = vec![false; r];
        for &im in &images {
            if im == 0 || im > r {
                return Err(Error::IndexOutOfRange { index: im, max: r });
            }
            if seen[im - 1] {
                return Err(Error::ArityMismatch {
                    expected: r,
                    got: images.iter().filter(|&&x| x == im).count(),
                });
            }
            seen[im - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (1..=r).collect(),
        }
    }

    /// The transposition swapping i and j inside {1, ..., r}.
    pub fn transposition(r: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (1..=r).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn arity(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// Composition: `(self.compose(other))(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let images = other.images.iter().map(|&i| self.apply(i)).collect();
        Permutation { images }
    }

    /// Sign via inversion count.
    pub fn sign(&self) -> i32 {
        let mut inv = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Act on a polynomial by renaming x_i to x_{tau(i)}. This is a left
/// action: `act(a, act(b, p)) == act(a.compose(b), p)`. Variables outside
/// x1..xr are rejected; y and s-variables pass through untouched.
pub fn act(tau: &Permutation, poly: &Poly) -> Result<Poly> {
    let r = tau.arity();
    let mut bindings = BTreeMap::new();
    for v in poly.variables() {
        if let VarId::X(i) = v {
            let i = i as usize;
            if i > r {
                return Err(Error::VariableOutOfRange(v, r));
            }
            bindings.insert(v, Poly::x(tau.apply(i) as u32));
        }
    }
    Ok(poly.substitute(&bindings))
}

/// True when the polynomial is invariant under all adjacent transpositions
/// of x1..xr (hence under the full symmetric group).
pub fn is_symmetric(poly: &Poly, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    for i in 1..r {
        let t = Permutation::transposition(r, i, i + 1);
        if act(&t, poly)? != *poly {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True when every adjacent transposition negates the polynomial.
pub fn is_antisymmetric(poly: &Poly, r: usize) -> Result<bool> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    for i in 1..r {
        let t = Permutation::transposition(r, i, i + 1);
        if act(&t, poly)? != poly.neg() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The monic polynomial (y - x1)...(y - xr), expanded.
pub fn sigma_poly(r: usize) -> Poly {
    let mut out = Poly::one();
    for i in 1..=r as u32 {
        out = out.mul(&Poly::y().sub(&Poly::x(i)));
    }
    out
}

/// The formal image s0*y^r + s1*y^(r-1) + ... + sr, where s_p stands for
/// the signed elementary symmetric polynomial of index p and s0 for 1.
pub fn sigma_formal(r: usize) -> Poly {
    let mut out = Poly::zero();
    for p in 0..=r {
        let term = Poly::s(p as u32).mul(&Poly::y_pow((r - p) as u32));
        out = out.add(&term);
    }
    out
}

/// Signed elementary symmetric polynomial: the coefficient of y^(r-p) in
/// (y - x1)...(y - xr). Equals (-1)^p times the elementary symmetric e_p.
pub fn sigma_p(r: usize, p: usize) -> Poly {
    sigma_poly(r).coeff_of_y((r - p) as u32)
}

/// Elementary symmetric polynomial e_p in x1..xr.
pub fn elementary_symmetric(r: usize, p: usize) -> Poly {
    let signed = sigma_p(r, p);
    if p % 2 == 0 {
        signed
    } else {
        signed.neg()
    }
}

/// A strictly decreasing exponent vector indexing an alternant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DecreasingExponents(pub Vec<u32>);

impl DecreasingExponents {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if !exps.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::BoundViolation(format!(
                "exponent vector {exps:?} is not strictly decreasing"
            )));
        }
        Ok(DecreasingExponents(exps))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The alternant a_mu = det of the r x r matrix with (i, j) entry
/// x_i^{mu_j}, for strictly decreasing mu of length r.
pub fn atr(mu: &DecreasingExponents) -> Poly {
    let r = mu.len();
    let mut out = Poly::zero();
    for perm in (1..=r as u32).permutations(r) {
        let mut inv = 0usize;
        for i in 0..r {
            for j in i + 1..r {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut m = Monomial::unit();
        for (j, &i) in perm.iter().enumerate() {
            m = m.mul(&Monomial::var(VarId::X(i), mu.0[j]));
        }
        let c = if inv % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        out = out.add(&Poly::monomial(m, c));
    }
    out
}

/// The alternant det of the r x r matrix with (i, j) entry h_j(x_i), for
/// arbitrary univariate polynomials h_j given in y.
pub fn alternant(h: &[Poly], r: usize) -> Result<Poly> {
    if h.len() != r {
        return Err(Error::ArityMismatch {
            expected: r,
            got: h.len(),
        });
    }
    let rows = (1..=r as u32)
        .map(|i| {
            h.iter()
                .map(|hj| hj.substitute_one(VarId::Y, &Poly::x(i)))
                .collect()
        })
        .collect();
    crate::matrix::PolyMatrix::from_rows(rows)?.det()
}

/// The Vandermonde alternant a_{(r-1, ..., 1, 0)} = prod_{i<j} (x_i - x_j).
pub fn vandermonde(r: usize) -> Poly {
    let mut out = Poly::one();
    for i in 1..=r as u32 {
        for j in i + 1..=r as u32 {
            out = out.mul(&Poly::x(i).sub(&Poly::x(j)));
        }
    }
    out
}

/// Expand an antisymmetric polynomial in x1..xr over the alternant basis:
/// A = sum_mu c_mu * a_mu, with every exponent at most `bound`. Works by
/// repeatedly locating a term whose x-exponent vector is strictly
/// decreasing and subtracting its alternant; a nonzero remainder with no
/// such term means A was not antisymmetric.
pub fn alternant_expand(
    a: &Poly,
    r: usize,
    bound: usize,
) -> Result<BTreeMap<DecreasingExponents, Rational>> {
    if r == 0 {
        return Err(Error::ZeroArity);
    }
    for v in a.variables() {
        match v {
            VarId::X(i) if (i as usize) <= r => {}
            _ => return Err(Error::VariableOutOfRange(v, r)),
        }
    }
    let found = a.max_x_degree(r);
    if found > bound as i64 {
        return Err(Error::DegreeExceeded {
            found,
            bound: bound as i64,
        });
    }
    let mut rem = a.clone();
    let mut coords = BTreeMap::new();
    loop {
        if rem.is_zero() {
            return Ok(coords);
        }
        let mut found = None;
        for (m, c) in rem.terms().rev() {
            let exps: Vec<u32> = (1..=r as u32).map(|i| m.exponent(VarId::X(i))).collect();
            if exps.windows(2).all(|w| w[0] > w[1]) {
                found = Some((DecreasingExponents(exps), c.clone()));
                break;
            }
        }
        let (mu, c) = found.ok_or(Error::NotAntisymmetric { r })?;
        rem = rem.sub(&atr(&mu).scale(&c));
        if coords.insert(mu, c).is_some() {
            // subtracting a_mu removes the decreasing term for mu, so a
            // repeat would mean the reduction is not making progress
            return Err(Error::NotAntisymmetric { r });
        }
    }
}

/// A 0/1 column-selection vector with a fixed number of ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiVector(pub Vec<bool>);

impl ChiVector {
    pub fn new(bits: Vec<bool>, ones: usize) -> Result<Self> {
        let found = bits.iter().filter(|&&b| b).count();
        if found != ones {
            return Err(Error::MalformedChi {
                expected: ones,
                found,
            });
        }
        Ok(ChiVector(bits))
    }

    pub fn selected(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn unselected(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| (!b).then_some(i))
            .collect()
    }

    /// Sign of the permutation that lists the unselected positions in
    /// ascending order followed by the selected positions in ascending
    /// order.
    pub fn sign(&self) -> i32 {
        let order: Vec<usize> = self
            .unselected()
            .into_iter()
            .chain(self.selected())
            .collect();
        let mut inv = 0usize;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if order[i] > order[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All chi vectors of length p with exactly r ones, in lexicographic order
/// of selected-position sets.
pub fn all_chi(p: usize, r: usize) -> Vec<ChiVector> {
    (0..p)
        .combinations(r)
        .map(|sel| {
            let mut bits = vec![false; p];
            for i in sel {
                bits[i] = true;
            }
            ChiVector(bits)
        })
        .collect()
}
