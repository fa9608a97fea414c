//! Exact sparse multivariate polynomial arithmetic over arbitrary-precision
//! rationals. Variables are `x1, x2, ...`, the distinguished univariate `y`,
//! and the formal elementary-symmetric images `s0, s1, ...`.

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use parse::parse;

/// Exact rational coefficient.
pub type Rational = BigRational;

/// A variable of the ambient ring. The derived ordering is the canonical
/// one used everywhere: x1 < x2 < ... < y < s0 < s1 < ...
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    /// x_i, 1-based.
    X(u32),
    /// The univariate indeterminate y.
    Y,
    /// The formal sigma image s_p.
    S(u32),
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarId::X(i) => write!(f, "x{i}"),
            VarId::Y => write!(f, "y"),
            VarId::S(p) => write!(f, "s{p}"),
        }
    }
}

/// Exponent vector of a monomial. Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<VarId, u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId, e: u32) -> Self {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn vars(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Quotient monomial, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.get_mut(&v)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exps.remove(&v);
            }
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, ties broken by the earliest
    /// variable in canonical order carrying the larger exponent.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                // the side that still has a variable is lex-greater on it
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => {
                    // earlier variable present means larger exponent there
                    match va.cmp(vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        },
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
/// The zero polynomial has an empty term map; zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(v: VarId) -> Self {
        Poly::monomial(Monomial::var(v, 1), Rational::one())
    }

    pub fn x(i: u32) -> Self {
        Poly::var(VarId::X(i))
    }

    pub fn y() -> Self {
        Poly::var(VarId::Y)
    }

    pub fn s(p: u32) -> Self {
        Poly::var(VarId::S(p))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// y^e as a polynomial.
    pub fn y_pow(e: u32) -> Self {
        Poly::monomial(Monomial::var(VarId::Y, e), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::unit()) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Poly { terms }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k * c))
            .collect();
        Poly { terms }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Ring homomorphism substituting each bound variable by a polynomial;
    /// unbound variables pass through unchanged.
    pub fn substitute(&self, bindings: &BTreeMap<VarId, Poly>) -> Poly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (v, e) in m.vars() {
                match bindings.get(&v) {
                    Some(image) => term = term.mul(&image.pow(e)),
                    None => term = term.mul(&Poly::monomial(Monomial::var(v, e), Rational::one())),
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitute a single variable.
    pub fn substitute_one(&self, v: VarId, image: &Poly) -> Poly {
        let mut b = BTreeMap::new();
        b.insert(v, image.clone());
        self.substitute(&b)
    }

    /// The polynomial multiplying v^alpha, in the remaining variables.
    pub fn coeff_of(&self, v: VarId, alpha: u32) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == alpha {
                let rest = m.checked_div(&Monomial::var(v, alpha)).expect("exponent matches");
                out.insert_term(rest, c.clone());
            }
        }
        out
    }

    /// Coefficient of y^alpha (Notation-1.48 style extraction).
    pub fn coeff_of_y(&self, alpha: u32) -> Poly {
        self.coeff_of(VarId::Y, alpha)
    }

    /// Maximal exponent of v across terms; -1 for the zero polynomial.
    pub fn per_var_degree(&self, v: VarId) -> i64 {
        self.terms
            .keys()
            .map(|m| m.exponent(v) as i64)
            .max()
            .unwrap_or(-1)
    }

    /// Maximum per-variable degree over x1..xr; -1 for zero.
    pub fn max_x_degree(&self, r: usize) -> i64 {
        if self.is_zero() {
            return -1;
        }
        (1..=r as u32)
            .map(|i| self.per_var_degree(VarId::X(i)))
            .max()
            .unwrap_or(0)
    }

    /// Total degree in the s-variables; -1 for zero.
    pub fn s_total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| {
                m.vars()
                    .filter(|(v, _)| matches!(v, VarId::S(_)))
                    .map(|(_, e)| e as i64)
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(-1)
    }

    /// All variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vars: Vec<VarId> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().map(|(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the polynomial ring. Errors with `NotDivisible`
    /// when a nonzero remainder would be left, which signals a broken
    /// identity upstream.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::NotDivisible);
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.checked_div(&dm).ok_or(Error::NotDivisible)?;
            let qc = rc / &dc;
            let qterm = Poly::monomial(qm, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Ok(quot)
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Poly {
    /// Canonical printing with a custom name for the s-variables (used to
    /// render the conventional e-form). Graded-lex descending, '-' folded
    /// into coefficients.
    pub fn format_with_s_name(&self, s_name: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(abs.to_string());
            }
            for (v, e) in m.vars() {
                let name = match v {
                    VarId::S(p) => format!("{s_name}{p}"),
                    _ => v.to_string(),
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    /// Canonical printing: graded-lex descending, '-' folded into
    /// coefficients. Re-parses to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with_s_name("s"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str) -> Poly {
        parse(text).unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = p("x1^2 + x2^2");
        assert_eq!(q.per_var_degree(VarId::X(1)), 2);
        assert_eq!(q.num_terms(), 2);
        assert!(p("0").is_zero());
        let q = p("3/2*x1*y - y");
        assert_eq!(q.to_string(), "3/2*x1*y - y");
    }

    #[test]
    fn arith_examples() {
        let a = p("x1 - x2").mul(&p("x1 + x2"));
        assert_eq!(a, p("x1^2 - x2^2"));
        let q = p("x1*y + 2");
        assert_eq!(q.add(&Poly::zero()), q);
        assert_eq!(p("x1 + x2").pow(2), p("x1^2 + 2*x1*x2 + x2^2"));
    }

    #[test]
    fn substitute_examples() {
        let q = p("x1^2 + x2^2");
        let mut b = BTreeMap::new();
        b.insert(VarId::X(1), Poly::from_int(1));
        b.insert(VarId::X(2), Poly::from_int(2));
        assert_eq!(q.substitute(&b), Poly::from_int(5));
        assert_eq!(q.substitute(&BTreeMap::new()), q);

        let expr = p("s1^2 - 2*s2");
        let mut b = BTreeMap::new();
        b.insert(VarId::S(1), p("x1 + x2").neg());
        b.insert(VarId::S(2), p("x1*x2"));
        assert_eq!(expr.substitute(&b), p("x1^2 + x2^2"));
    }

    #[test]
    fn coeff_of_y_examples() {
        let q = p("y^2 + s1*y + s2");
        assert_eq!(q.coeff_of_y(1), p("s1"));
        assert!(q.coeff_of_y(5).is_zero());
        let prod = p("y - x1").mul(&p("y - x2"));
        assert_eq!(prod.coeff_of_y(0), p("x1*x2"));
    }

    #[test]
    fn per_var_degree_examples() {
        let q = p("x1^2*x2 + x2^3");
        assert_eq!(q.per_var_degree(VarId::X(2)), 3);
        assert_eq!(Poly::zero().per_var_degree(VarId::X(1)), -1);
        assert_eq!(q.per_var_degree(VarId::X(3)), 0);
    }

    #[test]
    fn exact_divide_examples() {
        let q = p("x1^2 - x2^2").exact_divide(&p("x1 - x2")).unwrap();
        assert_eq!(q, p("x1 + x2"));
        assert!(Poly::zero().exact_divide(&p("x1")).unwrap().is_zero());
        let q = p("x1^3 - x2^3 - x1^2*x2 + x1*x2^2")
            .exact_divide(&p("x1 - x2"))
            .unwrap();
        assert_eq!(q, p("x1^2 + x2^2"));
        assert_eq!(
            p("x1 + 1").exact_divide(&p("x2")),
            Err(Error::NotDivisible)
        );
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_monomial() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec((1u32..=4, 0u32..=6), 0..4).prop_map(|pairs| {
            let mut m = Monomial::unit();
            for (i, e) in pairs {
                m = m.mul(&Monomial::var(VarId::X(i), e));
            }
            m
        })
    }

    prop_compose! {
        fn arb_poly()(terms in proptest::collection::vec((arb_monomial(), arb_rational()), 0..6)) -> Poly {
            let mut out = Poly::zero();
            for (m, c) in terms {
                out = out.add(&Poly::monomial(m, c));
            }
            out
        }
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(q in arb_poly()) {
            let text = q.to_string();
            prop_assert_eq!(parse(&text).unwrap(), q);
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn exact_divide_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).exact_divide(&b).unwrap(), a);
        }

        #[test]
        fn substitute_homomorphism(a in arb_poly(), b in arb_poly()) {
            let mut bind = BTreeMap::new();
            bind.insert(VarId::X(1), Poly::x(2).add(&Poly::one()));
            bind.insert(VarId::X(3), Poly::from_int(2));
            prop_assert_eq!(
                a.mul(&b).substitute(&bind),
                a.substitute(&bind).mul(&b.substitute(&bind))
            );
        }
    }
}
