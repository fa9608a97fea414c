//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`) and enforcing its runtime
//! budget. All comparisons are bit-exact.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symdet::divdiff::{divdiff_alternant, divdiff_determinant, divdiff_recursive};
use symdet::exterior::{
    decompose_rank1, from_antisym, ts_action, wedge_expand, wedge_of, WedgeElement,
};
use symdet::fundamental::{bialternant_to_sigma, express_in_elementary, verify_theorem, HTuple};
use symdet::matrix::{build_matrix, wedge_row_expand, ColumnSpec, PolyMatrix};
use symdet::poly::{parse, Monomial, Poly, Rational, VarId};
use symdet::sym::{elementary_symmetric, sigma_p, vandermonde, DecreasingExponents};

fn p(text: &str) -> Poly {
    parse(text).unwrap()
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn criterion<F: FnOnce() + std::panic::UnwindSafe>(number: usize, name: &str, limit: Duration, body: F) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed();
    match outcome {
        Ok(()) if elapsed <= limit => {
            println!("criterion {number} ({name}): PASS [{elapsed:.2?}]");
        }
        Ok(()) => {
            println!("criterion {number} ({name}): FAIL [over budget: {elapsed:.2?} > {limit:?}]");
            panic!("criterion {number} exceeded its runtime budget");
        }
        Err(cause) => {
            println!("criterion {number} ({name}): FAIL [{elapsed:.2?}]");
            std::panic::resume_unwind(cause);
        }
    }
}

fn rand_upoly(rng: &mut ChaCha8Rng, degree: usize) -> Poly {
    let mut out = Poly::zero();
    for e in 0..=degree {
        let c = rng.gen_range(-5i64..=5);
        out = out.add(&Poly::y_pow(e as u32).scale(&q(c)));
    }
    out
}

/// A random polynomial in s1..sr of total s-degree at most delta,
/// expanded into the symmetric polynomial it denotes.
fn rand_symmetric(rng: &mut ChaCha8Rng, r: usize, delta: usize) -> Poly {
    let mut out = Poly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let c = rng.gen_range(-5i64..=5);
        let mut term = Poly::constant(q(c));
        for _ in 0..rng.gen_range(0..=delta) {
            let which = rng.gen_range(1..=r);
            term = term.mul(&sigma_p(r, which));
        }
        out = out.add(&term);
    }
    out
}

#[test]
fn criterion_1_vandermonde_identity() {
    criterion(1, "Vandermonde identity", Duration::from_secs(1), || {
        for r in 1..=5usize {
            let rows: Vec<Vec<Poly>> = (1..=r as u32)
                .map(|i| (0..r).map(|j| Poly::x(i).pow((r - 1 - j) as u32)).collect())
                .collect();
            let det = PolyMatrix::from_rows(rows).unwrap().det().unwrap();
            assert_eq!(det, vandermonde(r), "r = {r}");
        }
    });
}

#[test]
fn criterion_2_bialternant_identity() {
    criterion(2, "bialternant identity", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for case in 0..200 {
            let r = rng.gen_range(1..=4usize);
            let delta = rng.gen_range(0..=3usize);
            let degree = r - 1 + delta;
            let polys: Vec<Poly> = (0..r).map(|_| rand_upoly(&mut rng, degree)).collect();
            let h = HTuple::new(polys, r, delta).unwrap();
            let s = bialternant_to_sigma(&h).unwrap();
            assert!(verify_theorem(&h, &s).unwrap(), "case {case}: r={r} delta={delta}");
        }
    });
}

#[test]
fn criterion_3_express_roundtrip() {
    criterion(3, "express round-trip", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in 0..200 {
            let r = rng.gen_range(1..=4usize);
            let delta = rng.gen_range(0..=3usize);
            let s = rand_symmetric(&mut rng, r, delta);
            let expr = express_in_elementary(&s, r).unwrap();
            assert_eq!(expr.substitute_sigmas(), s, "case {case}: r={r}");
            assert!(
                expr.poly.s_total_degree() <= expr.delta as i64,
                "case {case}: degree bound"
            );
            assert!(expr.delta <= delta, "case {case}: delta inference");
        }
    });
}

/// Classical fundamental-theorem algorithm over the conventional e_p,
/// by lex leading-term subtraction. Test-suite-only oracle; the returned
/// polynomial reads its s-variables as e-variables.
fn classical_oracle(s: &Poly, r: usize) -> Poly {
    fn lex_exps(m: &Monomial, r: usize) -> Vec<u32> {
        (1..=r as u32).map(|i| m.exponent(VarId::X(i))).collect()
    }
    let mut rem = s.clone();
    let mut out = Poly::zero();
    while !rem.is_zero() {
        let (m, c) = rem
            .terms()
            .max_by(|a, b| lex_exps(a.0, r).cmp(&lex_exps(b.0, r)))
            .unwrap();
        let exps = lex_exps(m, r);
        let c = c.clone();
        assert!(
            exps.windows(2).all(|w| w[0] >= w[1]),
            "lex leading exponent of a symmetric polynomial must be weakly decreasing"
        );
        let mut e_monomial = Poly::one();
        let mut expansion = Poly::one();
        for k in 1..=r {
            let next = if k < r { exps[k] } else { 0 };
            let power = exps[k - 1] - next;
            if power > 0 {
                e_monomial = e_monomial.mul(&Poly::s(k as u32).pow(power));
                expansion = expansion.mul(&elementary_symmetric(r, k).pow(power));
            }
        }
        out = out.add(&e_monomial.scale(&c));
        rem = rem.sub(&expansion.scale(&c));
    }
    out
}

#[test]
fn criterion_4_oracle_equivalence() {
    criterion(4, "classical oracle equivalence", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for case in 0..200 {
            let r = rng.gen_range(1..=4usize);
            let delta = rng.gen_range(0..=3usize);
            let s = rand_symmetric(&mut rng, r, delta);
            let ours = express_in_elementary(&s, r).unwrap().to_conventional_e();
            let theirs = classical_oracle(&s, r);
            assert_eq!(ours.poly, theirs, "case {case}: r={r}");
        }
    });
}

#[test]
fn criterion_5_golden_vectors() {
    criterion(5, "golden vectors", Duration::from_secs(10), || {
        // banded sigma block, window 4, r = 3
        let banded = build_matrix(4, 3, &[ColumnSpec::SigmaShift(1), ColumnSpec::SigmaShift(0)])
            .unwrap();
        let expect = PolyMatrix::from_rows(vec![
            vec![p("s0"), p("0")],
            vec![p("s1"), p("s0")],
            vec![p("s2"), p("s1")],
            vec![p("s3"), p("s2")],
            vec![p("0"), p("s3")],
        ])
        .unwrap();
        assert_eq!(banded, expect);

        // unit block, window 4: single ones at rows 2, 3, 4
        let units = build_matrix(
            4,
            3,
            &[
                ColumnSpec::MonomialUnit(3),
                ColumnSpec::MonomialUnit(2),
                ColumnSpec::MonomialUnit(1),
            ],
        )
        .unwrap();
        for i in 0..5 {
            for j in 0..3 {
                let expect = if i == j + 1 { Poly::one() } else { Poly::zero() };
                assert_eq!(*units.get(i, j), expect);
            }
        }

        // closed forms of the divided-difference determinant for the
        // printed (d, r) pairs, using F with distinct prime coefficients
        let full = p("2 + 3*y + 5*y^2 + 7*y^3 + 11*y^4 + 13*y^5 + 17*y^6");
        let truncate = |d: usize| {
            let mut t = Poly::zero();
            for e in 0..=d {
                t = t.add(&Poly::y_pow(e as u32).mul(&full.coeff_of_y(e as u32)));
            }
            t
        };
        let cases: &[(usize, usize, &str)] = &[
            (2, 3, "5"),
            (3, 3, "-7*s1 + 5"),
            (3, 4, "7"),
            (4, 4, "-11*s1 + 7"),
            (5, 4, "13*s1^2 - 13*s2 - 11*s1 + 7"),
            (1, 2, "3"),
            (2, 2, "-5*s1 + 3"),
            (0, 1, "2"),
            (1, 1, "-3*s1 + 2"),
        ];
        for &(d, r, expect) in cases {
            let f = truncate(d);
            let expr = symdet::divdiff::divdiff_determinant_expr(&f, r, d).unwrap();
            assert_eq!(expr.poly, p(expect), "d={d} r={r}");
            if r == 1 {
                // the one-node operator is evaluation at x1
                assert_eq!(
                    expr.substitute_sigmas(),
                    f.substitute_one(VarId::Y, &Poly::x(1)),
                    "d={d} r=1"
                );
            }
        }

        // wedge-row degenerate cases: q = 0, q = p, q > p
        let empty = PolyMatrix::new(0, 3, vec![]).unwrap();
        assert_eq!(
            wedge_row_expand(&empty, &[true, true, true]).unwrap(),
            vec![(Poly::one(), vec![0, 1, 2])]
        );
        let square = PolyMatrix::from_rows(vec![
            vec![p("x1"), p("1")],
            vec![p("x2"), p("1")],
        ])
        .unwrap();
        assert_eq!(
            wedge_row_expand(&square, &[true, true]).unwrap(),
            vec![(p("x1 - x2"), vec![])]
        );
        let tall = PolyMatrix::from_rows(vec![
            vec![p("1"), p("2"), p("3")],
            vec![p("4"), p("5"), p("6")],
            vec![p("7"), p("8"), p("9")],
            vec![p("1"), p("1"), p("1")],
        ])
        .unwrap();
        assert!(wedge_row_expand(&tall, &[true, true, true]).unwrap().is_empty());
    });
}

#[test]
fn criterion_6_divdiff_agreement() {
    criterion(6, "divided-difference agreement", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for case in 0..60 {
            let degree = rng.gen_range(0..=6usize);
            let r = rng.gen_range(1..=4usize);
            let f = rand_upoly(&mut rng, degree);
            let d = degree.max(r - 1);
            let rec = divdiff_recursive(&f, r).unwrap();
            assert_eq!(rec, divdiff_determinant(&f, r, d).unwrap(), "case {case}");
            assert_eq!(rec, divdiff_alternant(&f, r).unwrap(), "case {case}");
        }
        // coassociativity: dividing the nodes out in either order agrees
        for case in 0..50 {
            let f = rand_upoly(&mut rng, 6);
            let forward = divdiff_recursive(&f, 3).unwrap().value;
            let step1 = f
                .sub(&f.substitute_one(VarId::Y, &Poly::x(1)))
                .exact_divide(&Poly::y().sub(&Poly::x(1)))
                .unwrap();
            let step2 = step1
                .sub(&step1.substitute_one(VarId::Y, &Poly::x(2)))
                .exact_divide(&Poly::y().sub(&Poly::x(2)))
                .unwrap();
            let backward = step2.substitute_one(VarId::Y, &Poly::x(3));
            assert_eq!(forward, backward, "case {case}");
        }
    });
}

#[test]
fn criterion_7_resultant() {
    criterion(7, "resultant specialization", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for case in 0..50 {
            let degree = rng.gen_range(1..=4usize);
            let roots: Vec<i64> = (0..degree).map(|_| rng.gen_range(-3i64..=3)).collect();
            let mut f = Poly::one();
            for &root in &roots {
                f = f.mul(&Poly::y().sub(&Poly::from_int(root)));
            }
            let big_f_degree = rng.gen_range(0..=3usize);
            let big_f = rand_upoly(&mut rng, big_f_degree);
            let expect: Rational = roots
                .iter()
                .map(|&root| {
                    big_f
                        .substitute_one(VarId::Y, &Poly::from_int(root))
                        .as_constant()
                        .unwrap()
                })
                .product();
            assert_eq!(
                symdet::fundamental::norm_resultant(&f, &big_f).unwrap(),
                expect,
                "case {case}: roots {roots:?}"
            );
        }
    });
}

#[test]
fn criterion_8_rank1_freeness() {
    criterion(8, "exterior rank-1 freeness", Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for case in 0..100 {
            let r = rng.gen_range(1..=3usize);
            let delta = rng.gen_range(0..=3usize);
            let s = rand_symmetric(&mut rng, r, delta);
            let basis = WedgeElement::basis(r, r - 1).unwrap();
            let w = ts_action(&s, &basis).unwrap();
            let (recovered, expr) = decompose_rank1(&w).unwrap();
            assert_eq!(recovered, s, "case {case}: r={r}");
            assert_eq!(expr.substitute_sigmas(), s, "case {case}: expr");
        }
        // injectivity: the decomposition determines the element
        for case in 0..50 {
            let r = rng.gen_range(1..=3usize);
            let d = rng.gen_range(r - 1..=r + 3);
            let mut coords = BTreeMap::new();
            for _ in 0..rng.gen_range(0..=3) {
                let mut exps: Vec<u32> = Vec::new();
                let low = rng.gen_range(0..=(d + 1 - r) as u32);
                for step in (0..r as u32).rev() {
                    exps.push(low + step);
                }
                let c = rng.gen_range(-4i64..=4);
                if c != 0 {
                    coords.insert(DecreasingExponents(exps), q(c));
                }
            }
            let w = WedgeElement::new(r, d, coords).unwrap();
            let (s, _) = decompose_rank1(&w).unwrap();
            let rebuilt = from_antisym(&s.mul(&vandermonde(r)), r, d).unwrap();
            assert_eq!(rebuilt, w, "case {case}: decomposition must determine w");
            assert_eq!(s.is_zero(), w.is_zero(), "case {case}: zero iff zero");
        }
    });
}

#[test]
fn criterion_9_wedge_expansion() {
    criterion(9, "determinantal wedge expansion", Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for r in 1..=3usize {
            for d in (r - 1).max(0)..=4 {
                for delta in 0..=3usize {
                    for dp in 0..=delta {
                        let ds = delta - dp;
                        let h: Vec<Poly> =
                            (0..r).map(|_| rand_upoly(&mut rng, d + delta)).collect();
                        check_expansion(&h, r, d, dp, ds);
                    }
                }
            }
        }
        // the printed instance: r = 3, d = 3, delta' = 1, delta'' = 2
        let h = [
            p("y^6 - 2*y^3 + 1"),
            p("3*y^4 + y"),
            p("y^5 - y^2 + 4"),
        ];
        let terms = wedge_expand(&h, 3, 3, 1, 2).unwrap();
        // every basis wedge lives in the window [0, 3] with coefficients
        // of s-degree at most 3
        for (expr, mu) in &terms {
            assert!(mu.0.iter().all(|&e| e <= 3));
            assert!(expr.poly.s_total_degree() <= 3);
        }
        check_expansion(&h, 3, 3, 1, 2);
    });
}

fn check_expansion(h: &[Poly], r: usize, d: usize, dp: usize, ds: usize) {
    let terms = wedge_expand(h, r, d, dp, ds).unwrap();
    let delta = dp + ds;
    let mut total = Poly::zero();
    for (expr, basis_mu) in &terms {
        assert!(expr.poly.s_total_degree() <= delta as i64);
        let mut coords = BTreeMap::new();
        coords.insert(basis_mu.clone(), Rational::one());
        let basis = WedgeElement::new(r, d, coords).unwrap();
        let acted = ts_action(&expr.substitute_sigmas(), &basis).unwrap();
        total = total.add(&acted.atr_embed());
    }
    let direct = wedge_of(h, r, d + delta).unwrap();
    assert_eq!(
        from_antisym(&total, r, d + delta).unwrap(),
        direct,
        "r={r} d={d} dp={dp} ds={ds}"
    );
}
