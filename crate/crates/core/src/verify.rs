//! Seeded random instances and the oracle equivalence suites.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::rational::{int, pow, rat};
use crate::exactalg::{determinant, ExponentVector, LaurentPolynomial, Monomial, Rational};
use crate::flags::{
    combinatorial_coefficient, degree_by_flags, pyramid_map, FaceMap, Flag, PolyhedralComplex,
};
use crate::formulas::{bernstein_pair, product_over_roots, sum_over_roots, SystemInstance};
use crate::oracles::numeric::numeric_bivariate_aggregate;
use crate::oracles::{
    binomial_aggregate, binomial_system, degree_by_homology, relative_error, univariate_aggregate, Mode,
};
use crate::polytope::{int_point, Polytope};
use crate::residue::{
    log_form_residue, residue_at_vertex, residue_at_vertex_with_bound, residue_bound, wedge_log_residue,
    TruncatedSeries, WeightFunctional,
};
use crate::symbol::{symbol_of_monomials, SymbolInput};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> Rng64 {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Random instance builders.
pub mod gen {
    use super::*;

    pub fn nonzero(rng: &mut Rng64, bound: i64) -> i64 {
        loop {
            let x = rng.gen_range(-bound..=bound);
            if x != 0 {
                return x;
            }
        }
    }

    /// Nonzero `p/q` with `|p| ≤ num`, `1 ≤ q ≤ den`.
    pub fn rational(rng: &mut Rng64, num: i64, den: i64) -> Rational {
        rat(nonzero(rng, num), rng.gen_range(1..=den))
    }

    pub fn exponent(rng: &mut Rng64, n: usize, lo: i64, hi: i64) -> ExponentVector {
        ExponentVector::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
    }

    pub fn monomial(rng: &mut Rng64, n: usize, lo: i64, hi: i64) -> Monomial {
        Monomial::new(rational(rng, 5, 4), exponent(rng, n, lo, hi)).expect("nonzero coefficient")
    }

    /// At most `max_terms` terms with rational coefficients; may cancel to fewer.
    pub fn laurent(rng: &mut Rng64, n: usize, max_terms: usize, lo: i64, hi: i64) -> LaurentPolynomial {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<(ExponentVector, Rational)> =
            (0..k).map(|_| (exponent(rng, n, lo, hi), rational(rng, 5, 4))).collect();
        LaurentPolynomial::from_terms(n, terms).expect("dimensions agree")
    }

    /// Lattice length `1..=8`, endpoint coefficients in `[−9,9]∖{0}`.
    pub fn univariate(rng: &mut Rng64) -> LaurentPolynomial {
        let len = rng.gen_range(1..=8i64);
        let lo = rng.gen_range(-3..=3i64);
        let terms: Vec<(ExponentVector, Rational)> = (0..=len)
            .map(|k| {
                let c = if k == 0 || k == len { nonzero(rng, 9) } else { rng.gen_range(-9..=9) };
                (ExponentVector::new(vec![lo + k]), int(c))
            })
            .collect();
        LaurentPolynomial::from_terms(1, terms).expect("one variable")
    }

    /// Nonsingular `n×n` exponent matrix with entries in `[−3,3]` and nonzero rational right-hand sides.
    pub fn binomial(rng: &mut Rng64, n: usize) -> (Vec<Vec<i64>>, Vec<Rational>) {
        loop {
            let a: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            if !determinant(&a).is_zero() {
                let d = (0..n).map(|_| rational(rng, 9, 9)).collect();
                return (a, d);
            }
        }
    }

    /// Developed system with supports of `2..=5` points in `[0,3]ⁿ` and integer
    /// coefficients in `[−coeff, coeff]∖{0}`, resampled until developed.
    pub fn developed_system(rng: &mut Rng64, n: usize, coeff: i64) -> Result<SystemInstance> {
        for _ in 0..10_000 {
            let system: Vec<LaurentPolynomial> = (0..n)
                .map(|_| {
                    let k = rng.gen_range(2..=5);
                    let terms: Vec<(ExponentVector, Rational)> =
                        (0..k).map(|_| (exponent(rng, n, 0, 3), int(nonzero(rng, coeff)))).collect();
                    LaurentPolynomial::from_terms(n, terms).expect("dimensions agree")
                })
                .collect();
            if system.iter().any(|f| f.len() < 2) {
                continue;
            }
            match SystemInstance::new(system) {
                Ok(s) => return Ok(s),
                Err(Error::NotDeveloped { .. } | Error::MonomialEquation(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Err(Error::Consistency("no developed system found".into()))
    }

    /// Product of elementary matrices, a permutation and a sign flip.
    pub fn unimodular(rng: &mut Rng64, n: usize) -> Vec<Vec<i64>> {
        let mut q: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        if n > 1 {
            for _ in 0..rng.gen_range(0..=3) {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if i != j {
                    let k = if rng.gen() { 1 } else { -1 };
                    for c in 0..n {
                        q[i][c] += k * q[j][c];
                    }
                }
            }
            q.shuffle(rng);
        }
        if rng.gen() {
            let i = rng.gen_range(0..n);
            q[i].iter_mut().for_each(|x| *x = -*x);
        }
        q
    }

    /// Full-dimensional polytope from `k` random points in `[−2,2]ⁿ`, optionally
    /// closed under `x ↦ −x`.
    pub fn polytope(rng: &mut Rng64, n: usize, symmetric: bool) -> Polytope {
        loop {
            let k = rng.gen_range(n + 1..=n + 4);
            let mut pts: Vec<Vec<i64>> = (0..k).map(|_| exponent(rng, n, -2, 2).into_inner()).collect();
            if symmetric {
                let neg: Vec<Vec<i64>> = pts.iter().map(|p| p.iter().map(|x| -x).collect()).collect();
                pts.extend(neg);
            }
            let pts: Vec<_> = pts.iter().map(|p| int_point(p)).collect();
            if let Ok(p) = Polytope::convex_hull(&pts) {
                if p.is_full_dimensional() {
                    return p;
                }
            }
        }
    }

    /// Laurent polynomial with at least two terms and full-dimensional Newton polytope.
    pub fn full_laurent(rng: &mut Rng64, n: usize, max_terms: usize) -> LaurentPolynomial {
        loop {
            let f = laurent(rng, n, max_terms, -2, 2);
            if f.len() >= 2 && f.newton_polytope().is_ok_and(|p| p.is_full_dimensional()) {
                return f;
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
    /// Instances discarded by conditioning checks and redrawn.
    pub resampled: usize,
    pub failures: Vec<String>,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.cases
    }
}

fn run_suite(name: &'static str, cases: usize, mut case: impl FnMut(usize) -> Result<usize>) -> SuiteReport {
    let start = Instant::now();
    let mut passed = 0;
    let mut resampled = 0;
    let mut failures = Vec::new();
    for i in 0..cases {
        match case(i) {
            Ok(r) => {
                passed += 1;
                resampled += r;
            }
            Err(e) => failures.push(format!("case {i}: {e}")),
        }
    }
    SuiteReport { name, cases, passed, resampled, failures, elapsed: start.elapsed() }
}

fn expect_eq(what: &str, got: &Rational, want: &Rational) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Consistency(format!("{what}: formula {got}, oracle {want}")))
    }
}

fn expect_int(what: &str, got: i64, want: i64) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Consistency(format!("{what}: {got} ≠ {want}")))
    }
}

/// The worked square system `t₁ − 2, t₂ − 3`.
pub fn suite_square() -> SuiteReport {
    run_suite("square system", 1, |_| {
        let p = |t: &[(&[i64], i64)]| LaurentPolynomial::from_int_terms(2, t);
        let sys = SystemInstance::new(vec![p(&[(&[1, 0], 1), (&[0, 0], -2)]), p(&[(&[0, 1], 1), (&[0, 0], -3)])])?;
        let want = [([1, 1], 1, rat(1, 1)), ([0, 0], 1, rat(1, 1)), ([1, 0], -1, rat(-1, 3)), ([0, 1], -1, rat(-1, 2))];
        let f0 = Monomial::new(int(1), ExponentVector::new(vec![1, 1]))?;
        for (v, c, s) in want {
            let k = sys.vertex_index(&ExponentVector::new(v.to_vec()))?;
            expect_int("c(A)", sys.coefficients()[k], c)?;
            let sym = crate::symbol::vertex_symbol(&f0, sys.system(), sys.minkowski(), k)?;
            expect_eq("vertex symbol", &sym, &s)?;
        }
        expect_eq("product", &product_over_roots(&f0, &sys)?, &int(6))?;
        expect_eq("sum", &sum_over_roots(&p(&[(&[1, 0], 1)]), &sys)?, &int(2))?;
        let r = log_form_residue(&LaurentPolynomial::one(2), sys.system(), &ExponentVector::new(vec![1, 1]))?;
        expect_eq("log residue", &r, &int(1))?;
        Ok(0)
    })
}

pub fn suite_univariate(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 2);
    run_suite("univariate Vieta", cases, |_| {
        let f = gen::univariate(&mut rng);
        let m = gen::monomial(&mut rng, 1, -3, 3);
        let f0 = gen::laurent(&mut rng, 1, 5, -3, 3);
        let sys = SystemInstance::new(vec![f.clone()])?;
        expect_eq(
            "product",
            &product_over_roots(&m, &sys)?,
            &univariate_aggregate(&f, &m.to_polynomial(), Mode::Product)?,
        )?;
        expect_eq("sum", &sum_over_roots(&f0, &sys)?, &univariate_aggregate(&f, &f0, Mode::Sum)?)?;
        Ok(0)
    })
}

pub fn suite_binomial(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 3);
    run_suite("binomial systems", cases, |_| {
        let n = rng.gen_range(2..=3);
        let (a, d) = gen::binomial(&mut rng, n);
        let m = gen::monomial(&mut rng, n, -3, 3);
        let sys = SystemInstance::new(binomial_system(&a, &d)?)?;
        expect_eq("product", &product_over_roots(&m, &sys)?, &binomial_aggregate(&a, &d, &m, Mode::Product)?)?;
        expect_eq("sum", &sum_over_roots(&m.to_polynomial(), &sys)?, &binomial_aggregate(&a, &d, &m, Mode::Sum)?)?;
        // Polynomial f₀ through linearity of the oracle.
        let f0 = gen::laurent(&mut rng, n, 3, -2, 2);
        let mut want = Rational::zero();
        for (e, c) in f0.terms() {
            let mono = Monomial::new(c.clone(), e.clone())?;
            want += binomial_aggregate(&a, &d, &mono, Mode::Sum)?;
        }
        expect_eq("polynomial sum", &sum_over_roots(&f0, &sys)?, &want)?;
        Ok(0)
    })
}

pub fn suite_mixed_volume(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 4);
    run_suite("mixed volume", cases, |i| {
        let n = 2 + i % 2;
        let sys = gen::developed_system(&mut rng, n, 9)?;
        let (by_sum, by_volume) = bernstein_pair(&sys)?;
        if by_volume.is_negative() {
            return Err(Error::Consistency(format!("negative mixed volume {by_volume}")));
        }
        expect_eq("root count", &by_sum, &Rational::from_integer(by_volume))?;
        Ok(0)
    })
}

fn symbol_input(rng: &mut Rng64) -> Vec<Monomial> {
    let n = rng.gen_range(1..=4);
    (0..=n)
        .map(|_| Monomial::new(gen::rational(rng, 9, 9), gen::exponent(rng, n, -5, 5)).expect("nonzero"))
        .collect()
}

fn sym(m: &[Monomial]) -> Result<Rational> {
    Ok(symbol_of_monomials(&SymbolInput::new(m.to_vec())?))
}

pub fn suite_symbol(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 5);
    run_suite("symbol properties", cases, |_| {
        let m = symbol_input(&mut rng);
        let n = m.len() - 1;
        let base = sym(&m)?;

        let i = rng.gen_range(0..=n);
        let g = Monomial::new(gen::rational(&mut rng, 9, 9), gen::exponent(&mut rng, n, -5, 5))?;
        let mut other = m.clone();
        other[i] = g.clone();
        let mut prod = m.clone();
        prod[i] = m[i].mul(&g)?;
        expect_eq("multiplicativity", &sym(&prod)?, &(&base * sym(&other)?))?;

        let (i, j) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        if i != j {
            let mut sw = m.clone();
            sw.swap(i, j);
            expect_eq("skew-symmetry", &sym(&sw)?, &base.recip())?;
        }

        let q = gen::unimodular(&mut rng, n);
        let det = determinant(&q).to_i64().ok_or(Error::Overflow)?;
        let sub: Vec<Monomial> =
            m.iter().map(|x| Monomial::new(x.coeff().clone(), x.exp().times_matrix(&q))).collect::<Result<_>>()?;
        expect_eq("monomial substitution", &sym(&sub)?, &pow(&base, det))?;

        let lambda: Vec<Rational> = (0..n).map(|_| gen::rational(&mut rng, 5, 5)).collect();
        let tr: Vec<Monomial> = m
            .iter()
            .map(|x| {
                let c = x.exp().iter().zip(&lambda).fold(x.coeff().clone(), |c, (&a, l)| c * pow(l, a));
                Monomial::new(c, x.exp().clone())
            })
            .collect::<Result<_>>()?;
        expect_eq("translation", &sym(&tr)?, &base)?;
        Ok(0)
    })
}

fn unit(rng: &mut Rng64, weight: &WeightFunctional, n: usize) -> Result<TruncatedSeries> {
    let mut terms = vec![(ExponentVector::zeros(n), Rational::one())];
    for _ in 0..rng.gen_range(0..=3) {
        let e = gen::exponent(rng, n, -2, 2);
        if weight.weight(&e) > 0 {
            terms.push((e, gen::rational(rng, 5, 3)));
        }
    }
    Ok(TruncatedSeries::exact(&LaurentPolynomial::from_terms(n, terms)?, weight.clone()))
}

pub fn suite_residue(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 6);
    run_suite("residue properties", cases, |i| {
        let n = [1, 2, 2, 3][i % 4];
        let f = gen::full_laurent(&mut rng, n, 4);
        let p = f.newton_polytope()?;
        let v = rng.gen_range(0..p.vertices().len());
        let a = ExponentVector::new(p.integer_vertex(v).ok_or(Error::DegeneratePolytope)?);
        let g = gen::laurent(&mut rng, n, 4, -2, 2);

        let b = residue_bound(&g, &f, &a)?;
        let r = residue_at_vertex_with_bound(&g, &f, &a, b)?;
        expect_eq("doubling", &residue_at_vertex_with_bound(&g, &f, &a, 2 * b.max(1))?, &r)?;

        let g2 = gen::laurent(&mut rng, n, 4, -2, 2);
        let (x, y) = (gen::rational(&mut rng, 5, 5), gen::rational(&mut rng, 5, 5));
        let comb = g.scale(&x).add(&g2.scale(&y))?;
        expect_eq("linearity", &residue_at_vertex(&comb, &f, &a)?, &(&x * &r + &y * residue_at_vertex(&g2, &f, &a)?))?;

        // θⱼ(g/f) = (θⱼg·f − g·θⱼf)/f² has zero constant term at 2A.
        let j = rng.gen_range(0..n);
        let num = g.log_derivative(j).mul(&f)?.sub(&g.mul(&f.log_derivative(j))?)?;
        let f2 = f.mul(&f)?;
        let a2 = a.scaled(2);
        expect_eq("derivative", &residue_at_vertex(&num, &f2, &a2)?, &Rational::zero())?;
        let s = crate::residue::truncated_inverse(&f, &a, 4)?;
        expect_eq("series derivative", &s.log_derivative(j).constant_term(), &Rational::zero())?;

        let weight = WeightFunctional::at_vertex(&p, v, f.support().iter().map(|e| e - &a).collect::<Vec<_>>().iter());
        let units: Vec<(Monomial, TruncatedSeries)> = (0..n)
            .map(|_| Ok((Monomial::new(gen::rational(&mut rng, 5, 3), gen::exponent(&mut rng, n, -2, 2))?, unit(&mut rng, &weight, n)?)))
            .collect::<Result<_>>()?;
        let all_one = rng.gen_bool(0.5);
        let mut m: Vec<i64> = (0..n).map(|_| if all_one { 1 } else { rng.gen_range(0..=2) }).collect();
        if !all_one && m.iter().all(|&x| x == 1) {
            m[rng.gen_range(0..n)] = if rng.gen() { 0 } else { 2 };
        }
        let mut target = vec![0i64; n];
        for ((mono, _), &mi) in units.iter().zip(&m) {
            for (t, e) in target.iter_mut().zip(mono.exp().iter()) {
                *t -= (1 - mi) * e;
            }
        }
        let cut = weight.weight(&target).max(8 * weight.min_step);
        let got = wedge_log_residue(&units, &m, Some(cut), None)?;
        let want = if all_one {
            Rational::from_integer(determinant(&units.iter().map(|(x, _)| x.exp().to_vec()).collect::<Vec<_>>()))
        } else {
            Rational::zero()
        };
        expect_eq("wedge", &got, &want)?;
        Ok(0)
    })
}

fn map_cells(b: &PolyhedralComplex, f: impl Fn(&[i64]) -> Vec<i64>) -> Result<Vec<usize>> {
    (0..b.len())
        .map(|g| {
            let mut v: Vec<usize> = b
                .cell(g)
                .iter()
                .map(|&i| {
                    let p: Vec<i64> = b.points()[i].iter().map(|x| x.to_integer().to_i64().expect("lattice")).collect();
                    let q = int_point(&f(&p));
                    b.points().iter().position(|x| *x == q).ok_or_else(|| Error::Consistency("image is not a cell".into()))
                })
                .collect::<Result<_>>()?;
            v.sort_unstable();
            b.cell_by_vertices(&v).ok_or_else(|| Error::Consistency("image is not a cell".into()))
        })
        .collect()
}

fn both_degrees(psi: &FaceMap<'_>, rng: &mut Rng64) -> Result<i64> {
    let flags = psi.target.flags();
    let reference: &Flag = flags.choose(rng).expect("nonempty complex");
    let by_flags = degree_by_flags(psi, reference)?;
    let by_homology = degree_by_homology(psi)?;
    expect_int("degree by flags vs homology", by_flags, by_homology)?;
    Ok(by_homology)
}

pub fn suite_degree(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 7);
    run_suite("degree equivalence", cases, |i| {
        let n = 2 + (i / 4) % 2;
        match i % 4 {
            0 | 1 => {
                let p = gen::polytope(&mut rng, n, false);
                let b = PolyhedralComplex::boundary_of(&p)?;
                let (assignment, want) = if i % 4 == 0 {
                    ((0..b.len()).collect(), 1)
                } else {
                    let facets: Vec<usize> = (0..b.len()).filter(|&g| b.cell_dim(g) == n - 1).collect();
                    let f = *facets.choose(&mut rng).expect("facets");
                    ((0..b.len()).map(|g| if b.contains(f, g) { g } else { f }).collect(), 0)
                };
                let psi = FaceMap::new(&b, &b, assignment)?;
                expect_int("degree", both_degrees(&psi, &mut rng)?, want)?;
            }
            2 => {
                let p = gen::polytope(&mut rng, n, true);
                let b = PolyhedralComplex::boundary_of(&p)?;
                let psi = FaceMap::new(&b, &b, map_cells(&b, |x| x.iter().map(|v| -v).collect())?)?;
                expect_int("antipodal degree", both_degrees(&psi, &mut rng)?, if n % 2 == 0 { 1 } else { -1 })?;
            }
            _ => {
                let sys = gen::developed_system(&mut rng, n, 9)?;
                let ms = sys.minkowski();
                for v in 0..ms.total().vertices().len() {
                    let pm = pyramid_map(ms, v)?;
                    let psi = pm.face_map()?;
                    let d = both_degrees(&psi, &mut rng)?;
                    expect_int("pyramid reference flag", degree_by_flags(&psi, &pm.reference)?, d)?;
                    expect_int("c(A) vs pyramid degree", combinatorial_coefficient(ms, v)?, d)?;
                }
            }
        }
        Ok(0)
    })
}

/// Relative error bound on aggregates against the floating oracle.
pub const NUMERIC_TOL: f64 = 1e-6;

pub fn suite_numeric(seed: u64, cases: usize) -> SuiteReport {
    let mut rng = rng(seed, 8);
    run_suite("numeric bivariate", cases, |_| {
        let mut resampled = 0;
        loop {
            let sys = gen::developed_system(&mut rng, 2, 50)?;
            let m = gen::monomial(&mut rng, 2, -3, 3);
            let f0 = gen::laurent(&mut rng, 2, 5, -3, 3);
            let prod = numeric_bivariate_aggregate(sys.system(), &m.to_polynomial(), Mode::Product);
            let sum = numeric_bivariate_aggregate(sys.system(), &f0, Mode::Sum);
            let (prod, sum) = match (prod, sum) {
                (Ok(p), Ok(s)) => (p, s),
                (Err(Error::IllConditioned(_)), _) | (_, Err(Error::IllConditioned(_))) if resampled < 100 => {
                    resampled += 1;
                    continue;
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            let (count, _) = bernstein_pair(&sys)?;
            if Rational::from_integer(BigInt::from(prod.roots.len())) != count {
                return Err(Error::Consistency(format!("{} numeric roots, {count} expected", prod.roots.len())));
            }
            let exact_p = product_over_roots(&m, &sys)?;
            let exact_s = sum_over_roots(&f0, &sys)?;
            for (what, num, exact) in [("product", prod.value, &exact_p), ("sum", sum.value, &exact_s)] {
                let err = relative_error(num, exact);
                if !(err <= NUMERIC_TOL) {
                    return Err(Error::Consistency(format!("{what}: exact {exact}, numeric {num:e}, rel err {err:e}")));
                }
            }
            return Ok(resampled);
        }
    })
}

/// Default case counts of the eight suites.
pub const DEFAULT_CASES: [usize; 8] = [1, 200, 100, 50, 1000, 200, 50, 20];

/// All suites; `cases` overrides every count except the single square case.
pub fn run_all(seed: u64, cases: Option<usize>) -> Vec<SuiteReport> {
    let c = |k: usize| cases.unwrap_or(DEFAULT_CASES[k]);
    vec![
        suite_square(),
        suite_univariate(seed, c(1)),
        suite_binomial(seed, c(2)),
        suite_mixed_volume(seed, c(3)),
        suite_symbol(seed, c(4)),
        suite_residue(seed, c(5)),
        suite_degree(seed, c(6)),
        suite_numeric(seed, c(7)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let a = gen::univariate(&mut rng(7, 1));
        let b = gen::univariate(&mut rng(7, 1));
        assert_eq!(a, b);
        let q = gen::unimodular(&mut rng(3, 0), 4);
        assert_eq!(determinant(&q).abs(), BigInt::from(1));
    }

    #[test]
    fn small_suites_pass() {
        for r in run_all(11, Some(3)) {
            assert!(r.ok(), "{}: {:?}", r.name, r.failures);
        }
    }
}
