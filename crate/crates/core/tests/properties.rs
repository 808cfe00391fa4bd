use newton_roots::exactalg::rational::{int, rat};
use newton_roots::exactalg::{determinant, toric_jacobian, ExponentMatrix, ExponentVector, LaurentPolynomial, Monomial, Rational};
use newton_roots::flags::{all_coefficients, degree_by_flags, pyramid_map, vertex_covering};
use newton_roots::formulas::{bernstein_number, minkowski_of, product_over_roots, sum_over_roots, SystemInstance};
use newton_roots::oracles::{
    binomial_aggregate, degree_by_homology, lattice_length, smith_normal_form, univariate_aggregate, Mode,
};
use newton_roots::parse::{format_laurent, parse_laurent};
use newton_roots::polytope::{int_point, minkowski_sum, mixed_volume_ie, MinkowskiSystem, Polytope};
use newton_roots::residue::{wedge_log_residue, TruncatedSeries, WeightFunctional};
use newton_roots::symbol::sign_exponent_b;
use newton_roots::verify::{self, gen};
use num_traits::Zero;
use proptest::prelude::*;

fn poly(n: usize, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, n), -5i64..=5, 1i64..=4), 0..=max_terms).prop_map(
        move |ts| {
            let terms = ts.into_iter().map(|(e, c, d)| (ExponentVector::new(e), rat(c, d)));
            LaurentPolynomial::from_terms(n, terms).unwrap()
        },
    )
}

fn nonzero_poly(n: usize, max_terms: usize) -> impl Strategy<Value = LaurentPolynomial> {
    poly(n, max_terms).prop_filter("nonzero", |f| !f.is_zero())
}

fn points(n: usize, k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), k)
}

fn hull(pts: &[Vec<i64>]) -> Polytope {
    Polytope::convex_hull(&pts.iter().map(|p| int_point(p)).collect::<Vec<_>>()).unwrap()
}

fn developed(seed: u64, n: usize) -> SystemInstance {
    gen::developed_system(&mut verify::rng(seed, 100), n, 9).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(f in poly(2, 4), g in poly(2, 4), h in poly(2, 4)) {
        prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&g.add(&h).unwrap()).unwrap(), f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap());
    }

    #[test]
    fn initial_form_is_multiplicative(f in nonzero_poly(2, 4), g in nonzero_poly(2, 4), w in prop::collection::vec(-3i64..=3, 2)) {
        let w: Vec<Rational> = w.into_iter().map(int).collect();
        let lhs = f.mul(&g).unwrap().initial_form(&w).unwrap();
        let rhs = f.initial_form(&w).unwrap().mul(&g.initial_form(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobian_is_alternating(f in poly(2, 3), g in poly(2, 3)) {
        let j = toric_jacobian(&[f.clone(), g.clone()]).unwrap();
        prop_assert_eq!(toric_jacobian(&[g, f]).unwrap(), j.neg());
    }

    #[test]
    fn newton_polytope_of_product(f in nonzero_poly(2, 4), g in nonzero_poly(2, 4)) {
        let fg = f.mul(&g).unwrap().newton_polytope().unwrap();
        let sum = minkowski_sum(&[f.newton_polytope().unwrap(), g.newton_polytope().unwrap()]).unwrap();
        prop_assert_eq!(fg.vertices(), sum.vertices());
    }

    #[test]
    fn euler_relation(n in 1usize..=3, seed in any::<u64>()) {
        let p = gen::polytope(&mut verify::rng(seed, 0), n, false);
        let f = p.f_vector();
        let d = p.dim() as i64;
        let chi: i64 = (0..d as usize).map(|k| if k % 2 == 0 { f[k] as i64 } else { -(f[k] as i64) }).sum();
        prop_assert_eq!(chi, 1 - if d % 2 == 0 { 1 } else { -1 });
    }

    #[test]
    fn hull_is_idempotent(pts in points(3, 1..=8)) {
        let p = hull(&pts);
        let q = Polytope::convex_hull(p.vertices()).unwrap();
        prop_assert_eq!(p.vertices(), q.vertices());
        prop_assert_eq!(p.facets(), q.facets());
        prop_assert_eq!(p.f_vector(), q.f_vector());
    }

    #[test]
    fn decomposition_dimensions(a in points(2, 2..=5), b in points(2, 2..=5)) {
        let ms = MinkowskiSystem::new(vec![hull(&a), hull(&b)]).unwrap();
        prop_assert!(ms.check_decomposition());
        for (g, face) in ms.total().faces().iter().enumerate() {
            let parts = ms.decompose(g);
            let dims: usize = parts.iter().zip(ms.summands()).map(|(&k, s)| s.face(k).dim).sum();
            prop_assert!(dims >= face.dim);
            if face.dim == 0 {
                prop_assert_eq!(dims, 0);
            }
        }
    }

    #[test]
    fn minkowski_total_is_newton_polytope_of_product(f in nonzero_poly(2, 4), g in nonzero_poly(2, 4)) {
        let ms = minkowski_of(&[f.clone(), g.clone()]).unwrap();
        let product = f.mul(&g).unwrap().newton_polytope().unwrap();
        prop_assert_eq!(ms.total().vertices(), product.vertices());
    }

    #[test]
    fn mixed_volume_symmetric_and_translation_invariant(a in points(2, 1..=5), b in points(2, 1..=5), t in prop::collection::vec(-3i64..=3, 2)) {
        let (pa, pb) = (hull(&a), hull(&b));
        let mv = mixed_volume_ie(&[pa.clone(), pb.clone()]).unwrap();
        prop_assert_eq!(&mixed_volume_ie(&[pb.clone(), pa.clone()]).unwrap(), &mv);
        let moved = pa.translated(&int_point(&t)).unwrap();
        prop_assert_eq!(mixed_volume_ie(&[moved, pb]).unwrap(), mv);
    }

    #[test]
    fn sign_term_is_f2_multilinear(rows in (1usize..=4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-5i64..=5, n), n + 1))) {
        let n = rows[0].len();
        let b = sign_exponent_b(&ExponentMatrix::new(rows.iter().map(|r| ExponentVector::new(r.clone())).collect()).unwrap());
        // The nonzero F₂ relations among the rows mod 2.
        let rels: Vec<u32> = (1u32..1 << (n + 1))
            .filter(|mask| (0..n).all(|k| (0..=n).filter(|&i| mask >> i & 1 == 1).map(|i| rows[i][k]).sum::<i64>() % 2 == 0))
            .collect();
        let expected = if rels.len() == 1 { ((rels[0].count_ones() + 1) % 2) as u8 } else { 0 };
        prop_assert_eq!(b, expected);
    }

    #[test]
    fn text_round_trip(f in poly(3, 6)) {
        prop_assert_eq!(parse_laurent(&format_laurent(&f), 3).unwrap(), f);
    }

    #[test]
    fn snf_reconstruction(a in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 3)) {
        prop_assume!(!determinant(&a).is_zero());
        let r = smith_normal_form(&a).unwrap();
        let mul = |x: &[Vec<i64>], y: &[Vec<i64>]| -> Vec<Vec<i64>> {
            x.iter().map(|row| (0..3).map(|j| (0..3).map(|k| row[k] * y[k][j]).sum()).collect()).collect()
        };
        prop_assert_eq!(mul(&mul(&r.u, &r.s), &r.v), a);
        prop_assert_eq!(determinant(&r.u).magnitude().clone(), 1u32.into());
        prop_assert_eq!(determinant(&r.v).magnitude().clone(), 1u32.into());
    }

    #[test]
    fn binomial_product_is_multiplicative(seed in any::<u64>(), e1 in prop::collection::vec(-3i64..=3, 2), e2 in prop::collection::vec(-3i64..=3, 2)) {
        let (a, d) = gen::binomial(&mut verify::rng(seed, 0), 2);
        let m1 = Monomial::new(rat(2, 3), ExponentVector::new(e1)).unwrap();
        let m2 = Monomial::new(int(-5), ExponentVector::new(e2)).unwrap();
        let p = |m: &Monomial| binomial_aggregate(&a, &d, m, Mode::Product).unwrap();
        prop_assert_eq!(p(&m1.mul(&m2).unwrap()), p(&m1) * p(&m2));
    }

    #[test]
    fn univariate_root_count(seed in any::<u64>()) {
        let f = gen::univariate(&mut verify::rng(seed, 0));
        let count = univariate_aggregate(&f, &LaurentPolynomial::one(1), Mode::Sum).unwrap();
        prop_assert_eq!(count, int(lattice_length(&f).unwrap() as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn flag_degree_is_independent_of_reference(seed in any::<u64>(), n in 2usize..=3) {
        let sys = developed(seed, n);
        let ms = sys.minkowski();
        for v in 0..ms.total().vertices().len() {
            let pm = pyramid_map(ms, v).unwrap();
            let psi = pm.face_map().unwrap();
            let d = degree_by_homology(&psi).unwrap();
            for flag in pm.target.flags() {
                prop_assert_eq!(degree_by_flags(&psi, &flag).unwrap(), d);
            }
            prop_assert_eq!(sys.coefficients()[v], d);
        }
    }

    #[test]
    fn coefficient_is_skew_in_labels(seed in any::<u64>(), n in 2usize..=3, i in 0usize..3, j in 0usize..3) {
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let sys = developed(seed, n);
        let ms = sys.minkowski();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        for (v, &c) in sys.coefficients().iter().enumerate() {
            let cov = vertex_covering(ms, v).unwrap();
            prop_assert_eq!(cov.relabeled(&perm).coefficient(ms.total()).unwrap(), -c);
        }
    }

    #[test]
    fn simple_vertices_have_unit_coefficient(seed in any::<u64>(), n in 2usize..=3) {
        let sys = developed(seed, n);
        let ms = sys.minkowski();
        for (v, &c) in sys.coefficients().iter().enumerate() {
            let cov = vertex_covering(ms, v).unwrap();
            let simple = cov.facets.len() == n
                && cov.d_sets.iter().all(|d| d.len() == 1)
                && (0..n).all(|a| (0..a).all(|b| cov.d_sets[a] != cov.d_sets[b]));
            if simple {
                prop_assert_eq!(c.abs(), 1);
            }
        }
    }

    #[test]
    fn symbol_suite_on_seeds(seed in any::<u64>()) {
        let r = verify::suite_symbol(seed, 4);
        prop_assert!(r.ok(), "{:?}", r.failures);
    }

    #[test]
    fn residue_suite_on_seeds(seed in any::<u64>()) {
        let r = verify::suite_residue(seed, 4);
        prop_assert!(r.ok(), "{:?}", r.failures);
    }

    #[test]
    fn regular_forms_have_no_residue(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = verify::rng(seed, 0);
        let w: Vec<i64> = (0..n).map(|k| 1 + (seed >> k) as i64 % 3).collect();
        let weight = WeightFunctional { w: w.clone(), min_step: 1 };
        // Exponents in the closed positive orthant lie in the cone of w.
        let cone = |rng: &mut verify::Rng64| gen::exponent(rng, n, 0, 2);
        let mut terms = Vec::new();
        for _ in 0..4 {
            terms.push((cone(&mut rng), gen::rational(&mut rng, 5, 3)));
        }
        let f = TruncatedSeries::exact(&LaurentPolynomial::from_terms(n, terms).unwrap(), weight.clone());
        let one = TruncatedSeries::one(n, weight.clone());
        let units: Vec<(Monomial, TruncatedSeries)> = (0..n)
            .map(|_| {
                let mut a = cone(&mut rng);
                if a.is_zero() {
                    a = ExponentVector::unit(n, 0);
                }
                (Monomial::new(int(1), a).unwrap(), one.clone())
            })
            .collect();
        // du₁∧…∧duₙ is dsᵢ/sᵢ⁰.
        let r = wedge_log_residue(&units, &vec![0; n], Some(40), Some(&f)).unwrap();
        prop_assert_eq!(r, Rational::zero());
    }

    #[test]
    fn product_multiplicative_and_sum_linear(seed in any::<u64>(), e1 in prop::collection::vec(-2i64..=2, 2), e2 in prop::collection::vec(-2i64..=2, 2), g in poly(2, 3), h in poly(2, 3)) {
        let sys = developed(seed, 2);
        let m1 = Monomial::new(rat(3, 2), ExponentVector::new(e1)).unwrap();
        let m2 = Monomial::new(int(-2), ExponentVector::new(e2)).unwrap();
        let p = |m: &Monomial| product_over_roots(m, &sys).unwrap();
        prop_assert_eq!(p(&m1.mul(&m2).unwrap()), p(&m1) * p(&m2));
        let s = |f: &LaurentPolynomial| sum_over_roots(f, &sys).unwrap();
        let k = rat(-7, 3);
        prop_assert_eq!(s(&g.add(&h.scale(&k)).unwrap()), s(&g) + k * s(&h));
    }

    #[test]
    fn outputs_are_coordinate_covariant(seed in any::<u64>(), f0 in poly(2, 3), e in prop::collection::vec(-2i64..=2, 2)) {
        let sys = developed(seed, 2);
        let q = gen::unimodular(&mut verify::rng(seed, 1), 2);
        let moved = SystemInstance::new(sys.system().iter().map(|f| f.substitute(&q)).collect()).unwrap();
        let m = Monomial::new(rat(5, 2), ExponentVector::new(e)).unwrap();
        let mq = Monomial::new(m.coeff().clone(), m.exp().times_matrix(&q)).unwrap();
        prop_assert_eq!(product_over_roots(&mq, &moved).unwrap(), product_over_roots(&m, &sys).unwrap());
        prop_assert_eq!(sum_over_roots(&f0.substitute(&q), &moved).unwrap(), sum_over_roots(&f0, &sys).unwrap());
        prop_assert_eq!(all_coefficients(moved.minkowski()).unwrap().len(), sys.coefficients().len());
    }

    #[test]
    fn bernstein_is_symmetric(seed in any::<u64>(), n in 2usize..=3) {
        let sys = developed(seed, n);
        let mut eqs = sys.system().to_vec();
        eqs.reverse();
        let rev = SystemInstance::new(eqs).unwrap();
        prop_assert_eq!(bernstein_number(&rev).unwrap(), bernstein_number(&sys).unwrap());
    }
}
