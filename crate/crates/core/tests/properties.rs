use proptest::prelude::*;

use excitation::bijections::{
    dyck_family, dyck_to_pp, gt_to_ssyt, matrix_to_pp, pp_to_dyck, pp_to_matrix, pp_to_tableaux, rsk,
    rsk_inverse, ssyt_to_gt, Partition,
};
use excitation::fock::{
    apply_to_reference, sl2_action, slater_basis, LinearOperator, Sl2Generator, StateVector,
};
use excitation::ideal::{ExcitationRing, IdealPresentation};
use excitation::poly::{
    divide, parse_polynomial, polynomial_from_json, polynomial_to_json, rational, ExponentMatrix, Polynomial,
    Rational,
};
use excitation::stdmono::{is_standard, is_standard_by_ascent, width};

const DIMS: (usize, usize) = (2, 3);

fn monomial(dims: (usize, usize), max: u32) -> impl Strategy<Value = ExponentMatrix> {
    prop::collection::vec(0..=max, dims.0 * dims.1)
        .prop_map(move |e| ExponentMatrix::from_flat(dims.0, dims.1, e).unwrap())
}

fn polynomial(dims: (usize, usize), max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(dims, max_exp), -6i64..=6, 1i64..=3), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                dims,
                terms
                    .into_iter()
                    .map(|(m, n, d)| (m, Rational::new(n.into(), d.into()))),
            )
            .unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(p in polynomial(DIMS, 2, 4), q in polynomial(DIMS, 2, 4), r in polynomial(DIMS, 2, 4)) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.multiply(&q).unwrap(), q.multiply(&p).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().add(&r).unwrap(), p.add(&q.add(&r).unwrap()).unwrap());
        prop_assert_eq!(
            p.multiply(&q).unwrap().multiply(&r).unwrap(),
            p.multiply(&q.multiply(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(
            p.multiply(&q.add(&r).unwrap()).unwrap(),
            p.multiply(&q).unwrap().add(&p.multiply(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.add(&Polynomial::zero(DIMS)).unwrap(), p.clone());
        prop_assert_eq!(p.multiply(&Polynomial::one(DIMS)).unwrap(), p.clone());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn terms_are_sorted_and_nonzero(p in polynomial(DIMS, 3, 8)) {
        prop_assert!(p.terms().windows(2).all(|w| w[0].0 > w[1].0));
        prop_assert!(p.terms().iter().all(|(_, c)| *c != rational(0)));
    }

    #[test]
    fn leading_term_is_multiplicative(p in polynomial(DIMS, 2, 4), q in polynomial(DIMS, 2, 4)) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let (cp, mp) = p.leading_term().unwrap();
        let (cq, mq) = q.leading_term().unwrap();
        let (c, m) = p.multiply(&q).unwrap().leading_term().unwrap();
        prop_assert_eq!(m, mp.mul(&mq).unwrap());
        prop_assert_eq!(c, cp * cq);
    }

    #[test]
    fn text_and_json_round_trip(p in polynomial(DIMS, 3, 6)) {
        prop_assert_eq!(parse_polynomial(&p.to_string(), DIMS).unwrap(), p.clone());
        prop_assert_eq!(polynomial_from_json(&polynomial_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn division_witnesses_membership(p in polynomial((2, 2), 4, 6)) {
        let ideal = IdealPresentation::new(4, 2).unwrap();
        let gens = ideal.polynomials();
        let div = divide(&p, &gens).unwrap();
        prop_assert!(div.verify(&p, &gens).unwrap());
        for (t, _) in div.remainder.terms() {
            for g in &gens {
                prop_assert!(!g.leading_monomial().unwrap().divides(t));
            }
        }
    }

    #[test]
    fn ideal_elements_reduce_to_zero(h in polynomial((2, 3), 2, 3), idx in 0usize..40) {
        let ring = ExcitationRing::new(5, 2).unwrap();
        let gens = ring.ideal().polynomials();
        let g = &gens[idx % gens.len()];
        let p = g.multiply(&h).unwrap();
        prop_assert!(ring.normal_form(&p).unwrap().is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_standard(p in polynomial((2, 2), 4, 6)) {
        let ring = ExcitationRing::new(4, 2).unwrap();
        let r = ring.normal_form(&p).unwrap();
        prop_assert_eq!(ring.normal_form(&r).unwrap(), r.clone());
        for (t, _) in r.terms() {
            prop_assert!(is_standard(t));
        }
    }

    #[test]
    fn rsk_round_trip(mat in monomial((3, 4), 3)) {
        let (p, q) = rsk(&mat);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(p.shape().part(0), width(&mat).width);
        prop_assert_eq!(rsk_inverse(&p, &q).unwrap(), mat);
    }

    #[test]
    fn gelfand_tsetlin_round_trip(mat in monomial((3, 3), 3)) {
        let (p, _) = rsk(&mat);
        let g = ssyt_to_gt(&p, 3).unwrap();
        prop_assert_eq!(gt_to_ssyt(&g).rows().to_vec(), p.rows().to_vec());
    }

    #[test]
    fn plane_partition_round_trip(mat in monomial((3, 2), 3)) {
        let pp = matrix_to_pp(&mat).unwrap();
        prop_assert_eq!(pp.bound(), width(&mat).width);
        prop_assert_eq!(pp_to_matrix(&pp).unwrap(), mat.clone());
        let (q, p) = pp_to_tableaux(&pp).unwrap();
        let (p0, q0) = rsk(&mat);
        prop_assert_eq!((p.rows(), q.rows()), (p0.rows(), q0.rows()));
        prop_assert_eq!(matrix_to_pp(&mat.transpose()).unwrap(), pp.transpose());
    }

    #[test]
    fn conjugation_is_an_involution(parts in prop::collection::vec(0u32..6, 0..6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::from_padded(&parts).unwrap();
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn dyck_round_trip(m in 2usize..=7, k_seed in 0usize..7, idx in 0usize..1000) {
        let k = 1 + k_seed % m;
        let family = dyck_family(m + 1, k + 1).unwrap();
        let w = &family[idx % family.len()];
        let pp = dyck_to_pp(w, m, k).unwrap();
        prop_assert_eq!(pp.dims(), (k, m - k));
        prop_assert_eq!(&pp_to_dyck(&pp, m, k).unwrap(), w);
        prop_assert_eq!(w.to_string().parse::<excitation::bijections::DyckWord>().unwrap(), w.clone());
    }

    #[test]
    fn operators_are_linear(a in prop::collection::vec(-3i64..=3, 15), b in prop::collection::vec(-3i64..=3, 15)) {
        let basis = slater_basis(3, 2).unwrap();
        let state = |cs: &[i64]| {
            StateVector::from_components(3, 2, basis.iter().zip(cs).map(|(v, &c)| (*v, rational(c)))).unwrap()
        };
        let (x, y) = (state(&a), state(&b));
        for g in Sl2Generator::ALL {
            let op = sl2_action(g, 3, 2).unwrap();
            let lhs = op.apply(&x.add(&y).unwrap()).unwrap();
            let rhs = op.apply(&x).unwrap().add(&op.apply(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_factors_through_the_quotient(p in polynomial((2, 2), 3, 5)) {
        let ring = ExcitationRing::new(4, 2).unwrap();
        let r = ring.normal_form(&p).unwrap();
        prop_assert_eq!(apply_to_reference(&p, 4, 2).unwrap(), apply_to_reference(&r, 4, 2).unwrap());
    }
}

/// Every matrix of shape up to 3 x 3 with entries up to 3: width at most two,
/// no triple ascent, and no leading monomial of the ideal dividing it agree.
#[test]
fn three_standardness_criteria_agree() {
    for rows in 1..=3usize {
        for cols in 1..=3usize {
            let m = rows + cols;
            let leads: Vec<ExponentMatrix> = IdealPresentation::new(m, rows)
                .unwrap()
                .polynomials()
                .iter()
                .map(|g| g.leading_monomial().unwrap().clone())
                .collect();
            let cells = rows * cols;
            for code in 0..4u32.pow(cells as u32) {
                let e = (0..cells).map(|i| code / 4u32.pow(i as u32) % 4).collect();
                let mat = ExponentMatrix::from_flat(rows, cols, e).unwrap();
                let by_width = is_standard(&mat);
                let by_ascent = is_standard_by_ascent(&mat);
                let by_leads = !leads.iter().any(|l| l.divides(&mat));
                assert_eq!(by_width, by_ascent, "{:?}", mat.to_rows());
                assert_eq!(by_width, by_leads, "{:?}", mat.to_rows());
            }
        }
    }
}

#[test]
fn sz_is_diagonal_with_spin_eigenvalues() {
    for d in 0..=6 {
        let sz = sl2_action(Sl2Generator::Sz, 3, d).unwrap();
        for v in slater_basis(3, d).unwrap() {
            let image = sz.apply(&StateVector::basis(&v)).unwrap();
            assert_eq!(image, StateVector::basis(&v).scale(&rational(v.spin_z())));
        }
    }
    assert!(LinearOperator::zero(3, 2, 2).is_zero());
}
