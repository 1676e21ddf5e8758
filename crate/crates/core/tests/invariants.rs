use std::collections::BTreeSet;

use proptest::prelude::*;

use excitation::bijections::{dyck_family, dyck_from_sequences, dyck_stats, rsk, DyckWord};
use excitation::enumeration::{enumerate_dyck, enumerate_pp, macmahon_count};
use excitation::ideal::{
    generator, leading_monomial_set, quotient_normal_form, ExcitationRing, GeneratorLabel, IdealPresentation,
};
use excitation::poly::{rational, ExponentMatrix, Polynomial};
use excitation::stdmono::{enumerate_standard, is_standard, width};

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// `sum over orderings s of X[r1,c_s1] X[r2,c_s2] X[r3,c_s3]` for unsorted index triples.
fn permanent_sum(rows: [usize; 3], cols: [usize; 3], dims: (usize, usize)) -> Polynomial {
    let mut total = Polynomial::zero(dims);
    for perm in PERMS {
        let mut e = ExponentMatrix::zeros(dims.0, dims.1);
        for slot in 0..3 {
            let (r, c) = (rows[slot] - 1, cols[perm[slot]] - 1);
            e.set(r, c, e.get(r, c) + 1);
        }
        total = total.add(&Polynomial::monomial(e, rational(1))).unwrap();
    }
    total
}

#[test]
fn generators_are_symmetric_under_relabeling() {
    let (k, n) = (3, 3);
    for (label, g) in IdealPresentation::new(k + n, k).unwrap().generators() {
        for pr in PERMS {
            for pc in PERMS {
                let rows = [label.rows[pr[0]], label.rows[pr[1]], label.rows[pr[2]]];
                let cols = [label.cols[pc[0]], label.cols[pc[1]], label.cols[pc[2]]];
                assert_eq!(&permanent_sum(rows, cols, (k, n)), g, "{label}");
                let relabeled = GeneratorLabel::new(rows, cols, k, n).unwrap();
                assert_eq!(&generator(&relabeled, k, n), g);
            }
        }
    }
}

#[test]
fn leading_monomials_are_the_width_three_cubics() {
    for (m, k) in [(4, 2), (5, 2), (6, 3), (5, 1)] {
        let (rows, cols) = (k, m - k);
        let cells = rows * cols;
        let mut cubics = BTreeSet::new();
        for code in 0..4u64.pow(cells as u32) {
            let e: Vec<u32> = (0..cells)
                .map(|i| (code / 4u64.pow(i as u32) % 4) as u32)
                .collect();
            if e.iter().sum::<u32>() != 3 {
                continue;
            }
            let mat = ExponentMatrix::from_flat(rows, cols, e).unwrap();
            if width(&mat).width == 3 {
                cubics.insert(mat);
            }
        }
        assert_eq!(leading_monomial_set(m, k).unwrap(), cubics, "({m},{k})");
    }
}

#[test]
fn standard_bases_are_transpose_dual() {
    for m in 2..=7 {
        for k in 1..m {
            let basis = enumerate_standard(m, k).unwrap();
            let dual: BTreeSet<ExponentMatrix> = enumerate_standard(m, m - k).unwrap().into_iter().collect();
            let image: BTreeSet<ExponentMatrix> = basis.iter().map(ExponentMatrix::transpose).collect();
            assert_eq!(image, dual, "({m},{k})");
            assert!(basis.iter().all(|b| b.entries().iter().all(|&x| x <= 2)));
            let top = basis.iter().map(ExponentMatrix::degree).max().unwrap();
            assert_eq!(top as usize, 2 * k.min(m - k));
        }
    }
}

#[test]
fn rsk_first_row_is_width_on_small_matrices() {
    for code in 0..4u32.pow(6) {
        let e = (0..6).map(|i| code / 4u32.pow(i) % 4).collect();
        let mat = ExponentMatrix::from_flat(2, 3, e).unwrap();
        let (p, _) = rsk(&mat);
        assert_eq!(p.shape().part(0), width(&mat).width);
        assert_eq!(is_standard(&mat), width(&mat).width <= 2);
    }
}

#[test]
fn dyck_statistics_conditions() {
    for m in 1..=7 {
        for k in 1..=m {
            for w in dyck_family(m + 1, k + 1).unwrap() {
                let s = dyck_stats(&w);
                assert_eq!(s.up.len(), k + 1);
                assert!(s.up.windows(2).all(|x| x[0] <= x[1]));
                assert!(s.down.windows(2).all(|x| x[0] <= x[1]));
                assert!(s.up.iter().zip(&s.down).all(|(u, d)| u >= d));
                assert_eq!((s.up[k], s.down[k]), (m - k, m - k));
                assert_eq!(dyck_from_sequences(&s.up, &s.down).unwrap(), w);
            }
        }
    }
}

#[test]
fn macmahon_is_symmetric() {
    for a in 0..=4u64 {
        for b in 0..=4u64 {
            for c in 0..=4u64 {
                let x = macmahon_count(a, b, c);
                for perm in PERMS {
                    let v = [a, b, c];
                    assert_eq!(macmahon_count(v[perm[0]], v[perm[1]], v[perm[2]]), x);
                }
            }
        }
    }
    let boxes = enumerate_pp(3, 2, 2).unwrap();
    let transposed: BTreeSet<_> = boxes.iter().map(|p| p.transpose().rows()).collect();
    let swapped: BTreeSet<_> = enumerate_pp(2, 3, 2).unwrap().iter().map(|p| p.rows()).collect();
    assert_eq!(transposed, swapped);
}

#[test]
fn example_word_is_enumerated() {
    let words = enumerate_dyck(5, 2).unwrap();
    assert_eq!(words.len(), 20);
    let w: DyckWord = "uuduudddud".parse().unwrap();
    assert!(words.contains(&w));
}

/// Multiplier terms as `(flat exponents, coefficient)`.
type Multiplier = Vec<(Vec<u32>, i64)>;

/// Random `sum q_i g_i` data: generator index and multiplier terms.
fn combination() -> impl Strategy<Value = Vec<(usize, Multiplier)>> {
    let term = (prop::collection::vec(0u32..3, 4), -4i64..=4);
    prop::collection::vec((0usize..16, prop::collection::vec(term, 1..3)), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn combinations_of_generators_vanish(combo in combination()) {
        let (m, k) = (4, 2);
        let ring = ExcitationRing::new(m, k).unwrap();
        let gens = ring.ideal().polynomials();
        let mut p = Polynomial::zero(ring.dims());
        for (idx, terms) in combo {
            let mut q = Polynomial::zero(ring.dims());
            for (exp, c) in terms {
                let e = ExponentMatrix::from_flat(2, 2, exp).unwrap();
                q = q.add(&Polynomial::monomial(e, rational(c))).unwrap();
            }
            p = p.add(&gens[idx].multiply(&q).unwrap()).unwrap();
        }
        prop_assert!(quotient_normal_form(&p, m, k).unwrap().is_zero());
        let r = ring.normal_form(&p.add(&Polynomial::one(ring.dims())).unwrap()).unwrap();
        prop_assert_eq!(r, Polynomial::one(ring.dims()));
    }
}
