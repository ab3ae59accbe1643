mod common;

use itertools::Itertools;
use num_rational::BigRational;
use proptest::prelude::*;
use roabp::abp::Abp;
use roabp::construct::{
    build_commro, build_commro_general, build_diagro_from_waring, default_var_names,
    WaringDecomposition,
};
use roabp::linalg::{Limits, QMatrix};
use roabp::nisan::{nisan_matrix, nisan_width};
use roabp::partials::dpd;
use roabp::poly::{rat, Monomial, Poly};

fn arb_homogeneous() -> impl Strategy<Value = Poly> {
    (1usize..=3, 1u32..=3).prop_flat_map(|(n, d)| {
        let monomial = proptest::collection::vec(0..n, d as usize).prop_map(move |vars| {
            let mut exps = vec![0u32; n];
            for v in vars {
                exps[v] += 1;
            }
            Monomial::from_exponents(exps)
        });
        proptest::collection::vec((monomial, -4i64..=4), 1..=5)
            .prop_map(move |terms| Poly::from_terms(n, terms.into_iter().map(|(m, c)| (m, rat(c)))))
            .prop_filter("nonzero", |p| !p.is_zero())
    })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec((proptest::collection::vec(0u32..=2, n), -4i64..=4), 1..=6)
            .prop_map(move |terms| {
                Poly::from_terms(
                    n,
                    terms
                        .into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(e), rat(c))),
                )
            })
            .prop_filter("nonzero", |p| !p.is_zero())
    })
}

fn arb_point(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    proptest::collection::vec((-50i64..=50, 1i64..=7), n).prop_map(|v| {
        v.into_iter()
            .map(|(a, b)| BigRational::new(a.into(), b.into()))
            .collect()
    })
}

fn commro(f: &Poly) -> Abp {
    build_commro(f, &default_var_names(f.arity()), &Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commro_width_is_dpd_and_expands_back(f in arb_homogeneous()) {
        let abp = commro(&f);
        prop_assert_eq!(abp.width(), dpd(&f));
        prop_assert_eq!(abp.expand(&Limits::default()).unwrap(), f);
        prop_assert!(abp.check_kind());
    }

    #[test]
    fn commro_agrees_in_every_order(f in arb_homogeneous(), seed in any::<u64>()) {
        let abp = commro(&f);
        let n = f.arity();
        let mut rng = roabp::sampling::seeded(seed);
        let p = roabp::sampling::random_point(&mut rng, n);
        let want = f.eval(&p).unwrap();
        for sigma in (0..n).permutations(n) {
            prop_assert_eq!(abp.permute_order(&sigma).unwrap().eval(&p).unwrap(), want.clone());
        }
    }

    #[test]
    fn expansion_matches_evaluation(f in arb_poly(), p in arb_point(3)) {
        let abp = build_commro_general(&f, &default_var_names(f.arity()), &Limits::default()).unwrap();
        let p = &p[..f.arity()];
        prop_assert_eq!(abp.expand(&Limits::default()).unwrap().eval(p).unwrap(), abp.eval(p).unwrap());
        prop_assert_eq!(abp.eval(p).unwrap(), f.eval(p).unwrap());
        let d = f.degree().unwrap() as usize;
        prop_assert!(abp.width() <= (d + 1) * (d + 1) * dpd(&f));
    }

    #[test]
    fn emitted_text_round_trips(f in arb_poly()) {
        let abp = build_commro_general(&f, &default_var_names(f.arity()), &Limits::default()).unwrap();
        let text = abp.to_string();
        prop_assert_eq!(Abp::parse(&text).unwrap(), abp);
    }

    #[test]
    fn diagro_expands_to_the_decomposition(
        forms in proptest::collection::vec((-3i64..=3, proptest::collection::vec(-2i64..=2, 2)), 1..=3),
        d in 1u32..=3,
    ) {
        let terms: Vec<_> = forms
            .into_iter()
            .filter(|(_, a)| a.iter().any(|&x| x != 0))
            .map(|(c, a)| (rat(c), a.into_iter().map(rat).collect::<Vec<_>>()))
            .collect();
        prop_assume!(!terms.is_empty());
        let s = terms.len();
        let w = WaringDecomposition { degree: d, terms };
        let abp = build_diagro_from_waring(&w, &default_var_names(2), &Limits::default()).unwrap();
        prop_assert!(abp.width() <= s * (2 * d as usize + 1));
        prop_assert!(abp.coefficient_matrices().all(QMatrix::is_diagonal));
        prop_assert_eq!(abp.expand(&Limits::default()).unwrap(), w.expand(&Limits::default()).unwrap());
    }

    #[test]
    fn nisan_rank_is_symmetric_and_bounded(f in arb_poly(), mask in 0u8..8) {
        let n = f.arity();
        let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let t: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let a = nisan_matrix(&f, &s, &Limits::default()).unwrap();
        let b = nisan_matrix(&f, &t, &Limits::default()).unwrap();
        prop_assert_eq!(a.rank(), b.rank());
        for order in (0..n).permutations(n) {
            prop_assert!(nisan_width(&f, &order, &Limits::default()).unwrap().width <= dpd(&f));
        }
    }
}

#[test]
fn smabp_matches_cofactor_expansion() {
    use roabp::construct::build_smabp;
    use roabp::det::{det_polynomial, det_var_names};
    let mut rng = roabp::sampling::seeded(99);
    for n in 1..=4 {
        let rows: Vec<Vec<usize>> = (0..n).map(|i| (i * n..(i + 1) * n).collect()).collect();
        let abp = build_smabp(
            &det_polynomial(n),
            &det_var_names(n),
            &rows,
            &Limits::default(),
        )
        .unwrap();
        for _ in 0..3 {
            let p = roabp::sampling::random_point(&mut rng, n * n);
            let m: Vec<Vec<_>> = p.chunks(n).map(<[_]>::to_vec).collect();
            assert_eq!(abp.eval(&p).unwrap(), common::cofactor_det(&m));
        }
    }
}

#[test]
fn corpus_artifacts_pass_their_kind_checks() {
    for f in common::homogeneous_corpus() {
        assert!(commro(&f).check_kind());
    }
    for f in common::non_homogeneous_corpus() {
        let abp =
            build_commro_general(&f, &default_var_names(f.arity()), &Limits::default()).unwrap();
        assert!(abp.check_kind());
    }
}
