use super::*;
use crate::det::{det2_golden_abp, det_polynomial};
use crate::poly::{parse_poly, rat};
use crate::sampling::{random_point, seeded};
use rand::Rng;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn scalar(x: i64) -> QMatrix {
    QMatrix::from_i64(&[&[x]])
}

fn one_plus_x() -> Abp {
    let layers = (0..2)
        .map(|j| Layer::univariate(j, [(0, scalar(1)), (1, scalar(1))]))
        .collect();
    Abp::new(
        AbpKind::General,
        names(&["x1", "x2"]),
        layers,
        vec![rat(1)],
        vec![rat(1)],
    )
    .unwrap()
}

fn shift_pair(kind: AbpKind) -> Abp {
    let up = QMatrix::from_i64(&[&[0, 1], &[0, 0]]);
    let down = QMatrix::from_i64(&[&[0, 0], &[1, 0]]);
    let layers = vec![
        Layer::univariate(0, [(0, QMatrix::identity(2)), (1, up)]),
        Layer::univariate(1, [(0, QMatrix::identity(2)), (1, down)]),
    ];
    Abp::new(
        kind,
        names(&["x1", "x2"]),
        layers,
        vec![rat(1), rat(0)],
        vec![rat(1), rat(0)],
    )
    .unwrap()
}

#[test]
fn width_one_product() {
    let abp = one_plus_x();
    for (a, b) in [(2, 3), (-1, 7), (0, 0)] {
        assert_eq!(abp.eval(&[rat(a), rat(b)]).unwrap(), rat((1 + a) * (1 + b)));
    }
    let v = names(&["x1", "x2"]);
    assert_eq!(
        abp.expand(&Limits::default()).unwrap(),
        parse_poly("x1*x2 + x1 + x2 + 1", &v).unwrap()
    );
    assert!(abp.eval(&[rat(1)]).is_err());
}

#[test]
fn det2_golden_abp_values() {
    let abp = det2_golden_abp();
    assert_eq!(abp.eval(&[rat(1), rat(0), rat(0), rat(1)]).unwrap(), rat(1));
    assert_eq!(
        abp.eval(&[rat(1), rat(2), rat(3), rat(4)]).unwrap(),
        rat(-2)
    );
    assert_eq!(abp.expand(&Limits::default()).unwrap(), det_polynomial(2));
    assert!(abp.check_kind());
}

#[test]
fn permutations() {
    let abp = det2_golden_abp();
    assert_eq!(abp.permute_order(&[0, 1, 2, 3]).unwrap(), abp);
    let reversed = abp.permute_order(&[3, 2, 1, 0]).unwrap();
    assert_eq!(reversed.order(), &[3, 2, 1, 0]);
    assert_eq!(
        reversed.expand(&Limits::default()).unwrap(),
        det_polynomial(2)
    );
    assert!(abp.permute_order(&[0, 0, 1, 2]).is_err());
    assert!(abp.permute_order(&[0, 1, 2]).is_err());

    // (I + A x1)(I + B x2) with AB = e11, BA = e22: 1 + x1 x2 versus 1
    let v = names(&["x1", "x2"]);
    let general = shift_pair(AbpKind::General);
    assert_eq!(
        general.expand(&Limits::default()).unwrap(),
        parse_poly("1 + x1*x2", &v).unwrap()
    );
    let swapped = general.permute_order(&[1, 0]).unwrap();
    assert_eq!(swapped.expand(&Limits::default()).unwrap(), Poly::one(2));
}

#[test]
fn kind_checks() {
    let d1 = QMatrix::diagonal(vec![rat(1), rat(2)]);
    let d2 = QMatrix::diagonal(vec![rat(-3), rat(5)]);
    let layers = vec![
        Layer::univariate(0, [(0, QMatrix::identity(2)), (1, d1)]),
        Layer::univariate(1, [(0, QMatrix::identity(2)), (2, d2)]),
    ];
    let u = vec![rat(1), rat(1)];
    for kind in [AbpKind::Diagonal, AbpKind::Commutative, AbpKind::General] {
        let abp = Abp::new(
            kind,
            names(&["x", "y"]),
            layers.clone(),
            u.clone(),
            u.clone(),
        )
        .unwrap();
        assert!(abp.check_kind(), "{kind}");
    }
    assert!(det2_golden_abp().check_kind());
    assert!(!shift_pair(AbpKind::Commutative).check_kind());
    assert!(!shift_pair(AbpKind::Diagonal).check_kind());
    assert!(shift_pair(AbpKind::General).check_kind());
}

#[test]
fn shape_validation() {
    let bad_width = vec![
        Layer::univariate(0, [(0, QMatrix::identity(3))]),
        Layer::univariate(1, [(0, QMatrix::identity(2))]),
    ];
    assert!(Abp::new(
        AbpKind::General,
        names(&["x", "y"]),
        bad_width,
        vec![rat(1); 2],
        vec![rat(1); 2]
    )
    .is_err());
    let missing = vec![Layer::univariate(0, [(0, QMatrix::identity(2))])];
    assert!(Abp::new(
        AbpKind::General,
        names(&["x", "y"]),
        missing,
        vec![rat(1); 2],
        vec![rat(1); 2]
    )
    .is_err());
    let overlap = vec![Layer::linear(vec![0, 1], []), Layer::linear(vec![1], [])];
    assert!(Abp::new(
        AbpKind::SetMultilinear,
        names(&["x", "y"]),
        overlap,
        vec![rat(1)],
        vec![rat(1)]
    )
    .is_err());
}

fn random_general_abp(seed: u64) -> Abp {
    let mut rng = seeded(seed);
    let n = rng.gen_range(1..=3);
    let w = rng.gen_range(1..=3);
    let small = |rng: &mut crate::sampling::SeededRng| -> QMatrix {
        QMatrix::from_rows(
            (0..w)
                .map(|_| (0..w).map(|_| rat(rng.gen_range(-2..=2))).collect())
                .collect(),
        )
    };
    let layers = (0..n)
        .map(|j| {
            let deg = rng.gen_range(0..=2);
            Layer::univariate(
                j,
                (0..=deg).map(|k| (k, small(&mut rng))).collect::<Vec<_>>(),
            )
        })
        .collect();
    let u = (0..w).map(|_| rat(rng.gen_range(-2..=2))).collect();
    let v = (0..w).map(|_| rat(rng.gen_range(-2..=2))).collect();
    let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
    let abp = Abp::new(AbpKind::General, names, layers, u, v).unwrap();
    let order = crate::sampling::random_permutation(&mut rng, n);
    abp.with_order(order).unwrap()
}

#[test]
fn expansion_agrees_with_evaluation() {
    for seed in 0..40 {
        let abp = random_general_abp(seed);
        let f = abp.expand(&Limits::default()).unwrap();
        let mut rng = seeded(seed + 1000);
        for _ in 0..3 {
            let p = random_point(&mut rng, abp.arity());
            assert_eq!(f.eval(&p).unwrap(), abp.eval(&p).unwrap());
        }
    }
}

#[test]
fn expansion_respects_the_term_cap() {
    let limits = Limits {
        max_expand_terms: 2,
        ..Limits::default()
    };
    assert!(matches!(
        one_plus_x().expand(&limits),
        Err(Error::CapExceeded {
            flag: "max-terms",
            ..
        })
    ));
}

#[test]
fn text_roundtrip() {
    for seed in 0..10 {
        let abp = random_general_abp(seed);
        assert_eq!(Abp::parse(&abp.to_string()).unwrap(), abp);
    }
    let golden = det2_golden_abp();
    let text = golden.to_string();
    assert!(text.starts_with("abp v1\nkind: commutative\nwidth: 6\nvars: x1_1 x1_2 x2_1 x2_2\n"));
    assert_eq!(Abp::parse(&text).unwrap(), golden);

    let sm = Abp::new(
        AbpKind::SetMultilinear,
        names(&["a", "b", "c"]),
        vec![
            Layer::linear(vec![0, 2], [(0, scalar(2)), (2, scalar(-1))]),
            Layer::linear(vec![1], [(1, scalar(3))]),
        ],
        vec![rat(1)],
        vec![crate::poly::frac(1, 2)],
    )
    .unwrap()
    .with_order(vec![1, 0])
    .unwrap();
    let text = sm.to_string();
    assert!(text.contains("parts: a,c b\norder: 1 0\n"));
    assert_eq!(Abp::parse(&text).unwrap(), sm);
}

#[test]
fn parse_errors() {
    assert!(Abp::parse("").is_err());
    assert!(Abp::parse("abp v2\n").is_err());
    let good = one_plus_x().to_string();
    assert!(Abp::parse(&good.replace("kind: general", "kind: weird")).is_err());
    assert!(Abp::parse(&good.replace("layer x1 power 1", "layer z power 1")).is_err());
    let truncated: String = good
        .lines()
        .take(good.lines().count() - 1)
        .collect::<Vec<_>>()
        .join("\n");
    assert!(Abp::parse(&truncated).is_err());
}
