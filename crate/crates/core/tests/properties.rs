use proptest::prelude::*;

use orbitrank::bruhat_order::{leq_bruhat, rank_matrix};
use orbitrank::matrix_rep::{Matrix, Realization};
use orbitrank::orbit_analysis::minor;
use orbitrank::signed_perm::bfs_length_oracle;
use orbitrank::{CartanType, CycloElement, GroupTag, LaurentPoly, RootSystem, SignedPermutation};

fn cyclo() -> impl Strategy<Value = CycloElement> {
    (-6i64..=6, -6i64..=6, -6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d, q)| {
        let z = CycloElement::zeta();
        let mut x = CycloElement::rational(a, q);
        let mut p = z.clone();
        for k in [b, c, d] {
            x = &x + &(&CycloElement::integer(k) * &p);
            p = &p * &z;
        }
        x
    })
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((cyclo(), -3i32..=3), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(LaurentPoly::zero(), |acc, (c, e)| &acc + &LaurentPoly::monomial(c, e))
    })
}

fn signed_perm(tag: GroupTag, n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        move |(mut images, signs)| {
            if tag != GroupTag::A {
                for (x, neg) in images.iter_mut().zip(&signs) {
                    if *neg {
                        *x = -*x;
                    }
                }
            }
            if tag == GroupTag::D && images.iter().filter(|x| **x < 0).count() % 2 == 1 {
                images[0] = -images[0];
            }
            SignedPermutation::new(tag, images).unwrap()
        },
    )
}

fn any_perm() -> impl Strategy<Value = SignedPermutation> {
    prop_oneof![
        (2usize..=6).prop_flat_map(|n| signed_perm(GroupTag::A, n)),
        (1usize..=5).prop_flat_map(|n| signed_perm(GroupTag::BC, n)),
        (2usize..=5).prop_flat_map(|n| signed_perm(GroupTag::D, n)),
    ]
}

proptest! {
    #[test]
    fn cyclo_field(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a.inverse().unwrap() * &a).is_one());
        }
    }

    #[test]
    fn laurent_valuation_is_additive(p in laurent(), q in laurent()) {
        let pq = &p * &q;
        match (p.valuation(), q.valuation()) {
            (Some(u), Some(v)) => prop_assert_eq!(pq.valuation(), Some(u + v)),
            _ => prop_assert!(pq.is_zero()),
        }
        prop_assert_eq!(pq.eval_at_one(), &p.eval_at_one() * &q.eval_at_one());
    }

    #[test]
    fn text_round_trip(w in any_perm()) {
        let back = SignedPermutation::parse(w.tag(), &w.to_text()).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn length_matches_bfs(w in any_perm()) {
        prop_assert_eq!(w.length(), bfs_length_oracle(&w));
        prop_assert_eq!(w.length(), w.inverse().length());
    }

    #[test]
    fn bruhat_is_antisymmetric_and_bounded(pair in (2usize..=4).prop_flat_map(|n| (signed_perm(GroupTag::D, n), signed_perm(GroupTag::D, n)))) {
        let (v, w) = pair;
        let id = SignedPermutation::identity(v.n(), GroupTag::D);
        prop_assert!(leq_bruhat(&id, &v).unwrap());
        if leq_bruhat(&v, &w).unwrap() {
            prop_assert!(v.length() <= w.length());
            prop_assert!(rank_matrix(&v).leq(&rank_matrix(&w)));
            if leq_bruhat(&w, &v).unwrap() {
                prop_assert_eq!(v, w);
            }
        }
    }

    #[test]
    fn minor_is_alternating_and_multilinear(entries in prop::collection::vec(-4i64..=4, 49), c in cyclo()) {
        let real = Realization::new(RootSystem::new(CartanType::B, 3).unwrap());
        let mut x: Matrix<CycloElement> = Matrix::zeros(7);
        for (k, v) in entries.iter().enumerate() {
            x.set(k / 7, k % 7, CycloElement::integer(*v));
        }
        let labels = real.labels();
        let cols = [1, 0, -2];
        let d = minor(&x, labels, &[3, -1, 2], &cols).unwrap();
        prop_assert_eq!(minor(&x, labels, &[-1, 3, 2], &cols).unwrap(), -&d);
        let row = labels.at(3);
        let mut scaled = x.clone();
        for col in 0..7 {
            scaled.set(row, col, &c * x.get(row, col));
        }
        prop_assert_eq!(minor(&scaled, labels, &[3, -1, 2], &cols).unwrap(), &c * &d);
    }
}
