//! Property tests for the arithmetic foundation: field axioms, ring axioms
//! for polynomials, order axioms against a brute-force oracle, and the Euler
//! identity for homogeneous polynomials.

use fpcore::{MonomialOrder, Polynomial, PrimeField, Ring, Rng, Scalar};
use proptest::prelude::*;

fn field() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn field_axioms(a in 0u32..32003, b in 0u32..32003, c in 0u32..32003) {
        let f = field();
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn inverse_agrees_with_fermat(a in 1u32..32003) {
        let f = field();
        prop_assert_eq!(f.inv(a).unwrap(), f.pow(a, 32003 - 2));
    }
}

/// Draws a random polynomial with up to `terms` terms of degree at most 3.
fn arb_poly(ring: Ring, terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec(
        (prop::collection::vec(0u32..3, n), 0u32..32003),
        0..=terms,
    )
    .prop_map(move |raw| {
        Polynomial::from_terms(
            &ring,
            raw.iter()
                .map(|(e, c)| (ring.monomial(e), *c as Scalar))
                .collect::<Vec<_>>(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn polynomial_ring_axioms(
        (f, g, h) in Just(Ring::standard(32003, 3).unwrap()).prop_flat_map(|r| {
            (arb_poly(r.clone(), 4), arb_poly(r.clone(), 4), arb_poly(r, 4))
        })
    ) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.sub(&f), Polynomial::zero(f.ring()));

        // deg(fg) = deg f + deg g over a field (no zero divisors).
        if let (Some(df), Some(dg)) = (f.degree(), g.degree()) {
            prop_assert_eq!(f.mul(&g).degree(), Some(df + dg));
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(
        (f, g) in Just(Ring::standard(101, 3).unwrap()).prop_flat_map(|r| {
            (arb_poly(r.clone(), 4), arb_poly(r, 4))
        }),
        pt in prop::collection::vec(0u32..101, 3)
    ) {
        let fld = PrimeField::new(101).unwrap();
        prop_assert_eq!(f.add(&g).eval(&pt), fld.add(f.eval(&pt), g.eval(&pt)));
        prop_assert_eq!(f.mul(&g).eval(&pt), fld.mul(f.eval(&pt), g.eval(&pt)));
    }
}

/// Brute-force comparison oracles for the three orders.
fn oracle_cmp(order: MonomialOrder, a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let deg = |e: &[u8]| e.iter().map(|&x| x as u32).sum::<u32>();
    let grevlex = |a: &[u8], b: &[u8]| -> Ordering {
        deg(a).cmp(&deg(b)).then_with(|| {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // Larger trailing exponent means smaller monomial.
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        })
    };
    match order {
        MonomialOrder::GrevLex => grevlex(a, b),
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::Block { first } => grevlex(&a[..first], &b[..first])
            .then_with(|| grevlex(&a[first..], &b[first..])),
    }
}

#[test]
fn packed_keys_match_oracle_through_degree_four() {
    for (nvars, order) in [
        (3, MonomialOrder::GrevLex),
        (3, MonomialOrder::Lex),
        (4, MonomialOrder::GrevLex),
        (4, MonomialOrder::Block { first: 2 }),
        (4, MonomialOrder::Block { first: 1 }),
    ] {
        let ring = Ring::standard(32003, nvars)
            .unwrap()
            .with_order(order)
            .unwrap();
        let mut monos = Vec::new();
        for d in 0..=4u16 {
            monos.extend(ring.monomials_of_degree(d));
        }
        for a in &monos {
            for b in &monos {
                let ae: Vec<u8> = (0..nvars).map(|i| a.exp(i)).collect();
                let be: Vec<u8> = (0..nvars).map(|i| b.exp(i)).collect();
                assert_eq!(
                    ring.key(a).cmp(&ring.key(b)),
                    oracle_cmp(order, &ae, &be),
                    "order {order:?} disagrees with oracle on {ae:?} vs {be:?}"
                );
            }
        }
    }
}

#[test]
fn euler_identity_for_homogeneous_polynomials() {
    // For f homogeneous of weighted degree d: sum_i w_i x_i df/dx_i = d*f.
    let cases = [
        (Ring::standard(32003, 3).unwrap(), 4u16),
        (Ring::standard(32003, 4).unwrap(), 3u16),
        (
            Ring::new(
                32003,
                vec!["u".into(), "v".into(), "w".into()],
                vec![1, 2, 3],
                MonomialOrder::GrevLex,
            )
            .unwrap(),
            6u16,
        ),
    ];
    for (ring, d) in cases {
        let mut rng = Rng::new(42);
        for _ in 0..5 {
            let f = fpcore::random_homogeneous(&ring, d, &mut rng);
            let mut lhs = Polynomial::zero(&ring);
            for i in 0..ring.nvars() {
                let xi = Polynomial::var(&ring, i);
                let term = xi.mul(&f.derivative(i)).scale(ring.weights()[i]);
                lhs = lhs.add(&term);
            }
            assert_eq!(lhs, f.scale(d as u32), "Euler identity failed in {ring} at degree {d}");
        }
    }
}

#[test]
fn substitution_composes() {
    // Substituting variables-for-variables then evaluating equals evaluating
    // the composite directly.
    let r = Ring::standard(101, 2).unwrap();
    let mut rng = Rng::new(9);
    let f = fpcore::random_homogeneous(&r, 3, &mut rng);
    let u = fpcore::random_linear_form(&r, &mut rng);
    let v = fpcore::random_linear_form(&r, &mut rng);
    let g = f.substitute(&r, &[u.clone(), v.clone()]);
    for pt in [[1, 2], [50, 99], [0, 3]] {
        let inner = [u.eval(&pt), v.eval(&pt)];
        assert_eq!(g.eval(&pt), f.eval(&inner));
    }
}
