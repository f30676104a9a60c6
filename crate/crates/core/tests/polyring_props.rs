use num_bigint::BigInt;
use proptest::prelude::*;
use varchenko_core::modp;
use varchenko_core::{Monomial, Polynomial, Sign, VarId};

const P: u64 = modp::DEFAULT_PRIME;

fn var() -> impl Strategy<Value = VarId> {
    (0usize..3, prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]).prop_map(|(h, s)| VarId::new(h, s))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 1u32..3), 0..3).prop_map(Monomial::from_pairs)
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((monomial(), -5i64..=5), 0..5).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p = &p + &Polynomial::term(m, BigInt::from(c));
        }
        p
    })
}

fn assignment() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..P, 6)
}

fn at(values: &[u64]) -> impl Fn(VarId) -> u64 + '_ {
    move |v| values[2 * v.hyperplane + usize::from(v.sign == Sign::Minus)]
}

proptest! {
    #[test]
    fn commutative(a in polynomial(), b in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn associative(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn distributive(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn additive_inverse(a in polynomial()) {
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in polynomial(), b in polynomial(), x in assignment()) {
        let (ea, eb) = (a.eval_mod_p(at(&x), P), b.eval_mod_p(at(&x), P));
        prop_assert_eq!((&a * &b).eval_mod_p(at(&x), P), modp::mul(ea, eb, P));
        prop_assert_eq!((&a + &b).eval_mod_p(at(&x), P), modp::add(ea, eb, P));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in polynomial(), b in polynomial()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in polynomial()) {
        prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a);
    }

    #[test]
    fn leading_term_of_product(a in polynomial(), b in polynomial()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (ma, _) = a.leading_term().unwrap();
        let (mb, _) = b.leading_term().unwrap();
        let prod = &a * &b;
        prop_assert_eq!(prod.leading_term().unwrap().0, &ma.mul(mb));
    }
}
