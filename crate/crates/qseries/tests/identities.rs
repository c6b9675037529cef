use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use tcorelab_qseries::*;

type C5 = Cyclotomic5<BigInt>;
type F4 = FourthRoot<BigInt>;
type L = Laurent<BigInt>;

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Euler's pentagonal theorem, summed directly.
fn pentagonal(order: usize) -> IntSeries {
    let mut terms = vec![(0usize, int(1))];
    for k in 1i64.. {
        let g1 = (k * (3 * k - 1) / 2) as usize;
        if g1 >= order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        terms.push((g1, int(sign)));
        terms.push(((k * (3 * k + 1) / 2) as usize, int(sign)));
    }
    Series::from_terms(order, terms)
}

#[test]
fn euler_product_is_pentagonal() {
    let e = poch_inf(&int(1), 1, 1, 1, 500).unwrap();
    assert_eq!(e, pentagonal(500));
    let p = partition_series::<BigInt>(101);
    assert_eq!(p.coeff(100), &int(190_569_292));
    assert!(p.times(&e.truncate(101)).eq_upto(&Series::one(101), 101));
}

#[test]
fn triangular_product_to_order_1000() {
    let lhs = Product::<BigInt>::new()
        .plain(4, 4, 1)
        .factor(int(-1), 1, 2, 1)
        .expand(1000)
        .unwrap();
    assert_eq!(lhs, triangular_sum(1000));
    // middle member of the chain: (q⁴,-q³,-q;q⁴)_∞ and Σ q^{2n²+n}
    let mid = Product::<BigInt>::new()
        .plain(4, 4, 1)
        .factor(int(-1), 3, 4, 1)
        .factor(int(-1), 1, 4, 1)
        .expand(1000)
        .unwrap();
    assert_eq!(mid, lhs);
    let mut terms = Vec::new();
    for n in -30i64..=30 {
        let e = 2 * n * n + n;
        terms.push((e as usize, int(1)));
    }
    assert_eq!(Series::from_terms(1000, terms), lhs);
}

#[test]
fn triple_product_symbolic_and_signed() {
    let z = L::var_pow(2, 1);
    let zi = L::var_pow(2, -1);
    assert_eq!(theta_jtp(&z, &zi, 100), theta_jtp_product(&z, &zi, 100).unwrap());
    for v in [1, -1] {
        let c = int(v);
        assert_eq!(theta_jtp(&c, &c, 100), theta_jtp_product(&c, &c, 100).unwrap());
    }
}

#[test]
fn triple_product_at_xi() {
    // (q²ξ², q²/ξ², q²; q²)_∞ = Σ (-1)^m q^{2T_m} ξ^{-2m} (1 - ξ^{4m+2})/(1 - ξ²)
    let order = 60;
    let lhs = Product::<C5>::new()
        .factor(C5::xi_pow(2), 2, 2, 1)
        .factor(C5::xi_pow(-2), 2, 2, 1)
        .plain(2, 2, 1)
        .expand(order)
        .unwrap();
    let mut terms = Vec::new();
    for m in 0i64..20 {
        let e = (m * (m + 1)) as usize;
        // (1 - ξ^{2(2m+1)})/(1 - ξ²) = Σ_{k=0}^{2m} ξ^{2k}
        let quotient = (0..=2 * m).fold(C5::zero(), |acc, k| acc.plus(&C5::xi_pow(2 * k)));
        let sign = if m % 2 == 0 { 1 } else { -1 };
        terms.push((e, quotient.times(&C5::xi_pow(-2 * m)).scaled(sign)));
    }
    assert_eq!(lhs, Series::from_terms(order, terms));
}

#[test]
fn ramanujan_best() {
    let p = partition_series::<BigInt>(150);
    let sifted = p.sift(5, 4).unwrap().truncate(30);
    let rhs = Product::<BigInt>::new()
        .plain(5, 5, 5)
        .plain(1, 1, -6)
        .expand(30)
        .unwrap()
        .scale(&int(5));
    assert_eq!(sifted, rhs);
    let p40 = partition_series::<BigInt>(200).sift(5, 4).unwrap();
    assert_eq!(p40.order(), 40);
    assert!(p40.coeffs().iter().all(|c| Zero::is_zero(&(c % 5u32))));
}

#[test]
fn five_core_generating_function() {
    let g = Product::<BigInt>::new()
        .plain(5, 5, 5)
        .plain(1, 1, -1)
        .expand(10)
        .unwrap();
    assert_eq!(g.coeff(4), &int(5));
    assert_eq!(g.coeff(0), &int(1));
}

fn small_int() -> impl Strategy<Value = BigInt> {
    (-5i64..=5).prop_map(BigInt::from)
}

fn c5() -> impl Strategy<Value = C5> {
    prop::array::uniform5(small_int()).prop_map(C5::from_coeffs)
}

fn f4() -> impl Strategy<Value = F4> {
    prop::array::uniform4(small_int()).prop_map(F4::from_coeffs)
}

fn laurent() -> impl Strategy<Value = L> {
    prop::collection::vec((prop::array::uniform3(-2i32..=2), small_int()), 0..5).prop_map(|ts| {
        ts.into_iter()
            .fold(L::zero(), |acc, (e, c)| acc.plus(&L::monomial(e, c)))
    })
}

fn check_axioms<R: Ring>(a: &R, b: &R, c: &R) -> std::result::Result<(), TestCaseError> {
    prop_assert_eq!(a.plus(b), b.plus(a));
    prop_assert_eq!(a.times(b), b.times(a));
    prop_assert_eq!(a.plus(b).plus(c), a.plus(&b.plus(c)));
    prop_assert_eq!(a.times(b).times(c), a.times(&b.times(c)));
    prop_assert_eq!(a.times(&b.plus(c)), a.times(b).plus(&a.times(c)));
    prop_assert_eq!(a.minus(a), R::zero());
    prop_assert_eq!(a.times(&R::one()), a.clone());
    prop_assert!(a.plus(&a.negated()).is_zero());
    Ok(())
}

proptest! {
    #[test]
    fn cyclotomic_axioms(a in c5(), b in c5(), c in c5()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn fourth_root_axioms(a in f4(), b in f4(), c in f4()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn laurent_axioms(a in laurent(), b in laurent(), c in laurent()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn composite_axioms(a in c5(), b in f4(), c in c5()) {
        let lift = |x: &C5| Cyclotomic5::from_coeffs(x.coeffs().clone().map(F4::embed));
        let bb = Cyclotomic5::<F4>::embed(b);
        check_axioms(&lift(&a), &bb, &lift(&c))?;
    }

    #[test]
    fn cyclotomic_zero_iff_constant(v in prop::array::uniform5(small_int())) {
        let all_equal = v.iter().all(|x| x == &v[0]);
        prop_assert_eq!(C5::from_coeffs(v).is_zero(), all_equal);
    }

    #[test]
    fn series_inverse(v in prop::collection::vec(small_int(), 1..30), sign in prop::bool::ANY) {
        let mut v = v;
        v[0] = int(if sign { 1 } else { -1 });
        let s = Series::from_coeffs(v);
        let n = s.order();
        prop_assert_eq!(s.times(&s.inverse().unwrap()), Series::one(n));
    }

    #[test]
    fn binomial_round_trip(v in prop::collection::vec(small_int(), 1..30), a in small_int(), k in 1usize..6) {
        let s = Series::from_coeffs(v);
        prop_assert_eq!(s.mul_binomial(&a, k).div_binomial(&a, k).unwrap(), s);
    }
}
