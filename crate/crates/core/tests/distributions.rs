mod common;

use num_bigint::BigInt;
use wreath_mahonian::algebra::BiPoly;
use wreath_mahonian::distributions::{
    eulerian, maj_a_enumerate, maj_a_recurrence, verify_identity, EnumConfig, EulerianMethod,
    Identity, MahonianSpec, VerifyParams,
};
use wreath_mahonian::perm::LOrder;

fn from_oracle(counts: std::collections::BTreeMap<(u32, u32), u64>) -> BiPoly {
    BiPoly::from_terms(counts)
}

fn p(terms: &[((u32, u32), i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().copied())
}

#[test]
fn frozen_values_from_brute_force() {
    // Values first computed by the recursive oracle, then frozen here.
    let b2 = p(&[((0, 0), 1), ((1, 1), 3), ((1, 2), 3), ((2, 3), 1)]);
    assert_eq!(from_oracle(common::maj_a(2, &[1], 2)), b2);
    let s3 = p(&[((0, 0), 1), ((1, 1), 2), ((1, 2), 2), ((2, 3), 1)]);
    assert_eq!(from_oracle(common::maj_a(1, &[], 3)), s3);

    let cfg = EnumConfig::default();
    assert_eq!(
        maj_a_enumerate(&LOrder::new(2, &[1]).unwrap(), 2, &cfg).unwrap(),
        b2
    );
    assert_eq!(maj_a_recurrence(2, 1, 2).unwrap(), b2);
    assert_eq!(maj_a_recurrence(1, 0, 3).unwrap(), s3);
    assert_eq!(s3.eval_q1(), p(&[((0, 0), 1), ((1, 0), 4), ((2, 0), 1)]));
}

#[test]
fn enumeration_and_recurrence_match_the_oracle() {
    let cfg = EnumConfig::default();
    for a in 1..=3u32 {
        for l in common::subsets(a) {
            for n in 0..=4u32 {
                let oracle = from_oracle(common::maj_a(a, &l, n));
                let order = LOrder::new(a, &l).unwrap();
                assert_eq!(maj_a_enumerate(&order, n as usize, &cfg).unwrap(), oracle);
                assert_eq!(
                    maj_a_recurrence(a, l.len() as u32, n as usize).unwrap(),
                    oracle
                );
            }
        }
    }
}

#[test]
fn structural_properties() {
    for a in 1..=4u32 {
        for ell in 0..=a {
            for n in 0..=6u32 {
                let poly = maj_a_recurrence(a, ell, n as usize).unwrap();
                let total = BigInt::from(a).pow(n) * (1..=n).map(BigInt::from).product::<BigInt>();
                assert_eq!(poly.eval(&1.into(), &1.into()), total);
                assert_eq!(
                    poly.coeff_t(0),
                    BiPoly::constant(BigInt::from(a - ell).pow(n))
                );
                assert_eq!(
                    poly.coeff_t(n),
                    BiPoly::monomial(BigInt::from(ell).pow(n), 0, n * (n + 1) / 2)
                );
                let deg = poly.degree_t().unwrap();
                assert!(deg <= n);
                if n > 0 {
                    assert_eq!(deg == n, ell >= 1, "a={a} ell={ell} n={n}");
                }
            }
        }
    }
}

#[test]
fn eulerian_methods_agree_with_specialisation() {
    let cfg = EnumConfig::default();
    for a in 1..=3 {
        for ell in 0..=a {
            for n in 0..=5 {
                let spec = MahonianSpec::new(a, ell, n).unwrap();
                let expected = maj_a_recurrence(a, ell, n).unwrap().eval_q1();
                for method in EulerianMethod::ALL {
                    assert_eq!(
                        eulerian(&spec, method, &cfg).unwrap(),
                        expected,
                        "{method:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn classical_eulerian_numbers() {
    // A(7,k) = 1, 120, 1191, 2416, 1191, 120, 1
    let spec = MahonianSpec::new(1, 0, 7).unwrap();
    let poly = eulerian(&spec, EulerianMethod::Recurrence, &EnumConfig::default()).unwrap();
    let coeffs: Vec<i64> = (0..7)
        .map(|s| poly.coeff(s, 0).try_into().unwrap())
        .collect();
    assert_eq!(coeffs, vec![1, 120, 1191, 2416, 1191, 120, 1]);
}

#[test]
fn type_b_eulerian_numbers() {
    // Hyperoctahedral Eulerian numbers for n = 3: 1, 23, 23, 1.
    let spec = MahonianSpec::new(2, 1, 3).unwrap();
    let poly = eulerian(&spec, EulerianMethod::Enumerate, &EnumConfig::default()).unwrap();
    assert_eq!(
        poly,
        p(&[((0, 0), 1), ((1, 0), 23), ((2, 0), 23), ((3, 0), 1)])
    );
}

#[test]
fn tilde_holds_beyond_two_colors() {
    for a in 1..=4 {
        for ell in 0..=a {
            for n in 0..=3 {
                let spec = MahonianSpec::new(a, ell, n).unwrap();
                let r = verify_identity(Identity::Tilde, &VerifyParams::new(spec)).unwrap();
                assert!(r.holds, "{r:?}");
            }
        }
    }
}

#[test]
fn l_independence_with_explicit_sets() {
    let cfg = EnumConfig::default();
    let a = 4;
    for n in 0..=3 {
        let by_size: Vec<BiPoly> = (0..=a)
            .map(|ell| maj_a_recurrence(a, ell, n).unwrap())
            .collect();
        for order in LOrder::all_subsets(a) {
            assert_eq!(
                maj_a_enumerate(&order, n, &cfg).unwrap(),
                by_size[order.ell() as usize]
            );
        }
    }
}
