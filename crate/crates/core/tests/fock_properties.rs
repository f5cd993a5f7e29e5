use chartab_core::fock::{
    convert_f1_to_orbits, inner, qdual_closed_form, qdual_orbit_expansion, qdual_row_expansion,
    qdual_vector, schur_vector,
};
use chartab_core::partitions::enumerate_patterns;
use chartab_core::{Alphabet, ColoredPattern, FockVector, Partition, Rational, RationalFunctionQ};
use proptest::prelude::*;

fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..4, 0..4).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_parts(v)
    })
}

fn f1_vector() -> impl Strategy<Value = FockVector> {
    prop::collection::vec((small_partition(), -3i64..4, 0i64..3), 1..5).prop_map(|terms| {
        let mut v = FockVector::zero(Alphabet::F1);
        for (lam, c, k) in terms {
            let coeff = RationalFunctionQ::q_pow(k).scale(&Rational::from_integer(c.into()));
            v.add_term(vec![lam], coeff);
        }
        v
    })
}

fn orbit_vector() -> impl Strategy<Value = FockVector> {
    prop::collection::vec((small_partition(), small_partition(), -3i64..4), 1..5).prop_map(
        |terms| {
            let mut v = FockVector::zero(Alphabet::Orbits(vec![1, 2]));
            for (a, b, c) in terms {
                v.add_term(vec![a, b], RationalFunctionQ::from_i64(c));
            }
            v
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn power_sums_adjoint_on_f1(u in f1_vector(), v in f1_vector(), n in 1u32..4) {
        let left = inner(&u.mul_power_sum(0, n).unwrap(), &v).unwrap();
        let right = inner(&u, &v.power_sum_adjoint(0, n).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn power_sums_adjoint_on_orbits(u in orbit_vector(), v in orbit_vector(), n in 1u32..4, ch in 0usize..2) {
        let left = inner(&u.mul_power_sum(ch, n).unwrap(), &v).unwrap();
        let right = inner(&u, &v.power_sum_adjoint(ch, n).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn heisenberg_on_f1(v in f1_vector(), m in 1u32..4, n in 1u32..4) {
        // [p_n^*, p_m] = δ_{mn} n / (q^n - 1)
        let a = v.mul_power_sum(0, m).unwrap().power_sum_adjoint(0, n).unwrap();
        let b = v.power_sum_adjoint(0, n).unwrap().mul_power_sum(0, m).unwrap();
        let comm = a.sub(&b).unwrap();
        if m == n {
            let scalar = RationalFunctionQ::from_i64(n as i64)
                .checked_div(&(&RationalFunctionQ::q_pow(n as i64) - &RationalFunctionQ::one()))
                .unwrap();
            prop_assert_eq!(comm, v.scale(&scalar));
        } else {
            prop_assert!(comm.is_zero());
        }
    }

    #[test]
    fn heisenberg_on_orbits(v in orbit_vector(), m in 1u32..4, n in 1u32..4, ch in 0usize..2) {
        let a = v.mul_power_sum(ch, m).unwrap().power_sum_adjoint(ch, n).unwrap();
        let b = v.power_sum_adjoint(ch, n).unwrap().mul_power_sum(ch, m).unwrap();
        let comm = a.sub(&b).unwrap();
        if m == n {
            prop_assert_eq!(comm, v.scale(&RationalFunctionQ::from_i64(n as i64)));
        } else {
            prop_assert!(comm.is_zero());
        }
    }
}

#[test]
fn schur_vectors_are_orthonormal() {
    // Labels on one fixed set of channels: all colorings of degrees [1, 1, 2].
    let degrees = [1u32, 1, 2];
    for n in 0..=4u32 {
        let mut labels: Vec<Vec<Partition>> = vec![Vec::new()];
        for &d in &degrees {
            let mut next = Vec::new();
            for prefix in &labels {
                let used: u32 = prefix.iter().zip(&degrees).map(|(p, d)| p.weight() * d).sum();
                for k in 0..=(n - used) / d {
                    for lam in Partition::all(k) {
                        let mut v = prefix.clone();
                        v.push(lam);
                        next.push(v);
                    }
                }
            }
            labels = next;
        }
        labels.retain(|l| l.iter().zip(&degrees).map(|(p, d)| p.weight() * d).sum::<u32>() == n);
        let vectors: Vec<FockVector> = labels.iter().map(|l| channel_schur(&degrees, l)).collect();
        for (i, a) in vectors.iter().enumerate() {
            for (j, b) in vectors.iter().enumerate() {
                let ip = inner(a, b).unwrap();
                if i == j {
                    assert!(ip.is_one(), "{:?}", labels[i]);
                } else {
                    assert!(ip.is_zero(), "{:?} vs {:?}", labels[i], labels[j]);
                }
            }
        }
    }
}

/// Schur vector on a fixed channel layout, allowing empty channels.
fn channel_schur(degrees: &[u32], parts: &[Partition]) -> FockVector {
    let alphabet = Alphabet::Orbits(degrees.to_vec());
    let mut acc = FockVector::vacuum(alphabet.clone());
    for (ch, lam) in parts.iter().enumerate() {
        let single = schur_vector(&ColoredPattern::from_pairs([(degrees[ch], lam.clone())]));
        let mut lifted = FockVector::zero(alphabet.clone());
        for (m, c) in single.terms() {
            let mut full = vec![Partition::empty(); degrees.len()];
            if let Some(p) = m.first() {
                full[ch] = p.clone();
            }
            lifted.add_term(full, c.clone());
        }
        acc = acc.mul(&lifted).unwrap();
    }
    acc
}

#[test]
fn schur_vectors_of_patterns_have_unit_norm() {
    for n in 1..=4 {
        for label in enumerate_patterns(n, n) {
            let s = schur_vector(&label);
            assert!(inner(&s, &s).unwrap().is_one(), "{label}");
        }
    }
}

#[test]
fn qdual_identities() {
    let supports = [
        ColoredPattern::from_pairs([(1, Partition::from_parts([1]))]),
        ColoredPattern::from_pairs([
            (1, Partition::from_parts([1])),
            (1, Partition::from_parts([1])),
            (2, Partition::from_parts([1])),
        ]),
        ColoredPattern::from_pairs([
            (2, Partition::from_parts([1])),
            (3, Partition::from_parts([1])),
            (6, Partition::from_parts([1])),
        ]),
    ];
    for n in 0..=6 {
        let direct = qdual_vector(n);
        assert_eq!(direct, qdual_closed_form(n), "n = {n}");
        for support in &supports {
            let projected = convert_f1_to_orbits(&direct, support).unwrap();
            assert_eq!(projected, qdual_orbit_expansion(n, support), "n = {n}, {support}");
            assert_eq!(projected, qdual_row_expansion(n, support), "n = {n}, {support}");
        }
    }
}
