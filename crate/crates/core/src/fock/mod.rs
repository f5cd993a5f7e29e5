//! Fock-space vectors and a direct-expansion oracle for character values.
//!
//! Everything here is computed by expanding exponentials to the finite order
//! forced by the target z-power and the degree of the input vector, then
//! pairing. None of it depends on [`crate::mnrule`].

mod vector;

pub use vector::{inner, Alphabet, FockVector, Monomial};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::partitions::Partition;
use crate::{ColoredPattern, Rational, RationalFunctionQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("vectors live in different alphabets")]
    AlphabetMismatch,
    #[error("channel {0} out of range")]
    ChannelOutOfRange(usize),
    #[error("weight mismatch: label has weight {label}, class has size {class}")]
    WeightMismatch { label: u32, class: u32 },
    #[error("expected a vector in the f1 alphabet")]
    ExpectedF1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Create,
    Annihilate,
}

/// The three vertex operators used by the oracle, by their half weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// `exp(Σ p_n z^n / n) exp(-Σ ∂_n z^{-n})`
    Schur,
    /// `exp(Σ (q^n-1)/n p_n z^n) exp(-Σ q^{-n} ∂_n z^{-n})` on `f_1`
    HallLittlewood,
    /// `exp(-Σ (1-q^{-n})/n p_n z^n) exp(Σ ∂_n z^{-n})` on `f_1`
    DualHallLittlewood,
}

impl VertexKind {
    pub fn weight(self, mode: Mode, n: u32) -> RationalFunctionQ {
        let n_i = n as i64;
        let inv_n = RationalFunctionQ::constant(Rational::new(1.into(), n_i.into()));
        let one = RationalFunctionQ::one();
        match (self, mode) {
            (VertexKind::Schur, Mode::Create) => inv_n,
            (VertexKind::Schur, Mode::Annihilate) => -one,
            (VertexKind::HallLittlewood, Mode::Create) => {
                &(&RationalFunctionQ::q_pow(n_i) - &one) * &inv_n
            }
            (VertexKind::HallLittlewood, Mode::Annihilate) => -RationalFunctionQ::q_pow(-n_i),
            (VertexKind::DualHallLittlewood, Mode::Create) => {
                -(&(&one - &RationalFunctionQ::q_pow(-n_i)) * &inv_n)
            }
            (VertexKind::DualHallLittlewood, Mode::Annihilate) => one,
        }
    }
}

/// `Π w(λ_i) / Π m_i!`, the coefficient of `p_λ` (or `∂_λ`) in the
/// exponential's homogeneous piece.
fn exp_coefficient<F>(lambda: &Partition, weights: &F) -> RationalFunctionQ
where
    F: Fn(u32) -> RationalFunctionQ,
{
    let mut acc = RationalFunctionQ::one();
    for &p in lambda.parts() {
        acc = &acc * &weights(p);
    }
    for (_, m) in lambda.multiplicities() {
        let f = crate::partitions::counting::factorial(m);
        acc = acc.scale(&Rational::new(1.into(), f.into()));
    }
    acc
}

/// Applies `∂_λ` to the monomial `p_parts`; `None` if it vanishes.
fn derive_monomial(parts: &[u32], lambda: &Partition) -> Option<(Partition, i64)> {
    let mut rest = parts.to_vec();
    let mut factor = 1i64;
    for (p, a) in lambda.multiplicities() {
        let b = rest.iter().filter(|&&x| x == p).count() as i64;
        if b < a as i64 {
            return None;
        }
        for k in 0..a as i64 {
            factor *= b - k;
        }
        let mut removed = 0;
        rest.retain(|&x| {
            if x == p && removed < a {
                removed += 1;
                false
            } else {
                true
            }
        });
    }
    Some((Partition::from_parts(rest), factor))
}

/// Extracts the `z^{z_power}` coefficient of one exponential half of a
/// vertex operator and applies it to `v`.
pub fn apply_half_vertex<F>(
    v: &FockVector,
    mode: Mode,
    channel: usize,
    weights: F,
    z_power: i64,
) -> Result<FockVector, FockError>
where
    F: Fn(u32) -> RationalFunctionQ,
{
    v.check_channel(channel)?;
    let mut out = FockVector::zero(v.alphabet().clone());
    match mode {
        Mode::Create => {
            if z_power < 0 {
                return Ok(out);
            }
            let pieces: Vec<(Partition, RationalFunctionQ)> = Partition::all(z_power as u32)
                .into_iter()
                .map(|lam| {
                    let c = exp_coefficient(&lam, &weights);
                    (lam, c)
                })
                .collect();
            for (m, c) in v.terms() {
                for (lam, w) in &pieces {
                    let mut parts = m[channel].parts().to_vec();
                    parts.extend_from_slice(lam.parts());
                    parts.sort_unstable_by(|a, b| b.cmp(a));
                    let mut m2 = m.clone();
                    m2[channel] = Partition::from_parts(parts);
                    out.add_term(m2, c * w);
                }
            }
        }
        Mode::Annihilate => {
            if z_power > 0 {
                return Ok(out);
            }
            let k = (-z_power) as u32;
            if k > v.channel_degree_bound(channel) {
                return Ok(out);
            }
            let pieces: Vec<(Partition, RationalFunctionQ)> = Partition::all(k)
                .into_iter()
                .map(|lam| {
                    let c = exp_coefficient(&lam, &weights);
                    (lam, c)
                })
                .collect();
            for (m, c) in v.terms() {
                for (lam, w) in &pieces {
                    if let Some((rest, factor)) = derive_monomial(m[channel].parts(), lam) {
                        let mut m2 = m.clone();
                        m2[channel] = rest;
                        out.add_term(m2, (c * w).scale(&Rational::from_integer(factor.into())));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The `z^{z_power}` coefficient of a full vertex operator (creation half
/// to the left) applied to `v`.
pub fn apply_vertex(
    v: &FockVector,
    kind: VertexKind,
    channel: usize,
    z_power: i64,
) -> Result<FockVector, FockError> {
    v.check_channel(channel)?;
    let mut out = FockVector::zero(v.alphabet().clone());
    let bound = v.channel_degree_bound(channel) as i64;
    for k in 0..=bound {
        if z_power + k < 0 {
            continue;
        }
        let a = apply_half_vertex(v, Mode::Annihilate, channel, |n| kind.weight(Mode::Annihilate, n), -k)?;
        if a.is_zero() {
            continue;
        }
        let c = apply_half_vertex(&a, Mode::Create, channel, |n| kind.weight(Mode::Create, n), z_power + k)?;
        out = out.add(&c)?;
    }
    Ok(out)
}

/// `Π_entries S_{λ_1} ... S_{λ_l}.1` in the orbit alphabet, one channel per
/// pattern entry.
pub fn schur_vector(label: &ColoredPattern) -> FockVector {
    let alphabet = Alphabet::Orbits(label.degrees());
    let mut v = FockVector::vacuum(alphabet);
    for (ch, e) in label.entries().iter().enumerate() {
        for &part in e.partition.parts().iter().rev() {
            v = apply_vertex(&v, VertexKind::Schur, ch, part as i64).expect("channel exists");
        }
    }
    v
}

/// `Q_{μ_1} ... Q_{μ_l}.1` in the `f_1` alphabet.
pub fn hl_vector(mu: &Partition) -> FockVector {
    let mut v = FockVector::vacuum(Alphabet::F1);
    for &part in mu.parts().iter().rev() {
        v = apply_vertex(&v, VertexKind::HallLittlewood, 0, part as i64).expect("one channel");
    }
    v
}

/// `Q*_{-n}.1`, the `z^n` coefficient of the dual operator on the vacuum.
pub fn qdual_vector(n: u32) -> FockVector {
    let vac = FockVector::vacuum(Alphabet::F1);
    apply_vertex(&vac, VertexKind::DualHallLittlewood, 0, n as i64).expect("one channel")
}

/// `q^{-n} Σ_{λ⊢n} p_λ / z_λ(q)`.
pub fn qdual_closed_form(n: u32) -> FockVector {
    let mut v = FockVector::zero(Alphabet::F1);
    let scale = RationalFunctionQ::q_pow(-(n as i64));
    for lam in Partition::all(n) {
        let z = lam.z_deformed(&RationalFunctionQ::q());
        v.add_term(vec![lam], scale.checked_div(&z).expect("z_λ(q) is nonzero"));
    }
    v
}

/// Ways to give each channel of degree `degrees[c]` a size `k_c` with
/// `Σ degrees[c] * k_c = n`.
fn channel_sizes(n: u32, degrees: &[u32]) -> Vec<Vec<u32>> {
    fn go(n: u32, degrees: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        match degrees.split_first() {
            None => {
                if n == 0 {
                    out.push(cur.clone());
                }
            }
            Some((&d, rest)) => {
                for k in 0..=n / d {
                    cur.push(k);
                    go(n - k * d, rest, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(n, degrees, &mut Vec::new(), &mut out);
    out
}

fn minus_one_over_q_pow(n: u32) -> RationalFunctionQ {
    let v = RationalFunctionQ::q_pow(-(n as i64));
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `(-1/q)^n Σ p_λ̃ / Z_λ̃` over colorings of the orbits of `support` with
/// total weight `n`.
pub fn qdual_orbit_expansion(n: u32, support: &ColoredPattern) -> FockVector {
    let degrees = support.degrees();
    let mut v = FockVector::zero(Alphabet::Orbits(degrees.clone()));
    let lead = minus_one_over_q_pow(n);
    for sizes in channel_sizes(n, &degrees) {
        let mut monomials: Vec<(Monomial, BigInt)> = vec![(Vec::new(), BigInt::one())];
        for &k in &sizes {
            let mut next = Vec::new();
            for (m, z) in &monomials {
                for lam in Partition::all(k) {
                    let mut m2 = m.clone();
                    let z2 = z * lam.z();
                    m2.push(lam);
                    next.push((m2, z2));
                }
            }
            monomials = next;
        }
        for (m, z) in monomials {
            v.add_term(m, lead.scale(&Rational::new(BigInt::one(), z)));
        }
    }
    v
}

/// `(-1/q)^n Σ Π s_{(k_φ)}(φ)` over one-row colorings of the orbits of
/// `support` with total weight `n`.
pub fn qdual_row_expansion(n: u32, support: &ColoredPattern) -> FockVector {
    let degrees = support.degrees();
    let alphabet = Alphabet::Orbits(degrees.clone());
    let mut v = FockVector::zero(alphabet.clone());
    for sizes in channel_sizes(n, &degrees) {
        let mut term = FockVector::vacuum(alphabet.clone());
        for (ch, &k) in sizes.iter().enumerate() {
            term = apply_vertex(&term, VertexKind::Schur, ch, k as i64).expect("channel exists");
        }
        v = v.add(&term).expect("same alphabet");
    }
    v.scale(&minus_one_over_q_pow(n))
}

/// Image of `p_n(f_1)` restricted to the orbits of `support`.
fn f1_power_sum_image(n: u32, support: &[u32]) -> FockVector {
    let mut v = FockVector::zero(Alphabet::Orbits(support.to_vec()));
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let lead = RationalFunctionQ::from_i64(sign)
        .checked_div(&(&RationalFunctionQ::q_pow(n as i64) - &RationalFunctionQ::one()))
        .expect("n >= 1");
    for (ch, &d) in support.iter().enumerate() {
        if n % d != 0 {
            continue;
        }
        let mut m = vec![Partition::empty(); support.len()];
        m[ch] = Partition::from_parts([n / d]);
        v.add_term(m, lead.scale(&Rational::from_integer(d.into())));
    }
    v
}

/// Rewrites an `f_1` vector in the power sums of the orbits of `support`,
/// dropping every orbit outside it.
pub fn convert_f1_to_orbits(
    v: &FockVector,
    support: &ColoredPattern,
) -> Result<FockVector, FockError> {
    if *v.alphabet() != Alphabet::F1 {
        return Err(FockError::ExpectedF1);
    }
    let degrees = support.degrees();
    let alphabet = Alphabet::Orbits(degrees.clone());
    let mut images: BTreeMap<u32, FockVector> = BTreeMap::new();
    let mut out = FockVector::zero(alphabet.clone());
    for (m, c) in v.terms() {
        let mut term = FockVector::vacuum(alphabet.clone());
        for &n in m[0].parts() {
            let img = images
                .entry(n)
                .or_insert_with(|| f1_power_sum_image(n, &degrees));
            term = term.mul(img)?;
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term.scale(c))?;
    }
    Ok(out)
}

/// Character value of the label at the unipotent class `μ`, by expansion:
/// `q^{n(μ)} <schur_vector(λ̃), hl_vector(μ)>`.
pub fn oracle_char(label: &ColoredPattern, mu: &Partition) -> Result<RationalFunctionQ, FockError> {
    if label.weight() != mu.weight() {
        return Err(FockError::WeightMismatch {
            label: label.weight(),
            class: mu.weight(),
        });
    }
    let s = schur_vector(label);
    let h = convert_f1_to_orbits(&hl_vector(mu), label)?;
    let pairing = inner(&s, &h)?;
    Ok(&pairing * &RationalFunctionQ::q_pow(mu.n_stat() as i64))
}
