use std::collections::HashMap;

use super::MnError;
use crate::qfield::{KernelFactor, KernelSpec};
use crate::{ClassType, ColoredPattern, Partition, Rational, RationalFunctionQ};

fn sign_pow(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Steinberg character on an arbitrary class type:
/// `(-1)^{n - Σ l(μ̃(f))} q^{n(μ̃)}` on semisimple classes, else 0.
pub fn steinberg_value(class: &ClassType) -> RationalFunctionQ {
    if !class.is_semisimple() {
        return RationalFunctionQ::zero();
    }
    let e = class.weight() as u64 + class.total_length() as u64;
    RationalFunctionQ::q_pow(class.n_stat() as i64).scale(&Rational::from_integer(sign_pow(e).into()))
}

/// Green's degree formula:
/// `Π_{i≤n}(q^i-1) Π_φ q_φ^{n(λ')} / Π_{x∈λ}(q_φ^{h(x)}-1)`, `q_φ = q^{|φ|}`.
pub fn degree(label: &ColoredPattern) -> RationalFunctionQ {
    let one = RationalFunctionQ::one();
    let mut num = RationalFunctionQ::one();
    for i in 1..=label.weight() {
        num = &num * &(&RationalFunctionQ::q_pow(i as i64) - &one);
    }
    let mut den = RationalFunctionQ::one();
    for e in label.entries() {
        let d = e.degree as i64;
        let conj_n = e.partition.conjugate().n_stat() as i64;
        num = &num * &RationalFunctionQ::q_pow(d * conj_n);
        for h in e.partition.hooks() {
            den = &den * &(&RationalFunctionQ::q_pow(d * h as i64) - &one);
        }
    }
    num.checked_div(&den).expect("hook factors are nonzero")
}

fn hall_pairs(r: usize) -> impl Iterator<Item = KernelFactor> {
    (0..r).flat_map(move |i| (i + 1..r).map(move |j| KernelFactor::HallPair { i, j, degree: 1 }))
}

/// `1 - (-w)^d z` as a binomial factor.
fn row_factor(w: usize, z: usize, d: u32) -> KernelFactor {
    KernelFactor::Binomial {
        w,
        z,
        sign: -sign_pow(d as u64),
        w_pow: d,
        z_pow: 1,
    }
}

fn kernel_coeff(spec: KernelSpec, w_exps: &[i64], z_exps: &[i64]) -> Result<RationalFunctionQ, MnError> {
    let series = spec.series::<Rational>()?;
    let mut target = w_exps.to_vec();
    target.extend_from_slice(z_exps);
    Ok(series.coeff(&target)?)
}

/// `χ^{(m)(φ)}` at `μ`, `|φ| = d`: the coefficient of `z^m w^μ` in
/// `q^{n(μ)} Π_{i<j} (w_i-w_j)/(w_i-q^{-1}w_j) Π_i [1-(-w_i)^d z]`.
pub fn single_row_value(m: u32, d: u32, mu: &Partition) -> Result<RationalFunctionQ, MnError> {
    if d > 0 && m * d == mu.weight() && (mu.len() as u32) < m {
        // z^m needs m distinct w_i
        return Ok(RationalFunctionQ::zero());
    }
    corollary_rows_value(&[(d, m)], mu)
}

/// `χ^{λ(φ)}` at the regular unipotent class `(n)`, `|φ| = d`: the
/// coefficient of `z^n w^λ` in `Π_{i<j}(1 - w_j/w_i) Π_i [1 - (-z)^d w_i]`.
pub fn single_column_value(lambda: &Partition, d: u32, n: u32) -> Result<RationalFunctionQ, MnError> {
    if d == 0 || lambda.weight() * d != n {
        return Err(MnError::WeightMismatch {
            label: lambda.weight() * d,
            class: n,
        });
    }
    let r = lambda.len();
    let mut factors: Vec<KernelFactor> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| KernelFactor::PlainPair { i, j }))
        .collect();
    for i in 0..r {
        factors.push(KernelFactor::Binomial {
            w: i,
            z: 0,
            sign: -sign_pow(d as u64),
            w_pow: 1,
            z_pow: d,
        });
    }
    let w: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    let spec = KernelSpec {
        w_count: r,
        z_caps: vec![n as i64],
        grade_cap: KernelSpec::grade_of(&w),
        factors,
    };
    kernel_coeff(spec, &w, &[n as i64])
}

/// Value on `μ` of the label with one single row `(m)` per `(d, m)` entry,
/// all on distinct orbits: the coefficient of `Π z_e^{m_e} w^μ` in
/// `q^{n(μ)} Π_{i<j}(w_i-w_j)/(w_i-q^{-1}w_j) Π_i Π_e [1-(-w_i)^{d_e} z_e]`.
pub fn corollary_rows_value(rows: &[(u32, u32)], mu: &Partition) -> Result<RationalFunctionQ, MnError> {
    let weight: u32 = rows.iter().map(|&(d, m)| d * m).sum();
    if rows.iter().any(|&(d, _)| d == 0) || weight != mu.weight() {
        return Err(MnError::WeightMismatch {
            label: weight,
            class: mu.weight(),
        });
    }
    let r = mu.len();
    let mut factors: Vec<KernelFactor> = hall_pairs(r).collect();
    for i in 0..r {
        for (e, &(d, _)) in rows.iter().enumerate() {
            factors.push(row_factor(i, e, d));
        }
    }
    let w: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
    let z: Vec<i64> = rows.iter().map(|&(_, m)| m as i64).collect();
    let spec = KernelSpec {
        w_count: r,
        z_caps: z.clone(),
        grade_cap: KernelSpec::grade_of(&w),
        factors,
    };
    let c = kernel_coeff(spec, &w, &z)?;
    Ok(&c * &RationalFunctionQ::q_pow(mu.n_stat() as i64))
}

/// Nonnegative integer vectors of length `len` summing to `total`.
fn weak_compositions(total: i64, len: usize) -> Vec<Vec<i64>> {
    if total < 0 {
        return Vec::new();
    }
    if len == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `C^m_α(q)`: the coefficient of `w^α` in
/// `e_m(w_1^d, ..., w_r^d) Π_{i<j} (w_i-w_j)/(w_i-q^{-1}w_j)`, expanded in
/// nonnegative powers of `w_j/w_i`.
///
/// Splitting `e_m` by whether `w_1^d` is used gives
/// `C^m_α = Σ_{|β|=d-α_1} c(β) C^{m-1}_{α'-β} + Σ_{|β|=-α_1} c(β) C^m_{α'-β}`
/// over `β ≥ 0`, with `c(β) = q^{-|β|}(1-q)^{#{β_j>0}}` and `α' = (α_2, ...)`.
pub fn c_alpha(alpha: &[i64], m: u32, d: u32) -> RationalFunctionQ {
    let mut memo = HashMap::new();
    c_alpha_rec(alpha, m, d as i64, &mut memo)
}

fn c_alpha_rec(
    alpha: &[i64],
    m: u32,
    d: i64,
    memo: &mut HashMap<(Vec<i64>, u32), RationalFunctionQ>,
) -> RationalFunctionQ {
    if alpha.is_empty() {
        return if m == 0 {
            RationalFunctionQ::one()
        } else {
            RationalFunctionQ::zero()
        };
    }
    let total: i64 = alpha.iter().sum();
    if total != m as i64 * d || m as usize > alpha.len() {
        return RationalFunctionQ::zero();
    }
    let key = (alpha.to_vec(), m);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let rest = &alpha[1..];
    let one_minus_q = &RationalFunctionQ::one() - &RationalFunctionQ::q();
    let mut acc = RationalFunctionQ::zero();
    let mut branch = |shift: i64, m2: u32, acc: &mut RationalFunctionQ| {
        for beta in weak_compositions(shift, rest.len()) {
            let sub: Vec<i64> = rest.iter().zip(&beta).map(|(a, b)| a - b).collect();
            let inner = c_alpha_rec(&sub, m2, d, memo);
            if inner.is_zero() {
                continue;
            }
            let nz = beta.iter().filter(|&&b| b > 0).count() as i32;
            let c = &RationalFunctionQ::q_pow(-shift) * &one_minus_q.pow(nz).expect("nonnegative");
            *acc = &*acc + &(&c * &inner);
        }
    };
    if m > 0 {
        branch(d - alpha[0], m - 1, &mut acc);
    }
    branch(-alpha[0], m, &mut acc);
    memo.insert(key, acc.clone());
    acc
}

/// [`c_alpha`] by direct series expansion, for cross-checking.
pub fn c_alpha_series(alpha: &[i64], m: u32, d: u32) -> Result<RationalFunctionQ, MnError> {
    let r = alpha.len();
    if r == 0 {
        return Ok(c_alpha(alpha, m, d));
    }
    let grade = KernelSpec::grade_of(alpha);
    if grade < 0 || alpha.iter().sum::<i64>() != (m * d) as i64 {
        return Ok(RationalFunctionQ::zero());
    }
    let mut factors: Vec<KernelFactor> = hall_pairs(r).collect();
    for i in 0..r {
        factors.push(KernelFactor::Binomial {
            w: i,
            z: 0,
            sign: 1,
            w_pow: d,
            z_pow: 1,
        });
    }
    let spec = KernelSpec {
        w_count: r,
        z_caps: vec![m as i64],
        grade_cap: grade,
        factors,
    };
    kernel_coeff(spec, alpha, &[m as i64])
}
