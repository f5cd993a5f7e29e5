//! Counting polynomials in `q`.

use super::{Partition, PartitionError};
use crate::{PolyQ, Rational, RationalFunctionQ};

pub fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of Frobenius orbits of size `d` on the nontrivial-and-trivial
/// characters of `F_{q^d}^*`:
/// `N_d(q) = (1/d) Σ_{e | d} μ(d/e) (q^e - 1)`.
pub fn orbit_count(d: u32) -> Result<RationalFunctionQ, PartitionError> {
    if d == 0 {
        return Err(PartitionError::ZeroDegree);
    }
    let mut acc = PolyQ::zero();
    for e in (1..=d).filter(|e| d % e == 0) {
        let mu = mobius(d / e);
        if mu != 0 {
            let term = PolyQ::q_pow_minus_one(e as usize).scale(&Rational::from_integer(mu.into()));
            acc = &acc + &term;
        }
    }
    let inv_d = Rational::new(1.into(), (d as i64).into());
    Ok(RationalFunctionQ::from_poly(acc.scale(&inv_d)))
}

/// `x (x-1) ... (x-k+1)`
pub fn falling_factorial(x: &RationalFunctionQ, k: u32) -> RationalFunctionQ {
    (0..k)
        .map(|i| x - &RationalFunctionQ::from_i64(i as i64))
        .product()
}

pub fn factorial(k: u32) -> i64 {
    (1..=k as i64).product()
}

/// Centralizer order of a unipotent element of Jordan type `μ` in
/// `GL_{|μ|}(F_q)`: `q^{|μ| + 2n(μ)} Π_i φ_{m_i}(q^{-1})`.
pub fn centralizer_order(mu: &Partition) -> RationalFunctionQ {
    let exponent = mu.weight() as i64 + 2 * mu.n_stat() as i64;
    let t = RationalFunctionQ::q_pow(-1);
    let mut acc = RationalFunctionQ::q_pow(exponent);
    for (_, m) in mu.multiplicities() {
        for j in 1..=m {
            let tj = t.pow(j as i32).expect("positive power");
            acc = &acc * &(&RationalFunctionQ::one() - &tj);
        }
    }
    acc
}

/// `|GL_n(F_q)| = Π_{i=0}^{n-1} (q^n - q^i)`
pub fn group_order(n: u32) -> RationalFunctionQ {
    (0..n)
        .map(|i| &RationalFunctionQ::q_pow(n as i64) - &RationalFunctionQ::q_pow(i as i64))
        .product()
}
