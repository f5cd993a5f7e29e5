use std::collections::BTreeMap;
use std::fmt;

use super::FockError;
use crate::qfield::RatFuncJson;
use crate::{Partition, Rational, RationalFunctionQ};

/// Which power sums a vector is written in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// One channel per orbit; the entry is the orbit size `|φ|`.
    Orbits(Vec<u32>),
    /// The single channel `p_n(f_1)`, `f_1 = t - 1`.
    F1,
}

impl Alphabet {
    pub fn channels(&self) -> usize {
        match self {
            Alphabet::Orbits(d) => d.len(),
            Alphabet::F1 => 1,
        }
    }

    /// Grading weight of `p_n` in a channel.
    pub fn channel_degree(&self, channel: usize) -> u32 {
        match self {
            Alphabet::Orbits(d) => d[channel],
            Alphabet::F1 => 1,
        }
    }
}

/// A power-sum monomial, one partition per channel.
pub type Monomial = Vec<Partition>;

/// Finite linear combination of power-sum monomials over `Q(q)`.
#[derive(Clone, PartialEq, Eq)]
pub struct FockVector {
    alphabet: Alphabet,
    terms: BTreeMap<Monomial, RationalFunctionQ>,
}

fn insert_sorted_desc(parts: &[u32], extra: &[u32]) -> Partition {
    let mut v: Vec<u32> = parts.iter().chain(extra).copied().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_parts(v)
}

impl FockVector {
    pub fn zero(alphabet: Alphabet) -> Self {
        FockVector {
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    /// The vacuum `1`.
    pub fn vacuum(alphabet: Alphabet) -> Self {
        let n = alphabet.channels();
        let mut v = Self::zero(alphabet);
        v.terms.insert(vec![Partition::empty(); n], RationalFunctionQ::one());
        v
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RationalFunctionQ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> RationalFunctionQ {
        self.terms.get(m).cloned().unwrap_or_else(RationalFunctionQ::zero)
    }

    /// Adds `c * m`, keeping zero coefficients out of the map.
    pub fn add_term(&mut self, m: Monomial, c: RationalFunctionQ) {
        debug_assert_eq!(m.len(), self.alphabet.channels());
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot = &*slot + &c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), FockError> {
        if self.alphabet != other.alphabet {
            return Err(FockError::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FockError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FockError> {
        self.add(&other.scale(&-RationalFunctionQ::one()))
    }

    pub fn scale(&self, c: &RationalFunctionQ) -> Self {
        let mut out = Self::zero(self.alphabet.clone());
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x * c);
        }
        out
    }

    /// Polynomial product.
    pub fn mul(&self, other: &Self) -> Result<Self, FockError> {
        self.check_same(other)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma
                    .iter()
                    .zip(mb)
                    .map(|(a, b)| insert_sorted_desc(a.parts(), b.parts()))
                    .collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    /// Largest `Σ indices` over monomials, within one channel.
    pub fn channel_degree_bound(&self, channel: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m[channel].weight())
            .max()
            .unwrap_or(0)
    }

    /// Multiplication by `p_n` in `channel`.
    pub fn mul_power_sum(&self, channel: usize, n: u32) -> Result<Self, FockError> {
        self.check_channel(channel)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m[channel] = insert_sorted_desc(m[channel].parts(), &[n]);
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// `∂ / ∂p_n` in `channel`.
    pub fn differentiate(&self, channel: usize, n: u32) -> Result<Self, FockError> {
        self.check_channel(channel)?;
        let mut out = Self::zero(self.alphabet.clone());
        for (m, c) in &self.terms {
            let parts = m[channel].parts();
            let count = parts.iter().filter(|&&x| x == n).count();
            if count == 0 {
                continue;
            }
            let pos = parts.iter().position(|&x| x == n).unwrap();
            let mut rest = parts.to_vec();
            rest.remove(pos);
            let mut m = m.clone();
            m[channel] = Partition::from_parts(rest);
            out.add_term(m, c.scale(&Rational::from_integer(count.into())));
        }
        Ok(out)
    }

    /// Adjoint of multiplication by `p_n`: `n ∂/∂p_n` on an orbit channel,
    /// `n/(q^n - 1) ∂/∂p_n` on `f_1`.
    pub fn power_sum_adjoint(&self, channel: usize, n: u32) -> Result<Self, FockError> {
        let factor = match self.alphabet {
            Alphabet::Orbits(_) => RationalFunctionQ::from_i64(n as i64),
            Alphabet::F1 => RationalFunctionQ::from_i64(n as i64)
                .checked_div(&(&RationalFunctionQ::q_pow(n as i64) - &RationalFunctionQ::one()))
                .expect("n >= 1"),
        };
        Ok(self.differentiate(channel, n)?.scale(&factor))
    }

    pub(crate) fn check_channel(&self, channel: usize) -> Result<(), FockError> {
        if channel >= self.alphabet.channels() {
            return Err(FockError::ChannelOutOfRange(channel));
        }
        Ok(())
    }

    fn monomial_name(&self, m: &Monomial) -> String {
        let mut pieces = Vec::new();
        for (ch, part) in m.iter().enumerate() {
            for (n, mult) in part.multiplicities().into_iter().rev() {
                let base = match self.alphabet {
                    Alphabet::F1 => format!("p{n}"),
                    Alphabet::Orbits(_) => format!("p{n}[{ch}]"),
                };
                pieces.push(if mult == 1 { base } else { format!("{base}^{mult}") });
            }
        }
        if pieces.is_empty() {
            "1".to_string()
        } else {
            pieces.join(" ")
        }
    }

    /// Debug dump `{monomial: coefficient}`.
    pub fn to_json(&self) -> BTreeMap<String, RatFuncJson> {
        self.terms
            .iter()
            .map(|(m, c)| (self.monomial_name(m), c.to_json()))
            .collect()
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})*{}", self.monomial_name(m)))
            .collect();
        write!(f, "{}", body.join(" + "))
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FockVector[{:?}]({self})", self.alphabet)
    }
}

/// Bilinear pairing: `<p_λ̃, p_μ̃> = Π z_λ δ` on orbit channels and
/// `<p_λ, p_μ> = z_λ(q^{-1}) q^{-|λ|} δ` on `f_1`.
pub fn inner(u: &FockVector, v: &FockVector) -> Result<RationalFunctionQ, FockError> {
    u.check_same(v)?;
    let (small, large) = if u.terms.len() <= v.terms.len() { (u, v) } else { (v, u) };
    let mut acc = RationalFunctionQ::zero();
    for (m, a) in &small.terms {
        let Some(b) = large.terms.get(m) else { continue };
        let norm = match u.alphabet {
            Alphabet::Orbits(_) => RationalFunctionQ::constant(Rational::from_integer(
                m.iter().map(Partition::z).product(),
            )),
            Alphabet::F1 => {
                let lam = &m[0];
                let t = RationalFunctionQ::q_pow(-1);
                &lam.z_deformed(&t) * &RationalFunctionQ::q_pow(-(lam.weight() as i64))
            }
        };
        acc = &acc + &(&(a * b) * &norm);
    }
    Ok(acc)
}
