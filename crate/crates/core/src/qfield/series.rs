use std::collections::BTreeMap;

use super::{QFieldError, RatFunc, Scalar};

/// Truncation data for a [`TruncatedMultiPoly`].
///
/// A capped variable carries an upper bound on its exponent; the optional
/// grading is a weighted exponent sum with its own upper bound. Factors may
/// only contain terms that are nonnegative in every capped quantity, so a
/// term dropped for exceeding a cap can never come back below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    pub upper: Vec<Option<i64>>,
    pub grading: Option<(Vec<i64>, i64)>,
}

impl Caps {
    pub fn uncapped(nvars: usize) -> Self {
        Caps {
            upper: vec![None; nvars],
            grading: None,
        }
    }

    pub fn nvars(&self) -> usize {
        self.upper.len()
    }

    fn grade(&self, exps: &[i64]) -> Option<i64> {
        self.grading
            .as_ref()
            .map(|(w, _)| w.iter().zip(exps).map(|(a, b)| a * b).sum())
    }

    fn below_floor(&self, exps: &[i64]) -> bool {
        let var_low = self
            .upper
            .iter()
            .zip(exps)
            .any(|(cap, &e)| cap.is_some() && e < 0);
        var_low || self.grade(exps).is_some_and(|g| g < 0)
    }

    fn above_cap(&self, exps: &[i64]) -> bool {
        let var_high = self
            .upper
            .iter()
            .zip(exps)
            .any(|(cap, &e)| cap.is_some_and(|c| e > c));
        let grade_high = match (&self.grading, self.grade(exps)) {
            (Some((_, bound)), Some(g)) => g > *bound,
            _ => false,
        };
        var_high || grade_high
    }

    pub fn admits(&self, exps: &[i64]) -> bool {
        exps.len() == self.nvars() && !self.below_floor(exps) && !self.above_cap(exps)
    }
}

/// Multivariate Laurent polynomial over `Q(q)` with every term inside its
/// [`Caps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedMultiPoly<T> {
    caps: Caps,
    terms: BTreeMap<Vec<i64>, RatFunc<T>>,
}

impl<T: Scalar> TruncatedMultiPoly<T> {
    pub fn zero(caps: Caps) -> Self {
        TruncatedMultiPoly {
            caps,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(caps: Caps) -> Self {
        let n = caps.nvars();
        let mut p = Self::zero(caps);
        p.terms.insert(vec![0; n], RatFunc::one());
        p
    }

    /// Builds a factor. Terms above a cap are discarded; terms below a floor
    /// are rejected.
    pub fn from_terms<I>(caps: Caps, terms: I) -> Result<Self, QFieldError>
    where
        I: IntoIterator<Item = (Vec<i64>, RatFunc<T>)>,
    {
        let mut p = Self::zero(caps);
        for (exps, c) in terms {
            if exps.len() != p.caps.nvars() {
                return Err(QFieldError::ArityMismatch(exps.len(), p.caps.nvars()));
            }
            if p.caps.below_floor(&exps) {
                return Err(QFieldError::NonMonotoneFactor(exps));
            }
            if p.caps.above_cap(&exps) {
                continue;
            }
            p.accumulate(exps, c);
        }
        Ok(p)
    }

    fn accumulate(&mut self, exps: Vec<i64>, c: RatFunc<T>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(RatFunc::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &RatFunc<T>)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &Self) -> Result<Self, QFieldError> {
        if self.caps != other.caps {
            return Err(QFieldError::ArityMismatch(
                self.caps.nvars(),
                other.caps.nvars(),
            ));
        }
        let mut out: BTreeMap<Vec<i64>, RatFunc<T>> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if self.caps.above_cap(&e) {
                    continue;
                }
                let c = ca * cb;
                let slot = out.entry(e).or_insert_with(RatFunc::zero);
                *slot = &*slot + &c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(TruncatedMultiPoly {
            caps: self.caps.clone(),
            terms: out,
        })
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[i64]) -> Result<RatFunc<T>, QFieldError> {
        if !self.caps.admits(exps) {
            return Err(QFieldError::OutsideCaps(exps.to_vec()));
        }
        Ok(self.terms.get(exps).cloned().unwrap_or_else(RatFunc::zero))
    }
}

/// One factor of a kernel product. Variables are `w_0..w_{r-1}` followed by
/// `z_0..z_{s-1}`; `w`/`z` fields index within their own block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelFactor {
    /// `(w_i - w_j)/(w_i - q^{-degree} w_j)` for `i < j`, expanded in `w_j/w_i`.
    HallPair { i: usize, j: usize, degree: u32 },
    /// `1 - w_j/w_i` for `i < j`.
    PlainPair { i: usize, j: usize },
    /// `1 + sign * w^w_pow * z^z_pow`.
    Binomial {
        w: usize,
        z: usize,
        sign: i64,
        w_pow: u32,
        z_pow: u32,
    },
}

/// Product of kernel factors, truncated for coefficient extraction.
///
/// `w_j` carries grading weight `j + 1`; the pair factors raise this grading
/// by at least one per order, the binomials never lower it, and the `z`
/// exponents only grow. A target with `w`-grading `g` and `z` exponents
/// `z_caps` is therefore exact after truncating at `grade_cap = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSpec {
    pub w_count: usize,
    pub z_caps: Vec<i64>,
    pub grade_cap: i64,
    pub factors: Vec<KernelFactor>,
}

impl KernelSpec {
    pub fn caps(&self) -> Caps {
        let n = self.w_count + self.z_caps.len();
        let mut upper = vec![None; n];
        for (s, cap) in self.z_caps.iter().enumerate() {
            upper[self.w_count + s] = Some(*cap);
        }
        let mut weights = vec![0; n];
        for (j, w) in weights.iter_mut().enumerate().take(self.w_count) {
            *w = j as i64 + 1;
        }
        Caps {
            upper,
            grading: Some((weights, self.grade_cap)),
        }
    }

    /// `w`-grading of an exponent vector over the `w` block.
    pub fn grade_of(w_exps: &[i64]) -> i64 {
        w_exps
            .iter()
            .enumerate()
            .map(|(j, e)| (j as i64 + 1) * e)
            .sum()
    }

    fn factor_poly<T: Scalar>(
        &self,
        caps: &Caps,
        factor: &KernelFactor,
    ) -> Result<TruncatedMultiPoly<T>, QFieldError> {
        let n = caps.nvars();
        let unit = || vec![0i64; n];
        let mut terms = vec![(unit(), RatFunc::one())];
        match *factor {
            KernelFactor::HallPair { i, j, degree } => {
                let gap = (j - i) as i64;
                let max_k = self.grade_cap.max(0) / gap;
                // coefficient of (w_j/w_i)^k is t^k - t^(k-1), t = q^-degree
                for k in 1..=max_k {
                    let d = degree as i64;
                    let c = &RatFunc::q_pow(-d * k) - &RatFunc::q_pow(-d * (k - 1));
                    let mut e = unit();
                    e[i] = -k;
                    e[j] = k;
                    terms.push((e, c));
                }
            }
            KernelFactor::PlainPair { i, j } => {
                let mut e = unit();
                e[i] = -1;
                e[j] = 1;
                terms.push((e, -RatFunc::one()));
            }
            KernelFactor::Binomial {
                w,
                z,
                sign,
                w_pow,
                z_pow,
            } => {
                let mut e = unit();
                e[w] = w_pow as i64;
                e[self.w_count + z] = z_pow as i64;
                terms.push((e, RatFunc::from_i64(sign)));
            }
        }
        TruncatedMultiPoly::from_terms(caps.clone(), terms)
    }

    /// Expands the product of all factors within the caps.
    pub fn series<T: Scalar>(&self) -> Result<TruncatedMultiPoly<T>, QFieldError> {
        let caps = self.caps();
        let mut acc = TruncatedMultiPoly::one(caps.clone());
        for f in &self.factors {
            acc = acc.mul(&self.factor_poly(&caps, f)?)?;
        }
        Ok(acc)
    }
}
