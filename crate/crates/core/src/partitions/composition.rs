use std::fmt;

use super::Partition;

/// Arbitrary integer index sequence of a product of Schur operators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Composition(Vec<i64>);

/// Either zero or a signed value; the result of straightening.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Straightened<T> {
    Zero,
    Signed { sign: i8, value: T },
}

impl<T> Straightened<T> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Straightened::Zero)
    }

    pub fn negate(self) -> Self {
        match self {
            Straightened::Zero => Straightened::Zero,
            Straightened::Signed { sign, value } => Straightened::Signed { sign: -sign, value },
        }
    }
}

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, part: i64) {
        self.0.push(part);
    }

    /// Rewrites `S_{α_1} ... S_{α_l} . 1` as `± s_λ` or zero.
    ///
    /// With `γ_i = α_i + (l - i)`, the product vanishes when some `γ_i` is
    /// negative or two coincide; otherwise the sign is that of the permutation
    /// sorting `γ` into decreasing order and `λ_i = γ_(i) - (l - i)`.
    pub fn straighten(&self) -> Straightened<Partition> {
        let l = self.0.len() as i64;
        let mut gamma: Vec<i64> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| a + (l - 1 - i as i64))
            .collect();
        if gamma.iter().any(|&g| g < 0) {
            return Straightened::Zero;
        }
        // insertion sort, counting transpositions
        let mut swaps = 0usize;
        for i in 1..gamma.len() {
            let mut j = i;
            while j > 0 && gamma[j - 1] < gamma[j] {
                gamma.swap(j - 1, j);
                swaps += 1;
                j -= 1;
            }
        }
        if gamma.windows(2).any(|w| w[0] == w[1]) {
            return Straightened::Zero;
        }
        let parts: Vec<u32> = gamma
            .iter()
            .enumerate()
            .map(|(i, &g)| (g - (l - 1 - i as i64)) as u32)
            .collect();
        Straightened::Signed {
            sign: if swaps % 2 == 0 { 1 } else { -1 },
            value: Partition::new(parts).expect("sorted γ minus δ is a partition"),
        }
    }

    /// One application of `S_m S_n = -S_{n-1} S_{m+1}` at positions `(i, i+1)`.
    pub fn exchange(&self, i: usize) -> Composition {
        let mut parts = self.0.clone();
        let (m, n) = (parts[i], parts[i + 1]);
        parts[i] = n - 1;
        parts[i + 1] = m + 1;
        Composition(parts)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition(p.parts().iter().map(|&x| x as i64).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}
