//! Brute-force facts about `GL_n(F_p)` for small `n` and prime `p`, found by
//! enumerating matrices. Nothing here uses the library's formulas.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub type Mat = Vec<Vec<u32>>;

pub struct Group {
    pub n: usize,
    pub p: u32,
    pub elements: Vec<Mat>,
}

fn mul(a: &Mat, b: &Mat, p: u32) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u32>() % p)
                .collect()
        })
        .collect()
}

fn commutes(a: &Mat, b: &Mat, p: u32) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in 0..n {
            let mut ab = 0;
            let mut ba = 0;
            for k in 0..n {
                ab += a[i][k] * b[k][j];
                ba += b[i][k] * a[k][j];
            }
            if ab % p != ba % p {
                return false;
            }
        }
    }
    true
}

/// Rank over `F_p` by row reduction.
pub fn rank(m: &Mat, p: u32) -> usize {
    let mut m = m.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |x: u32| (1..p).find(|y| x * y % p == 1).unwrap();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, piv);
        let s = inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + p * p - f * m[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

fn all_matrices(n: usize, p: u32) -> impl Iterator<Item = Mat> {
    let cells = n * n;
    let total = (p as u64).pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut m = vec![vec![0; n]; n];
        for k in 0..cells {
            m[k / n][k % n] = (code % p as u64) as u32;
            code /= p as u64;
        }
        m
    })
}

impl Group {
    pub fn new(n: usize, p: u32) -> Self {
        let elements = all_matrices(n, p).filter(|m| rank(m, p) == n).collect();
        Group { n, p, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn identity(&self) -> Mat {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| u32::from(i == j)).collect())
            .collect()
    }

    /// Number of conjugacy classes, via `|{(g, h) : gh = hg}| / |G|`.
    pub fn class_count(&self) -> usize {
        let commuting: usize = self
            .elements
            .iter()
            .map(|x| self.centralizer_order(x))
            .sum();
        commuting / self.order()
    }

    pub fn centralizer_order(&self, x: &Mat) -> usize {
        self.elements.iter().filter(|g| commutes(g, x, self.p)).count()
    }

    /// Jordan type of a unipotent element, from the ranks of `(x - 1)^k`.
    pub fn jordan_type(&self, x: &Mat) -> Option<Vec<u32>> {
        let id = self.identity();
        let p = self.p;
        let nil: Mat = x
            .iter()
            .zip(&id)
            .map(|(r, e)| r.iter().zip(e).map(|(a, b)| (a + p - b) % p).collect())
            .collect();
        let mut ranks = vec![self.n];
        let mut power = id;
        for _ in 0..self.n {
            power = mul(&power, &nil, p);
            ranks.push(rank(&power, p));
        }
        if *ranks.last().unwrap() != 0 {
            return None;
        }
        // number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                parts.push(k as u32 + 1);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(parts)
    }

    /// One representative per unipotent Jordan type with its centralizer order.
    pub fn unipotent_centralizers(&self) -> BTreeMap<Vec<u32>, usize> {
        let mut out = BTreeMap::new();
        for x in &self.elements {
            if let Some(mu) = self.jordan_type(x) {
                out.entry(mu).or_insert_with(|| self.centralizer_order(x));
            }
        }
        out
    }
}
