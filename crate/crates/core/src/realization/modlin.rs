//! Linear algebra over `Z/2^n`, enough to compare finitely generated
//! submodules of `(Z/2^n)^m`.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) type Vector = Vec<u128>;

fn mask(n: u32) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

fn valuation(x: u128, n: u32) -> Option<u32> {
    let x = x & mask(n);
    (x != 0).then(|| x.trailing_zeros())
}

fn inverse_odd(a: u128) -> u128 {
    let mut x = a;
    for _ in 0..7 {
        x = x.wrapping_mul(2u128.wrapping_sub(a.wrapping_mul(x)));
    }
    x
}

/// `U·A·V = diag(2^{e₀} w₀, 2^{e₁} w₁, …)` with `U`, `V` invertible and
/// the `wᵢ` odd.
#[derive(Debug, Clone)]
pub(crate) struct Smith {
    pub n: u32,
    pub rows: usize,
    pub cols: usize,
    /// Valuations of the nonzero diagonal entries.
    pub exponents: Vec<u32>,
    pub u: Vec<Vector>,
    pub v: Vec<Vector>,
}

impl Smith {
    /// `a` is given row by row.
    pub fn new(a: &[Vector], cols: usize, n: u32) -> Self {
        let m = mask(n);
        let rows = a.len();
        let mut a: Vec<Vector> = a.iter().map(|r| r.iter().map(|x| x & m).collect()).collect();
        let mut u: Vec<Vector> = identity(rows);
        let mut v: Vec<Vector> = identity(cols);
        let mut exponents = Vec::new();
        for t in 0..rows.min(cols) {
            let mut best: Option<(u32, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if let Some(e) = valuation(x, n) {
                        if best.is_none_or(|(b, _, _)| e < b) {
                            best = Some((e, i, j));
                        }
                    }
                }
            }
            let Some((e, i, j)) = best else { break };
            a.swap(t, i);
            u.swap(t, i);
            for row in a.iter_mut() {
                row.swap(t, j);
            }
            for row in v.iter_mut() {
                row.swap(t, j);
            }
            let inv = inverse_odd(a[t][t] >> e);
            for r in t + 1..rows {
                let f = (a[r][t] >> e).wrapping_mul(inv) & m;
                if f == 0 {
                    continue;
                }
                let (pivot_a, pivot_u) = (a[t].clone(), u[t].clone());
                for (x, p) in a[r].iter_mut().zip(&pivot_a) {
                    *x = x.wrapping_sub(f.wrapping_mul(*p)) & m;
                }
                for (x, p) in u[r].iter_mut().zip(&pivot_u) {
                    *x = x.wrapping_sub(f.wrapping_mul(*p)) & m;
                }
            }
            for c in t + 1..cols {
                let f = (a[t][c] >> e).wrapping_mul(inv) & m;
                if f == 0 {
                    continue;
                }
                for row in a.iter_mut() {
                    row[c] = row[c].wrapping_sub(f.wrapping_mul(row[t])) & m;
                }
                for row in v.iter_mut() {
                    row[c] = row[c].wrapping_sub(f.wrapping_mul(row[t])) & m;
                }
            }
            exponents.push(e);
        }
        Self { n, rows, cols, exponents, u, v }
    }

    pub fn rank_mod2(&self) -> usize {
        self.exponents.iter().filter(|&&e| e == 0).count()
    }

    /// Generators of `{x : A·x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let m = mask(self.n);
        let mut gens = Vec::new();
        for t in 0..self.cols {
            let scale = match self.exponents.get(t) {
                Some(0) => continue,
                Some(&e) => 1u128 << (self.n - e),
                None => 1,
            };
            let g: Vector = (0..self.cols).map(|r| self.v[r][t].wrapping_mul(scale) & m).collect();
            if g.iter().any(|&x| x != 0) {
                gens.push(g);
            }
        }
        gens
    }

    /// Whether `A·y = b` has a solution.
    pub fn solvable(&self, b: &[u128]) -> bool {
        let m = mask(self.n);
        let ub: Vector = (0..self.rows)
            .map(|i| (0..self.rows).fold(0u128, |acc, j| acc.wrapping_add(self.u[i][j].wrapping_mul(b[j]))) & m)
            .collect();
        ub.iter().enumerate().all(|(i, &x)| match self.exponents.get(i) {
            Some(&e) => x & mask(e) == 0,
            None => x == 0,
        })
    }
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut r = vec![0u128; n];
            r[i] = 1;
            r
        })
        .collect()
}

/// Whether `x` lies in the span of `gens` inside `(Z/2^n)^dim`.
pub(crate) fn in_span(gens: &[Vector], x: &[u128], dim: usize, n: u32) -> bool {
    if gens.is_empty() {
        return x.iter().all(|&c| c & mask(n) == 0);
    }
    let a: Vec<Vector> = (0..dim).map(|r| gens.iter().map(|g| g[r]).collect()).collect();
    Smith::new(&a, gens.len(), n).solvable(x)
}

/// Equality of the submodules spanned by `g1` and `g2`.
pub(crate) fn same_span(g1: &[Vector], g2: &[Vector], dim: usize, n: u32) -> bool {
    g1.iter().all(|x| in_span(g2, x, dim, n)) && g2.iter().all(|x| in_span(g1, x, dim, n))
}
