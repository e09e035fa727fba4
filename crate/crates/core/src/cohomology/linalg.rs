//! Diagonal reduction of integer matrices over `ℤ/m`.
//!
//! `ℤ/m` has zero divisors, so pivots are combined with Bézout rotations
//! (determinant-one 2×2 transforms over ℤ) rather than field division. The
//! result is `U·A·V = D` with `D` diagonal; `U` is applied on the fly to a
//! right-hand side and `V` is kept explicitly.

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

#[derive(Debug, Clone)]
pub struct Diagonal {
    modulus: u64,
    cols: usize,
    /// Nonzero diagonal entries, in pivot order.
    pub pivots: Vec<u64>,
    /// Column transform, `cols × cols`, row-major.
    transform: Vec<u64>,
    /// Transformed right-hand side, when one was supplied.
    rhs: Option<Vec<u64>>,
}

impl ModMatrix {
    pub fn zeros(modulus: u64, rows: usize, cols: usize) -> Self {
        assert!(modulus >= 1);
        Self { modulus, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `delta` (any integer) to entry `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, delta: i64) {
        let m = self.modulus as i128;
        let cell = &mut self.data[r * self.cols + c];
        *cell = ((*cell as i128 + delta as i128).rem_euclid(m)) as u64;
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        let m = self.modulus as u128;
        (0..self.rows)
            .map(|r| {
                let s: u128 = (0..self.cols).map(|c| self.get(r, c) as u128 * x[c] as u128 % m).sum();
                (s % m) as u64
            })
            .collect()
    }

    /// Reduces to diagonal form, transforming `rhs` by the row operations.
    pub fn diagonalize(mut self, rhs: Option<&[u64]>) -> Diagonal {
        let m = self.modulus;
        let (rows, cols) = (self.rows, self.cols);
        let mut b = rhs.map(|r| r.iter().map(|x| x % m).collect::<Vec<_>>());
        let mut v = vec![0u64; cols * cols];
        for i in 0..cols {
            v[i * cols + i] = 1 % m;
        }
        let mut pivots = Vec::new();

        let mut r = 0;
        while r < rows.min(cols) {
            // pivot: nonzero entry with the smallest gcd with m, then smallest value
            let mut best: Option<(u64, u64, usize, usize)> = None;
            for i in r..rows {
                for j in r..cols {
                    let a = self.data[i * cols + j];
                    if a == 0 {
                        continue;
                    }
                    let key = (a.gcd(&m), a, i, j);
                    if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                        best = Some(key);
                    }
                }
            }
            let Some((_, _, pi, pj)) = best else { break };
            self.swap_rows(r, pi);
            if let Some(b) = b.as_mut() {
                b.swap(r, pi);
            }
            self.swap_cols(r, pj, &mut v);

            loop {
                let mut dirty = false;
                for i in r + 1..rows {
                    if self.data[i * cols + r] != 0 {
                        self.eliminate_row(r, i, b.as_deref_mut());
                    }
                }
                for j in r + 1..cols {
                    if self.data[r * cols + j] != 0 {
                        self.eliminate_col(r, j, &mut v);
                    }
                }
                for i in r + 1..rows {
                    if self.data[i * cols + r] != 0 {
                        dirty = true;
                    }
                }
                if !dirty {
                    break;
                }
            }
            pivots.push(self.data[r * cols + r]);
            r += 1;
        }

        Diagonal { modulus: m, cols, pivots, transform: v, rhs: b }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize, v: &mut [u64]) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
            for r in 0..self.cols {
                v.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// Zeroes entry `(i, r)` using pivot row `r`.
    fn eliminate_row(&mut self, r: usize, i: usize, rhs: Option<&mut [u64]>) {
        let cols = self.cols;
        let (p, q) = (self.data[r * cols + r], self.data[i * cols + r]);
        let t = rotation(p, q);
        let m = self.modulus;
        for c in 0..cols {
            let (x, y) = (self.data[r * cols + c], self.data[i * cols + c]);
            let (nx, ny) = apply(&t, x, y, m);
            self.data[r * cols + c] = nx;
            self.data[i * cols + c] = ny;
        }
        if let Some(b) = rhs {
            let (nx, ny) = apply(&t, b[r], b[i], m);
            b[r] = nx;
            b[i] = ny;
        }
    }

    /// Zeroes entry `(r, j)` using pivot column `r`.
    fn eliminate_col(&mut self, r: usize, j: usize, v: &mut [u64]) {
        let cols = self.cols;
        let (p, q) = (self.data[r * cols + r], self.data[r * cols + j]);
        let t = rotation(p, q);
        let m = self.modulus;
        for row in 0..self.rows {
            let (x, y) = (self.data[row * cols + r], self.data[row * cols + j]);
            let (nx, ny) = apply(&t, x, y, m);
            self.data[row * cols + r] = nx;
            self.data[row * cols + j] = ny;
        }
        for row in 0..cols {
            let (x, y) = (v[row * cols + r], v[row * cols + j]);
            let (nx, ny) = apply(&t, x, y, m);
            v[row * cols + r] = nx;
            v[row * cols + j] = ny;
        }
    }
}

/// A determinant-one transform `[[s, t], [u, w]]` sending `(p, q)` to
/// `(g, 0)` where `g = gcd(p, q)` over ℤ.
fn rotation(p: u64, q: u64) -> [i128; 4] {
    if q.is_multiple_of(p) {
        return [1, 0, -((q / p) as i128), 1];
    }
    let e = i128::extended_gcd(&(p as i128), &(q as i128));
    let g = e.gcd;
    [e.x, e.y, -(q as i128 / g), p as i128 / g]
}

fn apply(t: &[i128; 4], x: u64, y: u64, m: u64) -> (u64, u64) {
    let m = m as i128;
    let (x, y) = (x as i128, y as i128);
    (
        (t[0] * x + t[1] * y).rem_euclid(m) as u64,
        (t[2] * x + t[3] * y).rem_euclid(m) as u64,
    )
}

impl Diagonal {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `|ker A|` as the list of cyclic orders whose product it is:
    /// `gcd(d_i, m)` per pivot and `m` per free column.
    pub fn kernel_factors(&self) -> Vec<u64> {
        let m = self.modulus;
        self.pivots
            .iter()
            .map(|d| d.gcd(&m))
            .chain(std::iter::repeat_n(m, self.cols - self.rank()))
            .collect()
    }

    /// `|im A|` as a list of cyclic orders `m / gcd(d_i, m)`.
    pub fn image_factors(&self) -> Vec<u64> {
        let m = self.modulus;
        self.pivots.iter().map(|d| m / d.gcd(&m)).collect()
    }

    /// Some solution of `A x = b` for the right-hand side supplied to
    /// [`ModMatrix::diagonalize`], or `None` when none exists.
    pub fn solution(&self) -> Option<Vec<u64>> {
        let m = self.modulus;
        let b = self.rhs.as_ref().expect("diagonalized without a right-hand side");
        if b[self.rank()..].iter().any(|&x| x % m != 0) {
            return None;
        }
        let mut y = vec![0u64; self.cols];
        for (i, &d) in self.pivots.iter().enumerate() {
            let g = d.gcd(&m);
            if !b[i].is_multiple_of(g) {
                return None;
            }
            let mg = m / g;
            if mg > 1 {
                let inv = i128::extended_gcd(&((d / g) as i128), &(mg as i128)).x.rem_euclid(mg as i128);
                y[i] = ((b[i] / g) as i128 * inv).rem_euclid(mg as i128) as u64;
            }
        }
        Some(self.apply_transform(&y))
    }

    /// Generators of `ker A`.
    pub fn kernel_generators(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let mut gens = Vec::new();
        for j in 0..self.cols {
            let scale = match self.pivots.get(j) {
                Some(&d) => m / d.gcd(&m),
                None => 1,
            };
            if scale % m == 0 {
                continue;
            }
            let mut y = vec![0u64; self.cols];
            y[j] = scale;
            gens.push(self.apply_transform(&y));
        }
        gens
    }

    fn apply_transform(&self, y: &[u64]) -> Vec<u64> {
        let m = self.modulus as u128;
        (0..self.cols)
            .map(|r| {
                let s: u128 = (0..self.cols)
                    .map(|c| self.transform[r * self.cols + c] as u128 * y[c] as u128 % m)
                    .sum();
                (s % m) as u64
            })
            .collect()
    }
}
