//! Magic squares, magic rectangles and offset blocks.
//!
//! Only two facts about these arrays are ever used downstream: every row has
//! the same sum, and every column has the same sum. The constructors here
//! favour simple, checkable recipes over any particular classical layout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A dense `rows × cols` integer array, row-major.
///
/// Despite the name the type does not enforce magic-ness: offset blocks and
/// fixtures share it. Use [`MagicRectangle::is_magic`] and friends to check.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MagicRectangle {
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl MagicRectangle {
    pub fn new(rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "{} entries do not fill a {rows}x{cols} array",
                entries.len()
            )));
        }
        Ok(MagicRectangle { rows, cols, entries })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.cols).map(<[u64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.entries.chunks(self.cols).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    /// The common row sum, if all rows agree.
    pub fn row_sum(&self) -> Option<u64> {
        constant(&self.row_sums())
    }

    /// The common column sum, if all columns agree.
    pub fn col_sum(&self) -> Option<u64> {
        constant(&self.col_sums())
    }

    pub fn is_distinct(&self) -> bool {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }

    /// Entries are exactly `1..=rows·cols`.
    pub fn is_baseline(&self) -> bool {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v.iter().zip(1..).all(|(&x, k)| x == k)
    }

    /// Distinct entries with constant row sums and constant column sums.
    pub fn is_magic(&self) -> bool {
        self.is_distinct() && self.row_sum().is_some() && self.col_sum().is_some()
    }

    pub fn transpose(&self) -> MagicRectangle {
        let mut e = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                e.push(self.get(i, j));
            }
        }
        MagicRectangle { rows: self.cols, cols: self.rows, entries: e }
    }

    /// Adds `by` to every entry.
    pub fn shifted(&self, by: u64) -> MagicRectangle {
        MagicRectangle {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&x| x + by).collect(),
        }
    }
}

fn constant(v: &[u64]) -> Option<u64> {
    let first = *v.first()?;
    v.iter().all(|&x| x == first).then_some(first)
}

/// `Ω + (i−1)·step`: the `i`-th block in a run of disjoint value ranges.
pub fn offset_block(omega: &MagicRectangle, i: u64, step: u64) -> Result<MagicRectangle> {
    if i == 0 {
        return Err(Error::InvalidParameter("offset index starts at 1".into()));
    }
    Ok(omega.shifted((i - 1) * step))
}

/// A magic square of order `n` over `1..=n²`.
///
/// Odd orders use the stepwise (Siamese) walk, doubly-even orders the
/// complement pattern, singly-even orders the LUX composition.
///
/// ```
/// let sq = antimagic::magic::magic_square(5).unwrap();
/// assert_eq!(sq.row_sum(), Some(65));
/// assert_eq!(sq.col_sum(), Some(65));
/// assert!(antimagic::magic::magic_square(2).is_err());
/// ```
pub fn magic_square(n: usize) -> Result<MagicRectangle> {
    match n {
        0 => Err(Error::InvalidParameter("order must be positive".into())),
        2 => Err(Error::NoSuchObject("there is no magic square of order 2".into())),
        _ if n % 2 == 1 => Ok(siamese(n)),
        _ if n % 4 == 0 => Ok(doubly_even(n)),
        _ => Ok(lux(n)),
    }
}

fn siamese(n: usize) -> MagicRectangle {
    let mut e = vec![0u64; n * n];
    let (mut i, mut j) = (0, n / 2);
    for k in 1..=(n * n) as u64 {
        e[i * n + j] = k;
        let (ni, nj) = ((i + n - 1) % n, (j + 1) % n);
        if e[ni * n + nj] == 0 {
            (i, j) = (ni, nj);
        } else {
            i = (i + 1) % n;
        }
    }
    MagicRectangle { rows: n, cols: n, entries: e }
}

fn doubly_even(n: usize) -> MagicRectangle {
    let nn = (n * n) as u64;
    let mut e = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = (i * n + j + 1) as u64;
            let (a, b) = (i % 4, j % 4);
            e.push(if a == b || a + b == 3 { nn + 1 - v } else { v });
        }
    }
    MagicRectangle { rows: n, cols: n, entries: e }
}

/// Conway's LUX method for `n = 4k + 2`.
fn lux(n: usize) -> MagicRectangle {
    const L: [[u64; 2]; 2] = [[4, 1], [2, 3]];
    const U: [[u64; 2]; 2] = [[1, 4], [2, 3]];
    const X: [[u64; 2]; 2] = [[1, 4], [3, 2]];
    let m = n / 2;
    let k = (m - 1) / 2;
    let base = siamese(m);
    let mut e = vec![0u64; n * n];
    for r in 0..m {
        for c in 0..m {
            let pat = match r {
                _ if r == k && c == k => U,
                _ if r == k + 1 && c == k => L,
                _ if r <= k => L,
                _ if r == k + 1 => U,
                _ => X,
            };
            let v = base.get(r, c);
            for (di, prow) in pat.iter().enumerate() {
                for (dj, &x) in prow.iter().enumerate() {
                    e[(2 * r + di) * n + 2 * c + dj] = 4 * (v - 1) + x;
                }
            }
        }
    }
    MagicRectangle { rows: n, cols: n, entries: e }
}

/// A magic rectangle with `m` rows and `n` columns over `1..=mn`.
///
/// Exists exactly when `m ≡ n (mod 2)` and `(m, n)` is neither `(2, 2)` nor a
/// `1 × n` strip with `n > 1`. Square shapes defer to [`magic_square`].
///
/// ```
/// let r = antimagic::magic::magic_rectangle(3, 5).unwrap();
/// assert_eq!((r.row_sum(), r.col_sum()), (Some(40), Some(24)));
/// ```
pub fn magic_rectangle(m: usize, n: usize) -> Result<MagicRectangle> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("dimensions must be positive".into()));
    }
    if m == n {
        return magic_square(n);
    }
    if m % 2 != n % 2 {
        return Err(Error::NoSuchObject(format!("no {m}x{n} magic rectangle: parities differ")));
    }
    if m == 1 || n == 1 {
        return Err(Error::NoSuchObject(format!("no {m}x{n} magic rectangle: a strip cannot balance")));
    }
    if m % 2 == 1 {
        return odd_rectangle(m, n);
    }
    Ok(if n % 4 == 0 {
        quarter_rectangle(m, n)
    } else if m % 4 == 0 {
        quarter_rectangle(n, m).transpose()
    } else if m == 2 {
        two_row(n)
    } else if n == 2 {
        two_row(m).transpose()
    } else {
        doubled_rectangle(m, n)?
    })
}

/// Even `m`, `n ≡ 0 (mod 4)`.
///
/// Writes each value as `n·A + B + 1` with digits `A < m`, `B < n`. The top
/// half of the rows reads `B = 0, 1, …` and the bottom half reads it
/// backwards; column `j` carries the identity or the reversal of `0..m` as its
/// `A` digits, chosen so that columns `j` and `n−1−j` agree and the first
/// half alternates.
fn quarter_rectangle(m: usize, n: usize) -> MagicRectangle {
    let mut e = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let b = if i < m / 2 { j } else { n - 1 - j };
            let a = if j.min(n - 1 - j) % 2 == 0 { i } else { m - 1 - i };
            e.push((n * a + b + 1) as u64);
        }
    }
    MagicRectangle { rows: m, cols: n, entries: e }
}

/// `2 × n` with `n ≡ 2 (mod 4)`, `n ≥ 6`.
///
/// Column `x` holds the complementary pair `{x, 2n+1−x}`. Starting from the
/// small half on top, moving `x` to the top raises the top row by
/// `d = 2n+1−2x`; the chosen moves add up to exactly the missing `n²/2`.
fn two_row(n: usize) -> MagicRectangle {
    debug_assert!(n % 4 == 2 && n >= 6);
    let t = (n - 2) / 4;
    let total = 2 * n + 1;
    let mut flip = vec![false; n + 1];
    // d = 1 and d = n - 1 contribute n ...
    flip[n] = true;
    flip[(n + 2) / 2] = true;
    // ... and t complementary pairs (d, 2n - d) contribute 2n each.
    for s in 0..t {
        let d = 3 + 2 * s;
        flip[(total - d) / 2] = true;
        flip[(total - (2 * n - d)) / 2] = true;
    }
    let top: Vec<u64> = (1..=n).map(|x| if flip[x] { total - x } else { x } as u64).collect();
    let bottom: Vec<u64> = top.iter().map(|&x| total as u64 - x).collect();
    MagicRectangle { rows: 2, cols: n, entries: [top, bottom].concat() }
}

/// `m ≡ n ≡ 2 (mod 4)`, both at least 6 and unequal.
///
/// Expands an odd `m/2 × n/2` magic rectangle: entry `r` becomes a 2×2 block
/// over `4(r−1)+1..=4(r−1)+4` whose rows each sum to 5. The block shape
/// depends only on the outer row and is chosen so that every column picks up
/// the same total.
fn doubled_rectangle(m: usize, n: usize) -> Result<MagicRectangle> {
    const FIRST: [[u64; 2]; 2] = [[1, 4], [2, 3]]; // column sums 3, 7
    const HEAVY_LEFT: [[u64; 2]; 2] = [[4, 1], [2, 3]]; // 6, 4
    const HEAVY_RIGHT: [[u64; 2]; 2] = [[1, 4], [3, 2]]; // 4, 6
    let (s, t) = (m / 2, n / 2);
    let outer = odd_rectangle(s, t)?;
    let mut e = vec![0u64; m * n];
    for r in 0..s {
        let pat = match r {
            0 => FIRST,
            1 | 2 => HEAVY_LEFT,
            _ if r % 2 == 1 => HEAVY_RIGHT,
            _ => HEAVY_LEFT,
        };
        for c in 0..t {
            let v = outer.get(r, c);
            for (di, prow) in pat.iter().enumerate() {
                for (dj, &x) in prow.iter().enumerate() {
                    e[(2 * r + di) * n + 2 * c + dj] = 4 * (v - 1) + x;
                }
            }
        }
    }
    Ok(MagicRectangle { rows: m, cols: n, entries: e })
}

const ODD_SEEDS: u64 = 8;
const ODD_STEPS_PER_SEED: u64 = 20_000_000;

/// Odd `m ≠ n`.
///
/// Values are `n·A + B + 1`. The `B` digits are fixed up front: three rows
/// form a zero-deviation triple of permutations of `0..n` and the remaining
/// rows come in reversed pairs, so `B` already has constant row and column
/// sums. The `A` digit of a cell is `λ_β(i)` where `β` is the cell's `B`
/// digit and each `λ_β` is a permutation of `0..m`; this keeps every
/// `(A, B)` pair distinct no matter how the `λ_β` are chosen. The
/// permutations are then balanced by a seeded annealing walk over
/// transpositions, which is deterministic and, for every size up to about
/// 15, finishes in well under a second.
fn odd_rectangle(m: usize, n: usize) -> Result<MagicRectangle> {
    if m > n {
        return odd_rectangle(n, m).map(|r| r.transpose());
    }
    for seed in 0..ODD_SEEDS {
        if let Some(r) = anneal_odd(m, n, seed, ODD_STEPS_PER_SEED) {
            return Ok(r);
        }
    }
    Err(Error::Budget { nodes: ODD_SEEDS * ODD_STEPS_PER_SEED })
}

fn anneal_odd(m: usize, n: usize, seed: u64, max_steps: u64) -> Option<MagicRectangle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = (n - 1) / 2;
    let mut b_rows: Vec<Vec<usize>> = vec![
        (0..n).collect(),
        (0..n).map(|j| (j + h) % n).collect(),
        (0..n).map(|j| 3 * h - j - (j + h) % n).collect(),
    ];
    for k in 0..m - 3 {
        b_rows.push(if k % 2 == 0 { (0..n).collect() } else { (0..n).rev().collect() });
    }
    // column_of[i][β]: where digit β sits in row i
    let column_of: Vec<Vec<usize>> = b_rows
        .iter()
        .map(|r| {
            let mut c = vec![0; n];
            for (j, &b) in r.iter().enumerate() {
                c[b] = j;
            }
            c
        })
        .collect();
    let mut lambda: Vec<Vec<i64>> = (0..n).map(|_| (0..m as i64).collect()).collect();
    let mid = (m as i64 - 1) / 2;
    let (mut rs, mut cs) = (vec![0i64; m], vec![0i64; n]);
    for i in 0..m {
        for beta in 0..n {
            let v = lambda[beta][i] - mid;
            rs[i] += v;
            cs[column_of[i][beta]] += v;
        }
    }
    let sq = |v: &[i64]| v.iter().map(|x| x * x).sum::<i64>();
    let mut energy = sq(&rs) + sq(&cs);
    let mut steps = 0;
    while energy > 0 {
        steps += 1;
        if steps > max_steps {
            return None;
        }
        let beta = rng.gen_range(0..n);
        let (i1, i2) = (rng.gen_range(0..m), rng.gen_range(0..m));
        if i1 == i2 {
            continue;
        }
        let d = lambda[beta][i2] - lambda[beta][i1];
        let (c1, c2) = (column_of[i1][beta], column_of[i2][beta]);
        let mut delta = (rs[i1] + d).pow(2) + (rs[i2] - d).pow(2) - rs[i1].pow(2) - rs[i2].pow(2);
        if c1 != c2 {
            delta += (cs[c1] + d).pow(2) + (cs[c2] - d).pow(2) - cs[c1].pow(2) - cs[c2].pow(2);
        }
        if delta <= 0 || rng.gen::<f64>() < (-(delta as f64)).exp() {
            lambda[beta].swap(i1, i2);
            rs[i1] += d;
            rs[i2] -= d;
            if c1 != c2 {
                cs[c1] += d;
                cs[c2] -= d;
            }
            energy += delta;
        }
    }
    let mut e = Vec::with_capacity(m * n);
    for (i, row) in b_rows.iter().enumerate() {
        for &beta in row {
            e.push((n as i64 * lambda[beta][i]) as u64 + beta as u64 + 1);
        }
    }
    Some(MagicRectangle { rows: m, cols: n, entries: e })
}
