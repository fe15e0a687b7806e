//! Exact integer and rational matrix routines: Bareiss determinant, Smith
//! invariants, saturated integer kernels and congruence diagonalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn transpose(m: &IntMatrix) -> IntMatrix {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Diagonal of the Smith normal form, `min(rows, cols)` entries, nonnegative,
/// each dividing the next (zeros last).
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a = m.clone();
    let mut diag = Vec::with_capacity(rows.min(cols));
    for t in 0..rows.min(cols) {
        // pivot: entry of least absolute value in the trailing block
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(BigInt::zero(), rows.min(cols) - t));
                return finish_divisibility(diag);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..cols {
                        let v = &q * &a[t][j];
                        a[i][j] -= v;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..rows {
                        let v = &q * &a[i][t];
                        a[i][j] -= v;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the whole trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    finish_divisibility(diag)
}

fn finish_divisibility(mut d: Vec<BigInt>) -> Vec<BigInt> {
    // gcd/lcm passes turn any diagonal form into the divisibility chain
    let n = d.iter().take_while(|x| !x.is_zero()).count();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Rank of an integer matrix (over Q).
pub fn rank(m: &IntMatrix) -> usize {
    smith_invariants(m).iter().filter(|x| !x.is_zero()).count()
}

/// Basis of the saturated kernel `{x in Z^n : A x = 0}`, as column vectors.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> Vec<Vec<BigInt>> {
    let mut work: IntMatrix = a.clone();
    let mut u: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let col_op = |m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let v = q * &row[src];
            row[dst] -= v;
        }
    };
    let swap_cols = |m: &mut IntMatrix, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };
    let mut pivot = 0;
    for r in 0..work.len() {
        if pivot >= n {
            break;
        }
        loop {
            let nz: Vec<usize> = (pivot..n).filter(|&c| !work[r][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let small = *nz
                .iter()
                .min_by(|&&x, &&y| work[r][x].abs().cmp(&work[r][y].abs()))
                .unwrap();
            swap_cols(&mut work, pivot, small);
            swap_cols(&mut u, pivot, small);
            if nz.len() == 1 {
                pivot += 1;
                break;
            }
            for c in pivot + 1..n {
                if !work[r][c].is_zero() {
                    let q = work[r][c].div_floor(&work[r][pivot]);
                    col_op(&mut work, c, pivot, &q);
                    col_op(&mut u, c, pivot, &q);
                }
            }
        }
    }
    (pivot..n)
        .map(|c| u.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix by exact
/// rational congruence diagonalization.
pub fn inertia(g: &IntMatrix) -> (usize, usize, usize) {
    let diag = congruence_diagonal(g);
    let pos = diag.iter().filter(|x| x.is_positive()).count();
    let neg = diag.iter().filter(|x| x.is_negative()).count();
    (pos, neg, diag.len() - pos - neg)
}

/// Diagonal entries of a rational matrix congruent to `g`.
pub fn congruence_diagonal(g: &IntMatrix) -> Vec<BigRational> {
    let n = g.len();
    let mut a: Vec<Vec<BigRational>> = g
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k <- e_k + e_j gives a_kk = 2 a_kj != 0
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            }
        }
        let p = a[k][k].clone();
        if !p.is_zero() {
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &p;
                for c in k..n {
                    let v = &f * &a[k][c];
                    a[i][c] -= v;
                }
                for r in k..n {
                    let v = &f * &a[r][k];
                    a[r][i] -= v;
                }
            }
        }
        out.push(p);
    }
    out
}
