//! Independent oracles shared by the integration tests. None of these call
//! into the code paths they are used to check.

#![allow(dead_code)]

use std::collections::HashMap;

/// Number of `SL2(Z)`-orbits of positive-definite even Gram matrices
/// `[[2a, b], [b, 2c]]` with `4ac - b^2 == det`, counted as connected
/// components of the graph on all such forms with entries bounded by `det`,
/// with edges given by the generators `T^{+-1}` and `S`.
pub fn class_count_bruteforce(det: i64) -> usize {
    let mut index: HashMap<(i64, i64, i64), usize> = HashMap::new();
    let mut forms = Vec::new();
    for a in 1..=det {
        for b in -det..=det {
            let num = det + b * b;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c > det {
                continue;
            }
            index.insert((a, b, c), forms.len());
            forms.push((a, b, c));
        }
    }
    let mut parent: Vec<usize> = (0..forms.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (i, &(a, b, c)) in forms.iter().enumerate() {
        let neighbours = [
            (a, b + 2 * a, a + b + c),
            (a, b - 2 * a, a - b + c),
            (c, -b, a),
        ];
        for n in neighbours {
            if let Some(&j) = index.get(&n) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    (0..forms.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

/// All ideals of norm `n` as `(content, a, b)`: `n = g^2 a` and `b` runs over
/// `(-a, a]` with `b^2 = -D (mod 4a)`.
pub fn ideals_bruteforce(n: u64, disc: u64) -> Vec<(u64, u64, i64)> {
    let mut out = Vec::new();
    let mut g = 1u64;
    while g * g <= n {
        if n.is_multiple_of(g * g) {
            let a = n / (g * g);
            let m = 4 * a as i128;
            for b in -(a as i64) + 1..=a as i64 {
                if ((b as i128) * (b as i128) + disc as i128).rem_euclid(m) == 0 {
                    out.push((g, a, b));
                }
            }
        }
        g += 1;
    }
    out.sort();
    out
}

/// Number of `x` in `[0, 2p)` with `x^2 + D = 0 (mod 4p)`.
pub fn root_count(p: u64, disc: u64) -> usize {
    let m = 4 * p as u128;
    (0..2 * p as u128)
        .filter(|x| (x * x + disc as u128).is_multiple_of(m))
        .count()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Legendre symbol by Euler's criterion, for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i32 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let mut acc = 1u128;
    let mut base = r as u128;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn det_small(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det_small(&minor)
            })
            .sum(),
    }
}

/// Gram matrices nondegenerate modulo `q`: every diagonal form with entries
/// in `1..q`, plus a few forms with off-diagonal terms.
pub fn orth_test_matrix(rank: usize, q: i64) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut diag = vec![1i64; rank];
    loop {
        out.push(
            (0..rank)
                .map(|i| {
                    (0..rank)
                        .map(|j| if i == j { diag[i] } else { 0 })
                        .collect()
                })
                .collect(),
        );
        let Some(i) = (0..rank).find(|&i| diag[i] < q - 1) else {
            break;
        };
        diag[i] += 1;
        for x in &mut diag[..i] {
            *x = 1;
        }
    }
    let extra: Vec<Vec<Vec<i64>>> = match rank {
        2 => vec![
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![2, 1], vec![1, 2]],
            vec![vec![2, 1], vec![1, 4]],
        ],
        3 => vec![
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
            vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]],
            vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]],
        ],
        _ => Vec::new(),
    };
    out.extend(
        extra
            .into_iter()
            .filter(|m| det_small(m).rem_euclid(q) != 0),
    );
    out
}
