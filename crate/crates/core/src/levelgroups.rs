//! Orders of special orthogonal groups of quadratic forms over `Z/N`, with
//! optional stabilizer of a vector, by exhaustive search for small rank and
//! by the classical order formulas over finite fields.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::lattices::GramMatrix;

pub const MAX_BRUTE_RANK: usize = 4;
pub const MAX_BRUTE_MODULUS: u64 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthType {
    /// Even rank, maximal Witt index (`O^+`).
    Split,
    /// Even rank, Witt index one less (`O^-`).
    Nonsplit,
    Odd,
}

impl OrthType {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Split => "split",
            Self::Nonsplit => "nonsplit",
            Self::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "split" | "plus" | "+" => Ok(Self::Split),
            "nonsplit" | "minus" | "-" => Ok(Self::Nonsplit),
            "odd" => Ok(Self::Odd),
            _ => Err(Error::InvalidArgument(format!(
                "unknown orthogonal type `{s}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMethod {
    BruteForce,
    Formula,
}

/// Result of an order computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrthData {
    pub gram: Vec<Vec<i64>>,
    pub modulus: u64,
    pub fixed_vector: Option<Vec<i64>>,
    pub order: BigInt,
    pub method: OrderMethod,
}

fn reduce_gram(gram: &GramMatrix, n: u64) -> Vec<Vec<i64>> {
    let m = BigInt::from(n);
    gram.entries()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = x % &m;
                    let v = if v < BigInt::zero() { v + &m } else { v };
                    v.to_i64().unwrap()
                })
                .collect()
        })
        .collect()
}

fn det_mod(cols: &[Vec<i64>], n: i64) -> i64 {
    // columns as a square matrix, Leibniz over the small rank
    let r = cols.len();
    let mut perm: Vec<usize> = (0..r).collect();
    let mut total = 0i64;
    loop {
        let mut sign = 1i64;
        for i in 0..r {
            for j in i + 1..r {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        let mut prod = sign;
        for (col, &row) in perm.iter().enumerate() {
            prod = prod * cols[col][row] % n;
        }
        total = (total + prod).rem_euclid(n);
        // next permutation
        let Some(i) = (0..r.saturating_sub(1))
            .rev()
            .find(|&i| perm[i] < perm[i + 1])
        else {
            break;
        };
        let j = (i + 1..r).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

/// Number of `g` over `Z/N` with `g^T G g = G`, `det g = 1` and, if given,
/// `g v = v`.
pub fn brute_force_order(gram: &GramMatrix, modulus: u64, fixed: Option<&[i64]>) -> Result<u64> {
    let r = gram.rank();
    if r > MAX_BRUTE_RANK || !(2..=MAX_BRUTE_MODULUS).contains(&modulus) {
        return Err(Error::GuardExceeded(format!(
            "rank {r} modulus {modulus}; limits are rank <= {MAX_BRUTE_RANK}, 2 <= N <= {MAX_BRUTE_MODULUS}"
        )));
    }
    if let Some(v) = fixed {
        if v.len() != r {
            return Err(Error::Shape);
        }
    }
    let n = modulus as i64;
    let g = reduce_gram(gram, modulus);
    let vectors: Vec<Vec<i64>> = (0..(modulus as usize).pow(r as u32))
        .map(|mut idx| {
            (0..r)
                .map(|_| {
                    let x = (idx % modulus as usize) as i64;
                    idx /= modulus as usize;
                    x
                })
                .collect()
        })
        .collect();
    let gv: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| {
            (0..r)
                .map(|i| (0..r).map(|j| g[i][j] * v[j]).sum::<i64>().rem_euclid(n))
                .collect()
        })
        .collect();
    let pair = |x: usize, y: usize| -> i64 {
        vectors[x]
            .iter()
            .zip(&gv[y])
            .map(|(a, b)| a * b)
            .sum::<i64>()
            .rem_euclid(n)
    };
    let fixed: Option<Vec<i64>> = fixed.map(|v| v.iter().map(|x| x.rem_euclid(n)).collect());

    fn extend(
        chosen: &mut Vec<usize>,
        r: usize,
        n: i64,
        g: &[Vec<i64>],
        vectors: &[Vec<i64>],
        pair: &dyn Fn(usize, usize) -> i64,
        fixed: &Option<Vec<i64>>,
    ) -> u64 {
        let j = chosen.len();
        if j == r {
            let cols: Vec<Vec<i64>> = chosen.iter().map(|&c| vectors[c].clone()).collect();
            if det_mod(&cols, n) != 1 % n {
                return 0;
            }
            if let Some(v) = fixed {
                for row in 0..r {
                    let img = (0..r)
                        .map(|c| cols[c][row] * v[c])
                        .sum::<i64>()
                        .rem_euclid(n);
                    if img != v[row] {
                        return 0;
                    }
                }
            }
            return 1;
        }
        let mut count = 0;
        for cand in 0..vectors.len() {
            if pair(cand, cand) != g[j][j] {
                continue;
            }
            if chosen
                .iter()
                .enumerate()
                .any(|(i, &c)| pair(c, cand) != g[i][j])
            {
                continue;
            }
            chosen.push(cand);
            count += extend(chosen, r, n, g, vectors, pair, fixed);
            chosen.pop();
        }
        count
    }

    let first: Vec<usize> = (0..vectors.len())
        .filter(|&c| pair(c, c) == g[0][0])
        .collect();
    Ok(first
        .par_iter()
        .map(|&c| {
            let mut chosen = vec![c];
            extend(&mut chosen, r, n, &g, &vectors, &pair, &fixed)
        })
        .sum())
}

/// `|SO(V)|` for a nondegenerate quadratic space of dimension `n` and the
/// given type over `F_q`, `q` an odd prime.
pub fn formula_order(kind: OrthType, n: usize, q: u64) -> Result<BigInt> {
    if q == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let q = BigInt::from(q);
    let qpow = |e: usize| num_traits::pow(q.clone(), e);
    let prod = |m: usize| -> BigInt { (1..=m).map(|i| qpow(2 * i) - 1).product() };
    match (kind, n % 2) {
        (OrthType::Odd, 1) => {
            let m = n / 2;
            Ok(qpow(m * m) * prod(m))
        }
        (OrthType::Split, 0) | (OrthType::Nonsplit, 0) if n >= 2 => {
            let m = n / 2;
            let sign = if kind == OrthType::Split {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            Ok(qpow(m * (m - 1)) * (qpow(m) + sign) * prod(m - 1))
        }
        _ => Err(Error::InvalidArgument(format!(
            "type {} does not exist in dimension {n}",
            kind.as_str()
        ))),
    }
}

/// Type of the quadratic space `gram mod q` (odd prime `q`).
pub fn classify(gram: &GramMatrix, q: u64) -> Result<OrthType> {
    if q == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !arith::is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let det = gram.determinant();
    let qb = BigInt::from(q);
    let mut dm = (&det % &qb).to_i64().unwrap();
    if dm < 0 {
        dm += q as i64;
    }
    if dm == 0 {
        return Err(Error::DegenerateModP(q));
    }
    let n = gram.rank();
    if n % 2 == 1 {
        return Ok(OrthType::Odd);
    }
    let signed = if (n / 2) % 2 == 1 { q as i64 - dm } else { dm } as u64;
    let square = arith::mod_pow(signed, (q - 1) / 2, q) == 1;
    Ok(if square {
        OrthType::Split
    } else {
        OrthType::Nonsplit
    })
}

/// Order by both routes when `N` is an odd prime and the guard allows
/// enumeration; by formula alone otherwise.
pub fn orth_data(
    gram: &GramMatrix,
    modulus: u64,
    fixed: Option<&[i64]>,
) -> Result<Vec<FiniteOrthData>> {
    let reduced = reduce_gram(gram, modulus);
    let mut out = Vec::new();
    let brute_ok = gram.rank() <= MAX_BRUTE_RANK && (2..=MAX_BRUTE_MODULUS).contains(&modulus);
    if brute_ok {
        out.push(FiniteOrthData {
            gram: reduced.clone(),
            modulus,
            fixed_vector: fixed.map(|v| v.to_vec()),
            order: BigInt::from(brute_force_order(gram, modulus, fixed)?),
            method: OrderMethod::BruteForce,
        });
    }
    if fixed.is_none() && modulus != 2 && arith::is_prime(modulus) {
        let kind = classify(gram, modulus)?;
        out.push(FiniteOrthData {
            gram: reduced,
            modulus,
            fixed_vector: None,
            order: formula_order(kind, gram.rank(), modulus)?,
            method: OrderMethod::Formula,
        });
    }
    if out.is_empty() {
        return Err(Error::GuardExceeded(format!(
            "no method applies to rank {} modulo {modulus}",
            gram.rank()
        )));
    }
    Ok(out)
}
