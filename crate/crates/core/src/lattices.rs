//! Integral lattices given by Gram matrices: the named lattices used for the
//! middle cohomology of a cubic fourfold, invariant computation, direct sums,
//! twists and orthogonal complements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};

/// Symmetric integer matrix of pairings in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramMatrix(IntMatrix);

impl GramMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Shape);
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(Self(entries))
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(linalg::from_i64(rows))
    }

    /// Diagonal lattice `<d_1> + ... + <d_n>`.
    pub fn diagonal(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Shape);
        }
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(if i == j { entries[i] } else { 0 }))
                    .collect()
            })
            .collect();
        Ok(Self(m))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.0
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.0[i][j]
    }

    pub fn determinant(&self) -> BigInt {
        linalg::determinant(&self.0)
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.0[i][i].is_even())
    }

    /// `x . y` under this form.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        linalg::dot(x, &linalg::mat_vec(&self.0, y))
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.pair(x, x)
    }

    /// Gram matrix of the vectors `basis` (given in this lattice's coordinates).
    pub fn restrict(&self, basis: &[Vec<BigInt>]) -> Result<GramMatrix> {
        let m = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.pair(x, y)).collect())
            .collect();
        GramMatrix::new(m)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeInvariants {
    pub rank: usize,
    /// `(n_plus, n_minus)`
    pub signature: (usize, usize),
    pub determinant: BigInt,
    pub even: bool,
    /// Elementary divisors greater than one (the discriminant group).
    pub disc_group: Vec<BigInt>,
}

/// A named lattice, plus the norm -3 vector when the lattice is `L0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardLattice {
    pub gram: GramMatrix,
    pub distinguished: Option<Vec<BigInt>>,
}

pub fn hyperbolic_plane() -> GramMatrix {
    GramMatrix::from_rows(&[&[0, 1], &[1, 0]]).unwrap()
}

pub fn a2() -> GramMatrix {
    GramMatrix::from_rows(&[&[2, 1], &[1, 2]]).unwrap()
}

/// `E8` in a root basis: chain `0-1-2-3-4-5-6` with node 7 attached to node 4.
pub fn e8() -> GramMatrix {
    let mut m = vec![vec![BigInt::zero(); 8]; 8];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::from(2);
    }
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
    edges.push((4, 7));
    for (i, j) in edges {
        m[i][j] = BigInt::from(-1);
        m[j][i] = BigInt::from(-1);
    }
    GramMatrix(m)
}

/// `L0 = <1>^2 + <-1>^21`.
pub fn l0() -> GramMatrix {
    let mut d = vec![1i64, 1];
    d.extend(std::iter::repeat_n(-1, 21));
    GramMatrix::diagonal(&d).unwrap()
}

/// `L = E8(-1)^2 + U^2 + A2(-1)`, blocks in that order.
pub fn l_lattice() -> GramMatrix {
    let e = rescale(&e8(), -1).unwrap();
    let u = hyperbolic_plane();
    [e.clone(), u.clone(), u, rescale(&a2(), -1).unwrap()]
        .iter()
        .fold(e, |acc, g| direct_sum(&acc, g))
}

/// Offset of the first `U` block inside [`l_lattice`]; the `U + U` block
/// occupies coordinates `offset..offset + 4`.
pub const L_HYPERBOLIC_OFFSET: usize = 16;

/// Build a named lattice.
///
/// Accepted tokens: `U`, `A2`, `E8`, `L0`, `L`, `diag(d1,...,dk)` and `<d>`
/// (which takes `n` copies), each optionally twisted as `NAME(m)`, e.g.
/// `A2(-1)` or `U(7)`.
pub fn make_standard(name: &str, n: Option<usize>) -> Result<StandardLattice> {
    let token = name.trim();
    let unknown = || Error::UnknownLattice(token.to_string());
    if let Some(inner) = token
        .strip_prefix("diag(")
        .and_then(|s| s.strip_suffix(')'))
    {
        let entries = inner
            .split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|_| unknown()))
            .collect::<Result<Vec<_>>>()?;
        return Ok(plain(GramMatrix::diagonal(&entries)?));
    }
    if let Some(inner) = token.strip_prefix('<').and_then(|s| s.strip_suffix('>')) {
        let d: i64 = inner.trim().parse().map_err(|_| unknown())?;
        let n = n.ok_or_else(|| Error::MissingDimension(token.to_string()))?;
        return Ok(plain(GramMatrix::diagonal(&vec![d; n.max(1)])?));
    }
    match token {
        "L0" => {
            return Ok(StandardLattice {
                gram: l0(),
                distinguished: Some(find_l0_vector()),
            })
        }
        "L" => return Ok(plain(l_lattice())),
        _ => {}
    }
    let (base, twist) = match token.find('(') {
        Some(i) if token.ends_with(')') => {
            let m: i64 = token[i + 1..token.len() - 1]
                .trim()
                .parse()
                .map_err(|_| unknown())?;
            (&token[..i], m)
        }
        Some(_) => return Err(unknown()),
        None => (token, 1),
    };
    let g = match base {
        "U" => hyperbolic_plane(),
        "A2" => a2(),
        "E8" => e8(),
        _ => return Err(unknown()),
    };
    Ok(plain(rescale(&g, twist)?))
}

fn plain(gram: GramMatrix) -> StandardLattice {
    StandardLattice {
        gram,
        distinguished: None,
    }
}

pub fn direct_sum(g1: &GramMatrix, g2: &GramMatrix) -> GramMatrix {
    let (n1, n2) = (g1.rank(), g2.rank());
    let mut m = vec![vec![BigInt::zero(); n1 + n2]; n1 + n2];
    for i in 0..n1 {
        for j in 0..n1 {
            m[i][j] = g1.0[i][j].clone();
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            m[n1 + i][n1 + j] = g2.0[i][j].clone();
        }
    }
    GramMatrix(m)
}

/// The twist `g(m)`: every pairing multiplied by `m`.
pub fn rescale(g: &GramMatrix, m: i64) -> Result<GramMatrix> {
    if m == 0 {
        return Err(Error::ZeroScale);
    }
    let m = BigInt::from(m);
    Ok(GramMatrix(
        g.0.iter()
            .map(|r| r.iter().map(|x| x * &m).collect())
            .collect(),
    ))
}

pub fn invariants(g: &GramMatrix) -> Result<LatticeInvariants> {
    let det = g.determinant();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    let (pos, neg, _) = linalg::inertia(&g.0);
    let disc_group = linalg::smith_invariants(&g.0)
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    Ok(LatticeInvariants {
        rank: g.rank(),
        signature: (pos, neg),
        determinant: det,
        even: g.is_even(),
        disc_group,
    })
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Basis of `{x : x . w = 0 for all w in vectors}`, saturated in `Z^n`.
pub fn complement_basis(g: &GramMatrix, vectors: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    if vectors.iter().any(|v| v.len() != g.rank()) {
        return Err(Error::Shape);
    }
    let rows: IntMatrix = vectors.iter().map(|w| linalg::mat_vec(&g.0, w)).collect();
    Ok(linalg::integer_kernel(&rows, g.rank()))
}

/// Gram matrix of the orthogonal complement of the primitive anisotropic
/// vector `w`.
pub fn orthogonal_complement(g: &GramMatrix, w: &[BigInt]) -> Result<GramMatrix> {
    if w.len() != g.rank() {
        return Err(Error::Shape);
    }
    let c = content(w);
    if c.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !c.is_one() {
        return Err(Error::NotPrimitive(c.to_string()));
    }
    if g.norm(w).is_zero() {
        return Err(Error::Isotropic);
    }
    let basis = complement_basis(g, &[w.to_vec()])?;
    g.restrict(&basis)
}

/// Lexicographically first vector of `L0` with coordinates in `[-3, 3]`,
/// norm `-3` and even orthogonal complement.
///
/// `L0` is odd unimodular, so the complement of a primitive `v` is even
/// exactly when `v` is characteristic (all coordinates odd); the search only
/// walks odd coordinates and the complement is re-checked at the end.
pub fn find_l0_vector() -> Vec<BigInt> {
    const VALUES: [i64; 4] = [-3, -1, 1, 3];
    let signs: Vec<i64> = (0..23).map(|i| if i < 2 { 1 } else { -1 }).collect();
    let g = l0();

    fn search(pos: usize, target: i64, signs: &[i64], acc: &mut Vec<i64>, g: &GramMatrix) -> bool {
        let remaining = (signs.len() - pos) as i64;
        if remaining == 0 {
            if target != 0 {
                return false;
            }
            let v: Vec<BigInt> = acc.iter().map(|&x| BigInt::from(x)).collect();
            return orthogonal_complement(g, &v)
                .map(|c| c.is_even())
                .unwrap_or(false);
        }
        // remaining contribution: positive slots add [1, 9] each, negative slots subtract
        let pos_left = signs[pos..].iter().filter(|&&s| s > 0).count() as i64;
        let neg_left = remaining - pos_left;
        let lo = pos_left - 9 * neg_left;
        let hi = 9 * pos_left - neg_left;
        if target < lo || target > hi {
            return false;
        }
        for x in VALUES {
            acc.push(x);
            if search(pos + 1, target - signs[pos] * x * x, signs, acc, g) {
                return true;
            }
            acc.pop();
        }
        false
    }

    let mut acc = Vec::with_capacity(23);
    let found = search(0, -3, &signs, &mut acc, &g);
    assert!(
        found,
        "L0 always contains a characteristic vector of norm -3"
    );
    acc.into_iter().map(BigInt::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn named_lattices() {
        assert_eq!(make_standard("U", None).unwrap().gram, hyperbolic_plane());
        assert_eq!(
            make_standard("A2(-1)", None).unwrap().gram,
            GramMatrix::from_rows(&[&[-2, -1], &[-1, -2]]).unwrap()
        );
        assert_eq!(e8().determinant(), BigInt::one());
        assert!(matches!(
            make_standard("K3", None),
            Err(Error::UnknownLattice(_))
        ));
        assert!(matches!(
            make_standard("<1>", None),
            Err(Error::MissingDimension(_))
        ));
        assert_eq!(
            make_standard("<-1>", Some(3)).unwrap().gram,
            GramMatrix::diagonal(&[-1, -1, -1]).unwrap()
        );
    }

    #[test]
    fn l0_and_its_vector() {
        let s = make_standard("L0", None).unwrap();
        let v = s.distinguished.unwrap();
        assert_eq!(s.gram.norm(&v), BigInt::from(-3));
        let mut expected = vec![-3, -3];
        expected.extend(std::iter::repeat_n(-1, 21));
        assert_eq!(v, ints(&expected));
    }

    #[test]
    fn rescale_rejects_zero() {
        assert_eq!(rescale(&hyperbolic_plane(), 0), Err(Error::ZeroScale));
        assert_eq!(
            rescale(&hyperbolic_plane(), 7).unwrap(),
            GramMatrix::from_rows(&[&[0, 7], &[7, 0]]).unwrap()
        );
    }

    #[test]
    fn complement_in_hyperbolic_plane() {
        let c = orthogonal_complement(&hyperbolic_plane(), &ints(&[1, 1])).unwrap();
        assert_eq!(c, GramMatrix::from_rows(&[&[-2]]).unwrap());
        let c =
            orthogonal_complement(&GramMatrix::diagonal(&[1, 1]).unwrap(), &ints(&[1, 0])).unwrap();
        assert_eq!(c, GramMatrix::from_rows(&[&[1]]).unwrap());
    }

    #[test]
    fn complement_errors() {
        let u = hyperbolic_plane();
        assert_eq!(
            orthogonal_complement(&u, &ints(&[0, 0])),
            Err(Error::ZeroVector)
        );
        assert!(matches!(
            orthogonal_complement(&u, &ints(&[2, 2])),
            Err(Error::NotPrimitive(_))
        ));
        assert_eq!(
            orthogonal_complement(&u, &ints(&[1, 0])),
            Err(Error::Isotropic)
        );
    }

    #[test]
    fn degenerate_rejected() {
        let g = GramMatrix::from_rows(&[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(invariants(&g), Err(Error::Degenerate));
        assert_eq!(
            GramMatrix::from_rows(&[&[1, 2], &[3, 1]]),
            Err(Error::NotSymmetric)
        );
    }
}
