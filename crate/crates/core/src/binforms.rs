//! Positive-definite even binary lattices `[[2a, b], [b, 2c]]`: Gauss
//! reduction, proper class enumeration, the CM field, finite-order
//! isometries and the two period points.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::lattices::GramMatrix;
use crate::quadfield::FieldElement;

/// Even binary lattice with Gram `[[2a, b], [b, 2c]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryEvenForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl BinaryEvenForm {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    /// From a rank-2 Gram matrix with even diagonal.
    pub fn from_gram(g: &GramMatrix) -> Result<Self> {
        if g.rank() != 2 {
            return Err(Error::Shape);
        }
        if !g.is_even() {
            return Err(Error::InvalidArgument("Gram matrix is not even".into()));
        }
        Ok(Self {
            a: g.entry(0, 0) / 2,
            b: g.entry(0, 1).clone(),
            c: g.entry(1, 1) / 2,
        })
    }

    pub fn gram(&self) -> GramMatrix {
        let two = BigInt::from(2);
        GramMatrix::new(vec![
            vec![&two * &self.a, self.b.clone()],
            vec![self.b.clone(), &two * &self.c],
        ])
        .unwrap()
    }

    /// Gram determinant `4ac - b^2`.
    pub fn det(&self) -> BigInt {
        BigInt::from(4) * &self.a * &self.c - &self.b * &self.b
    }

    pub fn negate(&self) -> Self {
        Self::new(-&self.a, -&self.b, -&self.c)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.det().is_positive() && self.a.is_positive()
    }

    pub fn is_reduced(&self) -> bool {
        let abs_b = self.b.abs();
        abs_b <= self.a
            && self.a <= self.c
            && (!(abs_b == self.a || self.a == self.c) || !self.b.is_negative())
    }

    /// Gram of the form in the basis given by the columns of `m`.
    pub fn transform(&self, m: &[[i64; 2]; 2]) -> Self {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let (p, q, r, s) = (
            BigInt::from(m[0][0]),
            BigInt::from(m[0][1]),
            BigInt::from(m[1][0]),
            BigInt::from(m[1][1]),
        );
        Self {
            a: a * &p * &p + b * &p * &r + c * &r * &r,
            b: BigInt::from(2) * a * &p * &q
                + b * (&p * &s + &q * &r)
                + BigInt::from(2) * c * &r * &s,
            c: a * &q * &q + b * &q * &s + c * &s * &s,
        }
    }
}

impl fmt::Display for BinaryEvenForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Sign-normalize a definite form: negative-definite input is negated and
/// the flag returned is `true`.
pub fn normalize_definite(f: &BinaryEvenForm) -> Result<(BinaryEvenForm, bool)> {
    let det = f.det();
    if det.is_zero() {
        return Err(Error::Degenerate);
    }
    if det.is_negative() {
        return Err(Error::Indefinite);
    }
    if f.a.is_positive() {
        Ok((f.clone(), false))
    } else {
        Ok((f.negate(), true))
    }
}

/// Reduced form properly equivalent to `f`, and the `SL2(Z)` matrix `m`
/// with `f.transform(m) == reduced`.
pub fn reduce_with_transform(f: &BinaryEvenForm) -> Result<(BinaryEvenForm, BigMatrix2)> {
    if f.det().is_zero() {
        return Err(Error::Degenerate);
    }
    if !f.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let det = f.det();
    let (mut a, mut b, mut c) = (f.a.clone(), f.b.clone(), f.c.clone());
    let mut m = BigMatrix2::identity();
    loop {
        // translate: b -> b + 2ak lands in (-a, a]
        let two_a = BigInt::from(2) * &a;
        let mut nb = b.mod_floor(&two_a);
        if nb > a {
            nb -= &two_a;
        }
        let k = (&nb - &b) / &two_a;
        if !k.is_zero() {
            m = m.mul(&BigMatrix2([
                [BigInt::one(), k],
                [BigInt::zero(), BigInt::one()],
            ]));
            b = nb;
            c = (&b * &b + &det) / (BigInt::from(4) * &a);
        }
        if a > c {
            m = m.mul(&BigMatrix2::s());
            std::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        break;
    }
    if a == c && b.is_negative() {
        m = m.mul(&BigMatrix2::s());
        b = -b;
    }
    Ok((BinaryEvenForm { a, b, c }, m))
}

pub fn reduce(f: &BinaryEvenForm) -> Result<BinaryEvenForm> {
    reduce_with_transform(f).map(|(r, _)| r)
}

/// 2x2 integer matrix acting on basis columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigMatrix2(pub [[BigInt; 2]; 2]);

impl BigMatrix2 {
    pub fn identity() -> Self {
        Self([
            [BigInt::one(), BigInt::zero()],
            [BigInt::zero(), BigInt::one()],
        ])
    }

    fn s() -> Self {
        Self([
            [BigInt::zero(), -BigInt::one()],
            [BigInt::one(), BigInt::zero()],
        ])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j];
        Self([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> BigInt {
        &self.0[0][0] * &self.0[1][1] - &self.0[0][1] * &self.0[1][0]
    }
}

/// All reduced positive-definite even forms with `4ac - b^2 == det`, sorted
/// by `(a, b, c)`.
pub fn class_list(det: u64) -> Vec<BinaryEvenForm> {
    if det == 0 || !(det.is_multiple_of(4) || det % 4 == 3) {
        return Vec::new();
    }
    let det = det as i128;
    let b_max = arith::isqrt((det / 3) as u128) as i128;
    let mut out = Vec::new();
    for b in (-b_max..=b_max).filter(|b| (b - det).rem_euclid(2) == 0) {
        let ac4 = det + b * b;
        let ac = ac4 / 4;
        let mut a = b.abs().max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                let f = (a, b, c);
                let boundary = b.abs() == a || a == c;
                if !(boundary && b < 0) {
                    out.push(f);
                }
            }
            a += 1;
        }
    }
    out.sort_unstable();
    out.into_iter()
        .map(|(a, b, c)| BinaryEvenForm::new(a, b, c))
        .collect()
}

fn squarefree_decompose(n: u64) -> (u64, u64) {
    // n = f^2 * s with s squarefree
    let mut f = 1;
    let mut s = 1;
    for (p, k) in arith::factorize(n) {
        f *= p.pow(k / 2);
        if k % 2 == 1 {
            s *= p;
        }
    }
    (f, s)
}

/// Fundamental discriminant of `Q(sqrt(b^2 - 4ac))`.
pub fn endomorphism_field(f: &BinaryEvenForm) -> Result<i64> {
    let (g, _) = normalize_definite(f)?;
    let det = g
        .det()
        .to_u64()
        .ok_or(Error::InvalidArgument("determinant too large".into()))?;
    let (_, s) = squarefree_decompose(det);
    Ok(if s % 4 == 3 {
        -(s as i64)
    } else {
        -4 * s as i64
    })
}

/// 2x2 integer matrix acting on coordinate columns.
pub type Matrix2 = [[i64; 2]; 2];

fn mul2(x: &Matrix2, y: &Matrix2) -> Matrix2 {
    let mut r = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    r
}

/// Multiplicative order of a 2x2 matrix, if at most 12.
pub fn matrix_order(g: &Matrix2) -> Option<u32> {
    let id = [[1, 0], [0, 1]];
    let mut acc = *g;
    for k in 1..=12 {
        if acc == id {
            return Some(k);
        }
        acc = mul2(&acc, g);
    }
    None
}

/// A proper isometry of finite order > 2 with entries in `[-bound, bound]`.
///
/// Among candidates the one of largest order is returned, and among those the
/// positive rotation (it moves the first basis vector towards the second,
/// i.e. `g[1][0] > 0`). Remaining ties: smallest max-entry, then
/// lexicographic on the row-major entries.
pub fn finite_isometry(f: &BinaryEvenForm, bound: i64) -> Result<Option<Matrix2>> {
    let (f, _) = normalize_definite(f)?;
    if bound < 1 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let range = -bound..=bound;
    let mut best: Option<(Matrix2, u32)> = None;
    for p in range.clone() {
        for q in range.clone() {
            for r in range.clone() {
                for s in range.clone() {
                    if p * s - q * r != 1 {
                        continue;
                    }
                    let g = [[p, q], [r, s]];
                    if f.transform(&g) != f {
                        continue;
                    }
                    let Some(order) = matrix_order(&g) else {
                        continue;
                    };
                    if order <= 2 {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((h, ho)) => isometry_key(&g, order) < isometry_key(h, *ho),
                    };
                    if better {
                        best = Some((g, order));
                    }
                }
            }
        }
    }
    Ok(best.map(|(g, _)| g))
}

fn isometry_key(g: &Matrix2, order: u32) -> (std::cmp::Reverse<u32>, bool, i64, [i64; 4]) {
    let max = g.iter().flatten().map(|x| x.abs()).max().unwrap_or(0);
    (
        std::cmp::Reverse(order),
        g[1][0] <= 0,
        max,
        [g[0][0], g[0][1], g[1][0], g[1][1]],
    )
}

/// A root `z = re + im * sqrt(-radicand)` of `2a z^2 + 2b z + 2c`, with
/// `radicand` squarefree. The isotropic line is spanned by `(z, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodPoint {
    pub re: BigRational,
    pub im: BigRational,
    pub radicand: u64,
}

impl PeriodPoint {
    pub fn as_element(&self) -> FieldElement {
        FieldElement::from_rationals(self.re.clone(), self.im.clone(), self.radicand)
    }

    pub fn conj(&self) -> Self {
        Self {
            im: -self.im.clone(),
            ..self.clone()
        }
    }

    /// `2a z^2 + 2b z + 2c`, exactly.
    pub fn evaluate(&self, f: &BinaryEvenForm) -> FieldElement {
        let z = self.as_element();
        let d = self.radicand;
        let k = |x: &BigInt| {
            FieldElement::from_rationals(BigRational::from_integer(2 * x), BigRational::zero(), d)
        };
        k(&f.a) * z.clone() * z.clone() + k(&f.b) * z + k(&f.c)
    }
}

impl fmt::Display for PeriodPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_element())
    }
}

/// The two period points; the first has positive imaginary part.
pub fn period_points(f: &BinaryEvenForm) -> Result<(PeriodPoint, PeriodPoint)> {
    let (f, _) = normalize_definite(f)?;
    let det = f
        .det()
        .to_u64()
        .ok_or(Error::InvalidArgument("determinant too large".into()))?;
    let (sq, radicand) = squarefree_decompose(det);
    let two_a = BigInt::from(2) * &f.a;
    let re = BigRational::new(-f.b.clone(), two_a.clone());
    let im = BigRational::new(BigInt::from(sq), two_a);
    let z = PeriodPoint { re, im, radicand };
    Ok((z.clone(), z.conj()))
}

/// Eigenvalue of the isometry `g` on the period vector `(z, 1)`, or `None`
/// if `(z, 1)` is not an eigenvector.
pub fn isometry_eigenvalue(g: &Matrix2, z: &PeriodPoint) -> Option<FieldElement> {
    let w = z.as_element();
    let d = z.radicand;
    let int = |x: i64| FieldElement::integer(x, d);
    let top = int(g[0][0]) * w.clone() + int(g[0][1]);
    let lambda = int(g[1][0]) * w.clone() + int(g[1][1]);
    (top == lambda.clone() * w).then_some(lambda)
}

/// Coefficients `(1, -trace, norm)` of the minimal polynomial over `Q` of a
/// non-rational element.
pub fn minimal_polynomial(x: &FieldElement) -> [BigRational; 3] {
    [BigRational::one(), -x.trace(), x.norm()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: i64, b: i64, c: i64) -> BinaryEvenForm {
        BinaryEvenForm::new(a, b, c)
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(reduce(&f(1, 2, 2)).unwrap(), f(1, 0, 1));
        assert_eq!(reduce(&f(1, 0, 1)).unwrap(), f(1, 0, 1));
        assert_eq!(reduce(&f(2, 1, 2)).unwrap(), f(2, 1, 2));
        assert_eq!(reduce(&f(2, -1, 2)).unwrap(), f(2, 1, 2));
        assert_eq!(reduce(&f(-1, 0, -1)), Err(Error::NotPositiveDefinite));
        assert_eq!(reduce(&f(1, 2, 1)), Err(Error::Degenerate));
    }

    #[test]
    fn class_lists() {
        assert_eq!(class_list(4), vec![f(1, 0, 1)]);
        assert_eq!(class_list(3), vec![f(1, 1, 1)]);
        assert_eq!(class_list(15), vec![f(1, 1, 4), f(2, 1, 2)]);
        assert!(class_list(5).is_empty());
    }

    #[test]
    fn endomorphism_fields() {
        assert_eq!(endomorphism_field(&f(-11, 11, -11)).unwrap(), -3);
        assert_eq!(endomorphism_field(&f(11, -11, 11)).unwrap(), -3);
        assert_eq!(endomorphism_field(&f(1, 0, 1)).unwrap(), -4);
        assert_eq!(endomorphism_field(&f(1, 1, 1)).unwrap(), -3);
        assert_eq!(endomorphism_field(&f(1, 2, 1)), Err(Error::Degenerate));
        assert_eq!(endomorphism_field(&f(1, 3, 1)), Err(Error::Indefinite));
    }

    #[test]
    fn isometries() {
        let g = finite_isometry(&f(11, -11, 11), 2).unwrap().unwrap();
        assert_eq!(g, [[1, -1], [1, 0]]);
        assert_eq!(matrix_order(&g), Some(6));
        let g = finite_isometry(&f(1, 0, 1), 1).unwrap().unwrap();
        assert_eq!(g, [[0, -1], [1, 0]]);
        assert_eq!(matrix_order(&g), Some(4));
        assert_eq!(finite_isometry(&f(1, 0, 5), 3).unwrap(), None);
    }

    #[test]
    fn periods() {
        let (z, w) = period_points(&f(1, 0, 1)).unwrap();
        assert_eq!(z.as_element(), FieldElement::new(0, 1, 1));
        assert_eq!(w.as_element(), FieldElement::new(0, -1, 1));
        let (z, _) = period_points(&f(1, 1, 1)).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(z.re, -half.clone());
        assert_eq!(z.im, half);
        assert_eq!(z.radicand, 3);
        let form = f(1, 1, 4);
        let (z, w) = period_points(&form).unwrap();
        assert_eq!(z.radicand, 15);
        assert!(z.evaluate(&form).is_zero() && w.evaluate(&form).is_zero());
    }

    #[test]
    fn order_six_eigenvalue_is_primitive_sixth_root() {
        let form = f(11, -11, 11);
        let g = finite_isometry(&form, 2).unwrap().unwrap();
        let (z, _) = period_points(&form).unwrap();
        let lambda = isometry_eigenvalue(&g, &z).unwrap();
        let [one, t, n] = minimal_polynomial(&lambda);
        assert!(one.is_one());
        assert_eq!(t, -BigRational::one());
        assert_eq!(n, BigRational::one());
    }
}
