//! Imaginary quadratic fields `K = Q(sqrt(-d))`: the quadratic character,
//! splitting of rational primes, the trace form on the ring of integers,
//! integral ideals by norm and generators of principal ideals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith;
use crate::binforms;
use crate::error::{Error, Result};
use crate::lattices::GramMatrix;

/// `K = Q(sqrt(-d))` with `d` squarefree; `disc` is `D` where `-D` is the
/// fundamental discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadField {
    disc: u64,
    d: u64,
}

impl QuadField {
    pub fn from_squarefree(d: u64) -> Result<Self> {
        if d == 0 || !arith::is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        let disc = if d % 4 == 3 { d } else { 4 * d };
        Ok(Self { disc, d })
    }

    /// Field with fundamental discriminant `-disc`.
    pub fn from_discriminant(disc: u64) -> Result<Self> {
        let d = match disc % 4 {
            3 => disc,
            0 => disc / 4,
            _ => return Err(Error::NotFundamental(disc)),
        };
        let k = Self::from_squarefree(d).map_err(|_| Error::NotFundamental(disc))?;
        if k.disc != disc {
            return Err(Error::NotFundamental(disc));
        }
        Ok(k)
    }

    /// `D`, so that `-D` is the discriminant of `K`.
    pub fn disc(&self) -> u64 {
        self.disc
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn neg_disc(&self) -> i64 {
        -(self.disc as i64)
    }

    /// `D mod 2`: the parity every `b` in an ideal `(a, b)` must have.
    fn delta(&self) -> i64 {
        (self.disc % 2) as i64
    }

    pub fn class_number(&self) -> usize {
        binforms::class_list(self.disc).len()
    }

    /// Roots of unity in `O_K`.
    pub fn unit_count(&self) -> usize {
        match self.disc {
            3 => 6,
            4 => 4,
            _ => 2,
        }
    }

    /// The element `sqrt(-D)`.
    pub fn sqrt_disc(&self) -> FieldElement {
        let f = if self.disc == self.d { 1 } else { 2 };
        FieldElement::new(0, f, self.d)
    }

    /// The integral basis generator `tau = (delta + sqrt(-D)) / 2`.
    pub fn tau(&self) -> FieldElement {
        (FieldElement::integer(self.delta(), self.d) + self.sqrt_disc()).halve()
    }

    /// `(b + sqrt(-D)) / 2`.
    fn half_root(&self, b: i64) -> FieldElement {
        (FieldElement::integer(b, self.d) + self.sqrt_disc()).halve()
    }

    /// Coordinates `(s, t)` with `x = s + t tau`, if `x` is integral.
    pub fn integral_coords(&self, x: &FieldElement) -> Option<(BigInt, BigInt)> {
        if x.d != self.d {
            return None;
        }
        let f = if self.disc == self.d { 1 } else { 2 };
        // tau = delta/2 + (f/2) sqrt(-d)
        let t = &x.y * BigRational::from_integer(BigInt::from(2))
            / BigRational::from_integer(BigInt::from(f));
        let s = &x.x - &t * BigRational::new(BigInt::from(self.delta()), BigInt::from(2));
        (s.is_integer() && t.is_integer()).then(|| (s.to_integer(), t.to_integer()))
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt(-{}))", self.d)
    }
}

/// `-d` if `-d = 1 (mod 4)`, else `-4d`.
pub fn fundamental_discriminant(d: u64) -> Result<i64> {
    QuadField::from_squarefree(d).map(|k| k.neg_disc())
}

/// The Kronecker symbol `(a | n)`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    if n == 0 {
        return if a.abs() == 1 { 1 } else { 0 };
    }
    let mut a = a as i128;
    let mut n = n as i128;
    let mut sign = 1i32;
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a | 2) = 1 for a = +-1 mod 8, -1 for a = +-3 mod 8
        let r = a.rem_euclid(8);
        if twos % 2 == 1 && (r == 3 || r == 5) {
            sign = -sign;
        }
    }
    // Jacobi symbol (a | n) for odd positive n
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplittingType {
    Split,
    Inert,
    Ramified,
}

impl SplittingType {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Split => "split",
            Self::Inert => "inert",
            Self::Ramified => "ramified",
        }
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn splitting_type(p: u64, k: &QuadField) -> Result<SplittingType> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(if k.disc.is_multiple_of(p) {
        SplittingType::Ramified
    } else if kronecker(k.neg_disc(), p as i64) == 1 {
        SplittingType::Split
    } else {
        SplittingType::Inert
    })
}

/// Gram matrix of `(O_K, (x, y) -> Tr(x conj(y)))` in the integral basis
/// `(1, tau)`, computed from traces.
pub fn trace_form_gram(k: &QuadField) -> GramMatrix {
    let one = FieldElement::integer(1, k.d);
    let second = if k.disc == k.d {
        (one.clone() + FieldElement::new(0, 1, k.d)).halve()
    } else {
        FieldElement::new(0, 1, k.d)
    };
    let basis = [one, second];
    let m = basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| (x.clone() * y.conj()).trace().to_integer())
                .collect()
        })
        .collect();
    GramMatrix::new(m).expect("trace form is symmetric")
}

/// Exact element `x + y sqrt(-d)` of `Q(sqrt(-d))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub x: BigRational,
    pub y: BigRational,
    d: u64,
}

impl FieldElement {
    pub fn new(x: i64, y: i64, d: u64) -> Self {
        Self::from_rationals(
            BigRational::from_integer(x.into()),
            BigRational::from_integer(y.into()),
            d,
        )
    }

    pub fn from_rationals(x: BigRational, y: BigRational, d: u64) -> Self {
        Self { x, y, d }
    }

    pub fn integer(x: i64, d: u64) -> Self {
        Self::new(x, 0, d)
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::from_rationals(self.x.clone(), -self.y.clone(), self.d)
    }

    pub fn norm(&self) -> BigRational {
        &self.x * &self.x + &self.y * &self.y * BigRational::from_integer(self.d.into())
    }

    pub fn trace(&self) -> BigRational {
        &self.x + &self.x
    }

    fn halve(self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        Self::from_rationals(self.x / &two, self.y / two, self.d)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_rationals(&self.x * c, &self.y * c, self.d)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::integer(1, self.d), |acc, _| acc * self.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        Ok(self.conj().scale(&self.norm().recip()))
    }

    /// `x` as an integer when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        (self.y.is_zero() && self.x.is_integer()).then(|| self.x.to_integer())
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.d, o.d);
        Self::from_rationals(self.x + o.x, self.y + o.y, self.d)
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_rationals(-self.x, -self.y, self.d)
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.d, o.d);
        let d = BigRational::from_integer(self.d.into());
        let x = &self.x * &o.x - &self.y * &o.y * d;
        let y = &self.x * &o.y + &self.y * &o.x;
        Self::from_rationals(x, y, self.d)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "({})*sqrt(-{})", self.y, self.d),
            _ => write!(f, "{} + ({})*sqrt(-{})", self.x, self.y, self.d),
        }
    }
}

/// Integral ideal `content * (Z a + Z (b + sqrt(-D))/2)` with the primitive
/// part in normal form `-a < b <= a`, `b^2 = -D (mod 4a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealRep {
    pub content: u64,
    pub a: u64,
    pub b: i64,
}

impl IdealRep {
    pub fn unit(k: &QuadField) -> Self {
        Self {
            content: 1,
            a: 1,
            b: k.delta(),
        }
    }

    pub fn norm(&self) -> u64 {
        self.content * self.content * self.a
    }

    /// The Z-basis `(content * a, content * (b + sqrt(-D))/2)`.
    pub fn basis(&self, k: &QuadField) -> [FieldElement; 2] {
        let g = BigRational::from_integer(self.content.into());
        [
            FieldElement::integer(self.a as i64, k.d).scale(&g),
            k.half_root(self.b).scale(&g),
        ]
    }

    /// The conjugate ideal.
    pub fn conj(&self) -> Self {
        let b = arith::centered(-(self.b as i128), self.a as i128) as i64;
        Self { b, ..*self }
    }

    /// Membership test for an element of `K`.
    pub fn contains(&self, x: &FieldElement, k: &QuadField) -> bool {
        let Some((s, t)) = k.integral_coords(x) else {
            return false;
        };
        // x = u * g a + v * g (b + sqrt(-D))/2; in (1, tau) coordinates the
        // second generator is g((b - delta)/2, 1)
        let g = BigInt::from(self.content);
        if !(&t % &g).is_zero() {
            return false;
        }
        let v = &t / &g;
        let rest = s - &v * &g * BigInt::from((self.b - k.delta()) / 2);
        (rest % (g * BigInt::from(self.a))).is_zero()
    }
}

impl fmt::Display for IdealRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.content == 1 {
            write!(f, "({}, {})", self.a, self.b)
        } else {
            write!(f, "{}*({}, {})", self.content, self.a, self.b)
        }
    }
}

/// The ideal generated by a nonzero integral element, in normal form.
pub fn ideal_of_element(alpha: &FieldElement, k: &QuadField) -> Result<IdealRep> {
    if alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (s1, t1) = k
        .integral_coords(alpha)
        .ok_or(Error::InvalidArgument("element is not integral".into()))?;
    let (s2, t2) = k
        .integral_coords(&(alpha.clone() * k.tau()))
        .expect("product of integral elements");
    // Hermite form of the Z-span of (s1,t1), (s2,t2): rows (A, 0), (B, C)
    let ext = t1.extended_gcd(&t2);
    let c = ext.gcd.abs();
    let big_a = (&s1 * &t2 - &s2 * &t1).abs() / &c;
    let b_raw: BigInt =
        (&ext.x * &s1 + &ext.y * &s2) * BigInt::from(if ext.gcd.is_negative() { -1 } else { 1 });
    let g = c
        .to_u64()
        .ok_or(Error::InvalidArgument("ideal too large".into()))?;
    let a = (&big_a / &c)
        .to_u64()
        .ok_or(Error::InvalidArgument("ideal too large".into()))?;
    let b_big: BigInt = BigInt::from(2) * b_raw / &c + BigInt::from(k.delta());
    let b = arith::centered(
        b_big.mod_floor(&BigInt::from(2 * a)).to_i128().unwrap(),
        a as i128,
    ) as i64;
    Ok(IdealRep { content: g, a, b })
}

/// Primitive ideals of norm `p^j` above the prime `p`, as `b` values.
fn primitive_prime_power_roots(p: u64, j: u32, k: &QuadField) -> Vec<i64> {
    if j == 0 {
        return vec![k.delta()];
    }
    let pj = p.pow(j) as i128;
    let modulus = 4 * pj;
    let target = (-(k.disc as i128)).rem_euclid(modulus);
    if p == 2 {
        return (-(pj as i64) + 1..=pj as i64)
            .filter(|&b| (b as i128 * b as i128).rem_euclid(modulus) == target)
            .collect();
    }
    let Some(r0) = arith::sqrt_mod_prime((-(k.disc as i128)).rem_euclid(p as i128) as u64, p)
    else {
        return Vec::new();
    };
    if k.disc.is_multiple_of(p) {
        if j > 1 {
            return Vec::new();
        }
        let b = if k.delta() == 1 { p as i64 } else { 0 };
        return vec![b];
    }
    // Hensel lift r^2 = -D mod p^j
    let mut r = r0 as i128;
    let mut m = p as i128;
    for _ in 1..j {
        m *= p as i128;
        let f = (r * r + k.disc as i128).rem_euclid(m);
        let inv = modinv((2 * r).rem_euclid(m), m);
        r = (r - f * inv).rem_euclid(m);
    }
    let fix = |x: i128| {
        let x = if x.rem_euclid(2) as i64 != k.delta() {
            x + pj
        } else {
            x
        };
        arith::centered(x, pj) as i64
    };
    vec![fix(r), fix(-r)]
}

fn modinv(a: i128, m: i128) -> i128 {
    let e = BigInt::from(a).extended_gcd(&BigInt::from(m));
    e.x.mod_floor(&BigInt::from(m)).to_i128().unwrap()
}

/// All integral ideals of norm `n`, built prime by prime from the
/// factorization of `n`, sorted by `(content, a, b)`.
pub fn ideals_of_norm(n: u64, k: &QuadField) -> Vec<IdealRep> {
    if n == 0 {
        return Vec::new();
    }
    // per prime: list of (content factor, primitive modulus p^j, b mod 2p^j)
    let mut local: Vec<Vec<(u64, u64, i64)>> = Vec::new();
    for (p, e) in arith::factorize(n) {
        let kind = splitting_type(p, k).expect("factor is prime");
        let mut options = Vec::new();
        match kind {
            SplittingType::Inert => {
                if e % 2 == 0 {
                    options.push((p.pow(e / 2), 1, k.delta()));
                }
            }
            SplittingType::Ramified => {
                let j = e % 2;
                for b in primitive_prime_power_roots(p, j, k) {
                    options.push((p.pow(e / 2), p.pow(j), b));
                }
            }
            SplittingType::Split => {
                // p^i pbar^(e-i): content p^min, primitive part p^j or pbar^j
                for i in 0..=e {
                    let lo = i.min(e - i);
                    let j = e - 2 * lo;
                    let roots = split_root(p, j, k);
                    let b = if 2 * i >= e { roots } else { -roots };
                    options.push((p.pow(lo), p.pow(j), b));
                }
            }
        }
        if options.is_empty() {
            return Vec::new();
        }
        local.push(options);
    }
    let mut out = vec![(1u64, 1u64, 1i128 << 1, k.delta() as i128)];
    // combine by CRT on b mod 2a; parity is carried by the modulus-2 factor
    for options in local {
        let mut next = Vec::new();
        for &(g, a, m, b) in &out {
            for &(g2, a2, b2) in &options {
                let m2 = 2 * a2 as i128;
                let (bb, mm) = crt(b, m, b2 as i128, m2);
                next.push((g * g2, a * a2, mm, bb));
            }
        }
        out = next;
    }
    let mut ideals: Vec<IdealRep> = out
        .into_iter()
        .map(|(g, a, _, b)| IdealRep {
            content: g,
            a,
            b: arith::centered(b, a as i128) as i64,
        })
        .collect();
    ideals.sort();
    ideals.dedup();
    ideals
}

/// `b` for the distinguished prime power `p^j` above a split `p`; its
/// conjugate uses `-b`. Powers are chosen compatibly (`b_j = b_1 mod 2p`).
fn split_root(p: u64, j: u32, k: &QuadField) -> i64 {
    if j == 0 {
        return k.delta();
    }
    let roots = primitive_prime_power_roots(p, j, k);
    let base = primitive_prime_power_roots(p, 1, k);
    let b1 = *base.iter().max().expect("split prime has roots");
    let m = 2 * p as i64;
    *roots
        .iter()
        .find(|&&b| (b - b1).rem_euclid(m) == 0)
        .expect("compatible lift exists")
}

/// Solve `x = r1 mod m1`, `x = r2 mod m2` for compatible residues; returns
/// `(x, lcm)`.
fn crt(r1: i128, m1: i128, r2: i128, m2: i128) -> (i128, i128) {
    let e = BigInt::from(m1).extended_gcd(&BigInt::from(m2));
    let g = e.gcd.to_i128().unwrap();
    debug_assert_eq!((r2 - r1).rem_euclid(g), 0, "incompatible residues");
    let l = m1 / g * m2;
    let k =
        ((r2 - r1) / g).rem_euclid(m2 / g) * e.x.to_i128().unwrap().rem_euclid(m2 / g) % (m2 / g);
    ((r1 + m1 * k).rem_euclid(l), l)
}

/// Generator of a principal ideal, when `K` has class number one.
///
/// Searches `t` in `[-T, T]` with `T = ceil(sqrt(N(I) D)) + 1` for a solution
/// of `a s^2 + b s t + c t^2 = 1`, where `(a, b, c)` is the norm form of the
/// primitive part; the generator is `content * (s a + t (b + sqrt(-D))/2)`.
pub fn principal_generator(ideal: &IdealRep, k: &QuadField) -> Result<Option<FieldElement>> {
    if k.class_number() > 1 {
        return Err(Error::UnsupportedField(
            k.disc,
            format!("class number {}", k.class_number()),
        ));
    }
    Ok(generator_search(ideal, k))
}

pub(crate) fn generator_search(ideal: &IdealRep, k: &QuadField) -> Option<FieldElement> {
    let a = ideal.a as i128;
    let b = ideal.b as i128;
    let disc = k.disc as i128;
    let c = (b * b + disc) / (4 * a);
    let bound = arith::isqrt((ideal.norm() as u128) * (k.disc as u128)) as i128 + 2;
    for t in (0..=bound).flat_map(|t| if t == 0 { vec![0] } else { vec![t, -t] }) {
        let disc_t = 4 * a - disc * t * t;
        let Some(r) = arith::exact_sqrt(disc_t) else {
            if disc_t < 0 {
                break;
            }
            continue;
        };
        for root in [r, -r] {
            let num = -b * t + root;
            if num % (2 * a) == 0 {
                let s = num / (2 * a);
                debug_assert_eq!(a * s * s + b * s * t + c * t * t, 1);
                let beta = FieldElement::integer((s * a) as i64, k.d)
                    + k.half_root(ideal.b)
                        .scale(&BigRational::from_integer(BigInt::from(t)));
                let g = BigRational::from_integer(ideal.content.into());
                return Some(beta.scale(&g));
            }
        }
    }
    None
}

/// `conj(alpha) / alpha`, an element of norm one.
pub fn rx_action(alpha: &FieldElement) -> Result<FieldElement> {
    if alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = alpha.norm();
    Ok(alpha.conj().pow(2).scale(&n.recip()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: u64) -> QuadField {
        QuadField::from_discriminant(k).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn discriminants() {
        assert_eq!(fundamental_discriminant(3).unwrap(), -3);
        assert_eq!(fundamental_discriminant(1).unwrap(), -4);
        assert_eq!(fundamental_discriminant(5).unwrap(), -20);
        assert_eq!(fundamental_discriminant(12), Err(Error::NotSquarefree(12)));
        assert!(QuadField::from_discriminant(12).is_err());
        assert!(QuadField::from_discriminant(5).is_err());
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(-3, 7), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-8, 3), 1);
    }

    #[test]
    fn splitting_examples() {
        let k = q(7);
        assert_eq!(splitting_type(2, &k).unwrap(), SplittingType::Split);
        assert_eq!(splitting_type(3, &k).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(7, &k).unwrap(), SplittingType::Ramified);
        assert_eq!(splitting_type(9, &k), Err(Error::NotPrime(9)));
    }

    #[test]
    fn trace_forms() {
        let g = |d| trace_form_gram(&QuadField::from_squarefree(d).unwrap());
        assert_eq!(g(5), GramMatrix::diagonal(&[2, 10]).unwrap());
        assert_eq!(g(1), GramMatrix::diagonal(&[2, 2]).unwrap());
        assert_eq!(g(7), GramMatrix::from_rows(&[&[2, 1], &[1, 4]]).unwrap());
    }

    #[test]
    fn ideals_in_q_sqrt_minus_7() {
        let k = q(7);
        let two = ideals_of_norm(2, &k);
        assert_eq!(
            two.iter().map(|i| (i.a, i.b)).collect::<Vec<_>>(),
            vec![(2, -1), (2, 1)]
        );
        assert!(ideals_of_norm(3, &k).is_empty());
        assert_eq!(ideals_of_norm(1, &k), vec![IdealRep::unit(&k)]);
        let nine = ideals_of_norm(9, &k);
        assert_eq!(
            nine,
            vec![IdealRep {
                content: 3,
                a: 1,
                b: 1
            }]
        );
    }

    #[test]
    fn generators() {
        let k = q(7);
        let p = IdealRep {
            content: 1,
            a: 2,
            b: 1,
        };
        let g = principal_generator(&p, &k).unwrap().unwrap();
        assert_eq!(g.norm(), rat(2, 1));
        let expected = FieldElement::from_rationals(rat(1, 2), rat(1, 2), 7);
        assert!(g == expected || g == -expected);
        assert_eq!(ideal_of_element(&g, &k).unwrap(), p);
        let unit = principal_generator(&IdealRep::unit(&k), &k)
            .unwrap()
            .unwrap();
        assert_eq!(unit.norm(), rat(1, 1));
        let three = principal_generator(
            &IdealRep {
                content: 3,
                a: 1,
                b: 1,
            },
            &k,
        )
        .unwrap()
        .unwrap();
        assert_eq!(three.as_integer().map(|x| x.abs()), Some(BigInt::from(3)));
        let k15 = q(15);
        assert!(matches!(
            principal_generator(&IdealRep::unit(&k15), &k15),
            Err(Error::UnsupportedField(15, _))
        ));
    }

    #[test]
    fn reflex_action() {
        let i = FieldElement::new(0, 1, 1);
        assert_eq!(rx_action(&i).unwrap(), FieldElement::integer(-1, 1));
        assert_eq!(
            rx_action(&FieldElement::integer(5, 7)).unwrap(),
            FieldElement::integer(1, 7)
        );
        let alpha = FieldElement::from_rationals(rat(1, 2), rat(1, 2), 7);
        assert_eq!(
            rx_action(&alpha).unwrap(),
            FieldElement::from_rationals(rat(-3, 4), rat(-1, 4), 7)
        );
        assert_eq!(
            rx_action(&FieldElement::integer(0, 7)),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn membership_and_conjugate() {
        let k = q(7);
        let p = IdealRep {
            content: 1,
            a: 2,
            b: 1,
        };
        assert_eq!(
            p.conj(),
            IdealRep {
                content: 1,
                a: 2,
                b: -1
            }
        );
        let [x, y] = p.basis(&k);
        assert!(p.contains(&x, &k) && p.contains(&y, &k));
        assert!(!p.contains(&FieldElement::integer(1, 7), &k));
    }
}
