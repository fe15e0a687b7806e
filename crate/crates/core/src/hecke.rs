//! The weight-3 CM newform attached to an imaginary quadratic field of class
//! number one: the Hecke character `(alpha) -> alpha^2` with its
//! generator normalization, the Dirichlet characters `eta` and
//! `epsilon = eta * phi`, and the q-expansion `sum psi(a) q^N(a)`.
//!
//! An independent eta-product routine is provided as an oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith;
use crate::error::{Error, Result};
use crate::quadfield::{self, FieldElement, IdealRep, QuadField, SplittingType};

/// Discriminants `D` of the imaginary quadratic fields of class number one.
pub const SUPPORTED_DISCRIMINANTS: [u64; 9] = [3, 4, 7, 8, 11, 19, 43, 67, 163];

/// How a principal ideal's generator is chosen before squaring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Units are `+-1`; `alpha^2` does not depend on the choice.
    SignFree,
    /// The unique generator congruent to 1 modulo the conductor.
    CongruentToOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeCharSpec {
    pub field: QuadField,
    pub conductor: IdealRep,
    pub normalization: Normalization,
    units: Vec<FieldElement>,
}

impl HeckeCharSpec {
    /// `M`, the norm of the conductor.
    pub fn conductor_norm(&self) -> u64 {
        self.conductor.norm()
    }

    /// `D * M`.
    pub fn level(&self) -> u64 {
        self.field.disc() * self.conductor_norm()
    }

    pub fn units(&self) -> &[FieldElement] {
        &self.units
    }

    pub fn coprime(&self, ideal: &IdealRep) -> bool {
        // conductors built here are supported on ramified primes only, where
        // coprimality is visible on norms
        ideal.norm().gcd(&self.conductor_norm()) == 1
    }

    fn congruent_to_one(&self, x: &FieldElement) -> bool {
        let one = FieldElement::integer(1, self.field.d());
        self.conductor.contains(&(x.clone() - one), &self.field)
    }

    /// Generator of `ideal` chosen by the normalization rule.
    pub fn normalized_generator(&self, ideal: &IdealRep) -> Result<FieldElement> {
        if !self.coprime(ideal) {
            return Err(Error::NotCoprime);
        }
        let alpha = quadfield::generator_search(ideal, &self.field).ok_or(Error::NotPrincipal)?;
        match self.normalization {
            Normalization::SignFree => Ok(alpha),
            Normalization::CongruentToOne => self
                .units
                .iter()
                .map(|u| alpha.clone() * u.clone())
                .find(|x| self.congruent_to_one(x))
                .ok_or_else(|| {
                    Error::UnsupportedField(self.field.disc(), "unit normalization failed".into())
                }),
        }
    }
}

fn roots_of_unity(k: &QuadField) -> Vec<FieldElement> {
    let d = k.d();
    let gen = match k.disc() {
        4 => FieldElement::new(0, 1, d),
        3 => FieldElement::from_rationals(
            BigRational::new(1.into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
            d,
        ),
        _ => FieldElement::integer(-1, d),
    };
    (0..k.unit_count() as u32).map(|e| gen.pow(e)).collect()
}

/// Size of `(O_K / m)^x` for an ideal `m` of `K`.
fn unit_group_order(m: &IdealRep, k: &QuadField) -> Result<u64> {
    let mut order = BigRational::from_integer(m.norm().into());
    for (p, _) in arith::factorize(m.norm()) {
        let kind = quadfield::splitting_type(p, k)?;
        let local = |np: u64| BigRational::new((np - 1).into(), np.into());
        match kind {
            SplittingType::Inert => order *= local(p * p),
            SplittingType::Ramified => order *= local(p),
            SplittingType::Split => {
                let both = m.content.is_multiple_of(p);
                order *= local(p);
                if both {
                    order *= local(p);
                }
            }
        }
    }
    order
        .to_integer()
        .to_u64()
        .ok_or(Error::InvalidArgument("conductor too large".into()))
}

/// The character of infinity type `(2, 0)` attached to `K`.
///
/// For `D` other than 3 and 4 the conductor is trivial; for `D = 4` it is
/// `(1+i)^3` and for `D = 3` it is `(3)`, the smallest moduli into whose unit
/// groups the roots of unity inject. Injectivity, surjectivity and the
/// condition `u = 1 (mod m) => u^2 = 1` are checked here.
pub fn canonical_character(k: &QuadField) -> Result<HeckeCharSpec> {
    if !SUPPORTED_DISCRIMINANTS.contains(&k.disc()) {
        return Err(Error::UnsupportedField(
            k.disc(),
            format!("class number {}", k.class_number()),
        ));
    }
    let (conductor, normalization) = match k.disc() {
        4 => (
            IdealRep {
                content: 2,
                a: 2,
                b: 2,
            },
            Normalization::CongruentToOne,
        ),
        3 => (
            IdealRep {
                content: 3,
                a: 1,
                b: 1,
            },
            Normalization::CongruentToOne,
        ),
        _ => (IdealRep::unit(k), Normalization::SignFree),
    };
    let spec = HeckeCharSpec {
        field: *k,
        conductor,
        normalization,
        units: roots_of_unity(k),
    };
    let one = FieldElement::integer(1, k.d());
    for u in &spec.units {
        if spec.congruent_to_one(u) && u.clone() * u.clone() != one {
            return Err(Error::UnsupportedField(
                k.disc(),
                "alpha^2 not well defined".into(),
            ));
        }
    }
    if normalization == Normalization::CongruentToOne {
        for (i, u) in spec.units.iter().enumerate() {
            for v in &spec.units[i + 1..] {
                if conductor.contains(&(u.clone() - v.clone()), k) {
                    return Err(Error::UnsupportedField(
                        k.disc(),
                        "units do not inject".into(),
                    ));
                }
            }
        }
        if unit_group_order(&conductor, k)? != spec.units.len() as u64 {
            return Err(Error::UnsupportedField(
                k.disc(),
                "units do not cover residues".into(),
            ));
        }
    }
    Ok(spec)
}

/// `psi((alpha)) = alpha^2` for the normalized generator `alpha`.
pub fn evaluate(spec: &HeckeCharSpec, ideal: &IdealRep) -> Result<FieldElement> {
    let alpha = spec.normalized_generator(ideal)?;
    Ok(alpha.clone() * alpha)
}

/// Coefficients `c_1..c_B` of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExpansion {
    pub disc: u64,
    pub conductor_norm: u64,
    pub coefficients: Vec<BigInt>,
}

impl QExpansion {
    /// `c_n` for `1 <= n <= B`.
    pub fn coefficient(&self, n: usize) -> &BigInt {
        &self.coefficients[n - 1]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

/// `c_n`: the sum of `psi` over ideals of norm `n` prime to the conductor.
pub fn coefficient(spec: &HeckeCharSpec, n: u64) -> Result<BigInt> {
    let mut sum = FieldElement::integer(0, spec.field.d());
    for ideal in quadfield::ideals_of_norm(n, &spec.field) {
        if spec.coprime(&ideal) {
            sum = sum + evaluate(spec, &ideal)?;
        }
    }
    sum.as_integer().ok_or(Error::NonIntegralCoefficient(n))
}

pub fn qexpansion(spec: &HeckeCharSpec, bound: usize) -> Result<QExpansion> {
    if bound == 0 {
        return Err(Error::InvalidArgument(
            "coefficient bound must be at least 1".into(),
        ));
    }
    let coefficients = (1..=bound as u64)
        .into_par_iter()
        .map(|n| coefficient(spec, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(QExpansion {
        disc: spec.field.disc(),
        conductor_norm: spec.conductor_norm(),
        coefficients,
    })
}

/// `eta(a) = psi((a)) / a^2` for representatives `1 <= a <= M` prime to `M`.
pub fn dirichlet_eta(spec: &HeckeCharSpec) -> Result<Vec<(u64, FieldElement)>> {
    let m = spec.conductor_norm();
    (1..=m)
        .filter(|a| a.gcd(&m) == 1)
        .map(|a| Ok((a, eta_value(spec, a)?)))
        .collect()
}

fn eta_value(spec: &HeckeCharSpec, a: u64) -> Result<FieldElement> {
    let k = &spec.field;
    let elt = FieldElement::integer(a as i64, k.d());
    let ideal = quadfield::ideal_of_element(&elt, k)?;
    let psi = evaluate(spec, &ideal)?;
    let a2 = BigRational::from_integer(BigInt::from(a) * BigInt::from(a));
    Ok(psi.scale(&a2.recip()))
}

/// `epsilon(n) = eta(n) * (-D | n)`.
pub fn epsilon(spec: &HeckeCharSpec, n: i64) -> Result<FieldElement> {
    let level = spec.level() as i64;
    if arith::gcd_i64(n, level) != 1 {
        return Err(Error::NotCoprimeToLevel(n));
    }
    let m = spec.conductor_norm() as i64;
    let rep = if m == 1 { 1 } else { n.rem_euclid(m) as u64 };
    let eta = eta_value(spec, rep)?;
    let phi = quadfield::kronecker(spec.field.neg_disc(), n);
    Ok(eta.scale(&BigRational::from_integer(phi.into())))
}

/// `epsilon(n)` as an integer; all supported characters have `eta` of order
/// at most two on integers.
pub fn epsilon_sign(spec: &HeckeCharSpec, n: i64) -> Result<i64> {
    epsilon(spec, n)?
        .as_integer()
        .and_then(|x| x.to_i64())
        .ok_or_else(|| Error::InvalidArgument(format!("epsilon({n}) is not rational")))
}

/// `q^(sum s*e / 24) * prod_n prod_(s, e) (1 - q^(s n))^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaProduct {
    factors: Vec<(u64, i64)>,
}

impl EtaProduct {
    pub fn new(factors: &[(u64, i64)]) -> Result<Self> {
        if factors.iter().any(|&(s, _)| s == 0) {
            return Err(Error::InvalidArgument("eta shift must be positive".into()));
        }
        Ok(Self {
            factors: factors.to_vec(),
        })
    }

    /// `24 *` the leading exponent.
    pub fn leading_exponent_24(&self) -> i64 {
        self.factors.iter().map(|&(s, e)| s as i64 * e).sum()
    }

    /// First `terms` coefficients of the bare product, starting at `q^0`.
    pub fn series(&self, terms: usize) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::zero(); terms];
        if terms == 0 {
            return coeffs;
        }
        coeffs[0] = BigInt::one();
        for &(s, e) in &self.factors {
            let s = s as usize;
            let mut step = s;
            while step < terms {
                for _ in 0..e.unsigned_abs() {
                    if e > 0 {
                        // multiply by (1 - q^step)
                        for i in (step..terms).rev() {
                            let v = coeffs[i - step].clone();
                            coeffs[i] -= v;
                        }
                    } else {
                        // divide by (1 - q^step)
                        for i in step..terms {
                            let v = coeffs[i - step].clone();
                            coeffs[i] += v;
                        }
                    }
                }
                step += s;
            }
        }
        coeffs
    }
}

/// First `bound` coefficients of an eta quotient with integral leading
/// exponent, starting at that exponent.
pub fn eta_product(factors: &[(u64, i64)], bound: usize) -> Result<Vec<BigInt>> {
    let eta = EtaProduct::new(factors)?;
    let e24 = eta.leading_exponent_24();
    if e24 % 24 != 0 {
        return Err(Error::NonIntegralExponent(e24));
    }
    Ok(eta.series(bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(d: u64) -> QuadField {
        QuadField::from_discriminant(d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn conductors() {
        assert_eq!(canonical_character(&field(7)).unwrap().conductor_norm(), 1);
        assert_eq!(canonical_character(&field(4)).unwrap().conductor_norm(), 8);
        assert_eq!(canonical_character(&field(3)).unwrap().conductor_norm(), 9);
        assert!(matches!(
            canonical_character(&field(15)),
            Err(Error::UnsupportedField(15, _))
        ));
    }

    #[test]
    fn evaluations_for_d7() {
        let spec = canonical_character(&field(7)).unwrap();
        let half = |x: i64, y: i64| {
            FieldElement::from_rationals(
                BigRational::new(x.into(), 2.into()),
                BigRational::new(y.into(), 2.into()),
                7,
            )
        };
        let p = IdealRep {
            content: 1,
            a: 2,
            b: 1,
        };
        assert_eq!(evaluate(&spec, &p).unwrap(), half(-3, 1));
        let r = IdealRep {
            content: 1,
            a: 7,
            b: 7,
        };
        assert_eq!(evaluate(&spec, &r).unwrap(), FieldElement::integer(-7, 7));
        assert_eq!(
            evaluate(&spec, &IdealRep::unit(&spec.field)).unwrap(),
            FieldElement::integer(1, 7)
        );
    }

    #[test]
    fn not_coprime_rejected() {
        let spec = canonical_character(&field(4)).unwrap();
        let p = quadfield::ideals_of_norm(2, &spec.field)[0];
        assert_eq!(evaluate(&spec, &p), Err(Error::NotCoprime));
    }

    #[test]
    fn d7_leading_coefficients() {
        let spec = canonical_character(&field(7)).unwrap();
        let g = qexpansion(&spec, 7).unwrap();
        assert_eq!(g.coefficients[..4], ints(&[1, -3, 0, 5])[..]);
        assert_eq!(g.coefficient(7), &BigInt::from(-7));
    }

    #[test]
    fn eta_and_epsilon() {
        let spec = canonical_character(&field(7)).unwrap();
        let table = dirichlet_eta(&spec).unwrap();
        assert_eq!(table, vec![(1, FieldElement::integer(1, 7))]);
        assert_eq!(epsilon_sign(&spec, 2).unwrap(), 1);
        assert_eq!(epsilon_sign(&spec, 3).unwrap(), -1);
        assert_eq!(epsilon_sign(&spec, 1).unwrap(), 1);
        assert_eq!(epsilon(&spec, 14), Err(Error::NotCoprimeToLevel(14)));

        let spec4 = canonical_character(&field(4)).unwrap();
        let table = dirichlet_eta(&spec4).unwrap();
        assert_eq!(
            table.iter().map(|(a, _)| *a).collect::<Vec<_>>(),
            vec![1, 3, 5, 7]
        );
        for (a, eta) in &table {
            let ideal =
                quadfield::ideal_of_element(&FieldElement::integer(*a as i64, 1), &spec4.field)
                    .unwrap();
            let a2 = BigRational::from_integer(BigInt::from(a * a));
            assert_eq!(eta.scale(&a2), evaluate(&spec4, &ideal).unwrap());
        }
    }

    #[test]
    fn eta_products() {
        assert_eq!(
            eta_product(&[(1, 3), (7, 3)], 4).unwrap(),
            ints(&[1, -3, 0, 5])
        );
        assert_eq!(eta_product(&[(1, 0)], 5).unwrap(), ints(&[1, 0, 0, 0, 0]));
        assert_eq!(
            eta_product(&[(1, 3)], 4),
            Err(Error::NonIntegralExponent(3))
        );
        // Jacobi: prod (1 - q^n)^3 = sum (-1)^k (2k+1) q^(k(k+1)/2)
        let s = EtaProduct::new(&[(1, 3)]).unwrap().series(11);
        assert_eq!(s, ints(&[1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9]));
        // division inverts multiplication
        let inv = EtaProduct::new(&[(2, 1), (2, -1)]).unwrap().series(6);
        assert_eq!(inv, ints(&[1, 0, 0, 0, 0, 0]));
    }
}
