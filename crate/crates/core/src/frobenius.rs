//! Per-prime Frobenius data for the rank-2 transcendental motive: trace and
//! determinant of the Tate-twisted representation at geometric Frobenius,
//! Euler factors of the newform, and the `s -> s - 1` shift between the two
//! L-functions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith;
use crate::error::{Error, Result};
use crate::hecke::{self, HeckeCharSpec};
use crate::quadfield::{self, IdealRep, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusRow {
    pub p: u64,
    pub splitting: SplittingType,
    /// `p` divides `D M`; no trace or determinant is claimed.
    pub bad: bool,
    pub trace: Option<BigInt>,
    pub det: Option<BigInt>,
    /// `(1, -a_p, epsilon(p) p^2)` in the variable `p^-s`.
    pub euler: Option<[BigInt; 3]>,
}

fn psi_integer(x: quadfield::FieldElement, what: &str) -> Result<BigInt> {
    x.as_integer()
        .ok_or_else(|| Error::InvalidArgument(format!("{what} is not a rational integer")))
}

/// Frobenius row at `p`, from `psi` evaluated on the primes above `p`.
pub fn frob_row(p: u64, spec: &HeckeCharSpec) -> Result<FrobeniusRow> {
    let splitting = quadfield::splitting_type(p, &spec.field)?;
    if spec.level().is_multiple_of(p) {
        return Ok(FrobeniusRow {
            p,
            splitting,
            bad: true,
            trace: None,
            det: None,
            euler: None,
        });
    }
    let (trace, det) = match splitting {
        SplittingType::Split => {
            let primes = quadfield::ideals_of_norm(p, &spec.field);
            debug_assert_eq!(primes.len(), 2);
            let x = hecke::evaluate(spec, &primes[0])?;
            let y = hecke::evaluate(spec, &primes[1])?;
            (
                psi_integer(x.clone() + y.clone(), "trace")?,
                psi_integer(x * y, "determinant")?,
            )
        }
        SplittingType::Inert => {
            let ideal = IdealRep {
                content: p,
                ..IdealRep::unit(&spec.field)
            };
            let psi = hecke::evaluate(spec, &ideal)?;
            (BigInt::zero(), -psi_integer(psi, "psi((p))")?)
        }
        SplittingType::Ramified => unreachable!("ramified primes divide the level"),
    };
    let euler = euler_from(p, spec, &trace)?;
    Ok(FrobeniusRow {
        p,
        splitting,
        bad: false,
        trace: Some(trace),
        det: Some(det),
        euler: Some(euler),
    })
}

fn euler_from(p: u64, spec: &HeckeCharSpec, a_p: &BigInt) -> Result<[BigInt; 3]> {
    let eps = hecke::epsilon_sign(spec, p as i64)?;
    let p2 = BigInt::from(p) * BigInt::from(p);
    Ok([BigInt::from(1), -a_p.clone(), p2 * eps])
}

/// `(1, -c_p, epsilon(p) p^2)` with `c_p` taken from the ideal-sum
/// coefficient of the q-expansion.
pub fn euler_factor(p: u64, spec: &HeckeCharSpec) -> Result<[BigInt; 3]> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if spec.level().is_multiple_of(p) {
        return Err(Error::BadPrime(p));
    }
    let c_p = hecke::coefficient(spec, p)?;
    euler_from(p, spec, &c_p)
}

/// One good prime of [`l_shift_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftRow {
    pub p: u64,
    /// `a_p` of the newform.
    pub a_p: BigInt,
    /// `epsilon(p) p^2`.
    pub f_det: BigInt,
    /// Trace of the untwisted representation: `p a_p`.
    pub rho_trace: BigInt,
    /// `epsilon(p) p^4`.
    pub rho_det: BigInt,
    /// The Frobenius-side row, untwisted, agrees with the shifted newform row.
    pub consistent: bool,
}

/// For every good `p <= bound`, the newform-normalized and the
/// representation-normalized Euler data.
pub fn l_shift_table(spec: &HeckeCharSpec, bound: u64) -> Result<Vec<ShiftRow>> {
    if bound < 2 {
        return Err(Error::InvalidArgument(
            "prime bound must be at least 2".into(),
        ));
    }
    let mut rows = Vec::new();
    for p in arith::primes_up_to(bound) {
        if spec.level().is_multiple_of(p) {
            continue;
        }
        let [_, neg_a, f_det] = euler_factor(p, spec)?;
        let a_p = -neg_a;
        let pb = BigInt::from(p);
        let rho_trace = &pb * &a_p;
        let rho_det = &f_det * &pb * &pb;
        // untwisting by the cyclotomic character (value 1/p at geometric
        // Frobenius) scales trace by p and determinant by p^2
        let frob = frob_row(p, spec)?;
        let consistent = frob.trace.as_ref().map(|t| t * &pb) == Some(rho_trace.clone())
            && frob.det.as_ref().map(|d| d * &pb * &pb) == Some(rho_det.clone());
        rows.push(ShiftRow {
            p,
            a_p,
            f_det,
            rho_trace,
            rho_det,
            consistent,
        });
    }
    Ok(rows)
}
