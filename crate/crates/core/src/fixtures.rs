//! Worked examples: named lattices and CM points whose invariants are known
//! in closed form. Each fixture evaluates the relevant operations and diffs
//! them against the recorded values.

use num_bigint::BigInt;

use crate::binforms::{self, BinaryEvenForm};
use crate::error::{Error, Result};
use crate::lattices::{self, GramMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub description: String,
    pub source: String,
    /// Only a recorded datum, nothing recomputed from a lattice.
    pub informational: bool,
    pub checks: Vec<FixtureCheck>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub struct FixtureInfo {
    pub name: &'static str,
    pub description: &'static str,
}

pub const FIXTURES: [FixtureInfo; 4] = [
    FixtureInfo {
        name: "cohomology",
        description: "L0 = <1>^2 + <-1>^21, L = E8(-1)^2 + U^2 + A2(-1), and the complement of h^2",
    },
    FixtureInfo {
        name: "klein",
        description: "Klein cubic fourfold: T = U(7) + [[-2,1],[1,10]], algebraic rank 19",
    },
    FixtureInfo {
        name: "order11",
        description:
            "cubic fourfold with a symplectic automorphism of order 11: T = [[-22,11],[11,-22]]",
    },
    FixtureInfo {
        name: "fermat",
        description: "Fermat cubic fourfold: reflex field Q(zeta_3)",
    },
];

fn check(label: &str, expected: impl ToString, actual: impl ToString) -> FixtureCheck {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    FixtureCheck {
        label: label.to_string(),
        pass: expected == actual,
        expected,
        actual,
    }
}

fn invariant_checks(
    prefix: &str,
    g: &GramMatrix,
    rank: usize,
    sig: (usize, usize),
    det: i64,
    even: bool,
) -> Result<Vec<FixtureCheck>> {
    let inv = lattices::invariants(g)?;
    Ok(vec![
        check(&format!("{prefix} rank"), rank, inv.rank),
        check(
            &format!("{prefix} signature"),
            format!("{sig:?}"),
            format!("{:?}", inv.signature),
        ),
        check(&format!("{prefix} determinant"), det, &inv.determinant),
        check(&format!("{prefix} even"), even, inv.even),
    ])
}

pub fn run_fixture(name: &str) -> Result<FixtureReport> {
    let info = FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    let mut checks = Vec::new();
    let mut informational = false;
    let source;
    match name {
        "cohomology" => {
            source = "classification of odd unimodular lattices; complement of the square of the hyperplane class";
            let l0 = lattices::make_standard("L0", None)?;
            checks.extend(invariant_checks("L0", &l0.gram, 23, (2, 21), -1, false)?);
            let l = lattices::l_lattice();
            checks.extend(invariant_checks("L", &l, 22, (2, 20), 3, true)?);
            let inv = lattices::invariants(&l)?;
            checks.push(check(
                "L discriminant group",
                "[3]",
                fmt_list(&inv.disc_group),
            ));
            let v = l0.distinguished.expect("L0 carries its vector");
            checks.push(check("v.v", -3, l0.gram.norm(&v)));
            let c = lattices::orthogonal_complement(&l0.gram, &v)?;
            let ci = lattices::invariants(&c)?;
            checks.push(check("complement rank", inv.rank, ci.rank));
            checks.push(check(
                "complement signature",
                format!("{:?}", inv.signature),
                format!("{:?}", ci.signature),
            ));
            checks.push(check("complement |det|", 3, ci.determinant.magnitude()));
            checks.push(check("complement even", true, ci.even));
        }
        "klein" => {
            source = "transcendental lattice of the Klein cubic fourfold (published lattice computation)";
            let u7 = lattices::rescale(&lattices::hyperbolic_plane(), 7)?;
            let t = lattices::direct_sum(&u7, &GramMatrix::from_rows(&[&[-2, 1], &[1, 10]])?);
            checks.extend(invariant_checks("T", &t, 4, (2, 2), 1029, true)?);
            checks.push(check("algebraic rank", 19, 23 - t.rank()));
        }
        "order11" => {
            source = "transcendental lattice of the order-11 symplectic example (published lattice computation)";
            let t = BinaryEvenForm::new(-11, 11, -11);
            checks.push(check("T gram", "[[-22,11],[11,-22]]", t.gram()));
            checks.push(check("algebraic rank", 21, 23 - 2));
            checks.push(check(
                "endomorphism field",
                -3,
                binforms::endomorphism_field(&t)?,
            ));
            let g = binforms::finite_isometry(&t, 2)?;
            let shown = g.map(|m| format!("{m:?}")).unwrap_or_else(|| "none".into());
            checks.push(check("finite isometry", "[[1, -1], [1, 0]]", &shown));
            let order = g.and_then(|m| binforms::matrix_order(&m));
            checks.push(check("isometry order", 6, order.unwrap_or(0)));
            let (z, _) = binforms::period_points(&t)?;
            let poly = g
                .and_then(|m| binforms::isometry_eigenvalue(&m, &z))
                .map(|l| {
                    let [a, b, c] = binforms::minimal_polynomial(&l);
                    format!("{a}x^2 + {b}x + {c}")
                })
                .unwrap_or_else(|| "none".into());
            checks.push(check(
                "period eigenvalue minimal polynomial",
                "1x^2 + -1x + 1",
                poly,
            ));
        }
        "fermat" => {
            source = "reflex field of the Fermat cubic fourfold";
            informational = true;
            // only the field is recorded; the order-3 action makes it Q(zeta_3)
            let d = crate::quadfield::fundamental_discriminant(3)?;
            checks.push(check("reflex field discriminant", -3, d));
        }
        _ => unreachable!("fixture table and dispatch agree"),
    }
    Ok(FixtureReport {
        name: name.to_string(),
        description: info.description.to_string(),
        source: source.to_string(),
        informational,
        checks,
    })
}

fn fmt_list(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        for f in &FIXTURES {
            let r = run_fixture(f.name).unwrap();
            for c in &r.checks {
                assert!(
                    c.pass,
                    "{}: {} expected {} got {}",
                    f.name, c.label, c.expected, c.actual
                );
            }
        }
    }

    #[test]
    fn unknown_fixture() {
        assert!(matches!(
            run_fixture("quartic"),
            Err(Error::UnknownFixture(_))
        ));
    }
}
