use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use cubiccm::arith;
use cubiccm::binforms::{self, BinaryEvenForm};
use cubiccm::embeddings::{self, EmbeddingWitness};
use cubiccm::fixtures;
use cubiccm::frobenius;
use cubiccm::hecke;
use cubiccm::lattices::{self, GramMatrix};
use cubiccm::levelgroups::{self, OrderMethod, OrthType};
use cubiccm::quadfield::{self, QuadField};

use crate::args::*;
use crate::cache;
use crate::output::{self, num, nums, Envelope};

pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<cubiccm::Error> for Failure {
    fn from(e: cubiccm::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub enum Output {
    Json(Envelope),
    Csv(String),
}

type Outcome = Result<Output, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_int(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.trim().parse().ok(),
        _ => None,
    }
}

fn parse_vector(s: &str) -> Result<Vec<BigInt>, Failure> {
    let bad = || usage(format!("expected a JSON array of integers, got `{s}`"));
    let v: Value = serde_json::from_str(s).map_err(|_| bad())?;
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|x| parse_int(x).ok_or_else(bad))
        .collect()
}

fn parse_gram(s: &str) -> Result<GramMatrix, Failure> {
    let bad = || usage(format!("expected a JSON array of integer rows, got `{s}`"));
    let v: Value = serde_json::from_str(s).map_err(|_| bad())?;
    let rows = v
        .as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|r| parse_vector(&r.to_string()).map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GramMatrix::new(rows)?)
}

fn rat(x: &BigRational) -> Value {
    if x.is_integer() {
        num(&x.to_integer())
    } else {
        json!(x.to_string())
    }
}

fn field(d: u64) -> Result<QuadField, Failure> {
    Ok(QuadField::from_discriminant(d)?)
}

struct Resolved {
    gram: GramMatrix,
    distinguished: Option<Vec<BigInt>>,
    echo: Value,
}

fn resolve(source: &LatticeSource, n: Option<usize>) -> Result<Resolved, Failure> {
    match (&source.gram, &source.name) {
        (Some(g), None) => {
            let gram = parse_gram(g)?;
            Ok(Resolved {
                echo: json!({ "gram": output::gram(&gram) }),
                gram,
                distinguished: None,
            })
        }
        (None, Some(name)) => {
            let s = lattices::make_standard(name, n)?;
            Ok(Resolved {
                gram: s.gram,
                distinguished: s.distinguished,
                echo: json!({ "name": name, "n": n }),
            })
        }
        _ => Err(usage("give exactly one of --gram and --name")),
    }
}

fn json_only(format: Format, cmd: &str) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        Format::Csv => Err(usage(format!(
            "`{cmd}` has no tabular output; csv is not available"
        ))),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Lattice(c) => lattice(c, f),
        Command::Embed(c) => embed(c, f),
        Command::Forms(c) => forms(c, f),
        Command::Field(c) => field_cmd(c, f),
        Command::Hecke(HeckeCmd::Qexp { d, limit }) => qexp(*d, *limit, f),
        Command::Frob(c) => frob(c, f),
        Command::Levels(c) => levels(c, f),
        Command::Fixtures(c) => fixture_cmd(c, f),
    }
}

fn lattice(c: &LatticeCmd, f: Format) -> Outcome {
    match c {
        LatticeCmd::Invariants { source, n } => {
            json_only(f, "lattice invariants")?;
            let r = resolve(source, *n)?;
            let inv = lattices::invariants(&r.gram)?;
            Ok(Output::Json(Envelope::new(
                "lattice invariants",
                r.echo,
                output::invariants(&inv),
            )))
        }
        LatticeCmd::Complement { source, n, vector } => {
            json_only(f, "lattice complement")?;
            let r = resolve(source, *n)?;
            let mut echo = r.echo;
            let v = match (vector, r.distinguished) {
                (Some(s), _) => {
                    echo["vector"] = json!(s);
                    parse_vector(s)?
                }
                (None, Some(v)) => v,
                (None, None) => return Err(usage("--vector is required for this lattice")),
            };
            let basis = lattices::complement_basis(&r.gram, std::slice::from_ref(&v))?;
            let c = lattices::orthogonal_complement(&r.gram, &v)?;
            let inv = lattices::invariants(&c)?;
            let results = json!({
                "vector": nums(&v),
                "vector_norm": num(&r.gram.norm(&v)),
                "basis": basis.iter().map(|b| nums(b)).collect::<Vec<_>>(),
                "gram": output::gram(&c),
                "invariants": output::invariants(&inv),
            });
            Ok(Output::Json(Envelope::new(
                "lattice complement",
                echo,
                results,
            )))
        }
        LatticeCmd::Standard { name, n } => {
            json_only(f, "lattice standard")?;
            let s = lattices::make_standard(name, *n)?;
            let inv = lattices::invariants(&s.gram)?;
            let results = json!({
                "gram": output::gram(&s.gram),
                "invariants": output::invariants(&inv),
                "distinguished": s.distinguished.as_deref().map(nums),
            });
            Ok(Output::Json(Envelope::new(
                "lattice standard",
                json!({ "name": name, "n": n }),
                results,
            )))
        }
    }
}

fn witness(w: &EmbeddingWitness) -> Result<Value, Failure> {
    let span = embeddings::span_check(w)?;
    Ok(json!({
        "vectors": w.vectors.iter().map(|v| nums(v)).collect::<Vec<_>>(),
        "gram_check": output::gram(&w.gram_check),
        "primitive": w.primitive,
        "complement": output::invariants(&lattices::invariants(&span.complement)?),
        "index_squared": num(&span.index_squared),
    }))
}

fn embed(c: &EmbedCmd, f: Format) -> Outcome {
    json_only(f, "embed")?;
    match c {
        EmbedCmd::TraceForm { d } => {
            let k = field(*d)?;
            let w = embeddings::embed_trace_form(&k)?;
            let mut results = witness(&w)?;
            results["trace_form"] = output::gram(&quadfield::trace_form_gram(&k));
            results["hyperbolic_offset"] = json!(lattices::L_HYPERBOLIC_OFFSET);
            Ok(Output::Json(
                Envelope::new("embed trace-form", json!({ "d": d }), results)
                    .note("ambient lattice L = E8(-1)^2 + U^2 + A2(-1); the image lies in its U + U block"),
            ))
        }
        EmbedCmd::Binary { gram } => {
            let form = BinaryEvenForm::from_gram(&parse_gram(gram)?)?;
            let w = embeddings::embed_even_binary_in_U2(&form)?;
            Ok(Output::Json(Envelope::new(
                "embed binary",
                json!({ "gram": output::gram(&form.gram()) }),
                witness(&w)?,
            )))
        }
    }
}

fn form_json(f: &BinaryEvenForm) -> Value {
    json!({ "a": num(&f.a), "b": num(&f.b), "c": num(&f.c), "gram": output::gram(&f.gram()) })
}

fn forms(c: &FormsCmd, f: Format) -> Outcome {
    match c {
        FormsCmd::Classes { det } => {
            let classes = binforms::class_list(*det);
            if f == Format::Csv {
                let rows: Vec<Vec<String>> = classes
                    .iter()
                    .map(|c| vec![c.a.to_string(), c.b.to_string(), c.c.to_string()])
                    .collect();
                return Ok(Output::Csv(output::csv(&["a", "b", "c"], &rows)));
            }
            let results = json!({
                "count": classes.len(),
                "classes": classes.iter().map(form_json).collect::<Vec<_>>(),
            });
            Ok(Output::Json(
                Envelope::new("forms classes", json!({ "det": det }), results)
                    .note("Gauss-reduced positive-definite forms [[2a,b],[b,2c]] with 4ac - b^2 = det, one per SL2(Z) class"),
            ))
        }
        FormsCmd::Endo { gram, bound } => {
            json_only(f, "forms endo")?;
            let form = BinaryEvenForm::from_gram(&parse_gram(gram)?)?;
            let (definite, negated) = binforms::normalize_definite(&form)?;
            let reduced = binforms::reduce(&definite)?;
            let disc = binforms::endomorphism_field(&form)?;
            let g = binforms::finite_isometry(&form, *bound)?;
            let (z, zbar) = binforms::period_points(&form)?;
            let eigen = g.and_then(|m| binforms::isometry_eigenvalue(&m, &z));
            let results = json!({
                "endomorphism_field": disc,
                "negated": negated,
                "reduced": form_json(&reduced),
                "isometry": g,
                "isometry_order": g.and_then(|m| binforms::matrix_order(&m)),
                "eigenvalue": eigen.as_ref().map(|l| l.to_string()),
                "minimal_polynomial": eigen.as_ref().map(|l| binforms::minimal_polynomial(l).iter().map(rat).collect::<Vec<_>>()),
                "period_points": [z.to_string(), zbar.to_string()],
            });
            Ok(Output::Json(Envelope::new(
                "forms endo",
                json!({ "gram": output::gram(&form.gram()), "bound": bound }),
                results,
            )))
        }
    }
}

fn field_cmd(c: &FieldCmd, f: Format) -> Outcome {
    json_only(f, "field")?;
    match c {
        FieldCmd::Split { d, p } => {
            let k = field(*d)?;
            let s = quadfield::splitting_type(*p, &k)?;
            let results = json!({
                "splitting": s.as_str(),
                "kronecker": quadfield::kronecker(k.neg_disc(), *p as i64),
            });
            Ok(Output::Json(Envelope::new(
                "field split",
                json!({ "D": d, "p": p }),
                results,
            )))
        }
        FieldCmd::Ideals { d, norm } => {
            let k = field(*d)?;
            let ideals = quadfield::ideals_of_norm(*norm, &k);
            let list: Vec<Value> = ideals
                .iter()
                .map(|i| json!({ "content": i.content, "a": i.a, "b": i.b, "display": i.to_string() }))
                .collect();
            let results = json!({ "count": list.len(), "ideals": list });
            Ok(Output::Json(
                Envelope::new("field ideals", json!({ "D": d, "norm": norm }), results)
                    .note("ideal = content * (Z a + Z (b + sqrt(-D))/2)"),
            ))
        }
    }
}

fn qexp(d: u64, limit: usize, f: Format) -> Outcome {
    let k = field(d)?;
    let spec = hecke::canonical_character(&k)?;
    let m = spec.conductor_norm();
    let coeffs = cache::qexpansion(d, m, limit, || {
        hecke::qexpansion(&spec, limit).map(|q| q.coefficients)
    })?;
    if f == Format::Csv {
        let rows: Vec<Vec<String>> = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| vec![(i + 1).to_string(), c.to_string()])
            .collect();
        return Ok(Output::Csv(output::csv(&["n", "c_n"], &rows)));
    }
    let results = json!({
        "disc": k.neg_disc(),
        "conductor_norm": m,
        "level": spec.level(),
        "coefficients": nums(&coeffs),
    });
    Ok(Output::Json(
        Envelope::new("hecke qexp", json!({ "D": d, "limit": limit }), results)
            .note("weight-3 newform sum over ideals coprime to the conductor of psi, psi((alpha)) = alpha^2; coefficients c_1..c_B"),
    ))
}

fn opt(x: &Option<BigInt>) -> String {
    x.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

fn frob(c: &FrobCmd, f: Format) -> Outcome {
    let (d, pmax) = match c {
        FrobCmd::Table { d, pmax } | FrobCmd::Shift { d, pmax } => (*d, *pmax),
    };
    let spec = hecke::canonical_character(&field(d)?)?;
    let inputs = json!({ "D": d, "pmax": pmax });
    match c {
        FrobCmd::Table { .. } => {
            let rows = arith::primes_up_to(pmax)
                .into_iter()
                .map(|p| frobenius::frob_row(p, &spec))
                .collect::<Result<Vec<_>, _>>()?;
            if f == Format::Csv {
                let table: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        let e: [String; 3] = match &r.euler {
                            Some(e) => e.clone().map(|x| x.to_string()),
                            None => Default::default(),
                        };
                        let [e0, e1, e2] = e;
                        vec![
                            r.p.to_string(),
                            r.splitting.as_str().into(),
                            r.bad.to_string(),
                            opt(&r.trace),
                            opt(&r.det),
                            e0,
                            e1,
                            e2,
                        ]
                    })
                    .collect();
                let header = [
                    "p",
                    "splitting",
                    "bad",
                    "trace",
                    "det",
                    "euler_0",
                    "euler_1",
                    "euler_2",
                ];
                return Ok(Output::Csv(output::csv(&header, &table)));
            }
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "p": r.p,
                        "splitting": r.splitting.as_str(),
                        "bad": r.bad,
                        "trace": r.trace.as_ref().map(num),
                        "det": r.det.as_ref().map(num),
                        "euler": r.euler.as_ref().map(|e| nums(e)),
                    })
                })
                .collect();
            Ok(Output::Json(
                Envelope::new("frob table", inputs, json!({ "level": spec.level(), "rows": list }))
                    .note("trace and det of geometric Frobenius on the Tate-twisted rank-2 representation; euler = (1, -a_p, epsilon(p) p^2); bad primes divide the level"),
            ))
        }
        FrobCmd::Shift { .. } => {
            let rows = frobenius::l_shift_table(&spec, pmax)?;
            if f == Format::Csv {
                let table: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.p.to_string(),
                            r.a_p.to_string(),
                            r.f_det.to_string(),
                            r.rho_trace.to_string(),
                            r.rho_det.to_string(),
                            r.consistent.to_string(),
                        ]
                    })
                    .collect();
                let header = ["p", "a_p", "f_det", "rho_trace", "rho_det", "consistent"];
                return Ok(Output::Csv(output::csv(&header, &table)));
            }
            let list: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "p": r.p,
                        "a_p": num(&r.a_p),
                        "f_det": num(&r.f_det),
                        "rho_trace": num(&r.rho_trace),
                        "rho_det": num(&r.rho_det),
                        "consistent": r.consistent,
                    })
                })
                .collect();
            Ok(Output::Json(
                Envelope::new("frob shift", inputs, json!({ "rows": list }))
                    .note("L(rho, s) = L(f, s - 1): rho_trace = p a_p, rho_det = epsilon(p) p^4"),
            ))
        }
    }
}

fn levels(c: &LevelsCmd, f: Format) -> Outcome {
    json_only(f, "levels")?;
    match c {
        LevelsCmd::Order {
            source,
            n,
            modulus,
            fixed,
        } => {
            let r = resolve(source, *n)?;
            let mut echo = r.echo;
            echo["modulus"] = json!(modulus);
            let fixed = match fixed {
                Some(s) => {
                    echo["fixed"] = json!(s);
                    let v = parse_vector(s)?;
                    Some(
                        v.iter()
                            .map(|x| {
                                i64::try_from(x)
                                    .map_err(|_| usage("fixed vector entries must fit in 64 bits"))
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    )
                }
                None => None,
            };
            let data = levelgroups::orth_data(&r.gram, *modulus, fixed.as_deref())?;
            let orders: Vec<Value> = data
                .iter()
                .map(|d| {
                    json!({
                        "method": match d.method {
                            OrderMethod::BruteForce => "brute_force",
                            OrderMethod::Formula => "formula",
                        },
                        "order": num(&d.order),
                    })
                })
                .collect();
            let kind = if fixed.is_none() && data.iter().any(|d| d.method == OrderMethod::Formula) {
                Some(levelgroups::classify(&r.gram, *modulus)?.as_str())
            } else {
                None
            };
            let results = json!({
                "rank": r.gram.rank(),
                "type": kind,
                "orders": orders,
                "agree": data.windows(2).all(|w| w[0].order == w[1].order),
            });
            let mut env = Envelope::new("levels order", echo, results);
            if r.gram.rank() > levelgroups::MAX_BRUTE_RANK {
                env = env
                    .note("rank exceeds the enumeration guard; the formula value is informational");
            }
            Ok(Output::Json(env))
        }
        LevelsCmd::Formula { kind, rank, q } => {
            let t = OrthType::parse(kind)?;
            let order = levelgroups::formula_order(t, *rank, *q)?;
            Ok(Output::Json(Envelope::new(
                "levels formula",
                json!({ "type": t.as_str(), "rank": rank, "q": q }),
                json!({ "order": num(&order) }),
            )))
        }
    }
}

fn fixture_cmd(c: &FixturesCmd, f: Format) -> Outcome {
    match c {
        FixturesCmd::List => {
            if f == Format::Csv {
                let rows: Vec<Vec<String>> = fixtures::FIXTURES
                    .iter()
                    .map(|x| vec![x.name.to_string(), x.description.to_string()])
                    .collect();
                return Ok(Output::Csv(output::csv(&["name", "description"], &rows)));
            }
            let list: Vec<Value> = fixtures::FIXTURES
                .iter()
                .map(|x| json!({ "name": x.name, "description": x.description }))
                .collect();
            Ok(Output::Json(Envelope::new(
                "fixtures list",
                json!({}),
                json!({ "fixtures": list }),
            )))
        }
        FixturesCmd::Run { name } => {
            let r = fixtures::run_fixture(name)?;
            if f == Format::Csv {
                let rows: Vec<Vec<String>> = r
                    .checks
                    .iter()
                    .map(|c| {
                        vec![
                            c.label.clone(),
                            c.expected.clone(),
                            c.actual.clone(),
                            c.pass.to_string(),
                        ]
                    })
                    .collect();
                return Ok(Output::Csv(output::csv(
                    &["label", "expected", "actual", "pass"],
                    &rows,
                )));
            }
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({ "label": c.label, "expected": c.expected, "actual": c.actual, "pass": c.pass }))
                .collect();
            let results = json!({
                "name": r.name,
                "description": r.description,
                "informational": r.informational,
                "passed": r.passed(),
                "checks": checks,
            });
            let mut env = Envelope::new("fixtures run", json!({ "name": name }), results)
                .note(format!("source: {}", r.source));
            if r.informational {
                env = env.note("informational: a recorded datum, not recomputed from a lattice");
            }
            Ok(Output::Json(env))
        }
    }
}
