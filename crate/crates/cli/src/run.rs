//! Command dispatch: parse the payload, call into the library, and build
//! the response document plus its markdown rendering.

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use krtorus::c2cohomology::{
    affine_h2, cohomology, cohomology_torus_coeff, AffineCoefficient, C2Module, TorusCoefficient,
};
use krtorus::dirac_index::{
    index_constraint, jacobian_degrees_checked, RealSpinContext,
};
use krtorus::gerbe_class::{classify_affine_gerbes, AffineGerbeClass, PointGerbeClass};
use krtorus::kr_engine::{fm_verify, kr_torus, KrTorusResult};
use krtorus::tduality::{fm_degree_map, tdualize, DualityDatum};
use krtorus::torus_class::{
    canonical_torus, decompose, factors_from_invariants, CanonicalFactor, FactorType, RealTorus,
};

use crate::markdown;
use crate::model::*;
use crate::CliError;

pub struct CommandOutput {
    pub json: Value,
    pub markdown: String,
}

fn envelope<I: Serialize, R: Serialize>(
    command: &str,
    input: I,
    result: R,
) -> Result<Value, CliError> {
    serde_json::to_value(Response::new(command, input, result))
        .map_err(|e| CliError::schema(format!("response serialization failed: {e}")))
}

pub fn parse_request<T: DeserializeOwned>(document: &str) -> Result<T, CliError> {
    let req: T = serde_json::from_str(document)
        .map_err(|e| CliError::schema(format!("invalid request document: {e}")))?;
    Ok(req)
}

fn check_version(version: &str) -> Result<(), CliError> {
    if version != SCHEMA_VERSION {
        return Err(CliError::schema_at(
            format!("unsupported schema_version {version:?}, expected \"{SCHEMA_VERSION}\""),
            "/schema_version",
        ));
    }
    Ok(())
}

fn torus_from_parts(
    sigma: &[Vec<String>],
    t: &[String],
) -> Result<RealTorus, CliError> {
    let sigma = parse_matrix(sigma, "sigma")?;
    if sigma.rows() != sigma.cols() {
        return Err(CliError::schema_at(
            format!("sigma must be square, got {}x{}", sigma.rows(), sigma.cols()),
            "/sigma",
        ));
    }
    if t.len() != sigma.rows() {
        return Err(CliError::schema_at(
            format!("t has length {}, expected {}", t.len(), sigma.rows()),
            "/t",
        ));
    }
    let lift = parse_rational_vec(t, "t")?;
    RealTorus::from_sigma(sigma, lift).map_err(CliError::math_from)
}

fn factor_from_str(s: &str, pointer: &str) -> Result<FactorType, CliError> {
    match s {
        "T1" => Ok(FactorType::T1),
        "T2" => Ok(FactorType::T2),
        "T3" => Ok(FactorType::T3),
        "T4" => Ok(FactorType::T4),
        "T5" => Ok(FactorType::T5),
        _ => Err(CliError::schema_at(
            format!("unknown factor type {s:?}, expected one of T1..T5"),
            pointer,
        )),
    }
}

fn parse_factors(factors: &[String]) -> Result<Vec<FactorType>, CliError> {
    factors
        .iter()
        .enumerate()
        .map(|(i, s)| factor_from_str(s, &format!("/factors/{i}")))
        .collect()
}

fn twist_from_spec(spec: Option<TwistSpec>) -> PointGerbeClass {
    let spec = spec.unwrap_or_default();
    PointGerbeClass::new(spec.e, spec.mu)
}

fn twist_doc(g: PointGerbeClass) -> TwistSpec {
    TwistSpec {
        e: g.e(),
        mu: g.mu(),
    }
}

/// Build the classified pair (torus, gerbe) from a factor list and an
/// optional gerbe spec.
fn classified_pair(
    factors: &[String],
    gerbe: &Option<GerbeSpec>,
) -> Result<(RealTorus, AffineGerbeClass, Vec<FactorType>), CliError> {
    let factors = parse_factors(factors)?;
    let (torus, sorted) = canonical_torus(&factors);
    let implied: Vec<(u8, u8)> = sorted
        .iter()
        .filter_map(|f| match f {
            FactorType::T3 => Some((0, 0)),
            FactorType::T4 => Some((0, 1)),
            _ => None,
        })
        .collect();
    let (twist, signatures) = match gerbe {
        None => (PointGerbeClass::trivial(), implied),
        Some(GerbeSpec::Preset(name)) => {
            if name != "trivial" {
                return Err(CliError::schema_at(
                    format!("unknown gerbe preset {name:?}, expected \"trivial\""),
                    "/gerbe",
                ));
            }
            (PointGerbeClass::trivial(), implied)
        }
        Some(GerbeSpec::Detailed {
            point_twist,
            signatures,
        }) => {
            let sigs = match signatures {
                Some(list) => list.iter().map(|[a, b]| (*a, *b)).collect(),
                None => implied,
            };
            (twist_from_spec(*point_twist), sigs)
        }
    };
    let gerbe = AffineGerbeClass::new(torus.clone(), signatures, twist)
        .map_err(CliError::math_from)?;
    Ok((torus, gerbe, sorted))
}

fn factor_names(factors: &[FactorType]) -> Vec<String> {
    factors.iter().map(|f| f.as_str().to_string()).collect()
}

// ---------------------------------------------------------------------------

pub fn classify(document: &str) -> Result<CommandOutput, CliError> {
    let req: ClassifyRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let torus = torus_from_parts(&req.sigma, &req.t)?;
    let inv = decompose(&torus).map_err(CliError::math_from)?;
    let factors: Vec<String> = factors_from_invariants(&inv)
        .iter()
        .map(CanonicalFactor::as_str)
        .map(str::to_string)
        .collect();
    let result = ClassifyResult {
        invariants: InvariantsDoc {
            a: inv.a,
            b: inv.b,
            r: inv.r,
            chern_nonzero: inv.chern_nonzero,
        },
        factors: factors.clone(),
    };
    let md = markdown::key_values(
        "Classification",
        &[
            ("trivial summands (a)", inv.a.to_string()),
            ("cyclotomic summands (b)", inv.b.to_string()),
            ("regular summands (r)", inv.r.to_string()),
            ("Chern class nonzero", inv.chern_nonzero.to_string()),
            ("factors", factors.join(", ")),
        ],
    );
    Ok(CommandOutput {
        json: envelope("classify", req, result)?,
        markdown: md,
    })
}

pub fn cohomology_cmd(document: &str) -> Result<CommandOutput, CliError> {
    let req: CohomologyRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let m = &req.module;
    let sigma = parse_matrix(&m.sigma, "module/sigma")?;
    let relations = parse_matrix(&m.relations, "module/relations")?;
    if relations.rows() != m.generators && !(m.relations.is_empty() && m.generators > 0) {
        return Err(CliError::schema_at(
            format!(
                "relations have {} rows, expected one per generator ({})",
                relations.rows(),
                m.generators
            ),
            "/module/relations",
        ));
    }
    let relations = if m.relations.is_empty() {
        krtorus::zlinalg::IntMatrix::zeros(m.generators, 0)
    } else {
        relations
    };
    let module = C2Module::new(m.generators, relations, sigma, m.sign_twist)
        .map_err(CliError::math_from)?;
    let group = match req.coefficients {
        CoefficientKind::Module => cohomology(&module, req.degree),
        CoefficientKind::Torus => {
            let coeff = TorusCoefficient::new(module).map_err(CliError::math_from)?;
            cohomology_torus_coeff(&coeff, req.degree).map_err(CliError::math_from)?
        }
    };
    let doc = GroupDoc::from_group(&group);
    let md = markdown::key_values(
        "Cohomology",
        &[
            ("degree", req.degree.to_string()),
            ("group", doc.display.clone()),
        ],
    );
    Ok(CommandOutput {
        json: envelope("cohomology", req, CohomologyResult { group: doc })?,
        markdown: md,
    })
}

pub fn affine_gerbes(document: &str) -> Result<CommandOutput, CliError> {
    let req: AffineGerbesRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let torus = torus_from_parts(&req.sigma, &req.t)?;
    let coeff = AffineCoefficient::new(torus.lattice().clone(), torus.translation_lift().to_vec())
        .map_err(CliError::math_from)?;
    let (group, reps) = affine_h2(&coeff);
    let (_, cases) = classify_affine_gerbes(&torus).map_err(CliError::math_from)?;
    let factors = krtorus::torus_class::canonical_factors(&torus).map_err(CliError::math_from)?;

    let result = AffineGerbesResult {
        group: GroupDoc::from_group(&group),
        representatives: reps
            .iter()
            .map(|r| RepresentativeDoc {
                lambda: r.lambda.iter().map(|x| x.to_string()).collect(),
                u: r.u.to_string(),
            })
            .collect(),
        factors: factors
            .iter()
            .zip(&cases)
            .map(|(f, c)| FactorClassesDoc {
                factor: f.as_str().to_string(),
                case: c.index(),
                group: GroupDoc::from_group(&c.class_group()),
            })
            .collect(),
    };
    let mut pairs = vec![("class group", result.group.display.clone())];
    for (i, r) in result.representatives.iter().enumerate() {
        pairs.push((
            "generator",
            format!("#{i}: lambda = [{}], u = {}", r.lambda.join(", "), r.u),
        ));
    }
    for f in &result.factors {
        pairs.push((
            "factor",
            format!("{} (case {}): {}", f.factor, f.case, f.group.display),
        ));
    }
    let md = markdown::key_values("Affine gerbe classes", &pairs);
    Ok(CommandOutput {
        json: envelope("affine-gerbes", req, result)?,
        markdown: md,
    })
}

fn dualized(req: &ClassifiedPairRequest) -> Result<(DualityDatum, Vec<FactorType>), CliError> {
    let (torus, gerbe, sorted) = classified_pair(&req.factors, &req.gerbe)?;
    let datum = tdualize(&torus, &gerbe).map_err(CliError::math_from)?;
    Ok((datum, sorted))
}

pub fn dualize(document: &str) -> Result<CommandOutput, CliError> {
    let req: ClassifiedPairRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let (datum, _) = dualized(&req)?;
    let target_inv = decompose(datum.target_torus()).map_err(CliError::math_from)?;
    let offsets: Vec<u8> = (0..datum.target_candidates().len())
        .map(|k| fm_degree_map(&datum, k).map(|m| m.offset))
        .collect::<Result<_, _>>()
        .map_err(CliError::math_from)?;
    let result = DualizeResult {
        source_factors: factor_names(datum.source_factors()),
        source_residual_twist: twist_doc(datum.ledger().source_twist),
        target_factors: factor_names(datum.target_factors()),
        target_chern_nonzero: target_inv.chern_nonzero,
        candidates: datum
            .target_candidates()
            .iter()
            .map(|c| CandidateDoc {
                point_twist: twist_doc(c.point_twist()),
                signatures: c
                    .cyclotomic_signatures()
                    .iter()
                    .map(|(a, b)| [*a, *b])
                    .collect(),
            })
            .collect(),
        fiber_dim: datum.ledger().fiber_dim,
        minus_summands: datum.ledger().minus_summands.unwrap_or(0),
        degree_offsets: offsets,
    };
    let md = markdown::key_values(
        "Real T-dual",
        &[
            ("source factors", result.source_factors.join(", ")),
            ("target factors", result.target_factors.join(", ")),
            ("dual-gerbe candidates", result.candidates.len().to_string()),
            (
                "degree offsets",
                result
                    .degree_offsets
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
        ],
    );
    Ok(CommandOutput {
        json: envelope("dualize", req, result)?,
        markdown: md,
    })
}

pub fn kr_groups(document: &str) -> Result<CommandOutput, CliError> {
    let req: KrGroupsRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let factors = parse_factors(&req.factors)?;
    let twist = twist_from_spec(req.twist);
    let (result, md) = match kr_torus(&factors, twist) {
        KrTorusResult::Full(graded) => {
            let degrees: Vec<DegreeGroupDoc> = (0..8u8)
                .map(|j| DegreeGroupDoc {
                    j,
                    group: GroupDoc::from_group(graded.at(j as i64)),
                })
                .collect();
            let groups: Vec<GroupDoc> = degrees.iter().map(|d| d.group.clone()).collect();
            (
                KrGroupsResult {
                    supported: true,
                    degrees: Some(degrees),
                    non_free_count: None,
                },
                markdown::degree_table("KR groups", "KR^j", &groups),
            )
        }
        KrTorusResult::Partial(p) => (
            KrGroupsResult {
                supported: false,
                degrees: None,
                non_free_count: Some(p.non_free_count),
            },
            markdown::key_values(
                "KR groups",
                &[(
                    "unsupported",
                    format!("{} non-free factors in the product", p.non_free_count),
                )],
            ),
        ),
    };
    Ok(CommandOutput {
        json: envelope("kr-groups", req, result)?,
        markdown: md,
    })
}

pub fn fm_verify_cmd(document: &str) -> Result<CommandOutput, CliError> {
    let req: ClassifiedPairRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let (datum, _) = dualized(&req)?;
    let report = fm_verify(&datum).map_err(CliError::math_from)?;
    let result = FmVerifyResult {
        pass: report.pass,
        source_factors: factor_names(datum.source_factors()),
        target_factors: factor_names(datum.target_factors()),
        candidates: report
            .candidates
            .iter()
            .map(|c| FmCandidateDoc {
                candidate: c.candidate,
                degree_offset: c.degree_map_offset,
                pass: c.pass,
                free_rank_preserved: c.free_rank_preserved,
                degrees: c
                    .rows
                    .iter()
                    .map(|r| FmDegreeRowDoc {
                        j: r.source_degree,
                        source: GroupDoc::from_group(&r.source),
                        target_degree: r.target_degree,
                        target: GroupDoc::from_group(&r.target),
                        equal: r.equal,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut md = markdown::key_values(
        "Transform verification",
        &[
            ("overall", if result.pass { "pass" } else { "FAIL" }.to_string()),
            ("source", result.source_factors.join(", ")),
            ("target", result.target_factors.join(", ")),
        ],
    );
    for c in &result.candidates {
        md.push('\n');
        md.push_str(&markdown::fm_candidate_table(c));
    }
    Ok(CommandOutput {
        json: envelope("fm-verify", req, result)?,
        markdown: md,
    })
}

pub fn index(document: &str) -> Result<CommandOutput, CliError> {
    let req: IndexRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let c = index_constraint(&RealSpinContext::new(req.n, req.k));
    let result = IndexResult {
        verdict: c.verdict.as_str().to_string(),
        mod2: c.mod2_index_available,
        lift_degree: c.lift_degree,
    };
    let md = markdown::key_values(
        "Index constraint",
        &[
            ("verdict", result.verdict.clone()),
            ("mod-2 index available", result.mod2.to_string()),
            ("lift degree (2k - n mod 8)", result.lift_degree.to_string()),
        ],
    );
    Ok(CommandOutput {
        json: envelope("index", req, result)?,
        markdown: md,
    })
}

pub fn jacobian_shift(document: &str) -> Result<CommandOutput, CliError> {
    let req: JacobianShiftRequest = parse_request(document)?;
    check_version(&req.schema_version)?;
    let ctx = RealSpinContext::new(req.n, req.k).with_eigenspaces(req.b_plus, req.b_minus);
    let d = jacobian_degrees_checked(&ctx, !req.fixed_point_free).map_err(CliError::math_from)?;
    let result = JacobianShiftResult {
        albanese_push: d.albanese_push,
        fm_shift: d.fm_shift,
        ind_degree: d.ind_degree,
    };
    let md = markdown::key_values(
        "Jacobian degree bookkeeping",
        &[
            ("albanese push", result.albanese_push.to_string()),
            ("transform shift", result.fm_shift.to_string()),
            ("index degree", result.ind_degree.to_string()),
        ],
    );
    Ok(CommandOutput {
        json: envelope("jacobian-shift", req, result)?,
        markdown: md,
    })
}
