use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use serde_json::{json, Value};

use mtc_core::exactalg::harmonic_basis;
use mtc_core::fredholm::{codim_stratum_bound, kernel_dims, random_operator, top_stratum_conditions, CodimSpec};
use mtc_core::orbifold::{IndexConvention, IndexSpec};
use mtc_core::petri_wendl::{bound_hypothesis, sample_kernel_elements, wendl_bound_rows};
use mtc_core::torus_count::{
    check_invariance, fixtures, parse_assignment, random_scenarios, relation_system,
    solve_weight_table_with, Relation, Scenario, WeightTable,
};
use mtc_core::Error;

use crate::report::{Outcome, RunReport};
use crate::Command;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_table(source: &str, corrupt: &[String]) -> Result<(WeightTable, Value)> {
    let (mut table, text) = match source {
        "canonical" | "derived" | "definition" => (WeightTable::named(source)?, None),
        path => {
            let text = read(Path::new(path))?;
            (WeightTable::from_json(&text)?, Some(text))
        }
    };
    for c in corrupt {
        let (t, d, w) = parse_assignment(c)?;
        table.set(t, d, w);
    }
    if !corrupt.is_empty() {
        let name = format!("{} with {}", table.name(), corrupt.join(", "));
        table = table.renamed(name);
    }
    Ok((table, json!({ "table": source, "table_file": text, "corrupt": corrupt })))
}

pub fn run(cmd: &Command) -> Result<RunReport> {
    match cmd {
        Command::Harmonic { degree } => {
            let basis: Vec<String> = harmonic_basis(*degree).iter().map(|p| p.to_string()).collect();
            Ok(RunReport::new(
                "harmonic",
                &json!({ "degree": degree }),
                Outcome::Pass,
                json!({ "degree": degree, "basis": basis }),
            ))
        }
        Command::VerifyWendl { degree, l, extra, seed } => {
            if *degree == 0 {
                bail!(Error::Precondition("the Petri kernel is trivial in degree 0".into()));
            }
            let h = bound_hypothesis(*degree);
            if let Some(bad) = l.iter().find(|x| **x < h) {
                bail!(Error::Precondition(format!("l = {bad} is below 10d+6 = {h}")));
            }
            let elements = sample_kernel_elements(*degree, *extra, *seed);
            let rows: Vec<Value> = elements
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let r = wendl_bound_rows(b, l);
                    json!({
                        "index": i,
                        "tensor": b.tensor().canonicalize().to_string(),
                        "antisymmetric": b.tensor().is_antisymmetric(),
                        "pass": r.pass(),
                        "rows": r.per_l,
                    })
                })
                .collect();
            let pass = rows.iter().all(|r| r["pass"] == json!(true));
            Ok(RunReport::new(
                "verify-wendl",
                &json!({ "degree": degree, "l": l, "extra": extra, "seed": seed }),
                Outcome::from_bool(pass),
                json!({ "degree": degree, "hypothesis": h, "elements": rows }),
            ))
        }
        Command::Index { json: path, convention } => {
            let text = read(path)?;
            let mut spec: IndexSpec = serde_json::from_str(&text).context("malformed index input")?;
            if let Some(c) = convention {
                spec.convention = *c;
            }
            let report = spec.evaluate()?;
            let proof = IndexSpec {
                convention: IndexConvention::Proof,
                ..spec.clone()
            }
            .evaluate()?;
            Ok(RunReport::new(
                "index",
                &json!({ "input": text, "convention": spec.convention }),
                Outcome::from_bool(proof.index == proof.riemann_roch_index),
                serde_json::to_value(report)?,
            ))
        }
        Command::Codim { json: path } => {
            let text = read(path)?;
            let spec: CodimSpec = serde_json::from_str(&text).context("malformed codim input")?;
            let bound = codim_stratum_bound(&spec.query, &spec.quotient_dims)?;
            let predicted_top = top_stratum_conditions(&spec.query, &spec.quotient_dims);
            let pass = bound.codim >= bound.bound && predicted_top == bound.top_stratum;
            Ok(RunReport::new(
                "codim",
                &json!({ "input": text }),
                Outcome::from_bool(pass),
                json!({ "bound": bound, "top_stratum_conditions": predicted_top }),
            ))
        }
        Command::Schur { count, seed } => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let mut mismatches = Vec::new();
            for i in 0..*count {
                let t = random_operator(&mut rng);
                let dims = kernel_dims(&t)?;
                if !dims.equivalent() {
                    mismatches.push(json!({ "index": i, "dims": dims }));
                }
            }
            Ok(RunReport::new(
                "schur",
                &json!({ "count": count, "seed": seed }),
                Outcome::from_bool(mismatches.is_empty()),
                json!({ "operators": count, "mismatches": mismatches }),
            ))
        }
        Command::Simulate { json: path, table, corrupt } => {
            let text = read(path)?;
            let scenario = Scenario::from_json(&text)?;
            let (table, table_inputs) = load_table(table, corrupt)?;
            let report = check_invariance(&scenario, &table)?;
            Ok(RunReport::new(
                "simulate",
                &json!({ "scenario": text, "table": table_inputs }),
                Outcome::from_bool(report.pass),
                serde_json::to_value(report)?,
            ))
        }
        Command::RandomScenarios { count, table, seed } => {
            let (table, table_inputs) = load_table(table, &[])?;
            let mut failures = Vec::new();
            for (i, s) in random_scenarios(*seed, *count).iter().enumerate() {
                let r = check_invariance(s, &table)?;
                if !r.pass {
                    failures.push(json!({ "index": i, "scenario": s.to_json(), "report": r }));
                }
            }
            Ok(RunReport::new(
                "random-scenarios",
                &json!({ "count": count, "seed": seed, "table": table_inputs }),
                Outcome::from_bool(failures.is_empty()),
                json!({ "scenarios": count, "table": table.name(), "failures": failures }),
            ))
        }
        Command::SolveWeights {
            max_power,
            normalization,
            inject,
        } => {
            let mut norm = normalization.clone();
            if norm.len() > *max_power as usize {
                bail!(Error::InvalidInput(format!(
                    "{} normalization values for max_power {max_power}",
                    norm.len()
                )));
            }
            norm.resize(*max_power as usize, 0);
            let extra = inject
                .iter()
                .map(|s| parse_assignment(s).map(|(t, d, v)| Relation::assignment("injected", t, d, v)))
                .collect::<mtc_core::Result<Vec<_>>>()?;
            let inputs = json!({ "max_power": max_power, "normalization": norm, "inject": inject });
            let relations = relation_system(*max_power)?.len() + norm.len() + extra.len();
            match solve_weight_table_with(*max_power, &norm, &extra) {
                Ok(table) => {
                    let def = WeightTable::definition_verbatim();
                    let degrees: Vec<u32> = (0..=*max_power).map(|j| 1 << j).collect();
                    let columns: Vec<Value> = degrees
                        .iter()
                        .map(|d| {
                            let solved = table.column(1, *d);
                            let verbatim = def.column(1, *d);
                            let relation = if solved == verbatim {
                                "equal"
                            } else if solved.iter().zip(verbatim).all(|(a, b)| *a == -b) {
                                "negated"
                            } else {
                                "different"
                            };
                            json!({
                                "degree": d,
                                "plus": solved,
                                "minus": table.column(-1, *d),
                                "definition_plus": verbatim,
                                "relation_to_definition": relation,
                            })
                        })
                        .collect();
                    Ok(RunReport::new(
                        "solve-weights",
                        &inputs,
                        Outcome::Pass,
                        json!({
                            "relations": relations,
                            "antisymmetric": table.is_antisymmetric(),
                            "columns": columns,
                            "table": table.to_json(),
                        }),
                    ))
                }
                Err(e @ (Error::Inconsistent(_) | Error::Underdetermined(_))) => Ok(RunReport::new(
                    "solve-weights",
                    &inputs,
                    Outcome::Fail,
                    json!({ "relations": relations, "error": e.to_string() }),
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::Fixtures { dir } => {
            std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            let mut written = Vec::new();
            for f in fixtures::all_fixtures() {
                let path = dir.join(format!("{}.json", f.name));
                std::fs::write(&path, fixture_text(&f))
                    .with_context(|| format!("cannot write {}", path.display()))?;
                written.push(json!({ "name": f.name, "relation": f.relation }));
            }
            Ok(RunReport::new("fixtures", &json!({}), Outcome::Pass, json!({ "fixtures": written })))
        }
    }
}

/// The scenario file of a fixture, with its name and relation as extra keys.
pub fn fixture_text(f: &fixtures::Fixture) -> String {
    let mut v = f.scenario.to_json();
    let obj = v.as_object_mut().expect("scenario is an object");
    obj.insert("name".into(), json!(f.name));
    obj.insert("relation".into(), json!(f.relation));
    serde_json::to_string_pretty(&v).expect("fixture serializes") + "\n"
}
