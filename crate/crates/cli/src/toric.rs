use std::path::Path;

use kummer_core::toric::{
    element_age, junior_elements, bundled_chart_sets, parse_chart_sets, parse_triangulations, verify_triangulation,
    ChartSet, CyclicQuotient, TriangulationJson,
};
use serde_json::{json, Value};

use crate::cli::{Format, ToricCommand};
use crate::read_input;
use crate::report::{json, table, CliError, Report};

pub fn run(cmd: &ToricCommand, format: Format) -> Result<Report, CliError> {
    match cmd {
        ToricCommand::Juniors { r, weights } => juniors(*r, weights, format),
        ToricCommand::Verify { file } => verify(file.as_deref(), format),
    }
}

fn juniors(r: u32, weights: &[u32], format: Format) -> Result<Report, CliError> {
    let q = CyclicQuotient::new(r, weights.to_vec())?;
    let juniors = junior_elements(&q);
    let body = match format {
        Format::Json => {
            let ages: Vec<Value> = (0..r)
                .map(|m| json!({"m": m, "element": q.element(m), "age": element_age(&q, m).to_string()}))
                .collect();
            json(&json!({
                "r": q.r, "weights": q.weights, "gorenstein": q.is_gorenstein(),
                "juniors": juniors, "ages": ages,
            }))
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = (0..r)
                .map(|m| {
                    let e: Vec<String> = q.element(m).iter().map(u32::to_string).collect();
                    vec![
                        m.to_string(),
                        format!("({})", e.join(",")),
                        element_age(&q, m).to_string(),
                        if juniors.contains(&m) { "junior".into() } else { String::new() },
                    ]
                })
                .collect();
            let list: Vec<String> = juniors.iter().map(u32::to_string).collect();
            format!("{q}\n{}juniors: [{}]\n", table(&["m", "element", "age", ""], &rows), list.join(", "))
        }
    };
    Ok(Report::ok(body))
}

enum Input {
    Charts(Vec<ChartSet>),
    Fans(Vec<TriangulationJson>),
}

fn load(file: Option<&Path>) -> Result<Input, CliError> {
    let Some(path) = file else {
        return Ok(Input::Charts(bundled_chart_sets()));
    };
    let text = read_input(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let first = match &value {
        Value::Array(items) => items.first(),
        other => Some(other),
    };
    let is_fan = first.is_some_and(|v| v.get("cones").is_some());
    let parsed =
        if is_fan { parse_triangulations(&text).map(Input::Fans) } else { parse_chart_sets(&text).map(Input::Charts) };
    parsed.map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn verify(file: Option<&Path>, format: Format) -> Result<Report, CliError> {
    match load(file)? {
        Input::Charts(sets) => verify_charts(&sets, format),
        Input::Fans(fans) => verify_fans(&fans, format),
    }
}

fn mark(b: bool) -> String {
    if b { "pass" } else { "FAIL" }.to_string()
}

fn verify_charts(sets: &[ChartSet], format: Format) -> Result<Report, CliError> {
    let mut failed: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut fans = Vec::new();
    for set in sets {
        let verdicts = set.verify()?;
        for v in &verdicts {
            if !v.passed() {
                failed.push(v.label.clone());
            }
            let lift = v.lift.as_ref().map(|l| format!("{l:?}")).unwrap_or_default();
            let lift_ok = v.lift_matches.map(mark).unwrap_or_else(|| "-".into());
            rows.push(vec![
                set.case.clone().unwrap_or_default(),
                v.label.clone(),
                mark(v.invariant),
                mark(v.crepant),
                lift,
                lift_ok,
                v.error.clone().unwrap_or_default(),
            ]);
            records.push(json!({"case": set.case, "verdict": v}));
        }
        // The fan only makes sense when every chart is usable.
        let fan = match set.triangulation() {
            Ok(t) => match verify_triangulation(&t) {
                Ok(rep) => json!({"case": set.case, "pass": true, "cones": rep.cones, "rays": rep.rays.len()}),
                Err(e) => json!({"case": set.case, "pass": false, "error": e.to_string()}),
            },
            Err(e) => json!({"case": set.case, "pass": false, "error": e.to_string()}),
        };
        fans.push(fan);
    }
    let total = rows.len();
    let failure = (!failed.is_empty()).then(|| format!("charts failed: {}", failed.join(", ")));
    let body = match format {
        Format::Json => json(&json!({
            "charts": records, "fans": fans, "total": total, "failed": failed,
        })),
        Format::Table => {
            let mut s = table(&["case", "chart", "invariant", "crepant", "lift", "lift ok", "error"], &rows);
            for f in &fans {
                let case = f["case"].as_str().unwrap_or("-");
                match f["pass"].as_bool() {
                    Some(true) => s.push_str(&format!("fan ({case}): pass, {} cones\n", f["cones"])),
                    _ => s.push_str(&format!(
                        "fan ({case}): not a triangulation: {}\n",
                        f["error"].as_str().unwrap_or("")
                    )),
                }
            }
            s.push_str(&format!("{} of {total} charts pass\n", total - failed.len()));
            s
        }
    };
    Ok(Report::checked(body, failure))
}

fn verify_fans(fans: &[TriangulationJson], format: Format) -> Result<Report, CliError> {
    let mut results = Vec::new();
    let mut failed = Vec::new();
    for (i, f) in fans.iter().enumerate() {
        let label = f.case.clone().unwrap_or_else(|| i.to_string());
        let outcome = f.to_triangulation().and_then(|t| verify_triangulation(&t));
        match outcome {
            Ok(rep) => results.push(json!({"label": label, "pass": true, "cones": rep.cones, "rays": rep.rays.len(), "volume": rep.total_volume})),
            Err(e) => {
                failed.push(format!("{label}: {e}"));
                results.push(json!({"label": label, "pass": false, "error": e.to_string()}));
            }
        }
    }
    let failure = (!failed.is_empty()).then(|| failed.join("; "));
    let body = match format {
        Format::Json => json(&json!({"triangulations": results})),
        Format::Table => {
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r["label"].as_str().unwrap_or("").to_string(),
                        mark(r["pass"].as_bool().unwrap_or(false)),
                        r.get("cones").map(Value::to_string).unwrap_or_default(),
                        r.get("error").and_then(Value::as_str).unwrap_or("").to_string(),
                    ]
                })
                .collect();
            table(&["fan", "verdict", "cones", "error"], &rows)
        }
    };
    Ok(Report::checked(body, failure))
}
