//! JSON wire formats for chart sets and triangulations.

use serde::{Deserialize, Serialize};

use super::chart::{lift_action, verify_chart_crepancy, verify_chart_invariance, Chart, Ray};
use super::quotient::CyclicQuotient;
use super::triangulation::Triangulation;
use crate::error::ToricError;

/// The bundled chart data for the four singularity types, 24 charts in all.
pub const BUNDLED_CHARTS_JSON: &str =
    include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/order6_charts.json"));

/// Fans dual to the bundled charts, one per singularity type.
pub const BUNDLED_FANS_JSON: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/order6_fans.json"));

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartRecord {
    pub label: String,
    pub rows: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_lift: Option<Vec<u32>>,
}

/// `{r, weights, charts: [{label, rows}]}`, optionally with a case label,
/// the characters of the residual action and the expected lifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSet {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub r: u32,
    pub weights: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_chars: Option<Vec<u32>>,
    pub charts: Vec<ChartRecord>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T> From<OneOrMany<T>> for Vec<T> {
    fn from(v: OneOrMany<T>) -> Self {
        match v {
            OneOrMany::One(t) => vec![t],
            OneOrMany::Many(v) => v,
        }
    }
}

/// Accepts a single chart set or an array of them.
pub fn parse_chart_sets(json: &str) -> Result<Vec<ChartSet>, serde_json::Error> {
    serde_json::from_str::<OneOrMany<ChartSet>>(json).map(Into::into)
}

pub fn bundled_chart_sets() -> Vec<ChartSet> {
    parse_chart_sets(BUNDLED_CHARTS_JSON).expect("bundled chart fixture parses")
}

/// Outcome of checking one chart record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartVerdict {
    pub label: String,
    pub invariant: bool,
    pub crepant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_matches: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ChartVerdict {
    pub fn passed(&self) -> bool {
        self.invariant && self.crepant && self.lift_matches != Some(false) && self.error.is_none()
    }
}

impl ChartSet {
    pub fn quotient(&self) -> Result<CyclicQuotient, ToricError> {
        CyclicQuotient::new(self.r, self.weights.clone())
    }

    pub fn charts(&self) -> Result<Vec<Chart>, ToricError> {
        self.charts.iter().map(|c| Chart::new(c.label.clone(), c.rows.clone())).collect()
    }

    /// Invariance, crepancy and (when the set carries characters) the lift
    /// of every chart.
    pub fn verify(&self) -> Result<Vec<ChartVerdict>, ToricError> {
        let q = self.quotient()?;
        Ok(self.charts.iter().map(|rec| verify_record(rec, &q, self.ambient_chars.as_deref())).collect())
    }

    /// The first failure as an error, for callers that want `?`.
    pub fn verify_strict(&self) -> Result<(), ToricError> {
        let q = self.quotient()?;
        for rec in &self.charts {
            let chart = Chart::new(rec.label.clone(), rec.rows.clone())?;
            verify_chart_invariance(&chart, &q)?;
            verify_chart_crepancy(&chart, &q)?;
            if let (Some(chars), Some(expected)) = (&self.ambient_chars, &rec.expected_lift) {
                let got = lift_action(&chart, chars, q.r);
                if &got != expected {
                    return Err(ToricError::LiftMismatch { label: rec.label.clone(), got, expected: expected.clone() });
                }
            }
        }
        Ok(())
    }

    pub fn triangulation(&self) -> Result<Triangulation, ToricError> {
        Triangulation::from_charts(self.quotient()?, &self.charts()?)
    }
}

fn verify_record(rec: &ChartRecord, q: &CyclicQuotient, chars: Option<&[u32]>) -> ChartVerdict {
    let mut v = ChartVerdict {
        label: rec.label.clone(),
        invariant: false,
        crepant: false,
        lift: None,
        lift_matches: None,
        error: None,
    };
    let chart = match Chart::new(rec.label.clone(), rec.rows.clone()) {
        Ok(c) => c,
        Err(e) => {
            v.error = Some(e.to_string());
            return v;
        }
    };
    match verify_chart_invariance(&chart, q) {
        Ok(()) => v.invariant = true,
        Err(e) => v.error = Some(e.to_string()),
    }
    match verify_chart_crepancy(&chart, q) {
        Ok(_) => v.crepant = true,
        Err(e) => {
            v.error.get_or_insert(e.to_string());
        }
    }
    if let Some(chars) = chars {
        if chars.len() == chart.dimension() {
            let got = lift_action(&chart, chars, q.r);
            v.lift_matches = rec.expected_lift.as_ref().map(|e| e == &got);
            v.lift = Some(got);
        } else {
            v.error.get_or_insert(format!("ambient characters have length {}", chars.len()));
        }
    }
    v
}

/// `{r, weights, cones: [[[num, den], ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub r: u32,
    pub weights: Vec<u32>,
    pub cones: Vec<Vec<Vec<[i64; 2]>>>,
}

impl TriangulationJson {
    pub fn from_triangulation(t: &Triangulation, case: Option<String>) -> Self {
        TriangulationJson {
            case,
            r: t.quotient.r,
            weights: t.quotient.weights.clone(),
            cones: t.cones.iter().map(|c| c.iter().map(Ray::to_pairs).collect()).collect(),
        }
    }

    pub fn to_triangulation(&self) -> Result<Triangulation, ToricError> {
        let q = CyclicQuotient::new(self.r, self.weights.clone())?;
        let mut cones = Vec::with_capacity(self.cones.len());
        for (ci, cone) in self.cones.iter().enumerate() {
            let mut rays = Vec::with_capacity(cone.len());
            for (ri, pairs) in cone.iter().enumerate() {
                let ray = Ray::from_pairs(pairs).ok_or_else(|| ToricError::RayNotInLattice {
                    cone: ci,
                    ray: ri,
                    point: format!("{pairs:?}"),
                })?;
                rays.push(ray);
            }
            cones.push(rays);
        }
        Ok(Triangulation::new(q, cones))
    }
}

/// Accepts a single triangulation or an array of them.
pub fn parse_triangulations(json: &str) -> Result<Vec<TriangulationJson>, serde_json::Error> {
    serde_json::from_str::<OneOrMany<TriangulationJson>>(json).map(Into::into)
}

pub fn bundled_fans() -> Vec<TriangulationJson> {
    parse_triangulations(BUNDLED_FANS_JSON).expect("bundled fan fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::triangulation::verify_triangulation;

    #[test]
    fn fixture_has_24_charts() {
        let sets = bundled_chart_sets();
        assert_eq!(sets.len(), 4);
        assert_eq!(sets.iter().map(|s| s.charts.len()).sum::<usize>(), 24);
        for s in &sets {
            assert!(s.verify().unwrap().iter().all(ChartVerdict::passed), "{:?}", s.case);
            s.verify_strict().unwrap();
        }
    }

    #[test]
    fn fans_match_charts() {
        for (set, fan) in bundled_chart_sets().iter().zip(bundled_fans()) {
            assert_eq!(set.case, fan.case);
            let t = set.triangulation().unwrap();
            assert_eq!(fan.to_triangulation().unwrap(), t);
            assert_eq!(TriangulationJson::from_triangulation(&t, set.case.clone()), fan);
        }
    }

    #[test]
    fn every_bundled_fan_verifies() {
        for fan in bundled_fans() {
            let rep = verify_triangulation(&fan.to_triangulation().unwrap()).unwrap();
            assert_eq!(rep.cones, 6, "{:?}", fan.case);
        }
    }

    #[test]
    fn single_object_is_accepted() {
        let json = r#"{"r": 6, "weights": [1, 5], "charts": [{"label": "a", "rows": [[6, 0], [-5, 1]]}]}"#;
        let sets = parse_chart_sets(json).unwrap();
        assert_eq!(sets.len(), 1);
        let verdicts = sets[0].verify().unwrap();
        assert!(verdicts[0].passed());
        assert_eq!(verdicts[0].lift, None);
    }

    #[test]
    fn lift_mismatch_is_reported() {
        let json = r#"{"r": 6, "weights": [1, 5], "ambient_chars": [0, 5],
            "charts": [{"label": "bad", "rows": [[6, 0], [-5, 1]], "expected_lift": [1, 4]}]}"#;
        let set = &parse_chart_sets(json).unwrap()[0];
        let v = &set.verify().unwrap()[0];
        assert_eq!(v.lift_matches, Some(false));
        assert!(!v.passed());
        assert!(matches!(set.verify_strict(), Err(ToricError::LiftMismatch { .. })));
    }

    #[test]
    fn triangulation_round_trip() {
        let fans = bundled_fans();
        let json = serde_json::to_string(&fans).unwrap();
        assert_eq!(parse_triangulations(&json).unwrap(), fans);
        let t = fans[1].to_triangulation().unwrap();
        assert!(verify_triangulation(&t).is_ok());
    }
}
