use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadgets::{Expected, GadgetInstance, GadgetParams, Problem};
use crate::geometry::{Color, Point, PointSet, WeightedPoint};
use crate::numerics::Rational;

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsFile {
    pub k: usize,
    pub n: usize,
    pub N: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub C: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub V: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointEntry {
    pub coords: Vec<Rational>,
    pub color: Option<Color>,
    pub weight: u64,
    #[serde(default, rename = "in_S", skip_serializing_if = "Option::is_none")]
    pub in_subset: Option<bool>,
}

/// On-disk instance. Gadget files carry `params` and the expected values;
/// hand-written instances may omit them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub problem: Problem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_positive: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_negative: Option<Rational>,
    pub points: Vec<PointEntry>,
}

impl InstanceFile {
    pub fn from_gadget(g: &GadgetInstance) -> Self {
        let p = &g.params;
        InstanceFile {
            dim: g.points.dim(),
            problem: g.problem,
            params: Some(ParamsFile {
                k: p.k,
                n: p.n,
                N: p.N,
                mu: p.mu.clone(),
                C: p.C.clone(),
                V: p.V.clone(),
                eps: p.eps.clone(),
            }),
            expected_positive: Some(g.expected_positive.clone()),
            expected_negative: g.expected_negative.clone(),
            points: g
                .points
                .iter()
                .enumerate()
                .map(|(i, wp)| PointEntry {
                    coords: wp.point.0.clone(),
                    color: wp.color,
                    weight: wp.weight,
                    in_subset: g.subset.as_ref().map(|s| s[i]),
                })
                .collect(),
        }
    }

    /// Validated point set; dimensions and weights are checked here.
    pub fn point_set(&self) -> Result<PointSet> {
        let mut ps = PointSet::new(self.dim)?;
        for e in &self.points {
            ps.push(WeightedPoint { point: Point(e.coords.clone()), color: e.color, weight: e.weight })?;
        }
        Ok(ps)
    }

    /// Membership mask of the candidate net, if any point is marked.
    pub fn subset(&self) -> Option<Vec<bool>> {
        if self.points.iter().all(|p| p.in_subset.is_none()) {
            return None;
        }
        Some(self.points.iter().map(|p| p.in_subset.unwrap_or(false)).collect())
    }

    /// Back to a gadget instance, with `N` recomputed from the points.
    pub fn to_gadget(&self) -> Result<GadgetInstance> {
        let points = self.point_set()?;
        let params = self.params.as_ref().ok_or_else(|| Error::InstanceFormat("missing params".into()))?;
        let expected_positive =
            self.expected_positive.clone().ok_or_else(|| Error::InstanceFormat("missing expected_positive".into()))?;
        Ok(GadgetInstance {
            params: GadgetParams {
                k: params.k,
                n: params.n,
                N: points.total_weight(),
                mu: params.mu.clone(),
                t: None,
                C: params.C.clone(),
                V: params.V.clone(),
                eps: params.eps.clone(),
            },
            points,
            problem: self.problem,
            expected_positive,
            expected_negative: self.expected_negative.clone(),
            subset: self.subset(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: InstanceFile = serde_json::from_str(text).map_err(|e| Error::InstanceFormat(e.to_string()))?;
        for (i, p) in f.points.iter().enumerate() {
            if p.coords.len() != f.dim {
                return Err(Error::DimensionMismatch { expected: f.dim, got: p.coords.len() });
            }
            if p.weight == 0 {
                return Err(Error::ZeroWeight { index: i });
            }
        }
        Ok(f)
    }
}

pub fn read_instance(path: &Path) -> Result<InstanceFile> {
    InstanceFile::from_json(&std::fs::read_to_string(path)?)
}

pub fn write_instance(path: &Path, f: &InstanceFile) -> Result<()> {
    std::fs::write(path, f.to_json())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_empty_star_gadget, build_net_instance, build_redblue_gadget, Graph};
    use crate::solvers::NetFamily;

    #[test]
    fn gadget_round_trip() {
        let g = Graph::complete(3);
        let gadgets = [
            build_redblue_gadget(&g, 2).unwrap(),
            build_empty_star_gadget(&g, 2, &"2".parse().unwrap()).unwrap(),
            build_net_instance(&g, 2, NetFamily::HalfSpace).unwrap(),
        ];
        for gad in gadgets {
            let file = InstanceFile::from_gadget(&gad);
            let text = file.to_json();
            let back = InstanceFile::from_json(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_json(), text);
            let rebuilt = back.to_gadget().unwrap();
            assert_eq!(rebuilt.points, gad.points);
            assert_eq!(rebuilt.subset, gad.subset);
            assert_eq!(rebuilt.params.N, gad.params.N);
        }
    }

    #[test]
    fn rationals_are_strings() {
        let gad = build_empty_star_gadget(&Graph::complete(2), 2, &"2".parse().unwrap()).unwrap();
        let text = InstanceFile::from_gadget(&gad).to_json();
        assert!(text.contains("\"mu\": \"2\""));
        assert!(text.contains("\"expected_positive\": \"1/4\""));
        assert!(text.contains("\"problem\": \"empty-star\""));
    }

    #[test]
    fn rejects_malformed() {
        let bad_dim = r#"{"dim": 2, "problem": "star-disc", "points": [{"coords": ["1/2"], "color": null, "weight": 1}]}"#;
        assert!(matches!(InstanceFile::from_json(bad_dim), Err(Error::DimensionMismatch { .. })));
        let float = r#"{"dim": 1, "problem": "star-disc", "points": [{"coords": ["0.5"], "color": null, "weight": 1}]}"#;
        assert!(InstanceFile::from_json(float).is_err());
        let zero = r#"{"dim": 1, "problem": "star-disc", "points": [{"coords": ["1/2"], "color": null, "weight": 0}]}"#;
        assert!(InstanceFile::from_json(zero).is_err());
        let alias = r#"{"dim": 1, "problem": "max-empty-star", "points": []}"#;
        assert_eq!(InstanceFile::from_json(alias).unwrap().problem, Problem::EmptyStar);
    }
}
