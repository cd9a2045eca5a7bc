use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use super::{VerifyError, SCHEMA_VERSION};
use crate::bracket_ring::PAPPUS_POINTS;
use crate::exterior::{bracket, join_pp, HomogeneousPoint, PointAssignment};
use crate::{parse_rational, Point, Rational, Scalar};

/// Resample limit of [`random_pappus_config`].
pub const SAMPLING_RETRIES: usize = 64;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub generator: String,
    pub seed: Option<u64>,
    /// Trial or run index within the seeded stream.
    pub index: Option<u64>,
}

/// Exact coordinates for named points, in insertion order.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    points: Vec<(String, Point)>,
    pub provenance: Provenance,
}

impl PointAssignment<Rational> for Configuration {
    fn point(&self, name: &str) -> Option<&Point> {
        self.get(name)
    }
}

impl Configuration {
    pub fn new(provenance: Provenance) -> Self {
        Configuration {
            points: Vec::new(),
            provenance,
        }
    }

    /// Inserts or replaces the coordinates of `name`.
    pub fn set(&mut self, name: &str, point: Point) {
        match self.points.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = point,
            None => self.points.push((name.to_string(), point)),
        }
    }

    pub fn with(mut self, name: &str, point: Point) -> Self {
        self.set(name, point);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Point> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn points(&self) -> impl Iterator<Item = (&str, &Point)> {
        self.points.iter().map(|(n, p)| (n.as_str(), p))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `{"schema": 1, "points": {"a": ["0", "0", "1"], ...}, "provenance": {...}}`.
    pub fn to_json(&self) -> Value {
        let mut points = Map::new();
        for (name, p) in &self.points {
            points.insert(
                name.clone(),
                json!(p.coords().iter().map(ToString::to_string).collect::<Vec<_>>()),
            );
        }
        json!({
            "schema": SCHEMA_VERSION,
            "points": points,
            "provenance": {
                "generator": self.provenance.generator,
                "seed": self.provenance.seed,
                "index": self.provenance.index,
            },
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, VerifyError> {
        let invalid = |msg: String| VerifyError::InvalidConfig(msg);
        let obj = value
            .as_object()
            .ok_or_else(|| invalid("expected a JSON object".into()))?;
        if let Some(schema) = obj.get("schema") {
            if schema.as_u64() != Some(u64::from(SCHEMA_VERSION)) {
                return Err(invalid(format!("unsupported schema {schema}")));
            }
        }
        let points = obj
            .get("points")
            .and_then(Value::as_object)
            .ok_or_else(|| invalid("missing \"points\" object".into()))?;
        let mut provenance = Provenance {
            generator: "file".into(),
            ..Provenance::default()
        };
        if let Some(p) = obj.get("provenance").and_then(Value::as_object) {
            if let Some(g) = p.get("generator").and_then(Value::as_str) {
                provenance.generator = g.to_string();
            }
            provenance.seed = p.get("seed").and_then(Value::as_u64);
            provenance.index = p.get("index").and_then(Value::as_u64);
        }
        let mut config = Configuration::new(provenance);
        for (name, coords) in points {
            let coords = coords
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| invalid(format!("point `{name}` needs three coordinates")))?;
            let mut parsed = Vec::with_capacity(3);
            for c in coords {
                let text = match c {
                    Value::String(s) => s.clone(),
                    Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                    other => return Err(invalid(format!("point `{name}`: bad coordinate {other}"))),
                };
                parsed.push(
                    parse_rational(&text)
                        .ok_or_else(|| invalid(format!("point `{name}`: bad coordinate \"{text}\"")))?,
                );
            }
            let coords: [Rational; 3] = parsed.try_into().expect("three coordinates");
            let point = HomogeneousPoint::from_coords(coords)
                .ok_or_else(|| invalid(format!("point `{name}` is the zero vector")))?;
            config.set(name, point);
        }
        Ok(config)
    }

    pub fn from_json_str(text: &str) -> Result<Self, VerifyError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| VerifyError::InvalidConfig(format!("malformed JSON: {e}")))?;
        Self::from_json(&value)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|(n, p)| format!("{n}={p}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Checks that `a, b, c` and `a', b', c'` are collinear triples of six
/// pairwise distinct points. The error names the violated hypothesis.
pub fn validate_pappus_hypotheses(config: &Configuration) -> Result<(), VerifyError> {
    let mut pts = Vec::with_capacity(6);
    for name in PAPPUS_POINTS {
        let p = config
            .get(name)
            .ok_or_else(|| VerifyError::InvalidConfig(format!("point `{name}` is missing")))?;
        pts.push((name, p));
    }
    for triple in [&pts[0..3], &pts[3..6]] {
        if !bracket(triple[0].1, triple[1].1, triple[2].1).is_zero() {
            return Err(VerifyError::InvalidConfig(format!(
                "{}, {}, {} are not collinear",
                triple[0].0, triple[1].0, triple[2].0
            )));
        }
    }
    for (i, (n, p)) in pts.iter().enumerate() {
        for (m, q) in &pts[i + 1..] {
            if p.is_proportional(q) {
                return Err(VerifyError::InvalidConfig(format!("points {n} and {m} coincide")));
            }
        }
    }
    Ok(())
}

fn affine_point(rng: &mut ChaCha8Rng, bound: i64) -> [Rational; 3] {
    [
        Rational::from_int(rng.gen_range(-bound..=bound)),
        Rational::from_int(rng.gen_range(-bound..=bound)),
        Rational::from_int(1),
    ]
}

fn along(p: &[Rational; 3], q: &[Rational; 3], s: &Rational) -> Point {
    let coords = [0, 1, 2].map(|i| p[i].clone() + s.clone() * (q[i].clone() - p[i].clone()));
    HomogeneousPoint::from_coords(coords).expect("last coordinate stays 1")
}

/// Two random distinct lines with three distinct points on each, all six
/// points pairwise distinct. Points are exact affine combinations
/// `P + s·(Q − P)` of two integer base points per line, with rational `s`,
/// so both collinearity brackets are exactly zero.
pub fn random_pappus_config(seed: u64, bound: u64) -> Result<Configuration, VerifyError> {
    if bound < 3 {
        return Err(VerifyError::InvalidArgument(format!(
            "bound must be at least 3, got {bound}"
        )));
    }
    let bound = i64::try_from(bound).map_err(|_| VerifyError::InvalidArgument("bound too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLING_RETRIES {
        let mut triples = Vec::with_capacity(2);
        let mut lines = Vec::with_capacity(2);
        for _ in 0..2 {
            let p = affine_point(&mut rng, bound);
            let q = affine_point(&mut rng, bound);
            let params: Vec<Rational> = (0..3)
                .map(|_| Rational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound).into()))
                .collect();
            triples.push(params.iter().map(|s| along(&p, &q, s)).collect::<Vec<_>>());
            lines.push(join_pp(
                &HomogeneousPoint::from_coords(p).expect("affine"),
                &HomogeneousPoint::from_coords(q).expect("affine"),
            ));
        }
        let distinct_lines = match (&lines[0], &lines[1]) {
            (Some(l), Some(m)) => !l.is_proportional(m),
            _ => false,
        };
        let all: Vec<&Point> = triples.iter().flatten().collect();
        let distinct_points = all
            .iter()
            .enumerate()
            .all(|(i, p)| all[i + 1..].iter().all(|q| !p.is_proportional(q)));
        if !(distinct_lines && distinct_points) {
            continue;
        }
        let mut config = Configuration::new(Provenance {
            generator: "random_pappus_config".into(),
            seed: Some(seed),
            index: None,
        });
        for (name, p) in PAPPUS_POINTS.iter().zip(triples.into_iter().flatten()) {
            config.set(name, p);
        }
        return Ok(config);
    }
    Err(VerifyError::DegenerateSampling {
        attempts: SAMPLING_RETRIES,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> Configuration {
        let p = |x, y| HomogeneousPoint::from_ints(x, y, 1).unwrap();
        Configuration::new(Provenance::default())
            .with("a", p(0, 0))
            .with("b", p(1, 0))
            .with("c", p(3, 0))
            .with("a'", p(0, 1))
            .with("b'", p(2, 1))
            .with("c'", p(5, 1))
    }

    #[test]
    fn random_configs_satisfy_hypotheses() {
        for seed in 0..50 {
            let config = random_pappus_config(seed, 20).unwrap();
            validate_pappus_hypotheses(&config).unwrap();
            assert_eq!(config, random_pappus_config(seed, 20).unwrap());
        }
        assert_ne!(
            random_pappus_config(1, 20).unwrap(),
            random_pappus_config(2, 20).unwrap()
        );
    }

    #[test]
    fn small_bounds_are_rejected() {
        assert!(matches!(
            random_pappus_config(0, 2),
            Err(VerifyError::InvalidArgument(_))
        ));
    }

    #[test]
    fn validation_names_the_violation() {
        validate_pappus_hypotheses(&fixture()).unwrap();
        let off = fixture().with("c", HomogeneousPoint::from_ints(3, 1, 1).unwrap());
        let err = validate_pappus_hypotheses(&off).unwrap_err();
        assert_eq!(err, VerifyError::InvalidConfig("a, b, c are not collinear".into()));
        let dup = fixture().with("c", HomogeneousPoint::from_ints(2, 0, 2).unwrap());
        let err = validate_pappus_hypotheses(&dup).unwrap_err();
        assert_eq!(err, VerifyError::InvalidConfig("points b and c coincide".into()));
        let mut missing = Configuration::new(Provenance::default());
        missing.set("a", HomogeneousPoint::from_ints(0, 0, 1).unwrap());
        assert!(validate_pappus_hypotheses(&missing).is_err());
    }

    #[test]
    fn json_round_trip() {
        let config = random_pappus_config(7, 10).unwrap();
        let text = config.to_json().to_string();
        assert!(text.starts_with(r#"{"schema":1,"points":{"a":["#));
        assert_eq!(Configuration::from_json_str(&text).unwrap(), config);
    }

    #[test]
    fn json_accepts_fractions_and_rejects_garbage() {
        let config =
            Configuration::from_json_str(r#"{"points": {"a": ["1/2", "-3", 4], "b": ["0", "0", "1"]}}"#).unwrap();
        assert_eq!(config.get("a").unwrap().coords()[0], Rational::new(1.into(), 2.into()));
        assert_eq!(config.points().map(|(n, _)| n).collect::<Vec<_>>(), vec!["a", "b"]);
        for bad in [
            r#"{"points": {"a": ["0", "0", "0"]}}"#,
            r#"{"points": {"a": ["x", "0", "1"]}}"#,
            r#"{"points": {"a": ["1", "1"]}}"#,
            r#"{"schema": 2, "points": {}}"#,
            r#"{"pts": {}}"#,
            "not json",
        ] {
            assert!(
                matches!(Configuration::from_json_str(bad), Err(VerifyError::InvalidConfig(_))),
                "{bad}"
            );
        }
    }
}
