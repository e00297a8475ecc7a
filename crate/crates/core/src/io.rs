//! JSON file formats for instances, matchings and solver outcomes.
//!
//! Every number that takes part in a decision travels as an exact rational
//! string, `"p"` or `"p/q"`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::instance::{CircleInstance, DcInstance, Instance, Kind, PlanarInstance};
use crate::model::{Color, Matching, Measure, MatchingGeometry, Mode, SolveOutcome, Variant};
use crate::scalar::{format_scalar, parse_scalar, to_f64};

/// Provenance block written by the generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorHeader {
    pub prng: String,
    pub version: u32,
    pub config: String,
    pub family: String,
    pub n: usize,
    pub mode: String,
    pub seed: u64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanarPointDoc {
    x: String,
    y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CirclePointDoc {
    turns: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlanarDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
    points: Vec<PlanarPointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<GeneratorHeader>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
    points: Vec<CirclePointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<GeneratorHeader>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DcDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mode: Option<String>,
    #[serde(rename = "dirR")]
    dir_red: [String; 2],
    #[serde(rename = "dirB")]
    dir_blue: [String; 2],
    red: Vec<String>,
    blue: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<GeneratorHeader>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Doc {
    General(PlanarDoc),
    Convex(PlanarDoc),
    Circle(CircleDoc),
    DoublyCollinear(DcDoc),
}

fn color_name(c: Color) -> String {
    match c {
        Color::Blue => "B".into(),
        Color::Red => "R".into(),
    }
}

fn parse_color(s: &str) -> Result<Color> {
    match s {
        "B" => Ok(Color::Blue),
        "R" => Ok(Color::Red),
        _ => Err(Error::Schema(format!("unknown color {s:?}"))),
    }
}

pub fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Mono => "mono",
        Mode::Bi => "bi",
    }
}

pub fn parse_mode(s: &str) -> Result<Mode> {
    match s {
        "mono" => Ok(Mode::Mono),
        "bi" => Ok(Mode::Bi),
        _ => Err(Error::Schema(format!("unknown mode {s:?}"))),
    }
}

// Colors must be present on every point or on none, and agree with an
// explicit mode.
fn parse_colors(mode: Option<&str>, tags: &[Option<String>]) -> Result<Option<Vec<Color>>> {
    let mode = mode.map(parse_mode).transpose()?;
    let tagged = tags.iter().filter(|c| c.is_some()).count();
    let bi = match mode {
        Some(Mode::Bi) => true,
        Some(Mode::Mono) => false,
        None => tagged > 0,
    };
    if (bi && tagged != tags.len()) || (!bi && tagged != 0) {
        return Err(Error::ColorMode);
    }
    if !bi {
        return Ok(None);
    }
    tags.iter().map(|c| parse_color(c.as_deref().unwrap_or_default())).collect::<Result<_>>().map(Some)
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<Instance> {
    parse_instance_with_header(text).map(|(i, _)| i)
}

pub fn parse_instance_with_header(text: &str) -> Result<(Instance, Option<GeneratorHeader>)> {
    let doc: Doc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    match doc {
        Doc::General(d) => planar(Kind::General, d),
        Doc::Convex(d) => planar(Kind::Convex, d),
        Doc::Circle(d) => {
            let tags: Vec<Option<String>> = d.points.iter().map(|p| p.c.clone()).collect();
            let colors = parse_colors(d.mode.as_deref(), &tags)?;
            let turns = d.points.iter().map(|p| parse_scalar(&p.turns)).collect::<Result<_>>()?;
            Ok((CircleInstance::new(turns, colors)?.into(), d.generator))
        }
        Doc::DoublyCollinear(d) => {
            if d.mode.as_deref().is_some_and(|m| m != "bi") {
                return Err(Error::ColorMode);
            }
            let pair = |v: &[String; 2]| -> Result<[crate::scalar::Scalar; 2]> {
                Ok([parse_scalar(&v[0])?, parse_scalar(&v[1])?])
            };
            let list = |v: &[String]| v.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>();
            let inst = DcInstance::new(pair(&d.dir_red)?, pair(&d.dir_blue)?, list(&d.red)?, list(&d.blue)?)?;
            Ok((inst.into(), d.generator))
        }
    }
}

fn planar(kind: Kind, d: PlanarDoc) -> Result<(Instance, Option<GeneratorHeader>)> {
    let tags: Vec<Option<String>> = d.points.iter().map(|p| p.c.clone()).collect();
    let colors = parse_colors(d.mode.as_deref(), &tags)?;
    let points = d
        .points
        .iter()
        .map(|p| Ok(Point2::new(parse_scalar(&p.x)?, parse_scalar(&p.y)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((PlanarInstance::new(kind, points, colors)?.into(), d.generator))
}

fn tag(colors: Option<&[Color]>, i: usize) -> Option<String> {
    colors.map(|c| color_name(c[i]))
}

/// Pretty-printed instance document, with an optional generator block.
pub fn serialize_instance(inst: &Instance, header: Option<&GeneratorHeader>) -> String {
    let generator = header.cloned();
    let mode = Some(mode_name(inst.mode()).to_string());
    let doc = match inst {
        Instance::Planar(p) => {
            let colors = p.colors();
            let points = p
                .points()
                .iter()
                .enumerate()
                .map(|(i, q)| PlanarPointDoc { x: format_scalar(&q.x), y: format_scalar(&q.y), c: tag(colors, i) })
                .collect();
            let d = PlanarDoc { mode, points, generator };
            match p.kind() {
                Kind::Convex => Doc::Convex(d),
                _ => Doc::General(d),
            }
        }
        Instance::Circle(c) => {
            let colors = c.colors();
            let points = c
                .turns()
                .iter()
                .enumerate()
                .map(|(i, t)| CirclePointDoc { turns: format_scalar(t), c: tag(colors, i) })
                .collect();
            Doc::Circle(CircleDoc { mode, points, generator })
        }
        Instance::DoublyCollinear(d) => {
            let pair = |v: &[crate::scalar::Scalar; 2]| [format_scalar(&v[0]), format_scalar(&v[1])];
            Doc::DoublyCollinear(DcDoc {
                mode,
                dir_red: pair(d.dir_red()),
                dir_blue: pair(d.dir_blue()),
                red: d.red().iter().map(format_scalar).collect(),
                blue: d.blue().iter().map(format_scalar).collect(),
                generator,
            })
        }
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("instance documents serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize, Deserialize)]
struct MatchingDoc {
    pairs: Vec<[usize; 2]>,
}

pub fn parse_matching(text: &str) -> Result<Matching> {
    let doc: MatchingDoc = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    Matching::new(doc.pairs.into_iter().map(|[a, b]| (a, b)))
}

pub fn matching_json(m: &Matching) -> Value {
    json!({ "pairs": m.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>() })
}

pub fn serialize_matching(m: &Matching) -> String {
    format!("{}\n", serde_json::to_string(&matching_json(m)).expect("serializable"))
}

/// Rounds to twelve significant digits so printed floats are stable.
pub fn stable_float(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

/// Outcome document. Squared lengths appear as `value_sq`, circle spans as
/// `span`; `value_float` is the same number in floating point.
pub fn outcome_json(out: &SolveOutcome, variant: Variant, with_matching: bool) -> Value {
    let key = match out.measure {
        Measure::SquaredLength => "value_sq",
        Measure::ChordSpan => "span",
    };
    let mut obj = serde_json::Map::new();
    obj.insert("variant".into(), json!(variant.name()));
    obj.insert(key.into(), json!(format_scalar(&out.value)));
    obj.insert("value_float".into(), json!(stable_float(to_f64(&out.value))));
    obj.insert("witness".into(), json!([out.witness.0, out.witness.1]));
    obj.insert("algorithm".into(), json!(out.algorithm));
    if with_matching {
        if let Some(m) = &out.matching {
            obj.insert("matching".into(), matching_json(m));
        }
    }
    Value::Object(obj)
}

/// Point coordinates as floats, for drawing.
pub fn float_points(inst: &Instance) -> Vec<(f64, f64)> {
    match inst {
        Instance::Planar(p) => p.points().iter().map(|q| (to_f64(&q.x), to_f64(&q.y))).collect(),
        Instance::Circle(c) => (0..c.point_count()).map(|i| c.position(i)).collect(),
        Instance::DoublyCollinear(d) => d.points().iter().map(|q| (to_f64(&q.x), to_f64(&q.y))).collect(),
    }
}
