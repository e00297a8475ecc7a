//! Capability table and solver selection per (kind, mode, variant).

use std::fmt;

use num_traits::{Signed, Zero};

use crate::circle::{maxmax_circle, maxmin1_circle, minmax1_circle, minmin_circle};
use crate::convex::{dp_solve_convex, maxmax1_convex, maxmax2_convex, minmin1_convex, minmin2_convex};
use crate::dc::{
    is_one_sided, maxmax2_dc, maxmin2_orthogonal, minmax2_dc, minmax2_orthogonal, minmax2_small_angle, minmin2_dc,
    onesided_dp, onesided_minmax_fast,
};
use crate::error::{Error, Result};
use crate::general::{maxmax1_general, minmin1_general};
use crate::instance::{DcInstance, Instance, Kind, PlanarInstance};
use crate::model::{Mode, SolveOutcome, Variant};
use crate::oracle::oracle_solve;
use crate::scalar::ratio;

/// How `solve` picks an algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The fastest applicable algorithm.
    Auto,
    /// The dynamic program covering the variant.
    Dp,
    /// Exhaustive enumeration, bounded by the cap.
    Oracle,
    /// The fastest applicable algorithm other than a dynamic program.
    Specialized,
}

impl Strategy {
    pub fn from_name(s: &str) -> Option<Strategy> {
        match s {
            "auto" => Some(Strategy::Auto),
            "dp" => Some(Strategy::Dp),
            "oracle" => Some(Strategy::Oracle),
            "specialized" => Some(Strategy::Specialized),
            _ => None,
        }
    }
}

/// Status of one (kind, mode, variant) cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    /// Solved for every instance of the cell.
    Solved,
    /// Solved only under the stated condition.
    Conditional(&'static str),
    /// Refused with the stated reason.
    Refused(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capability {
    pub kind: Kind,
    pub mode: Mode,
    pub variant: Variant,
    /// Running time of the value computation.
    pub bound: &'static str,
    pub support: Support,
    /// Tags of the algorithms `auto` may report, in order of preference.
    pub algorithms: &'static [&'static str],
}

const fn cap(
    kind: Kind,
    mode: Mode,
    variant: Variant,
    bound: &'static str,
    support: Support,
    algorithms: &'static [&'static str],
) -> Capability {
    Capability { kind, mode, variant, bound, support, algorithms }
}

use Kind::{Circle, Convex, DoublyCollinear as Dc, General};
use Mode::{Bi, Mono};
use Support::{Conditional, Refused, Solved};

const MIN_MIN: Variant = Variant::MIN_MIN;
const MAX_MAX: Variant = Variant::MAX_MAX;
const MIN_MAX: Variant = Variant::MIN_MAX;
const MAX_MIN: Variant = Variant::MAX_MIN;

pub const CAPABILITIES: &[Capability] = &[
    cap(General, Mono, MIN_MIN, "O(nh + n log n)", Solved, &["general-minmin"]),
    cap(General, Mono, MAX_MAX, "O(nh + n log n)", Solved, &["general-maxmax"]),
    cap(General, Mono, MIN_MAX, "NP-hard", Refused("NP-hard in general position"), &[]),
    cap(General, Mono, MAX_MIN, "?", Refused("open problem in general position"), &[]),
    cap(General, Bi, MIN_MIN, "?", Refused("open problem in general position"), &[]),
    cap(General, Bi, MAX_MAX, "?", Refused("open problem in general position"), &[]),
    cap(General, Bi, MIN_MAX, "NP-hard", Refused("NP-hard in general position"), &[]),
    cap(General, Bi, MAX_MIN, "?", Refused("open problem in general position"), &[]),
    cap(Convex, Mono, MIN_MIN, "O(n log n)", Solved, &["convex-closest-pair"]),
    cap(Convex, Mono, MAX_MAX, "O(n log n)", Solved, &["convex-farthest-pair"]),
    cap(Convex, Mono, MIN_MAX, "O(n^3)", Solved, &["convex-dp"]),
    cap(Convex, Mono, MAX_MIN, "O(n^3)", Solved, &["convex-dp"]),
    cap(Convex, Bi, MIN_MIN, "O(n log n)", Solved, &["convex-orbit-closest-pair"]),
    cap(Convex, Bi, MAX_MAX, "O(n log n)", Solved, &["convex-orbit-farthest-pair"]),
    cap(Convex, Bi, MIN_MAX, "O(n^3)", Solved, &["convex-dp"]),
    cap(Convex, Bi, MAX_MIN, "O(n^3)", Solved, &["convex-dp"]),
    cap(Circle, Mono, MIN_MIN, "O(n)", Solved, &["circle-boundary-min"]),
    cap(Circle, Mono, MAX_MAX, "O(n log n)", Solved, &["circle-antipodal"]),
    cap(Circle, Mono, MIN_MAX, "O(n)", Solved, &["circle-boundary"]),
    cap(Circle, Mono, MAX_MIN, "O(n)", Solved, &["circle-sliding-window"]),
    cap(Circle, Bi, MIN_MIN, "O(n)", Solved, &["circle-boundary-min"]),
    cap(Circle, Bi, MAX_MAX, "O(n log n)", Solved, &["circle-antipodal"]),
    cap(Circle, Bi, MIN_MAX, "O(n^3)", Solved, &["convex-dp"]),
    cap(Circle, Bi, MAX_MIN, "O(n^3)", Solved, &["convex-dp"]),
    cap(Dc, Bi, MIN_MIN, "O(n)", Solved, &["dc-candidate-scan"]),
    cap(Dc, Bi, MAX_MAX, "O(n)", Solved, &["dc-feasible-range-ends"]),
    cap(
        Dc,
        Bi,
        MIN_MAX,
        "O(n^4 log n)",
        Solved,
        &["dc-small-angle", "dc-orthogonal", "dc-one-sided-search", "dc-run-enumeration"],
    ),
    cap(
        Dc,
        Bi,
        MAX_MIN,
        "O(n) orthogonal, O(n^2) one-sided",
        Conditional("lines orthogonal or one line on one side of x"),
        &["dc-orthogonal", "dc-one-sided-dp"],
    ),
];

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mono => "mono",
            Bi => "bi",
        };
        let status = match self.support {
            Solved => "solved".to_string(),
            Conditional(c) => format!("conditional ({c})"),
            Refused(r) => format!("refused ({r})"),
        };
        write!(f, "{}\t{}\t{}\t{}\t{}\t{}", self.kind.name(), mode, self.variant, self.bound, status, self.algorithms.join(","))
    }
}

pub fn capability(kind: Kind, mode: Mode, variant: Variant) -> Option<&'static Capability> {
    CAPABILITIES.iter().find(|c| c.kind == kind && c.mode == mode && c.variant == variant)
}

/// Solves `inst` for `v`. Refused cells and missing algorithms give
/// `E_UNSUPPORTED`; the oracle answers any cell up to `oracle_cap` points.
pub fn solve(inst: &Instance, v: Variant, strategy: Strategy, oracle_cap: usize) -> Result<SolveOutcome> {
    if strategy == Strategy::Oracle {
        return oracle_solve(inst.geometry(), v, oracle_cap);
    }
    let row = capability(inst.kind(), inst.mode(), v)
        .ok_or_else(|| Error::Unsupported(format!("{} {} is not a valid cell", inst.kind().name(), v)))?;
    if let Refused(reason) = row.support {
        return Err(Error::Unsupported(format!("{} {v}: {reason}", inst.kind().name())));
    }
    let out = match inst {
        Instance::Planar(p) if p.kind() == General => general(p, v, strategy),
        Instance::Planar(p) => convex(p, v, strategy),
        Instance::Circle(c) => {
            let fast = match (c.colors().is_some(), v) {
                (_, MIN_MIN) => Some(minmin_circle(c)),
                (_, MAX_MAX) => Some(maxmax_circle(c)),
                (false, MIN_MAX) => Some(minmax1_circle(c)),
                (false, MAX_MIN) => Some(maxmin1_circle(c)),
                _ => None,
            };
            pick(fast, || dp_solve_convex(c, v), strategy)
        }
        Instance::DoublyCollinear(d) => doubly_collinear(d, v, strategy),
    };
    out.unwrap_or_else(|| {
        Err(Error::Unsupported(format!("no {} algorithm for {} {v}", strategy_name(strategy), inst.kind().name())))
    })
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Auto => "auto",
        Strategy::Dp => "dp",
        Strategy::Oracle => "oracle",
        Strategy::Specialized => "specialized",
    }
}

fn pick<F>(fast: Option<Result<SolveOutcome>>, dp: F, strategy: Strategy) -> Option<Result<SolveOutcome>>
where
    F: FnOnce() -> Result<SolveOutcome>,
{
    match strategy {
        Strategy::Dp => Some(dp()),
        Strategy::Specialized => fast,
        _ => fast.or_else(|| Some(dp())),
    }
}

fn general(p: &PlanarInstance, v: Variant, strategy: Strategy) -> Option<Result<SolveOutcome>> {
    if strategy == Strategy::Dp {
        return None;
    }
    match v {
        MIN_MIN => Some(minmin1_general(p)),
        MAX_MAX => Some(maxmax1_general(p)),
        _ => None,
    }
}

fn convex(p: &PlanarInstance, v: Variant, strategy: Strategy) -> Option<Result<SolveOutcome>> {
    let bi = p.colors().is_some();
    let fast = match (bi, v) {
        (false, MIN_MIN) => Some(minmin1_convex(p)),
        (false, MAX_MAX) => Some(maxmax1_convex(p)),
        (true, MIN_MIN) => Some(minmin2_convex(p)),
        (true, MAX_MAX) => Some(maxmax2_convex(p)),
        _ => None,
    };
    pick(fast, || dp_solve_convex(p, v), strategy)
}

fn doubly_collinear(d: &DcInstance, v: Variant, strategy: Strategy) -> Option<Result<SolveOutcome>> {
    let one_sided = is_one_sided(d);
    let c = d.cos_alpha();
    if strategy == Strategy::Dp {
        return if one_sided {
            Some(onesided_dp(d, v))
        } else {
            None
        };
    }
    let out = match v {
        MIN_MIN => minmin2_dc(d),
        MAX_MAX => maxmax2_dc(d),
        MIN_MAX if c.is_positive() && c * c >= ratio(1, 2) => minmax2_small_angle(d),
        MIN_MAX if c.is_zero() => minmax2_orthogonal(d),
        MIN_MAX if one_sided => onesided_minmax_fast(d),
        MIN_MAX => minmax2_dc(d),
        _ if c.is_zero() => maxmin2_orthogonal(d),
        _ if one_sided && strategy == Strategy::Auto => onesided_dp(d, v),
        _ => {
            return Some(Err(Error::Unsupported(
                "doubly collinear maxmin needs orthogonal lines or a one-sided line".into(),
            )))
        }
    };
    Some(out)
}
