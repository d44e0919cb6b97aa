//! Skeletal triangulations of the annulus `C_{m,n}`.
//!
//! A skeletal triangulation consists of `m + n` bridging arcs, listed in
//! anticlockwise order. Two consecutive arcs bound a triangle and either
//! share their outer endpoint (the inner endpoint advances by one) or share
//! their inner endpoint (the outer endpoint advances by one). The first kind
//! of step is recorded as [`Arrow::Increasing`], the second as
//! [`Arrow::Decreasing`]; the resulting cyclic word is the quiver of the
//! triangulation.

use std::f64::consts::TAU;
use std::fmt::{self, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{FriezeError, Result};
use crate::quiddity::QuidditySequence;
use crate::quiver::{Arrow, NonOrientedCycle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Boundary {
    /// `B_1`, carrying the outer quiddity sequence.
    Outer,
    /// `B_2`, carrying the inner quiddity sequence.
    Inner,
}

impl fmt::Display for Boundary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Boundary::Outer => "B1",
            Boundary::Inner => "B2",
        })
    }
}

/// Arc from outer marked point `outer` to inner marked point `inner`
/// (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BridgingArc {
    pub outer: usize,
    pub inner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationJson", into = "TriangulationJson")]
pub struct SkeletalTriangulation {
    outer_count: usize,
    inner_count: usize,
    arcs: Vec<BridgingArc>,
    inner_offset: usize,
    steps: Vec<Arrow>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    outer: usize,
    inner: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default)]
    inner_offset: usize,
}

impl TryFrom<TriangulationJson> for SkeletalTriangulation {
    type Error = FriezeError;

    fn try_from(raw: TriangulationJson) -> Result<Self> {
        let arcs = raw
            .arcs
            .iter()
            .map(|&[outer, inner]| BridgingArc { outer, inner })
            .collect();
        SkeletalTriangulation::from_parts(raw.outer, raw.inner, arcs, raw.inner_offset)
    }
}

impl From<SkeletalTriangulation> for TriangulationJson {
    fn from(t: SkeletalTriangulation) -> Self {
        TriangulationJson {
            outer: t.outer_count,
            inner: t.inner_count,
            arcs: t.arcs.iter().map(|a| [a.outer, a.inner]).collect(),
            inner_offset: t.inner_offset,
        }
    }
}

fn successor(label: usize, count: usize) -> usize {
    label % count + 1
}

impl SkeletalTriangulation {
    /// Validates a cyclic list of arcs. Consecutive arcs must differ by one
    /// step on exactly one boundary, and going once around must advance each
    /// boundary exactly once.
    pub fn from_parts(
        outer_count: usize,
        inner_count: usize,
        arcs: Vec<BridgingArc>,
        inner_offset: usize,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(FriezeError::InvalidTriangulation(msg));
        if outer_count == 0 || inner_count == 0 {
            return invalid("both boundaries need at least one marked point".into());
        }
        let total = outer_count + inner_count;
        if arcs.len() != total {
            return invalid(format!("expected {total} arcs, got {}", arcs.len()));
        }
        if let Some(a) = arcs.iter().find(|a| {
            !(1..=outer_count).contains(&a.outer) || !(1..=inner_count).contains(&a.inner)
        }) {
            return invalid(format!("arc ({}, {}) has an endpoint out of range", a.outer, a.inner));
        }
        // `None` marks a step that fits both kinds (only possible in C_{1,1}).
        let mut kinds = Vec::with_capacity(total);
        for k in 0..total {
            let (a, b) = (arcs[k], arcs[(k + 1) % total]);
            let increasing = a.outer == b.outer && b.inner == successor(a.inner, inner_count);
            let decreasing = a.inner == b.inner && b.outer == successor(a.outer, outer_count);
            kinds.push(match (increasing, decreasing) {
                (true, false) => Some(Arrow::Increasing),
                (false, true) => Some(Arrow::Decreasing),
                (true, true) => None,
                (false, false) => {
                    return invalid(format!(
                        "arcs {} and {} do not bound a triangle with one boundary segment",
                        k + 1,
                        (k + 1) % total + 1
                    ))
                }
            });
        }
        let fixed_inc = kinds.iter().filter(|&&k| k == Some(Arrow::Increasing)).count();
        let mut need_inc = inner_count.saturating_sub(fixed_inc);
        let mut steps = Vec::with_capacity(total);
        for kind in kinds {
            steps.push(match kind {
                Some(arrow) => arrow,
                None if need_inc > 0 => {
                    need_inc -= 1;
                    Arrow::Increasing
                }
                None => Arrow::Decreasing,
            });
        }
        let count = |arrow| steps.iter().filter(|&&s| s == arrow).count();
        if count(Arrow::Increasing) != inner_count || count(Arrow::Decreasing) != outer_count {
            return invalid("the arcs wind around the annulus more than once".into());
        }
        Ok(SkeletalTriangulation {
            outer_count,
            inner_count,
            arcs,
            inner_offset: inner_offset % inner_count,
            steps,
        })
    }

    pub fn outer_count(&self) -> usize {
        self.outer_count
    }

    pub fn inner_count(&self) -> usize {
        self.inner_count
    }

    pub fn arcs(&self) -> &[BridgingArc] {
        &self.arcs
    }

    pub fn inner_offset(&self) -> usize {
        self.inner_offset
    }

    /// Same triangulation with every inner label shifted by `shift`.
    pub fn with_inner_offset(&self, shift: usize) -> Self {
        let n = self.inner_count;
        let arcs = self
            .arcs
            .iter()
            .map(|a| BridgingArc {
                outer: a.outer,
                inner: (a.inner - 1 + shift) % n + 1,
            })
            .collect();
        SkeletalTriangulation {
            arcs,
            inner_offset: (self.inner_offset + shift) % n,
            ..self.clone()
        }
    }

    fn degrees(&self) -> (Vec<u64>, Vec<u64>) {
        let mut outer = vec![0u64; self.outer_count];
        let mut inner = vec![0u64; self.inner_count];
        for a in &self.arcs {
            outer[a.outer - 1] += 1;
            inner[a.inner - 1] += 1;
        }
        (outer, inner)
    }

    /// Outer and inner quiddity sequences: at every marked point the number of
    /// incident triangles, which is its degree plus one. The inner sequence is
    /// read from the point labelled `1 + inner_offset`.
    pub fn quiddity_pair(&self) -> (QuidditySequence, QuidditySequence) {
        let (outer, inner) = self.degrees();
        let plus_one = |d: Vec<u64>| d.into_iter().map(|x| x + 1).collect::<Vec<_>>();
        let inner = crate::cyclic::rotate(&plus_one(inner), self.inner_offset);
        (
            QuidditySequence::new(plus_one(outer)).expect("degrees are positive"),
            QuidditySequence::new(inner).expect("degrees are positive"),
        )
    }

    /// Triangle incidences counted directly from the triangles between
    /// consecutive arcs, as (outer, inner) per marked point.
    pub fn triangle_counts(&self) -> (Vec<u64>, Vec<u64>) {
        let mut outer = vec![0u64; self.outer_count];
        let mut inner = vec![0u64; self.inner_count];
        let total = self.arcs.len();
        for (k, step) in self.steps.iter().enumerate() {
            let (a, b) = (self.arcs[k], self.arcs[(k + 1) % total]);
            match step {
                Arrow::Increasing => {
                    outer[a.outer - 1] += 1;
                    inner[a.inner - 1] += 1;
                    inner[b.inner - 1] += 1;
                }
                Arrow::Decreasing => {
                    inner[a.inner - 1] += 1;
                    outer[a.outer - 1] += 1;
                    outer[b.outer - 1] += 1;
                }
            }
        }
        (outer, inner)
    }

    /// The quiver `Q_T`: one vertex per arc, arrows between consecutive arcs.
    pub fn quiver(&self) -> NonOrientedCycle {
        NonOrientedCycle::new(self.steps.clone()).expect("both boundaries have marked points")
    }

    /// One line per arc in cyclic order, inner labels barred.
    pub fn render_net(&self) -> String {
        let mut out = String::new();
        for a in &self.arcs {
            let _ = writeln!(out, "(outer {} \u{2014} inner {}\u{0304})", a.outer, a.inner);
        }
        out
    }

    /// SVG drawing of the annulus: outer circle, inner circle, the marked
    /// points and the arcs. Arcs are drawn as spirals between lifted angles,
    /// which keeps them pairwise disjoint.
    pub fn render_svg(&self) -> String {
        const SIZE: f64 = 480.0;
        const CENTER: f64 = SIZE / 2.0;
        const OUTER_R: f64 = 200.0;
        const INNER_R: f64 = 80.0;
        const SAMPLES: usize = 24;

        let (m, n) = (self.outer_count as f64, self.inner_count as f64);
        let point = |r: f64, theta: f64| (CENTER + r * theta.cos(), CENTER - r * theta.sin());
        let outer_angle = |o: usize| TAU * (o - 1) as f64 / m;
        let inner_angle = |i: usize| TAU * (i - 1) as f64 / n + TAU / (4.0 * n);

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        for r in [OUTER_R, INNER_R] {
            let _ = writeln!(
                svg,
                r#"  <circle class="boundary" cx="{CENTER:.2}" cy="{CENTER:.2}" r="{r:.2}" fill="none" stroke="black" stroke-width="2"/>"#
            );
        }

        let first = self.arcs[0];
        let mut lift_outer = outer_angle(first.outer);
        let mut lift_inner = inner_angle(first.inner);
        while lift_inner - lift_outer > TAU / 2.0 {
            lift_inner -= TAU;
        }
        while lift_outer - lift_inner > TAU / 2.0 {
            lift_inner += TAU;
        }
        for (k, arc) in self.arcs.iter().enumerate() {
            let mut d = String::new();
            for s in 0..=SAMPLES {
                let t = s as f64 / SAMPLES as f64;
                let r = OUTER_R + (INNER_R - OUTER_R) * t;
                let theta = lift_outer + (lift_inner - lift_outer) * t;
                let (x, y) = point(r, theta);
                let _ = write!(d, "{}{x:.2},{y:.2}", if s == 0 { "M" } else { " L" });
            }
            let _ = writeln!(
                svg,
                r##"  <path class="arc" data-outer="{}" data-inner="{}" d="{d}" fill="none" stroke="#1f5fa8" stroke-width="1.5"/>"##,
                arc.outer, arc.inner
            );
            match self.steps[k] {
                Arrow::Increasing => lift_inner += TAU / n,
                Arrow::Decreasing => lift_outer += TAU / m,
            }
        }

        for o in 1..=self.outer_count {
            let (x, y) = point(OUTER_R, outer_angle(o));
            let _ = writeln!(
                svg,
                r#"  <circle class="point" data-boundary="outer" data-label="{o}" cx="{x:.2}" cy="{y:.2}" r="5"/>"#
            );
        }
        for i in 1..=self.inner_count {
            let (x, y) = point(INNER_R, inner_angle(i));
            let _ = writeln!(
                svg,
                r#"  <circle class="point" data-boundary="inner" data-label="{i}" cx="{x:.2}" cy="{y:.2}" r="5"/>"#
            );
        }
        svg.push_str("</svg>\n");
        svg
    }

    pub fn write_svg(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render_svg()).map_err(FriezeError::from)
    }
}

/// The skeletal triangulation whose outer boundary reads `q`.
///
/// At outer point `i` we draw `a_i - 1` arcs from left to right. The first
/// arc continues the last arc of point `i-1`; every further arc ends at a new
/// inner point. At the last point with `a_i > 2` the final arc closes up at
/// inner point 1, so that all remaining points with `a_i = 2` use it too.
pub fn triangulation_from_quiddity(q: &QuidditySequence) -> Result<SkeletalTriangulation> {
    if !q.is_skeletal() {
        return Err(FriezeError::NotSkeletal);
    }
    let entries = q.entries();
    let last_big = entries
        .iter()
        .rposition(|&a| a > 2)
        .expect("skeletal sequences have an entry above 2");
    let mut arcs = Vec::new();
    let mut points = 1usize;
    let mut current = 1usize;
    for (i, &a) in entries.iter().enumerate() {
        let outer = i + 1;
        arcs.push(BridgingArc { outer, inner: current });
        let extra = (a - 2) as usize;
        if i != last_big {
            for _ in 0..extra {
                points += 1;
                current = points;
                arcs.push(BridgingArc { outer, inner: current });
            }
        } else {
            for _ in 1..extra {
                points += 1;
                arcs.push(BridgingArc { outer, inner: points });
            }
            current = 1;
            arcs.push(BridgingArc { outer, inner: current });
        }
    }
    debug_assert_eq!(points as u64, entries.iter().map(|&a| a - 2).sum::<u64>());
    SkeletalTriangulation::from_parts(entries.len(), points, arcs, 0)
}

/// A pair of boundary quiddity sequences, possibly decorated with ears.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuiddityPair {
    pub outer: QuidditySequence,
    pub inner: QuidditySequence,
}

impl QuiddityPair {
    pub fn new(outer: QuidditySequence, inner: QuidditySequence) -> Self {
        QuiddityPair { outer, inner }
    }

    pub fn of(t: &SkeletalTriangulation) -> Self {
        let (outer, inner) = t.quiddity_pair();
        QuiddityPair { outer, inner }
    }

    fn side(&self, boundary: Boundary) -> &QuidditySequence {
        match boundary {
            Boundary::Outer => &self.outer,
            Boundary::Inner => &self.inner,
        }
    }

    fn with_side(&self, boundary: Boundary, seq: QuidditySequence) -> Self {
        let mut out = self.clone();
        match boundary {
            Boundary::Outer => out.outer = seq,
            Boundary::Inner => out.inner = seq,
        }
        out
    }

    /// Glues an ear onto `boundary` after entry `gap`.
    pub fn attach_ear(&self, boundary: Boundary, gap: usize) -> Self {
        self.with_side(boundary, self.side(boundary).reverse_reduce(gap))
    }

    /// Removes the ear at the entry `index` of `boundary`, which must be a
    /// reducible 1.
    pub fn detach_ear(&self, boundary: Boundary, index: usize) -> Result<Self> {
        Ok(self.with_side(boundary, self.side(boundary).reduce_once(index)?))
    }

    /// Both sequences reduced to skeletal form.
    pub fn skeleton(&self) -> Result<Self> {
        Ok(QuiddityPair {
            outer: self.outer.reduce_to_skeletal()?,
            inner: self.inner.reduce_to_skeletal()?,
        })
    }

    pub fn cyclically_equal(&self, other: &Self) -> bool {
        self.outer.cyclically_equal(&other.outer) && self.inner.cyclically_equal(&other.inner)
    }
}

/// Ears glued one after another onto a skeletal pair.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EarScript {
    pub insertions: Vec<(Boundary, usize)>,
}

impl EarScript {
    pub fn apply(&self, pair: &QuiddityPair) -> QuiddityPair {
        self.insertions
            .iter()
            .fold(pair.clone(), |acc, &(boundary, gap)| acc.attach_ear(boundary, gap))
    }
}
