//! SVG rendering of diagrams.
//!
//! Layout is a barycentric relaxation of the rotation system: every arc is
//! subdivided once, the largest face is pinned to a convex polygon, and the
//! remaining points settle at neighbour averages. Arcs are drawn as
//! quadratic curves through their midpoints; at each crossing the
//! under-strand is interrupted by trimming its two ends short. Aesthetics
//! are best-effort; incidence is what the tests pin down.

use std::collections::BTreeMap;

use crate::diagram::{ArcId, Dart, Diagram, NodeKey};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone)]
pub struct RenderArc {
    pub arc: ArcId,
    pub from: NodeKey,
    pub to: NodeKey,
    pub mid: Point,
    /// True when the corresponding end sits at a crossing as the
    /// under-strand and is drawn with a gap.
    pub gap_at_from: bool,
    pub gap_at_to: bool,
}

#[derive(Debug, Clone)]
pub struct RenderModel {
    pub positions: BTreeMap<NodeKey, Point>,
    pub arcs: Vec<RenderArc>,
}

/// Compute a layout for a valid diagram.
pub fn layout(d: &Diagram) -> RenderModel {
    let seats = d.seats();
    let faces = d.faces();

    // Subdivided graph: diagram nodes plus one point per arc.
    #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
    enum P {
        Node(NodeKey),
        Mid(ArcId),
    }
    let mut neighbours: BTreeMap<P, Vec<P>> = BTreeMap::new();
    let mut nodes: Vec<NodeKey> = d.vertices().keys().map(|&v| NodeKey::Vertex(v)).collect();
    nodes.extend(d.crossings().keys().map(|&x| NodeKey::Crossing(x)));
    for &n in &nodes {
        neighbours.entry(P::Node(n)).or_default();
    }
    for (&dart, seat) in &seats {
        neighbours
            .entry(P::Node(seat.node))
            .or_default()
            .push(P::Mid(dart.arc));
        neighbours
            .entry(P::Mid(dart.arc))
            .or_default()
            .push(P::Node(seat.node));
    }

    // Pin the largest face on a circle; walk alternates arc midpoints and
    // the nodes between them.
    let mut pinned: BTreeMap<P, Point> = BTreeMap::new();
    if let Some(outer) = faces
        .iter()
        .enumerate()
        .max_by_key(|(i, f)| (f.walk.len(), usize::MAX - i))
        .map(|(_, f)| f)
    {
        let ring: Vec<P> = outer
            .walk
            .iter()
            .flat_map(|&dart| [P::Mid(dart.arc), P::Node(seats[&dart].node)])
            .collect();
        let k = ring.len().max(1);
        for (i, &p) in ring.iter().enumerate() {
            let theta = std::f64::consts::TAU * i as f64 / k as f64;
            pinned.entry(p).or_insert(Point {
                x: theta.cos(),
                y: theta.sin(),
            });
        }
    }

    let mut pos: BTreeMap<P, Point> = BTreeMap::new();
    for (i, (&p, _)) in neighbours.iter().enumerate() {
        let theta = 2.399963 * i as f64; // golden-angle scatter start
        pos.insert(
            p,
            *pinned.get(&p).unwrap_or(&Point {
                x: 0.1 * theta.cos(),
                y: 0.1 * theta.sin(),
            }),
        );
    }
    for _ in 0..300 {
        for (&p, nbrs) in &neighbours {
            if pinned.contains_key(&p) || nbrs.is_empty() {
                continue;
            }
            let (mut sx, mut sy) = (0.0, 0.0);
            for q in nbrs {
                let pt = pos[q];
                sx += pt.x;
                sy += pt.y;
            }
            pos.insert(
                p,
                Point {
                    x: sx / nbrs.len() as f64,
                    y: sy / nbrs.len() as f64,
                },
            );
        }
    }

    let mut positions = BTreeMap::new();
    for &n in &nodes {
        positions.insert(n, pos[&P::Node(n)]);
    }
    let mut arcs = Vec::new();
    for arc in d.arc_ids() {
        let s0 = seats[&Dart::new(arc, 0)];
        let s1 = seats[&Dart::new(arc, 1)];
        let gap = |seat: &crate::diagram::Seat| -> bool {
            match seat.node {
                NodeKey::Vertex(_) => false,
                NodeKey::Crossing(x) => !d.crossings()[&x].slot_is_over(seat.slot),
            }
        };
        arcs.push(RenderArc {
            arc,
            from: s0.node,
            to: s1.node,
            mid: pos[&P::Mid(arc)],
            gap_at_from: gap(&s0),
            gap_at_to: gap(&s1),
        });
    }
    RenderModel { positions, arcs }
}

fn lerp(a: Point, b: Point, t: f64) -> Point {
    Point {
        x: a.x + (b.x - a.x) * t,
        y: a.y + (b.y - a.y) * t,
    }
}

/// Serialize a model as an SVG 1.1 document.
pub fn svg(model: &RenderModel) -> String {
    let size = 420.0;
    let margin = 30.0;
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    let mut extend = |p: &Point| {
        lo_x = lo_x.min(p.x);
        lo_y = lo_y.min(p.y);
        hi_x = hi_x.max(p.x);
        hi_y = hi_y.max(p.y);
    };
    for p in model.positions.values() {
        extend(p);
    }
    for a in &model.arcs {
        extend(&a.mid);
    }
    if model.positions.is_empty() {
        extend(&Point { x: 0.0, y: 0.0 });
    }
    let span = ((hi_x - lo_x).max(hi_y - lo_y)).max(1e-9);
    let scale = (size - 2.0 * margin) / span;
    let tx = |p: Point| -> (f64, f64) {
        (
            margin + (p.x - lo_x) * scale,
            margin + (p.y - lo_y) * scale,
        )
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    out.push_str("<g fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\">\n");
    for a in &model.arcs {
        let p0 = model.positions[&a.from];
        let p1 = model.positions[&a.to];
        // Trim under-strand ends toward the midpoint.
        let start = if a.gap_at_from { lerp(p0, a.mid, 0.3) } else { p0 };
        let end = if a.gap_at_to { lerp(p1, a.mid, 0.3) } else { p1 };
        let (x0, y0) = tx(start);
        let (cx, cy) = tx(a.mid);
        let (x1, y1) = tx(end);
        out.push_str(&format!(
            "<path d=\"M {x0:.2} {y0:.2} Q {cx:.2} {cy:.2} {x1:.2} {y1:.2}\"/>\n"
        ));
    }
    out.push_str("</g>\n<g fill=\"black\">\n");
    for (node, p) in &model.positions {
        if let NodeKey::Vertex(_) = node {
            let (x, y) = tx(*p);
            out.push_str(&format!("<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\"/>\n"));
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Render a diagram straight to SVG text.
pub fn render_svg(d: &Diagram) -> String {
    svg(&layout(d))
}
