//! SVG drawing of a front: one cubic arc per strand per event, cusps drawn
//! with horizontal tangents on both branches.

use std::fmt::Write;

use engeltori::knot::{FrontEvent, FrontWord};
use engeltori::{Error, Result};

const STEP: f64 = 60.0;
const GAP: f64 = 40.0;
const MARGIN: f64 = 30.0;

pub struct Drawing {
    pub svg: String,
    pub paths: usize,
    pub width: f64,
    pub height: f64,
}

pub fn front_svg(front: &FrontWord) -> Result<Drawing> {
    let report = front.validate();
    if !report.valid {
        return Err(Error::InvalidFront(report.problems.join("; ")));
    }
    let events = front.events();
    let mut sizes = vec![0usize];
    for e in events {
        let k = *sizes.last().expect("nonempty");
        sizes.push(match e {
            FrontEvent::LeftCusp(_) => k + 2,
            FrontEvent::RightCusp(_) => k - 2,
            FrontEvent::Crossing(_) => k,
        });
    }
    let tallest = sizes.iter().copied().max().unwrap_or(0).max(2);
    let width = 2.0 * MARGIN + STEP * events.len() as f64;
    let height = 2.0 * MARGIN + GAP * (tallest - 1) as f64;
    let x = |col: usize| MARGIN + STEP * col as f64;
    // slot 0 at the bottom
    let y = |slot: usize| height - MARGIN - GAP * slot as f64;

    let mut arcs: Vec<String> = Vec::new();
    let through = |x0: f64, y0: f64, x1: f64, y1: f64| {
        let mid = (x0 + x1) / 2.0;
        format!("M {x0:.1} {y0:.1} C {mid:.1} {y0:.1} {mid:.1} {y1:.1} {x1:.1} {y1:.1}")
    };
    // strands displaced by a cusp change height on the side away from the tip
    let shifted = |x0: f64, y0: f64, x1: f64, y1: f64, early: bool| {
        let (a, b) = if early { (x0, x0 + 0.4 * STEP) } else { (x1 - 0.4 * STEP, x1) };
        let mid = (a + b) / 2.0;
        format!("M {x0:.1} {y0:.1} L {a:.1} {y0:.1} C {mid:.1} {y0:.1} {mid:.1} {y1:.1} {b:.1} {y1:.1} L {x1:.1} {y1:.1}")
    };
    // branch leaving a cusp tip horizontally and arriving horizontally at `(x1, y1)`
    let branch = |tx: f64, ty: f64, x1: f64, y1: f64| {
        let c1 = tx + (x1 - tx) * 0.6;
        let c2 = tx + (x1 - tx) * 0.3;
        format!("M {tx:.1} {ty:.1} C {c1:.1} {ty:.1} {c2:.1} {y1:.1} {x1:.1} {y1:.1}")
    };

    for (e, ev) in events.iter().enumerate() {
        let (x0, x1) = (x(e), x(e + 1));
        let k = sizes[e];
        match *ev {
            FrontEvent::LeftCusp(p) => {
                for s in 0..k {
                    let t = if s < p { s } else { s + 2 };
                    arcs.push(shifted(x0, y(s), x1, y(t), true));
                }
                let (tx, ty) = (x0 + 0.5 * STEP, (y(p) + y(p + 1)) / 2.0);
                arcs.push(branch(tx, ty, x1, y(p)));
                arcs.push(branch(tx, ty, x1, y(p + 1)));
            }
            FrontEvent::RightCusp(p) => {
                for s in (0..k).filter(|&s| s != p && s != p + 1) {
                    let t = if s < p { s } else { s - 2 };
                    arcs.push(shifted(x0, y(s), x1, y(t), false));
                }
                let (tx, ty) = (x1 - 0.5 * STEP, (y(p) + y(p + 1)) / 2.0);
                arcs.push(branch(tx, ty, x0, y(p)));
                arcs.push(branch(tx, ty, x0, y(p + 1)));
            }
            FrontEvent::Crossing(p) => {
                for s in 0..k {
                    let t = if s == p {
                        p + 1
                    } else if s == p + 1 {
                        p
                    } else {
                        s
                    };
                    arcs.push(through(x0, y(s), x1, y(t)));
                }
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(svg, r##"<g fill="none" stroke="#222" stroke-width="2" stroke-linecap="round">"##);
    for d in &arcs {
        let _ = writeln!(svg, r#"<path d="{d}"/>"#);
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(Drawing { svg, paths: arcs.len(), width, height })
}
