// Independent front walker. Every column between two events holds a stack of
// strand segments; the walk moves segment to segment and records what it sees.

#![allow(dead_code)]

use engeltori::knot::{FrontEvent, FrontWord};

#[derive(Debug, PartialEq, Eq)]
pub struct Walk {
    pub tb: i64,
    pub rot: i64,
    pub writhe: i64,
    pub up: usize,
    pub down: usize,
}

/// Returns `None` unless the front closes up into a single component.
/// Orientation: leaving the first left cusp along its upper branch to the right.
pub fn walk(front: &FrontWord) -> Option<Walk> {
    let ev = front.events();
    if ev.is_empty() {
        return None;
    }
    // sizes[c] = strands in column c; column c sits left of event c
    let mut sizes = vec![0usize];
    for e in ev {
        let k = *sizes.last().unwrap();
        let next = match *e {
            FrontEvent::LeftCusp(p) if p <= k => k + 2,
            FrontEvent::RightCusp(p) if p + 1 < k => k - 2,
            FrontEvent::Crossing(p) if p + 1 < k => k,
            _ => return None,
        };
        sizes.push(next);
    }
    if *sizes.last().unwrap() != 0 {
        return None;
    }
    let total: usize = sizes.iter().sum();
    let FrontEvent::LeftCusp(p0) = ev[0] else { return None };

    // (column, slot, moving right)
    let start = (1usize, p0 + 1, true);
    let (mut col, mut slot, mut right) = start;
    let mut seen = 0usize;
    let (mut up, mut down) = (0usize, 0usize);
    // per crossing: direction of the rising strand, direction of the falling strand
    let mut rising = vec![None; ev.len()];
    let mut falling = vec![None; ev.len()];
    loop {
        seen += 1;
        if seen > total {
            return None;
        }
        if right {
            let e = col;
            match ev[e] {
                FrontEvent::LeftCusp(p) => {
                    slot = if slot < p { slot } else { slot + 2 };
                    col += 1;
                }
                FrontEvent::RightCusp(p) if slot == p || slot == p + 1 => {
                    let other = if slot == p { p + 1 } else { p };
                    if other > slot {
                        up += 1;
                    } else {
                        down += 1;
                    }
                    slot = other;
                    right = false;
                }
                FrontEvent::RightCusp(p) => {
                    slot = if slot < p { slot } else { slot - 2 };
                    col += 1;
                }
                FrontEvent::Crossing(p) => {
                    if slot == p {
                        rising[e] = Some(true);
                        slot = p + 1;
                    } else if slot == p + 1 {
                        falling[e] = Some(true);
                        slot = p;
                    }
                    col += 1;
                }
            }
        } else {
            let e = col - 1;
            match ev[e] {
                FrontEvent::LeftCusp(p) if slot == p || slot == p + 1 => {
                    let other = if slot == p { p + 1 } else { p };
                    if other > slot {
                        up += 1;
                    } else {
                        down += 1;
                    }
                    slot = other;
                    right = true;
                }
                FrontEvent::LeftCusp(p) => {
                    slot = if slot < p { slot } else { slot - 2 };
                    col -= 1;
                }
                FrontEvent::RightCusp(p) => {
                    slot = if slot < p { slot } else { slot + 2 };
                    col -= 1;
                }
                FrontEvent::Crossing(p) => {
                    if slot == p + 1 {
                        rising[e] = Some(false);
                        slot = p;
                    } else if slot == p {
                        falling[e] = Some(false);
                        slot = p + 1;
                    }
                    col -= 1;
                }
            }
        }
        if (col, slot, right) == start {
            break;
        }
    }
    if seen != total {
        return None;
    }
    let mut writhe = 0i64;
    for (r, f) in rising.iter().zip(&falling) {
        if let (Some(r), Some(f)) = (r, f) {
            writhe += if r == f { 1 } else { -1 };
        }
    }
    let cusps = (up + down) as i64;
    Some(Walk { tb: writhe - cusps / 2, rot: (down as i64 - up as i64) / 2, writhe, up, down })
}
