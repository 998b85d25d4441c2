use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{ClassicalInvariants, Sign, ValidationReport};

/// One column of a front diagram. Positions index strand slots from the bottom
/// (`0` is the lowest strand present at that column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawEvent", into = "RawEvent")]
pub enum FrontEvent {
    /// Two new strands are born at slots `p` and `p + 1`.
    LeftCusp(usize),
    /// Strands at slots `p` and `p + 1` end by joining.
    RightCusp(usize),
    /// Strands at slots `p` and `p + 1` cross.
    Crossing(usize),
}

#[derive(Serialize, Deserialize)]
struct RawEvent {
    kind: String,
    pos: usize,
}

impl TryFrom<RawEvent> for FrontEvent {
    type Error = String;
    fn try_from(r: RawEvent) -> Result<Self, String> {
        match r.kind.as_str() {
            "L" => Ok(FrontEvent::LeftCusp(r.pos)),
            "R" => Ok(FrontEvent::RightCusp(r.pos)),
            "X" => Ok(FrontEvent::Crossing(r.pos)),
            k => Err(format!("unknown front event kind `{k}` (expected L, R or X)")),
        }
    }
}

impl From<FrontEvent> for RawEvent {
    fn from(e: FrontEvent) -> Self {
        let (kind, pos) = match e {
            FrontEvent::LeftCusp(p) => ("L", p),
            FrontEvent::RightCusp(p) => ("R", p),
            FrontEvent::Crossing(p) => ("X", p),
        };
        RawEvent { kind: kind.to_string(), pos }
    }
}

impl FrontEvent {
    pub fn pos(self) -> usize {
        match self {
            FrontEvent::LeftCusp(p) | FrontEvent::RightCusp(p) | FrontEvent::Crossing(p) => p,
        }
    }
}

/// A Legendrian front read left to right as a sequence of events.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontWord {
    events: Vec<FrontEvent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    fn flip(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }

    fn dx(self) -> i64 {
        match self {
            Direction::Right => 1,
            Direction::Left => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspClass {
    Up,
    Down,
}

/// Strand bookkeeping: a strand is an x-monotone arc from a left cusp to a right cusp.
#[derive(Clone, Debug)]
pub(crate) struct Trace {
    /// (left cusp event, right cusp event) per strand.
    pub ends: Vec<(usize, usize)>,
    /// (event, lower strand, upper strand) per cusp, left and right alike.
    pub cusps: Vec<(usize, usize, usize)>,
    /// (event, strand rising through the crossing, strand falling through it).
    pub crossings: Vec<(usize, usize, usize)>,
}

impl FrontWord {
    pub fn new(events: Vec<FrontEvent>) -> Self {
        FrontWord { events }
    }

    /// `[LeftCusp(0), RightCusp(0)]`, the Legendrian unknot with `tb = -1`.
    pub fn unknot() -> Self {
        FrontWord::new(vec![FrontEvent::LeftCusp(0), FrontEvent::RightCusp(0)])
    }

    /// Right-handed trefoil with `tb = 1`, `rot = 0`: two nested left cusps, three
    /// crossings between the two upper strands, two right cusps.
    pub fn trefoil() -> Self {
        use FrontEvent::*;
        FrontWord::new(vec![LeftCusp(0), LeftCusp(1), Crossing(2), Crossing(2), Crossing(2), RightCusp(1), RightCusp(0)])
    }

    pub fn events(&self) -> &[FrontEvent] {
        &self.events
    }

    pub fn cusp_count(&self) -> usize {
        self.events.iter().filter(|e| !matches!(e, FrontEvent::Crossing(_))).count()
    }

    pub(crate) fn trace(&self) -> std::result::Result<Trace, String> {
        let mut slots: Vec<usize> = Vec::new();
        let mut ends: Vec<(usize, usize)> = Vec::new();
        let mut cusps = Vec::new();
        let mut crossings = Vec::new();
        for (k, &e) in self.events.iter().enumerate() {
            let n = slots.len();
            match e {
                FrontEvent::LeftCusp(p) => {
                    if p > n {
                        return Err(format!("event {k}: left cusp at {p} with only {n} strands present"));
                    }
                    let (lo, hi) = (ends.len(), ends.len() + 1);
                    ends.push((k, usize::MAX));
                    ends.push((k, usize::MAX));
                    slots.splice(p..p, [lo, hi]);
                    cusps.push((k, lo, hi));
                }
                FrontEvent::RightCusp(p) => {
                    if p + 1 >= n {
                        return Err(format!("event {k}: right cusp at {p} with only {n} strands present"));
                    }
                    let (lo, hi) = (slots[p], slots[p + 1]);
                    ends[lo].1 = k;
                    ends[hi].1 = k;
                    slots.drain(p..p + 2);
                    cusps.push((k, lo, hi));
                }
                FrontEvent::Crossing(p) => {
                    if p + 1 >= n {
                        return Err(format!("event {k}: crossing at {p} with only {n} strands present"));
                    }
                    crossings.push((k, slots[p], slots[p + 1]));
                    slots.swap(p, p + 1);
                }
            }
        }
        if !slots.is_empty() {
            return Err(format!("{} strands remain open at the right end", slots.len()));
        }
        Ok(Trace { ends, cusps, crossings })
    }

    pub fn validate(&self) -> ValidationReport {
        if self.events.is_empty() {
            return ValidationReport {
                valid: false,
                problems: vec!["empty front has no component".into()],
                ..Default::default()
            };
        }
        match self.trace() {
            Err(p) => ValidationReport { valid: false, problems: vec![p], ..Default::default() },
            Ok(t) => ValidationReport {
                valid: true,
                problems: Vec::new(),
                components: Some(count_components(&t)),
                cycles: Vec::new(),
            },
        }
    }

    /// Fails unless the front is valid with exactly one component.
    pub fn require_knot(&self) -> Result<()> {
        self.knot_trace().map(|_| ())
    }

    pub(crate) fn knot_trace(&self) -> Result<Trace> {
        let report = self.validate();
        if !report.valid {
            return Err(Error::InvalidFront(report.problems.join("; ")));
        }
        match report.components {
            Some(1) => Ok(self.trace().expect("validated")),
            Some(c) => Err(Error::MultiComponent(c)),
            None => unreachable!(),
        }
    }

    /// Orients the knot so that the upper branch of the first left cusp runs to the right.
    pub fn orient(&self) -> Result<OrientedFront> {
        let trace = self.knot_trace()?;
        let m = trace.ends.len();
        let mut dirs = vec![None; m];
        let (_, lo0, hi0) = trace.cusps[0];
        // partner across a cusp, keyed by (strand, side)
        let mut left_partner = vec![0; m];
        let mut right_partner = vec![0; m];
        for &(k, lo, hi) in &trace.cusps {
            let table = if matches!(self.events[k], FrontEvent::LeftCusp(_)) { &mut left_partner } else { &mut right_partner };
            table[lo] = hi;
            table[hi] = lo;
        }
        let mut s = hi0;
        let mut d = Direction::Right;
        while dirs[s].is_none() {
            dirs[s] = Some(d);
            s = match d {
                Direction::Right => right_partner[s],
                Direction::Left => left_partner[s],
            };
            d = d.flip();
        }
        debug_assert_eq!(dirs[lo0], Some(Direction::Left));
        let directions: Vec<Direction> = dirs.into_iter().map(|d| d.expect("one component")).collect();
        Ok(OrientedFront::from_directions(self.clone(), &trace, directions))
    }

    pub fn tb(&self) -> Result<i64> {
        Ok(self.orient()?.tb())
    }

    pub fn rot(&self) -> Result<i64> {
        Ok(self.orient()?.rot())
    }

    pub fn invariants(&self) -> Result<ClassicalInvariants> {
        let o = self.orient()?;
        Ok(ClassicalInvariants { tb: Some(o.tb()), rot: Some(o.rot()), sl: None, components: 1 })
    }

    /// Adds one zigzag to the lower branch of the first left cusp, right after
    /// that cusp. `tb` drops by one and `rot` moves by `+1` or `-1` with `sign`.
    pub fn stabilize(&self, sign: Sign) -> Result<FrontWord> {
        let o = self.orient()?;
        let q = self.events[0].pos();
        // The lower branch of the first cusp runs left in the canonical orientation.
        let branch = o.directions[o.trace_first_lower];
        // Zigzag above the strand: [L(q+1), R(q)]; below it: [L(q), R(q+1)].
        // A right-running strand gets down cusps from the lower zigzag, a
        // left-running one from the upper zigzag.
        let want_down = sign == Sign::Positive;
        let lower_zigzag = (branch == Direction::Right) == want_down;
        let insert = if lower_zigzag {
            [FrontEvent::LeftCusp(q), FrontEvent::RightCusp(q + 1)]
        } else {
            [FrontEvent::LeftCusp(q + 1), FrontEvent::RightCusp(q)]
        };
        let mut events = self.events.clone();
        events.splice(1..1, insert);
        Ok(FrontWord::new(events))
    }
}

fn count_components(t: &Trace) -> usize {
    let mut parent: Vec<usize> = (0..t.ends.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = t.ends.len();
    for &(_, a, b) in &t.cusps {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// A one-component front together with an orientation of every strand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedFront {
    front: FrontWord,
    directions: Vec<Direction>,
    cusps: Vec<(usize, CuspClass)>,
    crossings: Vec<(usize, i64)>,
    trace_first_lower: usize,
}

impl OrientedFront {
    fn from_directions(front: FrontWord, trace: &Trace, directions: Vec<Direction>) -> Self {
        let cusps = trace
            .cusps
            .iter()
            .map(|&(k, _lo, hi)| {
                let left = matches!(front.events[k], FrontEvent::LeftCusp(_));
                // Left cusp: leaving along the upper branch means moving up.
                // Right cusp: arriving along the upper branch means moving down.
                let upper_runs_right = directions[hi] == Direction::Right;
                let class = match (left, upper_runs_right) {
                    (true, true) | (false, false) => CuspClass::Up,
                    (true, false) | (false, true) => CuspClass::Down,
                };
                (k, class)
            })
            .collect();
        let crossings = trace
            .crossings
            .iter()
            .map(|&(k, rising, falling)| (k, crossing_sign(directions[falling], directions[rising])))
            .collect();
        let trace_first_lower = trace.cusps[0].1;
        OrientedFront { front, directions, cusps, crossings, trace_first_lower }
    }

    pub fn front(&self) -> &FrontWord {
        &self.front
    }

    /// Direction of each strand, strands numbered in order of birth.
    pub fn directions(&self) -> &[Direction] {
        &self.directions
    }

    /// `(event index, class)` for every cusp in diagram order.
    pub fn cusps(&self) -> &[(usize, CuspClass)] {
        &self.cusps
    }

    /// `(event index, ±1)` for every crossing in diagram order.
    pub fn crossings(&self) -> &[(usize, i64)] {
        &self.crossings
    }

    pub fn up_cusps(&self) -> usize {
        self.cusps.iter().filter(|c| c.1 == CuspClass::Up).count()
    }

    pub fn down_cusps(&self) -> usize {
        self.cusps.iter().filter(|c| c.1 == CuspClass::Down).count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.1).sum()
    }

    pub fn tb(&self) -> i64 {
        self.writhe() - (self.cusps.len() / 2) as i64
    }

    pub fn rot(&self) -> i64 {
        (self.down_cusps() as i64 - self.up_cusps() as i64) / 2
    }

    /// The same front with the opposite orientation.
    pub fn reversed(&self) -> OrientedFront {
        let trace = self.front.trace().expect("oriented fronts are valid");
        let dirs = self.directions.iter().map(|d| d.flip()).collect();
        OrientedFront::from_directions(self.front.clone(), &trace, dirs)
    }
}

/// Right-hand rule with the falling strand (smaller slope) in front. Locally
/// the rising strand has slope `+1` and the falling one `-1`.
fn crossing_sign(over: Direction, under: Direction) -> i64 {
    let o = (over.dx(), -over.dx());
    let u = (under.dx(), under.dx());
    (o.0 * u.1 - o.1 * u.0).signum()
}
