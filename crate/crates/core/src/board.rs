//! Boards: simplicial triangulations of a 2-disk whose boundary cycle is cut
//! into labelled sides.
//!
//! A [`Board`] is built without any topological checks so that broken
//! complexes can be represented; [`Board::validate`] reports every violated
//! disk or side condition.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type VertexId = usize;

/// Unordered edge, always stored with the smaller id first.
pub type Edge = (VertexId, VertexId);

pub(crate) fn edge(a: VertexId, b: VertexId) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GameKind {
    Hex,
    Y,
}

impl GameKind {
    /// Side labels in the required cyclic order.
    pub fn labels(self) -> &'static [SideLabel] {
        match self {
            GameKind::Hex => &[SideLabel::R1, SideLabel::B1, SideLabel::R2, SideLabel::B2],
            GameKind::Y => &[SideLabel::L1, SideLabel::L2, SideLabel::L3],
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameKind::Hex => f.write_str("hex"),
            GameKind::Y => f.write_str("y"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideLabel {
    R1,
    B1,
    R2,
    B2,
    L1,
    L2,
    L3,
}

impl SideLabel {
    pub fn kind(self) -> GameKind {
        match self {
            SideLabel::R1 | SideLabel::B1 | SideLabel::R2 | SideLabel::B2 => GameKind::Hex,
            SideLabel::L1 | SideLabel::L2 | SideLabel::L3 => GameKind::Y,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SideLabel::R1 => "R1",
            SideLabel::B1 => "B1",
            SideLabel::R2 => "R2",
            SideLabel::B2 => "B2",
            SideLabel::L1 => "l1",
            SideLabel::L2 => "l2",
            SideLabel::L3 => "l3",
        }
    }
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SideLabel {
    type Err = BoardError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "R1" => SideLabel::R1,
            "B1" => SideLabel::B1,
            "R2" => SideLabel::R2,
            "B2" => SideLabel::B2,
            "l1" => SideLabel::L1,
            "l2" => SideLabel::L2,
            "l3" => SideLabel::L3,
            other => return Err(BoardError::UnknownLabel(other.to_string())),
        })
    }
}

/// One boundary path of a board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub label: SideLabel,
    pub path: Vec<VertexId>,
}

impl Side {
    pub fn new(label: SideLabel, path: impl Into<Vec<VertexId>>) -> Self {
        Side {
            label,
            path: path.into(),
        }
    }

    pub fn first(&self) -> Option<VertexId> {
        self.path.first().copied()
    }

    pub fn last(&self) -> Option<VertexId> {
        self.path.last().copied()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoardError {
    #[error("board must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range (board has {vertex_count} vertices)")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("triangle #{index} {triangle:?} is degenerate")]
    DegenerateTriangle {
        index: usize,
        triangle: [VertexId; 3],
    },
    #[error("triangle #{index} {triangle:?} duplicates an earlier triangle")]
    DuplicateTriangle {
        index: usize,
        triangle: [VertexId; 3],
    },
    #[error("board needs at least one side")]
    NoSides,
    #[error("side labels mix Hex (R1 B1 R2 B2) and Y (l1 l2 l3) names")]
    MixedSideLabels,
    #[error("unknown side label `{0}`")]
    UnknownLabel(String),
    #[error("board has no side labelled {0}")]
    MissingSide(SideLabel),
}

/// Rule identifiers used in validation reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    EdgeManifold,
    BoundaryCycle,
    Euler,
    Connected,
    VertexLink,
    SideCount,
    SideOrder,
    SideLength,
    SidePath,
    SideCorner,
    SideDecomposition,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::EdgeManifold => "edge-manifold",
            Rule::BoundaryCycle => "boundary-cycle",
            Rule::Euler => "euler",
            Rule::Connected => "connected",
            Rule::VertexLink => "vertex-link",
            Rule::SideCount => "side-count",
            Rule::SideOrder => "side-order",
            Rule::SideLength => "side-length",
            Rule::SidePath => "side-path",
            Rule::SideCorner => "side-corner",
            Rule::SideDecomposition => "side-decomposition",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub message: String,
    /// Offending simplices (vertices, edges or triangles) as vertex lists.
    pub simplices: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, message: impl Into<String>, simplices: Vec<Vec<VertexId>>) {
        self.violations.push(Violation {
            rule,
            message: message.into(),
            simplices,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}: {}", v.rule, v.message)?;
            if !v.simplices.is_empty() {
                write!(f, " {:?}", v.simplices)?;
            }
        }
        Ok(())
    }
}

/// A triangulated disk with labelled boundary sides. Immutable once built.
#[derive(Clone, Debug)]
pub struct Board {
    vertex_count: usize,
    triangles: Vec<[VertexId; 3]>,
    sides: Vec<Side>,
    kind: GameKind,
    edges: Vec<Edge>,
    edge_faces: BTreeMap<Edge, usize>,
    triangle_set: BTreeSet<[VertexId; 3]>,
    adjacency: Vec<Vec<VertexId>>,
    boundary_edges: Vec<Edge>,
    boundary_cycle: Option<Vec<VertexId>>,
    side_mask: Vec<u8>,
}

impl PartialEq for Board {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count
            && self.triangles == other.triangles
            && self.sides == other.sides
    }
}

impl Eq for Board {}

impl Board {
    /// Builds a board and its derived edge data. Disk and side conditions
    /// are only checked by [`Board::validate`].
    pub fn build(
        vertex_count: usize,
        triangles: Vec<[VertexId; 3]>,
        sides: Vec<Side>,
    ) -> Result<Board, BoardError> {
        if vertex_count == 0 {
            return Err(BoardError::NoVertices);
        }
        let in_range = |v: VertexId| {
            if v < vertex_count {
                Ok(())
            } else {
                Err(BoardError::VertexOutOfRange {
                    vertex: v,
                    vertex_count,
                })
            }
        };

        let mut seen = BTreeSet::new();
        for (index, t) in triangles.iter().enumerate() {
            for &v in t {
                in_range(v)?;
            }
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return Err(BoardError::DegenerateTriangle {
                    index,
                    triangle: *t,
                });
            }
            let mut key = *t;
            key.sort_unstable();
            if !seen.insert(key) {
                return Err(BoardError::DuplicateTriangle {
                    index,
                    triangle: *t,
                });
            }
        }

        let first = sides.first().ok_or(BoardError::NoSides)?;
        let kind = first.label.kind();
        if sides.iter().any(|s| s.label.kind() != kind) {
            return Err(BoardError::MixedSideLabels);
        }
        for s in &sides {
            for &v in &s.path {
                in_range(v)?;
            }
        }

        let triangle_set = seen;
        let mut edge_faces: BTreeMap<Edge, usize> = BTreeMap::new();
        for t in &triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *edge_faces.entry(edge(a, b)).or_default() += 1;
            }
        }
        let edges: Vec<Edge> = edge_faces.keys().copied().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for n in &mut adjacency {
            n.sort_unstable();
        }
        let boundary_edges: Vec<Edge> = edge_faces
            .iter()
            .filter(|(_, &count)| count == 1)
            .map(|(&e, _)| e)
            .collect();
        let boundary_cycle = trace_cycle(vertex_count, &boundary_edges);

        let mut side_mask = vec![0u8; vertex_count];
        for (i, s) in sides.iter().enumerate().take(8) {
            for &v in &s.path {
                side_mask[v] |= 1 << i;
            }
        }

        Ok(Board {
            vertex_count,
            triangles,
            sides,
            kind,
            edges,
            edge_faces,
            triangle_set,
            adjacency,
            boundary_edges,
            boundary_cycle,
            side_mask,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[VertexId; 3]] {
        &self.triangles
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a < self.vertex_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn has_triangle(&self, a: VertexId, b: VertexId, c: VertexId) -> bool {
        let mut key = [a, b, c];
        key.sort_unstable();
        self.triangle_set.contains(&key)
    }

    /// Number of triangles containing the edge, or zero if it is not an edge.
    pub fn edge_face_count(&self, a: VertexId, b: VertexId) -> usize {
        self.edge_faces.get(&edge(a, b)).copied().unwrap_or(0)
    }

    pub fn boundary_edges(&self) -> &[Edge] {
        &self.boundary_edges
    }

    /// The boundary as a cyclic vertex sequence, or `None` when the edges
    /// lying in a single triangle do not form one simple cycle.
    pub fn boundary_cycle(&self) -> Option<&[VertexId]> {
        self.boundary_cycle.as_deref()
    }

    pub fn is_boundary_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_face_count(a, b) == 1
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    pub fn side(&self, label: SideLabel) -> Option<&Side> {
        self.sides.iter().find(|s| s.label == label)
    }

    pub fn side_index(&self, label: SideLabel) -> Option<usize> {
        self.sides.iter().position(|s| s.label == label)
    }

    /// All vertices of a side, corners included.
    pub fn side_vertices(&self, label: SideLabel) -> Result<BTreeSet<VertexId>, BoardError> {
        self.side(label)
            .map(|s| s.path.iter().copied().collect())
            .ok_or(BoardError::MissingSide(label))
    }

    /// Bit `i` is set when the vertex lies on `sides()[i]`.
    pub fn side_mask(&self, v: VertexId) -> u8 {
        self.side_mask[v]
    }

    pub fn on_side(&self, v: VertexId, label: SideLabel) -> bool {
        self.side_index(label)
            .is_some_and(|i| self.side_mask[v] & (1 << i) != 0)
    }

    /// Checks every disk and side condition; never fails, only reports.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        self.check_edges(&mut report);
        self.check_boundary(&mut report);
        let chi = self.euler_characteristic();
        if chi != 1 {
            report.push(
                Rule::Euler,
                format!(
                    "V - E + T = {} - {} + {} = {chi}, expected 1",
                    self.vertex_count,
                    self.edges.len(),
                    self.triangles.len()
                ),
                vec![],
            );
        }
        self.check_connected(&mut report);
        self.check_links(&mut report);
        self.check_sides(&mut report);
        report
    }

    fn check_edges(&self, report: &mut ValidationReport) {
        let bad: Vec<Vec<VertexId>> = self
            .edge_faces
            .iter()
            .filter(|(_, &c)| c > 2)
            .map(|(&(a, b), _)| vec![a, b])
            .collect();
        if !bad.is_empty() {
            report.push(
                Rule::EdgeManifold,
                format!("{} edge(s) lie in more than two triangles", bad.len()),
                bad,
            );
        }
    }

    fn check_boundary(&self, report: &mut ValidationReport) {
        if self.boundary_edges.is_empty() {
            report.push(Rule::BoundaryCycle, "board has no boundary edges", vec![]);
        } else if self.boundary_cycle.is_none() {
            report.push(
                Rule::BoundaryCycle,
                "boundary edges do not form a single simple cycle",
                self.boundary_edges
                    .iter()
                    .map(|&(a, b)| vec![a, b])
                    .collect(),
            );
        }
    }

    fn check_connected(&self, report: &mut ValidationReport) {
        let isolated: Vec<Vec<VertexId>> = (0..self.vertex_count)
            .filter(|&v| self.adjacency[v].is_empty())
            .map(|v| vec![v])
            .collect();
        if !isolated.is_empty() {
            report.push(
                Rule::Connected,
                format!("{} vertex(es) lie in no triangle", isolated.len()),
                isolated,
            );
            return;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != self.vertex_count {
            let unreached = (0..self.vertex_count)
                .filter(|&v| !seen[v])
                .map(|v| vec![v])
                .collect();
            report.push(Rule::Connected, "complex is not connected", unreached);
        }
    }

    fn check_links(&self, report: &mut ValidationReport) {
        let mut link_edges: Vec<Vec<Edge>> = vec![Vec::new(); self.vertex_count];
        for t in &self.triangles {
            link_edges[t[0]].push(edge(t[1], t[2]));
            link_edges[t[1]].push(edge(t[0], t[2]));
            link_edges[t[2]].push(edge(t[0], t[1]));
        }
        let mut on_boundary = vec![false; self.vertex_count];
        for &(a, b) in &self.boundary_edges {
            on_boundary[a] = true;
            on_boundary[b] = true;
        }
        for v in 0..self.vertex_count {
            let neighbors = &self.adjacency[v];
            if neighbors.is_empty() {
                continue;
            }
            let shape = link_shape(neighbors, &link_edges[v]);
            let expected = if on_boundary[v] {
                LinkShape::Path
            } else {
                LinkShape::Cycle
            };
            if shape != expected {
                let which = if on_boundary[v] {
                    "boundary"
                } else {
                    "interior"
                };
                let want = if on_boundary[v] { "path" } else { "cycle" };
                report.push(
                    Rule::VertexLink,
                    format!("link of {which} vertex {v} is not a single {want}"),
                    vec![vec![v]],
                );
            }
        }
    }

    fn check_sides(&self, report: &mut ValidationReport) {
        let labels = self.kind.labels();
        if self.sides.len() != labels.len() {
            report.push(
                Rule::SideCount,
                format!(
                    "{} board needs {} sides, found {}",
                    self.kind,
                    labels.len(),
                    self.sides.len()
                ),
                vec![],
            );
            return;
        }
        let found: Vec<SideLabel> = self.sides.iter().map(|s| s.label).collect();
        if found != labels {
            let names: Vec<&str> = found.iter().map(|l| l.as_str()).collect();
            let want: Vec<&str> = labels.iter().map(|l| l.as_str()).collect();
            report.push(
                Rule::SideOrder,
                format!(
                    "sides listed as [{}], expected [{}]",
                    names.join(" "),
                    want.join(" ")
                ),
                vec![],
            );
        }

        let mut paths_ok = true;
        for s in &self.sides {
            if s.path.len() < 2 {
                report.push(
                    Rule::SideLength,
                    format!("side {} has no edge", s.label),
                    vec![s.path.clone()],
                );
                paths_ok = false;
                continue;
            }
            let distinct: BTreeSet<_> = s.path.iter().collect();
            if distinct.len() != s.path.len() {
                report.push(
                    Rule::SidePath,
                    format!("side {} repeats a vertex", s.label),
                    vec![s.path.clone()],
                );
                paths_ok = false;
            }
            let off: Vec<Vec<VertexId>> = s
                .path
                .windows(2)
                .filter(|w| !self.is_boundary_edge(w[0], w[1]))
                .map(|w| vec![w[0], w[1]])
                .collect();
            if !off.is_empty() {
                report.push(
                    Rule::SidePath,
                    format!("side {} steps along non-boundary edges", s.label),
                    off,
                );
                paths_ok = false;
            }
        }
        if !paths_ok {
            return;
        }

        let k = self.sides.len();
        let mut corners_ok = true;
        for i in 0..k {
            let (a, b) = (&self.sides[i], &self.sides[(i + 1) % k]);
            if a.last() != b.first() {
                report.push(
                    Rule::SideCorner,
                    format!(
                        "side {} does not end where side {} begins",
                        a.label, b.label
                    ),
                    vec![vec![a.last().unwrap_or(0)], vec![b.first().unwrap_or(0)]],
                );
                corners_ok = false;
            }
        }
        if !corners_ok {
            return;
        }

        let Some(cycle) = &self.boundary_cycle else {
            report.push(
                Rule::SideDecomposition,
                "sides cannot decompose a boundary that is not a simple cycle",
                vec![],
            );
            return;
        };
        // Closed walk through all sides, each joint counted once.
        let walk: Vec<VertexId> = self
            .sides
            .iter()
            .flat_map(|s| s.path[..s.path.len() - 1].iter().copied())
            .collect();
        let distinct: BTreeSet<_> = walk.iter().copied().collect();
        if walk.len() != cycle.len() || distinct.len() != walk.len() {
            report.push(
                Rule::SideDecomposition,
                format!(
                    "sides cover {} boundary steps ({} distinct vertices), boundary cycle has {}",
                    walk.len(),
                    distinct.len(),
                    cycle.len()
                ),
                vec![walk],
            );
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
enum LinkShape {
    Cycle,
    Path,
    Other,
}

fn link_shape(vertices: &[VertexId], edges: &[Edge]) -> LinkShape {
    let index = |v: VertexId| vertices.binary_search(&v).ok();
    let n = vertices.len();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        let (Some(i), Some(j)) = (index(a), index(b)) else {
            return LinkShape::Other;
        };
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    if reached != n {
        return LinkShape::Other;
    }
    let ends = adj.iter().filter(|a| a.len() == 1).count();
    let middles = adj.iter().filter(|a| a.len() == 2).count();
    if middles == n && n >= 3 {
        LinkShape::Cycle
    } else if ends == 2 && middles == n - 2 {
        LinkShape::Path
    } else {
        LinkShape::Other
    }
}

/// Orders the edges as one simple cycle, starting from the smallest vertex
/// and stepping to its smaller neighbour first.
fn trace_cycle(vertex_count: usize, edges: &[Edge]) -> Option<Vec<VertexId>> {
    if edges.len() < 3 {
        return None;
    }
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); vertex_count];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let used: Vec<VertexId> = (0..vertex_count).filter(|&v| !adj[v].is_empty()).collect();
    if used.iter().any(|&v| adj[v].len() != 2) {
        return None;
    }
    let start = used[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[start].iter().min()?;
    while cur != start {
        cycle.push(cur);
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
        if cycle.len() > used.len() {
            return None;
        }
    }
    (cycle.len() == used.len()).then_some(cycle)
}
