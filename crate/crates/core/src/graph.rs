//! Undirected simple graphs with opaque string labels and dense indices.
//!
//! Covers input parsing (whitespace-separated edge lists), connectivity
//! checking, morphology-controlled random generation and DOT export.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::partition::PartitionResult;

/// A connected-or-not undirected simple graph. Nodes carry opaque string
/// labels; all computation runs on dense indices `0..node_count()`.
///
/// Invariants: the adjacency is symmetric, has no self-loops and no
/// duplicate edges, and labels are unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<u32>>,
    num_edges: usize,
}

/// Counts of input irregularities that were normalized away during parsing.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct ParseWarnings {
    pub self_loops_dropped: usize,
    pub duplicate_edges_dropped: usize,
}

impl ParseWarnings {
    pub fn any(&self) -> bool {
        self.self_loops_dropped > 0 || self.duplicate_edges_dropped > 0
    }
}

impl Graph {
    /// Builds a graph from labeled edge pairs. Labels are indexed in first
    /// appearance order; self-loops and duplicate edges are dropped and
    /// counted.
    pub fn from_labeled_edges<I, S>(pairs: I) -> Result<(Self, ParseWarnings), Error>
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        let mut index_of: HashMap<String, u32> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut warnings = ParseWarnings::default();

        let mut intern = |label: String, labels: &mut Vec<String>| -> u32 {
            *index_of.entry(label.clone()).or_insert_with(|| {
                labels.push(label);
                (labels.len() - 1) as u32
            })
        };

        for (a, b) in pairs {
            let ia = intern(a.into(), &mut labels);
            let ib = intern(b.into(), &mut labels);
            if ia == ib {
                warnings.self_loops_dropped += 1;
                continue;
            }
            let edge = (ia.min(ib), ia.max(ib));
            if !edges.insert(edge) {
                warnings.duplicate_edges_dropped += 1;
            }
        }

        if labels.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok((Self::from_parts(labels, &edges), warnings))
    }

    /// Builds a graph on `nodes` indices labeled `"0"`, `"1"`, ... from an
    /// index edge list. Self-loops and duplicates are rejected upstream by
    /// debug assertions; use for programmatic construction.
    pub fn from_index_edges(nodes: usize, edges: &[(u32, u32)]) -> Result<Self, Error> {
        if nodes == 0 {
            return Err(Error::EmptyGraph);
        }
        let labels: Vec<String> = (0..nodes).map(|i| i.to_string()).collect();
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            debug_assert!(a != b, "self-loop {a}");
            debug_assert!((a as usize) < nodes && (b as usize) < nodes);
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self::from_parts(labels, &set))
    }

    fn from_parts(labels: Vec<String>, edges: &BTreeSet<(u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Self {
            labels,
            adj,
            num_edges: edges.len(),
        }
    }

    /// Parses a whitespace-separated edge list: one `label1 label2` pair per
    /// line, `#` starts a comment, blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<(Self, ParseWarnings), Error> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                [] => continue,
                [a, b] => pairs.push((a.to_string(), b.to_string())),
                other => {
                    return Err(Error::MalformedLine {
                        line: lineno + 1,
                        found: other.len(),
                    })
                }
            }
        }
        Self::from_labeled_edges(pairs)
    }

    /// Serializes to the edge-list format accepted by [`Graph::parse_edge_list`],
    /// edges sorted by `(min index, max index)` so round trips are byte-stable.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&self.labels[a]);
            out.push(' ');
            out.push_str(&self.labels[b]);
            out.push('\n');
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.num_edges
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn neighbors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[node].iter().map(|&v| v as usize)
    }

    /// Undirected edges as `(low index, high index)` pairs in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .filter(move |&&b| (b as usize) > a)
                .map(move |&b| (a, b as usize))
        })
    }

    /// True iff a breadth-first traversal from index 0 reaches every node.
    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }
}

/// Target shape of a generated benchmark graph: node count, edge count and
/// depth (the largest distance from any node to the center, i.e.
/// diameter minus radius).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Morphology {
    pub nodes: usize,
    pub edges: usize,
    pub depth: usize,
}

impl Morphology {
    pub fn new(nodes: usize, edges: usize, depth: usize) -> Result<Self, Error> {
        let m = Self {
            nodes,
            edges,
            depth,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), Error> {
        let n = self.nodes;
        let infeasible = |reason: String| Err(Error::InfeasibleMorphology { reason });
        if n == 0 {
            return infeasible("need at least one node".into());
        }
        if self.edges < n.saturating_sub(1) {
            return infeasible(format!(
                "{} edges cannot connect {n} nodes (need at least {})",
                self.edges,
                n - 1
            ));
        }
        if self.edges > n * (n - 1) / 2 {
            return infeasible(format!(
                "{} edges exceed the simple-graph maximum {} for {n} nodes",
                self.edges,
                n * (n - 1) / 2
            ));
        }
        // depth = diameter - radius <= floor(diameter / 2) <= floor((n-1)/2),
        // and the backbone construction needs 2*depth + 1 nodes.
        if 2 * self.depth + 1 > n {
            return infeasible(format!(
                "depth {} needs at least {} nodes, have {n}",
                self.depth,
                2 * self.depth + 1
            ));
        }
        Ok(())
    }

    /// Generates a connected simple graph with exactly `nodes` nodes and
    /// `edges` edges, deterministically for a fixed seed.
    ///
    /// Construction: a backbone path spanning `2*depth + 1` nodes pins the
    /// diameter near `2*depth`; the remaining nodes attach uniformly at
    /// random to already-placed nodes; chord edges are then drawn between
    /// nodes whose backbone positions differ by at most a window that starts
    /// at 1 and widens only when the eligible pool is too small. The achieved
    /// depth drifts below the target as the chord budget grows, so callers
    /// must measure the actual depth (e.g. via `baseline::oracle_partition`)
    /// and report it alongside.
    pub fn generate(&self, seed: u64) -> Result<Graph, Error> {
        self.validate()?;
        let n = self.nodes;
        if n == 1 {
            return Graph::from_index_edges(1, &[]);
        }

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spine = 2 * self.depth; // backbone edge count
        let mut edges: BTreeSet<(u32, u32)> = BTreeSet::new();
        let mut pos = vec![0usize; n];

        for i in 0..spine {
            edges.insert((i as u32, i as u32 + 1));
            pos[i + 1] = i + 1;
        }
        for v in spine + 1..n {
            let anchor = rng.random_range(0..v);
            edges.insert((anchor as u32, v as u32));
            pos[v] = pos[anchor];
        }

        let needed = self.edges - (n - 1);
        if needed > 0 {
            let mut window = 1usize;
            let mut pool = loop {
                let pool = chord_pool(n, &pos, &edges, window);
                if pool.len() >= needed || window >= spine.max(1) {
                    break pool;
                }
                window *= 2;
            };
            if pool.len() < needed {
                // Unreachable: at full window the pool is every non-edge pair
                // and the simple-graph bound was validated above.
                return Err(Error::InfeasibleMorphology {
                    reason: format!("chord pool exhausted at {} of {needed}", pool.len()),
                });
            }
            pool.shuffle(&mut rng);
            edges.extend(pool.into_iter().take(needed));
        }

        let g = Graph::from_index_edges(n, &edges.into_iter().collect::<Vec<_>>())?;
        debug_assert!(g.is_connected());
        debug_assert_eq!(g.edge_count(), self.edges);
        Ok(g)
    }
}

fn chord_pool(
    n: usize,
    pos: &[usize],
    existing: &BTreeSet<(u32, u32)>,
    window: usize,
) -> Vec<(u32, u32)> {
    let mut pool = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pos[i].abs_diff(pos[j]) <= window && !existing.contains(&(i as u32, j as u32)) {
                pool.push((i as u32, j as u32));
            }
        }
    }
    pool
}

const LAYER_COLORS: [&str; 10] = [
    "gold",
    "skyblue",
    "palegreen",
    "lightsalmon",
    "plum",
    "khaki",
    "lightpink",
    "paleturquoise",
    "wheat",
    "lavender",
];

/// Renders the graph as DOT text with every node annotated by its layer.
/// Layer 0 (center) nodes are drawn with a double outline.
pub fn export_dot(g: &Graph, p: &PartitionResult) -> Result<String, Error> {
    if p.layers().len() != g.node_count() {
        return Err(Error::PartitionMismatch {
            covered: p.layers().len(),
            nodes: g.node_count(),
        });
    }
    let mut out = String::from("graph ecc {\n  node [style=filled];\n");
    for i in 0..g.node_count() {
        let layer = p.layer(i);
        let color = LAYER_COLORS[layer as usize % LAYER_COLORS.len()];
        let shape = if layer == 0 {
            ", shape=doublecircle"
        } else {
            ""
        };
        writeln!(
            out,
            "  \"{}\" [layer=\"{layer}\", fillcolor=\"{color}\"{shape}];",
            escape_dot(g.label(i)),
        )
        .expect("write to String");
    }
    for (a, b) in g.edges() {
        writeln!(
            out,
            "  \"{}\" -- \"{}\";",
            escape_dot(g.label(a)),
            escape_dot(g.label(b)),
        )
        .expect("write to String");
    }
    out.push_str("}\n");
    Ok(out)
}

fn escape_dot(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
