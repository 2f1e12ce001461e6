//! Deterministic generators for the graph families used throughout the
//! crate. Every vertex gets a readable label (`l_1`, `b_2`, `x_3`, ...) so
//! certificates can address vertices by name.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A family member, identified by kind and parameters.
///
/// The compact text form is `name:args`, e.g. `spider:2,2,2` or
/// `grid:3,4`. Composite kinds take nested specs separated by `;`, e.g.
/// `cartesian_product:complete:3;path:3` or `corona_k1:path:4`; wrap a nested
/// composite in parentheses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Leg lengths; the head has one leg per entry.
    Spider(Vec<usize>),
    /// `P_m □ P_n`.
    Grid(usize, usize),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
    /// Corona with `K_1`: one pendant vertex per vertex.
    CoronaK1(Box<FamilySpec>),
    /// `k` copies of `P_5 = (l_i, v_i, b_i, v'_i, l'_i)` joined along the `b_i`.
    ChainTreeTk(usize),
    /// 21-vertex tree: centre `v` adjacent to `u` and `w`, each of which
    /// carries three endpaths of length 3.
    AnchorTreeT,
    /// `3k` anchor trees with their centres joined in a path.
    LinkedTreesHk(usize),
    /// The 5(k+1)+1 vertex graph built from the sets U, W, X, Y, Z and v.
    LayeredGk(usize),
    /// `K_n □ P_3`.
    CompleteTimesP3(usize),
    /// Two copies of `P_3 = (u_i, v_i, w_i)` plus the edges `v_1v_2`, `w_1w_2`.
    OpenQuestionExample,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Spider(_) => "spider",
            FamilySpec::Grid(..) => "grid",
            FamilySpec::CartesianProduct(..) => "cartesian_product",
            FamilySpec::CoronaK1(_) => "corona_k1",
            FamilySpec::ChainTreeTk(_) => "chain_tree_Tk",
            FamilySpec::AnchorTreeT => "anchor_tree_T",
            FamilySpec::LinkedTreesHk(_) => "linked_trees_Hk",
            FamilySpec::LayeredGk(_) => "layered_Gk",
            FamilySpec::CompleteTimesP3(_) => "complete_times_P3",
            FamilySpec::OpenQuestionExample => "open_question_example",
        }
    }

    fn args_string(&self) -> String {
        fn nested(s: &FamilySpec) -> String {
            match s {
                FamilySpec::CartesianProduct(..) | FamilySpec::CoronaK1(_) => format!("({s})"),
                _ => s.to_string(),
            }
        }
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::ChainTreeTk(n)
            | FamilySpec::LinkedTreesHk(n)
            | FamilySpec::LayeredGk(n)
            | FamilySpec::CompleteTimesP3(n) => n.to_string(),
            FamilySpec::Spider(legs) => join(legs),
            FamilySpec::Grid(m, n) => format!("{m},{n}"),
            FamilySpec::CartesianProduct(a, b) => format!("{};{}", nested(a), nested(b)),
            FamilySpec::CoronaK1(a) => nested(a),
            FamilySpec::AnchorTreeT | FamilySpec::OpenQuestionExample => String::new(),
        }
    }

    /// Parses the CLI pair `--family NAME --args a,b,c`.
    pub fn parse(name: &str, args: &str) -> Result<Self> {
        let ints = || -> Result<Vec<usize>> {
            args.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidFamily(format!("bad integer `{s}` for {name}")))
                })
                .collect()
        };
        let one = || -> Result<usize> {
            match ints()?.as_slice() {
                [n] => Ok(*n),
                other => Err(Error::InvalidFamily(format!(
                    "{name} takes one integer, got {}",
                    other.len()
                ))),
            }
        };
        let none = || -> Result<()> {
            if args.trim().is_empty() {
                Ok(())
            } else {
                Err(Error::InvalidFamily(format!("{name} takes no arguments")))
            }
        };
        let spec = match name {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "spider" => FamilySpec::Spider(ints()?),
            "grid" => match ints()?.as_slice() {
                [m, n] => FamilySpec::Grid(*m, *n),
                _ => return Err(Error::InvalidFamily("grid takes m,n".into())),
            },
            "cartesian_product" => {
                let parts = split_top_level(args);
                if parts.len() != 2 {
                    return Err(Error::InvalidFamily(
                        "cartesian_product takes two specs separated by `;`".into(),
                    ));
                }
                FamilySpec::CartesianProduct(
                    Box::new(parts[0].parse()?),
                    Box::new(parts[1].parse()?),
                )
            }
            "corona_k1" => FamilySpec::CoronaK1(Box::new(strip_parens(args.trim()).parse()?)),
            "chain_tree_Tk" => FamilySpec::ChainTreeTk(one()?),
            "anchor_tree_T" => {
                none()?;
                FamilySpec::AnchorTreeT
            }
            "linked_trees_Hk" => FamilySpec::LinkedTreesHk(one()?),
            "layered_Gk" => FamilySpec::LayeredGk(one()?),
            "complete_times_P3" => FamilySpec::CompleteTimesP3(one()?),
            "open_question_example" => {
                none()?;
                FamilySpec::OpenQuestionExample
            }
            other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{}: {msg}", self.name())));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n == 0 => bad("needs n >= 1"),
            FamilySpec::Cycle(n) if *n < 3 => bad("needs n >= 3"),
            FamilySpec::Spider(legs) if legs.len() < 3 => bad("needs at least 3 legs"),
            FamilySpec::Spider(legs) if legs.contains(&0) => bad("legs must have length >= 1"),
            FamilySpec::Grid(m, n) if *m == 0 || *n == 0 => bad("needs m, n >= 1"),
            FamilySpec::ChainTreeTk(0)
            | FamilySpec::LinkedTreesHk(0)
            | FamilySpec::LayeredGk(0)
            | FamilySpec::CompleteTimesP3(0) => bad("needs k >= 1"),
            FamilySpec::CartesianProduct(a, b) => {
                a.validate()?;
                b.validate()
            }
            FamilySpec::CoronaK1(a) => a.validate(),
            _ => Ok(()),
        }
    }

    /// Vertex count without building the graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Spider(legs) => 1 + legs.iter().sum::<usize>(),
            FamilySpec::Grid(m, n) => m * n,
            FamilySpec::CartesianProduct(a, b) => a.order() * b.order(),
            FamilySpec::CoronaK1(a) => 2 * a.order(),
            FamilySpec::ChainTreeTk(k) => 5 * k,
            FamilySpec::AnchorTreeT => ANCHOR_ORDER,
            FamilySpec::LinkedTreesHk(k) => 3 * k * ANCHOR_ORDER,
            FamilySpec::LayeredGk(k) => 5 * (k + 1) + 1,
            FamilySpec::CompleteTimesP3(n) => 3 * n,
            FamilySpec::OpenQuestionExample => 6,
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn strip_parens(s: &str) -> &str {
    if s.starts_with('(') && s.ends_with(')') {
        &s[1..s.len() - 1]
    } else {
        s
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(strip_parens(s[start..i].trim()));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(strip_parens(s[start..].trim()));
    parts
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args = self.args_string();
        if args.is_empty() {
            f.write_str(self.name())
        } else {
            write!(f, "{}:{}", self.name(), args)
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, args)) => FamilySpec::parse(name.trim(), args),
            None => FamilySpec::parse(s.trim(), ""),
        }
    }
}

impl TryFrom<String> for FamilySpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<FamilySpec> for String {
    fn from(s: FamilySpec) -> String {
        s.to_string()
    }
}

const ANCHOR_ORDER: usize = 21;

/// Incremental labelled-graph builder.
#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn build(self) -> Result<Graph> {
        Graph::from_edges(self.labels.len(), &self.edges)?.with_labels(self.labels)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut b = Builder::default();
    match spec {
        FamilySpec::Path(n) => {
            let vs: Vec<_> = (1..=*n).map(|i| b.vertex(format!("v_{i}"))).collect();
            for w in vs.windows(2) {
                b.edge(w[0], w[1]);
            }
        }
        FamilySpec::Cycle(n) => {
            let vs: Vec<_> = (1..=*n).map(|i| b.vertex(format!("v_{i}"))).collect();
            for i in 0..*n {
                b.edge(vs[i], vs[(i + 1) % n]);
            }
        }
        FamilySpec::Complete(n) => {
            let vs: Vec<_> = (1..=*n).map(|i| b.vertex(format!("v_{i}"))).collect();
            b.clique(&vs);
        }
        FamilySpec::Spider(legs) => {
            let head = b.vertex("b");
            for (i, &len) in legs.iter().enumerate() {
                let i = i + 1;
                let mut prev = head;
                for j in 1..len {
                    let x = b.vertex(format!("v_{{{i},{j}}}"));
                    b.edge(prev, x);
                    prev = x;
                }
                let leaf = b.vertex(format!("l_{i}"));
                b.edge(prev, leaf);
            }
        }
        FamilySpec::Grid(m, n) => {
            for i in 1..=*m {
                for j in 1..=*n {
                    b.vertex(format!("({i},{j})"));
                }
            }
            let at = |i: usize, j: usize| i * n + j;
            for i in 0..*m {
                for j in 0..*n {
                    if i + 1 < *m {
                        b.edge(at(i, j), at(i + 1, j));
                    }
                    if j + 1 < *n {
                        b.edge(at(i, j), at(i, j + 1));
                    }
                }
            }
        }
        FamilySpec::CartesianProduct(left, right) => {
            return cartesian_product(&generate(left)?, &generate(right)?);
        }
        FamilySpec::CoronaK1(base) => return corona_k1(&generate(base)?),
        FamilySpec::ChainTreeTk(k) => {
            let mut prev_b = None;
            for i in 1..=*k {
                let p = [
                    b.vertex(format!("l_{i}")),
                    b.vertex(format!("v_{i}")),
                    b.vertex(format!("b_{i}")),
                    b.vertex(format!("v'_{i}")),
                    b.vertex(format!("l'_{i}")),
                ];
                for w in p.windows(2) {
                    b.edge(w[0], w[1]);
                }
                if let Some(pb) = prev_b {
                    b.edge(pb, p[2]);
                }
                prev_b = Some(p[2]);
            }
        }
        FamilySpec::AnchorTreeT => {
            anchor_tree(&mut b, None);
        }
        FamilySpec::LinkedTreesHk(k) => {
            let mut prev_v = None;
            for i in 1..=3 * k {
                let v = anchor_tree(&mut b, Some(i));
                if let Some(pv) = prev_v {
                    b.edge(pv, v);
                }
                prev_v = Some(v);
            }
        }
        FamilySpec::LayeredGk(k) => {
            let m = k + 1;
            let v = b.vertex("v");
            let block = |b: &mut Builder, name: &str| -> Vec<usize> {
                (1..=m).map(|i| b.vertex(format!("{name}_{i}"))).collect()
            };
            let us = block(&mut b, "u");
            let ws = block(&mut b, "w");
            let xs = block(&mut b, "x");
            let ys = block(&mut b, "y");
            let zs = block(&mut b, "z");
            let mut uv = us.clone();
            uv.push(v);
            b.clique(&uv);
            let mut uz = us.clone();
            uz.extend(&zs);
            b.clique(&uz);
            for i in 0..m {
                for &z in &zs {
                    b.edge(ys[i], z);
                }
                b.edge(us[i], ys[i]);
                b.edge(xs[i], ys[i]);
                b.edge(ws[i], zs[i]);
            }
        }
        FamilySpec::CompleteTimesP3(n) => {
            let layer = |b: &mut Builder, name: &str| -> Vec<usize> {
                (1..=*n).map(|i| b.vertex(format!("{name}_{i}"))).collect()
            };
            let xs = layer(&mut b, "x");
            let ys = layer(&mut b, "y");
            let zs = layer(&mut b, "z");
            b.clique(&xs);
            b.clique(&ys);
            b.clique(&zs);
            for i in 0..*n {
                b.edge(xs[i], ys[i]);
                b.edge(ys[i], zs[i]);
            }
        }
        FamilySpec::OpenQuestionExample => {
            let mut copies = Vec::new();
            for i in 1..=2 {
                let u = b.vertex(format!("u_{i}"));
                let v = b.vertex(format!("v_{i}"));
                let w = b.vertex(format!("w_{i}"));
                b.edge(u, v);
                b.edge(v, w);
                copies.push((v, w));
            }
            b.edge(copies[0].0, copies[1].0);
            b.edge(copies[0].1, copies[1].1);
        }
    }
    b.build()
}

/// Adds one anchor tree and returns its centre. With `copy = Some(i)` every
/// label carries the copy index.
fn anchor_tree(b: &mut Builder, copy: Option<usize>) -> usize {
    let name = |base: &str| match copy {
        Some(i) => format!("{base}_{i}"),
        None => base.to_string(),
    };
    let path_label = |base: &str, side: &str, j: usize| match copy {
        Some(i) => format!("{base}_{{{i},{side},{j}}}"),
        None => format!("{base}_{{{side},{j}}}"),
    };
    let v = b.vertex(name("v"));
    let u = b.vertex(name("u"));
    let w = b.vertex(name("w"));
    b.edge(v, u);
    b.edge(v, w);
    for (side, root) in [("u", u), ("w", w)] {
        for j in 1..=3 {
            let a = b.vertex(path_label("a", side, j));
            let c = b.vertex(path_label("c", side, j));
            let l = b.vertex(path_label("l", side, j));
            b.edge(root, a);
            b.edge(a, c);
            b.edge(c, l);
        }
    }
    v
}

/// `G □ H` with vertex `(a, b)` at index `a * |H| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (n, m) = (g.n(), h.n());
    let mut edges = Vec::new();
    for a in 0..n {
        for bb in 0..m {
            for &a2 in g.neighbors(a) {
                if a2 > a {
                    edges.push((a * m + bb, a2 * m + bb));
                }
            }
            for &b2 in h.neighbors(bb) {
                if b2 > bb {
                    edges.push((a * m + bb, a * m + b2));
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n * m);
    for a in 0..n {
        for bb in 0..m {
            labels.push(format!("({},{})", g.label(a), h.label(bb)));
        }
    }
    Graph::from_edges(n * m, &edges)?.with_labels(labels)
}

/// `G ∘ K_1`: vertex `i + n` is the pendant attached to `i`.
pub fn corona_k1(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut edges: Vec<_> = g.edges().collect();
    edges.extend((0..n).map(|i| (i, i + n)));
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    labels.extend((0..n).map(|v| format!("{}'", g.label(v))));
    Graph::from_edges(2 * n, &edges)?.with_labels(labels)
}
