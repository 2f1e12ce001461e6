//! Broadcasts, their neighbourhood/boundary sets, and every predicate used to
//! define the domination and independence parameters.
//!
//! A vertex `u` hears a broadcaster `v` when `d(u, v) <= f(v)`. The ball of
//! `v` is everything that hears it, the boundary is the part of the ball at
//! distance exactly `f(v)`, and the private boundary is the part of the ball
//! that would go unheard if `v` dropped its strength by one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Strength assignment `f: V -> N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "BroadcastRepr", into = "BroadcastRepr")]
pub struct Broadcast {
    strengths: Vec<u32>,
    weight: u32,
}

#[derive(Serialize, Deserialize)]
struct BroadcastRepr {
    strengths: Vec<u32>,
}

impl From<BroadcastRepr> for Broadcast {
    fn from(r: BroadcastRepr) -> Self {
        Broadcast::new(r.strengths)
    }
}

impl From<Broadcast> for BroadcastRepr {
    fn from(b: Broadcast) -> Self {
        BroadcastRepr {
            strengths: b.strengths,
        }
    }
}

impl Broadcast {
    pub fn new(strengths: Vec<u32>) -> Self {
        let weight = strengths.iter().sum();
        Broadcast { strengths, weight }
    }

    pub fn zeros(n: usize) -> Self {
        Broadcast::new(vec![0; n])
    }

    /// Broadcast with the given `(vertex, strength)` pairs and zero elsewhere.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Self {
        let mut s = vec![0; n];
        for &(v, k) in pairs {
            s[v] = k;
        }
        Broadcast::new(s)
    }

    /// Characteristic function of a vertex set.
    pub fn characteristic(n: usize, set: &[usize]) -> Self {
        let pairs: Vec<_> = set.iter().map(|&v| (v, 1)).collect();
        Broadcast::from_pairs(n, &pairs)
    }

    pub fn len(&self) -> usize {
        self.strengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strengths.is_empty()
    }

    pub fn strengths(&self) -> &[u32] {
        &self.strengths
    }

    #[inline]
    pub fn strength(&self, v: usize) -> u32 {
        self.strengths[v]
    }

    /// Total strength σ(f).
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_zero(&self) -> bool {
        self.weight == 0
    }

    /// Broadcasting vertices `V_f^+`, ascending.
    pub fn broadcasters(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.strengths[v] > 0).collect()
    }

    /// Vertices broadcasting with strength exactly 1 (`V_f^1`).
    pub fn unit_broadcasters(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.strengths[v] == 1)
            .collect()
    }

    /// Vertices broadcasting with strength at least 2 (`V_f^{++}`).
    pub fn strong_broadcasters(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.strengths[v] >= 2)
            .collect()
    }

    /// Copy with `v` set to `strength`.
    pub fn with(&self, v: usize, strength: u32) -> Broadcast {
        let mut s = self.strengths.clone();
        s[v] = strength;
        Broadcast::new(s)
    }

    /// Checks `f(v) <= e(v)` (or `f(v) <= 1` for an isolated vertex).
    pub fn validate(&self, d: &DistanceMatrix) -> Result<()> {
        if self.len() != d.n() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: d.n(),
            });
        }
        for (v, &s) in self.strengths.iter().enumerate() {
            if s > d.strength_cap(v) {
                return Err(Error::InvalidBroadcast(format!(
                    "f({v}) = {s} exceeds cap {}",
                    d.strength_cap(v)
                )));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, d: &DistanceMatrix) -> bool {
        self.validate(d).is_ok()
    }
}

/// Pointwise order between two broadcasts on the same vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BroadcastOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare(f: &Broadcast, h: &Broadcast) -> Result<BroadcastOrder> {
    if f.len() != h.len() {
        return Err(Error::LengthMismatch {
            left: f.len(),
            right: h.len(),
        });
    }
    let mut some_less = false;
    let mut some_greater = false;
    for (a, b) in f.strengths.iter().zip(&h.strengths) {
        some_less |= a < b;
        some_greater |= a > b;
    }
    Ok(match (some_less, some_greater) {
        (false, false) => BroadcastOrder::Equal,
        (true, false) => BroadcastOrder::Less,
        (false, true) => BroadcastOrder::Greater,
        (true, true) => BroadcastOrder::Incomparable,
    })
}

/// The nine parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParameterKind {
    /// Broadcast domination number γ_b (minimum dominating weight).
    #[serde(rename = "gamma_b")]
    GammaLower,
    /// Upper broadcast domination number Γ_b.
    #[serde(rename = "Gamma_b")]
    GammaUpper,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "alpha_h")]
    AlphaH,
    #[serde(rename = "alpha_bn")]
    AlphaBn,
    #[serde(rename = "alpha_bnr")]
    AlphaBnr,
    #[serde(rename = "alpha_bnd")]
    AlphaBnd,
    /// Lower broadcast independence number.
    #[serde(rename = "i_bn")]
    IBn,
    /// Upper broadcast independent domination number (Γ_ib).
    #[serde(rename = "alpha_hd")]
    AlphaHd,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 9] = [
        ParameterKind::GammaLower,
        ParameterKind::GammaUpper,
        ParameterKind::Alpha,
        ParameterKind::AlphaH,
        ParameterKind::AlphaBn,
        ParameterKind::AlphaBnr,
        ParameterKind::AlphaBnd,
        ParameterKind::IBn,
        ParameterKind::AlphaHd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::GammaLower => "gamma_b",
            ParameterKind::GammaUpper => "Gamma_b",
            ParameterKind::Alpha => "alpha",
            ParameterKind::AlphaH => "alpha_h",
            ParameterKind::AlphaBn => "alpha_bn",
            ParameterKind::AlphaBnr => "alpha_bnr",
            ParameterKind::AlphaBnd => "alpha_bnd",
            ParameterKind::IBn => "i_bn",
            ParameterKind::AlphaHd => "alpha_hd",
        }
    }

    /// True for the parameters defined as a maximum.
    pub fn is_maximization(self) -> bool {
        !matches!(self, ParameterKind::GammaLower | ParameterKind::IBn)
    }

    /// Feasibility predicate of the parameter, evaluated definitionally.
    pub fn is_feasible(self, f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> bool {
        if !f.is_valid(d) {
            return false;
        }
        match self {
            ParameterKind::GammaLower => is_dominating(f, g, d),
            ParameterKind::GammaUpper => is_minimal_dominating(f, g, d),
            ParameterKind::Alpha => {
                f.strengths().iter().all(|&s| s <= 1) && is_bn_independent(f, g, d)
            }
            ParameterKind::AlphaH => is_hearing_independent(f, g, d),
            ParameterKind::AlphaBn => is_bn_independent(f, g, d),
            ParameterKind::AlphaBnr => {
                is_bn_independent(f, g, d) && is_irredundant(f, g, d).unwrap_or(false)
            }
            ParameterKind::AlphaBnd => is_bn_independent(f, g, d) && is_minimal_dominating(f, g, d),
            ParameterKind::IBn => {
                is_bn_independent(f, g, d) && is_maximal_bn_independent(f, g, d).unwrap_or(false)
            }
            ParameterKind::AlphaHd => {
                is_hearing_independent(f, g, d) && is_minimal_dominating(f, g, d)
            }
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ParameterKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Ball, boundary and private sets of one broadcasting vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BroadcasterSets {
    pub vertex: usize,
    pub strength: u32,
    /// `N_f(v)`
    pub ball: Vec<usize>,
    /// `B_f(v)`
    pub boundary: Vec<usize>,
    /// `PN_f(v)`
    pub private_neighbourhood: Vec<usize>,
    /// `PB_f(v)`
    pub private_boundary: Vec<usize>,
}

/// Materialized neighbourhood machinery of a broadcast.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BroadcastAnalysis {
    pub broadcasters: Vec<BroadcasterSets>,
    /// `U_f`
    pub unheard: Vec<usize>,
    /// Every edge `(u, v)`, `u < v`, with the broadcasters covering it.
    pub covered_by: Vec<((usize, usize), Vec<usize>)>,
    /// `U_f^E`
    pub uncovered_edges: Vec<(usize, usize)>,
}

impl BroadcastAnalysis {
    pub fn sets(&self, v: usize) -> Option<&BroadcasterSets> {
        self.broadcasters.iter().find(|b| b.vertex == v)
    }

    pub fn private_boundary(&self, v: usize) -> &[usize] {
        self.sets(v)
            .map(|b| b.private_boundary.as_slice())
            .unwrap_or(&[])
    }
}

#[inline]
fn hears(f: &Broadcast, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let s = f.strength(v);
    s > 0 && d.d(u, v) <= s
}

/// Number of broadcasters each vertex hears.
fn hearing_counts(f: &Broadcast, d: &DistanceMatrix) -> Vec<u32> {
    let n = d.n();
    let mut count = vec![0u32; n];
    for v in (0..n).filter(|&v| f.strength(v) > 0) {
        for (u, c) in count.iter_mut().enumerate() {
            if d.d(u, v) <= f.strength(v) {
                *c += 1;
            }
        }
    }
    count
}

/// Private boundary by the decrement rule: the vertices of `v`'s ball left
/// unheard once `v` broadcasts with strength `f(v) - 1`.
fn private_boundary_of(f: &Broadcast, d: &DistanceMatrix, count: &[u32], v: usize) -> Vec<usize> {
    let s = f.strength(v);
    (0..d.n())
        .filter(|&u| {
            let dist = d.d(u, v);
            if dist > s {
                return false;
            }
            // hears someone other than v?
            if count[u] > 1 {
                return false;
            }
            // still hears v after the decrement?
            !(s > 1 && dist < s)
        })
        .collect()
}

pub fn analyze(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> Result<BroadcastAnalysis> {
    f.validate(d)?;
    let n = d.n();
    let count = hearing_counts(f, d);
    let mut broadcasters = Vec::new();
    for v in f.broadcasters() {
        let s = f.strength(v);
        let ball: Vec<usize> = (0..n).filter(|&u| d.d(u, v) <= s).collect();
        let boundary: Vec<usize> = ball.iter().copied().filter(|&u| d.d(u, v) == s).collect();
        let private_neighbourhood: Vec<usize> =
            ball.iter().copied().filter(|&u| count[u] == 1).collect();
        let private_boundary = private_boundary_of(f, d, &count, v);
        if s >= 2 {
            debug_assert_eq!(
                private_boundary,
                boundary
                    .iter()
                    .copied()
                    .filter(|u| private_neighbourhood.contains(u))
                    .collect::<Vec<_>>()
            );
        }
        debug_assert!(n < 2 || !boundary.is_empty() || !d.is_connected());
        broadcasters.push(BroadcasterSets {
            vertex: v,
            strength: s,
            ball,
            boundary,
            private_neighbourhood,
            private_boundary,
        });
    }
    let unheard = (0..n).filter(|&u| count[u] == 0).collect();
    let mut covered_by = Vec::with_capacity(g.edge_count());
    let mut uncovered_edges = Vec::new();
    for (u, w) in g.edges() {
        let cover = edge_cover(f, d, u, w);
        if cover.is_empty() {
            uncovered_edges.push((u, w));
        }
        covered_by.push(((u, w), cover));
    }
    Ok(BroadcastAnalysis {
        broadcasters,
        unheard,
        covered_by,
        uncovered_edges,
    })
}

/// Broadcasters covering edge `uw`: both ends in the ball, not both on the
/// boundary.
fn edge_cover(f: &Broadcast, d: &DistanceMatrix, u: usize, w: usize) -> Vec<usize> {
    (0..d.n())
        .filter(|&x| {
            let s = f.strength(x);
            s > 0 && d.d(u, x) <= s && d.d(w, x) <= s && !(d.d(u, x) == s && d.d(w, x) == s)
        })
        .collect()
}

pub fn is_dominating(f: &Broadcast, _g: &Graph, d: &DistanceMatrix) -> bool {
    let bs = f.broadcasters();
    (0..d.n()).all(|u| bs.iter().any(|&v| d.d(u, v) <= f.strength(v)))
}

/// Every broadcaster has a nonempty private boundary. The zero broadcast is
/// rejected.
pub fn is_irredundant(f: &Broadcast, _g: &Graph, d: &DistanceMatrix) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Precondition(
            "irredundance is undefined for the zero broadcast".into(),
        ));
    }
    let count = hearing_counts(f, d);
    Ok(f.broadcasters()
        .into_iter()
        .all(|v| !private_boundary_of(f, d, &count, v).is_empty()))
}

/// Dominating and irredundant.
pub fn is_minimal_dominating(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> bool {
    !f.is_zero() && is_dominating(f, g, d) && is_irredundant(f, g, d).unwrap_or(false)
}

/// Minimality straight from the definition: no broadcast strictly below `f`
/// dominates. Domination is monotone, so it is enough to try every
/// single-step decrement.
pub fn is_minimal_dominating_oracle(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> Result<bool> {
    if !is_dominating(f, g, d) {
        return Err(Error::Precondition("broadcast is not dominating".into()));
    }
    Ok(f.broadcasters()
        .into_iter()
        .all(|v| !is_dominating(&f.with(v, f.strength(v) - 1), g, d)))
}

/// No broadcasting vertex hears another one.
pub fn is_hearing_independent(f: &Broadcast, _g: &Graph, d: &DistanceMatrix) -> bool {
    let bs = f.broadcasters();
    bs.iter().enumerate().all(|(i, &u)| {
        bs[i + 1..]
            .iter()
            .all(|&v| !hears(f, d, u, v) && !hears(f, d, v, u))
    })
}

/// Overlaps only in boundaries: for every pair of broadcasters,
/// `N_f(u) ∩ N_f(v) ⊆ B_f(u) ∩ B_f(v)`.
pub fn is_bn_independent(f: &Broadcast, _g: &Graph, d: &DistanceMatrix) -> bool {
    let bs = f.broadcasters();
    for (i, &u) in bs.iter().enumerate() {
        for &v in &bs[i + 1..] {
            let (su, sv) = (f.strength(u), f.strength(v));
            for x in 0..d.n() {
                let (du, dv) = (d.d(x, u), d.d(x, v));
                if du <= su && dv <= sv && (du != su || dv != sv) {
                    return false;
                }
            }
        }
    }
    true
}

/// Pairwise form of bn-independence: `d(u, v) >= f(u) + f(v)` for distinct
/// broadcasters.
pub fn bn_pairwise_criterion(f: &Broadcast, _g: &Graph, d: &DistanceMatrix) -> bool {
    let bs = f.broadcasters();
    bs.iter().enumerate().all(|(i, &u)| {
        bs[i + 1..]
            .iter()
            .all(|&v| d.d(u, v) as u64 >= f.strength(u) as u64 + f.strength(v) as u64)
    })
}

/// No single-vertex increment keeps the broadcast bn-independent. Since
/// bn-independence is closed downward, this is equivalent to maximality.
pub fn is_maximal_bn_independent(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> Result<bool> {
    if !bn_pairwise_criterion(f, g, d) {
        return Err(Error::Precondition(
            "broadcast is not bn-independent".into(),
        ));
    }
    let bs = f.broadcasters();
    for v in 0..d.n() {
        let s = f.strength(v) + 1;
        if s > d.strength_cap(v) {
            continue;
        }
        let fits = bs
            .iter()
            .filter(|&&w| w != v)
            .all(|&w| d.d(v, w) as u64 >= s as u64 + f.strength(w) as u64);
        if fits {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Maximality via "dominating, and a single broadcaster or every boundary
/// has a non-private vertex".
pub fn maximal_bn_by_boundaries(f: &Broadcast, g: &Graph, d: &DistanceMatrix) -> Result<bool> {
    let a = analyze(f, g, d)?;
    if !a.unheard.is_empty() {
        return Ok(false);
    }
    if a.broadcasters.len() == 1 {
        return Ok(true);
    }
    Ok(a.broadcasters
        .iter()
        .all(|b| b.boundary.iter().any(|u| !b.private_boundary.contains(u))))
}

/// Maximality via the covered-edge components: every component of
/// `G - U_f^E` holds at least two broadcasters. Only meaningful for connected
/// graphs and at least two broadcasters; `None` otherwise.
pub fn maximal_bn_by_components(
    f: &Broadcast,
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<Option<bool>> {
    let a = analyze(f, g, d)?;
    if a.broadcasters.len() < 2 || !d.is_connected() {
        return Ok(None);
    }
    let n = d.n();
    let covered: Vec<(usize, usize)> = a
        .covered_by
        .iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(e, _)| *e)
        .collect();
    let mut parent: Vec<usize> = (0..n).collect();
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
    for (u, w) in covered {
        let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
        if ru != rw {
            parent[ru] = rw;
        }
    }
    let mut per_component = vec![0usize; n];
    let mut is_root = vec![false; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        is_root[r] = true;
        if f.strength(v) > 0 {
            per_component[r] += 1;
        }
    }
    Ok(Some(
        (0..n)
            .filter(|&r| is_root[r])
            .all(|r| per_component[r] >= 2),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::graph::distances;

    fn path(n: usize) -> (Graph, DistanceMatrix) {
        let g = generate(&FamilySpec::Path(n)).unwrap();
        let d = distances(&g);
        (g, d)
    }

    fn labelled(g: &Graph, pairs: &[(&str, u32)]) -> Broadcast {
        let p: Vec<_> = pairs
            .iter()
            .map(|&(l, s)| (g.index_of(l).unwrap(), s))
            .collect();
        Broadcast::from_pairs(g.n(), &p)
    }

    #[test]
    fn single_peripheral_broadcaster_on_p4() {
        let (g, d) = path(4);
        let f = Broadcast::from_pairs(4, &[(0, 3)]);
        let a = analyze(&f, &g, &d).unwrap();
        let b = &a.broadcasters[0];
        assert_eq!(b.ball, vec![0, 1, 2, 3]);
        assert_eq!(b.boundary, vec![3]);
        assert_eq!(b.private_boundary, vec![3]);
        assert!(a.unheard.is_empty());
        assert!(is_dominating(&f, &g, &d));
        assert!(is_minimal_dominating(&f, &g, &d));
        assert!(is_minimal_dominating_oracle(&f, &g, &d).unwrap());
    }

    #[test]
    fn partial_broadcast_on_p4() {
        let (g, d) = path(4);
        let f = Broadcast::from_pairs(4, &[(0, 1)]);
        assert!(!is_dominating(&f, &g, &d));
        assert_eq!(analyze(&f, &g, &d).unwrap().unheard, vec![2, 3]);
        assert!(!is_maximal_bn_independent(&f, &g, &d).unwrap());
        let ends = Broadcast::from_pairs(4, &[(0, 1), (3, 1)]);
        assert!(is_irredundant(&ends, &g, &d).unwrap());
    }

    #[test]
    fn redundant_end_on_p4() {
        let (g, d) = path(4);
        let f = Broadcast::from_pairs(4, &[(0, 3), (3, 1)]);
        let a = analyze(&f, &g, &d).unwrap();
        assert!(a.private_boundary(3).is_empty());
        assert!(!is_minimal_dominating(&f, &g, &d));
        assert!(!is_minimal_dominating_oracle(&f, &g, &d).unwrap());

        let h = Broadcast::from_pairs(4, &[(0, 2), (3, 1)]);
        assert!(!is_minimal_dominating(&h, &g, &d));
        let ends = Broadcast::from_pairs(4, &[(0, 1), (3, 1)]);
        assert!(is_minimal_dominating_oracle(&ends, &g, &d).unwrap());
        assert!(is_minimal_dominating(&ends, &g, &d));
    }

    #[test]
    fn adjacent_pair_on_c4_is_minimal() {
        let g = generate(&FamilySpec::Cycle(4)).unwrap();
        let d = distances(&g);
        let f = Broadcast::from_pairs(4, &[(0, 1), (1, 1)]);
        assert!(is_irredundant(&f, &g, &d).unwrap());
        assert!(is_minimal_dominating_oracle(&f, &g, &d).unwrap());
        let triple = Broadcast::from_pairs(4, &[(0, 1), (1, 1), (2, 1)]);
        assert!(!is_irredundant(&triple, &g, &d).unwrap());
    }

    #[test]
    fn zero_broadcast_edge_cases() {
        let (g, d) = path(3);
        let z = Broadcast::zeros(3);
        assert!(!is_dominating(&z, &g, &d));
        assert!(is_irredundant(&z, &g, &d).is_err());
        assert!(!is_minimal_dominating(&z, &g, &d));
        assert!(is_minimal_dominating_oracle(&z, &g, &d).is_err());
    }

    #[test]
    fn k3_pair_is_not_minimal() {
        let g = generate(&FamilySpec::Complete(3)).unwrap();
        let d = distances(&g);
        let f = Broadcast::from_pairs(3, &[(0, 1), (1, 1)]);
        assert!(!is_minimal_dominating_oracle(&f, &g, &d).unwrap());
        assert!(!is_minimal_dominating(&f, &g, &d));
    }

    #[test]
    fn spider_f0_private_boundaries() {
        let g = generate(&FamilySpec::Spider(vec![2, 2, 2])).unwrap();
        let d = distances(&g);
        assert_eq!(d.diameter(), 4);
        let b = g.index_of("b").unwrap();
        assert_eq!(d.ecc(b), 2);
        assert_eq!(d.ecc(g.index_of("l_1").unwrap()), 4);
        let f = labelled(&g, &[("l_1", 2), ("l_2", 1), ("l_3", 1)]);
        let a = analyze(&f, &g, &d).unwrap();
        assert!(a.private_boundary(g.index_of("l_1").unwrap()).contains(&b));
        for i in 2..=3 {
            let leaf = g.index_of(&format!("l_{i}")).unwrap();
            let stem = g.index_of(&format!("v_{{{i},1}}")).unwrap();
            let mut expected = vec![leaf, stem];
            expected.sort();
            assert_eq!(a.private_boundary(leaf), expected.as_slice());
        }
    }

    #[test]
    fn spider_leaf_broadcasts() {
        let g = generate(&FamilySpec::Spider(vec![2, 2, 2])).unwrap();
        let d = distances(&g);
        let leaves = ["l_1", "l_2", "l_3"];
        let h = labelled(&g, &leaves.map(|l| (l, 3)));
        assert!(is_hearing_independent(&h, &g, &d));
        let f = labelled(&g, &leaves.map(|l| (l, 2)));
        assert!(is_bn_independent(&f, &g, &d));
        assert!(bn_pairwise_criterion(&f, &g, &d));
        assert!(is_maximal_bn_independent(&f, &g, &d).unwrap());
        assert!(maximal_bn_by_boundaries(&f, &g, &d).unwrap());
        assert_eq!(maximal_bn_by_components(&f, &g, &d).unwrap(), Some(true));
    }

    #[test]
    fn hearing_independence_on_short_paths() {
        let (g, d) = path(3);
        assert!(is_hearing_independent(
            &Broadcast::from_pairs(3, &[(0, 1), (2, 1)]),
            &g,
            &d
        ));
        let (g2, d2) = path(2);
        assert!(!is_hearing_independent(
            &Broadcast::from_pairs(2, &[(0, 1), (1, 1)]),
            &g2,
            &d2
        ));
    }

    #[test]
    fn overlapping_ends_of_p4() {
        let (g, d) = path(4);
        let f = Broadcast::from_pairs(4, &[(0, 2), (3, 2)]);
        assert!(!is_bn_independent(&f, &g, &d));
        assert!(!bn_pairwise_criterion(&f, &g, &d));
        let a = analyze(&f, &g, &d).unwrap();
        let bc = a.covered_by.iter().find(|(e, _)| *e == (1, 2)).unwrap();
        assert_eq!(bc.1, vec![0, 3]);
    }

    #[test]
    fn boundary_meet_is_bn_independent() {
        // Three broadcasters whose balls meet only at a shared boundary vertex y.
        let g = generate(&FamilySpec::Spider(vec![1, 2, 2])).unwrap();
        let d = distances(&g);
        let f = labelled(&g, &[("l_1", 1), ("l_2", 2), ("l_3", 2)]);
        assert!(is_bn_independent(&f, &g, &d));
        let h = labelled(&g, &[("l_1", 1), ("l_2", 3)]);
        assert!(!is_bn_independent(&h, &g, &d));
    }

    #[test]
    fn complete_graph_pair() {
        let g = generate(&FamilySpec::Complete(4)).unwrap();
        let d = distances(&g);
        let f = Broadcast::from_pairs(4, &[(0, 1), (2, 1)]);
        assert!(!bn_pairwise_criterion(&f, &g, &d));
        assert!(!is_bn_independent(&f, &g, &d));
    }

    #[test]
    fn peripheral_diameter_broadcast_is_maximal() {
        let g = generate(&FamilySpec::Grid(3, 4)).unwrap();
        let d = distances(&g);
        let f = Broadcast::from_pairs(g.n(), &[(0, d.diameter())]);
        assert!(is_maximal_bn_independent(&f, &g, &d).unwrap());
        assert!(is_minimal_dominating(&f, &g, &d));
    }

    #[test]
    fn validation() {
        let (g, d) = path(3);
        assert!(Broadcast::from_pairs(3, &[(1, 2)]).validate(&d).is_err());
        assert!(Broadcast::zeros(2).validate(&d).is_err());
        assert!(analyze(&Broadcast::from_pairs(3, &[(0, 3)]), &g, &d).is_err());
        assert!(
            is_maximal_bn_independent(&Broadcast::from_pairs(3, &[(0, 1), (1, 1)]), &g, &d)
                .is_err()
        );
    }

    #[test]
    fn single_vertex_broadcast() {
        let g = Graph::empty(1);
        let d = distances(&g);
        let f = Broadcast::new(vec![1]);
        assert!(f.is_valid(&d));
        let a = analyze(&f, &g, &d).unwrap();
        assert_eq!(a.private_boundary(0), &[0]);
        assert!(is_minimal_dominating(&f, &g, &d));
    }

    #[test]
    fn pointwise_order() {
        let a = Broadcast::new(vec![1, 0]);
        assert_eq!(
            compare(&a, &Broadcast::new(vec![2, 0])).unwrap(),
            BroadcastOrder::Less
        );
        assert_eq!(
            compare(&a, &Broadcast::new(vec![0, 1])).unwrap(),
            BroadcastOrder::Incomparable
        );
        assert_eq!(compare(&a, &a).unwrap(), BroadcastOrder::Equal);
        assert_eq!(
            compare(&Broadcast::new(vec![2, 1]), &a).unwrap(),
            BroadcastOrder::Greater
        );
        assert!(compare(&a, &Broadcast::new(vec![0])).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for k in ParameterKind::ALL {
            assert_eq!(k.name().parse::<ParameterKind>().unwrap(), k);
            assert_eq!(
                serde_json::to_string(&k).unwrap(),
                format!("\"{}\"", k.name())
            );
        }
        assert!("gamma".parse::<ParameterKind>().is_err());
    }
}
