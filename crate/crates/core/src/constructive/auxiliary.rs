//! The bipartite graph between a cut set and the components it leaves,
//! cycles through the cut set, and respanning of cycle segments.

use serde::{Deserialize, Serialize};

use super::hamilton::hamilton_path_within;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Left side: the cut vertices in increasing order. Right side: the
/// components of `G - S`, ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryBipartite {
    pub cut: Vec<usize>,
    pub components: Vec<VertexSet>,
    /// `adjacency[i]`: components with an edge to `cut[i]`, ascending.
    pub adjacency: Vec<Vec<usize>>,
}

impl AuxiliaryBipartite {
    pub fn adjacent(&self, left: usize, right: usize) -> bool {
        self.adjacency[left].binary_search(&right).is_ok()
    }
}

pub fn build_auxiliary_h(g: &Graph, s: &VertexSet) -> Result<AuxiliaryBipartite> {
    s.check_range(g.order())?;
    if s.is_empty() {
        return Err(Error::Precondition("cut set is empty".into()));
    }
    let components = g.components_avoiding(s);
    if components.len() < 2 {
        return Err(Error::Precondition(format!("{s} is not a cut set")));
    }
    let adjacency = s
        .iter()
        .map(|v| {
            components
                .iter()
                .enumerate()
                .filter(|(_, c)| g.degree_into(v, c) > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(AuxiliaryBipartite { cut: s.iter().collect(), components, adjacency })
}

/// A cycle `v_{order[0]} a_0 v_{order[1]} a_1 ... a_{s-1}` of the auxiliary
/// graph through every cut vertex; indices refer to [`AuxiliaryBipartite`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCycle {
    pub order: Vec<usize>,
    pub right: Vec<usize>,
}

impl CutCycle {
    pub fn verify(&self, h: &AuxiliaryBipartite) -> bool {
        let s = h.cut.len();
        let mut seen_left = vec![false; s];
        let mut seen_right = vec![false; h.components.len()];
        if self.order.len() != s || self.right.len() != s || s < 2 {
            return false;
        }
        for i in 0..s {
            let (l, r, next) = (self.order[i], self.right[i], self.order[(i + 1) % s]);
            if l >= s || r >= h.components.len() || seen_left[l] || seen_right[r] {
                return false;
            }
            seen_left[l] = true;
            seen_right[r] = true;
            if !h.adjacent(l, r) || !h.adjacent(next, r) {
                return false;
            }
        }
        true
    }
}

fn extend_cycle(h: &AuxiliaryBipartite, order: &mut Vec<usize>, right: &mut Vec<usize>, used_l: &mut [bool], used_r: &mut [bool]) -> bool {
    let s = h.cut.len();
    let cur = *order.last().expect("nonempty");
    if order.len() == s {
        for &r in &h.adjacency[cur] {
            if !used_r[r] && h.adjacent(order[0], r) {
                right.push(r);
                return true;
            }
        }
        return false;
    }
    for &r in &h.adjacency[cur] {
        if used_r[r] {
            continue;
        }
        for next in 0..s {
            if used_l[next] || !h.adjacent(next, r) {
                continue;
            }
            used_r[r] = true;
            used_l[next] = true;
            order.push(next);
            right.push(r);
            if extend_cycle(h, order, right, used_l, used_r) {
                return true;
            }
            order.pop();
            right.pop();
            used_r[r] = false;
            used_l[next] = false;
        }
    }
    false
}

/// A cycle of the auxiliary graph containing every cut vertex, starting at
/// the smallest one. `None` if none exists or `|S| < 2`.
pub fn cycle_through_s(h: &AuxiliaryBipartite) -> Option<CutCycle> {
    let s = h.cut.len();
    if s < 2 {
        return None;
    }
    let mut used_l = vec![false; s];
    let mut used_r = vec![false; h.components.len()];
    used_l[0] = true;
    let mut order = vec![0];
    let mut right = Vec::with_capacity(s);
    extend_cycle(h, &mut order, &mut right, &mut used_l, &mut used_r).then_some(CutCycle { order, right })
}

/// Replaces the `index`-th segment `v_i a_i v_{i+1}` by `v_i Q v_{i+1}`
/// where `Q` is a Hamilton path of some component not used by another
/// segment. Tries components in ascending order and returns the first
/// success as `(component, path)`; the path includes both cut endpoints.
pub fn respan_segment(g: &Graph, h: &AuxiliaryBipartite, cycle: &CutCycle, index: usize, bound: usize) -> Result<Option<(usize, Vec<usize>)>> {
    let s = cycle.order.len();
    if index >= s {
        return Err(Error::Precondition(format!("segment {index} out of range for a cycle through {s} cut vertices")));
    }
    let vi = h.cut[cycle.order[index]];
    let vn = h.cut[cycle.order[(index + 1) % s]];
    for (j, comp) in h.components.iter().enumerate() {
        if cycle.right.iter().enumerate().any(|(l, &a)| l != index && a == j) {
            continue;
        }
        let xs: Vec<usize> = g.neighbors(vi).iter().copied().filter(|&x| comp.contains(x)).collect();
        let ys: Vec<usize> = g.neighbors(vn).iter().copied().filter(|&y| comp.contains(y)).collect();
        for &x in &xs {
            for &y in &ys {
                if x == y {
                    continue;
                }
                let Some(inner) = hamilton_path_within(g, comp, x, y, bound)? else {
                    continue;
                };
                let mut path = Vec::with_capacity(inner.len() + 2);
                path.push(vi);
                path.extend(inner);
                path.push(vn);
                return Ok(Some((j, path)));
            }
        }
    }
    Ok(None)
}
