//! The exceptional family: graphs `H ∨ ℓK₂` with `|H| = ℓ - 1`, and the
//! sharpness construction `G_k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// How a graph splits as `core ∨ ℓK₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDecomposition {
    pub ell: usize,
    pub core: VertexSet,
    /// The ℓ disjoint edges, each as `(u, v)` with `u < v`, sorted.
    pub pairs: Vec<(usize, usize)>,
}

impl FamilyDecomposition {
    /// Checks every structural invariant against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.ell == 0 || self.core.len() != self.ell - 1 || self.pairs.len() != self.ell {
            return false;
        }
        if self.core.check_range(n).is_err() {
            return false;
        }
        let pair_vertices: VertexSet = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        if pair_vertices.len() != 2 * self.ell
            || pair_vertices.check_range(n).is_err()
            || !pair_vertices.is_disjoint(&self.core)
            || pair_vertices.len() + self.core.len() != n
        {
            return false;
        }
        self.pairs.iter().all(|&(u, v)| {
            g.has_edge(u, v)
                && [u, v].into_iter().all(|x| {
                    // Adjacent to the whole core, to its partner, and nothing else.
                    g.degree(x) == self.core.len() + 1 && g.degree_into(x, &self.core) == self.core.len()
                })
        })
    }
}

/// `core ∨ ℓK₂`; the core occupies vertices `0..ℓ-1`.
pub fn gen_family_member(ell: usize, core: &Graph) -> Result<Graph> {
    if ell == 0 || core.order() != ell - 1 {
        return Err(Error::Precondition(format!(
            "core must have order ell - 1 = {}, got {}",
            ell.saturating_sub(1),
            core.order()
        )));
    }
    Ok(core.join(&Graph::complete(2).copies(ell)))
}

/// Recognizes `G = H ∨ ℓK₂`.
///
/// Pair vertices have degree exactly ℓ while core vertices have degree at
/// least 2ℓ, so the split is forced by degrees; the decomposition is then
/// verified in full.
pub fn recognize_family(g: &Graph) -> Option<FamilyDecomposition> {
    let n = g.order();
    if !(n + 1).is_multiple_of(3) {
        return None;
    }
    let ell = (n + 1) / 3;
    let pair_vertices: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == ell).collect();
    if pair_vertices.len() != 2 * ell {
        return None;
    }
    let core: VertexSet = g.vertices().filter(|&v| g.degree(v) != ell).collect();
    let pair_set = VertexSet::from_sorted_unchecked(pair_vertices);
    let mut pairs = Vec::with_capacity(ell);
    for u in pair_set.iter() {
        let partners: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| pair_set.contains(w)).collect();
        if partners.len() != 1 {
            return None;
        }
        if u < partners[0] {
            pairs.push((u, partners[0]));
        }
    }
    let decomposition = FamilyDecomposition { ell, core, pairs };
    decomposition.verify(g).then_some(decomposition)
}

/// `G_k`: a clique `v_1..v_{k+3}` (vertices `0..k+3`) plus `k` disjoint
/// copies of `K_{k+2}`, copy `i` fully joined to `v_i`.
pub fn gen_tightness_example(k: usize) -> Graph {
    assert!(k >= 1, "tightness example needs k >= 1");
    let core = k + 3;
    let block = k + 2;
    let mut edges: Vec<(usize, usize)> = Graph::complete(core).edges().collect();
    for i in 0..k {
        let start = core + i * block;
        for a in start..start + block {
            edges.push((i, a));
            edges.extend((a + 1..start + block).map(|b| (a, b)));
        }
    }
    Graph::new(core + k * block, edges).expect("valid tightness example")
}

/// Closed-form quantities of `G_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TightnessNumbers {
    pub order: usize,
    pub min_degree: usize,
    pub alpha: usize,
    pub sigma: usize,
}

impl TightnessNumbers {
    /// `|G_k| = k² + 3k + 3`, `δ = k + 2`, `α = k + 1`,
    /// `σ_{k+1} = (k + 1)(k + 2) = n - 1`.
    pub fn expected(k: usize) -> Self {
        TightnessNumbers {
            order: k * k + 3 * k + 3,
            min_degree: k + 2,
            alpha: k + 1,
            sigma: (k + 1) * (k + 2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::{check_slack_condition, Slack};
    use crate::two_factor::find_two_factor;

    #[test]
    fn generate_examples() {
        assert_eq!(gen_family_member(1, &Graph::empty(0)).unwrap(), Graph::complete(2));
        let bowtie = gen_family_member(2, &Graph::empty(1)).unwrap();
        assert_eq!(bowtie, Graph::complete(1).join(&Graph::complete(2).copies(2)));
        let g = gen_family_member(3, &Graph::empty(2)).unwrap();
        assert_eq!(g.order(), 8);
        assert!(check_slack_condition(&g, Slack::Weak).holds());
        assert_eq!(find_two_factor(&g).unwrap(), None);
        assert!(gen_family_member(3, &Graph::empty(1)).is_err());
    }

    #[test]
    fn recognize_examples() {
        let bowtie = gen_family_member(2, &Graph::empty(1)).unwrap();
        let d = recognize_family(&bowtie).unwrap();
        assert_eq!(d.ell, 2);
        assert_eq!(d.core, VertexSet::from([0]));
        assert_eq!(d.pairs, vec![(1, 2), (3, 4)]);

        let d = recognize_family(&Graph::complete(2)).unwrap();
        assert_eq!((d.ell, d.core.len()), (1, 0));

        assert_eq!(recognize_family(&Graph::cycle(5)), None);
        assert_eq!(recognize_family(&Graph::complete(5)), None);
    }

    #[test]
    fn recognize_after_relabeling() {
        let g = gen_family_member(3, &Graph::complete(2)).unwrap();
        let perm = [5, 0, 7, 2, 6, 1, 4, 3];
        let h = g.permuted(&perm);
        let d = recognize_family(&h).unwrap();
        assert_eq!(d.core, VertexSet::from([5, 0]));
        assert!(d.verify(&h));
    }

    #[test]
    fn tightness_order() {
        for k in 1..=4 {
            let g = gen_tightness_example(k);
            let expected = TightnessNumbers::expected(k);
            assert_eq!(g.order(), expected.order);
            assert_eq!(g.min_degree(), Some(expected.min_degree));
        }
    }
}
