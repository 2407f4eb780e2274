//! Isomorphism search between finite modules.

use super::FinSemilattice;

/// Search for a module isomorphism `M → N`, returned as an element table.
///
/// An isomorphism restricts to an order-isomorphism of join-irreducibles and
/// is determined by it, so the search assigns irreducibles to irreducibles,
/// pruned by order-theoretic invariants, and verifies the join extension.
pub fn find_isomorphism(m: &FinSemilattice, n: &FinSemilattice) -> Option<Vec<usize>> {
    if m.size() != n.size() {
        return None;
    }
    let mi = m.irreducibles();
    let ni = n.irreducibles();
    if mi.len() != ni.len() {
        return None;
    }
    let minv: Vec<_> = mi.iter().map(|&x| invariant(m, x)).collect();
    let ninv: Vec<_> = ni.iter().map(|&x| invariant(n, x)).collect();
    {
        let mut a = minv.clone();
        let mut b = ninv.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    let mut assign: Vec<Option<usize>> = vec![None; mi.len()];
    let mut used = vec![false; ni.len()];
    search(m, n, &mi, &ni, &minv, &ninv, &mut assign, &mut used, 0)
}

fn invariant(m: &FinSemilattice, x: usize) -> (usize, usize, usize) {
    let below = (0..m.size()).filter(|&y| m.leq(y, x)).count();
    let above = (0..m.size()).filter(|&y| m.leq(x, y)).count();
    let irr_below = m.irreducibles().iter().filter(|&&j| m.lt(j, x)).count();
    (below, above, irr_below)
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &FinSemilattice,
    n: &FinSemilattice,
    mi: &[usize],
    ni: &[usize],
    minv: &[(usize, usize, usize)],
    ninv: &[(usize, usize, usize)],
    assign: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    k: usize,
) -> Option<Vec<usize>> {
    if k == mi.len() {
        return verify(m, n, mi, ni, assign);
    }
    for cand in 0..ni.len() {
        if used[cand] || minv[k] != ninv[cand] {
            continue;
        }
        // partial order compatibility with already-assigned irreducibles
        let ok = (0..k).all(|prev| {
            let p = assign[prev].unwrap();
            m.leq(mi[prev], mi[k]) == n.leq(ni[p], ni[cand])
                && m.leq(mi[k], mi[prev]) == n.leq(ni[cand], ni[p])
        });
        if !ok {
            continue;
        }
        assign[k] = Some(cand);
        used[cand] = true;
        if let Some(found) = search(m, n, mi, ni, minv, ninv, assign, used, k + 1) {
            return Some(found);
        }
        assign[k] = None;
        used[cand] = false;
    }
    None
}

fn verify(
    m: &FinSemilattice,
    n: &FinSemilattice,
    mi: &[usize],
    ni: &[usize],
    assign: &[Option<usize>],
) -> Option<Vec<usize>> {
    let map: Vec<usize> = (0..m.size())
        .map(|x| {
            n.join_all(
                mi.iter()
                    .enumerate()
                    .filter(|&(_, &j)| m.leq(j, x))
                    .map(|(ji, _)| ni[assign[ji].unwrap()]),
            )
        })
        .collect();
    let mut seen = vec![false; n.size()];
    for &v in &map {
        if seen[v] {
            return None;
        }
        seen[v] = true;
    }
    for x in 0..m.size() {
        for y in x..m.size() {
            if map[m.join(x, y)] != n.join(map[x], map[y]) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::{direct_sum, free_module, tensor, FinSemilattice};

    #[test]
    fn chain_is_isomorphic_to_itself_only() {
        let c3 = FinSemilattice::chain(3);
        assert!(find_isomorphism(&c3, &c3).is_some());
        let b2 = direct_sum(&FinSemilattice::bool2(), &FinSemilattice::bool2());
        assert!(find_isomorphism(&c3, &b2).is_none());
    }

    #[test]
    fn free_on_disjoint_union_is_direct_sum() {
        let lhs = free_module(&["x1", "x2", "y1", "y2"]);
        let rhs = direct_sum(&free_module(&["x1", "x2"]), &free_module(&["y1", "y2"]));
        assert!(find_isomorphism(&lhs, &rhs).is_some());
    }

    #[test]
    fn free_on_product_is_tensor() {
        let lhs = free_module(&["a", "b", "c", "d"]);
        let rhs = tensor(&free_module(&["x1", "x2"]), &free_module(&["y1", "y2"]));
        assert!(find_isomorphism(&lhs, &rhs.module).is_some());
    }

    #[test]
    fn tensor_swap_symmetry() {
        let m = FinSemilattice::chain(3);
        let n = FinSemilattice::m_five();
        let a = tensor(&m, &n);
        let b = tensor(&n, &m);
        assert!(find_isomorphism(&a.module, &b.module).is_some());
    }
}
