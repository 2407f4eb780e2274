//! Internal hom of boolean-semiring modules and the duality `Hom(M,𝔹) ≅ M^op`.

use super::FinSemilattice;
use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A join- and zero-preserving map between finite modules, stored as an
/// element table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleMorphism {
    pub source: FinSemilattice,
    pub target: FinSemilattice,
    pub map: Vec<usize>,
}

impl ModuleMorphism {
    pub fn new(
        source: FinSemilattice,
        target: FinSemilattice,
        map: Vec<usize>,
    ) -> Result<Self, Error> {
        if map.len() != source.size() {
            return Err(Error::format(format!(
                "morphism table has {} entries for a source of size {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= target.size()) {
            return Err(Error::format(format!(
                "morphism value {bad} outside target of size {}",
                target.size()
            )));
        }
        Ok(ModuleMorphism { source, target, map })
    }

    /// Check `f(0) = 0` and `f(x + y) = f(x) + f(y)`.
    pub fn is_homomorphism(&self) -> bool {
        is_hom(&self.source, &self.target, &self.map)
    }
}

pub(crate) fn is_hom(m: &FinSemilattice, n: &FinSemilattice, map: &[usize]) -> bool {
    if map[m.zero()] != n.zero() {
        return false;
    }
    for x in 0..m.size() {
        for y in x..m.size() {
            if map[m.join(x, y)] != n.join(map[x], map[y]) {
                return false;
            }
        }
    }
    true
}

/// Enumerate every module homomorphism `M → N`, in lexicographic table
/// order. Maps are generated from assignments on the join-irreducibles of
/// `M` (which determine a candidate by join extension) and filtered by the
/// homomorphism law, so the search space is `|N|^|J(M)|` rather than
/// `|N|^|M|`.
pub fn enumerate_homs(m: &FinSemilattice, n: &FinSemilattice) -> Vec<Vec<usize>> {
    let irr = m.irreducibles();
    // join decomposition of every element of M over the irreducibles
    let below: Vec<Vec<usize>> = (0..m.size())
        .map(|x| {
            (0..irr.len())
                .filter(|&ji| m.leq(irr[ji], x))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut assign = vec![0usize; irr.len()];
    loop {
        let map: Vec<usize> = below
            .iter()
            .map(|js| n.join_all(js.iter().map(|&ji| assign[ji])))
            .collect();
        if is_hom(m, n, &map) {
            out.push(map);
        }
        // odometer over assignments
        let mut k = irr.len();
        loop {
            if k == 0 {
                out.sort();
                out.dedup();
                return out;
            }
            k -= 1;
            assign[k] += 1;
            if assign[k] < n.size() {
                break;
            }
            assign[k] = 0;
        }
    }
}

/// The internal hom: all homomorphisms `M → N` under pointwise join.
#[derive(Debug, Clone)]
pub struct HomModule {
    pub module: FinSemilattice,
    /// Hom tables aligned with `module` indices.
    pub maps: Vec<Vec<usize>>,
}

impl HomModule {
    pub fn index_of(&self, map: &[usize]) -> Option<usize> {
        self.maps.iter().position(|m| m == map)
    }
}

pub fn hom_module(m: &FinSemilattice, n: &FinSemilattice) -> HomModule {
    let maps = enumerate_homs(m, n);
    let size = maps.len();
    let index: BTreeMap<&Vec<usize>, usize> = maps.iter().zip(0..).collect();
    let mut join = vec![0; size * size];
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate().skip(i) {
            let h: Vec<usize> = f.iter().zip(g.iter()).map(|(&a, &b)| n.join(a, b)).collect();
            let k = *index
                .get(&h)
                .expect("pointwise join of homomorphisms is a homomorphism");
            join[i * size + j] = k;
            join[j * size + i] = k;
        }
    }
    let names = maps
        .iter()
        .map(|f| {
            let entries: Vec<&str> = f.iter().map(|&v| n.name(v)).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    let zero = index[&vec![n.zero(); m.size()]];
    let module = FinSemilattice { names, join, zero };
    HomModule { module, maps }
}

/// The canonical bijection `x ↦ f_x` with `f_x(y) = 0` iff `y ≤ x`, from `M`
/// with its order reversed onto `Hom(M, 𝔹)`. Returns the index of `f_x` in
/// the hom module for each `x`, verified to be an order-reversing module
/// isomorphism; `None` if any part of the verification fails (it cannot, for
/// a lattice that satisfies the semilattice laws).
pub fn dual_iso(m: &FinSemilattice) -> Option<(HomModule, Vec<usize>)> {
    let b = FinSemilattice::bool2();
    let hom = hom_module(m, &b);
    if hom.module.size() != m.size() {
        return None;
    }
    let mut assignment = Vec::with_capacity(m.size());
    for x in 0..m.size() {
        let fx: Vec<usize> = (0..m.size()).map(|y| usize::from(!m.leq(y, x))).collect();
        assignment.push(hom.index_of(&fx)?);
    }
    // bijective?
    let mut seen = vec![false; m.size()];
    for &i in &assignment {
        if seen[i] {
            return None;
        }
        seen[i] = true;
    }
    // order-reversing both ways, and turns meets into pointwise joins
    for x in 0..m.size() {
        for y in 0..m.size() {
            let rev = hom.module.leq(assignment[x], assignment[y]) == m.leq(y, x);
            let modhom = hom.module.join(assignment[x], assignment[y]) == assignment[m.meet(x, y)];
            if !rev || !modhom {
                return None;
            }
        }
    }
    Some((hom, assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::check_semilattice;

    #[test]
    fn hom_from_bool_is_target() {
        let b = FinSemilattice::bool2();
        let m = FinSemilattice::m_five();
        let h = hom_module(&b, &m);
        assert_eq!(h.module.size(), m.size());
    }

    #[test]
    fn hom_three_chain_to_bool_is_three_chain() {
        let c3 = FinSemilattice::chain(3);
        let h = hom_module(&c3, &FinSemilattice::bool2());
        assert_eq!(h.module.size(), 3);
        assert!(check_semilattice(&h.module).passed());
        // total order
        for x in 0..3 {
            for y in 0..3 {
                assert!(h.module.leq(x, y) || h.module.leq(y, x));
            }
        }
    }

    #[test]
    fn endomorphisms_of_m_five_number_fifty() {
        let m = FinSemilattice::m_five();
        assert_eq!(enumerate_homs(&m, &m).len(), 50);
    }

    #[test]
    fn dual_of_chain_and_m_five() {
        for m in [FinSemilattice::bool2(), FinSemilattice::chain(3), FinSemilattice::m_five()] {
            let (hom, map) = dual_iso(&m).expect("dual isomorphism");
            assert_eq!(hom.module.size(), m.size());
            // f_x ≤ f_y iff y ≤ x
            for x in 0..m.size() {
                for y in 0..m.size() {
                    assert_eq!(hom.module.leq(map[x], map[y]), m.leq(y, x));
                }
            }
        }
    }
}
