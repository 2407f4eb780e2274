//! Tensor products of finite boolean-semiring modules.
//!
//! Every element of `M ⊗ N` is a join of pure tensors of join-irreducibles,
//! so an element is represented as the set of all irreducible pure tensors
//! below it: a subset of the grid `J(M) × J(N)` that is closed under taking,
//! on every grid line, all irreducibles below the join of the entries
//! present on that line (which subsumes down-closure). Two formal sums are
//! identified by the bilinearity relations exactly when these saturated sets
//! agree, the order is set inclusion, and the join is union followed by
//! saturation. The construction is arity-generic so that composite maps into
//! `M ⊗ M ⊗ M` can be compared without materialising iterated tensors.

use super::FinSemilattice;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

/// Ambient data for tensor elements of a fixed arity: the factor modules and
/// their join-irreducibles.
#[derive(Debug, Clone)]
pub struct TensorSpace {
    factors: Vec<Rc<FinSemilattice>>,
    irr: Vec<Vec<usize>>,
    /// A factor is flat when saturation can never add a tuple along its
    /// axis, i.e. the only irreducibles below a join of irreducibles are the
    /// ones joined. Free modules are flat; the fast path skips saturation
    /// entirely when every factor is flat.
    flat: Vec<bool>,
}

impl TensorSpace {
    pub fn new(factors: Vec<Rc<FinSemilattice>>) -> TensorSpace {
        let irr: Vec<Vec<usize>> = factors.iter().map(|m| m.irreducibles()).collect();
        let flat = factors
            .iter()
            .zip(&irr)
            .map(|(m, js)| is_flat(m, js))
            .collect();
        TensorSpace { factors, irr, flat }
    }

    pub fn pair(m: &FinSemilattice, n: &FinSemilattice) -> TensorSpace {
        TensorSpace::new(vec![Rc::new(m.clone()), Rc::new(n.clone())])
    }

    pub fn power(m: &FinSemilattice, arity: usize) -> TensorSpace {
        let rc = Rc::new(m.clone());
        TensorSpace::new(vec![rc; arity])
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, k: usize) -> &FinSemilattice {
        &self.factors[k]
    }

    pub fn irreducibles(&self, k: usize) -> &[usize] {
        &self.irr[k]
    }

    /// The zero element: the empty saturated set.
    pub fn zero(&self) -> TensorElt {
        TensorElt {
            tuples: BTreeSet::new(),
        }
    }

    /// The pure tensor of module elements, as the set of irreducible tuples
    /// componentwise below it. Pure tensors with a zero coordinate collapse
    /// to the zero element, as the bilinearity relations demand.
    pub fn pure(&self, coords: &[usize]) -> TensorElt {
        assert_eq!(coords.len(), self.arity());
        let mut per_axis: Vec<Vec<usize>> = Vec::with_capacity(self.arity());
        for (k, &c) in coords.iter().enumerate() {
            let below: Vec<usize> = (0..self.irr[k].len())
                .filter(|&ji| self.factors[k].leq(self.irr[k][ji], c))
                .collect();
            if below.is_empty() {
                return self.zero();
            }
            per_axis.push(below);
        }
        let mut tuples = BTreeSet::new();
        let mut stack = vec![Vec::with_capacity(self.arity())];
        while let Some(t) = stack.pop() {
            if t.len() == self.arity() {
                tuples.insert(t);
                continue;
            }
            let k = t.len();
            for &ji in &per_axis[k] {
                let mut t2 = t.clone();
                t2.push(ji);
                stack.push(t2);
            }
        }
        // a product of down-sets of irreducibles is already saturated
        TensorElt { tuples }
    }

    /// Join of tensor elements: union then saturate.
    pub fn join(&self, a: &TensorElt, b: &TensorElt) -> TensorElt {
        let mut tuples = a.tuples.clone();
        tuples.extend(b.tuples.iter().cloned());
        self.saturate(tuples)
    }

    pub fn join_all<'a>(&self, parts: impl IntoIterator<Item = &'a TensorElt>) -> TensorElt {
        let mut tuples = BTreeSet::new();
        for p in parts {
            tuples.extend(p.tuples.iter().cloned());
        }
        self.saturate(tuples)
    }

    pub fn leq(&self, a: &TensorElt, b: &TensorElt) -> bool {
        a.tuples.is_subset(&b.tuples)
    }

    /// Close a tuple set under the line rule: along each axis, a line may be
    /// extended by every irreducible below the join of the irreducibles
    /// already on it.
    pub fn saturate(&self, mut tuples: BTreeSet<Vec<usize>>) -> TensorElt {
        if self.flat.iter().all(|&f| f) {
            return TensorElt { tuples };
        }
        let mut changed = true;
        while changed {
            changed = false;
            for axis in 0..self.arity() {
                if self.flat[axis] {
                    continue;
                }
                let mut lines: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for t in &tuples {
                    let mut key = t.clone();
                    let v = key.remove(axis);
                    lines.entry(key).or_default().push(v);
                }
                let m = &self.factors[axis];
                let js = &self.irr[axis];
                for (key, vals) in lines {
                    let sup = m.join_all(vals.iter().map(|&ji| js[ji]));
                    for (ji, &j) in js.iter().enumerate() {
                        if m.leq(j, sup) {
                            let mut t = key.clone();
                            t.insert(axis, ji);
                            if tuples.insert(t) {
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        TensorElt { tuples }
    }

    /// Maximal tuples of a saturated set (its antichain normal form) in the
    /// componentwise order on irreducibles.
    pub fn maximal_tuples(&self, e: &TensorElt) -> Vec<Vec<usize>> {
        e.tuples
            .iter()
            .filter(|t| {
                !e.tuples.iter().any(|u| {
                    u != *t
                        && t.iter()
                            .zip(u.iter())
                            .enumerate()
                            .all(|(k, (&a, &b))| self.factors[k].leq(self.irr[k][a], self.irr[k][b]))
                })
            })
            .cloned()
            .collect()
    }

    /// Render an element as a sum of its maximal pure tensors.
    pub fn name(&self, e: &TensorElt) -> String {
        if e.tuples.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .maximal_tuples(e)
            .iter()
            .map(|t| {
                t.iter()
                    .enumerate()
                    .map(|(k, &ji)| self.factors[k].name(self.irr[k][ji]).to_string())
                    .collect::<Vec<_>>()
                    .join("⊗")
            })
            .collect();
        parts.join("+")
    }

    /// Transpose a binary tensor element (swap the two factors).
    pub fn transpose(&self, e: &TensorElt) -> TensorElt {
        assert_eq!(self.arity(), 2);
        TensorElt {
            tuples: e.tuples.iter().map(|t| vec![t[1], t[0]]).collect(),
        }
    }
}

fn is_flat(m: &FinSemilattice, irr: &[usize]) -> bool {
    if irr.len() > 12 {
        return false;
    }
    for mask in 1usize..(1 << irr.len()) {
        let sup = m.join_all((0..irr.len()).filter(|i| mask >> i & 1 == 1).map(|i| irr[i]));
        for (ji, &j) in irr.iter().enumerate() {
            if m.leq(j, sup) && mask >> ji & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// An element of a tensor product: a saturated set of irreducible tuples.
/// Equality of saturated sets is exactly equality in the tensor module.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorElt {
    tuples: BTreeSet<Vec<usize>>,
}

impl TensorElt {
    pub fn tuples(&self) -> &BTreeSet<Vec<usize>> {
        &self.tuples
    }

    pub fn is_zero(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// The tensor product of two modules, materialised as a module: all joins of
/// pure tensors, with the inclusion order.
#[derive(Debug, Clone)]
pub struct TensorModule {
    pub module: FinSemilattice,
    pub space: TensorSpace,
    /// Element list aligned with `module` indices.
    pub elems: Vec<TensorElt>,
}

impl TensorModule {
    pub fn index_of(&self, e: &TensorElt) -> Option<usize> {
        self.elems.iter().position(|x| x == e)
    }

    /// Index of the pure tensor `m ⊗ n`.
    pub fn pure(&self, m: usize, n: usize) -> usize {
        let e = self.space.pure(&[m, n]);
        self.index_of(&e).expect("pure tensor enumerated")
    }
}

/// Compute `M ⊗ N`: close the pure tensors under join and build the join
/// table on the resulting elements.
pub fn tensor(m: &FinSemilattice, n: &FinSemilattice) -> TensorModule {
    tensor_from_space(TensorSpace::pair(m, n))
}

/// Iterated tensor product of any arity, on one flat space of tuples.
pub fn tensor_multi(factors: &[&FinSemilattice]) -> TensorModule {
    tensor_from_space(TensorSpace::new(
        factors.iter().map(|m| Rc::new((*m).clone())).collect(),
    ))
}

fn tensor_from_space(space: TensorSpace) -> TensorModule {
    let mut elems: Vec<TensorElt> = vec![space.zero()];
    let mut seen: BTreeSet<TensorElt> = elems.iter().cloned().collect();
    let mut coords = vec![0usize; space.arity()];
    loop {
        let e = space.pure(&coords);
        if seen.insert(e.clone()) {
            elems.push(e);
        }
        let mut k = space.arity();
        let done = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            coords[k] += 1;
            if coords[k] < space.factor(k).size() {
                break false;
            }
            coords[k] = 0;
        };
        if done {
            break;
        }
    }
    let mut frontier: Vec<TensorElt> = elems.clone();
    while let Some(a) = frontier.pop() {
        let mut new = Vec::new();
        for b in &elems {
            let c = space.join(&a, b);
            if seen.insert(c.clone()) {
                new.push(c);
            }
        }
        elems.extend(new.iter().cloned());
        frontier.extend(new);
    }
    elems.sort();
    let size = elems.len();
    let index: BTreeMap<&TensorElt, usize> = elems.iter().zip(0..).collect();
    let mut join = vec![0; size * size];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate().skip(i) {
            let c = space.join(a, b);
            let k = index[&c];
            join[i * size + j] = k;
            join[j * size + i] = k;
        }
    }
    let names = elems.iter().map(|e| space.name(e)).collect();
    let zero = index[&space.zero()];
    let module = FinSemilattice { names, join, zero };
    TensorModule { module, space, elems }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::{check_semilattice, free_module};

    #[test]
    fn three_chain_tensor_has_six_elements() {
        let c3 = FinSemilattice::chain(3);
        let t = tensor(&c3, &c3);
        assert_eq!(t.module.size(), 6);
        assert!(check_semilattice(&t.module).passed());
    }

    #[test]
    fn unit_is_boolean() {
        let b = FinSemilattice::bool2();
        let m = FinSemilattice::m_five();
        let t = tensor(&b, &m);
        assert_eq!(t.module.size(), m.size());
    }

    #[test]
    fn m_five_tensor_square_has_fifty_elements() {
        let m = FinSemilattice::m_five();
        let t = tensor(&m, &m);
        assert_eq!(t.module.size(), 50);
    }

    #[test]
    fn free_modules_multiply() {
        let t = tensor(&free_module(&["x", "y"]), &free_module(&["u", "v"]));
        assert_eq!(t.module.size(), 16);
    }

    #[test]
    fn pure_tensor_with_zero_coordinate_is_zero() {
        let c3 = FinSemilattice::chain(3);
        let t = tensor(&c3, &c3);
        assert_eq!(t.pure(0, 2), t.module.zero());
        assert_eq!(t.pure(2, 0), t.module.zero());
    }

    #[test]
    fn meet_formula_in_chain_tensor() {
        // in 3-chain ⊗ 3-chain, meet(1⊗2, 2⊗1) = 1⊗1
        let c3 = FinSemilattice::chain(3);
        let t = tensor(&c3, &c3);
        let a = t.pure(1, 2);
        let b = t.pure(2, 1);
        assert_eq!(t.module.meet(a, b), t.pure(1, 1));
    }
}
