//! Finite semilattices as modules over the boolean semiring.
//!
//! A finite module over the booleans is an idempotent commutative monoid,
//! i.e. a join-semilattice with least element `0`; since the carrier is
//! finite it is automatically a complete lattice. Elements are indices into
//! a name table; the structure is the total join table.

mod hom;
mod iso;
mod library;
mod tensor;

pub use hom::{dual_iso, enumerate_homs, hom_module, HomModule, ModuleMorphism};
pub use iso::find_isomorphism;
pub use library::all_lattices;
pub use tensor::{tensor, tensor_multi, TensorElt, TensorModule, TensorSpace};

use crate::error::Error;
use crate::report::{Report, Witness};
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// A finite join-semilattice with least element, i.e. a finite module over
/// the boolean semiring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinSemilattice {
    names: Vec<String>,
    /// Row-major total join table, `join[x*n + y]`.
    join: Vec<usize>,
    zero: usize,
}

impl FinSemilattice {
    /// Build from a join table, validating only well-formedness (all entries
    /// inside the carrier). Law violations are reported by
    /// [`check_semilattice`], not here.
    pub fn new(names: Vec<String>, join: Vec<usize>, zero: usize) -> Result<Self, Error> {
        let n = names.len();
        if join.len() != n * n {
            return Err(Error::format(format!(
                "join table has {} entries, expected {}",
                join.len(),
                n * n
            )));
        }
        if let Some(&bad) = join.iter().find(|&&e| e >= n) {
            return Err(Error::format(format!("join entry {bad} outside carrier of size {n}")));
        }
        if zero >= n && n > 0 {
            return Err(Error::format(format!("zero {zero} outside carrier of size {n}")));
        }
        if n == 0 {
            return Err(Error::format("empty carrier"));
        }
        Ok(FinSemilattice { names, join, zero })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.zero, |a, b| self.join(a, b))
    }

    /// The induced order: `x ≤ y` iff `x + y = y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join(x, y) == y
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn top(&self) -> usize {
        self.join_all(0..self.size())
    }

    /// Greatest lower bound, computed as the join of all common lower bounds.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.join_all((0..self.size()).filter(|&z| self.leq(z, x) && self.leq(z, y)))
    }

    /// Join-irreducible elements: nonzero `x` not equal to the join of the
    /// elements strictly below it. Every element is the join of the
    /// irreducibles below it.
    pub fn irreducibles(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| {
                x != self.zero && self.join_all((0..self.size()).filter(|&y| self.lt(y, x))) != x
            })
            .collect()
    }

    /// Elements covered by `x` (maximal elements strictly below).
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&y| self.lt(y, x) && !(0..self.size()).any(|z| self.lt(y, z) && self.lt(z, x)))
            .collect()
    }

    /// The dual lattice: same carrier, join replaced by meet.
    pub fn opposite(&self) -> FinSemilattice {
        let n = self.size();
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = self.meet(x, y);
            }
        }
        FinSemilattice {
            names: self.names.clone(),
            join,
            zero: self.top(),
        }
    }

    /// The two-element boolean lattice.
    pub fn bool2() -> FinSemilattice {
        FinSemilattice::chain(2)
    }

    /// A chain `0 < 1 < … < k-1` under max.
    pub fn chain(k: usize) -> FinSemilattice {
        assert!(k > 0);
        let names = (0..k).map(|i| i.to_string()).collect();
        let mut join = vec![0; k * k];
        for x in 0..k {
            for y in 0..k {
                join[x * k + y] = x.max(y);
            }
        }
        FinSemilattice { names, join, zero: 0 }
    }

    /// The single-element module.
    pub fn point() -> FinSemilattice {
        FinSemilattice {
            names: vec!["0".into()],
            join: vec![0],
            zero: 0,
        }
    }

    /// The diamond with `k` incomparable atoms below a common top: joins of
    /// distinct atoms all collapse to the top. `diamond(3)` is the
    /// five-element module whose atoms are the singletons of a three-element
    /// set and whose top is the whole set.
    pub fn diamond(k: usize) -> FinSemilattice {
        let n = k + 2;
        let top = k + 1;
        let mut names = vec!["0".to_string()];
        names.extend((1..=k).map(|i| i.to_string()));
        names.push("T".into());
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                join[x * n + y] = if x == 0 {
                    y
                } else if y == 0 {
                    x
                } else if x == y {
                    x
                } else {
                    top
                };
            }
        }
        FinSemilattice { names, join, zero: 0 }
    }

    /// Intersect-or-all module: `diamond(3)` under its subset reading.
    pub fn m_five() -> FinSemilattice {
        FinSemilattice::diamond(3)
    }
}

/// Free module on a finite set: all subsets under union. Generators keep
/// their names; other elements are named as joins of generators.
pub fn free_module(generators: &[&str]) -> FinSemilattice {
    let k = generators.len();
    assert!(k <= 16, "free module on more than 16 generators");
    let n = 1usize << k;
    let names: Vec<String> = (0..n).map(|s| subset_name(s, generators)).collect();
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            join[x * n + y] = x | y;
        }
    }
    FinSemilattice {
        names,
        join,
        zero: 0,
    }
}

fn subset_name(s: usize, generators: &[&str]) -> String {
    if s == 0 {
        return "0".into();
    }
    let parts: Vec<&str> = (0..generators.len())
        .filter(|i| s >> i & 1 == 1)
        .map(|i| generators[i])
        .collect();
    parts.join("+")
}

/// Cartesian product of modules with componentwise join; the categorical
/// product, written ⊕ as is traditional for module categories.
pub fn direct_sum(m: &FinSemilattice, n: &FinSemilattice) -> FinSemilattice {
    let (a, b) = (m.size(), n.size());
    let size = a * b;
    let mut names = Vec::with_capacity(size);
    for x in 0..a {
        for y in 0..b {
            names.push(format!("({},{})", m.name(x), n.name(y)));
        }
    }
    let mut join = vec![0; size * size];
    for x1 in 0..a {
        for y1 in 0..b {
            for x2 in 0..a {
                for y2 in 0..b {
                    let i = x1 * b + y1;
                    let j = x2 * b + y2;
                    join[i * size + j] = m.join(x1, x2) * b + n.join(y1, y2);
                }
            }
        }
    }
    FinSemilattice {
        names,
        join,
        zero: m.zero() * b + n.zero(),
    }
}

/// Check the four semilattice laws on a candidate join table, reporting
/// witness tuples for each violation.
pub fn check_semilattice(m: &FinSemilattice) -> Report {
    let start = Instant::now();
    let mut report = Report::new(format!("semilattice[{}]", m.size()));
    let n = m.size();
    let w = |xs: &[usize]| -> Witness { xs.iter().map(|&x| m.name(x).to_string()).collect() };

    let mut comm = Vec::new();
    let mut assoc = Vec::new();
    let mut idem = Vec::new();
    let mut unit = Vec::new();
    for x in 0..n {
        if m.join(x, x) != x {
            idem.push(w(&[x]));
        }
        if m.join(x, m.zero) != x || m.join(m.zero, x) != x {
            unit.push(w(&[x]));
        }
        for y in 0..n {
            if m.join(x, y) != m.join(y, x) {
                comm.push(w(&[x, y]));
            }
            for z in 0..n {
                if m.join(m.join(x, y), z) != m.join(x, m.join(y, z)) {
                    assoc.push(w(&[x, y, z]));
                }
            }
        }
    }
    report.law("commutativity", comm);
    report.law("associativity", assoc);
    report.law("idempotence", idem);
    report.law("unit", unit);

    // the induced order must be a partial order; antisymmetry is the only
    // law not already implied by the four above on a finite table
    let mut antisym = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && m.leq(x, y) && m.leq(y, x) {
                antisym.push(w(&[x, y]));
            }
        }
    }
    report.law("order-antisymmetry", antisym);
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bool2_passes() {
        assert!(check_semilattice(&FinSemilattice::bool2()).passed());
    }

    #[test]
    fn commutativity_violation_reported() {
        // {0,a,b} with a+b = a but b+a = b
        let m = FinSemilattice::new(
            vec!["0".into(), "a".into(), "b".into()],
            vec![0, 1, 2, 1, 1, 1, 2, 2, 2],
            0,
        )
        .unwrap();
        let r = check_semilattice(&m);
        assert!(!r.passed());
        assert!(!r.law_holds("commutativity"));
        let comm = r.laws.iter().find(|l| l.law == "commutativity").unwrap();
        assert!(comm.witnesses.contains(&vec!["a".to_string(), "b".to_string()]));
    }

    #[test]
    fn m_five_passes() {
        let m = FinSemilattice::m_five();
        assert_eq!(m.size(), 5);
        assert!(check_semilattice(&m).passed());
        assert_eq!(m.irreducibles(), vec![1, 2, 3]);
    }

    #[test]
    fn malformed_table_is_format_error() {
        let err = FinSemilattice::new(vec!["0".into()], vec![7], 0).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }

    #[test]
    fn direct_sum_cardinality_and_shape() {
        let b = FinSemilattice::bool2();
        let square = direct_sum(&b, &b);
        assert_eq!(square.size(), 4);
        assert!(check_semilattice(&square).passed());
        // two incomparable atoms
        let atoms = square.irreducibles();
        assert_eq!(atoms.len(), 2);
        assert!(!square.leq(atoms[0], atoms[1]) && !square.leq(atoms[1], atoms[0]));

        let c3 = FinSemilattice::chain(3);
        assert_eq!(direct_sum(&FinSemilattice::chain(2), &c3).size(), 6);
        assert_eq!(direct_sum(&c3, &FinSemilattice::point()).size(), 3);
    }

    #[test]
    fn free_module_sizes() {
        assert_eq!(free_module(&[]).size(), 1);
        assert_eq!(free_module(&["x"]).size(), 2);
        assert_eq!(free_module(&["x", "y"]).size(), 4);
        assert!(check_semilattice(&free_module(&["x", "y"])).passed());
    }

    #[test]
    fn meet_in_bool2() {
        let b = FinSemilattice::bool2();
        assert_eq!(b.meet(0, 1), 0);
    }

    #[test]
    fn opposite_swaps_order() {
        let c = FinSemilattice::chain(3);
        let op = c.opposite();
        assert!(check_semilattice(&op).passed());
        assert!(op.leq(2, 0));
        assert_eq!(op.zero(), 2);
    }
}
