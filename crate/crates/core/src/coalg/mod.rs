//! Algebras, coalgebras and double algebras over the boolean semiring.
//!
//! A boolean algebra structure (a dioid) is a module with a bilinear,
//! associative, unital multiplication; a coalgebra is the formal dual with a
//! comultiplication into the tensor square; a double algebra carries two
//! multiplications linked by the lax interchange inequalities.

mod convolution;
mod graded;
mod sources;

pub use convolution::{convolution, ConvolutionAlgebra};
pub use graded::{graded_ops, GradedModule, GradedOpsReport};
pub use sources::{
    coalgebra_from_monoid, convex_coalgebra, convex_semilattice, convex_splits,
    incidence_coalgebra, ConvexMode, FreeCoalgebra, MonoidFragment,
};

use crate::error::Error;
use crate::report::{Report, Witness};
use crate::semilattice::{FinSemilattice, TensorElt, TensorSpace};
use std::time::Instant;

/// A dioid: a module with a bilinear associative unital multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BAlgebra {
    pub module: FinSemilattice,
    /// Row-major multiplication table.
    pub mult: Vec<usize>,
    pub one: usize,
}

impl BAlgebra {
    pub fn new(module: FinSemilattice, mult: Vec<usize>, one: usize) -> Result<Self, Error> {
        let n = module.size();
        if mult.len() != n * n {
            return Err(Error::format(format!(
                "multiplication table has {} entries, expected {}",
                mult.len(),
                n * n
            )));
        }
        if mult.iter().any(|&e| e >= n) || one >= n {
            return Err(Error::format("multiplication entry outside carrier"));
        }
        Ok(BAlgebra { module, mult, one })
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.module.size() + y]
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.module.size();
        (0..n).all(|x| (x..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

/// Check bilinearity (distribution over joins plus annihilation of zero),
/// associativity and unitality of a candidate algebra.
pub fn check_algebra(a: &BAlgebra) -> Report {
    let start = Instant::now();
    let m = &a.module;
    let n = m.size();
    let mut report = Report::new(format!("b-algebra[{n}]"));
    let w = |xs: &[usize]| -> Witness { xs.iter().map(|&x| m.name(x).to_string()).collect() };

    let mut annih = Vec::new();
    let mut distl = Vec::new();
    let mut distr = Vec::new();
    let mut assoc = Vec::new();
    let mut unit = Vec::new();
    for x in 0..n {
        if a.mul(x, m.zero()) != m.zero() || a.mul(m.zero(), x) != m.zero() {
            annih.push(w(&[x]));
        }
        if a.mul(a.one, x) != x || a.mul(x, a.one) != x {
            unit.push(w(&[x]));
        }
        for y in 0..n {
            for z in 0..n {
                if a.mul(x, m.join(y, z)) != m.join(a.mul(x, y), a.mul(x, z)) {
                    distl.push(w(&[x, y, z]));
                }
                if a.mul(m.join(y, z), x) != m.join(a.mul(y, x), a.mul(z, x)) {
                    distr.push(w(&[x, y, z]));
                }
                if a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)) {
                    assoc.push(w(&[x, y, z]));
                }
            }
        }
    }
    report.law("annihilation", annih);
    report.law("left-distributivity", distl);
    report.law("right-distributivity", distr);
    report.law("associativity", assoc);
    report.law("unit", unit);
    report.elapsed = start.elapsed();
    report
}

/// A comonoid in modules: comultiplication into the tensor square and an
/// optional counit (the ordered monoid-fragment variant is coassociative but
/// has no counit).
#[derive(Debug, Clone)]
pub struct BCoalgebra {
    pub module: FinSemilattice,
    /// `Δ(x)` for every element `x`, as elements of `module ⊗ module`.
    pub delta: Vec<TensorElt>,
    /// `ε(x)` for every element, when a counit exists.
    pub counit: Option<Vec<bool>>,
}

impl BCoalgebra {
    pub fn space(&self) -> TensorSpace {
        TensorSpace::power(&self.module, 2)
    }
}

/// Apply `Δ ⊗ id` (axis 0) or `id ⊗ Δ` (axis 1) to a tensor-square element,
/// landing in the tensor cube.
fn expand_delta(
    c: &BCoalgebra,
    s2: &TensorSpace,
    s3: &TensorSpace,
    e: &TensorElt,
    axis: usize,
) -> TensorElt {
    let irr = s2.irreducibles(0);
    let mut tuples = std::collections::BTreeSet::new();
    for t in e.tuples() {
        let expanded = &c.delta[irr[t[axis]]];
        for u in expanded.tuples() {
            let tri = if axis == 0 {
                vec![u[0], u[1], t[1]]
            } else {
                vec![t[0], u[0], u[1]]
            };
            tuples.insert(tri);
        }
    }
    s3.saturate(tuples)
}

/// Check comodule-morphism laws, coassociativity, and (when a counit is
/// present) the counit laws.
pub fn check_coalgebra(c: &BCoalgebra) -> Report {
    let start = Instant::now();
    let m = &c.module;
    let n = m.size();
    let s2 = c.space();
    let s3 = TensorSpace::power(m, 3);
    let mut report = Report::new(format!("b-coalgebra[{n}]"));
    let w = |xs: &[usize]| -> Witness { xs.iter().map(|&x| m.name(x).to_string()).collect() };

    let mut morph = Vec::new();
    if !c.delta[m.zero()].is_zero() {
        morph.push(w(&[m.zero()]));
    }
    for x in 0..n {
        for y in x..n {
            if c.delta[m.join(x, y)] != s2.join(&c.delta[x], &c.delta[y]) {
                morph.push(w(&[x, y]));
            }
        }
    }
    report.law("comultiplication-morphism", morph);

    let mut coassoc = Vec::new();
    for x in 0..n {
        let left = expand_delta(c, &s2, &s3, &c.delta[x], 0);
        let right = expand_delta(c, &s2, &s3, &c.delta[x], 1);
        if left != right {
            coassoc.push(w(&[x]));
        }
    }
    report.law("coassociativity", coassoc);

    if let Some(eps) = &c.counit {
        let mut morph = Vec::new();
        if eps[m.zero()] {
            morph.push(w(&[m.zero()]));
        }
        for x in 0..n {
            for y in x..n {
                if eps[m.join(x, y)] != (eps[x] || eps[y]) {
                    morph.push(w(&[x, y]));
                }
            }
        }
        report.law("counit-morphism", morph);

        let irr = s2.irreducibles(0);
        let mut counit = Vec::new();
        for x in 0..n {
            let left = m.join_all(
                c.delta[x]
                    .tuples()
                    .iter()
                    .filter(|t| eps[irr[t[0]]])
                    .map(|t| irr[t[1]]),
            );
            let right = m.join_all(
                c.delta[x]
                    .tuples()
                    .iter()
                    .filter(|t| eps[irr[t[1]]])
                    .map(|t| irr[t[0]]),
            );
            if left != x || right != x {
                counit.push(w(&[x]));
            }
        }
        report.law("counit", counit);
    }
    report.elapsed = start.elapsed();
    report
}

/// Whether the comultiplication is invariant under the tensor swap.
pub fn is_cocommutative(c: &BCoalgebra) -> bool {
    let s2 = c.space();
    c.delta.iter().all(|d| s2.transpose(d) == *d)
}

/// A module with two interchange-linked multiplications (a concurrent
/// dioid).
#[derive(Debug, Clone)]
pub struct DoubleBAlgebra {
    pub module: FinSemilattice,
    pub mult1: Vec<usize>,
    pub one1: usize,
    pub mult2: Vec<usize>,
    pub one2: usize,
}

impl DoubleBAlgebra {
    pub fn first(&self) -> BAlgebra {
        BAlgebra {
            module: self.module.clone(),
            mult: self.mult1.clone(),
            one: self.one1,
        }
    }

    pub fn second(&self) -> BAlgebra {
        BAlgebra {
            module: self.module.clone(),
            mult: self.mult2.clone(),
            one: self.one2,
        }
    }
}

/// Check both algebra suites and the four lax interchange laws:
/// `(w·₂x)·₁(y·₂z) ≤ (w·₁y)·₂(x·₁z)`, `1₂·₁1₂ ≤ 1₂`, `1₁ ≤ 1₁·₂1₁` and
/// `1₁ ≤ 1₂`.
pub fn check_double_algebra(d: &DoubleBAlgebra) -> Report {
    let start = Instant::now();
    let m = &d.module;
    let n = m.size();
    let a1 = d.first();
    let a2 = d.second();
    let mut report = Report::new(format!("double-b-algebra[{n}]"));
    for (prefix, sub) in [("first", check_algebra(&a1)), ("second", check_algebra(&a2))] {
        for law in sub.laws {
            report.law(format!("{prefix}-{}", law.law), law.witnesses);
        }
    }
    let w = |xs: &[usize]| -> Witness { xs.iter().map(|&x| m.name(x).to_string()).collect() };

    let mut chi = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for v in 0..n {
                    let lhs = a1.mul(a2.mul(x, y), a2.mul(z, v));
                    let rhs = a2.mul(a1.mul(x, z), a1.mul(y, v));
                    if !m.leq(lhs, rhs) {
                        chi.push(w(&[x, y, z, v]));
                    }
                }
            }
        }
    }
    report.law("chi-interchange", chi);

    let mut units = Vec::new();
    if !m.leq(a1.mul(d.one2, d.one2), d.one2) {
        units.push(vec!["1_2 ._1 1_2 ≤ 1_2".to_string()]);
    }
    report.law("nu-unit", units);
    let mut units = Vec::new();
    if !m.leq(d.one1, a2.mul(d.one1, d.one1)) {
        units.push(vec!["1_1 ≤ 1_1 ._2 1_1".to_string()]);
    }
    report.law("zeta-unit", units);
    let mut units = Vec::new();
    if !m.leq(d.one1, d.one2) {
        units.push(vec!["1_1 ≤ 1_2".to_string()]);
    }
    report.law("iota-unit", units);
    report.elapsed = start.elapsed();
    report
}

/// Counts of commutative multiplicative structures on a module, under every
/// convention the enumeration distinguishes. `dioid_*` requires the
/// multiplication to distribute over joins and annihilate zero;
/// `po_monoid_*` requires only order preservation (the monoidal-lattice
/// laws). `*_iso_classes` counts orbits under lattice automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraCounts {
    pub dioid: usize,
    pub dioid_unital: usize,
    pub po_monoid: usize,
    pub po_monoid_unital: usize,
    pub po_monoid_unital_iso_classes: usize,
}

/// Counts of cocommutative comultiplications on a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraCounts {
    pub cocommutative_morphisms: usize,
    pub coassociative: usize,
    /// Full coalgebras: coassociative and admitting a counit.
    pub counital: usize,
}

const COUNT_BUDGET: u64 = 50_000_000;

/// Exhaustively count commutative algebra structures on `m`.
pub fn count_comm_algebras(m: &FinSemilattice) -> Result<AlgebraCounts, Error> {
    if m.size() > 6 {
        return Err(Error::Budget(format!(
            "algebra enumeration supports at most 6 elements, got {}",
            m.size()
        )));
    }
    let n = m.size();
    // enumerate all monotone symmetric tables by backtracking over the cells
    // of the closed upper triangle, in a linear extension of the product
    // order so monotonicity prunes prefixes
    let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let height = |x: usize| (0..n).filter(|&y| m.leq(y, x)).count();
    cells.sort_by_key(|&(i, j)| height(i) + height(j));
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
    for (k, &(i, j)) in cells.iter().enumerate() {
        for (k2, &(a, b)) in cells.iter().enumerate() {
            if k2 != k && ((m.leq(a, i) && m.leq(b, j)) || (m.leq(b, i) && m.leq(a, j))) {
                preds[k].push(k2);
            }
        }
    }
    let mut counts = AlgebraCounts {
        dioid: 0,
        dioid_unital: 0,
        po_monoid: 0,
        po_monoid_unital: 0,
        po_monoid_unital_iso_classes: 0,
    };
    let autos = automorphisms(m);
    let mut reps = std::collections::BTreeSet::new();
    let mut vals = vec![0usize; cells.len()];
    let mut budget = COUNT_BUDGET;
    backtrack(m, &cells, &preds, &mut vals, 0, &mut budget, &mut |table| {
        if !is_assoc(n, table) {
            return;
        }
        let unital = (0..n).any(|e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x));
        let bilin = is_bilinear(m, table);
        if bilin {
            counts.dioid += 1;
            if unital {
                counts.dioid_unital += 1;
            }
        }
        counts.po_monoid += 1;
        if unital {
            counts.po_monoid_unital += 1;
            let canon = autos
                .iter()
                .map(|p| {
                    let mut inv = vec![0; n];
                    for (i, &pi) in p.iter().enumerate() {
                        inv[pi] = i;
                    }
                    (0..n * n)
                        .map(|k| p[table[inv[k / n] * n + inv[k % n]]])
                        .collect::<Vec<usize>>()
                })
                .min()
                .unwrap();
            if reps.insert(canon) {
                counts.po_monoid_unital_iso_classes += 1;
            }
        }
    })?;
    Ok(counts)
}

fn backtrack(
    m: &FinSemilattice,
    cells: &[(usize, usize)],
    preds: &[Vec<usize>],
    vals: &mut Vec<usize>,
    k: usize,
    budget: &mut u64,
    emit: &mut impl FnMut(&[usize]),
) -> Result<(), Error> {
    let n = m.size();
    if k == cells.len() {
        let mut table = vec![0usize; n * n];
        for (idx, &(i, j)) in cells.iter().enumerate() {
            table[i * n + j] = vals[idx];
            table[j * n + i] = vals[idx];
        }
        emit(&table);
        return Ok(());
    }
    for v in 0..n {
        if *budget == 0 {
            return Err(Error::Budget("algebra enumeration node budget exhausted".into()));
        }
        *budget -= 1;
        let ok = preds[k].iter().all(|&k2| k2 >= k || m.leq(vals[k2], v));
        if ok {
            vals[k] = v;
            backtrack(m, cells, preds, vals, k + 1, budget, emit)?;
        }
    }
    Ok(())
}

fn is_assoc(n: usize, t: &[usize]) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]]))
    })
}

fn is_bilinear(m: &FinSemilattice, t: &[usize]) -> bool {
    let n = m.size();
    (0..n).all(|x| t[x * n + m.zero()] == m.zero() && t[m.zero() * n + x] == m.zero())
        && (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    t[x * n + m.join(y, z)] == m.join(t[x * n + y], t[x * n + z])
                        && t[m.join(y, z) * n + x] == m.join(t[y * n + x], t[z * n + x])
                })
            })
        })
}

/// All automorphisms of a module, as permutation tables.
pub fn automorphisms(m: &FinSemilattice) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, f);
            items.swap(k, i);
        }
    }
    permute(&mut perm, 0, &mut |p| {
        if (0..n).all(|x| (0..n).all(|y| p[m.join(x, y)] == m.join(p[x], p[y]))) {
            out.push(p.to_vec());
        }
    });
    out
}

/// Exhaustively count cocommutative comultiplications on `m`. Candidates are
/// generated from symmetric tensor-square values on the join-irreducibles
/// and filtered by the comodule-morphism law.
pub fn count_cocomm_coalgebras(m: &FinSemilattice) -> Result<CoalgebraCounts, Error> {
    if m.size() > 6 {
        return Err(Error::Budget(format!(
            "coalgebra enumeration supports at most 6 elements, got {}",
            m.size()
        )));
    }
    let t = crate::semilattice::tensor(m, m);
    let s2 = &t.space;
    let symmetric: Vec<&TensorElt> = t
        .elems
        .iter()
        .filter(|e| s2.transpose(e) == **e)
        .collect();
    let irr = m.irreducibles();
    let combos = (symmetric.len() as u64).checked_pow(irr.len() as u32);
    if combos.is_none_or(|c| c > 2_000_000) {
        return Err(Error::Budget(format!(
            "coalgebra enumeration would visit {}^{} candidates",
            symmetric.len(),
            irr.len()
        )));
    }
    let below: Vec<Vec<usize>> = (0..m.size())
        .map(|x| (0..irr.len()).filter(|&ji| m.leq(irr[ji], x)).collect())
        .collect();
    let counit_candidates = crate::semilattice::enumerate_homs(m, &FinSemilattice::bool2());
    let mut counts = CoalgebraCounts {
        cocommutative_morphisms: 0,
        coassociative: 0,
        counital: 0,
    };
    let mut assign = vec![0usize; irr.len()];
    loop {
        let delta: Vec<TensorElt> = below
            .iter()
            .map(|js| s2.join_all(js.iter().map(|&ji| symmetric[assign[ji]])))
            .collect();
        // morphism law: join extension must reproduce the assigned values
        let consistent = (0..irr.len()).all(|ji| delta[irr[ji]] == *symmetric[assign[ji]])
            && (0..m.size()).all(|x| {
                (x..m.size()).all(|y| delta[m.join(x, y)] == s2.join(&delta[x], &delta[y]))
            });
        if consistent {
            counts.cocommutative_morphisms += 1;
            let cand = BCoalgebra {
                module: m.clone(),
                delta: delta.clone(),
                counit: None,
            };
            let rep = check_coalgebra(&cand);
            if rep.law_holds("coassociativity") {
                counts.coassociative += 1;
                let found = counit_candidates.iter().any(|eps| {
                    let c = BCoalgebra {
                        module: m.clone(),
                        delta: delta.clone(),
                        counit: Some(eps.iter().map(|&v| v == 1).collect()),
                    };
                    check_coalgebra(&c).passed()
                });
                if found {
                    counts.counital += 1;
                }
            }
        }
        let mut k = irr.len();
        loop {
            if k == 0 {
                return Ok(counts);
            }
            k -= 1;
            assign[k] += 1;
            if assign[k] < symmetric.len() {
                break;
            }
            assign[k] = 0;
        }
    }
}

/// The four bimonoid compatibility diagrams between an algebra and a
/// coalgebra on the same module, checked elementwise.
pub fn check_bialgebra(a: &BAlgebra, c: &BCoalgebra) -> Report {
    let start = Instant::now();
    let m = &a.module;
    let s2 = c.space();
    let irr = s2.irreducibles(0);
    let mut report = Report::new(format!("b-bialgebra[{}]", m.size()));
    assert_eq!(a.module, c.module, "bialgebra check needs a shared module");
    let w = |xs: &[usize]| -> Witness { xs.iter().map(|&x| m.name(x).to_string()).collect() };

    // Δ(xy) = Δ(x)Δ(y) with the middle swap; both sides are bilinear in
    // (x,y), so irreducible pairs suffice
    let mut mult_compat = Vec::new();
    for jx in irr.iter().copied() {
        for jy in irr.iter().copied() {
            let lhs = &c.delta[a.mul(jx, jy)];
            let mut tuples = std::collections::BTreeSet::new();
            for t in c.delta[jx].tuples() {
                for u in c.delta[jy].tuples() {
                    let prod = s2.pure(&[a.mul(irr[t[0]], irr[u[0]]), a.mul(irr[t[1]], irr[u[1]])]);
                    tuples.extend(prod.tuples().iter().cloned());
                }
            }
            let rhs = s2.saturate(tuples);
            if *lhs != rhs {
                mult_compat.push(w(&[jx, jy]));
            }
        }
    }
    report.law("comultiplication-of-product", mult_compat);

    let eps = c.counit.as_ref();
    let mut unit_compat = Vec::new();
    if c.delta[a.one] != s2.pure(&[a.one, a.one]) {
        unit_compat.push(w(&[a.one]));
    }
    report.law("comultiplication-of-unit", unit_compat);

    if let Some(eps) = eps {
        let mut counit_unit = Vec::new();
        if !eps[a.one] {
            counit_unit.push(w(&[a.one]));
        }
        report.law("counit-of-unit", counit_unit);
        let mut counit_mult = Vec::new();
        for x in 0..m.size() {
            for y in 0..m.size() {
                if eps[a.mul(x, y)] != (eps[x] && eps[y]) {
                    counit_mult.push(w(&[x, y]));
                }
            }
        }
        report.law("counit-of-product", counit_mult);
    }
    report.elapsed = start.elapsed();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::free_module;

    fn meet_algebra(m: &FinSemilattice) -> BAlgebra {
        let n = m.size();
        let mut mult = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                mult[x * n + y] = m.meet(x, y);
            }
        }
        BAlgebra {
            module: m.clone(),
            mult,
            one: m.top(),
        }
    }

    #[test]
    fn meet_on_distributive_lattice_is_an_algebra() {
        let m = free_module(&["a", "b"]);
        assert!(check_algebra(&meet_algebra(&m)).passed());
    }

    #[test]
    fn meet_on_diamond_fails_distributivity() {
        let m = FinSemilattice::diamond(3);
        let r = check_algebra(&meet_algebra(&m));
        assert!(!r.passed());
        assert!(!r.law_holds("left-distributivity"));
    }

    #[test]
    fn bool_algebra_counts() {
        let c = count_comm_algebras(&FinSemilattice::bool2()).unwrap();
        assert_eq!(c.dioid_unital, 1);
        assert_eq!(c.dioid, 2);
        // join and product are the two unital monotone structures
        assert_eq!(c.po_monoid_unital, 2);
        assert_eq!(c.po_monoid_unital_iso_classes, 2);
    }

    #[test]
    fn m_five_algebra_counts() {
        let c = count_comm_algebras(&FinSemilattice::m_five()).unwrap();
        assert_eq!(c.dioid, 150);
        assert_eq!(c.dioid_unital, 39);
        assert_eq!(c.po_monoid, 1128);
        assert_eq!(c.po_monoid_unital, 238);
        assert_eq!(c.po_monoid_unital_iso_classes, 50);
    }

    #[test]
    fn budget_guard_refuses_large_modules() {
        let m = free_module(&["a", "b", "c"]);
        assert!(matches!(count_comm_algebras(&m), Err(Error::Budget(_))));
    }
}
