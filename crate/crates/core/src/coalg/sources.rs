//! Concrete coalgebras: from finitely decomposable monoid fragments, poset
//! incidence structures, and convex subsets.
//!
//! All three families live on free modules, so comultiplications are stored
//! on generators; the linear extension to the whole module is implicit and
//! the comonoid laws are decided on generators.

use super::BCoalgebra;
use crate::error::Error;
use crate::poset::{mask_name, Poset};
use crate::report::{Report, Witness};
use crate::semilattice::{free_module, FinSemilattice, TensorSpace};
use std::collections::BTreeSet;
use std::time::Instant;

/// A comultiplication on a free module, stored on generators. `Δ(g)` is a
/// finite sum of pure tensors of generators, and `ε(g)` a boolean; both
/// extend linearly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCoalgebra {
    pub generators: Vec<String>,
    pub delta: Vec<BTreeSet<(usize, usize)>>,
    pub counit: Option<Vec<bool>>,
}

impl FreeCoalgebra {
    pub fn size(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Check coassociativity and the counit laws on generators. Linear
    /// extension makes the morphism laws hold by construction, and linear
    /// maps out of a free module agree iff they agree on generators.
    pub fn check(&self) -> Report {
        let start = Instant::now();
        let mut report = Report::new(format!("free-coalgebra[{}]", self.size()));
        let w = |xs: &[usize]| -> Witness {
            xs.iter().map(|&g| self.generators[g].clone()).collect()
        };

        let mut coassoc = Vec::new();
        for g in 0..self.size() {
            let mut left = BTreeSet::new();
            let mut right = BTreeSet::new();
            for &(b, c) in &self.delta[g] {
                for &(b1, b2) in &self.delta[b] {
                    left.insert((b1, b2, c));
                }
                for &(c1, c2) in &self.delta[c] {
                    right.insert((b, c1, c2));
                }
            }
            if left != right {
                coassoc.push(w(&[g]));
            }
        }
        report.law("coassociativity", coassoc);

        if let Some(eps) = &self.counit {
            let mut counit = Vec::new();
            for g in 0..self.size() {
                let left: BTreeSet<usize> = self.delta[g]
                    .iter()
                    .filter(|&&(b, _)| eps[b])
                    .map(|&(_, c)| c)
                    .collect();
                let right: BTreeSet<usize> = self.delta[g]
                    .iter()
                    .filter(|&&(_, c)| eps[c])
                    .map(|&(b, _)| b)
                    .collect();
                let singleton: BTreeSet<usize> = [g].into();
                if left != singleton || right != singleton {
                    counit.push(w(&[g]));
                }
            }
            report.law("counit", counit);
        }
        report.elapsed = start.elapsed();
        report
    }

    pub fn is_cocommutative(&self) -> bool {
        self.delta
            .iter()
            .all(|d| d.iter().all(|&(a, b)| d.contains(&(b, a))))
    }

    /// Materialise into the general elementwise representation. Only viable
    /// for small generator counts.
    pub fn to_bcoalgebra(&self) -> Result<BCoalgebra, Error> {
        let n = self.size();
        if n > 12 {
            return Err(Error::Budget(format!("free module on {n} generators is too large")));
        }
        let gen_names: Vec<&str> = self.generators.iter().map(|s| s.as_str()).collect();
        let module = free_module(&gen_names);
        let space = TensorSpace::power(&module, 2);
        let irr = module.irreducibles();
        let irr_of_gen: Vec<usize> = (0..n)
            .map(|g| irr.iter().position(|&e| e == 1 << g).expect("atom"))
            .collect();
        let delta = (0..module.size())
            .map(|s| {
                let mut tuples = BTreeSet::new();
                for g in 0..n {
                    if s >> g & 1 == 1 {
                        tuples.extend(
                            self.delta[g]
                                .iter()
                                .map(|&(a, b)| vec![irr_of_gen[a], irr_of_gen[b]]),
                        );
                    }
                }
                space.saturate(tuples)
            })
            .collect();
        let counit = self.counit.as_ref().map(|eps| {
            (0..module.size())
                .map(|s| (0..n).any(|g| s >> g & 1 == 1 && eps[g]))
                .collect()
        });
        Ok(BCoalgebra {
            module,
            delta,
            counit,
        })
    }
}

/// A finite fragment of a monoid with complete decomposition data: for every
/// element `x` of the fragment, every factorisation `y₁·y₂ = x` of the
/// ambient monoid lies inside the fragment. Products that leave the fragment
/// are absent from the table.
#[derive(Debug, Clone)]
pub struct MonoidFragment {
    pub names: Vec<String>,
    /// `mul[x*n + y]`: the product when it stays inside the fragment.
    pub mul: Vec<Option<usize>>,
    pub unit: usize,
    /// Order relation for the ordered-comultiplication variant.
    pub leq: Option<Vec<bool>>,
    complete: bool,
}

impl MonoidFragment {
    pub fn new(
        names: Vec<String>,
        mul: Vec<Option<usize>>,
        unit: usize,
        leq: Option<Vec<bool>>,
        complete: bool,
    ) -> Result<Self, Error> {
        let n = names.len();
        if mul.len() != n * n || (leq.as_ref()).is_some_and(|l| l.len() != n * n) {
            return Err(Error::format("fragment table sizes do not match carrier"));
        }
        if mul.iter().flatten().any(|&v| v >= n) || unit >= n {
            return Err(Error::format("fragment entry outside carrier"));
        }
        Ok(MonoidFragment {
            names,
            mul,
            unit,
            leq,
            complete,
        })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn mul(&self, x: usize, y: usize) -> Option<usize> {
        self.mul[x * self.size() + y]
    }

    pub fn leq(&self, x: usize, y: usize) -> Option<bool> {
        self.leq.as_ref().map(|l| l[x * self.size() + y])
    }

    /// All factorisations of `x` inside the fragment.
    pub fn decompositions(&self, x: usize) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) == Some(x) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The additive fragment `{0..bound}` of the natural numbers, with its
    /// usual order.
    pub fn nat_additive(bound: usize) -> MonoidFragment {
        let n = bound + 1;
        let names = (0..n).map(|i| i.to_string()).collect();
        let mut mul = vec![None; n * n];
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if x + y <= bound {
                    mul[x * n + y] = Some(x + y);
                }
                leq[x * n + y] = x <= y;
            }
        }
        MonoidFragment {
            names,
            mul,
            unit: 0,
            leq: Some(leq),
            complete: true,
        }
    }

    /// Words of length at most `maxlen` over `alphabet`, under concatenation.
    pub fn words(alphabet: &[char], maxlen: usize) -> MonoidFragment {
        let mut words = vec![String::new()];
        for len in 1..=maxlen {
            let mut next = Vec::new();
            for w in words.iter().filter(|w| w.chars().count() == len - 1) {
                for &c in alphabet {
                    next.push(format!("{w}{c}"));
                }
            }
            words.extend(next);
        }
        let n = words.len();
        let index = |w: &str| words.iter().position(|v| v == w);
        let mut mul = vec![None; n * n];
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                if a.chars().count() + b.chars().count() <= maxlen {
                    mul[i * n + j] = index(&format!("{a}{b}"));
                }
            }
        }
        let names = words
            .iter()
            .map(|w| if w.is_empty() { "e".into() } else { w.clone() })
            .collect();
        MonoidFragment {
            names,
            mul,
            unit: 0,
            leq: None,
            complete: true,
        }
    }
}

/// Comultiplication on the free module over a finitely decomposable monoid
/// fragment: `Δ(x) = Σ_{y₁y₂=x} y₁⊗y₂`, or `Σ_{y₁y₂≤x}` for the ordered
/// variant. The plain variant carries the counit `ε = [x = e]`; the ordered
/// variant is coassociative over the booleans but has no counit.
pub fn coalgebra_from_monoid(frag: &MonoidFragment, ordered: bool) -> Result<FreeCoalgebra, Error> {
    if !frag.complete {
        return Err(Error::IncompleteDecomposition(
            "fragment does not declare complete decomposition data".into(),
        ));
    }
    if ordered && frag.leq.is_none() {
        return Err(Error::format("ordered comultiplication needs an order on the fragment"));
    }
    let n = frag.size();
    let mut delta: Vec<BTreeSet<(usize, usize)>> = vec![Default::default(); n];
    for x in 0..n {
        for a in 0..n {
            for b in 0..n {
                let hit = if ordered {
                    frag.mul(a, b).is_some_and(|p| frag.leq(p, x) == Some(true))
                } else {
                    frag.mul(a, b) == Some(x)
                };
                if hit {
                    delta[x].insert((a, b));
                }
            }
        }
    }
    let counit = if ordered {
        None
    } else {
        Some((0..n).map(|x| x == frag.unit).collect())
    };
    Ok(FreeCoalgebra {
        generators: frag.names.clone(),
        delta,
        counit,
    })
}

/// The incidence coalgebra of a finite poset: the free module on interval
/// generators `[x,y]`, with `Δ[x,y] = Σ_{x≤z≤y} [x,z]⊗[z,y]` and
/// `ε[x,y] = 1` iff `x = y`.
pub fn incidence_coalgebra(p: &Poset) -> FreeCoalgebra {
    let intervals = p.intervals(false);
    let generators: Vec<String> = intervals
        .iter()
        .map(|&(x, y)| format!("[p{x},p{y}]"))
        .collect();
    let gen_index = |x: usize, y: usize| intervals.binary_search(&(x, y)).unwrap();
    let mut delta: Vec<BTreeSet<(usize, usize)>> = vec![Default::default(); intervals.len()];
    for (g, &(x, y)) in intervals.iter().enumerate() {
        for z in 0..p.size() {
            if p.leq(x, z) && p.leq(z, y) {
                delta[g].insert((gen_index(x, z), gen_index(z, y)));
            }
        }
    }
    let counit = intervals.iter().map(|&(x, y)| x == y).collect();
    FreeCoalgebra {
        generators,
        delta,
        counit: Some(counit),
    }
}

/// Split style for the convex-subset coalgebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexMode {
    /// `Δ⁺`: splits `A = B ⊔ C` with `b ≤ c` for every `b ∈ B`, `c ∈ C`.
    Strict,
    /// `Δ⁻`: splits with no `b ∈ B`, `c ∈ C` such that `b > c`.
    Weak,
}

/// The coalgebra of convex subsets of a poset: the free module generated by
/// the convex subsets, with the comultiplication summing the ordered splits
/// of each generator and the counit supported on the empty subset.
pub fn convex_coalgebra(p: &Poset, mode: ConvexMode) -> FreeCoalgebra {
    let convex = p.convex_subsets();
    let index = |s: u32| convex.binary_search(&s).unwrap();
    let generators: Vec<String> = convex.iter().map(|&s| mask_name(s, p.size())).collect();
    let mut delta: Vec<BTreeSet<(usize, usize)>> = vec![Default::default(); convex.len()];
    for (g, &a) in convex.iter().enumerate() {
        for (b, c) in convex_splits(p, mode, a) {
            delta[g].insert((index(b), index(c)));
        }
    }
    let counit = convex.iter().map(|&s| s == 0).collect();
    FreeCoalgebra {
        generators,
        delta,
        counit: Some(counit),
    }
}

/// The ordered splits `A = B ⊔ C` summed by `Δ⁺` (strict) or `Δ⁻` (weak).
/// Both parts of a split of a convex set are themselves convex.
pub fn convex_splits(p: &Poset, mode: ConvexMode, a: u32) -> Vec<(u32, u32)> {
    let members: Vec<usize> = (0..p.size()).filter(|&e| a >> e & 1 == 1).collect();
    let mut out = Vec::new();
    for bits in 0u32..(1 << members.len()) {
        let b: u32 = members
            .iter()
            .enumerate()
            .filter(|&(k, _)| bits >> k & 1 == 1)
            .map(|(_, &e)| 1 << e)
            .sum();
        let c = a & !b;
        let ok = members.iter().all(|&x| {
            members.iter().all(|&y| {
                b >> x & 1 == 0
                    || c >> y & 1 == 0
                    || match mode {
                        ConvexMode::Strict => p.leq(x, y),
                        ConvexMode::Weak => !p.lt(y, x),
                    }
            })
        });
        if ok {
            out.push((b, c));
        }
    }
    out.sort();
    out
}

/// The intersection semilattice of convex subsets (with the whole poset as
/// neutral element): the module structure the convex subsets carry on their
/// own, independent of the free module the coalgebra lives on.
pub fn convex_semilattice(p: &Poset) -> FinSemilattice {
    let convex = p.convex_subsets();
    let size = convex.len();
    let index = |s: u32| convex.binary_search(&s).unwrap();
    let full: u32 = if p.size() == 0 { 0 } else { (1 << p.size()) - 1 };
    let names: Vec<String> = convex.iter().map(|&s| mask_name(s, p.size())).collect();
    let mut join = vec![0; size * size];
    for (i, &a) in convex.iter().enumerate() {
        for (j, &b) in convex.iter().enumerate() {
            join[i * size + j] = index(a & b);
        }
    }
    FinSemilattice::new(names, join, index(full)).expect("well-formed table")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::check_coalgebra;
    use crate::semilattice::check_semilattice;

    #[test]
    fn word_fragment_delta_of_ab() {
        let frag = MonoidFragment::words(&['a', 'b'], 2);
        let c = coalgebra_from_monoid(&frag, false).unwrap();
        let ab = c.generator_index("ab").unwrap();
        let (e, a, b) = (
            c.generator_index("e").unwrap(),
            c.generator_index("a").unwrap(),
            c.generator_index("b").unwrap(),
        );
        assert_eq!(c.delta[ab], BTreeSet::from([(e, ab), (a, b), (ab, e)]));
        assert!(c.check().passed());
    }

    #[test]
    fn unit_generator_splits_trivially() {
        let frag = MonoidFragment::words(&['a'], 1);
        let c = coalgebra_from_monoid(&frag, false).unwrap();
        let e = c.generator_index("e").unwrap();
        assert_eq!(c.delta[e], BTreeSet::from([(e, e)]));
    }

    #[test]
    fn ordered_nat_variant_is_coassociative_without_counit() {
        let frag = MonoidFragment::nat_additive(3);
        let c = coalgebra_from_monoid(&frag, true).unwrap();
        assert!(c.counit.is_none());
        let two = c.generator_index("2").unwrap();
        // all y1+y2 <= 2 pairs: (0,0),(0,1),(1,0),(0,2),(2,0),(1,1)
        assert_eq!(c.delta[two].len(), 6);
        let r = c.check();
        assert!(r.passed());
        assert!(r.law_holds("coassociativity"));
        assert!(c.is_cocommutative());
    }

    #[test]
    fn incidence_on_point_and_chains() {
        let c = incidence_coalgebra(&Poset::chain(1));
        assert_eq!(c.size(), 1);
        assert_eq!(c.delta[0], BTreeSet::from([(0, 0)]));
        assert!(c.check().passed());

        let c = incidence_coalgebra(&Poset::chain(2));
        let g = c.generator_index("[p0,p1]").unwrap();
        assert_eq!(c.delta[g].len(), 2);
        assert!(c.check().passed());

        // three middle terms for the long interval of the 3-chain
        let c = incidence_coalgebra(&Poset::chain(3));
        let g = c.generator_index("[p0,p2]").unwrap();
        assert_eq!(c.delta[g].len(), 3);
        assert!(c.check().passed());
    }

    #[test]
    fn free_checker_agrees_with_elementwise_checker() {
        for p in [Poset::chain(2), Poset::antichain(2), Poset::chain(3)] {
            let free = incidence_coalgebra(&p);
            if free.size() <= 8 {
                let full = free.to_bcoalgebra().unwrap();
                assert_eq!(free.check().passed(), check_coalgebra(&full).passed());
            }
        }
    }

    #[test]
    fn convex_on_antichain_strict_and_weak() {
        let p = Poset::antichain(2);
        let full = 0b11u32;
        // strict: only the trivial splits of {a,b}
        assert_eq!(convex_splits(&p, ConvexMode::Strict, full), vec![(0, full), (full, 0)]);
        // weak: additionally {a}⊗{b} and {b}⊗{a}
        assert_eq!(
            convex_splits(&p, ConvexMode::Weak, full),
            vec![(0, full), (0b01, 0b10), (0b10, 0b01), (full, 0)]
        );
        let strict = convex_coalgebra(&p, ConvexMode::Strict);
        let weak = convex_coalgebra(&p, ConvexMode::Weak);
        assert!(strict.check().passed());
        assert!(weak.check().passed());
        // ε is supported exactly on the empty subset
        let empty = strict.generator_index("∅").unwrap();
        assert!(strict.counit.as_ref().unwrap()[empty]);
        assert_eq!(strict.counit.as_ref().unwrap().iter().filter(|&&v| v).count(), 1);
    }

    #[test]
    fn convex_intersection_semilattice_is_a_lattice_but_not_the_coalgebra_carrier() {
        // the intersection module of the 2-chain: a lattice, but Δ⁺ is not a
        // module morphism for it, since Δ⁺(P) ≠ 0 while P is its zero
        let p = Poset::chain(2);
        let m = convex_semilattice(&p);
        assert!(check_semilattice(&m).passed());
        let full = m.index_of("{p0,p1}").unwrap();
        assert_eq!(m.zero(), full);
        let splits = convex_splits(&p, ConvexMode::Strict, 0b11);
        // the split {a}⊗{b} is a nonzero pure tensor in the intersection
        // module, so Δ⁺(zero) would be nonzero there
        assert!(splits.contains(&(0b01, 0b10)));
    }

    #[test]
    fn convex_handles_the_empty_poset() {
        let c = convex_coalgebra(&Poset::antichain(0), ConvexMode::Strict);
        assert_eq!(c.size(), 1);
        assert!(c.check().passed());
    }
}
