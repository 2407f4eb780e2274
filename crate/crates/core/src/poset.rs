//! Plain finite posets: the unlabelled substrate for incidence and convex
//! coalgebras, downset lattices and interval sets.

use crate::semilattice::FinSemilattice;

/// A finite strict poset on `0..n`, stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    lt: Vec<bool>,
}

impl Poset {
    /// Build from strict-order pairs; closes transitively. Returns `None` if
    /// the closure is not irreflexive (a cycle).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Option<Poset> {
        let mut lt = vec![false; n * n];
        for &(a, b) in pairs {
            assert!(a < n && b < n);
            lt[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if lt[i * n + k] && lt[k * n + j] {
                        lt[i * n + j] = true;
                    }
                }
            }
        }
        if (0..n).any(|i| lt[i * n + i]) {
            return None;
        }
        Some(Poset { n, lt })
    }

    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_pairs(n, &pairs).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_pairs(n, &[]).unwrap()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.lt[a * self.n + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn opposite(&self) -> Poset {
        let mut lt = vec![false; self.n * self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                lt[a * self.n + b] = self.lt(b, a);
            }
        }
        Poset { n: self.n, lt }
    }

    /// All down-closed subsets, as bitmasks in ascending order.
    pub fn downsets(&self) -> Vec<u32> {
        assert!(self.n <= 16);
        (0u32..1 << self.n)
            .filter(|&s| {
                (0..self.n).all(|y| {
                    s >> y & 1 == 0 || (0..self.n).all(|x| !self.lt(x, y) || s >> x & 1 == 1)
                })
            })
            .collect()
    }

    /// The downset lattice `𝔻P` under union.
    pub fn downset_lattice(&self) -> FinSemilattice {
        let sets = self.downsets();
        let index = |s: u32| sets.binary_search(&s).unwrap();
        let size = sets.len();
        let names: Vec<String> = sets.iter().map(|&s| mask_name(s, self.n)).collect();
        let mut join = vec![0; size * size];
        for (i, &a) in sets.iter().enumerate() {
            for (j, &b) in sets.iter().enumerate() {
                join[i * size + j] = index(a | b);
            }
        }
        FinSemilattice::new(names, join, index(0)).unwrap()
    }

    /// All convex subsets (if `x ≤ z ≤ y` with `x, y` in the set, so is `z`),
    /// as bitmasks in ascending order.
    pub fn convex_subsets(&self) -> Vec<u32> {
        assert!(self.n <= 16);
        (0u32..1 << self.n)
            .filter(|&s| {
                (0..self.n).all(|z| {
                    s >> z & 1 == 1
                        || !(0..self.n).any(|x| {
                            s >> x & 1 == 1
                                && self.lt(x, z)
                                && (0..self.n).any(|y| s >> y & 1 == 1 && self.lt(z, y))
                        })
                })
            })
            .collect()
    }

    /// Interval pairs `x ≤ y` (or `x < y` when `strict`).
    pub fn intervals(&self, strict: bool) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if if strict { self.lt(x, y) } else { self.leq(x, y) } {
                    out.push((x, y));
                }
            }
        }
        out.sort();
        out
    }

    /// Number of linear extensions.
    pub fn linear_extension_count(&self) -> usize {
        let mut placed = vec![false; self.n];
        self.lin_count(&mut placed, 0)
    }

    fn lin_count(&self, placed: &mut Vec<bool>, done: usize) -> usize {
        if done == self.n {
            return 1;
        }
        let mut total = 0;
        for x in 0..self.n {
            if !placed[x] && (0..self.n).all(|y| placed[y] || !self.lt(y, x)) {
                placed[x] = true;
                total += self.lin_count(placed, done + 1);
                placed[x] = false;
            }
        }
        total
    }

    fn canonical(&self) -> Vec<bool> {
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut best: Option<Vec<bool>> = None;
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
        let n = self.n;
        permute(&mut perm, 0, &mut |p| {
            let enc: Vec<bool> = (0..n)
                .flat_map(|i| (0..n).map(|j| self.lt(p[i], p[j])).collect::<Vec<_>>())
                .collect();
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        });
        best.unwrap()
    }
}

pub fn mask_name(s: u32, n: usize) -> String {
    if s == 0 {
        return "∅".into();
    }
    let parts: Vec<String> = (0..n).filter(|i| s >> i & 1 == 1).map(|i| format!("p{i}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// All posets on `n` unlabelled points, up to isomorphism, deterministic
/// order. Supported for `n ≤ 6`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    assert!(n <= 6);
    if n == 0 {
        return vec![Poset { n: 0, lt: vec![] }];
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let p = Poset::from_pairs(n, &chosen).expect("upper-triangular orders are acyclic");
        if seen.insert(p.canonical()) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::check_semilattice;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16]);
    }

    #[test]
    fn downsets_of_chain_form_a_chain() {
        let d = Poset::chain(2).downset_lattice();
        assert_eq!(d.size(), 3);
        assert!(check_semilattice(&d).passed());
        for x in 0..3 {
            for y in 0..3 {
                assert!(d.leq(x, y) || d.leq(y, x));
            }
        }
    }

    #[test]
    fn intervals_of_chain_and_antichain() {
        assert_eq!(Poset::chain(2).intervals(false).len(), 3);
        assert_eq!(Poset::antichain(2).intervals(true).len(), 0);
    }

    #[test]
    fn linear_extensions_of_two_two_antichain_of_chains() {
        let p = Poset::from_pairs(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(p.linear_extension_count(), 6);
    }
}
