//! Exhaustive library of small lattices.
//!
//! Every finite join-semilattice with least element is a complete lattice,
//! so the library enumerates all lattices on `n` unlabelled points: strict
//! upper-triangular order matrices (every poset admits such a labelling) are
//! transitively closed, filtered to lattices, and deduplicated up to
//! isomorphism by a canonical form.

use super::FinSemilattice;

/// All lattices with exactly `n` elements, up to isomorphism, in a
/// deterministic order. Supported for `1 ≤ n ≤ 7`.
pub fn all_lattices(n: usize) -> Vec<FinSemilattice> {
    assert!((1..=7).contains(&n), "lattice library supports 1..=7 elements");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut canonical = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut lt = vec![false; n * n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                lt[i * n + j] = true;
            }
        }
        transitive_close(&mut lt, n);
        let Some(zero) = (0..n).find(|&z| (0..n).all(|x| z == x || lt[z * n + x])) else {
            continue;
        };
        let Some(join) = join_table(&lt, n) else {
            continue;
        };
        let canon = canonical_form(&lt, n);
        if canonical.insert(canon) {
            let names = (0..n).map(|i| format!("e{i}")).collect();
            out.push(FinSemilattice { names, join, zero });
        }
    }
    out
}

fn transitive_close(lt: &mut [bool], n: usize) {
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i * n + k] && lt[k * n + j] {
                    lt[i * n + j] = true;
                }
            }
        }
    }
}

/// Join table of a strict order if every pair has a least upper bound.
fn join_table(lt: &[bool], n: usize) -> Option<Vec<usize>> {
    let leq = |x: usize, y: usize| x == y || lt[x * n + y];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut best: Option<usize> = None;
            for u in 0..n {
                if leq(x, u) && leq(y, u) && !(0..n).any(|v| leq(x, v) && leq(y, v) && lt[v * n + u]) {
                    if best.is_some() {
                        return None; // two minimal upper bounds
                    }
                    best = Some(u);
                }
            }
            join[x * n + y] = best?;
        }
    }
    Some(join)
}

/// Minimal adjacency encoding over all permutations.
fn canonical_form(lt: &[bool], n: usize) -> Vec<bool> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    permute(&mut perm, 0, &mut |p| {
        let enc: Vec<bool> = (0..n)
            .flat_map(|i| (0..n).map(move |j| lt[p[i] * n + p[j]]))
            .collect();
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    });
    best.unwrap()
}

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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilattice::check_semilattice;

    #[test]
    fn lattice_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=6).map(|n| all_lattices(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn library_members_pass_the_law_check() {
        for n in 1..=5 {
            for m in all_lattices(n) {
                assert!(check_semilattice(&m).passed());
            }
        }
    }
}
