//! Graded modules over a monoid fragment, with the Cauchy-style graded
//! product and the pointwise product, and the interchange structure between
//! them.

use super::sources::MonoidFragment;
use crate::error::Error;
use crate::report::Report;
use crate::semilattice::{
    direct_sum, find_isomorphism, tensor, tensor_multi, FinSemilattice, TensorSpace,
};
use std::time::Instant;

/// A family of modules indexed by the elements of a monoid fragment.
#[derive(Debug, Clone)]
pub struct GradedModule {
    pub grading: MonoidFragment,
    pub components: Vec<FinSemilattice>,
}

impl GradedModule {
    pub fn new(grading: MonoidFragment, components: Vec<FinSemilattice>) -> Result<Self, Error> {
        if components.len() != grading.size() {
            return Err(Error::format(format!(
                "{} components for {} grades",
                components.len(),
                grading.size()
            )));
        }
        Ok(GradedModule { grading, components })
    }

    /// The graded unit: the booleans at the monoid unit, the zero module
    /// elsewhere.
    pub fn unit_graded(grading: &MonoidFragment) -> GradedModule {
        let components = (0..grading.size())
            .map(|m| {
                if m == grading.unit {
                    FinSemilattice::bool2()
                } else {
                    FinSemilattice::point()
                }
            })
            .collect();
        GradedModule {
            grading: grading.clone(),
            components,
        }
    }

    /// The pointwise unit: the booleans at every grade.
    pub fn unit_pointwise(grading: &MonoidFragment) -> GradedModule {
        GradedModule {
            grading: grading.clone(),
            components: vec![FinSemilattice::bool2(); grading.size()],
        }
    }
}

/// Graded (Cauchy) product: `(X ⊗ Y)_m = ⊕_{n₁n₂=m} X_{n₁} ⊗ Y_{n₂}`.
pub fn graded_product(x: &GradedModule, y: &GradedModule) -> GradedModule {
    let grading = x.grading.clone();
    let components = (0..grading.size())
        .map(|m| {
            let parts: Vec<FinSemilattice> = grading
                .decompositions(m)
                .iter()
                .map(|&(n1, n2)| tensor(&x.components[n1], &y.components[n2]).module)
                .collect();
            direct_sum_many(&parts)
        })
        .collect();
    GradedModule { grading, components }
}

/// Pointwise product: `(X ⊙ Y)_m = X_m ⊗ Y_m`.
pub fn pointwise_product(x: &GradedModule, y: &GradedModule) -> GradedModule {
    let grading = x.grading.clone();
    let components = (0..grading.size())
        .map(|m| tensor(&x.components[m], &y.components[m]).module)
        .collect();
    GradedModule { grading, components }
}

fn direct_sum_many(parts: &[FinSemilattice]) -> FinSemilattice {
    match parts {
        [] => FinSemilattice::point(),
        [one] => one.clone(),
        [head, tail @ ..] => direct_sum(head, &direct_sum_many(tail)),
    }
}

/// Everything `graded_ops` produces: both products, both units, and the
/// verification report for the interchange structure.
#[derive(Debug)]
pub struct GradedOpsReport {
    pub graded: GradedModule,
    pub pointwise: GradedModule,
    pub unit_graded: GradedModule,
    pub unit_pointwise: GradedModule,
    pub report: Report,
}

/// Compute both products of `x` and `y` and verify, per grade, that ζ is an
/// isomorphism, ν is the fold, ι is the identity at the unit grade, and the
/// interchange `χ_m: ⊕_d (X⊙Y)_{n₁} ⊗ (X⊙Y)_{n₂} → (X⊗X)_m ⊗ (Y⊗Y)_m` is an
/// injective module morphism (an inclusion of components).
pub fn graded_ops(x: &GradedModule, y: &GradedModule) -> Result<GradedOpsReport, Error> {
    if x.grading.size() != y.grading.size() {
        return Err(Error::format("graded modules over different fragments"));
    }
    let start = Instant::now();
    let grading = &x.grading;
    let mut report = Report::new("graded-interchange");

    let graded = graded_product(x, y);
    let pointwise = pointwise_product(x, y);
    let unit_graded = GradedModule::unit_graded(grading);
    let unit_pointwise = GradedModule::unit_pointwise(grading);

    // ζ: 𝟙 → 𝟙 ⊙ 𝟙 is an isomorphism at every grade
    let zeta_sq = pointwise_product(&unit_graded, &unit_graded);
    let mut zeta = Vec::new();
    for m in 0..grading.size() {
        if find_isomorphism(&unit_graded.components[m], &zeta_sq.components[m]).is_none() {
            zeta.push(vec![grading.names[m].clone()]);
        }
    }
    report.law("zeta-isomorphism", zeta);

    // ν: (𝟏 ⊗ 𝟏)_m = ⊕_d 𝔹⊗𝔹 → 𝔹 is the fold (join of coordinates),
    // a module morphism
    let one_sq = graded_product(&unit_pointwise, &unit_pointwise);
    let mut nu = Vec::new();
    for m in 0..grading.size() {
        let src = &one_sq.components[m];
        let k = grading.decompositions(m).len();
        // decode the ⊕-fold index into k boolean coordinates and fold
        let fold = |idx: usize| -> usize {
            let mut rest = idx;
            let mut any = 0;
            for pos in 0..k {
                let radix = 2usize.pow((k - pos - 1) as u32);
                let coord = rest / radix;
                rest %= radix;
                any |= coord;
            }
            any
        };
        let morphism = (0..src.size()).all(|a| {
            (0..src.size()).all(|b| fold(src.join(a, b)) == fold(a).max(fold(b)))
        });
        if !morphism {
            nu.push(vec![grading.names[m].clone()]);
        }
    }
    report.law("nu-fold-morphism", nu);

    // ι: identity at the unit grade, zero map elsewhere
    let mut iota = Vec::new();
    for m in 0..grading.size() {
        let ok = if m == grading.unit {
            unit_graded.components[m].size() == unit_pointwise.components[m].size()
        } else {
            unit_graded.components[m].size() == 1
        };
        if !ok {
            iota.push(vec![grading.names[m].clone()]);
        }
    }
    report.law("iota-unit-component", iota);

    // χ_m as an injective morphism, per grade
    let mut chi = Vec::new();
    for m in 0..grading.size() {
        if !check_chi_component(x, y, m)? {
            chi.push(vec![grading.names[m].clone()]);
        }
    }
    report.law("chi-component-inclusion", chi);

    report.elapsed = start.elapsed();
    Ok(GradedOpsReport {
        graded,
        pointwise,
        unit_graded,
        unit_pointwise,
        report,
    })
}

/// Verify that `χ_m: ((X⊙Y) ⊗ (X⊙Y))_m → ((X⊗X) ⊙ (Y⊗Y))_m` is an injective
/// module morphism. Elements of the source are tuples, over decompositions
/// `d = (n₁,n₂)` of `m`, of elements of the four-fold tensor
/// `X_{n₁} ⊗ Y_{n₁} ⊗ X_{n₂} ⊗ Y_{n₂}`; the map rearranges each pure tensor
/// `w⊗x⊗y⊗z ↦ (w⊗y)⊗(x⊗z)` and includes the result in the `d` summand of
/// both target factors.
fn check_chi_component(x: &GradedModule, y: &GradedModule, m: usize) -> Result<bool, Error> {
    let grading = &x.grading;
    let decomps = grading.decompositions(m);
    // source: ⊕_d T4_d
    let t4: Vec<_> = decomps
        .iter()
        .map(|&(n1, n2)| {
            tensor_multi(&[
                &x.components[n1],
                &y.components[n1],
                &x.components[n2],
                &y.components[n2],
            ])
        })
        .collect();
    // target factors: A = ⊕_d X_{n1}⊗X_{n2}, B = ⊕_d Y_{n1}⊗Y_{n2}
    let tx: Vec<_> = decomps
        .iter()
        .map(|&(n1, n2)| tensor(&x.components[n1], &x.components[n2]))
        .collect();
    let ty: Vec<_> = decomps
        .iter()
        .map(|&(n1, n2)| tensor(&y.components[n1], &y.components[n2]))
        .collect();
    let a = direct_sum_many(&tx.iter().map(|t| t.module.clone()).collect::<Vec<_>>());
    let b = direct_sum_many(&ty.iter().map(|t| t.module.clone()).collect::<Vec<_>>());
    let rhs = tensor(&a, &b);
    let src_sizes: Vec<usize> = t4.iter().map(|t| t.module.size()).collect();
    let src_total: usize = src_sizes.iter().product::<usize>().max(1);
    if src_total > 4096 || rhs.module.size() > 4096 {
        return Err(Error::Budget("graded interchange instance too large".into()));
    }

    // summand-d inclusion index into a ⊕-fold of given sizes
    let include = |sizes: &[usize], zeros: &[usize], d: usize, idx: usize| -> usize {
        let mut acc = 0usize;
        for (pos, &sz) in sizes.iter().enumerate() {
            let coord = if pos == d { idx } else { zeros[pos] };
            acc = acc * sz + coord;
        }
        acc
    };
    let ax_sizes: Vec<usize> = tx.iter().map(|t| t.module.size()).collect();
    let ax_zeros: Vec<usize> = tx.iter().map(|t| t.module.zero()).collect();
    let by_sizes: Vec<usize> = ty.iter().map(|t| t.module.size()).collect();
    let by_zeros: Vec<usize> = ty.iter().map(|t| t.module.zero()).collect();

    // χ on one source element (a tuple of T4_d elements)
    let chi_of = |tuple: &[usize]| -> usize {
        let mut acc = rhs.space.zero();
        for (d, &td_idx) in tuple.iter().enumerate() {
            let t4d = &t4[d];
            for quad in t4d.elems[td_idx].tuples() {
                let (wi, xi, yi, zi) = (quad[0], quad[1], quad[2], quad[3]);
                let jw = t4d.space.irreducibles(0)[wi];
                let jx = t4d.space.irreducibles(1)[xi];
                let jy = t4d.space.irreducibles(2)[yi];
                let jz = t4d.space.irreducibles(3)[zi];
                let in_a = include(&ax_sizes, &ax_zeros, d, tx[d].pure(jw, jy));
                let in_b = include(&by_sizes, &by_zeros, d, ty[d].pure(jx, jz));
                acc = rhs.space.join(&acc, &rhs.space.pure(&[in_a, in_b]));
            }
        }
        rhs.index_of(&acc).expect("image inside the tensor")
    };

    // enumerate all source tuples; check injectivity and the morphism law
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for &sz in &src_sizes {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..sz).map(move |c| {
                    let mut t2 = t.clone();
                    t2.push(c);
                    t2
                })
            })
            .collect();
    }
    let images: Vec<usize> = tuples.iter().map(|t| chi_of(t)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != images.len() {
        return Ok(false);
    }
    for (i, ti) in tuples.iter().enumerate() {
        for (j, tj) in tuples.iter().enumerate().skip(i) {
            let joined: Vec<usize> = ti
                .iter()
                .zip(tj.iter())
                .enumerate()
                .map(|(d, (&p, &q))| {
                    let e = t4[d].space.join(&t4[d].elems[p], &t4[d].elems[q]);
                    t4[d].index_of(&e).expect("closed under join")
                })
                .collect();
            if chi_of(&joined) != rhs.module.join(images[i], images[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat_grading() -> MonoidFragment {
        MonoidFragment::nat_additive(2)
    }

    #[test]
    fn unit_law_for_graded_product() {
        let g = nat_grading();
        let one = GradedModule::unit_graded(&g);
        let sq = graded_product(&one, &one);
        for m in 0..g.size() {
            assert!(find_isomorphism(&one.components[m], &sq.components[m]).is_some());
        }
    }

    #[test]
    fn two_summands_at_grade_one() {
        let g = nat_grading();
        let x = GradedModule::new(
            g.clone(),
            vec![FinSemilattice::bool2(), FinSemilattice::bool2(), FinSemilattice::point()],
        )
        .unwrap();
        let sq = graded_product(&x, &x);
        // decompositions 0+1 and 1+0 give 𝔹⊕𝔹
        assert_eq!(sq.components[1].size(), 4);
        let ops = graded_ops(&x, &x).unwrap();
        assert!(ops.report.passed(), "{}", ops.report);
    }
}
