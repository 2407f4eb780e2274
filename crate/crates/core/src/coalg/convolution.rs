//! Convolution algebras on module morphisms from a coalgebra to an algebra.

use super::{check_algebra, BAlgebra, BCoalgebra};
use crate::error::Error;
use crate::semilattice::{hom_module, HomModule, TensorSpace};

/// The convolution algebra on `Hom(C, M)`: unit `u ∘ ε`, product
/// `f * g = m ∘ (f ⊗ g) ∘ Δ`.
#[derive(Debug, Clone)]
pub struct ConvolutionAlgebra {
    pub algebra: BAlgebra,
    pub homs: HomModule,
}

impl ConvolutionAlgebra {
    /// Convolution product of two hom tables, evaluated pointwise through
    /// the comultiplication.
    pub fn convolve(c: &BCoalgebra, a: &BAlgebra, s2: &TensorSpace, f: &[usize], g: &[usize]) -> Vec<usize> {
        let irr = s2.irreducibles(0);
        (0..c.module.size())
            .map(|x| {
                a.module.join_all(
                    c.delta[x]
                        .tuples()
                        .iter()
                        .map(|t| a.mul(f[irr[t[0]]], g[irr[t[1]]])),
                )
            })
            .collect()
    }
}

/// Build the convolution algebra, verifying associativity and unitality on
/// the enumerated hom module.
pub fn convolution(c: &BCoalgebra, a: &BAlgebra) -> Result<ConvolutionAlgebra, Error> {
    let Some(eps) = &c.counit else {
        return Err(Error::format("convolution needs a counital coalgebra"));
    };
    let homs = hom_module(&c.module, &a.module);
    if homs.module.size() > 4096 {
        return Err(Error::Budget(format!(
            "hom module has {} elements",
            homs.module.size()
        )));
    }
    let s2 = c.space();
    let unit_map: Vec<usize> = (0..c.module.size())
        .map(|x| if eps[x] { a.one } else { a.module.zero() })
        .collect();
    let one = homs
        .index_of(&unit_map)
        .ok_or_else(|| Error::format("u∘ε is not a homomorphism"))?;
    let size = homs.module.size();
    let mut mult = vec![0usize; size * size];
    for i in 0..size {
        for j in 0..size {
            let prod = ConvolutionAlgebra::convolve(c, a, &s2, &homs.maps[i], &homs.maps[j]);
            mult[i * size + j] = homs
                .index_of(&prod)
                .ok_or_else(|| Error::format("convolution left the hom module"))?;
        }
    }
    let algebra = BAlgebra::new(homs.module.clone(), mult, one)?;
    let report = check_algebra(&algebra);
    if !report.passed() {
        return Err(Error::format(format!(
            "convolution failed algebra laws: {:?}",
            report.failed_laws()
        )));
    }
    Ok(ConvolutionAlgebra { algebra, homs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::{coalgebra_from_monoid, incidence_coalgebra, MonoidFragment};
    use crate::poset::Poset;
    use crate::semilattice::FinSemilattice;

    fn bool_algebra() -> BAlgebra {
        let b = FinSemilattice::bool2();
        BAlgebra::new(b, vec![0, 0, 0, 1], 1).unwrap()
    }

    fn trivial_coalgebra() -> BCoalgebra {
        let b = FinSemilattice::bool2();
        let s2 = TensorSpace::power(&b, 2);
        let delta = vec![s2.zero(), s2.pure(&[1, 1])];
        BCoalgebra {
            module: b,
            delta,
            counit: Some(vec![false, true]),
        }
    }

    #[test]
    fn booleans_convolve_to_booleans() {
        let conv = convolution(&trivial_coalgebra(), &bool_algebra()).unwrap();
        assert_eq!(conv.algebra.module.size(), 2);
        assert!(conv.algebra.is_commutative());
    }

    #[test]
    fn incidence_two_chain_convolution_is_associative() {
        let c = incidence_coalgebra(&Poset::chain(2));
        let conv = convolution(&c, &bool_algebra()).unwrap();
        // functionals on the free module over 3 intervals
        assert_eq!(conv.algebra.module.size(), 8);
    }

    #[test]
    fn word_coalgebra_convolution_is_language_concatenation() {
        let frag = MonoidFragment::words(&['a'], 2);
        let c = coalgebra_from_monoid(&frag, false).unwrap();
        let conv = convolution(&c, &bool_algebra()).unwrap();
        // Hom(B[words], B) = languages over the fragment
        assert_eq!(conv.algebra.module.size(), 8);
        // each hom is the indicator of the language it accepts; convolution
        // must match truncated concatenation of languages
        let lang_of = |map: &Vec<usize>| -> Vec<usize> {
            (0..3)
                .filter(|&w| {
                    let idx = 1usize << w; // singleton {word w}
                    map[idx] == 1
                })
                .collect()
        };
        for i in 0..8 {
            for j in 0..8 {
                let li = lang_of(&conv.homs.maps[i]);
                let lj = lang_of(&conv.homs.maps[j]);
                let mut concat: Vec<usize> = li
                    .iter()
                    .flat_map(|&a| lj.iter().map(move |&b| a + b))
                    .filter(|&l| l <= 2)
                    .collect();
                concat.sort();
                concat.dedup();
                let k = conv.algebra.mul(i, j);
                assert_eq!(lang_of(&conv.homs.maps[k]), concat);
            }
        }
    }
}
