use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use stralg::artheory::{full_catalog, hom_leq, Catalog};
use stralg::decomp::{catalog_decompose, summand_count, DecomposeOptions};
use stralg::fixtures;
use stralg::homalg::{ext1_basis, extension_from_cocycle};
use stralg::repmod::direct_sum;
use stralg::runs::{sums_up_to, SumModule};
use stralg::Representation;

struct Classes {
    cat: Catalog,
    sums: Vec<SumModule>,
    classes: Vec<Vec<usize>>,
}

fn a3nr_classes() -> &'static Classes {
    static CELL: OnceLock<Classes> = OnceLock::new();
    CELL.get_or_init(|| {
        let cat = full_catalog(&Arc::new(fixtures::a3nr())).unwrap();
        let sums = sums_up_to(&cat, 5, &DecomposeOptions::default()).unwrap();
        let mut by_dims: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (i, s) in sums.iter().enumerate() {
            by_dims.entry(s.module.dims().to_vec()).or_default().push(i);
        }
        let classes = by_dims.into_values().filter(|c| c.len() > 1).collect();
        Classes { cat, sums, classes }
    })
}

fn leq(c: &Classes, i: usize, j: usize) -> bool {
    hom_leq(&c.sums[i].module, &c.sums[j].module, &c.cat).unwrap().0
}

fn catalog_sum(cat: &Catalog, mult: &[usize]) -> Representation {
    let parts: Vec<&Representation> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(&cat.modules()[i], k)).collect();
    direct_sum(cat.presentation(), &parts).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_order_is_a_partial_order(class in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let cl = a3nr_classes();
        let members = &cl.classes[class.index(cl.classes.len())];
        let (i, j, k) = (*a.get(members), *b.get(members), *c.get(members));
        prop_assert!(leq(cl, i, i));
        if leq(cl, i, j) && leq(cl, j, i) {
            prop_assert_eq!(&cl.sums[i].multiplicities, &cl.sums[j].multiplicities);
        }
        if leq(cl, i, j) && leq(cl, j, k) {
            prop_assert!(leq(cl, i, k));
        }
    }

    #[test]
    fn extension_middles_degenerate_from_the_sum(
        m in prop::collection::vec(0usize..2, 6),
        n in prop::collection::vec(0usize..2, 6),
        coeffs in prop::collection::vec(0u64..32003, 8),
    ) {
        let cat = &a3nr_classes().cat;
        prop_assume!(m.iter().any(|&x| x > 0) && n.iter().any(|&x| x > 0));
        let (mm, nn) = (catalog_sum(cat, &m), catalog_sum(cat, &n));
        let ext = ext1_basis(&mm, &nn).unwrap();
        prop_assume!(ext.dim() > 0);
        let c = ext.combine(&coeffs[..ext.dim()].iter().chain(std::iter::repeat(&0)).take(ext.dim()).copied().collect::<Vec<_>>());
        let seq = extension_from_cocycle(&ext, &c).unwrap();
        seq.verify().unwrap();
        let opts = DecomposeOptions::default();
        let e_count = summand_count(&seq.middle, &opts).unwrap();
        let total: usize = m.iter().chain(&n).sum();
        prop_assert!(e_count <= total);
        let sum = mm.direct_sum(&nn).unwrap();
        prop_assert!(hom_leq(&seq.middle, &sum, cat).unwrap().0);
        let oracle: usize = catalog_decompose(&seq.middle, cat.modules()).unwrap().iter().sum();
        prop_assert_eq!(e_count, oracle);
    }
}

#[test]
fn classes_are_nontrivial() {
    let cl = a3nr_classes();
    assert!(cl.classes.len() > 5);
    let strict = cl
        .classes
        .iter()
        .flat_map(|c| c.iter().flat_map(move |&i| c.iter().map(move |&j| (i, j))))
        .filter(|&(i, j)| i != j && leq(cl, i, j))
        .count();
    assert!(strict > 0);
}
