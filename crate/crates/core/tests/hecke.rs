use std::sync::OnceLock;

use proptest::prelude::*;

use cyclohecke::exactnum::Scalar;
use cyclohecke::hecke::{HeckeAlgebra, HeckeElement, HeckeParams};
use cyclohecke::specht::CellularTable;

fn algebra() -> &'static HeckeAlgebra<Scalar> {
    static ALG: OnceLock<HeckeAlgebra<Scalar>> = OnceLock::new();
    ALG.get_or_init(|| {
        let q = Scalar::root_of_unity(12, 1).unwrap();
        let v = vec![Scalar::from_int(3), Scalar::root_of_unity(12, 5).unwrap()];
        HeckeAlgebra::new(&HeckeParams::new(2, 3, q, v).unwrap()).unwrap()
    })
}

fn element(terms: &[(usize, i64)]) -> HeckeElement<Scalar> {
    let alg = algebra();
    alg.from_terms(terms.iter().map(|&(b, c)| (b % alg.dim(), Scalar::from_int(c).lift_to(12).unwrap()))).unwrap()
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..48, -3i64..4), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_is_associative(x in terms(), y in terms(), z in terms()) {
        let alg = algebra();
        let (x, y, z) = (element(&x), element(&y), element(&z));
        let left = alg.mul(&alg.mul(&x, &y).unwrap(), &z).unwrap();
        let right = alg.mul(&x, &alg.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn star_is_an_anti_involution(x in terms(), y in terms()) {
        let alg = algebra();
        let (x, y) = (element(&x), element(&y));
        prop_assert_eq!(alg.star(&alg.star(&x).unwrap()).unwrap(), x.clone());
        let lhs = alg.star(&alg.mul(&x, &y).unwrap()).unwrap();
        let rhs = alg.mul(&alg.star(&y).unwrap(), &alg.star(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_symmetric(x in terms(), y in terms()) {
        let alg = algebra();
        let (x, y) = (element(&x), element(&y));
        prop_assert_eq!(
            alg.trace(&alg.mul(&x, &y).unwrap()).unwrap(),
            alg.trace(&alg.mul(&y, &x).unwrap()).unwrap()
        );
    }

    #[test]
    fn cellular_expansion_roundtrips(x in terms()) {
        let alg = algebra();
        let table = CellularTable::new(alg).unwrap();
        let x = element(&x);
        prop_assert_eq!(table.assemble(&table.expand(&x)).unwrap(), x);
    }
}

#[test]
fn murphy_elements_commute() {
    let alg = algebra();
    for i in 1..=3 {
        for j in 1..=3 {
            let (li, lj) = (alg.murphy(i).unwrap(), alg.murphy(j).unwrap());
            assert_eq!(alg.mul(&li, &lj).unwrap(), alg.mul(&lj, &li).unwrap());
        }
    }
}
