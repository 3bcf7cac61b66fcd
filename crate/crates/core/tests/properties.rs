use proptest::prelude::*;
use superschur::algebras::{clifford, sergeev, tensor_algebra};
use superschur::classify::{labels_type_ii, partitions};
use superschur::super_linear::{
    boxtimes, compose, double_dual_identification, dual_map, make_space, minus_twist, Parity,
};
use superschur::sym_action::{gamma_dimension, gamma_invariants, symmetric_power, TensorPower};
use superschur::{Field, Permutation, SparseMatrix, SuperMap, SuperSpace};

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::rationals()),
        Just(Field::gf(3)),
        Just(Field::gf(5))
    ]
}

/// A homogeneous map between spaces of sdim ≤ (2|2), with small entries.
fn map_between(f: Field, src: SuperSpace, tgt: SuperSpace) -> impl Strategy<Value = SuperMap> {
    let n = src.dim() * tgt.dim();
    (any::<bool>(), proptest::collection::vec(-3i64..=3, n)).prop_map(move |(odd, vals)| {
        let p = Parity::from_bit(u8::from(odd));
        let triples = (0..tgt.dim())
            .flat_map(|t| (0..src.dim()).map(move |s| (t, s)))
            .zip(vals)
            .filter(|((t, s), _)| tgt.parity(*t) + src.parity(*s) == p)
            .map(|((t, s), v)| (t, s, f.from_i64(v)));
        let m = SparseMatrix::from_triples(f, tgt.dim(), src.dim(), triples.collect::<Vec<_>>());
        SuperMap::new(src.clone(), tgt.clone(), m).unwrap()
    })
}

fn space(f: Field) -> impl Strategy<Value = SuperSpace> {
    (0usize..=2, 0usize..=2).prop_map(move |(m, n)| make_space(f, m, n))
}

fn parity_of(f: &SuperMap) -> Parity {
    f.parity().unwrap_or(Parity::Even)
}

fn chain3() -> impl Strategy<Value = (SuperMap, SuperMap)> {
    field_strategy()
        .prop_flat_map(|f| (Just(f), space(f), space(f), space(f)))
        .prop_flat_map(|(f, a, b, c)| (map_between(f, a, b.clone()), map_between(f, b, c)))
}

fn quad() -> impl Strategy<Value = (SuperMap, SuperMap, SuperMap, SuperMap)> {
    field_strategy()
        .prop_flat_map(|f| (Just(f), proptest::collection::vec(space(f), 6)))
        .prop_flat_map(|(f, s)| {
            (
                map_between(f, s[0].clone(), s[1].clone()),
                map_between(f, s[1].clone(), s[2].clone()),
                map_between(f, s[3].clone(), s[4].clone()),
                map_between(f, s[4].clone(), s[5].clone()),
            )
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interchange_law((f1, f2, g1, g2) in quad()) {
        let lhs = compose(&boxtimes(&f2, &g2).unwrap(), &boxtimes(&f1, &g1).unwrap()).unwrap();
        let mut rhs = boxtimes(&compose(&f2, &f1).unwrap(), &compose(&g2, &g1).unwrap()).unwrap();
        if parity_of(&g2).times(parity_of(&f1)) {
            rhs = rhs.scale(&lhs.field().from_i64(-1));
        }
        prop_assert_eq!(lhs.matrix, rhs.matrix);
    }

    #[test]
    fn dual_contravariant((phi, psi) in chain3()) {
        let lhs = dual_map(&compose(&psi, &phi).unwrap());
        let mut rhs = compose(&dual_map(&phi), &dual_map(&psi)).unwrap();
        if parity_of(&phi).times(parity_of(&psi)) {
            rhs = rhs.scale(&lhs.field().from_i64(-1));
        }
        prop_assert_eq!(lhs.matrix, rhs.matrix);
    }

    #[test]
    fn double_dual_recovers_map((phi, _psi) in chain3()) {
        let dd = dual_map(&dual_map(&phi));
        let ds = double_dual_identification(&phi.source);
        let dt = double_dual_identification(&phi.target);
        // naturality: D_N ∘ φ = φ^∨∨ ∘ D_M, while the raw matrix of φ^∨∨ is (-1)^{|φ|}φ
        let lhs = compose(&dt, &phi).unwrap();
        let rhs = compose(&dd, &ds).unwrap();
        prop_assert_eq!(&lhs.matrix, &rhs.matrix);
        let sign = lhs.field().sign(parity_of(&phi).is_odd());
        prop_assert_eq!(dd.matrix, phi.matrix.scale(&sign));
    }

    #[test]
    fn minus_twist_involutive((phi, _psi) in chain3()) {
        prop_assert_eq!(minus_twist(&minus_twist(&phi)).matrix, phi.matrix);
    }

    #[test]
    fn place_action_is_a_right_action(
        m in 0usize..=2, n in 0usize..=2, d in 1usize..=3,
        a in 0usize..6, b in 0usize..6,
    ) {
        let tp = TensorPower::new(&make_space(Field::rationals(), m, n), d);
        let all = Permutation::all(d);
        let (s, t) = (&all[a % all.len()], &all[b % all.len()]);
        prop_assert_eq!(
            tp.action_matrix(&s.compose(t)),
            tp.action_matrix(t).mul(&tp.action_matrix(s))
        );
    }

    #[test]
    fn divided_and_symmetric_dims(f in field_strategy(), m in 0usize..=2, n in 0usize..=2, d in 0usize..=3) {
        let sp = make_space(f, m, n);
        let g = gamma_invariants(&sp, d).unwrap();
        let s = symmetric_power(&sp, d).unwrap();
        prop_assert_eq!(g.dim(), gamma_dimension(m, n, d));
        prop_assert_eq!(s.dim(), g.dim());
    }

    #[test]
    fn type_ii_sandwich(d in 0usize..=10, p in prop_oneof![Just(0u32), Just(3), Just(5), Just(7)]) {
        let all = partitions(d);
        let strict = all.iter().filter(|l| l.parts().windows(2).all(|w| w[0] != w[1])).count();
        let n = labels_type_ii(d, p).unwrap().len();
        prop_assert!(strict <= n && n <= all.len());
    }

    #[test]
    fn algebra_products_are_associative(
        f in field_strategy(),
        x in proptest::collection::vec(-2i64..=2, 8),
        y in proptest::collection::vec(-2i64..=2, 8),
        z in proptest::collection::vec(-2i64..=2, 8),
    ) {
        let w = sergeev(2, f).unwrap();
        let v = |c: &[i64]| c.iter().map(|&k| f.from_i64(k)).collect::<Vec<_>>();
        let (x, y, z) = (v(&x), v(&y), v(&z));
        prop_assert_eq!(w.mul(&w.mul(&x, &y), &z), w.mul(&x, &w.mul(&y, &z)));
    }
}

#[test]
fn clifford_tensor_dimensions() {
    let q = Field::rationals();
    let c = tensor_algebra(&clifford(1, q).unwrap(), &clifford(1, q).unwrap()).unwrap();
    assert_eq!(c.dim(), 4);
    assert_eq!(clifford(3, q).unwrap().dim(), 8);
}
