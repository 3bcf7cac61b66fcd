//! JSON forms of spaces, maps and algebras. Scalars are strings: `"a/b"`
//! over ℚ and the residue over GF(p).

use serde::{Deserialize, Serialize};

use crate::algebras::SuperAlgebra;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::scalars::{Field, Scalar};
use crate::super_linear::{Parity, SuperMap, SuperSpace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperMapJson {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperAlgebraJson {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub parities: Vec<Parity>,
    pub unit: Vec<String>,
    pub constants: Vec<(usize, usize, usize, String)>,
}

fn scalar(s: &Scalar) -> String {
    s.to_canonical_string()
}

pub fn map_to_json(f: &SuperMap) -> SuperMapJson {
    SuperMapJson {
        source: f.source.clone(),
        target: f.target.clone(),
        entries: f
            .matrix
            .triples()
            .map(|(r, c, x)| (r, c, scalar(x)))
            .collect(),
    }
}

pub fn map_from_json(j: &SuperMapJson) -> Result<SuperMap> {
    let field = j.source.field();
    let triples = j
        .entries
        .iter()
        .map(|(r, c, x)| Ok((*r, *c, field.parse(x)?)))
        .collect::<Result<Vec<_>>>()?;
    if triples
        .iter()
        .any(|(r, c, _)| *r >= j.target.dim() || *c >= j.source.dim())
    {
        return Err(Error::OutOfRange("map entry outside the matrix".into()));
    }
    let m = SparseMatrix::from_triples(field, j.target.dim(), j.source.dim(), triples);
    SuperMap::new(j.source.clone(), j.target.clone(), m)
}

pub fn algebra_to_json(a: &SuperAlgebra) -> SuperAlgebraJson {
    SuperAlgebraJson {
        name: a.name.clone(),
        field: a.field(),
        dim: a.dim(),
        parities: a.parities().to_vec(),
        unit: a.unit().iter().map(scalar).collect(),
        constants: a
            .constants()
            .map(|(i, j, k, c)| (i, j, k, scalar(c)))
            .collect(),
    }
}

/// Rebuilds (and audits) an algebra; labels become `b1…bn`.
pub fn algebra_from_json(j: &SuperAlgebraJson) -> Result<SuperAlgebra> {
    let field = j.field;
    if j.parities.len() != j.dim || j.unit.len() != j.dim {
        return Err(Error::Shape("dim disagrees with parities or unit".into()));
    }
    let unit = j
        .unit
        .iter()
        .map(|x| field.parse(x))
        .collect::<Result<Vec<_>>>()?;
    let constants = j
        .constants
        .iter()
        .map(|(i, k, l, x)| Ok((*i, *k, *l, field.parse(x)?)))
        .collect::<Result<Vec<_>>>()?;
    let gens = (0..j.dim)
        .map(|i| {
            let mut v = vec![field.zero(); j.dim];
            v[i] = field.one();
            v
        })
        .collect();
    SuperAlgebra::new(
        j.name.clone(),
        field,
        j.parities.clone(),
        (1..=j.dim).map(|i| format!("b{i}")).collect(),
        unit,
        constants,
        gens,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{clifford, sergeev};
    use crate::super_linear::make_space;

    #[test]
    fn space_json() {
        let s = make_space(Field::gf(3), 1, 1);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["field"], 3);
        assert_eq!(v["parities"], serde_json::json!([0, 1]));
        let back: SuperSpace = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn map_round_trip() {
        let q = Field::rationals();
        let s = make_space(q, 1, 1);
        let m = SparseMatrix::from_triples(
            q,
            2,
            2,
            [(0, 0, q.parse("-1/2").unwrap()), (1, 1, q.one())],
        );
        let f = SuperMap::new(s.clone(), s, m).unwrap();
        let j = map_to_json(&f);
        assert_eq!(j.entries[0].2, "-1/2");
        let text = serde_json::to_string(&j).unwrap();
        let back = map_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.matrix, f.matrix);
    }

    #[test]
    fn algebra_round_trip() {
        let c = clifford(1, Field::rationals()).unwrap();
        let j = algebra_to_json(&c);
        assert_eq!(j.dim, 2);
        assert!(j.constants.contains(&(1, 1, 0, "1".into())));
        let w = sergeev(2, Field::gf(5)).unwrap();
        let j = algebra_to_json(&w);
        let back = algebra_from_json(&j).unwrap();
        assert!(back.same_table(&w));
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            serde_json::to_string(&algebra_to_json(&w)).unwrap()
        );
    }
}
