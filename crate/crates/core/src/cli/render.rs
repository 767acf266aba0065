use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::Value;

use crate::cohomology::{CohomologyGroup, CohomologyRing};
use crate::complex::{Coeff, Cochain};
use crate::cubical::PrecubicalSet;

pub fn generator_name(degree: usize, i: usize) -> String {
    format!("g{degree}_{}", i + 1)
}

/// `Σ c_i · name_i` written as `2 a - b`, or `0`.
pub fn linear_combination<'a>(terms: impl IntoIterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if mag.is_one() { name } else { format!("{mag} {name}") };
        match (out.is_empty(), c.is_negative()) {
            (true, false) => out.push_str(&body),
            (true, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (false, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (false, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Values of a cochain as a combination of the duals of the cubes.
pub fn cochain_expression(x: &PrecubicalSet, c: &Cochain<Coeff>) -> String {
    let labels = x.labels(c.dim());
    linear_combination(c.values().iter().zip(labels.iter().cloned()))
}

pub fn class_expression(degree: usize, coords: &[BigInt]) -> String {
    linear_combination(coords.iter().enumerate().map(|(i, c)| (c, generator_name(degree, i))))
}

pub fn groups_line(groups: &[CohomologyGroup]) -> String {
    if groups.is_empty() {
        return "H^* = 0".into();
    }
    groups
        .iter()
        .map(|g| format!("H^{} = {g}", g.degree()))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn number(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(b.to_string()),
    }
}

#[derive(Serialize)]
pub struct CubeValue {
    pub cube: String,
    pub value: Value,
}

/// Nonzero values of a cochain, in cube order.
pub fn cochain_values(x: &PrecubicalSet, c: &Cochain<Coeff>) -> Vec<CubeValue> {
    c.values()
        .iter()
        .zip(x.labels(c.dim()))
        .filter(|(v, _)| !v.is_zero())
        .map(|(v, l)| CubeValue { cube: l.clone(), value: number(v) })
        .collect()
}

#[derive(Serialize)]
pub struct GeneratorJson {
    pub name: String,
    pub order: Option<Value>,
    pub values: Vec<CubeValue>,
}

#[derive(Serialize)]
pub struct DegreeJson {
    pub degree: usize,
    pub group: String,
    pub free_rank: usize,
    pub torsion: Vec<Value>,
    pub generators: Vec<GeneratorJson>,
}

#[derive(Serialize)]
pub struct CohomologyJson {
    pub coefficients: String,
    pub cube_counts: Vec<usize>,
    pub degrees: Vec<DegreeJson>,
}

pub fn cohomology_json(x: &PrecubicalSet, ring: &Coeff, groups: &[CohomologyGroup]) -> CohomologyJson {
    CohomologyJson {
        coefficients: ring.to_string(),
        cube_counts: x.cube_counts(),
        degrees: groups
            .iter()
            .map(|g| DegreeJson {
                degree: g.degree(),
                group: g.to_string(),
                free_rank: g.free_rank(),
                torsion: g.torsion().iter().map(number).collect(),
                generators: g
                    .generators()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| GeneratorJson {
                        name: generator_name(g.degree(), i),
                        order: g.order(i).as_ref().map(number),
                        values: cochain_values(x, c),
                    })
                    .collect(),
            })
            .collect(),
    }
}

pub fn cohomology_text(x: &PrecubicalSet, groups: &[CohomologyGroup]) -> String {
    let mut out = groups_line(groups);
    out.push('\n');
    for g in groups {
        for (i, c) in g.generators().iter().enumerate() {
            out.push_str(&format!("{} = {}", generator_name(g.degree(), i), cochain_expression(x, c)));
            if i >= g.free_rank() {
                if let Some(d) = g.order(i) {
                    out.push_str(&format!("  (order {d})"));
                }
            }
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize)]
pub struct ProductJson {
    pub left: String,
    pub right: String,
    pub degree: usize,
    pub class: Vec<Value>,
    pub expression: String,
}

#[derive(Serialize)]
pub struct GroupSummary {
    pub degree: usize,
    pub group: String,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct RingTableJson {
    pub coefficients: String,
    pub groups: Vec<GroupSummary>,
    pub unit: Vec<Value>,
    pub products: Vec<ProductJson>,
}

fn products(hr: &CohomologyRing) -> Vec<ProductJson> {
    let mut out = Vec::new();
    let n = hr.groups.len();
    for p in 0..n {
        for q in 0..n - p {
            for i in 0..hr.groups[p].generator_count() {
                for j in 0..hr.groups[q].generator_count() {
                    let class = hr.table.product(p, i, q, j);
                    out.push(ProductJson {
                        left: generator_name(p, i),
                        right: generator_name(q, j),
                        degree: p + q,
                        class: class.iter().map(number).collect(),
                        expression: class_expression(p + q, class),
                    });
                }
            }
        }
    }
    out
}

pub fn ring_table_json(hr: &CohomologyRing, unit: &[BigInt]) -> RingTableJson {
    RingTableJson {
        coefficients: hr.ring.to_string(),
        groups: hr
            .groups
            .iter()
            .map(|g| GroupSummary {
                degree: g.degree(),
                group: g.to_string(),
                generators: (0..g.generator_count()).map(|i| generator_name(g.degree(), i)).collect(),
            })
            .collect(),
        unit: unit.iter().map(number).collect(),
        products: products(hr),
    }
}

pub fn ring_table_text(hr: &CohomologyRing, unit: &[BigInt]) -> String {
    let mut out = format!("coefficients: {}\n", hr.ring);
    for g in &hr.groups {
        let names: Vec<String> = (0..g.generator_count()).map(|i| generator_name(g.degree(), i)).collect();
        out.push_str(&format!("H^{} = {g}", g.degree()));
        if !names.is_empty() {
            out.push_str(&format!("  [{}]", names.join(", ")));
        }
        out.push('\n');
    }
    if !unit.is_empty() {
        out.push_str(&format!("unit = {}\n", class_expression(0, unit)));
    }
    let ps = products(hr);
    if !ps.is_empty() {
        out.push_str("products:\n");
        for p in ps {
            out.push_str(&format!("  {} ⌣ {} = {}\n", p.left, p.right, p.expression));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations() {
        let c = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(class_expression(2, &c(&[1])), "g2_1");
        assert_eq!(class_expression(2, &c(&[-1])), "-g2_1");
        assert_eq!(class_expression(1, &c(&[2, -3])), "2 g1_1 - 3 g1_2");
        assert_eq!(class_expression(1, &c(&[0, 1])), "g1_2");
        assert_eq!(class_expression(1, &c(&[0, 0])), "0");
        assert_eq!(class_expression(1, &[]), "0");
    }

    #[test]
    fn big_numbers_become_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(number(&big), Value::from("123456789012345678901234567890"));
        assert_eq!(number(&BigInt::from(-4)), Value::from(-4));
    }
}
