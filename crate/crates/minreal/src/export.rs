//! Text and JSON renderings of engine objects. Scalars are exact
//! fraction strings.

use serde::Serialize;
use serde_json::{json, Map, Value};

use minreal_core::cohom::H1Report;
use minreal_core::liealg::{psi, LieBasis, SlAlgebra};
use minreal_core::reps::{GramTable, InvariantScanReport, WeightReport};
use minreal_core::weylop::DiffOperator;
use minreal_core::{GaussianRational, MultiIndex};

use crate::suites::Su2Row;

/// An object with both a human-readable and a JSON form.
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

pub fn index_key(p: &MultiIndex) -> String {
    let parts: Vec<String> = p.exps().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn operators(basis: &LieBasis, ops: &[(usize, DiffOperator)]) -> Rendered {
    let mut text = String::new();
    let mut obj = Map::new();
    for (i, op) in ops {
        let label = basis.label(*i);
        if ops.len() == 1 {
            text.push_str(&format!("{op}\n"));
        } else {
            text.push_str(&format!("{label}: {op}\n"));
        }
        obj.insert(label.to_string(), Value::String(op.to_string()));
    }
    Rendered {
        text,
        json: Value::Object(obj),
    }
}

pub fn gram(table: &GramTable) -> Rendered {
    let mut obj = Map::new();
    let mut parts = Vec::new();
    for (p, v) in &table.values {
        parts.push(format!("{}: {v}", index_key(p)));
        obj.insert(index_key(p), Value::String(v.to_string()));
    }
    Rendered {
        text: format!("{{{}}}\n", parts.join(", ")),
        json: Value::Object(obj),
    }
}

fn weight_string(w: &[GaussianRational]) -> String {
    let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

pub fn weights(rep: &WeightReport) -> Rendered {
    let list: Vec<String> = rep
        .weights
        .iter()
        .map(|(w, _)| weight_string(&w.coords))
        .collect();
    let json_weights: Vec<Value> = rep
        .weights
        .iter()
        .map(|(w, k)| {
            json!({
                "weight": w.coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "multiplicity": k,
                "carriers": w.carriers.iter().map(index_key).collect::<Vec<_>>(),
            })
        })
        .collect();
    let highest: Vec<Value> = rep
        .highest
        .iter()
        .map(|h| {
            json!({
                "weight": h.weight.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "monomial": h.monomial.as_ref().map(index_key),
            })
        })
        .collect();
    let mut text = list.join(",") + "\n";
    for h in &rep.highest {
        let mono = h
            .monomial
            .as_ref()
            .map_or("combination".to_string(), |m| format!("z^{}", index_key(m)));
        text.push_str(&format!(
            "highest weight {} at {mono}\n",
            weight_string(&h.weight)
        ));
    }
    Rendered {
        text,
        json: json!({"n": rep.n, "m": rep.m, "weights": json_weights, "highest": highest}),
    }
}

pub fn psi_matrix(n: usize) -> Rendered {
    let m = psi(n);
    let mut rows = Vec::new();
    let mut text = String::new();
    for i in 1..=n + 1 {
        let row: Vec<String> = (1..=n + 1).map(|j| m.get(i, j).to_string()).collect();
        text.push_str(&row.join("\t"));
        text.push('\n');
        rows.push(row);
    }
    Rendered {
        text,
        json: json!(rows),
    }
}

pub fn tildes(alg: &SlAlgebra, which: &[usize]) -> Rendered {
    let mut text = String::new();
    let mut obj = Map::new();
    for &i in which {
        let label = alg.basis().label(i);
        let t = alg.tilde_basis(i);
        text.push_str(&format!("{label}: {t}\n"));
        obj.insert(label.to_string(), Value::String(t.to_string()));
    }
    Rendered {
        text,
        json: Value::Object(obj),
    }
}

/// Nonzero brackets `[X_i, X_j] = sum_k c_k X_k` for `i < j`.
pub fn structure(basis: &LieBasis) -> Rendered {
    let mut text = String::new();
    let mut obj = Map::new();
    for i in 0..basis.dim() {
        for j in (i + 1)..basis.dim() {
            let c = basis.structure_constants(i, j);
            let terms: Vec<(String, String)> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (basis.label(k).to_string(), v.to_string()))
                .collect();
            if terms.is_empty() {
                continue;
            }
            let key = format!("[{},{}]", basis.label(i), basis.label(j));
            let rhs: Vec<String> = terms.iter().map(|(l, v)| format!("({v})*{l}")).collect();
            text.push_str(&format!("{key} = {}\n", rhs.join(" + ")));
            obj.insert(
                key,
                Value::Object(
                    terms
                        .into_iter()
                        .map(|(l, v)| (l, Value::String(v)))
                        .collect(),
                ),
            );
        }
    }
    Rendered {
        text,
        json: Value::Object(obj),
    }
}

pub fn su2_table(rows: &[Su2Row]) -> Rendered {
    let mut text = String::from("m\tdim\tweights\tcasimir\tirreducible\tpositive_gram\n");
    for r in rows {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\n",
            r.m,
            r.dimension,
            r.weights.join(","),
            r.casimir.as_deref().unwrap_or("-"),
            r.irreducible,
            r.positive_gram
        ));
    }
    Rendered {
        text,
        json: serde_json::to_value(rows).expect("serializable"),
    }
}

#[derive(Serialize)]
struct H1Json {
    n: usize,
    d: u32,
    #[serde(rename = "dim_Z1")]
    dim_z1: usize,
    #[serde(rename = "dim_B1")]
    dim_b1: usize,
    #[serde(rename = "dim_H1")]
    dim_h1: usize,
    stabilized: bool,
    phi1_is_cocycle: bool,
    phi1_is_coboundary: bool,
    generator_check: bool,
}

pub fn h1_rows(rows: &[H1Report]) -> Rendered {
    let mut text = String::from(
        "n\td\tdim_Z1\tdim_B1\tdim_H1\tstabilized\tphi1_cocycle\tphi1_coboundary\tgenerator\n",
    );
    let mut out = Vec::new();
    for h in rows {
        text.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            h.n,
            h.d,
            h.dim_z1,
            h.dim_b1,
            h.dim_h1,
            h.stabilized,
            h.phi1_is_cocycle,
            h.phi1_is_coboundary,
            h.generator_check
        ));
        out.push(H1Json {
            n: h.n,
            d: h.d,
            dim_z1: h.dim_z1,
            dim_b1: h.dim_b1,
            dim_h1: h.dim_h1,
            stabilized: h.stabilized,
            phi1_is_cocycle: h.phi1_is_cocycle,
            phi1_is_coboundary: h.phi1_is_coboundary,
            generator_check: h.generator_check,
        });
    }
    Rendered {
        text,
        json: serde_json::to_value(out).expect("serializable"),
    }
}

pub fn invariant_scan(rep: &InvariantScanReport) -> Rendered {
    let mut text = format!("n={} a={} m(a)={}\n", rep.n, rep.a, rep.m_a);
    let mut degrees = Vec::new();
    for c in &rep.degrees {
        let w = c.witness.as_ref().map(index_key);
        text.push_str(&format!(
            "degree {}: coefficient {}, formula {}, {}\n",
            c.degree,
            c.coefficient,
            if c.formula_holds { "holds" } else { "fails" },
            w.as_ref()
                .map_or("stays in P_d".to_string(), |w| format!("escapes via z^{w}")),
        ));
        degrees.push(json!({
            "degree": c.degree,
            "coefficient": c.coefficient.to_string(),
            "formula_holds": c.formula_holds,
            "witness": w,
        }));
    }
    match &rep.subspace {
        Some(s) => text.push_str(&format!(
            "invariant P_{} of dimension {} (irreducible: {})\n",
            s.degree, s.dimension, s.irreducible
        )),
        None => text.push_str(&format!("no invariant P_d for d <= {}\n", rep.dmax)),
    }
    let subspace = rep.subspace.as_ref().map(|s| {
        json!({"degree": s.degree, "dimension": s.dimension, "invariant": s.invariant, "irreducible": s.irreducible})
    });
    Rendered {
        text,
        json: json!({
            "n": rep.n,
            "a": rep.a.to_string(),
            "m_a": rep.m_a.to_string(),
            "dmax": rep.dmax,
            "degrees": degrees,
            "subspace": subspace,
            "absence_certified": rep.certifies_absence(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use minreal_core::reps::{gram_discrete, RepParam};

    #[test]
    fn gram_rendering() {
        let t = gram_discrete(&RepParam::generic(1, "3".parse().unwrap()), 2).unwrap();
        let r = gram(&t);
        assert_eq!(r.text, "{[0]: 1, [1]: 1/3, [2]: 1/6}\n");
        assert_eq!(r.json["[2]"], "1/6");
    }

    #[test]
    fn structure_lists_sl2_brackets() {
        let r = structure(&LieBasis::new(1).unwrap());
        assert_eq!(r.text.lines().count(), 3);
        assert!(r.text.contains("[E12,E21] = "));
    }
}
