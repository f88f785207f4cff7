//! Tensor export: nonzero components as index/value records, JSON or CSV,
//! sorted lexicographically by indices, byte-deterministic.

use serde::{Deserialize, Serialize};

use octonion_algebra::algebra::AlgebraKind;
use octonion_algebra::tensor::{dual_tensor, metric_from_table, structure_tensor_from_table};
use octonion_algebra::triple::{decompose_f, extract_f};

/// Which tensor to export. The names `b` and `B` are distinct on purpose.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorChoice {
    Gamma,
    /// Rank-3 structure tensor b (lowered components).
    SmallB,
    /// Rank-4 dual tensor B.
    BigB,
    /// Lowered 4-index structure constants f of the 3-bracket.
    F,
    /// Totally antisymmetric part t of f.
    T,
    /// Pairwise part p (indexed by the pair (mu, nu)).
    P,
}

impl TensorChoice {
    /// Case-sensitive parse: `gamma`, `b`, `B`, `f`, `t`, `p`.
    pub fn parse(s: &str) -> Option<TensorChoice> {
        match s {
            "gamma" => Some(TensorChoice::Gamma),
            "b" => Some(TensorChoice::SmallB),
            "B" => Some(TensorChoice::BigB),
            "f" => Some(TensorChoice::F),
            "t" => Some(TensorChoice::T),
            "p" => Some(TensorChoice::P),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TensorChoice::Gamma => "gamma",
            TensorChoice::SmallB => "b",
            TensorChoice::BigB => "B",
            TensorChoice::F => "f",
            TensorChoice::T => "t",
            TensorChoice::P => "p",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub indices: Vec<usize>,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorExport {
    pub algebra: String,
    pub tensor: String,
    pub tool_version: String,
    pub convention_notes: Vec<String>,
    pub components: Vec<Component>,
}

fn notes(choice: TensorChoice) -> Vec<String> {
    let common = "indices are basis labels; gamma is the diagonal read off the Cayley table";
    let mut notes = vec![common.to_string()];
    match choice {
        TensorChoice::Gamma => {}
        TensorChoice::SmallB => {
            notes.push("lowered components b_mnl; totally antisymmetric".to_string());
        }
        TensorChoice::BigB => {
            notes.push(
                "B = (1/6) eps b^... with eps_1234567 = +1; duality round-trip sign is -1"
                    .to_string(),
            );
        }
        TensorChoice::F => {
            notes.push(
                "lowered with f_mnkl = f_mnk^s gamma_sl; matches the printed lists with \
                 global sign +1"
                    .to_string(),
            );
        }
        TensorChoice::T => {
            notes.push("unit-weight total antisymmetrization of f; equals -B".to_string());
        }
        TensorChoice::P => {
            notes.push("p_mn = f_mnmn for distinct imaginary pairs".to_string());
        }
    }
    notes
}

/// Builds the export record set for one tensor of one algebra.
pub fn export_tensor(kind: AlgebraKind, choice: TensorChoice) -> TensorExport {
    let components: Vec<Component> = match choice {
        TensorChoice::Gamma => {
            let m = metric_from_table(kind);
            (0..8)
                .map(|mu| Component {
                    indices: vec![mu, mu],
                    value: m.sign(mu),
                })
                .collect()
        }
        TensorChoice::SmallB => structure_tensor_from_table(kind)
            .expect("table-derived b")
            .nonzero()
            .into_iter()
            .map(|(idx, value)| Component {
                indices: idx.to_vec(),
                value,
            })
            .collect(),
        TensorChoice::BigB => {
            let b = structure_tensor_from_table(kind).expect("table-derived b");
            dual_tensor(kind, &b)
                .expect("dual of b")
                .nonzero()
                .into_iter()
                .map(|(idx, value)| Component {
                    indices: idx.to_vec(),
                    value,
                })
                .collect()
        }
        TensorChoice::F => extract_f(kind)
            .expect("f extraction")
            .nonzero_lowered()
            .into_iter()
            .map(|(idx, value)| Component {
                indices: idx.to_vec(),
                value,
            })
            .collect(),
        TensorChoice::T => {
            let f = extract_f(kind).expect("f extraction");
            decompose_f(&f)
                .nonzero_t()
                .into_iter()
                .map(|(idx, value)| Component {
                    indices: idx.to_vec(),
                    value,
                })
                .collect()
        }
        TensorChoice::P => {
            let f = extract_f(kind).expect("f extraction");
            decompose_f(&f)
                .nonzero_p()
                .into_iter()
                .map(|(idx, value)| Component {
                    indices: idx.to_vec(),
                    value,
                })
                .collect()
        }
    };
    TensorExport {
        algebra: kind.name().to_string(),
        tensor: choice.name().to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        convention_notes: notes(choice),
        components,
    }
}

impl TensorExport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export serializes") + "\n"
    }

    /// CSV with header `i1,...,in,value`.
    pub fn to_csv(&self) -> String {
        let arity = self.components.first().map_or(0, |c| c.indices.len());
        let mut out = String::new();
        for i in 1..=arity {
            out.push_str(&format!("i{i},"));
        }
        out.push_str("value\n");
        for c in &self.components {
            for idx in &c.indices {
                out.push_str(&format!("{idx},"));
            }
            out.push_str(&format!("{}\n", c.value));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_b_contains_the_672_component() {
        let e = export_tensor(AlgebraKind::SplitOctonion, TensorChoice::SmallB);
        assert!(e.components.contains(&Component {
            indices: vec![6, 7, 2],
            value: -1
        }));
        // sorted lexicographically
        let mut sorted = e.components.clone();
        sorted.sort_by(|a, b| a.indices.cmp(&b.indices));
        assert_eq!(sorted, e.components);
    }

    #[test]
    fn gamma_exports_eight_diagonal_rows() {
        let e = export_tensor(AlgebraKind::SplitOctonion, TensorChoice::Gamma);
        assert_eq!(e.components.len(), 8);
        let values: Vec<i64> = e.components.iter().map(|c| c.value).collect();
        assert_eq!(values, vec![1, 1, -1, 1, 1, 1, -1, -1]);
        let csv = e.to_csv();
        assert!(csv.starts_with("i1,i2,value\n"));
        assert_eq!(csv.lines().count(), 9);
    }

    #[test]
    fn json_round_trips() {
        for choice in [
            TensorChoice::SmallB,
            TensorChoice::BigB,
            TensorChoice::F,
            TensorChoice::T,
            TensorChoice::P,
        ] {
            let e = export_tensor(AlgebraKind::Octonion, choice);
            let parsed: TensorExport = serde_json::from_str(&e.to_json()).unwrap();
            assert_eq!(parsed, e);
        }
    }

    #[test]
    fn case_sensitive_tensor_names() {
        assert_eq!(TensorChoice::parse("b"), Some(TensorChoice::SmallB));
        assert_eq!(TensorChoice::parse("B"), Some(TensorChoice::BigB));
        assert_eq!(TensorChoice::parse("Gamma"), None);
    }
}
