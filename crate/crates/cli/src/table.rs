//! Multiplication-table rendering.

use octonion_algebra::algebra::{AlgebraKind, CayleyTable};

/// The full 8x8 signed table, one row per line, entries in the sign layout
/// of the printed tables (`-0` denotes `-E_0`).
pub fn render_ascii(kind: AlgebraKind) -> String {
    let table = CayleyTable::new(kind);
    let mut out = String::new();
    for i in 0..8 {
        let row: Vec<String> = (0..8)
            .map(|j| {
                let e = table.entry(i, j);
                if e.sign < 0 {
                    format!("-{}", e.index)
                } else {
                    format!("{}", e.index)
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// JSON form that round-trips through the `CayleyTable` loader.
pub fn render_json(kind: AlgebraKind) -> String {
    serde_json::to_string_pretty(&CayleyTable::new(kind)).expect("table serializes") + "\n"
}
