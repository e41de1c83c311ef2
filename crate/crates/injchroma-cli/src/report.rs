//! Attainment tables and violation certificates: the diff-able artifacts a
//! verification run leaves behind.

use injchroma::metrics::Girth;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Count of bound-attaining graphs per (order, maximum degree) cell.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttainmentTable {
    cells: BTreeMap<(usize, usize), u64>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct TableRow {
    order: usize,
    delta: usize,
    count: u64,
}

impl AttainmentTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, order: usize, delta: usize) {
        *self.cells.entry((order, delta)).or_insert(0) += 1;
    }

    pub fn get(&self, order: usize, delta: usize) -> u64 {
        self.cells.get(&(order, delta)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Fold another table in; aggregation is a commutative monoid, so any
    /// partition of a stream merges to the same table.
    pub fn merge(&mut self, other: &AttainmentTable) {
        for (&key, &count) in &other.cells {
            *self.cells.entry(key).or_insert(0) += count;
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }

    /// CSV with one row per order and one column per maximum degree seen.
    pub fn to_csv(&self) -> String {
        let mut deltas: Vec<usize> = self.cells.keys().map(|&(_, d)| d).collect();
        deltas.sort_unstable();
        deltas.dedup();
        let mut orders: Vec<usize> = self.cells.keys().map(|&(n, _)| n).collect();
        orders.sort_unstable();
        orders.dedup();
        let mut out = String::from("n");
        for d in &deltas {
            out.push_str(&format!(",{d}"));
        }
        out.push('\n');
        for n in orders {
            out.push_str(&n.to_string());
            for &d in &deltas {
                out.push_str(&format!(",{}", self.get(n, d)));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<TableRow> = self
            .cells
            .iter()
            .map(|(&(order, delta), &count)| TableRow { order, delta, count })
            .collect();
        serde_json::to_string_pretty(&rows).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        let rows: Vec<TableRow> = serde_json::from_str(text)?;
        let mut table = AttainmentTable::new();
        for row in rows {
            *table.cells.entry((row.order, row.delta)).or_insert(0) += row.count;
        }
        Ok(table)
    }
}

/// Standalone counterexample certificate: decoding `graph6` and re-solving
/// must reproduce `chi_i > bound`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ViolationRecord {
    pub graph6: String,
    pub order: usize,
    pub max_degree: usize,
    /// `None` when acyclic.
    pub girth: Option<usize>,
    pub chi_i: u32,
    pub bound: u32,
    pub witness: Vec<u32>,
}

/// A graph whose solve hit the node budget; never counted as satisfying.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct UnresolvedRecord {
    pub graph6: String,
    pub lower: u32,
    pub upper: u32,
}

pub fn girth_to_option(g: Girth) -> Option<usize> {
    match g {
        Girth::Finite(v) => Some(v),
        Girth::Infinite => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_renders_header_only() {
        assert_eq!(AttainmentTable::new().to_csv(), "n\n");
    }

    #[test]
    fn single_cell_csv() {
        let mut t = AttainmentTable::new();
        t.record(9, 3);
        assert_eq!(t.to_csv(), "n,3\n9,1\n");
    }

    #[test]
    fn csv_grid_is_dense_over_seen_keys() {
        let mut t = AttainmentTable::new();
        t.record(9, 3);
        t.record(10, 5);
        t.record(10, 3);
        t.record(10, 3);
        assert_eq!(t.to_csv(), "n,3,5\n9,1,0\n10,2,1\n");
    }

    #[test]
    fn json_round_trip() {
        let mut t = AttainmentTable::new();
        t.record(9, 3);
        t.record(11, 6);
        t.record(11, 6);
        let back = AttainmentTable::from_json(&t.to_json()).unwrap();
        assert_eq!(t, back);
    }

    #[test]
    fn merge_is_commutative() {
        let mut a = AttainmentTable::new();
        a.record(9, 3);
        let mut b = AttainmentTable::new();
        b.record(9, 3);
        b.record(10, 4);
        let mut ab = a.clone();
        ab.merge(&b);
        let mut ba = b.clone();
        ba.merge(&a);
        assert_eq!(ab, ba);
        assert_eq!(ab.get(9, 3), 2);
        assert_eq!(ab.total(), 3);
    }
}
