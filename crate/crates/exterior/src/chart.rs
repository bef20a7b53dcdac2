//! Ordered coordinate charts.

use std::collections::BTreeMap;
use std::sync::Arc;

/// An ordered list of coordinate names. The order fixes the meaning of every
/// index tuple used by forms and multivectors on the chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Chart {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Chart> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect::<BTreeMap<_, _>>();
        assert_eq!(index.len(), names.len(), "duplicate coordinate name");
        Arc::new(Chart { names, index })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Index of a coordinate that must exist.
    pub fn expect_index(&self, name: &str) -> usize {
        self.index(name)
            .unwrap_or_else(|| panic!("no coordinate `{name}` in chart {:?}", self.names))
    }
}
