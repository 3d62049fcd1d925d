//! Stable JSON documents.
//!
//! Counts are string-encoded so arbitrarily large integers survive any JSON
//! reader. Parsing validates every partition and count it reads back.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::search::{EnumerationResult, Filter};
use crate::table::{Cell, CoreTable, CSV_INFINITY};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDoc {
    pub s: u32,
    pub t: u32,
    pub filter: Filter,
    pub count: String,
    pub max_size: u64,
    pub witnesses: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u32>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
}

fn parts_of(list: &[Partition]) -> Vec<Vec<u32>> {
    list.iter().map(|p| p.parts().to_vec()).collect()
}

impl EnumerationDoc {
    pub fn from_result(res: &EnumerationResult, include_partitions: bool) -> Self {
        EnumerationDoc {
            s: res.s,
            t: res.t,
            filter: res.filter,
            count: res.count.to_string(),
            max_size: res.max_size,
            witnesses: parts_of(&res.max_size_witnesses),
            partitions: include_partitions.then(|| parts_of(&res.partitions)),
            bound: res.bound,
            partial: res.partial,
        }
    }

    /// Parses and validates a document.
    pub fn parse(input: &str) -> Result<Self> {
        let doc: EnumerationDoc = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn count(&self) -> Result<BigUint> {
        if self.count.is_empty() || !self.count.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!(
                "count {:?} is not a nonnegative integer",
                self.count
            )));
        }
        self.count
            .parse()
            .map_err(|e| Error::Parse(format!("count {:?}: {e}", self.count)))
    }

    fn validate(&self) -> Result<()> {
        let count = self.count()?;
        let listed = self.partitions.iter().flatten();
        for parts in self.witnesses.iter().chain(listed) {
            let p = Partition::new(parts.clone())?;
            if !self.filter.accepts(&p) {
                return Err(Error::Parse(format!(
                    "{p} does not satisfy filter {}",
                    self.filter
                )));
            }
        }
        for w in &self.witnesses {
            if w.iter().map(|&x| u64::from(x)).sum::<u64>() != self.max_size {
                return Err(Error::Parse(format!(
                    "witness {w:?} does not have size {}",
                    self.max_size
                )));
            }
        }
        if let Some(list) = &self.partitions {
            if BigUint::from(list.len()) != count {
                return Err(Error::Parse(format!(
                    "count {count} disagrees with {} listed partitions",
                    list.len()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("enumeration documents always serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub filter: Filter,
    pub max_s: u32,
    pub max_t: u32,
    /// `cells[s - 1][t - 1]`, with infinite cells as `"inf"`.
    pub cells: Vec<Vec<String>>,
}

impl TableDoc {
    pub fn from_table(table: &CoreTable) -> Self {
        TableDoc {
            filter: table.filter,
            max_s: table.max_s,
            max_t: table.max_t,
            cells: table
                .rows
                .iter()
                .map(|row| row.iter().map(|c| c.render(CSV_INFINITY)).collect())
                .collect(),
        }
    }

    pub fn to_table(&self) -> Result<CoreTable> {
        if self.cells.len() != self.max_s as usize
            || self.cells.iter().any(|r| r.len() != self.max_t as usize)
        {
            return Err(Error::Parse("table shape disagrees with max_s/max_t".into()));
        }
        let rows = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        if c == CSV_INFINITY {
                            Ok(Cell::Infinite)
                        } else if !c.is_empty() && c.bytes().all(|b| b.is_ascii_digit()) {
                            Ok(Cell::Count(c.parse().expect("digits parse")))
                        } else {
                            Err(Error::Parse(format!("bad table cell {c:?}")))
                        }
                    })
                    .collect::<Result<Vec<Cell>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CoreTable {
            filter: self.filter,
            max_s: self.max_s,
            max_t: self.max_t,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::{enumerate_core, enumerate_core_bounded};

    #[test]
    fn enumeration_document_shape() {
        let res = enumerate_core(3, 5, Filter::Distinct).unwrap();
        let doc = EnumerationDoc::from_result(&res, true);
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(
            value,
            serde_json::json!({
                "s": 3, "t": 5, "filter": "distinct", "count": "4", "max_size": 4,
                "witnesses": [[3, 1]],
                "partitions": [[], [1], [2], [3, 1]]
            })
        );
        let brief = EnumerationDoc::from_result(&res, false).to_json();
        assert!(!brief.contains("partitions"));
    }

    #[test]
    fn bounded_document_is_marked_partial() {
        let res = enumerate_core_bounded(2, 4, Filter::Distinct, 6);
        let json = EnumerationDoc::from_result(&res, false).to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["partial"], serde_json::json!(true));
        assert_eq!(value["bound"], serde_json::json!(6));
    }

    #[test]
    fn parse_rejects_inconsistent_documents() {
        let ok = r#"{"s":3,"t":5,"filter":"distinct","count":"4","max_size":4,"witnesses":[[3,1]]}"#;
        assert!(EnumerationDoc::parse(ok).is_ok());
        let bad_count = ok.replace("\"4\"", "\"-4\"");
        assert!(EnumerationDoc::parse(&bad_count).is_err());
        let bad_witness = ok.replace("[[3,1]]", "[[1,3]]");
        assert!(EnumerationDoc::parse(&bad_witness).is_err());
        let wrong_filter = ok.replace("[[3,1]]", "[[2,2]]");
        assert!(EnumerationDoc::parse(&wrong_filter).is_err());
        let listed = ok.replace("}", r#","partitions":[[]]}"#);
        assert!(EnumerationDoc::parse(&listed).is_err());
        assert!(EnumerationDoc::parse("not json").is_err());
    }

    #[test]
    fn table_document_round_trip() {
        let table = CoreTable::compute(4, 5, Filter::Distinct);
        let doc = TableDoc::from_table(&table);
        let back: TableDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back.to_table().unwrap(), table);
    }
}
