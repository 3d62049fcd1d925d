//! Serialized documents parse back to what produced them.

use stcore::json::{EnumerationDoc, TableDoc};
use stcore::search::{enumerate_core, enumerate_core_bounded, Filter};
use stcore::table::CoreTable;

#[test]
fn enumeration_documents_round_trip() {
    for (s, t) in [(1, 2), (3, 5), (5, 7), (4, 9)] {
        for filter in Filter::ALL {
            let res = enumerate_core(s, t, filter).unwrap();
            for include in [false, true] {
                let doc = EnumerationDoc::from_result(&res, include);
                let text = doc.to_json();
                let parsed = EnumerationDoc::parse(&text).unwrap();
                assert_eq!(parsed, doc);
                assert_eq!(parsed.to_json(), text);
                assert_eq!(parsed.count().unwrap(), res.count);
            }
        }
    }
}

#[test]
fn partial_documents_keep_their_bound() {
    let res = enumerate_core_bounded(2, 4, Filter::All, 6);
    let doc = EnumerationDoc::from_result(&res, true);
    let parsed = EnumerationDoc::parse(&doc.to_json()).unwrap();
    assert_eq!(parsed.bound, Some(6));
    assert!(parsed.partial);
}

#[test]
fn tampered_documents_are_rejected() {
    let res = enumerate_core(5, 7, Filter::Distinct).unwrap();
    let good = EnumerationDoc::from_result(&res, true);

    let mut bad = good.clone();
    bad.count = "17".into();
    assert!(EnumerationDoc::parse(&bad.to_json()).is_err());

    let mut bad = good.clone();
    bad.witnesses = vec![vec![9, 5, 4, 2, 2]];
    assert!(EnumerationDoc::parse(&bad.to_json()).is_err());

    let mut bad = good;
    bad.max_size = 20;
    assert!(EnumerationDoc::parse(&bad.to_json()).is_err());

    assert!(EnumerationDoc::parse("{").is_err());
}

#[test]
fn table_documents_round_trip() {
    for filter in Filter::ALL {
        let table = CoreTable::compute(6, 7, filter);
        let doc = TableDoc::from_table(&table);
        let back = doc.to_table().unwrap();
        assert_eq!(back.to_csv("inf"), table.to_csv("inf"));
    }
}
