#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::json::TableDoc;

fuzz_target!(|data: &[u8]| {
    let Ok(doc) = serde_json::from_slice::<TableDoc>(data) else {
        return;
    };
    let Ok(table) = doc.to_table() else { return };

    let csv = table.to_csv("inf");
    assert_eq!(csv.lines().count(), table.max_s as usize + 1);
    assert_eq!(
        TableDoc::from_table(&table).to_table().map(|t| t.to_csv("inf")),
        Ok(csv)
    );
});
