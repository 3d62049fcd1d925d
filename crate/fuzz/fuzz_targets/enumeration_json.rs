#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::json::EnumerationDoc;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = EnumerationDoc::parse(s) else { return };

    let text = doc.to_json();
    let again = EnumerationDoc::parse(&text).expect("serialized documents parse");
    assert_eq!(again, doc);
    assert_eq!(again.to_json(), text);
});
