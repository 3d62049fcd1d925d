#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::verify::VerificationReport;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(report) = VerificationReport::parse(s) else {
        return;
    };

    assert_eq!(report.pass, report.mismatches().next().is_none());
    let again = VerificationReport::parse(&report.to_json()).expect("serialized reports parse");
    assert_eq!(again, report);
});
