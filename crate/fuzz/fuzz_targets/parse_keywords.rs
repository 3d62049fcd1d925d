#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::search::Filter;
use stcore::verify::Claim;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(filter) = s.parse::<Filter>() {
        assert_eq!(filter.as_str().parse::<Filter>(), Ok(filter));
    }
    if let Ok(claim) = s.parse::<Claim>() {
        assert_eq!(claim.id().parse::<Claim>().ok(), Some(claim));
    }
});
