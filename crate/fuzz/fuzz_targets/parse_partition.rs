#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::{distinct_to_odd, from_beta, odd_to_distinct, to_beta, Partition};

// the bijection walks the perimeter one step at a time
const MAX_PERIMETER: u32 = 1 << 16;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(lam) = s.parse::<Partition>() else { return };

    assert_eq!(lam.to_string().parse::<Partition>().as_ref(), Ok(&lam));
    let beta = to_beta(&lam);
    assert_eq!(from_beta(&beta), lam);
    assert_eq!(beta.is_twin_free(), lam.has_distinct_parts());

    if lam.perimeter() <= MAX_PERIMETER {
        if let Ok(odd) = distinct_to_odd(&lam) {
            assert_eq!(odd.perimeter(), lam.perimeter());
            assert_eq!(odd_to_distinct(&odd).as_ref(), Ok(&lam));
        }
    }
});
