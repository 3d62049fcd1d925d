#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::{from_beta, to_beta, BetaSet};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(beta) = s.parse::<BetaSet>() else { return };

    assert_eq!(beta.to_string().parse::<BetaSet>().as_ref(), Ok(&beta));
    let lam = from_beta(&beta);
    assert_eq!(to_beta(&lam), beta);
    assert_eq!(lam.perimeter(), beta.largest().unwrap_or(0));
    for t in 1..=8 {
        // membership scan only; the partition side may be far too large
        let _ = beta.is_t_core(t);
    }
});
