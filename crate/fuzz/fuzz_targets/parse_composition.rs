#![no_main]

use libfuzzer_sys::fuzz_target;
use stcore::{inverse_lambda_d, inverse_lambda_o, lambda_d, lambda_o, CompositionC};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(mu) = s.parse::<CompositionC>() else { return };

    assert_eq!(mu.to_string().parse::<CompositionC>().as_ref(), Ok(&mu));
    let d = lambda_d(&mu);
    let o = lambda_o(&mu);
    assert_eq!(d.perimeter(), mu.weight());
    assert_eq!(o.perimeter(), mu.weight());
    assert_eq!(inverse_lambda_d(&d).as_ref(), Ok(&mu));
    assert_eq!(inverse_lambda_o(&o).as_ref(), Ok(&mu));
});
