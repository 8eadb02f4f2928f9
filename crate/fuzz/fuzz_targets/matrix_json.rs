#![no_main]

use libfuzzer_sys::fuzz_target;
use rpstruct::Matrix;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Matrix::from_json(s) {
        assert_eq!(Matrix::from_json(&m.to_json()).expect("round trip"), m);
    }
});
