#![no_main]

use libfuzzer_sys::fuzz_target;
use stperm_core::formats::ComplexSpec;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(spec) = ComplexSpec::parse(text) {
            let again = ComplexSpec::parse(&spec.to_json()).expect("serialized spec reparses");
            assert_eq!(again.to_json(), spec.to_json());
        }
    }
});
