#![no_main]

use libfuzzer_sys::fuzz_target;
use stperm_core::formats::load_complex;
use stperm_core::stable::support_profile;

fuzz_target!(|data: &[u8]| {
    if data.len() > 4096 {
        return;
    }
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok((_, c)) = load_complex(text) {
            if c.group().order() <= 12 && c.dims().iter().sum::<usize>() <= 48 {
                let _ = support_profile(&c);
            }
        }
    }
});
