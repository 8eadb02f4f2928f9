#![no_main]

use libfuzzer_sys::fuzz_target;
use rpstruct::constructions::{parse_point, PRecipe};

// "<id> <t> <k|-> <point>"
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let mut parts = s.splitn(4, ' ');
    let (Some(id), Some(t), Some(k), Some(point)) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
        return;
    };
    let Ok(t) = t.parse::<usize>() else { return };
    let k = k.parse::<usize>().ok();
    let Ok(recipe) = PRecipe::from_id(id, t, k) else { return };
    if let Ok(p) = parse_point(point) {
        if p.len() == recipe.arity() {
            let _ = recipe.build(&p);
        }
    }
});
