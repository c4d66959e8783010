#![no_main]

use libfuzzer_sys::fuzz_target;
use qeslab_core::models::hyper::HyperParams;
use qeslab_core::models::quartic::QuarticParams;
use qeslab_core::models::trig::TrigParams;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };

    if let Ok(p) = serde_json::from_str::<TrigParams>(text) {
        let s = serde_json::to_string(&p).expect("serializes");
        let q: TrigParams = serde_json::from_str(&s).expect("round trip parses");
        assert_eq!(p, q);
    }
    if let Ok(p) = serde_json::from_str::<HyperParams>(text) {
        let s = serde_json::to_string(&p).expect("serializes");
        let q: HyperParams = serde_json::from_str(&s).expect("round trip parses");
        assert_eq!(p, q);
    }
    if let Ok(p) = serde_json::from_str::<QuarticParams>(text) {
        let s = serde_json::to_string(&p).expect("serializes");
        let q: QuarticParams = serde_json::from_str(&s).expect("round trip parses");
        assert_eq!(p, q);
    }
});
