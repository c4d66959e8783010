#![no_main]

use libfuzzer_sys::fuzz_target;
use qeslab_core::diffop::{DegreeProfile, MatrixDiffOp};
use qeslab_core::poly::PolyVec2;
use qeslab_core::c64;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(op) = MatrixDiffOp::from_json(text) else { return };

    // Accepted documents must survive a serialize/parse round trip.
    let again = MatrixDiffOp::from_json(&op.to_json()).expect("round trip parses");
    assert_eq!(op, again);

    // Apply and grade small operators; neither may panic.
    if op.terms().len() <= 32
        && op.terms().iter().all(|t| t.power <= 16 && t.deriv <= 16)
    {
        let v = PolyVec2::new(
            qeslab_core::poly::Poly::new(vec![c64(1.0, -0.5), c64(0.25, 2.0)]),
            qeslab_core::poly::Poly::monomial(3, c64(-1.0, 1.0)),
        );
        let _ = op.apply(&v);
        let profile = DegreeProfile::new(2, 3);
        let g = op.grade_decompose(profile);
        assert_eq!(g.reassemble(), op);
    }
});
