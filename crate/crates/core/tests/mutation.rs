use rdi_core::em::TensorCoefficients;
use rdi_core::validation::{all_passed, run_validation_suite_with};

fn survivors(relative: f64) -> Vec<String> {
    let base = TensorCoefficients::REFERENCE;
    (0..TensorCoefficients::slot_count())
        .filter_map(|i| {
            let (slot, c) = base.perturbed(i, relative).unwrap();
            all_passed(&run_validation_suite_with(&c)).then(|| slot.to_string())
        })
        .collect()
}

#[test]
fn reference_table_passes() {
    assert!(all_passed(&run_validation_suite_with(&TensorCoefficients::REFERENCE)));
}

#[test]
fn every_coefficient_is_watched() {
    for rel in [1e-3, -1e-3] {
        let s = survivors(rel);
        assert!(s.is_empty(), "undetected at {rel}: {s:?}");
    }
}

#[test]
fn one_percent_trips_a_static_case() {
    // Every coefficient that survives at a = 0 shows up in some static report.
    let base = TensorCoefficients::REFERENCE;
    let mut any = false;
    for i in 0..TensorCoefficients::slot_count() {
        let (_, c) = base.perturbed(i, 1e-2).unwrap();
        let r = run_validation_suite_with(&c);
        any |= r.iter().any(|r| r.case_id.starts_with("em-static") && !r.passed);
    }
    assert!(any);
}
