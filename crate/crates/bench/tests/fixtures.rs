use defect_bench::{base_pair, cone_pair, cube_of_maximal, cyclic4, FIELDS};
use defect_core::{build_model, InvariantConfig, TensorSetup};

#[test]
fn fixtures_are_valid() {
    for f in FIELDS {
        assert!(!cyclic4(f).groebner().is_unit());
        assert_eq!(build_model(&cube_of_maximal(f).validate().unwrap()).unwrap().dimension(), 10);
        for (a, b) in [cone_pair(f), base_pair(f)] {
            TensorSetup::new("fixture", &a, &b, &InvariantConfig::default()).unwrap();
        }
    }
}
