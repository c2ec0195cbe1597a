//! Dimensions of both images and both commutants at q = 5/7.
use qbrauer::coeff::rat;
use qbrauer::duality::{centralizer_dims, DualityType, ParamSet, DEFAULT_MAX_TENSOR_DIM};

fn main() {
    for (v, m, n) in [(DualityType::AI, 2, 2), (DualityType::AI, 3, 2), (DualityType::AI, 3, 3), (DualityType::AII, 2, 2)] {
        let p = ParamSet::new(v, m, n).unwrap();
        let d = centralizer_dims(&p, rat(5, 7), 0, false, DEFAULT_MAX_TENSOR_DIM).unwrap();
        println!(
            "{v:?} m = {m}, n = {n}: B_n image {} / commutant {}, U image {} / commutant {}, match: {}",
            d.dim_qbrauer_image,
            d.dim_commutant_of_uq,
            d.dim_uq_image,
            d.dim_commutant_of_qbrauer,
            d.double_centralizer()
        );
    }
}
