//! The README's library example, kept compiling and true.

use wavecount::degrees::Degrees;
use wavecount::waves::{denumerant, WaveDecomposition};

#[test]
fn readme_example_holds() {
    let d = Degrees::of(&[3, 4]);
    let waves = WaveDecomposition::of(&d);
    for l in 0..=24 {
        // denumerant = W1(lbar) + (-1)^l W2(lbar) + periodic residual
        let residual = wavecount::waves::undulant(&d, l);
        assert_eq!(
            wavecount::rat_int(denumerant(&d, l) as i64),
            waves.evaluate(l) + residual,
        );
    }
}
