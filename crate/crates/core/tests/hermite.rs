use std::sync::OnceLock;

use rug::Rational;

use k3vw::qseries::eta_inv24_table;
use k3vw::turan::{hermite, hermite_deviation, renormalized_jensen, RationalSequence};
use k3vw::CoefficientTable;

const N: i64 = 10_000;

fn table() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| eta_inv24_table(N + 4).unwrap())
}

fn coefficients(d: u32) -> Vec<f64> {
    let seq = RationalSequence::from_fn(N, N + d as i64, |m| Ok(Rational::from(table().get(m - 1)?))).unwrap();
    renormalized_jensen(&seq, d, N, 1, 128).unwrap().iter().map(|c| c.to_f64()).collect()
}

fn assert_close(got: &[f64], want: &[f64]) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
    }
}

#[test]
fn degree_two_at_ten_thousand() {
    let c = coefficients(2);
    assert_close(&c, &[-1.6690496964541353, 1.0731549485960457, 0.9986576214685269]);

    // the linear term keeps the raw coefficients away from X² − 2
    let seq = RationalSequence::from_fn(N, N + 2, |m| Ok(Rational::from(table().get(m - 1)?))).unwrap();
    let dev = hermite_deviation(&seq, 2, N, 1, 128).unwrap().to_f64();
    assert!((dev - 1.0731549485960457).abs() < 1e-9);

    // completing the square: Ĵ = c₂ (X + s)² + κ with κ/c₂ close to −2
    let s = c[1] / (2.0 * c[2]);
    let kappa = c[0] / c[2] - s * s;
    assert!((kappa + 2.0).abs() < 0.05, "shifted constant {kappa}");
}

#[test]
fn degree_three_at_ten_thousand() {
    let c = coefficients(3);
    assert_close(&c, &[-3.228077674923165, -4.995011703203404, 1.6159927416777495, 0.9979825059522123]);

    // depressing the cubic by X → X − c₂/(3c₃) recovers the −6X of H₃
    let (a, b, e) = (c[2] / c[3], c[1] / c[3], c[0] / c[3]);
    let linear = b - a * a / 3.0;
    let constant = 2.0 * a * a * a / 27.0 - a * b / 3.0 + e;
    assert!((linear + 6.0).abs() < 0.3, "depressed linear term {linear}");
    assert!(constant.abs() < 0.3, "depressed constant {constant}");
    assert_eq!(hermite(3).to_string(), "X^3 - 6*X");
}
