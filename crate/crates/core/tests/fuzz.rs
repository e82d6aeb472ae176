use ellipfn::elemental::Registry;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

const SPECIAL: [f64; 16] = [
    0.0,
    -0.0,
    1.0,
    -1.0,
    0.5,
    2.0,
    5e-324,
    -5e-324,
    2.2250738585072014e-308,
    1e-300,
    1e300,
    -1e300,
    f64::MAX,
    f64::INFINITY,
    f64::NEG_INFINITY,
    f64::NAN,
];

fn draw(rng: &mut ChaCha8Rng) -> f64 {
    match rng.random_range(0..4) {
        0 => SPECIAL[rng.random_range(0..SPECIAL.len())],
        1 => rng.random_range(-2.0..2.0),
        2 => {
            let e = rng.random_range(-300.0..300.0);
            let s = if rng.random::<bool>() { 1.0 } else { -1.0 };
            s * 10f64.powf(e)
        }
        _ => f64::from_bits(rng.random::<u64>()),
    }
}

#[test]
fn every_function_terminates_quickly() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let entries = Registry::global().entries();
    let mut slowest = Duration::ZERO;
    for _ in 0..50_000 {
        let d = &entries[rng.random_range(0..entries.len())];
        let args: Vec<f64> = (0..d.arity).map(|_| draw(&mut rng)).collect();
        let t = Instant::now();
        let v = d.eval(&args);
        let dt = t.elapsed();
        slowest = slowest.max(dt);
        assert!(v.is_nan() || v.is_infinite() || v.is_finite());
        assert!(dt < Duration::from_millis(1), "{} {args:?} took {dt:?}", d.name);
    }
}
