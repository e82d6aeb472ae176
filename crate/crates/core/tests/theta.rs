use ellipfn::integrals::ellip_k;
use ellipfn::jacobi::sncndn;
use ellipfn::theta::{elnome, ielnome, jtheta, mnome, neville_theta_m, Neville, Theta};
use std::f64::consts::PI;

#[test]
fn jacobi_identity() {
    for q in [0.05, 0.3, 0.6, 0.9] {
        let (t2, t3, t4) = (
            jtheta(Theta::Two, 0.0, q),
            jtheta(Theta::Three, 0.0, q),
            jtheta(Theta::Four, 0.0, q),
        );
        assert!(
            (t2.powi(4) + t4.powi(4) - t3.powi(4)).abs() <= 1e-12 * t3.powi(4),
            "q = {q}"
        );
    }
}

#[test]
fn theta3_period() {
    // pi - PI
    const PI_LO: f64 = 1.224_646_799_147_353_2e-16;
    for q in [0.1, 0.5, 0.95] {
        for x in [-2.0, 0.3, 1.1, 7.0] {
            let y = x + PI;
            // y - x - pi exactly: rounding of the shift plus the part of pi
            // that PI misses
            let bb = y - x;
            let shift_err = ((x - (y - bb)) + (PI - bb)) - PI_LO;
            let h = 1e-6;
            let slope = (jtheta(Theta::Three, x + h, q) - jtheta(Theta::Three, x - h, q)) / (2.0 * h);
            let (a, b) = (jtheta(Theta::Three, y, q), jtheta(Theta::Three, x, q));
            // the terms sum to theta3(0, q) in magnitude; near a zero of theta3
            // that bounds the attainable absolute error
            let size = jtheta(Theta::Three, 0.0, q);
            let tol = 2.0 * f64::EPSILON * size + slope.abs() * shift_err.abs();
            assert!((a - b).abs() <= tol, "{q} {x}: {a} {b} tol {tol}");
        }
    }
}

#[test]
fn theta3_at_e_minus_pi() {
    // pi^(1/4) / Gamma(3/4)
    let want = 1.086_434_811_213_308_014_575_316_121_022_5;
    assert!((jtheta(Theta::Three, 0.0, (-PI).exp()) - want).abs() < 4e-16);
}

#[test]
fn neville_quotients() {
    for i in 1..=9 {
        let m = i as f64 / 10.0;
        let k = ellip_k(m);
        for j in -8..=8 {
            let x = j as f64 * k / 4.0;
            let t = sncndn(x, m);
            let n = neville_theta_m(Neville::N, x, m);
            assert!(
                (neville_theta_m(Neville::S, x, m) / n - t.sn).abs() <= 1e-10,
                "sn {m} {x}"
            );
            assert!(
                (neville_theta_m(Neville::C, x, m) / n - t.cn).abs() <= 1e-10,
                "cn {m} {x}"
            );
            assert!(
                (neville_theta_m(Neville::D, x, m) / n - t.dn).abs() <= 1e-10,
                "dn {m} {x}"
            );
        }
    }
}

#[test]
fn nome_round_trip() {
    for i in 0..=1000 {
        let k = 0.9999 * i as f64 / 1000.0;
        assert!((ielnome(elnome(k)) - k).abs() <= 1e-12, "k = {k}");
    }
    assert!((ielnome(elnome(0.3)) - 0.3).abs() < 1e-12);
}

#[test]
fn nome_from_oracle_integrals() {
    use ellipfn::oracle::reference;
    let want = (-PI * reference("melCK", &[0.25]).unwrap() / reference("melK", &[0.25]).unwrap()).exp();
    assert!((mnome(0.25) - want).abs() < 1e-15);
}

#[test]
fn series_truncation_is_converged() {
    // one more term past the stopping index is below eps of the sum
    for q in [0.1, 0.5, 0.9, 0.999] {
        for x in [0.0, 0.4, 1.3] {
            let v = jtheta(Theta::Three, x, q);
            let n = (1..)
                .find(|&n: &i32| q.powi(n * n) <= f64::EPSILON / 4.0 * v.abs())
                .unwrap();
            let next = 2.0 * q.powi((n + 1) * (n + 1));
            assert!(next < f64::EPSILON * v.abs(), "{q} {x}");
        }
    }
}
