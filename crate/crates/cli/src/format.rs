//! `%.Ng`-style number formatting.

/// Formats like C's `%.{digits}g`: `digits` significant digits, trailing
/// zeros dropped, scientific notation when the decimal exponent is below
/// -4 or at least `digits`. Non-finite values print as `nan`, `inf`,
/// `-inf`.
pub fn fmt_g(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v);
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let ds: String = mant.chars().filter(char::is_ascii_digit).collect();
    let sign = if neg { "-" } else { "" };
    if exp < -4 || exp >= digits as i32 {
        let (head, tail) = ds.split_at(1);
        let tail = tail.trim_end_matches('0');
        let e_sign = if exp < 0 { '-' } else { '+' };
        if tail.is_empty() {
            format!("{sign}{head}e{e_sign}{:02}", exp.abs())
        } else {
            format!("{sign}{head}.{tail}e{e_sign}{:02}", exp.abs())
        }
    } else if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        format!("{sign}0.{zeros}{}", ds.trim_end_matches('0'))
    } else {
        let (int, frac) = ds.split_at(exp as usize + 1);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

/// Seventeen significant digits: enough to round-trip any `f64`.
pub fn fmt17(v: f64) -> String {
    fmt_g(v, 17)
}
