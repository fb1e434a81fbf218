//! Deterministic text rendering for reports.
//!
//! Every float the toolkit emits goes through [`fmt_g10`], which renders a
//! fixed 10 significant digits (the shorter of plain and scientific notation,
//! like C's `%.10g`) and trims trailing zeros.  Rust's float formatting is
//! exact and platform-independent, so identical runs produce byte-identical
//! files regardless of thread count, OS, or optimization level.

/// Formats `x` with 10 significant digits, `%.10g`-style.
pub fn fmt_g10(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string(); // covers -0.0 as well
    }
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    // One pass in scientific notation pins down the decimal exponent after
    // rounding to 10 significant digits.
    let sci = format!("{x:.9e}");
    let (mantissa, exp) = sci.split_once('e').expect("{:e} always carries an exponent");
    let exp: i32 = exp.parse().expect("float exponent is an integer");
    if (-4..10).contains(&exp) {
        let decimals = (9 - exp).max(0) as usize;
        trim_fraction(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_fraction(mantissa.to_string()))
    }
}

/// Drops trailing fractional zeros (and a bare trailing point).
fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// Renders `s` as a JSON string literal, quotes included.
pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits_in_plain_range() {
        assert_eq!(fmt_g10(std::f64::consts::FRAC_1_SQRT_2), "0.7071067812");
        assert_eq!(fmt_g10(3.0 * std::f64::consts::SQRT_2), "4.242640687");
        assert_eq!(fmt_g10(-3.0 * std::f64::consts::SQRT_2), "-4.242640687");
        assert_eq!(fmt_g10(30.0f64.sqrt() / 2.0), "2.738612788");
    }

    #[test]
    fn integers_lose_their_fraction() {
        assert_eq!(fmt_g10(36.0), "36");
        assert_eq!(fmt_g10(-1.0), "-1");
        assert_eq!(fmt_g10(1234567890.0), "1234567890");
    }

    #[test]
    fn zeros_and_signed_zero() {
        assert_eq!(fmt_g10(0.0), "0");
        assert_eq!(fmt_g10(-0.0), "0");
    }

    #[test]
    fn scientific_notation_outside_the_plain_range() {
        assert_eq!(fmt_g10(1e-12), "1e-12");
        assert_eq!(fmt_g10(-2.5e15), "-2.5e15");
        assert_eq!(fmt_g10(12345678901.0), "1.23456789e10");
        assert_eq!(fmt_g10(3.25e-7), "3.25e-7");
    }

    #[test]
    fn boundary_exponents() {
        // exp = -4 is still plain, exp = 9 is the largest plain magnitude.
        assert_eq!(fmt_g10(0.000123), "0.000123");
        assert_eq!(fmt_g10(0.0000123), "1.23e-5");
        assert_eq!(fmt_g10(9999999999.0), "9999999999");
    }

    #[test]
    fn rounding_carries_across_a_power_of_ten() {
        assert_eq!(fmt_g10(0.99999999996), "1");
    }

    #[test]
    fn non_finite_values_render_as_words() {
        assert_eq!(fmt_g10(f64::NAN), "nan");
        assert_eq!(fmt_g10(f64::INFINITY), "inf");
        assert_eq!(fmt_g10(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn json_strings_escape_the_graph6_alphabet() {
        // graph6 payloads may contain backslashes; quotes and controls too.
        assert_eq!(json_string(r"C\"), r#""C\\""#);
        assert_eq!(json_string("a\"b\nc"), "\"a\\\"b\\nc\"");
        assert_eq!(json_string("plain"), "\"plain\"");
    }
}
