//! Command-line literals: complex numbers as `a+bi` and plain integers.

use tornheim::CVal;

/// Parses `a`, `a+bi`, `a-bi`, `bi`, `i`. Exponents such as `1e-3+2i` are
/// fine since a sign right after `e` never splits the literal.
pub fn parse_complex(s: &str) -> Result<CVal, String> {
    let t = s.trim();
    let bad = || format!("not a complex literal: {s:?}");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().ok().filter(|re| re.is_finite()).map(|re| CVal::new(re, 0.0)).ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => im.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(CVal::new(re, im))
}

pub fn parse_int(s: &str) -> Result<i64, String> {
    s.trim().parse::<i64>().map_err(|_| format!("not an integer: {s:?}"))
}

/// Canonical echo of a parsed complex value.
pub fn show_complex(z: CVal) -> String {
    format!("{}{:+}i", z.re, z.im)
}
