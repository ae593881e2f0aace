//! Exact rational grids from decimal or fractional text, so that cells such
//! as `p = 4` land exactly on interval endpoints.

use hartogs::Rational64;

use crate::error::CliError;

/// Parses `1.25`, `-3`, or `4/3` without going through floating point.
pub fn parse_rational(text: &str) -> Result<Rational64, CliError> {
    let bad = || CliError::Usage(format!("not an exact decimal or fraction: {text:?}"));
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Rational64::new(num, den));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 15 {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let magnitude: i64 = if digits.is_empty() { 0 } else { digits.parse().map_err(|_| bad())? };
    let value = Rational64::new(magnitude, 10i64.pow(frac.len() as u32));
    Ok(if negative { -value } else { value })
}

/// Comma-separated items, each a single value or an inclusive range
/// `start:stop:step`.
pub fn parse_grid(text: &str) -> Result<Vec<Rational64>, CliError> {
    let mut out = Vec::new();
    for item in text.split(',').filter(|s| !s.trim().is_empty()) {
        let parts: Vec<&str> = item.split(':').collect();
        match parts.as_slice() {
            [single] => out.push(parse_rational(single)?),
            [start, stop, step] => {
                let (start, stop, step) = (parse_rational(start)?, parse_rational(stop)?, parse_rational(step)?);
                if step <= Rational64::from(0) {
                    return Err(CliError::Usage(format!("grid step must be positive in {item:?}")));
                }
                let mut value = start;
                while value <= stop {
                    out.push(value);
                    value += step;
                }
            }
            _ => return Err(CliError::Usage(format!("expected value or start:stop:step, got {item:?}"))),
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("empty grid".into()));
    }
    Ok(out)
}

pub fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}
