//! Output formatting: CSV conventions and the complex-number notation used
//! in flags and CSV fields.
//!
//! CSV: comma separators, '.' decimal point, header row, LF line endings.
//! Complex values go into a single quoted field as `re+imj` (for example
//! `"1.5+0.25j"`).

use qeslab_core::{c64, C64};

/// Formats a complex number as `re+imj` (pure reals drop the imaginary
/// part, pure imaginaries drop the real part).
pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        return format!("{}", z.re);
    }
    if z.re == 0.0 {
        return format!("{}j", z.im);
    }
    if z.im < 0.0 {
        format!("{}-{}j", z.re, -z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}

/// Parses `re`, `imj`, `re+imj`, `re-imj` (also accepting `i` for `j`).
/// Non-finite values are rejected.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let z = parse_complex_inner(s)?;
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("non-finite complex literal {s:?}"));
    }
    Ok(z)
}

fn parse_complex_inner(s: &str) -> Result<C64, String> {
    let t = s.trim().trim_matches('"');
    if t.is_empty() {
        return Err("empty complex literal".to_string());
    }
    let t = t.replace('i', "j");
    if let Some(body) = t.strip_suffix('j') {
        // Split into real and imaginary at the last +/- that is not an
        // exponent sign and not the leading sign.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != 'e' && bytes[k - 1] as char != 'E'
            {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = body[..k]
                    .parse()
                    .map_err(|e| format!("bad real part in {s:?}: {e}"))?;
                let im_str = &body[k..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str
                        .parse()
                        .map_err(|e| format!("bad imaginary part in {s:?}: {e}"))?
                };
                Ok(c64(re, im))
            }
            None => {
                let im: f64 = if body.is_empty() {
                    1.0
                } else if body == "-" {
                    -1.0
                } else {
                    body.parse()
                        .map_err(|e| format!("bad imaginary part in {s:?}: {e}"))?
                };
                Ok(c64(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|e| format!("bad number {s:?}: {e}"))?;
        Ok(c64(re, 0.0))
    }
}

/// `[re, im]` pair list for JSON documents.
pub fn complex_pairs(values: &[C64]) -> Vec<[f64; 2]> {
    values.iter().map(|z| [z.re, z.im]).collect()
}
