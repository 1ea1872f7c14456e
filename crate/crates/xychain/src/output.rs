//! CSV and plot-data writers.
//!
//! Reals are written like C's `%.12g`: 12 significant digits, trailing zeros
//! dropped, exponent form outside `[1e-4, 1e12)`. Negative zero is written
//! as `0`. Lines end in `\n`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use xychain_core::{DerivativeRecord, SweepRecord};

pub const RECORD_HEADER: &str =
    "gamma,lambda,temperature,n,sz,xx,yy,zz,deficit,theta_opt,phi_opt,c_l1,c_rel";
pub const DERIVATIVE_HEADER: &str = "gamma,temperature,n,lambda,d_deficit,d_c_l1,d_c_rel";
pub const PLOT_HEADER: &str = "# lambda temperature n deficit c_l1 c_rel d_deficit d_c_l1 d_c_rel";

const SIGNIFICANT: usize = 12;

pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= SIGNIFICANT as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_zeros(mantissa), sign, exp.abs())
    } else {
        let decimals = (SIGNIFICANT as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_records<W: Write>(out: &mut W, records: &[SweepRecord]) -> io::Result<()> {
    writeln!(out, "{RECORD_HEADER}")?;
    for r in records {
        let reals = [
            r.sz,
            r.xx,
            r.yy,
            r.zz,
            r.deficit,
            r.theta_opt,
            r.phi_opt,
            r.c_l1,
            r.c_rel,
        ];
        write!(
            out,
            "{},{},{},{}",
            format_real(r.gamma),
            format_real(r.lambda),
            format_real(r.temperature),
            r.n
        )?;
        for v in reals {
            write!(out, ",{}", format_real(v))?;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn write_derivatives<W: Write>(out: &mut W, derivs: &[DerivativeRecord]) -> io::Result<()> {
    writeln!(out, "{DERIVATIVE_HEADER}")?;
    for d in derivs {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            format_real(d.gamma),
            format_real(d.temperature),
            d.n,
            format_real(d.lambda),
            format_real(d.d_deficit),
            format_real(d.d_c_l1),
            format_real(d.d_c_rel)
        )?;
    }
    Ok(())
}

/// Whitespace-separated columns, one block per `(γ, kT, n)` group separated
/// by a blank line. Derivative columns are `nan` where none were computed.
/// `derivs`, when given, must align one-to-one with `records`.
pub fn write_plot<W: Write>(
    out: &mut W,
    records: &[SweepRecord],
    derivs: Option<&[DerivativeRecord]>,
) -> io::Result<()> {
    writeln!(out, "{PLOT_HEADER}")?;
    let mut previous: Option<&SweepRecord> = None;
    for (i, r) in records.iter().enumerate() {
        let key = (r.gamma, r.temperature, r.n);
        if previous.map(|p| (p.gamma, p.temperature, p.n)) != Some(key) {
            if previous.is_some() {
                out.write_all(b"\n")?;
            }
            writeln!(
                out,
                "# gamma={} temperature={} n={}",
                format_real(r.gamma),
                format_real(r.temperature),
                r.n
            )?;
        }
        let d = derivs.and_then(|d| d.get(i));
        let slope = |f: fn(&DerivativeRecord) -> f64| d.map_or(f64::NAN, f);
        writeln!(
            out,
            "{} {} {} {} {} {} {} {} {}",
            format_real(r.lambda),
            format_real(r.temperature),
            r.n,
            format_real(r.deficit),
            format_real(r.c_l1),
            format_real(r.c_rel),
            format_real(slope(|d| d.d_deficit)),
            format_real(slope(|d| d.d_c_l1)),
            format_real(slope(|d| d.d_c_rel))
        )?;
        previous = Some(r);
    }
    Ok(())
}

/// Creates `path` and fills it with `fill`, buffered.
pub fn write_file<F>(path: &Path, fill: F) -> io::Result<()>
where
    F: FnOnce(&mut BufWriter<File>) -> io::Result<()>,
{
    let mut out = BufWriter::new(File::create(path)?);
    fill(&mut out)?;
    out.flush()
}

pub fn emit_csv(records: &[SweepRecord], path: &Path) -> io::Result<()> {
    write_file(path, |out| write_records(out, records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_like_percent_g() {
        let cases = [
            (0.0, "0"),
            (-0.0, "0"),
            (1.0, "1"),
            (-2.5, "-2.5"),
            (0.1, "0.1"),
            (1.0 / 3.0, "0.333333333333"),
            (2.0 / 3.0, "0.666666666667"),
            (123456.789, "123456.789"),
            (1e-5, "1e-05"),
            (0.0001234, "0.0001234"),
            (1.5e-7, "1.5e-07"),
            (999999999999.4, "999999999999"),
            (999999999999.6, "1e+12"),
            (1e100, "1e+100"),
            (std::f64::consts::PI, "3.14159265359"),
            (0.9999999999996, "1"),
            (f64::NAN, "nan"),
        ];
        for (x, want) in cases {
            assert_eq!(format_real(x), want, "{x:e}");
        }
    }

    #[test]
    fn record_row() {
        let r = SweepRecord {
            gamma: 0.5,
            lambda: 0.0,
            temperature: 0.0,
            n: 1,
            sz: -1.0,
            xx: 0.0,
            yy: 0.0,
            zz: 1.0,
            deficit: 0.0,
            c_l1: 0.0,
            c_rel: -0.0,
            theta_opt: 0.0,
            phi_opt: 0.0,
        };
        let mut buf = Vec::new();
        write_records(&mut buf, &[r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            format!("{RECORD_HEADER}\n0.5,0,0,1,-1,0,0,1,0,0,0,0,0\n")
        );
    }
}
