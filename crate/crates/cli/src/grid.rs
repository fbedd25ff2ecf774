//! Grid specifications: `"10000,100000"` or `"lo:hi:points-per-decade"`.

fn parse_integer(token: &str) -> Result<u64, String> {
    let token = token.trim();
    if let Ok(v) = token.parse::<u64>() {
        return Ok(v);
    }
    let v: f64 = token.parse().map_err(|_| format!("grid value '{token}' is not a number"))?;
    if !(v >= 1.0) || v.fract() != 0.0 || v > u64::MAX as f64 {
        return Err(format!("grid value '{token}' is not a positive integer"));
    }
    Ok(v as u64)
}

pub fn parse_grid(spec: &str) -> Result<Vec<u64>, String> {
    let grid = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [lo, hi, ppd] = parts.as_slice() else {
            return Err(format!("range grid '{spec}' must be 'lo:hi:points-per-decade'"));
        };
        let (lo, hi) = (parse_integer(lo)?, parse_integer(hi)?);
        let ppd: u32 = ppd
            .trim()
            .parse()
            .ok()
            .filter(|&p| p > 0)
            .ok_or_else(|| format!("points per decade '{ppd}' must be a positive integer"))?;
        if lo > hi {
            return Err(format!("range grid '{spec}' has lo > hi"));
        }
        let mut out = Vec::new();
        let (ln_lo, ln_hi) = ((lo as f64).log10(), (hi as f64).log10());
        let steps = ((ln_hi - ln_lo) * ppd as f64 + 1e-9).floor() as u32;
        for k in 0..=steps {
            let x = 10f64.powf(ln_lo + k as f64 / ppd as f64).round() as u64;
            if out.last() != Some(&x) {
                out.push(x.min(hi));
            }
        }
        out
    } else {
        spec.split(',').map(parse_integer).collect::<Result<Vec<_>, _>>()?
    };
    if grid.is_empty() {
        return Err("grid is empty".into());
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(format!("grid '{spec}' is not strictly increasing"));
    }
    Ok(grid)
}
