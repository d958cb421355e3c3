use serde::{Deserialize, Serialize};

use crate::error::{self, Count, Error, Result};

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u32) -> Result<Count> {
    if n == 0 {
        return Ok(0);
    }
    let (mut a, mut b): (Count, Count) = (0, 1);
    for _ in 1..n {
        let next = error::add(a, b, &format!("F_{n}"))?;
        a = b;
        b = next;
    }
    Ok(b)
}

fn fibonacci_table(n: u32) -> Result<Vec<Count>> {
    let mut fib: Vec<Count> = vec![0, 1];
    for i in 2..=n as usize {
        fib.push(error::add(fib[i - 1], fib[i - 2], "Fibonacci number")?);
    }
    fib.truncate(n as usize + 1);
    Ok(fib)
}

/// `t_g = F_{g+1} + Σ_{i=1}^{g} s_i F_{g+1-i}` for `g = 0..=max_genus`.
///
/// `s` is indexed by genus and must cover `0..=max_genus`.
pub fn t_from_s(s: &[Count], max_genus: u32) -> Result<Vec<Count>> {
    if s.len() <= max_genus as usize {
        return Err(Error::MissingData(format!(
            "s_g known for g < {}, need g <= {max_genus}",
            s.len()
        )));
    }
    let fib = fibonacci_table(max_genus + 1)?;
    (0..=max_genus as usize)
        .map(|g| {
            let mut t = fib[g + 1];
            for i in 1..=g {
                let term = error::mul(s[i], fib[g + 1 - i], "t_g")?;
                t = error::add(t, term, "t_g")?;
            }
            Ok(t)
        })
        .collect()
}

/// Known values of `n_g` for a contiguous range of genera starting at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NgSeries {
    values: Vec<Count>,
}

impl NgSeries {
    pub fn new(values: Vec<Count>) -> Result<Self> {
        match values.first() {
            None => return Err(Error::MissingData("empty n_g series".into())),
            Some(&first) if first != 1 => {
                return Err(Error::Inconsistent(format!("n_0 must be 1, got {first}")))
            }
            _ => {}
        }
        if let Some(g) = values.iter().position(|&n| n == 0) {
            return Err(Error::Inconsistent(format!("n_{g} must be positive")));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[Count] {
        &self.values
    }

    pub fn get(&self, g: u32) -> Option<Count> {
        self.values.get(g as usize).copied()
    }

    /// Largest genus covered.
    pub fn max_genus(&self) -> u32 {
        self.values.len() as u32 - 1
    }
}

/// `n̂_g = n_g - t_g` wherever both are known.
pub fn nhat(ng: &NgSeries, t: &[Count]) -> Result<Vec<Count>> {
    ng.values()
        .iter()
        .zip(t)
        .enumerate()
        .map(|(g, (&n, &t))| {
            n.checked_sub(t).ok_or_else(|| {
                Error::Inconsistent(format!("n_{g} = {n} is smaller than t_{g} = {t}"))
            })
        })
        .collect()
}

/// Coefficients of `x^3 / (1 - x^3 (x + 1)(x^2 + x + 1))` up to `x^max_genus`,
/// a lower bound for the stressed-word counts.
pub fn lower_series(max_genus: u32) -> Result<Vec<Count>> {
    let mut s: Vec<Count> = Vec::with_capacity(max_genus as usize + 1);
    for g in 0..=max_genus as usize {
        let at = |back: usize| if g >= back { s[g - back] } else { 0 };
        let mut value = Count::from(g == 3);
        for (back, weight) in [(3, 1), (4, 2), (5, 2), (6, 1)] {
            value = error::add(value, error::mul(weight, at(back), "s'_g")?, "s'_g")?;
        }
        s.push(value);
    }
    Ok(s)
}
