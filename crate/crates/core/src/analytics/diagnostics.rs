use serde::{Deserialize, Serialize};

use crate::error::Count;

/// Ratios plotted against `1/g`. A `None` marks a zero denominator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub genus: u32,
    pub inv_genus: f64,
    /// `n̂_g / n̂_{g-1}`
    pub nhat_ratio: Option<f64>,
    /// `s_g / s_{g-1}`
    pub s_ratio: Option<f64>,
    /// `n̂_g / s_g`
    pub nhat_over_s: Option<f64>,
}

impl RatioRow {
    /// True when some ratio in the row was skipped.
    pub fn flagged(&self) -> bool {
        self.nhat_ratio.is_none() || self.s_ratio.is_none() || self.nhat_over_s.is_none()
    }
}

fn ratio(num: Count, den: Count) -> Option<f64> {
    (den != 0).then(|| num as f64 / den as f64)
}

/// Rows for every `g >= 1` covered by both tables (indexed by genus from 0).
pub fn ratio_diagnostics(s: &[Count], nhat: &[Count]) -> Vec<RatioRow> {
    let len = s.len().min(nhat.len());
    (1..len)
        .map(|g| RatioRow {
            genus: g as u32,
            inv_genus: 1.0 / g as f64,
            nhat_ratio: ratio(nhat[g], nhat[g - 1]),
            s_ratio: ratio(s[g], s[g - 1]),
            nhat_over_s: ratio(nhat[g], s[g]),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_zero_denominators() {
        let s = [0, 0, 0, 1, 0, 1, 3, 2, 4, 9, 12];
        let nhat = [0, 0, 0, 0, 1, 1, 3, 6, 10, 19, 36];
        let rows = ratio_diagnostics(&s, &nhat);
        assert_eq!(rows.len(), 10);
        let r4 = &rows[3];
        assert_eq!(r4.genus, 4);
        assert_eq!(r4.s_ratio, Some(0.0));
        assert_eq!(r4.nhat_over_s, None);
        assert!(r4.flagged());
        let r5 = &rows[4];
        assert_eq!(r5.s_ratio, None);
        assert!(r5.flagged());
        let r10 = &rows[9];
        assert_eq!(r10.nhat_over_s, Some(3.0));
        assert!(!r10.flagged());
        assert!((r10.inv_genus - 0.1).abs() < 1e-15);
    }
}
