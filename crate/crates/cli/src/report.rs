use std::fmt::Write as _;

use philotope::stats::{
    format_p, pairwise_bonferroni, rm_anova, AnovaReport, Correction, PairwiseComparison, TrialResults,
};
use serde::Serialize;

use crate::error::CliError;

/// `x` with 12 significant digits, in plain notation where that is short.
pub fn significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}

#[derive(Debug, Serialize)]
pub struct Analysis<'a, C: Serialize> {
    pub config: Option<&'a C>,
    pub conditions: &'a [String],
    pub anova: AnovaReport<f64>,
    pub pairwise: Vec<PairwiseComparison<f64>>,
}

pub fn analyse<'a, C: Serialize>(r: &'a TrialResults<f64>, config: Option<&'a C>) -> Result<Analysis<'a, C>, CliError> {
    Ok(Analysis {
        config,
        conditions: r.conditions(),
        anova: rm_anova(r)?,
        pairwise: pairwise_bonferroni(r)?,
    })
}

impl<C: Serialize> Analysis<'_, C> {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("analysis serializes");
        s.push('\n');
        s
    }

    /// Sphericity, within-subjects and pairwise tables as plain text.
    pub fn tables(&self) -> String {
        let a = &self.anova;
        let mut s = String::new();
        let _ = writeln!(s, "Sphericity corrections");
        let _ = writeln!(s, "  Greenhouse-Geisser epsilon  {:.4}", a.epsilon_gg);
        let _ = writeln!(s, "  Huynh-Feldt epsilon         {:.4}", a.epsilon_hf);
        if a.sphericity_singular {
            let _ = writeln!(s, "  (singular covariance: lower-bound epsilon used)");
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "Repeated-measures ANOVA ({} trials, {} conditions)", a.trials, a.conditions);
        let _ = writeln!(
            s,
            "  {:<20} {:>10} {:>10} {:>14} {:>10} {:>8}",
            "correction", "df", "df error", "mean square", "F", "p"
        );
        for c in [Correction::SphericityAssumed, Correction::GreenhouseGeisser, Correction::HuynhFeldt] {
            let t = a.test(c);
            let _ = writeln!(
                s,
                "  {:<20} {:>10.3} {:>10.3} {:>14.6e} {:>10.3} {:>8}",
                c.name(),
                t.df_factor,
                t.df_residual,
                t.ms_factor,
                t.f,
                format_p(t.p)
            );
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "Pairwise comparisons (Bonferroni)");
        let label = |name: &str| {
            let i = self.conditions.iter().position(|c| c == name).map_or(0, |i| i + 1);
            format!("({i}) {name}")
        };
        for p in &self.pairwise {
            let _ = writeln!(
                s,
                "  {:<28} vs {:<28} diff {:>11.4e}  se {:>10.4e}  p {:>7}  95% CI [{:.4e}, {:.4e}]",
                label(&p.first),
                label(&p.second),
                p.mean_difference,
                p.standard_error,
                format_p(p.p_bonferroni),
                p.ci_low,
                p.ci_high
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(significant(0.0), "0");
        assert_eq!(significant(0.5), "0.500000000000");
        assert_eq!(significant(1.0 / 3.0), "0.333333333333");
        assert_eq!(significant(123.456), "123.456000000");
        assert_eq!(significant(2.5e-9), "2.50000000000e-9");
    }
}
