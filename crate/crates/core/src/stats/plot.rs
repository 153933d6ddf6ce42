use std::fmt::Write as _;

use super::boxplot::boxplot_summary;
use super::TrialResults;
use crate::scalar::Scalar;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 360.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 60.0;

/// Round tick step giving roughly five ticks over `span`.
fn tick_step(span: f64) -> f64 {
    let raw = span / 5.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm < 1.5 {
        1.0
    } else if norm < 3.0 {
        2.0
    } else if norm < 7.0 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

/// Vertical box plot of each condition, labelled `(1)`, `(2)`, … in
/// column order, with outliers drawn as open circles.
pub fn boxplot_svg<T: Scalar>(r: &TrialResults<T>, y_label: &str) -> String {
    let k = r.conditions().len();
    let boxes: Vec<_> = (0..k)
        .map(|j| {
            let col: Vec<f64> = r.column(j).into_iter().map(|x| x.to_f64_lossy()).collect();
            boxplot_summary(&col)
        })
        .collect();
    let all = r.rows().iter().flatten().map(|x| x.to_f64_lossy());
    let (mut lo, mut hi) = all.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| (a.min(x), b.max(x)));
    if !lo.is_finite() {
        (lo, hi) = (0.0, 1.0);
    }
    if hi - lo < 1e-12 {
        lo -= 0.5 * lo.abs().max(1e-3);
        hi += 0.5 * hi.abs().max(1e-3);
    }
    let pad = 0.05 * (hi - lo);
    let (lo, hi) = (lo - pad, hi + pad);
    let plot_h = HEIGHT - TOP - BOTTOM;
    let plot_w = WIDTH - LEFT - RIGHT;
    let y = |v: f64| TOP + plot_h * (hi - v) / (hi - lo);
    let slot = plot_w / k as f64;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r#"<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{:.2}" stroke="black"/>"#,
        HEIGHT - BOTTOM
    )
    .unwrap();
    writeln!(
        s,
        r#"<line x1="{LEFT}" y1="{0:.2}" x2="{1:.2}" y2="{0:.2}" stroke="black"/>"#,
        HEIGHT - BOTTOM,
        WIDTH - RIGHT
    )
    .unwrap();

    let step = tick_step(hi - lo);
    let mut t = (lo / step).ceil() * step;
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    while t <= hi + 1e-12 {
        let ty = y(t);
        writeln!(
            s,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{LEFT}" y2="{ty:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{t:.decimals$}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            ty + 4.0
        )
        .unwrap();
        t += step;
    }
    writeln!(
        s,
        r#"<text transform="translate(18,{:.2}) rotate(-90)" text-anchor="middle">{y_label}</text>"#,
        TOP + plot_h / 2.0
    )
    .unwrap();

    for (j, b) in boxes.iter().enumerate() {
        let cx = LEFT + slot * (j as f64 + 0.5);
        let half = slot * 0.2;
        let (x0, x1) = (cx - half, cx + half);
        writeln!(s, "<g>").unwrap();
        writeln!(
            s,
            r#"<line x1="{cx:.2}" y1="{:.2}" x2="{cx:.2}" y2="{:.2}" stroke="black"/>"#,
            y(b.max),
            y(b.q3)
        )
        .unwrap();
        writeln!(
            s,
            r#"<line x1="{cx:.2}" y1="{:.2}" x2="{cx:.2}" y2="{:.2}" stroke="black"/>"#,
            y(b.q1),
            y(b.min)
        )
        .unwrap();
        for v in [b.min, b.max] {
            writeln!(
                s,
                r#"<line x1="{0:.2}" y1="{1:.2}" x2="{2:.2}" y2="{1:.2}" stroke="black"/>"#,
                cx - half / 2.0,
                y(v),
                cx + half / 2.0
            )
            .unwrap();
        }
        writeln!(
            s,
            r#"<rect x="{x0:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="lightgray" stroke="black"/>"#,
            y(b.q3),
            x1 - x0,
            (y(b.q1) - y(b.q3)).max(0.5)
        )
        .unwrap();
        writeln!(
            s,
            r#"<line x1="{x0:.2}" y1="{0:.2}" x2="{x1:.2}" y2="{0:.2}" stroke="black" stroke-width="2"/>"#,
            y(b.median)
        )
        .unwrap();
        for &o in &b.outliers {
            writeln!(
                s,
                r#"<circle cx="{cx:.2}" cy="{:.2}" r="3" fill="none" stroke="black"/>"#,
                y(o)
            )
            .unwrap();
        }
        writeln!(
            s,
            r#"<text x="{cx:.2}" y="{:.2}" text-anchor="middle">({})</text>"#,
            HEIGHT - BOTTOM + 18.0,
            j + 1
        )
        .unwrap();
        writeln!(
            s,
            r#"<text x="{cx:.2}" y="{:.2}" text-anchor="middle" font-size="10">{}</text>"#,
            HEIGHT - BOTTOM + 34.0,
            r.conditions()[j]
        )
        .unwrap();
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    s
}
