//! SVG graph of T^n drawn lap by lap.

use negabeta::laps::Lap;
use negabeta::numerics::BetaSpec;
use std::fmt::Write;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 24.0;

pub fn render(beta: &BetaSpec, n: usize, laps: &[Lap]) -> String {
    let (l, r) = (beta.l().to_f64(), beta.r().to_f64());
    let sx = |x: f64| MARGIN + (x - l) / (r - l) * SIZE;
    let sy = |y: f64| MARGIN + (r - y) / (r - l) * SIZE;
    let full = SIZE + 2.0 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" viewBox="0 0 {full} {full}">"#
    );
    let _ = writeln!(out, "<title>T^{n} for beta = {beta}</title>");
    let _ = writeln!(
        out,
        r##"<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#888" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line class="diagonal" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#ccc" stroke-dasharray="4 4"/>"##,
        sx(l),
        sy(l),
        sx(r),
        sy(r)
    );
    for lap in laps {
        let (a, b) = (lap.lo.to_f64(), lap.hi.to_f64());
        let (fa, fb) = (lap.apply(&lap.lo).to_f64(), lap.apply(&lap.hi).to_f64());
        let word: String = lap.digits.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(
            out,
            r##"<line class="lap" data-word="{word}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#1f4e9c" stroke-width="1.5"/>"##,
            sx(a),
            sy(fa),
            sx(b),
            sy(fb)
        );
    }
    out.push_str("</svg>\n");
    out
}
