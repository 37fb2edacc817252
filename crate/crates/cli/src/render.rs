//! SVG figures of a colouring.
//!
//! Points are enumerated over the parent-basis coordinate box
//! `[−r, r]^d`, classified exactly, and only then converted to floating
//! display coordinates.

use std::fmt::Write as _;

use clap::ValueEnum;

use cslcolour::ratmat::to_f64;
use cslcolour::{analyze, Cyc8, Int, Lattice, Rational};

use crate::config::{Embedding, Job};
use crate::error::CliError;

/// Which points to draw.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Every point of the parent lattice.
    Parent,
    /// Points of `Γ₁ ∩ AΓ₁`.
    Csl,
    /// Points of `Γ₁ ∩ A⁻¹Γ₁`.
    CslInv,
}

/// Black, yellow, blue, red, gray, green.
const BASE_PALETTE: [&str; 6] = ["#000000", "#f2c500", "#1f4fd1", "#d62828", "#8c8c8c", "#2a9d3f"];

const UNIT_PX: f64 = 30.0;
const MARGIN_PX: f64 = 20.0;

/// The first `n` palette entries: the six base colours, then hues stepped
/// by the golden angle.
pub fn default_palette(n: usize) -> Vec<String> {
    (0..n)
        .map(|k| match BASE_PALETTE.get(k) {
            Some(c) => c.to_string(),
            None => hsl_hex(((k - BASE_PALETTE.len()) as f64 * 137.507_764_050_037_85) % 360.0, 0.65, 0.5),
        })
        .collect()
}

fn hsl_hex(h: f64, s: f64, l: f64) -> String {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = h / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let byte = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    format!("#{:02x}{:02x}{:02x}", byte(r), byte(g), byte(b))
}

/// Fixed three-decimal text, without negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" { "0.000".into() } else { s }
}

fn plane_position(embedding: Embedding, p: &[Rational]) -> (f64, f64) {
    match embedding {
        Embedding::Cyc8Star => {
            let z = Cyc8::new([p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()]);
            let [x, y] = z.star_embedding();
            (cslcolour::modules8::embed_f64(&x), cslcolour::modules8::embed_f64(&y))
        }
        _ => (to_f64(&p[0]), to_f64(&p[1])),
    }
}

struct Dot {
    coords: Vec<i64>,
    colour: usize,
    x: f64,
    y: f64,
    drawn: bool,
    highlighted: bool,
}

fn coordinate_box(dim: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-r..=r).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Renders the colouring of `job` as an SVG document.
pub fn render_job(job: &Job, mode: Mode) -> Result<String, CliError> {
    if job.embedding == Embedding::Unsupported {
        return Err(CliError::UnsupportedDimension(format!(
            "cannot draw dimension {} without a planar embedding",
            job.colouring.dim()
        )));
    }
    let spec = job
        .config
        .render
        .as_ref()
        .ok_or_else(|| CliError::Config("a render section is required for the render command".into()))?;
    let analysis = analyze(&job.colouring, &job.map)?;
    let palette = spec.palette.clone().unwrap_or_else(|| default_palette(job.colouring.m()));
    let parent = job.colouring.parent();
    let selected: Option<&Lattice> = match mode {
        Mode::Parent => None,
        Mode::Csl => Some(&analysis.csl1),
        Mode::CslInv => Some(&analysis.csl1_inv),
    };

    let mut dots = Vec::new();
    for coords in coordinate_box(job.colouring.dim(), spec.radius as i64) {
        let big: Vec<Int> = coords.iter().map(|&c| Int::from(c)).collect();
        let p = parent.point(&big)?;
        let drawn = match selected {
            Some(l) => l.contains(&p)?,
            None => true,
        };
        let highlighted = spec.highlight_csl && mode == Mode::Parent && analysis.csl1.contains(&p)?;
        let (x, y) = plane_position(job.embedding, &p);
        dots.push(Dot { coords, colour: job.colouring.colour_of_coords(&big)?, x, y, drawn, highlighted });
    }

    // The frame covers the whole box so the three modes line up.
    let shortest = parent
        .basis()
        .rows()
        .map(|r| {
            let (x, y) = plane_position(job.embedding, r);
            (x * x + y * y).sqrt()
        })
        .fold(f64::INFINITY, f64::min);
    let scale = UNIT_PX / shortest;
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for d in &dots {
        x0 = x0.min(d.x);
        x1 = x1.max(d.x);
        y0 = y0.min(d.y);
        y1 = y1.max(d.y);
    }
    let width = (x1 - x0) * scale + 2.0 * MARGIN_PX;
    let height = (y1 - y0) * scale + 2.0 * MARGIN_PX;
    let px = |x: f64| (x - x0) * scale + MARGIN_PX;
    let py = |y: f64| (y1 - y) * scale + MARGIN_PX;
    let dot_r = if job.embedding == Embedding::Cyc8Star { 3.0 } else { 6.0 };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(svg, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    for d in dots.iter().filter(|d| d.drawn) {
        let coords = d.coords.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let class = if d.highlighted { "pt csl" } else { "pt" };
        let stroke = if d.highlighted { r##" stroke="#000000" stroke-width="2""## } else { "" };
        let _ = writeln!(
            svg,
            r#"<circle class="{class}" data-coords="{coords}" data-colour="{c}" cx="{x}" cy="{y}" r="{r}" fill="{fill}"{stroke}/>"#,
            c = d.colour,
            x = num(px(d.x)),
            y = num(py(d.y)),
            r = num(dot_r),
            fill = palette[d.colour],
        );
    }
    for ring in [1.8, 2.6] {
        let _ = writeln!(
            svg,
            r##"<circle class="origin" cx="{x}" cy="{y}" r="{r}" fill="none" stroke="#000000" stroke-width="1"/>"##,
            x = num(px(0.0)),
            y = num(py(0.0)),
            r = num(dot_r * ring),
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_starts_with_the_six_base_colours() {
        let p = default_palette(9);
        assert_eq!(&p[..6], &BASE_PALETTE.map(String::from));
        assert_eq!(p.len(), 9);
        let mut distinct = p.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 9);
        assert_eq!(default_palette(9), p);
    }

    #[test]
    fn hsl_primaries() {
        assert_eq!(hsl_hex(0.0, 1.0, 0.5), "#ff0000");
        assert_eq!(hsl_hex(120.0, 1.0, 0.5), "#00ff00");
        assert_eq!(hsl_hex(240.0, 1.0, 0.5), "#0000ff");
    }

    #[test]
    fn number_format() {
        assert_eq!(num(-0.0001), "0.000");
        assert_eq!(num(1.23456), "1.235");
    }

    #[test]
    fn box_size() {
        assert_eq!(coordinate_box(2, 0), vec![vec![0, 0]]);
        assert_eq!(coordinate_box(2, 2).len(), 25);
        assert_eq!(coordinate_box(3, 1).len(), 27);
    }
}
