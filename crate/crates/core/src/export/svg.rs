use std::f64::consts::TAU;
use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::ncs::NcsPartition;
use crate::weighted_complexes::position::format_position;
use crate::weighted_complexes::Position;

const SIZE: f64 = 512.0;
const RADIUS: f64 = 200.0;

fn point(cx: f64, turns: f64) -> (f64, f64) {
    let c = SIZE / 2.0;
    (cx + RADIUS * (TAU * turns).cos(), c - RADIUS * (TAU * turns).sin())
}

fn turns(p: &Position) -> f64 {
    p.to_f64().expect("positions are small rationals")
}

/// One hue per base point, evenly spread.
fn fill(j: usize, n: usize) -> String {
    format!("hsl({},70%,50%)", j * 360 / n.max(1))
}

/// The unit circle with each nontrivial block drawn as the hull of its
/// lifted points, colored by base point. With `panel`, a second circle on
/// the right shows the base points as images under `z -> z^d`.
pub fn render_ncs_svg(p: &NcsPartition, panel: bool) -> String {
    let width = if panel { 2.0 * SIZE } else { SIZE };
    let c = SIZE / 2.0;
    let n = p.parts().len();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0} {SIZE:.0}" width="{width:.0}" height="{SIZE:.0}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <circle cx="{c:.3}" cy="{c:.3}" r="{RADIUS:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#
    )
    .unwrap();
    for (j, (_, part)) in p.parts().iter().enumerate() {
        let color = fill(j, n);
        for block in part.nontrivial_blocks() {
            let pts: Vec<String> = block
                .iter()
                .map(|&m| {
                    let (x, y) = point(c, turns(&p.lifted_angle(j, m)));
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            writeln!(
                out,
                r#"  <polygon points="{}" fill="{color}" fill-opacity="0.6" stroke="{color}" stroke-width="2"/>"#,
                pts.join(" ")
            )
            .unwrap();
        }
    }
    for (j, (_, part)) in p.parts().iter().enumerate() {
        let color = fill(j, n);
        for block in part.nontrivial_blocks() {
            for &m in block {
                let (x, y) = point(c, turns(&p.lifted_angle(j, m)));
                writeln!(out, r#"  <circle cx="{x:.3}" cy="{y:.3}" r="3.000" fill="{color}"/>"#).unwrap();
            }
        }
    }
    if panel {
        let c2 = SIZE + c;
        writeln!(
            out,
            r#"  <circle cx="{c2:.3}" cy="{c:.3}" r="{RADIUS:.3}" fill="none" stroke="black" stroke-width="1.5"/>"#
        )
        .unwrap();
        for (j, (s, _)) in p.parts().iter().enumerate() {
            let (x, y) = point(c2, turns(s));
            writeln!(
                out,
                r#"  <circle cx="{x:.3}" cy="{y:.3}" r="6.000" fill="{}"><title>{}</title></circle>"#,
                fill(j, n),
                format_position(s)
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::marked_group::SetPartition;
    use crate::weighted_complexes::position::pos;

    #[test]
    fn bare_circle_and_hulls() {
        let bare = render_ncs_svg(&NcsPartition::discrete(5), false);
        assert_eq!(bare.matches("<circle").count(), 1);
        assert_eq!(bare.matches("<polygon").count(), 0);

        let full = SetPartition::from_nontrivial(3, vec![vec![1, 2, 3]]).unwrap();
        let p = NcsPartition::new(3, vec![(pos(1, 3), full)]).unwrap();
        let svg = render_ncs_svg(&p, true);
        assert_eq!(svg.matches("<polygon").count(), 1);
        assert!(svg.contains(r#"viewBox="0 0 1024 512""#));
        assert_eq!(svg, render_ncs_svg(&p, true));
    }
}
