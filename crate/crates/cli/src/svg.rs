//! Static SVG 1.1 diagrams of `σ`, the triangle `Δ` and a fan.
//!
//! Geometry stays exact until the final formatting step, which rounds each
//! coordinate to three decimals, so equal inputs give byte-identical files.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use cqsres_core::{
    discrepancies, interior_lattice_points, roof, CyclicQuotient, ExactRational, Fan, NVector, PResolutionRecord,
};

const CANVAS: i64 = 600;

/// A labelled roof segment between two ray generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoofSegment {
    pub from: NVector,
    pub to: NVector,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvgScene {
    pub title: String,
    pub base: CyclicQuotient,
    /// Fan rays with their labels, boundary rays included.
    pub rays: Vec<(NVector, String)>,
    pub roofs: Vec<RoofSegment>,
    pub lattice_points: Vec<NVector>,
}

fn boundary(cq: &CyclicQuotient) -> (NVector, NVector) {
    (NVector::new(1, 0), NVector { x: -cq.q(), y: cq.n().clone() })
}

fn fraction(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl SvgScene {
    fn new(title: String, f: &Fan, ray_labels: Vec<String>, roofs: Vec<RoofSegment>) -> SvgScene {
        let base = f.base().clone();
        let (p, r) = boundary(&base);
        let rays = f.rays().iter().cloned().zip(ray_labels).collect();
        SvgScene { title, lattice_points: interior_lattice_points(&p, &r), base, rays, roofs }
    }

    /// A full resolution, with `α_j` at every ray and roof heights `d`.
    pub fn resolution(title: String, f: &Fan) -> SvgScene {
        let d = discrepancies(f);
        let labels = d.alphas.iter().enumerate().map(|(j, a)| format!("u^{j}  α_{j}={}", fraction(a))).collect();
        SvgScene::new(title, f, labels, generic_roofs(f))
    }

    /// A P-resolution: roofs at heights `q_i` labelled by `w^i`.
    pub fn presolution(title: String, p: &PResolutionRecord) -> SvgScene {
        let roofs = p
            .cones
            .iter()
            .filter(|c| !c.degenerate && c.height.is_positive())
            .map(|c| RoofSegment {
                from: c.left.clone(),
                to: c.right.clone(),
                label: format!("w^{}={}  q_{}={}", c.index, c.w, c.index, c.height),
            })
            .collect();
        SvgScene::new(title, &p.fan, plain_labels(&p.fan), roofs)
    }

    /// Any fan with roof heights read off its cones.
    pub fn fan(title: String, f: &Fan) -> SvgScene {
        SvgScene::new(title, f, plain_labels(f), generic_roofs(f))
    }

    pub fn render(&self) -> String {
        let (p, r) = boundary(&self.base);
        let view = Viewport::around(&p, &r);
        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = dec(&view.width),
            h = dec(&view.height)
        );
        let _ = writeln!(s, "<title>{}</title>", self.title);
        let _ = writeln!(
            s,
            r#"<rect x="0" y="0" width="{}" height="{}" fill="white"/>"#,
            dec(&view.width),
            dec(&view.height)
        );

        let origin = NVector::zero();
        let _ = writeln!(s, r##"<g id="delta" fill="none" stroke="#888888" stroke-dasharray="6 4">"##);
        let _ = writeln!(s, r#"<polygon points="{} {} {}"/>"#, view.point(&origin), view.point(&p), view.point(&r));
        let _ = writeln!(s, "</g>");
        let (mx, my) = view.map(&midpoint(&p, &r));
        let _ = writeln!(
            s,
            r##"<text x="{}" y="{}" font-family="serif" font-size="12" fill="#888888">[R=1]</text>"##,
            dec(&mx),
            dec(&my)
        );

        let _ = writeln!(s, r##"<g id="lattice-points" fill="#bbbbbb">"##);
        for v in &self.lattice_points {
            let (x, y) = view.map(&to_rational(v));
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="1.5"/>"#, dec(&x), dec(&y));
        }
        let _ = writeln!(s, "</g>");

        let last = self.rays.len().saturating_sub(1);
        let _ = writeln!(s, r##"<g id="rays" stroke="#000000">"##);
        for (j, (u, _)) in self.rays.iter().enumerate() {
            let width = if j == 0 || j == last { "2" } else { "1" };
            let end = view.clip_ray(u);
            let (ox, oy) = view.map(&to_rational(&origin));
            let (ex, ey) = view.map(&end);
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{width}"/>"#,
                dec(&ox),
                dec(&oy),
                dec(&ex),
                dec(&ey)
            );
        }
        let _ = writeln!(s, "</g>");

        let _ = writeln!(s, r##"<g id="roofs" stroke="#cc0000" stroke-width="1.5">"##);
        for seg in &self.roofs {
            let (x1, y1) = view.map(&to_rational(&seg.from));
            let (x2, y2) = view.map(&to_rational(&seg.to));
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, dec(&x1), dec(&y1), dec(&x2), dec(&y2));
        }
        let _ = writeln!(s, "</g>");

        let _ = writeln!(s, r##"<g id="labels" font-family="serif" font-size="12">"##);
        for (u, label) in &self.rays {
            let (x, y) = view.map(&to_rational(u));
            let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="3" fill="#000000"/>"##, dec(&x), dec(&y));
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}">{label}</text>"#,
                dec(&(x + ExactRational::from_integer(5.into()))),
                dec(&y)
            );
        }
        for seg in &self.roofs {
            let (x, y) = view.map(&midpoint(&seg.from, &seg.to));
            let _ = writeln!(
                s,
                r##"<text x="{}" y="{}" fill="#cc0000">{}</text>"##,
                dec(&x),
                dec(&(y + ExactRational::from_integer(14.into()))),
                seg.label
            );
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, "</svg>");
        s
    }
}

fn plain_labels(f: &Fan) -> Vec<String> {
    (0..f.rays().len()).map(|j| format!("u^{j}")).collect()
}

fn generic_roofs(f: &Fan) -> Vec<RoofSegment> {
    f.cones()
        .iter()
        .map(|c| RoofSegment { from: c.gen0().clone(), to: c.gen1().clone(), label: format!("d={}", roof(c).height) })
        .collect()
}

type Point = (ExactRational, ExactRational);

fn to_rational(v: &NVector) -> Point {
    (ExactRational::from_integer(v.x.clone()), ExactRational::from_integer(v.y.clone()))
}

fn midpoint(a: &NVector, b: &NVector) -> Point {
    let two = BigInt::from(2);
    (ExactRational::new(&a.x + &b.x, two.clone()), ExactRational::new(&a.y + &b.y, two))
}

/// The box around `Δ = conv(0, p, r)` scaled by 1.2 about its centre, mapped
/// onto a canvas whose longer side is `CANVAS` units.
struct Viewport {
    xmin: ExactRational,
    xmax: ExactRational,
    ymin: ExactRational,
    ymax: ExactRational,
    scale: ExactRational,
    width: ExactRational,
    height: ExactRational,
}

impl Viewport {
    fn around(p: &NVector, r: &NVector) -> Viewport {
        let xs = [BigInt::zero(), p.x.clone(), r.x.clone()];
        let ys = [BigInt::zero(), p.y.clone(), r.y.clone()];
        let lo = |v: &[BigInt]| ExactRational::from_integer(v.iter().min().unwrap().clone());
        let hi = |v: &[BigInt]| ExactRational::from_integer(v.iter().max().unwrap().clone());
        let factor = ExactRational::new(6.into(), 5.into());
        let half = ExactRational::new(1.into(), 2.into());
        let (cx, cy) = ((lo(&xs) + hi(&xs)) * &half, (lo(&ys) + hi(&ys)) * &half);
        let hx = (hi(&xs) - lo(&xs)) * &half * &factor;
        let hy = (hi(&ys) - lo(&ys)) * &half * &factor;
        let span = if hx > hy { &hx + &hx } else { &hy + &hy };
        let scale = ExactRational::from_integer(CANVAS.into()) / span;
        Viewport {
            width: (&hx + &hx) * &scale,
            height: (&hy + &hy) * &scale,
            xmin: &cx - &hx,
            xmax: &cx + &hx,
            ymin: &cy - &hy,
            ymax: &cy + &hy,
            scale,
        }
    }

    fn map(&self, (x, y): &Point) -> Point {
        ((x - &self.xmin) * &self.scale, (&self.ymax - y) * &self.scale)
    }

    fn point(&self, v: &NVector) -> String {
        let (x, y) = self.map(&to_rational(v));
        format!("{},{}", dec(&x), dec(&y))
    }

    /// Where the ray through `u` leaves the viewport.
    fn clip_ray(&self, u: &NVector) -> Point {
        let mut t: Option<ExactRational> = None;
        let bounds =
            [(&u.x, &self.xmax, true), (&u.x, &self.xmin, false), (&u.y, &self.ymax, true), (&u.y, &self.ymin, false)];
        for (coord, bound, positive) in bounds {
            if coord.is_zero() || coord.is_positive() != positive {
                continue;
            }
            let ti = bound / ExactRational::from_integer(coord.clone());
            t = Some(match t {
                Some(t) if t < ti => t,
                _ => ti,
            });
        }
        let t = t.expect("a nonzero ray leaves the box");
        (&t * ExactRational::from_integer(u.x.clone()), t * ExactRational::from_integer(u.y.clone()))
    }
}

/// Fixed three-decimal rendering, rounding half away from zero.
fn dec(r: &ExactRational) -> String {
    let scaled = (r * ExactRational::from_integer(1000.into())).round().to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let abs = scaled.abs();
    let thousand = BigInt::from(1000);
    format!("{sign}{}.{:03}", &abs / &thousand, (&abs % &thousand).to_string().parse::<u32>().unwrap())
}
