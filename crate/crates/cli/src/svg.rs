//! Deterministic SVG rendering: the curve with weight labels and clipped
//! rays on the left, the dual subdivision with lattice point markers on
//! the right. Exact rational geometry is scaled once per figure to
//! integers; no floating point enters the pipeline.

use num_traits::{One, Signed, Zero};
use troptac::tropical::{DualSubdivision, TropicalCurve};
use troptac::{Int, Rat};

struct Frame {
    /// Integer scale: all rational coordinates times `scale` are integers.
    scale: Int,
    min_x: Rat,
    max_y: Rat,
}

impl Frame {
    fn map(&self, x: &Rat, y: &Rat) -> (Int, Int) {
        let sx = (x - &self.min_x) * Rat::from(self.scale.clone());
        let sy = (&self.max_y - y) * Rat::from(self.scale.clone());
        debug_assert!(sx.denom().is_one() && sy.denom().is_one());
        (sx.numer().clone(), sy.numer().clone())
    }
}

pub fn render(s: &DualSubdivision, c: &TropicalCurve) -> String {
    // ---- curve panel geometry in exact rationals ----
    let mut xs: Vec<Rat> = Vec::new();
    let mut ys: Vec<Rat> = Vec::new();
    for (x, y) in &c.vertices {
        xs.push(x.clone());
        ys.push(y.clone());
    }
    let two = Rat::from(Int::from(2));
    let (mut min_x, mut max_x) = (min_of(&xs), max_of(&xs));
    let (mut min_y, mut max_y) = (min_of(&ys), max_of(&ys));
    min_x -= &two;
    min_y -= &two;
    max_x += &two;
    max_y += &two;

    // clip each ray against the bounding box
    let mut segments: Vec<(Rat, Rat, Rat, Rat, i64)> = Vec::new();
    for e in &c.bounded_edges {
        let (x0, y0) = c.vertices[e.from_cell].clone();
        let (x1, y1) = c.vertices[e.to_cell].clone();
        segments.push((x0, y0, x1, y1, e.weight));
    }
    for r in &c.rays {
        let (x0, y0) = c.vertices[r.cell].clone();
        let t = clip_t(&x0, &y0, r.dir, (&min_x, &max_x, &min_y, &max_y));
        let x1 = &x0 + Rat::from(Int::from(r.dir.0)) * &t;
        let y1 = &y0 + Rat::from(Int::from(r.dir.1)) * &t;
        segments.push((x0, y0, x1, y1, r.weight));
    }

    // one scaling to integers: 120 * lcm of all coordinate denominators
    let mut den = Int::one();
    for (x0, y0, x1, y1, _) in &segments {
        for v in [x0, y0, x1, y1] {
            den = num_integer::Integer::lcm(&den, v.denom());
        }
    }
    for v in [&min_x, &max_x, &min_y, &max_y] {
        den = num_integer::Integer::lcm(&den, v.denom());
    }
    let frame = Frame {
        scale: den.clone() * Int::from(120),
        min_x: min_x.clone(),
        max_y: max_y.clone(),
    };
    let unit = Rat::from(frame.scale.clone());
    let width = ((&max_x - &min_x) * &unit).numer().clone();
    let height = ((&max_y - &min_y) * &unit).numer().clone();
    let stroke = &frame.scale / Int::from(40);
    let stroke = if stroke.is_zero() { Int::one() } else { stroke };
    let font = &frame.scale / Int::from(8);

    let mut out = String::new();
    out.push_str("<g id=\"curve\">\n");
    for (x0, y0, x1, y1, w) in &segments {
        let (ax, ay) = frame.map(x0, y0);
        let (bx, by) = frame.map(x1, y1);
        out.push_str(&format!(
            "<line x1=\"{ax}\" y1=\"{ay}\" x2=\"{bx}\" y2=\"{by}\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n"
        ));
        if *w != 1 {
            let mx = (ax.clone() + bx) / Int::from(2);
            let my = (ay.clone() + by) / Int::from(2);
            out.push_str(&format!(
                "<text x=\"{mx}\" y=\"{my}\" font-size=\"{font}\" fill=\"blue\">{w}</text>\n"
            ));
        }
    }
    for (x, y) in &c.vertices {
        let (px, py) = frame.map(x, y);
        let r = &frame.scale / Int::from(30);
        out.push_str(&format!(
            "<circle cx=\"{px}\" cy=\"{py}\" r=\"{r}\" fill=\"black\"/>\n"
        ));
    }
    out.push_str("</g>\n");

    // ---- subdivision panel, shifted right of the curve panel ----
    let npts = s.newton.lattice_points();
    let (nx_min, nx_max, ny_min, ny_max) = {
        let (mut a, mut b, mut c2, mut d) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
        for p in &npts {
            a = a.min(p.i);
            b = b.max(p.i);
            c2 = c2.min(p.j);
            d = d.max(p.j);
        }
        (a, b, c2, d)
    };
    let sub_unit = Int::from(120) * &den;
    let gap = &sub_unit * Int::from(1);
    let offset_x = &width + &gap;
    let sub_map = |i: i64, j: i64| -> (Int, Int) {
        (
            &offset_x + Int::from(i - nx_min) * &sub_unit,
            Int::from(ny_max - j) * &sub_unit,
        )
    };
    out.push_str("<g id=\"subdivision\">\n");
    for e in &s.edges {
        let (ax, ay) = sub_map(e.a.i, e.a.j);
        let (bx, by) = sub_map(e.b.i, e.b.j);
        let w = if e.right_cell.is_none() {
            stroke.clone() * Int::from(2)
        } else {
            stroke.clone()
        };
        out.push_str(&format!(
            "<line x1=\"{ax}\" y1=\"{ay}\" x2=\"{bx}\" y2=\"{by}\" stroke=\"black\" stroke-width=\"{w}\"/>\n"
        ));
    }
    let newton_vertices = s.newton.vertices();
    for p in &npts {
        let (px, py) = sub_map(p.i, p.j);
        let r = &sub_unit / Int::from(12);
        if !s.newton.on_boundary(p) {
            // interior lattice point: star
            out.push_str(&star_path(&px, &py, &r));
        } else if !newton_vertices.contains(p) {
            // boundary lattice point that is not a polytope vertex: triangle
            out.push_str(&format!(
                "<polygon points=\"{},{} {},{} {},{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n",
                px.clone() - &r, py.clone() + &r,
                px.clone() + &r, py.clone() + &r,
                px.clone(), py.clone() - &r,
            ));
        } else {
            let rv = &sub_unit / Int::from(20);
            out.push_str(&format!(
                "<circle cx=\"{px}\" cy=\"{py}\" r=\"{rv}\" fill=\"black\"/>\n"
            ));
        }
    }
    out.push_str("</g>\n");

    let sub_width = Int::from(nx_max - nx_min) * &sub_unit + &sub_unit;
    let total_w = &offset_x + &sub_width + &gap;
    let sub_height = Int::from(ny_max - ny_min) * &sub_unit;
    let total_h = if height >= sub_height {
        height.clone()
    } else {
        sub_height
    };
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n{}</svg>\n",
        -&gap,
        -&gap,
        &total_w + &gap,
        &total_h + &gap + &gap,
        out
    )
}

fn star_path(px: &Int, py: &Int, r: &Int) -> String {
    // a five-point star approximated on integer offsets of the radius
    let r2 = r / Int::from(2);
    format!(
        "<path d=\"M {} {} L {} {} L {} {} L {} {} L {} {} L {} {} L {} {} L {} {} Z\" fill=\"red\"/>\n",
        px.clone(), py.clone() - r,
        px.clone() + &r2, py.clone() - &r2,
        px.clone() + r, py.clone(),
        px.clone() + &r2, py.clone() + &r2,
        px.clone(), py.clone() + r,
        px.clone() - &r2, py.clone() + &r2,
        px.clone() - r, py.clone(),
        px.clone() - &r2, py.clone() - &r2,
    )
}

fn min_of(v: &[Rat]) -> Rat {
    v.iter().min().cloned().unwrap_or_else(Rat::zero)
}

fn max_of(v: &[Rat]) -> Rat {
    v.iter().max().cloned().unwrap_or_else(Rat::zero)
}

/// Largest t >= 0 with the ray point still inside the box.
fn clip_t(x0: &Rat, y0: &Rat, dir: (i64, i64), bounds: (&Rat, &Rat, &Rat, &Rat)) -> Rat {
    let (min_x, max_x, min_y, max_y) = bounds;
    let mut t: Option<Rat> = None;
    let mut push = |cand: Rat| {
        if cand.is_negative() {
            return;
        }
        t = Some(match &t {
            Some(cur) if cur <= &cand => cur.clone(),
            _ => cand,
        });
    };
    if dir.0 > 0 {
        push((max_x.clone() - x0) / Rat::from(Int::from(dir.0)));
    } else if dir.0 < 0 {
        push((min_x.clone() - x0) / Rat::from(Int::from(dir.0)));
    }
    if dir.1 > 0 {
        push((max_y.clone() - y0) / Rat::from(Int::from(dir.1)));
    } else if dir.1 < 0 {
        push((min_y.clone() - y0) / Rat::from(Int::from(dir.1)));
    }
    t.expect("ray direction is nonzero")
}
