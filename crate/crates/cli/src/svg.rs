//! Static SVG rendering of a decomposed point set: the unit disk, points
//! colored by group level, and the gamma/eta balls of each representative.

use orbiframe::disk::Ball;
use orbiframe::separation::Decomposition;
use std::fmt::Write;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn color(level: usize) -> &'static str {
    PALETTE[(level - 1) % PALETTE.len()]
}

pub fn render(decomposition: &Decomposition) -> String {
    let mut s = String::new();
    s.push_str(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
        "width=\"600\" height=\"600\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n",
        "<g transform=\"scale(1,-1)\">\n",
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#333\" stroke-width=\"0.006\"/>\n",
    ));
    for g in &decomposition.groups {
        let c = color(g.level);
        for &rep in &g.representatives {
            for (radius, dash) in [(g.gamma, "0.02 0.012"), (g.eta, "none")] {
                if let Ok(ball) = Ball::new(rep, radius) {
                    let (ec, er) = ball.euclidean();
                    let dash_attr = if dash == "none" {
                        String::new()
                    } else {
                        format!(" stroke-dasharray=\"{dash}\"")
                    };
                    writeln!(
                        s,
                        "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" fill=\"none\" \
                         stroke=\"{c}\" stroke-width=\"0.003\"{dash_attr}/>",
                        ec.re, ec.im, er
                    )
                    .unwrap();
                }
            }
        }
        for &p in &g.points {
            writeln!(
                s,
                "<circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"0.012\" fill=\"{c}\"/>",
                p.value().re,
                p.value().im
            )
            .unwrap();
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}
