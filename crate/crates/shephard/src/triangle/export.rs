use super::ball::CayleyBall;
use super::group::{word_string, LA, LC};
use super::numeric::{Mat3, NumericModel};
use super::patch::{FaceTable, FaceType};
use crate::error::Result;
use serde_json::{json, Value};
use std::fmt::Write;

/// JSON description of a tiling ball: vertices with shortlex words, directed edges
/// and complete typed faces.
pub fn ball_json(ball: &CayleyBall, table: &FaceTable) -> Value {
    let (p, q, r) = ball.group().orders();
    let vertices: Vec<Value> = (0..ball.len() as u32)
        .map(|v| json!({"id": v, "word": word_string(&ball.witness(v))}))
        .collect();
    let mut edges = Vec::new();
    for v in 0..ball.len() as u32 {
        for (x, name) in [(LA, "a"), (LC, "c")] {
            if let Some(w) = ball.neighbor(v, x) {
                edges.push(json!({"from": v, "to": w, "letter": name}));
            }
        }
    }
    let faces: Vec<Value> = table
        .faces
        .iter()
        .map(|f| json!({"type": f.kind, "vertices": f.vertices().collect::<Vec<_>>()}))
        .collect();
    let (nv, ne, nf) = ball.euler_counts(table);
    json!({
        "schemaVersion": 1,
        "triangle": [p, q, r],
        "geometry": ball.group().kind(),
        "radius": ball.radius(),
        "vertices": vertices,
        "edges": edges,
        "faces": faces,
        "counts": {"vertices": nv, "edges": ne, "faces": nf, "euler": nv as i64 - ne as i64 + nf as i64},
    })
}

fn positions(ball: &CayleyBall, model: &NumericModel) -> Vec<(f64, f64)> {
    let mut mats: Vec<Mat3> = Vec::with_capacity(ball.len());
    for v in 0..ball.len() as u32 {
        let m = match ball.patch().parent(v) {
            None => model.eval(&[]),
            Some((u, x)) => model.step(&mats[u as usize], x),
        };
        mats.push(m);
    }
    mats.iter().map(|m| model.planar(model.point(m))).collect()
}

/// SVG drawing of a tiling ball: the plane for euclidean groups, the Poincare disk for
/// hyperbolic ones. Faces are shaded by type.
pub fn ball_svg(ball: &CayleyBall, table: &FaceTable) -> Result<String> {
    let (p, q, r) = ball.group().orders();
    let model = NumericModel::new(p, q, r)?;
    let pos = positions(ball, &model);
    let hyperbolic = model.kind == super::group::GeometryKind::Hyperbolic;
    let extent = if hyperbolic {
        1.0
    } else {
        pos.iter()
            .map(|&(x, y)| x.abs().max(y.abs()))
            .fold(1.0, f64::max)
    };
    let size = 800.0;
    let scale = size / (2.2 * extent);
    let tx = |(x, y): (f64, f64)| (size / 2.0 + x * scale, size / 2.0 - y * scale);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    if hyperbolic {
        let _ = writeln!(
            out,
            r##"<circle cx="{c}" cy="{c}" r="{rad:.2}" fill="none" stroke="#444"/>"##,
            c = size / 2.0,
            rad = scale
        );
    }
    for f in &table.faces {
        let colour = match f.kind {
            FaceType::P => "#e8a87c",
            FaceType::R => "#85cdca",
            FaceType::Q2 => "#f6f1d1",
        };
        let pts: Vec<String> = f
            .vertices()
            .map(|v| {
                let (x, y) = tx(pos[v as usize]);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="{colour}" stroke="#333" stroke-width="0.5"/>"##,
            pts.join(" ")
        );
    }
    for v in 0..ball.len() as u32 {
        for x in [LA, LC] {
            if let Some(w) = ball.neighbor(v, x) {
                let (x1, y1) = tx(pos[v as usize]);
                let (x2, y2) = tx(pos[w as usize]);
                let _ = writeln!(
                    out,
                    r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#222" stroke-width="0.6"/>"##
                );
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::group::TriangleGroup;
    use crate::triangle::patch::DEFAULT_BUDGET;
    use std::sync::Arc;

    #[test]
    fn json_counts_and_svg() {
        let b = CayleyBall::new(
            Arc::new(TriangleGroup::new(3, 3, 3).unwrap()),
            4,
            DEFAULT_BUDGET,
        )
        .unwrap();
        let t = b.faces();
        let j = ball_json(&b, &t);
        assert_eq!(j["counts"]["euler"], 1);
        assert_eq!(j["vertices"][0]["word"], "");
        let svg = ball_svg(&b, &t).unwrap();
        assert!(svg.starts_with("<svg") && svg.contains("polygon"));
        let h = CayleyBall::new(
            Arc::new(TriangleGroup::new(2, 3, 7).unwrap()),
            6,
            DEFAULT_BUDGET,
        )
        .unwrap();
        let svg = ball_svg(&h, &h.faces()).unwrap();
        assert!(svg.contains("circle"));
    }
}
