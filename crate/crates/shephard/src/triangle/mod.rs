//! Triangle groups realized by exact matrices, and the tilings built from them.

mod ball;
mod coset;
mod export;
mod group;
mod numeric;
mod patch;

pub use ball::{CayleyBall, VertexFigureReport};
pub use coset::{quotient_data, CosetGeometryBall, CosetKind};
pub use export::{ball_json, ball_svg};
pub use group::{
    inverse_letter, invert_word, letter_char, parse_letters, word_string, ElementType,
    GeometryKind, Letter, TriangleGroup, LA, LA_INV, LC, LC_INV,
};
pub use numeric::NumericModel;
pub use patch::{edge_id, fill_loop, Face, FaceTable, FaceType, Filling, Patch, DEFAULT_BUDGET};
