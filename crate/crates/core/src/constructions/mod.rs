//! Matrix families: involutions `A`, conjugators `P`, diagonal generators `C`.

mod involution;
mod recipe;
mod spec;

pub use involution::{build_involution, InvolutionProfile};
pub use recipe::{build_from_template, parse_point, Affine, PRecipe, RecipeCase, RecipeId};
pub use spec::{build_c_diag, Block, EigenSpec};

use crate::error::Result;
use crate::exact::Rational;
use crate::matrix::Matrix;

/// `P` at a rational point.
pub fn build_p(recipe: &PRecipe, params: &[Rational]) -> Result<Matrix<Rational>> {
    recipe.build(params)
}
