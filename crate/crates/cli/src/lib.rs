pub mod formats;
pub mod formula_text;
