//! Example families: group rules, SU(2)_k, named fixtures and Drinfeld doubles.

mod chartab;
mod double;
mod families;
mod group;

pub use chartab::{character_table, character_table_with_cap, CharacterTable, DEFAULT_ORDER_CAP};
pub use double::{double_data, drinfeld_double, drinfeld_double_with_cap, DoubleData, DoubleSimple};
pub use families::{
    fixture_catalogue, fixture_product, named_fixture, pointed, so8_level2, su2k, FIXTURE_NAMES,
};
pub use group::FiniteGroup;
