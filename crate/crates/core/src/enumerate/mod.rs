//! Isomorph-free census of powerful sets and the harnesses built on it.

mod cache;
mod census;
mod conjecture;
mod family;
mod gray;

pub use cache::{parse_cache, read_cache, render_cache, write_cache};
pub use census::{census, census_with, known_counts, CensusConfig, CensusReport, MAX_CENSUS_ORDER};
pub use conjecture::{
    check_conjecture_coloop, check_conjecture_coloop_on, check_conjecture_projection,
    check_conjecture_projection_on, ColoopReport, ProjectionReport,
};
pub use family::{diamond_family, family_seeds, FamilyReport, MAX_FAMILY_ORDER};
pub use gray::{gray_map, GrayImage};
