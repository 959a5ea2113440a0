pub mod catalog;
pub mod certificate;
pub mod cli;
pub mod families;
pub mod homology;
pub mod lefschetz;
pub mod mcg;
pub mod model;
pub mod relations;
pub mod word;
