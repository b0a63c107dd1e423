pub mod domain;
pub mod error;
pub mod exactmat;
pub mod numtheory;
pub mod polyring;
pub mod pascal;
pub mod autosimilar;
pub mod spectra;
pub mod groups;
pub mod suite;
