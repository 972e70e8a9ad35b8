pub mod decomposition;
pub mod factors;
pub mod graph;
pub mod language;
pub mod measures;
pub mod numeric;
pub mod order;
