pub mod algebra;
pub mod canonical;
pub mod cli;
pub mod coeff;
pub mod diagram;
pub mod duality;
pub mod symgroup;
