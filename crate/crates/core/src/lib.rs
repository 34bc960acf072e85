pub mod algebra;
pub mod exactla;
pub mod jacobian;
pub mod arrangements;
pub mod eigenscheme;
pub mod polar;
pub mod cli;
