pub mod agm;
pub mod elliptic;
pub mod error;
pub mod quadrature;
pub mod series;
pub mod zigzag;
