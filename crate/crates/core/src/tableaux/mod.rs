//! Partitions, skew shapes and the standard, semistandard and marked
//! tableau families.

mod shape;
mod tableau;

pub use shape::{enumerate_skew_shapes, Cell, Partition, SkewShape};
pub use tableau::{
    enumerate_marked, enumerate_ssyt, enumerate_syt, MarkedTableau, SemistandardTableau,
    StandardTableau,
};
