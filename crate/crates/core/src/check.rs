//! Two independently computed sides of an identity.

use crate::exactpoly::{Context, Poly};

#[derive(Clone, Debug)]
pub struct Comparison<C: Context> {
    /// Short identifier of the instance, e.g. `"3,1/1"`.
    pub case: String,
    pub left: Poly<C>,
    pub right: Poly<C>,
}

impl<C: Context> Comparison<C> {
    pub fn new(case: impl Into<String>, left: Poly<C>, right: Poly<C>) -> Self {
        Self {
            case: case.into(),
            left,
            right,
        }
    }

    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}
