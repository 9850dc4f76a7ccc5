//! Quasisymmetric functions: monomial and fundamental bases, the
//! q-fundamentals `L^(q)_{n,I}`, the map `Θ_q`, Hopf-structure identities and
//! rank evidence for the bases `L^(q)`.

mod expansion;
mod functions;
mod identities;
mod indexing;
mod rank;

pub use expansion::{expand_fundamental_q0, expand_monomial, theta_q, theta_q_apply, QSymBasis, QSymExpansion};
pub use functions::{gessel_fundamental, is_quasisymmetric, l_q_closed, monomial_qsym};
pub use identities::{
    cauchy_check, coproduct_check, descent_class_check, factorization_check, l_q_consistency, product_rule_check,
};
pub use indexing::{Composition, SubsetDescent};
pub use rank::{rank_bareiss, rank_check_generic, rank_check_peak, PeakRankReport, RankReport};
