//! Groebner bases over the rationals and the ideal operations built on
//! them: membership, equality, elimination, saturation, intersection and
//! subalgebra membership.

mod engine;
mod ideal;
mod order;
mod subalgebra;

pub use engine::{buchberger, normal_form, GbOptions, SelectionStrategy, GB_BUDGET_ENV};
pub use ideal::{
    eliminate, ideal_equality, ideal_equality_in, ideal_membership, intersect, saturate_element, saturate_ideal,
    saturate_monomial, GroebnerIdeal,
};
pub use order::{BlockKind, MonomialOrder, OrderBlock};
pub use subalgebra::{subalgebra_membership, SubalgebraMembership};

#[cfg(test)]
mod tests;
