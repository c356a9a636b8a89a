//! Closed-form values, constructors and membership predicates for the
//! extremal families.

mod families;
mod formulas;
mod regular;

pub use families::{
    build_d_member, build_ex_friendship, build_gamma_variant, build_h_member, build_member,
    d_family_members, diagonal_extremal_member, e_family_members, h_structures, is_gamma_member,
    is_member_d, is_member_e, is_member_f, is_member_h, FamilyDescriptor, HStructure,
};
pub use formulas::{
    ar_friendship, ar_star_matching, ex_friendship, ex_mantel, f_diagonal, f_formula,
    quarter_square, FormulaValue,
};
pub use regular::{block_classes, build_nearly_regular_factor_critical, has_block_degrees};
