pub mod catalog;
pub mod check;
pub mod expr;
pub mod report;
pub mod spec;
pub mod tables;

pub use catalog::{canonical_id, catalog, expand_ids, lookup, profile, EntryKind, IdentityEntry, PROFILES};
pub use check::{
    check_entry, check_identity, check_identity_env, check_identity_with, check_ids, check_ids_env,
    check_profile, check_profile_env, check_profile_with,
};
pub use expr::{Binding, Coef, Env, Expr, RoleKind, Space, Val};
pub use report::{all_passed, CheckOptions, Report, Status, Witness};
pub use spec::{AlgebraSpec, Representation};
pub use tables::{dualize_coprod, dualize_mul, ActionTable, CoprodTable, MulTable};
