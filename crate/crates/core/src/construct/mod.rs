//! Structure-building maps. Every constructor re-checks its output and
//! returns the contract reports alongside the value.

mod assoc;
mod nn;

pub use assoc::{
    adjoint_wrt_form, bowtie_assoc, check_da_representation, check_matched_pair_assoc,
    double_construction, frobenius_rep_equivalence, matched_pair_from_dasi, semidirect_assoc, AssocRepresentation,
    MatchedPairAssoc,
};
pub use nn::{
    adjoint_nn, bowtie_nn, check_matched_pair_nn, check_nn_representation, coadjoint_nn,
    dual_nn_representation, manin_from_bialgebra, matched_pair_from_bialgebra, semidirect_nn,
    MatchedPairData, NNRepresentation,
};
pub(crate) use assoc::double_product;
pub(crate) use nn::{bialgebra_reports, dual_actions, nn_algebra_reports};

use crate::error::{Error, Result};
use crate::linalg::{BilinearForm, Matrix, Scalar};
use crate::model::{all_passed, check_ids_env, Binding, CheckOptions, Env, Report};

/// A constructed value with the reports of its verification pass.
#[derive(Clone, Debug)]
pub struct Verified<T> {
    pub value: T,
    pub contract: Vec<Report>,
}

impl<T> Verified<T> {
    pub fn passed(&self) -> bool {
        all_passed(&self.contract)
    }

    pub fn into_inner(self) -> T {
        self.value
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verified<U> {
        Verified {
            value: f(self.value),
            contract: self.contract,
        }
    }
}

pub(crate) fn run(env: &Env<'_>, ids: &[&str]) -> Result<Vec<Report>> {
    check_ids_env(env, ids, &Binding::new(), CheckOptions::default())
}

pub(crate) fn tag(reports: Vec<Report>, ctx: &str) -> Vec<Report> {
    reports.into_iter().map(|r| r.with_context(ctx)).collect()
}

/// Turns failing reports into a precondition error.
pub(crate) fn require(context: &str, reports: Vec<Report>) -> Result<()> {
    if all_passed(&reports) {
        Ok(())
    } else {
        Err(Error::PreconditionFailed {
            context: context.to_string(),
            reports,
        })
    }
}

/// The pairing `B(x + a*, y + b*) = ⟨x, b*⟩ + ⟨a*, y⟩` on `A ⊕ A*`.
pub fn standard_pairing(n: usize) -> BilinearForm {
    BilinearForm(Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i + n == j || j + n == i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }))
}
