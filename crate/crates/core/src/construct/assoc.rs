use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{dual_map, BilinearForm, LinMap, Scalar};
use crate::model::{
    check_identity_env, dualize_coprod, profile, ActionTable, AlgebraSpec, Binding, CheckOptions,
    Env, MulTable, Report, Space,
};

use super::{require, run, standard_pairing, tag, Verified};

/// `(V, ℓ, r, θ)` over an algebra carrying `mul` and `partial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocRepresentation {
    pub algebra: AlgebraSpec,
    pub carrier_dim: usize,
    pub l: ActionTable,
    pub r: ActionTable,
    pub theta: LinMap,
}

impl AssocRepresentation {
    pub fn new(algebra: AlgebraSpec, l: ActionTable, r: ActionTable, theta: LinMap) -> Result<Self> {
        let (n, m) = (algebra.dim, theta.cols());
        for (name, a) in [("l", &l), ("r", &r)] {
            if a.acting_dim() != n || a.carrier_dim() != m {
                return Err(Error::dims(format!("action {name} does not act from {n} on {m}")));
            }
        }
        if theta.rows() != m {
            return Err(Error::dims("theta must be square"));
        }
        Ok(AssocRepresentation {
            algebra,
            carrier_dim: m,
            l,
            r,
            theta,
        })
    }

    /// `(A, L, R, ∂)`.
    pub fn adjoint(algebra: &AlgebraSpec) -> Result<Self> {
        let m = algebra.op("mul")?;
        let d = algebra.map("partial")?.clone();
        AssocRepresentation::new(algebra.clone(), ActionTable::left_of(m), ActionTable::right_of(m), d)
    }

    pub fn env(&self) -> Result<Env<'_>> {
        let mut env = Env::from_spec(&self.algebra)?.with_dim(Space::V, self.carrier_dim);
        env.actions.clear();
        Ok(env
            .with_action("l", Cow::Borrowed(&self.l))
            .with_action("r", Cow::Borrowed(&self.r))
            .with_map("theta", Cow::Borrowed(&self.theta)))
    }
}

/// `ASSOC-REP`, `DA-REP-1`, `DA-REP-2`.
pub fn check_da_representation(rep: &AssocRepresentation) -> Result<Vec<Report>> {
    run(&rep.env()?, profile("da-representation").unwrap_or_default())
}

fn da_reports(spec: &AlgebraSpec) -> Result<Vec<Report>> {
    run(&Env::from_spec(spec)?, &["ASSOC", "DER"])
}

fn da_spec(dim: usize, weight: &Scalar, mul: MulTable, partial: LinMap) -> AlgebraSpec {
    AlgebraSpec::new(dim)
        .with_weight(weight.clone())
        .with_op("mul", mul)
        .with_map("partial", partial)
}

/// The algebra on `A ⊕ V` with derivation `∂ + θ`.
pub fn semidirect_assoc(rep: &AssocRepresentation) -> Result<Verified<AlgebraSpec>> {
    let (n, m) = (rep.algebra.dim, rep.carrier_dim);
    let mul = rep.algebra.op("mul")?;
    let t = MulTable::from_fn(n + m, |i, j, k| match (i < n, j < n, k < n) {
        (true, true, true) => mul.get(i, j, k).clone(),
        (true, false, false) => rep.l.get(i, j - n, k - n).clone(),
        (false, true, false) => rep.r.get(j, i - n, k - n).clone(),
        _ => Scalar::zero(),
    });
    let d = rep.algebra.map("partial")?.direct_sum(&rep.theta);
    let value = da_spec(n + m, &rep.algebra.weight, t, d);
    let contract = da_reports(&value)?;
    Ok(Verified { value, contract })
}

/// Two differential algebras acting on each other; `l_a, r_a` act from `A`
/// on `B` and `l_b, r_b` from `B` on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairAssoc {
    pub a: AlgebraSpec,
    pub b: AlgebraSpec,
    pub l_a: ActionTable,
    pub r_a: ActionTable,
    pub l_b: ActionTable,
    pub r_b: ActionTable,
}

impl MatchedPairAssoc {
    /// `(B, ℓ_A, r_A, ∂_B)` as a representation of `A`.
    pub fn a_on_b(&self) -> Result<AssocRepresentation> {
        AssocRepresentation::new(
            self.a.clone(),
            self.l_a.clone(),
            self.r_a.clone(),
            self.b.map("partial")?.clone(),
        )
    }

    pub fn b_on_a(&self) -> Result<AssocRepresentation> {
        AssocRepresentation::new(
            self.b.clone(),
            self.l_b.clone(),
            self.r_b.clone(),
            self.a.map("partial")?.clone(),
        )
    }

    pub fn env(&self) -> Result<Env<'_>> {
        Ok(Env::new()
            .with_dim(Space::A, self.a.dim)
            .with_dim(Space::B, self.b.dim)
            .with_op("mul_A", Cow::Borrowed(self.a.op("mul")?))
            .with_op("mul_B", Cow::Borrowed(self.b.op("mul")?))
            .with_action("l_A", Cow::Borrowed(&self.l_a))
            .with_action("r_A", Cow::Borrowed(&self.r_a))
            .with_action("l_B", Cow::Borrowed(&self.l_b))
            .with_action("r_B", Cow::Borrowed(&self.r_b)))
    }
}

/// Both differential algebras, both representations and the six
/// compatibility identities.
pub fn check_matched_pair_assoc(mp: &MatchedPairAssoc) -> Result<Vec<Report>> {
    let mut out = tag(da_reports(&mp.a)?, "A");
    out.extend(tag(da_reports(&mp.b)?, "B"));
    out.extend(tag(check_da_representation(&mp.a_on_b()?)?, "A on B"));
    out.extend(tag(check_da_representation(&mp.b_on_a()?)?, "B on A"));
    out.extend(run(&mp.env()?, profile("matched-pair-assoc").unwrap_or_default())?);
    Ok(out)
}

/// `(a+b)⋆(a'+b') = (aa' + r_B(b')a + ℓ_B(b)a') + (bb' + ℓ_A(a)b' + r_A(a')b)`
/// with derivation `∂_A + ∂_B`.
pub fn bowtie_assoc(mp: &MatchedPairAssoc) -> Result<Verified<AlgebraSpec>> {
    let (na, nb) = (mp.a.dim, mp.b.dim);
    let (ma, mb) = (mp.a.op("mul")?, mp.b.op("mul")?);
    let t = MulTable::from_fn(na + nb, |i, j, k| match (i < na, j < na, k < na) {
        (true, true, true) => ma.get(i, j, k).clone(),
        (false, false, false) => mb.get(i - na, j - na, k - na).clone(),
        (true, false, true) => mp.r_b.get(j - na, i, k).clone(),
        (true, false, false) => mp.l_a.get(i, j - na, k - na).clone(),
        (false, true, true) => mp.l_b.get(i - na, j, k).clone(),
        (false, true, false) => mp.r_a.get(j, i - na, k - na).clone(),
        _ => Scalar::zero(),
    });
    let d = mp.a.map("partial")?.direct_sum(mp.b.map("partial")?);
    let value = da_spec(na + nb, &mp.a.weight, t, d);
    let contract = da_reports(&value)?;
    Ok(Verified { value, contract })
}

/// `(A*, ∘, ∂̂*)` with `∘` dual to `Δ`.
fn dual_da(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    Ok(da_spec(
        spec.dim,
        &spec.weight,
        dualize_coprod(spec.coprod("coprod")?),
        dual_map(spec.map("partial_hat")?),
    ))
}

/// The matched pair `(A, A*, R·*, L·*, R∘*, L∘*)` of a differential ASI
/// bialgebra candidate.
pub fn matched_pair_from_dasi(spec: &AlgebraSpec) -> Result<MatchedPairAssoc> {
    let mut a = spec.clone();
    a.coprods.clear();
    a.maps.retain(|k, _| k == "partial");
    let b = dual_da(spec)?;
    let (m, c) = (spec.op("mul")?, b.op("mul")?);
    Ok(MatchedPairAssoc {
        l_a: ActionTable::right_of(m).dual(),
        r_a: ActionTable::left_of(m).dual(),
        l_b: ActionTable::right_of(c).dual(),
        r_b: ActionTable::left_of(c).dual(),
        a,
        b,
    })
}

/// The algebra `⋆` on `A ⊕ A*` with derivation `∂ + ∂̂*`, written out from
/// the structure constants, and the pairing form. No checks.
pub(crate) fn double_product(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    let n = spec.dim;
    let (mul, d) = (spec.op("mul")?, spec.coprod("coprod")?);
    let (p, ph) = (spec.map("partial")?, spec.map("partial_hat")?);
    let t = MulTable::from_fn(2 * n, |i, j, k| match (i < n, j < n, k < n) {
        (true, true, true) => mul.get(i, j, k).clone(),
        (false, false, false) => d.get(k - n, i - n, j - n).clone(),
        // e_i ⋆ e_j* = L∘*(e_j*)e_i + R·*(e_i)e_j*
        (true, false, true) => d.get(i, j - n, k).clone(),
        (true, false, false) => mul.get(k - n, i, j - n).clone(),
        // e_i* ⋆ e_j = R∘*(e_i*)e_j + L·*(e_j)e_i*
        (false, true, true) => d.get(j, k, i - n).clone(),
        (false, true, false) => mul.get(j, k - n, i - n).clone(),
        _ => Scalar::zero(),
    });
    Ok(da_spec(2 * n, &spec.weight, t, p.direct_sum(&dual_map(ph)))
        .with_map("partial_hat", ph.direct_sum(&dual_map(p)))
        .with_form("form", standard_pairing(n)))
}

/// [`double_product`] after checking both differential algebras, with the
/// Frobenius contract of the result.
pub fn double_construction(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    let mut pre = tag(da_reports(spec)?, "A");
    pre.extend(tag(da_reports(&dual_da(spec)?)?, "A*"));
    require("double construction", pre)?;
    let value = double_product(spec)?;
    let contract = run(
        &Env::from_spec(&value)?,
        &["ASSOC", "DER", "FORM-SYM", "FORM-NONDEG", "INV-ASSOC"],
    )?;
    Ok(Verified { value, contract })
}

/// The unique `m̂` with `B(m x, y) = B(x, m̂ y)`, i.e. `B⁻¹ mᵀ B`.
pub fn adjoint_wrt_form(m: &LinMap, b: &BilinearForm) -> Result<LinMap> {
    if m.rows() != b.dim() || m.cols() != b.dim() {
        return Err(Error::dims("map and form sizes differ"));
    }
    let inv = b
        .0
        .inverse()
        .ok_or_else(|| Error::Degenerate("bilinear form has a kernel".into()))?;
    Ok(LinMap(&(&inv * &m.0.transpose()) * &b.0))
}

/// Compares `(A, L, R, ∂)` with `(A*, R*, L*, ∂̂*)` through `φ(x) = B(x, ·)`.
pub fn frobenius_rep_equivalence(spec: &AlgebraSpec) -> Result<(Report, LinMap)> {
    let env = Env::from_spec(spec)?;
    require("frobenius form", run(&env, &["FORM-SYM", "FORM-NONDEG", "INV-ASSOC"])?)?;
    let n = spec.dim;
    let mul = spec.op("mul")?;
    let phi = LinMap(spec.form("form")?.0.transpose());
    let env = Env::new()
        .with_dim(Space::A, n)
        .with_dim(Space::V, n)
        .with_action("l1", Cow::Owned(ActionTable::left_of(mul)))
        .with_action("r1", Cow::Owned(ActionTable::right_of(mul)))
        .with_action("l2", Cow::Owned(ActionTable::right_of(mul).dual()))
        .with_action("r2", Cow::Owned(ActionTable::left_of(mul).dual()))
        .with_map("theta1", Cow::Borrowed(spec.map("partial")?))
        .with_map("theta2", Cow::Owned(dual_map(spec.map("partial_hat")?)))
        .with_map("phi", Cow::Borrowed(&phi));
    let report = check_identity_env(&env, "REP-EQUIV", &Binding::new(), CheckOptions::default())?;
    Ok((report, phi))
}
