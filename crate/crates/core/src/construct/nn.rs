use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{LinMap, Scalar};
use crate::model::{
    dualize_coprod, profile, Binding, CheckOptions, ActionTable, AlgebraSpec, Env, MulTable,
    Representation, Report, Space,
};

use super::{require, run, standard_pairing, tag, Verified};

const ACTIONS: [&str; 4] = ["lprec", "rprec", "lsucc", "rsucc"];

/// `(V, ℓ≺, r≺, ℓ≻, r≻)` over an algebra carrying `prec` and `succ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NNRepresentation {
    pub algebra: AlgebraSpec,
    pub carrier_dim: usize,
    pub lprec: ActionTable,
    pub rprec: ActionTable,
    pub lsucc: ActionTable,
    pub rsucc: ActionTable,
    pub theta: Option<LinMap>,
}

impl NNRepresentation {
    /// All four actions zero.
    pub fn zero(algebra: AlgebraSpec, carrier_dim: usize) -> Self {
        let z = ActionTable::zero(algebra.dim, carrier_dim);
        NNRepresentation {
            algebra,
            carrier_dim,
            lprec: z.clone(),
            rprec: z.clone(),
            lsucc: z.clone(),
            rsucc: z,
            theta: None,
        }
    }

    pub fn new(
        algebra: AlgebraSpec,
        carrier_dim: usize,
        [lprec, rprec, lsucc, rsucc]: [ActionTable; 4],
    ) -> Result<Self> {
        let n = algebra.dim;
        for (name, a) in ACTIONS.iter().zip([&lprec, &rprec, &lsucc, &rsucc]) {
            if a.acting_dim() != n || a.carrier_dim() != carrier_dim {
                return Err(Error::dims(format!(
                    "action {name}: {} on {}, expected {n} on {carrier_dim}",
                    a.acting_dim(),
                    a.carrier_dim()
                )));
            }
        }
        Ok(NNRepresentation {
            algebra,
            carrier_dim,
            lprec,
            rprec,
            lsucc,
            rsucc,
            theta: None,
        })
    }

    pub fn actions(&self) -> [&ActionTable; 4] {
        [&self.lprec, &self.rprec, &self.lsucc, &self.rsucc]
    }

    pub fn actions_mut(&mut self) -> [&mut ActionTable; 4] {
        [&mut self.lprec, &mut self.rprec, &mut self.lsucc, &mut self.rsucc]
    }

    /// Algebra on `A`, carrier on `V`.
    pub fn env(&self) -> Result<Env<'_>> {
        let mut env = Env::from_spec(&self.algebra)?.with_dim(Space::V, self.carrier_dim);
        env.actions.clear();
        for (name, a) in ACTIONS.iter().zip(self.actions()) {
            env = env.with_action(name, Cow::Borrowed(a));
        }
        if let Some(t) = &self.theta {
            env = env.with_map("theta", Cow::Borrowed(t));
        }
        Ok(env)
    }

    /// The algebra with the actions attached as its representation.
    pub fn to_spec(&self) -> AlgebraSpec {
        let mut rep = Representation::new(self.carrier_dim);
        for (name, a) in ACTIONS.iter().zip(self.actions()) {
            rep = rep.with_action(name, a.clone());
        }
        if let Some(t) = &self.theta {
            rep = rep.with_map("theta", t.clone());
        }
        let mut spec = self.algebra.clone();
        spec.rep = Some(rep);
        spec
    }

    /// Reads `lprec`, `rprec`, `lsucc`, `rsucc` (absent ones are zero).
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let rep = spec.representation()?;
        let mut algebra = spec.clone();
        algebra.rep = None;
        let mut out = NNRepresentation::zero(algebra, rep.dim);
        for (name, slot) in ACTIONS.iter().zip(out.actions_mut()) {
            if let Some(a) = rep.actions.get(*name) {
                *slot = a.clone();
            }
        }
        out.theta = rep.maps.get("theta").cloned();
        spec.validate()?;
        Ok(out)
    }
}

pub fn check_nn_representation(rep: &NNRepresentation) -> Result<Vec<Report>> {
    run(&rep.env()?, profile("nn-representation").unwrap_or_default())
}

pub(crate) fn nn_algebra_reports(spec: &AlgebraSpec) -> Result<Vec<Report>> {
    run(&Env::from_spec(spec)?, &["NN-1", "NN-2"])
}

fn circ_of(spec: &AlgebraSpec) -> Result<MulTable> {
    spec.circ()
}

/// `(V*, −r∘*, ℓ≻*, r≺*, −ℓ∘*)` without any checks.
pub(crate) fn dual_actions(rep: &NNRepresentation) -> NNRepresentation {
    let rcirc = &rep.rprec + &rep.rsucc;
    let lcirc = &rep.lprec + &rep.lsucc;
    NNRepresentation {
        algebra: rep.algebra.clone(),
        carrier_dim: rep.carrier_dim,
        lprec: -&rcirc.dual(),
        rprec: rep.lsucc.dual(),
        lsucc: rep.rprec.dual(),
        rsucc: -&lcirc.dual(),
        theta: None,
    }
}

pub fn dual_nn_representation(rep: &NNRepresentation) -> Result<Verified<NNRepresentation>> {
    require("dual representation", check_nn_representation(rep)?)?;
    let value = dual_actions(rep);
    let contract = check_nn_representation(&value)?;
    Ok(Verified { value, contract })
}

fn adjoint_actions(spec: &AlgebraSpec) -> Result<NNRepresentation> {
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let mut algebra = spec.clone();
    algebra.rep = None;
    NNRepresentation::new(
        algebra,
        spec.dim,
        [
            ActionTable::left_of(p),
            ActionTable::right_of(p),
            ActionTable::left_of(s),
            ActionTable::right_of(s),
        ],
    )
}

/// `(A, L≺, R≺, L≻, R≻)`.
pub fn adjoint_nn(spec: &AlgebraSpec) -> Result<Verified<NNRepresentation>> {
    require("adjoint representation", nn_algebra_reports(spec)?)?;
    let value = adjoint_actions(spec)?;
    let contract = check_nn_representation(&value)?;
    Ok(Verified { value, contract })
}

/// Coadjoint actions built from the structure constants directly.
fn coadjoint_actions(spec: &AlgebraSpec) -> Result<NNRepresentation> {
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let c = circ_of(spec)?;
    let n = spec.dim;
    // ⟨ρ*(e_i) e_j*, e_k⟩ = ⟨e_j*, ρ(e_i) e_k⟩.
    let lprec = ActionTable::from_fn(n, n, |i, j, k| -c.get(k, i, j)); // −R∘*
    let rprec = ActionTable::from_fn(n, n, |i, j, k| s.get(i, k, j).clone()); // L≻*
    let lsucc = ActionTable::from_fn(n, n, |i, j, k| p.get(k, i, j).clone()); // R≺*
    let rsucc = ActionTable::from_fn(n, n, |i, j, k| -c.get(i, k, j)); // −L∘*
    let mut algebra = spec.clone();
    algebra.rep = None;
    NNRepresentation::new(algebra, n, [lprec, rprec, lsucc, rsucc])
}

/// `(A*, −R∘*, L≻*, R≺*, −L∘*)`.
pub fn coadjoint_nn(spec: &AlgebraSpec) -> Result<Verified<NNRepresentation>> {
    require("coadjoint representation", nn_algebra_reports(spec)?)?;
    let value = coadjoint_actions(spec)?;
    let contract = check_nn_representation(&value)?;
    Ok(Verified { value, contract })
}

fn nn_spec(dim: usize, prec: MulTable, succ: MulTable) -> AlgebraSpec {
    AlgebraSpec::new(dim).with_op("prec", prec).with_op("succ", succ)
}

/// `(x+u)≺'(y+v) = x≺y + ℓ≺(x)v + r≺(y)u`, likewise for `≻'`.
pub fn semidirect_nn(rep: &NNRepresentation) -> Result<Verified<AlgebraSpec>> {
    let (n, m) = (rep.algebra.dim, rep.carrier_dim);
    let build = |base: &MulTable, l: &ActionTable, r: &ActionTable| {
        MulTable::from_fn(n + m, |i, j, k| match (i < n, j < n, k < n) {
            (true, true, true) => base.get(i, j, k).clone(),
            (true, false, false) => l.get(i, j - n, k - n).clone(),
            (false, true, false) => r.get(j, i - n, k - n).clone(),
            _ => Scalar::zero(),
        })
    };
    let prec = build(rep.algebra.op("prec")?, &rep.lprec, &rep.rprec);
    let succ = build(rep.algebra.op("succ")?, &rep.lsucc, &rep.rsucc);
    let value = nn_spec(n + m, prec, succ);
    let contract = nn_algebra_reports(&value)?;
    Ok(Verified { value, contract })
}

/// Two algebras acting on each other: `a` is `A` acting on `B`, `b` is `B`
/// acting on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    pub a: NNRepresentation,
    pub b: NNRepresentation,
}

impl MatchedPairData {
    pub fn new(a: NNRepresentation, b: NNRepresentation) -> Result<Self> {
        if a.carrier_dim != b.algebra.dim || b.carrier_dim != a.algebra.dim {
            return Err(Error::dims(format!(
                "matched pair of dims {} and {} with carriers {} and {}",
                a.algebra.dim, b.algebra.dim, a.carrier_dim, b.carrier_dim
            )));
        }
        Ok(MatchedPairData { a, b })
    }

    /// Spaces `A` and `B`; operations and actions suffixed by their algebra.
    pub fn env(&self) -> Result<Env<'_>> {
        let (a, b) = (&self.a.algebra, &self.b.algebra);
        let mut env = Env::new()
            .with_dim(Space::A, a.dim)
            .with_dim(Space::B, b.dim)
            .with_op("prec_A", Cow::Borrowed(a.op("prec")?))
            .with_op("succ_A", Cow::Borrowed(a.op("succ")?))
            .with_op("prec_B", Cow::Borrowed(b.op("prec")?))
            .with_op("succ_B", Cow::Borrowed(b.op("succ")?));
        for (name, t) in ACTIONS.iter().zip(self.a.actions()) {
            env = env.with_action(&format!("{name}_A"), Cow::Borrowed(t));
        }
        for (name, t) in ACTIONS.iter().zip(self.b.actions()) {
            env = env.with_action(&format!("{name}_B"), Cow::Borrowed(t));
        }
        Ok(env)
    }
}

/// Both representations plus the twelve compatibility identities.
pub fn check_matched_pair_nn(mp: &MatchedPairData) -> Result<Vec<Report>> {
    let mut out = tag(check_nn_representation(&mp.a)?, "A on B");
    out.extend(tag(check_nn_representation(&mp.b)?, "B on A"));
    out.extend(crate::model::check_ids_env(
        &mp.env()?,
        profile("matched-pair-nn").unwrap_or_default(),
        &Binding::new(),
        CheckOptions::default(),
    )?);
    Ok(out)
}

fn bowtie_products(a: &NNRepresentation, b: &NNRepresentation) -> Result<AlgebraSpec> {
    let (na, nb) = (a.algebra.dim, b.algebra.dim);
    if a.carrier_dim != nb || b.carrier_dim != na {
        return Err(Error::dims("matched pair carriers do not match the algebras"));
    }
    let n = na + nb;
    let build = |pa: &MulTable, pb: &MulTable, la: &ActionTable, ra: &ActionTable, lb: &ActionTable, rb: &ActionTable| {
        let mut t = MulTable::zero(n);
        for ([i, j, k], v) in pa.nonzero() {
            t.set(i, j, k, v.clone());
        }
        for ([i, j, k], v) in pb.nonzero() {
            t.set(na + i, na + j, na + k, v.clone());
        }
        // x * b: r_B(b)x in A, ℓ_A(x)b in B.
        for ([bb, x, k], v) in rb.nonzero() {
            t.add_to(x, na + bb, k, v);
        }
        for ([x, bb, c], v) in la.nonzero() {
            t.add_to(x, na + bb, na + c, v);
        }
        // a * y: ℓ_B(a)y in A, r_A(y)a in B.
        for ([aa, y, k], v) in lb.nonzero() {
            t.add_to(na + aa, y, k, v);
        }
        for ([y, aa, c], v) in ra.nonzero() {
            t.add_to(na + aa, y, na + c, v);
        }
        t
    };
    let prec = build(a.algebra.op("prec")?, b.algebra.op("prec")?, &a.lprec, &a.rprec, &b.lprec, &b.rprec);
    let succ = build(a.algebra.op("succ")?, b.algebra.op("succ")?, &a.lsucc, &a.rsucc, &b.lsucc, &b.rsucc);
    Ok(nn_spec(n, prec, succ))
}

/// The algebra on `A ⊕ B` with products mixing both actions.
pub fn bowtie_nn(mp: &MatchedPairData) -> Result<Verified<AlgebraSpec>> {
    let value = bowtie_products(&mp.a, &mp.b)?;
    let contract = nn_algebra_reports(&value)?;
    Ok(Verified { value, contract })
}

pub(crate) fn bialgebra_reports(spec: &AlgebraSpec) -> Result<Vec<Report>> {
    run(&Env::from_spec(spec)?, profile("nn-bialgebra").unwrap_or_default())
}

/// The algebra `(A*, ≺*, ≻*)` dual to the coproducts.
fn dual_nn_algebra(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    Ok(nn_spec(
        spec.dim,
        dualize_coprod(spec.coprod("coprec")?),
        dualize_coprod(spec.coprod("cosucc")?),
    ))
}

/// The Manin triple on `A ⊕ A*`, products written out from the bialgebra.
pub fn manin_from_bialgebra(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    require("manin triple", bialgebra_reports(spec)?)?;
    let n = spec.dim;
    let (p, s, c) = (spec.op("prec")?, spec.op("succ")?, circ_of(spec)?);
    let (dp, ds) = (spec.coprod("coprec")?, spec.coprod("cosucc")?);
    let dc = dp + ds;
    let mut prec = MulTable::zero(2 * n);
    let mut succ = MulTable::zero(2 * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // A ⊗ A and A* ⊗ A*.
                prec.set(i, j, k, p.get(i, j, k).clone());
                succ.set(i, j, k, s.get(i, j, k).clone());
                prec.set(n + i, n + j, n + k, dp.get(k, i, j).clone());
                succ.set(n + i, n + j, n + k, ds.get(k, i, j).clone());
                // e_i ⋄ e_j*.
                prec.set(i, n + j, k, ds.get(i, j, k).clone());
                prec.set(i, n + j, n + k, -c.get(k, i, j));
                succ.set(i, n + j, k, -dc.get(i, j, k));
                succ.set(i, n + j, n + k, p.get(k, i, j).clone());
                // e_i* ⋄ e_j.
                prec.set(n + i, j, k, -dc.get(j, k, i));
                prec.set(n + i, j, n + k, s.get(j, k, i).clone());
                succ.set(n + i, j, k, dp.get(j, k, i).clone());
                succ.set(n + i, j, n + k, -c.get(j, k, i));
            }
        }
    }
    let value = nn_spec(2 * n, prec, succ).with_form("form", standard_pairing(n));
    let contract = run(
        &Env::from_spec(&value)?,
        &["NN-1", "NN-2", "FORM-SYM", "FORM-NONDEG", "INV-NN"],
    )?;
    Ok(Verified { value, contract })
}

/// Coadjoint actions of `A` on `A*` and of `A*` on `A`.
pub fn matched_pair_from_bialgebra(spec: &AlgebraSpec) -> Result<Verified<MatchedPairData>> {
    require("matched pair", bialgebra_reports(spec)?)?;
    let a = dual_actions(&adjoint_actions(spec)?);
    let b = dual_actions(&adjoint_actions(&dual_nn_algebra(spec)?)?);
    let value = MatchedPairData::new(a, b)?;
    let contract = check_matched_pair_nn(&value)?;
    Ok(Verified { value, contract })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{all_passed, CoprodTable};

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    /// The two-dimensional bialgebra: e_i≺e_i = −e_i, e_i≻e_i = e_i.
    pub(crate) fn nn2() -> AlgebraSpec {
        let diag = |c: i64| MulTable::from_fn(2, |i, j, k| s(if i == j && j == k { c } else { 0 }));
        let codiag = |c: i64| CoprodTable::from_fn(2, |k, i, j| s(if i == j && j == k { c } else { 0 }));
        nn_spec(2, diag(-1), diag(1))
            .with_coprod("coprec", codiag(-1))
            .with_coprod("cosucc", codiag(1))
    }

    #[test]
    fn adjoint_and_coadjoint_of_nn2() {
        let adj = adjoint_nn(&nn2()).unwrap();
        assert!(adj.passed());
        assert_eq!(adj.value.lprec.matrix(0).0, crate::linalg::Matrix::from_ints(&[&[-1, 0], &[0, 0]]));
        let co = coadjoint_nn(&nn2()).unwrap();
        assert!(co.passed());
        assert_eq!(co.value, dual_actions(&adj.value));
    }

    #[test]
    fn double_dual_is_original() {
        let adj = adjoint_actions(&nn2()).unwrap();
        let dd = dual_actions(&dual_actions(&adj));
        assert_eq!(dd.actions(), adj.actions());
    }

    #[test]
    fn manin_equals_bowtie_of_matched_pair() {
        let m = manin_from_bialgebra(&nn2()).unwrap();
        assert!(m.passed(), "{:?}", m.contract);
        let mp = matched_pair_from_bialgebra(&nn2()).unwrap();
        assert!(mp.passed());
        let bt = bowtie_nn(&mp.value).unwrap();
        assert_eq!(bt.value.ops, m.value.ops);
    }

    #[test]
    fn semidirect_with_adjoint_passes() {
        let adj = adjoint_actions(&nn2()).unwrap();
        let sd = semidirect_nn(&adj).unwrap();
        assert_eq!(sd.value.dim, 4);
        assert!(all_passed(&sd.contract));
    }

    #[test]
    fn corrupted_rep_fails_semidirect() {
        let mut adj = adjoint_actions(&nn2()).unwrap();
        adj.lprec.set(0, 0, 0, s(1));
        assert!(!all_passed(&check_nn_representation(&adj).unwrap()));
        assert!(!semidirect_nn(&adj).unwrap().passed());
    }

    #[test]
    fn broken_bialgebra_is_rejected() {
        let mut spec = nn2();
        spec.coprods.get_mut("cosucc").unwrap().set(0, 0, 0, s(-1));
        assert!(matches!(manin_from_bialgebra(&spec), Err(Error::PreconditionFailed { .. })));
    }
}
