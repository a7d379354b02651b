//! Derived structures: Gelfand-type products and coproducts, pre-Novikov
//! algebras from O-operators, differential dendriform algebras and
//! quasi-Frobenius forms, and noncommutative Novikov bialgebras from
//! weight-zero differential ASI bialgebras.

use crate::construct::{
    bialgebra_reports, double_product, nn_algebra_reports, require, run, tag, NNRepresentation,
    Verified,
};
use crate::error::{Error, Result};
use crate::linalg::{LinMap, Scalar};
use crate::model::{
    all_passed, profile, ActionTable, AlgebraSpec, CoprodTable, Env, MulTable, Report,
};
use crate::ybe::{check_o_operator, OOperatorProblem};

const TABLES: [&str; 4] = ["lhd1", "lhd2", "rhd1", "rhd2"];

/// `(A, ◁₁, ◁₂, ▷₁, ▷₂)` with `≺ = ◁₁ + ◁₂` and `≻ = ▷₁ + ▷₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreNovikovSpec {
    pub dim: usize,
    pub lhd1: MulTable,
    pub lhd2: MulTable,
    pub rhd1: MulTable,
    pub rhd2: MulTable,
}

impl PreNovikovSpec {
    pub fn zero(dim: usize) -> Self {
        let z = MulTable::zero(dim);
        PreNovikovSpec {
            dim,
            lhd1: z.clone(),
            lhd2: z.clone(),
            rhd1: z.clone(),
            rhd2: z,
        }
    }

    pub fn tables(&self) -> [&MulTable; 4] {
        [&self.lhd1, &self.lhd2, &self.rhd1, &self.rhd2]
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        TABLES
            .iter()
            .zip(self.tables())
            .fold(AlgebraSpec::new(self.dim), |s, (n, t)| s.with_op(n, t.clone()))
    }

    /// Reads the four tables; absent ones are zero.
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let get = |n: &str| spec.ops.get(n).cloned().unwrap_or_else(|| MulTable::zero(spec.dim));
        if !TABLES.iter().any(|n| spec.ops.contains_key(*n)) {
            return Err(Error::missing("lhd1"));
        }
        Ok(PreNovikovSpec {
            dim: spec.dim,
            lhd1: get("lhd1"),
            lhd2: get("lhd2"),
            rhd1: get("rhd1"),
            rhd2: get("rhd2"),
        })
    }

    fn sums(&self) -> AlgebraSpec {
        AlgebraSpec::new(self.dim)
            .with_op("prec", &self.lhd1 + &self.lhd2)
            .with_op("succ", &self.rhd1 + &self.rhd2)
    }

    /// `(A, L◁₁, R◁₂, L▷₁, R▷₂)` over the associated algebra.
    pub fn tautological_rep(&self) -> NNRepresentation {
        NNRepresentation::new(
            self.sums(),
            self.dim,
            [
                ActionTable::left_of(&self.lhd1),
                ActionTable::right_of(&self.lhd2),
                ActionTable::left_of(&self.rhd1),
                ActionTable::right_of(&self.rhd2),
            ],
        )
        .expect("dimensions agree")
    }
}

pub fn check_pre_novikov(p: &PreNovikovSpec) -> Result<Vec<Report>> {
    run(&Env::from_spec(&p.to_spec())?, profile("pre-novikov").unwrap_or_default())
}

/// The associated algebra, with its axioms and the tautological
/// representation checked.
pub fn associated_nn(p: &PreNovikovSpec) -> Result<Verified<AlgebraSpec>> {
    require("associated algebra", check_pre_novikov(p)?)?;
    let value = p.sums();
    let mut contract = nn_algebra_reports(&value)?;
    contract.extend(tag(
        crate::construct::check_nn_representation(&p.tautological_rep())?,
        "tautological",
    ));
    Ok(Verified { value, contract })
}

fn weight_zero(spec: &AlgebraSpec) -> Result<()> {
    if spec.weight.is_zero() {
        Ok(())
    } else {
        Err(Error::WeightNotZero(spec.weight.to_string()))
    }
}

/// `x≺y = x·∂y`, `x≻y = ∂x·y` without checks.
fn gelfand_tables(mul: &MulTable, d: &LinMap) -> (MulTable, MulTable) {
    let n = mul.dim();
    let prec = MulTable::from_fn(n, |i, j, k| (0..n).map(|m| d.entry(m, j) * mul.get(i, m, k)).sum());
    let succ = MulTable::from_fn(n, |i, j, k| (0..n).map(|m| d.entry(m, i) * mul.get(m, j, k)).sum());
    (prec, succ)
}

/// `Δ≺ = (id⊗∂̂)Δ`, `Δ≻ = (∂̂⊗id)Δ`, the duals of `a*∘∂̂*b*` and `∂̂*a*∘b*`.
fn gelfand_cotables(c: &CoprodTable, dh: &LinMap) -> (CoprodTable, CoprodTable) {
    let n = c.dim();
    let coprec = CoprodTable::from_fn(n, |k, i, j| (0..n).map(|m| dh.entry(j, m) * c.get(k, i, m)).sum());
    let cosucc = CoprodTable::from_fn(n, |k, i, j| (0..n).map(|m| dh.entry(i, m) * c.get(k, m, j)).sum());
    (coprec, cosucc)
}

/// The noncommutative Novikov algebra of a weight-zero differential algebra.
pub fn gelfand_nn(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    weight_zero(spec)?;
    require("gelfand", run(&Env::from_spec(spec)?, &["ASSOC", "DER"])?)?;
    let (prec, succ) = gelfand_tables(spec.op("mul")?, spec.map("partial")?);
    let value = AlgebraSpec::new(spec.dim).with_op("prec", prec).with_op("succ", succ);
    let contract = nn_algebra_reports(&value)?;
    Ok(Verified { value, contract })
}

/// The coproducts dual to the Gelfand products on `A*`.
pub fn gelfand_dual(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    weight_zero(spec)?;
    require("gelfand dual", run(&Env::from_spec(spec)?, &["COASSOC", "CODER"])?)?;
    let (coprec, cosucc) = gelfand_cotables(spec.coprod("coprod")?, spec.map("partial_hat")?);
    let value = AlgebraSpec::new(spec.dim)
        .with_coprod("coprec", coprec)
        .with_coprod("cosucc", cosucc);
    let contract = run(&Env::from_spec(&value)?, &["NN-CO-1", "NN-CO-2"])?;
    Ok(Verified { value, contract })
}

/// `u◁₁v = ℓ≺(Tu)v`, `u◁₂v = r≺(Tv)u`, `u▷₁v = ℓ≻(Tu)v`, `u▷₂v = r≻(Tv)u`.
pub fn pre_novikov_from_o_operator(p: &OOperatorProblem) -> Result<Verified<PreNovikovSpec>> {
    require("pre-Novikov from O-operator", check_o_operator(p)?)?;
    let (n, m) = (p.rep.algebra.dim, p.rep.carrier_dim);
    let t = &p.t;
    let left = |a: &ActionTable| {
        MulTable::from_fn(m, |i, j, k| (0..n).map(|x| t.entry(x, i) * a.get(x, j, k)).sum())
    };
    let right = |a: &ActionTable| {
        MulTable::from_fn(m, |i, j, k| (0..n).map(|x| t.entry(x, j) * a.get(x, i, k)).sum())
    };
    let value = PreNovikovSpec {
        dim: m,
        lhd1: left(&p.rep.lprec),
        lhd2: right(&p.rep.rprec),
        rhd1: left(&p.rep.lsucc),
        rhd2: right(&p.rep.rsucc),
    };
    let contract = check_pre_novikov(&value)?;
    Ok(Verified { value, contract })
}

/// `x◁₁y = x≻D y`, `x▷₁y = Dx≻y`, `x◁₂y = x≺D y`, `x▷₂y = Dx≺y`.
pub fn pre_novikov_from_diff_dendriform(spec: &AlgebraSpec) -> Result<Verified<PreNovikovSpec>> {
    require(
        "pre-Novikov from dendriform",
        run(&Env::from_spec(spec)?, profile("differential-dendriform").unwrap_or_default())?,
    )?;
    let d = spec.map("D")?;
    let (lhd2, rhd2) = gelfand_tables(spec.op("prec_d")?, d);
    let (lhd1, rhd1) = gelfand_tables(spec.op("succ_d")?, d);
    let value = PreNovikovSpec {
        dim: spec.dim,
        lhd1,
        lhd2,
        rhd1,
        rhd2,
    };
    let contract = check_pre_novikov(&value)?;
    Ok(Verified { value, contract })
}

/// Solves `B(x◁₁y, z) = B(z∘x, y)`, `B(x◁₂y, z) = B(x, y≻z)`,
/// `B(x▷₁y, z) = B(y, z≺x)` and `B(x▷₂y, z) = B(y∘z, x)` for the four tables.
pub fn pre_novikov_from_quasi_frobenius(spec: &AlgebraSpec) -> Result<Verified<PreNovikovSpec>> {
    let env = Env::from_spec(spec)?;
    let mut pre = nn_algebra_reports(spec)?;
    pre.extend(run(&env, profile("quasi-frobenius").unwrap_or_default())?);
    require("pre-Novikov from quasi-Frobenius", pre)?;
    let n = spec.dim;
    let b = spec.form("form")?;
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let c = spec.circ()?;
    let bt_inv = b.0.transpose().inverse().expect("nondegenerate form");
    let basis = |i: usize| -> Vec<Scalar> { (0..n).map(|k| Scalar::from_int((k == i) as i64)).collect() };
    // Each table row u = B⁻ᵀ w where w_z is the right-hand side at e_z.
    let solve = |rhs: &dyn Fn(&[Scalar], &[Scalar], &[Scalar]) -> Scalar| {
        let mut t = MulTable::zero(n);
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (basis(i), basis(j));
                let w: Vec<Scalar> = (0..n).map(|z| rhs(&x, &y, &basis(z))).collect();
                for (k, v) in bt_inv.mul_vec(&w).into_iter().enumerate() {
                    t.set(i, j, k, v);
                }
            }
        }
        t
    };
    let value = PreNovikovSpec {
        dim: n,
        lhd1: solve(&|x, y, z| b.eval(&c.mul(z, x), y)),
        lhd2: solve(&|x, y, z| b.eval(x, &s.mul(y, z))),
        rhd1: solve(&|x, y, z| b.eval(y, &p.mul(z, x))),
        rhd2: solve(&|x, y, z| b.eval(&c.mul(y, z), x)),
    };
    let contract = check_pre_novikov(&value)?;
    Ok(Verified { value, contract })
}

/// Hypotheses of the weight-zero bialgebra construction.
pub fn theorem_main_reports(spec: &AlgebraSpec) -> Result<Vec<Report>> {
    let env = Env::from_spec(spec)?;
    let mut out = run(&env, profile("differential-asi-bialgebra").unwrap_or_default())?;
    out.extend(run(&env, profile("theorem-main").unwrap_or_default())?);
    Ok(out)
}

/// Gelfand products on `A`, dual Gelfand coproducts, and the Manin triple on
/// `A ⊕ A*` given by `u≺v = u⋆Dv`, `u≻v = Du⋆v` with `D = ∂ + ∂̂*`.
fn build_nn_bialgebra(spec: &AlgebraSpec) -> Result<(AlgebraSpec, Vec<Report>)> {
    let (prec, succ) = gelfand_tables(spec.op("mul")?, spec.map("partial")?);
    let (coprec, cosucc) = gelfand_cotables(spec.coprod("coprod")?, spec.map("partial_hat")?);
    let value = AlgebraSpec::new(spec.dim)
        .with_op("prec", prec)
        .with_op("succ", succ)
        .with_coprod("coprec", coprec)
        .with_coprod("cosucc", cosucc);
    let mut contract = bialgebra_reports(&value)?;
    contract.extend(tag(
        run(&Env::from_spec(&manin_double(spec)?)?, &["NN-1", "NN-2", "FORM-SYM", "FORM-NONDEG", "INV-NN"])?,
        "manin",
    ));
    Ok((value, contract))
}

fn manin_double(spec: &AlgebraSpec) -> Result<AlgebraSpec> {
    let dc = double_product(spec)?;
    let (prec, succ) = gelfand_tables(dc.op("mul")?, dc.map("partial")?);
    Ok(AlgebraSpec::new(dc.dim)
        .with_op("prec", prec)
        .with_op("succ", succ)
        .with_form("form", dc.form("form")?.clone()))
}

/// The noncommutative Novikov bialgebra of a weight-zero differential ASI
/// bialgebra satisfying `∂̂(x)·y = −∂(x)·y` and `(∂̂⊗id)Δ = −(∂⊗id)Δ`.
///
/// The contract holds the bialgebra profile of the output and the Manin
/// triple reports tagged `manin`.
pub fn derive_nn_bialgebra(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    weight_zero(spec)?;
    require("derive noncommutative Novikov bialgebra", theorem_main_reports(spec)?)?;
    let (value, contract) = build_nn_bialgebra(spec)?;
    Ok(Verified { value, contract })
}

/// Builds the output regardless of the hypotheses. The contract lists the
/// hypothesis reports tagged `hypothesis`, followed by the output reports.
pub fn derive_nn_bialgebra_diagnostic(spec: &AlgebraSpec) -> Result<Verified<AlgebraSpec>> {
    let mut contract = tag(theorem_main_reports(spec)?, "hypothesis");
    let (value, out) = build_nn_bialgebra(spec)?;
    contract.extend(out);
    Ok(Verified { value, contract })
}

/// Whether every hypothesis report passed in a diagnostic contract.
pub fn hypotheses_held(contract: &[Report]) -> bool {
    let hyp: Vec<Report> = contract
        .iter()
        .filter(|r| r.context.as_deref() == Some("hypothesis"))
        .cloned()
        .collect();
    all_passed(&hyp)
}
