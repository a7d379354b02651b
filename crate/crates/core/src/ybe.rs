//! The Novikov Yang-Baxter equation, triangular bialgebras, O-operators and
//! their lifts, the correspondence with quasi-Frobenius forms, and an
//! exhaustive grid search for antisymmetric solutions.

use std::borrow::Cow;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::construct::{
    bialgebra_reports, check_nn_representation, coadjoint_nn, dual_actions, nn_algebra_reports,
    require, run, semidirect_nn, tag, NNRepresentation, Verified,
};
use crate::error::{Error, Result};
use crate::linalg::{sharp, BilinearForm, LinMap, Matrix, Scalar, Tensor2, Tensor3};
use crate::model::{profile, AlgebraSpec, CoprodTable, Env, MulTable, Report, Witness};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

fn check_dim(spec: &AlgebraSpec, r: &Tensor2) -> Result<()> {
    if r.dim() != spec.dim {
        return Err(Error::dims(format!("tensor has dim {}, algebra has dim {}", r.dim(), spec.dim)));
    }
    Ok(())
}

/// `E(r) = r₁₂≻r₁₃ + r₁₃≺r₂₃ + r₂₃∘r₁₂`.
///
/// Only dimensions are validated; callers that need the Novikov axioms check
/// them separately.
pub fn eval_nybe(spec: &AlgebraSpec, r: &Tensor2) -> Result<Tensor3> {
    check_dim(spec, r)?;
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let c = spec.circ()?;
    Ok(nybe_tables(p, s, &c, r))
}

fn nybe_tables(prec: &MulTable, succ: &MulTable, circ: &MulTable, r: &Tensor2) -> Tensor3 {
    let n = r.dim();
    let idx = |a: usize, b: usize, c: usize| (a * n + b) * n + c;
    let rr = |a: usize, b: usize| r.entry(a, b);
    let mut w = vec![Scalar::zero(); n * n * n];
    let mut x = w.clone();
    let mut y = w.clone();
    for a in 0..n {
        for m in 0..n {
            for o in 0..n {
                for k in 0..n {
                    // w[a][k][o] = Σ_m r[m][k] succ[a][m][o]
                    let (rs, sv) = (rr(m, k), succ.get(a, m, o));
                    if !rs.is_zero() && !sv.is_zero() {
                        w[idx(a, k, o)] += rs * sv;
                    }
                    // x[a][m][o] = Σ_k r[a][k] prec[k][m][o]
                    let (ra, pv) = (rr(a, k), prec.get(k, m, o));
                    if !ra.is_zero() && !pv.is_zero() {
                        x[idx(a, m, o)] += ra * pv;
                    }
                    // y[a][m][o] = Σ_k r[a][k] circ[m][k][o]
                    let cv = circ.get(m, k, o);
                    if !ra.is_zero() && !cv.is_zero() {
                        y[idx(a, m, o)] += ra * cv;
                    }
                }
            }
        }
    }
    Tensor3::from_fn(n, |p, q, s| {
        let mut acc = Scalar::zero();
        for a in 0..n {
            let v = rr(a, q);
            if !v.is_zero() {
                acc += v * &w[idx(a, s, p)];
            }
            let v = rr(q, a);
            if !v.is_zero() {
                acc += v * &x[idx(p, a, s)];
            }
            let v = rr(a, s);
            if !v.is_zero() {
                acc += v * &y[idx(p, a, q)];
            }
        }
        acc
    })
}

/// `E(r)` as a report with one witness per nonzero entry.
pub fn nybe_report(spec: &AlgebraSpec, r: &Tensor2, limit: usize) -> Result<Report> {
    let e = eval_nybe(spec, r)?;
    let fails = e
        .nonzero()
        .map(|((p, q, s), v)| Witness {
            tuple: vec![p, q, s],
            residual: vec![v.clone()],
        })
        .collect();
    Ok(Report::from_failures("NYBE", fails, limit))
}

fn require_solution(spec: &AlgebraSpec, r: &Tensor2) -> Result<()> {
    check_dim(spec, r)?;
    if !r.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let e = eval_nybe(spec, r)?;
    if !e.is_zero() {
        return Err(Error::NybeNonzero(e));
    }
    Ok(())
}

/// `Δ≺(x) = −(id⊗L∘(x) + R≻(x)⊗id)r`, `Δ≻(x) = (id⊗L≺(x) + R∘(x)⊗id)r`.
pub fn triangular_coproducts(spec: &AlgebraSpec, r: &Tensor2) -> Result<(CoprodTable, CoprodTable)> {
    check_dim(spec, r)?;
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let c = spec.circ()?;
    let n = spec.dim;
    let sum = |f: &dyn Fn(usize) -> Scalar| (0..n).map(f).sum::<Scalar>();
    let coprec = CoprodTable::from_fn(n, |x, i, j| {
        -(sum(&|b| r.entry(i, b) * c.get(x, b, j)) + sum(&|a| r.entry(a, j) * s.get(a, x, i)))
    });
    let cosucc = CoprodTable::from_fn(n, |x, i, j| {
        sum(&|b| r.entry(i, b) * p.get(x, b, j)) + sum(&|a| r.entry(a, j) * c.get(a, x, i))
    });
    Ok((coprec, cosucc))
}

/// The triangular bialgebra of an antisymmetric solution, checked against
/// the full bialgebra profile.
pub fn triangular_bialgebra(spec: &AlgebraSpec, r: &Tensor2) -> Result<Verified<AlgebraSpec>> {
    require("triangular bialgebra", nn_algebra_reports(spec)?)?;
    require_solution(spec, r)?;
    let (coprec, cosucc) = triangular_coproducts(spec, r)?;
    let mut value = spec.clone();
    value.coprods.clear();
    value = value.with_coprod("coprec", coprec).with_coprod("cosucc", cosucc);
    let contract = bialgebra_reports(&value)?;
    Ok(Verified { value, contract })
}

/// A representation together with a candidate operator `T: V → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OOperatorProblem {
    pub rep: NNRepresentation,
    pub t: LinMap,
}

impl OOperatorProblem {
    pub fn new(rep: NNRepresentation, t: LinMap) -> Result<Self> {
        if t.rows() != rep.algebra.dim || t.cols() != rep.carrier_dim {
            return Err(Error::dims(format!(
                "T is {}x{}, expected {}x{}",
                t.rows(),
                t.cols(),
                rep.algebra.dim,
                rep.carrier_dim
            )));
        }
        Ok(OOperatorProblem { rep, t })
    }

    /// The representation of `spec` with its rep map `T`.
    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let t = spec
            .representation()?
            .maps
            .get("T")
            .cloned()
            .ok_or_else(|| Error::missing("T"))?;
        OOperatorProblem::new(NNRepresentation::from_spec(spec)?, t)
    }

    /// The representation spec with `T` attached.
    pub fn to_spec(&self) -> AlgebraSpec {
        let mut spec = self.rep.to_spec();
        if let Some(rep) = spec.rep.as_mut() {
            rep.maps.insert("T".to_string(), self.t.clone());
        }
        spec
    }

    fn env(&self) -> Result<Env<'_>> {
        Ok(self.rep.env()?.with_map("T", Cow::Borrowed(&self.t)))
    }
}

/// One report for each of `≺` and `≻`.
pub fn check_o_operator(p: &OOperatorProblem) -> Result<Vec<Report>> {
    require("O-operator", check_nn_representation(&p.rep)?)?;
    run(&p.env()?, profile("o-operator").unwrap_or_default())
}

/// `(E(r) = 0, r♯ is an O-operator for the coadjoint representation)`.
pub fn oelda_test(spec: &AlgebraSpec, r: &Tensor2) -> Result<(bool, bool)> {
    check_dim(spec, r)?;
    if !r.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let nybe = eval_nybe(spec, r)?.is_zero();
    let co = coadjoint_nn(spec)?.into_inner();
    let op = crate::model::all_passed(&check_o_operator(&OOperatorProblem::new(co, sharp(r))?)?);
    if nybe != op {
        return Err(Error::Inconsistent(format!(
            "E(r) = 0 is {nybe} but the O-operator test gives {op}"
        )));
    }
    Ok((nybe, op))
}

/// `A ⋉ V*` and `r = Σ e_i*⊗T(e_i) − T(e_i)⊗e_i*`, without checking `T`.
pub fn lift_tensor(p: &OOperatorProblem) -> Result<(AlgebraSpec, Tensor2)> {
    let (n, m) = (p.rep.algebra.dim, p.rep.carrier_dim);
    let algebra = semidirect_nn(&dual_actions(&p.rep))?.into_inner();
    let mut r = Tensor2::zero(n + m);
    for i in 0..m {
        for j in 0..n {
            let v = p.t.entry(j, i);
            if !v.is_zero() {
                r.set(n + i, j, v.clone());
                r.set(j, n + i, -v);
            }
        }
    }
    Ok((algebra, r))
}

/// The lift of an O-operator to an antisymmetric solution on `A ⋉ V*`.
///
/// The contract holds the axioms of the lifted algebra and the `NYBE` report.
pub fn lift_o_operator(p: &OOperatorProblem) -> Result<Verified<(AlgebraSpec, Tensor2)>> {
    require("lift", check_o_operator(p)?)?;
    let (algebra, r) = lift_tensor(p)?;
    let mut contract = nn_algebra_reports(&algebra)?;
    contract.push(nybe_report(&algebra, &r, 16)?);
    Ok(Verified {
        value: (algebra, r),
        contract,
    })
}

/// `Σ e_i*⊗e_i − e_i⊗e_i*` on `A ⊕ A*`.
pub fn canonical_solution(n: usize) -> Tensor2 {
    let mut r = Tensor2::zero(2 * n);
    for i in 0..n {
        r.set(n + i, i, Scalar::one());
        r.set(i, n + i, -Scalar::one());
    }
    r
}

/// `B(x, y) = ⟨(r♯)⁻¹x, y⟩`.
pub fn form_from_r(r: &Tensor2) -> Result<BilinearForm> {
    if !r.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let inv = sharp(r)
        .inverse()
        .ok_or_else(|| Error::Degenerate("r♯ is not invertible".into()))?;
    Ok(BilinearForm(inv.0.transpose()))
}

/// Inverse of [`form_from_r`].
pub fn r_from_form(b: &BilinearForm) -> Result<Tensor2> {
    if !b.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let inv = b
        .0
        .transpose()
        .inverse()
        .ok_or_else(|| Error::Degenerate("form has a kernel".into()))?;
    // r♯ = (Bᵀ)⁻¹ and r♯ = rᵀ.
    Ok(Tensor2(inv.transpose()))
}

/// Quasi-Frobenius reports for `spec` with the form `b`.
pub fn check_quasi_frobenius(spec: &AlgebraSpec, b: &BilinearForm) -> Result<Vec<Report>> {
    let with = spec.clone().with_form("form", b.clone());
    run(&Env::from_spec(&with)?, profile("quasi-frobenius").unwrap_or_default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET }
    }
}

/// Number of antisymmetric candidates with strictly upper entries from a
/// grid of `g` values.
pub fn candidate_count(dim: usize, g: usize) -> BigUint {
    let free = dim * dim.saturating_sub(1) / 2;
    BigUint::from(g).pow(free as u32)
}

/// The antisymmetric tensor with the given strictly upper entries in
/// row-major order.
pub fn antisymmetric_from_upper(dim: usize, upper: &[Scalar]) -> Tensor2 {
    let mut r = Tensor2::zero(dim);
    let mut it = upper.iter();
    for i in 0..dim {
        for j in i + 1..dim {
            let v = it.next().expect("too few entries").clone();
            r.set(j, i, -&v);
            r.set(i, j, v);
        }
    }
    r
}

fn upper_entries(r: &Tensor2) -> Vec<Scalar> {
    let n = r.dim();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| r.entry(i, j).clone())
        .collect()
}

/// Every antisymmetric solution with strictly upper entries from `grid`,
/// sorted lexicographically by those entries.
pub fn search_nybe(spec: &AlgebraSpec, grid: &[Scalar], opts: SearchOptions) -> Result<Vec<Tensor2>> {
    require("search", nn_algebra_reports(spec)?)?;
    let mut grid = grid.to_vec();
    grid.sort();
    grid.dedup();
    let n = spec.dim;
    let count = candidate_count(n, grid.len());
    if count > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded {
            candidates: count.to_string(),
            budget: opts.budget,
        });
    }
    let count: u64 = count.try_into().expect("bounded by budget");
    let free = n * n.saturating_sub(1) / 2;
    let (p, s) = (spec.op("prec")?, spec.op("succ")?);
    let c = spec.circ()?;
    let g = grid.len() as u64;
    let mut hits: Vec<Tensor2> = (0..count)
        .into_par_iter()
        .filter_map(|mut k| {
            let mut upper = vec![Scalar::zero(); free];
            for slot in upper.iter_mut().rev() {
                *slot = grid[(k % g) as usize].clone();
                k /= g;
            }
            let r = antisymmetric_from_upper(n, &upper);
            nybe_tables(p, s, &c, &r).is_zero().then_some(r)
        })
        .collect();
    hits.sort_by_cached_key(upper_entries);
    Ok(hits)
}

/// Tags each triangular contract with the index of its solution.
pub fn triangular_reports(spec: &AlgebraSpec, hits: &[Tensor2]) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    for (i, r) in hits.iter().enumerate() {
        out.extend(tag(triangular_bialgebra(spec, r)?.contract, &format!("solution {i}")));
    }
    Ok(out)
}

/// `B(x, y) = ⟨x, b*⟩ − ⟨a*, y⟩` on `A ⊕ A*`.
pub fn canonical_form(n: usize) -> BilinearForm {
    BilinearForm(Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i + n == j {
            Scalar::one()
        } else if j + n == i {
            -Scalar::one()
        } else {
            Scalar::zero()
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::adjoint_nn;
    use crate::model::all_passed;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn nn2() -> AlgebraSpec {
        let diag = |c: i64| MulTable::from_fn(2, |i, j, k| s(if i == j && j == k { c } else { 0 }));
        AlgebraSpec::new(2).with_op("prec", diag(-1)).with_op("succ", diag(1))
    }

    fn zero(n: usize) -> AlgebraSpec {
        AlgebraSpec::new(n).with_op("prec", MulTable::zero(n)).with_op("succ", MulTable::zero(n))
    }

    fn basis(n: usize, i: usize) -> Vec<Scalar> {
        (0..n).map(|k| s((k == i) as i64)).collect()
    }

    fn outer(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Tensor3 {
        Tensor3::from_fn(a.len(), |i, j, k| &(&a[i] * &b[j]) * &c[k])
    }

    /// `E(r)` summed over rank-one terms `r = Σ r_ab e_a⊗e_b` with vector products.
    fn nybe_oracle(spec: &AlgebraSpec, r: &Tensor2) -> Tensor3 {
        let n = spec.dim;
        let (p, sc) = (spec.op("prec").unwrap(), spec.op("succ").unwrap());
        let c = spec.circ().unwrap();
        let terms: Vec<(Scalar, Vec<Scalar>, Vec<Scalar>)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !r.entry(a, b).is_zero())
            .map(|(a, b)| (r.entry(a, b).clone(), basis(n, a), basis(n, b)))
            .collect();
        let mut e = Tensor3::zero(n);
        for (ci, ui, vi) in &terms {
            for (cj, uj, vj) in &terms {
                let k = ci * cj;
                let t = &(&outer(&sc.mul(ui, uj), vi, vj) + &outer(ui, uj, &p.mul(vi, vj)))
                    + &outer(ui, &c.mul(uj, vi), vj);
                e = &e + &Tensor3::from_fn(n, |a, b, d| &k * t.get(a, b, d));
            }
        }
        e
    }

    #[test]
    fn nybe_of_swap_on_nn2() {
        let r = antisymmetric_from_upper(2, &[s(1)]);
        let e = eval_nybe(&nn2(), &r).unwrap();
        let mut want = Tensor3::zero(2);
        want.set(0, 1, 1, s(1));
        want.set(1, 0, 0, s(1));
        want.set(0, 0, 1, s(-1));
        want.set(1, 1, 0, s(-1));
        assert_eq!(e, want);
        assert_eq!(e, nybe_oracle(&nn2(), &r));
        assert!(eval_nybe(&nn2(), &Tensor2::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn nybe_matches_oracle_on_lifted_algebra() {
        let adj = adjoint_nn(&nn2()).unwrap().into_inner();
        let mut t = LinMap::zero(2, 2);
        t.0.set(0, 1, s(2));
        t.0.set(1, 1, s(-1));
        let (alg, r) = lift_tensor(&OOperatorProblem::new(adj, t).unwrap()).unwrap();
        assert_eq!(eval_nybe(&alg, &r).unwrap(), nybe_oracle(&alg, &r));
    }

    #[test]
    fn hx_holds_for_triangular_coproducts() {
        let alg = nn2();
        let r = antisymmetric_from_upper(2, &[s(3)]);
        let (cp, cs) = triangular_coproducts(&alg, &r).unwrap();
        let n = 2;
        let (p, sc) = (alg.op("prec").unwrap(), alg.op("succ").unwrap());
        // Δ∘(x) = −(id⊗L≻(x) − R≺(x)⊗id)r
        for x in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let want: Scalar = -(0..n)
                        .map(|b| r.entry(i, b) * sc.get(x, b, j) - r.entry(b, j) * p.get(b, x, i))
                        .sum::<Scalar>();
                    assert_eq!(cp.get(x, i, j) + cs.get(x, i, j), want);
                }
            }
        }
    }

    #[test]
    fn triangular_rejections_and_zero() {
        let alg = nn2();
        assert!(triangular_bialgebra(&alg, &Tensor2::zero(2)).unwrap().passed());
        let mut asym = Tensor2::zero(2);
        asym.set(0, 1, s(1));
        assert!(matches!(triangular_bialgebra(&alg, &asym), Err(Error::NotAntisymmetric)));
        let r = antisymmetric_from_upper(2, &[s(1)]);
        assert!(matches!(triangular_bialgebra(&alg, &r), Err(Error::NybeNonzero(_))));
    }

    #[test]
    fn o_operator_examples() {
        let adj = adjoint_nn(&nn2()).unwrap().into_inner();
        let zero = OOperatorProblem::new(adj.clone(), LinMap::zero(2, 2)).unwrap();
        assert!(all_passed(&check_o_operator(&zero).unwrap()));
        let id = OOperatorProblem::new(adj.clone(), LinMap::identity(2)).unwrap();
        let reps = check_o_operator(&id).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(|r| !r.passed()));
        assert!(&reps[0].witnesses[0].tuple == &[0, 0]);
        assert!(OOperatorProblem::new(adj, LinMap::zero(3, 2)).is_err());
    }

    #[test]
    fn oelda_agrees_on_grid() {
        for alg in [nn2(), zero(2)] {
            for v in -2..=2 {
                let r = antisymmetric_from_upper(2, &[s(v)]);
                let (a, b) = oelda_test(&alg, &r).unwrap();
                assert_eq!(a, b);
            }
        }
        assert_eq!(oelda_test(&nn2(), &antisymmetric_from_upper(2, &[s(1)])).unwrap(), (false, false));
    }

    #[test]
    fn zero_operator_lifts_to_zero() {
        let rep = NNRepresentation::zero(zero(1), 1);
        let p = OOperatorProblem::new(rep, LinMap::zero(1, 1)).unwrap();
        let lifted = lift_o_operator(&p).unwrap();
        assert!(lifted.passed());
        assert!(lifted.value.1.is_zero());
        let p = OOperatorProblem::new(NNRepresentation::zero(zero(1), 1), LinMap::identity(1)).unwrap();
        let (alg, r) = lift_o_operator(&p).unwrap().into_inner();
        assert_eq!(r, canonical_solution(1));
        assert!(eval_nybe(&alg, &r).unwrap().is_zero());
    }

    #[test]
    fn form_round_trip_and_canonical_form() {
        let r = canonical_solution(2);
        let b = form_from_r(&r).unwrap();
        assert_eq!(b, canonical_form(2));
        assert_eq!(r_from_form(&b).unwrap(), r);
        let r = antisymmetric_from_upper(2, &[Scalar::ratio(3, 7)]);
        assert_eq!(r_from_form(&form_from_r(&r).unwrap()).unwrap(), r);
        assert!(all_passed(&check_quasi_frobenius(&zero(2), &form_from_r(&r).unwrap()).unwrap()));
        assert!(matches!(form_from_r(&Tensor2::zero(2)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn search_results() {
        let grid: Vec<Scalar> = (-1..=1).map(s).collect();
        assert_eq!(search_nybe(&zero(2), &grid, SearchOptions::default()).unwrap().len(), 3);
        let grid: Vec<Scalar> = (-2..=2).map(s).collect();
        let hits = search_nybe(&nn2(), &grid, SearchOptions::default()).unwrap();
        assert_eq!(hits, vec![Tensor2::zero(2)]);
        let hits = search_nybe(&zero(3), &grid, SearchOptions::default()).unwrap();
        assert_eq!(hits.len(), 125);
        assert!(hits.windows(2).all(|w| upper_entries(&w[0]) < upper_entries(&w[1])));
        assert!(matches!(
            search_nybe(&zero(3), &grid, SearchOptions { budget: 100 }),
            Err(Error::BudgetExceeded { budget: 100, .. })
        ));
    }
}
