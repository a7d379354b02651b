use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::Scalar;

use super::catalog::{self, EntryKind, IdentityEntry};
use super::expr::{Binding, Env, Resolved, Val};
use super::report::{CheckOptions, Report, Witness};
use super::spec::AlgebraSpec;

/// Basis tuples of the given extents, in lexicographic order.
fn tuples(extents: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = extents.iter().product();
    (0..total)
        .map(|mut p| {
            let mut t = vec![0; extents.len()];
            for i in (0..extents.len()).rev() {
                t[i] = p % extents[i];
                p /= extents[i];
            }
            t
        })
        .collect()
}

fn residual(r: &Resolved<'_>, parts: &[super::expr::Expr], args: &[Val]) -> Result<Vec<Scalar>> {
    let mut out = Vec::new();
    for p in parts {
        out.extend(r.eval(p, args, None)?.data);
    }
    Ok(out)
}

/// Evaluates one catalog entry on every basis tuple.
pub fn check_entry(
    env: &Env<'_>,
    entry: &IdentityEntry,
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Report> {
    let r = Resolved::new(env, binding, &entry.roles())?;
    match &entry.kind {
        EntryKind::Nondegenerate { form } => {
            let f = r.form(form).ok_or_else(|| Error::missing(form))?;
            let fails = match f.0.kernel_vector() {
                Some(v) => vec![Witness {
                    tuple: vec![],
                    residual: v,
                }],
                None => vec![],
            };
            Ok(Report::from_failures(entry.id, fails, opts.witness_limit))
        }
        EntryKind::Multilinear(parts) => {
            let extents = entry
                .args
                .iter()
                .map(|s| env.dim(*s))
                .collect::<Result<Vec<_>>>()?;
            let ts = tuples(&extents);
            let eval = |t: &Vec<usize>| -> Result<Option<Witness>> {
                let args: Vec<Val> = t
                    .iter()
                    .zip(&extents)
                    .map(|(&i, &d)| Val::basis(d, i))
                    .collect();
                let res = residual(&r, parts, &args)?;
                Ok((!res.iter().all(Scalar::is_zero)).then(|| Witness {
                    tuple: t.clone(),
                    residual: res,
                }))
            };
            // The first tuple runs alone so shape errors surface deterministically.
            let mut fails = Vec::new();
            if let Some(first) = ts.first() {
                fails.extend(eval(first)?);
            }
            let rest = ts
                .get(1..)
                .unwrap_or(&[])
                .par_iter()
                .map(eval)
                .collect::<Result<Vec<_>>>()?;
            fails.extend(rest.into_iter().flatten());
            Ok(Report::from_failures(entry.id, fails, opts.witness_limit))
        }
    }
}

pub fn check_identity_env(
    env: &Env<'_>,
    id: &str,
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Report> {
    let entry = catalog::lookup(id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    check_entry(env, entry, binding, opts)
}

pub fn check_identity_with(
    spec: &AlgebraSpec,
    id: &str,
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Report> {
    check_identity_env(&Env::from_spec(spec)?, id, binding, opts)
}

pub fn check_identity(spec: &AlgebraSpec, id: &str, binding: &Binding) -> Result<Report> {
    check_identity_with(spec, id, binding, CheckOptions::default())
}

/// Checks several ids against one environment, in the given order.
pub fn check_ids_env<S: AsRef<str> + Sync>(
    env: &Env<'_>,
    ids: &[S],
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Vec<Report>> {
    for id in ids {
        if catalog::lookup(id.as_ref()).is_none() {
            return Err(Error::UnknownIdentity(id.as_ref().to_string()));
        }
    }
    let env = env;
    ids.par_iter()
        .map(|id| check_identity_env(env, id.as_ref(), binding, opts))
        .collect()
}

pub fn check_ids<S: AsRef<str> + Sync>(
    spec: &AlgebraSpec,
    ids: &[S],
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Vec<Report>> {
    check_ids_env(&Env::from_spec(spec)?, ids, binding, opts)
}

pub fn check_profile_env(
    env: &Env<'_>,
    profile: &str,
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Vec<Report>> {
    let ids = catalog::profile(profile).ok_or_else(|| Error::UnknownProfile(profile.to_string()))?;
    check_ids_env(env, ids, binding, opts)
}

pub fn check_profile_with(
    spec: &AlgebraSpec,
    profile: &str,
    binding: &Binding,
    opts: CheckOptions,
) -> Result<Vec<Report>> {
    check_profile_env(&Env::from_spec(spec)?, profile, binding, opts)
}

pub fn check_profile(spec: &AlgebraSpec, profile: &str) -> Result<Vec<Report>> {
    check_profile_with(spec, profile, &Binding::new(), CheckOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::BilinearForm;
    use crate::linalg::Matrix;
    use crate::model::tables::MulTable;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(tuples(&[2, 2]), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn polynomial_product_is_associative_and_novikov() {
        // k[x]/(x^3): e_i e_j = e_{i+j}.
        let m = MulTable::from_fn(3, |i, j, k| s((i + j == k) as i64));
        let spec = AlgebraSpec::new(3).with_op("mul", m);
        assert!(check_identity(&spec, "ASSOC", &Binding::new()).unwrap().passed());
        let nov = check_profile(&spec, "novikov-algebra").unwrap();
        assert!(nov.iter().all(Report::passed));
    }

    #[test]
    fn failure_reports_every_violation() {
        // e0 e0 = e1, everything else 0: (e0 e0) e0 = 0 and e0 (e0 e0) = 0, so associative.
        // e0 e1 = e0 breaks it: (e0 e0) e0 = e1 e0 = 0, e0 (e0 e0) = e0 e1 = e0.
        let mut m = MulTable::zero(2);
        m.set(0, 0, 1, s(1));
        m.set(0, 1, 0, s(1));
        let spec = AlgebraSpec::new(2).with_op("mul", m);
        let r = check_identity_with(&spec, "ASSOC", &Binding::new(), CheckOptions::with_witness_limit(1)).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witnesses.len(), 1);
        assert_eq!(r.witnesses[0].tuple, vec![0, 0, 0]);
        assert_eq!(r.witnesses[0].residual, vec![s(-1), s(0)]);
        assert!(r.violations >= 1);
    }

    #[test]
    fn nondegeneracy_witness_is_a_kernel_vector() {
        let f = BilinearForm(Matrix::from_ints(&[&[1, 1], &[1, 1]]));
        let spec = AlgebraSpec::new(2).with_form("form", f.clone());
        let r = check_identity(&spec, "FORM-NONDEG", &Binding::new()).unwrap();
        assert!(!r.passed());
        let v = &r.witnesses[0].residual;
        assert!(f.0.mul_vec(v).iter().all(Scalar::is_zero));
    }

    #[test]
    fn binding_and_missing_members() {
        let m = MulTable::from_fn(1, |_, _, _| s(1));
        let spec = AlgebraSpec::new(1).with_op("prec", m);
        let b = Binding::new().bind("mul", "prec");
        assert!(check_identity(&spec, "ASSOC", &b).unwrap().passed());
        assert!(matches!(
            check_identity(&spec, "ASSOC", &Binding::new()),
            Err(Error::MissingMember(_))
        ));
        assert!(matches!(
            check_identity(&spec, "NOPE", &Binding::new()),
            Err(Error::UnknownIdentity(_))
        ));
    }
}
