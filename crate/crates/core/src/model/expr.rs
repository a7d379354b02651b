//! Tensor-valued multilinear expressions over named structure maps.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{BilinearForm, LinMap, Scalar};

use super::spec::AlgebraSpec;
use super::tables::{ActionTable, CoprodTable, MulTable};

/// The spaces an identity's arguments range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Space {
    /// The underlying algebra.
    A,
    /// A representation carrier or the first action target.
    V,
    /// A second carrier.
    W,
    /// The partner algebra of a matched pair.
    B,
}

/// A coefficient `k·λ^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Coef {
    pub k: i64,
    pub lambda_pow: u32,
}

impl Coef {
    pub const ONE: Coef = Coef { k: 1, lambda_pow: 0 };

    fn value(&self, weight: &Scalar) -> Scalar {
        Scalar::from_int(self.k) * weight.pow(self.lambda_pow)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// The basis vector in argument position `i`.
    Arg(usize),
    /// The vector bound by the innermost enclosing `Slot`.
    Hole,
    Op(&'static str, Box<Expr>, Box<Expr>),
    /// `ρ(x) v`.
    Act(&'static str, Box<Expr>, Box<Expr>),
    Map(&'static str, Box<Expr>),
    Coprod(&'static str, Box<Expr>),
    /// Scalar `B(x, y)`.
    Form(&'static str, Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    /// Applies the linear map `hole ↦ body` to tensor factor `slot` of `target`.
    Slot {
        slot: usize,
        target: Box<Expr>,
        body: Box<Expr>,
    },
    /// Factor permutation `out[i] = t[i[p[0]], i[p[1]], ...]`.
    Permute(Vec<usize>, Box<Expr>),
    Sum(Vec<(Coef, Expr)>),
}

impl Expr {
    fn collect_roles(&self, out: &mut Vec<(RoleKind, &'static str)>) {
        let mut push = |k, r| {
            if !out.contains(&(k, r)) {
                out.push((k, r));
            }
        };
        match self {
            Expr::Arg(_) | Expr::Hole => {}
            Expr::Op(r, a, b) => {
                push(RoleKind::Op, r);
                a.collect_roles(out);
                b.collect_roles(out);
            }
            Expr::Act(r, a, b) => {
                push(RoleKind::Action, r);
                a.collect_roles(out);
                b.collect_roles(out);
            }
            Expr::Form(r, a, b) => {
                push(RoleKind::Form, r);
                a.collect_roles(out);
                b.collect_roles(out);
            }
            Expr::Map(r, a) => {
                push(RoleKind::Map, r);
                a.collect_roles(out);
            }
            Expr::Coprod(r, a) => {
                push(RoleKind::Coprod, r);
                a.collect_roles(out);
            }
            Expr::Tensor(a, b) => {
                a.collect_roles(out);
                b.collect_roles(out);
            }
            Expr::Slot { target, body, .. } => {
                target.collect_roles(out);
                body.collect_roles(out);
            }
            Expr::Permute(_, t) => t.collect_roles(out),
            Expr::Sum(terms) => {
                for (_, t) in terms {
                    t.collect_roles(out);
                }
            }
        }
    }

    /// Distinct `(kind, role)` pairs in first-use order.
    pub fn roles(&self) -> Vec<(RoleKind, &'static str)> {
        let mut out = Vec::new();
        self.collect_roles(&mut out);
        out
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![(Coef::ONE, self), (Coef::ONE, rhs)])
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![(Coef::ONE, self), (Coef { k: -1, lambda_pow: 0 }, rhs)])
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Sum(vec![(Coef { k: -1, lambda_pow: 0 }, self)])
    }
}

impl Mul<Expr> for i64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Sum(vec![(Coef { k: self, lambda_pow: 0 }, rhs)])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RoleKind {
    Op,
    Coprod,
    Map,
    Action,
    Form,
}

/// A dense tensor value with explicit shape.
#[derive(Clone, Debug, PartialEq)]
pub struct Val {
    pub shape: Vec<usize>,
    pub data: Vec<Scalar>,
}

impl Val {
    fn zeros(shape: Vec<usize>) -> Val {
        let len = shape.iter().product();
        Val {
            shape,
            data: vec![Scalar::zero(); len],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Val {
        let mut v = Val::zeros(vec![dim]);
        v.data[i] = Scalar::one();
        v
    }

    fn vector(&self, what: &str) -> Result<&[Scalar]> {
        if self.shape.len() != 1 {
            return Err(Error::dims(format!("{what} expects a vector, got shape {:?}", self.shape)));
        }
        Ok(&self.data)
    }

    fn from_vec(data: Vec<Scalar>) -> Val {
        Val {
            shape: vec![data.len()],
            data,
        }
    }
}

/// Role → member name assignments; unbound roles resolve to the member of
/// the same name.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Binding(BTreeMap<String, String>);

impl Binding {
    pub fn new() -> Self {
        Binding::default()
    }

    pub fn bind(mut self, role: &str, member: &str) -> Self {
        self.0.insert(role.to_string(), member.to_string());
        self
    }

    pub fn resolve<'s>(&'s self, role: &'s str) -> &'s str {
        self.0.get(role).map_or(role, String::as_str)
    }

    pub fn is_bound(&self, role: &str) -> bool {
        self.0.contains_key(role)
    }

    /// Parses `role=member,role=member`.
    pub fn parse(s: &str) -> Result<Binding> {
        let mut b = Binding::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (role, member) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("binding {part:?} is not role=member")))?;
            b = b.bind(role.trim(), member.trim());
        }
        Ok(b)
    }
}

/// Named members available to identity evaluation, with space dimensions.
#[derive(Clone, Debug, Default)]
pub struct Env<'a> {
    pub dims: BTreeMap<Space, usize>,
    pub weight: Scalar,
    pub ops: BTreeMap<String, Cow<'a, MulTable>>,
    pub coprods: BTreeMap<String, Cow<'a, CoprodTable>>,
    pub maps: BTreeMap<String, Cow<'a, LinMap>>,
    pub actions: BTreeMap<String, Cow<'a, ActionTable>>,
    pub forms: BTreeMap<String, Cow<'a, BilinearForm>>,
}

impl<'a> Env<'a> {
    pub fn new() -> Self {
        Env::default()
    }

    /// Algebra members on space `A`; representation members on space `V`.
    pub fn from_spec(spec: &'a AlgebraSpec) -> Result<Env<'a>> {
        spec.validate()?;
        let mut env = Env::new();
        env.dims.insert(Space::A, spec.dim);
        env.weight = spec.weight.clone();
        for (k, v) in &spec.ops {
            env.ops.insert(k.clone(), Cow::Borrowed(v));
        }
        for (k, v) in &spec.coprods {
            env.coprods.insert(k.clone(), Cow::Borrowed(v));
        }
        for (k, v) in &spec.maps {
            env.maps.insert(k.clone(), Cow::Borrowed(v));
        }
        for (k, v) in &spec.forms {
            env.forms.insert(k.clone(), Cow::Borrowed(v));
        }
        if let Some(rep) = &spec.rep {
            env.dims.insert(Space::V, rep.dim);
            for (k, v) in &rep.actions {
                env.actions.insert(k.clone(), Cow::Borrowed(v));
            }
            for (k, v) in &rep.maps {
                if env.maps.contains_key(k) {
                    return Err(Error::Parse(format!(
                        "map {k:?} is defined on both the algebra and the representation"
                    )));
                }
                env.maps.insert(k.clone(), Cow::Borrowed(v));
            }
        }
        Ok(env)
    }

    pub fn dim(&self, s: Space) -> Result<usize> {
        self.dims
            .get(&s)
            .copied()
            .ok_or_else(|| Error::dims(format!("space {s:?} is not present")))
    }

    pub fn with_dim(mut self, s: Space, d: usize) -> Self {
        self.dims.insert(s, d);
        self
    }

    pub fn with_op(mut self, name: &str, t: Cow<'a, MulTable>) -> Self {
        self.ops.insert(name.to_string(), t);
        self
    }

    pub fn with_coprod(mut self, name: &str, t: Cow<'a, CoprodTable>) -> Self {
        self.coprods.insert(name.to_string(), t);
        self
    }

    pub fn with_map(mut self, name: &str, m: Cow<'a, LinMap>) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_action(mut self, name: &str, a: Cow<'a, ActionTable>) -> Self {
        self.actions.insert(name.to_string(), a);
        self
    }

    pub fn with_form(mut self, name: &str, f: Cow<'a, BilinearForm>) -> Self {
        self.forms.insert(name.to_string(), f);
        self
    }
}

/// Members resolved for one identity, keyed by role.
pub(crate) struct Resolved<'e> {
    weight: Scalar,
    ops: BTreeMap<&'static str, Cow<'e, MulTable>>,
    coprods: BTreeMap<&'static str, Cow<'e, CoprodTable>>,
    maps: BTreeMap<&'static str, Cow<'e, LinMap>>,
    actions: BTreeMap<&'static str, Cow<'e, ActionTable>>,
    forms: BTreeMap<&'static str, Cow<'e, BilinearForm>>,
}

/// Summands of a derived `…circ…` role: `circ = prec + succ`.
fn circ_parts(role: &str) -> Option<(String, String)> {
    role.contains("circ")
        .then(|| (role.replacen("circ", "prec", 1), role.replacen("circ", "succ", 1)))
}

fn lookup<'e, T: Clone + 'e>(
    table: &'e BTreeMap<String, Cow<'e, T>>,
    binding: &Binding,
    role: &str,
    add: impl Fn(&T, &T) -> T + Copy,
) -> Result<Cow<'e, T>> {
    let name = binding.resolve(role);
    if let Some(t) = table.get(name) {
        return Ok(Cow::Borrowed(t.as_ref()));
    }
    if !binding.is_bound(role) {
        if let Some((p, s)) = circ_parts(role) {
            if let (Ok(a), Ok(b)) = (
                lookup(table, binding, &p, add),
                lookup(table, binding, &s, add),
            ) {
                return Ok(Cow::Owned(add(&a, &b)));
            }
        }
    }
    Err(Error::MissingMember(if name == role {
        role.to_string()
    } else {
        format!("{name} (role {role})")
    }))
}

impl<'e> Resolved<'e> {
    pub(crate) fn new(
        env: &'e Env<'_>,
        binding: &Binding,
        roles: &[(RoleKind, &'static str)],
    ) -> Result<Resolved<'e>> {
        let mut r = Resolved {
            weight: env.weight.clone(),
            ops: BTreeMap::new(),
            coprods: BTreeMap::new(),
            maps: BTreeMap::new(),
            actions: BTreeMap::new(),
            forms: BTreeMap::new(),
        };
        for &(kind, role) in roles {
            match kind {
                RoleKind::Op => {
                    r.ops.insert(role, lookup(&env.ops, binding, role, |a, b| a + b)?);
                }
                RoleKind::Coprod => {
                    r.coprods
                        .insert(role, lookup(&env.coprods, binding, role, |a, b| a + b)?);
                }
                RoleKind::Map => {
                    r.maps.insert(role, lookup(&env.maps, binding, role, |a, b| a + b)?);
                }
                RoleKind::Action => {
                    r.actions
                        .insert(role, lookup(&env.actions, binding, role, |a, b| a + b)?);
                }
                RoleKind::Form => {
                    r.forms.insert(role, lookup(&env.forms, binding, role, |a, b| {
                        BilinearForm(&a.0 + &b.0)
                    })?);
                }
            }
        }
        Ok(r)
    }

    pub(crate) fn form(&self, role: &str) -> Option<&BilinearForm> {
        self.forms.get(role).map(|c| c.as_ref())
    }

    pub(crate) fn eval(&self, e: &Expr, args: &[Val], hole: Option<&Val>) -> Result<Val> {
        match e {
            Expr::Arg(i) => args
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::dims(format!("argument {i} out of range"))),
            Expr::Hole => hole
                .cloned()
                .ok_or_else(|| Error::dims("hole used outside a slot")),
            Expr::Op(role, a, b) => {
                let t = &self.ops[role];
                let (a, b) = (self.eval(a, args, hole)?, self.eval(b, args, hole)?);
                let (a, b) = (a.vector(role)?, b.vector(role)?);
                if a.len() != t.dim() || b.len() != t.dim() {
                    return Err(Error::dims(format!(
                        "operation {role:?} on dim {} applied to vectors of length {} and {}",
                        t.dim(),
                        a.len(),
                        b.len()
                    )));
                }
                Ok(Val::from_vec(t.mul(a, b)))
            }
            Expr::Act(role, x, v) => {
                let t = &self.actions[role];
                let (x, v) = (self.eval(x, args, hole)?, self.eval(v, args, hole)?);
                let (x, v) = (x.vector(role)?, v.vector(role)?);
                if x.len() != t.acting_dim() || v.len() != t.carrier_dim() {
                    return Err(Error::dims(format!(
                        "action {role:?} ({} on {}) applied to lengths {} and {}",
                        t.acting_dim(),
                        t.carrier_dim(),
                        x.len(),
                        v.len()
                    )));
                }
                Ok(Val::from_vec(t.act(x, v)))
            }
            Expr::Map(role, a) => {
                let m = &self.maps[role];
                let a = self.eval(a, args, hole)?;
                let a = a.vector(role)?;
                if a.len() != m.cols() {
                    return Err(Error::dims(format!(
                        "map {role:?} with {} columns applied to length {}",
                        m.cols(),
                        a.len()
                    )));
                }
                Ok(Val::from_vec(m.apply(a)))
            }
            Expr::Coprod(role, a) => {
                let d = &self.coprods[role];
                let a = self.eval(a, args, hole)?;
                let a = a.vector(role)?;
                let n = d.dim();
                if a.len() != n {
                    return Err(Error::dims(format!(
                        "coproduct {role:?} on dim {n} applied to length {}",
                        a.len()
                    )));
                }
                let mut out = Val::zeros(vec![n, n]);
                for (k, c) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (p, v) in d.image(k).iter().enumerate() {
                        if !v.is_zero() {
                            out.data[p] += c * v;
                        }
                    }
                }
                Ok(out)
            }
            Expr::Form(role, a, b) => {
                let f = &self.forms[role];
                let (a, b) = (self.eval(a, args, hole)?, self.eval(b, args, hole)?);
                let (a, b) = (a.vector(role)?, b.vector(role)?);
                if a.len() != f.dim() || b.len() != f.dim() {
                    return Err(Error::dims(format!("form {role:?} on dim {}", f.dim())));
                }
                Ok(Val {
                    shape: vec![],
                    data: vec![f.eval(a, b)],
                })
            }
            Expr::Tensor(a, b) => {
                let (a, b) = (self.eval(a, args, hole)?, self.eval(b, args, hole)?);
                let mut shape = a.shape.clone();
                shape.extend_from_slice(&b.shape);
                let mut data = Vec::with_capacity(a.data.len() * b.data.len());
                for x in &a.data {
                    for y in &b.data {
                        data.push(x * y);
                    }
                }
                Ok(Val { shape, data })
            }
            Expr::Slot { slot, target, body } => {
                let t = self.eval(target, args, hole)?;
                if *slot >= t.shape.len() {
                    return Err(Error::dims(format!(
                        "slot {slot} of a tensor with shape {:?}",
                        t.shape
                    )));
                }
                let d = t.shape[*slot];
                let images = (0..d)
                    .map(|i| self.eval(body, args, Some(&Val::basis(d, i))))
                    .collect::<Result<Vec<_>>>()?;
                let q = images.first().map(|v| v.shape.clone()).unwrap_or_default();
                if images.iter().any(|v| v.shape != q) {
                    return Err(Error::dims("slot body has inconsistent shape"));
                }
                apply_slot(&t, *slot, &images, &q)
            }
            Expr::Permute(p, target) => {
                let t = self.eval(target, args, hole)?;
                permute(&t, p)
            }
            Expr::Sum(terms) => {
                let mut acc: Option<Val> = None;
                for (c, term) in terms {
                    let v = self.eval(term, args, hole)?;
                    let k = c.value(&self.weight);
                    match &mut acc {
                        None => {
                            acc = Some(Val {
                                shape: v.shape,
                                data: v.data.iter().map(|x| x * &k).collect(),
                            })
                        }
                        Some(a) => {
                            if a.shape != v.shape {
                                return Err(Error::dims(format!(
                                    "sum of shapes {:?} and {:?}",
                                    a.shape, v.shape
                                )));
                            }
                            for (x, y) in a.data.iter_mut().zip(&v.data) {
                                if !y.is_zero() {
                                    *x += y * &k;
                                }
                            }
                        }
                    }
                }
                acc.ok_or_else(|| Error::dims("empty sum"))
            }
        }
    }
}

fn strides(shape: &[usize]) -> Vec<usize> {
    let mut s = vec![1; shape.len()];
    for i in (0..shape.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * shape[i + 1];
    }
    s
}

fn unravel(mut p: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for i in (0..shape.len()).rev() {
        idx[i] = p % shape[i];
        p /= shape[i];
    }
    idx
}

fn apply_slot(t: &Val, slot: usize, images: &[Val], q: &[usize]) -> Result<Val> {
    let mut shape: Vec<usize> = t.shape[..slot].to_vec();
    shape.extend_from_slice(q);
    shape.extend_from_slice(&t.shape[slot + 1..]);
    let mut out = Val::zeros(shape.clone());
    let out_strides = strides(&shape);
    let qlen: usize = q.iter().product();
    for (p, c) in t.data.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let idx = unravel(p, &t.shape);
        let img = &images[idx[slot]];
        let mut base = 0;
        for (a, &i) in idx[..slot].iter().enumerate() {
            base += i * out_strides[a];
        }
        for (a, &i) in idx[slot + 1..].iter().enumerate() {
            base += i * out_strides[slot + q.len() + a];
        }
        for r in 0..qlen {
            let v = &img.data[r];
            if v.is_zero() {
                continue;
            }
            let qi = unravel(r, q);
            let mut off = base;
            for (a, &i) in qi.iter().enumerate() {
                off += i * out_strides[slot + a];
            }
            out.data[off] += c * v;
        }
    }
    Ok(out)
}

fn permute(t: &Val, p: &[usize]) -> Result<Val> {
    let n = t.shape.len();
    let mut seen = vec![false; n];
    if p.len() != n || p.iter().any(|&x| x >= n || std::mem::replace(&mut seen[x], true)) {
        return Err(Error::dims(format!(
            "permutation {p:?} for a tensor of order {n}"
        )));
    }
    // out[i] = t[j] with j[m] = i[p[m]], so out.shape[p[m]] = t.shape[m].
    let mut shape = vec![0; n];
    for m in 0..n {
        shape[p[m]] = t.shape[m];
    }
    let mut out = Val::zeros(shape.clone());
    let ts = strides(&t.shape);
    for (o, v) in out.data.iter_mut().enumerate() {
        let i = unravel(o, &shape);
        let src: usize = (0..n).map(|m| i[p[m]] * ts[m]).sum();
        *v = t.data[src].clone();
    }
    Ok(out)
}
