//! Every identity the checker knows, as formal multilinear expressions.

use std::sync::OnceLock;

use super::expr::{Coef, Expr, RoleKind, Space};

#[derive(Clone, Debug)]
pub enum EntryKind {
    /// Residual components; the identity holds iff all vanish on every basis tuple.
    Multilinear(Vec<Expr>),
    /// The named form has full rank.
    Nondegenerate { form: &'static str },
}

#[derive(Clone, Debug)]
pub struct IdentityEntry {
    pub id: &'static str,
    pub args: Vec<Space>,
    pub kind: EntryKind,
    pub summary: &'static str,
}

impl IdentityEntry {
    pub fn arity(&self) -> usize {
        self.args.len()
    }

    /// Roles the entry reads, in first-use order.
    pub fn roles(&self) -> Vec<(RoleKind, &'static str)> {
        match &self.kind {
            EntryKind::Multilinear(parts) => {
                let mut out: Vec<(RoleKind, &'static str)> = Vec::new();
                for p in parts {
                    for r in p.roles() {
                        if !out.contains(&r) {
                            out.push(r);
                        }
                    }
                }
                out
            }
            EntryKind::Nondegenerate { form } => vec![(RoleKind::Form, *form)],
        }
    }
}

fn b(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn x() -> Expr {
    Expr::Arg(0)
}
fn y() -> Expr {
    Expr::Arg(1)
}
fn z() -> Expr {
    Expr::Arg(2)
}
fn h() -> Expr {
    Expr::Hole
}

fn op(r: &'static str, a: Expr, c: Expr) -> Expr {
    Expr::Op(r, b(a), b(c))
}
fn act(r: &'static str, a: Expr, v: Expr) -> Expr {
    Expr::Act(r, b(a), b(v))
}
fn map(r: &'static str, a: Expr) -> Expr {
    Expr::Map(r, b(a))
}
fn cop(r: &'static str, a: Expr) -> Expr {
    Expr::Coprod(r, b(a))
}
fn form(r: &'static str, a: Expr, c: Expr) -> Expr {
    Expr::Form(r, b(a), b(c))
}
/// Applies `hole ↦ body` to factor `slot` of `t`.
fn on(slot: usize, t: Expr, body: Expr) -> Expr {
    Expr::Slot {
        slot,
        target: b(t),
        body: b(body),
    }
}
fn flip(t: Expr) -> Expr {
    Expr::Permute(vec![1, 0], b(t))
}
/// `σ ⊗ id` on a 3-tensor.
fn flip12(t: Expr) -> Expr {
    Expr::Permute(vec![1, 0, 2], b(t))
}
fn lam(e: Expr) -> Expr {
    Expr::Sum(vec![(Coef { k: 1, lambda_pow: 1 }, e)])
}
fn tensor(a: Expr, c: Expr) -> Expr {
    Expr::Tensor(b(a), b(c))
}

fn ml(
    id: &'static str,
    args: &[Space],
    summary: &'static str,
    parts: Vec<Expr>,
) -> IdentityEntry {
    IdentityEntry {
        id,
        args: args.to_vec(),
        kind: EntryKind::Multilinear(parts),
        summary,
    }
}

use Space::{A, B as SB, V, W};

fn algebra_entries(out: &mut Vec<IdentityEntry>) {
    let m = |a, c| op("mul", a, c);
    out.push(ml("ASSOC", &[A, A, A], "(xy)z = x(yz)", vec![m(m(x(), y()), z()) - m(x(), m(y(), z()))]));
    out.push(ml(
        "NOV-1",
        &[A, A, A],
        "(xy)z - x(yz) = (yx)z - y(xz)",
        vec![m(m(x(), y()), z()) - m(x(), m(y(), z())) - m(m(y(), x()), z()) + m(y(), m(x(), z()))],
    ));
    out.push(ml("NOV-2", &[A, A, A], "(xy)z = (xz)y", vec![m(m(x(), y()), z()) - m(m(x(), z()), y())]));
    out.push(ml(
        "NN-1",
        &[A, A, A],
        "(x≻y)≺z = x≻(y≺z)",
        vec![op("prec", op("succ", x(), y()), z()) - op("succ", x(), op("prec", y(), z()))],
    ));
    out.push(ml(
        "NN-2",
        &[A, A, A],
        "(x≺y)∘z = x∘(y≻z)",
        vec![op("circ", op("prec", x(), y()), z()) - op("circ", x(), op("succ", y(), z()))],
    ));
}

fn differential_entries(out: &mut Vec<IdentityEntry>) {
    let m = |a, c| op("mul", a, c);
    let d = |a| map("partial", a);
    let dh = |a| map("partial_hat", a);
    let dl = || cop("coprod", x());
    out.push(ml(
        "DER",
        &[A, A],
        "∂(xy) = ∂x·y + x·∂y + λ∂x·∂y",
        vec![d(m(x(), y())) - m(d(x()), y()) - m(x(), d(y())) - lam(m(d(x()), d(y())))],
    ));
    out.push(ml(
        "CODER",
        &[A],
        "Δ∂̂ = (∂̂⊗id + id⊗∂̂ + λ∂̂⊗∂̂)Δ",
        vec![
            cop("coprod", dh(x()))
                - on(0, dl(), dh(h()))
                - on(1, dl(), dh(h()))
                - lam(on(0, on(1, dl(), dh(h())), dh(h()))),
        ],
    ));
    out.push(ml(
        "ADM-DA-1",
        &[A, A],
        "∂̂(x)y = x∂(y) + ∂̂(xy) + λ∂̂(x∂(y))",
        vec![m(dh(x()), y()) - m(x(), d(y())) - dh(m(x(), y())) - lam(dh(m(x(), d(y()))))],
    ));
    out.push(ml(
        "ADM-DA-2",
        &[A, A],
        "x∂̂(y) = ∂(x)y + ∂̂(xy) + λ∂̂(∂(x)y)",
        vec![m(x(), dh(y())) - m(d(x()), y()) - dh(m(x(), y())) - lam(dh(m(d(x()), y())))],
    ));
    out.push(ml(
        "ADM-DCA-1",
        &[A],
        "(∂⊗id)Δ = (id⊗∂̂)Δ + Δ∂ + λ(id⊗∂̂)Δ∂",
        vec![
            on(0, dl(), d(h()))
                - on(1, dl(), dh(h()))
                - cop("coprod", d(x()))
                - lam(on(1, cop("coprod", d(x())), dh(h()))),
        ],
    ));
    out.push(ml(
        "ADM-DCA-2",
        &[A],
        "(id⊗∂)Δ = (∂̂⊗id)Δ + Δ∂ + λ(∂̂⊗id)Δ∂",
        vec![
            on(1, dl(), d(h()))
                - on(0, dl(), dh(h()))
                - cop("coprod", d(x()))
                - lam(on(0, cop("coprod", d(x())), dh(h()))),
        ],
    ));
    out.push(ml(
        "THM-MAIN-COND-1",
        &[A, A],
        "∂̂(x)·y = -∂(x)·y",
        vec![m(dh(x()), y()) + m(d(x()), y())],
    ));
    out.push(ml(
        "THM-MAIN-COND-2",
        &[A],
        "(∂̂⊗id)Δ = -(∂⊗id)Δ",
        vec![on(0, dl(), dh(h())) + on(0, dl(), d(h()))],
    ));
}

fn coalgebra_entries(out: &mut Vec<IdentityEntry>) {
    let c = |a| cop("coprod", a);
    out.push(ml(
        "COASSOC",
        &[A],
        "(Δ⊗id)Δ = (id⊗Δ)Δ",
        vec![on(0, c(x()), c(h())) - on(1, c(x()), c(h()))],
    ));
    out.push(ml(
        "NOV-CO-1",
        &[A],
        "(Δ⊗id)Δ = (σ⊗id)(id⊗Δ)σΔ",
        vec![on(0, c(x()), c(h())) - flip12(on(1, flip(c(x())), c(h())))],
    ));
    out.push(ml(
        "NOV-CO-2",
        &[A],
        "(id⊗Δ)Δ - (σ⊗id)(id⊗Δ)Δ = (Δ⊗id)Δ - (σ⊗id)(Δ⊗id)Δ",
        vec![
            on(1, c(x()), c(h())) - flip12(on(1, c(x()), c(h()))) - on(0, c(x()), c(h()))
                + flip12(on(0, c(x()), c(h()))),
        ],
    ));
    out.push(ml(
        "NN-CO-1",
        &[A],
        "(Δ≻⊗id)Δ≺ = (id⊗Δ≺)Δ≻",
        vec![on(0, cop("coprec", x()), cop("cosucc", h())) - on(1, cop("cosucc", x()), cop("coprec", h()))],
    ));
    out.push(ml(
        "NN-CO-2",
        &[A],
        "(Δ≺⊗id)Δ∘ = (id⊗Δ≻)Δ∘",
        vec![on(0, cop("cocirc", x()), cop("coprec", h())) - on(1, cop("cocirc", x()), cop("cosucc", h()))],
    ));
}

fn bialgebra_entries(out: &mut Vec<IdentityEntry>) {
    let p = |a, c| op("prec", a, c);
    let s = |a, c| op("succ", a, c);
    let o = |a, c| op("circ", a, c);
    out.push(ml(
        "NN-BI-1",
        &[A, A],
        "Δ≺(x≺y) = (R≺(y)⊗id)Δ≺(x) + (id⊗L∘(x))Δ∘(y)",
        vec![cop("coprec", p(x(), y())) - on(0, cop("coprec", x()), p(h(), y())) - on(1, cop("cocirc", y()), o(x(), h()))],
    ));
    out.push(ml(
        "NN-BI-2",
        &[A, A],
        "Δ≻(x≻y) = (R∘(y)⊗id)Δ∘(x) + (id⊗L≻(x))Δ≻(y)",
        vec![cop("cosucc", s(x(), y())) - on(0, cop("cocirc", x()), o(h(), y())) - on(1, cop("cosucc", y()), s(x(), h()))],
    ));
    out.push(ml(
        "NN-BI-3",
        &[A, A],
        "(id⊗R≺(y))Δ∘(x) + σ((id⊗R≺(x))Δ∘(y)) = (L≻(y)⊗id)Δ∘(x) + σ((L≻(x)⊗id)Δ∘(y))",
        vec![
            on(1, cop("cocirc", x()), p(h(), y())) + flip(on(1, cop("cocirc", y()), p(h(), x())))
                - on(0, cop("cocirc", x()), s(y(), h()))
                - flip(on(0, cop("cocirc", y()), s(x(), h()))),
        ],
    ));
    out.push(ml(
        "NN-BI-4",
        &[A, A],
        "(L∘(y)⊗id)Δ≺(x) + σ((L∘(x)⊗id)Δ≺(y)) = (id⊗R∘(y))Δ≻(x) + σ((id⊗R∘(x))Δ≻(y))",
        vec![
            on(0, cop("coprec", x()), o(y(), h())) + flip(on(0, cop("coprec", y()), o(x(), h())))
                - on(1, cop("cosucc", x()), o(h(), y()))
                - flip(on(1, cop("cosucc", y()), o(h(), x()))),
        ],
    ));

    let m = |a, c| op("mul", a, c);
    let c = |a| cop("coprod", a);
    let sym = |a: fn() -> Expr| c(a()) + flip(c(a()));
    // L∘(u)w = uw + wu for the symmetrized product.
    let lo = |u: Expr| m(u.clone(), h()) + m(h(), u);
    out.push(ml(
        "NOV-BI-1",
        &[A, A],
        "Δ(xy) = (R(y)⊗id)Δ(x) + (id⊗L(x))(Δ(y)+σΔ(y))",
        vec![c(m(x(), y())) - on(0, c(x()), m(h(), y())) - on(1, sym(y), m(x(), h()))],
    ));
    out.push(ml(
        "NOV-BI-2",
        &[A, A],
        "(L∘(x)⊗id)Δ(y) - (id⊗L∘(x))σΔ(y) = (L∘(y)⊗id)Δ(x) - (id⊗L∘(y))σΔ(x)",
        vec![
            on(0, c(y()), lo(x())) - on(1, flip(c(y())), lo(x())) - on(0, c(x()), lo(y()))
                + on(1, flip(c(x())), lo(y())),
        ],
    ));
    let rr = |t: Expr, u: fn() -> Expr| on(1, t.clone(), m(h(), u())) - on(0, t, m(h(), u()));
    out.push(ml(
        "NOV-BI-3",
        &[A, A],
        "(id⊗R(x) - R(x)⊗id)(Δ(y)+σΔ(y)) = (id⊗R(y) - R(y)⊗id)(Δ(x)+σΔ(x))",
        vec![rr(sym(y), x) - rr(sym(x), y)],
    ));
    out.push(ml(
        "NOV-BI-3-literal",
        &[A, A],
        "printed form with Δ(x)⊗σΔ(x) on the right; ill-typed, so evaluation reports a shape mismatch",
        vec![rr(sym(y), x) - rr(tensor(c(x()), flip(c(x()))), y)],
    ));

    out.push(ml(
        "ASI-1",
        &[A, A],
        "Δ(xy) = (R(y)⊗id)Δ(x) + (id⊗L(x))Δ(y)",
        vec![c(m(x(), y())) - on(0, c(x()), m(h(), y())) - on(1, c(y()), m(x(), h()))],
    ));
    out.push(ml(
        "ASI-2",
        &[A, A],
        "(L(x)⊗id - id⊗R(x))Δ(y) = σ(id⊗R(y) - L(y)⊗id)Δ(x)",
        vec![
            on(0, c(y()), m(x(), h())) - on(1, c(y()), m(h(), x()))
                - flip(on(1, c(x()), m(h(), y())) - on(0, c(x()), m(y(), h()))),
        ],
    ));
}

fn splitting_entries(out: &mut Vec<IdentityEntry>) {
    let p = |a, c| op("prec_d", a, c);
    let s = |a, c| op("succ_d", a, c);
    out.push(ml(
        "DEND-1",
        &[A, A, A],
        "(x≺y)≺z = x≺(y≺z + y≻z)",
        vec![p(p(x(), y()), z()) - p(x(), p(y(), z())) - p(x(), s(y(), z()))],
    ));
    out.push(ml(
        "DEND-2",
        &[A, A, A],
        "(x≻y)≺z = x≻(y≺z)",
        vec![p(s(x(), y()), z()) - s(x(), p(y(), z()))],
    ));
    out.push(ml(
        "DEND-3",
        &[A, A, A],
        "(x≺y + x≻y)≻z = x≻(y≻z)",
        vec![s(p(x(), y()), z()) + s(s(x(), y()), z()) - s(x(), s(y(), z()))],
    ));
    let dd = |a| map("D", a);
    out.push(ml(
        "DDEND",
        &[A, A],
        "D(x≺y) = D(x)≺y + x≺D(y), D(x≻y) = D(x)≻y + x≻D(y)",
        vec![
            dd(p(x(), y())) - p(dd(x()), y()) - p(x(), dd(y())),
            dd(s(x(), y())) - s(dd(x()), y()) - s(x(), dd(y())),
        ],
    ));

    let l1 = |a, c| op("lhd1", a, c);
    let l2 = |a, c| op("lhd2", a, c);
    let r1 = |a, c| op("rhd1", a, c);
    let r2 = |a, c| op("rhd2", a, c);
    let pr = |a: Expr, c: Expr| l1(a.clone(), c.clone()) + l2(a, c);
    let su = |a: Expr, c: Expr| r1(a.clone(), c.clone()) + r2(a, c);
    out.push(ml(
        "PNV-1",
        &[A, A, A],
        "(x≻y)◁₁z = x▷₁(y◁₁z)",
        vec![l1(su(x(), y()), z()) - r1(x(), l1(y(), z()))],
    ));
    out.push(ml(
        "PNV-2",
        &[A, A, A],
        "(x▷₁y)◁₂z = x▷₁(y◁₂z)",
        vec![l2(r1(x(), y()), z()) - r1(x(), l2(y(), z()))],
    ));
    out.push(ml(
        "PNV-3",
        &[A, A, A],
        "(x▷₂y)◁₂z = x▷₂(y≺z)",
        vec![l2(r2(x(), y()), z()) - r2(x(), pr(y(), z()))],
    ));
    out.push(ml(
        "PNV-4",
        &[A, A, A],
        "(x≺y)◁₁z + (x≺y)▷₁z = x◁₁(y▷₁z) + x▷₁(y▷₁z)",
        vec![
            l1(pr(x(), y()), z()) + r1(pr(x(), y()), z())
                - l1(x(), r1(y(), z()))
                - r1(x(), r1(y(), z())),
        ],
    ));
    out.push(ml(
        "PNV-5",
        &[A, A, A],
        "(x◁₁y)◁₂z + (x◁₁y)▷₂z = x◁₁(y▷₂z) + x▷₁(y▷₂z)",
        vec![
            l2(l1(x(), y()), z()) + r2(l1(x(), y()), z())
                - l1(x(), r2(y(), z()))
                - r1(x(), r2(y(), z())),
        ],
    ));
    out.push(ml(
        "PNV-6",
        &[A, A, A],
        "(x◁₂y)◁₂z + (x◁₂y)▷₂z = x◁₂(y≻z) + x▷₂(y≻z)",
        vec![
            l2(l2(x(), y()), z()) + r2(l2(x(), y()), z())
                - l2(x(), su(y(), z()))
                - r2(x(), su(y(), z())),
        ],
    ));
}

fn representation_entries(out: &mut Vec<IdentityEntry>) {
    let v = || z();
    let p = |a, c| op("prec", a, c);
    let s = |a, c| op("succ", a, c);
    out.push(ml(
        "NN-REP-1",
        &[A, A, V],
        "ℓ≺(x≻y) = ℓ≻(x)ℓ≺(y)",
        vec![act("lprec", s(x(), y()), v()) - act("lsucc", x(), act("lprec", y(), v()))],
    ));
    out.push(ml(
        "NN-REP-2",
        &[A, A, V],
        "r≺(x)ℓ≻(y) = ℓ≻(y)r≺(x)",
        vec![act("rprec", x(), act("lsucc", y(), v())) - act("lsucc", y(), act("rprec", x(), v()))],
    ));
    out.push(ml(
        "NN-REP-3",
        &[A, A, V],
        "r≺(x)r≻(y) = r≻(y≺x)",
        vec![act("rprec", x(), act("rsucc", y(), v())) - act("rsucc", p(y(), x()), v())],
    ));
    out.push(ml(
        "NN-REP-4",
        &[A, A, V],
        "ℓ∘(x≺y) = ℓ∘(x)ℓ≻(y)",
        vec![act("lcirc", p(x(), y()), v()) - act("lcirc", x(), act("lsucc", y(), v()))],
    ));
    out.push(ml(
        "NN-REP-5",
        &[A, A, V],
        "r∘(x)ℓ≺(y) = ℓ∘(y)r≻(x)",
        vec![act("rcirc", x(), act("lprec", y(), v())) - act("lcirc", y(), act("rsucc", x(), v()))],
    ));
    out.push(ml(
        "NN-REP-6",
        &[A, A, V],
        "r∘(x)r≺(y) = r∘(y≻x)",
        vec![act("rcirc", x(), act("rprec", y(), v())) - act("rcirc", s(y(), x()), v())],
    ));

    let m = |a, c| op("mul", a, c);
    out.push(ml(
        "ASSOC-REP",
        &[A, A, V],
        "ℓ(xy) = ℓ(x)ℓ(y), r(xy) = r(y)r(x), ℓ(x)r(y) = r(y)ℓ(x)",
        vec![
            act("l", m(x(), y()), v()) - act("l", x(), act("l", y(), v())),
            act("r", m(x(), y()), v()) - act("r", y(), act("r", x(), v())),
            act("l", x(), act("r", y(), v())) - act("r", y(), act("l", x(), v())),
        ],
    ));
    let d = |a| map("partial", a);
    let th = |a| map("theta", a);
    let u = || y();
    for (id, rho, summary) in [
        ("DA-REP-1", "l", "θ(ℓ(x)v) = ℓ(∂x)v + ℓ(x)θv + λℓ(∂x)θv"),
        ("DA-REP-2", "r", "θ(r(x)v) = r(∂x)v + r(x)θv + λr(∂x)θv"),
    ] {
        out.push(ml(
            id,
            &[A, V],
            summary,
            vec![
                th(act(rho, x(), u())) - act(rho, d(x()), u()) - act(rho, x(), th(u()))
                    - lam(act(rho, d(x()), th(u()))),
            ],
        ));
    }
    for (id, rho, summary) in [
        ("DA-REP-DUAL-1", "r", "r(x)θv - r(∂x)v - θ(r(x)v) - λθ(r(∂x)v) = 0"),
        ("DA-REP-DUAL-2", "l", "ℓ(x)θv - ℓ(∂x)v - θ(ℓ(x)v) - λθ(ℓ(∂x)v) = 0"),
    ] {
        out.push(ml(
            id,
            &[A, V],
            summary,
            vec![
                act(rho, x(), th(u())) - act(rho, d(x()), u()) - th(act(rho, x(), u()))
                    - lam(th(act(rho, d(x()), u()))),
            ],
        ));
    }
    out.push(ml(
        "REP-EQUIV",
        &[A, V],
        "φ(ℓ₁(x)v) = ℓ₂(x)φ(v), φ(r₁(x)v) = r₂(x)φ(v), φθ₁ = θ₂φ",
        vec![
            map("phi", act("l1", x(), u())) - act("l2", x(), map("phi", u())),
            map("phi", act("r1", x(), u())) - act("r2", x(), map("phi", u())),
            map("phi", map("theta1", u())) - map("theta2", map("phi", u())),
        ],
    ));

    let t = |a| map("T", a);
    for (id, mul, l, r, summary) in [
        ("O-OP-PREC", "prec", "lprec", "rprec", "T(u)≺T(v) = T(ℓ≺(Tu)v + r≺(Tv)u)"),
        ("O-OP-SUCC", "succ", "lsucc", "rsucc", "T(u)≻T(v) = T(ℓ≻(Tu)v + r≻(Tv)u)"),
    ] {
        out.push(ml(
            id,
            &[V, V],
            summary,
            vec![op(mul, t(x()), t(y())) - t(act(l, t(x()), y()) + act(r, t(y()), x()))],
        ));
    }
}

fn matched_pair_entries(out: &mut Vec<IdentityEntry>) {
    let pa = |a, c| op("prec_A", a, c);
    let sa = |a, c| op("succ_A", a, c);
    let oa = |a, c| op("circ_A", a, c);
    let pb = |a, c| op("prec_B", a, c);
    let sb = |a, c| op("succ_B", a, c);
    let ob = |a, c| op("circ_B", a, c);
    // Actions of A on B carry suffix _A; actions of B on A carry suffix _B.
    let lsa = |a, c| act("lprec_A", a, c);
    let rsa = |a, c| act("rprec_A", a, c);
    let lusa = |a, c| act("lsucc_A", a, c);
    let rusa = |a, c| act("rsucc_A", a, c);
    let loa = |a, c| act("lcirc_A", a, c);
    let roa = |a, c| act("rcirc_A", a, c);
    let lsb = |a, c| act("lprec_B", a, c);
    let rsb = |a, c| act("rprec_B", a, c);
    let lusb = |a, c| act("lsucc_B", a, c);
    let rusb = |a, c| act("rsucc_B", a, c);
    let lob = |a, c| act("lcirc_B", a, c);
    let rob = |a, c| act("rcirc_B", a, c);
    // Odd entries take (a, x, y) with a ∈ B; even entries take (x, a, b) with x ∈ A.
    let bxy = [SB, A, A];
    let xab = [A, SB, SB];
    let (a, xx, yy) = (x, y, z);
    let (x1, a1, b1) = (x, y, z);
    let rows: Vec<(&'static str, &[Space], &'static str, Expr)> = vec![
        ("MP-NN-1", &bxy, "ℓ≻B(a)(x≺y) = (ℓ≻B(a)x)≺y + ℓ≺B(r≻A(x)a)y",
            lusb(a(), pa(xx(), yy())) - pa(lusb(a(), xx()), yy()) - lsb(rusa(xx(), a()), yy())),
        ("MP-NN-2", &xab, "ℓ≻A(x)(a≺b) = (ℓ≻A(x)a)≺b + ℓ≺A(r≻B(a)x)b",
            lusa(x1(), pb(a1(), b1())) - pb(lusa(x1(), a1()), b1()) - lsa(rusb(a1(), x1()), b1())),
        ("MP-NN-3", &bxy, "r≺B(a)(x≻y) = x≻(r≺B(a)y) + r≻B(ℓ≺A(y)a)x",
            rsb(a(), sa(xx(), yy())) - sa(xx(), rsb(a(), yy())) - rusb(lsa(yy(), a()), xx())),
        ("MP-NN-4", &xab, "r≺A(x)(a≻b) = a≻(r≺A(x)b) + r≻A(ℓ≺B(b)x)a",
            rsa(x1(), sb(a1(), b1())) - sb(a1(), rsa(x1(), b1())) - rusa(lsb(b1(), x1()), a1())),
        ("MP-NN-5", &bxy, "(r≻B(a)x)≺y + ℓ≺B(ℓ≻A(x)a)y = x≻(ℓ≺B(a)y) + r≻B(r≺A(y)a)x",
            pa(rusb(a(), xx()), yy()) + lsb(lusa(xx(), a()), yy())
                - sa(xx(), lsb(a(), yy())) - rusb(rsa(yy(), a()), xx())),
        ("MP-NN-6", &xab, "(r≻A(x)a)≺b + ℓ≺A(ℓ≻B(a)x)b = a≻(ℓ≺A(x)b) + r≻A(r≺B(b)x)a",
            pb(rusa(x1(), a1()), b1()) + lsa(lusb(a1(), x1()), b1())
                - sb(a1(), lsa(x1(), b1())) - rusa(rsb(b1(), x1()), a1())),
        ("MP-NN-7", &bxy, "ℓ∘B(a)(x≻y) = (ℓ≺B(a)x)∘y + ℓ∘B(r≺A(x)a)y",
            lob(a(), sa(xx(), yy())) - oa(lsb(a(), xx()), yy()) - lob(rsa(xx(), a()), yy())),
        ("MP-NN-8", &xab, "ℓ∘A(x)(a≻b) = (ℓ≺A(x)a)∘b + ℓ∘A(r≺B(a)x)b",
            loa(x1(), sb(a1(), b1())) - ob(lsa(x1(), a1()), b1()) - loa(rsb(a1(), x1()), b1())),
        ("MP-NN-9", &bxy, "r∘B(a)(x≺y) = x∘(r≻B(a)y) + r∘B(ℓ≻A(y)a)x",
            rob(a(), pa(xx(), yy())) - oa(xx(), rusb(a(), yy())) - rob(lusa(yy(), a()), xx())),
        ("MP-NN-10", &xab, "r∘A(x)(a≺b) = a∘(r≻A(x)b) + r∘A(ℓ≻B(b)x)a",
            roa(x1(), pb(a1(), b1())) - ob(a1(), rusa(x1(), b1())) - roa(lusb(b1(), x1()), a1())),
        ("MP-NN-11", &bxy, "(r≺B(a)x)∘y + ℓ∘B(ℓ≺A(x)a)y = x∘(ℓ≻B(a)y) + r∘B(r≻A(y)a)x",
            oa(rsb(a(), xx()), yy()) + lob(lsa(xx(), a()), yy())
                - oa(xx(), lusb(a(), yy())) - rob(rusa(yy(), a()), xx())),
        ("MP-NN-12", &xab, "(r≺A(x)a)∘b + ℓ∘A(ℓ≺B(a)x)b = a∘(ℓ≻A(x)b) + r∘A(r≻B(b)x)a",
            ob(rsa(x1(), a1()), b1()) + loa(lsb(a1(), x1()), b1())
                - ob(a1(), lusa(x1(), b1())) - roa(rusb(b1(), x1()), a1())),
    ];
    for (id, args, summary, e) in rows {
        out.push(ml(id, args, summary, vec![e]));
    }

    let ma = |p, q| op("mul_A", p, q);
    let mb = |p, q| op("mul_B", p, q);
    let la = |p, q| act("l_A", p, q);
    let ra = |p, q| act("r_A", p, q);
    let lb = |p, q| act("l_B", p, q);
    let rb = |p, q| act("r_B", p, q);
    let abb = [A, SB, SB];
    let baa = [SB, A, A];
    let rows: Vec<(&'static str, &[Space], &'static str, Expr)> = vec![
        ("MP-ASSOC-1", &abb, "ℓA(a)(bb') = ℓA(rB(b)a)b' + (ℓA(a)b)b'",
            la(x(), mb(y(), z())) - la(rb(y(), x()), z()) - mb(la(x(), y()), z())),
        ("MP-ASSOC-2", &abb, "rA(a)(bb') = rA(ℓB(b')a)b + b(rA(a)b')",
            ra(x(), mb(y(), z())) - ra(lb(z(), x()), y()) - mb(y(), ra(x(), z()))),
        ("MP-ASSOC-3", &baa, "ℓB(b)(aa') = ℓB(rA(a)b)a' + (ℓB(b)a)a'",
            lb(x(), ma(y(), z())) - lb(ra(y(), x()), z()) - ma(lb(x(), y()), z())),
        ("MP-ASSOC-4", &baa, "rB(b)(aa') = rB(ℓA(a')b)a + a(rB(b)a')",
            rb(x(), ma(y(), z())) - rb(la(z(), x()), y()) - ma(y(), rb(x(), z()))),
        ("MP-ASSOC-5", &abb, "ℓA(ℓB(b)a)b' + (rA(a)b)b' = rA(rB(b')a)b + b(ℓA(a)b')",
            la(lb(y(), x()), z()) + mb(ra(x(), y()), z()) - ra(rb(z(), x()), y()) - mb(y(), la(x(), z()))),
        ("MP-ASSOC-6", &baa, "ℓB(ℓA(a)b)a' + (rB(b)a)a' = rB(rA(a')b)a + a(ℓB(b)a')",
            lb(la(y(), x()), z()) + ma(rb(x(), y()), z()) - rb(ra(z(), x()), y()) - ma(y(), lb(x(), z()))),
    ];
    for (id, args, summary, e) in rows {
        out.push(ml(id, args, summary, vec![e]));
    }
    let _ = W;
}

fn form_entries(out: &mut Vec<IdentityEntry>) {
    let f = |p, q| form("form", p, q);
    out.push(ml(
        "INV-NN",
        &[A, A, A],
        "B(x≺y,z) = -B(y,z∘x) = B(x,y≻z)",
        vec![
            f(op("prec", x(), y()), z()) + f(y(), op("circ", z(), x())),
            f(op("prec", x(), y()), z()) - f(x(), op("succ", y(), z())),
        ],
    ));
    out.push(ml(
        "INV-ASSOC",
        &[A, A, A],
        "B(xy,z) = B(x,yz)",
        vec![f(op("mul", x(), y()), z()) - f(x(), op("mul", y(), z()))],
    ));
    out.push(ml(
        "QF",
        &[A, A, A],
        "B(x≺y,z) + B(y≻z,x) - B(z∘x,y) = 0",
        vec![f(op("prec", x(), y()), z()) + f(op("succ", y(), z()), x()) - f(op("circ", z(), x()), y())],
    ));
    out.push(ml("FORM-SYM", &[A, A], "B(x,y) = B(y,x)", vec![f(x(), y()) - f(y(), x())]));
    out.push(ml("FORM-ANTISYM", &[A, A], "B(x,y) = -B(y,x)", vec![f(x(), y()) + f(y(), x())]));
    out.push(IdentityEntry {
        id: "FORM-NONDEG",
        args: vec![],
        kind: EntryKind::Nondegenerate { form: "form" },
        summary: "rank B = dim",
    });
}

/// All catalog entries in a fixed order.
pub fn catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::new();
        algebra_entries(&mut out);
        differential_entries(&mut out);
        coalgebra_entries(&mut out);
        bialgebra_entries(&mut out);
        splitting_entries(&mut out);
        representation_entries(&mut out);
        matched_pair_entries(&mut out);
        form_entries(&mut out);
        out
    })
}

/// Accepted spellings for ids whose canonical form is ASCII.
const ALIASES: &[(&str, &str)] = &[
    ("DER-λ", "DER"),
    ("DER-LAMBDA", "DER"),
    ("CODER-λ", "CODER"),
    ("CODER-LAMBDA", "CODER"),
    ("O-OP-≺", "O-OP-PREC"),
    ("O-OP-≻", "O-OP-SUCC"),
];

pub fn canonical_id(id: &str) -> &str {
    ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map_or(id, |(_, c)| c)
}

pub fn lookup(id: &str) -> Option<&'static IdentityEntry> {
    let id = canonical_id(id);
    catalog().iter().find(|e| e.id == id)
}

/// Expands `NN-BI-1..4` style ranges and comma lists into ids.
pub fn expand_ids(spec: &str) -> Vec<String> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((head, hi)) = part.split_once("..") {
            if let (Some(pos), Ok(hi)) = (head.rfind('-'), hi.parse::<u32>()) {
                if let Ok(lo) = head[pos + 1..].parse::<u32>() {
                    for k in lo..=hi {
                        out.push(format!("{}{k}", &head[..=pos]));
                    }
                    continue;
                }
            }
        }
        out.push(part.to_string());
    }
    out
}

/// Named bundles of identities.
pub const PROFILES: &[(&str, &[&str])] = &[
    ("nn-algebra", &["NN-1", "NN-2"]),
    ("nn-coalgebra", &["NN-CO-1", "NN-CO-2"]),
    (
        "nn-bialgebra",
        &["NN-1", "NN-2", "NN-CO-1", "NN-CO-2", "NN-BI-1", "NN-BI-2", "NN-BI-3", "NN-BI-4"],
    ),
    ("novikov-algebra", &["NOV-1", "NOV-2"]),
    ("novikov-coalgebra", &["NOV-CO-1", "NOV-CO-2"]),
    (
        "novikov-bialgebra",
        &["NOV-1", "NOV-2", "NOV-CO-1", "NOV-CO-2", "NOV-BI-1", "NOV-BI-2", "NOV-BI-3"],
    ),
    ("associative", &["ASSOC"]),
    ("coassociative", &["COASSOC"]),
    ("asi-bialgebra", &["ASSOC", "COASSOC", "ASI-1", "ASI-2"]),
    ("differential-algebra", &["ASSOC", "DER"]),
    ("differential-coalgebra", &["COASSOC", "CODER"]),
    ("admissible-differential-algebra", &["ASSOC", "DER", "ADM-DA-1", "ADM-DA-2"]),
    (
        "admissible-differential-coalgebra",
        &["COASSOC", "CODER", "ADM-DCA-1", "ADM-DCA-2"],
    ),
    (
        "differential-asi-bialgebra",
        &[
            "ASSOC", "COASSOC", "ASI-1", "ASI-2", "DER", "ADM-DA-1", "ADM-DA-2", "CODER",
            "ADM-DCA-1", "ADM-DCA-2",
        ],
    ),
    ("dendriform", &["DEND-1", "DEND-2", "DEND-3"]),
    ("differential-dendriform", &["DEND-1", "DEND-2", "DEND-3", "DDEND"]),
    ("pre-novikov", &["PNV-1", "PNV-2", "PNV-3", "PNV-4", "PNV-5", "PNV-6"]),
    (
        "nn-representation",
        &["NN-REP-1", "NN-REP-2", "NN-REP-3", "NN-REP-4", "NN-REP-5", "NN-REP-6"],
    ),
    ("assoc-representation", &["ASSOC-REP"]),
    ("da-representation", &["ASSOC-REP", "DA-REP-1", "DA-REP-2"]),
    ("quadratic-nn", &["NN-1", "NN-2", "FORM-SYM", "FORM-NONDEG", "INV-NN"]),
    ("quasi-frobenius", &["FORM-ANTISYM", "FORM-NONDEG", "QF"]),
    ("frobenius", &["ASSOC", "FORM-SYM", "FORM-NONDEG", "INV-ASSOC"]),
    ("o-operator", &["O-OP-PREC", "O-OP-SUCC"]),
    ("theorem-main", &["THM-MAIN-COND-1", "THM-MAIN-COND-2"]),
    (
        "matched-pair-nn",
        &[
            "MP-NN-1", "MP-NN-2", "MP-NN-3", "MP-NN-4", "MP-NN-5", "MP-NN-6", "MP-NN-7",
            "MP-NN-8", "MP-NN-9", "MP-NN-10", "MP-NN-11", "MP-NN-12",
        ],
    ),
    (
        "matched-pair-assoc",
        &["MP-ASSOC-1", "MP-ASSOC-2", "MP-ASSOC-3", "MP-ASSOC-4", "MP-ASSOC-5", "MP-ASSOC-6"],
    ),
];

pub fn profile(name: &str) -> Option<&'static [&'static str]> {
    PROFILES.iter().find(|(n, _)| *n == name).map(|(_, ids)| *ids)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_profiles_resolve() {
        let cat = catalog();
        for (i, e) in cat.iter().enumerate() {
            assert!(cat[..i].iter().all(|f| f.id != e.id), "duplicate {}", e.id);
        }
        for (name, ids) in PROFILES {
            for id in *ids {
                assert!(lookup(id).is_some(), "profile {name} names unknown {id}");
            }
        }
    }

    #[test]
    fn aliases_and_ranges() {
        assert_eq!(lookup("DER-λ").unwrap().id, "DER");
        assert_eq!(lookup("O-OP-≻").unwrap().id, "O-OP-SUCC");
        assert_eq!(expand_ids("NN-BI-1..3, ASSOC"), ["NN-BI-1", "NN-BI-2", "NN-BI-3", "ASSOC"]);
        assert_eq!(expand_ids("MP-NN-11..12"), ["MP-NN-11", "MP-NN-12"]);
    }

    #[test]
    fn every_expected_family_is_present() {
        for id in [
            "ASSOC", "NOV-1", "NOV-2", "NN-1", "NN-2", "DER", "CODER", "ADM-DA-1", "ADM-DA-2",
            "ADM-DCA-1", "ADM-DCA-2", "COASSOC", "NOV-CO-1", "NOV-CO-2", "NN-CO-1", "NN-CO-2",
            "NN-BI-4", "NOV-BI-3", "NOV-BI-3-literal", "ASI-1", "ASI-2", "DEND-3", "DDEND",
            "PNV-6", "NN-REP-6", "ASSOC-REP", "DA-REP-2", "DA-REP-DUAL-1", "DA-REP-DUAL-2",
            "REP-EQUIV", "MP-NN-12", "MP-ASSOC-6", "INV-NN", "INV-ASSOC", "QF", "FORM-SYM",
            "FORM-ANTISYM", "FORM-NONDEG", "O-OP-PREC", "O-OP-SUCC", "THM-MAIN-COND-1",
            "THM-MAIN-COND-2",
        ] {
            assert!(lookup(id).is_some(), "{id}");
        }
    }
}
