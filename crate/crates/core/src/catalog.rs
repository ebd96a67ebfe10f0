//! The algebra catalog: one declarative record per family, encoding the
//! simple-root systems, iso-sets, normalizations and dual Coxeter numbers of
//! the finite and affine Kac-Moody superalgebra families.
//!
//! Rank conventions are the Cartan-type ones: `A(m|n) = gl(m+1|n+1)`,
//! `B(m|n) = osp(2m+1|2n)`, `D(m|n) = osp(2m|2n)`. Lie-algebra families are
//! the zero-rank degenerations of the same shapes (`A_l`, `B_l`, `C_l = sp`,
//! `D_l`). The bilinear form is normalised so that the longest root of
//! `Delta^#` (the positive-square even roots) has square length 2.

use crate::lattice::{Space, Weight};
use crate::ratio::{q, q0, qi, q_to_string, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `A(m|n) = gl(m+1|n+1)`, `m, n >= 0`.
    A { m: usize, n: usize },
    /// `B(m|n) = osp(2m+1|2n)`, `m >= 0`, `n >= 1`.
    B { m: usize, n: usize },
    /// `D(m|n) = osp(2m|2n)`, `m >= 1`, `n >= 1`, `(m,n) != (2,1)`.
    D { m: usize, n: usize },
    G3,
    F4,
    /// `D(2|1,a)` with its rational parameter.
    D21a { a: Q },
    LieA(usize),
    LieB(usize),
    LieC(usize),
    LieD(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Finite,
    One,
    Two,
    Four,
}

impl Twist {
    pub fn order(self) -> usize {
        match self {
            Twist::Finite => 0,
            Twist::One => 1,
            Twist::Two => 2,
            Twist::Four => 4,
        }
    }
}

/// Raw catalog record: everything `cartan::build_algebra` needs to assemble a
/// model.
pub struct ModelData {
    pub label: String,
    pub space: Space,
    /// Simple roots; for affine records `alpha_0` comes first.
    pub sigma: Vec<Weight>,
    /// Odd simple roots (the set `tau`).
    pub tau: Vec<bool>,
    /// Indices into `sigma` forming the iso-set `S` of the nice pair.
    pub s_indices: Vec<usize>,
    pub dual_coxeter: Q,
    pub twist: Twist,
    /// `dim g_{j delta}` split as (even, odd), indexed by `j mod r`.
    pub imaginary_mults: Vec<(u32, u32)>,
}

pub fn family_label(family: &Family, twist: Twist) -> String {
    let base = match family {
        Family::A { m, n } => format!("A({m}|{n})"),
        Family::B { m, n } => format!("B({m}|{n})"),
        Family::D { m, n } => format!("D({m}|{n})"),
        Family::G3 => "G(3)".into(),
        Family::F4 => "F(4)".into(),
        Family::D21a { a } => format!("D(2|1,{})", q_to_string(a)),
        Family::LieA(l) => format!("A_{l}"),
        Family::LieB(l) => format!("B_{l}"),
        Family::LieC(l) => format!("C_{l}"),
        Family::LieD(l) => format!("D_{l}"),
    };
    match twist {
        Twist::Finite => base,
        Twist::One => format!("{base}^(1)"),
        Twist::Two => format!("{base}^(2)"),
        Twist::Four => format!("{base}^(4)"),
    }
}

// ---------------------------------------------------------------------------
// Species-level base shapes.
//
// A "chain plan" is a list of simple roots written over abstract species
// slots; `E(i)` is eps_i, `Dl(j)` is del_j. Parity of each root is the
// number of `Dl` occurrences mod 2 (species parity), which is correct for
// every non-exceptional family.
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
enum Sp {
    E(usize),
    Dl(usize),
}

fn term(space: &Space, s: Sp) -> Weight {
    match s {
        Sp::E(i) => space.eps(i),
        Sp::Dl(j) => space.del(j),
    }
}

/// root = sum of (coefficient, species vector); parity = sum over |coef|*del?
/// Parity counts del-occurrences weighted by |coefficient| mod 2.
fn mk_root(space: &Space, terms: &[(i64, Sp)]) -> (Weight, bool) {
    let mut w = space.zero();
    let mut par = 0i64;
    for (c, s) in terms {
        w = w.add(&term(space, *s).scale(&qi(*c)));
        if let Sp::Dl(_) = s {
            par += c.abs();
        }
    }
    (w, par % 2 == 1)
}

struct DotBase {
    roots: Vec<Vec<(i64, Sp)>>,
    s_positions: Vec<usize>,
}

/// gl(bigs|smalls) with the "big" species listed first (norm +1); the chain
/// alternates big_1-small_1, small_1-big_2, ... For `smalls = 0` this is the
/// plain `A_{bigs-1}` chain.
fn dot_gl(bigs: usize, smalls: usize, big_is_eps: bool) -> DotBase {
    assert!(bigs >= smalls);
    let big = |i: usize| if big_is_eps { Sp::E(i) } else { Sp::Dl(i) };
    let small = |i: usize| if big_is_eps { Sp::Dl(i) } else { Sp::E(i) };
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    if smalls == 0 {
        for i in 1..bigs {
            roots.push(vec![(1, big(i)), (-1, big(i + 1))]);
        }
        return DotBase { roots, s_positions };
    }
    // alternating part: big_i - small_i (in S), small_i - big_{i+1}
    for i in 1..=smalls {
        s_positions.push(roots.len());
        roots.push(vec![(1, big(i)), (-1, small(i))]);
        if i < smalls {
            roots.push(vec![(1, small(i)), (-1, big(i + 1))]);
        }
    }
    if bigs > smalls {
        roots.push(vec![(1, small(smalls)), (-1, big(smalls + 1))]);
        for i in (smalls + 1)..bigs {
            roots.push(vec![(1, big(i)), (-1, big(i + 1))]);
        }
    }
    DotBase { roots, s_positions }
}

/// B(m|n)/D(m|n) for m >= n+1 (B) or m >= n+2 (D): eps-chain, then the
/// interleaved eps/del chain, then the tail (`eps_m` for B; `eps_{m-1} -+
/// eps_m` for D). `s_even_positions` switches S between the two conventions
/// used by the paper (odd beta's for the generic case, even beta's for the
/// boundary ranks m = n+1 resp. m = n+2).
fn dot_osp_eps_dominant(m: usize, n: usize, d_type: bool, s_even: bool) -> DotBase {
    let start = if d_type { m - n - 1 } else { m - n }; // first eps paired with del_1
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for i in 1..start {
        roots.push(vec![(1, Sp::E(i)), (-1, Sp::E(i + 1))]);
    }
    // beta_1 = eps_start - del_1, beta_2 = del_1 - eps_{start+1}, ...
    for j in 1..=n {
        let p1 = roots.len();
        roots.push(vec![(1, Sp::E(start + j - 1)), (-1, Sp::Dl(j))]);
        let p2 = roots.len();
        roots.push(vec![(1, Sp::Dl(j)), (-1, Sp::E(start + j))]);
        if s_even {
            s_positions.push(p2);
        } else {
            s_positions.push(p1);
        }
    }
    if d_type {
        roots.push(vec![(1, Sp::E(m - 1)), (-1, Sp::E(m))]);
        roots.push(vec![(1, Sp::E(m - 1)), (1, Sp::E(m))]);
    } else {
        roots.push(vec![(1, Sp::E(m))]);
    }
    DotBase { roots, s_positions }
}

/// B(m|n)/D(m|n) for m < n: del-chain, interleaved chain, tail `a * del_n`
/// (a = 1 for B, 2 for D). Degenerates to `B(0|n)` / `C_n` at m = 0.
fn dot_osp_del_dominant(m: usize, n: usize, tail_coeff: i64) -> DotBase {
    assert!(m < n);
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for j in 1..(n - m) {
        roots.push(vec![(1, Sp::Dl(j)), (-1, Sp::Dl(j + 1))]);
    }
    for i in 1..=m {
        roots.push(vec![(1, Sp::Dl(n - m + i - 1)), (-1, Sp::E(i))]);
        let p2 = roots.len();
        roots.push(vec![(1, Sp::E(i)), (-1, Sp::Dl(n - m + i))]);
        s_positions.push(p2);
    }
    roots.push(vec![(tail_coeff, Sp::Dl(n))]);
    DotBase { roots, s_positions }
}

/// B(n|n): eps_1-del_1, del_1-eps_2, ..., eps_n-del_n, del_n.
fn dot_osp_bnn(n: usize) -> DotBase {
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for i in 1..=n {
        s_positions.push(roots.len());
        roots.push(vec![(1, Sp::E(i)), (-1, Sp::Dl(i))]);
        if i < n {
            roots.push(vec![(1, Sp::Dl(i)), (-1, Sp::E(i + 1))]);
        }
    }
    roots.push(vec![(1, Sp::Dl(n))]);
    DotBase { roots, s_positions }
}

/// The flipped B(n|n) base used for A(2n|2n-1)^(2): del_1-eps_1, eps_1-del_2,
/// ..., del_n-eps_n, eps_n; S = {del_i - eps_i}.
fn dot_osp_bnn_flipped(n: usize) -> DotBase {
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for i in 1..=n {
        s_positions.push(roots.len());
        roots.push(vec![(1, Sp::Dl(i)), (-1, Sp::E(i))]);
        if i < n {
            roots.push(vec![(1, Sp::E(i)), (-1, Sp::Dl(i + 1))]);
        }
    }
    roots.push(vec![(1, Sp::E(n))]);
    DotBase { roots, s_positions }
}

/// D(n+1|n): eps_1-del_1, del_1-eps_2, ..., del_n-eps_{n+1}, del_n+eps_{n+1}.
fn dot_osp_dn1n(n: usize) -> DotBase {
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for i in 1..=n {
        s_positions.push(roots.len());
        roots.push(vec![(1, Sp::E(i)), (-1, Sp::Dl(i))]);
        roots.push(vec![(1, Sp::Dl(i)), (-1, Sp::E(i + 1))]);
    }
    roots.push(vec![(1, Sp::Dl(n)), (1, Sp::E(n + 1))]);
    DotBase { roots, s_positions }
}

/// D(n|n): del_1-eps_1, eps_1-del_2, ..., del_n-eps_n, del_n+eps_n.
fn dot_osp_dnn(n: usize) -> DotBase {
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    let mut s_positions = Vec::new();
    for i in 1..=n {
        s_positions.push(roots.len());
        roots.push(vec![(1, Sp::Dl(i)), (-1, Sp::E(i))]);
        if i < n {
            roots.push(vec![(1, Sp::E(i)), (-1, Sp::Dl(i + 1))]);
        }
    }
    roots.push(vec![(1, Sp::Dl(n)), (1, Sp::E(n))]);
    DotBase { roots, s_positions }
}

/// Distinguished D(m|n) base for m <= n (used where Appendix B gives no
/// (Sigma,S) for the twisted odd-odd family at m < n):
/// eps-chain, eps_m-del_1, del-chain, 2 del_n.
fn dot_osp_even_distinguished(m: usize, n: usize) -> DotBase {
    assert!(m >= 1 && n >= 1);
    let mut roots: Vec<Vec<(i64, Sp)>> = Vec::new();
    for i in 1..m {
        roots.push(vec![(1, Sp::E(i)), (-1, Sp::E(i + 1))]);
    }
    let s_positions = vec![roots.len()];
    roots.push(vec![(1, Sp::E(m)), (-1, Sp::Dl(1))]);
    for j in 1..n {
        roots.push(vec![(1, Sp::Dl(j)), (-1, Sp::Dl(j + 1))]);
    }
    roots.push(vec![(2, Sp::Dl(n))]);
    DotBase { roots, s_positions }
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

struct Plan {
    eps_count: usize,
    del_count: usize,
    /// +1 on eps and -eps_norm on del when true; the mirror otherwise.
    eps_norm: Q,
    dot: DotBase,
    /// alpha_0 as species terms plus the null root (affine only).
    alpha0: Option<Vec<(i64, Sp)>>,
    dual_coxeter: Q,
    imaginary_mults: Vec<(u32, u32)>,
}

fn assemble(plan: Plan, family: &Family, twist: Twist) -> Result<ModelData, String> {
    let affine = plan.alpha0.is_some();
    let eps_norms: Vec<Q> = (0..plan.eps_count).map(|_| plan.eps_norm.clone()).collect();
    let del_norms: Vec<Q> = (0..plan.del_count).map(|_| -plan.eps_norm.clone()).collect();
    let space = Space::orthogonal(&eps_norms, &del_norms, affine);
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    let mut s_indices = Vec::new();
    let shift = if affine { 1 } else { 0 };
    if let Some(a0) = &plan.alpha0 {
        let (w, p) = mk_root(&space, a0);
        sigma.push(space.delta().add(&w));
        tau.push(p);
    }
    for (i, terms) in plan.dot.roots.iter().enumerate() {
        let (w, p) = mk_root(&space, terms);
        if plan.dot.s_positions.contains(&i) {
            s_indices.push(sigma.len());
        }
        let _ = i;
        sigma.push(w);
        tau.push(p);
    }
    let _ = shift;
    Ok(ModelData {
        label: family_label(family, twist),
        space,
        sigma,
        tau,
        s_indices,
        dual_coxeter: plan.dual_coxeter,
        twist,
        imaginary_mults: if affine { plan.imaginary_mults } else { Vec::new() },
    })
}

fn gl_plan(mm: usize, nn: usize, affine: bool) -> Plan {
    // gl(mm|nn); dominant species gets norm +1.
    let big_is_eps = mm >= nn;
    let (bigs, smalls) = if big_is_eps { (mm, nn) } else { (nn, mm) };
    let dot = dot_gl(bigs, smalls, big_is_eps);
    let big = |i: usize| if big_is_eps { Sp::E(i) } else { Sp::Dl(i) };
    let small = |i: usize| if big_is_eps { Sp::Dl(i) } else { Sp::E(i) };
    let alpha0 = if affine {
        Some(if bigs == smalls {
            vec![(-1, big(1)), (1, small(smalls))]
        } else {
            vec![(-1, big(1)), (1, big(bigs))]
        })
    } else {
        None
    };
    let s = if mm == nn {
        (mm + nn).saturating_sub(2)
    } else {
        mm + nn - 1
    };
    Plan {
        eps_count: mm,
        del_count: nn,
        eps_norm: if big_is_eps { qi(1) } else { qi(-1) },
        dot,
        alpha0,
        dual_coxeter: qi((mm as i64 - nn as i64).abs()),
        imaginary_mults: vec![(s as u32, 0)],
    }
}

fn osp_odd_plan(m: usize, n: usize, affine: bool) -> Result<Plan, String> {
    // B(m|n) = osp(2m+1|2n)
    if m == 0 && n == 0 {
        return Err("B(0|0) is empty".into());
    }
    if n == 0 && m == 1 {
        return Err("B_1 is A_1; use the A family".into());
    }
    let (dot, alpha0, eps_norm): (DotBase, Option<Vec<(i64, Sp)>>, Q) = if m > n {
        let norm = qi(1);
        if m == n + 1 {
            // B(n+1|n): beta-chain + eps_{n+1}; S = even betas; alpha_0 = delta-eps_1-del_1
            let a0 = if n == 0 {
                return Err("B_1^(x) not in the catalog; use A_1".into());
            } else {
                vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))]
            };
            (dot_osp_eps_dominant(m, n, false, true), affine.then_some(a0), norm)
        } else {
            // m >= n+2 (includes Lie B_m at n = 0, m >= 2)
            let a0 = vec![(-1, Sp::E(1)), (-1, Sp::E(2))];
            (dot_osp_eps_dominant(m, n, false, false), affine.then_some(a0), norm)
        }
    } else if m == n {
        // B(n|n)
        (dot_osp_bnn(n), affine.then_some(vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))]), q(1, 2) * qi(-1))
    } else {
        // m < n
        (dot_osp_del_dominant(m, n, 1), affine.then_some(vec![(-2, Sp::Dl(1))]), q(-1, 2))
    };
    let h = if m > n {
        qi(2 * (m as i64 - n as i64) - 1)
    } else {
        qi(n as i64 - m as i64) + q(1, 2)
    };
    Ok(Plan {
        eps_count: m,
        del_count: n,
        eps_norm,
        dot,
        alpha0,
        dual_coxeter: h,
        imaginary_mults: vec![((m + n) as u32, 0)],
    })
}

fn osp_even_plan(m: usize, n: usize, affine: bool) -> Result<Plan, String> {
    // D(m|n) = osp(2m|2n); Lie D_m at n=0 (m>=3), Lie C_n at m=0 (n>=1).
    if m == 2 && n == 1 {
        return Err("D(2|1) is the a=1 member of D(2|1,a); build D(2|1,a) instead".into());
    }
    if n == 0 && m < 3 {
        return Err("D_m needs m >= 3 (D_2 is decomposable)".into());
    }
    if m == 0 && n == 0 {
        return Err("D(0|0) is empty".into());
    }
    if m == 1 && n == 0 {
        return Err("D_1 is trivial".into());
    }
    let (dot, alpha0, eps_norm): (DotBase, Option<Vec<(i64, Sp)>>, Q) = if m >= n + 3 || (n == 0 && m >= 3) {
        (
            dot_osp_eps_dominant(m, n, true, false),
            affine.then_some(vec![(-1, Sp::E(1)), (-1, Sp::E(2))]),
            qi(1),
        )
    } else if m == n + 2 {
        (
            dot_osp_eps_dominant(m, n, true, true),
            affine.then_some(vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))]),
            qi(1),
        )
    } else if m == n + 1 {
        (
            dot_osp_dn1n(n),
            affine.then_some(vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))]),
            qi(1),
        )
    } else if m == n {
        (dot_osp_dnn(n), affine.then_some(vec![(-2, Sp::Dl(1))]), q(-1, 2))
    } else {
        // m < n, including C_n at m = 0
        (dot_osp_del_dominant(m, n, 2), affine.then_some(vec![(-2, Sp::Dl(1))]), q(-1, 2))
    };
    let h = if m > n {
        qi(2 * (m as i64 - n as i64 - 1))
    } else {
        qi(n as i64 - m as i64 + 1)
    };
    Ok(Plan {
        eps_count: m,
        del_count: n,
        eps_norm,
        dot,
        alpha0,
        dual_coxeter: h,
        imaginary_mults: vec![((m + n) as u32, 0)],
    })
}

/// `A(2m-1|2n-1)^(2)` (dot part `D(m|n)`); Lie `A_{2m-1}^(2)` at n = 0.
fn tw_a2_odd_plan(m: usize, n: usize) -> Result<Plan, String> {
    if m == 1 && n == 1 {
        return Err("A(1|1)^(2) is not a Kac-Moody superalgebra (rank constraint (m,n) != (1,1))".into());
    }
    if m == 0 {
        return Err("A(-1|..)^(2) is not in the catalog".into());
    }
    if n == 0 && m < 2 {
        return Err("A_1^(2) does not exist".into());
    }
    let (dot, alpha0, eps_norm): (DotBase, Vec<(i64, Sp)>, Q) = if m >= n + 3 || (n == 0 && m >= 2) {
        (dot_osp_eps_dominant(m, n, true, false), vec![(-2, Sp::E(1))], q(1, 2))
    } else if m == n + 2 {
        (dot_osp_eps_dominant(m, n, true, true), vec![(-2, Sp::E(1))], q(1, 2))
    } else if m == n + 1 {
        (dot_osp_dn1n(n), vec![(-2, Sp::E(1))], q(1, 2))
    } else if m == n {
        (dot_osp_dnn(n), vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))], q(-1, 2))
    } else {
        // m < n: Appendix B lists no (Sigma,S) here; use the distinguished
        // D(m|n) base, which the A(1|3)^(2)-style examples are written in.
        (dot_osp_even_distinguished(m, n), vec![(-2, Sp::E(1))], q(-1, 2))
    };
    let mults = vec![((m + n) as u32, 0), ((m + n).saturating_sub(1) as u32, 0)];
    Ok(Plan {
        eps_count: m,
        del_count: n,
        eps_norm,
        dot,
        alpha0: Some(alpha0),
        dual_coxeter: qi((m as i64 - n as i64).abs()),
        imaginary_mults: mults,
    })
}

/// `A(2m|2n-1)^(2)` (dot part `B(m|n)`); Lie `A_{2m}^(2)` at n = 0.
fn tw_a2_even_plan(m: usize, n: usize) -> Result<Plan, String> {
    if m == 0 && n == 0 {
        return Err("empty rank".into());
    }
    let (dot, alpha0, eps_norm): (DotBase, Vec<(i64, Sp)>, Q) = if m >= n + 2 {
        (dot_osp_eps_dominant(m, n, false, false), vec![(-2, Sp::E(1))], q(1, 2))
    } else if m == n + 1 {
        // includes A_2^(2) at (1,0): dot base {eps_1}
        (dot_osp_eps_dominant(m, n, false, true), vec![(-2, Sp::E(1))], q(1, 2))
    } else if m == n {
        (dot_osp_bnn_flipped(n), vec![(-1, Sp::Dl(1)), (-1, Sp::E(1))], q(1, 2))
    } else if m == 0 && n == 1 {
        // A(0|1)^(2): simple roots {delta - del_1, del_1}, both odd.
        (dot_osp_del_dominant(0, 1, 1), vec![(-1, Sp::Dl(1))], q(-1, 2))
    } else if m == n - 1 {
        (dot_osp_del_dominant(m, n, 1), vec![(-1, Sp::E(1)), (-1, Sp::Dl(1))], q(-1, 2))
    } else {
        (dot_osp_del_dominant(m, n, 1), vec![(-1, Sp::Dl(1)), (-1, Sp::Dl(2))], q(-1, 2))
    };
    let h = (qi(2 * (m as i64 - n as i64) + 1)).abs() / qi(2);
    Ok(Plan {
        eps_count: m,
        del_count: n,
        eps_norm,
        dot,
        alpha0: Some(alpha0),
        dual_coxeter: h,
        imaginary_mults: vec![((m + n) as u32, 0), ((m + n) as u32, 0)],
    })
}

/// `A(2m|2n)^(4)` (dot part `B(m|n)`), m >= n >= 1.
fn tw_a4_plan(m: usize, n: usize) -> Result<Plan, String> {
    if n == 0 || m < n {
        return Err("A(2m|2n)^(4) requires m >= n >= 1".into());
    }
    let (dot, eps_norm): (DotBase, Q) = if m >= n + 2 {
        (dot_osp_eps_dominant(m, n, false, false), q(1, 2))
    } else if m == n + 1 {
        (dot_osp_eps_dominant(m, n, false, true), q(1, 2))
    } else {
        (dot_osp_bnn(n), q(-1, 2))
    };
    let alpha0 = vec![(-1, Sp::E(1))];
    let s = (m + n) as u32;
    Ok(Plan {
        eps_count: m,
        del_count: n,
        eps_norm,
        dot,
        alpha0: Some(alpha0),
        dual_coxeter: qi((m as i64 - n as i64).abs()) / qi(2),
        imaginary_mults: vec![(s, 0), (0, 1), (s.saturating_sub(1), 0), (0, 1)],
    })
}

/// `D(m|n)^(2)` (dot part `B(m-1|n)`); Lie `D_m^(2)` at n = 0.
fn osp_even_t2_plan(m: usize, n: usize) -> Result<Plan, String> {
    if m == 0 {
        return Err("D(0|n)^(2) is not in the catalog".into());
    }
    let mb = m - 1;
    if mb + n == 0 {
        return Err("rank too small".into());
    }
    let (dot, alpha0, eps_norm): (DotBase, Vec<(i64, Sp)>, Q) = if mb > n {
        let dot = if mb == n + 1 {
            dot_osp_eps_dominant(mb, n, false, true)
        } else {
            dot_osp_eps_dominant(mb, n, false, false)
        };
        (dot, vec![(-1, Sp::E(1))], qi(1))
    } else if mb == n {
        (dot_osp_bnn(n), vec![(-1, Sp::E(1))], q(-1, 2))
    } else if mb == 0 {
        // C(n+1)^(2) = D(1|n)^(2)
        (dot_osp_del_dominant(0, n, 1), vec![(-1, Sp::Dl(1))], q(-1, 2))
    } else {
        (dot_osp_del_dominant(mb, n, 1), vec![(-1, Sp::Dl(1))], q(-1, 2))
    };
    let hbig = if m > n { qi(2 * (m as i64 - n as i64 - 1)) } else { qi(n as i64 - m as i64 + 1) };
    Ok(Plan {
        eps_count: mb,
        del_count: n,
        eps_norm,
        dot,
        alpha0: Some(alpha0),
        dual_coxeter: hbig / qi(2),
        imaginary_mults: vec![((mb + n) as u32, 0), (1, 0)],
    })
}

fn g3_data(affine: bool, family: &Family, twist: Twist) -> ModelData {
    // Basis (eps_1, eps_2, del_1) with eps_3 := -eps_1 - eps_2;
    // (eps_i, eps_i) = 2/3, (eps_i, eps_j) = -1/3, (del_1, del_1) = -2/3.
    let gram = vec![
        vec![q(2, 3), q(-1, 3), q0()],
        vec![q(-1, 3), q(2, 3), q0()],
        vec![q0(), q0(), q(-2, 3)],
    ];
    let space = Space::with_gram(gram, 2, 1, affine);
    let eps3 = space.eps(1).neg().sub(&space.eps(2));
    let del1 = space.del(1);
    let dot = vec![
        (eps3.clone(), false),
        (del1.sub(&eps3), true),
        (space.eps(2).sub(&del1), true),
    ];
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    if affine {
        // alpha_0 = delta + eps_1 - eps_2
        sigma.push(space.delta().add(&space.eps(1)).sub(&space.eps(2)));
        tau.push(false);
    }
    let s_indices = vec![sigma.len() + 1];
    for (w, p) in dot {
        sigma.push(w);
        tau.push(p);
    }
    ModelData {
        label: family_label(family, twist),
        space,
        sigma,
        tau,
        s_indices,
        dual_coxeter: qi(2),
        twist,
        imaginary_mults: if affine { vec![(3, 0)] } else { Vec::new() },
    }
}

fn f4_data(affine: bool, family: &Family, twist: Twist) -> ModelData {
    let space = Space::orthogonal(&[qi(1), qi(1), qi(1)], &[qi(-3)], affine);
    let half = q(1, 2);
    let e = |i| space.eps(i);
    let d1 = space.del(1);
    let beta1 = e(1).add(&e(2)).sub(&e(3)).sub(&d1).scale(&half);
    let beta2 = e(2).sub(&e(1)).sub(&e(3)).add(&d1).scale(&half);
    let dot = vec![
        (e(3), false),
        (beta1, true),
        (beta2, true),
        (e(1).sub(&e(2)), false),
    ];
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    if affine {
        sigma.push(space.delta().sub(&e(1)).sub(&e(2)));
        tau.push(false);
    }
    let s_indices = vec![sigma.len() + 1];
    for (w, p) in dot {
        sigma.push(w);
        tau.push(p);
    }
    ModelData {
        label: family_label(family, twist),
        space,
        sigma,
        tau,
        s_indices,
        dual_coxeter: qi(3),
        twist,
        imaginary_mults: if affine { vec![(4, 0)] } else { Vec::new() },
    }
}

fn d21a_data(a: &Q, affine: bool, family: &Family, twist: Twist) -> Result<ModelData, String> {
    use num::Zero;
    if a.is_zero() || *a == qi(-1) {
        return Err("D(2|1,a) requires a not in {0, -1}".into());
    }
    let norms = [
        -(qi(1) + a.clone()) / qi(2),
        q(1, 2),
        a.clone() / qi(2),
    ];
    let space = Space::orthogonal(&norms, &[], affine);
    let e = |i| space.eps(i);
    let beta = e(1).sub(&e(2)).sub(&e(3));
    let mut sigma = Vec::new();
    let mut tau = Vec::new();
    if affine {
        sigma.push(space.delta().sub(&e(1).scale(&qi(2))));
        tau.push(false);
    }
    let s_indices = vec![sigma.len()];
    sigma.push(beta);
    tau.push(true);
    sigma.push(e(2).scale(&qi(2)));
    tau.push(false);
    sigma.push(e(3).scale(&qi(2)));
    tau.push(false);
    Ok(ModelData {
        label: family_label(family, twist),
        space,
        sigma,
        tau,
        s_indices,
        dual_coxeter: q0(),
        twist,
        imaginary_mults: if affine { vec![(3, 0)] } else { Vec::new() },
    })
}

/// Builds the raw catalog record for a family/twist selection.
pub fn model_data(family: &Family, twist: Twist) -> Result<ModelData, String> {
    let affine = twist != Twist::Finite;
    match (family, twist) {
        (Family::A { m, n }, Twist::Finite | Twist::One) => {
            if *m == 0 && *n == 0 {
                return Err("A(0|0) = gl(1|1) has no Cartan-matrix realization in the catalog".into());
            }
            assemble(gl_plan(m + 1, n + 1, affine), family, twist)
        }
        (Family::A { m, n }, Twist::Two) => {
            // n odd required (up to the A(m|n) = A(n|m) symmetry).
            let (m, n) = if n % 2 == 1 { (*m, *n) } else if m % 2 == 1 { (*n, *m) } else {
                return Err(format!("A({m}|{n})^(2) requires an odd rank"));
            };
            let plan = if m % 2 == 1 {
                tw_a2_odd_plan((m + 1) / 2, (n + 1) / 2)?
            } else {
                tw_a2_even_plan(m / 2, (n + 1) / 2)?
            };
            assemble(plan, family, twist)
        }
        (Family::A { m, n }, Twist::Four) => {
            if m % 2 != 0 || n % 2 != 0 {
                return Err(format!("A({m}|{n})^(4) requires both ranks even"));
            }
            let (mm, nn) = if m >= n { (m / 2, n / 2) } else { (n / 2, m / 2) };
            assemble(tw_a4_plan(mm, nn)?, family, twist)
        }
        (Family::B { m, n }, Twist::Finite | Twist::One) => {
            if *n == 0 {
                return Err("B(m|0) is the Lie algebra B_m; use the Lie family".into());
            }
            assemble(osp_odd_plan(*m, *n, affine)?, family, twist)
        }
        (Family::D { m, n }, Twist::Finite | Twist::One) => {
            if *n == 0 || *m == 0 {
                return Err("D(m|n) needs m, n >= 1; use the Lie families for the degenerations".into());
            }
            assemble(osp_even_plan(*m, *n, affine)?, family, twist)
        }
        (Family::D { m, n }, Twist::Two) => assemble(osp_even_t2_plan(*m, *n)?, family, twist),
        (Family::G3, Twist::Finite | Twist::One) => Ok(g3_data(affine, family, twist)),
        (Family::F4, Twist::Finite | Twist::One) => Ok(f4_data(affine, family, twist)),
        (Family::D21a { a }, Twist::Finite | Twist::One) => d21a_data(a, affine, family, twist),
        (Family::LieA(l), Twist::Finite | Twist::One) => {
            if *l == 0 {
                return Err("A_0 is trivial".into());
            }
            assemble(gl_plan(l + 1, 0, affine), family, twist)
        }
        (Family::LieA(l), Twist::Two) => {
            if *l < 2 {
                return Err("A_l^(2) requires l >= 2".into());
            }
            let plan = if l % 2 == 1 {
                tw_a2_odd_plan((l + 1) / 2, 0)?
            } else {
                tw_a2_even_plan(l / 2, 0)?
            };
            assemble(plan, family, twist)
        }
        (Family::LieB(l), Twist::Finite | Twist::One) => {
            assemble(osp_odd_plan(*l, 0, affine)?, family, twist)
        }
        (Family::LieC(l), Twist::Finite | Twist::One) => {
            if *l == 0 {
                return Err("C_0 is trivial".into());
            }
            assemble(osp_even_plan(0, *l, affine)?, family, twist)
        }
        (Family::LieD(l), Twist::Finite | Twist::One) => {
            assemble(osp_even_plan(*l, 0, affine)?, family, twist)
        }
        (Family::LieD(l), Twist::Two) => assemble(osp_even_t2_plan(*l, 0)?, family, twist),
        _ => Err(format!(
            "no catalog entry for {} with twist {:?}",
            family_label(family, Twist::Finite),
            twist
        )),
    }
}
