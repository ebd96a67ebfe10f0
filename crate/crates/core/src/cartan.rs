//! Cartan data, odd reflexions, spine enumeration, Weyl vectors, principal
//! roots, nice-pair validation, and model assembly from the catalog.

use crate::catalog::{self, Family, ModelData, Twist};
use crate::lattice::{pair, Space, Weight};
use crate::linalg::{lp_feasible, LinSolver, Matrix};
use crate::ratio::{is_int, q, q0, qi, to_i64, Q};
use crate::rootsys::ProgressionSet;
use crate::shifts::ShiftSet;
use num::Zero;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A base together with the parities of its simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub sigma: Vec<Weight>,
    pub tau: Vec<bool>,
}

impl CartanDatum {
    /// Cartan-style pairing matrix `a_ij`: `<alpha_j, alpha_i^vee>` for
    /// anisotropic `alpha_i`, and `(alpha_i, alpha_j)` rescaled rows for
    /// isotropic ones (diagonal 0).
    pub fn matrix(&self, space: &Space) -> Matrix {
        let n = self.sigma.len();
        let mut m = vec![vec![q0(); n]; n];
        for i in 0..n {
            let nii = pair(space, &self.sigma[i], &self.sigma[i]);
            for j in 0..n {
                let p = pair(space, &self.sigma[i], &self.sigma[j]);
                m[i][j] = if nii.is_zero() { p } else { p * qi(2) / nii.clone() };
            }
        }
        m
    }
}

#[derive(Clone, Debug)]
pub struct SpineGraph {
    /// Each node is a base with parities; node 0 is the model's own base.
    pub nodes: Vec<CartanDatum>,
    /// Edges `(from, to, reflexion root)` where the root is the isotropic
    /// simple root of `from` that was reflected.
    pub edges: Vec<(usize, usize, Weight)>,
}

impl SpineGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

pub struct AlgebraModel {
    pub family: Family,
    pub twist: Twist,
    pub label: String,
    pub space: Space,
    pub sigma: Vec<Weight>,
    pub tau: Vec<bool>,
    /// The iso-set S of the nice pair, as weights.
    pub s_set: Vec<Weight>,
    pub rho: Weight,
    pub dual_coxeter: Q,
    pub delta: Option<Weight>,
    pub lambda0: Option<Weight>,
    /// Marks: coefficients of delta over sigma (affine only).
    pub marks: Option<Vec<i64>>,
    /// `dim g_{j delta}` as (even, odd) by `j mod r`.
    pub imaginary_mults: Vec<(u32, u32)>,
    pub real_roots: ProgressionSet,
    pub spine: SpineGraph,
    /// Principal roots.
    pub principal: Vec<Weight>,
    /// `pi^# = {alpha in Sigma_pr : (alpha,alpha) > 0}`.
    pub pi_sharp: Vec<Weight>,
    solver: LinSolver,
}

impl AlgebraModel {
    pub fn is_affine(&self) -> bool {
        self.twist != Twist::Finite
    }

    pub fn pair(&self, u: &Weight, v: &Weight) -> Q {
        pair(&self.space, u, v)
    }

    pub fn norm(&self, v: &Weight) -> Q {
        pair(&self.space, v, v)
    }

    pub fn coroot_pairing(&self, lam: &Weight, alpha: &Weight) -> Result<Q, String> {
        crate::lattice::coroot_pairing(&self.space, lam, alpha)
    }

    /// Coordinates of `v` over the base `sigma`, if `v` lies in its span.
    pub fn sigma_coords(&self, v: &Weight) -> Option<Vec<Q>> {
        let rhs = rhs_vector(&self.space, v);
        self.solver.solve(&rhs)
    }

    pub fn sigma_coords_int(&self, v: &Weight) -> Option<Vec<i64>> {
        self.sigma_coords(v)?.iter().map(to_i64).collect()
    }

    /// Parity of a root-lattice element under the grading map `p`.
    pub fn parity(&self, v: &Weight) -> Option<bool> {
        let c = self.sigma_coords_int(v)?;
        let mut p = 0i64;
        for (ci, ti) in c.iter().zip(&self.tau) {
            if *ti {
                p += ci;
            }
        }
        Some(p.rem_euclid(2) == 1)
    }

    /// Height of a root-lattice element: the sum of its sigma-coordinates.
    pub fn height(&self, v: &Weight) -> Option<Q> {
        Some(self.sigma_coords(v)?.into_iter().fold(q0(), |a, b| a + b))
    }

    pub fn is_real_root(&self, v: &Weight) -> bool {
        self.real_roots.contains(v)
    }

    /// Positivity for root-lattice elements (uniform sign of coordinates).
    pub fn is_positive_root(&self, v: &Weight) -> bool {
        match self.sigma_coords(v) {
            Some(c) => c.iter().all(|x| *x >= q0()) && c.iter().any(|x| *x > q0()),
            None => false,
        }
    }

    /// The base together with its parity data.
    pub fn datum(&self) -> CartanDatum {
        CartanDatum { sigma: self.sigma.clone(), tau: self.tau.clone() }
    }

    /// Level of a weight: `(lambda, delta)`.
    pub fn level(&self, lam: &Weight) -> Q {
        match &self.delta {
            Some(d) => self.pair(lam, d),
            None => q0(),
        }
    }

    /// Rebuild the model on a different base of the same root system.
    /// Validates that the new base generates the same real-root set.
    pub fn rebased(&self, new_sigma: Vec<Weight>) -> Result<AlgebraModel, String> {
        if new_sigma.len() != self.sigma.len() {
            return Err("rebase: wrong number of simple roots".into());
        }
        let tau: Vec<bool> = new_sigma
            .iter()
            .map(|a| self.parity(a).ok_or_else(|| "rebase: root outside the lattice".to_string()))
            .collect::<Result<_, _>>()?;
        for a in &new_sigma {
            if !self.is_real_root(a) {
                return Err(format!("rebase: {a:?} is not a real root"));
            }
        }
        let data = ModelData {
            label: self.label.clone(),
            space: self.space.clone(),
            sigma: new_sigma,
            tau,
            s_indices: Vec::new(),
            dual_coxeter: self.dual_coxeter.clone(),
            twist: self.twist,
            imaginary_mults: self.imaginary_mults.clone(),
        };
        let model = finish_model(self.family.clone(), data)?;
        if model.real_roots != self.real_roots {
            return Err("rebase: the given set is not a base of this root system".into());
        }
        Ok(model)
    }
}

fn rhs_vector(space: &Space, v: &Weight) -> Vec<Q> {
    let mut rhs = v.fin.clone();
    if space.affine {
        rhs.push(v.null.clone());
    }
    rhs
}

fn sigma_matrix(space: &Space, sigma: &[Weight]) -> Matrix {
    let rows = space.fin_dim() + if space.affine { 1 } else { 0 };
    let mut m = vec![vec![q0(); sigma.len()]; rows];
    for (c, a) in sigma.iter().enumerate() {
        for r in 0..space.fin_dim() {
            m[r][c] = a.fin[r].clone();
        }
        if space.affine {
            m[space.fin_dim()][c] = a.null.clone();
        }
    }
    m
}

/// Solve `2(rho, alpha) = (alpha, alpha)` for all simple roots, with the
/// null-root component of `rho` fixed to zero and free coordinates zeroed.
pub fn weyl_vector(space: &Space, sigma: &[Weight]) -> Result<Weight, String> {
    // Unknowns: fin coordinates (+ Lambda_0 coefficient when affine).
    let cols = space.fin_dim() + if space.affine { 1 } else { 0 };
    let mut m = vec![vec![q0(); cols]; sigma.len()];
    let mut rhs = Vec::with_capacity(sigma.len());
    for (r, a) in sigma.iter().enumerate() {
        for j in 0..space.fin_dim() {
            // (b_j, alpha)
            let mut e = space.zero();
            e.fin[j] = qi(1);
            m[r][j] = pair(space, &e, a);
        }
        if space.affine {
            // (Lambda_0, alpha) = null-coefficient of alpha
            m[r][space.fin_dim()] = a.null.clone();
        }
        rhs.push(pair(space, a, a) / qi(2));
    }
    let x = LinSolver::new(&m)
        .solve(&rhs)
        .ok_or_else(|| "weyl_vector: inconsistent system".to_string())?;
    let mut rho = space.zero();
    rho.fin = x[..space.fin_dim()].to_vec();
    if space.affine {
        rho.lam0 = x[space.fin_dim()].clone();
    }
    Ok(rho)
}

/// Odd reflexion at the isotropic simple root with index `s`.
pub fn odd_reflexion(space: &Space, datum: &CartanDatum, s: usize) -> Result<CartanDatum, String> {
    if s >= datum.sigma.len() {
        return Err("odd_reflexion: index out of range".into());
    }
    if !datum.tau[s] {
        return Err("odd_reflexion: root is not odd".into());
    }
    let alpha_s = &datum.sigma[s];
    if !pair(space, alpha_s, alpha_s).is_zero() {
        return Err("odd_reflexion: root is not isotropic".into());
    }
    let mut sigma = Vec::with_capacity(datum.sigma.len());
    let mut tau = Vec::with_capacity(datum.sigma.len());
    for (i, a) in datum.sigma.iter().enumerate() {
        if i == s {
            sigma.push(a.neg());
            tau.push(true);
        } else if pair(space, alpha_s, a).is_zero() {
            sigma.push(a.clone());
            tau.push(datum.tau[i]);
        } else {
            sigma.push(a.add(alpha_s));
            tau.push(!datum.tau[i]);
        }
    }
    Ok(CartanDatum { sigma, tau })
}

fn base_key(sigma: &[Weight]) -> BTreeSet<Weight> {
    sigma.iter().cloned().collect()
}

/// Breadth-first closure of odd reflexions at isotropic simple roots.
pub fn spine_of(space: &Space, start: &CartanDatum, cap: usize) -> Result<SpineGraph, String> {
    let mut nodes: Vec<CartanDatum> = vec![start.clone()];
    let mut keys: BTreeMap<BTreeSet<Weight>, usize> = BTreeMap::new();
    keys.insert(base_key(&start.sigma), 0);
    let mut edges = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(idx) = queue.pop_front() {
        let datum = nodes[idx].clone();
        for s in 0..datum.sigma.len() {
            if !datum.tau[s] || !pair(space, &datum.sigma[s], &datum.sigma[s]).is_zero() {
                continue;
            }
            let next = odd_reflexion(space, &datum, s)?;
            let key = base_key(&next.sigma);
            let to = match keys.get(&key) {
                Some(&i) => i,
                None => {
                    if nodes.len() >= cap {
                        return Err(format!("spine exceeded the node cap {cap}"));
                    }
                    nodes.push(next);
                    keys.insert(key, nodes.len() - 1);
                    queue.push_back(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
            edges.push((idx, to, datum.sigma[s].clone()));
        }
    }
    Ok(SpineGraph { nodes, edges })
}

/// Highest-weight transport across one odd reflexion: `lam_plus_rho` stays
/// put when it pairs nontrivially with the isotropic root, else moves by it.
pub fn hwt_transport(space: &Space, lam_plus_rho: &Weight, alpha: &Weight) -> Result<Weight, String> {
    if !pair(space, alpha, alpha).is_zero() {
        return Err("hwt_transport: root is not isotropic".into());
    }
    if pair(space, lam_plus_rho, alpha).is_zero() {
        Ok(lam_plus_rho.add(alpha))
    } else {
        Ok(lam_plus_rho.clone())
    }
}

/// Principal roots: even simple roots and doubles of odd anisotropic simple
/// roots, over all spine nodes.
pub fn principal_roots(space: &Space, spine: &SpineGraph) -> Vec<Weight> {
    let mut out: BTreeSet<Weight> = BTreeSet::new();
    for node in &spine.nodes {
        for (a, odd) in node.sigma.iter().zip(&node.tau) {
            if !odd {
                out.insert(a.clone());
            } else if !pair(space, a, a).is_zero() {
                out.insert(a.scale(&qi(2)));
            }
        }
    }
    out.into_iter().collect()
}

/// Flags (a)-(d) of the nice-pair properties for an affine model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicePairReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub nice: bool,
}

pub fn nice_pair_report(model: &AlgebraModel) -> Result<NicePairReport, String> {
    if !model.is_affine() {
        return Err("nice_pair_report expects an affine model".into());
    }
    let space = &model.space;
    let dot_sigma: Vec<Weight> = model.sigma[1..].to_vec();
    // (a): dot-Sigma is a base of the finite part: every real root with zero
    // delta-coefficient has uniform-sign coordinates over dot-Sigma.
    let dot_solver = LinSolver::new(&sigma_matrix(
        &Space { affine: false, ..space.clone() },
        &dot_sigma
            .iter()
            .map(|w| Weight { fin: w.fin.clone(), null: q0(), lam0: q0() })
            .collect::<Vec<_>>(),
    ));
    let mut a_flag = true;
    for (class, shifts) in model.real_roots.items() {
        if !shifts.contains(0) {
            continue;
        }
        match dot_solver.solve(&class.fin) {
            None => {
                a_flag = false;
            }
            Some(c) => {
                let pos = c.iter().all(|x| *x >= q0());
                let neg = c.iter().all(|x| *x <= q0());
                if !(pos || neg) {
                    a_flag = false;
                }
            }
        }
    }
    // (b)
    let in_s = |w: &Weight| model.s_set.contains(w);
    let mut b_flag = true;
    for alpha in &model.sigma {
        if in_s(alpha) {
            continue;
        }
        let ok = model.norm(alpha) > q0()
            || model
                .s_set
                .iter()
                .any(|beta| model.norm(&alpha.add(beta)) > q0());
        if !ok {
            b_flag = false;
        }
    }
    // (c)
    let c_flag = model.sigma.iter().all(|a| model.norm(a) >= q0());
    // (d): rho - h^vee Lambda_0 = sum over positive finite roots alpha of
    // k_alpha * alpha with k_alpha (alpha,alpha) >= 0 (isotropic roots are
    // unconstrained).
    let target = model
        .rho
        .sub(&model.lambda0.clone().unwrap().scale(&model.dual_coxeter));
    let mut columns: Vec<Vec<Q>> = Vec::new();
    for (class, shifts) in model.real_roots.items() {
        if !shifts.contains(0) {
            continue;
        }
        let w = Weight { fin: class.fin.clone(), null: q0(), lam0: q0() };
        if !model.is_positive_root(&w) {
            continue;
        }
        let n = model.norm(&w);
        if n > q0() {
            columns.push(w.fin.clone());
        } else if n < q0() {
            columns.push(w.neg().fin.clone());
        } else {
            columns.push(w.fin.clone());
            columns.push(w.neg().fin.clone());
        }
    }
    let rows = space.fin_dim();
    let mut a_mat = vec![vec![q0(); columns.len()]; rows];
    for (j, col) in columns.iter().enumerate() {
        for i in 0..rows {
            a_mat[i][j] = col[i].clone();
        }
    }
    let d_flag = lp_feasible(&a_mat, &target.fin);
    let nice = a_flag && b_flag && (c_flag || d_flag);
    Ok(NicePairReport { a: a_flag, b: b_flag, c: c_flag, d: d_flag, nice })
}

/// Default spine-size guard.
pub const SPINE_CAP: usize = 100_000;

fn compute_real_roots(
    space: &Space,
    spine: &SpineGraph,
    affine: bool,
) -> Result<ProgressionSet, String> {
    // Seed: every simple root of every spine node, as an explicit shift.
    let mut set = ProgressionSet::new();
    for node in &spine.nodes {
        for a in &node.sigma {
            set.insert(space, a);
            set.insert(space, &a.neg());
        }
    }
    // Close under reflections by anisotropic members (progression-level).
    let cap = 200;
    let mut pass = 0;
    loop {
        pass += 1;
        if pass > cap {
            return Err("real-root closure did not stabilize".into());
        }
        let mut next = set.clone();
        for (class, shifts) in set.items() {
            let w = Weight { fin: class.fin.clone(), null: q0(), lam0: q0() };
            if pair(space, &w, &w).is_zero() {
                continue;
            }
            next = next.union(&crate::rootsys::reflect_set_by_item(space, &next, &w, shifts)?);
        }
        if next == set {
            break;
        }
        set = next;
    }
    // Adjoin doubles of odd anisotropic elements. Which classes are "odd" is
    // a property of the grading; here every seed simple root that is odd
    // anisotropic contributes 2*alpha, and reflections preserve parity, so
    // closing the doubled seeds under the same reflections is exact.
    let mut doubles = ProgressionSet::new();
    for node in &spine.nodes {
        for (a, odd) in node.sigma.iter().zip(&node.tau) {
            if *odd && !pair(space, a, a).is_zero() {
                doubles.insert(space, &a.scale(&qi(2)));
                doubles.insert(space, &a.scale(&qi(-2)));
            }
        }
    }
    if !doubles.is_empty() {
        let mut pass = 0;
        loop {
            pass += 1;
            if pass > cap {
                return Err("real-root closure (doubles) did not stabilize".into());
            }
            let mut next = doubles.clone();
            for (class, shifts) in set.items() {
                let w = Weight { fin: class.fin.clone(), null: q0(), lam0: q0() };
                if pair(space, &w, &w).is_zero() {
                    continue;
                }
                next = crate::rootsys::reflect_set_by_item(space, &next, &w, shifts)?.union(&next);
            }
            if next == doubles {
                break;
            }
            doubles = next;
        }
        set = set.union(&doubles);
    }
    if !affine {
        // Finite sets must have all shifts at zero.
        for (_, shifts) in set.items() {
            if shifts.members_in(-1, 1).iter().any(|s| *s != 0) || !shifts.is_finite() {
                return Err("finite model produced nonzero delta-shifts".into());
            }
        }
    }
    Ok(set)
}

fn finish_model(family: Family, data: ModelData) -> Result<AlgebraModel, String> {
    let space = data.space;
    let affine = data.twist != Twist::Finite;
    let datum = CartanDatum { sigma: data.sigma.clone(), tau: data.tau.clone() };
    let solver = LinSolver::new(&sigma_matrix(&space, &data.sigma));
    if solver.rank() != data.sigma.len() {
        return Err(format!("{}: simple roots are linearly dependent", data.label));
    }
    let rho = weyl_vector(&space, &data.sigma)?;
    let spine = spine_of(&space, &datum, SPINE_CAP)?;
    let real_roots = compute_real_roots(&space, &spine, affine)?;
    let principal = principal_roots(&space, &spine);
    let pi_sharp: Vec<Weight> = principal
        .iter()
        .filter(|a| pair(&space, a, a) > q0())
        .cloned()
        .collect();
    let (delta, lambda0) = if affine {
        (Some(space.delta()), Some(space.lambda0()))
    } else {
        (None, None)
    };
    let mut model = AlgebraModel {
        family,
        twist: data.twist,
        label: data.label,
        s_set: data.s_indices.iter().map(|&i| data.sigma[i].clone()).collect(),
        sigma: data.sigma,
        tau: data.tau,
        space,
        rho,
        dual_coxeter: data.dual_coxeter,
        delta,
        lambda0,
        marks: None,
        imaginary_mults: data.imaginary_mults,
        real_roots,
        spine,
        principal,
        pi_sharp,
        solver,
    };
    if affine {
        let marks = model
            .sigma_coords_int(&model.space.delta())
            .ok_or_else(|| format!("{}: delta is not an integral combination of sigma", model.label))?;
        if marks.iter().any(|&c| c <= 0) {
            return Err(format!("{}: marks are not positive: {marks:?}", model.label));
        }
        model.marks = Some(marks);
        // Positivity sanity: every real-root class decomposes with a uniform
        // sign over sigma, on a small shift window.
        for (class, shifts) in model.real_roots.items() {
            for s in shifts.members_in(-3, 3) {
                let w = Weight {
                    fin: class.fin.clone(),
                    null: qi(s),
                    lam0: q0(),
                };
                let c = model
                    .sigma_coords_int(&w)
                    .ok_or_else(|| format!("{}: root outside the root lattice", model.label))?;
                let pos = c.iter().all(|x| *x >= 0);
                let neg = c.iter().all(|x| *x <= 0);
                if !(pos || neg) {
                    return Err(format!(
                        "{}: base is not a base (mixed-sign root {:?})",
                        model.label, w
                    ));
                }
            }
        }
        // (rho, delta) must equal the catalog dual Coxeter number.
        let rd = model.pair(&model.rho, &model.space.delta());
        if rd != model.dual_coxeter {
            return Err(format!(
                "{}: (rho, delta) = {} but the catalog says h^vee = {}",
                model.label,
                crate::ratio::q_to_string(&rd),
                crate::ratio::q_to_string(&model.dual_coxeter)
            ));
        }
    } else {
        for (class, shifts) in model.real_roots.items() {
            if shifts.contains(0) {
                let w = Weight { fin: class.fin.clone(), null: q0(), lam0: q0() };
                let c = model
                    .sigma_coords_int(&w)
                    .ok_or_else(|| format!("{}: root outside the root lattice", model.label))?;
                let pos = c.iter().all(|x| *x >= 0);
                let neg = c.iter().all(|x| *x <= 0);
                if !(pos || neg) {
                    return Err(format!("{}: base is not a base", model.label));
                }
            }
        }
    }
    Ok(model)
}

/// Builds a catalog model.
pub fn build_algebra(family: Family, twist: Twist) -> Result<AlgebraModel, String> {
    let data = catalog::model_data(&family, twist)?;
    finish_model(family, data)
}

/// Convenience: parse `(letter, m, n, twist, a)` as the CLI does.
pub fn build_from_selection(
    letter: &str,
    m: i64,
    n: i64,
    twist: Option<u32>,
    a_param: Option<Q>,
    lie: bool,
) -> Result<AlgebraModel, String> {
    let t = match twist {
        None | Some(0) => Twist::Finite,
        Some(1) => Twist::One,
        Some(2) => Twist::Two,
        Some(4) => Twist::Four,
        Some(k) => return Err(format!("unsupported twist {k}")),
    };
    if m < 0 || n < 0 {
        return Err("negative rank".into());
    }
    let (m, n) = (m as usize, n as usize);
    let family = if lie {
        match letter {
            "A" => Family::LieA(m),
            "B" => Family::LieB(m),
            "C" => Family::LieC(m),
            "D" => Family::LieD(m),
            _ => return Err(format!("unknown Lie family {letter:?}")),
        }
    } else {
        match letter {
            "A" => Family::A { m, n },
            "B" => Family::B { m, n },
            "D" => {
                if (m, n) == (2, 1) || a_param.is_some() {
                    let a = a_param.ok_or_else(|| "D(2|1,a) requires -a".to_string())?;
                    if (m, n) != (2, 1) {
                        return Err("the a parameter only applies to D(2|1,a)".into());
                    }
                    Family::D21a { a }
                } else {
                    Family::D { m, n }
                }
            }
            "G" | "G3" => Family::G3,
            "F" | "F4" => Family::F4,
            _ => return Err(format!("unknown family {letter:?}")),
        }
    };
    build_algebra(family, t)
}

/// Mirror of the paper's dual-Coxeter table, used by tests and by
/// `classify_level` for table-only Lie families.
pub fn lie_coxeter_number(family: &Family) -> Option<i64> {
    Some(match family {
        Family::LieA(l) => *l as i64 + 1,
        Family::LieB(l) => 2 * *l as i64,
        Family::LieC(l) => 2 * *l as i64,
        Family::LieD(l) => 2 * *l as i64 - 2,
        _ => return None,
    })
}

/// Lacety of `Delta^#` for an affine model: the square-length ratio of a
/// long and a short root of `Delta^#`.
pub fn sharp_lacety(model: &AlgebraModel) -> Result<i64, String> {
    let mut norms: BTreeSet<Q> = BTreeSet::new();
    for (class, _) in model.real_roots.items() {
        let w = Weight { fin: class.fin.clone(), null: q0(), lam0: q0() };
        let n = model.norm(&w);
        if n > q0() && model.parity(&w) == Some(false) {
            norms.insert(n);
        }
    }
    let max = norms.iter().next_back().ok_or("no positive-square even roots")?.clone();
    let min = norms.iter().next().unwrap().clone();
    let r = max / min;
    if !is_int(&r) {
        return Err("non-integral lacety".into());
    }
    Ok(to_i64(&r).unwrap())
}

pub use crate::catalog::family_label;

/// Serializes the spine as a JSON adjacency structure.
pub fn spine_to_json(model: &AlgebraModel) -> serde_json::Value {
    use serde_json::json;
    let nodes: Vec<_> = model
        .spine
        .nodes
        .iter()
        .map(|d| {
            json!({
                "sigma": d.sigma.iter().map(|w| w.to_json(&model.space)).collect::<Vec<_>>(),
                "tau": d.tau.clone(),
            })
        })
        .collect();
    let edges: Vec<_> = model
        .spine
        .edges
        .iter()
        .map(|(a, b, r)| json!({"from": a, "to": b, "root": r.to_json(&model.space)}))
        .collect();
    json!({"nodes": nodes, "edges": edges})
}

#[allow(unused)]
fn unused_helpers(_: &Q) {
    let _ = q(1, 1);
}
