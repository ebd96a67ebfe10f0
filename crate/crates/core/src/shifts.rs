//! Sets of integer `delta`-shifts attached to one root class.
//!
//! A `ShiftSet` is a finite union of full arithmetic progressions
//! `r + m Z` (all with one modulus `m`) together with finitely many
//! extra points. This class of sets is closed under union, intersection,
//! difference, mirror `s -> -s`, translation and integer dilation, which is
//! exactly what the reflection/closure steps need.

use std::collections::BTreeSet;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b)).abs() * b.abs()
    }
}

pub fn rem_euclid(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShiftSet {
    /// Modulus of the periodic part; 0 means there is no periodic part.
    pub modulus: i64,
    /// Residues of the periodic part in `[0, modulus)`.
    pub residues: BTreeSet<i64>,
    /// Extra points not covered by the periodic part.
    pub extra: BTreeSet<i64>,
}

impl ShiftSet {
    pub fn empty() -> ShiftSet {
        ShiftSet { modulus: 0, residues: BTreeSet::new(), extra: BTreeSet::new() }
    }

    pub fn finite<I: IntoIterator<Item = i64>>(points: I) -> ShiftSet {
        ShiftSet { modulus: 0, residues: BTreeSet::new(), extra: points.into_iter().collect() }
    }

    pub fn progression(modulus: i64, residue: i64) -> ShiftSet {
        assert!(modulus > 0);
        let mut s = ShiftSet::empty();
        s.modulus = modulus;
        s.residues.insert(rem_euclid(residue, modulus));
        s
    }

    /// All of Z.
    pub fn all() -> ShiftSet {
        ShiftSet::progression(1, 0)
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.extra.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, s: i64) -> bool {
        if self.extra.contains(&s) {
            return true;
        }
        self.modulus > 0 && self.residues.contains(&rem_euclid(s, self.modulus))
    }

    /// Canonical form: minimal modulus, residues normalized, extras not
    /// covered by the periodic part.
    pub fn canonicalize(&mut self) {
        if self.residues.is_empty() {
            self.modulus = 0;
            return;
        }
        let m = self.modulus;
        // Find the smallest period p | m with residues + p = residues (mod m).
        let mut best = m;
        for p in 1..=m {
            if m % p != 0 {
                continue;
            }
            let shifted: BTreeSet<i64> =
                self.residues.iter().map(|r| rem_euclid(r + p, m)).collect();
            if shifted == self.residues {
                best = p;
                break;
            }
        }
        if best != m {
            self.residues = self.residues.iter().map(|r| rem_euclid(*r, best)).collect();
            self.modulus = best;
        }
        let m = self.modulus;
        self.extra.retain(|s| !self.residues.contains(&rem_euclid(*s, m)));
    }

    fn rescaled(&self, new_modulus: i64) -> ShiftSet {
        if self.residues.is_empty() {
            return self.clone();
        }
        assert!(new_modulus % self.modulus == 0);
        let mut residues = BTreeSet::new();
        for r in &self.residues {
            let mut x = *r;
            while x < new_modulus {
                residues.insert(x);
                x += self.modulus;
            }
        }
        ShiftSet { modulus: new_modulus, residues, extra: self.extra.clone() }
    }

    pub fn union(&self, other: &ShiftSet) -> ShiftSet {
        let mut out = if self.residues.is_empty() && other.residues.is_empty() {
            ShiftSet::finite(self.extra.iter().chain(other.extra.iter()).cloned())
        } else {
            let m = if self.residues.is_empty() {
                other.modulus
            } else if other.residues.is_empty() {
                self.modulus
            } else {
                lcm(self.modulus, other.modulus)
            };
            let a = if self.residues.is_empty() { self.clone() } else { self.rescaled(m) };
            let b = if other.residues.is_empty() { other.clone() } else { other.rescaled(m) };
            ShiftSet {
                modulus: m,
                residues: a.residues.union(&b.residues).cloned().collect(),
                extra: a.extra.union(&b.extra).cloned().collect(),
            }
        };
        out.canonicalize();
        out
    }

    pub fn intersect(&self, other: &ShiftSet) -> ShiftSet {
        let mut extra: BTreeSet<i64> = BTreeSet::new();
        for s in &self.extra {
            if other.contains(*s) {
                extra.insert(*s);
            }
        }
        for s in &other.extra {
            if self.contains(*s) {
                extra.insert(*s);
            }
        }
        let mut out = ShiftSet::finite(extra);
        if !self.residues.is_empty() && !other.residues.is_empty() {
            let m = lcm(self.modulus, other.modulus);
            let a = self.rescaled(m);
            let b = other.rescaled(m);
            out.modulus = m;
            out.residues = a.residues.intersection(&b.residues).cloned().collect();
            if out.residues.is_empty() {
                out.modulus = 0;
            }
        }
        out.canonicalize();
        out
    }

    pub fn difference(&self, other: &ShiftSet) -> ShiftSet {
        if other.residues.is_empty() {
            // Removing finitely many points from a periodic set: keep the
            // periodic part only if none of its points are removed.
            let removed_from_periodic: Vec<i64> = other
                .extra
                .iter()
                .cloned()
                .filter(|s| {
                    self.modulus > 0 && self.residues.contains(&rem_euclid(*s, self.modulus))
                })
                .collect();
            if !removed_from_periodic.is_empty() {
                panic!(
                    "difference would puncture an infinite progression; \
                     not representable as a shift set"
                );
            }
            let mut out = self.clone();
            out.extra = out.extra.difference(&other.extra).cloned().collect();
            out.canonicalize();
            return out;
        }
        let m = if self.residues.is_empty() {
            other.modulus
        } else {
            lcm(self.modulus, other.modulus)
        };
        let b = other.rescaled(m);
        let mut out = ShiftSet::empty();
        if !self.residues.is_empty() {
            let a = self.rescaled(m);
            out.modulus = m;
            for r in &a.residues {
                // r + mZ minus b: b's extras can only puncture; forbid that.
                if !b.residues.contains(r) {
                    if b.extra.iter().any(|s| rem_euclid(*s, m) == *r) {
                        panic!("difference would puncture an infinite progression");
                    }
                    out.residues.insert(*r);
                }
            }
            if out.residues.is_empty() {
                out.modulus = 0;
            }
        }
        for s in &self.extra {
            if !b.contains(*s) {
                out.extra.insert(*s);
            }
        }
        out.canonicalize();
        out
    }

    /// `{-s : s in self}`.
    pub fn mirror(&self) -> ShiftSet {
        let mut out = ShiftSet::empty();
        out.extra = self.extra.iter().map(|s| -s).collect();
        if !self.residues.is_empty() {
            out.modulus = self.modulus;
            out.residues =
                self.residues.iter().map(|r| rem_euclid(-r, self.modulus)).collect();
        }
        out.canonicalize();
        out
    }

    pub fn translate(&self, c: i64) -> ShiftSet {
        let mut out = ShiftSet::empty();
        out.extra = self.extra.iter().map(|s| s + c).collect();
        if !self.residues.is_empty() {
            out.modulus = self.modulus;
            out.residues =
                self.residues.iter().map(|r| rem_euclid(r + c, self.modulus)).collect();
        }
        out
    }

    /// `{c * s}` for an integer `c`.
    pub fn dilate(&self, c: i64) -> ShiftSet {
        if c == 0 {
            return if self.is_empty() { ShiftSet::empty() } else { ShiftSet::finite([0]) };
        }
        let mut out = ShiftSet::empty();
        out.extra = self.extra.iter().map(|s| s * c).collect();
        if !self.residues.is_empty() {
            out.modulus = self.modulus * c.abs();
            out.residues =
                self.residues.iter().map(|r| rem_euclid(r * c, out.modulus)).collect();
        }
        out
    }

    /// Difference set `{a - b : a in self, b in other}` (other nonempty);
    /// used by progression-level reflection.
    pub fn minkowski_sub(&self, other: &ShiftSet) -> ShiftSet {
        let mut out = ShiftSet::empty();
        let mut add_pair = |a_periodic: Option<(i64, i64)>, b_periodic: Option<(i64, i64)>| {
            // combine one component (residue,modulus or point,0) from each side
            match (a_periodic, b_periodic) {
                (Some((ra, ma)), Some((rb, mb))) => {
                    let g = if ma == 0 && mb == 0 { 0 } else { gcd(ma, mb) };
                    let piece = if g == 0 {
                        ShiftSet::finite([ra - rb])
                    } else {
                        ShiftSet::progression(g, ra - rb)
                    };
                    out = out.union(&piece);
                }
                _ => unreachable!(),
            }
        };
        let a_parts: Vec<(i64, i64)> = self
            .residues
            .iter()
            .map(|r| (*r, self.modulus))
            .chain(self.extra.iter().map(|s| (*s, 0)))
            .collect();
        let b_parts: Vec<(i64, i64)> = other
            .residues
            .iter()
            .map(|r| (*r, other.modulus))
            .chain(other.extra.iter().map(|s| (*s, 0)))
            .collect();
        for a in &a_parts {
            for b in &b_parts {
                add_pair(Some(*a), Some(*b));
            }
        }
        out
    }

    /// Enumerate members in `[lo, hi]`.
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        let mut out: BTreeSet<i64> = self.extra.iter().cloned().filter(|s| lo <= *s && *s <= hi).collect();
        if !self.residues.is_empty() {
            let m = self.modulus;
            for r in &self.residues {
                let mut s = r + ((lo - r).div_euclid(m)) * m;
                if s < lo {
                    s += m;
                }
                while s <= hi {
                    out.insert(s);
                    s += m;
                }
            }
        }
        out.into_iter().collect()
    }

    /// Smallest nonnegative member, if any (None for the empty set).
    pub fn min_nonneg(&self) -> Option<i64> {
        let mut best: Option<i64> = None;
        for s in &self.extra {
            if *s >= 0 {
                best = Some(best.map_or(*s, |b: i64| b.min(*s)));
                break; // extras sorted ascending
            }
        }
        if let Some(r) = self.residues.iter().next() {
            best = Some(best.map_or(*r, |b| b.min(*r)));
        }
        best
    }
}

/// Solutions `s` of `x + s*y ∈ Z` over integers `s`: empty, all, or one
/// progression. `x`, `y` rational.
pub fn integrality_solutions(x: &crate::ratio::Q, y: &crate::ratio::Q) -> ShiftSet {
    use crate::ratio::is_int;
    use num::Zero;
    if y.is_zero() {
        return if is_int(x) { ShiftSet::all() } else { ShiftSet::empty() };
    }
    // x + s*y ∈ Z  <=>  s*p ≡ -x*q' ... work with denominators explicitly:
    // write y = a/b (reduced), x = c/d (reduced). Then x + s a/b ∈ Z iff
    // (c b + s a d) ≡ 0 mod (d b) ... solve the linear congruence exactly.
    let a = y.numer().clone();
    let b = y.denom().clone();
    let c = x.numer().clone();
    let d = x.denom().clone();
    // condition: c/d + s a/b ∈ Z  <=>  (c*b + s*a*d) / (d*b) ∈ Z
    use num::bigint::BigInt;
    use num::Integer;
    let m: BigInt = d.clone() * b.clone();
    let aa: BigInt = a * d;
    let cc: BigInt = c * b;
    // Solve aa*s ≡ -cc (mod m).
    let g = aa.gcd(&m);
    let rhs = -cc;
    if !(rhs.clone() % g.clone()).is_zero() {
        return ShiftSet::empty();
    }
    let m2: BigInt = m.clone() / g.clone();
    let aa2 = aa / g.clone();
    let rhs2 = rhs / g;
    // inverse of aa2 mod m2 via extended gcd
    let e = aa2.extended_gcd(&m2);
    // e.gcd == 1, e.x * aa2 ≡ 1 (mod m2)
    let inv = e.x;
    let s0 = (inv * rhs2).mod_floor(&m2);
    use num::ToPrimitive;
    let m2i = m2.to_i64().expect("modulus overflow");
    if m2i == 0 {
        // m2 == 0 can't happen: m >= 1
        unreachable!();
    }
    let s0i = s0.to_i64().expect("residue overflow");
    if m2i == 1 {
        ShiftSet::all()
    } else {
        ShiftSet::progression(m2i, s0i)
    }
}

/// Solutions of `x + s*y` being an odd integer.
pub fn odd_integrality_solutions(x: &crate::ratio::Q, y: &crate::ratio::Q) -> ShiftSet {
    use crate::ratio::{is_odd_int, qi};
    use num::Zero;
    if y.is_zero() {
        return if is_odd_int(x) { ShiftSet::all() } else { ShiftSet::empty() };
    }
    // (x + s y) odd  <=>  (x + s y - 1)/2 ∈ Z  <=>  (x-1)/2 + s (y/2) ∈ Z.
    let half = qi(1) / qi(2);
    integrality_solutions(&((x.clone() - qi(1)) * half.clone()), &(y.clone() * half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{q, qi};

    #[test]
    fn canonical_merging() {
        // {0, 3} mod 6 is really 0 mod 3.
        let mut s = ShiftSet {
            modulus: 6,
            residues: [0, 3].into_iter().collect(),
            extra: BTreeSet::new(),
        };
        s.canonicalize();
        assert_eq!(s.modulus, 3);
        assert_eq!(s.residues.iter().cloned().collect::<Vec<_>>(), vec![0]);
        // extras covered by the periodic part disappear
        let mut s = ShiftSet::progression(2, 1);
        s.extra.insert(5);
        s.extra.insert(4);
        s.canonicalize();
        assert_eq!(s.extra.iter().cloned().collect::<Vec<_>>(), vec![4]);
    }

    #[test]
    fn boolean_ops() {
        let evens = ShiftSet::progression(2, 0);
        let odds = ShiftSet::progression(2, 1);
        let all = evens.union(&odds);
        assert_eq!(all, ShiftSet::all());
        assert!(evens.intersect(&odds).is_empty());
        assert_eq!(all.difference(&odds), evens);
        let fin = ShiftSet::finite([1, 4]);
        assert_eq!(evens.union(&fin).members_in(0, 5), vec![0, 1, 2, 4]);
        assert_eq!(evens.union(&fin).difference(&ShiftSet::finite([1])).members_in(0, 5), vec![0, 2, 4]);
    }

    #[test]
    fn minkowski() {
        // (0 + 2Z) - 3*(1 + 2Z)-ish via dilate + minkowski_sub
        let a = ShiftSet::progression(2, 0);
        let b = ShiftSet::progression(2, 1).dilate(3); // 3 + 6Z
        let d = a.minkowski_sub(&b); // 0-3 + gcd(2,6)Z = -3 + 2Z = odds
        assert_eq!(d, ShiftSet::progression(2, 1));
        let f = ShiftSet::finite([5]);
        assert_eq!(a.minkowski_sub(&f), ShiftSet::progression(2, 1));
    }

    #[test]
    fn integrality() {
        // 1/2 + s * 1/2 ∈ Z  <=> s odd
        assert_eq!(integrality_solutions(&q(1, 2), &q(1, 2)), ShiftSet::progression(2, 1));
        // 1/3 + s * 2/3 ∈ Z <=> 2s ≡ -1 mod 3 <=> s ≡ 1 mod 3
        assert_eq!(integrality_solutions(&q(1, 3), &q(2, 3)), ShiftSet::progression(3, 1));
        assert_eq!(integrality_solutions(&q(1, 2), &qi(0)), ShiftSet::empty());
        assert_eq!(integrality_solutions(&qi(4), &qi(0)), ShiftSet::all());
        // no solution: 1/2 + s*1/3: need 3 + 2s ≡ 0 mod 6: 2s ≡ 3: impossible
        assert_eq!(integrality_solutions(&q(1, 2), &q(1, 3)), ShiftSet::empty());
        // odd variant: s * 1 odd <=> s odd
        assert_eq!(odd_integrality_solutions(&qi(0), &qi(1)), ShiftSet::progression(2, 1));
        assert_eq!(odd_integrality_solutions(&qi(1), &qi(0)), ShiftSet::all());
        assert_eq!(odd_integrality_solutions(&qi(2), &qi(0)), ShiftSet::empty());
    }
}
