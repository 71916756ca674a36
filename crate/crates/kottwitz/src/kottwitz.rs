//! Kottwitz sets: sigma-conjugacy classes described by Newton point and
//! component invariant, with bounded-by-a-coweight enumeration.

use std::collections::BTreeSet;

use num::traits::Signed;
use num::{One, Zero};

use crate::error::{KottwitzError, Result};
use crate::linalg::{Int, Rat};
use crate::rootdata::pi1::{Pi1Element, Pi1Group};
use crate::rootdata::{BasedRootDatum, Coweight, LeviDescriptor};

/// Default cap on Weyl orbits walked during enumeration.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;
/// Default cap on the size of the integral search box.
pub const DEFAULT_BOX_CAP: u64 = 20_000_000;

#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    pub orbit_cap: usize,
    pub box_cap: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            orbit_cap: DEFAULT_ORBIT_CAP,
            box_cap: DEFAULT_BOX_CAP,
        }
    }
}

/// A sigma-conjugacy class: dominant Newton point plus component invariant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SigmaClass {
    pub newton: Coweight,
    pub kappa: Pi1Element,
}

/// Standard representative of an isocrystal on `Z^n`: a permutation
/// composed with integral Frobenius exponents.
#[derive(Clone, Debug)]
pub struct GlnRepresentative {
    pub perm: Vec<usize>,
    pub exps: Vec<i64>,
}

impl GlnRepresentative {
    pub fn new(perm: Vec<usize>, exps: Vec<i64>) -> Result<Self> {
        let n = perm.len();
        if exps.len() != n {
            return Err(KottwitzError::DimensionMismatch {
                expected: n,
                got: exps.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(KottwitzError::InvalidInput(format!(
                    "not a permutation: {perm:?}"
                )));
            }
            seen[p] = true;
        }
        Ok(GlnRepresentative { perm, exps })
    }
}

pub(crate) fn require_full_gl(datum: &BasedRootDatum) -> Result<()> {
    match datum.gl_blocks() {
        Some(blocks) if blocks.len() == 1 && blocks[0] == (0, datum.rank) => Ok(()),
        _ => Err(KottwitzError::UnsupportedGroup(format!(
            "{} is not a split general linear datum",
            datum.label
        ))),
    }
}

/// Newton point and invariant of a standard representative.
pub fn newton_kappa_of_gln(
    datum: &BasedRootDatum,
    rep: &GlnRepresentative,
) -> Result<SigmaClass> {
    require_full_gl(datum)?;
    let n = datum.rank;
    if rep.perm.len() != n {
        return Err(KottwitzError::DimensionMismatch {
            expected: n,
            got: rep.perm.len(),
        });
    }
    let mut slopes: Vec<Rat> = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0i64;
        let mut total = 0i64;
        let mut i = start;
        loop {
            seen[i] = true;
            len += 1;
            total += rep.exps[i];
            i = rep.perm[i];
            if i == start {
                break;
            }
        }
        let slope = Rat::new(Int::from(total), Int::from(len));
        for _ in 0..len {
            slopes.push(slope.clone());
        }
    }
    slopes.sort();
    slopes.reverse();
    let group = Pi1Group::full(datum);
    let exps: Vec<Int> = rep.exps.iter().map(|&x| Int::from(x)).collect();
    Ok(SigmaClass {
        newton: Coweight(slopes),
        kappa: group.project(&exps),
    })
}

pub fn is_basic(datum: &BasedRootDatum, class: &SigmaClass) -> bool {
    datum.centralizer_nodes(&class.newton).len() == datum.ss_rank()
}

/// The basic class with invariant the image of `kappa_lift`.
pub fn basic_class_from_kappa(datum: &BasedRootDatum, kappa_lift: &Coweight) -> Result<SigmaClass> {
    let group = Pi1Group::full(datum);
    let kappa = group.project_coweight(kappa_lift)?;
    let newton = group.basic_newton(datum, &kappa);
    Ok(SigmaClass { newton, kappa })
}

/// Recovers the invariant of the class over a Levi `M` from the free
/// coordinates of the Newton point plus a torsion scan.
fn resolve_in_levi(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    newton: &Coweight,
    kappa: &Pi1Element,
) -> Result<Pi1Element> {
    let m = Pi1Group::new(datum, levi);
    let g = Pi1Group::full(datum);
    let free_q = m.free_values_q(newton);
    let mut free = Vec::with_capacity(free_q.len());
    for q in &free_q {
        if !q.denom().is_one() {
            return Err(KottwitzError::InvalidInput(format!(
                "{newton} is not integral over the Levi {:?}",
                levi.nodes
            )));
        }
        free.push(q.numer().clone());
    }
    let mut matches = Vec::new();
    for tau in m.torsion_elements() {
        let cand = m.from_parts(&free, &m.torsion_values(&tau));
        if m.transfer_to(&g, &cand) == *kappa {
            matches.push(cand);
        }
    }
    match matches.len() {
        1 => Ok(matches.pop().expect("nonempty")),
        0 => Err(KottwitzError::InvalidInput(format!(
            "invariant {kappa} does not lift over the Levi {:?}",
            levi.nodes
        ))),
        _ => Err(KottwitzError::InvalidRootDatum(
            "torsion transfer not injective".into(),
        )),
    }
}

/// Coherence check: the Newton point is dominant, twist-invariant and
/// integral over its centralizer, and the invariant matches it there.
pub fn validate_class(datum: &BasedRootDatum, class: &SigmaClass) -> Result<()> {
    let group = Pi1Group::full(datum);
    group.check_element(&class.kappa)?;
    if class.newton.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: class.newton.len(),
        });
    }
    if !datum.is_dominant(&class.newton) {
        return Err(KottwitzError::InvalidInput(format!(
            "Newton point {} not dominant",
            class.newton
        )));
    }
    if !datum.is_galois_invariant(&class.newton) {
        return Err(KottwitzError::InvalidInput(format!(
            "Newton point {} not twist-invariant",
            class.newton
        )));
    }
    let cent = LeviDescriptor::new(datum, &datum.centralizer_nodes(&class.newton))?;
    resolve_in_levi(datum, &cent, &class.newton, &class.kappa)?;
    Ok(())
}

/// Membership test for the generalized Kottwitz set `B(eps, delta)`.
pub fn in_generalized_kottwitz(
    datum: &BasedRootDatum,
    class: &SigmaClass,
    eps: &Pi1Element,
    delta: &Coweight,
) -> Result<bool> {
    validate_class(datum, class)?;
    let group = Pi1Group::full(datum);
    group.check_element(eps)?;
    if class.kappa != *eps {
        return Ok(false);
    }
    datum.dominance_leq(&class.newton, delta)
}

fn check_delta(datum: &BasedRootDatum, delta: &Coweight) -> Result<()> {
    if delta.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: delta.len(),
        });
    }
    if !datum.is_dominant(delta) {
        return Err(KottwitzError::InvalidInput(format!(
            "bound {delta} not dominant"
        )));
    }
    Ok(())
}

fn sort_classes(datum: &BasedRootDatum, set: BTreeSet<SigmaClass>) -> Vec<SigmaClass> {
    let phi = datum.degree_functional();
    let mut v: Vec<SigmaClass> = set.into_iter().collect();
    v.sort_by(|a, b| {
        let fa = datum.degree_value(&phi, &a.newton);
        let fb = datum.degree_value(&phi, &b.newton);
        fa.cmp(&fb)
            .then_with(|| a.newton.cmp(&b.newton))
            .then_with(|| a.kappa.cmp(&b.kappa))
    });
    v
}

/// Largest absolute coordinate attained on the Weyl orbit of `delta`;
/// falls back to a coarse pairing bound when the orbit is too large.
fn coordinate_bound(datum: &BasedRootDatum, delta: &Coweight, limits: &EnumerationLimits) -> Rat {
    let abs_max = |v: &Coweight| {
        v.0.iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    };
    match datum.weyl_orbit(delta, limits.orbit_cap.min(100_000)) {
        Ok(orbit) => orbit.iter().map(abs_max).max().unwrap_or_else(Rat::zero),
        Err(_) => {
            let pair_max = datum
                .positive()
                .iter()
                .map(|r| datum.pair_root(&r.root, delta).abs())
                .max()
                .unwrap_or_else(Rat::zero);
            let coroot_max = datum
                .positive()
                .iter()
                .flat_map(|r| r.coroot.iter())
                .map(|x| Rat::from_integer(x.abs()))
                .max()
                .unwrap_or_else(Rat::zero);
            let count = Rat::from_integer(Int::from(datum.positive().len() as i64));
            abs_max(delta) + count * pair_max * coroot_max
        }
    }
}

fn floor_int(x: &Rat) -> Int {
    x.floor().numer().clone()
}

/// All classes of `B(eps, delta)`: invariant `eps`, Newton point dominated
/// by `delta`.
pub fn enumerate_generalized(
    datum: &BasedRootDatum,
    eps: &Pi1Element,
    delta: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<SigmaClass>> {
    check_delta(datum, delta)?;
    let group = Pi1Group::full(datum);
    group.check_element(eps)?;
    if datum.galois_order == 1 {
        if let Some(blocks) = datum.gl_blocks() {
            return enumerate_gl_blocks(datum, &group, &blocks, eps, delta);
        }
    }
    enumerate_generic(datum, &group, eps, delta, limits)
}

fn enumerate_generic(
    datum: &BasedRootDatum,
    group: &Pi1Group,
    eps: &Pi1Element,
    delta: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<SigmaClass>> {
    let orbits = datum.node_orbits();
    let bound = coordinate_bound(datum, delta, limits);
    let mut found = BTreeSet::new();
    for mask in 0u32..(1u32 << orbits.len()) {
        let mut nodes: Vec<usize> = Vec::new();
        for (k, orbit) in orbits.iter().enumerate() {
            if mask & (1 << k) != 0 {
                nodes.extend(orbit.iter().copied());
            }
        }
        nodes.sort_unstable();
        let levi = LeviDescriptor::new(datum, &nodes)?;
        let m = Pi1Group::new(datum, &levi);
        let row_bounds: Vec<Int> = m
            .free_row_abs_sums()
            .iter()
            .map(|s| floor_int(&(Rat::from_integer(s.clone()) * &bound)))
            .collect();
        let mut box_size = 1u64;
        for b in &row_bounds {
            let width = 2 * i64::try_from(b).map_err(|_| {
                KottwitzError::CapExceeded("enumeration box overflow".into())
            })? + 1;
            box_size = box_size.saturating_mul(width.max(1) as u64);
        }
        if box_size > limits.box_cap {
            return Err(KottwitzError::CapExceeded(format!(
                "enumeration box of size {box_size} exceeds cap {}",
                limits.box_cap
            )));
        }
        let torsion = m.torsion_elements();
        let mut t: Vec<Int> = row_bounds.iter().map(|b| -b.clone()).collect();
        loop {
            let e0 = m.from_parts(&t, &vec![Int::zero(); m.torsion_orders().len()]);
            let nu = m.basic_newton(datum, &e0);
            if datum.is_dominant(&nu)
                && datum.centralizer_nodes(&nu) == nodes
                && datum.dominance_leq(&nu, delta)?
            {
                for tau in &torsion {
                    let km = m.from_parts(&t, &m.torsion_values(tau));
                    let kg = m.transfer_to(group, &km);
                    if kg == *eps {
                        found.insert(SigmaClass {
                            newton: nu.clone(),
                            kappa: kg,
                        });
                    }
                }
            }
            // odometer over the box
            let mut pos = 0;
            loop {
                if pos == t.len() {
                    break;
                }
                t[pos] += 1;
                if t[pos] <= row_bounds[pos] {
                    break;
                }
                t[pos] = -row_bounds[pos].clone();
                pos += 1;
            }
            if pos == t.len() {
                break;
            }
        }
    }
    Ok(sort_classes(datum, found))
}

/// Newton points of a single linear block: integral-degree slope segments,
/// strictly decreasing, with boundary sums dominated by those of `delta`.
fn gl_newton_points(delta: &[Rat], deg: &Int) -> Vec<Vec<Rat>> {
    let n = delta.len();
    let mut psums = Vec::with_capacity(n);
    let mut acc = Rat::zero();
    for d in delta {
        acc += d;
        psums.push(acc.clone());
    }
    debug_assert_eq!(psums[n - 1], Rat::from_integer(deg.clone()));
    let mut out = Vec::new();
    let mut cur: Vec<(Int, usize)> = Vec::new();
    fn rec(
        n: usize,
        psums: &[Rat],
        deg: &Int,
        pos: usize,
        acc: Int,
        prev: Option<Rat>,
        cur: &mut Vec<(Int, usize)>,
        out: &mut Vec<Vec<Rat>>,
    ) {
        if pos == n {
            if Rat::from_integer(acc) == Rat::from_integer(deg.clone()) {
                let mut slopes = Vec::with_capacity(n);
                for (s, m) in cur.iter() {
                    let lam = Rat::new(s.clone(), Int::from(*m as i64));
                    for _ in 0..*m {
                        slopes.push(lam.clone());
                    }
                }
                out.push(slopes);
            }
            return;
        }
        for m in 1..=(n - pos) {
            let mi = Int::from(m as i64);
            // upper bound: boundary domination, and strict decrease
            let cap = &psums[pos + m - 1] - Rat::from_integer(acc.clone());
            let mut s_hi = floor_rat(&cap);
            if let Some(p) = &prev {
                let strict = p * Rat::from_integer(mi.clone());
                let mut top = floor_rat(&strict);
                if Rat::from_integer(top.clone()) == strict {
                    top -= 1;
                }
                if top < s_hi {
                    s_hi = top;
                }
            }
            if pos + m == n {
                let s = deg - &acc;
                if s <= s_hi && slope_ok(&s, m, &prev) {
                    cur.push((s.clone(), m));
                    rec(n, psums, deg, n, &acc + &s, Some(slope_of(&s, m)), cur, out);
                    cur.pop();
                }
            } else {
                // remaining average must stay strictly below the new slope
                let rem = n - pos - m;
                let _ = rem;
                let mut s = s_hi.clone();
                loop {
                    // need (deg - acc - s)/(n - pos - m) < s/m
                    //  <=>  m*(deg - acc) < s*(n - pos)
                    let lhs = &mi * (deg - &acc);
                    let rhs = &s * Int::from((n - pos) as i64);
                    if lhs >= rhs {
                        break;
                    }
                    cur.push((s.clone(), m));
                    rec(
                        n,
                        psums,
                        deg,
                        pos + m,
                        &acc + &s,
                        Some(slope_of(&s, m)),
                        cur,
                        out,
                    );
                    cur.pop();
                    s -= 1;
                }
            }
        }
    }
    fn floor_rat(x: &Rat) -> Int {
        x.floor().numer().clone()
    }
    fn slope_of(s: &Int, m: usize) -> Rat {
        Rat::new(s.clone(), Int::from(m as i64))
    }
    fn slope_ok(s: &Int, m: usize, prev: &Option<Rat>) -> bool {
        match prev {
            None => true,
            Some(p) => slope_of(s, m) < *p,
        }
    }
    rec(n, &psums, deg, 0, Int::zero(), None, &mut cur, &mut out);
    out
}

fn enumerate_gl_blocks(
    datum: &BasedRootDatum,
    group: &Pi1Group,
    blocks: &[(usize, usize)],
    eps: &Pi1Element,
    delta: &Coweight,
) -> Result<Vec<SigmaClass>> {
    // block degrees are forced by delta; they must be integral and match eps
    let mut degrees: Vec<Int> = Vec::with_capacity(blocks.len());
    let mut probe = vec![Int::zero(); datum.rank];
    for &(off, len) in blocks {
        let total: Rat = delta.0[off..off + len].iter().sum();
        if !total.denom().is_one() {
            return Ok(Vec::new());
        }
        let d = total.numer().clone();
        probe[off] = d.clone();
        degrees.push(d);
    }
    if group.project(&probe) != *eps {
        return Ok(Vec::new());
    }
    let mut per_block: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(blocks.len());
    for (k, &(off, len)) in blocks.iter().enumerate() {
        let pts = gl_newton_points(&delta.0[off..off + len], &degrees[k]);
        if pts.is_empty() {
            return Ok(Vec::new());
        }
        per_block.push(pts);
    }
    let mut found = BTreeSet::new();
    let mut idx = vec![0usize; blocks.len()];
    loop {
        let mut slopes = Vec::with_capacity(datum.rank);
        for (k, pts) in per_block.iter().enumerate() {
            slopes.extend(pts[idx[k]].iter().cloned());
        }
        found.insert(SigmaClass {
            newton: Coweight(slopes),
            kappa: eps.clone(),
        });
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                break;
            }
            idx[pos] += 1;
            if idx[pos] < per_block[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == idx.len() {
            break;
        }
    }
    Ok(sort_classes(datum, found))
}

/// `B(mu)`: classes with invariant `mu^sharp` bounded by the twist average
/// of `mu`.
pub fn enumerate_b_g_mu(
    datum: &BasedRootDatum,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<SigmaClass>> {
    if !mu.is_integral() {
        return Err(KottwitzError::InvalidInput(format!(
            "cocharacter {mu} not integral"
        )));
    }
    if !datum.is_dominant(mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "cocharacter {mu} not dominant"
        )));
    }
    let group = Pi1Group::full(datum);
    let eps = group.project_coweight(mu)?;
    let delta = datum.galois_average(mu);
    enumerate_generalized(datum, &eps, &delta, limits)
}

/// Union of `B(mu^sharp + tau, mu_avg)` over all torsion classes `tau`.
pub fn enumerate_a_g_mu(
    datum: &BasedRootDatum,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<SigmaClass>> {
    if !mu.is_integral() || !datum.is_dominant(mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "cocharacter {mu} must be integral dominant"
        )));
    }
    let group = Pi1Group::full(datum);
    let sharp = group.project_coweight(mu)?;
    let delta = datum.galois_average(mu);
    let mut all = BTreeSet::new();
    for tau in group.torsion_elements() {
        let eps = group.add(&sharp, &tau);
        for c in enumerate_generalized(datum, &eps, &delta, limits)? {
            all.insert(c);
        }
    }
    Ok(sort_classes(datum, all))
}

/// Invariant of a class inside a Levi containing its centralizer, recovered
/// from the Newton point and the torsion injectivity of the transfer map.
pub fn kappa_in_levi(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    class: &SigmaClass,
) -> Result<Pi1Element> {
    validate_class(datum, class)?;
    let cent = datum.centralizer_nodes(&class.newton);
    if !cent.iter().all(|i| levi.nodes.contains(i)) {
        return Err(KottwitzError::Precondition(format!(
            "Levi {:?} does not contain the centralizer {:?}",
            levi.nodes, cent
        )));
    }
    resolve_in_levi(datum, levi, &class.newton, &class.kappa)
}

/// Result of transferring a class into a Levi: the conjugated cocharacter,
/// the torsion defect and the class viewed in the Levi.
#[derive(Clone, Debug)]
pub struct LeviRestriction {
    pub mu_levi: Coweight,
    pub eps_levi: Pi1Element,
    pub class_levi: SigmaClass,
}

/// Weyl-translates of `mu`, made dominant for the Levi, deduplicated and
/// sorted by decreasing degree then decreasing lexicographic order.
pub fn levi_dominant_candidates(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<Coweight>> {
    let orbit = datum.weyl_orbit(mu, limits.orbit_cap)?;
    let mut set = BTreeSet::new();
    for w in &orbit {
        let (dom, _) = datum.make_dominant_levi(&levi.nodes, w);
        set.insert(dom);
    }
    let phi = datum.degree_functional();
    let mut v: Vec<Coweight> = set.into_iter().collect();
    v.sort_by(|a, b| {
        let fa = datum.degree_value(&phi, a);
        let fb = datum.degree_value(&phi, b);
        fb.cmp(&fa).then_with(|| b.cmp(a))
    });
    Ok(v)
}

/// Expresses membership of a class over a Levi containing its centralizer:
/// finds a Weyl translate `w(mu)` with `[b] in B(M, (w mu)^sharp + tau,
/// (w mu)^avg)` for a torsion class `tau`.
pub fn restrict_to_levi(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    class: &SigmaClass,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<LeviRestriction> {
    let kappa_m = kappa_in_levi(datum, levi, class)?;
    let m = Pi1Group::new(datum, levi);
    for cand in levi_dominant_candidates(datum, levi, mu, limits)? {
        let sharp = m.project_coweight(&cand)?;
        let defect = m.sub(&kappa_m, &sharp);
        if !m.is_torsion(&defect) {
            continue;
        }
        let avg = datum.galois_average(&cand);
        if datum.dominance_leq_levi(&levi.nodes, &class.newton, &avg) {
            return Ok(LeviRestriction {
                mu_levi: cand,
                eps_levi: defect,
                class_levi: SigmaClass {
                    newton: class.newton.clone(),
                    kappa: kappa_m,
                },
            });
        }
    }
    Err(KottwitzError::InvalidInput(
        "no Weyl translate exhibits the class over the Levi".into(),
    ))
}

/// Builds a class from its Newton point and printed invariant coordinates.
pub fn class_from_parts(
    datum: &BasedRootDatum,
    newton: &Coweight,
    display: &[Int],
) -> Result<SigmaClass> {
    let group = Pi1Group::full(datum);
    let kappa = group.element_from_display(display)?;
    let class = SigmaClass {
        newton: newton.clone(),
        kappa,
    };
    validate_class(datum, &class)?;
    Ok(class)
}

/// Builds a class from its Newton point alone; fails when the component
/// group of the centralizer has torsion (the invariant is then not
/// determined by the Newton point).
pub fn class_from_newton(datum: &BasedRootDatum, newton: &Coweight) -> Result<SigmaClass> {
    if newton.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: newton.len(),
        });
    }
    if !datum.is_dominant(newton) || !datum.is_galois_invariant(newton) {
        return Err(KottwitzError::InvalidInput(format!(
            "{newton} is not a dominant twist-invariant point"
        )));
    }
    let cent = LeviDescriptor::new(datum, &datum.centralizer_nodes(newton))?;
    let m = Pi1Group::new(datum, &cent);
    if !m.torsion_orders().is_empty() {
        return Err(KottwitzError::InvalidInput(format!(
            "{}: centralizer component group has torsion, specify the invariant",
            datum.label
        )));
    }
    let free_q = m.free_values_q(newton);
    let mut free = Vec::with_capacity(free_q.len());
    for q in &free_q {
        if !q.denom().is_one() {
            return Err(KottwitzError::InvalidInput(format!(
                "{newton} is not the Newton point of any class"
            )));
        }
        free.push(q.numer().clone());
    }
    let g = Pi1Group::full(datum);
    let kappa = m.transfer_to(&g, &m.from_parts(&free, &[]));
    let class = SigmaClass {
        newton: newton.clone(),
        kappa,
    };
    validate_class(datum, &class)?;
    Ok(class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_datum, RootFamily};

    fn gl(n: usize) -> BasedRootDatum {
        build_datum(RootFamily::Gl, n, 1).unwrap()
    }

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    fn newtons(classes: &[SigmaClass]) -> Vec<String> {
        classes.iter().map(|c| c.newton.to_string()).collect()
    }

    #[test]
    fn gln_representative_slopes() {
        let d = gl(3);
        // cycle (0 1 2) with exponents 1,0,0: one slope 1/3
        let rep = GlnRepresentative::new(vec![1, 2, 0], vec![1, 0, 0]).unwrap();
        let c = newton_kappa_of_gln(&d, &rep).unwrap();
        assert_eq!(c.newton, Coweight::parse("1/3,1/3,1/3").unwrap());
        assert!(is_basic(&d, &c));
        // identity permutation: slopes are the sorted exponents
        let rep = GlnRepresentative::new(vec![0, 1, 2], vec![0, 2, 1]).unwrap();
        let c = newton_kappa_of_gln(&d, &rep).unwrap();
        assert_eq!(c.newton, Coweight::parse("2,1,0").unwrap());
        assert!(!is_basic(&d, &c));
    }

    #[test]
    fn basic_class_examples() {
        let d = gl(4);
        let c = basic_class_from_kappa(&d, &Coweight::parse("1,1,0,0").unwrap()).unwrap();
        assert_eq!(c.newton, Coweight::parse("1/2,1/2,1/2,1/2").unwrap());
        let pgl = build_datum(RootFamily::A, 2, 1).unwrap();
        let c = basic_class_from_kappa(&pgl, &Coweight::parse("1,0").unwrap()).unwrap();
        assert!(is_basic(&pgl, &c));
    }

    #[test]
    fn b_gl4_omega2_is_the_known_pentagon() {
        let d = gl(4);
        let mu = Coweight::parse("1,1,0,0").unwrap();
        let set = enumerate_b_g_mu(&d, &mu, &limits()).unwrap();
        assert_eq!(
            newtons(&set),
            vec![
                "1/2,1/2,1/2,1/2",
                "2/3,2/3,2/3,0",
                "1,1/3,1/3,1/3",
                "1,1/2,1/2,0",
                "1,1,0,0",
            ]
        );
    }

    #[test]
    fn b_gl5_omega2_has_interior_break_class() {
        let d = gl(5);
        let mu = Coweight::parse("1,1,0,0,0").unwrap();
        let set = enumerate_b_g_mu(&d, &mu, &limits()).unwrap();
        let names = newtons(&set);
        assert_eq!(names.len(), 8);
        assert!(names.contains(&"1/2,1/2,1/3,1/3,1/3".to_string()));
    }

    #[test]
    fn generic_path_agrees_with_gl_fast_path() {
        // A small twist-free adjoint datum has no fast path; for gl we can
        // compare the two paths directly.
        for (n, mu) in [(3usize, "1,0,0"), (4, "1,1,0,0"), (5, "2,1,0,0,0")] {
            let d = gl(n);
            let mu = Coweight::parse(mu).unwrap();
            let group = Pi1Group::full(&d);
            let eps = group.project_coweight(&mu).unwrap();
            let fast = enumerate_generalized(&d, &eps, &mu, &limits()).unwrap();
            let slow = enumerate_generic(&d, &group, &eps, &mu, &limits()).unwrap();
            assert_eq!(fast, slow, "gl{n}");
        }
    }

    #[test]
    fn pgl2_sets() {
        let d = build_datum(RootFamily::A, 1, 1).unwrap();
        // mu = fundamental coweight: B has the basic class and nothing else
        // with the same invariant below it except the translation class.
        let mu = Coweight::parse("1").unwrap();
        let b = enumerate_b_g_mu(&d, &mu, &limits()).unwrap();
        assert_eq!(b.len(), 2);
        assert!(is_basic(&d, &b[0]));
        assert_eq!(b[1].newton, Coweight::parse("1").unwrap());
        // the full torsion union adds the classes with trivial invariant
        let a = enumerate_a_g_mu(&d, &mu, &limits()).unwrap();
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn unitary_gl3_enumeration() {
        // twisted GL3: invariant lives in coinvariants of Z under x -> -x
        let d = build_datum(RootFamily::Gl, 3, 2).unwrap();
        let group = Pi1Group::full(&d);
        assert_eq!(group.free_rank(), 0);
        let mu = Coweight::parse("1,0,0").unwrap();
        let set = enumerate_b_g_mu(&d, &mu, &limits()).unwrap();
        assert!(!set.is_empty());
        for c in &set {
            assert!(d.is_galois_invariant(&c.newton));
            assert!(d
                .dominance_leq(&c.newton, &d.galois_average(&mu))
                .unwrap());
        }
    }

    #[test]
    fn restriction_to_levi_example() {
        let d = gl(3);
        let mu = Coweight::parse("1,1,0").unwrap();
        let nu = Coweight::parse("1,1/2,1/2").unwrap();
        let class = class_from_newton(&d, &nu).unwrap();
        let levi = LeviDescriptor::new(&d, &[1]).unwrap();
        let r = restrict_to_levi(&d, &levi, &class, &mu, &limits()).unwrap();
        assert_eq!(r.mu_levi, Coweight::parse("1,1,0").unwrap());
        let m = Pi1Group::new(&d, &levi);
        assert_eq!(r.eps_levi, m.zero());
    }

    #[test]
    fn membership_checks() {
        let d = gl(4);
        let mu = Coweight::parse("1,1,0,0").unwrap();
        let group = Pi1Group::full(&d);
        let eps = group.project_coweight(&mu).unwrap();
        let inside = class_from_newton(&d, &Coweight::parse("2/3,2/3,2/3,0").unwrap()).unwrap();
        assert!(in_generalized_kottwitz(&d, &inside, &eps, &mu).unwrap());
        let above = class_from_newton(&d, &Coweight::parse("2,0,0,0").unwrap()).unwrap();
        assert!(!in_generalized_kottwitz(&d, &above, &eps, &mu).unwrap());
        // slope 3/4 with multiplicity two: not a Newton point at all
        assert!(class_from_newton(&d, &Coweight::parse("3/4,3/4,1/4,1/4").unwrap()).is_err());
    }

    #[test]
    fn kappa_in_levi_roundtrip() {
        let d = gl(5);
        let nu = Coweight::parse("1/2,1/2,1/3,1/3,1/3").unwrap();
        let class = class_from_newton(&d, &nu).unwrap();
        let levi = LeviDescriptor::new(&d, &[0, 2, 3]).unwrap();
        let km = kappa_in_levi(&d, &levi, &class).unwrap();
        let m = Pi1Group::new(&d, &levi);
        assert_eq!(m.free_values(&km), vec![Int::from(1), Int::from(1)]);
    }
}
