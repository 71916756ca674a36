//! Hodge-Newton (in)decomposability, the weakly-admissible = admissible
//! criterion, average coroots with their filtration tables, and the
//! non-basic witness construction.

use std::collections::BTreeSet;

use num::traits::Signed;
use num::{One, Zero};

use crate::error::{KottwitzError, Result};
use crate::kottwitz::{
    enumerate_generalized, is_basic, kappa_in_levi, restrict_to_levi, validate_class,
    EnumerationLimits, SigmaClass,
};
use crate::linalg::{solve_exact, Int, Rat};
use crate::rootdata::pi1::{preceq_m_q, torsion_preimage, Pi1Element, Pi1Group};
use crate::rootdata::{BasedRootDatum, Coweight, LeviDescriptor, RootFamily};

/// Both a dominant integral cocharacter and an already-averaged bound are
/// accepted wherever a bound is needed; averaging is idempotent.
fn bound_of(datum: &BasedRootDatum, delta_or_mu: &Coweight) -> Result<Coweight> {
    if delta_or_mu.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: delta_or_mu.len(),
        });
    }
    if !datum.is_dominant(delta_or_mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "bound {delta_or_mu} not dominant"
        )));
    }
    Ok(datum.galois_average(delta_or_mu))
}

fn check_bounded(datum: &BasedRootDatum, class: &SigmaClass, delta: &Coweight) -> Result<()> {
    validate_class(datum, class)?;
    if !datum.dominance_leq(&class.newton, delta)? {
        return Err(KottwitzError::Precondition(format!(
            "class {} is not bounded by {delta}",
            class.newton
        )));
    }
    Ok(())
}

fn centralizer_levi(datum: &BasedRootDatum, v: &Coweight) -> Result<LeviDescriptor> {
    LeviDescriptor::new(datum, &datum.centralizer_nodes(v))
}

/// Coefficient of each simple-root orbit in the coroot expansion of `d`;
/// the coefficient is constant along each orbit.
fn orbit_coefficients(datum: &BasedRootDatum, d: &Coweight) -> Result<Vec<(Vec<usize>, Rat)>> {
    let coeffs = datum.simple_coroot_expansion(d).ok_or_else(|| {
        KottwitzError::Precondition(format!("{d} is not in the span of the coroots"))
    })?;
    let mut out = Vec::new();
    for orbit in datum.node_orbits() {
        let c = coeffs[orbit[0]].clone();
        debug_assert!(orbit.iter().all(|&i| coeffs[i] == c));
        out.push((orbit, c));
    }
    Ok(out)
}

/// Decides decomposability by searching the strict standard Levis above the
/// centralizer; returns the smallest one carrying `delta - nu_b`.
pub fn is_hn_decomposable(
    datum: &BasedRootDatum,
    delta_or_mu: &Coweight,
    class: &SigmaClass,
) -> Result<Option<LeviDescriptor>> {
    let delta = bound_of(datum, delta_or_mu)?;
    check_bounded(datum, class, &delta)?;
    let diff = delta.sub(&class.newton);
    let base = datum.centralizer_nodes(&class.newton);
    let orbits = datum.node_orbits();
    let free: Vec<&Vec<usize>> = orbits
        .iter()
        .filter(|o| !o.iter().all(|i| base.contains(i)))
        .collect();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..(1u32 << free.len()) {
        let mut nodes = base.clone();
        for (k, orbit) in free.iter().enumerate() {
            if mask & (1 << k) != 0 {
                nodes.extend(orbit.iter().copied());
            }
        }
        if nodes.len() == datum.ss_rank() {
            continue;
        }
        nodes.sort_unstable();
        let cols: Vec<Vec<Rat>> = nodes
            .iter()
            .map(|&i| datum.coroot(i).0.clone())
            .collect();
        let mut a = vec![vec![Rat::zero(); cols.len()]; datum.rank];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..datum.rank {
                a[i][j] = col[i].clone();
            }
        }
        if solve_exact(&a, &diff.0).is_some()
            && best.as_ref().is_none_or(|b| nodes.len() < b.len())
        {
            best = Some(nodes);
        }
    }
    match best {
        Some(nodes) => Ok(Some(LeviDescriptor::new(datum, &nodes)?)),
        None => Ok(None),
    }
}

/// Positivity criterion: every orbit outside the centralizer must carry a
/// strictly positive coefficient in `delta - nu_b`.
pub fn indecomposability_coefficient_check(
    datum: &BasedRootDatum,
    delta_or_mu: &Coweight,
    class: &SigmaClass,
) -> Result<bool> {
    let delta = bound_of(datum, delta_or_mu)?;
    check_bounded(datum, class, &delta)?;
    let coeffs = orbit_coefficients(datum, &delta.sub(&class.newton))?;
    for (orbit, c) in &coeffs {
        let pairing = datum.pairing(orbit[0], &class.newton);
        if pairing.is_positive() && !c.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal Levi in which the class stays indecomposable, with all data
/// transported to the opposite side by the longest Weyl element.
#[derive(Clone, Debug)]
pub struct MinimalLeviData {
    pub levi: LeviDescriptor,
    pub w0_mu: Coweight,
    pub class_in_levi: SigmaClass,
    pub eps_in_levi: Pi1Element,
}

pub fn minimal_indecomposable_levi(
    datum: &BasedRootDatum,
    mu: &Coweight,
    class: &SigmaClass,
) -> Result<MinimalLeviData> {
    if !mu.is_integral() || !datum.is_dominant(mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "cocharacter {mu} must be integral dominant"
        )));
    }
    let delta = datum.galois_average(mu);
    check_bounded(datum, class, &delta)?;
    let base = datum.centralizer_nodes(&class.newton);
    let mut nodes: BTreeSet<usize> = base.iter().copied().collect();
    for (orbit, c) in &orbit_coefficients(datum, &delta.sub(&class.newton))? {
        if c.is_positive() {
            nodes.extend(orbit.iter().copied());
        }
    }
    let m1_nodes: Vec<usize> = nodes.into_iter().collect();
    let m1 = LeviDescriptor::new(datum, &m1_nodes)?;
    let kappa_m1 = kappa_in_levi(datum, &m1, class)?;
    let lift = Coweight::from_int_vec(&Pi1Group::new(datum, &m1).lift(&kappa_m1));

    let w0 = datum.w0_word();
    let theta: Vec<(usize, usize)> = datum.w0_node_map(&datum.all_nodes());
    let mut m_nodes: Vec<usize> = m1_nodes
        .iter()
        .map(|&i| {
            theta
                .iter()
                .find(|(a, _)| *a == i)
                .expect("node map covers all nodes")
                .1
        })
        .collect();
    m_nodes.sort_unstable();
    let levi = LeviDescriptor::new(datum, &m_nodes)?;
    let ld = datum.levi_datum(&levi)?;
    let ldg = Pi1Group::full(&ld);

    let (w0_mu, _) = datum.make_dominant_levi(&levi.nodes, &datum.apply_word(&w0, mu));
    let (newton, _) = datum.make_dominant_levi(&levi.nodes, &datum.apply_word(&w0, &class.newton));
    let kappa = ldg.project_coweight(&datum.apply_word(&w0, &lift))?;
    let class_in_levi = SigmaClass { newton, kappa };
    validate_class(&ld, &class_in_levi)?;
    let eps_in_levi = ldg.sub(&class_in_levi.kappa, &ldg.project_coweight(&w0_mu)?);
    if !ldg.is_torsion(&eps_in_levi) {
        return Err(KottwitzError::Internal(
            "transported invariant does not differ from the cocharacter by torsion".into(),
        ));
    }
    if !indecomposability_coefficient_check(&ld, &w0_mu, &class_in_levi)? {
        return Err(KottwitzError::Internal(
            "minimal Levi fails its own indecomposability check".into(),
        ));
    }
    Ok(MinimalLeviData {
        levi,
        w0_mu,
        class_in_levi,
        eps_in_levi,
    })
}

/// Non-basic classes of `B(eps, delta)` that are indecomposable; the set is
/// fully decomposable exactly when this list is empty.
pub fn is_fully_hn_decomposable(
    datum: &BasedRootDatum,
    eps: &Pi1Element,
    delta: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<SigmaClass>> {
    let mut offending = Vec::new();
    for class in enumerate_generalized(datum, eps, delta, limits)? {
        if !is_basic(datum, &class) && is_hn_decomposable(datum, delta, &class)?.is_none() {
            offending.push(class);
        }
    }
    Ok(offending)
}

pub fn is_fully_hn_decomposable_mu(
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
    let eps = group.project_coweight(mu)?;
    is_fully_hn_decomposable(datum, &eps, &datum.galois_average(mu), limits)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Equal,
    NotEqual,
}

#[derive(Clone, Debug)]
pub struct WaExplanation {
    pub verdict: Verdict,
    pub levi: LeviDescriptor,
    pub basic_in_levi: bool,
    pub offending: Vec<SigmaClass>,
}

/// Weak admissibility coincides with admissibility iff the class is basic
/// in its minimal Levi and the Levi-level set is fully decomposable.
pub fn wa_equals_a(
    datum: &BasedRootDatum,
    mu: &Coweight,
    class: &SigmaClass,
    eps: &Pi1Element,
    limits: &EnumerationLimits,
) -> Result<WaExplanation> {
    if !datum.is_minuscule(mu) {
        return Err(KottwitzError::Precondition(format!(
            "cocharacter {mu} is not minuscule"
        )));
    }
    let group = Pi1Group::full(datum);
    if !group.is_torsion(eps) {
        return Err(KottwitzError::InvalidInput(format!(
            "{eps} is not a torsion class"
        )));
    }
    let expected = group.add(&group.project_coweight(mu)?, eps);
    validate_class(datum, class)?;
    if class.kappa != expected || !datum.dominance_leq(&class.newton, &datum.galois_average(mu))? {
        return Err(KottwitzError::Precondition(format!(
            "class {} does not lie in the twisted set of {mu}",
            class.newton
        )));
    }
    let data = minimal_indecomposable_levi(datum, mu, class)?;
    let ld = datum.levi_datum(&data.levi)?;
    let basic_in_levi = is_basic(&ld, &data.class_in_levi);
    let offending = is_fully_hn_decomposable(
        &ld,
        &data.class_in_levi.kappa,
        &ld.galois_average(&data.w0_mu),
        limits,
    )?;
    let verdict = if basic_in_levi && offending.is_empty() {
        Verdict::Equal
    } else {
        Verdict::NotEqual
    };
    Ok(WaExplanation {
        verdict,
        levi: data.levi,
        basic_in_levi,
        offending,
    })
}

/// Coefficients of the orbit-averaged coroot defect: writes the projection
/// of `beta^vee` orthogonal to the complementary Levi as a combination of
/// the Levi's coroots and sums the coefficients over each orbit.
pub fn avg_coroot(datum: &BasedRootDatum, beta: usize) -> Result<Vec<(Vec<usize>, Rat)>> {
    if beta >= datum.ss_rank() {
        return Err(KottwitzError::InvalidInput(format!(
            "no simple root {beta} in {}",
            datum.label
        )));
    }
    let removed = datum.orbit_of(beta);
    let nodes: Vec<usize> = datum
        .all_nodes()
        .into_iter()
        .filter(|i| !removed.contains(i))
        .collect();
    let coroot = datum.coroot(beta);
    let diff = datum.weyl_average_levi(&nodes, &coroot).sub(&coroot);
    let coeffs = datum.simple_coroot_expansion(&diff).ok_or_else(|| {
        KottwitzError::Internal("average defect left the coroot span".into())
    })?;
    let mut out = Vec::new();
    for orbit in datum.node_orbits() {
        if orbit.iter().all(|i| nodes.contains(i)) {
            let total: Rat = orbit.iter().map(|&i| coeffs[i].clone()).sum();
            out.push((orbit, total));
        }
    }
    Ok(out)
}

/// The increasing filtration of the diagram controlling when average-coroot
/// coefficients stay at most one.
pub fn i_sequence(datum: &BasedRootDatum) -> Result<Vec<Vec<usize>>> {
    let (family, n) = datum.diagram_family().ok_or_else(|| {
        KottwitzError::UnsupportedGroup(format!("{} is not a connected standard type", datum.label))
    })?;
    let all = datum.all_nodes();
    let twisted = datum.galois_order > 1;
    let stages: Vec<Vec<usize>> = match family {
        RootFamily::A => {
            if twisted && n % 2 == 1 {
                let mid = (n - 1) / 2;
                vec![all.iter().copied().filter(|&i| i != mid).collect()]
            } else {
                Vec::new()
            }
        }
        RootFamily::B => vec![(0..n - 1).collect()],
        RootFamily::C => Vec::new(),
        RootFamily::D => {
            if datum.galois_order == 3 {
                vec![vec![0, 2, 3]]
            } else if twisted || n <= 4 {
                Vec::new()
            } else {
                vec![(0..n - 2).collect()]
            }
        }
        RootFamily::E => match (n, twisted) {
            (6, false) => vec![vec![3], vec![1, 2, 3, 4]],
            (6, true) => vec![vec![2, 4], vec![0, 2, 4, 5], vec![0, 2, 3, 4, 5]],
            (7, _) => vec![vec![3], vec![2, 3, 4], (0..6).collect()],
            (8, _) => vec![vec![3], vec![3, 4], vec![2, 3, 4, 5], (1..7).collect()],
            _ => unreachable!("validated rank"),
        },
        RootFamily::F => vec![vec![1], vec![0, 1, 2]],
        RootFamily::G => vec![vec![1]],
        RootFamily::Gl => unreachable!("diagram classifier reports chains as A"),
    };
    let mut out = stages;
    out.push(all);
    for stage in &out {
        for &i in stage {
            let orbit = datum.orbit_of(i);
            if !orbit.iter().all(|j| stage.contains(j)) {
                return Err(KottwitzError::Internal(format!(
                    "filtration stage {stage:?} is not twist-stable"
                )));
            }
        }
    }
    Ok(out)
}

fn translate_leq(datum: &BasedRootDatum, a: &Coweight, b: &Coweight) -> bool {
    match datum.simple_coroot_expansion(&b.sub(a)) {
        Some(c) => c.iter().all(|x| !x.is_negative()),
        None => false,
    }
}

#[derive(Clone, Debug)]
pub struct WitnessCertificate {
    pub pairing_positive: bool,
    pub levi_dominant: bool,
    pub eps_lifts: bool,
    pub eqn_kappa: bool,
    pub eqn_nu: bool,
    pub membership: bool,
}

impl WitnessCertificate {
    pub fn all_hold(&self) -> bool {
        self.pairing_positive
            && self.levi_dominant
            && self.eps_lifts
            && self.eqn_kappa
            && self.eqn_nu
            && self.membership
    }
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub alpha_orbit: Vec<usize>,
    pub beta_node: usize,
    pub w_mu: Coweight,
    pub w1_mu: Coweight,
    pub certificate: WitnessCertificate,
}

/// For an indecomposable non-basic class, produces a simple-root orbit and
/// a Weyl translate of `mu` realizing the class as a one-coroot modification
/// of a basic class of the complementary Levi, certified independently.
pub fn find_nonbasic_witness(
    datum: &BasedRootDatum,
    mu: &Coweight,
    class: &SigmaClass,
    eps: &Pi1Element,
    limits: &EnumerationLimits,
) -> Result<WitnessReport> {
    if !datum.is_minuscule(mu) {
        return Err(KottwitzError::Precondition(format!(
            "cocharacter {mu} is not minuscule"
        )));
    }
    validate_class(datum, class)?;
    if is_basic(datum, class) {
        return Err(KottwitzError::Precondition("class is basic".into()));
    }
    let group = Pi1Group::full(datum);
    if !group.is_torsion(eps) {
        return Err(KottwitzError::InvalidInput(format!(
            "{eps} is not a torsion class"
        )));
    }
    let delta = datum.galois_average(mu);
    if class.kappa != group.add(&group.project_coweight(mu)?, eps)
        || !datum.dominance_leq(&class.newton, &delta)?
    {
        return Err(KottwitzError::Precondition(format!(
            "class {} does not lie in the twisted set of {mu}",
            class.newton
        )));
    }
    if !indecomposability_coefficient_check(datum, mu, class)? {
        return Err(KottwitzError::Precondition(
            "class is decomposable; the construction needs an indecomposable one".into(),
        ));
    }

    let base = centralizer_levi(datum, &class.newton)?;
    let restriction = restrict_to_levi(datum, &base, class, mu, limits)?;
    let w1_mu = restriction.mu_levi.clone();
    let outside: Vec<Vec<usize>> = datum
        .node_orbits()
        .into_iter()
        .filter(|o| !o.iter().all(|i| base.nodes.contains(i)))
        .collect();

    let mut pool: BTreeSet<Coweight> = BTreeSet::new();
    for orbit in &outside {
        let levi_nodes: Vec<usize> = datum
            .all_nodes()
            .into_iter()
            .filter(|i| !orbit.contains(i))
            .collect();
        let (lam, _) = datum.make_dominant_levi(&levi_nodes, &w1_mu);
        for &b in orbit {
            if datum.pairing(b, &lam).is_negative() {
                let (cand, _) = datum.make_dominant_levi(&levi_nodes, &datum.simple_reflect(b, &lam));
                pool.insert(cand);
            }
        }
    }
    if pool.is_empty() {
        return Err(KottwitzError::Internal(
            "no reflection lowers any translate; construction failed".into(),
        ));
    }
    let candidates: Vec<Coweight> = pool.into_iter().collect();
    let w_mu = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|c2| *c2 != **c && translate_leq(datum, c, c2))
        })
        .max()
        .expect("nonempty candidate pool")
        .clone();

    // coefficients of w mu - w1 mu over the coroot orbits outside the base
    let m_base = Pi1Group::new(datum, &base);
    let cols: Vec<Vec<Rat>> = outside
        .iter()
        .map(|o| m_base.free_values_q(&datum.coroot(o[0])))
        .collect();
    let rhs: Vec<Rat> = m_base
        .free_values_q(&w_mu)
        .iter()
        .zip(m_base.free_values_q(&w1_mu))
        .map(|(a, b)| a - b)
        .collect();
    let rows = rhs.len();
    let mut a = vec![vec![Rat::zero(); cols.len()]; rows];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..rows {
            a[i][j] = col[i].clone();
        }
    }
    let n = solve_exact(&a, &rhs).ok_or_else(|| {
        KottwitzError::Internal("translate difference left the coroot span".into())
    })?;
    if !n
        .iter()
        .all(|x| x.denom().is_one() && x.numer() >= &Int::one())
    {
        return Err(KottwitzError::Internal(format!(
            "expansion coefficients {n:?} are not positive integers"
        )));
    }
    let ones: Vec<usize> = (0..outside.len())
        .filter(|&j| n[j] == Rat::one())
        .collect();
    if ones.is_empty() {
        return Err(KottwitzError::Internal(
            "no coefficient-one orbit available".into(),
        ));
    }
    let chosen = if ones.len() == 1 {
        ones[0]
    } else {
        let seq = i_sequence(datum)?;
        let stage = |j: usize| {
            seq.iter()
                .position(|s| outside[j].iter().all(|i| s.contains(i)))
                .expect("final stage is the whole diagram")
        };
        *ones
            .iter()
            .min_by_key(|&&j| (stage(j), outside[j][0]))
            .expect("nonempty")
    };
    let alpha_orbit = outside[chosen].clone();
    let beta_node = alpha_orbit[0];

    let levi_nodes: Vec<usize> = datum
        .all_nodes()
        .into_iter()
        .filter(|i| !alpha_orbit.contains(i))
        .collect();
    let m_levi = LeviDescriptor::new(datum, &levi_nodes)?;
    let m = Pi1Group::new(datum, &m_levi);
    let beta_coroot = datum.coroot(beta_node);

    let pairing_positive = datum.pairing(beta_node, &class.newton).is_positive();
    let levi_dominant = datum.is_dominant_levi(&m_levi.nodes, &w_mu);
    let tau = torsion_preimage(&m, &group, eps)?;
    let eps_lifts = tau.is_some();
    let (eqn_kappa, eqn_nu, membership) = if let Some(tau) = &tau {
        let kappa_m = kappa_in_levi(datum, &m_levi, class)?;
        let rhs_kappa = m.add(
            &m.sub(&m.project_coweight(&w_mu)?, &m.project_coweight(&beta_coroot)?),
            tau,
        );
        let eqn_kappa = kappa_m == rhs_kappa;
        let basic_mod = m.add(&m.neg(&m.project_coweight(&beta_coroot)?), tau);
        let bound = m
            .basic_newton(datum, &basic_mod)
            .add(&datum.galois_average(&w_mu));
        let membership =
            eqn_kappa && datum.dominance_leq_levi(&m_levi.nodes, &class.newton, &bound);
        let avg = datum.galois_average(&datum.weyl_average_levi(&m_levi.nodes, &beta_coroot));
        let rhs_nu = m_base.free_values_q(&datum.galois_average(&w_mu).sub(&avg));
        let lhs_nu = m_base.rationalize(&kappa_in_levi(datum, &base, class)?);
        let eqn_nu = preceq_m_q(datum, &base, &lhs_nu, &rhs_nu)?;
        (eqn_kappa, eqn_nu, membership)
    } else {
        (false, false, false)
    };
    let certificate = WitnessCertificate {
        pairing_positive,
        levi_dominant,
        eps_lifts,
        eqn_kappa,
        eqn_nu,
        membership,
    };
    if !certificate.all_hold() {
        return Err(KottwitzError::Internal(format!(
            "witness certificate failed: {certificate:?}"
        )));
    }
    Ok(WitnessReport {
        alpha_orbit,
        beta_node,
        w_mu,
        w1_mu,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kottwitz::class_from_newton;
    use crate::linalg::ratio;
    use crate::rootdata::build_datum;

    fn gl(n: usize) -> BasedRootDatum {
        build_datum(RootFamily::Gl, n, 1).unwrap()
    }

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    #[test]
    fn decomposability_examples() {
        let d = gl(3);
        let mu = Coweight::parse("1,1,0").unwrap();
        let c = class_from_newton(&d, &Coweight::parse("1,1/2,1/2").unwrap()).unwrap();
        let m = is_hn_decomposable(&d, &mu, &c).unwrap().unwrap();
        assert_eq!(m.nodes, vec![1]);
        assert!(!indecomposability_coefficient_check(&d, &mu, &c).unwrap());

        let d = gl(5);
        let mu = Coweight::parse("1,1,0,0,0").unwrap();
        let c = class_from_newton(&d, &Coweight::parse("1/2,1/2,1/3,1/3,1/3").unwrap()).unwrap();
        assert!(is_hn_decomposable(&d, &mu, &c).unwrap().is_none());
        assert!(indecomposability_coefficient_check(&d, &mu, &c).unwrap());

        // basic classes are indecomposable by convention
        let basic = class_from_newton(&d, &Coweight::parse("2/5,2/5,2/5,2/5,2/5").unwrap()).unwrap();
        assert!(indecomposability_coefficient_check(&d, &mu, &basic).unwrap());
    }

    #[test]
    fn fully_decomposable_small_gl() {
        let cases = [
            (2, "1,0", true),
            (3, "1,1,0", true),
            (4, "1,1,0,0", true),
            (5, "1,1,0,0,0", false),
        ];
        for (n, mu, expect) in cases {
            let d = gl(n);
            let mu = Coweight::parse(mu).unwrap();
            let off = is_fully_hn_decomposable_mu(&d, &mu, &limits()).unwrap();
            assert_eq!(off.is_empty(), expect, "gl{n}");
        }
        let d = gl(5);
        let off =
            is_fully_hn_decomposable_mu(&d, &Coweight::parse("1,1,0,0,0").unwrap(), &limits())
                .unwrap();
        assert_eq!(off.len(), 1);
        assert_eq!(
            off[0].newton,
            Coweight::parse("1/2,1/2,1/3,1/3,1/3").unwrap()
        );
    }

    #[test]
    fn minimal_levi_transport() {
        let d = gl(3);
        let mu = Coweight::parse("1,1,0").unwrap();
        let c = class_from_newton(&d, &Coweight::parse("1,1/2,1/2").unwrap()).unwrap();
        let data = minimal_indecomposable_levi(&d, &mu, &c).unwrap();
        assert_eq!(data.levi.nodes, vec![0]);
        assert_eq!(data.w0_mu, Coweight::parse("1,0,1").unwrap());
        assert_eq!(
            data.class_in_levi.newton,
            Coweight::parse("1/2,1/2,1").unwrap()
        );
        assert!(Pi1Group::full(&d.levi_datum(&data.levi).unwrap())
            .is_torsion(&data.eps_in_levi));
    }

    #[test]
    fn wa_equals_a_examples() {
        let d = gl(2);
        let mu = Coweight::parse("1,0").unwrap();
        let g = Pi1Group::full(&d);
        let basic = class_from_newton(&d, &Coweight::parse("1/2,1/2").unwrap()).unwrap();
        let r = wa_equals_a(&d, &mu, &basic, &g.zero(), &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);

        let d = gl(5);
        let mu = Coweight::parse("1,1,0,0,0").unwrap();
        let g = Pi1Group::full(&d);
        let basic =
            class_from_newton(&d, &Coweight::parse("2/5,2/5,2/5,2/5,2/5").unwrap()).unwrap();
        let r = wa_equals_a(&d, &mu, &basic, &g.zero(), &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::NotEqual);
        assert_eq!(r.offending.len(), 1);

        let d = gl(3);
        let mu = Coweight::parse("1,1,0").unwrap();
        let g = Pi1Group::full(&d);
        let c = class_from_newton(&d, &Coweight::parse("1,1/2,1/2").unwrap()).unwrap();
        let r = wa_equals_a(&d, &mu, &c, &g.zero(), &limits()).unwrap();
        assert_eq!(r.verdict, Verdict::Equal);
        assert_eq!(r.levi.nodes, vec![0]);
        assert!(r.basic_in_levi);
    }

    #[test]
    fn avg_coroot_values() {
        let a2 = build_datum(RootFamily::A, 2, 1).unwrap();
        let v = avg_coroot(&a2, 0).unwrap();
        assert_eq!(v, vec![(vec![1], ratio(1, 2))]);

        // middle node of the twisted five-node chain: single orbit pair
        let a5 = build_datum(RootFamily::A, 5, 2).unwrap();
        let v = avg_coroot(&a5, 2).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0], (vec![0, 4], ratio(2, 3)));
        assert_eq!(v[1], (vec![1, 3], ratio(4, 3)));

        let a1 = build_datum(RootFamily::A, 1, 1).unwrap();
        assert!(avg_coroot(&a1, 0).unwrap().is_empty());
    }

    #[test]
    fn i_sequence_tables() {
        let f4 = build_datum(RootFamily::F, 4, 1).unwrap();
        assert_eq!(
            i_sequence(&f4).unwrap(),
            vec![vec![1], vec![0, 1, 2], vec![0, 1, 2, 3]]
        );
        let g2 = build_datum(RootFamily::G, 2, 1).unwrap();
        assert_eq!(i_sequence(&g2).unwrap(), vec![vec![1], vec![0, 1]]);
        let c4 = build_datum(RootFamily::C, 4, 1).unwrap();
        assert_eq!(i_sequence(&c4).unwrap(), vec![vec![0, 1, 2, 3]]);
        let a5t = build_datum(RootFamily::A, 5, 2).unwrap();
        assert_eq!(
            i_sequence(&a5t).unwrap(),
            vec![vec![0, 1, 3, 4], vec![0, 1, 2, 3, 4]]
        );
        let d4t = build_datum(RootFamily::D, 4, 3).unwrap();
        assert_eq!(i_sequence(&d4t).unwrap(), vec![vec![0, 2, 3], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn witness_on_the_indecomposable_class() {
        let d = gl(5);
        let mu = Coweight::parse("1,1,0,0,0").unwrap();
        let g = Pi1Group::full(&d);
        let c = class_from_newton(&d, &Coweight::parse("1/2,1/2,1/3,1/3,1/3").unwrap()).unwrap();
        let r = find_nonbasic_witness(&d, &mu, &c, &g.zero(), &limits()).unwrap();
        assert_eq!(r.alpha_orbit, vec![1]);
        assert_eq!(r.w_mu, Coweight::parse("1,1,0,0,0").unwrap());
        assert_eq!(r.w1_mu, Coweight::parse("1,0,1,0,0").unwrap());
        assert!(r.certificate.all_hold());
    }

    #[test]
    fn witness_rejects_bad_inputs() {
        let d = gl(2);
        let mu = Coweight::parse("1,0").unwrap();
        let g = Pi1Group::full(&d);
        let basic = class_from_newton(&d, &Coweight::parse("1/2,1/2").unwrap()).unwrap();
        assert!(matches!(
            find_nonbasic_witness(&d, &mu, &basic, &g.zero(), &limits()),
            Err(KottwitzError::Precondition(_))
        ));
        // the regular class below (1,0) is decomposable, hence also rejected
        let c = class_from_newton(&d, &Coweight::parse("1,0").unwrap()).unwrap();
        assert!(matches!(
            find_nonbasic_witness(&d, &mu, &c, &g.zero(), &limits()),
            Err(KottwitzError::Precondition(_))
        ));
    }
}
