//! Newton strata of the flag variety attached to a basic class and a
//! cocharacter, with emptiness/non-emptiness certificates.

use std::fmt;

use crate::error::{KottwitzError, Result};
use crate::ff_bundles::{modifications_of_basic, ModificationSet, SlopeBundle};
use crate::hodge_newton::is_hn_decomposable;
use crate::kottwitz::{EnumerationLimits, SigmaClass};
use crate::linalg::Int;
use crate::rootdata::pi1::{Pi1Element, Pi1Group};
use crate::rootdata::{BasedRootDatum, Coweight, LeviDescriptor};

/// What is known about a single stratum.
///
/// The order is the decision order: the first matching certificate wins.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StratumStatus {
    /// The stratum of the trivial class; it carries the admissible locus.
    Admissible,
    /// Decomposable with respect to the enumeration bound, hence disjoint
    /// from the weakly admissible locus and empty.
    EmptyByDecomposability,
    /// Indecomposable and minimal among the non-trivial strata.
    NonEmptyByMinimality,
    /// Indecomposable with a bundle of degree type `2,-2` or `1,0,-1`,
    /// where a splitting witness exists.
    NonEmptyByShape,
    /// Indecomposable, but no certificate applies.
    NonEmptyConjectural,
}

impl fmt::Display for StratumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StratumStatus::Admissible => "Admissible",
            StratumStatus::EmptyByDecomposability => "EmptyByDecomposability",
            StratumStatus::NonEmptyByMinimality => "NonEmptyByMinimality",
            StratumStatus::NonEmptyByShape => "NonEmptyByShape",
            StratumStatus::NonEmptyConjectural => "NonEmptyConjectural",
        };
        f.write_str(name)
    }
}

/// One stratum together with its status.
#[derive(Clone, Debug)]
pub struct StratumReport {
    pub class: SigmaClass,
    pub bundle: Option<SlopeBundle>,
    pub status: StratumStatus,
}

/// Strata of the pair `(b, mu)`: the modifications of the basic class,
/// each with its vector bundle when the group is a full linear group.
pub fn newton_strata(
    datum: &BasedRootDatum,
    b: &SigmaClass,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<(SigmaClass, Option<SlopeBundle>)>> {
    Ok(modifications_of_basic(datum, b, mu, limits)?.classes)
}

/// Degree type of the splitting construction: two summands of degrees
/// `2,-2`, or three summands of degrees `1,0,-1`.
pub fn is_splitting_shape(e: &SlopeBundle) -> bool {
    let degs = e.summand_degrees();
    match degs.len() {
        2 => degs[0] == Int::from(2) && degs[1] == Int::from(-2),
        3 => {
            degs[0] == Int::from(1)
                && degs[1] == Int::from(0)
                && degs[2] == Int::from(-1)
        }
        _ => false,
    }
}

/// Degree type `2,-2`, `1,0,-1` or `1,-1`; the last is the degenerate
/// three-summand case without a semistable middle.
pub fn is_two_or_three_part_shape(e: &SlopeBundle) -> bool {
    if is_splitting_shape(e) {
        return true;
    }
    let degs = e.summand_degrees();
    degs.len() == 2 && degs[0] == Int::from(1) && degs[1] == Int::from(-1)
}

fn annotate(datum: &BasedRootDatum, mods: &ModificationSet) -> Result<Vec<StratumReport>> {
    let nontrivial: Vec<&SigmaClass> = mods
        .classes
        .iter()
        .map(|(c, _)| c)
        .filter(|c| !c.newton.is_zero())
        .collect();
    let mut out = Vec::with_capacity(mods.classes.len());
    for (class, bundle) in &mods.classes {
        let status = if class.newton.is_zero() {
            StratumStatus::Admissible
        } else if is_hn_decomposable(datum, &mods.delta, class)?.is_some() {
            StratumStatus::EmptyByDecomposability
        } else {
            let mut minimal = true;
            for other in &nontrivial {
                if other.newton == class.newton {
                    continue;
                }
                if datum.dominance_leq(&other.newton, &class.newton)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                StratumStatus::NonEmptyByMinimality
            } else if bundle.as_ref().is_some_and(is_splitting_shape) {
                StratumStatus::NonEmptyByShape
            } else {
                StratumStatus::NonEmptyConjectural
            }
        };
        out.push(StratumReport {
            class: class.clone(),
            bundle: bundle.clone(),
            status,
        });
    }
    Ok(out)
}

/// All strata of `(b, mu)` with statuses, in enumeration order.
pub fn strata_report(
    datum: &BasedRootDatum,
    b: &SigmaClass,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<Vec<StratumReport>> {
    let mods = modifications_of_basic(datum, b, mu, limits)?;
    annotate(datum, &mods)
}

/// Status of the single stratum `bprime` inside the stratification of
/// `(b, mu)`. Errors when `bprime` is not a stratum of the pair.
pub fn stratum_wa_status(
    datum: &BasedRootDatum,
    b: &SigmaClass,
    mu: &Coweight,
    bprime: &SigmaClass,
    limits: &EnumerationLimits,
) -> Result<StratumStatus> {
    let report = strata_report(datum, b, mu, limits)?;
    report
        .into_iter()
        .find(|s| s.class == *bprime)
        .map(|s| s.status)
        .ok_or_else(|| {
            KottwitzError::InvalidInput(format!(
                "class with newton point {} is not a stratum of this pair",
                bprime.newton
            ))
        })
}

/// Coset representatives `w` of `W_M \ W mu` with the verdict of the
/// cell criterion: the component class of `w(mu)` in `pi1(M)` must agree
/// with that of the `M`-dominant representative of `w0(mu)`.
pub fn admissible_cells(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    mu: &Coweight,
    cap: usize,
) -> Result<Vec<(Coweight, bool)>> {
    let ld = datum.levi_datum(levi)?;
    let group = Pi1Group::full(&ld);
    let w0mu = datum.apply_word(&datum.w0_word(), mu);
    let (w0mu_m, _) = datum.make_dominant_levi(&levi.nodes, &w0mu);
    let target = group.project_coweight(&w0mu_m)?;
    let mut reps: Vec<Coweight> = datum
        .weyl_orbit(mu, cap)?
        .into_iter()
        .filter(|v| datum.is_dominant_levi(&levi.nodes, v))
        .collect();
    reps.sort();
    reps.reverse();
    let mut out = Vec::with_capacity(reps.len());
    for rep in reps {
        let passes = group.project_coweight(&rep)? == target;
        out.push((rep, passes));
    }
    Ok(out)
}

/// First Chern class, in `pi1(M)`, of the modification of type `w(mu)`
/// applied to the bundle of `class`; `levi_datum` must be the datum in
/// whose component group `class.kappa` lives.
pub fn levi_chern(
    levi_datum: &BasedRootDatum,
    wmu: &Coweight,
    class: &SigmaClass,
) -> Result<Pi1Element> {
    let group = Pi1Group::full(levi_datum);
    let sharp = group.project_coweight(wmu)?;
    if sharp.tag() != class.kappa.tag() {
        return Err(KottwitzError::InvalidInput(
            "kappa does not live in the component group of the given datum".into(),
        ));
    }
    Ok(group.sub(&sharp, &class.kappa))
}
