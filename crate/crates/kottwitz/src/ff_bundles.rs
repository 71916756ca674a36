//! Slope calculus for vector bundles on the Fargues–Fontaine curve.
//!
//! A bundle is recorded by its Harder–Narasimhan data alone: a multiset of
//! stable slopes.  `O([s/r])` denotes the degree-`s`, rank-`r` isoclinic
//! bundle, i.e. `gcd(s,r)` copies of the stable bundle of slope `s/r`.

use std::fmt;

use num::traits::Signed;
use num::{ToPrimitive, Zero};

use crate::error::{KottwitzError, Result};
use crate::kottwitz::{
    enumerate_generalized, is_basic, require_full_gl, validate_class, EnumerationLimits,
    SigmaClass,
};
use crate::linalg::{Int, Rat};
use crate::rootdata::pi1::{Pi1Element, Pi1Group};
use crate::rootdata::{BasedRootDatum, Coweight};

/// Direct sum of isoclinic bundles, grouped by slope.
///
/// Each entry `(slope, copies)` stands for `copies` copies of the stable
/// bundle of that slope; a stable bundle of slope `p/q` (lowest terms) has
/// rank `q` and degree `p`.  Slopes are kept strictly decreasing, so the
/// entry list is exactly the Harder–Narasimhan grading.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlopeBundle {
    summands: Vec<(Rat, usize)>,
}

impl SlopeBundle {
    pub fn new(parts: Vec<(Rat, usize)>) -> Result<Self> {
        let mut merged: Vec<(Rat, usize)> = Vec::new();
        let mut parts = parts;
        parts.sort_by(|a, b| b.0.cmp(&a.0));
        for (slope, copies) in parts {
            if copies == 0 {
                continue;
            }
            match merged.last_mut() {
                Some(last) if last.0 == slope => last.1 += copies,
                _ => merged.push((slope, copies)),
            }
        }
        if merged.is_empty() {
            return Err(KottwitzError::InvalidInput(
                "a slope bundle must have positive rank".into(),
            ));
        }
        Ok(SlopeBundle { summands: merged })
    }

    /// The isoclinic bundle `O([s/r])` of degree `s` and rank `r`.
    pub fn stable(s: impl Into<Int>, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(KottwitzError::InvalidInput(
                "isoclinic bundle of rank zero".into(),
            ));
        }
        let slope = Rat::new(s.into(), Int::from(r));
        let copies = r / slope.denom().to_usize().expect("reduced denominator fits");
        SlopeBundle::new(vec![(slope, copies)])
    }

    pub fn summands(&self) -> &[(Rat, usize)] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands
            .iter()
            .map(|(s, c)| c * s.denom().to_usize().expect("denominator fits"))
            .sum()
    }

    pub fn degree(&self) -> Int {
        self.summands
            .iter()
            .map(|(s, c)| s.numer() * Int::from(*c))
            .sum()
    }

    pub fn slope(&self) -> Rat {
        Rat::new(self.degree(), Int::from(self.rank()))
    }

    pub fn is_semistable(&self) -> bool {
        self.summands.len() == 1
    }

    /// Degree of each isotypic summand, in slope order.
    pub fn summand_degrees(&self) -> Vec<Int> {
        self.summands
            .iter()
            .map(|(s, c)| s.numer() * Int::from(*c))
            .collect()
    }

    /// Rank of each isotypic summand, in slope order.
    pub fn summand_ranks(&self) -> Vec<usize> {
        self.summands
            .iter()
            .map(|(s, c)| c * s.denom().to_usize().expect("denominator fits"))
            .collect()
    }

    pub fn direct_sum(&self, other: &SlopeBundle) -> SlopeBundle {
        let mut parts = self.summands.clone();
        parts.extend(other.summands.iter().cloned());
        SlopeBundle::new(parts).expect("nonempty sum")
    }

    /// HN slope vector: each slope repeated by its rank contribution.
    pub fn slope_vector(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.rank());
        for (slope, copies) in &self.summands {
            let q = slope.denom().to_usize().expect("denominator fits");
            for _ in 0..copies * q {
                out.push(slope.clone());
            }
        }
        out
    }

    /// Parses the `p/q×d` token list emitted by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(KottwitzError::Parse(format!(
                    "empty summand token in {text:?}"
                )));
            }
            let (slope_part, copies_part) = token
                .split_once('×')
                .or_else(|| token.split_once('x'))
                .ok_or_else(|| {
                    KottwitzError::Parse(format!("summand {token:?} is missing ×copies"))
                })?;
            let copies: usize = copies_part
                .trim()
                .parse()
                .map_err(|_| KottwitzError::Parse(format!("bad copy count in {token:?}")))?;
            let slope_part = slope_part.trim();
            let (num, den) = match slope_part.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (slope_part, "1"),
            };
            let p: i64 = num
                .parse()
                .map_err(|_| KottwitzError::Parse(format!("bad slope numerator in {token:?}")))?;
            let q: i64 = den
                .parse()
                .map_err(|_| KottwitzError::Parse(format!("bad slope denominator in {token:?}")))?;
            if q <= 0 {
                return Err(KottwitzError::Parse(format!(
                    "slope denominator must be positive in {token:?}"
                )));
            }
            parts.push((Rat::new(Int::from(p), Int::from(q)), copies));
        }
        SlopeBundle::new(parts)
    }
}

impl fmt::Display for SlopeBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (slope, copies) in &self.summands {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}/{}×{}", slope.numer(), slope.denom(), copies)?;
        }
        Ok(())
    }
}

/// Bundle of the isocrystal with Newton point `nu`: slope `λ` pieces are sent
/// to `O(−λ)`.
pub fn bundle_of_isocrystal(nu: &Coweight) -> Result<SlopeBundle> {
    if nu.is_empty() {
        return Err(KottwitzError::InvalidInput("empty Newton point".into()));
    }
    let mut parts: Vec<(Rat, usize)> = Vec::new();
    let mut i = 0;
    while i < nu.len() {
        let slope = &nu.0[i];
        let mut mult = 0usize;
        while i < nu.len() && &nu.0[i] == slope {
            if i > 0 && nu.0[i - 1] < nu.0[i] {
                return Err(KottwitzError::InvalidInput(format!(
                    "Newton point is not dominant: {:?}",
                    nu.0
                )));
            }
            mult += 1;
            i += 1;
        }
        let q = slope.denom().to_usize().expect("denominator fits");
        if !mult.is_multiple_of(q) {
            return Err(KottwitzError::InvalidInput(format!(
                "slope {} has multiplicity {}, not divisible by its denominator",
                slope, mult
            )));
        }
        parts.push((-slope.clone(), mult / q));
    }
    SlopeBundle::new(parts)
}

/// HN slope vector of a bundle, as a dominant coweight.
pub fn bundle_nu(e: &SlopeBundle) -> Coweight {
    Coweight(e.slope_vector())
}

/// Checks `ν_{E_b} = −w0 ν_b` for the bundle attached to a class.
pub fn check_nu_formula(datum: &BasedRootDatum, class: &SigmaClass) -> Result<bool> {
    require_full_gl(datum)?;
    validate_class(datum, class)?;
    let bundle = bundle_of_isocrystal(&class.newton)?;
    let w0 = datum.w0_word();
    let rhs = datum.apply_word(&w0, &class.newton).neg();
    Ok(bundle_nu(&bundle) == rhs)
}

/// First Chern class, i.e. the total degree.
pub fn chern(e: &SlopeBundle) -> Int {
    e.degree()
}

/// `c1` of any modification of type `mu` of `E_b`, namely `μ♯ − κ(b)`.
pub fn modified_chern(datum: &BasedRootDatum, mu: &Coweight, class: &SigmaClass) -> Result<Int> {
    require_full_gl(datum)?;
    if !datum.is_integral(mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "mu is not a cocharacter: {:?}",
            mu.0
        )));
    }
    validate_class(datum, class)?;
    let group = Pi1Group::full(datum);
    let musharp = group.project_coweight(mu)?;
    let diff = group.sub(&musharp, &class.kappa);
    Ok(group.free_values(&diff)[0].clone())
}

/// Whether `Hom(O(λ1), O(λ2)) ≠ 0`.
pub fn hom_nonzero(lambda1: &Rat, lambda2: &Rat) -> bool {
    lambda1 <= lambda2
}

/// Whether `H¹(X, O(λ)) = 0`.
pub fn h1_vanishes(lambda: &Rat) -> bool {
    !lambda.is_negative()
}

/// Isomorphism classes of modifications of `E_b` of type `mu`.
#[derive(Clone, Debug)]
pub struct ModificationSet {
    /// False when `mu` fails to be minuscule; the enumeration still applies.
    pub minuscule: bool,
    pub eps: Pi1Element,
    pub delta: Coweight,
    pub classes: Vec<(SigmaClass, Option<SlopeBundle>)>,
}

/// Classes `[b']` with `κ' = κ(b) − μ♯` and `ν' ≤ ν_b + (w0(−μ))◇`, paired
/// with their bundles in the linear case.
pub fn modifications_of_basic(
    datum: &BasedRootDatum,
    b: &SigmaClass,
    mu: &Coweight,
    limits: &EnumerationLimits,
) -> Result<ModificationSet> {
    validate_class(datum, b)?;
    if !is_basic(datum, b) {
        return Err(KottwitzError::Precondition(format!(
            "class with Newton point {:?} is not basic",
            b.newton.0
        )));
    }
    if !datum.is_integral(mu) {
        return Err(KottwitzError::InvalidInput(format!(
            "mu is not a cocharacter: {:?}",
            mu.0
        )));
    }
    let group = Pi1Group::full(datum);
    let musharp = group.project_coweight(mu)?;
    let eps = group.sub(&b.kappa, &musharp);
    let w0 = datum.w0_word();
    let twist = datum.galois_average(&datum.apply_word(&w0, &mu.neg()));
    let (delta, _) = datum.make_dominant(&b.newton.add(&twist));
    let classes = enumerate_generalized(datum, &eps, &delta, limits)?;
    let linear = require_full_gl(datum).is_ok();
    let mut out = Vec::with_capacity(classes.len());
    for class in classes {
        let bundle = if linear {
            Some(bundle_of_isocrystal(&class.newton)?)
        } else {
            None
        };
        out.push((class, bundle));
    }
    Ok(ModificationSet {
        minuscule: datum.is_minuscule(mu),
        eps,
        delta,
        classes: out,
    })
}

/// Whether a short exact sequence `0 → sub → e → quot → 0` of bundles exists
/// with both ends semistable.
pub fn extension_exists(e: &SlopeBundle, sub: &SlopeBundle, quot: &SlopeBundle) -> Result<bool> {
    let expected = sub.rank() + quot.rank();
    if e.rank() != expected {
        return Err(KottwitzError::DimensionMismatch {
            expected,
            got: e.rank(),
        });
    }
    let deg_split = sub.degree() + quot.degree();
    if e.degree() != deg_split {
        return Err(KottwitzError::InvalidInput(format!(
            "degree mismatch: {} against {} + {}",
            e.degree(),
            sub.degree(),
            quot.degree()
        )));
    }
    if !sub.is_semistable() || !quot.is_semistable() {
        return Err(KottwitzError::Precondition(
            "extension test requires semistable sub and quotient".into(),
        ));
    }
    let split = sub.direct_sum(quot);
    if sub.slope() > quot.slope() {
        // Ext¹(quot, sub) vanishes, so only the split extension exists.
        return Ok(e == &split);
    }
    let nu_e = e.slope_vector();
    let nu_split = split.slope_vector();
    let mut acc_e = Rat::zero();
    let mut acc_s = Rat::zero();
    for (a, b) in nu_e.iter().zip(nu_split.iter()) {
        acc_e += a;
        acc_s += b;
        if acc_e > acc_s {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four bundles produced by the splitting construction, together with
/// the outcome of its validity checks.
#[derive(Clone, Debug)]
pub struct SplittingWitness {
    /// `E' ⊂ E_b`.
    pub sub: SlopeBundle,
    /// `E'' = E_b / E'`.
    pub quot: SlopeBundle,
    /// `Ẽ' ⊂ E_target`, modified into `sub`.
    pub target_sub: SlopeBundle,
    /// `Ẽ'' = E_target / Ẽ'`, modified into `quot`.
    pub target_quot: SlopeBundle,
    /// Whether `0 → E' → E_b → E'' → 0` can exist.
    pub extension_ok: bool,
    /// Whether both vertical modifications are rank-preserving of a common
    /// minuscule type.
    pub shifts_ok: bool,
}

impl SplittingWitness {
    pub fn is_valid(&self) -> bool {
        self.extension_ok && self.shifts_ok
    }
}

#[derive(Clone, Debug)]
pub enum SplittingOutcome {
    Witness(SplittingWitness),
    /// The target is the bundle of `E_b` itself; nothing to split.
    TrivialStratum,
}

fn floor_div(a: &Int, b: &Int) -> Int {
    let (q, r) = (a / b, a % b);
    if (r.is_negative() && b.is_positive()) || (r.is_positive() && b.is_negative()) {
        q - 1
    } else {
        q
    }
}

fn common_minuscule_shift(pairs: &[(Int, usize)]) -> bool {
    // Each piece needs its degree shift t to satisfy c·rank ≤ t ≤ (c+1)·rank
    // for one shared c.
    let mut lo: Option<Int> = None;
    let mut hi: Option<Int> = None;
    for (t, rank) in pairs {
        let r = Int::from(*rank);
        let piece_hi = floor_div(t, &r);
        let piece_lo = -floor_div(&(r.clone() - t), &r);
        lo = Some(match lo {
            Some(v) => v.max(piece_lo),
            None => piece_lo,
        });
        hi = Some(match hi {
            Some(v) => v.min(piece_hi),
            None => piece_hi,
        });
    }
    match (lo, hi) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    }
}

/// Splits an isoclinic `E_b = O([s/r])` against a two- or three-part target
/// of degree pattern `(2,−2)` or `(1,0,−1)`, following the case table of the
/// splitting construction.
pub fn splitting_witness(e_b: &SlopeBundle, target: &SlopeBundle) -> Result<SplittingOutcome> {
    if !e_b.is_semistable() {
        return Err(KottwitzError::Precondition(
            "the ambient bundle must be isoclinic".into(),
        ));
    }
    if target.rank() != e_b.rank() {
        return Err(KottwitzError::DimensionMismatch {
            expected: e_b.rank(),
            got: target.rank(),
        });
    }
    if target == e_b {
        return Ok(SplittingOutcome::TrivialStratum);
    }
    let s = e_b.degree();
    let r = Int::from(e_b.rank());
    let degs = target.summand_degrees();
    let ranks = target.summand_ranks();
    let two = Int::from(2);
    let build = |sub: SlopeBundle,
                 quot: SlopeBundle,
                 target_sub: SlopeBundle,
                 target_quot: SlopeBundle|
     -> Result<SplittingOutcome> {
        let extension_ok = extension_exists(e_b, &sub, &quot)?;
        let shifts_ok = sub.rank() == target_sub.rank()
            && quot.rank() == target_quot.rank()
            && common_minuscule_shift(&[
                (target_sub.degree() - sub.degree(), sub.rank()),
                (target_quot.degree() - quot.degree(), quot.rank()),
            ]);
        Ok(SplittingOutcome::Witness(SplittingWitness {
            sub,
            quot,
            target_sub,
            target_quot,
            extension_ok,
            shifts_ok,
        }))
    };
    if degs.len() == 2 && degs[0] == two && degs[1] == -two.clone() {
        let (r1, r2) = (ranks[0], ranks[1]);
        let target_sub = SlopeBundle::stable(2, r1)?;
        let target_quot = SlopeBundle::stable(-2, r2)?;
        if s <= Int::from(r2) {
            let sub = SlopeBundle::stable(2, r1)?;
            let quot = SlopeBundle::stable(s - two, r2)?;
            return build(sub, quot, target_sub, target_quot);
        }
        let sub = SlopeBundle::stable(s.clone() + two.clone() - Int::from(r2), r1)?;
        let quot = SlopeBundle::stable(Int::from(r2) - two, r2)?;
        return build(sub, quot, target_sub, target_quot);
    }
    if degs.len() == 3 && degs[0] == Int::from(1) && degs[1].is_zero() && degs[2] == Int::from(-1) {
        let (r1, r2, r3) = (ranks[0], ranks[1], ranks[2]);
        let first = SlopeBundle::stable(1, r1)?;
        let middle = SlopeBundle::stable(0, r2)?;
        let last = SlopeBundle::stable(-1, r3)?;
        // (s−1)/(r−r1) ≤ (r3−1)/r3
        let former = (s.clone() - 1) * Int::from(r3) <= Int::from(r3 - 1) * (r.clone() - Int::from(r1));
        // (s−r3+1)/(r−r3) ≥ 1/r1
        let latter = (s.clone() - Int::from(r3) + 1) * Int::from(r1) >= r.clone() - Int::from(r3);
        if former {
            let sub = SlopeBundle::stable(1, r1)?;
            let quot = SlopeBundle::stable(s - 1, e_b.rank() - r1)?;
            return build(sub, quot, first, middle.direct_sum(&last));
        }
        if latter {
            let sub = SlopeBundle::stable(s - Int::from(r3) + 1, e_b.rank() - r3)?;
            let quot = SlopeBundle::stable(r3 as i64 - 1, r3)?;
            return build(sub, quot, first.direct_sum(&middle), last);
        }
        return Err(KottwitzError::Internal(format!(
            "splitting disjunction failed for r=({},{},{}), s={}",
            r1, r2, r3, s
        )));
    }
    Err(KottwitzError::InvalidInput(format!(
        "target shape {} is not covered by the splitting construction",
        target
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub r1: usize,
    pub r2: usize,
    pub r3: usize,
    pub s: i64,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub bound: usize,
    /// Configurations passing the membership and indecomposability filters.
    pub valid: u64,
    /// Degree values rejected by the filters.
    pub skipped: u64,
    /// Valid configurations where neither inequality of the disjunction holds.
    pub counterexamples: Vec<ScanConfig>,
    /// Valid configurations whose constructed witness fails its checks
    /// (populated only when witness verification is requested).
    pub witness_failures: Vec<ScanConfig>,
}

// Scaled prefix sums of the stratum datum: everything is multiplied by
// r·r1·r3 so the comparisons stay in i64.
fn scan_prefix_delta(k: i64, m: i64, r: i64, scale_rest: i64) -> i64 {
    let base = k * m * scale_rest;
    let over = (k - (r - m)).max(0);
    base - over * r * scale_rest
}

fn scan_prefix_nu(k: i64, r1: i64, r2: i64, r3: i64, r: i64) -> i64 {
    if k <= r3 {
        k * r * r1
    } else if k <= r3 + r2 {
        r * r1 * r3
    } else {
        r * r1 * r3 - (k - r3 - r2) * r * r3
    }
}

/// Scans every three-part configuration with ranks up to `bound`, checking
/// the two-inequality disjunction behind the splitting construction on each
/// valid degree.  With `verify_witnesses`, every valid configuration is also
/// run through `splitting_witness` and its validity checks.
pub fn splitting_disjunction_scan(bound: usize, verify_witnesses: bool) -> Result<ScanReport> {
    if bound == 0 {
        return Err(KottwitzError::InvalidInput("bound must be positive".into()));
    }
    let mut report = ScanReport {
        bound,
        valid: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        witness_failures: Vec::new(),
    };
    for r1 in 1..=bound {
        for r2 in 1..=bound {
            for r3 in 1..=bound {
                let r = (r1 + r2 + r3) as i64;
                let (a, b, c) = (r1 as i64, r2 as i64, r3 as i64);
                let scale_rest = a * c;
                for s in 0..=r {
                    let m = (r - s) % r;
                    // Membership ν' ≤ δ and strict positivity at the two
                    // block cuts; prefix differences are piecewise linear,
                    // so the corner values decide.
                    let diff =
                        |k: i64| scan_prefix_delta(k, m, r, scale_rest) - scan_prefix_nu(k, a, b, c, r);
                    let member = diff(r - m) >= 0 && diff(c) > 0 && diff(c + b) > 0;
                    if !member {
                        report.skipped += 1;
                        continue;
                    }
                    report.valid += 1;
                    let former = (s - 1) * c <= (c - 1) * (r - a);
                    let latter = (s - c + 1) * a >= r - c;
                    if !(former || latter) {
                        report.counterexamples.push(ScanConfig { r1, r2, r3, s });
                        continue;
                    }
                    if verify_witnesses {
                        let e_b = SlopeBundle::stable(s, r as usize)?;
                        let target = SlopeBundle::stable(1, r1)?
                            .direct_sum(&SlopeBundle::stable(0, r2)?)
                            .direct_sum(&SlopeBundle::stable(-1, r3)?);
                        match splitting_witness(&e_b, &target)? {
                            SplittingOutcome::Witness(w) if w.is_valid() => {}
                            _ => report.witness_failures.push(ScanConfig { r1, r2, r3, s }),
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Dimension of the `λ`-graded piece of the Lie algebra of `J_b`: the number
/// of absolute roots pairing to `λ` with `ν_b`.
pub fn jb_graded_dim(datum: &BasedRootDatum, nu: &Coweight, lambda: &Rat) -> Result<usize> {
    if nu.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: nu.len(),
        });
    }
    let mut count = 0;
    for root in datum.positive() {
        let value = datum.pair_root(&root.root, nu);
        if &value == lambda {
            count += 1;
        }
        if -value == *lambda {
            count += 1;
        }
    }
    Ok(count)
}

/// Largest pairing of `ν_b` against a root.
pub fn jb_lambda_max(datum: &BasedRootDatum, nu: &Coweight) -> Result<Rat> {
    if nu.len() != datum.rank {
        return Err(KottwitzError::DimensionMismatch {
            expected: datum.rank,
            got: nu.len(),
        });
    }
    let mut best = Rat::zero();
    for root in datum.positive() {
        let value = datum.pair_root(&root.root, nu).abs();
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kottwitz::basic_class_from_kappa;
    use crate::linalg::{rat, ratio};
    use crate::rootdata::parse_group_descriptor;

    fn coweight(vals: &[(i64, i64)]) -> Coweight {
        Coweight(vals.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn serialization_roundtrip() {
        let e = SlopeBundle::parse("2/1×1,-2/3×1").unwrap();
        assert_eq!(e.rank(), 4);
        assert_eq!(e.degree(), Int::from(0));
        assert_eq!(e.to_string(), "2/1×1,-2/3×1");
        let merged = SlopeBundle::parse("1/2x1,1/2x1").unwrap();
        assert_eq!(merged.to_string(), "1/2×2");
        assert_eq!(SlopeBundle::stable(0, 3).unwrap().to_string(), "0/1×3");
        assert_eq!(SlopeBundle::stable(2, 4).unwrap().to_string(), "1/2×2");
        assert_eq!(SlopeBundle::stable(-2, 3).unwrap().to_string(), "-2/3×1");
        assert!(SlopeBundle::parse("1/0×1").is_err());
        assert!(SlopeBundle::parse("1/2").is_err());
    }

    #[test]
    fn isocrystal_to_bundle() {
        let e = bundle_of_isocrystal(&coweight(&[(1, 2), (1, 2), (1, 3), (1, 3), (1, 3)])).unwrap();
        assert_eq!(e.to_string(), "-1/3×1,-1/2×1");
        let trivial = bundle_of_isocrystal(&Coweight::zero(4)).unwrap();
        assert_eq!(trivial.to_string(), "0/1×4");
        let split = bundle_of_isocrystal(&coweight(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(split.to_string(), "0/1×1,-1/1×1");
        assert!(bundle_of_isocrystal(&coweight(&[(3, 4), (3, 4), (1, 4), (1, 4)])).is_err());
        assert!(bundle_of_isocrystal(&coweight(&[(0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn invariant_formulas() {
        let gl5 = parse_group_descriptor("gl:5").unwrap();
        let class = crate::kottwitz::class_from_newton(
            &gl5,
            &coweight(&[(1, 2), (1, 2), (1, 3), (1, 3), (1, 3)]),
        )
        .unwrap();
        assert!(check_nu_formula(&gl5, &class).unwrap());
        let e = bundle_of_isocrystal(&class.newton).unwrap();
        assert_eq!(chern(&e), Int::from(-2));
        assert_eq!(bundle_nu(&e).0[0], ratio(-1, 3));

        let gl4 = parse_group_descriptor("gl:4").unwrap();
        let b = basic_class_from_kappa(&gl4, &coweight(&[(2, 1), (0, 1), (0, 1), (0, 1)])).unwrap();
        let mu = coweight(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(modified_chern(&gl4, &mu, &b).unwrap(), Int::from(0));
    }

    #[test]
    fn cohomology_rules() {
        assert!(hom_nonzero(&ratio(-1, 2), &ratio(-1, 3)));
        assert!(hom_nonzero(&rat(0), &rat(0)));
        assert!(!hom_nonzero(&ratio(-1, 3), &ratio(-1, 2)));
        assert!(h1_vanishes(&rat(0)));
        assert!(h1_vanishes(&ratio(1, 2)));
        assert!(!h1_vanishes(&rat(-1)));
    }

    #[test]
    fn modifications_small_linear_groups() {
        let limits = EnumerationLimits::default();
        let gl2 = parse_group_descriptor("gl:2").unwrap();
        let b = basic_class_from_kappa(&gl2, &coweight(&[(1, 1), (0, 1)])).unwrap();
        let mods = modifications_of_basic(&gl2, &b, &coweight(&[(1, 1), (0, 1)]), &limits).unwrap();
        assert!(mods.minuscule);
        assert_eq!(mods.classes.len(), 1);
        assert!(mods.classes[0].0.newton.is_zero());
        assert_eq!(mods.classes[0].1.as_ref().unwrap().to_string(), "0/1×2");

        let gl4 = parse_group_descriptor("gl:4").unwrap();
        let b = basic_class_from_kappa(&gl4, &coweight(&[(2, 1), (0, 1), (0, 1), (0, 1)])).unwrap();
        let mu = coweight(&[(1, 1), (1, 1), (0, 1), (0, 1)]);
        let mods = modifications_of_basic(&gl4, &b, &mu, &limits).unwrap();
        let shapes: Vec<String> = mods
            .classes
            .iter()
            .map(|(_, e)| e.as_ref().unwrap().to_string())
            .collect();
        assert_eq!(shapes, vec!["0/1×4".to_string(), "1/2×1,-1/2×1".to_string()]);

        // central mu: a single translated class
        let central = coweight(&[(1, 1), (1, 1), (1, 1), (1, 1)]);
        let b = basic_class_from_kappa(&gl4, &coweight(&[(2, 1), (0, 1), (0, 1), (0, 1)])).unwrap();
        let mods = modifications_of_basic(&gl4, &b, &central, &limits).unwrap();
        assert_eq!(mods.classes.len(), 1);

        let nonbasic = crate::kottwitz::class_from_newton(
            &gl2,
            &coweight(&[(1, 1), (0, 1)]),
        )
        .unwrap();
        assert!(matches!(
            modifications_of_basic(&gl2, &nonbasic, &coweight(&[(1, 1), (0, 1)]), &limits),
            Err(KottwitzError::Precondition(_))
        ));
    }

    #[test]
    fn extension_criterion() {
        let e = SlopeBundle::stable(1, 2).unwrap();
        let sub = SlopeBundle::stable(0, 1).unwrap();
        let quot = SlopeBundle::stable(1, 1).unwrap();
        assert!(extension_exists(&e, &sub, &quot).unwrap());

        let split = sub.direct_sum(&quot);
        assert!(extension_exists(&split, &sub, &quot).unwrap());

        assert!(matches!(
            extension_exists(&quot, &quot, &sub),
            Err(KottwitzError::DimensionMismatch { .. })
        ));
        let wrong_degree = SlopeBundle::stable(0, 2).unwrap();
        assert!(matches!(
            extension_exists(&wrong_degree, &sub, &quot),
            Err(KottwitzError::InvalidInput(_))
        ));

        // opposite slope order admits only the split extension
        let o1 = SlopeBundle::stable(1, 1).unwrap();
        let om1 = SlopeBundle::stable(-1, 1).unwrap();
        assert!(extension_exists(&o1.direct_sum(&om1), &o1, &om1).unwrap());
        let trivial = SlopeBundle::stable(0, 2).unwrap();
        assert!(!extension_exists(&trivial, &o1, &om1).unwrap());
        // ... while the admissible order recovers it
        assert!(extension_exists(&trivial, &om1, &o1).unwrap());
    }

    #[test]
    fn splitting_case_table() {
        // two-part target, s ≤ r2
        let e_b = SlopeBundle::stable(1, 3).unwrap();
        let target = SlopeBundle::stable(2, 1)
            .unwrap()
            .direct_sum(&SlopeBundle::stable(-2, 2).unwrap());
        match splitting_witness(&e_b, &target).unwrap() {
            SplittingOutcome::Witness(w) => {
                assert_eq!(w.sub.to_string(), "2/1×1");
                assert_eq!(w.quot.to_string(), "-1/2×1");
                assert_eq!(w.target_sub.to_string(), "2/1×1");
                assert_eq!(w.target_quot.to_string(), "-1/1×2");
            }
            SplittingOutcome::TrivialStratum => panic!("expected a witness"),
        }

        // three-part target (1,1,1), s = 1: the former inequality is tight
        let e_b = SlopeBundle::stable(1, 3).unwrap();
        let target = SlopeBundle::stable(1, 1)
            .unwrap()
            .direct_sum(&SlopeBundle::stable(0, 1).unwrap())
            .direct_sum(&SlopeBundle::stable(-1, 1).unwrap());
        match splitting_witness(&e_b, &target).unwrap() {
            SplittingOutcome::Witness(w) => {
                assert_eq!(w.sub.to_string(), "1/1×1");
                assert_eq!(w.quot.to_string(), "0/1×2");
                assert_eq!(w.target_sub.to_string(), "1/1×1");
                assert_eq!(w.target_quot.to_string(), "0/1×1,-1/1×1");
            }
            SplittingOutcome::TrivialStratum => panic!("expected a witness"),
        }

        // a configuration inside the membership window: all checks hold
        let e_b = SlopeBundle::stable(4, 7).unwrap();
        let target = SlopeBundle::stable(1, 3)
            .unwrap()
            .direct_sum(&SlopeBundle::stable(0, 1).unwrap())
            .direct_sum(&SlopeBundle::stable(-1, 3).unwrap());
        match splitting_witness(&e_b, &target).unwrap() {
            SplittingOutcome::Witness(w) => {
                assert_eq!(w.sub.to_string(), "1/2×2");
                assert_eq!(w.quot.to_string(), "2/3×1");
                assert_eq!(w.target_sub.to_string(), "1/3×1,0/1×1");
                assert_eq!(w.target_quot.to_string(), "-1/3×1");
                assert!(w.is_valid());
            }
            SplittingOutcome::TrivialStratum => panic!("expected a witness"),
        }

        let e_b = SlopeBundle::stable(2, 4).unwrap();
        assert!(matches!(
            splitting_witness(&e_b, &e_b).unwrap(),
            SplittingOutcome::TrivialStratum
        ));
        let uncovered = SlopeBundle::stable(3, 2)
            .unwrap()
            .direct_sum(&SlopeBundle::stable(-3, 2).unwrap());
        assert!(matches!(
            splitting_witness(&e_b, &uncovered),
            Err(KottwitzError::InvalidInput(_))
        ));
    }

    #[test]
    fn disjunction_scan_small() {
        let report = splitting_disjunction_scan(6, true).unwrap();
        assert!(report.counterexamples.is_empty());
        assert!(report.witness_failures.is_empty());
        assert!(report.valid > 0);
        assert!(report.skipped > 0);
    }

    #[test]
    fn jb_dimensions() {
        let gl2 = parse_group_descriptor("gl:2").unwrap();
        let nu = coweight(&[(1, 1), (0, 1)]);
        assert_eq!(jb_graded_dim(&gl2, &nu, &rat(1)).unwrap(), 1);
        assert_eq!(jb_graded_dim(&gl2, &nu, &rat(-1)).unwrap(), 1);
        assert_eq!(jb_graded_dim(&gl2, &nu, &rat(2)).unwrap(), 0);
        assert_eq!(jb_lambda_max(&gl2, &nu).unwrap(), rat(1));

        let gl5 = parse_group_descriptor("gl:5").unwrap();
        let nu = coweight(&[(1, 2), (1, 2), (1, 3), (1, 3), (1, 3)]);
        assert_eq!(jb_graded_dim(&gl5, &nu, &ratio(1, 6)).unwrap(), 6);
        assert_eq!(jb_lambda_max(&gl5, &nu).unwrap(), ratio(1, 6));
        let total: usize = [ratio(1, 6), rat(0), ratio(-1, 6)]
            .iter()
            .map(|l| jb_graded_dim(&gl5, &nu, l).unwrap())
            .sum();
        assert_eq!(total, 20);
    }
}
