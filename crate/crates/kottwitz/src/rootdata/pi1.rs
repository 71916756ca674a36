//! Component lattices of Levi subgroups: the cocharacter lattice modulo
//! coroots and twist, with exact torsion bookkeeping.

use std::fmt;

use num::traits::Signed;
use num::{One, Zero};

use super::{BasedRootDatum, Coweight, LeviDescriptor};
use crate::error::{KottwitzError, Result};
use crate::linalg::{smith_normal_form, solve_exact, Int, Rat};

/// Element written in canonical coordinates of a `Pi1Group`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Pi1Element {
    coords: Vec<Int>,
    tag: String,
}

impl Pi1Element {
    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }
}

impl fmt::Display for Pi1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Quotient of the cocharacter lattice by the coroots of a Levi and by the
/// twist augmentation, presented through a Smith normal form.
#[derive(Clone, Debug)]
pub struct Pi1Group {
    pub nodes: Vec<usize>,
    pub invariants: Vec<Int>,
    tag: String,
    rank: usize,
    u: Vec<Vec<Int>>,
    uinv: Vec<Vec<Int>>,
    free_rows: Vec<usize>,
    torsion_rows: Vec<usize>,
}

impl Pi1Group {
    pub fn new(datum: &BasedRootDatum, levi: &LeviDescriptor) -> Self {
        let rank = datum.rank;
        let mut cols: Vec<Vec<Int>> = levi
            .nodes
            .iter()
            .map(|&i| datum.simple_coroots[i].clone())
            .collect();
        if datum.galois_order > 1 {
            for k in 0..rank {
                let mut e = vec![Int::zero(); rank];
                e[k] = Int::one();
                let mut col = datum.apply_mat_int(&e);
                for (c, b) in col.iter_mut().zip(&e) {
                    *c -= b;
                }
                cols.push(col);
            }
        }
        let ncols = cols.len().max(1);
        let mut a = vec![vec![Int::zero(); ncols]; rank];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..rank {
                a[i][j] = col[i].clone();
            }
        }
        let snf = smith_normal_form(&a);
        let invariants = snf.diag.clone();
        let free_rows: Vec<usize> = (0..rank).filter(|&i| invariants[i].is_zero()).collect();
        let torsion_rows: Vec<usize> = (0..rank)
            .filter(|&i| !invariants[i].is_zero() && !invariants[i].is_one())
            .collect();
        let tag = format!(
            "{}[{}]",
            datum.label,
            levi.nodes
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        Pi1Group {
            nodes: levi.nodes.clone(),
            invariants,
            tag,
            rank,
            u: snf.u,
            uinv: snf.uinv,
            free_rows,
            torsion_rows,
        }
    }

    pub fn full(datum: &BasedRootDatum) -> Self {
        Pi1Group::new(datum, &LeviDescriptor::full(datum))
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn free_rank(&self) -> usize {
        self.free_rows.len()
    }

    pub fn torsion_orders(&self) -> Vec<Int> {
        self.torsion_rows
            .iter()
            .map(|&i| self.invariants[i].clone())
            .collect()
    }

    pub fn check_element(&self, e: &Pi1Element) -> Result<()> {
        if e.tag != self.tag {
            return Err(KottwitzError::InvalidInput(format!(
                "element of {} used with {}",
                e.tag, self.tag
            )));
        }
        Ok(())
    }

    fn canon(&self, mut coords: Vec<Int>) -> Pi1Element {
        for i in 0..self.rank {
            let d = &self.invariants[i];
            if d.is_one() {
                coords[i] = Int::zero();
            } else if !d.is_zero() {
                let mut r = &coords[i] % d;
                if r.is_negative() {
                    r += d;
                }
                coords[i] = r;
            }
        }
        Pi1Element {
            coords,
            tag: self.tag.clone(),
        }
    }

    pub fn project(&self, x: &[Int]) -> Pi1Element {
        debug_assert_eq!(x.len(), self.rank);
        let coords: Vec<Int> = self
            .u
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect();
        self.canon(coords)
    }

    pub fn project_coweight(&self, v: &Coweight) -> Result<Pi1Element> {
        if v.len() != self.rank {
            return Err(KottwitzError::DimensionMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        let ints = v.to_int_vec().ok_or_else(|| {
            KottwitzError::InvalidInput(format!("non-integral cocharacter {v}"))
        })?;
        Ok(self.project(&ints))
    }

    /// Free coordinates of a rational cocharacter class.
    pub fn free_values_q(&self, v: &Coweight) -> Vec<Rat> {
        self.free_rows
            .iter()
            .map(|&r| {
                self.u[r]
                    .iter()
                    .zip(&v.0)
                    .map(|(a, b)| Rat::from_integer(a.clone()) * b)
                    .sum()
            })
            .collect()
    }

    pub fn free_values(&self, e: &Pi1Element) -> Vec<Int> {
        self.free_rows.iter().map(|&r| e.coords[r].clone()).collect()
    }

    pub fn torsion_values(&self, e: &Pi1Element) -> Vec<Int> {
        self.torsion_rows
            .iter()
            .map(|&r| e.coords[r].clone())
            .collect()
    }

    /// Integral lift along the inverse change of basis.
    pub fn lift(&self, e: &Pi1Element) -> Vec<Int> {
        (0..self.rank)
            .map(|i| {
                self.uinv[i]
                    .iter()
                    .zip(&e.coords)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn zero(&self) -> Pi1Element {
        self.canon(vec![Int::zero(); self.rank])
    }

    pub fn add(&self, a: &Pi1Element, b: &Pi1Element) -> Pi1Element {
        self.canon(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    pub fn sub(&self, a: &Pi1Element, b: &Pi1Element) -> Pi1Element {
        self.canon(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Pi1Element) -> Pi1Element {
        self.canon(a.coords.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &Pi1Element, c: &Int) -> Pi1Element {
        self.canon(a.coords.iter().map(|x| x * c).collect())
    }

    pub fn is_torsion(&self, e: &Pi1Element) -> bool {
        self.free_rows.iter().all(|&r| e.coords[r].is_zero())
    }

    pub fn from_parts(&self, free: &[Int], torsion: &[Int]) -> Pi1Element {
        debug_assert_eq!(free.len(), self.free_rows.len());
        debug_assert_eq!(torsion.len(), self.torsion_rows.len());
        let mut coords = vec![Int::zero(); self.rank];
        for (pos, &r) in self.free_rows.iter().enumerate() {
            coords[r] = free[pos].clone();
        }
        for (pos, &r) in self.torsion_rows.iter().enumerate() {
            coords[r] = torsion[pos].clone();
        }
        self.canon(coords)
    }

    /// All torsion elements, in lexicographic coordinate order.
    pub fn torsion_elements(&self) -> Vec<Pi1Element> {
        let mut out: Vec<Vec<Int>> = vec![Vec::new()];
        for &r in &self.torsion_rows {
            let d_i64 = i64::try_from(&self.invariants[r]).expect("small torsion order");
            let mut next = Vec::new();
            for prefix in &out {
                for v in 0..d_i64 {
                    let mut p = prefix.clone();
                    p.push(Int::from(v));
                    next.push(p);
                }
            }
            out = next;
        }
        out_phase(self, out)
    }

    /// Transfers an element along the canonical map into a coarser quotient
    /// (the relations of `self` must be contained in those of `other`).
    pub fn transfer_to(&self, other: &Pi1Group, e: &Pi1Element) -> Pi1Element {
        other.project(&self.lift(e))
    }

    /// Newton point of the basic class with the given invariant: the
    /// twist-Weyl average of any integral lift.
    pub fn basic_newton(&self, datum: &BasedRootDatum, e: &Pi1Element) -> Coweight {
        let lift = Coweight::from_int_vec(&self.lift(e));
        let avg = datum.weyl_average_levi(&self.nodes, &lift);
        datum.galois_average(&avg)
    }

    pub fn rationalize(&self, e: &Pi1Element) -> Vec<Rat> {
        self.free_values(e)
            .into_iter()
            .map(Rat::from_integer)
            .collect()
    }

    /// Rows with nontrivial invariant factor, in row order (torsion first,
    /// then free).  These are the coordinates worth printing.
    pub fn display_rows(&self) -> Vec<usize> {
        (0..self.rank)
            .filter(|&i| !self.invariants[i].is_one())
            .collect()
    }

    pub fn display_values(&self, e: &Pi1Element) -> Vec<Int> {
        self.display_rows()
            .iter()
            .map(|&r| e.coords[r].clone())
            .collect()
    }

    pub fn element_from_display(&self, vals: &[Int]) -> Result<Pi1Element> {
        let rows = self.display_rows();
        if vals.len() != rows.len() {
            return Err(KottwitzError::InvalidInput(format!(
                "{} expects {} invariant coordinates, got {}",
                self.tag,
                rows.len(),
                vals.len()
            )));
        }
        let mut coords = vec![Int::zero(); self.rank];
        for (&r, v) in rows.iter().zip(vals) {
            coords[r] = v.clone();
        }
        Ok(self.canon(coords))
    }

    /// Sum of absolute values of the change-of-basis row for each free
    /// coordinate; used to bound enumeration boxes.
    pub fn free_row_abs_sums(&self) -> Vec<Int> {
        self.free_rows
            .iter()
            .map(|&r| self.u[r].iter().map(|x| x.abs()).sum())
            .collect()
    }
}

fn out_phase(group: &Pi1Group, torsion_tuples: Vec<Vec<Int>>) -> Vec<Pi1Element> {
    let zero_free = vec![Int::zero(); group.free_rows.len()];
    torsion_tuples
        .into_iter()
        .map(|t| group.from_parts(&zero_free, &t))
        .collect()
}

/// Unique torsion element of `m` mapping to `eps` in `g`, when it exists.
pub fn torsion_preimage(
    m: &Pi1Group,
    g: &Pi1Group,
    eps: &Pi1Element,
) -> Result<Option<Pi1Element>> {
    g.check_element(eps)?;
    let mut found = None;
    for t in m.torsion_elements() {
        if m.transfer_to(g, &t) == *eps {
            if found.is_some() {
                return Err(KottwitzError::InvalidRootDatum(
                    "torsion transfer not injective".into(),
                ));
            }
            found = Some(t);
        }
    }
    Ok(found)
}

fn generator_orbits(datum: &BasedRootDatum, levi: &[usize]) -> Vec<Vec<usize>> {
    datum
        .node_orbits()
        .into_iter()
        .filter(|o| o.iter().any(|i| !levi.contains(i)))
        .collect()
}

/// Order on rational classes: `q2 - q1` must be a nonnegative rational
/// combination of the free images of the simple coroots outside the Levi.
pub fn preceq_m_q(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    q1: &[Rat],
    q2: &[Rat],
) -> Result<bool> {
    let group = Pi1Group::new(datum, levi);
    let gens = generator_orbits(datum, &levi.nodes);
    let cols: Vec<Vec<Rat>> = gens
        .iter()
        .map(|o| {
            group
                .free_values_q(&datum.coroot(o[0]))
                .into_iter()
                .collect()
        })
        .collect();
    solve_cone(&cols, q1, q2).map(|c| c.is_some())
}

fn solve_cone(cols: &[Vec<Rat>], q1: &[Rat], q2: &[Rat]) -> Result<Option<Vec<Rat>>> {
    if q1.len() != q2.len() {
        return Err(KottwitzError::DimensionMismatch {
            expected: q1.len(),
            got: q2.len(),
        });
    }
    let rows = q1.len();
    let mut a = vec![vec![Rat::zero(); cols.len()]; rows];
    for (j, col) in cols.iter().enumerate() {
        debug_assert_eq!(col.len(), rows);
        for i in 0..rows {
            a[i][j] = col[i].clone();
        }
    }
    let b: Vec<Rat> = q2.iter().zip(q1).map(|(x, y)| x - y).collect();
    match solve_exact(&a, &b) {
        None => Ok(None),
        Some(c) => {
            if c.iter().all(|x| !x.is_negative()) {
                Ok(Some(c))
            } else {
                Ok(None)
            }
        }
    }
}

/// Order on component classes of a Levi: difference must be a nonnegative
/// (integral when `integral` is set) combination of coroot images from
/// outside the Levi.
pub fn preceq_m(
    datum: &BasedRootDatum,
    levi: &LeviDescriptor,
    e1: &Pi1Element,
    e2: &Pi1Element,
    integral: bool,
) -> Result<bool> {
    let group = Pi1Group::new(datum, levi);
    group.check_element(e1)?;
    group.check_element(e2)?;
    let gens = generator_orbits(datum, &levi.nodes);
    let cols: Vec<Vec<Rat>> = gens
        .iter()
        .map(|o| group.free_values_q(&datum.coroot(o[0])))
        .collect();
    let q1 = group.rationalize(e1);
    let q2 = group.rationalize(e2);
    let c = match solve_cone(&cols, &q1, &q2)? {
        None => return Ok(false),
        Some(c) => c,
    };
    if !integral {
        return Ok(true);
    }
    if !c.iter().all(|x| x.denom().is_one()) {
        return Ok(false);
    }
    let mut acc = e1.clone();
    for (j, o) in gens.iter().enumerate() {
        let gen = group.project_coweight(&datum.coroot(o[0]))?;
        acc = group.add(&acc, &group.scale(&gen, c[j].numer()));
    }
    Ok(acc == *e2)
}

#[cfg(test)]
mod tests {
    use super::super::{build_datum, RootFamily};
    use super::*;

    #[test]
    fn gl_component_group_is_degree() {
        let gl4 = build_datum(RootFamily::Gl, 4, 1).unwrap();
        let g = Pi1Group::full(&gl4);
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion_orders().is_empty());
        let mu = Coweight::parse("1,1,0,0").unwrap();
        let e = g.project_coweight(&mu).unwrap();
        assert_eq!(g.free_values(&e), vec![Int::from(2)]);
        let nu = Coweight::parse("1/2,1/2,1/2,1/2").unwrap();
        assert_eq!(g.free_values_q(&nu), vec![Rat::from_integer(Int::from(2))]);
    }

    #[test]
    fn adjoint_a_n_torsion() {
        for n in 1..=4usize {
            let d = build_datum(RootFamily::A, n, 1).unwrap();
            let g = Pi1Group::full(&d);
            assert_eq!(g.free_rank(), 0);
            assert_eq!(g.torsion_orders(), vec![Int::from((n + 1) as i64)]);
            assert_eq!(g.torsion_elements().len(), n + 1);
        }
    }

    #[test]
    fn twisted_a3_component_group() {
        // The flip acts by -1 on Z/4, so the coinvariants collapse to Z/2.
        let d = build_datum(RootFamily::A, 3, 2).unwrap();
        let g = Pi1Group::full(&d);
        let total: Int = g.torsion_orders().iter().product();
        assert_eq!(total, Int::from(2));
        // Order-3 twist of D4: the rotation cycles the three nontrivial
        // classes of (Z/2)^2, so gamma - 1 is invertible mod 2.
        let d4 = build_datum(RootFamily::D, 4, 3).unwrap();
        let g4 = Pi1Group::full(&d4);
        let total4: Int = g4.torsion_orders().iter().product();
        assert_eq!(total4, Int::from(1));
        assert_eq!(g4.free_rank(), 0);
    }

    #[test]
    fn lift_projects_back() {
        let d = build_datum(RootFamily::A, 3, 1).unwrap();
        let g = Pi1Group::full(&d);
        for e in g.torsion_elements() {
            let lift = g.lift(&e);
            assert_eq!(g.project(&lift), e);
        }
        let gl = build_datum(RootFamily::Gl, 5, 1).unwrap();
        let levi = LeviDescriptor::new(&gl, &[0, 1, 3]).unwrap();
        let g = Pi1Group::new(&gl, &levi);
        assert_eq!(g.free_rank(), 2);
        let e = g.from_parts(&[Int::from(3), Int::from(-1)], &[]);
        assert_eq!(g.project(&g.lift(&e)), e);
    }

    #[test]
    fn transfer_levi_to_full() {
        let gl = build_datum(RootFamily::Gl, 4, 1).unwrap();
        let levi = LeviDescriptor::new(&gl, &[0, 2]).unwrap();
        let m = Pi1Group::new(&gl, &levi);
        let g = Pi1Group::full(&gl);
        let v = Coweight::parse("1,0,1,0").unwrap();
        let em = m.project_coweight(&v).unwrap();
        let eg = m.transfer_to(&g, &em);
        assert_eq!(g.free_values(&eg), vec![Int::from(2)]);
    }

    #[test]
    fn basic_newton_of_degree() {
        let gl = build_datum(RootFamily::Gl, 2, 1).unwrap();
        let g = Pi1Group::full(&gl);
        let e = g.project_coweight(&Coweight::parse("1,0").unwrap()).unwrap();
        assert_eq!(
            g.basic_newton(&gl, &e),
            Coweight::parse("1/2,1/2").unwrap()
        );
    }

    #[test]
    fn torsion_preimage_injectivity() {
        let d = build_datum(RootFamily::A, 3, 1).unwrap();
        let levi = LeviDescriptor::new(&d, &[0, 2]).unwrap();
        let m = Pi1Group::new(&d, &levi);
        let g = Pi1Group::full(&d);
        for t in m.torsion_elements() {
            let img = m.transfer_to(&g, &t);
            let back = torsion_preimage(&m, &g, &img).unwrap();
            assert_eq!(back, Some(t));
        }
    }

    #[test]
    fn preceq_gl_examples() {
        let gl = build_datum(RootFamily::Gl, 2, 1).unwrap();
        let levi = LeviDescriptor::new(&gl, &[]).unwrap();
        let t = Pi1Group::new(&gl, &levi);
        let a = t
            .project_coweight(&Coweight::parse("0,1").unwrap())
            .unwrap();
        let b = t
            .project_coweight(&Coweight::parse("1,0").unwrap())
            .unwrap();
        assert!(preceq_m(&gl, &levi, &a, &b, true).unwrap());
        assert!(preceq_m(&gl, &levi, &a, &b, false).unwrap());
        assert!(!preceq_m(&gl, &levi, &b, &a, false).unwrap());
    }

    #[test]
    fn preceq_integral_needs_lattice_point() {
        let gl = build_datum(RootFamily::Gl, 3, 1).unwrap();
        let levi = LeviDescriptor::new(&gl, &[]).unwrap();
        let t = Pi1Group::new(&gl, &levi);
        let a = t
            .project_coweight(&Coweight::parse("0,1,1").unwrap())
            .unwrap();
        let b = t
            .project_coweight(&Coweight::parse("1,1,0").unwrap())
            .unwrap();
        // difference is one simple coroot: integral and rational agree
        assert!(preceq_m(&gl, &levi, &a, &b, true).unwrap());
        let q1 = t.rationalize(&a);
        let mut q2 = t.rationalize(&b);
        // shift target by half a coroot: rational yes, integral no
        let half = t.free_values_q(&Coweight::parse("1/2,0,-1/2").unwrap());
        for (x, h) in q2.iter_mut().zip(&half) {
            *x += h;
        }
        assert!(preceq_m_q(&gl, &levi, &q1, &q2).unwrap());
    }
}
