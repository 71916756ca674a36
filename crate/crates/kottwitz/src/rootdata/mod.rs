//! Based root data with a finite twist acting on the cocharacter lattice.
//!
//! A datum stores exact integer data: simple roots as coordinate functionals,
//! simple coroots as lattice vectors, the Cartan pairing and a finite-order
//! lattice automorphism permuting the simple (co)roots.  Adjoint realizations
//! of the classical and exceptional families live on the fundamental-coweight
//! basis, `gl` data on the standard lattice `Z^n`.

pub mod pi1;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::traits::Signed;
use num::{One, Zero};

use crate::error::{KottwitzError, Result};
use crate::linalg::{mat_mul_int, mat_vec_rat_int, rat, solve_exact, Int, Rat};

/// Rational cocharacter written in the coordinates of the ambient lattice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(pub Vec<Rat>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![Rat::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Coweight(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_int_vec(v: &[Int]) -> Self {
        Coweight(v.iter().map(|x| Rat::from_integer(x.clone())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.denom().is_one())
    }

    pub fn to_int_vec(&self) -> Option<Vec<Int>> {
        if !self.is_integral() {
            return None;
        }
        Some(self.0.iter().map(|x| x.numer().clone()).collect())
    }

    pub fn add(&self, o: &Coweight) -> Coweight {
        debug_assert_eq!(self.len(), o.len());
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Coweight) -> Coweight {
        debug_assert_eq!(self.len(), o.len());
        Coweight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> Coweight {
        Coweight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn reversed(&self) -> Coweight {
        let mut v = self.0.clone();
        v.reverse();
        Coweight(v)
    }

    /// Parses a comma-separated list of rationals, e.g. `1,1/2,0,-1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let r = Rat::from_str(tok)
                .map_err(|_| KottwitzError::Parse(format!("bad rational `{tok}`")))?;
            coords.push(r);
        }
        Ok(Coweight(coords))
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Family tag of a supported group.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    Gl,
}

impl FromStr for RootFamily {
    type Err = KottwitzError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(RootFamily::A),
            "b" => Ok(RootFamily::B),
            "c" => Ok(RootFamily::C),
            "d" => Ok(RootFamily::D),
            "e" => Ok(RootFamily::E),
            "f" => Ok(RootFamily::F),
            "g" => Ok(RootFamily::G),
            "gl" => Ok(RootFamily::Gl),
            _ => Err(KottwitzError::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// A positive root together with its coroot and simple-root coefficients.
#[derive(Clone, Debug)]
pub struct PosRoot {
    pub coeffs: Vec<i64>,
    pub root: Vec<Int>,
    pub coroot: Vec<Int>,
}

/// Subset of simple-root indices, closed under the twist.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LeviDescriptor {
    pub nodes: Vec<usize>,
}

impl LeviDescriptor {
    pub fn new(datum: &BasedRootDatum, nodes: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = nodes.iter().copied().collect();
        for &i in &set {
            if i >= datum.ss_rank() {
                return Err(KottwitzError::InvalidInput(format!(
                    "node {i} out of range for {}",
                    datum.label
                )));
            }
            if !set.contains(&datum.galois_perm[i]) {
                return Err(KottwitzError::InvalidInput(format!(
                    "node set {nodes:?} not stable under the twist of {}",
                    datum.label
                )));
            }
        }
        Ok(LeviDescriptor {
            nodes: set.into_iter().collect(),
        })
    }

    pub fn full(datum: &BasedRootDatum) -> Self {
        LeviDescriptor {
            nodes: (0..datum.ss_rank()).collect(),
        }
    }
}

/// Based root datum with twist.
#[derive(Clone)]
pub struct BasedRootDatum {
    pub rank: usize,
    pub simple_roots: Vec<Vec<Int>>,
    pub simple_coroots: Vec<Vec<Int>>,
    pub cartan: Vec<Vec<i64>>,
    pub galois_perm: Vec<usize>,
    pub galois_mat: Vec<Vec<Int>>,
    pub galois_order: usize,
    pub label: String,
    positive: Vec<PosRoot>,
}

impl fmt::Debug for BasedRootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BasedRootDatum({})", self.label)
    }
}

fn int_unit_row(n: usize, i: usize) -> Vec<Int> {
    let mut r = vec![Int::zero(); n];
    r[i] = Int::one();
    r
}

fn identity_mat(n: usize) -> Vec<Vec<Int>> {
    (0..n).map(|i| int_unit_row(n, i)).collect()
}

fn chain_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

fn family_cartan(family: RootFamily, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = |msg: &str| Err(KottwitzError::UnsupportedGroup(msg.to_string()));
    match family {
        RootFamily::A => {
            if n < 1 {
                return bad("A requires rank >= 1");
            }
            Ok(chain_cartan(n))
        }
        RootFamily::B => {
            if n < 2 {
                return bad("B requires rank >= 2");
            }
            let mut c = chain_cartan(n);
            c[n - 2][n - 1] = -2;
            Ok(c)
        }
        RootFamily::C => {
            if n < 2 {
                return bad("C requires rank >= 2");
            }
            let mut c = chain_cartan(n);
            c[n - 1][n - 2] = -2;
            Ok(c)
        }
        RootFamily::D => {
            if n < 3 {
                return bad("D requires rank >= 3");
            }
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            for i in 0..n.saturating_sub(3) {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
            c[n - 3][n - 2] = -1;
            c[n - 2][n - 3] = -1;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            Ok(c)
        }
        RootFamily::E => {
            if !(6..=8).contains(&n) {
                return bad("E requires rank 6, 7 or 8");
            }
            let mut c = vec![vec![0i64; n]; n];
            for i in 0..n {
                c[i][i] = 2;
            }
            let mut edges = vec![(0usize, 2usize), (1, 3), (2, 3), (3, 4), (4, 5)];
            if n >= 7 {
                edges.push((5, 6));
            }
            if n >= 8 {
                edges.push((6, 7));
            }
            for (i, j) in edges {
                c[i][j] = -1;
                c[j][i] = -1;
            }
            Ok(c)
        }
        RootFamily::F => {
            if n != 4 {
                return bad("F requires rank 4");
            }
            let mut c = chain_cartan(4);
            c[1][2] = -2;
            Ok(c)
        }
        RootFamily::G => {
            if n != 2 {
                return bad("G requires rank 2");
            }
            Ok(vec![vec![2, -1], vec![-3, 2]])
        }
        RootFamily::Gl => unreachable!(),
    }
}

fn family_perm(family: RootFamily, n: usize, order: usize) -> Result<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let bad = |msg: String| Err(KottwitzError::UnsupportedGroup(msg));
    match (family, order) {
        (_, 1) => Ok(id),
        (RootFamily::A, 2) if n >= 2 => Ok((0..n).map(|i| n - 1 - i).collect()),
        (RootFamily::D, 2) => {
            let mut p = id;
            p.swap(n - 2, n - 1);
            Ok(p)
        }
        (RootFamily::D, 3) if n == 4 => Ok(vec![2, 1, 3, 0]),
        (RootFamily::E, 2) if n == 6 => Ok(vec![5, 1, 4, 3, 2, 0]),
        _ => bad(format!(
            "twist of order {order} unsupported for this family/rank"
        )),
    }
}

/// Builds a supported datum.  `family` is one of `a,b,c,d,e,f,g,gl`;
/// `galois_order` is the order of the diagram twist (1 when split).
pub fn build_datum(family: RootFamily, rank: usize, galois_order: usize) -> Result<BasedRootDatum> {
    if family == RootFamily::Gl {
        return build_gl(rank, galois_order);
    }
    let cartan = family_cartan(family, rank)?;
    let perm = family_perm(family, rank, galois_order)?;
    let n = rank;
    let simple_roots: Vec<Vec<Int>> = (0..n).map(|i| int_unit_row(n, i)).collect();
    let simple_coroots: Vec<Vec<Int>> = (0..n)
        .map(|j| (0..n).map(|i| Int::from(cartan[i][j])).collect())
        .collect();
    let mut galois_mat = vec![vec![Int::zero(); n]; n];
    for i in 0..n {
        galois_mat[perm[i]][i] = Int::one();
    }
    let fam = match family {
        RootFamily::A => "A",
        RootFamily::B => "B",
        RootFamily::C => "C",
        RootFamily::D => "D",
        RootFamily::E => "E",
        RootFamily::F => "F",
        RootFamily::G => "G",
        RootFamily::Gl => unreachable!(),
    };
    let prefix = if galois_order > 1 {
        format!("{galois_order}")
    } else {
        String::new()
    };
    BasedRootDatum::assemble(
        n,
        simple_roots,
        simple_coroots,
        cartan,
        perm,
        galois_mat,
        galois_order,
        format!("{prefix}{fam}{rank}"),
    )
}

fn build_gl(n: usize, galois_order: usize) -> Result<BasedRootDatum> {
    if n < 1 {
        return Err(KottwitzError::UnsupportedGroup(
            "gl requires rank >= 1".into(),
        ));
    }
    if galois_order != 1 && galois_order != 2 {
        return Err(KottwitzError::UnsupportedGroup(
            "gl supports twists of order 1 or 2".into(),
        ));
    }
    let m = n - 1;
    let mut simple_roots = Vec::with_capacity(m);
    let mut simple_coroots = Vec::with_capacity(m);
    for i in 0..m {
        let mut r = vec![Int::zero(); n];
        r[i] = Int::one();
        r[i + 1] = -Int::one();
        simple_roots.push(r.clone());
        simple_coroots.push(r);
    }
    let cartan = chain_cartan(m);
    let (perm, galois_mat) = if galois_order == 2 {
        let perm: Vec<usize> = (0..m).map(|i| m - 1 - i).collect();
        let mut g = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            g[i][n - 1 - i] = -Int::one();
        }
        (perm, g)
    } else {
        ((0..m).collect(), identity_mat(n))
    };
    let prefix = if galois_order > 1 {
        format!("{galois_order}")
    } else {
        String::new()
    };
    BasedRootDatum::assemble(
        n,
        simple_roots,
        simple_coroots,
        cartan,
        perm,
        galois_mat,
        galois_order,
        format!("{prefix}GL{n}"),
    )
}

/// Parses a descriptor `<family>:<rank>[:galois=<k>]`, e.g. `gl:4` or `a:5:galois=2`.
pub fn parse_group_descriptor(s: &str) -> Result<BasedRootDatum> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() < 2 || parts.len() > 3 {
        return Err(KottwitzError::Parse(format!(
            "bad group descriptor `{s}`, expected <family>:<rank>[:galois=<k>]"
        )));
    }
    let family: RootFamily = parts[0].parse()?;
    let rank: usize = parts[1]
        .parse()
        .map_err(|_| KottwitzError::Parse(format!("bad rank `{}`", parts[1])))?;
    let mut galois = 1usize;
    if parts.len() == 3 {
        let kv = parts[2];
        let val = kv
            .strip_prefix("galois=")
            .ok_or_else(|| KottwitzError::Parse(format!("bad descriptor field `{kv}`")))?;
        galois = val
            .parse()
            .map_err(|_| KottwitzError::Parse(format!("bad twist order `{val}`")))?;
    }
    build_datum(family, rank, galois)
}

impl BasedRootDatum {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        rank: usize,
        simple_roots: Vec<Vec<Int>>,
        simple_coroots: Vec<Vec<Int>>,
        cartan: Vec<Vec<i64>>,
        galois_perm: Vec<usize>,
        galois_mat: Vec<Vec<Int>>,
        galois_order: usize,
        label: String,
    ) -> Result<Self> {
        let mut datum = BasedRootDatum {
            rank,
            simple_roots,
            simple_coroots,
            cartan,
            galois_perm,
            galois_mat,
            galois_order,
            label,
            positive: Vec::new(),
        };
        datum.positive = datum.positive_roots_bfs();
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<()> {
        let m = self.ss_rank();
        let fail = |msg: String| Err(KottwitzError::InvalidRootDatum(msg));
        if self.simple_coroots.len() != m || self.cartan.len() != m {
            return fail(format!("{}: inconsistent sizes", self.label));
        }
        for i in 0..m {
            if self.cartan[i][i] != 2 {
                return fail(format!("{}: cartan diagonal", self.label));
            }
            for j in 0..m {
                if i != j && self.cartan[i][j] > 0 {
                    return fail(format!("{}: cartan off-diagonal sign", self.label));
                }
                if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0) {
                    return fail(format!("{}: cartan zero pattern", self.label));
                }
                let p: Int = self.simple_roots[i]
                    .iter()
                    .zip(&self.simple_coroots[j])
                    .map(|(a, b)| a * b)
                    .sum();
                if p != Int::from(self.cartan[i][j]) {
                    return fail(format!("{}: pairing disagrees with cartan", self.label));
                }
                let (pi, pj) = (self.galois_perm[i], self.galois_perm[j]);
                if self.cartan[pi][pj] != self.cartan[i][j] {
                    return fail(format!("{}: twist breaks cartan", self.label));
                }
            }
        }
        for j in 0..m {
            let img = self.apply_mat_int(&self.simple_coroots[j]);
            if img != self.simple_coroots[self.galois_perm[j]] {
                return fail(format!("{}: twist does not permute coroots", self.label));
            }
            let mut row = vec![Int::zero(); self.rank];
            for (k, rk) in row.iter_mut().enumerate() {
                *rk = (0..self.rank)
                    .map(|l| &self.simple_roots[self.galois_perm[j]][l] * &self.galois_mat[l][k])
                    .sum();
            }
            if row != self.simple_roots[j] {
                return fail(format!("{}: twist does not permute roots", self.label));
            }
        }
        let mut pow = identity_mat(self.rank);
        for _ in 0..self.galois_order {
            pow = mat_mul_int(&self.galois_mat, &pow);
        }
        if pow != identity_mat(self.rank) {
            return fail(format!("{}: twist order wrong", self.label));
        }
        Ok(())
    }

    pub fn ss_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn all_nodes(&self) -> Vec<usize> {
        (0..self.ss_rank()).collect()
    }

    pub fn full_levi(&self) -> LeviDescriptor {
        LeviDescriptor::full(self)
    }

    pub fn positive(&self) -> &[PosRoot] {
        &self.positive
    }

    pub fn pair_root(&self, root: &[Int], v: &Coweight) -> Rat {
        root.iter()
            .zip(&v.0)
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .sum()
    }

    pub fn pairing(&self, i: usize, v: &Coweight) -> Rat {
        self.pair_root(&self.simple_roots[i], v)
    }

    pub fn coroot(&self, i: usize) -> Coweight {
        Coweight::from_int_vec(&self.simple_coroots[i])
    }

    pub fn is_dominant_levi(&self, nodes: &[usize], v: &Coweight) -> bool {
        nodes.iter().all(|&i| !self.pairing(i, v).is_negative())
    }

    pub fn is_dominant(&self, v: &Coweight) -> bool {
        (0..self.ss_rank()).all(|i| !self.pairing(i, v).is_negative())
    }

    pub fn simple_reflect(&self, i: usize, v: &Coweight) -> Coweight {
        let p = self.pairing(i, v);
        let mut out = v.clone();
        for (k, c) in out.0.iter_mut().enumerate() {
            *c -= &p * Rat::from_integer(self.simple_coroots[i][k].clone());
        }
        out
    }

    pub fn apply_word(&self, word: &[usize], v: &Coweight) -> Coweight {
        let mut cur = v.clone();
        for &i in word {
            cur = self.simple_reflect(i, &cur);
        }
        cur
    }

    /// Returns the dominant representative together with the applied word
    /// (the word sends the input to the output, leftmost letter first).
    pub fn make_dominant_levi(&self, nodes: &[usize], v: &Coweight) -> (Coweight, Vec<usize>) {
        let mut cur = v.clone();
        let mut word = Vec::new();
        loop {
            match nodes
                .iter()
                .copied()
                .find(|&i| self.pairing(i, &cur).is_negative())
            {
                Some(i) => {
                    cur = self.simple_reflect(i, &cur);
                    word.push(i);
                }
                None => return (cur, word),
            }
        }
    }

    pub fn make_dominant(&self, v: &Coweight) -> (Coweight, Vec<usize>) {
        let nodes = self.all_nodes();
        self.make_dominant_levi(&nodes, v)
    }

    /// Reduced word for the longest element of the parabolic subgroup.
    pub fn w0_word_levi(&self, nodes: &[usize]) -> Vec<usize> {
        if nodes.is_empty() {
            return Vec::new();
        }
        let rows: Vec<Vec<Rat>> = nodes
            .iter()
            .map(|&i| {
                self.simple_roots[i]
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let ones = vec![Rat::one(); nodes.len()];
        let reg = solve_exact(&rows, &ones).expect("independent simple roots");
        let mut cur = Coweight(reg);
        let mut word = Vec::new();
        while let Some(i) = nodes
            .iter()
            .copied()
            .find(|&i| self.pairing(i, &cur).is_positive())
        {
            cur = self.simple_reflect(i, &cur);
            word.push(i);
        }
        let count = self
            .positive
            .iter()
            .filter(|r| {
                r.coeffs
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || nodes.contains(&i))
            })
            .count();
        debug_assert_eq!(word.len(), count);
        word
    }

    pub fn w0_word(&self) -> Vec<usize> {
        self.w0_word_levi(&self.all_nodes())
    }

    /// Node involution `i -> j` with `w0(alpha_i^vee) = -alpha_j^vee` inside
    /// the parabolic generated by `nodes`.
    pub fn w0_node_map(&self, nodes: &[usize]) -> Vec<(usize, usize)> {
        let word = self.w0_word_levi(nodes);
        let mut out = Vec::new();
        for &i in nodes {
            let img = self.apply_word(&word, &self.coroot(i)).neg();
            let j = nodes
                .iter()
                .copied()
                .find(|&j| self.coroot(j) == img)
                .expect("w0 permutes parabolic coroots");
            out.push((i, j));
        }
        out
    }

    pub fn apply_mat_int(&self, v: &[Int]) -> Vec<Int> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| &self.galois_mat[i][j] * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn galois_act(&self, v: &Coweight) -> Coweight {
        Coweight(mat_vec_rat_int(&self.galois_mat, &v.0))
    }

    pub fn galois_average(&self, v: &Coweight) -> Coweight {
        let mut acc = v.clone();
        let mut cur = v.clone();
        for _ in 1..self.galois_order {
            cur = self.galois_act(&cur);
            acc = acc.add(&cur);
        }
        acc.scale(&Rat::new(Int::one(), Int::from(self.galois_order as i64)))
    }

    pub fn is_galois_invariant(&self, v: &Coweight) -> bool {
        self.galois_order == 1 || self.galois_act(v) == *v
    }

    pub fn weyl_orbit_levi(&self, nodes: &[usize], v: &Coweight, cap: usize) -> Result<Vec<Coweight>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.clone());
        queue.push_back(v.clone());
        while let Some(w) = queue.pop_front() {
            for &i in nodes {
                let u = self.simple_reflect(i, &w);
                if !seen.contains(&u) {
                    if seen.len() >= cap {
                        return Err(KottwitzError::CapExceeded(format!(
                            "orbit larger than cap {cap}"
                        )));
                    }
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    pub fn weyl_orbit(&self, v: &Coweight, cap: usize) -> Result<Vec<Coweight>> {
        let nodes = self.all_nodes();
        self.weyl_orbit_levi(&nodes, v, cap)
    }

    /// Average over the parabolic Weyl group, computed as the unique vector
    /// `v + sum c_i alpha_i^vee` killed by all simple roots of the parabolic.
    pub fn weyl_average_levi(&self, nodes: &[usize], v: &Coweight) -> Coweight {
        if nodes.is_empty() {
            return v.clone();
        }
        let a: Vec<Vec<Rat>> = nodes
            .iter()
            .map(|&j| {
                nodes
                    .iter()
                    .map(|&i| rat(self.cartan[j][i]))
                    .collect::<Vec<_>>()
            })
            .collect();
        let b: Vec<Rat> = nodes.iter().map(|&j| -self.pairing(j, v)).collect();
        let c = solve_exact(&a, &b).expect("cartan submatrix nonsingular");
        let mut out = v.clone();
        for (pos, &i) in nodes.iter().enumerate() {
            for (k, entry) in out.0.iter_mut().enumerate() {
                *entry += &c[pos] * Rat::from_integer(self.simple_coroots[i][k].clone());
            }
        }
        debug_assert!(nodes.iter().all(|&j| self.pairing(j, &out).is_zero()));
        out
    }

    pub fn weyl_average(&self, v: &Coweight) -> Coweight {
        let nodes = self.all_nodes();
        self.weyl_average_levi(&nodes, v)
    }

    /// Orbits of the twist on simple-root indices, sorted by least element.
    pub fn node_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.ss_rank()];
        let mut orbits = Vec::new();
        for i in 0..self.ss_rank() {
            if seen[i] {
                continue;
            }
            let mut orb = Vec::new();
            let mut j = i;
            loop {
                seen[j] = true;
                orb.push(j);
                j = self.galois_perm[j];
                if j == i {
                    break;
                }
            }
            orb.sort_unstable();
            orbits.push(orb);
        }
        orbits
    }

    pub fn orbit_of(&self, node: usize) -> Vec<usize> {
        self.node_orbits()
            .into_iter()
            .find(|o| o.contains(&node))
            .expect("node in range")
    }

    pub fn centralizer_nodes(&self, v: &Coweight) -> Vec<usize> {
        (0..self.ss_rank())
            .filter(|&i| self.pairing(i, v).is_zero())
            .collect()
    }

    fn orbit_coroot_sum(&self, orbit: &[usize]) -> Coweight {
        let mut acc = Coweight::zero(self.rank);
        for &i in orbit {
            acc = acc.add(&self.coroot(i));
        }
        acc
    }

    /// Coefficients of `d` over the orbit-summed simple coroots, when `d`
    /// lies in their span.  Orbit order matches `node_orbits`.
    pub fn relative_expansion(&self, d: &Coweight) -> Option<Vec<Rat>> {
        let orbits = self.node_orbits();
        let cols: Vec<Coweight> = orbits.iter().map(|o| self.orbit_coroot_sum(o)).collect();
        let rows = self.rank;
        let mut a = vec![vec![Rat::zero(); cols.len()]; rows];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..rows {
                a[i][j] = col.0[i].clone();
            }
        }
        solve_exact(&a, &d.0)
    }

    /// Like `relative_expansion`, over the orbits contained in a Levi.
    pub fn relative_expansion_levi(&self, nodes: &[usize], d: &Coweight) -> Option<Vec<Rat>> {
        let orbits: Vec<Vec<usize>> = self
            .node_orbits()
            .into_iter()
            .filter(|o| o.iter().all(|i| nodes.contains(i)))
            .collect();
        let cols: Vec<Coweight> = orbits.iter().map(|o| self.orbit_coroot_sum(o)).collect();
        let mut a = vec![vec![Rat::zero(); cols.len()]; self.rank];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..self.rank {
                a[i][j] = col.0[i].clone();
            }
        }
        solve_exact(&a, &d.0)
    }

    /// Dominance order relative to a Levi.
    pub fn dominance_leq_levi(&self, nodes: &[usize], a: &Coweight, b: &Coweight) -> bool {
        match self.relative_expansion_levi(nodes, &b.sub(a)) {
            None => false,
            Some(c) => c.iter().all(|x| !x.is_negative()),
        }
    }

    /// Coefficients of `d` over all simple coroots (absolute expansion).
    pub fn simple_coroot_expansion(&self, d: &Coweight) -> Option<Vec<Rat>> {
        let m = self.ss_rank();
        let mut a = vec![vec![Rat::zero(); m]; self.rank];
        for (j, cr) in self.simple_coroots.iter().enumerate() {
            for i in 0..self.rank {
                a[i][j] = Rat::from_integer(cr[i].clone());
            }
        }
        solve_exact(&a, &d.0)
    }

    /// Dominance order: `a <= b` iff `b - a` is a nonnegative rational
    /// combination of the orbit-summed simple coroots.
    pub fn dominance_leq(&self, a: &Coweight, b: &Coweight) -> Result<bool> {
        if a.len() != self.rank || b.len() != self.rank {
            return Err(KottwitzError::DimensionMismatch {
                expected: self.rank,
                got: a.len().max(b.len()),
            });
        }
        let d = b.sub(a);
        match self.relative_expansion(&d) {
            None => Ok(false),
            Some(c) => Ok(c.iter().all(|x| !x.is_negative())),
        }
    }

    pub fn is_integral(&self, v: &Coweight) -> bool {
        v.is_integral()
    }

    pub fn is_minuscule(&self, mu: &Coweight) -> bool {
        self.positive.iter().all(|r| {
            let p = self.pair_root(&r.root, mu);
            p == Rat::one() || p.is_zero() || p == -Rat::one()
        })
    }

    /// Linear functional taking value 1 on every simple coroot.
    pub fn degree_functional(&self) -> Vec<Rat> {
        let m = self.ss_rank();
        if m == 0 {
            return vec![Rat::zero(); self.rank];
        }
        let a: Vec<Vec<Rat>> = self
            .simple_coroots
            .iter()
            .map(|cr| cr.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        let b = vec![Rat::one(); m];
        solve_exact(&a, &b).expect("independent simple coroots")
    }

    pub fn degree_value(&self, phi: &[Rat], v: &Coweight) -> Rat {
        phi.iter().zip(&v.0).map(|(a, b)| a * b).sum()
    }

    fn positive_roots_bfs(&self) -> Vec<PosRoot> {
        let m = self.ss_rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<PosRoot> = VecDeque::new();
        let mut out = Vec::new();
        for i in 0..m {
            let mut coeffs = vec![0i64; m];
            coeffs[i] = 1;
            let r = PosRoot {
                coeffs: coeffs.clone(),
                root: self.simple_roots[i].clone(),
                coroot: self.simple_coroots[i].clone(),
            };
            seen.insert(coeffs);
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for j in 0..m {
                let p: Int = r
                    .root
                    .iter()
                    .zip(&self.simple_coroots[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let q: Int = self.simple_roots[j]
                    .iter()
                    .zip(&r.coroot)
                    .map(|(a, b)| a * b)
                    .sum();
                let pc: i64 = i64::try_from(&p).expect("small pairing");
                let mut coeffs = r.coeffs.clone();
                coeffs[j] -= pc;
                if coeffs.iter().any(|&c| c < 0) || seen.contains(&coeffs) {
                    continue;
                }
                let root: Vec<Int> = r
                    .root
                    .iter()
                    .zip(&self.simple_roots[j])
                    .map(|(a, b)| a - &p * b)
                    .collect();
                let coroot: Vec<Int> = r
                    .coroot
                    .iter()
                    .zip(&self.simple_coroots[j])
                    .map(|(a, b)| a - &q * b)
                    .collect();
                seen.insert(coeffs.clone());
                queue.push_back(PosRoot {
                    coeffs,
                    root,
                    coroot,
                });
            }
            out.push(r);
        }
        out.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        out
    }

    /// Sub-datum spanned by the given twist-stable node set.  Lattice and
    /// twist are unchanged; simple (co)roots are re-indexed.
    pub fn levi_datum(&self, levi: &LeviDescriptor) -> Result<BasedRootDatum> {
        let nodes = &levi.nodes;
        let simple_roots: Vec<Vec<Int>> =
            nodes.iter().map(|&i| self.simple_roots[i].clone()).collect();
        let simple_coroots: Vec<Vec<Int>> = nodes
            .iter()
            .map(|&i| self.simple_coroots[i].clone())
            .collect();
        let cartan: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.cartan[i][j]).collect())
            .collect();
        let perm: Vec<usize> = nodes
            .iter()
            .map(|&i| {
                nodes
                    .iter()
                    .position(|&j| j == self.galois_perm[i])
                    .expect("twist-stable node set")
            })
            .collect();
        let label = format!(
            "{}{{{}}}",
            self.label,
            nodes
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        BasedRootDatum::assemble(
            self.rank,
            simple_roots,
            simple_coroots,
            cartan,
            perm,
            self.galois_mat.clone(),
            self.galois_order,
            label,
        )
    }

    /// Block structure `(offset, size)` when the datum is a product of
    /// `GL`-factors on the standard lattice with trivial twist.
    pub fn gl_blocks(&self) -> Option<Vec<(usize, usize)>> {
        if self.galois_order != 1 {
            return None;
        }
        let mut starts = BTreeSet::new();
        for (i, cr) in self.simple_coroots.iter().enumerate() {
            let mut support: Vec<usize> = Vec::new();
            for (k, x) in cr.iter().enumerate() {
                if !x.is_zero() {
                    support.push(k);
                }
            }
            if support.len() != 2 {
                return None;
            }
            let (a, b) = (support[0], support[1]);
            if b != a + 1 || cr[a] != Int::one() || cr[b] != -Int::one() {
                return None;
            }
            if self.simple_roots[i] != *cr {
                return None;
            }
            if !starts.insert(a) {
                return None;
            }
        }
        let mut blocks = Vec::new();
        let mut pos = 0usize;
        while pos < self.rank {
            let mut end = pos;
            while starts.contains(&end) {
                end += 1;
            }
            blocks.push((pos, end + 1 - pos));
            pos = end + 1;
        }
        Some(blocks)
    }

    /// True when the coordinates are coweight coordinates of an adjoint
    /// realization (simple roots are unit functionals).
    /// Family and node count of the diagram when it matches one connected
    /// standard type (chains report as A even on a general-linear lattice).
    pub fn diagram_family(&self) -> Option<(RootFamily, usize)> {
        let n = self.ss_rank();
        for family in [
            RootFamily::A,
            RootFamily::B,
            RootFamily::C,
            RootFamily::D,
            RootFamily::E,
            RootFamily::F,
            RootFamily::G,
        ] {
            if let Ok(c) = family_cartan(family, n) {
                if c == self.cartan {
                    return Some((family, n));
                }
            }
        }
        None
    }

    pub fn adjoint_coords(&self) -> bool {
        self.ss_rank() == self.rank
            && self
                .simple_roots
                .iter()
                .enumerate()
                .all(|(i, r)| *r == int_unit_row(self.rank, i))
    }
}
