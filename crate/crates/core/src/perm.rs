//! Exact permutation groups on small domains.
//!
//! Elements are permutations of `{0, …, n-1}` stored by their image vector.
//! Groups are always given by a faithful permutation action; orders are
//! computed with a deterministic Schreier-Sims stabilizer chain and can be
//! cross-checked against exhaustive closure for small groups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from group construction and enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The image vector is not a bijection on its domain.
    NotABijection,
    /// Enumeration or order exceeded the configured cap.
    CapExceeded { cap: u128 },
    /// Parameter must be an odd prime.
    NotAnOddPrime(usize),
    /// Element does not belong to the group.
    NotInGroup,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection => write!(f, "images do not form a bijection"),
            PermError::CapExceeded { cap } => write!(f, "group size exceeds cap {cap}"),
            PermError::NotAnOddPrime(p) => write!(f, "{p} is not an odd prime"),
            PermError::NotInGroup => write!(f, "element is not in the group"),
        }
    }
}

/// A permutation of `{0, …, n-1}`, stored as its image vector.
///
/// `Ord` compares image vectors lexicographically; every deterministic
/// "lexicographically least" choice in this crate refers to that order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// The identity on `n` points.
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotABijection);
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation on `n` points from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w];
                let to = cycle[(w + 1) % cycle.len()];
                if from >= n || to >= n {
                    return Err(PermError::NotABijection);
                }
                images[from] = to;
            }
        }
        Perm::from_images(images)
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im)
    }

    /// Composition `self ∘ other`: the result maps `i` to `self(other(i))`.
    ///
    /// Panics if the domain sizes differ.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.domain_size(),
            other.domain_size(),
            "compose: domain sizes differ"
        );
        Perm {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Perm { images }
    }

    /// `self` raised to an integer power (negative powers via the inverse).
    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Perm::identity(self.domain_size());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = sq.compose(&acc);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Least `m ≥ 1` with `self^m = identity` (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut ord: u64 = 1;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// Disjoint cycle decomposition, fixed points omitted, cycles led by
    /// their least point and sorted by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// One level of a stabilizer chain: a base point and the orbit transversal
/// of that point under the generators fixing all earlier base points.
struct ChainLevel {
    base: usize,
    /// Generators first discovered at this level. The generating set of the
    /// level-`l` subgroup is the union of `introduced` over all levels ≥ l.
    introduced: Vec<Perm>,
    transversal: BTreeMap<usize, Perm>,
}

impl ChainLevel {
    fn new(domain: usize, base: usize) -> Self {
        let mut transversal = BTreeMap::new();
        transversal.insert(base, Perm::identity(domain));
        ChainLevel { base, introduced: Vec::new(), transversal }
    }
}

/// Deterministic Schreier-Sims stabilizer chain.
///
/// Level `l` describes the subgroup fixing the first `l` base points; the
/// group order is the product of the base-point orbit sizes. A base prefix
/// can be prescribed, which the automorphism search uses to read off
/// point-stabilizer generators along its first path.
pub struct StabChain {
    domain_size: usize,
    levels: Vec<ChainLevel>,
}

impl StabChain {
    pub fn new(domain_size: usize, gens: &[Perm]) -> Self {
        Self::with_base_hint(domain_size, gens, &[])
    }

    /// Builds a chain whose base starts with the given points, in order.
    pub fn with_base_hint(domain_size: usize, gens: &[Perm], base_hint: &[usize]) -> Self {
        let mut chain = StabChain {
            domain_size,
            levels: base_hint
                .iter()
                .map(|&b| ChainLevel::new(domain_size, b))
                .collect(),
        };
        for g in gens {
            chain.insert(g.clone());
        }
        chain
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    /// Group order as the product of orbit sizes.
    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        for level in &self.levels {
            ord = ord
                .checked_mul(level.transversal.len() as u128)
                .expect("group order exceeds u128");
        }
        ord
    }

    /// Generators of the subgroup fixing the first `level` base points.
    pub fn stabilizer_gens(&self, level: usize) -> Vec<Perm> {
        self.levels
            .iter()
            .skip(level)
            .flat_map(|lv| lv.introduced.iter().cloned())
            .collect()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|lv| lv.base).collect()
    }

    fn sift_from(&self, start: usize, g: &Perm) -> Result<(), (Perm, usize)> {
        let mut h = g.clone();
        for (k, level) in self.levels.iter().enumerate().skip(start) {
            if h.is_identity() {
                return Ok(());
            }
            let img = h.apply(level.base);
            match level.transversal.get(&img) {
                Some(rep) => h = rep.inverse().compose(&h),
                None => return Err((h, k)),
            }
        }
        if h.is_identity() {
            Ok(())
        } else {
            Err((h, self.levels.len()))
        }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.domain_size() == self.domain_size && self.sift_from(0, g).is_ok()
    }

    /// Adds a group element, extending and re-verifying the chain if new.
    pub fn insert(&mut self, g: Perm) {
        assert_eq!(g.domain_size(), self.domain_size, "insert: domain mismatch");
        if let Err((h, level)) = self.sift_from(0, &g) {
            self.introduce(level, h);
            self.verify();
        }
    }

    fn introduce(&mut self, level: usize, h: Perm) {
        if level == self.levels.len() {
            let base = (0..self.domain_size)
                .find(|&p| h.apply(p) != p)
                .expect("non-identity residue moves a point");
            self.levels.push(ChainLevel::new(self.domain_size, base));
        }
        self.levels[level].introduced.push(h);
        for l in 0..=level {
            self.recompute_orbit(l);
        }
    }

    fn recompute_orbit(&mut self, level: usize) {
        let gens = self.stabilizer_gens(level);
        let lv = &mut self.levels[level];
        lv.transversal.clear();
        lv.transversal.insert(lv.base, Perm::identity(self.domain_size));
        let mut frontier = vec![lv.base];
        while let Some(p) = frontier.pop() {
            let rep = lv.transversal[&p].clone();
            for g in &gens {
                let q = g.apply(p);
                if !lv.transversal.contains_key(&q) {
                    lv.transversal.insert(q, g.compose(&rep));
                    frontier.push(q);
                }
            }
        }
    }

    /// Restores the chain condition: every Schreier generator of every level
    /// sifts to the identity through the deeper levels. Restarts whenever a
    /// new generator is introduced; each introduction strictly enlarges some
    /// orbit, so the loop terminates.
    fn verify(&mut self) {
        'restart: loop {
            for level in 0..self.levels.len() {
                let gens = self.stabilizer_gens(level);
                let base = self.levels[level].base;
                let reps: Vec<Perm> = self.levels[level].transversal.values().cloned().collect();
                for rep in &reps {
                    for g in &gens {
                        let img = g.apply(rep.apply(base));
                        let to_rep = self.levels[level].transversal[&img].clone();
                        let schreier = to_rep.inverse().compose(g).compose(rep);
                        if schreier.is_identity() {
                            continue;
                        }
                        if let Err((h, l)) = self.sift_from(level + 1, &schreier) {
                            self.introduce(l, h);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }
}

/// Exhaustive closure of the generated group, in lexicographic order.
///
/// Fails with `CapExceeded` when the group has more than `cap` elements.
pub fn closure(gens: &[Perm], domain_size: usize, cap: usize) -> Result<Vec<Perm>, PermError> {
    let mut elements = BTreeSet::new();
    elements.insert(Perm::identity(domain_size));
    let mut frontier: Vec<Perm> = vec![Perm::identity(domain_size)];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = s.compose(&g);
            if !elements.contains(&h) {
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded { cap: cap as u128 });
                }
                elements.insert(h.clone());
                frontier.push(h);
            }
        }
    }
    Ok(elements.into_iter().collect())
}

/// Orbit partition of `{0, …, n-1}` under the group generated by `gens`.
///
/// Orbits are sorted internally and listed by their least element.
pub fn orbits(gens: &[Perm], domain_size: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; domain_size];
    let mut parts = Vec::new();
    for start in 0..domain_size {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                    frontier.push(q);
                }
            }
        }
        orbit.sort_unstable();
        parts.push(orbit);
    }
    parts
}

/// Cap used by [`group_order`]; larger groups are only reachable through
/// [`StabChain`] directly.
pub const ORDER_CAP: u128 = 10_000_000;

/// A finitely generated permutation group with its exact order.
#[derive(Clone)]
pub struct Group {
    name: String,
    domain_size: usize,
    generators: Vec<Perm>,
    order: u128,
}

impl Group {
    /// Panics if the generators do not share a domain size.
    pub fn new(name: &str, domain_size: usize, generators: Vec<Perm>) -> Self {
        for g in &generators {
            assert_eq!(g.domain_size(), domain_size, "generator domain mismatch");
        }
        let order = StabChain::new(domain_size, &generators).order();
        Group { name: String::from(name), domain_size, generators, order }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.domain_size)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        StabChain::new(self.domain_size, &self.generators).contains(g)
    }

    /// All elements in lexicographic order. Errors above `cap` elements.
    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>, PermError> {
        closure(&self.generators, self.domain_size, cap)
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("domain_size", &self.domain_size)
            .field("order", &self.order)
            .field("generators", &self.generators.len())
            .finish()
    }
}

/// Exact group order via the stabilizer chain, capped at [`ORDER_CAP`].
pub fn group_order(g: &Group) -> Result<u128, PermError> {
    if g.order() > ORDER_CAP {
        return Err(PermError::CapExceeded { cap: ORDER_CAP });
    }
    Ok(g.order())
}

/// PSL(2,7) acting on the 8 points of the projective line over F_7.
///
/// Field elements are the points 0..=6 and ∞ is the point 7. Generators are
/// z ↦ z+1 and z ↦ -1/z.
pub fn build_psl27() -> Group {
    const INF: usize = 7;
    let mut shift = vec![0; 8];
    for z in 0..7 {
        shift[z] = (z + 1) % 7;
    }
    shift[INF] = INF;

    let mut neg_inv = vec![0; 8];
    neg_inv[0] = INF;
    neg_inv[INF] = 0;
    for z in 1..7usize {
        let inv = (1..7).find(|&w| (z * w) % 7 == 1).unwrap();
        neg_inv[z] = (7 - inv) % 7;
    }

    Group::new(
        "PSL(2,7)",
        8,
        vec![
            Perm::from_images(shift).unwrap(),
            Perm::from_images(neg_inv).unwrap(),
        ],
    )
}

/// The symmetric group S5 in its natural action on 5 points.
pub fn build_s5() -> Group {
    Group::new(
        "S5",
        5,
        vec![
            Perm::from_cycles(5, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ],
    )
}

/// GL(2,3) acting on the 8 nonzero vectors of F_3².
///
/// Vectors (x,y) ≠ (0,0) are indexed in lexicographic order.
pub fn build_gl23() -> Group {
    fn idx(x: usize, y: usize) -> usize {
        // lexicographic rank of (x,y) among nonzero vectors
        let r = x * 3 + y;
        r - 1
    }
    fn vec_at(i: usize) -> (usize, usize) {
        let r = i + 1;
        (r / 3, r % 3)
    }
    let matrix_perm = |m: [[usize; 2]; 2]| -> Perm {
        let images = (0..8)
            .map(|i| {
                let (x, y) = vec_at(i);
                let nx = (m[0][0] * x + m[0][1] * y) % 3;
                let ny = (m[1][0] * x + m[1][1] * y) % 3;
                idx(nx, ny)
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    // -1 ≡ 2 mod 3
    let rot = matrix_perm([[0, 2], [1, 0]]);
    let shear = matrix_perm([[1, 1], [0, 1]]);
    let reflect = matrix_perm([[1, 0], [0, 2]]);
    Group::new("GL(2,3)", 8, vec![rot, shear, reflect])
}

/// The group (C_p × C_p) ⋊ D_4 of order 8p² with its named generators,
/// acting on the p × p integer torus.
#[derive(Clone, Debug)]
pub struct YpGroupHandle {
    pub group: Group,
    pub a: Perm,
    pub b: Perm,
    pub s: Perm,
    pub t: Perm,
    pub p: usize,
}

pub fn is_odd_prime(p: usize) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Builds (C_p × C_p) ⋊ D_4 as an affine action on p² points.
///
/// The point (i,j) has index i·p + j; the generators act by
/// a: (i,j) ↦ (i+1,j), b: (i,j) ↦ (i,j+1), s: (i,j) ↦ (-i,j),
/// t: (i,j) ↦ (j,-i). The two commuting order-p translations a·b and a·b⁻¹
/// are the deck transformations of the two degree-p quotients.
pub fn build_yp_group(p: usize) -> Result<YpGroupHandle, PermError> {
    if !is_odd_prime(p) {
        return Err(PermError::NotAnOddPrime(p));
    }
    let n = p * p;
    let affine = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Perm {
        let images = (0..n)
            .map(|v| {
                let (i, j) = (v / p, v % p);
                let (ni, nj) = f(i, j);
                (ni % p) * p + (nj % p)
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    let a = affine(&|i, j| (i + 1, j));
    let b = affine(&|i, j| (i, j + 1));
    let s = affine(&|i, j| (p - i, j));
    let t = affine(&|i, j| (j, p - i));
    let group = Group::new(
        &format!("(C{p} x C{p}) : D4"),
        n,
        vec![a.clone(), b.clone(), s.clone(), t.clone()],
    );
    Ok(YpGroupHandle { group, a, b, s, t, p })
}
