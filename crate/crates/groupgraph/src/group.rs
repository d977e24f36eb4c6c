//! Finite groups as explicit Cayley tables.
//!
//! Every group is materialised as a full `n x n` multiplication table over
//! element ids `0..n`, with id `0` always the identity. That caps practical
//! group orders (a few thousand elements) but makes every later computation
//! exact and easy to cross-check by brute force.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith;

/// Errors from validating or building a [`GroupSpec`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Family parameters outside their documented ranges.
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    /// A semidirect spec `Cp^a : Cq^b` where `q^b` does not divide `p - 1`,
    /// so no faithful action of the intended kind exists.
    #[error("no faithful action: {q}^{b} does not divide {p} - 1")]
    NoFaithfulAction { p: u64, a: u32, q: u64, b: u32 },
}

/// Constructive description of a finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group of order `n >= 1`.
    Cyclic(u64),
    /// Dihedral group; the parameter is the order of the whole group
    /// (even, at least 6).
    Dihedral(u64),
    /// Generalized quaternion / dicyclic group of order `4m`, `m >= 2`,
    /// with presentation `a^(2m) = e`, `b^2 = a^m`, `b a b^-1 = a^-1`.
    /// It is a generalized quaternion 2-group exactly when `m` is a power
    /// of two.
    GeneralizedQuaternion(u64),
    /// Symmetric group on `n >= 1` points.
    Symmetric(u32),
    /// Alternating group on `n >= 3` points.
    Alternating(u32),
    /// Elementary abelian group of order `p^k`.
    ElementaryAbelian { p: u64, k: u32 },
    /// Direct product of the listed factors.
    DirectProduct(Vec<GroupSpec>),
    /// `C_{p^a} : C_{q^b}` where the generator of the right factor acts on
    /// the left factor as multiplication by a unit of order exactly `q^b`.
    /// Requires `q^b | p - 1`; the unit is chosen as the smallest integer
    /// `u >= 2` of that multiplicative order, making the table deterministic.
    SemidirectCyclic { p: u64, a: u32, q: u64, b: u32 },
}

impl GroupSpec {
    /// Checks all family parameters, without building anything.
    pub fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return bad("cyclic group order must be at least 1".into());
                }
            }
            GroupSpec::Dihedral(m) => {
                if *m < 6 || m % 2 != 0 {
                    return bad(format!("dihedral parameter {m} must be an even group order >= 6"));
                }
            }
            GroupSpec::GeneralizedQuaternion(m) => {
                if *m < 8 || m % 4 != 0 {
                    return bad(format!(
                        "generalized quaternion parameter {m} must be a group order 4m with m >= 2"
                    ));
                }
            }
            GroupSpec::Symmetric(n) => {
                if *n == 0 {
                    return bad("symmetric group needs at least one point".into());
                }
            }
            GroupSpec::Alternating(n) => {
                if *n < 3 {
                    return bad(format!("alternating group needs at least 3 points, got {n}"));
                }
            }
            GroupSpec::ElementaryAbelian { p, k } => {
                if !arith::is_prime(*p) {
                    return bad(format!("elementary abelian base {p} must be prime"));
                }
                if *k == 0 {
                    return bad("elementary abelian rank must be at least 1".into());
                }
            }
            GroupSpec::DirectProduct(factors) => {
                if factors.is_empty() {
                    return bad("direct product needs at least one factor".into());
                }
                for f in factors {
                    f.validate()?;
                }
            }
            GroupSpec::SemidirectCyclic { p, a, q, b } => {
                if !arith::is_prime(*p) || !arith::is_prime(*q) {
                    return bad(format!("semidirect primes {p}, {q} must both be prime"));
                }
                if p == q {
                    return bad(format!("semidirect primes must be distinct, got {p} twice"));
                }
                if *a == 0 || *b == 0 {
                    return bad("semidirect exponents must be at least 1".into());
                }
                let qb = checked_pow(*q, *b)
                    .ok_or_else(|| GroupError::InvalidSpec("semidirect factor overflows".into()))?;
                checked_pow(*p, *a)
                    .ok_or_else(|| GroupError::InvalidSpec("semidirect factor overflows".into()))?;
                if (p - 1) % qb != 0 {
                    return Err(GroupError::NoFaithfulAction { p: *p, a: *a, q: *q, b: *b });
                }
            }
        }
        Ok(())
    }

    /// Group order as an integer, without building the table.
    pub fn order(&self) -> Result<u64, GroupError> {
        self.validate()?;
        let too_big = || GroupError::InvalidSpec(format!("group order overflows: {self}"));
        Ok(match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(m) => *m,
            GroupSpec::GeneralizedQuaternion(m) => *m,
            GroupSpec::Symmetric(n) => factorial(*n).ok_or_else(too_big)?,
            GroupSpec::Alternating(n) => factorial(*n).ok_or_else(too_big)? / 2,
            GroupSpec::ElementaryAbelian { p, k } => checked_pow(*p, *k).ok_or_else(too_big)?,
            GroupSpec::DirectProduct(factors) => {
                let mut n: u64 = 1;
                for f in factors {
                    n = n.checked_mul(f.order()?).ok_or_else(too_big)?;
                }
                n
            }
            GroupSpec::SemidirectCyclic { p, a, q, b } => checked_pow(*p, *a)
                .and_then(|pa| checked_pow(*q, *b).and_then(|qb| pa.checked_mul(qb)))
                .ok_or_else(too_big)?,
        })
    }
}

/// Canonical text form; parses back to the same spec.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(m) => write!(f, "D{m}"),
            GroupSpec::GeneralizedQuaternion(m) => write!(f, "Q{m}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
            GroupSpec::DirectProduct(factors) => {
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            GroupSpec::SemidirectCyclic { p, a, q, b } => {
                write!(f, "C{}:C{}", pow_u64(*p, *a), pow_u64(*q, *b))
            }
        }
    }
}

fn factorial(n: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for k in 2..=n as u64 {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn pow_u64(base: u64, exp: u32) -> u64 {
    checked_pow(base, exp).expect("validated spec overflowed")
}

/// A set of elements of one group: sorted id list plus membership bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<usize>,
    bits: Vec<u64>,
}

impl ElementSet {
    fn from_bits(group_order: usize, bits: Vec<u64>) -> Self {
        debug_assert_eq!(bits.len(), group_order.div_ceil(64));
        let members = (0..group_order).filter(|&x| bits[x / 64] >> (x % 64) & 1 == 1).collect();
        ElementSet { members, bits }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.get(x / 64).is_some_and(|w| w >> (x % 64) & 1 == 1)
    }

    /// Member ids in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Raw membership bitset, one bit per element id.
    pub fn bit_words(&self) -> &[u64] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }
}

/// A finite group materialised as a Cayley table.
///
/// Element ids run `0..order()` and id 0 is the identity. The table is
/// validated at construction time: identity and inverse axioms exactly,
/// associativity exactly up to order 256 and on `10 n^2` deterministic
/// random triples above that.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    label: String,
    mul: Vec<u32>,
    inv: Vec<u32>,
    orders: Vec<u32>,
}

/// Builds the Cayley table for `spec`. Equivalent to [`FiniteGroup::build`].
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::build(spec)
}

impl FiniteGroup {
    /// Hard cap on materialised group orders; a full Cayley table above
    /// this would need gigabytes. The CLI applies its own, lower guard.
    pub const MAX_TABLE_ORDER: u64 = 8192;

    pub fn build(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
        spec.validate()?;
        let order = spec.order()?;
        if order > Self::MAX_TABLE_ORDER {
            return Err(GroupError::InvalidSpec(format!(
                "group order {order} exceeds the supported table size {}",
                Self::MAX_TABLE_ORDER
            )));
        }
        let table = match spec {
            GroupSpec::Cyclic(n) => cyclic_table(*n as usize),
            GroupSpec::Dihedral(m) => dihedral_table(*m as usize / 2),
            GroupSpec::GeneralizedQuaternion(m) => quaternion_table(*m as usize / 4),
            GroupSpec::Symmetric(n) => permutation_table(*n as usize, false),
            GroupSpec::Alternating(n) => permutation_table(*n as usize, true),
            GroupSpec::ElementaryAbelian { p, k } => elementary_table(*p as usize, *k),
            GroupSpec::DirectProduct(factors) => {
                let built: Vec<FiniteGroup> =
                    factors.iter().map(FiniteGroup::build).collect::<Result<_, _>>()?;
                product_table(&built)
            }
            GroupSpec::SemidirectCyclic { p, a, q, b } => {
                semidirect_table(pow_u64(*p, *a) as usize, pow_u64(*q, *b) as usize)
            }
        };
        Ok(FiniteGroup::from_table(spec.to_string(), table))
    }

    /// Wraps a raw table, computing inverses and element orders and
    /// verifying the group axioms. Panics if the table is not a group
    /// with identity 0: the family constructors are formula-driven, so a
    /// violation here is a bug, not an input error.
    fn from_table(label: String, mul: Vec<u32>) -> FiniteGroup {
        let order = (mul.len() as f64).sqrt().round() as usize;
        assert_eq!(order * order, mul.len(), "{label}: table is not square");
        assert!(order >= 1, "{label}: empty table");
        assert!(
            mul.iter().all(|&z| (z as usize) < order),
            "{label}: table entry out of range"
        );
        for x in 0..order {
            assert_eq!(mul[x] as usize, x, "{label}: row 0 is not the identity");
            assert_eq!(mul[x * order] as usize, x, "{label}: column 0 is not the identity");
        }

        let mut inv = vec![u32::MAX; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == 0)
                .unwrap_or_else(|| panic!("{label}: element {x} has no inverse"));
            inv[x] = y as u32;
            assert_eq!(mul[y * order + x], 0, "{label}: one-sided inverse for {x}");
        }

        let at = |x: usize, y: usize| mul[x * order + y] as usize;
        if order <= 256 {
            for x in 0..order {
                for y in 0..order {
                    for z in 0..order {
                        assert_eq!(
                            at(at(x, y), z),
                            at(x, at(y, z)),
                            "{label}: associativity fails at ({x}, {y}, {z})"
                        );
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x67726f75_u64 ^ order as u64);
            for _ in 0..10 * order * order {
                let (x, y, z) = (
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                    rng.random_range(0..order),
                );
                assert_eq!(
                    at(at(x, y), z),
                    at(x, at(y, z)),
                    "{label}: associativity fails at ({x}, {y}, {z})"
                );
            }
        }

        // o(x) is the least k >= 1 with x^k = e; after the loop acc = x^k = e.
        let mut orders = vec![0u32; order];
        for x in 0..order {
            let mut acc = x;
            let mut k = 1u32;
            while acc != 0 {
                acc = at(acc, x);
                k += 1;
                assert!(k as usize <= order + 1, "{label}: power chain of {x} never closes");
            }
            orders[x] = if x == 0 { 1 } else { k };
        }
        for x in 0..order {
            assert_eq!(order % orders[x] as usize, 0, "{label}: order of {x} violates Lagrange");
            assert_eq!(orders[x], orders[inv[x] as usize], "{label}: o(x) != o(x^-1)");
        }

        FiniteGroup { order, label, mul, inv, orders }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The spec text this group was built from.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order + y] as usize
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inv[x] as usize
    }

    /// `x^k` for `k >= 0`.
    pub fn power(&self, x: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.orders[x] as u64
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `<x>` as an element set.
    pub fn cyclic_subgroup(&self, x: usize) -> ElementSet {
        let mut bits = vec![0u64; self.order.div_ceil(64)];
        let mut acc = 0;
        loop {
            bits[acc / 64] |= 1 << (acc % 64);
            acc = self.mul(acc, x);
            if acc == 0 {
                break;
            }
        }
        ElementSet::from_bits(self.order, bits)
    }

    /// Subgroup generated by `gens`: closure of the identity under right
    /// multiplication by the generators.
    pub fn generated_subgroup(&self, gens: &[usize]) -> ElementSet {
        let words = self.order.div_ceil(64);
        let mut bits = vec![0u64; words];
        bits[0] |= 1;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &g in gens {
                let w = self.mul(v, g);
                if bits[w / 64] >> (w % 64) & 1 == 0 {
                    bits[w / 64] |= 1 << (w % 64);
                    stack.push(w);
                }
            }
        }
        ElementSet::from_bits(self.order, bits)
    }

    /// Do all of `xs` lie in a single cyclic subgroup?
    pub fn is_cyclic_set(&self, xs: &[usize]) -> bool {
        self.elements().any(|z| {
            let zgen = self.cyclic_subgroup(z);
            xs.iter().all(|&x| zgen.contains(x))
        })
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| arith::lcm(acc, o as u64))
    }

    pub fn center(&self) -> ElementSet {
        let mut bits = vec![0u64; self.order.div_ceil(64)];
        for z in self.elements() {
            if self.elements().all(|x| self.commutes(z, x)) {
                bits[z / 64] |= 1 << (z % 64);
            }
        }
        ElementSet::from_bits(self.order, bits)
    }

    /// Map from element order to the number of elements of that order.
    pub fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        let mut spectrum = BTreeMap::new();
        for &o in &self.orders {
            *spectrum.entry(o as u64).or_insert(0) += 1;
        }
        spectrum
    }
}

fn cyclic_table(n: usize) -> Vec<u32> {
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = ((x + y) % n) as u32;
        }
    }
    mul
}

// Dihedral group of order 2n: element i + n*j is r^i s^j.
fn dihedral_table(n: usize) -> Vec<u32> {
    let size = 2 * n;
    let mut mul = vec![0u32; size * size];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    let j = j1 ^ j2;
                    mul[(i1 + n * j1) * size + (i2 + n * j2)] = (i + n * j) as u32;
                }
            }
        }
    }
    mul
}

// Dicyclic group of order 4m: element i + 2m*j is a^i b^j, with
// a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1.
fn quaternion_table(m: usize) -> Vec<u32> {
    let half = 2 * m;
    let size = 4 * m;
    let mut mul = vec![0u32; size * size];
    for i1 in 0..half {
        for j1 in 0..2 {
            for i2 in 0..half {
                for j2 in 0..2 {
                    let (i, j) = if j1 == 0 {
                        ((i1 + i2) % half, j2)
                    } else if j2 == 0 {
                        ((i1 + half - i2) % half, 1)
                    } else {
                        ((i1 + half - i2 + m) % half, 0)
                    };
                    mul[(i1 + half * j1) * size + (i2 + half * j2)] = (i + half * j) as u32;
                }
            }
        }
    }
    mul
}

// Permutations of 0..n in lexicographic order; the identity gets id 0.
// Composition applies the right operand first: (p * q)(i) = p[q[i]].
fn permutation_table(n: usize, even_only: bool) -> Vec<u32> {
    let mut perms = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        if !even_only || parity(&current) == 0 {
            perms.push(current.clone());
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: HashMap<&[u8], u32> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i as u32)).collect();
    let size = perms.len();
    let mut mul = vec![0u32; size * size];
    let mut composed = vec![0u8; n];
    for (x, p) in perms.iter().enumerate() {
        for (y, q) in perms.iter().enumerate() {
            for i in 0..n {
                composed[i] = p[q[i] as usize];
            }
            mul[x * size + y] = index[composed.as_slice()];
        }
    }
    mul
}

fn parity(perm: &[u8]) -> u32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2
}

fn next_permutation(perm: &mut [u8]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

// Vectors over F_p of length k; id digits are little-endian base p.
fn elementary_table(p: usize, k: u32) -> Vec<u32> {
    let size = p.pow(k);
    let mut mul = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let mut z = 0;
            let mut place = 1;
            let (mut xr, mut yr) = (x, y);
            for _ in 0..k {
                z += (xr % p + yr % p) % p * place;
                xr /= p;
                yr /= p;
                place *= p;
            }
            mul[x * size + y] = z as u32;
        }
    }
    mul
}

// Direct product with mixed-radix ids, first factor most significant.
fn product_table(factors: &[FiniteGroup]) -> Vec<u32> {
    let sizes: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let size: usize = sizes.iter().product();
    let mut strides = vec![1usize; factors.len()];
    for i in (0..factors.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * sizes[i + 1];
    }
    let mut mul = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let mut z = 0;
            for (i, g) in factors.iter().enumerate() {
                let xi = x / strides[i] % sizes[i];
                let yi = y / strides[i] % sizes[i];
                z += g.mul(xi, yi) * strides[i];
            }
            mul[x * size + y] = z as u32;
        }
    }
    mul
}

// C_pa : C_qb with (x1, y1)(x2, y2) = (x1 + u^y1 x2, y1 + y2); element
// x + pa*y encodes the pair (x, y). `u` is the smallest integer >= 2 of
// multiplicative order exactly qb modulo pa.
fn semidirect_table(pa: usize, qb: usize) -> Vec<u32> {
    let u = (2..pa as u64)
        .find(|&u| arith::multiplicative_order(u, pa as u64) == Some(qb as u64))
        .expect("validated semidirect spec has an action unit") as usize;
    let mut upow = vec![1usize; qb];
    for y in 1..qb {
        upow[y] = upow[y - 1] * u % pa;
    }
    let size = pa * qb;
    let mut mul = vec![0u32; size * size];
    for x1 in 0..pa {
        for y1 in 0..qb {
            for x2 in 0..pa {
                for y2 in 0..qb {
                    let x = (x1 + upow[y1] * x2) % pa;
                    let y = (y1 + y2) % qb;
                    mul[(x1 + pa * y1) * size + (x2 + pa * y2)] = (x + pa * y) as u32;
                }
            }
        }
    }
    mul
}
