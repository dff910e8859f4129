//! Finite groups as validated Cayley tables, plus the elementary subgroup
//! computations everything else is built from.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm;

/// Element handle: an index into the group's Cayley table.
pub type Elem = usize;

/// Groups up to this order get an exhaustive associativity check.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;

/// Default bound on the size of a permutation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 20_000;

const ASSOCIATIVITY_SEED: u64 = 0xA550_C1A7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group document: {0}")]
    Parse(String),
    #[error("table shape mismatch: {0}")]
    Shape(String),
    #[error("index {value} out of range for order {order} (row {row}, column {col})")]
    BadIndex {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} out of range for order {order}")]
    BadElement { index: usize, order: usize },
    #[error("not a Latin square: {line} {index} repeats element {repeated}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        repeated: usize,
    },
    #[error("no two-sided identity element in table")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {generator} is not a permutation of 0..{degree}")]
    NotAPermutation { generator: usize, degree: usize },
    #[error("closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("group must have at least one element")]
    Empty,
}

/// Where a group came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "name")]
pub enum Source {
    CayleyFile,
    PermutationClosure,
    Catalog(String),
    Constructed,
}

/// Which associativity check ran when the table was validated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum AssociativityCheck {
    Full,
    Sampled { triples: u64 },
}

/// An immutable finite group given by its multiplication table.
#[derive(Clone)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverses: Vec<u32>,
    labels: Vec<String>,
    source: Source,
    associativity: AssociativityCheck,
    element_orders: OnceLock<Vec<u32>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("source", &self.source)
            .finish()
    }
}

/// Cayley table interchange document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyDocument {
    pub name: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// Permutation-generator interchange document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermutationDocument {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

/// A subgroup of some parent group, stored as a membership bitmask.
///
/// Every constructor in this crate produces a set that contains the
/// identity and is closed under the parent's product and inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupSet {
    members: FixedBitSet,
    order: usize,
}

impl SubgroupSet {
    pub(crate) fn from_closed(members: FixedBitSet) -> Self {
        let order = members.count_ones(..);
        SubgroupSet { members, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.members.ones().collect()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_subset_of_set(&self, other: &FixedBitSet) -> bool {
        self.members.is_subset(other)
    }

    /// Intersection of two subgroups, itself a subgroup.
    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        SubgroupSet::from_closed(members)
    }
}

impl Group {
    /// Validates a raw table and builds a group from it.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: &[Vec<usize>],
        source: Source,
    ) -> Result<Group, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if labels.len() != n {
            return Err(GroupError::Shape(format!(
                "{} labels for {} rows",
                labels.len(),
                n
            )));
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Shape(format!(
                    "row {} has {} entries, expected {}",
                    r,
                    row.len(),
                    n
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::BadIndex {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(name.into(), labels, table, source)
    }

    fn from_flat(
        name: String,
        labels: Vec<String>,
        table: Vec<u32>,
        source: Source,
    ) -> Result<Group, GroupError> {
        let n = labels.len();
        check_latin(&table, n)?;
        let identity = find_identity(&table, n).ok_or(GroupError::NoIdentity)?;
        let associativity = check_associative(&table, n)?;
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row
                .iter()
                .position(|&v| v as usize == identity)
                .expect("latin row contains identity");
            inverses[a] = b as u32;
        }
        Ok(Group {
            name,
            order: n,
            table,
            identity,
            inverses,
            labels,
            source,
            associativity,
            element_orders: OnceLock::new(),
        })
    }

    /// Enumerates the closure of `generators` under `mul`, identity first and
    /// then in breadth-first discovery order, and builds its Cayley table.
    pub fn from_closure<T, M, L>(
        name: impl Into<String>,
        identity: T,
        generators: &[T],
        mul: M,
        label: L,
        cap: usize,
        source: Source,
    ) -> Result<Group, GroupError>
    where
        T: Clone + Eq + Hash,
        M: Fn(&T, &T) -> T,
        L: Fn(&T) -> String,
    {
        let mut index: HashMap<T, usize> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = mul(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(GroupError::ClosureCapExceeded { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&mul(a, b)] as u32);
            }
        }
        let labels = elements.iter().map(label).collect();
        Self::from_flat(name.into(), labels, table, source)
    }

    /// Builds a group from a multiplication function on `0..n`.
    pub fn from_fn<F>(
        name: impl Into<String>,
        labels: Vec<String>,
        mul: F,
        source: Source,
    ) -> Result<Group, GroupError>
    where
        F: Fn(usize, usize) -> usize,
    {
        let n = labels.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = mul(a, b);
                if v >= n {
                    return Err(GroupError::BadIndex {
                        row: a,
                        col: b,
                        value: v,
                        order: n,
                    });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(name.into(), labels, table, source)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn with_source(mut self, source: Source) -> Group {
        self.source = source;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn associativity_check(&self) -> AssociativityCheck {
        self.associativity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Table lookup without a range check beyond slice indexing.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a] as Elem
    }

    #[inline]
    pub fn commute(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    fn check_index(&self, a: Elem) -> Result<(), GroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(GroupError::BadElement {
                index: a,
                order: self.order,
            })
        }
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Result<Elem, GroupError> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem, GroupError> {
        self.check_index(a)?;
        Ok(self.inv(a))
    }

    pub fn element_order(&self, a: Elem) -> Result<usize, GroupError> {
        self.check_index(a)?;
        Ok(self.orders()[a] as usize)
    }

    fn orders(&self) -> &[u32] {
        self.element_orders.get_or_init(|| {
            (0..self.order)
                .map(|a| {
                    let mut k = 1u32;
                    let mut x = a;
                    while x != self.identity {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.order)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::from_closed(self.full_set())
    }

    pub fn trivial(&self) -> SubgroupSet {
        let mut s = self.empty_set();
        s.insert(self.identity);
        SubgroupSet::from_closed(s)
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = Elem>) -> FixedBitSet {
        let mut s = self.empty_set();
        for x in elems {
            s.insert(x);
        }
        s
    }

    /// The center Z(G).
    pub fn center(&self) -> SubgroupSet {
        let mut s = self.empty_set();
        for z in self.elements() {
            if self.elements().all(|x| self.commute(z, x)) {
                s.insert(z);
            }
        }
        SubgroupSet::from_closed(s)
    }

    pub fn is_abelian_group(&self) -> bool {
        self.center().order() == self.order
    }

    /// C_G(g).
    pub fn centralizer_of_element(&self, g: Elem) -> SubgroupSet {
        let mut s = self.empty_set();
        for x in self.elements() {
            if self.commute(x, g) {
                s.insert(x);
            }
        }
        SubgroupSet::from_closed(s)
    }

    /// C_G(S) for an arbitrary element set.
    pub fn centralizer_of_subset(&self, subset: &FixedBitSet) -> SubgroupSet {
        let members: Vec<Elem> = subset.ones().collect();
        let mut s = self.empty_set();
        for x in self.elements() {
            if members.iter().all(|&m| self.commute(x, m)) {
                s.insert(x);
            }
        }
        SubgroupSet::from_closed(s)
    }

    /// Z(g) = Z(C_G(g)), the center of the centralizer of `g`.
    pub fn element_center(&self, g: Elem) -> SubgroupSet {
        let c = self.centralizer_of_element(g);
        self.centralizer_of_subset(c.members())
    }

    /// Least subgroup containing `subset`.
    pub fn subgroup_generated(&self, subset: &FixedBitSet) -> SubgroupSet {
        let gens: Vec<Elem> = subset.ones().filter(|&g| g != self.identity).collect();
        let mut seen = self.empty_set();
        seen.insert(self.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let p = self.mul(x, g);
                if !seen.put(p) {
                    queue.push_back(p);
                }
            }
        }
        SubgroupSet::from_closed(seen)
    }

    /// Checks closure and returns the set as a subgroup if it is one.
    pub fn as_subgroup(&self, subset: &FixedBitSet) -> Option<SubgroupSet> {
        if !subset.contains(self.identity) {
            return None;
        }
        let members: Vec<Elem> = subset.ones().collect();
        for &a in &members {
            if !subset.contains(self.inv(a)) {
                return None;
            }
            for &b in &members {
                if !subset.contains(self.mul(a, b)) {
                    return None;
                }
            }
        }
        Some(SubgroupSet::from_closed(subset.clone()))
    }

    /// The literal product set AB = {ab : a in A, b in B}.
    pub fn product_set(&self, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
        let mut s = self.empty_set();
        let bs: Vec<Elem> = b.ones().collect();
        for x in a.ones() {
            for &y in &bs {
                s.insert(self.mul(x, y));
            }
        }
        s
    }

    pub fn is_abelian(&self, s: &SubgroupSet) -> bool {
        let members = s.to_vec();
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    /// Least common multiple of the element orders in `s`.
    pub fn exponent(&self, s: &SubgroupSet) -> usize {
        let orders = self.orders();
        s.iter().fold(1usize, |acc, x| lcm(acc, orders[x] as usize))
    }

    /// `Some(p)` iff |G| is a positive power of the prime `p`.
    pub fn p_group_prime(&self) -> Option<usize> {
        prime_power_base(self.order)
    }

    pub fn to_document(&self) -> CayleyDocument {
        let n = self.order;
        CayleyDocument {
            name: self.name.clone(),
            order: n,
            labels: self.labels.clone(),
            table: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
                .collect(),
        }
    }

    pub fn labels_of(&self, set: &FixedBitSet) -> Vec<String> {
        set.ones().map(|x| self.labels[x].clone()).collect()
    }
}

/// Parses and validates a Cayley JSON document.
pub fn load_cayley_table(text: &str) -> Result<Group, GroupError> {
    let doc: CayleyDocument =
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    group_from_document(&doc)
}

pub fn group_from_document(doc: &CayleyDocument) -> Result<Group, GroupError> {
    if doc.order != doc.table.len() {
        return Err(GroupError::Shape(format!(
            "order {} but {} table rows",
            doc.order,
            doc.table.len()
        )));
    }
    Group::from_table(
        doc.name.clone(),
        doc.labels.clone(),
        &doc.table,
        Source::CayleyFile,
    )
}

/// Parses either document kind. A top-level `degree` key selects the
/// permutation form.
pub fn load_group_json(text: &str, closure_cap: usize) -> Result<Group, GroupError> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    if v.get("degree").is_some() {
        load_permutation_document(text, closure_cap)
    } else {
        load_cayley_table(text)
    }
}

/// Parses a permutation JSON document and enumerates its closure.
pub fn load_permutation_document(text: &str, cap: usize) -> Result<Group, GroupError> {
    let doc: PermutationDocument =
        serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
    Ok(load_permutation_group(doc.degree, &doc.generators, cap)?.with_name(doc.name))
}

/// Closure of permutation generators. Products compose left to right:
/// `(a*b)(x) = b(a(x))`.
pub fn load_permutation_group(
    degree: usize,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<Group, GroupError> {
    if degree == 0 {
        return Err(GroupError::Empty);
    }
    for (i, g) in generators.iter().enumerate() {
        if !perm::is_permutation(g, degree) {
            return Err(GroupError::NotAPermutation {
                generator: i,
                degree,
            });
        }
    }
    let gens: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|&x| x as u32).collect())
        .collect();
    Group::from_closure(
        "permutation group",
        perm::identity(degree),
        &gens,
        |a, b| perm::compose(a, b),
        |p| perm::cycle_label(p),
        cap,
        Source::PermutationClosure,
    )
}

fn check_latin(table: &[u32], n: usize) -> Result<(), GroupError> {
    let mut seen = FixedBitSet::with_capacity(n);
    for r in 0..n {
        seen.clear();
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if seen.put(v) {
                return Err(GroupError::NotLatinSquare {
                    line: "row",
                    index: r,
                    repeated: v,
                });
            }
        }
    }
    for c in 0..n {
        seen.clear();
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen.put(v) {
                return Err(GroupError::NotLatinSquare {
                    line: "column",
                    index: c,
                    repeated: v,
                });
            }
        }
    }
    Ok(())
}

fn find_identity(table: &[u32], n: usize) -> Option<usize> {
    (0..n)
        .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
}

fn check_associative(table: &[u32], n: usize) -> Result<AssociativityCheck, GroupError> {
    let m = |a: usize, b: usize| table[a * n + b] as usize;
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(AssociativityCheck::Full)
    } else {
        let triples = 10 * (n as u64) * (n as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(ASSOCIATIVITY_SEED);
        for _ in 0..triples {
            let (a, b, c) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            if m(m(a, b), c) != m(a, m(b, c)) {
                return Err(GroupError::NotAssociative { a, b, c });
            }
        }
        Ok(AssociativityCheck::Sampled { triples })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn prime_power_base(n: usize) -> Option<usize> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}
