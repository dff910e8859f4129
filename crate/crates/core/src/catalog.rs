//! Built-in corpus of small nonabelian groups with frozen expected
//! properties.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{self, Elem, Group, GroupError, Source, DEFAULT_CLOSURE_CAP};
use crate::perm;

const CATALOG_JSON: &str = include_str!("../data/catalog.json");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog group {0:?}")]
    UnknownName(String),
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("central elements have orders {left} and {right}; need equal orders above 1")]
    OrderMismatch { left: usize, right: usize },
    #[error("no element labelled {0:?}")]
    UnknownLabel(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// How a catalog group is built.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Recipe {
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    /// Matrices over Z/modulus, row-major, closed under multiplication.
    Matrices {
        modulus: u32,
        dim: usize,
        generators: Vec<Vec<u32>>,
    },
    Cyclic {
        n: usize,
    },
    Quaternion,
    /// Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>, order 4n.
    Dicyclic {
        n: usize,
    },
    DirectProduct {
        factors: Vec<Recipe>,
    },
    /// (A × B) / <(zA, zB^-1)>, central elements named by label.
    CentralProduct {
        left: Box<Recipe>,
        right: Box<Recipe>,
        left_central: String,
        right_central: String,
    },
}

/// A frozen expected value with the place it came from: `reference` for
/// values stated in the literature, `oracle` for values computed by the
/// brute-force scans in the test suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: serde_json::Value,
    pub source: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Recipe,
    #[serde(default)]
    pub expected: BTreeMap<String, Expected>,
}

pub fn entries() -> &'static [CatalogEntry] {
    static ENTRIES: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| serde_json::from_str(CATALOG_JSON).expect("catalog data file parses"))
}

pub fn list() -> Vec<&'static str> {
    entries().iter().map(|e| e.name.as_str()).collect()
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

pub fn build(name: &str) -> Result<Group, CatalogError> {
    let e = entry(name)?;
    Ok(build_recipe(&e.construction)?
        .with_name(name)
        .with_source(Source::Catalog(name.to_string())))
}

pub fn build_recipe(recipe: &Recipe) -> Result<Group, CatalogError> {
    let g = match recipe {
        Recipe::Permutations { degree, generators } => {
            group::load_permutation_group(*degree, generators, DEFAULT_CLOSURE_CAP)?
        }
        Recipe::Matrices {
            modulus,
            dim,
            generators,
        } => matrix_group(*modulus, *dim, generators)?,
        Recipe::Cyclic { n } => cyclic(*n)?,
        Recipe::Quaternion => quaternion()?,
        Recipe::Dicyclic { n } => dicyclic(*n)?,
        Recipe::DirectProduct { factors } => {
            let mut it = factors.iter();
            let first = it
                .next()
                .ok_or_else(|| GroupError::Shape("empty direct product".into()))?;
            let mut acc = build_recipe(first)?;
            for f in it {
                acc = direct_product(&acc, &build_recipe(f)?)?;
            }
            acc
        }
        Recipe::CentralProduct {
            left,
            right,
            left_central,
            right_central,
        } => {
            let a = build_recipe(left)?;
            let b = build_recipe(right)?;
            let za = find_label(&a, left_central)?;
            let zb = find_label(&b, right_central)?;
            central_product(&a, &b, za, zb)?
        }
    };
    Ok(g.with_source(Source::Constructed))
}

fn find_label(g: &Group, label: &str) -> Result<Elem, CatalogError> {
    g.labels()
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| CatalogError::UnknownLabel(label.to_string()))
}

pub fn cyclic(n: usize) -> Result<Group, GroupError> {
    let labels = (0..n).map(|k| format!("c^{k}")).collect();
    Group::from_fn(
        format!("c{n}"),
        labels,
        |a, b| (a + b) % n,
        Source::Constructed,
    )
}

/// Q8 with elements 1, -1, i, -i, j, -j, k, -k (in that index order).
pub fn quaternion() -> Result<Group, GroupError> {
    // unit index 0..4 = 1, i, j, k; element = 2 * unit + negative
    const UNIT_MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| {
            let sign = if x % 2 == 1 { "-" } else { "" };
            format!("{sign}{}", names[x / 2])
        })
        .collect();
    Group::from_fn(
        "q8",
        labels,
        |a, b| {
            let (u, neg) = UNIT_MUL[a / 2][b / 2];
            let neg = neg ^ (a % 2 == 1) ^ (b % 2 == 1);
            2 * u + neg as usize
        },
        Source::Constructed,
    )
}

/// Element `a^k x^e` is stored at index `2n * e + k`.
pub fn dicyclic(n: usize) -> Result<Group, GroupError> {
    let m = 2 * n;
    let labels = (0..2 * m)
        .map(|i| {
            let (e, k) = (i / m, i % m);
            match (k, e) {
                (0, 0) => "1".to_string(),
                (_, 0) => format!("a^{k}"),
                (0, _) => "x".to_string(),
                _ => format!("a^{k}x"),
            }
        })
        .collect();
    Group::from_fn(
        format!("dic{}", 4 * n),
        labels,
        |p, q| {
            let (e1, k1) = (p / m, p % m);
            let (e2, k2) = (q / m, q % m);
            // x a^k = a^-k x
            let k2 = if e1 == 1 { (m - k2) % m } else { k2 };
            let mut k = (k1 + k2) % m;
            let e = (e1 + e2) % 2;
            if e1 == 1 && e2 == 1 {
                k = (k + n) % m;
            }
            m * e + k
        },
        Source::Constructed,
    )
}

pub fn matrix_group(
    modulus: u32,
    dim: usize,
    generators: &[Vec<u32>],
) -> Result<Group, GroupError> {
    for (i, g) in generators.iter().enumerate() {
        if g.len() != dim * dim {
            return Err(GroupError::Shape(format!(
                "generator {i} has {} entries, expected {}",
                g.len(),
                dim * dim
            )));
        }
    }
    let mut id = vec![0u32; dim * dim];
    for i in 0..dim {
        id[i * dim + i] = 1 % modulus;
    }
    let gens: Vec<Vec<u32>> = generators
        .iter()
        .map(|g| g.iter().map(|x| x % modulus).collect())
        .collect();
    Group::from_closure(
        "matrix group",
        id,
        &gens,
        |a, b| {
            let mut c = vec![0u32; dim * dim];
            for i in 0..dim {
                for j in 0..dim {
                    let mut s = 0u64;
                    for k in 0..dim {
                        s += a[i * dim + k] as u64 * b[k * dim + j] as u64;
                    }
                    c[i * dim + j] = (s % modulus as u64) as u32;
                }
            }
            c
        },
        |m| {
            let rows: Vec<String> = m
                .chunks(dim)
                .map(|r| {
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            format!("[{}]", rows.join(";"))
        },
        DEFAULT_CLOSURE_CAP,
        Source::Constructed,
    )
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    let nb = b.order();
    let labels = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .map(|(x, y)| format!("[{} | {}]", a.label(x), b.label(y)))
        .collect();
    Group::from_fn(
        format!("{}x{}", a.name(), b.name()),
        labels,
        |p, q| {
            let (x1, y1) = (p / nb, p % nb);
            let (x2, y2) = (q / nb, q % nb);
            a.mul(x1, x2) * nb + b.mul(y1, y2)
        },
        Source::Constructed,
    )
}

/// A∘B = (A × B) / <(zA, zB^-1)> for central zA, zB of equal order.
pub fn central_product(a: &Group, b: &Group, za: Elem, zb: Elem) -> Result<Group, CatalogError> {
    let ca = a.center();
    let cb = b.center();
    if !ca.contains(za) {
        return Err(CatalogError::NotCentral(a.label(za).to_string()));
    }
    if !cb.contains(zb) {
        return Err(CatalogError::NotCentral(b.label(zb).to_string()));
    }
    let (oa, ob) = (a.element_order(za)?, b.element_order(zb)?);
    if oa != ob || oa == 1 {
        return Err(CatalogError::OrderMismatch {
            left: oa,
            right: ob,
        });
    }
    let d = direct_product(a, b)?;
    let nb = b.order();
    let gen = za * nb + b.inv(zb);
    let kernel = d.subgroup_generated(&d.set_of([gen]));
    Ok(quotient_by_normal(&d, &kernel.to_vec())?.with_name(format!("{}o{}", a.name(), b.name())))
}

/// Quotient by a normal subgroup given by its members. Cosets are numbered
/// in order of their least element index, which also supplies the label.
pub fn quotient_by_normal(g: &Group, kernel: &[Elem]) -> Result<Group, GroupError> {
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &k in kernel {
            coset_of[g.mul(x, k)] = id;
        }
    }
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    Group::from_fn(
        format!("{}/N", g.name()),
        labels,
        |i, j| coset_of[g.mul(reps[i], reps[j])],
        Source::Constructed,
    )
}

/// Permutation images of a cycle, for hand-written recipes in tests.
pub fn cycle_images(degree: usize, cycle: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..cycle.len() {
        p[cycle[w]] = cycle[(w + 1) % cycle.len()];
    }
    debug_assert!(perm::is_permutation(&p, degree));
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_orders() {
        let q = quaternion().unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.center().order(), 2);
        let i = q.labels().iter().position(|l| l == "i").unwrap();
        assert_eq!(q.element_order(i).unwrap(), 4);
    }

    #[test]
    fn dicyclic_two_is_quaternion_like() {
        let g = dicyclic(2).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().order(), 2);
        let involutions = g
            .elements()
            .filter(|&x| g.element_order(x).unwrap() == 2)
            .count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn central_product_order_and_center() {
        let g = build("es32_plus").unwrap();
        assert_eq!(g.order(), 32);
        let z = g.center();
        assert_eq!(z.order(), 2);
        // G/Z(G) elementary abelian of order 16
        let q = quotient_by_normal(&g, &z.to_vec()).unwrap();
        assert_eq!(q.order(), 16);
        assert!(q.is_abelian_group());
        assert_eq!(q.exponent(&q.whole()), 2);
        assert_eq!(build("es32_minus").unwrap().order(), 32);
    }

    #[test]
    fn central_product_rejects_identity_and_noncentral() {
        let d8 = build("d8").unwrap();
        let e = d8.identity();
        assert!(matches!(
            central_product(&d8, &d8, e, e),
            Err(CatalogError::OrderMismatch { .. })
        ));
        let r = d8.labels().iter().position(|l| l == "(1,2,3,4)").unwrap();
        assert!(matches!(
            central_product(&d8, &d8, r, r),
            Err(CatalogError::NotCentral(_))
        ));
    }

    #[test]
    fn catalog_names() {
        let names = list();
        assert!(names.len() >= 16);
        for required in [
            "s3",
            "s4",
            "a4",
            "a5",
            "s5",
            "d8",
            "q8",
            "d16",
            "d8xC2",
            "d8xd8",
            "sl2_3",
            "frob21",
            "heis27",
            "es32_plus",
            "es32_minus",
            "heis125",
        ] {
            assert!(names.contains(&required), "{required}");
        }
        assert!(matches!(build("nosuch"), Err(CatalogError::UnknownName(_))));
    }

    #[test]
    fn small_builds() {
        assert_eq!(build("s4").unwrap().center().order(), 1);
        assert_eq!(build("q8").unwrap().center().order(), 2);
        assert_eq!(cycle_images(4, &[0, 1]), vec![1, 0, 2, 3]);
    }
}
