//! Group constructors: classical families, direct products and affine
//! groups `F_p^k ⋊ ⟨M⟩` acting on the vectors of `F_p^k`.

use std::collections::{BTreeMap, HashSet};

use crate::arith::is_prime;
use crate::error::{GroupError, Result};
use crate::group::{PermGroup, COSET_CAP, ELEMENT_CAP};
use crate::perm::{parse_permutation, Permutation};

/// A `k x k` matrix over `F_p`, row-major, entries already reduced.
pub type Matrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq)]
pub enum Construction {
    Cyclic(usize),
    /// Symmetries of the regular `n`-gon: order `2n`, degree `n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Vec<GroupSpec>),
    Affine {
        p: u64,
        k: usize,
        matrices: Vec<Matrix>,
    },
    Explicit {
        degree: usize,
        generators: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GroupSpec {
    pub name: String,
    pub construction: Construction,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, construction: Construction) -> Self {
        GroupSpec {
            name: name.into(),
            construction,
        }
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(format!("C{n}"), Construction::Cyclic(n))
    }

    pub fn dihedral(n: usize) -> Self {
        Self::new(format!("D{}", 2 * n), Construction::Dihedral(n))
    }

    pub fn symmetric(n: usize) -> Self {
        Self::new(format!("S{n}"), Construction::Symmetric(n))
    }

    pub fn alternating(n: usize) -> Self {
        Self::new(format!("A{n}"), Construction::Alternating(n))
    }

    pub fn affine(name: impl Into<String>, p: u64, k: usize, matrices: Vec<Matrix>) -> Self {
        Self::new(name, Construction::Affine { p, k, matrices })
    }

    pub fn explicit(name: impl Into<String>, degree: usize, generators: &[&str]) -> Self {
        Self::new(
            name,
            Construction::Explicit {
                degree,
                generators: generators.iter().map(|s| s.to_string()).collect(),
            },
        )
    }

    pub fn product(parts: Vec<GroupSpec>) -> Self {
        let name = parts
            .iter()
            .map(|p| p.name.as_str())
            .collect::<Vec<_>>()
            .join("x");
        Self::new(name, Construction::DirectProduct(parts))
    }

    /// Order predicted from the construction alone, without building the
    /// permutation group. `None` for explicit generators.
    pub fn predicted_order(&self) -> Result<Option<u128>> {
        let factorial = |n: usize| (1..=n as u128).product::<u128>();
        Ok(match &self.construction {
            Construction::Cyclic(n) => Some(*n as u128),
            Construction::Dihedral(n) => Some(2 * *n as u128),
            Construction::Symmetric(n) => Some(factorial(*n)),
            Construction::Alternating(n) => Some(if *n < 2 { 1 } else { factorial(*n) / 2 }),
            Construction::DirectProduct(parts) => {
                let mut acc = 1u128;
                for part in parts {
                    match part.predicted_order()? {
                        Some(o) => acc *= o,
                        None => return Ok(None),
                    }
                }
                Some(acc)
            }
            Construction::Affine { p, k, matrices } => {
                let reduced = validate_affine(*p, *k, matrices)?;
                let linear = matrix_group_order(*p, *k, &reduced)?;
                Some((*p as u128).pow(*k as u32) * linear as u128)
            }
            Construction::Explicit { .. } => None,
        })
    }

    pub fn degree(&self) -> usize {
        match &self.construction {
            Construction::Cyclic(n)
            | Construction::Dihedral(n)
            | Construction::Symmetric(n)
            | Construction::Alternating(n) => (*n).max(1),
            Construction::DirectProduct(parts) => parts.iter().map(|p| p.degree()).sum(),
            Construction::Affine { p, k, .. } => (*p as usize).pow(*k as u32),
            Construction::Explicit { degree, .. } => *degree,
        }
    }
}

/// Materializes a spec as a permutation group.
pub fn build(spec: &GroupSpec) -> Result<PermGroup> {
    let degree = spec.degree();
    let gens = generators(spec)?;
    PermGroup::from_generators(degree, &gens)
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[pts]).expect("distinct in-range points")
}

fn generators(spec: &GroupSpec) -> Result<Vec<Permutation>> {
    let degree = spec.degree();
    Ok(match &spec.construction {
        Construction::Cyclic(n) => {
            if *n == 0 {
                return Err(GroupError::InvalidSpec("cyclic group of order 0".into()));
            }
            vec![cycle(degree, 0..*n)]
        }
        Construction::Dihedral(n) => {
            if *n < 3 {
                return Err(GroupError::InvalidSpec("dihedral needs n >= 3".into()));
            }
            let reflection: Vec<u32> = (0..*n).map(|i| ((*n - i) % *n) as u32).collect();
            vec![cycle(degree, 0..*n), Permutation::from_images(reflection)?]
        }
        Construction::Symmetric(n) => {
            if *n < 2 {
                vec![]
            } else {
                vec![cycle(degree, [0, 1]), cycle(degree, 0..*n)]
            }
        }
        Construction::Alternating(n) => (2..*n).map(|k| cycle(degree, [0, 1, k])).collect(),
        Construction::DirectProduct(parts) => {
            let mut out = Vec::new();
            let mut offset = 0;
            for part in parts {
                for g in generators(part)? {
                    out.push(g.shifted(offset, degree));
                }
                offset += part.degree();
            }
            out
        }
        Construction::Affine { p, k, matrices } => {
            let reduced = validate_affine(*p, *k, matrices)?;
            affine_generators(*p, *k, &reduced)
        }
        Construction::Explicit { degree, generators } => generators
            .iter()
            .map(|s| parse_permutation(s, *degree))
            .collect::<Result<Vec<_>>>()?,
    })
}

fn validate_affine(p: u64, k: usize, matrices: &[Matrix]) -> Result<Vec<Matrix>> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if k == 0 {
        return Err(GroupError::InvalidSpec("affine dimension 0".into()));
    }
    let size = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > COSET_CAP as u128 {
        return Err(GroupError::CapExceeded {
            what: "affine degree",
            size,
            cap: COSET_CAP as u128,
        });
    }
    let p = p as i64;
    let mut out = Vec::with_capacity(matrices.len());
    for (index, m) in matrices.iter().enumerate() {
        if m.len() != k || m.iter().any(|row| row.len() != k) {
            return Err(GroupError::InvalidSpec(format!(
                "matrix {index} is not {k}x{k}"
            )));
        }
        let r: Matrix = m
            .iter()
            .map(|row| row.iter().map(|&x| x.rem_euclid(p)).collect())
            .collect();
        if det_mod(&r, p) == 0 {
            return Err(GroupError::SingularMatrix { index, p: p as u64 });
        }
        out.push(r);
    }
    Ok(out)
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // p is prime: a^(p-2)
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

#[allow(clippy::needless_range_loop)]
pub(crate) fn det_mod(m: &Matrix, p: i64) -> i64 {
    let n = m.len();
    let mut a = m.clone();
    let mut det = 1;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = inv_mod(a[col][col], p);
        for r in col + 1..n {
            let f = a[r][col] * inv % p;
            for c in col..n {
                a[r][c] = (a[r][c] - f * a[col][c]).rem_euclid(p);
            }
        }
    }
    det
}

fn vector_of(mut index: usize, p: usize, k: usize) -> Vec<i64> {
    let mut v = vec![0; k];
    for x in v.iter_mut() {
        *x = (index % p) as i64;
        index /= p;
    }
    v
}

fn index_of(v: &[i64], p: usize) -> usize {
    v.iter().rev().fold(0, |acc, &x| acc * p + x as usize)
}

fn affine_generators(p: u64, k: usize, matrices: &[Matrix]) -> Vec<Permutation> {
    let pu = p as usize;
    let degree = pu.pow(k as u32);
    let map = |f: &dyn Fn(&[i64]) -> Vec<i64>| {
        let images: Vec<u32> = (0..degree)
            .map(|i| index_of(&f(&vector_of(i, pu, k)), pu) as u32)
            .collect();
        Permutation::from_images(images).expect("affine maps are bijective")
    };
    let mut gens = Vec::new();
    for j in 0..k {
        gens.push(map(&|v: &[i64]| {
            let mut w = v.to_vec();
            w[j] = (w[j] + 1) % p as i64;
            w
        }));
    }
    for m in matrices {
        gens.push(map(&|v: &[i64]| {
            m.iter()
                .map(|row| {
                    row.iter()
                        .zip(v)
                        .map(|(a, b)| a * b)
                        .sum::<i64>()
                        .rem_euclid(p as i64)
                })
                .collect()
        }));
    }
    gens
}

/// Order of the matrix group generated over `F_p` by closure.
fn matrix_group_order(p: u64, k: usize, matrices: &[Matrix]) -> Result<usize> {
    let p = p as i64;
    let mul = |a: &Matrix, b: &Matrix| -> Matrix {
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum::<i64>().rem_euclid(p))
                    .collect()
            })
            .collect()
    };
    let id: Matrix = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for m in matrices {
            let y = mul(&x, m);
            if seen.insert(y.clone()) {
                if seen.len() > ELEMENT_CAP {
                    return Err(GroupError::CapExceeded {
                        what: "matrix group",
                        size: seen.len() as u128,
                        cap: ELEMENT_CAP as u128,
                    });
                }
                frontier.push(y);
            }
        }
    }
    Ok(seen.len())
}

/// Generators of `SL(2,3)` inside `GL(2,7)`: `i`, `j` generate `Q8`, the
/// third is an element of order 3 normalizing it.
pub fn sl23_in_gl27() -> Vec<Matrix> {
    vec![
        vec![vec![0, 6], vec![1, 0]],
        vec![vec![3, 2], vec![2, 4]],
        vec![vec![0, 2], vec![3, 6]],
    ]
}

fn m(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.to_vec()).collect()
}

/// Named groups available to the CLI and corpus files.
pub fn builtin_catalog() -> BTreeMap<String, GroupSpec> {
    let mut cat = BTreeMap::new();
    let mut add = |spec: GroupSpec| {
        cat.insert(spec.name.clone(), spec);
    };
    for n in 1..=32 {
        add(GroupSpec::cyclic(n));
    }
    for n in 3..=16 {
        add(GroupSpec::dihedral(n));
    }
    for n in 3..=5 {
        add(GroupSpec::symmetric(n));
        add(GroupSpec::alternating(n));
    }
    add(GroupSpec::explicit(
        "Q8",
        8,
        &["(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"],
    ));
    add(GroupSpec::explicit(
        "SL23",
        8,
        &["(1 6 2 3)(4 7 8 5)", "(1 5 2 7)(3 4 6 8)", "(1 5 6)(2 7 3)"],
    ));
    add(GroupSpec::explicit(
        "GL23",
        8,
        &[
            "(1 6 2 3)(4 7 8 5)",
            "(1 5 2 7)(3 4 6 8)",
            "(1 5 6)(2 7 3)",
            "(1 2)(4 5)(7 8)",
        ],
    ));
    add(GroupSpec::explicit(
        "PSL27",
        7,
        &["(1 6 3 7 5 4 2)", "(2 6)(3 7)"],
    ));
    add(GroupSpec::explicit(
        "C2^2:C9",
        13,
        &["(1 2)(3 4)", "(1 3)(2 4)", "(2 3 4)(5 6 7 8 9 10 11 12 13)"],
    ));
    add(GroupSpec::explicit(
        "C3:C4",
        7,
        &["(1 2 3)", "(2 3)(4 5 6 7)"],
    ));
    add(GroupSpec::affine("AGL13", 3, 1, vec![m(&[&[2]])]));
    add(GroupSpec::affine("AGL15", 5, 1, vec![m(&[&[2]])]));
    add(GroupSpec::affine("AGL17", 7, 1, vec![m(&[&[3]])]));
    add(GroupSpec::affine(
        "C2^2:C3",
        2,
        2,
        vec![m(&[&[0, 1], &[1, 1]])],
    ));
    add(GroupSpec::affine("SL23_affine7", 7, 2, sl23_in_gl27()));
    add(GroupSpec::affine(
        "Q8_affine7",
        7,
        2,
        sl23_in_gl27().into_iter().take(2).collect(),
    ));
    add(GroupSpec::affine(
        "C8_affine7",
        7,
        2,
        vec![m(&[&[0, 1], &[6, 3]])],
    ));
    add(GroupSpec::affine(
        "C3^2:C4",
        3,
        2,
        vec![m(&[&[0, 2], &[1, 0]])],
    ));
    add(GroupSpec::affine(
        "C3^2:Q8",
        3,
        2,
        vec![m(&[&[0, 2], &[1, 0]]), m(&[&[1, 1], &[1, 2]])],
    ));
    add(GroupSpec::affine(
        "C3^2:C8",
        3,
        2,
        vec![m(&[&[0, 1], &[1, 1]])],
    ));
    add(GroupSpec::affine(
        "C3^2:D8",
        3,
        2,
        vec![m(&[&[0, 2], &[1, 0]]), m(&[&[1, 0], &[0, 2]])],
    ));
    add(GroupSpec::affine(
        "AGaL19",
        3,
        2,
        vec![m(&[&[0, 1], &[1, 1]]), m(&[&[1, 0], &[1, 2]])],
    ));
    add(GroupSpec::affine(
        "ASL23",
        3,
        2,
        vec![
            m(&[&[0, 2], &[1, 0]]),
            m(&[&[1, 1], &[1, 2]]),
            m(&[&[0, 1], &[2, 2]]),
        ],
    ));
    add(GroupSpec::affine(
        "AGL23",
        3,
        2,
        vec![
            m(&[&[0, 2], &[1, 0]]),
            m(&[&[1, 1], &[1, 2]]),
            m(&[&[0, 1], &[2, 2]]),
            m(&[&[1, 0], &[0, 2]]),
        ],
    ));
    add(GroupSpec::affine(
        "C5^2:C3",
        5,
        2,
        vec![m(&[&[0, 4], &[1, 4]])],
    ));
    add(GroupSpec::affine(
        "C5^2:C8",
        5,
        2,
        vec![m(&[&[0, 3], &[1, 0]])],
    ));
    add(GroupSpec::affine(
        "C11^2:C3",
        11,
        2,
        vec![m(&[&[0, 10], &[1, 10]])],
    ));
    add(GroupSpec::affine(
        "C3^4:C5",
        3,
        4,
        vec![m(&[
            &[0, 0, 0, 2],
            &[1, 0, 0, 2],
            &[0, 1, 0, 2],
            &[0, 0, 1, 2],
        ])],
    ));
    add(GroupSpec::affine(
        "C5^2:Q8",
        5,
        2,
        vec![m(&[&[0, 1], &[4, 0]]), m(&[&[0, 2], &[2, 0]])],
    ));
    add(GroupSpec::affine(
        "C5^2:SL23",
        5,
        2,
        vec![
            m(&[&[0, 1], &[4, 0]]),
            m(&[&[0, 2], &[2, 0]]),
            m(&[&[1, 1], &[2, 3]]),
        ],
    ));
    let c7 = m(&[&[0, 0, 1], &[1, 0, 1], &[0, 1, 0]]);
    add(GroupSpec::affine("AGL18", 2, 3, vec![c7.clone()]));
    add(GroupSpec::affine(
        "AGaL18",
        2,
        3,
        vec![c7, m(&[&[0, 0, 1], &[0, 1, 0], &[1, 1, 1]])],
    ));
    let c15 = m(&[&[0, 0, 0, 1], &[1, 0, 0, 1], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
    add(GroupSpec::affine("AGL116", 2, 4, vec![c15]));
    add(GroupSpec::affine(
        "C2^4:C5",
        2,
        4,
        vec![m(&[
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
            &[1, 1, 1, 1],
        ])],
    ));
    add(GroupSpec::affine(
        "C2^4:C3",
        2,
        4,
        vec![m(&[
            &[0, 1, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 1],
        ])],
    ));

    let a4 = GroupSpec::alternating(4);
    let s4 = GroupSpec::symmetric(4);
    let s3 = GroupSpec::symmetric(3);
    let c = GroupSpec::cyclic;
    let products = [
        vec![a4.clone(), c(2)],
        vec![a4.clone(), c(3)],
        vec![a4.clone(), c(4)],
        vec![a4.clone(), c(5)],
        vec![a4.clone(), c(7)],
        vec![a4.clone(), s3.clone()],
        vec![a4.clone(), a4.clone()],
        vec![a4.clone(), GroupSpec::dihedral(4)],
        vec![s4.clone(), c(2)],
        vec![s4.clone(), c(3)],
        vec![s4.clone(), s3.clone()],
        vec![
            GroupSpec::explicit(
                "SL23",
                8,
                &["(1 6 2 3)(4 7 8 5)", "(1 5 2 7)(3 4 6 8)", "(1 5 6)(2 7 3)"],
            ),
            c(3),
        ],
        vec![s3.clone(), c(5)],
        vec![s3.clone(), c(3)],
        vec![s3.clone(), s3.clone()],
        vec![GroupSpec::alternating(5), c(2)],
    ];
    for parts in products {
        add(GroupSpec::product(parts));
    }
    cat
}

pub fn lookup(name: &str) -> Result<GroupSpec> {
    builtin_catalog()
        .remove(name)
        .ok_or_else(|| GroupError::UnknownGroup(name.to_string()))
}
