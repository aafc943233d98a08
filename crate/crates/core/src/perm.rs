//! Permutations of `1..=degree` in image form.
//!
//! Points are stored zero-based internally; everything user-facing (cycle
//! notation, [`Permutation::images_one_based`]) is one-based. Products are
//! read left to right: `p.compose(&q)` applies `p` first, then `q`.

use std::fmt;

use crate::error::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from zero-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            let i = i as usize;
            if i >= degree || seen[i] {
                return Err(GroupError::NotBijection { degree });
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut v = Vec::with_capacity(degree);
        for &i in images {
            if i == 0 || i > degree {
                return Err(GroupError::PointOutOfRange { point: i, degree });
            }
            v.push((i - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Product of cycles given as zero-based point lists, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut acc = Self::identity(degree);
        for cycle in cycles {
            let mut c = Self::identity(degree);
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(GroupError::PointOutOfRange {
                        point: a + 1,
                        degree,
                    });
                }
                if cycle[..k].contains(&a) {
                    return Err(GroupError::RepeatedPoint { point: a + 1 });
                }
                c.images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
            acc = acc.compose(&c);
        }
        Ok(acc)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length > 1, zero-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &j)| i as u32 != j)
            .map(|(i, _)| i)
    }

    /// Places `self` on points `offset..offset + degree` of a larger set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[i + offset] = j + offset as u32;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"(1,2)"`.
///
/// Cycles are multiplied left to right; `"()"` is the identity. A point may
/// not repeat within one cycle.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    let err = |reason: &str| GroupError::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(err("empty input"));
    }
    while !rest.is_empty() {
        let Some(after_open) = rest.strip_prefix('(') else {
            return Err(err("expected '('"));
        };
        let Some(close) = after_open.find(')') else {
            return Err(err("unclosed '('"));
        };
        let body = &after_open[..close];
        if body.contains('(') {
            return Err(err("nested '('"));
        }
        let mut cycle = Vec::new();
        for tok in body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let point: usize = tok
                .parse()
                .map_err(|_| err(&format!("bad point {tok:?}")))?;
            if point == 0 || point > degree {
                return Err(GroupError::PointOutOfRange { point, degree });
            }
            if cycle.contains(&(point - 1)) {
                return Err(GroupError::RepeatedPoint { point });
            }
            cycle.push(point - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = after_open[close + 1..].trim_start_matches(|c: char| c == ',' || c.is_whitespace());
    }
    Permutation::from_cycles(degree, &cycles)
}
