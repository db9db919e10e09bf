//! Permutations of `{1..n}` and the classes of `S_n` under conjugation by
//! the stabilizer of the point 1.
//!
//! Composition is fixed project-wide: `a.compose(&b)` applies `b` first, so
//! `a.compose(&b)(x) = a(b(x))`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds a permutation from 1-based images: `images[i - 1] = pi(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation of the given degree from disjoint 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::InvalidPermutation(format!("point {x} outside 1..={degree}")));
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!("point {x} appears twice")));
                }
                seen[x - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// Parses cycle notation with an explicit degree; points not mentioned
    /// are fixed.
    pub fn parse_with_degree(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `pi(x)` for a 1-based point.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `pi ∘ self ∘ pi^{-1}`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Result<Permutation> {
        pi.compose(self)?.compose(&pi.inverse())
    }

    /// All cycles, fixed points included as 1-cycles. Each cycle starts at its
    /// smallest point; cycles are ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if !seen[start] {
                count += 1;
                let mut x = start;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x];
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if (self.degree() - self.cycle_count()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Non-fixed points.
    pub fn support(&self) -> BTreeSet<usize> {
        self.images.iter().enumerate().filter(|(i, &x)| *i != x).map(|(i, _)| i + 1).collect()
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths form a partition")
    }

    /// Cycle type plus the length of the cycle through 1.
    pub fn marked_class(&self) -> MarkedClass {
        let mark = self.cycles().first().map(Vec::len).unwrap_or(0);
        MarkedClass { cycle_type: self.cycle_type(), mark }
    }

    /// Pads with fixed points up to `degree`.
    pub fn extend(&self, degree: usize) -> Result<Permutation> {
        if degree < self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: degree });
        }
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Ok(Permutation { images })
    }

    /// The smallest `l >= 1` with the support (and the point 1) inside
    /// `{1..l}`, together with the restriction to `{1..l}`.
    pub fn minimal_embedding(&self) -> (usize, Permutation) {
        if self.degree() == 0 {
            return (1, Permutation::identity(1));
        }
        let l = self.support().last().copied().unwrap_or(1);
        (l, Permutation { images: self.images[..l].to_vec() })
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("e")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in S_{}", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses cycle notation; the degree is the largest point mentioned
    /// (at least 1).
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(1);
        Permutation::from_cycles(degree, &cycles)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {s:?}")))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|e| Error::InvalidPermutation(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Iterator over `S_n` in lexicographic order of the image lists.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations { next: Some((0..n).collect()) }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        if next_permutation(&mut a) {
            self.next = Some(a);
        }
        Some(Permutation { images: current })
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// The permutations of `S_n` fixing 1.
pub fn point_stabilizer(n: usize) -> impl Iterator<Item = Permutation> {
    all_permutations(n.saturating_sub(1)).map(move |p| {
        let mut images = Vec::with_capacity(n);
        images.push(0);
        images.extend(p.images.iter().map(|&x| x + 1));
        Permutation { images }
    })
}

/// A conjugacy class of `S_n` under the stabilizer of 1: the cycle type and
/// the length of the cycle containing 1.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedClass {
    #[serde(rename = "type")]
    pub cycle_type: Partition,
    pub mark: usize,
}

impl MarkedClass {
    pub fn new(cycle_type: Partition, mark: usize) -> Result<Self> {
        if !cycle_type.parts().contains(&mark) {
            return Err(Error::InvalidPartition(format!("mark {mark} is not a part of {cycle_type}")));
        }
        Ok(MarkedClass { cycle_type, mark })
    }

    pub fn n(&self) -> usize {
        self.cycle_type.n()
    }

    /// The canonical representative: `(1 2 .. mark)` followed by the other
    /// cycles, longest first, on consecutive points.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut rest: Vec<usize> = self.cycle_type.parts().to_vec();
        let pos = rest.iter().position(|&p| p == self.mark).expect("mark is a part");
        rest.remove(pos);
        let mut cycles = Vec::new();
        let mut next = 1;
        for len in std::iter::once(self.mark).chain(rest) {
            cycles.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        Permutation::from_cycles(n, &cycles).expect("consecutive cycles")
    }

    /// Number of permutations in the class.
    pub fn size(&self) -> u64 {
        let n = self.n() as u64;
        let m = self.mark as u64;
        // arrangements of the cycle through 1
        let mut size = (n - m + 1..n).product::<u64>();
        let mut rest: Vec<usize> = self.cycle_type.parts().to_vec();
        let pos = rest.iter().position(|&p| p == self.mark).expect("mark is a part");
        rest.remove(pos);
        let rest_n = (n - m) as usize;
        let factorial = |k: u64| (1..=k).product::<u64>();
        let mut z = 1u64;
        let mut k = 0;
        while k < rest.len() {
            let len = rest[k];
            let mult = rest[k..].iter().take_while(|&&p| p == len).count();
            z *= (len as u64).pow(mult as u32) * factorial(mult as u64);
            k += mult;
        }
        size *= factorial(rest_n as u64) / z;
        size
    }
}

impl fmt::Display for MarkedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; mark {}]", self.cycle_type, self.mark)
    }
}

impl fmt::Debug for MarkedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every marked class of `S_n` with its canonical representative, ordered
/// by cycle type reverse-lexicographically, then by mark descending.
pub fn enumerate_marked_class_reps(n: usize) -> Result<Vec<(MarkedClass, Permutation)>> {
    let mut out = Vec::new();
    for ct in enumerate_partitions(n)? {
        let mut marks: Vec<usize> = ct.parts().to_vec();
        marks.dedup();
        for mark in marks {
            let class = MarkedClass { cycle_type: ct.clone(), mark };
            let rep = class.representative();
            out.push((class, rep));
        }
    }
    Ok(out)
}
