//! The group algebra of `S_n` over the rationals, Young symmetrizers, and the
//! two conjugation-average formulas built on them: the irreducible character
//! as an average over all of `S_n`, and the generalized character as an
//! average over the stabilizer of 1 of a symmetrizer whose tableau has 1 in
//! the removed cell.
//!
//! Everything here costs on the order of `n!` group operations; the oracle
//! entry points refuse degrees above their limits.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};
use crate::permutations::{all_permutations, point_stabilizer, Permutation};
use crate::Rational;

/// Largest degree accepted by [`character_via_symmetrizer`].
pub const SYMMETRIZER_CHARACTER_LIMIT: usize = 6;
/// Largest degree accepted by [`gen_char_via_travis`].
pub const TRAVIS_LIMIT: usize = 5;

/// A finitely supported function `S_n -> Q`, written as a formal sum.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    coeffs: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, coeffs: BTreeMap::new() }
    }

    /// The basis element of a single permutation.
    pub fn delta(pi: Permutation) -> Self {
        let mut a = GroupAlgebraElement::zero(pi.degree());
        a.coeffs.insert(pi, Rational::one());
        a
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, Rational)>) -> Result<Self> {
        let mut a = GroupAlgebraElement::zero(degree);
        for (pi, c) in terms {
            a.add_term(pi, c)?;
        }
        Ok(a)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nonzero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, pi: Permutation, c: Rational) -> Result<()> {
        if pi.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: pi.degree() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(pi);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    /// The coefficient of `pi`.
    pub fn evaluate(&self, pi: &Permutation) -> Rational {
        self.coeffs.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (pi, c) in &other.coeffs {
            out.add_term(pi.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return GroupAlgebraElement::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(pi, x)| (pi.clone(), x * c)).collect(),
        }
    }

    /// `(a * b)(theta) = sum over gamma ∘ sigma = theta of a(gamma) b(sigma)`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = GroupAlgebraElement::zero(self.degree);
        for (g, a) in &self.coeffs {
            for (s, b) in &other.coeffs {
                out.add_term(g.compose(s)?, a * b)?;
            }
        }
        Ok(out)
    }

    /// Maps each `p` to `pi ∘ p ∘ pi^{-1}`.
    pub fn conjugate_by(&self, pi: &Permutation) -> Result<Self> {
        if pi.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: pi.degree() });
        }
        let inv = pi.inverse();
        let coeffs = self
            .coeffs
            .iter()
            .map(|(p, c)| Ok((pi.compose(p)?.compose(&inv)?, c.clone())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(GroupAlgebraElement { degree: self.degree, coeffs })
    }

    /// `(1/|H|) sum_{pi in H} pi a pi^{-1}` over the given subgroup.
    pub fn conjugation_average(&self, subgroup: &[Permutation]) -> Result<Self> {
        let total = subgroup
            .par_iter()
            .map(|pi| self.conjugate_by(pi))
            .try_reduce(|| GroupAlgebraElement::zero(self.degree), |a, b| a.add(&b))?;
        Ok(total.scale(&Rational::new(BigInt::one(), BigInt::from(subgroup.len()))))
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0 in Q[S_{}]", self.degree);
        }
        let mut first = true;
        for (pi, c) in &self.coeffs {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}·{pi}")?;
        }
        Ok(())
    }
}

/// A bijective filling of a Young diagram with `1..=n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// `rows[i]` lists the entries of row `i + 1`, left to right.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())?;
        if shape.len() != rows.len() {
            return Err(Error::InvalidPartition("tableau has an empty row".into()));
        }
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("tableau entries must be 1..={n} once each")));
            }
            seen[x] = true;
        }
        Ok(Tableau { shape, rows })
    }

    /// Entries `1..=n` in row-major reading order.
    pub fn row_reading(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                next += len;
                (next - len + 1..=next).collect()
            })
            .collect();
        Tableau { shape: shape.clone(), rows }
    }

    /// 1 in the cell `lam \ mu`, then `2..=n` in row-major order.
    pub fn canonical(lam: &Partition, mu: &Partition) -> Result<Self> {
        let corner = lam.removed_cell(mu)?;
        let mut next = 2;
        let rows = lam
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|j| {
                        if Cell::new(i + 1, j) == corner {
                            1
                        } else {
                            next += 1;
                            next - 1
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Tableau { shape: lam.clone(), rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entry(&self, cell: Cell) -> usize {
        self.rows[cell.row - 1][cell.col - 1]
    }

    pub fn cell_of(&self, x: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter().position(|&y| y == x).map(|j| Cell::new(i + 1, j + 1))
        })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.row_len(1);
        (1..=width)
            .map(|j| (1..=self.shape.col_len(j)).map(|i| self.entry(Cell::new(i, j))).collect())
            .collect()
    }

    /// `pi t`: every entry `x` replaced by `pi(x)`.
    pub fn act(&self, pi: &Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&x| pi.apply(x)).collect()).collect(),
        }
    }

    pub fn row_stabilizer(&self) -> Vec<Permutation> {
        block_permutations(self.shape.n(), &self.rows)
    }

    pub fn column_stabilizer(&self) -> Vec<Permutation> {
        block_permutations(self.shape.n(), &self.columns())
    }
}

/// All permutations of `{1..n}` preserving each block setwise.
fn block_permutations(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let locals: Vec<Permutation> = all_permutations(block.len()).collect();
        let mut next = Vec::with_capacity(out.len() * locals.len());
        for base in &out {
            for local in &locals {
                let mut images = base.images();
                for (k, &x) in block.iter().enumerate() {
                    images[x - 1] = block[local.apply(k + 1) - 1];
                }
                next.push(Permutation::from_images(&images).expect("block permutation"));
            }
        }
        out = next;
    }
    out
}

/// `E_t = sum over gamma in C_t, sigma in R_t of sign(gamma) gamma ∘ sigma`.
pub fn young_symmetrizer(t: &Tableau) -> GroupAlgebraElement {
    let n = t.shape().n();
    let rows = t.row_stabilizer();
    let cols = t.column_stabilizer();
    let mut e = GroupAlgebraElement::zero(n);
    for gamma in &cols {
        let sign = Rational::from_integer(BigInt::from(gamma.sign()));
        for sigma in &rows {
            let term = gamma.compose(sigma).expect("same degree");
            e.add_term(term, sign.clone()).expect("same degree");
        }
    }
    e
}

/// `chi^lam = (d_lam / n!) sum over pi in S_n of pi E_t pi^{-1}`.
pub fn character_via_symmetrizer(lam: &Partition) -> Result<GroupAlgebraElement> {
    character_via_symmetrizer_with_limit(lam, SYMMETRIZER_CHARACTER_LIMIT)
}

pub fn character_via_symmetrizer_with_limit(lam: &Partition, limit: usize) -> Result<GroupAlgebraElement> {
    let n = lam.n();
    if n > limit {
        return Err(Error::ScaleExceeded { oracle: "symmetrizer character", n, limit });
    }
    let e = young_symmetrizer(&Tableau::row_reading(lam));
    let group: Vec<Permutation> = all_permutations(n).collect();
    let avg = e.conjugation_average(&group)?;
    Ok(avg.scale(&Rational::from_integer(BigInt::from(lam.dimension()))))
}

/// The generalized character `phi_{lam,mu}` as a function on `S_n`: the
/// average of `pi E_t pi^{-1}` over the stabilizer of 1, where `t` has 1 in
/// the cell `lam \ mu`.
pub fn gen_char_via_travis(lam: &Partition, mu: &Partition) -> Result<GroupAlgebraElement> {
    gen_char_via_travis_with_limit(lam, mu, TRAVIS_LIMIT)
}

pub fn gen_char_via_travis_with_limit(lam: &Partition, mu: &Partition, limit: usize) -> Result<GroupAlgebraElement> {
    let t = Tableau::canonical(lam, mu)?;
    if lam.n() > limit {
        return Err(Error::ScaleExceeded { oracle: "travis", n: lam.n(), limit });
    }
    gen_char_from_tableau(&t)
}

/// Same average for an arbitrary tableau; the result is `phi_{lam,mu}`
/// whenever 1 sits in a removable cell of the shape.
pub fn gen_char_from_tableau(t: &Tableau) -> Result<GroupAlgebraElement> {
    let n = t.shape().n();
    let e = young_symmetrizer(t);
    let stab: Vec<Permutation> = point_stabilizer(n).collect();
    e.conjugation_average(&stab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::mn_character;
    use crate::partitions::enumerate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn algebra_basics() {
        let mut a = GroupAlgebraElement::zero(3);
        a.add_term(perm("(1 2 3)", 3), q(1, 2)).unwrap();
        a.add_term(perm("(2 3)", 3), q(-3, 1)).unwrap();
        let e = GroupAlgebraElement::delta(Permutation::identity(3));
        assert_eq!(e.convolve(&a).unwrap(), a);
        assert_eq!(a.convolve(&e).unwrap(), a);
        assert_eq!(a.conjugate_by(&Permutation::identity(3)).unwrap(), a);
        let t = GroupAlgebraElement::delta(perm("(1 2)", 3));
        assert_eq!(t.convolve(&t).unwrap(), e);
        assert_eq!(a.evaluate(&perm("(1 2 3)", 3)), q(1, 2));
        assert_eq!(a.evaluate(&perm("(1 2)", 3)), q(0, 1));
        // cancelled terms are not stored
        a.add_term(perm("(2 3)", 3), q(3, 1)).unwrap();
        assert_eq!(a.len(), 1);
        assert!(a.convolve(&GroupAlgebraElement::zero(4)).is_err());
    }

    #[test]
    fn canonical_tableaux() {
        let t = Tableau::canonical(&p("2,1"), &p("1,1")).unwrap();
        assert_eq!(t.rows(), &[vec![2, 1], vec![3]]);
        let t = Tableau::canonical(&p("2,1"), &p("2")).unwrap();
        assert_eq!(t.rows(), &[vec![2, 3], vec![1]]);
        let t = Tableau::canonical(&p("4"), &p("3")).unwrap();
        assert_eq!(t.rows(), &[vec![2, 3, 4, 1]]);
        assert!(Tableau::canonical(&p("2,1"), &p("3")).is_err());
    }

    #[test]
    fn stabilizers() {
        let t = Tableau::row_reading(&p("4"));
        assert_eq!(t.row_stabilizer().len(), 24);
        assert_eq!(t.column_stabilizer(), vec![Permutation::identity(4)]);
        let t = Tableau::row_reading(&p("1,1,1"));
        assert_eq!(t.row_stabilizer(), vec![Permutation::identity(3)]);

        let t = Tableau::canonical(&p("2,1"), &p("1,1")).unwrap();
        let mut rows = t.row_stabilizer();
        rows.sort();
        assert_eq!(rows, vec![Permutation::identity(3), perm("(1 2)", 3)]);
        let mut cols = t.column_stabilizer();
        cols.sort();
        assert_eq!(cols, vec![Permutation::identity(3), perm("(2 3)", 3)]);

        let t = Tableau::row_reading(&p("3,2,1"));
        assert_eq!(t.row_stabilizer().len(), 12);
        assert_eq!(t.column_stabilizer().len(), 12);
    }

    #[test]
    fn symmetrizer_shapes() {
        let e = young_symmetrizer(&Tableau::row_reading(&p("3")));
        assert_eq!(e.len(), 6);
        assert!(e.terms().all(|(_, c)| *c == q(1, 1)));
        let e = young_symmetrizer(&Tableau::row_reading(&p("1,1,1")));
        assert_eq!(e.len(), 6);
        assert!(e.terms().all(|(pi, c)| *c == q(pi.sign(), 1)));
    }

    #[test]
    fn symmetrizer_identity_coefficient_is_one() {
        for n in 1..=6 {
            for lam in enumerate_partitions(n).unwrap() {
                let e = young_symmetrizer(&Tableau::row_reading(&lam));
                assert_eq!(e.evaluate(&Permutation::identity(n)), q(1, 1));
            }
        }
    }

    #[test]
    fn symmetrizer_is_quasi_idempotent() {
        for n in 1..=5 {
            for lam in enumerate_partitions(n).unwrap() {
                let e = young_symmetrizer(&Tableau::row_reading(&lam));
                let sq = e.convolve(&e).unwrap();
                let c = sq.evaluate(&Permutation::identity(n));
                assert_eq!(sq, e.scale(&c), "{lam:?}");
                let nfact: i64 = (1..=n as i64).product();
                assert_eq!(c, q(nfact, lam.dimension() as i64));
            }
        }
    }

    #[test]
    fn character_oracle_small() {
        let chi = character_via_symmetrizer(&p("3")).unwrap();
        assert!(all_permutations(3).all(|g| chi.evaluate(&g) == q(1, 1)));
        let chi = character_via_symmetrizer(&p("1,1,1")).unwrap();
        assert!(all_permutations(3).all(|g| chi.evaluate(&g) == q(g.sign(), 1)));
        let chi = character_via_symmetrizer(&p("2,1")).unwrap();
        assert_eq!(chi.evaluate(&Permutation::identity(3)), q(2, 1));
        assert_eq!(chi.evaluate(&perm("(1 2)", 3)), q(0, 1));
        assert_eq!(chi.evaluate(&perm("(1 3 2)", 3)), q(-1, 1));
        assert!(matches!(
            character_via_symmetrizer(&p("7")),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn character_oracle_agrees_with_rim_hooks() {
        for n in 1..=6 {
            let perms: Vec<_> = all_permutations(n).collect();
            for lam in enumerate_partitions(n).unwrap() {
                let chi = character_via_symmetrizer(&lam).unwrap();
                for g in &perms {
                    let expected = mn_character(&lam, &g.cycle_type()).unwrap();
                    assert_eq!(chi.evaluate(g), q(expected, 1), "{lam:?} at {g}");
                }
            }
        }
    }

    #[test]
    fn travis_small_values() {
        let phi = gen_char_via_travis(&p("2,1"), &p("1,1")).unwrap();
        assert_eq!(phi.evaluate(&Permutation::identity(3)), q(1, 1));
        assert_eq!(phi.evaluate(&perm("(1 2)", 3)), q(1, 2));
        let phi = gen_char_via_travis(&p("2,1"), &p("2")).unwrap();
        assert_eq!(phi.evaluate(&perm("(1 2)", 3)), q(-1, 2));
        assert!(matches!(gen_char_via_travis(&p("6"), &p("5")), Err(Error::ScaleExceeded { .. })));
        assert!(matches!(gen_char_via_travis(&p("2,1"), &p("3")), Err(Error::NotCovering { .. })));
    }
}
