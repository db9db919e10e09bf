//! Generalized characters `phi_{lam,mu}` of `S_n`: the spherical functions of
//! the pair `(S_n x S_{n-1}, diag S_{n-1})`, with `S_{n-1}` realised as the
//! stabilizer of the point 1.
//!
//! For `theta` supported in `{1..l}` (and `l >= 1`),
//!
//! ```text
//! phi_{lam,mu}(theta) = 1/(n-1)_{l-1} * sum over gamma ∘ sigma = theta in S_l
//!                                       of sign(gamma) * N(gamma, sigma)
//! ```
//!
//! where `N(gamma, sigma)` counts colorings of the cycles of `gamma` by
//! columns of `lam` and of the cycles of `sigma` by rows of `lam`, with the
//! two cycles through 1 pinned to the coordinates of the cell `lam \ mu`, and
//! every pair of intersecting cycles coloured by the coordinates of a cell of
//! `lam`. [`phi_sfs`] evaluates this; [`phi_lemma`] evaluates the same sum
//! with the function count [`count_functions`] in place of the coloring
//! count; [`phi_spherical`] averages classical characters over the
//! stabilizer of 1. The three routes share nothing beyond the partition and
//! permutation types.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::characters::{mn_character, restricted_character};
use crate::error::{Error, Result};
use crate::partitions::{covering_pairs, Cell, Partition};
use crate::permutations::{enumerate_marked_class_reps, point_stabilizer, MarkedClass, Permutation};
use crate::group_algebra::Tableau;
use crate::Rational;

/// Largest `n` accepted by [`build_table`].
pub const TABLE_LIMIT: usize = 8;
/// Largest `n` accepted by [`phi_spherical`].
pub const SPHERICAL_LIMIT: usize = 7;
/// Largest `n` accepted by [`count_tableau_translates`].
pub const TRANSLATES_LIMIT: usize = 6;
/// Largest embedding degree `l` for which the factorization sum over `S_l`
/// is attempted.
pub const FACTORIZATION_LIMIT: usize = 10;

/// `x (x-1) ... (x-k+1)`; the empty product is 1.
pub fn falling_factorial(x: i64, k: usize) -> i64 {
    (0..k as i64).map(|i| x - i).product()
}

fn check_pair(lam: &Partition, mu: &Partition) -> Result<Cell> {
    lam.removed_cell(mu)
}

fn check_degrees(gamma: &Permutation, sigma: &Permutation) -> Result<usize> {
    if gamma.degree() != sigma.degree() {
        return Err(Error::DegreeMismatch { left: gamma.degree(), right: sigma.degree() });
    }
    if gamma.degree() == 0 {
        return Err(Error::InvalidPermutation("degree 0".into()));
    }
    if gamma.degree() > 64 {
        return Err(Error::ScaleExceeded { oracle: "cycle incidence", n: gamma.degree(), limit: 64 });
    }
    Ok(gamma.degree())
}

/// 0-based cycle labels, numbered in order of each cycle's smallest point.
/// The cycle through point 0 always gets label 0.
fn cycle_labels(images: &[usize], labels: &mut [usize]) -> usize {
    labels.fill(usize::MAX);
    let mut count = 0;
    for start in 0..images.len() {
        if labels[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while labels[x] == usize::MAX {
            labels[x] = count;
            x = images[x];
        }
        count += 1;
    }
    count
}

/// Which cycles of `gamma` meet which cycles of `sigma`, as a bipartite graph
/// with the cycles through 1 as vertex 0 on each side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Incidence {
    gamma_cycles: usize,
    /// For each cycle of `sigma`, the mask of `gamma`-cycles it meets.
    sigma_adj: Vec<u64>,
}

impl Incidence {
    fn new(gamma_labels: &[usize], gamma_cycles: usize, sigma_labels: &[usize], sigma_cycles: usize) -> Self {
        let mut sigma_adj = vec![0u64; sigma_cycles];
        for (&g, &s) in gamma_labels.iter().zip(sigma_labels) {
            sigma_adj[s] |= 1 << g;
        }
        Incidence { gamma_cycles, sigma_adj }
    }

    fn from_perms(gamma: &Permutation, sigma: &Permutation) -> Self {
        let l = gamma.degree();
        let mut gl = vec![0; l];
        let mut sl = vec![0; l];
        let gc = cycle_labels(gamma.zero_based(), &mut gl);
        let sc = cycle_labels(sigma.zero_based(), &mut sl);
        Incidence::new(&gl, gc, &sl, sc)
    }

    /// The same graph with the two sides exchanged.
    fn transposed(&self) -> Incidence {
        let mut adj = vec![0u64; self.gamma_cycles];
        for (s, &mask) in self.sigma_adj.iter().enumerate() {
            for (g, a) in adj.iter_mut().enumerate() {
                if mask >> g & 1 == 1 {
                    *a |= 1 << s;
                }
            }
        }
        Incidence { gamma_cycles: self.sigma_adj.len(), sigma_adj: adj }
    }

    /// Relabels the non-marked sigma-cycles into sorted order. The count does
    /// not depend on their labels.
    fn normalized(mut self) -> Self {
        if self.sigma_adj.len() > 2 {
            self.sigma_adj[1..].sort_unstable();
        }
        self
    }

    /// Number of colorings, enumerating whichever side is cheaper.
    fn count(&self, lam: &Partition, corner: Cell) -> u64 {
        let cols = lam.row_len(1) as f64;
        let rows = lam.len() as f64;
        let cost_cols = cols.powi(self.gamma_cycles as i32 - 1);
        let cost_rows = rows.powi(self.sigma_adj.len() as i32 - 1);
        if cost_cols <= cost_rows {
            self.count_by_columns(lam, corner)
        } else {
            self.transposed().count_by_columns(&lam.conjugate(), Cell::new(corner.col, corner.row))
        }
    }

    /// Enumerates column colors of the gamma-cycles. For a fixed choice, the
    /// admissible rows of a sigma-cycle are those not below the shortest
    /// column among its neighbours, i.e. the column of largest index.
    fn count_by_columns(&self, lam: &Partition, corner: Cell) -> u64 {
        let width = lam.row_len(1);
        let col_len: Vec<u64> = (0..=width).map(|j| lam.col_len(j) as u64).collect();
        // neighbours of the marked sigma-cycle may only use columns up to the
        // corner row's length
        let marked_mask = self.sigma_adj[0];
        let limits: Vec<usize> = (0..self.gamma_cycles)
            .map(|g| if marked_mask >> g & 1 == 1 { lam.row_len(corner.row) } else { width })
            .collect();
        if corner.col > limits[0] {
            return 0;
        }
        let mut colors = vec![1usize; self.gamma_cycles];
        colors[0] = corner.col;
        let mut total = 0u64;
        self.enumerate(1, &mut colors, &limits, &col_len, &mut total);
        total
    }

    fn enumerate(&self, g: usize, colors: &mut [usize], limits: &[usize], col_len: &[u64], total: &mut u64) {
        if g == colors.len() {
            let mut product = 1u64;
            for &mask in &self.sigma_adj[1..] {
                let mut m = mask;
                let mut widest = 0;
                while m != 0 {
                    let k = m.trailing_zeros() as usize;
                    widest = widest.max(colors[k]);
                    m &= m - 1;
                }
                product *= col_len[widest];
            }
            *total += product;
            return;
        }
        for c in 1..=limits[g] {
            colors[g] = c;
            self.enumerate(g + 1, colors, limits, col_len, total);
        }
    }
}

/// `N(gamma, sigma)`: the number of admissible colorings of the cycles of
/// `gamma` (by columns) and `sigma` (by rows).
pub fn count_colorings(lam: &Partition, mu: &Partition, gamma: &Permutation, sigma: &Permutation) -> Result<u64> {
    let corner = check_pair(lam, mu)?;
    check_degrees(gamma, sigma)?;
    Ok(Incidence::from_perms(gamma, sigma).count(lam, corner))
}

/// Backtracking search over maps `{1..l} -> cells of lam` with `f(1)` pinned
/// to the corner, the column constant on each gamma-cycle and the row
/// constant on each sigma-cycle.
struct FunctionSearch<'a> {
    lam: &'a Partition,
    gamma_labels: Vec<usize>,
    sigma_labels: Vec<usize>,
    col_of: Vec<Option<usize>>,
    row_of: Vec<Option<usize>>,
    injective: bool,
    used: Vec<Vec<bool>>,
}

impl<'a> FunctionSearch<'a> {
    fn new(lam: &'a Partition, gamma: &Permutation, sigma: &Permutation, injective: bool) -> Self {
        let l = gamma.degree();
        let mut gamma_labels = vec![0; l];
        let mut sigma_labels = vec![0; l];
        let gc = cycle_labels(gamma.zero_based(), &mut gamma_labels);
        let sc = cycle_labels(sigma.zero_based(), &mut sigma_labels);
        let used = (0..=lam.len()).map(|i| vec![false; lam.row_len(i) + 1]).collect();
        FunctionSearch {
            lam,
            gamma_labels,
            sigma_labels,
            col_of: vec![None; gc],
            row_of: vec![None; sc],
            injective,
            used,
        }
    }

    fn run(&mut self, corner: Cell) -> u64 {
        match self.place(0, corner) {
            Some(fresh) => {
                let total = self.count(1);
                self.unplace(0, corner, fresh);
                total
            }
            None => 0,
        }
    }

    fn count(&mut self, m: usize) -> u64 {
        if m == self.gamma_labels.len() {
            return 1;
        }
        let g = self.gamma_labels[m];
        let s = self.sigma_labels[m];
        let candidates: Vec<Cell> = match (self.row_of[s], self.col_of[g]) {
            (Some(r), Some(c)) => vec![Cell::new(r, c)],
            (Some(r), None) => (1..=self.lam.row_len(r)).map(|c| Cell::new(r, c)).collect(),
            (None, Some(c)) => (1..=self.lam.col_len(c)).map(|r| Cell::new(r, c)).collect(),
            (None, None) => self.lam.cells().collect(),
        };
        let mut total = 0;
        for cell in candidates {
            if let Some(fresh) = self.place(m, cell) {
                total += self.count(m + 1);
                self.unplace(m, cell, fresh);
            }
        }
        total
    }

    /// Assigns `f(m) = cell` if consistent. Returns which of the two cycle
    /// colors this assignment fixed for the first time.
    fn place(&mut self, m: usize, cell: Cell) -> Option<(bool, bool)> {
        if !self.lam.contains(cell) || (self.injective && self.used[cell.row][cell.col]) {
            return None;
        }
        let g = self.gamma_labels[m];
        let s = self.sigma_labels[m];
        if self.col_of[g].is_some_and(|c| c != cell.col) || self.row_of[s].is_some_and(|r| r != cell.row) {
            return None;
        }
        let fresh = (self.col_of[g].is_none(), self.row_of[s].is_none());
        self.col_of[g] = Some(cell.col);
        self.row_of[s] = Some(cell.row);
        if self.injective {
            self.used[cell.row][cell.col] = true;
        }
        Some(fresh)
    }

    fn unplace(&mut self, m: usize, cell: Cell, (fresh_col, fresh_row): (bool, bool)) {
        if self.injective {
            self.used[cell.row][cell.col] = false;
        }
        if fresh_col {
            self.col_of[self.gamma_labels[m]] = None;
        }
        if fresh_row {
            self.row_of[self.sigma_labels[m]] = None;
        }
    }
}

/// `N̂(gamma, sigma)`: the number of maps `f: {1..l} -> lam` with `f(1)` the
/// cell `lam \ mu`, the column of `f` constant on each cycle of `gamma` and
/// the row of `f` constant on each cycle of `sigma`.
pub fn count_functions(lam: &Partition, mu: &Partition, gamma: &Permutation, sigma: &Permutation) -> Result<u64> {
    let corner = check_pair(lam, mu)?;
    check_degrees(gamma, sigma)?;
    Ok(FunctionSearch::new(lam, gamma, sigma, false).run(corner))
}

/// `Ñ_{S_l}(gamma, sigma)`: the injective maps among those counted by
/// [`count_functions`].
pub fn count_injective(lam: &Partition, mu: &Partition, gamma: &Permutation, sigma: &Permutation) -> Result<u64> {
    let corner = check_pair(lam, mu)?;
    let l = check_degrees(gamma, sigma)?;
    if l > lam.n() {
        return Ok(0);
    }
    Ok(FunctionSearch::new(lam, gamma, sigma, true).run(corner))
}

/// `Ñ(gamma, sigma)`: the number of `pi` fixing 1 such that each cycle of
/// `gamma` lies in a column of `pi t` and each cycle of `sigma` in a row of
/// `pi t`, where `t` is the canonical tableau of the pair. `gamma` and
/// `sigma` act on `{1..l}`, `l <= n`, and fix the remaining points.
pub fn count_tableau_translates(
    lam: &Partition,
    mu: &Partition,
    gamma: &Permutation,
    sigma: &Permutation,
) -> Result<u64> {
    let t = Tableau::canonical(lam, mu)?;
    let l = check_degrees(gamma, sigma)?;
    let n = lam.n();
    if n > TRANSLATES_LIMIT {
        return Err(Error::ScaleExceeded { oracle: "tableau translates", n, limit: TRANSLATES_LIMIT });
    }
    if l > n {
        return Err(Error::OutOfRange { n: l, min: 1, max: n });
    }
    let home: Vec<Cell> = (1..=n).map(|x| t.cell_of(x).expect("tableau holds 1..=n")).collect();
    let gamma_cycles = gamma.cycles();
    let sigma_cycles = sigma.cycles();
    let mut count = 0;
    for pi in point_stabilizer(n) {
        let inv = pi.inverse();
        // y sits in pi t where x = pi^{-1}(y) sits in t
        let cell = |y: usize| home[inv.apply(y) - 1];
        let cols_ok = gamma_cycles.iter().all(|c| c.iter().all(|&y| cell(y).col == cell(c[0]).col));
        let rows_ok = sigma_cycles.iter().all(|c| c.iter().all(|&y| cell(y).row == cell(c[0]).row));
        if cols_ok && rows_ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Calls `f(sign(gamma), gamma, sigma)` for every factorization
/// `gamma ∘ sigma = theta` in `S_l`, with 0-based image slices.
fn for_each_factorization(theta: &[usize], mut f: impl FnMut(i64, &[usize], &[usize])) {
    let l = theta.len();
    let mut gamma: Vec<usize> = (0..l).collect();
    let mut inverse = gamma.clone();
    let mut sigma = vec![0; l];
    let mut sign = 1i64;
    let mut visit = |gamma: &[usize], sign: i64, inverse: &mut [usize], sigma: &mut [usize]| {
        for (x, &g) in gamma.iter().enumerate() {
            inverse[g] = x;
        }
        for (x, s) in sigma.iter_mut().enumerate() {
            *s = inverse[theta[x]];
        }
        f(sign, gamma, sigma);
    };
    visit(&gamma, sign, &mut inverse, &mut sigma);
    // Heap's algorithm: every step is one transposition
    let mut c = vec![0; l];
    let mut i = 1;
    while i < l {
        if c[i] < i {
            if i % 2 == 0 {
                gamma.swap(0, i);
            } else {
                gamma.swap(c[i], i);
            }
            sign = -sign;
            visit(&gamma, sign, &mut inverse, &mut sigma);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The signed factorization sum of one `theta`, with factorizations of equal
/// incidence structure merged so that it can be evaluated for many pairs.
struct FactorizationSum {
    l: usize,
    terms: Vec<(Incidence, i64)>,
}

impl FactorizationSum {
    fn new(theta: &[usize]) -> Self {
        let l = theta.len();
        let mut weights: HashMap<Incidence, i64> = HashMap::new();
        let mut gl = vec![0; l];
        let mut sl = vec![0; l];
        for_each_factorization(theta, |sign, gamma, sigma| {
            let gc = cycle_labels(gamma, &mut gl);
            let sc = cycle_labels(sigma, &mut sl);
            let key = Incidence::new(&gl, gc, &sl, sc).normalized();
            *weights.entry(key).or_insert(0) += sign;
        });
        let mut terms: Vec<_> = weights.into_iter().filter(|(_, w)| *w != 0).collect();
        terms.sort_by(|a, b| (a.0.gamma_cycles, &a.0.sigma_adj).cmp(&(b.0.gamma_cycles, &b.0.sigma_adj)));
        FactorizationSum { l, terms }
    }

    fn value(&self, lam: &Partition, corner: Cell) -> Rational {
        let sum: i128 = self.terms.iter().map(|(inc, w)| *w as i128 * inc.count(lam, corner) as i128).sum();
        let n = lam.n() as i64;
        Rational::new(BigInt::from(sum), BigInt::from(falling_factorial(n - 1, self.l - 1)))
    }
}

/// Restricts or pads `theta` to degree `l`; `theta` must fix every point
/// above `l`.
fn embed(theta: &Permutation, l: usize) -> Result<Permutation> {
    let (min_l, restricted) = theta.minimal_embedding();
    if l < min_l {
        return Err(Error::OutOfRange { n: l, min: min_l, max: usize::MAX });
    }
    restricted.extend(l)
}

fn check_embedding(lam: &Partition, l: usize) -> Result<()> {
    let n = lam.n();
    if l > n {
        return Err(Error::OutOfRange { n: l, min: 1, max: n });
    }
    if l > FACTORIZATION_LIMIT {
        return Err(Error::ScaleExceeded { oracle: "factorization sum", n: l, limit: FACTORIZATION_LIMIT });
    }
    Ok(())
}

/// `phi_{lam,mu}(theta)` by the coloring formula.
pub fn phi_sfs(lam: &Partition, mu: &Partition, theta: &Permutation) -> Result<Rational> {
    let (l, _) = theta.minimal_embedding();
    phi_sfs_embedded(lam, mu, theta, l)
}

/// The coloring formula evaluated with `theta` viewed in `S_l` for a chosen
/// `l` at least the minimal one. The value does not depend on `l`.
pub fn phi_sfs_embedded(lam: &Partition, mu: &Partition, theta: &Permutation, l: usize) -> Result<Rational> {
    let corner = check_pair(lam, mu)?;
    check_embedding(lam, l)?;
    let theta = embed(theta, l)?;
    Ok(FactorizationSum::new(theta.zero_based()).value(lam, corner))
}

/// `phi_{lam,mu}(theta)` by the same sum with [`count_functions`] in place
/// of the coloring count, enumerated factorization by factorization.
pub fn phi_lemma(lam: &Partition, mu: &Partition, theta: &Permutation) -> Result<Rational> {
    let corner = check_pair(lam, mu)?;
    let (l, theta) = theta.minimal_embedding();
    check_embedding(lam, l)?;
    let mut sum = 0i128;
    for_each_factorization(theta.zero_based(), |sign, gamma, sigma| {
        let gamma = Permutation::from_zero_based_unchecked(gamma.to_vec());
        let sigma = Permutation::from_zero_based_unchecked(sigma.to_vec());
        sum += sign as i128 * FunctionSearch::new(lam, &gamma, &sigma, false).run(corner) as i128;
    });
    let n = lam.n() as i64;
    Ok(Rational::new(BigInt::from(sum), BigInt::from(falling_factorial(n - 1, l - 1))))
}

/// `phi_{lam,mu}(g) = 1/(n-1)! * sum over h fixing 1 of chi^lam(g h) chi^mu(h)`.
pub fn phi_spherical(lam: &Partition, mu: &Partition, g: &Permutation) -> Result<Rational> {
    check_pair(lam, mu)?;
    let n = lam.n();
    if n > SPHERICAL_LIMIT {
        return Err(Error::ScaleExceeded { oracle: "spherical", n, limit: SPHERICAL_LIMIT });
    }
    let g = embed(g, n)?;
    let mut sum = 0i64;
    let mut order = 0i64;
    for h in point_stabilizer(n) {
        let gh = g.compose(&h)?;
        sum += mn_character(lam, &gh.cycle_type())? * restricted_character(mu, &h)?;
        order += 1;
    }
    Ok(Rational::new(BigInt::from(sum), BigInt::from(order)))
}

/// `phi_{lam,mu}((1 2)) = (lam_i - lam'_j) / (n - 1)` where `(i, j)` is the
/// cell `lam \ mu`.
pub fn transposition_value(lam: &Partition, mu: &Partition) -> Result<Rational> {
    let corner = check_pair(lam, mu)?;
    let n = lam.n();
    if n < 2 {
        return Err(Error::DegreeTooSmall);
    }
    let arm = lam.row_len(corner.row) as i64;
    let leg = lam.col_len(corner.col) as i64;
    Ok(Rational::new(BigInt::from(arm - leg), BigInt::from(n as i64 - 1)))
}

/// Values of every `phi_{lam,mu}` on every marked class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenCharTable {
    n: usize,
    pairs: Vec<(Partition, Partition)>,
    classes: Vec<MarkedClass>,
    /// `values[pair][class]`
    values: Vec<Vec<Rational>>,
}

impl GenCharTable {
    /// Assembles a table from rows in the canonical pair and class order,
    /// checking that the keys are exactly those of `S_n`.
    pub fn from_rows(
        n: usize,
        pairs: Vec<(Partition, Partition)>,
        classes: Vec<MarkedClass>,
        values: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let expected_pairs = covering_pairs(n)?;
        let expected_classes: Vec<MarkedClass> =
            enumerate_marked_class_reps(n)?.into_iter().map(|(c, _)| c).collect();
        if pairs != expected_pairs {
            return Err(Error::InvalidTable(format!("pairs are not the covering pairs of {n} in order")));
        }
        if classes != expected_classes {
            return Err(Error::InvalidTable(format!("classes are not the marked classes of S_{n} in order")));
        }
        if values.len() != pairs.len() || values.iter().any(|row| row.len() != classes.len()) {
            return Err(Error::InvalidTable("value grid has the wrong shape".into()));
        }
        Ok(GenCharTable { n, pairs, classes, values })
    }

    /// Builds a table from a per-pair evaluator, in parallel over pairs.
    pub fn build_with<F>(n: usize, eval: F) -> Result<Self>
    where
        F: Fn(&Partition, &Partition, &[(MarkedClass, Permutation)]) -> Result<Vec<Rational>> + Sync,
    {
        let pairs = covering_pairs(n)?;
        let reps = enumerate_marked_class_reps(n)?;
        let values = pairs
            .par_iter()
            .map(|(lam, mu)| eval(lam, mu, &reps))
            .collect::<Result<Vec<_>>>()?;
        let classes = reps.into_iter().map(|(c, _)| c).collect();
        Ok(GenCharTable { n, pairs, classes, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(Partition, Partition)] {
        &self.pairs
    }

    pub fn classes(&self) -> &[MarkedClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.pairs.len() * self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, lam: &Partition, mu: &Partition, class: &MarkedClass) -> Option<&Rational> {
        let p = self.pairs.iter().position(|(l, m)| l == lam && m == mu)?;
        let c = self.classes.iter().position(|c| c == class)?;
        Some(&self.values[p][c])
    }

    /// The value at any permutation of degree `n`.
    pub fn value_at(&self, lam: &Partition, mu: &Partition, g: &Permutation) -> Option<&Rational> {
        self.get(lam, mu, &g.marked_class())
    }

    /// The values of one pair, in class order.
    pub fn row(&self, lam: &Partition, mu: &Partition) -> Option<&[Rational]> {
        let p = self.pairs.iter().position(|(l, m)| l == lam && m == mu)?;
        Some(&self.values[p])
    }

    /// All entries, pair-major.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &MarkedClass, &Rational)> {
        self.pairs.iter().zip(&self.values).flat_map(move |((lam, mu), row)| {
            self.classes.iter().zip(row).map(move |(class, v)| (lam, mu, class, v))
        })
    }
}

/// The table of [`phi_sfs`] on every marked class, `2 <= n <= TABLE_LIMIT`.
pub fn build_table(n: usize) -> Result<GenCharTable> {
    if !(2..=TABLE_LIMIT).contains(&n) {
        return Err(Error::OutOfRange { n, min: 2, max: TABLE_LIMIT });
    }
    let pairs = covering_pairs(n)?;
    let reps = enumerate_marked_class_reps(n)?;
    let corners: Vec<Cell> = pairs.iter().map(|(lam, mu)| lam.removed_cell(mu)).collect::<Result<_>>()?;
    // one factorization sum per class, shared by every pair
    let columns: Vec<Vec<Rational>> = reps
        .par_iter()
        .map(|(_, theta)| {
            let (_, restricted) = theta.minimal_embedding();
            let sum = FactorizationSum::new(restricted.zero_based());
            pairs
                .par_iter()
                .zip(&corners)
                .map(|((lam, _), &corner)| sum.value(lam, corner))
                .collect()
        })
        .collect();
    let values = (0..pairs.len())
        .map(|p| columns.iter().map(|col| col[p].clone()).collect())
        .collect();
    let classes = reps.into_iter().map(|(c, _)| c).collect();
    Ok(GenCharTable { n, pairs, classes, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::all_permutations;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    /// Every coloring of every cycle, checked clause by clause.
    fn naive_colorings(lam: &Partition, mu: &Partition, gamma: &Permutation, sigma: &Permutation) -> u64 {
        let corner = lam.removed_cell(mu).unwrap();
        let gc = gamma.cycles();
        let sc = sigma.cycles();
        let (cols, rows) = (lam.row_len(1), lam.len());
        let slots = gc.len() + sc.len();
        let mut colors = vec![1usize; slots];
        let mut count = 0;
        loop {
            let (hg, hs) = colors.split_at(gc.len());
            let pinned = hg[0] == corner.col && hs[0] == corner.row;
            let meets = |a: &Vec<usize>, b: &Vec<usize>| a.iter().any(|x| b.contains(x));
            let cells_ok = gc.iter().enumerate().all(|(i, c1)| {
                sc.iter().enumerate().all(|(k, c2)| !meets(c1, c2) || lam.contains(Cell::new(hs[k], hg[i])))
            });
            if pinned && cells_ok {
                count += 1;
            }
            // odometer
            let mut k = 0;
            loop {
                if k == slots {
                    return count;
                }
                let max = if k < gc.len() { cols } else { rows };
                if colors[k] < max {
                    colors[k] += 1;
                    break;
                }
                colors[k] = 1;
                k += 1;
            }
        }
    }

    /// Every map `{1..l} -> cells`, checked directly.
    fn naive_functions(lam: &Partition, mu: &Partition, gamma: &Permutation, sigma: &Permutation, injective: bool) -> u64 {
        let corner = lam.removed_cell(mu).unwrap();
        let cells: Vec<Cell> = lam.cells().collect();
        let l = gamma.degree();
        let mut idx = vec![0usize; l];
        let mut count = 0;
        loop {
            let f = |m: usize| cells[idx[m - 1]];
            let ok = f(1) == corner
                && (1..=l).all(|m| f(gamma.apply(m)).col == f(m).col && f(sigma.apply(m)).row == f(m).row)
                && (!injective || (1..=l).all(|a| (a + 1..=l).all(|b| f(a) != f(b))));
            if ok {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == l {
                    return count;
                }
                if idx[k] + 1 < cells.len() {
                    idx[k] += 1;
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(4, 0), 1);
        assert_eq!(falling_factorial(4, 2), 12);
        assert_eq!(falling_factorial(3, 3), 6);
        assert_eq!(falling_factorial(0, 0), 1);
    }

    #[test]
    fn coloring_examples() {
        let (lam, mu) = (p("2,1"), p("1,1"));
        let id2 = Permutation::identity(2);
        let t = perm("(1 2)", 2);
        // lam_i with i = 1, then lam'_j with j = 2
        assert_eq!(count_colorings(&lam, &mu, &id2, &t).unwrap(), 2);
        assert_eq!(count_colorings(&lam, &mu, &t, &id2).unwrap(), 1);
        let id1 = Permutation::identity(1);
        assert_eq!(count_colorings(&lam, &mu, &id1, &id1).unwrap(), 1);
        assert!(matches!(count_colorings(&lam, &p("3"), &id1, &id1), Err(Error::NotCovering { .. })));
        assert!(matches!(count_colorings(&lam, &mu, &id1, &id2), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn function_examples() {
        let (lam, mu) = (p("2,1"), p("1,1"));
        let id2 = Permutation::identity(2);
        let t = perm("(1 2)", 2);
        assert_eq!(count_functions(&lam, &mu, &id2, &t).unwrap(), 2);
        let id1 = Permutation::identity(1);
        assert_eq!(count_functions(&lam, &mu, &id1, &id1).unwrap(), 1);
        assert_eq!(count_injective(&lam, &mu, &id2, &t).unwrap(), 1);
        let id3 = Permutation::identity(3);
        assert_eq!(count_injective(&lam, &mu, &id3, &id3).unwrap(), 2);
        let lam = p("3,2");
        let mu = p("2,2");
        let id5 = Permutation::identity(5);
        assert_eq!(count_injective(&lam, &mu, &id5, &id5).unwrap(), 24);
        let id6 = Permutation::identity(6);
        assert_eq!(count_injective(&lam, &mu, &id6, &id6).unwrap(), 0);
    }

    #[test]
    fn counts_match_naive_enumeration() {
        for n in 1..=5 {
            for (lam, mu) in covering_pairs(n).unwrap() {
                for l in 1..=n.min(3) {
                    let perms: Vec<_> = all_permutations(l).collect();
                    for g in &perms {
                        for s in &perms {
                            let colorings = count_colorings(&lam, &mu, g, s).unwrap();
                            assert_eq!(colorings, naive_colorings(&lam, &mu, g, s), "{lam:?} {mu:?} {g:?} {s:?}");
                            assert_eq!(count_functions(&lam, &mu, g, s).unwrap(), naive_functions(&lam, &mu, g, s, false));
                            assert_eq!(count_injective(&lam, &mu, g, s).unwrap(), naive_functions(&lam, &mu, g, s, true));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn translates_examples() {
        let (lam, mu) = (p("2,1"), p("1,1"));
        let id2 = Permutation::identity(2);
        let t = perm("(1 2)", 2);
        assert_eq!(count_tableau_translates(&lam, &mu, &id2, &t).unwrap(), 1);
        let id1 = Permutation::identity(1);
        assert_eq!(count_tableau_translates(&lam, &mu, &id1, &id1).unwrap(), 2);
        assert_eq!(count_tableau_translates(&p("3,2"), &p("3,1"), &id1, &id1).unwrap(), 24);
        assert!(matches!(
            count_tableau_translates(&p("7"), &p("6"), &id1, &id1),
            Err(Error::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn phi_examples() {
        let (lam, m11, m2) = (p("2,1"), p("1,1"), p("2"));
        let e = Permutation::identity(3);
        let t = perm("(1 2)", 3);
        for f in [phi_sfs, phi_lemma, phi_spherical] {
            assert_eq!(f(&lam, &m11, &e).unwrap(), q(1, 1));
            assert_eq!(f(&lam, &m11, &t).unwrap(), q(1, 2));
            assert_eq!(f(&lam, &m2, &t).unwrap(), q(-1, 2));
            assert_eq!(f(&lam, &m11, &perm("(2 3)", 3)).unwrap(), q(-1, 1));
            assert_eq!(f(&lam, &m11, &perm("(1 2 3)", 3)).unwrap(), q(-1, 2));
        }
        assert_eq!(transposition_value(&lam, &m11).unwrap(), q(1, 2));
        assert_eq!(transposition_value(&lam, &m2).unwrap(), q(-1, 2));
        assert_eq!(transposition_value(&p("5"), &p("4")).unwrap(), q(1, 1));
        assert_eq!(transposition_value(&p("1,1,1,1"), &p("1,1,1")).unwrap(), q(-1, 1));
        assert_eq!(transposition_value(&p("1"), &Partition::empty()), Err(Error::DegreeTooSmall));
        // theta supported beyond n
        assert!(phi_sfs(&lam, &m11, &perm("(1 4)", 4)).is_err());
        assert!(matches!(phi_spherical(&p("8"), &p("7"), &e), Err(Error::ScaleExceeded { .. })));
    }

    #[test]
    fn degree_one() {
        let e = Permutation::identity(1);
        let (lam, mu) = (p("1"), Partition::empty());
        assert_eq!(phi_sfs(&lam, &mu, &e).unwrap(), q(1, 1));
        assert_eq!(phi_lemma(&lam, &mu, &e).unwrap(), q(1, 1));
        assert_eq!(phi_spherical(&lam, &mu, &e).unwrap(), q(1, 1));
    }

    #[test]
    fn small_table() {
        let table = build_table(3).unwrap();
        assert_eq!(table.len(), 16);
        let classes: Vec<String> = table.classes().iter().map(|c| c.to_string()).collect();
        assert_eq!(classes, ["[3; mark 3]", "[2,1; mark 2]", "[2,1; mark 1]", "[1,1,1; mark 1]"]);
        // classes (1 2 3), (1 2), (2 3), e
        assert_eq!(table.row(&p("2,1"), &p("1,1")).unwrap(), &[q(-1, 2), q(1, 2), q(-1, 1), q(1, 1)]);
        let id = Permutation::identity(3).marked_class();
        assert!(table.pairs().iter().all(|(l, m)| *table.get(l, m, &id).unwrap() == q(1, 1)));
        assert_eq!(build_table(4).unwrap().len(), 49);
        assert!(build_table(1).is_err());
        assert!(build_table(9).is_err());
    }

    #[test]
    fn embedding_degree_does_not_matter() {
        let (lam, mu) = (p("3,2"), p("2,2"));
        let theta = perm("(1 3)", 5);
        let base = phi_sfs(&lam, &mu, &theta).unwrap();
        for l in 3..=5 {
            assert_eq!(phi_sfs_embedded(&lam, &mu, &theta, l).unwrap(), base);
        }
        assert!(phi_sfs_embedded(&lam, &mu, &theta, 2).is_err());
    }
}
