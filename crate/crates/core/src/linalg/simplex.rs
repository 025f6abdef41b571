use crate::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<S> {
    Infeasible,
    Unbounded,
    Optimal(Vec<S>),
}

/// Dense simplex tableau: `rows[i]` holds `B⁻¹A` row `i` followed by the
/// right-hand side.
struct Tableau<S> {
    rows: Vec<Vec<S>>,
    basis: Vec<usize>,
    cols: usize,
}

impl<S: Scalar> Tableau<S> {
    fn rhs(&self, i: usize) -> &S {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = S::one() / self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v = v.clone() - f.clone() * p.clone();
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimises `cost · x` over columns allowed by `usable`, with Bland's
    /// rule. Returns `false` when unbounded.
    fn optimise(&mut self, cost: &[S], usable: impl Fn(usize) -> bool) -> bool {
        loop {
            let reduced = |j: usize| {
                self.rows
                    .iter()
                    .zip(&self.basis)
                    .fold(cost[j].clone(), |acc, (row, &bj)| acc - cost[bj].clone() * row[j].clone())
            };
            let entering = (0..self.cols).find(|&j| usable(j) && !self.basis.contains(&j) && reduced(j).is_negative());
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, S)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Minimises `c · x` subject to `a · x = b`, `x ≥ 0`, by the two-phase
/// simplex method with Bland's anti-cycling rule. Exact for exact scalars.
pub fn lp_min_nonneg<S: Scalar>(a: &[Vec<S>], b: &[S], c: &[S]) -> LpOutcome<S> {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    let cols = n + m;
    let rows = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            assert_eq!(row.len(), n);
            let flip = bi.is_negative();
            let sign = |v: &S| if flip { -v.clone() } else { v.clone() };
            let mut r: Vec<S> = row.iter().map(sign).collect();
            r.extend((0..m).map(|k| if k == i { S::one() } else { S::zero() }));
            r.push(sign(bi));
            r
        })
        .collect();
    let mut t = Tableau { rows, basis: (n..cols).collect(), cols };

    let phase1: Vec<S> = (0..cols).map(|j| if j < n { S::zero() } else { S::one() }).collect();
    t.optimise(&phase1, |_| true);
    let infeasibility =
        t.basis.iter().enumerate().fold(S::zero(), |acc, (i, &bj)| if bj >= n { acc + t.rhs(i).clone() } else { acc });
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut phase2: Vec<S> = c.to_vec();
    phase2.extend((0..m).map(|_| S::zero()));
    if !t.optimise(&phase2, |j| j < n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![S::zero(); n];
    for (i, &bj) in t.basis.iter().enumerate() {
        if bj < n {
            x[bj] = t.rhs(i).clone();
        }
    }
    LpOutcome::Optimal(x)
}
