//! Revised simplex over an explicit basis inverse, with columns generated by
//! stable-set pricing.
//!
//! Master problem: minimise `sum x_S` subject to `sum_{S ∋ v} x_S = 1` and
//! `x >= 0`, one column per stable set `S`. The singletons form the initial
//! basis. Entering columns follow Bland's rule over the pool; when no pool
//! column prices out, a fresh column is requested from the oracle.

use super::field::{Field, SmallRational};
use crate::graph::{Graph, SearchLimits};
use crate::{Error, Rational, Result};

pub(crate) struct LpSolution {
    /// Positive basic columns with their weights.
    pub classes: Vec<(Vec<usize>, Rational)>,
    pub duals: Vec<Rational>,
    pub total: Rational,
}

/// Source of improving columns: given duals, a stable set of dual weight
/// strictly above one, or `None` if none exists.
pub(crate) type Pricer<'a> = dyn FnMut(&[Rational]) -> Result<Option<Vec<usize>>> + 'a;

pub(crate) fn solve(g: &Graph, pricer: &mut Pricer<'_>, limits: &SearchLimits) -> Result<LpSolution> {
    let mut pool: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    if let Some(sol) = run::<SmallRational>(g, &mut pool, pricer, limits)? {
        return Ok(sol);
    }
    Ok(run::<Rational>(g, &mut pool, pricer, limits)?.expect("big rationals do not overflow"))
}

/// `Ok(None)` signals arithmetic overflow in `F`.
fn run<F: Field>(
    g: &Graph,
    pool: &mut Vec<Vec<usize>>,
    pricer: &mut Pricer<'_>,
    limits: &SearchLimits,
) -> Result<Option<LpSolution>> {
    let n = g.n();
    let mut lp = Tableau::<F>::new(n);
    let mut in_basis = vec![false; pool.len()];
    for (i, b) in in_basis.iter_mut().enumerate().take(n) {
        *b = true;
        lp.basis[i] = i;
    }
    let mut iterations = 0u64;
    loop {
        iterations += 1;
        if iterations > limits.max_nodes {
            return Err(Error::ResourceLimit { nodes: limits.max_nodes });
        }
        let Some(y) = lp.duals() else { return Ok(None) };
        let mut entering = None;
        for (j, col) in pool.iter().enumerate() {
            if in_basis[j] {
                continue;
            }
            let Some(w) = sum(col.iter().map(|&v| &y[v])) else { return Ok(None) };
            if w > F::one() {
                entering = Some(j);
                break;
            }
        }
        if entering.is_none() {
            let yq: Vec<Rational> = y.iter().map(Field::to_rational).collect();
            if let Some(s) = pricer(&yq)? {
                debug_assert!(!pool.contains(&s), "pricing returned a pooled column");
                pool.push(s);
                in_basis.push(false);
                entering = Some(pool.len() - 1);
            }
        }
        let Some(j) = entering else {
            return Ok(lp.solution(pool, &y));
        };
        let Some(d) = lp.direction(&pool[j]) else { return Ok(None) };
        // Ratio test; ties go to the basic column of lowest pool index.
        let mut leave: Option<(usize, F)> = None;
        for (i, di) in d.iter().enumerate() {
            if !di.is_positive() {
                continue;
            }
            let Some(ratio) = lp.x[i].div(di) else { return Ok(None) };
            let better = match &leave {
                None => true,
                Some((r, best)) => ratio < *best || (ratio == *best && lp.basis[i] < lp.basis[*r]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("the master problem is bounded below");
        in_basis[lp.basis[r]] = false;
        in_basis[j] = true;
        if lp.pivot(r, j, &d).is_none() {
            return Ok(None);
        }
    }
}

fn sum<'a, F: Field + 'a>(it: impl Iterator<Item = &'a F>) -> Option<F> {
    it.fold(Some(F::zero()), |acc, x| acc?.add(x))
}

struct Tableau<F> {
    /// Row-major inverse of the basis matrix.
    binv: Vec<Vec<F>>,
    /// Pool index of the column basic in each row.
    basis: Vec<usize>,
    /// Values of the basic variables.
    x: Vec<F>,
}

impl<F: Field> Tableau<F> {
    fn new(n: usize) -> Self {
        let binv = (0..n)
            .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        Tableau {
            binv,
            basis: vec![0; n],
            x: vec![F::one(); n],
        }
    }

    /// `y = 1^T B^{-1}`, since every column has unit cost.
    fn duals(&self) -> Option<Vec<F>> {
        let n = self.binv.len();
        (0..n).map(|j| sum(self.binv.iter().map(|row| &row[j]))).collect()
    }

    /// `B^{-1} a` for the incidence vector `a` of `col`.
    fn direction(&self, col: &[usize]) -> Option<Vec<F>> {
        self.binv.iter().map(|row| sum(col.iter().map(|&v| &row[v]))).collect()
    }

    fn pivot(&mut self, r: usize, j: usize, d: &[F]) -> Option<()> {
        let piv = d[r].clone();
        let row_r: Vec<F> = self.binv[r].iter().map(|a| a.div(&piv)).collect::<Option<_>>()?;
        let x_r = self.x[r].div(&piv)?;
        for i in 0..self.binv.len() {
            if i == r || d[i].is_zero() {
                continue;
            }
            for (a, b) in self.binv[i].iter_mut().zip(&row_r) {
                if !b.is_zero() {
                    *a = a.sub(&d[i].mul(b)?)?;
                }
            }
            self.x[i] = self.x[i].sub(&d[i].mul(&x_r)?)?;
        }
        self.binv[r] = row_r;
        self.x[r] = x_r;
        self.basis[r] = j;
        Some(())
    }

    fn solution(&self, pool: &[Vec<usize>], y: &[F]) -> Option<LpSolution> {
        let mut classes: Vec<(Vec<usize>, Rational)> = self
            .basis
            .iter()
            .zip(&self.x)
            .filter(|(_, x)| x.is_positive())
            .map(|(&j, x)| (pool[j].clone(), x.to_rational()))
            .collect();
        classes.sort();
        let total = classes.iter().map(|(_, w)| w.clone()).sum();
        Some(LpSolution {
            classes,
            duals: y.iter().map(Field::to_rational).collect(),
            total,
        })
    }
}
