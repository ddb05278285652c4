//! Classical master-equation generators over populations and their stationary
//! distributions.

use crate::error::{Error, Result};
use nalgebra::DMatrix;

/// Generator W of dp/dt = W p. Entry (m, l) holds the rate l -> m for m != l;
/// diagonals carry minus the column's outflow so every column sums to zero.
#[derive(Debug, Clone)]
pub struct RateMatrix {
    w: DMatrix<f64>,
}

impl RateMatrix {
    pub fn new(dim: usize) -> Self {
        RateMatrix { w: DMatrix::zeros(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.w.nrows()
    }

    /// Add a transition channel from state `from` to state `to`.
    pub fn add_transition(&mut self, from: usize, to: usize, rate: f64) {
        debug_assert!(from != to);
        debug_assert!(rate >= 0.0, "negative rate {rate} for {from}->{to}");
        self.w[(to, from)] += rate;
        self.w[(from, from)] -= rate;
    }

    pub fn entry(&self, to: usize, from: usize) -> f64 {
        self.w[(to, from)]
    }

    pub fn column_sums(&self) -> Vec<f64> {
        (0..self.w.ncols()).map(|j| self.w.column(j).sum()).collect()
    }

    /// Stationary distribution: the kernel of W, normalized to a probability
    /// vector. Errors when the kernel is (numerically) more than one-dimensional.
    pub fn steady_state(&self) -> Result<Vec<f64>> {
        let n = self.dim();
        let svd = self.w.clone().svd(false, true);
        let v_t = svd.v_t.as_ref().expect("svd requested v^T");
        let s = &svd.singular_values;
        // singular values are sorted descending; the kernel vector is the last row of V^T
        let scale = s[0].max(1.0);
        if n > 1 && s[n - 2] / scale < 1e-10 {
            return Err(Error::DegenerateSteadyState(s[n - 2]));
        }
        let mut p: Vec<f64> = v_t.row(n - 1).iter().copied().collect();
        let total: f64 = p.iter().sum();
        if total.abs() < 1e-300 {
            return Err(Error::DegenerateSteadyState(s[n - 1]));
        }
        for x in &mut p {
            *x /= total;
            // clamp the numerical dust so downstream currents stay clean
            if *x < 0.0 && *x > -1e-12 {
                *x = 0.0;
            }
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn two_state_detailed_balance() {
        let mut w = RateMatrix::new(2);
        w.add_transition(0, 1, 0.3);
        w.add_transition(1, 0, 0.7);
        let p = w.steady_state().unwrap();
        // p0/p1 = rate(1->0)/rate(0->1)
        assert_relative_eq!(p[0] / p[1], 0.7 / 0.3, max_relative = 1e-12);
        assert_relative_eq!(p[0] + p[1], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn column_sums_vanish() {
        let mut w = RateMatrix::new(4);
        w.add_transition(0, 1, 1.0);
        w.add_transition(1, 3, 0.2);
        w.add_transition(3, 2, 2.5);
        w.add_transition(2, 0, 0.9);
        w.add_transition(1, 0, 0.4);
        for s in w.column_sums() {
            assert!(s.abs() < 1e-14);
        }
    }

    #[test]
    fn disconnected_chain_is_degenerate() {
        // two 2-state blocks with no transitions between them
        let mut w = RateMatrix::new(4);
        w.add_transition(0, 1, 1.0);
        w.add_transition(1, 0, 1.0);
        w.add_transition(2, 3, 1.0);
        w.add_transition(3, 2, 1.0);
        assert!(matches!(w.steady_state(), Err(Error::DegenerateSteadyState(_))));
    }

    #[test]
    fn three_state_cycle_against_direct_solve() {
        // irreversible cycle 0->1->2->0: p_i proportional to 1/outflow_i
        let mut w = RateMatrix::new(3);
        w.add_transition(0, 1, 2.0);
        w.add_transition(1, 2, 3.0);
        w.add_transition(2, 0, 5.0);
        let p = w.steady_state().unwrap();
        let raw = [1.0 / 2.0, 1.0 / 3.0, 1.0 / 5.0];
        let z: f64 = raw.iter().sum();
        for i in 0..3 {
            assert_relative_eq!(p[i], raw[i] / z, max_relative = 1e-12);
        }
    }
}
