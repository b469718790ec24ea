//! Backtracking search for small designs.
//!
//! The search covers the multiset in which every pair of points appears `λ`
//! times. Each node branches on the unsaturated pair with the fewest fitting
//! blocks (ties to the lexicographically least pair) and tries those blocks in
//! lexicographic order. The first block is pinned to `{0, …, k-1}`, and
//! consecutive decisions on the same pair pick non-decreasing blocks so
//! repeated choices are not permuted. Candidate enumeration counts against the
//! budget along with the nodes themselves.

use crate::design::BlockDesign;
use crate::error::{Error, Result};
use crate::params::{check_necessary, DesignParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Found(BlockDesign),
    /// The whole search tree was explored without a solution.
    Exhausted,
    /// The step budget ran out first.
    BudgetExceeded,
}

impl SolveOutcome {
    pub fn design(self) -> Option<BlockDesign> {
        match self {
            SolveOutcome::Found(d) => Some(d),
            _ => None,
        }
    }
}

enum Step {
    Found,
    Dead,
    Budget,
}

struct OutOfBudget;

struct Search {
    n: usize,
    k: usize,
    lambda: u32,
    r: u32,
    b: usize,
    /// Symmetric `n × n` pair multiplicities.
    pair: Vec<u32>,
    replication: Vec<u32>,
    blocks: Vec<Vec<usize>>,
    steps: u64,
    budget: u64,
}

impl Search {
    fn tick(&mut self) -> std::result::Result<(), OutOfBudget> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn open(&self, x: usize, y: usize) -> bool {
        self.pair[x * self.n + y] < self.lambda
    }

    fn apply(&mut self, block: &[usize], delta: i32) {
        let n = self.n;
        for (i, &x) in block.iter().enumerate() {
            self.replication[x] = (self.replication[x] as i32 + delta) as u32;
            for &y in &block[i + 1..] {
                let m = (self.pair[x * n + y] as i32 + delta) as u32;
                self.pair[x * n + y] = m;
                self.pair[y * n + x] = m;
            }
        }
    }

    /// Fitting blocks through `{a, c}` in lexicographic order, stopping once
    /// more than `cap` are found.
    fn candidates(
        &mut self,
        a: usize,
        c: usize,
        cap: usize,
    ) -> std::result::Result<Vec<Vec<usize>>, OutOfBudget> {
        let mut out = Vec::new();
        if self.replication[a] >= self.r || self.replication[c] >= self.r {
            return Ok(out);
        }
        let pool: Vec<usize> = (0..self.n)
            .filter(|&z| {
                z != a
                    && z != c
                    && self.replication[z] < self.r
                    && self.open(a, z)
                    && self.open(c, z)
            })
            .collect();
        let mut pick = Vec::with_capacity(self.k - 2);
        self.extend(&pool, 0, a, c, &mut pick, &mut out, cap)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        pool: &[usize],
        start: usize,
        a: usize,
        c: usize,
        pick: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> std::result::Result<(), OutOfBudget> {
        self.tick()?;
        let need = self.k - 2 - pick.len();
        if need == 0 {
            let mut block = Vec::with_capacity(self.k);
            block.push(a);
            block.push(c);
            block.extend_from_slice(pick);
            block.sort_unstable();
            out.push(block);
            return Ok(());
        }
        for i in start..pool.len() {
            if pool.len() - i < need || out.len() > cap {
                break;
            }
            let z = pool[i];
            if pick.iter().all(|&y| self.open(y, z)) {
                pick.push(z);
                self.extend(pool, i + 1, a, c, pick, out, cap)?;
                pick.pop();
            }
        }
        Ok(())
    }

    /// The open pair with the fewest fitting blocks, with those blocks.
    fn branch_pair(
        &mut self,
    ) -> std::result::Result<Option<(usize, Vec<Vec<usize>>)>, OutOfBudget> {
        let n = self.n;
        let mut best: Option<(usize, usize)> = None;
        'scan: for a in 0..n {
            for c in a + 1..n {
                if !self.open(a, c) {
                    continue;
                }
                let cap = best.map_or(usize::MAX, |(_, count)| count);
                let count = self.candidates(a, c, cap)?.len();
                if best.is_none_or(|(_, fewest)| count < fewest) {
                    best = Some((a * n + c, count));
                    if count <= 1 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((id, _)) = best else {
            return Ok(None);
        };
        let all = self.candidates(id / n, id % n, usize::MAX)?;
        Ok(Some((id, all)))
    }

    fn run(&mut self, last: Option<(usize, Vec<usize>)>) -> Step {
        if self.tick().is_err() {
            return Step::Budget;
        }
        let (pair_id, mut options) = if self.blocks.is_empty() {
            (1, vec![(0..self.k).collect::<Vec<_>>()])
        } else {
            match self.branch_pair() {
                Err(OutOfBudget) => return Step::Budget,
                Ok(None) => {
                    return if self.blocks.len() == self.b {
                        Step::Found
                    } else {
                        Step::Dead
                    }
                }
                Ok(Some(found)) => found,
            }
        };
        if self.blocks.len() == self.b {
            return Step::Dead;
        }
        if let Some((last_pair, last_block)) = &last {
            if *last_pair == pair_id {
                options.retain(|blk| blk >= last_block);
            }
        }
        for block in options {
            self.apply(&block, 1);
            self.blocks.push(block.clone());
            match self.run(Some((pair_id, block.clone()))) {
                Step::Found => return Step::Found,
                Step::Budget => return Step::Budget,
                Step::Dead => {}
            }
            self.blocks.pop();
            self.apply(&block, -1);
        }
        Step::Dead
    }
}

/// Searches for a design with `params`, taking at most `node_budget` steps
/// (search nodes plus candidate-enumeration steps).
///
/// Deterministic: the same inputs always give the same outcome and design.
pub fn solve_design(params: &DesignParams, node_budget: u64) -> Result<SolveOutcome> {
    if !check_necessary(params) {
        return Err(Error::Precondition(format!(
            "{params} violates bk = nr or r(k-1) = λ(n-1)"
        )));
    }
    let to_usize = |x: u64| usize::try_from(x).map_err(|_| Error::Overflow("solver sizes"));
    let to_u32 = |x: u64| u32::try_from(x).map_err(|_| Error::Overflow("solver counts"));
    let n = to_usize(params.n)?;
    if n.checked_mul(n).is_none() || n > 1 << 12 {
        return Err(Error::Overflow("solver pair table"));
    }
    let mut search = Search {
        n,
        k: to_usize(params.k)?,
        lambda: to_u32(params.lambda)?,
        r: to_u32(params.r)?,
        b: to_usize(params.b)?,
        pair: vec![0; n * n],
        replication: vec![0; n],
        blocks: Vec::new(),
        steps: 0,
        budget: node_budget,
    };
    Ok(match search.run(None) {
        Step::Found => {
            let design = BlockDesign::new(n, std::mem::take(&mut search.blocks))?;
            debug_assert_eq!(design.params().as_ref(), Some(params));
            SolveOutcome::Found(design)
        }
        Step::Dead => SolveOutcome::Exhausted,
        Step::Budget => SolveOutcome::BudgetExceeded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(b: u64, n: u64, r: u64, k: u64, l: u64) -> DesignParams {
        DesignParams::new(b, n, r, k, l).unwrap()
    }

    #[test]
    fn finds_twofold_triple_system_on_six() {
        let p = params(10, 6, 5, 3, 2);
        let d = solve_design(&p, 100_000).unwrap().design().unwrap();
        assert_eq!(d.params(), Some(p));
        assert_eq!(d.blocks()[0], vec![0, 1, 2]);
    }

    #[test]
    fn finds_seven_point_biplane() {
        let p = params(7, 7, 4, 4, 2);
        let d = solve_design(&p, 100_000).unwrap().design().unwrap();
        assert_eq!(d.params(), Some(p));
    }

    #[test]
    fn rejects_non_admissible() {
        assert!(matches!(
            solve_design(&params(8, 6, 3, 3, 1), 1000),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn budget_cutoff() {
        let out = solve_design(&params(7, 7, 3, 3, 1), 2).unwrap();
        assert_eq!(out, SolveOutcome::BudgetExceeded);
    }

    #[test]
    fn exhausts_when_fisher_fails() {
        // satisfies both counting identities but has b < n
        let out = solve_design(&params(8, 16, 3, 6, 1), 1_000_000).unwrap();
        assert_eq!(out, SolveOutcome::Exhausted);
    }

    #[test]
    fn deterministic() {
        let p = params(10, 6, 5, 3, 2);
        assert_eq!(
            solve_design(&p, 100_000).unwrap(),
            solve_design(&p, 100_000).unwrap()
        );
    }
}
