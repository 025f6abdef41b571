//! Least fixed point of `v = W v + b` on `[0, ∞]` for a weighted product.

use std::collections::VecDeque;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::{ExtValue, SemanticsError};
use crate::linalg::{lp_min_nonneg, solve_linear, LpOutcome};
use crate::models::Target;
use crate::product::WeightedProduct;
use crate::Scalar;

/// `steps` Kleene iterates of `v ↦ b + W v` from `0`, at every state.
pub fn product_values_iterate<S: Scalar>(p: &WeightedProduct<S>, steps: usize) -> Vec<S> {
    let n = p.num_states();
    let mut v = vec![S::zero(); n];
    for _ in 0..steps {
        v = (0..n)
            .map(|s| {
                p.row(s).iter().fold(S::zero(), |acc, (t, w)| match t {
                    Target::Check => acc + w.clone(),
                    Target::State(j) => acc + w.clone() * v[*j].clone(),
                })
            })
            .collect();
    }
    v
}

pub fn product_value_iterate<S: Scalar>(
    p: &WeightedProduct<S>,
    init: usize,
    steps: usize,
) -> Result<S, SemanticsError> {
    check_state(p, init)?;
    Ok(product_values_iterate(p, steps).swap_remove(init))
}

fn check_state<S: Scalar>(p: &WeightedProduct<S>, s: usize) -> Result<(), SemanticsError> {
    if s < p.num_states() {
        Ok(())
    } else {
        Err(SemanticsError::UnknownState(s))
    }
}

/// States with a positive-weight path to ✓.
fn coreachable<S: Scalar>(p: &WeightedProduct<S>) -> Vec<bool> {
    let n = p.num_states();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut live = vec![false; n];
    let mut queue = VecDeque::new();
    for (s, alive) in live.iter_mut().enumerate() {
        for (t, _) in p.row(s) {
            if let Target::State(j) = t {
                preds[*j].push(s);
            }
        }
        if p.weight(s, Target::Check) > S::zero() {
            *alive = true;
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        for &r in &preds[s] {
            if !live[r] {
                live[r] = true;
                queue.push_back(r);
            }
        }
    }
    live
}

fn forward_reachable<S: Scalar>(p: &WeightedProduct<S>, init: usize) -> Vec<bool> {
    let mut seen = vec![false; p.num_states()];
    seen[init] = true;
    let mut queue = VecDeque::from([init]);
    while let Some(s) = queue.pop_front() {
        for (t, _) in p.row(s) {
            if let Target::State(j) = t {
                if !seen[*j] {
                    seen[*j] = true;
                    queue.push_back(*j);
                }
            }
        }
    }
    seen
}

/// States kept after pruning: inside `scope` and able to reach ✓.
fn live_states<S: Scalar>(p: &WeightedProduct<S>, scope: &[bool]) -> Vec<bool> {
    coreachable(p).into_iter().zip(scope).map(|(c, s)| c && *s).collect()
}

/// Largest row sum of the inter-state weights restricted to the states
/// reachable from `init` that can reach ✓. `None` when that set is empty.
pub fn pruned_max_row_sum<S: Scalar>(p: &WeightedProduct<S>, init: usize) -> Result<Option<S>, SemanticsError> {
    check_state(p, init)?;
    let live = live_states(p, &forward_reachable(p, init));
    let mut best: Option<S> = None;
    for s in (0..p.num_states()).filter(|&s| live[s]) {
        let sum = p.row(s).iter().fold(S::zero(), |acc, (t, w)| match t {
            Target::State(j) if live[*j] => acc + w.clone(),
            _ => acc,
        });
        if best.as_ref().is_none_or(|b| sum > *b) {
            best = Some(sum);
        }
    }
    Ok(best)
}

/// Least fixed point restricted to `scope`; states outside it are reported
/// as 0 and must not be read by callers.
fn solve_scope<S: Scalar>(p: &WeightedProduct<S>, scope: &[bool]) -> Vec<ExtValue<S>> {
    let n = p.num_states();
    let live = live_states(p, scope);
    let mut value: Vec<ExtValue<S>> = vec![ExtValue::zero(); n];

    let mut graph: DiGraph<usize, ()> = DiGraph::new();
    let mut node = vec![NodeIndex::end(); n];
    for s in (0..n).filter(|&s| live[s]) {
        node[s] = graph.add_node(s);
    }
    for s in (0..n).filter(|&s| live[s]) {
        for (t, _) in p.row(s) {
            if let Target::State(j) = t {
                if live[*j] {
                    graph.add_edge(node[s], node[*j], ());
                }
            }
        }
    }

    let mut component = vec![usize::MAX; n];
    // Tarjan yields components in reverse topological order: successors first.
    for (cid, scc) in tarjan_scc(&graph).into_iter().enumerate() {
        let members: Vec<usize> = scc.iter().map(|&ix| graph[ix]).collect();
        for &s in &members {
            component[s] = cid;
        }
        let mut rhs = Vec::with_capacity(members.len());
        let mut infinite = false;
        for &s in &members {
            let mut b = S::zero();
            for (t, w) in p.row(s) {
                match t {
                    Target::Check => b = b + w.clone(),
                    Target::State(j) if live[*j] && component[*j] != cid => match &value[*j] {
                        ExtValue::Finite(v) => b = b + w.clone() * v.clone(),
                        ExtValue::Infinite => infinite = true,
                    },
                    _ => {}
                }
            }
            rhs.push(b);
        }
        let solution = if infinite { None } else { solve_component(p, &members, &component, cid, rhs) };
        for (k, &s) in members.iter().enumerate() {
            value[s] = match &solution {
                Some(v) => ExtValue::Finite(v[k].clone()),
                None => ExtValue::Infinite,
            };
        }
    }
    value
}

/// Least nonnegative solution of `(I − W_C) v = b'` on one component, or
/// `None` when there is none (the value is ∞).
fn solve_component<S: Scalar>(
    p: &WeightedProduct<S>,
    members: &[usize],
    component: &[usize],
    cid: usize,
    rhs: Vec<S>,
) -> Option<Vec<S>> {
    let k = members.len();
    let local: std::collections::HashMap<usize, usize> = members.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    if k == 1 {
        let s = members[0];
        let self_loop = p.weight(s, Target::State(s));
        if self_loop.is_zero() {
            return Some(rhs);
        }
        let denom = S::one() - self_loop;
        return denom.is_positive().then(|| vec![rhs[0].clone() / denom]);
    }
    let mut matrix = vec![vec![S::zero(); k]; k];
    for (i, &s) in members.iter().enumerate() {
        matrix[i][i] = S::one();
        for (t, w) in p.row(s) {
            if let Target::State(j) = t {
                if component[*j] == cid {
                    let c = local[j];
                    matrix[i][c] = matrix[i][c].clone() - w.clone();
                }
            }
        }
    }
    if let Some(v) = solve_linear(matrix.clone(), rhs.clone()) {
        if v.iter().all(|x| !x.is_negative()) {
            return Some(v);
        }
    }
    // Singular or sign-violating: decide existence of a nonnegative solution
    // exactly and take the one of least total.
    match lp_min_nonneg(&matrix, &rhs, &vec![S::one(); k]) {
        LpOutcome::Optimal(v) => Some(v),
        LpOutcome::Infeasible | LpOutcome::Unbounded => None,
    }
}

/// Least fixed point at every state of the product.
pub fn product_values_exact<S: Scalar>(p: &WeightedProduct<S>) -> Vec<ExtValue<S>> {
    solve_scope(p, &vec![true; p.num_states()])
}

/// Least fixed point at `init`, solving only the fragment reachable from it.
pub fn product_value_exact<S: Scalar>(p: &WeightedProduct<S>, init: usize) -> Result<ExtValue<S>, SemanticsError> {
    check_state(p, init)?;
    let scope = forward_reachable(p, init);
    Ok(solve_scope(p, &scope).swap_remove(init))
}
