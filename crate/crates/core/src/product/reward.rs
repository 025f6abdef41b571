use super::WeightedProduct;
use crate::models::Target;
use crate::Scalar;

/// Stochastic chain with per-state multiplicative rewards. State indices
/// follow the product; the sink, when present, is the last index.
#[derive(Clone, Debug, PartialEq)]
pub struct RewardMc<S> {
    pub names: Vec<String>,
    pub prob: Vec<Vec<(Target, S)>>,
    pub reward: Vec<S>,
    pub sink: Option<usize>,
}

/// Normalises every row by its total weight `W(s)`, which becomes the
/// reward. Rows with `W(s) = 0` move to a fresh absorbing sink with reward 0.
pub fn normalize_to_reward_mc<S: Scalar>(p: &WeightedProduct<S>) -> RewardMc<S> {
    let n = p.num_states();
    let mut names: Vec<String> = (0..n).map(|s| p.state_name(s)).collect();
    let needs_sink = (0..n).any(|s| p.row(s).is_empty());
    let sink = needs_sink.then_some(n);
    let mut prob = Vec::with_capacity(n + 1);
    let mut reward = Vec::with_capacity(n + 1);
    for s in 0..n {
        let total = p.row_sum(s);
        if total.is_zero() {
            prob.push(vec![(Target::State(n), S::one())]);
            reward.push(S::zero());
        } else {
            prob.push(p.row(s).iter().map(|(t, w)| (*t, w.clone() / total.clone())).collect());
            reward.push(total);
        }
    }
    if let Some(k) = sink {
        let mut name = "SINK".to_string();
        while names.contains(&name) {
            name.push('_');
        }
        names.push(name);
        prob.push(vec![(Target::State(k), S::one())]);
        reward.push(S::zero());
    }
    RewardMc { names, prob, reward, sink }
}

/// `steps` rounds of `u(s) = R(s)·(P(s,✓) + Σ_t P(s,t)·u(t))` from `u = 0`:
/// expected product of rewards along paths reaching ✓ within `steps`.
pub fn expected_reward_iterate<S: Scalar>(m: &RewardMc<S>, init: usize, steps: usize) -> S {
    let n = m.names.len();
    let mut u = vec![S::zero(); n];
    for _ in 0..steps {
        u = (0..n)
            .map(|s| {
                let inner = m.prob[s].iter().fold(S::zero(), |acc, (t, pr)| match t {
                    Target::Check => acc + pr.clone(),
                    Target::State(j) => acc + pr.clone() * u[*j].clone(),
                });
                m.reward[s].clone() * inner
            })
            .collect();
    }
    u[init].clone()
}
