//! The functor `F_A` on the finite sets `⟨n⟩ = {0, …, n−1}`.

use super::CommMonoid;

/// An element of `F_A(⟨n⟩)`: a total map `⟨n⟩ → A`, stored by position.
pub type FaElement<E> = Vec<E>;

/// `F_A(g)(f)(y) = Σ_{g(x) = y} f(x)` for `g: ⟨f.len()⟩ → ⟨codomain⟩`.
pub fn fa_apply<M: CommMonoid>(m: &M, g: &[usize], codomain: usize, f: &[M::Elem]) -> FaElement<M::Elem> {
    assert_eq!(g.len(), f.len(), "map and element must share a domain");
    let mut out = vec![m.zero(); codomain];
    for (x, v) in f.iter().enumerate() {
        let y = g[x];
        out[y] = m.add(&out[y], v);
    }
    out
}

/// Every function `⟨from⟩ → ⟨to⟩`, as image vectors in lexicographic order.
pub fn all_maps(from: usize, to: usize) -> Vec<Vec<usize>> {
    all_tuples(&(0..to).collect::<Vec<_>>(), from)
}

/// Every tuple of length `len` over `values`, lexicographic in positions.
pub fn all_tuples<E: Clone>(values: &[E], len: usize) -> Vec<Vec<E>> {
    let mut out: Vec<Vec<E>> = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out
}
