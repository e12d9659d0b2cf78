//! Exhaustive rotation-system search. Exponential; used as an independent
//! oracle on small graphs and for projective feasibility of small parts.

use super::{trace_faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of candidates [`search_embedding`] would enumerate, saturating.
pub fn rotation_space_size(g: &Graph, orientable_only: bool) -> u128 {
    let mut total: u128 = 1;
    for v in 0..g.order() {
        total = total.saturating_mul(factorial(g.degree(v).saturating_sub(1)));
    }
    if !orientable_only {
        let (_, c) = g.components();
        let free = g.size() + c - g.order();
        total = total.saturating_mul(1u128.checked_shl(free as u32).unwrap_or(u128::MAX));
    }
    total
}

/// All cyclic orders of `items`, with the first item pinned in front.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<usize> = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut order = vec![items[0]];
        order.extend_from_slice(p);
        out.push(order);
    });
    out
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Searches every rotation system (and, unless `orientable_only`, every
/// sign assignment on the edges outside a spanning forest) for one whose
/// Euler genus is at most `max_euler_genus`. Returns the first hit in a
/// fixed enumeration order. Refuses when the space exceeds `budget`.
///
/// Fixing forest edges to `+1` loses nothing: switching a vertex (reversing
/// its rotation and negating its incident edges) preserves the embedding,
/// and the enumeration already contains every reversed rotation.
pub fn search_embedding(
    g: &Graph,
    max_euler_genus: usize,
    orientable_only: bool,
    budget: u128,
) -> Result<Option<RotationSystem>> {
    let space = rotation_space_size(g, orientable_only);
    if space > budget {
        return Err(Error::SearchLimit(format!(
            "{space} candidate rotation systems exceed the budget of {budget}"
        )));
    }
    let choices: Vec<Vec<Vec<usize>>> = (0..g.order())
        .map(|v| cyclic_orders(g.neighbors(v)))
        .collect();

    let mut in_forest = vec![false; g.size()];
    {
        let (mut seen, mut stack) = (vec![false; g.order()], Vec::new());
        for root in 0..g.order() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            while let Some(v) = stack.pop() {
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        in_forest[g.edge_index(v, w).unwrap()] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    let free: Vec<usize> = (0..g.size()).filter(|&e| !in_forest[e]).collect();
    let sign_patterns: u64 = if orientable_only { 1 } else { 1 << free.len() };

    let mut digits = vec![0usize; g.order()];
    loop {
        let orders: Vec<Vec<usize>> = digits
            .iter()
            .enumerate()
            .map(|(v, &d)| choices[v][d].clone())
            .collect();
        for mask in 0..sign_patterns {
            let mut rot = RotationSystem::orientable(g.clone(), &orders)?;
            for (bit, &e) in free.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    rot.signs[e] = -1;
                }
            }
            if trace_faces(&rot)?.euler_genus <= max_euler_genus {
                return Ok(Some(rot));
            }
        }
        // odometer
        let mut v = 0;
        loop {
            if v == digits.len() {
                return Ok(None);
            }
            digits[v] += 1;
            if digits[v] < choices[v].len() {
                break;
            }
            digits[v] = 0;
            v += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_family, Family};

    #[test]
    fn cyclic_order_counts() {
        assert_eq!(cyclic_orders(&[1, 2, 3, 4]).len(), 6);
        assert_eq!(cyclic_orders(&[5]).len(), 1);
        assert!(cyclic_orders(&[1, 2, 3]).iter().all(|o| o[0] == 1));
    }

    #[test]
    fn k5_needs_a_crosscap() {
        let k5 = named_family(Family::Complete(5)).unwrap();
        assert_eq!(search_embedding(&k5, 0, true, 1 << 20).unwrap(), None);
        let rot = search_embedding(&k5, 1, false, 1 << 20).unwrap().unwrap();
        let w = trace_faces(&rot).unwrap();
        assert_eq!(w.euler_genus, 1);
        // Euler: 5 - 10 + F = 1
        assert_eq!(w.faces.len(), 6);
    }

    #[test]
    fn k33_embeds_projectively_not_planarly() {
        let k33 = named_family(Family::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(search_embedding(&k33, 0, true, 1 << 20).unwrap(), None);
        let rot = search_embedding(&k33, 1, false, 1 << 20).unwrap().unwrap();
        assert_eq!(trace_faces(&rot).unwrap().euler_genus, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let k7 = named_family(Family::Complete(7)).unwrap();
        assert!(matches!(
            search_embedding(&k7, 0, true, 1000),
            Err(Error::SearchLimit(_))
        ));
    }
}
