//! Exhaustive enumeration of labeled graphs on few vertices.
//!
//! Edge slots are ordered lexicographically: (0,1), (0,2), ..., (1,2), ...
//! and an edge mask sets bit i for slot i. Enumeration by ascending edge
//! count walks each popcount class in ascending mask order (Gosper), so
//! every sweep is deterministic.

use crate::graph::Graph;

/// Edge slots of an n-vertex graph in lexicographic order.
pub fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            slots.push((u, v));
        }
    }
    slots
}

pub fn graph_from_edge_mask(n: usize, slots: &[(usize, usize)], mask: u128) -> Graph {
    let edges: Vec<(usize, usize)> = slots
        .iter()
        .enumerate()
        .filter(|(i, _)| (mask >> i) & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::new(n, &edges).expect("enumeration produces valid graphs")
}

/// All 2^C(n,2) labeled graphs on n vertices, in ascending mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let slots = edge_slots(n);
    let count = 1u128 << slots.len();
    (0..count).map(move |mask| graph_from_edge_mask(n, &slots, mask))
}

/// All labeled connected graphs on n vertices.
pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(|g| g.is_connected())
}

/// Edge masks in (popcount, value) order: all k-edge graphs before any
/// (k+1)-edge graph, each class ascending.
pub fn edge_masks_by_count(slot_count: usize) -> impl Iterator<Item = u128> {
    (0..=slot_count as u32).flat_map(move |k| k_subsets(slot_count, k))
}

/// All masks of `slot_count` bits with exactly k ones, ascending
/// (Gosper's hack).
fn k_subsets(slot_count: usize, k: u32) -> impl Iterator<Item = u128> {
    let limit = 1u128 << slot_count;
    let mut cur = if k == 0 { 0u128 } else { (1u128 << k) - 1 };
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        if cur >= limit {
            done = true;
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            if r >= limit || c == 0 {
                done = true;
            } else {
                cur = (((r ^ cur) >> 2) / c) | r;
            }
        }
        Some(out)
    })
}

/// Nonempty proper sub-masks of `full`, ascending.
pub fn nonempty_submasks(full: u64) -> impl Iterator<Item = u64> {
    let mut sub = 0u64;
    let mut started = false;
    std::iter::from_fn(move || {
        if started && sub == 0 {
            return None;
        }
        started = true;
        sub = sub.wrapping_sub(full) & full;
        if sub == 0 {
            None
        } else {
            Some(sub)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        // labeled connected graphs: 1, 1, 4, 38 for n = 1..4
        assert_eq!(connected_graphs(1).count(), 1);
        assert_eq!(connected_graphs(2).count(), 1);
        assert_eq!(connected_graphs(3).count(), 4);
        assert_eq!(connected_graphs(4).count(), 38);
    }

    #[test]
    fn masks_by_count_is_a_permutation() {
        let masks: Vec<u128> = edge_masks_by_count(6).collect();
        assert_eq!(masks.len(), 64);
        let mut sorted = masks.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 64);
        // non-decreasing popcount
        assert!(masks.windows(2).all(|w| w[0].count_ones() <= w[1].count_ones()));
    }

    #[test]
    fn submask_enumeration() {
        let subs: Vec<u64> = nonempty_submasks(0b1010).collect();
        assert_eq!(subs, vec![0b0010, 0b1000, 0b1010]);
    }
}
