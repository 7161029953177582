//! Partition refinement shared by the minimizers.

use std::collections::VecDeque;

/// Renumbers the states reachable from `initial` in breadth-first order,
/// symbols ascending. Returns `order` (new id -> old id) and `rank`
/// (old id -> new id, `u32::MAX` if unreachable).
pub(crate) fn bfs_order(n: usize, sigma: usize, trans: &[u32], initial: u32) -> (Vec<u32>, Vec<u32>) {
    let mut rank = vec![u32::MAX; n];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    rank[initial as usize] = 0;
    order.push(initial);
    queue.push_back(initial);
    while let Some(q) = queue.pop_front() {
        let row = &trans[q as usize * sigma..(q as usize + 1) * sigma];
        for &t in row {
            if rank[t as usize] == u32::MAX {
                rank[t as usize] = order.len() as u32;
                order.push(t);
                queue.push_back(t);
            }
        }
    }
    (order, rank)
}

/// Restricts a transition table to the given states (`order`), renumbering
/// targets through `rank`.
pub(crate) fn restrict(sigma: usize, trans: &[u32], order: &[u32], rank: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(order.len() * sigma);
    for &q in order {
        let row = &trans[q as usize * sigma..(q as usize + 1) * sigma];
        out.extend(row.iter().map(|&t| rank[t as usize]));
    }
    out
}

/// Hopcroft's algorithm: the coarsest partition refining `classes` that is
/// compatible with the transition table. Returns a block id per state.
pub(crate) fn hopcroft(n: usize, sigma: usize, trans: &[u32], classes: &[u32]) -> Vec<u32> {
    if n == 0 {
        return Vec::new();
    }
    // Predecessor lists grouped by target, each sorted by symbol.
    let mut pred_start = vec![0u32; n + 1];
    for &t in trans {
        pred_start[t as usize + 1] += 1;
    }
    for q in 0..n {
        pred_start[q + 1] += pred_start[q];
    }
    let mut fill = pred_start.clone();
    let mut preds = vec![0u64; trans.len()];
    for a in 0..sigma {
        for p in 0..n {
            let t = trans[p * sigma + a] as usize;
            preds[fill[t] as usize] = ((a as u64) << 32) | p as u64;
            fill[t] += 1;
        }
    }
    drop(fill);

    // Refinable partition.
    let mut elems: Vec<u32> = (0..n as u32).collect();
    elems.sort_by_key(|&q| (classes[q as usize], q));
    let mut loc = vec![0u32; n];
    let mut block = vec![0u32; n];
    let mut first = Vec::new();
    let mut end = Vec::new();
    for (i, &q) in elems.iter().enumerate() {
        loc[q as usize] = i as u32;
        if i == 0 || classes[q as usize] != classes[elems[i - 1] as usize] {
            if i > 0 {
                end.push(i as u32);
            }
            first.push(i as u32);
        }
        block[q as usize] = first.len() as u32 - 1;
    }
    end.push(n as u32);
    let mut mid = first.clone();

    let mut in_work = vec![false; first.len()];
    let mut work: Vec<u32> = Vec::new();
    let largest = (0..first.len())
        .max_by_key(|&b| (end[b] - first[b], std::cmp::Reverse(b)))
        .unwrap();
    for b in 0..first.len() {
        if b != largest {
            in_work[b] = true;
            work.push(b as u32);
        }
    }

    let mut gathered: Vec<u64> = Vec::new();
    let mut touched: Vec<u32> = Vec::new();
    while let Some(splitter) = work.pop() {
        let s = splitter as usize;
        in_work[s] = false;
        gathered.clear();
        for i in first[s]..end[s] {
            let q = elems[i as usize] as usize;
            gathered.extend_from_slice(&preds[pred_start[q] as usize..pred_start[q + 1] as usize]);
        }
        gathered.sort_unstable();
        let mut i = 0;
        while i < gathered.len() {
            let sym = gathered[i] >> 32;
            let mut j = i;
            while j < gathered.len() && gathered[j] >> 32 == sym {
                let p = (gathered[j] & 0xffff_ffff) as usize;
                let b = block[p] as usize;
                if mid[b] == first[b] {
                    touched.push(b as u32);
                }
                // Move p into the marked prefix of its block.
                let pos = loc[p] as usize;
                let target = mid[b] as usize;
                let other = elems[target];
                elems.swap(pos, target);
                loc[other as usize] = pos as u32;
                loc[p] = target as u32;
                mid[b] += 1;
                j += 1;
            }
            for &b in &touched {
                let b = b as usize;
                if mid[b] == end[b] {
                    mid[b] = first[b];
                    continue;
                }
                let nb = first.len();
                first.push(first[b]);
                end.push(mid[b]);
                mid.push(first[b]);
                first[b] = mid[b];
                mid[b] = first[b];
                for k in first[nb]..end[nb] {
                    block[elems[k as usize] as usize] = nb as u32;
                }
                in_work.push(false);
                if in_work[b] {
                    in_work[nb] = true;
                    work.push(nb as u32);
                } else {
                    let small = if end[nb] - first[nb] <= end[b] - first[b] { nb } else { b };
                    in_work[small] = true;
                    work.push(small as u32);
                }
            }
            touched.clear();
            i = j;
        }
    }
    block
}

/// Moore's algorithm: iterate signature refinement until the class count
/// stabilizes. Quadratic in the worst case; used for small automata.
pub(crate) fn moore(n: usize, sigma: usize, trans: &[u32], classes: &[u32]) -> Vec<u32> {
    use std::collections::HashMap;
    let mut current: Vec<u32> = {
        let mut ids = HashMap::new();
        classes
            .iter()
            .map(|c| {
                let next = ids.len() as u32;
                *ids.entry(*c).or_insert(next)
            })
            .collect()
    };
    let mut count = current.iter().copied().max().map_or(0, |m| m as usize + 1);
    loop {
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut next = Vec::with_capacity(n);
        for q in 0..n {
            let mut sig = Vec::with_capacity(sigma + 1);
            sig.push(current[q]);
            sig.extend(trans[q * sigma..(q + 1) * sigma].iter().map(|&t| current[t as usize]));
            let fresh = ids.len() as u32;
            next.push(*ids.entry(sig).or_insert(fresh));
        }
        let new_count = ids.len();
        current = next;
        if new_count == count {
            return current;
        }
        count = new_count;
    }
}
