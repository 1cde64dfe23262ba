use std::collections::HashSet;

/// Counts permutations of `0..ell` mapping the edge set (vertex bitmasks)
/// onto itself, by backtracking over vertex images.
pub fn count_automorphisms(ell: usize, edges: &[u32]) -> u64 {
    let set: HashSet<u32> = edges.iter().copied().collect();
    let degree: Vec<usize> = (0..ell)
        .map(|v| edges.iter().filter(|&&e| e >> v & 1 == 1).count())
        .collect();
    // Edges grouped by their largest vertex, so each edge is checked as
    // soon as all its vertices have images.
    let mut closing: Vec<Vec<u32>> = vec![Vec::new(); ell];
    for &e in edges {
        closing[31 - e.leading_zeros() as usize].push(e);
    }
    let mut image = vec![0u32; ell];
    let mut used = 0u32;
    let mut count = 0u64;
    extend(0, ell, &set, &degree, &closing, &mut image, &mut used, &mut count);
    count
}

#[allow(clippy::too_many_arguments)]
fn extend(
    v: usize,
    ell: usize,
    set: &HashSet<u32>,
    degree: &[usize],
    closing: &[Vec<u32>],
    image: &mut [u32],
    used: &mut u32,
    count: &mut u64,
) {
    if v == ell {
        *count += 1;
        return;
    }
    for w in 0..ell {
        if *used >> w & 1 == 1 || degree[w] != degree[v] {
            continue;
        }
        image[v] = w as u32;
        let ok = closing[v].iter().all(|&e| {
            let mapped = (0..=v)
                .filter(|&u| e >> u & 1 == 1)
                .fold(0u32, |m, u| m | 1 << image[u]);
            set.contains(&mapped)
        });
        if ok {
            *used |= 1 << w;
            extend(v + 1, ell, set, degree, closing, image, used, count);
            *used &= !(1 << w);
        }
    }
}
