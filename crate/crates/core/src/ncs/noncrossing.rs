use crate::marked_group::SetPartition;

/// Stack test: scanning `1..=m`, each block must be on top of the stack of
/// open blocks whenever it reappears.
pub fn is_noncrossing(p: &SetPartition) -> bool {
    let labels = p.block_labels();
    let mut last = vec![0; p.blocks().len()];
    for (i, &b) in labels.iter().enumerate() {
        last[b] = i;
    }
    let mut open = vec![false; last.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &b) in labels.iter().enumerate() {
        if open[b] {
            if stack.last() != Some(&b) {
                return false;
            }
        } else {
            open[b] = true;
            stack.push(b);
        }
        if i == last[b] {
            stack.pop();
        }
    }
    true
}

/// Quadruple test `a < b < c < d` with `a, c` and `b, d` in distinct blocks.
pub fn is_noncrossing_brute(p: &SetPartition) -> bool {
    let labels = p.block_labels();
    let m = labels.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if labels[a] != labels[c] || labels[a] == labels[b] {
                    continue;
                }
                for d in c + 1..m {
                    if labels[b] == labels[d] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agrees_with_quadruple_test() {
        for m in 0..=7 {
            let all = SetPartition::all(m);
            let nc = all.iter().filter(|p| is_noncrossing(p)).count();
            for p in &all {
                assert_eq!(is_noncrossing(p), is_noncrossing_brute(p), "{p}");
            }
            // Catalan numbers, from the recurrence.
            let mut cat = vec![1usize];
            for n in 1..=m {
                cat.push((0..n).map(|i| cat[i] * cat[n - 1 - i]).sum());
            }
            assert_eq!(nc, cat[m]);
        }
    }

    #[test]
    fn small_cases() {
        let p = SetPartition::from_nontrivial(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(!is_noncrossing(&p));
        let q = SetPartition::from_nontrivial(4, vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert!(is_noncrossing(&q));
    }
}
