//! Permutations as image arrays over `0..degree`.

pub fn identity(degree: usize) -> Vec<u32> {
    (0..degree as u32).collect()
}

pub fn is_permutation(images: &[usize], degree: usize) -> bool {
    if images.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in images {
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Left-to-right composition: apply `a`, then `b`.
pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// Disjoint-cycle notation with 1-based points, e.g. `(1,2)(3,4)`; the
/// identity is `()`.
pub fn cycle_label(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x] as usize;
        }
        let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(cycle_label(&[0, 1, 2]), "()");
        assert_eq!(cycle_label(&[1, 0, 3, 2]), "(1,2)(3,4)");
        assert_eq!(cycle_label(&[1, 2, 3, 0]), "(1,2,3,4)");
    }

    #[test]
    fn composition_order() {
        let a = [1, 0, 2];
        let b = [0, 2, 1];
        // 0 -a-> 1 -b-> 2
        assert_eq!(compose(&a, &b), vec![2, 0, 1]);
        assert!(is_permutation(&[2, 0, 1], 3));
        assert!(!is_permutation(&[2, 2, 1], 3));
        assert!(!is_permutation(&[0, 1], 3));
    }
}
