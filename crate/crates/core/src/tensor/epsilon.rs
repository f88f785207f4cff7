//! Permutation parity and the 7-index Levi-Civita symbol, fixed by
//! `epsilon_{1234567} = +1`.

/// Sign of the permutation sorting `indices`; 0 if any index repeats.
pub fn permutation_sign(indices: &[usize]) -> i64 {
    let n = indices.len();
    let mut sign = 1i64;
    for i in 0..n {
        for j in (i + 1)..n {
            if indices[i] == indices[j] {
                return 0;
            }
            if indices[i] > indices[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `epsilon_{i1 ... i7}` over imaginary indices `1..=7`.
pub fn epsilon7(indices: [usize; 7]) -> i64 {
    debug_assert!(indices.iter().all(|&i| (1..8).contains(&i)));
    permutation_sign(&indices)
}

/// All `N!` permutations of `0..N` with their signs, in lexicographic order.
pub fn signed_permutations<const N: usize>() -> Vec<([usize; N], i64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..N).collect();
    permute(&mut idx, 0, &mut out);
    out.sort();
    out
}

fn permute<const N: usize>(idx: &mut Vec<usize>, k: usize, out: &mut Vec<([usize; N], i64)>) {
    if k == N {
        let arr: [usize; N] = idx[..].try_into().unwrap();
        out.push((arr, permutation_sign(&arr)));
        return;
    }
    for i in k..N {
        idx.swap(k, i);
        permute(idx, k + 1, out);
        idx.swap(k, i);
    }
}
