//! Oracles shared by the integration tests.

use num_bigint::BigInt;

fn gcd(a: BigInt, b: BigInt) -> BigInt {
    let (mut a, mut b) = (a.magnitude().clone(), b.magnitude().clone());
    while b != 0u32.into() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a.into()
}

/// `d_k` = gcd of all `k × k` minors; invariant factors are `d_k / d_{k−1}`.
pub fn determinantal_invariants(m: &[Vec<i64>]) -> Vec<BigInt> {
    fn det(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> BigInt {
        if rows.is_empty() {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for (k, &c) in cols.iter().enumerate() {
            let v = m[rows[0]][c];
            if v == 0 {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = BigInt::from(v) * det(m, &rows[1..], &rest);
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
            .collect()
    }
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=r.min(c) {
        let mut g = BigInt::from(0);
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                g = gcd(g, det(m, &rows, &cols));
            }
        }
        if g == BigInt::from(0) {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

/// Compares the Smith form of `count` random matrices (up to 5 × 5) with the
/// determinantal-divisor oracle and checks the divisibility chain. Returns
/// the first mismatch.
pub fn snf_against_oracle(seed: u64, count: usize) -> Result<(), String> {
    use finspace::snf::{smith_normal_form, IntMatrix};
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let r = rng.gen_range(0..=5);
        let c = rng.gen_range(0..=5);
        let spread = rng.gen_range(1..=9);
        let m: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-spread..=spread)).collect())
            .collect();
        let mut mat = IntMatrix::zeros(r, c);
        for (i, row) in m.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                mat.set(i, j, v);
            }
        }
        let snf = smith_normal_form(&mat);
        if snf.diagonal != determinantal_invariants(&m) {
            return Err(format!("{m:?}: got {:?}", snf.diagonal));
        }
        if snf.diagonal.windows(2).any(|w| &w[1] % &w[0] != BigInt::from(0)) {
            return Err(format!("{m:?}: divisibility chain broken"));
        }
    }
    Ok(())
}
