use crate::value::CVal;

/// `σ_ν(k) = Σ_{d | k} d^ν`.
pub fn sigma_complex(nu: CVal, k: u64) -> CVal {
    assert!(k >= 1, "divisor sum needs k >= 1");
    let mut acc = CVal::new(0.0, 0.0);
    let pow = |d: u64| (nu * (d as f64).ln()).exp();
    let mut d = 1u64;
    while d * d <= k {
        if k % d == 0 {
            acc += pow(d);
            let e = k / d;
            if e != d {
                acc += pow(e);
            }
        }
        d += 1;
    }
    acc
}
