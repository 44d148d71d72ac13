//! Real matrix exponential via scaling and squaring with diagonal Padé
//! approximants of degree 3, 5, 7, 9 or 13 (Higham 2005).

use nalgebra::DMatrix;

const PADE3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const PADE5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const PADE7: [f64; 8] = [17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0];
const PADE9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const PADE13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

// Largest 1-norm for which each degree meets double-precision backward error.
const THETA3: f64 = 1.495585217958292e-2;
const THETA5: f64 = 2.53939833006323e-1;
const THETA7: f64 = 9.504178996162932e-1;
const THETA9: f64 = 2.097847961257068;
const THETA13: f64 = 5.371920351148152;

fn one_norm(a: &DMatrix<f64>) -> f64 {
    a.column_iter().map(|c| c.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// `U` and `V` for the low-degree approximants, where `r = (V − U)⁻¹(V + U)`.
fn pade_low(a: &DMatrix<f64>, b: &[f64]) -> (DMatrix<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let a2 = a * a;
    let mut power = DMatrix::identity(n, n);
    let mut u = DMatrix::zeros(n, n);
    let mut v = DMatrix::zeros(n, n);
    for k in (0..b.len()).step_by(2) {
        if k > 0 {
            power = &power * &a2;
        }
        v += &power * b[k];
        u += &power * b[k + 1];
    }
    (a * u, v)
}

fn pade13(a: &DMatrix<f64>) -> (DMatrix<f64>, DMatrix<f64>) {
    let b = &PADE13;
    let n = a.nrows();
    let id = DMatrix::<f64>::identity(n, n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let inner_u = &a6 * b[13] + &a4 * b[11] + &a2 * b[9];
    let u = a * (&a6 * inner_u + &a6 * b[7] + &a4 * b[5] + &a2 * b[3] + &id * b[1]);
    let inner_v = &a6 * b[12] + &a4 * b[10] + &a2 * b[8];
    let v = &a6 * inner_v + &a6 * b[6] + &a4 * b[4] + &a2 * b[2] + &id * b[0];
    (u, v)
}

fn solve_pade(u: DMatrix<f64>, v: DMatrix<f64>) -> DMatrix<f64> {
    let p = &v + &u;
    let q = v - u;
    q.lu().solve(&p).expect("Padé denominator is nonsingular for norms below theta_13")
}

/// `exp(a)` for a square real matrix.
pub fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    assert_eq!(a.nrows(), a.ncols(), "expm needs a square matrix");
    let n = a.nrows();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    let norm = one_norm(a);
    for (theta, coeffs) in
        [(THETA3, &PADE3[..]), (THETA5, &PADE5[..]), (THETA7, &PADE7[..]), (THETA9, &PADE9[..])]
    {
        if norm <= theta {
            let (u, v) = pade_low(a, coeffs);
            return solve_pade(u, v);
        }
    }
    let s = if norm > THETA13 { (norm / THETA13).log2().ceil() as i32 } else { 0 };
    let scaled = a * 2f64.powi(-s);
    let (u, v) = pade13(&scaled);
    let mut r = solve_pade(u, v);
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_abs(a: &DMatrix<f64>) -> f64 {
        a.iter().map(|x| x.abs()).fold(0.0, f64::max)
    }

    #[test]
    fn zero_gives_identity() {
        assert_eq!(expm(&DMatrix::zeros(4, 4)), DMatrix::identity(4, 4));
    }

    #[test]
    fn diagonal_matches_scalar_exp() {
        for scale in [1e-3, 0.1, 0.5, 1.5, 4.0, 40.0] {
            let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![scale, -scale, 0.5 * scale]));
            let e = expm(&d);
            for k in 0..3 {
                let want = d[(k, k)].exp();
                assert!(((e[(k, k)] - want) / want).abs() < 1e-13, "scale {scale}");
            }
        }
    }

    #[test]
    fn rotation_generator_gives_rotation() {
        // exp(θ [[0,-1],[1,0]]) = [[cos θ, -sin θ], [sin θ, cos θ]]
        for theta in [0.001_f64, 0.2, 0.9, 2.0, 3.0, 17.5, 100.0] {
            let g = DMatrix::from_row_slice(2, 2, &[0.0, -theta, theta, 0.0]);
            let want = DMatrix::from_row_slice(2, 2, &[theta.cos(), -theta.sin(), theta.sin(), theta.cos()]);
            assert!(max_abs(&(expm(&g) - want)) < 1e-13 * theta.max(1.0), "theta {theta}");
        }
    }

    #[test]
    fn nilpotent_truncates_series() {
        // exp(N) = I + N + N²/2 for strictly upper triangular 3×3 N.
        let nmat = DMatrix::from_row_slice(3, 3, &[0.0, 2.0, 3.0, 0.0, 0.0, 5.0, 0.0, 0.0, 0.0]);
        let want = DMatrix::identity(3, 3) + &nmat + &nmat * &nmat * 0.5;
        assert!(max_abs(&(expm(&nmat) - want)) < 1e-13);
    }
}
