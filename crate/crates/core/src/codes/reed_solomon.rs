use super::{Alphabet, Code, CodeError, Structure};
use std::collections::BTreeSet;

/// Evaluation code of all polynomials of degree `< k` at `points`.
///
/// The generator matrix has rows `(x_1^j, …, x_n^j)` for `j = 0..k`.
pub fn reed_solomon(q: usize, n: usize, k: usize, points: &[u8]) -> Result<Code, CodeError> {
    let alphabet = Alphabet::field(q)?;
    let field = alphabet.field_structure().expect("field alphabet");
    if !(1 <= k && k <= n && n <= q) {
        return Err(CodeError::InvalidReedSolomon(format!(
            "need 1 <= k <= n <= q, got q={q} n={n} k={k}"
        )));
    }
    if points.len() != n {
        return Err(CodeError::InvalidReedSolomon(format!(
            "expected {n} evaluation points, got {}",
            points.len()
        )));
    }
    if let Some(&p) = points.iter().find(|&&p| p as usize >= q) {
        return Err(CodeError::InvalidReedSolomon(format!("point {p} is not in F_{q}")));
    }
    if points.iter().collect::<BTreeSet<_>>().len() != n {
        return Err(CodeError::InvalidReedSolomon("evaluation points must be distinct".into()));
    }

    let generator: Vec<Vec<u8>> = (0..k)
        .map(|j| points.iter().map(|&x| field.pow(x, j)).collect())
        .collect();
    let total = q.pow(k as u32);
    let mut words = Vec::with_capacity(total);
    let mut coeffs = vec![0u8; k];
    for _ in 0..total {
        // Horner evaluation at each point.
        let word = points
            .iter()
            .map(|&x| coeffs.iter().rev().fold(0u8, |acc, &c| field.add(field.mul(acc, x), c)))
            .collect();
        words.push(word);
        for c in coeffs.iter_mut() {
            *c += 1;
            if (*c as usize) < q {
                break;
            }
            *c = 0;
        }
    }
    let code = Code::new(alphabet, n, words)?;
    Ok(code.with_structure(Structure::ReedSolomon { k, points: points.to_vec(), generator }))
}

/// The first `n` field elements `0, 1, …, n−1` as evaluation points.
pub fn default_points(n: usize) -> Vec<u8> {
    (0..n as u8).collect()
}
