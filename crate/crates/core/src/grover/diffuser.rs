use crate::sim::{Circuit, Gate};

/// Inversion about the mean on `register`.
///
/// H, X on every qubit, a multi-controlled Z (H-conjugated MCX on the last
/// qubit), then X, H again. The result is `I - 2|+><+|`, i.e. the textbook
/// `2|+><+| - I` times a global phase of -1.
pub fn build_diffuser(num_qubits: usize, register: &[usize]) -> Circuit {
    let mut c = Circuit::new(num_qubits);
    let Some((&last, rest)) = register.split_last() else {
        return c;
    };
    let layer = |c: &mut Circuit, g: fn(usize) -> Gate| {
        c.extend(register.iter().map(|&q| g(q))).unwrap();
    };
    layer(&mut c, Gate::H);
    layer(&mut c, Gate::X);
    c.push(Gate::H(last)).unwrap();
    c.push(Gate::mcx(rest, last)).unwrap();
    c.push(Gate::H(last)).unwrap();
    layer(&mut c, Gate::X);
    layer(&mut c, Gate::H);
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{circuit_unitary, Complex64, Unitary};

    #[test]
    fn inversion_about_the_mean() {
        for n in 1..=4 {
            let qubits: Vec<usize> = (0..n).collect();
            let u = circuit_unitary(&build_diffuser(n, &qubits)).unwrap();
            let dim = 1usize << n;
            let target = Unitary::from_fn(dim, |r, c| {
                let d = if r == c { 1.0 } else { 0.0 };
                Complex64::new(2.0 / dim as f64 - d, 0.0)
            });
            assert!(u.max_deviation_up_to_phase(&target) < 1e-10, "n={n}");
        }
    }
}
