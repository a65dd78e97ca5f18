use crate::error::{Error, Result};
use crate::sim::{Circuit, Gate};

/// Writes `value < tau` into `result`.
///
/// `value` is a `t`-qubit unsigned integer (least significant first). The
/// circuit ripples the carry of `value + (2^t - tau)` through `t - 1` carry
/// qubits into `result`, which then holds `value >= tau`; a final X gives the
/// strict comparison and the intermediate carries are uncomputed. `value` is
/// never modified.
pub fn build_comparator(
    num_qubits: usize,
    value: &[usize],
    result: usize,
    carries: &[usize],
    tau: u32,
) -> Result<Circuit> {
    let t = value.len();
    let full = 1u64 << t;
    if tau as u64 > full {
        return Err(Error::InvalidThreshold { tau, max: full });
    }
    if carries.len() + 1 < t {
        return Err(Error::RegisterTooNarrow {
            width: carries.len() + 1,
            needed: t,
        });
    }

    let mut c = Circuit::new(num_qubits);
    if tau == 0 {
        return Ok(c);
    }
    if tau as u64 == full {
        c.push(Gate::X(result))?;
        return Ok(c);
    }

    let addend = full - tau as u64;
    let target = |i: usize| if i + 1 == t { result } else { carries[i] };
    let mut stages: Vec<Vec<Gate>> = Vec::with_capacity(t);
    for i in 0..t {
        let bit = addend >> i & 1 == 1;
        let tgt = target(i);
        let stage = if i == 0 {
            if bit {
                vec![Gate::cx(value[0], tgt)]
            } else {
                vec![]
            }
        } else {
            let prev = target(i - 1);
            if bit {
                // a | b == !(!a & !b)
                vec![
                    Gate::X(value[i]),
                    Gate::X(prev),
                    Gate::ccx(value[i], prev, tgt),
                    Gate::X(value[i]),
                    Gate::X(prev),
                    Gate::X(tgt),
                ]
            } else {
                vec![Gate::ccx(value[i], prev, tgt)]
            }
        };
        stages.push(stage);
    }

    for stage in &stages {
        c.extend(stage.iter().cloned())?;
    }
    c.push(Gate::X(result))?;
    for stage in stages[..t - 1].iter().rev() {
        c.extend(stage.iter().rev().map(Gate::inverse))?;
    }
    Ok(c)
}
