use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::net::Stop;
use crate::sim::Register;

/// How the Hamming-weight counter is laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CounterMode {
    /// `n` counting qubits prepared with a QFT block; only the low
    /// `ceil(log2(n+1))` are ever altered.
    Full,
    /// Exactly `ceil(log2(n+1))` counting qubits prepared with Hadamards.
    Compact,
}

/// Where validity ends up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValidityForm {
    /// One trip, validity read straight from `v_1` (no `v_T`).
    SinglePath,
    /// Per-trip `v_q` combined into `v_T`, then uncomputed.
    Network,
}

impl ValidityForm {
    /// The smaller form that still covers `trips` trips.
    pub fn for_trips(trips: usize) -> Self {
        if trips == 1 {
            Self::SinglePath
        } else {
            Self::Network
        }
    }
}

/// Smallest `t` with `2^t >= x`.
pub fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Qubits for network validity checking: `(|Q|+1)(n+2) + 1`.
pub fn validity_qubit_count(n: usize, trips: usize) -> usize {
    (trips + 1) * (n + 2) + 1
}

/// Qubits for one full Grover iteration:
/// `|Q|(n+2) + n + max(2 ceil(log2(n+1)), n+1) + 4`.
pub fn grover_qubit_count(n: usize, trips: usize) -> usize {
    let t = ceil_log2(n + 1);
    trips * (n + 2) + n + (2 * t).max(n + 1) + 4
}

/// Qubit allocation for the explicit circuits.
///
/// Order: `S_O`, `S_1..S_n`, `S_D`, then per trip `n+1` ancillas and `v_q`,
/// then `v_T` (network form), then the counting register, comparator result,
/// spare comparator carries, and finally the `|->` phase qubit.
///
/// In full counter mode the comparator borrows the idle high counting qubits
/// as carries, so only `max(0, 2t - n - 1)` spare carries are allocated; the
/// counting, comparator and carry area is then exactly `max(2t, n+1)` qubits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegisterLayout {
    pub n: usize,
    pub trips: usize,
    pub form: ValidityForm,
    pub counter: Option<CounterMode>,
    pub num_qubits: usize,
    pub origin: usize,
    pub stations: Range<usize>,
    pub destination: usize,
    pub trip_ancillas: Vec<Range<usize>>,
    pub trip_validity: Vec<usize>,
    pub total_validity: Option<usize>,
    pub counting: Range<usize>,
    pub comparator_result: Option<usize>,
    pub spare_carries: Range<usize>,
    pub phase: Option<usize>,
}

impl RegisterLayout {
    /// Layout for validity checking only.
    pub fn validity(n: usize, trips: usize, form: ValidityForm) -> Result<Self> {
        Self::build(n, trips, form, None)
    }

    /// Layout for the full Grover iteration (validity, counter, comparator,
    /// phase qubit).
    pub fn search(n: usize, trips: usize, form: ValidityForm, counter: CounterMode) -> Result<Self> {
        Self::build(n, trips, form, Some(counter))
    }

    fn build(n: usize, trips: usize, form: ValidityForm, counter: Option<CounterMode>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Config("layout needs at least one station variable".into()));
        }
        if trips == 0 {
            return Err(Error::Config("layout needs at least one trip".into()));
        }
        if form == ValidityForm::SinglePath && trips != 1 {
            return Err(Error::Config(format!(
                "single-path form takes exactly one trip, got {trips}"
            )));
        }

        let mut next = 0usize;
        let mut take = |w: usize| {
            let r = next..next + w;
            next += w;
            r
        };

        let origin = take(1).start;
        let stations = take(n);
        let destination = take(1).start;
        let mut trip_ancillas = Vec::with_capacity(trips);
        let mut trip_validity = Vec::with_capacity(trips);
        for _ in 0..trips {
            trip_ancillas.push(take(n + 1));
            trip_validity.push(take(1).start);
        }
        let total_validity = (form == ValidityForm::Network).then(|| take(1).start);

        let t = ceil_log2(n + 1);
        let (counting, comparator_result, spare_carries, phase) = match counter {
            None => (take(0), None, take(0), None),
            Some(mode) => {
                let width = match mode {
                    CounterMode::Full => n,
                    CounterMode::Compact => t,
                };
                let counting = take(width);
                let result = take(1).start;
                let idle = width - t;
                let spare = take((t.saturating_sub(1)).saturating_sub(idle));
                let phase = take(1).start;
                (counting, Some(result), spare, Some(phase))
            }
        };

        Ok(Self {
            n,
            trips,
            form,
            counter,
            num_qubits: next,
            origin,
            stations,
            destination,
            trip_ancillas,
            trip_validity,
            total_validity,
            counting,
            comparator_result,
            spare_carries,
            phase,
        })
    }

    /// Width of the comparator input, `ceil(log2(n+1))`.
    pub fn count_width(&self) -> usize {
        ceil_log2(self.n + 1)
    }

    pub fn station_qubit(&self, stop: Stop) -> usize {
        match stop {
            Stop::Origin => self.origin,
            Stop::Node(i) => {
                assert!(i < self.n, "node {i} outside the station register");
                self.stations.start + i
            }
            Stop::Destination => self.destination,
        }
    }

    /// `S_1..S_n`, the qubits that are measured and diffused.
    pub fn station_qubits(&self) -> Vec<usize> {
        self.stations.clone().collect()
    }

    /// The qubit holding overall validity: `v_T`, or `v_1` in single-path form.
    pub fn validity_flag(&self) -> usize {
        self.total_validity.unwrap_or(self.trip_validity[0])
    }

    /// Low `t` counting qubits, least significant first.
    pub fn comparator_value(&self) -> Vec<usize> {
        self.counting.clone().take(self.count_width()).collect()
    }

    /// `t - 1` carry qubits: idle counting qubits first, then spares.
    pub fn comparator_carries(&self) -> Vec<usize> {
        let t = self.count_width();
        self.counting
            .clone()
            .skip(t)
            .chain(self.spare_carries.clone())
            .take(t.saturating_sub(1))
            .collect()
    }

    /// Every qubit that must read `|0>` between oracle applications.
    pub fn work_qubits(&self) -> Vec<usize> {
        let mut v: Vec<usize> = Vec::new();
        for (anc, &valid) in self.trip_ancillas.iter().zip(&self.trip_validity) {
            v.extend(anc.clone());
            v.push(valid);
        }
        v.extend(self.total_validity);
        v.extend(self.counting.clone());
        v.extend(self.comparator_result);
        v.extend(self.spare_carries.clone());
        v
    }

    pub fn registers(&self) -> Vec<Register> {
        let mut regs = vec![
            Register::new("S_O", self.origin, 1),
            Register::new("S", self.stations.start, self.n),
            Register::new("S_D", self.destination, 1),
        ];
        for (q, (anc, &valid)) in self.trip_ancillas.iter().zip(&self.trip_validity).enumerate() {
            regs.push(Register::new(format!("anc_{}", q + 1), anc.start, anc.len()));
            regs.push(Register::new(format!("v_{}", q + 1), valid, 1));
        }
        if let Some(v) = self.total_validity {
            regs.push(Register::new("v_T", v, 1));
        }
        if self.counter.is_some() {
            regs.push(Register::new("count", self.counting.start, self.counting.len()));
            regs.push(Register::new("cmp", self.comparator_result.unwrap(), 1));
            regs.push(Register::new("carry", self.spare_carries.start, self.spare_carries.len()));
            regs.push(Register::new("phase", self.phase.unwrap(), 1));
        }
        regs
    }
}
