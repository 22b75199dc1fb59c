"""Circuit data model: gates, circuits, gate statistics, and circuit families.

Bitstring convention used throughout the package: classical bit 0 is the
LEFTMOST character of every result string (histograms, distributions, report
rows). Angles are radians.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum


class GateKind(Enum):
    X = "x"
    SX = "sx"
    H = "h"
    RZ = "rz"
    RX = "rx"
    U1Q = "u1q"
    CX = "cx"
    ZZ = "zz"
    CCX = "ccx"
    SWAP = "swap"
    MEASURE = "measure"
    BARRIER = "barrier"


# arity None means variadic (barrier accepts any number of qubits >= 1)
_ARITY: dict[GateKind, int | None] = {
    GateKind.X: 1, GateKind.SX: 1, GateKind.H: 1, GateKind.RZ: 1,
    GateKind.RX: 1, GateKind.U1Q: 1, GateKind.CX: 2, GateKind.ZZ: 2,
    GateKind.CCX: 3, GateKind.SWAP: 2, GateKind.MEASURE: 1,
    GateKind.BARRIER: None,
}

_N_PARAMS: dict[GateKind, int] = {
    GateKind.RZ: 1, GateKind.RX: 1, GateKind.U1Q: 2, GateKind.ZZ: 1,
}


@dataclass(frozen=True)
class Gate:
    """One operation on an ordered tuple of qubit indices.

    Rotation parameters are radians; MEASURE carries the classical bit it
    writes to in `cbit`.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()
    cbit: int | None = None

    def __post_init__(self):
        arity = _ARITY[self.kind]
        if arity is None:
            if len(self.qubits) < 1:
                raise ValueError("barrier needs at least one qubit")
        elif len(self.qubits) != arity:
            raise ValueError(
                f"{self.kind.value} expects {arity} qubit(s), got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind.value} qubits must be distinct: {self.qubits}")
        n_params = _N_PARAMS.get(self.kind, 0)
        if len(self.params) != n_params:
            raise ValueError(
                f"{self.kind.value} expects {n_params} parameter(s), got {len(self.params)}")
        for p in self.params:
            if not math.isfinite(p):
                raise ValueError(f"{self.kind.value} angle must be finite, got {p}")
        if (self.cbit is not None) != (self.kind is GateKind.MEASURE):
            raise ValueError("cbit is set exactly for measure gates")
        if self.kind is GateKind.MEASURE and self.cbit < 0:
            raise ValueError("cbit must be non-negative")

    @property
    def arity(self) -> int:
        return len(self.qubits)

    @property
    def is_unitary(self) -> bool:
        return self.kind not in (GateKind.MEASURE, GateKind.BARRIER)


class QuantumCircuit:
    """Ordered gate list over `n_qubits` qubits and `n_cbits` classical bits."""

    def __init__(self, n_qubits: int, n_cbits: int = 0, name: str = "circuit",
                 gates: list[Gate] | None = None):
        if n_qubits < 0 or n_cbits < 0:
            raise ValueError("register sizes must be non-negative")
        self.n_qubits = n_qubits
        self.n_cbits = n_cbits
        self.name = name
        self.gates: list[Gate] = []
        for g in gates or []:
            self.append(g)

    def append(self, gate: Gate) -> "QuantumCircuit":
        for q in gate.qubits:
            if not 0 <= q < self.n_qubits:
                raise ValueError(
                    f"qubit {q} out of range for {self.n_qubits}-qubit circuit")
        if gate.kind is GateKind.MEASURE:
            if not 0 <= gate.cbit < self.n_cbits:
                raise ValueError(
                    f"cbit {gate.cbit} out of range for {self.n_cbits} classical bits")
            if any(g.kind is GateKind.MEASURE and g.cbit == gate.cbit for g in self.gates):
                raise ValueError(f"cbit {gate.cbit} measured more than once")
        self.gates.append(gate)
        return self

    # -- builder helpers ------------------------------------------------
    def x(self, q): return self.append(Gate(GateKind.X, (q,)))
    def sx(self, q): return self.append(Gate(GateKind.SX, (q,)))
    def h(self, q): return self.append(Gate(GateKind.H, (q,)))
    def rz(self, q, theta): return self.append(Gate(GateKind.RZ, (q,), (float(theta),)))
    def rx(self, q, theta): return self.append(Gate(GateKind.RX, (q,), (float(theta),)))

    def u1q(self, q, theta, phi):
        return self.append(Gate(GateKind.U1Q, (q,), (float(theta), float(phi))))

    def cx(self, c, t): return self.append(Gate(GateKind.CX, (c, t)))
    def zz(self, a, b, theta): return self.append(Gate(GateKind.ZZ, (a, b), (float(theta),)))
    def ccx(self, a, b, t): return self.append(Gate(GateKind.CCX, (a, b, t)))
    def swap(self, a, b): return self.append(Gate(GateKind.SWAP, (a, b)))
    def measure(self, q, c): return self.append(Gate(GateKind.MEASURE, (q,), cbit=c))
    def barrier(self, *qubits): return self.append(Gate(GateKind.BARRIER, tuple(qubits)))

    # -- views ----------------------------------------------------------
    @property
    def measurements(self) -> list[tuple[int, int]]:
        """(qubit, cbit) pairs in gate order."""
        return [(g.qubits[0], g.cbit) for g in self.gates if g.kind is GateKind.MEASURE]

    def unitary_gates(self) -> list[Gate]:
        return [g for g in self.gates if g.is_unitary]

    def active_qubits(self) -> set[int]:
        """Qubits referenced by any gate or measurement."""
        return {q for g in self.gates for q in g.qubits}

    def without_measurements(self) -> "QuantumCircuit":
        kept = [g for g in self.gates
                if g.kind not in (GateKind.MEASURE, GateKind.BARRIER)]
        return QuantumCircuit(self.n_qubits, 0, self.name, kept)

    def copy(self, name: str | None = None) -> "QuantumCircuit":
        return QuantumCircuit(self.n_qubits, self.n_cbits,
                              name if name is not None else self.name, list(self.gates))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuantumCircuit):
            return NotImplemented
        return (self.n_qubits == other.n_qubits and self.n_cbits == other.n_cbits
                and self.gates == other.gates)

    def __len__(self) -> int:
        return len(self.gates)

    def __repr__(self) -> str:
        return (f"QuantumCircuit(name={self.name!r}, n_qubits={self.n_qubits}, "
                f"n_cbits={self.n_cbits}, gates={len(self.gates)})")


@dataclass(frozen=True)
class CircuitStats:
    n_qubits: int
    total_gates: int
    cx_count: int
    depth: int
    interaction_graph: frozenset[tuple[int, int]] = field(default_factory=frozenset)


def circuit_stats(circuit: QuantumCircuit) -> CircuitStats:
    """Counts over the gate list as given (pre-transpilation).

    `cx_count` counts two-qubit entangling gates (CX/ZZ/SWAP); depth is greedy
    ASAP layering with unit-time gates, barriers synchronize at zero width.
    """
    ready = [0] * circuit.n_qubits
    depth = 0
    edges: set[tuple[int, int]] = set()
    cx_count = 0
    for g in circuit.gates:
        if g.kind is GateKind.BARRIER:
            t = max((ready[q] for q in g.qubits), default=0)
            for q in g.qubits:
                ready[q] = t
            continue
        if g.is_unitary and g.arity == 2:
            cx_count += 1
            a, b = g.qubits
            edges.add((min(a, b), max(a, b)))
        t = max((ready[q] for q in g.qubits), default=0) + 1
        for q in g.qubits:
            ready[q] = t
        depth = max(depth, t)
    return CircuitStats(
        n_qubits=circuit.n_qubits,
        total_gates=len(circuit.gates),
        cx_count=cx_count,
        depth=depth,
        interaction_graph=frozenset(edges),
    )


def generate_bv(hidden: str) -> QuantumCircuit:
    """Bernstein-Vazirani circuit for a hidden bitstring.

    Data qubits 0..n-1 (hidden[i] on qubit i), ancilla qubit n. The data
    register is measured into cbits 0..n-1; the ideal outcome equals `hidden`.
    """
    if not hidden:
        raise ValueError("hidden string must be non-empty")
    if any(ch not in "01" for ch in hidden):
        raise ValueError(f"hidden string must be binary, got {hidden!r}")
    n = len(hidden)
    c = QuantumCircuit(n + 1, n, name=f"bv{n}")
    c.x(n)
    for q in range(n + 1):
        c.h(q)
    for i, ch in enumerate(hidden):
        if ch == "1":
            c.cx(i, n)
    for q in range(n + 1):
        c.h(q)
    for i in range(n):
        c.measure(i, i)
    return c
