"""QASM 2.0 subset parser and emitter.

Supported statements: the `OPENQASM 2.0;` header and `include "qelib1.inc";`
(both tolerated and ignored), exactly one `qreg`, at most one `creg`, `//`
comments, and the gates x, sx, h, rz, rx, cx, ccx, swap, measure, barrier.
Two extensions keep emit->parse lossless for rebased circuits: `rzz(t) a,b`
(the ZZ interaction) and `u1q(t,p) a` (the trapped-ion single-qubit rotation).

Angles accept a small constant-expression grammar: numbers, `pi`, + - * /,
unary minus, and parentheses. The emitter serializes angles with repr(), which
round-trips doubles exactly.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import Gate, GateKind, QuantumCircuit
from .errors import QasmError, UnsupportedGateError

# gate name -> (kind, n_params)
_GATE_TABLE: dict[str, tuple[GateKind, int]] = {
    "x": (GateKind.X, 0),
    "sx": (GateKind.SX, 0),
    "h": (GateKind.H, 0),
    "rz": (GateKind.RZ, 1),
    "rx": (GateKind.RX, 1),
    "u1q": (GateKind.U1Q, 2),
    "cx": (GateKind.CX, 0),
    "rzz": (GateKind.ZZ, 1),
    "swap": (GateKind.SWAP, 0),
    "ccx": (GateKind.CCX, 0),
}

_KEYWORDS = {"OPENQASM", "include", "qreg", "creg", "measure", "barrier"}

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<comment>//[^\n]*)
  | (?P<number>(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_.]*)
  | (?P<string>"[^"\n]*")
  | (?P<arrow>->)
  | (?P<sym>[\[\](),;+\-*/])
""", re.VERBOSE)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise QasmError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        raw = m.group()
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, raw, line, col))
        newlines = raw.count("\n")
        if newlines:
            line += newlines
            col = len(raw) - raw.rfind("\n")
        else:
            col += len(raw)
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, toks: list[_Tok]):
        self.toks = toks
        self.i = 0

    def _err(self, msg: str):
        if self.i < len(self.toks):
            t = self.toks[self.i]
            raise QasmError(msg, t.line, t.col)
        last = self.toks[-1] if self.toks else _Tok("", "", 1, 1)
        raise QasmError(msg + " (at end of input)", last.line, last.col)

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> _Tok:
        if self.i >= len(self.toks):
            self._err("unexpected end of input")
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.next()
        if t.text != text:
            self.i -= 1
            self._err(f"expected {text!r}, got {t.text!r}")
        return t

    def expect_kind(self, kind: str) -> _Tok:
        t = self.next()
        if t.kind != kind:
            self.i -= 1
            self._err(f"expected {kind}, got {t.text!r}")
        return t

    # expression grammar: expr := term (("+"|"-") term)*
    #                     term := factor (("*"|"/") factor)*
    #                     factor := "-" factor | number | "pi" | "(" expr ")"
    def parse_expr(self) -> float:
        val = self.parse_term()
        while (t := self.peek()) is not None and t.text in "+-":
            self.next()
            rhs = self.parse_term()
            val = val + rhs if t.text == "+" else val - rhs
        return val

    def parse_term(self) -> float:
        val = self.parse_factor()
        while (t := self.peek()) is not None and t.text in "*/":
            self.next()
            rhs = self.parse_factor()
            if t.text == "*":
                val = val * rhs
            else:
                if rhs == 0:
                    self._err("division by zero in angle expression")
                val = val / rhs
        return val

    def parse_factor(self) -> float:
        t = self.next()
        if t.text == "-":
            return -self.parse_factor()
        if t.kind == "number":
            return float(t.text)
        if t.text == "pi":
            import math
            return math.pi
        if t.text == "(":
            val = self.parse_expr()
            self.expect(")")
            return val
        self.i -= 1
        self._err(f"expected number, 'pi' or '(', got {t.text!r}")


def _indexed_ref(p: _Parser, reg_name: str, reg_size: int, what: str) -> int:
    t = p.expect_kind("ident")
    if t.text != reg_name:
        raise QasmError(f"unknown {what} register {t.text!r}", t.line, t.col)
    p.expect("[")
    it = p.expect_kind("number")
    p.expect("]")
    idx = int(float(it.text))
    if not 0 <= idx < reg_size:
        raise QasmError(
            f"{what} index {idx} out of range for {reg_name}[{reg_size}]",
            it.line, it.col)
    return idx


def parse_qasm(text: str, name: str = "circuit") -> QuantumCircuit:
    """Parse the QASM subset into a QuantumCircuit.

    Raises QasmError with line/column on malformed input and
    UnsupportedGateError for gates outside the subset.
    """
    p = _Parser(_tokenize(text))
    qreg: tuple[str, int] | None = None
    creg: tuple[str, int] | None = None
    gates: list[Gate] = []

    def qubit() -> int:
        if qreg is None:
            p._err("quantum register used before qreg declaration")
        return _indexed_ref(p, qreg[0], qreg[1], "qubit")

    while (tok := p.peek()) is not None:
        if tok.text == "OPENQASM":
            p.next()
            p.expect_kind("number")
            p.expect(";")
        elif tok.text == "include":
            p.next()
            p.expect_kind("string")
            p.expect(";")
        elif tok.text in ("qreg", "creg"):
            p.next()
            nt = p.expect_kind("ident")
            p.expect("[")
            st = p.expect_kind("number")
            p.expect("]")
            p.expect(";")
            size = int(float(st.text))
            if size < 1:
                raise QasmError(f"register size must be >= 1, got {size}",
                                st.line, st.col)
            if tok.text == "qreg":
                if qreg is not None:
                    raise QasmError("exactly one qreg is supported",
                                    tok.line, tok.col)
                qreg = (nt.text, size)
            else:
                if creg is not None:
                    raise QasmError("at most one creg is supported",
                                    tok.line, tok.col)
                creg = (nt.text, size)
        elif tok.text == "measure":
            p.next()
            q = qubit()
            p.expect_kind("arrow")
            if creg is None:
                p._err("measure used without a creg declaration")
            c = _indexed_ref(p, creg[0], creg[1], "cbit")
            p.expect(";")
            gates.append(Gate(GateKind.MEASURE, (q,), cbit=c))
        elif tok.text == "barrier":
            p.next()
            nt = p.peek()
            # bare register name means all qubits
            if (nt is not None and nt.kind == "ident" and qreg is not None
                    and nt.text == qreg[0]
                    and (p.i + 1 >= len(p.toks) or p.toks[p.i + 1].text != "[")):
                p.next()
                qs = tuple(range(qreg[1]))
            else:
                qs = (qubit(),)
                while p.peek() is not None and p.peek().text == ",":
                    p.next()
                    qs += (qubit(),)
            p.expect(";")
            gates.append(Gate(GateKind.BARRIER, qs))
        elif tok.kind == "ident":
            p.next()
            if tok.text not in _GATE_TABLE:
                raise UnsupportedGateError(tok.text, tok.line, tok.col)
            kind, n_params = _GATE_TABLE[tok.text]
            params: tuple[float, ...] = ()
            if n_params:
                p.expect("(")
                params = (p.parse_expr(),)
                for _ in range(n_params - 1):
                    p.expect(",")
                    params += (p.parse_expr(),)
                p.expect(")")
            qs = (qubit(),)
            arity = {GateKind.CX: 2, GateKind.ZZ: 2, GateKind.SWAP: 2,
                     GateKind.CCX: 3}.get(kind, 1)
            for _ in range(arity - 1):
                p.expect(",")
                qs += (qubit(),)
            p.expect(";")
            try:
                gates.append(Gate(kind, qs, params))
            except ValueError as exc:
                raise QasmError(str(exc), tok.line, tok.col) from exc
        else:
            p._err(f"unexpected token {tok.text!r}")

    if qreg is None:
        raise QasmError("missing qreg declaration", 1, 1)
    circuit = QuantumCircuit(qreg[1], creg[1] if creg else 0, name=name)
    for g in gates:
        try:
            circuit.append(g)
        except ValueError as exc:
            raise QasmError(str(exc), 1, 1) from exc
    return circuit


_EMIT_NAME = {v[0]: k for k, v in _GATE_TABLE.items()}


def emit_qasm(circuit: QuantumCircuit) -> str:
    """Serialize a circuit; parse_qasm(emit_qasm(c)) == c gate-for-gate."""
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";',
             f"qreg q[{circuit.n_qubits}];"]
    if circuit.n_cbits:
        lines.append(f"creg c[{circuit.n_cbits}];")
    for g in circuit.gates:
        if g.kind is GateKind.MEASURE:
            lines.append(f"measure q[{g.qubits[0]}] -> c[{g.cbit}];")
        elif g.kind is GateKind.BARRIER:
            args = ",".join(f"q[{q}]" for q in g.qubits)
            lines.append(f"barrier {args};")
        else:
            nm = _EMIT_NAME[g.kind]
            par = f"({','.join(repr(p) for p in g.params)})" if g.params else ""
            args = ",".join(f"q[{q}]" for q in g.qubits)
            lines.append(f"{nm}{par} {args};")
    return "\n".join(lines) + "\n"
