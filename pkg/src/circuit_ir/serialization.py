"""
Circuit JSON v1.

    {"version": 1, "num_qubits": N, "label": "...", "gates": [
        {"name": "h", "qubits": [0]},
        {"name": "rz", "qubits": [1], "params": [0.25]},
        {"name": "fanout", "qubits": [0, 1, 2, 3]},
        {"name": "mcx_fanout", "qubits": [0, 1], "polarities": [1, 0], "targets": [2, 4]},
        {"name": "u", "qubits": [2], "matrix": [[re, im], [re, im], [re, im], [re, im]]}
    ]}

A scheduled circuit uses the same header with "moments": [[gate, ...], ...]
in place of "gates".
"""
import json
from typing import Any

from src.circuit_ir.circuit import Circuit, Gate, GateKind, arity_problem
from src.schedule.moments import Moment, ScheduledCircuit, flatten

FORMAT_VERSION = 1
_KINDS = {kind.value: kind for kind in GateKind}


class CircuitFormatError(ValueError):
    """Malformed circuit document. `line`/`column` are set for JSON syntax errors."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")


# ── Encoding ───────────────────────────────────────────────────────────────

def gate_to_dict(gate: Gate) -> dict[str, Any]:
    d: dict[str, Any] = {"name": gate.kind.value}
    if gate.kind == GateKind.MCX_FANOUT:
        d["qubits"] = list(gate.controls)
        d["polarities"] = list(gate.polarities)
        d["targets"] = list(gate.targets)
    else:
        d["qubits"] = list(gate.qubits)
    if gate.params:
        d["params"] = [float(v) for v in gate.params]
    if gate.matrix is not None:
        d["matrix"] = [[v.real, v.imag] for row in gate.matrix for v in row]
    return d


def _header(num_qubits: int, label: str) -> dict[str, Any]:
    return {"version": FORMAT_VERSION, "num_qubits": num_qubits, "label": label}


def to_json(circuit: Circuit) -> str:
    doc = _header(circuit.num_qubits, circuit.label)
    doc["gates"] = [gate_to_dict(g) for g in circuit.gates]
    return json.dumps(doc, indent=1)


def schedule_to_json(s: ScheduledCircuit) -> str:
    doc = _header(s.num_qubits, s.label)
    doc["moments"] = [[gate_to_dict(g) for g in m.gates] for m in s.moments]
    return json.dumps(doc, indent=1)


# ── Decoding ───────────────────────────────────────────────────────────────

def _int_list(value: Any, what: str, where: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise CircuitFormatError(f"{where}: '{what}' must be a list of integers")
    return tuple(value)


def gate_from_dict(d: Any, where: str = "gate") -> Gate:
    if not isinstance(d, dict):
        raise CircuitFormatError(f"{where}: expected an object")
    name = d.get("name")
    if name not in _KINDS:
        raise CircuitFormatError(f"{where}: unknown gate name {name!r}. Choose from {list(_KINDS)}")
    kind = _KINDS[name]
    qubits = _int_list(d.get("qubits"), "qubits", where)

    polarities: tuple[int, ...] = ()
    if kind == GateKind.MCX_FANOUT:
        polarities = _int_list(d.get("polarities", []), "polarities", where)
        if len(polarities) != len(qubits):
            raise CircuitFormatError(f"{where}: arity mismatch, {len(qubits)} controls but {len(polarities)} polarities")
        qubits = qubits + _int_list(d.get("targets", []), "targets", where)

    params = d.get("params", [])
    if not isinstance(params, list) or not all(isinstance(v, (int, float)) for v in params):
        raise CircuitFormatError(f"{where}: 'params' must be a list of numbers")

    matrix = None
    if kind == GateKind.U:
        raw = d.get("matrix")
        if not isinstance(raw, list) or len(raw) != 4 or not all(
            isinstance(e, list) and len(e) == 2 for e in raw
        ):
            raise CircuitFormatError(f"{where}: 'matrix' must hold four [re, im] pairs")
        entries = [complex(float(re), float(im)) for re, im in raw]
        matrix = ((entries[0], entries[1]), (entries[2], entries[3]))

    gate = Gate(kind, qubits, tuple(float(v) for v in params), polarities, matrix)
    problem = arity_problem(gate)
    if problem:
        raise CircuitFormatError(f"{where}: arity mismatch, {problem}")
    return gate


def _load(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CircuitFormatError(f"Invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(doc, dict):
        raise CircuitFormatError("Top-level value must be an object")
    if doc.get("version") != FORMAT_VERSION:
        raise CircuitFormatError(f"Unsupported version {doc.get('version')!r}, expected {FORMAT_VERSION}")
    n = doc.get("num_qubits")
    if not isinstance(n, int) or isinstance(n, bool):
        raise CircuitFormatError("'num_qubits' must be an integer")
    return doc


def from_json(text: str) -> Circuit:
    doc = _load(text)
    raw = doc.get("gates")
    if not isinstance(raw, list):
        raise CircuitFormatError("'gates' must be a list")
    gates = tuple(gate_from_dict(g, f"gate {i}") for i, g in enumerate(raw))
    return Circuit(doc["num_qubits"], gates, str(doc.get("label", "")))


def schedule_from_json(text: str) -> ScheduledCircuit:
    doc = _load(text)
    raw = doc.get("moments")
    if not isinstance(raw, list) or not all(isinstance(m, list) for m in raw):
        raise CircuitFormatError("'moments' must be a list of gate lists")
    moments = tuple(
        Moment(tuple(gate_from_dict(g, f"moment {i} gate {j}") for j, g in enumerate(m)))
        for i, m in enumerate(raw)
    )
    return ScheduledCircuit(doc["num_qubits"], moments, str(doc.get("label", "")))


def load_circuit(text: str) -> Circuit:
    """Read either a plain or a scheduled document as a flat Circuit."""
    doc = _load(text)
    if "moments" in doc:
        return flatten(schedule_from_json(text))
    return from_json(text)
