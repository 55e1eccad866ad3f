"""JSON report objects emitted by the command line tool, and their schema."""

from __future__ import annotations

from .family import Family, VerificationReport, report_to_dict
from .search import BatchReport, ExtremalReport, InstanceError
from .subspace import Subspace


def _dec(x):
    return None if x is None else str(x)


def subspace_block(a: Subspace) -> dict:
    return {"k": a.k, "rows": [list(r) for r in a.basis]}


def _base(command: str, q: int, n: int) -> dict:
    return {
        "command": command,
        "q": q,
        "n": n,
        "kind": None,
        "k": None,
        "size": None,
        "bound": None,
        "conjectured_bound": None,
        "bound_status": None,
        "max_size": None,
        "proven_optimal": None,
        "witness": [],
        "nodes_explored": None,
        "elapsed_ms": None,
        "point_order_hash": None,
    }


def extremal_json(command: str, r: ExtremalReport) -> dict:
    out = _base(command, r.q, r.n)
    out.update(
        kind=r.kind,
        k=r.k,
        size=r.max_size,
        bound=_dec(r.bound),
        conjectured_bound=_dec(r.conjectured_bound),
        bound_status=r.bound_status,
        max_size=r.max_size,
        proven_optimal=r.proven_optimal,
        witness=[subspace_block(a) for a in r.witness.members],
        nodes_explored=r.nodes_explored,
        elapsed_ms=round(r.elapsed * 1000, 3),
        point_order_hash=r.point_order_hash,
        reference_bound=_dec(r.reference_bound),
        verdict=r.verdict,
        conjecture_verdict=r.conjecture_verdict,
        num_vertices=r.num_vertices,
        num_edges=r.num_edges,
        seeds=list(r.seeds),
        verification=report_to_dict(r.verification),
    )
    return out


def verification_json(command: str, f, rep: VerificationReport, point_order_hash: str | None) -> dict:
    out = _base(command, rep.q, rep.n)
    if isinstance(f, Family):
        witness = [subspace_block(a) for a in f.members]
    else:
        witness = [{"a": subspace_block(a), "b": subspace_block(b)} for a, b in f.pairs]
    out.update(
        kind=rep.kind,
        k=rep.k,
        size=rep.size,
        bound=_dec(rep.bound),
        conjectured_bound=_dec(rep.conjectured_bound),
        bound_status=rep.bound_status,
        witness=witness,
        point_order_hash=point_order_hash,
        verdict="satisfied" if rep.satisfied else "violated",
        verification=report_to_dict(rep),
    )
    return out


def batch_json(command: str, batch: BatchReport) -> dict:
    items = []
    for inst in batch.instances:
        if isinstance(inst, InstanceError):
            items.append({"kind": inst.kind, "q": inst.q, "n": inst.n, "error": inst.error, "message": inst.message})
        else:
            items.append(extremal_json(command, inst))
    return {"command": command, "experiment": batch.name, "instances": items}


_nullable_int = {"type": ["integer", "null"]}
_nullable_dec = {"type": ["string", "null"], "pattern": "^[0-9]+$"}
_block = {
    "type": "object",
    "required": ["k", "rows"],
    "properties": {
        "k": {"type": "integer", "minimum": 0},
        "rows": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
    },
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": [
        "command", "q", "n", "kind", "k", "size", "bound", "conjectured_bound", "bound_status",
        "max_size", "proven_optimal", "witness", "nodes_explored", "elapsed_ms", "point_order_hash",
    ],
    "properties": {
        "command": {"type": "string"},
        "q": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 0},
        "kind": {"type": ["string", "null"]},
        "k": _nullable_int,
        "size": _nullable_int,
        "bound": _nullable_dec,
        "conjectured_bound": _nullable_dec,
        "bound_status": {"enum": ["proven", "conjectured", "open", None]},
        "max_size": _nullable_int,
        "proven_optimal": {"type": ["boolean", "null"]},
        "witness": {
            "type": "array",
            "items": {
                "anyOf": [
                    _block,
                    {"type": "object", "required": ["a", "b"], "properties": {"a": _block, "b": _block}},
                ]
            },
        },
        "nodes_explored": _nullable_int,
        "elapsed_ms": {"type": ["number", "null"]},
        "point_order_hash": {"type": ["string", "null"]},
        "reference_bound": _nullable_dec,
    },
}

_error_entry = {
    "type": "object",
    "required": ["kind", "q", "n", "error", "message"],
}

BATCH_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["command", "experiment", "instances"],
    "properties": {
        "command": {"type": "string"},
        "experiment": {"enum": ["conjecture", "explore_even_q"]},
        "instances": {"type": "array", "items": {"anyOf": [REPORT_SCHEMA, _error_entry]}},
    },
}
