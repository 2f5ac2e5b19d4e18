"""Ground-truth models used for evaluation.

``retailer`` and ``login`` follow published diagrams. The library and
service models are reconstructions sized to the operation vocabularies of
their subject systems; they are plausible protocols, not recovered originals.
"""
from __future__ import annotations

from dataclasses import dataclass

from specmine.automata import Fsa, renumber
from specmine.errors import ModelError

PUBLISHED = "paper-figure"
RECONSTRUCTED = "reconstructed"


@dataclass(frozen=True)
class GroundTruthModel:
    name: str
    model: Fsa
    provenance: str

    def __post_init__(self):
        if not self.model.deterministic:
            raise ModelError(f"ground-truth model {self.name!r} must be deterministic")
        if self.provenance not in (PUBLISHED, RECONSTRUCTED):
            raise ModelError(f"unknown provenance {self.provenance!r}")


def _model(transitions, accepting, initial="q0"):
    return renumber(Fsa.from_transitions(transitions, initial, accepting))


def flower(alphabet):
    """One accepting state with a self-loop per operation: accepts everything."""
    alphabet = sorted(alphabet)
    return Fsa.from_transitions([("q0", op, "q0") for op in alphabet], "q0", ["q0"],
                                alphabet=alphabet)


def retailer():
    # regular customers pay before shipping, premium customers get shipment first
    return _model([
        ("q0", "regLogin", "q1"), ("q1", "cat", "q1"), ("q1", "order", "q2"),
        ("q2", "inv", "q3"), ("q3", "pay", "q4"), ("q4", "ship", "q5"),
        ("q0", "premLogin", "q6"), ("q6", "cat", "q6"), ("q6", "order", "q7"),
        ("q7", "ship", "q8"), ("q8", "inv", "q9"), ("q9", "pay", "q10"),
    ], ["q5", "q10"])


def login():
    # up to four failures, then a security question before the final attempt
    t = [("q0", "fail", "q1"), ("q1", "fail", "q2"), ("q2", "fail", "q3"), ("q3", "fail", "q4"),
         ("q4", "secQuestion", "q5"), ("q6", "logout", "q7")]
    t += [(s, "login", "q6") for s in ("q0", "q1", "q2", "q3", "q5")]
    return _model(t, ["q7"])


def string_tokenizer():
    return _model([
        ("q0", "init", "q1"), ("q1", "hasMoreTokens", "q2"), ("q2", "nextToken", "q1"),
    ], ["q1", "q2"])


def zip_output_stream():
    return _model([
        ("q0", "ZipOutputStream", "q1"), ("q1", "putNextEntry", "q2"), ("q2", "write", "q2"),
        ("q2", "closeEntry", "q3"), ("q3", "putNextEntry", "q2"), ("q3", "close", "q4"),
        ("q1", "close", "q4"),
    ], ["q4"])


def amazon_ec2():
    return _model([
        ("q0", "login", "q1"), ("q1", "runInstance", "q2"),
        ("q2", "rebootInstance", "q2"), ("q2", "stopInstance", "q3"), ("q3", "startInstance", "q2"),
        ("q2", "terminateInstance", "q4"), ("q3", "terminateInstance", "q4"),
        ("q4", "logout", "q5"), ("q1", "logout", "q5"),
    ], ["q5"])


def cvs():
    t = [("q0", "connect", "q1"), ("q1", "login", "q2"), ("q2", "initialise", "q3"),
         ("q3", "setfiletype", "q4"), ("q4", "changedir", "q5"),
         ("q5", "listfiles", "q6"), ("q5", "listnames", "q6"),
         ("q6", "retrievefile", "q7"), ("q6", "delete", "q7"), ("q6", "rename", "q7"),
         ("q6", "storefile", "q8"), ("q8", "appendfile", "q7"),
         ("q6", "makedir", "q9"), ("q9", "removedir", "q7"),
         ("q7", "changedir", "q5"), ("q7", "logout", "q10"), ("q3", "logout", "q10"),
         ("q10", "disconnect", "q11")]
    return _model(t, ["q11"])


def builtin_models():
    return [
        GroundTruthModel("retailer", retailer(), PUBLISHED),
        GroundTruthModel("login", login(), PUBLISHED),
        GroundTruthModel("StringTokenizer", string_tokenizer(), RECONSTRUCTED),
        GroundTruthModel("ZipOutputStream", zip_output_stream(), RECONSTRUCTED),
        GroundTruthModel("amazon-ec2", amazon_ec2(), RECONSTRUCTED),
        GroundTruthModel("cvs", cvs(), RECONSTRUCTED),
    ]


def get_model(name):
    for m in builtin_models():
        if m.name == name:
            return m
    raise KeyError(name)
