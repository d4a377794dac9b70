from typing import List, Optional

from .events import ILLEGAL_EDGE, REPEATED_COLOR_PAIR, Violation
from .json_serialize import JsonSerialize


class ValidationReport(JsonSerialize):
    """Oracle verdict for one embedding.

    Every witness with shared pattern vertices (or an illegal image edge)
    refutes proper coloring; every witness refutes rainbow.
    """

    def __init__(self, injective: bool, part_respecting: bool, witnesses: List[Violation]):
        self.injective = injective
        self.part_respecting = part_respecting
        self.witnesses = sorted(witnesses, key=lambda witness: witness.key())
        self.properly_colored = not any(witness.kind != REPEATED_COLOR_PAIR for witness in self.witnesses)
        self.rainbow = not self.witnesses

    @property
    def proper_witnesses(self) -> List[Violation]:
        return [witness for witness in self.witnesses if witness.kind != REPEATED_COLOR_PAIR]

    @property
    def valid(self) -> bool:
        return self.injective and self.part_respecting

    def passes(self, mode: str) -> bool:
        if not self.valid:
            return False
        return self.rainbow if mode == "rainbow" else self.properly_colored

    def has_illegal_edges(self) -> bool:
        return any(witness.kind == ILLEGAL_EDGE for witness in self.witnesses)

    def to_json_dict(self):
        return {
            'injective': self.injective,
            'part_respecting': self.part_respecting,
            'properly_colored': self.properly_colored,
            'rainbow': self.rainbow,
            'witnesses': [witness.to_json_dict() for witness in self.witnesses],
        }


class CrossCheckReport(JsonSerialize):

    def __init__(self, mode: str, oracle_exists: bool, witness: Optional[list]):
        self.mode = mode
        self.oracle_exists = oracle_exists
        self.witness = witness
        self.runs = 0
        self.successes = 0
        self.first_attempt_successes = 0
        self.discrepancies = list()

    @property
    def consistent(self) -> bool:
        return not self.discrepancies

    def to_json_dict(self):
        return {
            'mode': self.mode,
            'oracle_exists': self.oracle_exists,
            'witness': self.witness,
            'runs': self.runs,
            'successes': self.successes,
            'first_attempt_successes': self.first_attempt_successes,
            'consistent': self.consistent,
            'discrepancies': list(self.discrepancies),
        }
