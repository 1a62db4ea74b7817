"""Entanglement-assisted operator codeword stabilized (EAOCWS) codes.

Bottom-up: Pauli algebra (``pauli``), graph layouts and the word gauge
group (``structure``), induced errors (``induction``), clique-based
codeword search (``search``), code assembly (``builder``) and the two
verifiers (``verify``).
"""

from .builder import EaocwsCode, assemble_code, ancilla_pattern, eliminate_bob_z, select_encodable, unencoded_form
from .certificate import CertificateError, code_from_json, code_to_json, read_certificate, write_certificate
from .clique import Budget, max_clique
from .induction import BinaryWord, effective_error_set, enumerate_alice_errors, gauge_reduce, induce
from .pauli import PauliError, PauliOp, Region, commutes, multiply, parse_pauli, pauli_to_text, weight
from .pipeline import find_code, find_ring_code, reproduce_cell, reproduce_example, ring_placements
from .search import build_problem, compatible, search_codewords
from .structure import CodeLayout, Graph, LayoutError, WordGaugeGroup, build_gauge_group, ring_graph, validate_group
from .verify import DenseError, code_distance, cross_validate, dense_oqec_check, dense_verify, symplectic_verify

__version__ = "0.1.0"

__all__ = [
    "BinaryWord", "Budget", "CertificateError", "CodeLayout", "DenseError", "EaocwsCode", "Graph",
    "LayoutError", "PauliError", "PauliOp", "Region", "WordGaugeGroup",
    "ancilla_pattern", "assemble_code", "build_gauge_group", "build_problem", "code_distance",
    "code_from_json", "code_to_json", "commutes", "compatible", "cross_validate", "dense_oqec_check",
    "dense_verify", "effective_error_set", "eliminate_bob_z", "enumerate_alice_errors", "find_code",
    "find_ring_code", "gauge_reduce", "induce", "max_clique", "multiply", "parse_pauli", "pauli_to_text",
    "read_certificate", "reproduce_cell", "reproduce_example", "ring_graph", "ring_placements",
    "search_codewords", "select_encodable", "symplectic_verify", "unencoded_form", "validate_group",
    "weight", "write_certificate",
]
