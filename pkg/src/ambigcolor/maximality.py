"""Maximal (ambiguous) k-colorability, certificate-matrix reconstruction,
and the exhaustive characterization-theorem harness.

Reconstruction follows the necessity argument: a (k-1)-colorable input is
complete multipartite up to one near-clique and yields a tiny or small
diagonal certificate; otherwise two distinct k-colorings are intersected,
a perfect matching of the class-intersection bipartite graph fixes the
pairing, and the entry counts |A_i n B_j| form the certificate, which is
special or normal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import chromatic_number, count_colorings, enumerate_colorings
from .errors import PreconditionError, ReconstructionError, ResourceLimitError
from .graphcore import (SimpleGraph, are_isomorphic, build_graph,
                        canonical_form, enumerate_graphs,
                        enumerate_labeled_graphs)
from .matrix import (ColorMatrix, _bipartite_matching, classify,
                     enumerate_desirable)

DEFAULT_MAX_N = 32


def is_maximal_ambiguous(g, k, max_n=DEFAULT_MAX_N):
    """Ambiguously k-colorable, and every single-edge addition is not."""
    if g.n > max_n:
        raise ResourceLimitError(f"is_maximal_ambiguous limited to n <= {max_n}")
    if count_colorings(g, k, 2) < 2:
        return False
    for u, v in g.non_edges():
        if count_colorings(g.add_edge(u, v), k, 2) >= 2:
            return False
    return True


def is_maximal_colorable(g, k, max_n=DEFAULT_MAX_N):
    """k-colorable, and every single-edge addition is not."""
    if g.n > max_n:
        raise ResourceLimitError(f"is_maximal_colorable limited to n <= {max_n}")
    if count_colorings(g, k, 1) < 1:
        return False
    for u, v in g.non_edges():
        if count_colorings(g.add_edge(u, v), k, 1) >= 1:
            return False
    return True


@dataclass
class ReconstructionTrace:
    """Audit trail of the necessity-direction reconstruction."""
    colorings: tuple                  # the two k-colorings used (class sets)
    h_edges: list                     # bipartite graph on class pairs
    matching: list                    # matching[i] = matched B-class of A-class i
    r: int                            # labels with A_j != B_j
    matrix: ColorMatrix
    relabeling: dict                  # vertex -> (i, j, t) label in G(A)


def _diagonal_certificate(g, k, coloring):
    sizes = sorted((len(c) for c in coloring.classes()), reverse=True)
    diag = sizes + [0] * (k - len(sizes))
    entries = [[diag[i] if i == j else 0 for j in range(k)] for i in range(k)]
    return ColorMatrix(entries)


def reconstruct_matrix(g, k):
    """Desirable certificate matrix A with G isomorphic to G(A), plus trace.

    Raises ReconstructionError when the input is not ambiguously
    k-colorable or when any internal check fails (the latter cannot happen
    on a maximal ambiguously k-colorable input).
    """
    if count_colorings(g, k, 2) < 2:
        raise ReconstructionError("graph is not ambiguously k-colorable")

    if count_colorings(g, k - 1, 1) >= 1:
        # tiny / small route: an optimal coloring of a maximal ambiguous
        # (k-1)-colorable graph has classes of size <= 2, exactly one of
        # size 2, padded with zero diagonal entries
        chi = chromatic_number(g)
        col = enumerate_colorings(g, chi, limit=1)[0]
        matrix = _diagonal_certificate(g, k, col)
        trace = ReconstructionTrace(
            colorings=(col.class_sets(),), h_edges=[], matching=[],
            r=0, matrix=matrix, relabeling={})
    else:
        cols = enumerate_colorings(g, k, limit=2)
        a_classes = [set(c) for c in cols[0].classes()]
        b_classes = [set(c) for c in cols[1].classes()]
        if len(a_classes) != k or len(b_classes) != k:
            raise ReconstructionError(
                "k-colorings of a non-(k-1)-colorable graph must have "
                "exactly k classes")
        adj = [[j for j in range(k) if a_classes[i] & b_classes[j]]
               for i in range(k)]
        size, match_right = _bipartite_matching(adj, k, k)
        if size < k:
            raise ReconstructionError(
                "Hall condition failed on the class-intersection graph")
        match = [0] * k
        for j, i in enumerate(match_right):
            match[i] = j
        # labels with A != B first, each group ascending by class minimum
        pairs = [(i, match[i]) for i in range(k)]
        differ = [p for p in pairs if a_classes[p[0]] != b_classes[p[1]]]
        equal = [p for p in pairs if a_classes[p[0]] == b_classes[p[1]]]
        differ.sort(key=lambda p: min(a_classes[p[0]]))
        equal.sort(key=lambda p: min(a_classes[p[0]]))
        order = differ + equal
        r = len(differ)
        if r < 2:
            raise ReconstructionError("matched colorings coincide")
        a_ord = [a_classes[p[0]] for p in order]
        b_ord = [b_classes[p[1]] for p in order]
        entries = [[len(a_ord[i] & b_ord[j]) for j in range(k)]
                   for i in range(k)]
        matrix = ColorMatrix(entries)
        relabeling = {}
        for i in range(k):
            for j in range(k):
                for t, v in enumerate(sorted(a_ord[i] & b_ord[j]), start=1):
                    relabeling[v] = (i + 1, j + 1, t)
        h_edges = [(i, j) for i in range(k) for j in adj[i]]
        trace = ReconstructionTrace(
            colorings=(cols[0].class_sets(), cols[1].class_sets()),
            h_edges=h_edges, matching=match, r=r, matrix=matrix,
            relabeling=relabeling)

    verdict = classify(matrix)
    if not verdict.desirable:
        raise ReconstructionError(
            f"reconstructed matrix is not desirable: {verdict.witness}")
    if matrix.order != g.n:
        raise ReconstructionError("entry sum does not match vertex count")
    if not are_isomorphic(g, build_graph(matrix)):
        raise ReconstructionError("G(A) is not isomorphic to the input")
    return matrix, trace


# ---------------------------------------------------------------------------
# exhaustive verification of the characterization theorem
# ---------------------------------------------------------------------------

@dataclass
class TheoremReportRow:
    n: int
    k: int
    graphs: int
    maximal_ambiguous: int
    matched_by_matrix: int
    family_graphs: int
    counterexamples: list

    def to_json(self):
        return {
            "n": self.n, "k": self.k, "graphs": self.graphs,
            "maximal_ambiguous": self.maximal_ambiguous,
            "matched_by_matrix": self.matched_by_matrix,
            "family_graphs": self.family_graphs,
            "counterexamples": self.counterexamples,
        }


def _edge_list_lines(g):
    return [f"{u} {v}" for u, v in g.edges()]


def verify_theorem1(max_n, k_list, max_n_bound=8, use_labeled=False,
                    jobs=1):
    """Exhaustively check the biconditional on all graphs with n <= max_n.

    Both directions run per (n, k): every graph up to isomorphism is
    tested for maximal ambiguity and for reconstructability, and every
    desirable matrix with entry sum n is checked to induce a maximal
    ambiguously k-colorable graph.
    """
    if max_n > max_n_bound:
        raise ResourceLimitError(
            f"verify_theorem1 limited to max_n <= {max_n_bound}")
    rows = []
    for n in range(1, max_n + 1):
        if use_labeled:
            seen = {}
            for g in enumerate_labeled_graphs(n):
                cert = canonical_form(g)
                if cert not in seen:
                    seen[cert] = g
            graphs = [seen[c] for c in sorted(seen)]
        else:
            graphs = enumerate_graphs(n, max_n=max_n_bound)
        shards = [graphs[i::jobs] for i in range(jobs)]
        for k in k_list:
            maximal = 0
            matched = 0
            counterexamples = []
            for shard in shards:
                for g in shard:
                    is_max = is_maximal_ambiguous(g, k)
                    try:
                        reconstruct_matrix(g, k)
                        ok = True
                    except ReconstructionError:
                        ok = False
                    maximal += is_max
                    matched += ok
                    if is_max != ok:
                        counterexamples.append(_edge_list_lines(g))
            # forward direction: every desirable matrix with this entry sum
            family = 0
            for mat in enumerate_desirable(k, n):
                family += 1
                g = build_graph(mat)
                if not is_maximal_ambiguous(g, k):
                    counterexamples.append(_edge_list_lines(g))
            counterexamples.sort()
            rows.append(TheoremReportRow(
                n=n, k=k, graphs=len(graphs), maximal_ambiguous=maximal,
                matched_by_matrix=matched, family_graphs=family,
                counterexamples=counterexamples))
    return rows


def theorem1_report_json(rows):
    return json.dumps(
        {"schema_version": 1, "theorem": "characterization",
         "rows": [r.to_json() for r in rows],
         "counterexample_total": sum(len(r.counterexamples) for r in rows)},
        indent=2, sort_keys=True)
