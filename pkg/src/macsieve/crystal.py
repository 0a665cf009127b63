"""Crystal raising and lowering operators on words, tableaux, and
coinversion-free fillings.

Word operators use the bracket rule: in the subword of letters i and i+1,
each i is a right bracket and each i+1 a left bracket; after cancelling
matched pairs, raising turns the leftmost unmatched i+1 into i and lowering
turns the rightmost unmatched i into i+1.

On a filling the operators act through the crystal biword: one biletter
(entry over column) per cell, sorted decreasingly on the column and, within
a column, decreasingly on the entry.  The word operator is applied to the
row of entries, after which the filling is rebuilt from its column sets.
The entry row is what the operator must act on: acting on the column row
would move cells between columns and change the shape, contradicting both
the weight-swap involutions and major-index preservation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .fillings import Filling, SkewShape, enumerate_cof, from_column_sets, maj
from .rsk_charge import Tableau, Word, burge_word, rsk


# ---------------------------------------------------------------------------
# Word operators
# ---------------------------------------------------------------------------


def word_e(i: int, word: Word) -> Word | None:
    """Raising: leftmost unmatched i+1 becomes i, or None."""
    if i < 1:
        raise ValueError("i must be >= 1")
    stack: list[int] = []
    for pos, a in enumerate(word):
        if a == i + 1:
            stack.append(pos)
        elif a == i and stack:
            stack.pop()
    if not stack:
        return None
    p = stack[0]
    return word[:p] + (i,) + word[p + 1:]


def word_f(i: int, word: Word) -> Word | None:
    """Lowering: rightmost unmatched i becomes i+1, or None."""
    if i < 1:
        raise ValueError("i must be >= 1")
    stack: list[int] = []
    unmatched: list[int] = []
    for pos, a in enumerate(word):
        if a == i + 1:
            stack.append(pos)
        elif a == i:
            if stack:
                stack.pop()
            else:
                unmatched.append(pos)
    if not unmatched:
        return None
    p = unmatched[-1]
    return word[:p] + (i + 1,) + word[p + 1:]


# ---------------------------------------------------------------------------
# Tableau operators (via the reading word)
# ---------------------------------------------------------------------------


def _reading_cells(rows: tuple[Word, ...]) -> list[tuple[int, int]]:
    cells = []
    for r in range(len(rows) - 1, -1, -1):
        for c in range(len(rows[r])):
            cells.append((r, c))
    return cells


def tableau_e(i: int, t: Tableau) -> Tableau | None:
    """Classical raising operator on a semistandard tableau.

    For a recording tableau (transposed flag), acts on the reading word of
    the transpose; this convention is pinned by the exhaustive
    RSK-equivariance check.
    """
    work = t.transpose() if t.transposed else t
    w = work.reading_word()
    res = word_e(i, w)
    if res is None:
        return None
    out = _rebuild(work.rows, w, res)
    return out.transpose() if t.transposed else out


def tableau_f(i: int, t: Tableau) -> Tableau | None:
    work = t.transpose() if t.transposed else t
    w = work.reading_word()
    res = word_f(i, w)
    if res is None:
        return None
    out = _rebuild(work.rows, w, res)
    return out.transpose() if t.transposed else out


def _rebuild(rows: tuple[Word, ...], old: Word, new: Word) -> Tableau:
    cells = _reading_cells(rows)
    grid = [list(r) for r in rows]
    for (r, c), a, b in zip(cells, old, new):
        if a != b:
            grid[r][c] = b
    return Tableau(tuple(tuple(r) for r in grid))


# ---------------------------------------------------------------------------
# Crystal biwords and operators on fillings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrystalBiword:
    """Biletters (entry over column) sorted by column descending, then entry
    descending; the operators act on values_row."""

    values_row: Word
    columns_row: Word

    @staticmethod
    def of(filling: Filling) -> "CrystalBiword":
        pairs = []
        shape = filling.shape
        for j in range(1, shape.ncols + 1):
            for v in filling.column_values(j):
                pairs.append((v, j))
        pairs.sort(key=lambda p: (-p[1], -p[0]))
        return CrystalBiword(
            tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)
        )


def crystal_biword(filling: Filling) -> CrystalBiword:
    return CrystalBiword.of(filling)


def _apply_word_op(op, i: int, filling: Filling) -> Filling | None:
    bw = crystal_biword(filling)
    res = op(i, bw.values_row)
    if res is None:
        return None
    changed = next(p for p in range(len(res)) if res[p] != bw.values_row[p])
    col = bw.columns_row[changed]
    sets = [list(s) for s in filling.column_sets()]
    sets[col - 1].remove(bw.values_row[changed])
    sets[col - 1].append(res[changed])
    return from_column_sets(filling.shape, [tuple(sorted(s)) for s in sets])


def cof_e(i: int, filling: Filling) -> Filling | None:
    """Raising operator on a coinversion-free filling."""
    return _apply_word_op(word_e, i, filling)


def cof_f(i: int, filling: Filling) -> Filling | None:
    """Lowering operator on a coinversion-free filling."""
    return _apply_word_op(word_f, i, filling)


def s_involution(i: int, filling: Filling) -> Filling:
    """The weight-swapping involution built from e_i / f_i powers."""
    w = filling.weight(max(i + 1, max((v for r in filling.rows for v in r), default=1)))
    mi = w[i - 1]
    mi1 = w[i] if i < len(w) else 0
    out = filling
    if mi < mi1:
        for _ in range(mi1 - mi):
            nxt = cof_e(i, out)
            assert nxt is not None
            out = nxt
    elif mi > mi1:
        for _ in range(mi - mi1):
            nxt = cof_f(i, out)
            assert nxt is not None
            out = nxt
    return out


# ---------------------------------------------------------------------------
# Crystal graphs
# ---------------------------------------------------------------------------


@dataclass
class CrystalGraph:
    nodes: list[Filling]
    edges: list[tuple[int, int, int]]  # (source index, target index, operator)

    def to_json(self) -> dict:
        return {
            "nodes": [f.label() for f in self.nodes],
            "edges": [[u, v, i] for (u, v, i) in self.edges],
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for f in self.nodes:
            lines.append(f'  "{f.label()}";')
        for u, v, i in self.edges:
            lines.append(
                f'  "{self.nodes[u].label()}" -> "{self.nodes[v].label()}" [label="{i}"];'
            )
        lines.append("}")
        return "\n".join(lines)

    def components(self) -> list[list[int]]:
        n = len(self.nodes)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps


def crystal_graph(shape: SkewShape, m: int) -> CrystalGraph:
    """Vertices are COF(shape, m); an edge u -> v with label i when
    f_i(u) = v."""
    nodes = list(enumerate_cof(shape, m))
    index = {f: k for k, f in enumerate(nodes)}
    edges = []
    for k, f in enumerate(nodes):
        for i in range(1, m):
            img = cof_f(i, f)
            if img is not None:
                edges.append((k, index[img], i))
    return CrystalGraph(nodes, edges)


def highest_weight_vertices(graph: CrystalGraph, m: int) -> list[int]:
    """Vertices with every raising operator undefined."""
    out = []
    for k, f in enumerate(graph.nodes):
        if all(cof_e(i, f) is None for i in range(1, m)):
            out.append(k)
    return out


def ssyt_crystal_edges(shape, m: int):
    """The classical crystal on SSYT(shape) with entries <= m, as
    (tableau -> {i: tableau}) maps."""
    from .symfunc import ssyt_tableaux

    nodes = [Tableau(rows) for rows in ssyt_tableaux(shape, max_entry=m)]
    index = {t: k for k, t in enumerate(nodes)}
    succ: list[dict[int, int]] = [dict() for _ in nodes]
    for k, t in enumerate(nodes):
        for i in range(1, m):
            img = tableau_f(i, t)
            if img is not None:
                succ[k][i] = index[img]
    return nodes, succ


def component_isomorphic_to_ssyt_crystal(
    graph: CrystalGraph, component: list[int], shape, m: int
) -> bool:
    """Labeled-digraph comparison of a crystal component with the classical
    SSYT crystal of the given shape, by deterministic parallel traversal from
    the highest-weight vertices."""
    comp_set = set(component)
    hw = [
        k
        for k in component
        if all(cof_e(i, graph.nodes[k]) is None for i in range(1, m))
    ]
    if len(hw) != 1:
        return False
    t_nodes, t_succ = ssyt_crystal_edges(shape, m)
    t_hw = [
        k
        for k, t in enumerate(t_nodes)
        if all(tableau_e(i, t) is None for i in range(1, m))
    ]
    if len(t_hw) != 1:
        return False
    succ: dict[int, dict[int, int]] = {k: {} for k in component}
    for u, v, i in graph.edges:
        if u in comp_set:
            succ[u][i] = v
    pairing = {hw[0]: t_hw[0]}
    stack = [hw[0]]
    while stack:
        u = stack.pop()
        tu = pairing[u]
        if set(succ[u]) != set(t_succ[tu]):
            return False
        for i, v in succ[u].items():
            tv = t_succ[tu][i]
            if v in pairing:
                if pairing[v] != tv:
                    return False
            else:
                pairing[v] = tv
                stack.append(v)
    return len(pairing) == len(component) == len(t_nodes)


# ---------------------------------------------------------------------------
# RSK equivariance
# ---------------------------------------------------------------------------


def rsk_equivariance_check(shape: SkewShape, m: int) -> dict:
    """For every filling and operator: raising fixes the insertion tableau
    and applies the tableau raising operator to the recording tableau."""
    violations = []
    total = 0
    for f in enumerate_cof(shape, m):
        p, q = rsk(burge_word(f))
        for i in range(1, m):
            img = cof_e(i, f)
            if img is None:
                continue
            total += 1
            p2, q2 = rsk(burge_word(img))
            expected_q = tableau_e(i, q)
            if p2 != p or expected_q is None or q2 != expected_q:
                violations.append(
                    {"filling": f.label(), "i": i, "image": img.label()}
                )
    return {
        "shape": str(shape),
        "m": m,
        "checked": total,
        "violations": violations,
        "ok": not violations,
    }
