"""Combinatorial graphs with flags and involutions.

A graph is a finite set of flags F, a finite set of vertices V, an
involution j on F pairing flag halves into edges (fixed flags are tails)
and an incidence map F -> V.  Orientations label every flag 'in' or 'out'
with the two halves of an edge labelled differently.  This one structure
underlies both the vacuum-diagram expansion and the flowchart bialgebra.

Isomorphism machinery works at the multigraph level: per-vertex loop
counts, tail counts (split by label when oriented), decorations and edge
multiplicities determine a flag graph up to isomorphism, because parallel
edges, loops and same-label tails are freely interchangeable.  Canonical
labels take the lexicographic minimum of a pinned serialization over all
vertex permutations -- fine at desk scale (the documented boundary), and
cross-checked against explicit flag-level relabeling search in the tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Optional, Sequence

IN, OUT = "in", "out"


class GraphError(ValueError):
    pass


class BudgetError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """Flags are 0..len(involution)-1, vertices 0..n_vertices-1."""

    n_vertices: int
    involution: tuple[int, ...]
    incidence: tuple[int, ...]
    orientation: Optional[tuple[str, ...]] = None
    decorations: Optional[tuple[Optional[str], ...]] = None

    def __post_init__(self):
        nf = len(self.involution)
        if len(self.incidence) != nf:
            raise GraphError("incidence must cover every flag")
        for f, g in enumerate(self.involution):
            if not 0 <= g < nf:
                raise GraphError(f"involution[{f}]={g} is not a flag")
            if self.involution[g] != f:
                raise GraphError(f"involution not self-inverse at flag {f}")
        for f, v in enumerate(self.incidence):
            if not 0 <= v < self.n_vertices:
                raise GraphError(f"incidence[{f}]={v} is not a vertex")
        if self.orientation is not None:
            if len(self.orientation) != nf:
                raise GraphError("orientation must cover every flag")
            for f, lab in enumerate(self.orientation):
                if lab not in (IN, OUT):
                    raise GraphError(f"orientation[{f}]={lab!r} must be in/out")
                g = self.involution[f]
                if g != f and self.orientation[g] == lab:
                    raise GraphError(
                        f"edge flags {f},{g} carry the same label {lab!r}"
                    )
        if self.decorations is not None and len(self.decorations) != self.n_vertices:
            raise GraphError("decorations must cover every vertex")

    # -- derived structure ---------------------------------------------------

    @property
    def n_flags(self) -> int:
        return len(self.involution)

    def edges(self) -> list[tuple[int, int]]:
        """Flag pairs (f, j(f)) with f < j(f)."""
        return [
            (f, g) for f, g in enumerate(self.involution) if f < g
        ]

    def tails(self) -> list[int]:
        return [f for f, g in enumerate(self.involution) if f == g]

    def n_edges(self) -> int:
        return len(self.edges())

    def is_oriented(self) -> bool:
        return self.orientation is not None

    def flags_at(self, v: int) -> list[int]:
        return [f for f, w in enumerate(self.incidence) if w == v]

    def valence(self, v: int) -> int:
        return sum(1 for w in self.incidence if w == v)

    def decoration(self, v: int) -> Optional[str]:
        return None if self.decorations is None else self.decorations[v]

    def directed_edges(self) -> list[tuple[int, int]]:
        """(source vertex, target vertex) per edge; needs an orientation.

        The edge runs from the vertex holding its 'out' flag to the vertex
        holding its 'in' flag.
        """
        if self.orientation is None:
            raise GraphError("graph has no orientation")
        out = []
        for f, g in self.edges():
            if self.orientation[f] == OUT:
                out.append((self.incidence[f], self.incidence[g]))
            else:
                out.append((self.incidence[g], self.incidence[f]))
        return out

    def connected_components(self) -> list[frozenset[int]]:
        parent = list(range(self.n_vertices))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for f, g in self.edges():
            a, b = find(self.incidence[f]), find(self.incidence[g])
            if a != b:
                parent[a] = b
        groups: dict[int, set[int]] = {}
        for v in range(self.n_vertices):
            groups.setdefault(find(v), set()).add(v)
        return [frozenset(g) for g in groups.values()]

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and len(self.connected_components()) == 1


EMPTY_GRAPH = Graph(0, (), ())
EMPTY_ORIENTED = Graph(0, (), (), orientation=())


def euler_characteristic(g: Graph) -> int:
    """|V| - |E|; tails are contractible and contribute nothing."""
    return g.n_vertices - g.n_edges()


# ---------------------------------------------------------------------------
# multigraph data: the complete isomorphism invariant used throughout
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MultigraphData:
    n_vertices: int
    oriented: bool
    loops: tuple[int, ...]                 # per vertex
    tails_in: tuple[int, ...]              # per vertex ('in' side; all tails if unoriented)
    tails_out: tuple[int, ...]             # per vertex (zeros if unoriented)
    edge_mult: dict                        # oriented: (u,v)->m ; unoriented: (min,max)->m
    decorations: tuple[Optional[str], ...]


def multigraph_data(g: Graph) -> MultigraphData:
    loops = [0] * g.n_vertices
    tin = [0] * g.n_vertices
    tout = [0] * g.n_vertices
    mult: dict = {}
    for f in g.tails():
        v = g.incidence[f]
        if g.orientation is not None and g.orientation[f] == OUT:
            tout[v] += 1
        else:
            tin[v] += 1
    for f, h in g.edges():
        u, v = g.incidence[f], g.incidence[h]
        if u == v:
            loops[u] += 1
        elif g.orientation is not None:
            s, t = (u, v) if g.orientation[f] == OUT else (v, u)
            mult[(s, t)] = mult.get((s, t), 0) + 1
        else:
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + 1
    deco = g.decorations or (None,) * g.n_vertices
    return MultigraphData(
        g.n_vertices, g.orientation is not None,
        tuple(loops), tuple(tin), tuple(tout), mult, tuple(deco),
    )


def _serialize_under(data: MultigraphData, perm: Sequence[int]) -> str:
    """Pinned serialization after renaming vertex v to perm[v]."""
    n = data.n_vertices
    inv = [0] * n
    for v, img in enumerate(perm):
        inv[img] = v
    vert_parts = []
    for new in range(n):
        old = inv[new]
        deco = data.decorations[old] or "-"
        vert_parts.append(
            f"{deco}.{data.loops[old]}.{data.tails_in[old]}.{data.tails_out[old]}"
        )
    edge_parts = []
    for (u, v), m in data.edge_mult.items():
        a, b = perm[u], perm[v]
        if not data.oriented and a > b:
            a, b = b, a
        edge_parts.append((a, b, m))
    edge_parts.sort()
    head = "og" if data.oriented else "ug"
    edges = ",".join(f"{a}>{b}x{m}" for a, b, m in edge_parts)
    return f"{head}:{n}|{';'.join(vert_parts)}|{edges}"


def _candidate_permutations(data: MultigraphData):
    """Vertex permutations into slots grouped by the per-vertex invariant
    (decoration, loops, tails).  The group layout is isomorphism-invariant,
    so minimizing over these permutations is a complete canonical form while
    skipping relabelings that mix inequivalent vertices."""
    n = data.n_vertices
    keys = [
        (data.decorations[v] or "", data.loops[v], data.tails_in[v], data.tails_out[v])
        for v in range(n)
    ]
    group_order = {k: i for i, k in enumerate(sorted(set(keys)))}
    members: list[list[int]] = [[] for _ in group_order]
    for v in range(n):
        members[group_order[keys[v]]].append(v)
    slot_blocks = []
    start = 0
    for grp in members:
        slot_blocks.append(list(range(start, start + len(grp))))
        start += len(grp)
    from itertools import product as iproduct

    for arrangement in iproduct(*(permutations(b) for b in slot_blocks)):
        perm = [0] * n
        for grp, slots in zip(members, arrangement):
            for v, slot in zip(grp, slots):
                perm[v] = slot
        yield perm


def _min_serialization(data: MultigraphData) -> str:
    best = None
    for perm in _candidate_permutations(data):
        s = _serialize_under(data, perm)
        if best is None or s < best:
            best = s
    return best if best is not None else _serialize_under(data, ())


def canonical_label(g: Graph, max_vertices: int = 10) -> str:
    """Lexicographically minimal serialization over vertex relabelings.

    Equal labels  <=>  isomorphic (as flag graphs with orientation and
    decorations, when present).
    """
    if g.n_vertices > max_vertices:
        raise BudgetError(
            f"{g.n_vertices} vertices exceed the canonical-form bound {max_vertices}"
        )
    return _min_serialization(multigraph_data(g))


def graph_from_label(label: str) -> Graph:
    """A representative graph of a canonical label, laid out deterministically.

    Per vertex ascending: loop flag pairs, then 'in' tails, then 'out'
    tails; then edge bundles in serialization order (out-flag first when
    oriented).
    """
    head, nstr, verts, edges = (
        label.split(":", 1)[0],
        label.split(":", 1)[1].split("|")[0],
        label.split("|")[1],
        label.split("|")[2],
    )
    oriented = head == "og"
    n = int(nstr)
    involution: list[int] = []
    incidence: list[int] = []
    orientation: list[str] = []
    decorations: list[Optional[str]] = []

    def add_flag(v: int, lab: str) -> int:
        involution.append(len(involution))
        incidence.append(v)
        orientation.append(lab)
        return len(involution) - 1

    vert_parts = verts.split(";") if verts else []
    if len(vert_parts) != n:
        raise GraphError(f"label lists {len(vert_parts)} vertices, header says {n}")
    for v, part in enumerate(vert_parts):
        deco, loops, tin, tout = part.split(".")
        decorations.append(None if deco == "-" else deco)
        for _ in range(int(loops)):
            a = add_flag(v, OUT)
            b = add_flag(v, IN)
            involution[a], involution[b] = b, a
        for _ in range(int(tin)):
            add_flag(v, IN)
        for _ in range(int(tout)):
            add_flag(v, OUT)
    if edges:
        for part in edges.split(","):
            uv, mult = part.split("x")
            u, v = uv.split(">")
            for _ in range(int(mult)):
                a = add_flag(int(u), OUT)
                b = add_flag(int(v), IN)
                involution[a], involution[b] = b, a
    return Graph(
        n,
        tuple(involution),
        tuple(incidence),
        orientation=tuple(orientation) if oriented else None,
        decorations=tuple(decorations) if any(d is not None for d in decorations) else None,
    )


# ---------------------------------------------------------------------------
# automorphisms
# ---------------------------------------------------------------------------

def automorphism_order(g: Graph, max_flags: int = 16) -> int:
    """Number of (vertex permutation, flag permutation) pairs commuting with
    the involution and incidence and preserving decorations/orientation.

    Counts exactly: for each structure-preserving vertex permutation the
    compatible flag permutations factor into per-bundle choices (parallel
    edges m!, loops l! with a factor 2 per loop flip when unoriented, tails
    t! per label).  The flag-level search in the tests confirms the count.
    """
    if g.n_flags > max_flags:
        raise BudgetError(f"{g.n_flags} flags exceed the bound {max_flags}")
    return _automorphism_order_unbounded(g)


def _automorphism_order_unbounded(g: Graph) -> int:
    from itertools import product as iproduct

    data = multigraph_data(g)
    n = data.n_vertices
    per_vertex_key = [
        (data.decorations[v], data.loops[v], data.tails_in[v], data.tails_out[v])
        for v in range(n)
    ]
    flag_choices = 1
    for v in range(n):
        l, ti, to = data.loops[v], data.tails_in[v], data.tails_out[v]
        loop_factor = factorial(l) if data.oriented else factorial(l) * 2**l
        flag_choices *= loop_factor * factorial(ti) * factorial(to)
    for m in data.edge_mult.values():
        flag_choices *= factorial(m)
    groups: dict = {}
    for v in range(n):
        groups.setdefault(per_vertex_key[v], []).append(v)
    members = list(groups.values())
    total = 0
    for arrangement in iproduct(*(permutations(grp) for grp in members)):
        perm = [0] * n
        for grp, images in zip(members, arrangement):
            for v, w in zip(grp, images):
                perm[v] = w
        ok = True
        for (u, v), m in data.edge_mult.items():
            a, b = perm[u], perm[v]
            if not data.oriented and a > b:
                a, b = b, a
            if data.edge_mult.get((a, b), 0) != m:
                ok = False
                break
        if ok:
            total += 1
    return total * flag_choices


def automorphism_order_flag_search(g: Graph) -> int:
    """Literal brute force over flag bijections; test oracle for tiny graphs."""
    n = g.n_vertices
    count = 0
    flags_by_vertex = [g.flags_at(v) for v in range(n)]
    for vperm in permutations(range(n)):
        if g.decorations is not None and any(
            g.decorations[v] != g.decorations[vperm[v]] for v in range(n)
        ):
            continue
        if any(
            len(flags_by_vertex[v]) != len(flags_by_vertex[vperm[v]])
            for v in range(n)
        ):
            continue
        count += _count_flag_maps(g, vperm, flags_by_vertex)
    return count


def _count_flag_maps(g: Graph, vperm, flags_by_vertex) -> int:
    from itertools import permutations as perms

    vertex_choices = []
    for v in range(g.n_vertices):
        src = flags_by_vertex[v]
        dst = flags_by_vertex[vperm[v]]
        vertex_choices.append([dict(zip(src, p)) for p in perms(dst)])
    total = 0

    def rec(v, mapping):
        nonlocal total
        if v == g.n_vertices:
            for f in range(g.n_flags):
                if mapping[g.involution[f]] != g.involution[mapping[f]]:
                    return
                if g.orientation is not None and (
                    g.orientation[f] != g.orientation[mapping[f]]
                ):
                    return
            total += 1
            return
        for choice in vertex_choices[v]:
            merged = dict(mapping)
            merged.update(choice)
            rec(v + 1, merged)

    rec(0, {})
    return total


# ---------------------------------------------------------------------------
# orientation: directedness, wheels, cuts
# ---------------------------------------------------------------------------

def _check_orientation(g: Graph, orientation) -> Graph:
    if orientation is not None:
        g = Graph(g.n_vertices, g.involution, g.incidence,
                  orientation=tuple(orientation), decorations=g.decorations)
    if g.orientation is None:
        raise GraphError("operation needs an oriented graph")
    return g


def is_directed(g: Graph, orientation=None) -> bool:
    """True iff a strictly increasing time function exists along every flag
    direction, i.e. the edge-direction relation has no oriented cycle."""
    g = _check_orientation(g, orientation)
    adjacency: dict[int, set[int]] = {v: set() for v in range(g.n_vertices)}
    for s, t in g.directed_edges():
        if s == t:
            return False
        adjacency[s].add(t)
    state = {v: 0 for v in range(g.n_vertices)}  # 0 new, 1 active, 2 done

    def dfs(v) -> bool:
        state[v] = 1
        for w in adjacency[v]:
            if state[w] == 1 or (state[w] == 0 and not dfs(w)):
                return False
        state[v] = 2
        return True

    return all(state[v] != 0 or dfs(v) for v in range(g.n_vertices))


def strongly_connected_components(g: Graph) -> list[frozenset[int]]:
    """Tarjan SCCs of the edge-direction relation (loops make singles cyclic,
    which is irrelevant here: SCC membership already captures wheels)."""
    adjacency: dict[int, list[int]] = {v: [] for v in range(g.n_vertices)}
    for s, t in g.directed_edges():
        adjacency[s].append(t)
    index = {}
    low = {}
    stack: list[int] = []
    on_stack = set()
    out: list[frozenset[int]] = []
    counter = [0]

    def strong(v):
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        for w in adjacency[v]:
            if w not in index:
                strong(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = set()
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.add(w)
                if w == v:
                    break
            out.append(frozenset(comp))

    for v in range(g.n_vertices):
        if v not in index:
            strong(v)
    return out


@dataclass(frozen=True)
class Cut:
    """Bipartition of the vertices; both halves carry the severed graphs."""

    upper: frozenset[int]
    lower: frozenset[int]
    upper_graph: Graph
    lower_graph: Graph

    @property
    def proper(self) -> bool:
        return bool(self.upper) and bool(self.lower)


def _induced_with_severed_tails(g: Graph, keep: frozenset[int]) -> Graph:
    """Subgraph on `keep`; crossing edges leave their half as a tail."""
    flag_ids = [f for f in range(g.n_flags) if g.incidence[f] in keep]
    new_id = {f: i for i, f in enumerate(flag_ids)}
    vertex_ids = sorted(keep)
    new_vertex = {v: i for i, v in enumerate(vertex_ids)}
    involution = []
    for f in flag_ids:
        partner = g.involution[f]
        involution.append(new_id[partner] if partner in new_id else new_id[f])
    incidence = [new_vertex[g.incidence[f]] for f in flag_ids]
    orientation = (
        tuple(g.orientation[f] for f in flag_ids) if g.orientation is not None else None
    )
    decorations = (
        tuple(g.decorations[v] for v in vertex_ids) if g.decorations is not None else None
    )
    return Graph(len(vertex_ids), tuple(involution), tuple(incidence),
                 orientation=orientation, decorations=decorations)


def enumerate_cuts(g: Graph, orientation=None, max_vertices: int = 16) -> list[Cut]:
    """Both improper cuts plus every proper cut: a vertex bipartition that
    keeps each oriented wheel on one side and orients every crossing edge
    from upper to lower.  Crossing halves become tails of their side."""
    g = _check_orientation(g, orientation)
    if g.n_vertices > max_vertices:
        raise BudgetError(
            f"{g.n_vertices} vertices exceed the cut-enumeration bound {max_vertices}"
        )
    all_v = frozenset(range(g.n_vertices))
    cuts = [
        Cut(all_v, frozenset(), g, _induced_with_severed_tails(g, frozenset())),
    ]
    if g.n_vertices > 0:
        cuts.append(Cut(frozenset(), all_v,
                        _induced_with_severed_tails(g, frozenset()), g))
    scc_of = {}
    for comp in strongly_connected_components(g):
        for v in comp:
            scc_of[v] = comp
    directed = g.directed_edges()
    n = g.n_vertices
    for mask in range(1, 2**n - 1):
        upper = frozenset(v for v in range(n) if mask >> v & 1)
        lower = all_v - upper
        # (i) wheels unseparated: every oriented cycle lies inside one SCC,
        # so monochromatic SCCs are exactly the unseparated-wheel condition
        ok = all(scc_of[v] <= upper for v in upper)
        # (ii) crossing edges flow from upper to lower only
        if ok:
            ok = not any(s in lower and t in upper for s, t in directed)
        if ok:
            cuts.append(Cut(upper, lower,
                            _induced_with_severed_tails(g, upper),
                            _induced_with_severed_tails(g, lower)))
    return cuts


# ---------------------------------------------------------------------------
# vacuum-graph enumeration
# ---------------------------------------------------------------------------

def enumerate_vacuum_graphs(max_order: int, valences: Iterable[int],
                            max_vertices: Optional[int] = None,
                            budget: int = 200_000) -> list[Graph]:
    """One representative per isomorphism class of tail-free graphs with all
    vertex valences in `valences` and E - V <= max_order.

    Includes the empty graph.  With every valence >= 3 the family is finite
    (V <= 2 * max_order); otherwise `max_vertices` must cap it.
    """
    valences = sorted(set(valences))
    if any(v < 1 for v in valences):
        raise GraphError("valences must be >= 1")
    graphs = [EMPTY_GRAPH]
    if not valences or max_order < 0:
        return graphs
    if max_vertices is None:
        if min(valences) <= 2:
            raise GraphError("valences <= 2 make orders unbounded; pass max_vertices")
        max_vertices = 2 * max_order
    seen = {canonical_label(EMPTY_GRAPH)}
    spent = [0]
    for degree_seq in _degree_sequences(valences, max_order, max_vertices):
        for data in _multigraphs_with_degrees(degree_seq, spent, budget):
            label = _label_of_data(data)
            if label not in seen:
                g = graph_from_label(label)
                if euler_characteristic(g) >= -max_order:
                    seen.add(label)
                    graphs.append(g)
    graphs.sort(key=lambda gr: (gr.n_flags, canonical_label(gr, max_vertices)))
    return graphs


def _label_of_data(data: MultigraphData) -> str:
    return _min_serialization(data)


def _degree_sequences(valences, max_order, max_vertices):
    """Nonincreasing valence multisets with even flag total and
    E - V = sum(d)/2 - len <= max_order."""
    out = []

    def rec(prefix, start_idx):
        if prefix:
            total = sum(prefix)
            if total % 2 == 0:
                order = total // 2 - len(prefix)
                if order <= max_order:
                    out.append(tuple(prefix))
        if len(prefix) >= max_vertices:
            return
        for i in range(start_idx, len(valences)):
            d = valences[i]
            # pruning: each further vertex contributes at least d/2 - 1
            lower = sum(prefix + [d]) / 2 - (len(prefix) + 1)
            if lower > max_order and d > 2:
                continue
            rec(prefix + [d], i)

    # descending valences so the multiset is canonical
    valences = sorted(valences, reverse=True)
    rec([], 0)
    return out


def _multigraphs_with_degrees(degrees, spent, budget):
    """All loop/multiplicity assignments matching the degree sequence."""
    n = len(degrees)
    pair_slots = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def rec(v_idx, remaining, loops, mult):
        if spent[0] > budget:
            raise BudgetError(f"vacuum enumeration exceeded budget {budget}")
        if v_idx == n:
            if all(r == 0 for r in remaining):
                spent[0] += 1
                yield MultigraphData(
                    n, False, tuple(loops), (0,) * n, (0,) * n,
                    {k: m for k, m in mult.items() if m}, (None,) * n,
                )
            return
        # distribute remaining[v_idx] among loops (2 each) and edges to later vertices
        def dist(j_idx, rem):
            if rem == 0:
                yield {}
                return
            if j_idx == n:
                return
            for m in range(rem + 1):
                if m <= remaining[j_idx]:
                    for rest in dist(j_idx + 1, rem - m):
                        if m:
                            rest = dict(rest)
                            rest[j_idx] = m
                        yield rest

        for l in range(remaining[v_idx] // 2 + 1):
            rem = remaining[v_idx] - 2 * l
            for assignment in dist(v_idx + 1, rem):
                new_remaining = list(remaining)
                new_remaining[v_idx] = 0
                for j, m in assignment.items():
                    new_remaining[j] -= m
                new_loops = list(loops)
                new_loops[v_idx] = l
                new_mult = dict(mult)
                for j, m in assignment.items():
                    new_mult[(v_idx, j)] = m
                yield from rec(v_idx + 1, new_remaining, new_loops, new_mult)

    yield from rec(0, list(degrees), [0] * n, {})


# ---------------------------------------------------------------------------
# JSON interface
# ---------------------------------------------------------------------------

def graph_to_json(g: Graph) -> str:
    doc = {
        "flags": list(range(g.n_flags)),
        "vertices": list(range(g.n_vertices)),
        "involution": list(g.involution),
        "incidence": list(g.incidence),
    }
    if g.orientation is not None:
        doc["orientation"] = list(g.orientation)
    if g.decorations is not None:
        doc["decorations"] = {
            str(v): d for v, d in enumerate(g.decorations) if d is not None
        }
    return json.dumps(doc, indent=1)


def graph_from_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"bad graph JSON: {exc}") from None
    for key in ("flags", "vertices", "involution", "incidence"):
        if key not in doc:
            raise GraphError(f"graph JSON lacks {key!r}")
    flags = doc["flags"]
    if flags != list(range(len(flags))):
        raise GraphError("flag ids must be dense integers 0..n-1")
    vertices = doc["vertices"]
    if vertices != list(range(len(vertices))):
        raise GraphError("vertex ids must be dense integers 0..n-1")
    decorations = None
    if "decorations" in doc:
        decorations = [None] * len(vertices)
        for key, token in doc["decorations"].items():
            v = int(key)
            if not 0 <= v < len(vertices):
                raise GraphError(f"decoration names missing vertex {key}")
            decorations[v] = str(token)
        decorations = tuple(decorations)
    return Graph(
        len(vertices),
        tuple(doc["involution"]),
        tuple(doc["incidence"]),
        orientation=tuple(doc["orientation"]) if "orientation" in doc else None,
        decorations=decorations,
    )
