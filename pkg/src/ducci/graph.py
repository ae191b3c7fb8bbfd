"""Functional transition graphs of the Ducci map on budget-bounded spaces.

Nodes are all m^n tuples under the entry-major mixed-radix encoding
(x_1 most significant), so node index order is lexicographic tuple
order.  Every component is one cycle plus hanging trees; depths are
distances to the cycle and components are labeled by their smallest
node index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import DucciTuple, Modulus, ducci_step, iterate
from .dynamics import DEFAULT_STEP_BUDGET, len_per
from .errors import BudgetExceededError
from .predecessors import predecessors

DEFAULT_GRAPH_BUDGET = 1 << 20


def encode(u: DucciTuple) -> int:
    """Mixed-radix node index, x_1 most significant."""
    idx = 0
    m = u.modulus.m
    for e in u.entries:
        idx = idx * m + e
    return idx


def decode(modulus: Modulus, n: int, idx: int) -> DucciTuple:
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        idx, digits[i] = divmod(idx, modulus.m)
    return DucciTuple(modulus, tuple(digits))


@dataclass(frozen=True)
class ComponentSummary:
    """Shape of one component: cycle length, node count, the per-cycle-node
    tree size when the trees are uniform (None otherwise), max depth."""

    cycle_length: int
    node_count: int
    tree_size: int | None
    max_depth: int


@dataclass(frozen=True)
class TransitionGraph:
    modulus: Modulus
    n: int
    succ: np.ndarray
    component: np.ndarray
    depth: np.ndarray
    in_cycle: np.ndarray

    @property
    def size(self) -> int:
        return len(self.succ)

    def node(self, idx: int) -> DucciTuple:
        return decode(self.modulus, self.n, idx)


def build_graph(modulus: Modulus, n: int, budget: int = DEFAULT_GRAPH_BUDGET) -> TransitionGraph:
    """Materialize the full functional graph of Z_m^n.

    Successor array from the kernel backend; cycles found by in-degree
    peeling, depths by reverse BFS from the cycles, component labels by a
    sequential union-find relabeled to the smallest member index.
    """
    size = modulus.m**n
    if size > budget:
        raise BudgetExceededError(f"{size} nodes exceed graph budget {budget}")
    succ = _backend.successor_array(modulus.m, n)

    indeg = np.bincount(succ, minlength=size)
    queue = deque(np.flatnonzero(indeg == 0).tolist())
    while queue:
        v = succ[queue.popleft()]
        indeg[v] -= 1
        if indeg[v] == 0:
            queue.append(v)
    in_cycle = indeg > 0

    # Reverse adjacency in CSR form: predecessors of v are
    # order[starts[v]:starts[v+1]].
    order = np.argsort(succ, kind="stable")
    starts = np.zeros(size + 1, dtype=np.int64)
    np.cumsum(np.bincount(succ, minlength=size), out=starts[1:])

    depth = np.full(size, -1, dtype=np.int64)
    cycle_nodes = np.flatnonzero(in_cycle).tolist()
    depth[cycle_nodes] = 0
    queue = deque(cycle_nodes)
    while queue:
        v = queue.popleft()
        for p in order[starts[v] : starts[v + 1]].tolist():
            if depth[p] < 0:
                depth[p] = depth[v] + 1
                queue.append(p)

    parent = list(range(size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    succ_list = succ.tolist()
    for i in range(size):
        ra, rb = find(i), find(succ_list[i])
        if ra != rb:
            parent[ra] = rb
    label_of_root: dict[int, int] = {}
    component = np.empty(size, dtype=np.int64)
    for i in range(size):
        r = find(i)
        component[i] = label_of_root.setdefault(r, i)

    return TransitionGraph(
        modulus=modulus, n=n, succ=succ, component=component, depth=depth, in_cycle=in_cycle
    )


@dataclass(frozen=True)
class Component:
    """One connected component, collected by predecessor closure from a
    cycle; nodes in ascending lexicographic order."""

    modulus: Modulus
    n: int
    nodes: tuple[DucciTuple, ...]
    depth: dict
    cycle: frozenset

    @property
    def summary(self) -> ComponentSummary:
        cycle_length = len(self.cycle)
        node_count = len(self.nodes)
        max_depth = max(self.depth.values())
        tree_counts: dict[DucciTuple, int] = {}
        for u in self.nodes:
            entry = iterate(u, self.depth[u])
            tree_counts[entry] = tree_counts.get(entry, 0) + 1
        sizes = set(tree_counts.values())
        tree_size = sizes.pop() if len(sizes) == 1 and len(tree_counts) == cycle_length else None
        return ComponentSummary(
            cycle_length=cycle_length,
            node_count=node_count,
            tree_size=tree_size,
            max_depth=max_depth,
        )


def component_of(
    u: DucciTuple,
    budget: int = DEFAULT_GRAPH_BUDGET,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> Component:
    """All nodes whose forward orbit meets u's cycle, found by reverse BFS
    with the preimage solver.  Never materializes the full space."""
    info = len_per(u, step_budget)
    w = iterate(u, info.len)
    cycle = [w]
    cur = ducci_step(w)
    while cur != w:
        cycle.append(cur)
        if len(cycle) > budget:
            raise BudgetExceededError(f"cycle alone exceeds component budget {budget}")
        cur = ducci_step(cur)

    depth = {c: 0 for c in cycle}
    layer = list(cycle)
    while layer:
        nxt = []
        for v in layer:
            ps = predecessors(v, list_cap=budget)
            if ps.listing_suppressed:
                raise BudgetExceededError(
                    f"{ps.count} predecessors of one node exceed component budget {budget}"
                )
            for p in ps.solutions:
                if p not in depth:
                    depth[p] = depth[v] + 1
                    nxt.append(p)
        if len(depth) > budget:
            raise BudgetExceededError(f"component exceeds budget {budget}")
        layer = nxt

    nodes = tuple(sorted(depth, key=lambda t: t.entries))
    return Component(
        modulus=u.modulus, n=u.n, nodes=nodes, depth=depth, cycle=frozenset(cycle)
    )


def _dot_lines(items) -> str:
    # items: iterable of (tuple_text, in_cycle, succ_text), already ordered.
    lines = ["digraph ducci {"]
    edges = []
    for text, in_cycle, succ_text in items:
        attr = " [shape=doublecircle]" if in_cycle else ""
        lines.append(f'  "({text})"{attr};')
        edges.append(f'  "({text})" -> "({succ_text})";')
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot(source, out=None) -> str:
    """Render a TransitionGraph or Component (or an iterable of tuples) as
    deterministic DOT text: nodes in lexicographic order, one successor
    edge per node, cycle nodes marked doublecircle.

    ``out`` may be a path or a writable file object; the text is returned
    either way.
    """
    items = []
    if isinstance(source, TransitionGraph):
        for idx in range(source.size):
            items.append(
                (
                    source.node(idx).to_text(),
                    bool(source.in_cycle[idx]),
                    source.node(int(source.succ[idx])).to_text(),
                )
            )
    elif isinstance(source, Component):
        for u in source.nodes:
            items.append((u.to_text(), source.depth[u] == 0, ducci_step(u).to_text()))
    else:
        nodes = sorted(source, key=lambda t: t.entries)
        for u in nodes:
            items.append((u.to_text(), len_per(u).len == 0, ducci_step(u).to_text()))
    text = _dot_lines(items)
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w") as fh:
                fh.write(text)
    return text
