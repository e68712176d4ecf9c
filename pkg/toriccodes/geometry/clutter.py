import json
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..errors import ClutterError

ExponentVector = Tuple[int, ...]


class Clutter:
    """An antichain of edges over the vertex set {1, ..., n}."""

    def __init__(self, n: int, edges: Sequence[Tuple[int, ...]]):
        self.n = n
        self.edges: Tuple[Tuple[int, ...], ...] = tuple(tuple(e) for e in edges)

    @property
    def s(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Clutter) and (self.n, self.edges) == (other.n, other.edges)

    def __repr__(self) -> str:
        return f"Clutter(n={self.n}, edges={list(self.edges)})"

    def to_json(self) -> Dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def bipartition(self) -> Optional[Tuple[int, int]]:
        """(k, l) when the clutter is the complete bipartite graph K_{k,l} on all n vertices."""
        if any(len(e) != 2 for e in self.edges):
            return None
        neighbours: Dict[int, set] = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.edges:
            neighbours[a].add(b)
            neighbours[b].add(a)
        if any(not adj for adj in neighbours.values()):
            return None
        left = {1}
        right = set(neighbours[1])
        for v in right:
            left |= neighbours[v]
        if left & right or len(left) + len(right) != self.n:
            return None
        if any(neighbours[v] != right for v in left) or any(neighbours[v] != left for v in right):
            return None
        return len(left), len(right)


def clutter_validate(n: int, edges: Iterable[Iterable[int]]) -> Clutter:
    stored: List[Tuple[int, ...]] = []
    for edge in edges:
        vertices = tuple(sorted(set(int(v) for v in edge)))
        if not vertices:
            raise ClutterError("edges must be nonempty", {"edge": list(vertices)})
        out_of_range = [v for v in vertices if not 1 <= v <= n]
        if out_of_range:
            raise ClutterError(f"vertex {out_of_range[0]} is outside [1, {n}]", {"edge": list(vertices)})
        if vertices in stored:
            raise ClutterError(f"duplicate edge {list(vertices)}", {"edge": list(vertices)})
        stored.append(vertices)
    if not stored:
        raise ClutterError("a clutter needs at least one edge")
    for i, a in enumerate(stored):
        for j, b in enumerate(stored):
            if i != j and set(a) < set(b):
                raise ClutterError(
                    f"edge {list(a)} is contained in edge {list(b)}",
                    {"contained": list(a), "container": list(b)},
                )
    return Clutter(n, stored)


def characteristic_vectors(c: Clutter) -> List[ExponentVector]:
    return [tuple(1 if v in edge else 0 for v in range(1, c.n + 1)) for edge in c.edges]


def complete_bipartite_clutter(k: int, l: int) -> Clutter:
    if k < 1 or l < 1:
        raise ClutterError(f"K_{{{k},{l}}} needs both sides nonempty")
    return clutter_validate(k + l, [(i, k + j) for i in range(1, k + 1) for j in range(1, l + 1)])


def singleton_clutter(s: int) -> Clutter:
    """The clutter {1}, ..., {s}; its toric set is the whole projective torus."""
    return clutter_validate(s, [(i,) for i in range(1, s + 1)])


def load_clutter(source: Union[str, Path, Dict]) -> Clutter:
    if isinstance(source, dict):
        data = source
    else:
        try:
            data = json.loads(Path(source).read_text())
        except (OSError, ValueError) as e:
            raise ClutterError(f"cannot read clutter file {source}: {e}")
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ClutterError("clutter JSON must be an object with 'n' and 'edges'")
    return clutter_validate(int(data["n"]), data["edges"])
