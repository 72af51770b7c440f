"""The two-party equality gadget graph and its color-separation property."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..exceptions import InputError, ParameterError
from ..graph import AttributedGraph, ColorVector
from ..utils import get_logger, make_rng
from ..wl import verify_wl_coloring

logger = get_logger()

SIDES = ("A", "B")


def pair_index(i: int, j: int, n: int) -> int:
    """The bijection ``c((i, j)) = (i - 1) n + j`` on 1-based pairs."""
    return (i - 1) * n + j


def pair_of(k: int, n: int) -> tuple[int, int]:
    """Inverse of ``pair_index``: ``(ceil(k / n), (k - 1) mod n + 1)``."""
    return -(-k // n), (k - 1) % n + 1


@dataclass(frozen=True)
class GadgetSpec:
    """Scale ``n``, edge budget ``m`` and the two ``m``-bit inputs.

    ``path_len`` subdivides the edge between the two x nodes with that many
    extra nodes, stretching the distance between the sides.
    """

    n: int
    m: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    path_len: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(bit) for bit in self.a))
        object.__setattr__(self, "b", tuple(int(bit) for bit in self.b))
        if self.n < 1:
            raise ParameterError(f"Gadget scale n must be at least 1, got {self.n}")
        if not self.n <= self.m <= self.n**2:
            raise ParameterError(f"Need n <= m <= n^2, got n={self.n}, m={self.m}")
        if len(self.a) != self.m or len(self.b) != self.m:
            raise ParameterError(f"Inputs must have {self.m} bits, got {len(self.a)} and {len(self.b)}")
        if any(bit not in (0, 1) for bit in self.a + self.b):
            raise ParameterError("Inputs must be bitstrings")
        if self.path_len < 0:
            raise ParameterError(f"Path length must be nonnegative, got {self.path_len}")

    @property
    def k(self) -> int:
        """Number of w nodes per side, ``ceil(m / n)``."""
        return -(-self.m // self.n)

    @property
    def node_count(self) -> int:
        return 4 * self.n + 2 * self.k + 2 + self.path_len

    @property
    def edge_count(self) -> int:
        return 2 * (2 * self.n - 1) + 2 * self.k + 1 + 2 * self.m + self.path_len

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "a": "".join(map(str, self.a)),
            "b": "".join(map(str, self.b)),
            "path_len": self.path_len,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> GadgetSpec:
        return cls(
            n=int(data["n"]),
            m=int(data["m"]),
            a=tuple(int(c) for c in data["a"]),
            b=tuple(int(c) for c in data["b"]),
            path_len=int(data.get("path_len", 0)),
        )


def random_spec(n: int, m: int, seed: int, equal: bool = False, path_len: int = 0) -> GadgetSpec:
    """Draw ``a`` (and ``b`` unless ``equal``) uniformly from the stream ``(seed, n, m)``."""
    rng = make_rng(seed, n, m)
    a = tuple(rng.integers(0, 2, size=m).tolist())
    b = a if equal else tuple(rng.integers(0, 2, size=m).tolist())
    logger.debug(f"Gadget inputs drawn with seed={seed} n={n} m={m} equal={equal}")
    return GadgetSpec(n, m, a, b, path_len)


@dataclass(frozen=True)
class GadgetGraph:
    """A built gadget: the graph, where each role sits, and the initial colors.

    Role tuples are indexed by side (0 for A, 1 for B); ``w``, ``u`` and
    ``v`` list nodes in index order ``1..k`` or ``1..n``.
    """

    spec: GadgetSpec
    graph: AttributedGraph
    colors: ColorVector
    x: tuple[int, int]
    w: tuple[tuple[int, ...], tuple[int, ...]]
    u: tuple[tuple[int, ...], tuple[int, ...]]
    v: tuple[tuple[int, ...], tuple[int, ...]]
    path: tuple[int, ...] = field(default_factory=tuple)

    def role_map(self) -> dict[str, Any]:
        """JSON-ready mapping of role names to node indices."""
        roles: dict[str, Any] = {"spec": self.spec.to_dict(), "path": list(self.path)}
        for name in ("x", "w", "u", "v"):
            value = getattr(self, name)
            roles[name] = {side: (value[s] if name == "x" else list(value[s])) for s, side in enumerate(SIDES)}
        return roles


def build_eq_gadget(spec: GadgetSpec) -> GadgetGraph:
    """Build the hard instance for ``spec``.

    Each side holds ``x``, ``w_1..w_k`` joined to ``x``, and a path
    ``u_1 .. u_n, v_n .. v_1``. Bit ``k`` with ``(i, j) = pair_of(k)`` adds
    ``(w_i, u_j)`` when it is 0 and ``(w_i, v_j)`` when it is 1. Colors:
    x nodes 0, ``u_i`` gets ``i``, ``v_i`` gets ``n + i``, ``w_i`` gets
    ``2n + i``. Path node ``t`` (1-based from the A side) gets
    ``2n + k + 1 + min(t, path_len + 1 - t)``, keeping the two sides mirror images.
    """
    n, k = spec.n, spec.k
    side_size = 1 + k + 2 * n
    edges: list[tuple[int, int]] = []
    colors = [0] * spec.node_count
    xs, ws, us, vs = [], [], [], []
    for s, bits in enumerate((spec.a, spec.b)):
        base = s * side_size
        x = base
        w = tuple(base + 1 + i for i in range(k))
        u = tuple(base + 1 + k + i for i in range(n))
        v = tuple(base + 1 + k + n + i for i in range(n))
        edges.extend((x, wi) for wi in w)
        edges.extend((u[i], u[i + 1]) for i in range(n - 1))
        edges.extend((v[i], v[i + 1]) for i in range(n - 1))
        edges.append((u[n - 1], v[n - 1]))
        for bit_no, bit in enumerate(bits, start=1):
            i, j = pair_of(bit_no, n)
            edges.append((w[i - 1], (v if bit else u)[j - 1]))
        for i in range(n):
            colors[u[i]] = i + 1
            colors[v[i]] = n + i + 1
        for i in range(k):
            colors[w[i]] = 2 * n + i + 1
        xs.append(x)
        ws.append(w)
        us.append(u)
        vs.append(v)

    path = tuple(2 * side_size + t for t in range(spec.path_len))
    chain = [xs[0], *path, xs[1]]
    edges.extend(zip(chain, chain[1:]))
    for t, node in enumerate(path, start=1):
        colors[node] = 2 * n + k + 1 + min(t, spec.path_len + 1 - t)

    graph = AttributedGraph.from_edges(spec.node_count, edges)
    if graph.m != spec.edge_count:
        raise InputError(f"Gadget has {graph.m} edges, expected {spec.edge_count}")
    logger.debug(f"Built gadget n={n} m={spec.m}: {graph.n} nodes, {graph.m} edges")
    return GadgetGraph(
        spec=spec,
        graph=graph,
        colors=tuple(colors),
        x=(xs[0], xs[1]),
        w=(ws[0], ws[1]),
        u=(us[0], us[1]),
        v=(vs[0], vs[1]),
        path=path,
    )


def disagreeing_pairs(gg: GadgetGraph, y: Sequence[int]) -> list[int]:
    """1-based indices ``i`` where ``y`` colors ``w_i`` differently on the two sides."""
    return [i + 1 for i, (wa, wb) in enumerate(zip(*gg.w)) if y[wa] != y[wb]]


def verify_gadget_property(gg: GadgetGraph, y: Sequence[int]) -> bool:
    """Whether ``y`` gives every pair ``w_i^A, w_i^B`` the same color.

    Raises:
        InputError: If ``y`` is not a valid WL refinement of the gadget colors
    """
    if not verify_wl_coloring(gg.graph, gg.colors, y):
        raise InputError("Coloring is not a WL refinement of the gadget's initial colors")
    return not disagreeing_pairs(gg, y)


def biconditional_holds(gg: GadgetGraph, y: Sequence[int]) -> bool:
    """``a == b`` exactly when the w-node colors agree across the sides."""
    return (gg.spec.a == gg.spec.b) == verify_gadget_property(gg, y)


def expected_disagreements(spec: GadgetSpec) -> list[int]:
    """Pairs ``i`` whose bits differ somewhere in block ``i``."""
    return sorted({pair_of(t + 1, spec.n)[0] for t in range(spec.m) if spec.a[t] != spec.b[t]})


def mirror_permutation(gg: GadgetGraph) -> list[int]:
    """Node permutation exchanging the two sides; an automorphism when ``a == b``."""
    perm = list(range(gg.graph.n))
    for name in ("w", "u", "v"):
        side_a, side_b = getattr(gg, name)
        for p, q in zip(side_a, side_b):
            perm[p], perm[q] = q, p
    xa, xb = gg.x
    perm[xa], perm[xb] = xb, xa
    for t, node in enumerate(gg.path):
        perm[node] = gg.path[len(gg.path) - 1 - t]
    return perm


def is_automorphism(g: AttributedGraph, perm: Sequence[int]) -> bool:
    return {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges} == set(g.edges)

