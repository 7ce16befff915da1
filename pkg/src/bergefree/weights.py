"""Weight functions on hyperedge sizes and the thresholded weight split."""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass, field
from typing import Callable

from .hypergraph import Hypergraph


class WeightUndefined(ValueError):
    """The weight function has no value at a size that occurs in the hypergraph."""


_BINOPS: dict[type, Callable[[int, int], int]] = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
    ast.Pow: operator.pow,
}
_FUNCS: dict[str, Callable[..., int]] = {
    "max": max,
    "min": min,
    "abs": abs,
    "comb": math.comb,
    "isqrt": math.isqrt,
}


def _eval_expr(node: ast.AST, m: int) -> int:
    if isinstance(node, ast.Expression):
        return _eval_expr(node.body, m)
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if isinstance(node, ast.Name) and node.id == "m":
        return m
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        return _BINOPS[type(node.op)](_eval_expr(node.left, m), _eval_expr(node.right, m))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval_expr(node.operand, m)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCS
        and not node.keywords
    ):
        return _FUNCS[node.func.id](*(_eval_expr(a, m) for a in node.args))
    raise ValueError(f"unsupported element in weight expression: {ast.dump(node)}")


@dataclass(frozen=True)
class WeightFunction:
    """A map from hyperedge size ``m >= 1`` to a non-negative integer.

    ``kind`` is one of ``size``, ``size_squared``, ``size_minus`` (uses ``c``,
    clamped at zero), ``table`` (uses ``table``) or ``custom`` (integer
    arithmetic expression in ``m``, e.g. ``"m*m - m"`` or ``"comb(m, 2)"``).
    """

    kind: str = "size"
    c: int = 0
    table: tuple[tuple[int, int], ...] = ()
    expression: str = ""
    _tree: ast.Expression | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in {"size", "size_squared", "size_minus", "table", "custom"}:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind == "size_minus" and self.c < 0:
            raise ValueError("size_minus offset must be non-negative")
        if self.kind == "table":
            for m, w in self.table:
                if m < 1 or w < 0:
                    raise ValueError(f"invalid table entry ({m}, {w})")
            object.__setattr__(self, "table", tuple(sorted(dict(self.table).items())))
        if self.kind == "custom":
            object.__setattr__(self, "_tree", ast.parse(self.expression, mode="eval"))

    @classmethod
    def size(cls) -> WeightFunction:
        return cls("size")

    @classmethod
    def size_squared(cls) -> WeightFunction:
        return cls("size_squared")

    @classmethod
    def size_minus(cls, c: int) -> WeightFunction:
        return cls("size_minus", c=c)

    @classmethod
    def from_table(cls, pairs) -> WeightFunction:
        return cls("table", table=tuple((int(m), int(w)) for m, w in pairs))

    @classmethod
    def custom(cls, expression: str) -> WeightFunction:
        return cls("custom", expression=expression)

    @classmethod
    def parse(cls, spec: str) -> WeightFunction:
        """Parse the textual form used on the command line.

        ``size``, ``size2``, ``minus:C``, ``table:2=1,3=5``, ``expr:m*m-1``.
        """
        spec = spec.strip()
        if spec in {"size", "m"}:
            return cls.size()
        if spec in {"size2", "size_squared", "m^2", "m**2"}:
            return cls.size_squared()
        head, _, rest = spec.partition(":")
        if head in {"minus", "size_minus"} and rest:
            return cls.size_minus(int(rest))
        if head == "table" and rest:
            pairs = []
            for item in rest.split(","):
                m, _, w = item.partition("=")
                pairs.append((int(m), int(w)))
            return cls.from_table(pairs)
        if head == "expr" and rest:
            return cls.custom(rest)
        raise ValueError(f"cannot parse weight function {spec!r}")

    def __str__(self) -> str:
        if self.kind == "size":
            return "size"
        if self.kind == "size_squared":
            return "size2"
        if self.kind == "size_minus":
            return f"minus:{self.c}"
        if self.kind == "table":
            return "table:" + ",".join(f"{m}={w}" for m, w in self.table)
        return f"expr:{self.expression}"

    def __call__(self, m: int) -> int:
        if m < 1:
            raise WeightUndefined(f"weight is defined on positive sizes, got {m}")
        if self.kind == "size":
            return m
        if self.kind == "size_squared":
            return m * m
        if self.kind == "size_minus":
            return max(m - self.c, 0)
        if self.kind == "table":
            value = dict(self.table).get(m)
            if value is None:
                raise WeightUndefined(f"weight table has no entry for size {m}")
            return value
        value = _eval_expr(self._tree, m)
        if not isinstance(value, int) or value < 0:
            raise WeightUndefined(f"expression {self.expression!r} gives {value!r} at size {m}")
        return value


@dataclass(frozen=True)
class WeightReport:
    total: int
    below_threshold: int
    above_threshold: int
    threshold: int


def weigh(H: Hypergraph, w: WeightFunction, threshold: int) -> WeightReport:
    """Total weight, split into hyperedges with ``|h| <= threshold`` and the rest."""
    if threshold < 0:
        raise ValueError("threshold must be non-negative")
    below = above = 0
    for m in H.sizes:
        if m <= threshold:
            below += w(m)
        else:
            above += w(m)
    return WeightReport(below + above, below, above, threshold)


def sqrt_threshold(n: int) -> int:
    """``ceil(sqrt(n))``, the split point used for the weight decomposition."""
    r = math.isqrt(n)
    return r if r * r == n else r + 1
