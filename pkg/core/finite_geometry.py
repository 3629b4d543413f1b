"""
Finite geometry
GF(t) arithmetic tables, the projective plane PG(2, t), Brown polarity
graphs and point-line incidence graphs
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from .clauses import ClauseReport
from .graph import Graph, build_graph, is_c4_free


class FieldError(Exception):
    """Base class for finite-field errors"""
    pass


class NotPrimePower(FieldError):
    """The requested order is not a prime power"""
    pass


class Unsupported(FieldError):
    """The requested order is beyond the built-in polynomial table"""
    pass


MAX_ORDER = 64

# Monic irreducible polynomials, coefficients from x^0 upward
IRREDUCIBLE: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),               # x^2 + x + 1
    8: (1, 1, 0, 1),            # x^3 + x + 1
    16: (1, 1, 0, 0, 1),        # x^4 + x + 1
    32: (1, 0, 1, 0, 0, 1),     # x^5 + x^2 + 1
    64: (1, 1, 0, 0, 0, 0, 1),  # x^6 + x + 1
    9: (1, 0, 1),               # x^2 + 1
    27: (1, 2, 0, 1),           # x^3 + 2x + 1
    25: (2, 0, 1),              # x^2 + 2
    49: (1, 0, 1),              # x^2 + 1
}


def prime_power(t: int) -> Tuple[int, int]:
    """
    (p, e) with t = p^e.

    Raises:
        NotPrimePower
    """
    if t < 2:
        raise NotPrimePower(f"{t} is not a prime power")
    factors = factorint(t)
    if len(factors) != 1:
        raise NotPrimePower(f"{t} is not a prime power")
    (p, e), = factors.items()
    return int(p), int(e)


class GaloisField:
    """
    GF(t) with elements encoded as integers 0..t-1: the polynomial
    c_0 + c_1 x + ... maps to c_0 + c_1 p + c_2 p^2 + ...
    0 and 1 are the field's zero and one.

    Example:
        >>> F = GaloisField(5)
        >>> F.inv(2)
        3
    """

    def __init__(self, t: int):
        p, e = prime_power(t)
        if t > MAX_ORDER:
            raise Unsupported(f"fields of order {t} > {MAX_ORDER} are not supported")
        self.order = t
        self.p = p
        self.e = e
        self.modulus: Optional[Tuple[int, ...]] = IRREDUCIBLE.get(t) if e > 1 else None

        elements = np.arange(t)
        coeffs = [self._digits(a) for a in range(t)]
        self.add_table = np.array(
            [[self._encode([(x + y) % p for x, y in zip(ca, cb)]) for cb in coeffs] for ca in coeffs],
            dtype=np.int64,
        )
        self.mul_table = np.array(
            [[self._encode(self._poly_mul(ca, cb)) for cb in coeffs] for ca in coeffs],
            dtype=np.int64,
        )
        self.neg_table = np.array([self._encode([(-x) % p for x in c]) for c in coeffs], dtype=np.int64)
        self.inv_table = np.zeros(t, dtype=np.int64)
        for a in elements[1:]:
            self.inv_table[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])

    # ---- encoding ----

    def _digits(self, a: int) -> List[int]:
        digits = []
        for _ in range(self.e):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def _encode(self, digits: Sequence[int]) -> int:
        value = 0
        for c in reversed(digits):
            value = value * self.p + c
        return value

    def _poly_mul(self, a: Sequence[int], b: Sequence[int]) -> List[int]:
        p = self.p
        product = [0] * (2 * self.e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] = (product[i + j] + x * y) % p
        if self.modulus is not None:
            # reduce by the monic modulus from the top degree down
            for d in range(len(product) - 1, self.e - 1, -1):
                c = product[d]
                if c:
                    for i, m in enumerate(self.modulus):
                        product[d - self.e + i] = (product[d - self.e + i] - c * m) % p
        return product[: self.e]

    # ---- arithmetic ----

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value % self.order)

    def elements(self) -> List["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.order)]

    def __repr__(self) -> str:
        return f"GaloisField({self.order})"


@lru_cache(maxsize=None)
def field(t: int) -> GaloisField:
    """Cached GF(t) handle."""
    return GaloisField(t)


@dataclass(frozen=True)
class FieldElement:
    field: GaloisField
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise FieldError(f"{self.value} is not an element of GF({self.field.order})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldError("elements of different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.order, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF{self.field.order}({self.value})"


# ============================================
# PG(2, t)
# ============================================

@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """Normalised coordinates: the first nonzero entry is 1."""
    coords: Tuple[int, int, int]


def projective_points(t: int) -> List[ProjectivePoint]:
    """The t^2 + t + 1 normalised triples, sorted lexicographically."""
    F = field(t)
    q = F.order
    points = [(0, 0, 1)]
    points += [(0, 1, c) for c in range(q)]
    points += [(1, b, c) for b in range(q) for c in range(q)]
    return [ProjectivePoint(p) for p in sorted(points)]


def dot(t: int, x: ProjectivePoint, y: ProjectivePoint) -> int:
    F = field(t)
    s = 0
    for a, b in zip(x.coords, y.coords):
        s = F.add(s, F.mul(a, b))
    return s


def is_self_orthogonal(t: int, x: ProjectivePoint) -> bool:
    return dot(t, x, x) == 0


def _dot_matrix(t: int) -> np.ndarray:
    F = field(t)
    coords = np.array([p.coords for p in projective_points(t)], dtype=np.int64)
    mul, add = F.mul_table, F.add_table
    terms = [mul[coords[:, i][:, None], coords[:, i][None, :]] for i in range(3)]
    return add[add[terms[0], terms[1]], terms[2]]


def brown_graph(t: int) -> Graph:
    """
    Polarity graph of PG(2, t): points adjacent when orthogonal. Absolute
    (self-orthogonal) points get no loop, so they have degree t.
    """
    products = _dot_matrix(t)
    n = products.shape[0]
    rows, cols = np.nonzero(products == 0)
    return build_graph([(int(u), int(v)) for u, v in zip(rows, cols) if u < v], n)


def absolute_points(t: int) -> List[int]:
    """Vertex ids of brown_graph(t) whose point is self-orthogonal."""
    products = _dot_matrix(t)
    return [int(v) for v in np.flatnonzero(np.diag(products) == 0)]


def projective_lines(t: int) -> List[Tuple[int, ...]]:
    """Line j (dual triple j) as the sorted ids of its t+1 points."""
    products = _dot_matrix(t)
    return [tuple(int(v) for v in np.flatnonzero(products[:, j] == 0)) for j in range(products.shape[0])]


def pg2_incidence_graph(t: int) -> Graph:
    """
    Point-line incidence graph of PG(2, t): points 0..N-1, lines N..2N-1
    (line j is the dual of point j). (t+1)-regular, girth 6, order 2N.
    """
    products = _dot_matrix(t)
    n = products.shape[0]
    points, lines = np.nonzero(products == 0)
    return build_graph([(int(p), n + int(l)) for p, l in zip(points, lines)], 2 * n)


# ============================================
# Brown-graph properties
# ============================================

def order_to_t(n: int) -> Optional[int]:
    """t with t^2 + t + 1 = n, or None."""
    t = 1
    while t * t + t + 1 < n:
        t += 1
    return t if t * t + t + 1 == n else None


def brown_properties(g: Graph, t: Optional[int] = None,
                     absolute: Optional[Sequence[int]] = None) -> ClauseReport:
    """
    Check the polarity-graph properties on any graph.

    Length-two paths are counted in the polarity graph with loops at the
    absolute vertices: a loop at x adds the path x-x-y for every neighbour y.

    Args:
        t: plane order (inferred from the order when omitted)
        absolute: ids of the self-orthogonal vertices; defaults to the
            vertices of degree t

    Returns:
        ClauseReport with clauses order, degrees, unique-two-path,
        c4-free, absolute-triangle-free
    """
    report = ClauseReport(subject="brown-properties")
    t = t if t is not None else order_to_t(g.n)
    report.info["t"] = t
    if t is None:
        report.add("order", False, detail=f"{g.n} is not of the form t^2 + t + 1")
        return report

    report.add("order", g.n == t * t + t + 1, detail=f"n={g.n}, t^2+t+1={t * t + t + 1}")

    low = [v for v in range(g.n) if g.degrees[v] == t]
    high = [v for v in range(g.n) if g.degrees[v] == t + 1]
    stray = [v for v in range(g.n) if g.degrees[v] not in (t, t + 1)]
    report.add(
        "degrees",
        len(low) == t + 1 and len(high) == t * t and not stray,
        counterexample=stray[:1] or None,
        detail=f"{len(low)} of degree {t}, {len(high)} of degree {t + 1}",
    )

    loops = set(absolute) if absolute is not None else set(low)
    adj = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        adj[u, v] = adj[v, u] = 1
    looped = np.zeros(g.n, dtype=np.int64)
    looped[list(loops)] = 1
    paths = adj @ adj + adj * looped[:, None] + adj * looped[None, :]
    np.fill_diagonal(paths, 1)
    bad = np.argwhere(paths != 1)
    report.add(
        "unique-two-path",
        bad.size == 0,
        counterexample=[int(x) for x in bad[0]] if bad.size else None,
        detail="exactly one length-two path between distinct vertices",
    )

    report.add("c4-free", is_c4_free(g))

    in_triangle = [
        x for x in sorted(loops)
        if any(g.has_edge(a, b) for a in g.adjacency[x] for b in g.adjacency[x] if a < b)
    ]
    report.add(
        "absolute-triangle-free",
        not in_triangle,
        counterexample=in_triangle[:1] or None,
        detail=f"{len(loops)} absolute vertices",
    )
    return report


__all__ = [
    "FieldError",
    "NotPrimePower",
    "Unsupported",
    "IRREDUCIBLE",
    "prime_power",
    "GaloisField",
    "FieldElement",
    "field",
    "ProjectivePoint",
    "projective_points",
    "projective_lines",
    "dot",
    "is_self_orthogonal",
    "absolute_points",
    "brown_graph",
    "pg2_incidence_graph",
    "order_to_t",
    "brown_properties",
]


if __name__ == "__main__":
    for t in (2, 3, 4, 5):
        b = brown_graph(t)
        print(f"B({t}): n={b.n}", brown_properties(b, t).passed)
