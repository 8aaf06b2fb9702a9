"""The homological representation of the 3-braid group into SL(2,Z).

The two generators act on the first homology of the once-punctured torus by

    x  ->  [[1, 1], [0, 1]]          y  ->  [[1, 0], [-1, 1]]

and everything downstream (first homology of the branched double cover,
determinant of the closure, conjugacy-type analysis) is exact integer
arithmetic on 2x2 matrices.  Entries grow exponentially in the word length,
so all arithmetic uses Python's unbounded integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .words import BraidWord


class NotParabolic(ValueError):
    pass


@dataclass(frozen=True)
class SL2Matrix:
    """An integer matrix [[a, b], [c, d]] of determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def minus_identity(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The (in general singular) integer matrix M - I."""
        return ((self.a - 1, self.b), (self.c, self.d - 1))

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])


IDENTITY = SL2Matrix(1, 0, 0, 1)

_GENERATOR_MATRIX = {
    ("x", 1): SL2Matrix(1, 1, 0, 1),
    ("x", -1): SL2Matrix(1, -1, 0, 1),
    ("y", 1): SL2Matrix(1, 0, -1, 1),
    ("y", -1): SL2Matrix(1, 0, 1, 1),
}


def image(w: BraidWord) -> SL2Matrix:
    """Product of the per-letter matrices, multiplicative over concatenation."""
    result = IDENTITY
    for letter in w:
        result = result * _GENERATOR_MATRIX[letter]
    return result


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group Z^free_rank + Z/d1 + Z/d2 + ...

    Torsion coefficients satisfy the divisibility chain d1 | d2 | ... and
    every di is at least 2.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for earlier, later in zip(self.torsion, self.torsion[1:]):
            if later % earlier:
                raise ValueError(f"torsion {self.torsion} violates divisibility")
        if any(d < 2 for d in self.torsion):
            raise ValueError(f"torsion coefficients must be >= 2: {self.torsion}")

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def smith_normal_form(m) -> AbelianGroup:
    """The cokernel of an integer 2x2 matrix, as an abelian group.

    For 2x2 matrices the invariant factors are gcd-of-entries and
    |det| / gcd-of-entries, so no row reduction is needed.
    """
    (a, b), (c, d) = m
    det = abs(a * d - b * c)
    entry_gcd = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)))
    if det:
        diagonal = (entry_gcd, det // entry_gcd)
    elif entry_gcd:
        diagonal = (entry_gcd, 0)
    else:
        diagonal = (0, 0)
    return AbelianGroup(
        free_rank=sum(1 for e in diagonal if e == 0),
        torsion=tuple(e for e in diagonal if e >= 2),
    )


def h1_branched_cover(w: BraidWord) -> AbelianGroup:
    """First homology of the double cover of S^3 branched over the closure.

    This is the cokernel of (image(w) - I) acting on the homology of the
    fiber torus.
    """
    return smith_normal_form(image(w).minus_identity())


def determinant(w: BraidWord) -> int:
    """|det(image(w) - I)| = order of H1 of the branched double cover.

    Zero signals positive first Betti number (infinite homology).
    """
    (a, b), (c, d) = image(w).minus_identity()
    return abs(a * d - b * c)


CENTRAL = "Central"
ELLIPTIC = "Elliptic"
PARABOLIC = "Parabolic"
HYPERBOLIC = "Hyperbolic"


@dataclass(frozen=True)
class TraceClass:
    """Conjugacy type in PSL(2,Z) together with the trace-normalizing sign.

    epsilon * M has nonnegative trace (and equals +I for central matrices).
    """

    kind: str
    epsilon: int


def trace_class(m: SL2Matrix) -> TraceClass:
    t = m.trace
    if m == IDENTITY or m == -IDENTITY:
        return TraceClass(CENTRAL, 1 if m == IDENTITY else -1)
    if abs(t) <= 1:
        return TraceClass(ELLIPTIC, -1 if t < 0 else 1)
    if abs(t) == 2:
        return TraceClass(PARABOLIC, 1 if t > 0 else -1)
    return TraceClass(HYPERBOLIC, 1 if t > 0 else -1)


def _primitive_kernel_vector(k) -> tuple[int, int]:
    """A primitive integer vector spanning the kernel of a singular, nonzero
    2x2 matrix given as ((a, b), (c, d))."""
    (a, b), (c, d) = k
    row = (a, b) if (a, b) != (0, 0) else (c, d)
    v = (row[1], -row[0])
    g = gcd(abs(v[0]), abs(v[1]))
    return (v[0] // g, v[1] // g)


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def parabolic_invariant(m: SL2Matrix) -> tuple[int, int]:
    """Complete SL(2,Z)-conjugacy invariant (epsilon, k) of a parabolic matrix:
    epsilon * m is conjugate to [[1, 0], [-k, 1]] and k is unique.

    Computed by extracting the primitive fixed vector v of epsilon*m,
    completing (v, u) to a determinant-one basis, and reading off the
    coefficient in  (epsilon*m)u = u + k v.
    """
    if trace_class(m).kind != PARABOLIC:
        raise NotParabolic(f"{m} is not parabolic")
    epsilon = 1 if m.trace > 0 else -1
    n = m if epsilon == 1 else -m
    v = _primitive_kernel_vector(n.minus_identity())
    g, s, t = _extended_gcd(v[0], v[1])
    assert g == 1
    u = (-t, s)  # det of columns (v, u) is v0*s - v1*(-t) = 1
    nu = n.apply(u)
    w = (nu[0] - u[0], nu[1] - u[1])
    k = w[0] // v[0] if v[0] else w[1] // v[1]
    assert w == (k * v[0], k * v[1])
    return epsilon, k
