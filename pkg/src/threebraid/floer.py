"""Graded Z[U]-module invariants of the branched double covers.

A ``GradedModule`` is a formal sum of towers T+_d (one copy of
Z[U,U^-1]/(U Z[U]) with bottom element in grading d; U drops grading by 2)
and finite free summands Z^rank in a single grading.  All gradings are exact
rationals with denominator dividing four.

The heavy lifting is done by two lookup tables: the modules of +-1/n- and
0-surgeries on the three genus-one fibered knots in S^3 (the two trefoils
and the figure-eight).  Every double cover of a 3-braid closure with finite
first homology is such a surgery on the binding of its fibered structure, so
its module in the distinguished self-conjugate spin-c structure is a shifted
table row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import homology, murasugi
from .murasugi import Family1, Family2, MurasugiForm

Grading = Fraction


class PositiveB1(ValueError):
    """The double cover has positive first Betti number (determinant zero)."""


class B1NotOne(ValueError):
    """The associated torus bundle does not have first Betti number one."""


class NotLSpace(ValueError):
    pass


@dataclass(frozen=True)
class GradedModule:
    """Towers T+ by bottom grading plus free summands (rank, grading).

    Equality is multiset equality: the constructor sorts the towers, merges
    free summands in the same grading and drops rank-zero ones.
    """

    towers: tuple[Grading, ...]
    frees: tuple[tuple[int, Grading], ...] = ()
    absolute: bool = True

    def __post_init__(self):
        object.__setattr__(self, "towers", tuple(sorted(self.towers)))
        merged: dict[Grading, int] = {}
        for rank, grading in self.frees:
            if rank < 0:
                raise ValueError(f"negative rank {rank}")
            merged[grading] = merged.get(grading, 0) + rank
        object.__setattr__(
            self, "frees",
            tuple(sorted((rank, grading) for grading, rank in merged.items()
                         if rank)))

    @property
    def is_bare_tower(self) -> bool:
        return len(self.towers) == 1 and not self.frees

    def __str__(self) -> str:
        parts = [f"T+_{{{g}}}" for g in self.towers]
        parts += [f"Z^{rank}_{{{g}}}" for rank, g in self.frees]
        suffix = "" if self.absolute else "  (relative grading only)"
        return (" + ".join(parts) if parts else "0") + suffix


def shift(module: GradedModule, q) -> GradedModule:
    """Add q to every grading, preserving ranks."""
    q = Fraction(q)
    return GradedModule(
        towers=tuple(g + q for g in module.towers),
        frees=tuple((rank, g + q) for rank, g in module.frees),
        absolute=module.absolute,
    )


def _module(towers, frees=()) -> GradedModule:
    return GradedModule(tuple(Fraction(g) for g in towers),
                        tuple((rank, Fraction(g)) for rank, g in frees))


RIGHT_TREFOIL_LIKE = "RightTrefoilLike"
LEFT_TREFOIL_LIKE = "LeftTrefoilLike"
FIGURE_EIGHT_LIKE = "FigureEightLike"

KNOT_TYPE_TAGS = (RIGHT_TREFOIL_LIKE, LEFT_TREFOIL_LIKE, FIGURE_EIGHT_LIKE)


def surgery_table(tag: str, n: int) -> GradedModule:
    """HF+ of 1/n-surgery on the model knot (n = 0 reads as S^3 itself)."""
    if tag == RIGHT_TREFOIL_LIKE:
        if n > 0:
            return _module([-2], [(n - 1, -2)])
        return _module([0], [(-n, -1)])
    if tag == LEFT_TREFOIL_LIKE:
        if n >= 0:
            return _module([0], [(n, 0)])
        return _module([2], [(-n - 1, 1)])
    if tag == FIGURE_EIGHT_LIKE:
        if n >= 0:
            return _module([0], [(n, -1)])
        return _module([0], [(-n, 0)])
    raise ValueError(f"unknown knot type tag {tag!r}")


def zero_surgery_table(tag: str) -> GradedModule:
    """HF+ of 0-surgery on the model knot, in its supporting spin-c structure."""
    if tag == RIGHT_TREFOIL_LIKE:
        return _module([Fraction(-1, 2), Fraction(-3, 2)])
    if tag == LEFT_TREFOIL_LIKE:
        return _module([Fraction(3, 2), Fraction(1, 2)])
    if tag == FIGURE_EIGHT_LIKE:
        return _module([Fraction(1, 2), Fraction(-1, 2)],
                       [(1, Fraction(-1, 2))])
    raise ValueError(f"unknown knot type tag {tag!r}")


# The weak-inequality rows of the surgery table meet at n = 0, where both
# must give HF+(S^3), a bare tower at grading zero.
assert surgery_table(FIGURE_EIGHT_LIKE, 0) == _module([0])
assert surgery_table(RIGHT_TREFOIL_LIKE, 0) == _module([0])
assert surgery_table(LEFT_TREFOIL_LIKE, 0) == _module([0])


def form_determinant(f: MurasugiForm) -> int:
    """Determinant of the closure of the model word of f."""
    return homology.determinant(murasugi.canonical_word(f))


def is_l_space(f: MurasugiForm) -> bool:
    """Whether the branched double cover has the simplest possible Floer
    homology (one tower per spin-c structure)."""
    if isinstance(f, Family1):
        return f.d in (-1, 0, 1)
    if isinstance(f, Family2):
        return f.d in (-1, 1)
    return f.d in (-1, 0, 1, 2)


def is_tight(f: MurasugiForm) -> bool:
    """Nonvanishing of the contact invariant of the compatible contact
    structure (tightness)."""
    if isinstance(f, Family2):
        return f.d > 0 or (f.d == 0 and f.m >= 0)
    return f.d > 0


def knot_type(f: MurasugiForm) -> str:
    """Which model knot the binding behaves like: the right trefoil when the
    contact structure is tight, the left trefoil when the inverse's is, and
    the figure-eight when both invariants vanish."""
    if is_tight(f):
        return RIGHT_TREFOIL_LIKE
    if is_tight(murasugi.mirror_form(f)):
        return LEFT_TREFOIL_LIKE
    return FIGURE_EIGHT_LIKE


def _assembly(f: MurasugiForm) -> tuple[str, int, Fraction]:
    """(table tag, surgery parameter n, grading shift) for the distinguished
    spin-c structure.  The cover is -1/k-surgery on the binding of a model
    fibered knot, and -1/k equals 1/(-k) in the tables."""
    if isinstance(f, Family1):
        total = sum(f.a)
        n_blocks = len(f.a)
        if f.d % 2:
            k = (f.d - 1) // 2
            return RIGHT_TREFOIL_LIKE, -k, Fraction(n_blocks + 4 - total, 4)
        k = f.d // 2
        return FIGURE_EIGHT_LIKE, -k, Fraction(n_blocks - total, 4)
    if isinstance(f, Family2):
        if f.d % 2 == 0:
            raise PositiveB1(
                f"{f} has determinant zero (b1 >= 1); no surgery description")
        k = (f.d - 1) // 2
        return RIGHT_TREFOIL_LIKE, -k, Fraction(f.m + 4, 4)
    if f.d % 2:
        k = (f.d - 1) // 2
        return RIGHT_TREFOIL_LIKE, -k, Fraction(f.m + 3, 4)
    k = f.d // 2
    return LEFT_TREFOIL_LIKE, -k, Fraction(f.m + 1, 4)


def hf_plus_s0(f: MurasugiForm) -> GradedModule:
    """HF+ of the branched double cover in the distinguished self-conjugate
    spin-c structure, with absolute rational gradings."""
    tag, n, delta = _assembly(f)
    return shift(surgery_table(tag, n), delta)


def correction_term(f: MurasugiForm) -> Grading:
    """d-invariant of the cover in the distinguished spin-c structure: the
    bottom grading of the tower of hf_plus_s0."""
    return min(hf_plus_s0(f).towers)


@dataclass(frozen=True)
class TorusBundleModules:
    """HF+ of the torus bundle obtained by capping the fiber and performing
    0-surgery on the binding.

    ``s0`` carries absolute gradings.  Each of the ``non_s0_count`` remaining
    torsion spin-c structures carries two towers whose bottoms sit 1 apart
    (recorded relatively in ``non_s0_relative``), and every spin-c structure
    evaluating nontrivially on the fiber has vanishing homology.
    """

    s0: GradedModule
    non_s0_count: int
    non_s0_relative: GradedModule
    fiber_structures_vanish: bool = True


def torus_bundle_hf(f: MurasugiForm) -> TorusBundleModules:
    determinant = form_determinant(f)
    if determinant == 0:
        raise B1NotOne(
            f"{f} has parabolic or central monodromy; the bundle's b1 is not 1")
    tag, _, delta = _assembly(f)
    return TorusBundleModules(
        s0=shift(zero_surgery_table(tag), delta),
        non_s0_count=determinant - 1,
        non_s0_relative=GradedModule(
            (Fraction(1, 2), Fraction(-1, 2)), (), absolute=False),
    )


@dataclass(frozen=True)
class HfkBindingProfile:
    """Knot Floer ranks of the binding in the distinguished spin-c structure.

    ``ranks`` lists the ranks at Alexander gradings (+1, 0, -1); ``arrows``
    the nontrivial rank-one differentials on the first page, as (source,
    target) Alexander gradings.  In each of the ``non_s0_count`` other
    structures the homology is a single copy in Alexander grading 0.  The
    spectral sequence collapses at the second page.
    """

    ranks: tuple[int, int, int]
    arrows: tuple[tuple[int, int], ...]
    non_s0_count: int
    collapses_at_second_page: bool = True


def hfk_binding(f: MurasugiForm) -> HfkBindingProfile:
    if not is_l_space(f):
        raise NotLSpace(f"{f} is not an L-space; the rank profile only "
                        "applies to L-space covers")
    tag = knot_type(f)
    non_s0 = form_determinant(f) - 1
    if tag == RIGHT_TREFOIL_LIKE:
        return HfkBindingProfile((1, 1, 1), ((0, -1),), non_s0)
    if tag == LEFT_TREFOIL_LIKE:
        return HfkBindingProfile((1, 1, 1), ((1, 0),), non_s0)
    return HfkBindingProfile((1, 3, 1), ((1, 0), (0, -1)), non_s0)
