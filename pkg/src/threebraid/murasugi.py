"""Murasugi conjugacy normal form for 3-braid words.

Every 3-braid is conjugate to exactly one of three model families, with
``h = (xy)^3`` the full twist:

    family 1:  h^d x y^-a1 ... x y^-an   (ai >= 0, some aj >= 1)
    family 2:  h^d y^m                   (m any integer)
    family 3:  h^d x^m y^-1              (m in {-1, -2, -3})

The family is decided through the image in PSL(2,Z), which is the free
product Z/2 * Z/3 on the order-2 element S = [[0,-1],[1,0]] and the order-3
element U = S*[[1,1],[0,1]].  Since the kernel of the map from the braid
group to PSL(2,Z) is generated by the central full twist, the cyclically
reduced free-product word together with the exponent sum is a complete
conjugacy invariant; the power d of the full twist is recovered from the
exponent sum.

Dictionary (fixed once, validated by tests): in PSL(2,Z)

    x = S U        x^-1 = U^2 S        y = U S        y^-1 = S U^2

so a hyperbolic word becomes a cyclic word in R = SU (the image of x) and
L = SU^2 (the image of y^-1), from which the family-1 block tuple is read.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import homology
from . import words as w_
from .words import BraidWord


class InvalidForm(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """The recovered parameters contradict the matrix image.  This indicates a
    calibration bug in the dictionary, never bad input."""


# --- the free product Z/2 * Z/3 -------------------------------------------

# Syllables: ("s", 1) for the involution, ("u", 1) / ("u", 2) for the two
# nontrivial powers of the order-3 element.
Syllable = tuple[str, int]

S: Syllable = ("s", 1)
U: Syllable = ("u", 1)
UU: Syllable = ("u", 2)

_LETTER_SYLLABLES = {
    w_.X: (S, U),
    w_.X_INV: (UU, S),
    w_.Y: (U, S),
    w_.Y_INV: (S, UU),
}


@dataclass(frozen=True)
class FreeProductWord:
    """A cyclically reduced alternating word in Z/2 * Z/3."""

    syllables: tuple[Syllable, ...] = ()

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        names = {S: "S", U: "U", UU: "U^2"}
        return " ".join(names[s] for s in self.syllables) or "1"

    def cyclic_key(self) -> tuple[Syllable, ...]:
        """Canonical representative of the rotation class, for conjugacy tests."""
        if not self.syllables:
            return ()
        rotations = [self.syllables[i:] + self.syllables[:i]
                     for i in range(len(self.syllables))]
        return min(rotations)


def _push(stack: list[Syllable], syllable: Syllable) -> None:
    while True:
        if not stack or stack[-1][0] != syllable[0]:
            stack.append(syllable)
            return
        top = stack.pop()
        if syllable[0] == "s":
            return  # S * S = 1
        e = (top[1] + syllable[1]) % 3
        if e == 0:
            return
        syllable = ("u", e)


def _cyclic_reduce(syllables: list[Syllable]) -> list[Syllable]:
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        first = syllables[0]
        middle = syllables[1:-1]
        last = syllables[-1]
        if first[0] == "s":
            syllables = middle  # conjugating away S ... S
        else:
            e = (first[1] + last[1]) % 3
            syllables = middle + ([("u", e)] if e else [])
    return syllables


def psl2_normal_form(w: BraidWord) -> FreeProductWord:
    """Image of the word in PSL(2,Z), cyclically reduced in Z/2 * Z/3.

    >>> len(psl2_normal_form(w_.parse("h")))
    0
    >>> str(psl2_normal_form(w_.parse("x^-2 y^-1")))
    'S'
    """
    stack: list[Syllable] = []
    for letter in w:
        for syllable in _LETTER_SYLLABLES[letter]:
            _push(stack, syllable)
    return FreeProductWord(tuple(_cyclic_reduce(stack)))


# --- the three families -----------------------------------------------------


def _least_rotation(a: tuple[int, ...]) -> tuple[int, ...]:
    return min(a[i:] + a[:i] for i in range(len(a)))


@dataclass(frozen=True)
class Family1:
    """Pseudo-Anosov class h^d x y^-a1 ... x y^-an, block tuple stored in its
    lexicographically least cyclic rotation."""

    d: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.a:
            object.__setattr__(self, "a", _least_rotation(tuple(self.a)))

    def __str__(self) -> str:
        return f"family 1, d = {self.d}, a = {self.a}"


@dataclass(frozen=True)
class Family2:
    """Central or parabolic class h^d y^m."""

    d: int
    m: int

    def __str__(self) -> str:
        return f"family 2, d = {self.d}, m = {self.m}"


@dataclass(frozen=True)
class Family3:
    """Elliptic (finite-order) class h^d x^m y^-1 with m in {-1, -2, -3}."""

    d: int
    m: int

    def __str__(self) -> str:
        return f"family 3, d = {self.d}, m = {self.m}"


MurasugiForm = Union[Family1, Family2, Family3]

# Elliptic classes: the single surviving syllable determines m, and the
# residues of m - 1 mod 6 are pairwise distinct, so the exponent sum
# corroborates it.
_ELLIPTIC_M = {U: -1, S: -2, UU: -3}
_ELLIPTIC_MODEL_TRACE = {-1: 1, -2: 0, -3: -1}


def _exact_quotient(numerator: int, denominator: int) -> int:
    d, remainder = divmod(numerator, denominator)
    if remainder:
        raise InternalInconsistency(
            f"twist power {numerator}/{denominator} is not an integer")
    return d


def _sign_check(trace: int, d: int, model_trace: int) -> None:
    expected = (-1) ** (d % 2) * model_trace
    if (trace > 0) - (trace < 0) != (expected > 0) - (expected < 0):
        raise InternalInconsistency(
            f"trace sign {trace} inconsistent with d = {d}")


def _blocks(syllables: tuple[Syllable, ...]) -> list[int]:
    """U-exponents of the cyclic word, rotated so that an S comes first.

    The word alternates S and U-powers with equal counts, so rotating by at
    most one syllable aligns it into blocks (S, U^e)."""
    if syllables[0][0] != "s":
        syllables = syllables[1:] + syllables[:1]
    assert all(s[0] == ("s" if i % 2 == 0 else "u")
               for i, s in enumerate(syllables))
    return [syllables[i][1] for i in range(1, len(syllables), 2)]


def _block_tuple(exponents: list[int]) -> tuple[int, ...]:
    """Convert a cyclic R/L word (R where e=1, L where e=2) into the family-1
    tuple: each R opens a block whose entry counts the following run of Ls."""
    k = len(exponents)
    candidates = []
    for start, e in enumerate(exponents):
        if e != 1:
            continue
        entry: list[int] = []
        for offset in range(k):
            current = exponents[(start + offset) % k]
            if current == 1:
                entry.append(0)
            else:
                entry[-1] += 1
        candidates.append(tuple(entry))
    return min(candidates)


def classify(w: BraidWord) -> MurasugiForm:
    """The conjugacy normal form of a word.

    >>> classify(w_.parse("x x y x x"))
    Family2(d=1, m=-1)
    >>> classify(w_.parse("y x^5"))
    Family1(d=1, a=(1,))
    """
    fp = psl2_normal_form(w)
    e = w_.exponent_sum(w)
    matrix = homology.image(w)

    if len(fp) == 0:
        d = _exact_quotient(e, 6)
        expected = homology.IDENTITY if d % 2 == 0 else -homology.IDENTITY
        if matrix != expected:
            raise InternalInconsistency("central image does not match +-I")
        return Family2(d, 0)

    if len(fp) == 1:
        m = _ELLIPTIC_M[fp.syllables[0]]
        d = _exact_quotient(e - (m - 1), 6)
        _sign_check(matrix.trace, d, _ELLIPTIC_MODEL_TRACE[m])
        return Family3(d, m)

    exponents = _blocks(fp.syllables)
    if all(x == exponents[0] for x in exponents):
        # Parabolic: a pure power of R or of L.
        epsilon, m = homology.parabolic_invariant(matrix)
        if (m > 0) != (exponents[0] == 1) or abs(m) != len(exponents):
            raise InternalInconsistency(
                "parabolic invariant disagrees with the free-product word")
        d = _exact_quotient(e - m, 6)
        if epsilon != (-1) ** (d % 2):
            raise InternalInconsistency("parabolic sign inconsistent with d")
        return Family2(d, m)

    a = _block_tuple(exponents)
    n = len(a)
    d = _exact_quotient(e - n + sum(a), 6)
    _sign_check(matrix.trace, d, 3)  # hyperbolic models have trace > 2
    return Family1(d, a)


def _validate(f: MurasugiForm) -> None:
    if isinstance(f, Family1):
        if not f.a or any(x < 0 for x in f.a) or not any(f.a):
            raise InvalidForm(f"bad family-1 tuple {f.a}")
    elif isinstance(f, Family3):
        if f.m not in (-1, -2, -3):
            raise InvalidForm(f"family-3 m must be in -1..-3, got {f.m}")
    elif not isinstance(f, Family2):
        raise InvalidForm(f"not a normal form: {f!r}")


def canonical_word(f: MurasugiForm) -> BraidWord:
    """The model word of a normal form: h^d (expanded) followed by the tail.

    >>> str(canonical_word(Family3(1, -1)))
    'x y x y x y x^-1 y^-1'
    """
    _validate(f)
    letters = list(w_.power(w_.word(w_.H_LETTERS), f.d))
    if isinstance(f, Family1):
        for ai in f.a:
            letters.append(w_.X)
            letters.extend((w_.Y_INV,) * ai)
    elif isinstance(f, Family2):
        letters.extend((w_.Y if f.m > 0 else w_.Y_INV,) * abs(f.m))
    else:
        letters.extend((w_.X_INV,) * (-f.m))
        letters.append(w_.Y_INV)
    return w_.word(letters)


def is_conjugate(w1: BraidWord, w2: BraidWord) -> bool:
    """Whether two words are conjugate in the 3-strand braid group.

    >>> is_conjugate(w_.parse("x"), w_.parse("y"))
    True
    >>> is_conjugate(w_.parse("x"), w_.parse("x^-1"))
    False
    """
    return classify(w1) == classify(w2)


def mirror_form(f: MurasugiForm) -> MurasugiForm:
    """Normal form of the inverse mapping class (mirror of the closure)."""
    return classify(w_.inverse(canonical_word(f)))
