"""Closure-level invariants of a 3-braid and the aggregated report.

The concordance invariant delta, the knot signature, a necessary-condition
screen for finite smooth concordance order, quasi-alternating status, and
Stein-filling obstructions, each a function of the conjugacy normal form.
``analyze_word`` bundles everything into the record the command line
serializes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import floer, homology, murasugi
from . import words as w_
from .floer import GradedModule, TorusBundleModules
from .homology import AbelianGroup
from .murasugi import Family1, Family2, Family3, MurasugiForm
from .words import BraidWord


class NotAKnot(ValueError):
    pass


class FamilyNotCovered(ValueError):
    pass


PASS = "Pass"
FAIL = "Fail"
NOT_A_KNOT = "NotAKnot"

# Normal forms whose closure is the unknot (checked in the tests); the other
# unknot presentation, family 1 with d = 0 and tuple (1), already satisfies
# the family-1 screen condition.
_UNKNOT_FORMS = (Family3(1, -3), Family3(0, -1))


def delta(f: MurasugiForm, components: int) -> Fraction:
    """Twice the correction term of the branched double cover; a concordance
    homomorphism to the integers, defined for knot closures."""
    if components != 1:
        raise NotAKnot(f"closure has {components} components")
    if isinstance(f, Family1):
        n, total = len(f.a), sum(f.a)
        if f.d % 2 == 0:
            return Fraction(n - total, 2)
        if f.d > 0:
            return Fraction(n + 4 - total, 2)
        return Fraction(n - 4 - total, 2)
    if isinstance(f, Family3) and f.m in (-1, -3):
        if f.d % 2:
            return Fraction(f.m + 3, 2) if f.d > 0 else Fraction(f.m - 5, 2)
        return Fraction(f.m + 9, 2) if f.d > 0 else Fraction(f.m + 1, 2)
    raise FamilyNotCovered(f"no delta formula for {f}")


def signature(f: MurasugiForm, components: int) -> int:
    """Signature of the knot closure (Erle's formula, family 1 only; other
    families are answered by the Seifert oracle on demand)."""
    if components != 1:
        raise NotAKnot(f"closure has {components} components")
    if not isinstance(f, Family1):
        raise FamilyNotCovered(f"no closed-form signature for {f}")
    return -len(f.a) - 4 * f.d + sum(f.a)


def finite_order_screen(f: MurasugiForm, components: int) -> str:
    """Necessary condition for finite smooth concordance order.

    Pass means only that the obstructions delta and signature both vanish;
    it is never an order claim.
    """
    if components != 1:
        return NOT_A_KNOT
    if f in _UNKNOT_FORMS:
        return PASS
    if isinstance(f, Family1) and f.d in (-1, 0, 1) \
            and len(f.a) + 4 * f.d == sum(f.a):
        return PASS
    return FAIL


def quasi_alternating(f: MurasugiForm) -> bool:
    """Whether the closure is quasi-alternating."""
    if isinstance(f, Family1):
        return f.d in (-1, 0, 1)
    if isinstance(f, Family2):
        return (f.d == 1 and f.m in (-1, -2, -3)) or \
               (f.d == -1 and f.m in (1, 2, 3))
    return f.d in (0, 1)


NO = "No"
CONSTRAINED = "Constrained"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SteinReport:
    """Stein-fillability status of the compatible contact structure.

    ``euler_char`` is present exactly when ``fillable`` is Constrained: every
    Stein filling then has that Euler characteristic.  The twist-count bound
    is the exponent sum, the number of right-handed twists needed if the
    monodromy is a product of them.
    """

    l_space: bool
    tight: bool
    fillable: str
    euler_char: int | None
    dehn_twist_count_bound: int


def stein_report(f: MurasugiForm) -> SteinReport:
    l_space = floer.is_l_space(f)
    tight = floer.is_tight(f)
    twist_bound = w_.exponent_sum(murasugi.canonical_word(f))
    if not tight:
        return SteinReport(l_space, tight, NO, None, twist_bound)
    if not l_space:
        return SteinReport(l_space, tight, UNKNOWN, None, twist_bound)
    chi = 4 * floer.correction_term(f) + 1
    if chi < 1 or chi.denominator != 1:
        return SteinReport(l_space, tight, NO, None, twist_bound)
    return SteinReport(l_space, tight, CONSTRAINED, int(chi), twist_bound)


@dataclass(frozen=True)
class InvariantReport:
    """Everything the toolkit knows about one braid word.

    Optional fields are None when undefined: the Floer block needs a
    rational homology sphere cover (nonzero determinant), delta needs a knot
    closure, the signature formula needs a family-1 knot closure, and the
    torus-bundle block is only filled on request.
    """

    word: str
    normal_form: MurasugiForm
    components: int
    determinant: int
    h1: AbelianGroup
    b1: int
    l_space: bool
    tight: bool
    tight_inverse: bool
    knot_type_tag: str
    hf_plus_s0: GradedModule | None
    spin_c_count: int | None
    correction_term: Fraction | None
    delta: Fraction | None
    signature: int | None
    qa: bool
    finite_order_screen: str
    stein: SteinReport
    torus_bundle: TorusBundleModules | None


def analyze_word(w: BraidWord, raw_text: str | None = None,
                 include_torus_bundle: bool = False) -> InvariantReport:
    """Aggregate every invariant of one word into a report."""
    form = murasugi.classify(w)
    components = w_.components(w)
    det = homology.determinant(w)
    h1 = homology.h1_branched_cover(w)

    is_knot = components == 1
    floer_defined = det != 0
    torus_bundle = None
    if include_torus_bundle and floer_defined:
        torus_bundle = floer.torus_bundle_hf(form)

    return InvariantReport(
        word=str(w) if raw_text is None else raw_text,
        normal_form=form,
        components=components,
        determinant=det,
        h1=h1,
        b1=h1.free_rank,
        l_space=floer.is_l_space(form),
        tight=floer.is_tight(form),
        tight_inverse=floer.is_tight(murasugi.mirror_form(form)),
        knot_type_tag=floer.knot_type(form),
        hf_plus_s0=floer.hf_plus_s0(form) if floer_defined else None,
        spin_c_count=det if floer_defined else None,
        correction_term=floer.correction_term(form) if floer_defined else None,
        delta=delta(form, components) if is_knot else None,
        signature=signature(form, components)
        if is_knot and isinstance(form, Family1) else None,
        qa=quasi_alternating(form),
        finite_order_screen=finite_order_screen(form, components),
        stein=stein_report(form),
        torus_bundle=torus_bundle,
    )


# --- stable JSON encoding ----------------------------------------------------

def rational_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}


def graded_module_json(module: GradedModule) -> dict:
    return {
        "towers": [rational_json(g) for g in module.towers],
        "frees": [{"rank": rank, **rational_json(g)}
                  for rank, g in module.frees],
        "absolute": module.absolute,
    }


def normal_form_json(f: MurasugiForm) -> dict:
    if isinstance(f, Family1):
        return {"family": 1, "d": f.d, "a": list(f.a)}
    family = 2 if isinstance(f, Family2) else 3
    return {"family": family, "d": f.d, "m": f.m}


def stein_json(s: SteinReport) -> dict:
    out = {"l_space": s.l_space, "tight": s.tight, "fillable": s.fillable}
    if s.euler_char is not None:
        out["euler_char"] = s.euler_char
    out["dehn_twist_count_bound"] = s.dehn_twist_count_bound
    return out


def torus_bundle_json(tb: TorusBundleModules) -> dict:
    return {
        "s0": graded_module_json(tb.s0),
        "non_s0_count": tb.non_s0_count,
        "non_s0_relative": graded_module_json(tb.non_s0_relative),
        "fiber_structures_vanish": tb.fiber_structures_vanish,
    }


def report_json(r: InvariantReport) -> dict:
    """The report as a JSON-ready dict: canonical key order, rationals as
    num/den pairs, absent optionals omitted."""
    out: dict = {
        "word": r.word,
        "normal_form": normal_form_json(r.normal_form),
        "components": r.components,
        "determinant": r.determinant,
        "h1": {"free_rank": r.h1.free_rank, "torsion": list(r.h1.torsion)},
        "b1": r.b1,
        "l_space": r.l_space,
        "tight": r.tight,
        "tight_inverse": r.tight_inverse,
        "knot_type_tag": r.knot_type_tag,
    }
    if r.hf_plus_s0 is not None:
        out["hf_plus_s0"] = graded_module_json(r.hf_plus_s0)
    if r.spin_c_count is not None:
        out["spin_c_count"] = r.spin_c_count
    if r.correction_term is not None:
        out["correction_term"] = rational_json(r.correction_term)
    if r.delta is not None:
        out["delta"] = rational_json(r.delta)
    if r.signature is not None:
        out["signature"] = r.signature
    out["qa"] = r.qa
    out["finite_order_screen"] = r.finite_order_screen
    out["stein"] = stein_json(r.stein)
    if r.torus_bundle is not None:
        out["torus_bundle"] = torus_bundle_json(r.torus_bundle)
    return out
