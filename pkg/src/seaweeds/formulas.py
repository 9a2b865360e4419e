"""Index computation and Frobenius classification.

Three layers live here:

* ``index_combinatorial`` counts meander components (always applicable,
  authoritative for every family);
* ``index_closed_form`` evaluates the gcd/floor formulas on the shapes
  whose hypotheses they cover, returning None elsewhere;
* ``classify_frobenius`` returns the meander verdict together with the
  strongest classification rule whose hypotheses hold, carrying gcd,
  delta and xi certificates.

The xi criterion compares the exact rational
xi(n, d) = (d**(phi(n)-1) mod n) / n against one half; no floating
point is involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .meander import TAIL_I, TAIL_II, TAIL_III, build_meander, components
from .meander import tail as meander_tail
from .specs import AlgebraType, SeaweedSpec, require_valid

METHOD_MEANDER = "meander"
METHOD_CLOSED_FORM = "closed_form"
METHOD_ORACLE = "oracle"


@dataclass(frozen=True)
class IndexReport:
    index: int
    method: str
    cycles: int | None = None
    paths: int | None = None
    tailed_paths: int | None = None
    rule: str | None = None


@dataclass(frozen=True)
class FrobeniusVerdict:
    frobenius: bool
    justification: str
    certificate: dict = field(default_factory=dict)


def euler_phi(n: int) -> int:
    """Euler's totient by trial-division factorization."""
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def xi(n: int, delta: int) -> Fraction:
    """Fractional part of delta**(phi(n)-1) / n, as an exact rational."""
    if n < 2:
        raise ValueError("xi needs n >= 2")
    if delta < 1:
        raise ValueError("xi needs delta >= 1")
    return Fraction(pow(delta, euler_phi(n) - 1, n), n)


def index_combinatorial(spec: SeaweedSpec) -> IndexReport:
    """Index from meander components: 2C+P for GL, 2C+P-1 for A,
    2C+P-tilde for B/C/D (with the family's tail)."""
    require_valid(spec)
    summary, _ = components(build_meander(spec))
    if spec.algebra is AlgebraType.GL:
        value = 2 * summary.cycles + summary.paths
    elif spec.algebra is AlgebraType.A:
        value = 2 * summary.cycles + summary.paths - 1
    else:
        value = 2 * summary.cycles + summary.tailed_paths
    return IndexReport(
        index=value,
        method=METHOD_MEANDER,
        cycles=summary.cycles,
        paths=summary.paths,
        tailed_paths=summary.tailed_paths,
    )


# --- closed forms ---------------------------------------------------------

# Rule tags name the shape family and the criterion, not a source:
# GCD_THREE_BLOCK   type A, a|b|c over n (or a|b over c|d): gcd(a+b, b+c) - 1
# GCD_TWO_BLOCK     type A, a|c over n: gcd(a, c) - 1
# GCD_SPLIT_TOP     types B/C, a|b over c with a+b = n, c in {n-1, n-2}
# GCD_SPLIT_BOTTOM  types B/C, n over a|b with a+b = n-1 or n-2
# TWO_PART          at most one part per side (B/C/D)
# CONFIG_I/II       type-D reductions by tail configuration
# TAIL_GAP_MATCH    type-D configuration III with b = n-c
RULE_GCD_THREE_BLOCK = "GCD_THREE_BLOCK"
RULE_GCD_TWO_BLOCK = "GCD_TWO_BLOCK"
RULE_GCD_SPLIT_TOP = "GCD_SPLIT_TOP"
RULE_GCD_SPLIT_BOTTOM_1 = "GCD_SPLIT_BOTTOM_1"
RULE_GCD_SPLIT_BOTTOM_2 = "GCD_SPLIT_BOTTOM_2"
RULE_TWO_PART = "TWO_PART"
RULE_CONFIG_I = "CONFIG_I"
RULE_CONFIG_II = "CONFIG_II"
RULE_TAIL_GAP_MATCH = "TAIL_GAP_MATCH"


def index_closed_form(spec: SeaweedSpec) -> tuple[int, str] | None:
    """First matching gcd/floor formula, or None when no hypothesis holds.

    No rule is attempted for type-A tops with four or more parts: counting
    components there is provably not a gcd of polynomials in the parts.
    """
    require_valid(spec)
    algebra = spec.algebra
    if algebra is AlgebraType.A:
        return _closed_form_a(spec)
    if algebra in (AlgebraType.B, AlgebraType.C):
        return _closed_form_bc(spec.n, spec.top, spec.bottom)
    if algebra is AlgebraType.D:
        return _closed_form_d(spec)
    return None


def _closed_form_a(spec: SeaweedSpec) -> tuple[int, str] | None:
    n, top, bottom = spec.n, spec.top, spec.bottom
    if len(top) == 3 and bottom == (n,):
        a, b, c = top
        return math.gcd(a + b, b + c) - 1, RULE_GCD_THREE_BLOCK
    if len(top) == 2 and len(bottom) == 2:
        (a, b), (c, _) = top, bottom
        return math.gcd(a + b, b + c) - 1, RULE_GCD_THREE_BLOCK
    if len(top) == 2 and bottom == (n,):
        a, c = top
        return math.gcd(a, c) - 1, RULE_GCD_TWO_BLOCK
    return None


def _closed_form_bc(n: int, top: tuple[int, ...], bottom: tuple[int, ...]) -> tuple[int, str] | None:
    if len(top) == 2 and len(bottom) == 1 and sum(top) == n:
        a, b = top
        c = bottom[0]
        if c in (n - 1, n - 2):
            return math.gcd(a + b, b + c) - 1, RULE_GCD_SPLIT_TOP
    if top == (n,) and len(bottom) == 2:
        a, b = bottom
        if a + b == n - 1:
            return math.gcd(a + b, b + 1) - 1, RULE_GCD_SPLIT_BOTTOM_1
        if a + b == n - 2:
            return math.gcd(a + b, b + 2) - 1, RULE_GCD_SPLIT_BOTTOM_2
    if len(top) <= 1 and len(bottom) <= 1:
        a = top[0] if top else 0
        b = bottom[0] if bottom else 0
        if a == b:
            return n, RULE_TWO_PART
        # The floor branch is keyed on the parity of a, not of n; the two
        # agree on the full-top case a == n and the sweeps pin the rest.
        if a % 2 == 0:
            return n - a + (a - b) // 2, RULE_TWO_PART
        return n - a + (a - b - 1) // 2, RULE_TWO_PART
    return None


def _closed_form_d(spec: SeaweedSpec) -> tuple[int, str] | None:
    n, top, bottom = spec.n, spec.top, spec.bottom
    _, config = meander_tail(spec)
    if config == TAIL_I:
        # Same tail as type C, hence the same meander count.
        inner = _closed_form_bc(n, top, bottom)
        if inner is None:
            return None
        value, rule = inner
        return value, f"{RULE_CONFIG_I}+{rule}"
    if len(top) != 2 or len(bottom) != 1:
        return None
    a, b = top
    c = bottom[0]
    if config == TAIL_II:
        inner = SeaweedSpec(AlgebraType.C, a + b, top, bottom)
        reduced = index_combinatorial(inner).index
        return n - (a + b + 1) + reduced, RULE_CONFIG_II
    if config == TAIL_III and b == n - c:
        # b is forced odd here (the tail offset b must be odd in III).
        if b == 1:
            # The component on the last vertex falls outside the tail and
            # contributes one; cross-checked against the rank oracle.
            return a + 1, RULE_TAIL_GAP_MATCH
        return a + (b - 3) // 2, RULE_TAIL_GAP_MATCH
    return None


# --- Frobenius classification --------------------------------------------

TAG_GL_NEVER = "GL_NEVER_FROBENIUS"
TAG_MEANDER_PATH = "MEANDER_SINGLE_PATH"
TAG_MEANDER_FOREST = "MEANDER_FOREST"
# Classifier tags, by shape family and criterion:
# SPLIT_TOP_GCD_C1/C2/C3   B/C split-top shapes: coprime at c = n-1 or n-2,
#                          or all-odd gcd 2 at c = n-3 (family tag alone
#                          means none matched, hence not Frobenius)
# TAIL_GAP_MATCH           D config III, b = n-c: index formula decides
# SHORT_TAIL_BLOCK         D config III, b < n-c: only b=2 at c=n-3 and
#                          b=3 at c=n-5 with even n survive
# GCD3_PATH                D config III, c = n-3, the two outermost tail-
#                          side vertices share a path: Frobenius iff gcd 3
# XI_TAIL2 / XI_TAIL4      totient criteria on the tails of size 2 and 4
# TAIL4_GCD_REQUIRED       c = n-5 needs gcd 2 with a, b, c odd
# TAIL_TOO_LONG            c not in {n-3, n-5} with b > n-c: never Frobenius
# DETACHED_BLOCK_SIZE      a detached final top block must have size 2 or 3
TAG_SPLIT_TOP_GCD = "SPLIT_TOP_GCD"
TAG_SPLIT_TOP_GCD_C1 = "SPLIT_TOP_GCD_C1"
TAG_SPLIT_TOP_GCD_C2 = "SPLIT_TOP_GCD_C2"
TAG_SPLIT_TOP_GCD_C3 = "SPLIT_TOP_GCD_C3"
TAG_TAIL_GAP_MATCH = "TAIL_GAP_MATCH"
TAG_SHORT_TAIL_BLOCK = "SHORT_TAIL_BLOCK"
TAG_CONFIG_II = "CONFIG_II"
TAG_GCD3_PATH = "GCD3_PATH"
TAG_XI_TAIL2 = "XI_TAIL2"
TAG_XI_TAIL4 = "XI_TAIL4"
TAG_TAIL4_GCD_REQUIRED = "TAIL4_GCD_REQUIRED"
TAG_TAIL_TOO_LONG = "TAIL_TOO_LONG"
TAG_DETACHED_BLOCK_SIZE = "DETACHED_BLOCK_SIZE"


class RuleDisagreement(AssertionError):
    """A classification rule contradicted the meander verdict (a bug)."""


def classify_frobenius(spec: SeaweedSpec) -> FrobeniusVerdict:
    """Meander-based verdict with the strongest applicable rule attached.

    The verdict itself always comes from the component count; whenever a
    closed rule decides the same question its answer is checked against
    the meander and a disagreement raises.
    """
    require_valid(spec)
    report = index_combinatorial(spec)
    frobenius = report.index == 0
    tag, certificate, decided = _justification(spec, report)
    if decided is not None and decided != frobenius:
        raise RuleDisagreement(
            f"{tag} predicts frobenius={decided} but meander index is {report.index} for {spec}"
        )
    return FrobeniusVerdict(frobenius, tag, certificate)


def _justification(spec: SeaweedSpec, report: IndexReport):
    """Return (tag, certificate, decided) where decided is the rule's own
    verdict when its hypotheses fully determine one, else None."""
    algebra = spec.algebra
    if algebra is AlgebraType.GL:
        # 2C+P >= 1 on a nonempty vertex set.
        return TAG_GL_NEVER, {}, False
    if algebra is AlgebraType.A:
        return TAG_MEANDER_PATH, {"cycles": report.cycles, "paths": report.paths}, None
    if algebra in (AlgebraType.B, AlgebraType.C):
        return _justify_bc(spec.n, spec.top, spec.bottom)
    return _justify_d(spec)


def _justify_bc(n: int, top: tuple[int, ...], bottom: tuple[int, ...]):
    if len(top) == 2 and sum(top) == n and len(bottom) == 1:
        a, b = top
        c = bottom[0]
        g = math.gcd(a + b, b + c)
        cert = {"gcd": g, "a": a, "b": b, "c": c}
        if c == n - 1 and g == 1:
            return TAG_SPLIT_TOP_GCD_C1, cert, True
        if c == n - 2 and g == 1:
            return TAG_SPLIT_TOP_GCD_C2, cert, True
        if c == n - 3 and g == 2 and a % 2 and b % 2 and c % 2:
            return TAG_SPLIT_TOP_GCD_C3, cert, True
        return TAG_SPLIT_TOP_GCD, cert, False
    return TAG_MEANDER_FOREST, {}, None


def _justify_d(spec: SeaweedSpec):
    n, top, bottom = spec.n, spec.top, spec.bottom
    _, config = meander_tail(spec)
    if config == TAIL_I:
        tag, cert, decided = _justify_bc(n, top, bottom)
        if tag != TAG_MEANDER_FOREST:
            return f"{RULE_CONFIG_I}+{tag}", cert, decided
        return TAG_MEANDER_FOREST, {}, None
    if config == TAIL_II and len(top) == 2 and len(bottom) == 1:
        a, b = top
        inner = SeaweedSpec(AlgebraType.C, a + b, top, bottom)
        reduced = index_combinatorial(inner).index
        value = n - (a + b + 1) + reduced
        return TAG_CONFIG_II, {"isolated": n - (a + b + 1), "inner_index": reduced}, value == 0
    if config != TAIL_III:
        return TAG_MEANDER_FOREST, {}, None

    if len(top) == 2 and len(bottom) == 1:
        a, b = top
        c = bottom[0]
        d = n - c
        g = math.gcd(a + b, b + c)
        if b == d:
            value = (a + 1) if b == 1 else a + (b - 3) // 2
            return TAG_TAIL_GAP_MATCH, {"index": value}, value == 0
        if b < d:
            ok = (b == 2 and c == n - 3) or (b == 3 and c == n - 5 and n % 2 == 0)
            return TAG_SHORT_TAIL_BLOCK, {"b": b, "c": c}, ok
        # b > n - c: tail of size two (c = n-3) or four (c = n-5), else never.
        if c == n - 3:
            if _same_component(spec, n - 2, n):
                return TAG_GCD3_PATH, {"gcd": g}, g == 3
            if g == 1:
                delta = (a + d) % n
                value = xi(n, delta)
                cert = {"gcd": g, "delta": delta, "xi": value}
                return TAG_XI_TAIL2, cert, Fraction(0) < value < Fraction(1, 2)
            return TAG_MEANDER_FOREST, {"gcd": g}, None
        if c == n - 5:
            if g == 2 and a % 2 and b % 2 and c % 2:
                delta = (a + d) % n
                value = xi(n // 2, delta // 2)
                cert = {"gcd": g, "delta": delta, "xi": value}
                return TAG_XI_TAIL4, cert, Fraction(0) < value < Fraction(1, 2)
            return TAG_TAIL4_GCD_REQUIRED, {"gcd": g}, False
        return TAG_TAIL_TOO_LONG, {"c": c}, False

    # Multi-part configuration III: a final top block lying beyond the
    # bottom composition separates from the rest, and only sizes 2 and 3
    # leave its subgraph rooted in the tail.
    if top and bottom:
        last = top[-1]
        if last < n - sum(bottom) and last not in (2, 3):
            return TAG_DETACHED_BLOCK_SIZE, {"last_top_part": last}, False
    return TAG_MEANDER_FOREST, {}, None


def _same_component(spec: SeaweedSpec, u: int, v: int) -> bool:
    _, comps = components(build_meander(spec))
    for comp in comps:
        if u in comp.vertices:
            return v in comp.vertices
    return False
