"""Colorings of Z_n and every structural predicate stated about them.

Rainbow detection, dilation, dominant colors, residue palettes, palette-based
projection, and the Llano-Montejano classification of rainbow-free 3-colorings
of Z_q.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InputError
from .modcore import CyclicInstance, Triple, is_prime, solutions_by_sum

Palette = frozenset[int]


@dataclass(frozen=True)
class Coloring:
    """A length-n assignment of small non-negative color ids to Z_n."""

    n: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"modulus must be positive, got {self.n}")
        if len(self.colors) != self.n:
            raise InputError(
                f"expected {self.n} colors, got {len(self.colors)}"
            )
        if any(c < 0 for c in self.colors):
            raise InputError("color ids must be non-negative")
        object.__setattr__(self, "colors", tuple(self.colors))

    def num_colors(self) -> int:
        return len(set(self.colors))

    def color_classes(self) -> dict[int, set[int]]:
        classes: dict[int, set[int]] = {}
        for x, c in enumerate(self.colors):
            classes.setdefault(c, set()).add(x)
        return classes

    def is_exact_with(self, r: int) -> bool:
        """True iff the coloring uses exactly the colors {0, ..., r-1}."""
        return set(self.colors) == set(range(r))

    def canonical(self) -> "Coloring":
        return Coloring(self.n, canonicalize(self.colors))


def canonicalize(colors) -> tuple[int, ...]:
    """Relabel into restricted-growth form: scanning left to right, the first
    occurrence of each new color receives the smallest unused id."""
    mapping: dict[int, int] = {}
    out = []
    for c in colors:
        if c not in mapping:
            mapping[c] = len(mapping)
        out.append(mapping[c])
    return tuple(out)


def is_canonical(colors) -> bool:
    seen = 0
    for c in colors:
        if c > seen:
            return False
        if c == seen:
            seen += 1
    return True


def find_rainbow_triple(c: Coloring, k: int) -> Optional[Triple]:
    """The lexicographically least triple carrying three distinct colors, if any."""
    inst = CyclicInstance(c.n, k)
    n = c.n
    cols = c.colors
    sols = solutions_by_sum(inst)
    for x1 in range(n):
        c1 = cols[x1]
        for x2 in range(n):
            c2 = cols[x2]
            if c1 == c2:
                continue
            for x3 in sols[(x1 + x2) % n]:
                c3 = cols[x3]
                if c3 != c1 and c3 != c2:
                    return Triple(x1, x2, x3)
    return None


def is_rainbow_free(c: Coloring, k: int) -> bool:
    return find_rainbow_triple(c, k) is None


def dilate(c: Coloring, m: int) -> Coloring:
    """The coloring x -> c(m*x mod n), for m coprime to n.

    A bijective relabeling of positions: color-class cardinalities and the
    existence of rainbow triples are preserved.
    """
    if math.gcd(m, c.n) != 1:
        raise InputError(f"dilation factor {m} is not coprime to {c.n}")
    return Coloring(c.n, tuple(c.colors[(m * x) % c.n] for x in range(c.n)))


def dominant_colors(c: Coloring) -> set[int]:
    """Colors that appear in every bichromatic string of the coloring.

    Checked on cyclically-adjacent differing pairs; any contiguous bichromatic
    interval contains an adjacent differing pair of its two colors, so the two
    readings agree. A coloring with no differing adjacent pair (monochromatic)
    has every color vacuously dominant.
    """
    dominant: Optional[set[int]] = None
    cols = c.colors
    for i in range(c.n):
        a, b = cols[i], cols[(i + 1) % c.n]
        if a != b:
            pair = {a, b}
            dominant = pair if dominant is None else dominant & pair
            if not dominant:
                return set()
    if dominant is None:
        return set(cols)
    return dominant


def residue_palettes(c: Coloring, t: int) -> list[Palette]:
    """P_i = set of colors on positions congruent to i mod t, for 0 <= i < t."""
    if t < 1 or c.n % t != 0:
        raise InputError(f"t={t} does not divide the modulus {c.n}")
    palettes: list[set[int]] = [set() for _ in range(t)]
    for x, col in enumerate(c.colors):
        palettes[x % t].add(col)
    return [frozenset(p) for p in palettes]


def check_symmetry(c: Coloring) -> bool:
    """True iff c(x) = c(-x) for all x."""
    return all(c.colors[x] == c.colors[(c.n - x) % c.n] for x in range(c.n))


def _project_relative(c: Coloring, t: int, base: int) -> Coloring:
    palettes = residue_palettes(c, t)
    p_base = palettes[base]
    alpha = max(c.colors) + 1
    out = []
    for i, p in enumerate(palettes):
        extra = p - p_base
        if len(extra) >= 2:
            raise InputError(
                f"residue class {i} carries {len(extra)} colors outside the "
                f"base palette P_{base}; projection needs at most 1"
            )
        out.append(next(iter(extra)) if extra else alpha)
    return Coloring(t, tuple(out))


def project_schur(c: Coloring, t: int) -> Coloring:
    """Reduce a coloring of Z_{st} to Z_t by the palette of each residue class.

    Position i receives the unique color of P_i \\ P_0 when that set is a
    singleton, and a reserved fresh color (max color id + 1) otherwise.
    Rainbow-free colorings always satisfy the |P_i \\ P_0| <= 1 precondition.
    """
    return _project_relative(c, t, base=0)


def project_general(c: Coloring, t: int) -> Coloring:
    """As project_schur, but relative to a largest palette P_j (ties: smallest j).

    This is the reduction used for the equation with a prime coefficient, where
    the base residue class need not be R_0.
    """
    palettes = residue_palettes(c, t)
    best = max(range(t), key=lambda j: (len(palettes[j]), -j))
    return _project_relative(c, t, base=best)


class LMCase(Enum):
    CASE1 = "case1"
    CASE2I = "case2i"
    CASE2II = "case2ii"
    CASE3 = "case3"
    NOT_RAINBOW_FREE_FORM = "not-rainbow-free-form"


@dataclass(frozen=True)
class LMClassification:
    case: LMCase
    dilation: Optional[int] = None


def _is_periodic(S: frozenset[int], gen: int, q: int) -> bool:
    # internal variant: a set containing 0 simply is not <gen>-periodic
    if 0 in S:
        return False
    return {(gen * x) % q for x in S} == S


def _is_symmetric(S, q: int) -> bool:
    return all((q - x) % q in S for x in S)


def _cyclic_interval_start(S: frozenset[int], q: int) -> Optional[int]:
    """The start of S if S is a cyclic interval [s, s+|S|-1] mod q, else None."""
    starts = [x for x in S if (x - 1) % q not in S]
    if len(starts) != 1:
        return None
    s = starts[0]
    if all((s + i) % q in S for i in range(len(S))):
        return s
    return None


def classify_3coloring_LM(c: Coloring, k: int) -> LMClassification:
    """Classify an exact 3-coloring of Z_q (q prime, gcd(k, q) = 1).

    Tries the structural cases in a fixed order and reports the first match
    together with a dilation factor a realizing it. Dilations fix 0 and
    preserve symmetry and <k>-periodicity, so case 1 is tested at a = 1,
    cases 2(i)/(ii) only at the unique dilation sending a non-zero singleton
    class to {1}, and only case 3 scans all dilation factors. A coloring
    matching no case admits a rainbow triple.
    """
    q = c.n
    if not is_prime(q) or q < 3:
        raise InputError(f"classification requires a prime modulus >= 3, got {q}")
    if c.num_colors() != 3:
        raise InputError("classification requires an exact 3-coloring")
    k %= q
    if k == 0:
        raise InputError(f"coefficient k={k} is not invertible mod {q}")
    inv2 = pow(2, -1, q)
    classes = [frozenset(xs) for xs in c.color_classes().values()]
    k_is_2 = k == 2 % q
    k_is_minus1 = k == q - 1

    # case 1: {0} singleton, other classes symmetric and <k>-periodic.
    # Both properties are dilation-invariant, so a = 1 suffices.
    for i, s in enumerate(classes):
        if s == {0}:
            others = [classes[j] for j in range(3) if j != i]
            if all(_is_symmetric(o, q) and _is_periodic(o, k, q) for o in others):
                return LMClassification(LMCase.CASE1, 1)

    # cases 2(i)/(ii): a singleton class {x}, x != 0, dilated to {1};
    # only a = x^-1 can achieve that.
    if k_is_2 or k_is_minus1:
        minus2 = (-2) % q
        for i, s in enumerate(classes):
            if len(s) != 1 or 0 in s:
                continue
            (x,) = s
            a = pow(x, -1, q)
            others = [
                frozenset((a * y) % q for y in classes[j])
                for j in range(3)
                if j != i
            ]
            # case 2(i): k = 2, shifted classes symmetric and <2>-periodic
            if k_is_2:
                shifted = [frozenset((y - 1) % q for y in o) for o in others]
                if all(
                    _is_symmetric(o, q) and _is_periodic(o, 2, q) for o in shifted
                ):
                    return LMClassification(LMCase.CASE2I, a)
            # case 2(ii): k = -1, (X \ {-2}) + 2^-1 symmetric. The excluded
            # element is -2 mod q: rainbow-freeness forces c(x) = c(-1-x)
            # away from the pair containing 1, whose partner is -2, and
            # X + 2^-1 = -(X + 2^-1) is exactly that reflection.
            if k_is_minus1:
                shifted = [
                    frozenset((y + inv2) % q for y in o if y != minus2)
                    for o in others
                ]
                if all(_is_symmetric(o, q) for o in shifted):
                    return LMClassification(LMCase.CASE2II, a)

    # case 3: k = -1, all classes are difference-1 progressions chained as
    # [a1, a2-1], [a2, a3-1], [a3, a1-1] with a1 + a2 + a3 in {1, 2};
    # intervals are not dilation-invariant, so scan all factors.
    if k_is_minus1 and min(len(s) for s in classes) >= 2:
        for a in range(1, q):
            dil = [frozenset((a * x) % q for x in s) for s in classes]
            starts = [_cyclic_interval_start(s, q) for s in dil]
            if all(s is not None for s in starts):
                if sum(starts) % q in (1, 2):
                    return LMClassification(LMCase.CASE3, a)
    return LMClassification(LMCase.NOT_RAINBOW_FREE_FORM)
