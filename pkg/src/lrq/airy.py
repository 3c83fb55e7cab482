"""Exact symbolic topological recursion on the Airy curve y^2 = x.

With the parametrization x(z) = z^2, y(z) = z the curve has a single branch
point at z = 0, and every residue in the recursion is taken there by series
expansion in the region |q| < |p_i|.  Correlator coefficients are Laurent
polynomials over exact rationals; the differential factors dp_i are implicit,
and the sheet involution qbar = -q contributes an explicit -1 per conjugated
differential leg.

Series truncation is tracked explicitly: a QSeries knows the highest q
exponent it is trusted through, and a residue is only read inside the
trusted range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

_EXACT = 10**9  # "trusted through any exponent we will ever look at"

MAX_NEG_EULER = 12  # recursion bound on 2g - 2 + k


class LaurentPoly:
    """Multivariate Laurent polynomial: exponent vectors -> nonzero rationals."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs=()):
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for exps, c in items:
            if not isinstance(c, Fraction):
                c = Fraction(c)
            if not c:
                continue
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} needs {nvars} slots")
            new = acc.get(exps, Fraction(0)) + c
            if new:
                acc[exps] = new
            else:
                del acc[exps]
        self.nvars = nvars
        self.coeffs = acc

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=1) -> "LaurentPoly":
        return cls(nvars, ((tuple(exps), coeff),))

    @classmethod
    def const(cls, nvars: int, coeff) -> "LaurentPoly":
        return cls(nvars, (((0,) * nvars, coeff),))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            new = acc.get(exps, Fraction(0)) + c
            if new:
                acc[exps] = new
            else:
                del acc[exps]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.coeffs = self.nvars, acc
        return out

    def __neg__(self) -> "LaurentPoly":
        return self.scale(-1)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        acc: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = acc.get(exps, Fraction(0)) + c1 * c2
                if new:
                    acc[exps] = new
                else:
                    del acc[exps]
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars, out.coeffs = self.nvars, acc
        return out

    def scale(self, c) -> "LaurentPoly":
        if not isinstance(c, Fraction):
            c = Fraction(c)
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.coeffs = {e: c * v for e, v in self.coeffs.items()} if c else {}
        return out

    def permute_vars(self, perm) -> "LaurentPoly":
        """Relabel variables: slot i of the result reads slot perm[i]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"not a variable permutation: {perm}")
        return LaurentPoly(
            self.nvars,
            ((tuple(e[p] for p in perm), c) for e, c in self.coeffs.items()),
        )

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly<{self}>"


def var_name(i: int) -> str:
    return "p" if i == 0 else f"p{i}"


def format_laurent(poly: LaurentPoly) -> str:
    """Sum of monomials "c * p^a * p1^b * ..." with the rational c always shown."""
    if not poly.coeffs:
        return "0"
    parts = []
    for exps in sorted(poly.coeffs):
        c = poly.coeffs[exps]
        factors = [str(abs(c))]
        factors.extend(
            f"{var_name(i)}^{e}" for i, e in enumerate(exps) if e
        )
        body = " * ".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def laurent_json(poly: LaurentPoly) -> list:
    """JSON form: a list of (exponent vector, numerator, denominator) triples."""
    return [
        [list(exps), poly.coeffs[exps].numerator, poly.coeffs[exps].denominator]
        for exps in sorted(poly.coeffs)
    ]


class QSeries:
    """Truncated Laurent series in q whose coefficients are Laurent polynomials.

    ``valid`` is the highest q exponent the series is trusted through; sums
    and products propagate it, so reading a residue off an insufficiently
    truncated series is an error rather than a wrong answer.
    """

    __slots__ = ("nvars", "coeffs", "valid")

    def __init__(self, nvars: int, coeffs=(), valid: int = _EXACT):
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        for e, poly in items:
            if e > valid or poly.is_zero():
                continue
            have = acc.get(e)
            acc[e] = poly if have is None else have + poly
        self.nvars = nvars
        self.coeffs = {e: p for e, p in acc.items() if p}
        self.valid = valid

    def lowest(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.valid == other.valid
            and self.coeffs == other.coeffs
        )

    def __add__(self, other: "QSeries") -> "QSeries":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        valid = min(self.valid, other.valid)
        acc = {e: p for e, p in self.coeffs.items() if e <= valid}
        for e, p in other.coeffs.items():
            if e > valid:
                continue
            have = acc.get(e)
            acc[e] = p if have is None else have + p
        return QSeries(self.nvars, acc, valid)

    def __mul__(self, other: "QSeries") -> "QSeries":
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        # Terms above `valid` are unknown; they first pollute the product at
        # exponent (valid of one factor) + (lowest exponent of the other).
        la = self.lowest() if self.coeffs else self.valid + 1
        lb = other.lowest() if other.coeffs else other.valid + 1
        valid = min(self.valid + lb, other.valid + la, _EXACT)
        acc: dict = {}
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                e = i + j
                if e > valid:
                    continue
                prod = ci * cj
                have = acc.get(e)
                acc[e] = prod if have is None else have + prod
        return QSeries(self.nvars, acc, valid)

    def scale(self, c) -> "QSeries":
        return QSeries(
            self.nvars, {e: p.scale(c) for e, p in self.coeffs.items()}, self.valid
        )

    def __str__(self) -> str:
        body = " + ".join(
            f"q^{e}*({self.coeffs[e]})" for e in sorted(self.coeffs)
        )
        return f"{body or '0'}  [trusted through q^{self.valid}]"


def bergman_series(leg: int, order: int, nvars: int | None = None) -> QSeries:
    """Expansion of 1/(q - p_leg)^2 around q = 0, through q^order."""
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    if nvars is None:
        nvars = leg + 1
    coeffs = {}
    for m in range(order + 1):
        exps = [0] * nvars
        exps[leg] = -(m + 2)
        coeffs[m] = LaurentPoly.monomial(nvars, exps, m + 1)
    return QSeries(nvars, coeffs, valid=order)


def kernel_series(order: int, nvars: int = 1) -> QSeries:
    """Expansion of the recursion kernel 1/(4q(q^2 - p^2)) through q^order.

    Equal to -(1/(4 p^2)) q^(-1) sum_m (q/p)^(2m); only odd powers of q
    appear, starting at q^(-1), and p is variable 0.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    coeffs = {}
    m = 0
    while 2 * m - 1 <= order:
        exps = [0] * nvars
        exps[0] = -(2 * m + 2)
        coeffs[2 * m - 1] = LaurentPoly.monomial(nvars, exps, Fraction(-1, 4))
        m += 1
    return QSeries(nvars, coeffs, valid=order)


def conjugate_leg(s: QSeries) -> QSeries:
    """Substitute q -> -q and multiply by -1 (the conjugated leg's d(-q) = -dq)."""
    return QSeries(
        s.nvars,
        {e: p.scale((-1) ** (e + 1)) for e, p in s.coeffs.items()},
        s.valid,
    )


def residue_at_zero(s: QSeries) -> LaurentPoly:
    """Coefficient of q^(-1); requires the truncation to cover it."""
    if s.valid < -1:
        raise ValueError(
            f"truncation insufficient for a residue (trusted through q^{s.valid})"
        )
    return s.coeffs.get(-1, LaurentPoly(s.nvars))


@dataclass(frozen=True)
class Correlator:
    """A genus-g, k-leg correlator; variables are p, p1, ..., p_(k-1)."""

    genus: int
    legs: int
    coeff: LaurentPoly

    def __str__(self) -> str:
        return format_laurent(self.coeff)


def default_truncation(g: int, k: int) -> int:
    # Deepest q pole fed into the residue is 6g + 2k - 3, with margin.
    return 2 * (3 * g - 2 + k) + 4


def _attach(poly: LaurentPoly, roles: list, nvars: int) -> QSeries:
    """Substitute an already-computed correlator into the residue variable.

    roles[i] says what the i-th variable of `poly` becomes: "q", "qbar"
    (= -q, with one -1 for the conjugated leg), or a global variable index.
    The result is exact.
    """
    n_conj = sum(1 for r in roles if r == "qbar")
    acc: dict = {}
    for exps, c in poly.coeffs.items():
        qe = 0
        sign = (-1) ** n_conj
        pexps = [0] * nvars
        for e, role in zip(exps, roles):
            if role == "q":
                qe += e
            elif role == "qbar":
                qe += e
                if e % 2:
                    sign = -sign
            else:
                pexps[role] += e
        key = tuple(pexps)
        bucket = acc.setdefault(qe, {})
        bucket[key] = bucket.get(key, Fraction(0)) + sign * c
    return QSeries(
        nvars, {e: LaurentPoly(nvars, d) for e, d in acc.items()}, _EXACT
    )


def _factor(h: int, sub_legs: list[int], which: str, nvars: int, order: int) -> QSeries:
    """One factor W^h(q or qbar, sub_legs) of a splitting term."""
    k_f = len(sub_legs) + 1
    if h == 0 and k_f == 2:
        s = bergman_series(sub_legs[0], order, nvars)
        return conjugate_leg(s) if which == "qbar" else s
    sub = airy_correlator(h, k_f)
    return _attach(sub.coeff, [which] + list(sub_legs), nvars)


def _subsets(items: list[int]):
    for size in range(len(items) + 1):
        yield from (list(c) for c in combinations(items, size))


def _residue_recursion(g: int, k: int, order: int) -> LaurentPoly:
    nv = k
    legs = list(range(1, k))
    bracket = QSeries(nv)
    if g >= 1:
        if g == 1 and k == 1:
            # W_2^0(q, qbar) = 1/(q - qbar)^2 at qbar = -q, with the leg sign.
            bracket = bracket + QSeries(
                nv, {-2: LaurentPoly.const(nv, Fraction(-1, 4))}
            )
        else:
            sub = airy_correlator(g - 1, k + 1)
            bracket = bracket + _attach(sub.coeff, ["q", "qbar"] + legs, nv)
    for h in range(g + 1):
        for chosen in _subsets(legs):
            rest = [v for v in legs if v not in chosen]
            # W_1^0 vanishes: drop the splittings where either side would
            # be the genus-0 one-point function.
            if (h == 0 and not chosen) or (h == g and not rest):
                continue
            f1 = _factor(h, chosen, "q", nv, order)
            f2 = _factor(g - h, rest, "qbar", nv, order)
            bracket = bracket + f1 * f2
    return residue_at_zero(kernel_series(order, nv) * bracket)


# Memo of finished correlators; values are immutable and recomputation is
# idempotent, so concurrent fills of the same key are harmless.
_CACHE: dict[tuple[int, int], Correlator] = {}


def airy_correlator(g: int, k: int) -> Correlator:
    """The genus-g, k-leg correlator of the Airy curve, exactly.

    Requires a stable pair: 2g - 2 + k >= 1 (and within the configured
    recursion bound).  The result is cached after a truncation-stability
    re-check at a deeper cutoff.
    """
    if k < 1 or g < 0:
        raise ValueError(f"need genus >= 0 and at least one leg, got ({g}, {k})")
    neg_euler = 2 * g - 2 + k
    if neg_euler < 1:
        raise ValueError(f"unstable correlator requested: genus {g}, {k} legs")
    if neg_euler > MAX_NEG_EULER:
        raise ValueError(
            f"correlator (genus {g}, {k} legs) beyond configured bound "
            f"2g-2+k <= {MAX_NEG_EULER}"
        )
    got = _CACHE.get((g, k))
    if got is not None:
        return got
    order = default_truncation(g, k)
    coeff = _residue_recursion(g, k, order)
    for _ in range(8):
        recheck = _residue_recursion(g, k, order + 4)
        if recheck == coeff:
            break
        order *= 2
        coeff = _residue_recursion(g, k, order)
    else:
        raise RuntimeError(f"residue failed to stabilize for ({g}, {k})")
    corr = Correlator(g, k, coeff)
    _CACHE[(g, k)] = corr
    return corr
