"""Exact arithmetic for trigraded Poincare series.

Everything lives on the integer exponent lattice of the grading shifts
(Q, A, T).  The derived variables q = Q^2, t = T^2 Q^-2, a = A Q^-2 form a
sublattice: the (q,a,t)-monomial q^i a^j t^k sits at
(qexp, aexp, texp) = (2i - 2j - 2k, j, 2k).

A LaurentPoly is a sparse map from lattice points to nonzero integers.
A GradedSeries is a LaurentPoly numerator over a multiset of denominator
factors (1 - q t^{1-i}), i.e. (1 - Q^{2i} T^{2-2i}), indexed by i >= 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Optional, Tuple

Monomial = Tuple[int, int, int]  # (qexp, aexp, texp) on the (Q,A,T) lattice

MONO_ONE: Monomial = (0, 0, 0)


class LatticeError(ValueError):
    """A term does not lie on the (q,a,t) sublattice."""


def qat_monomial(i: int, j: int, k: int) -> Monomial:
    """Lattice point of q^i a^j t^k."""
    return (2 * i - 2 * j - 2 * k, j, 2 * k)


def monomial_to_qat(m: Monomial) -> Tuple[int, int, int]:
    """Inverse of qat_monomial; raises LatticeError off the sublattice."""
    qexp, aexp, texp = m
    if qexp % 2 or texp % 2:
        raise LatticeError(f"monomial {m} is not on the (q,a,t) sublattice")
    return (qexp // 2 + aexp + texp // 2, aexp, texp // 2)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def _double_qdeg(m: Monomial) -> int:
    # 2 * (q-degree); integral even off the sublattice
    return m[0] + 2 * m[1] + m[2]


class LaurentPoly:
    """Sparse integer Laurent polynomial in Q, A, T.

    Canonical form: no zero coefficients are stored.  Instances are
    treated as immutable; all operations return new values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        if terms:
            self.terms: Dict[Monomial, int] = {m: c for m, c in terms.items() if c}
        else:
            self.terms = {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def monomial(cls, m: Monomial, coeff: int = 1) -> "LaurentPoly":
        return cls({m: coeff})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({MONO_ONE: 1})

    @classmethod
    def from_qat(cls, qat_terms: Mapping[Tuple[int, int, int], int]) -> "LaurentPoly":
        """Build from a map {(i, j, k): coeff} of q^i a^j t^k terms."""
        return cls({qat_monomial(i, j, k): c for (i, j, k), c in qat_terms.items()})

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            q1, a1, t1 = m1
            for m2, c2 in other.terms.items():
                m = (q1 + m2[0], a1 + m2[1], t1 + m2[2])
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    def scale(self, m: Monomial, coeff: int = 1) -> "LaurentPoly":
        """Multiply by coeff * Q^a A^b T^c in one pass."""
        if coeff == 0:
            return LaurentPoly.zero()
        dq, da, dt = m
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {(q + dq, a + da, t + dt): c * coeff for (q, a, t), c in self.terms.items()}
        return res

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms!r})"

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items())

    def has_even_t(self) -> bool:
        return all(t % 2 == 0 for (_, _, t) in self.terms)


def poly_arith(op: str, f: LaurentPoly, g: Optional[LaurentPoly] = None,
               monomial: Monomial = MONO_ONE, coeff: int = 1) -> LaurentPoly:
    """Dispatch-style entry point mirroring the operator methods."""
    if op == "add":
        assert g is not None
        return f + g
    if op == "sub":
        assert g is not None
        return f - g
    if op == "mul":
        assert g is not None
        return f * g
    if op == "negate":
        return -f
    if op == "scale-by-monomial":
        return f.scale(monomial, coeff)
    raise ValueError(f"unknown op {op!r}")


def denom_monomial(i: int) -> Monomial:
    """Lattice point of q t^{1-i} = Q^{2i} T^{2-2i}."""
    return (2 * i, 0, 2 - 2 * i)


def divide_one_minus(f: LaurentPoly, direction: Monomial) -> Optional[LaurentPoly]:
    """Exact quotient f / (1 - M) with M the given lattice direction.

    Terms are grouped into lines e + Z*M.  Along each line write
    f = sum_k f_k M^k; then f = (1 - M) g iff sum_k f_k = 0, with
    g_k = sum_{j <= k} f_j.  Returns None if not divisible.
    """
    dq, da, dt = direction
    assert dq > 0
    lines: Dict[Tuple[int, int, int], list] = {}
    for (q, a, t), c in f.terms.items():
        k = q // dq
        rep = (q - k * dq, a - k * da, t - k * dt)
        lines.setdefault(rep, []).append((k, c))
    out: Dict[Monomial, int] = {}
    for rep, entries in lines.items():
        entries.sort()
        acc = 0
        rq, ra, rt = rep
        for idx, (k, c) in enumerate(entries):
            acc += c
            if acc:
                # the running sum holds for every k up to the next entry
                stop = entries[idx + 1][0] if idx + 1 < len(entries) else k + 1
                for kk in range(k, stop):
                    out[(rq + kk * dq, ra + kk * da, rt + kk * dt)] = acc
        if acc != 0:
            return None
    res = LaurentPoly.__new__(LaurentPoly)
    res.terms = out
    return res


@dataclass(frozen=True)
class DenomVector:
    """Multiset of denominator factors (1 - q t^{1-i}), keyed by i >= 1."""

    mult: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "DenomVector":
        items = tuple(sorted((i, m) for i, m in d.items() if m))
        for i, m in items:
            if i < 1 or m < 1:
                raise ValueError(f"bad denominator entry ({i}, {m})")
        return cls(items)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.mult)

    def is_empty(self) -> bool:
        return not self.mult

    def total(self) -> int:
        return sum(m for _, m in self.mult)

    def merged_max(self, other: "DenomVector") -> "DenomVector":
        d = self.as_dict()
        for i, m in other.mult:
            d[i] = max(d.get(i, 0), m)
        return DenomVector.from_dict(d)

    def merged_sum(self, other: "DenomVector") -> "DenomVector":
        d = self.as_dict()
        for i, m in other.mult:
            d[i] = d.get(i, 0) + m
        return DenomVector.from_dict(d)


def _clearing_factor(target: DenomVector, have: DenomVector) -> LaurentPoly:
    """Product of (1 - q t^{1-i}) raised to target minus have."""
    out = LaurentPoly.one()
    hd = have.as_dict()
    for i, m in target.mult:
        deficit = m - hd.get(i, 0)
        for _ in range(deficit):
            out = out * LaurentPoly({MONO_ONE: 1, denom_monomial(i): -1})
    return out


class GradedSeries:
    """num / prod (1 - q t^{1-i})^{d_i}, kept canonical.

    Canonical: the numerator is not divisible by any active denominator
    factor, and a zero numerator carries an empty denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: DenomVector = DenomVector(),
                 canonical: bool = False):
        if canonical:
            self.num = num
            self.den = den
        else:
            self.num, self.den = _canonical_parts(num, den)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "GradedSeries":
        return cls(LaurentPoly.zero(), DenomVector(), canonical=True)

    @classmethod
    def one(cls) -> "GradedSeries":
        return cls(LaurentPoly.one(), DenomVector(), canonical=True)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "GradedSeries":
        return cls(p, DenomVector(), canonical=True)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "GradedSeries") -> "GradedSeries":
        lcd = self.den.merged_max(other.den)
        n1 = self.num * _clearing_factor(lcd, self.den)
        n2 = other.num * _clearing_factor(lcd, other.den)
        return GradedSeries(n1 + n2, lcd)

    def __neg__(self) -> "GradedSeries":
        return GradedSeries(-self.num, self.den, canonical=True)

    def __sub__(self, other: "GradedSeries") -> "GradedSeries":
        return self + (-other)

    def __mul__(self, other: "GradedSeries") -> "GradedSeries":
        return GradedSeries(self.num * other.num, self.den.merged_sum(other.den))

    def scale(self, m: Monomial, coeff: int = 1) -> "GradedSeries":
        if coeff == 0:
            return GradedSeries.zero()
        return GradedSeries(self.num.scale(m, coeff), self.den, canonical=True)

    def with_extra_denominator(self, factors: Mapping[int, int]) -> "GradedSeries":
        extra = DenomVector.from_dict(dict(factors))
        return GradedSeries(self.num, self.den.merged_sum(extra))

    def __eq__(self, other: object) -> bool:
        # canonical representatives are unique, so syntactic equality suffices
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self) -> str:
        return f"GradedSeries({self.num!r}, {self.den!r})"


def _canonical_parts(num: LaurentPoly, den: DenomVector) -> Tuple[LaurentPoly, DenomVector]:
    if num.is_zero():
        return LaurentPoly.zero(), DenomVector()
    d = den.as_dict()
    for i in sorted(d):
        direction = denom_monomial(i)
        while d[i] > 0:
            quo = divide_one_minus(num, direction)
            if quo is None:
                break
            num = quo
            d[i] -= 1
            if num.is_zero():
                return LaurentPoly.zero(), DenomVector()
        if d[i] == 0:
            del d[i]
    return num, DenomVector.from_dict(d)


def canonicalize_series(s: GradedSeries) -> GradedSeries:
    return GradedSeries(s.num, s.den)


def series_arith(op: str, f: GradedSeries, g: Optional[GradedSeries] = None,
                 monomial: Monomial = MONO_ONE, coeff: int = 1) -> GradedSeries:
    if op == "add":
        assert g is not None
        return f + g
    if op == "mul":
        assert g is not None
        return f * g
    if op == "scale-by-monomial":
        return f.scale(monomial, coeff)
    raise ValueError(f"unknown op {op!r}")


def series_equal(f: GradedSeries, g: GradedSeries) -> bool:
    """Value equality via cross-multiplied numerators."""
    if f.den == g.den:
        return f.num == g.num
    lcd = f.den.merged_max(g.den)
    return f.num * _clearing_factor(lcd, f.den) == g.num * _clearing_factor(lcd, g.den)


def expand_series(s: GradedSeries, depth: int) -> LaurentPoly:
    """Truncated geometric expansion, keeping q-degree <= depth.

    Every denominator factor has q-degree exactly 1, so the expansion of
    each factor contributes finitely many terms below the cutoff.
    """
    limit = 2 * depth
    out = LaurentPoly({m: c for m, c in s.num.terms.items() if _double_qdeg(m) <= limit})
    for i, mult in s.den.mult:
        direction = denom_monomial(i)
        for _ in range(mult):
            total = dict(out.terms)
            frontier = out
            while frontier.terms:
                frontier = LaurentPoly({
                    mono_mul(m, direction): c
                    for m, c in frontier.terms.items()
                    if _double_qdeg(m) + 2 <= limit
                })
                for m, c in frontier.terms.items():
                    s2 = total.get(m, 0) + c
                    if s2:
                        total[m] = s2
                    else:
                        del total[m]
            out = LaurentPoly(total)
    return out


def grading_convert(f: LaurentPoly, direction: str):
    """Relabel exponents between the (Q,A,T) lattice and (q,a,t)."""
    if direction == "to_qat":
        return sorted((monomial_to_qat(m), c) for m, c in f.terms.items())
    if direction == "to_QAT":
        return f.sorted_terms()
    raise ValueError(f"unknown direction {direction!r}")


def equal_up_to_monomial(f: GradedSeries, g: GradedSeries) -> Optional[Monomial]:
    """Return M with f = M * g (cross-multiplied), or None.

    The candidate shift is fixed by the lexicographically least terms:
    a monomial shift preserves lexicographic order of exponents.
    """
    lcd = f.den.merged_max(g.den)
    nf = f.num * _clearing_factor(lcd, f.den)
    ng = g.num * _clearing_factor(lcd, g.den)
    if nf.is_zero() or ng.is_zero():
        return MONO_ONE if nf.is_zero() and ng.is_zero() else None
    mf = min(nf.terms)
    mg = min(ng.terms)
    shift = (mf[0] - mg[0], mf[1] - mg[1], mf[2] - mg[2])
    if ng.scale(shift) == nf:
        return shift
    return None


# -- rendering ----------------------------------------------------------


def _fmt_power(var: str, e: int, latex: bool) -> str:
    if e == 1:
        return var
    if latex:
        return f"{var}^{{{e}}}"
    return f"{var}^{e}" if 0 <= e <= 9 else f"{var}^({e})"


def _fmt_qat_monomial(i: int, j: int, k: int, latex: bool = False) -> str:
    parts = []
    if i:
        parts.append(_fmt_power("q", i, latex))
    if j:
        parts.append(_fmt_power("a", j, latex))
    if k:
        parts.append(_fmt_power("t", k, latex))
    if not parts:
        return "1"
    return ("" if latex else "*").join(parts) if not latex else " ".join(parts)


def _fmt_QAT_monomial(m: Monomial, latex: bool = False) -> str:
    parts = []
    for var, e in zip("QAT", m):
        if e:
            parts.append(_fmt_power(var, e, latex))
    if not parts:
        return "1"
    return " ".join(parts) if latex else "*".join(parts)


def _group_terms_qat(f: LaurentPoly):
    """Terms as {a-degree: {t-degree: {q-degree: coeff}}}, sorted."""
    grouped: Dict[int, Dict[int, Dict[int, int]]] = {}
    for m, c in f.terms.items():
        i, j, k = monomial_to_qat(m)
        grouped.setdefault(j, {}).setdefault(k, {})[i] = c
    return grouped

def _fmt_signed(text: str, coeff: int, first: bool) -> str:
    mag = abs(coeff)
    if text == "1":
        body = str(mag)
    elif mag == 1:
        body = text
    else:
        body = f"{mag}{text}" if text.startswith("(") else f"{mag}*{text}"
    if first:
        return f"-{body}" if coeff < 0 else body
    return f" - {body}" if coeff < 0 else f" + {body}"


def _poly_text_qat(f: LaurentPoly, latex: bool) -> str:
    if f.is_zero():
        return "0"
    grouped = _group_terms_qat(f)
    chunks = []
    first = True
    for j in sorted(grouped):
        for k in sorted(grouped[j]):
            for i in sorted(grouped[j][k]):
                c = grouped[j][k][i]
                chunks.append(_fmt_signed(_fmt_qat_monomial(i, j, k, latex), c, first))
                first = False
    return "".join(chunks)


def _poly_text_QAT(f: LaurentPoly, latex: bool) -> str:
    if f.is_zero():
        return "0"
    chunks = []
    first = True
    for m, c in f.sorted_terms():
        chunks.append(_fmt_signed(_fmt_QAT_monomial(m, latex), c, first))
        first = False
    return "".join(chunks)


def _on_sublattice(f: LaurentPoly) -> bool:
    return all(q % 2 == 0 and t % 2 == 0 for (q, _, t) in f.terms)


def _denom_text(den: DenomVector, latex: bool) -> str:
    parts = []
    for i, m in den.mult:
        if i == 1:
            base = "(1-q)" if not latex else "(1 - q)"
        else:
            tpow = _fmt_power("t", 1 - i, latex)
            base = f"(1-q*{tpow})" if not latex else f"(1 - q {tpow})"
        if m > 1:
            base += f"^{{{m}}}" if latex else f"^{m}"
        parts.append(base)
    return ("" if latex else "*").join(parts) if not latex else " ".join(parts)


def render(s: GradedSeries, fmt: str = "human") -> str:
    if fmt == "json":
        num = [[q, a, t, c] for (q, a, t), c in s.num.sorted_terms()]
        den = [[i, m] for i, m in s.den.mult]
        return json.dumps({"num": num, "den": den}, separators=(",", ":"))
    qat = _on_sublattice(s.num)
    if fmt == "human":
        num_text = _poly_text_qat(s.num, False) if qat else _poly_text_QAT(s.num, False)
        if s.den.is_empty():
            return num_text
        return f"({num_text}) / ({_denom_text(s.den, False)})"
    if fmt == "latex":
        num_text = _poly_text_qat(s.num, True) if qat else _poly_text_QAT(s.num, True)
        if s.den.is_empty():
            return num_text
        return f"\\frac{{{num_text}}}{{{_denom_text(s.den, True)}}}"
    raise ValueError(f"unknown format {fmt!r}")
