"""Power series and rational forms over a graded monoid.

Three layers, all with coefficients in a computable K-ring quotient:

* MonoidPolynomial: finitely many terms, exact.
* TruncatedSeries: all coefficients up to a degree bound N, exact up to N.
  Binary operations insist on the same monoid and the same bound; nothing
  re-truncates silently.
* RationalSeries: numerator polynomial times a product of inverted monic
  binomials (1 - c*t^alpha)^-e.  This is the only denominator shape the
  engine synthesizes, mirroring how the series of interest arise.

certify_rational is deliberately a semi-decision: multiplying a truncated
series by a candidate denominator can only refute rationality below the
truncation bound or report consistency up to it, never prove it outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import (
    EnumerationLimitError,
    LocalizationMismatch,
    NotMonic,
    PushforwardError,
    SeriesMismatch,
    SpecMismatch,
    ZeroClassFactor,
)
from .kring import KElement, KRingSpec, Specialization, specialize, standard_ring
from .monoid import (
    GradedMonoid,
    MonoidElement,
    MonoidHom,
    direct_sum,
    free_graded_monoid,
)

__all__ = [
    "MonoidPolynomial",
    "TruncatedSeries",
    "RationalSeries",
    "RationalityVerdict",
    "truncated_mul",
    "rational_expand",
    "certify_rational",
    "pushforward",
    "external_product",
    "localize_quotient",
    "specialize_series",
    "curve_zeta",
    "punctured_p1_zeta",
    "binomial_factor_polynomial",
]


def _coerce_coeff(ring: KRingSpec, c) -> KElement:
    if isinstance(c, int):
        return ring.from_int(c)
    if isinstance(c, KElement):
        if c.spec != ring:
            raise SpecMismatch("coefficient from a different ring spec")
        return c
    raise TypeError(f"bad coefficient {c!r}")


def _sorted_terms(ring, monoid, mapping):
    items = []
    for e, c in mapping.items():
        c = _coerce_coeff(ring, c)
        if c.is_zero():
            continue
        if e.moduli != monoid.group.invariants or len(e.free) != monoid.group.rank:
            raise ValueError("term class is not in the series monoid")
        items.append((monoid.degree(e), e, c))
    items.sort(key=lambda t: (t[0], t[1].sort_key()))
    return tuple((e, c) for _, e, c in items), tuple(d for d, _, _ in items)


class MonoidPolynomial:
    """Finite R-linear combination of monoid classes."""

    __slots__ = ("ring", "monoid", "terms", "_degrees")

    def __init__(self, ring: KRingSpec, monoid: GradedMonoid, terms=()):
        self.ring = ring
        self.monoid = monoid
        mapping = dict(terms) if not isinstance(terms, dict) else terms
        self.terms, self._degrees = _sorted_terms(ring, monoid, mapping)
        for d in self._degrees:
            if d < 0:
                raise ValueError("polynomial term of negative degree")

    @classmethod
    def one(cls, ring, monoid):
        return cls(ring, monoid, {monoid.zero: ring.one})

    @classmethod
    def zero(cls, ring, monoid):
        return cls(ring, monoid, {})

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (len(self.terms) == 1 and self.terms[0][0].is_zero()
                and self.terms[0][1].is_one())

    def is_monic(self) -> bool:
        return self.coefficient(self.monoid.zero).is_one()

    def degree(self) -> int:
        """Max degree of a term; -1 for the zero polynomial."""
        return self._degrees[-1] if self._degrees else -1

    def coefficient(self, e: MonoidElement) -> KElement:
        for e2, c in self.terms:
            if e2 == e:
                return c
        return self.ring.zero

    def _check(self, other: "MonoidPolynomial"):
        if self.ring != other.ring:
            raise SpecMismatch("polynomials over different ring specs")
        if self.monoid != other.monoid:
            raise SeriesMismatch("polynomials over different monoids")

    def __add__(self, other: "MonoidPolynomial") -> "MonoidPolynomial":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, self.ring.zero) + c
        return MonoidPolynomial(self.ring, self.monoid, acc)

    def __sub__(self, other: "MonoidPolynomial") -> "MonoidPolynomial":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, self.ring.zero) - c
        return MonoidPolynomial(self.ring, self.monoid, acc)

    def __mul__(self, other: "MonoidPolynomial") -> "MonoidPolynomial":
        self._check(other)
        acc: dict[MonoidElement, KElement] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                c = c1 * c2
                acc[e] = acc.get(e, self.ring.zero) + c
        return MonoidPolynomial(self.ring, self.monoid, acc)

    def scale(self, c) -> "MonoidPolynomial":
        c = _coerce_coeff(self.ring, c)
        return MonoidPolynomial(self.ring, self.monoid,
                                {e: c * c2 for e, c2 in self.terms})

    def __eq__(self, other):
        if not isinstance(other, MonoidPolynomial):
            return NotImplemented
        return (self.ring == other.ring and self.monoid == other.monoid
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.monoid, self.terms))

    def as_series(self, truncation: int) -> "TruncatedSeries":
        """View as a truncated series; terms above the bound are dropped."""
        kept = {e: c for (e, c), d in zip(self.terms, self._degrees)
                if d <= truncation}
        return TruncatedSeries(self.ring, self.monoid, truncation, kept)

    def specialize(self, s: Specialization) -> "MonoidPolynomial":
        return MonoidPolynomial(self.ring, self.monoid,
                                {e: specialize(c, s) for e, c in self.terms})

    def __str__(self):
        return _terms_str(self.monoid, self.terms) or "0"

    def __repr__(self):
        return f"<poly {self}>"


def _coeff_str(c: KElement, word: str) -> str:
    """Render coefficient times monomial word; word '1' means the unit class."""
    if len(c.terms) > 1:
        body = f"({c})"
        return body if word == "1" else f"{body}*{word}"
    text = str(c)
    if word == "1":
        return text
    if text == "1":
        return word
    if text == "-1":
        return f"-{word}"
    return f"{text}*{word}"


def _terms_str(monoid: GradedMonoid, terms) -> str:
    pieces = []
    for e, c in terms:
        word = monoid.format_element(e)
        body = _coeff_str(c, word)
        if not pieces:
            pieces.append(body)
        elif body.startswith("-"):
            pieces.append(f"- {body[1:]}")
        else:
            pieces.append(f"+ {body}")
    return " ".join(pieces)


class TruncatedSeries:
    """All terms of degree <= truncation, exactly."""

    __slots__ = ("ring", "monoid", "truncation", "terms", "_degrees")

    def __init__(self, ring: KRingSpec, monoid: GradedMonoid, truncation: int,
                 terms=()):
        if truncation < 0:
            raise ValueError("negative truncation bound")
        self.ring = ring
        self.monoid = monoid
        self.truncation = int(truncation)
        mapping = dict(terms) if not isinstance(terms, dict) else terms
        self.terms, self._degrees = _sorted_terms(ring, monoid, mapping)
        for d in self._degrees:
            if d < 0 or d > self.truncation:
                raise ValueError("series term outside [0, truncation]")

    @classmethod
    def one(cls, ring, monoid, truncation):
        return cls(ring, monoid, truncation, {monoid.zero: ring.one})

    def coefficient(self, e: MonoidElement) -> KElement:
        for e2, c in self.terms:
            if e2 == e:
                return c
        return self.ring.zero

    def coefficients_by_degree(self) -> dict[int, KElement]:
        """Degree d -> sum of coefficients in degree d (handy over Z>=0)."""
        out: dict[int, KElement] = {}
        for (e, c), d in zip(self.terms, self._degrees):
            out[d] = out.get(d, self.ring.zero) + c
        return out

    def is_monic(self) -> bool:
        return self.coefficient(self.monoid.zero).is_one()

    def _check(self, other: "TruncatedSeries"):
        if self.ring != other.ring:
            raise SpecMismatch("series over different ring specs")
        if self.monoid != other.monoid:
            raise SeriesMismatch("series over different monoids")
        if self.truncation != other.truncation:
            raise SeriesMismatch(
                f"truncation bounds differ: {self.truncation} vs {other.truncation}")

    def __add__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, self.ring.zero) + c
        return TruncatedSeries(self.ring, self.monoid, self.truncation, acc)

    def __sub__(self, other):
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, self.ring.zero) - c
        return TruncatedSeries(self.ring, self.monoid, self.truncation, acc)

    def __mul__(self, other):
        self._check(other)
        n = self.truncation
        acc: dict[MonoidElement, KElement] = {}
        for (e1, c1), d1 in zip(self.terms, self._degrees):
            for (e2, c2), d2 in zip(other.terms, other._degrees):
                if d1 + d2 > n:
                    break  # other's terms are sorted by degree
                e = e1 + e2
                c = c1 * c2
                acc[e] = acc.get(e, self.ring.zero) + c
        return TruncatedSeries(self.ring, self.monoid, n, acc)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.ring == other.ring and self.monoid == other.monoid
                and self.truncation == other.truncation and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.monoid, self.truncation, self.terms))

    def specialize(self, s: Specialization) -> "TruncatedSeries":
        return TruncatedSeries(self.ring, self.monoid, self.truncation,
                               {e: specialize(c, s) for e, c in self.terms})

    def __str__(self):
        body = _terms_str(self.monoid, self.terms) or "0"
        return f"{body} + O(degree {self.truncation + 1})"

    def __repr__(self):
        return f"<series {self}>"


def truncated_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Exact convolution below the shared truncation bound."""
    return f * g


@dataclass(frozen=True)
class RationalityVerdict:
    """Outcome of testing a truncated series against a candidate denominator."""

    consistent: bool
    truncation: int
    numerator_bound: int
    witness_degree: int | None = None
    witness_class: MonoidElement | None = None
    witness_coeff: KElement | None = None

    def __str__(self):
        if self.consistent:
            return f"consistent-to-{self.truncation}"
        return f"refuted-at-degree-{self.witness_degree}"


def certify_rational(f: TruncatedSeries, g: MonoidPolynomial,
                     numerator_degree: int | None = None) -> RationalityVerdict:
    """Semi-decide whether f equals (polynomial of bounded degree) / g.

    Computes f*g up to the truncation bound; a nonzero term of degree above
    the claimed numerator degree (default: deg g) refutes the claim and is
    reported as a witness.  Otherwise the claim is consistent to the bound.
    """
    if f.ring != g.ring:
        raise SpecMismatch("series and denominator over different ring specs")
    if f.monoid != g.monoid:
        raise SeriesMismatch("series and denominator over different monoids")
    if not g.is_monic():
        raise NotMonic("candidate denominator must have constant term 1")
    if g.degree() >= f.truncation:
        raise SeriesMismatch("denominator degree reaches the truncation bound")
    bound = g.degree() if numerator_degree is None else int(numerator_degree)
    h = f * g.as_series(f.truncation)
    for (e, c), d in zip(h.terms, h._degrees):
        if d > bound:
            return RationalityVerdict(False, f.truncation, bound, d, e, c)
    return RationalityVerdict(True, f.truncation, bound)


class RationalSeries:
    """numerator * product over factors (c, alpha, e) of (1 - c t^alpha)^-e."""

    __slots__ = ("ring", "monoid", "numerator", "factors")

    def __init__(self, ring: KRingSpec, monoid: GradedMonoid,
                 numerator: MonoidPolynomial | None = None, factors=()):
        self.ring = ring
        self.monoid = monoid
        if numerator is None:
            numerator = MonoidPolynomial.one(ring, monoid)
        if numerator.ring != ring or numerator.monoid != monoid:
            raise SeriesMismatch("numerator context differs from the series")
        self.numerator = numerator
        merged: dict[tuple, tuple[KElement, MonoidElement, int]] = {}
        order: list[tuple] = []
        for c, alpha, e in factors:
            c = _coerce_coeff(ring, c)
            e = int(e)
            if e < 0:
                raise ValueError("negative factor exponent")
            if e == 0 or c.is_zero():
                continue
            if alpha.is_zero():
                raise ZeroClassFactor("denominator factor at the zero class")
            if monoid.degree(alpha) < 1:
                raise ZeroClassFactor("denominator class has non-positive degree")
            if not monoid.contains(alpha):
                raise ZeroClassFactor("denominator class is not effective")
            key = (alpha.sort_key(), c.terms)
            if key in merged:
                c0, a0, e0 = merged[key]
                merged[key] = (c0, a0, e0 + e)
            else:
                order.append(key)
                merged[key] = (c, alpha, e)
        facs = [merged[k] for k in order]
        facs.sort(key=lambda f: (monoid.degree(f[1]), f[1].sort_key(), f[0].terms, f[2]))
        self.factors = tuple(facs)

    def is_monic(self) -> bool:
        return self.numerator.is_monic()

    def _check(self, other: "RationalSeries"):
        if self.ring != other.ring:
            raise SpecMismatch("rational series over different ring specs")
        if self.monoid != other.monoid:
            raise SeriesMismatch("rational series over different monoids")

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        self._check(other)
        return RationalSeries(self.ring, self.monoid,
                              self.numerator * other.numerator,
                              self.factors + other.factors)

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return (self.ring == other.ring and self.monoid == other.monoid
                and self.numerator == other.numerator and self.factors == other.factors)

    def __hash__(self):
        return hash((self.ring, self.monoid, self.numerator, self.factors))

    def expand(self, truncation: int, max_terms: int | None = None) -> TruncatedSeries:
        return rational_expand(self, truncation, max_terms)

    def denominator_polynomial(self) -> MonoidPolynomial:
        out = MonoidPolynomial.one(self.ring, self.monoid)
        for c, alpha, e in self.factors:
            b = binomial_factor_polynomial(self.ring, self.monoid, c, alpha)
            for _ in range(e):
                out = out * b
        return out

    def specialize(self, s: Specialization) -> "RationalSeries":
        return RationalSeries(self.ring, self.monoid, self.numerator.specialize(s),
                              [(specialize(c, s), a, e) for c, a, e in self.factors])

    def __str__(self):
        num = str(self.numerator)
        if not self.factors:
            return num
        parts = []
        for c, alpha, e in self.factors:
            word = self.monoid.format_element(alpha)
            binom = f"(1 - {_coeff_str(c, word)})"
            parts.append(binom if e == 1 else f"{binom}^{e}")
        den = "*".join(parts) if len(parts) == 1 else f"({'*'.join(parts)})"
        if self.numerator.is_one():
            return f"1/{den}"
        return f"({num})/{den}"

    def __repr__(self):
        return f"<rational {self}>"


def binomial_factor_polynomial(ring, monoid, c, alpha) -> MonoidPolynomial:
    """The polynomial 1 - c*t^alpha."""
    c = _coerce_coeff(ring, c)
    acc = {monoid.zero: ring.one}
    acc[alpha] = acc.get(alpha, ring.zero) - c
    return MonoidPolynomial(ring, monoid, acc)


def rational_expand(f: RationalSeries, truncation: int,
                    max_terms: int | None = None) -> TruncatedSeries:
    """Expand numerator / product of binomials exactly up to the bound.

    When max_terms is given the running term count is capped; exceeding it
    raises EnumerationLimitError instead of finishing the expansion.
    """
    result = f.numerator.as_series(truncation)
    for c, alpha, e in f.factors:
        if alpha.is_zero():
            raise ZeroClassFactor("denominator factor at the zero class")
        d = f.monoid.degree(alpha)
        terms: dict[MonoidElement, KElement] = {}
        k = 0
        power = f.ring.one
        while k * d <= truncation:
            terms[k * alpha] = f.ring.from_int(comb(k + e - 1, e - 1)) * power
            power = power * c
            k += 1
        geo = TruncatedSeries(f.ring, f.monoid, truncation, terms)
        result = result * geo
        if max_terms is not None and len(result.terms) > max_terms:
            raise EnumerationLimitError(
                f"expansion exceeds {max_terms} terms; raise MCS_MAX_TERMS")
    return result


def specialize_series(obj, s: Specialization):
    """Apply a coefficient-ring map to any series-like object."""
    if isinstance(obj, (MonoidPolynomial, TruncatedSeries, RationalSeries)):
        return obj.specialize(s)
    if isinstance(obj, KElement):
        return specialize(obj, s)
    raise TypeError(f"cannot specialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# pushforward along a monoid homomorphism


def pushforward(f, phi: MonoidHom):
    """Image of a series under a grading-compatible monoid homomorphism.

    Coefficients of source classes with equal images are summed.  For a
    truncated series the result bound is the largest one the source bound
    certifies: floor(N / max_g deg_src(g)/deg_tgt(phi g)).
    """
    if not phi.grading_compatible():
        raise PushforwardError("homomorphism does not respect the gradings")
    if isinstance(f, MonoidPolynomial):
        if f.monoid != phi.source:
            raise PushforwardError("polynomial lives on a different monoid")
        acc: dict[MonoidElement, KElement] = {}
        for e, c in f.terms:
            img = phi.apply(e)
            acc[img] = acc.get(img, f.ring.zero) + c
        return MonoidPolynomial(f.ring, phi.target, acc)
    if isinstance(f, TruncatedSeries):
        if f.monoid != phi.source:
            raise PushforwardError("series lives on a different monoid")
        ratio = phi.degree_ratio()
        bound = f.truncation * ratio.denominator // ratio.numerator
        acc = {}
        for e, c in f.terms:
            img = phi.apply(e)
            if phi.target.degree(img) <= bound:
                acc[img] = acc.get(img, f.ring.zero) + c
        return TruncatedSeries(f.ring, phi.target, bound, acc)
    if isinstance(f, RationalSeries):
        if f.monoid != phi.source:
            raise PushforwardError("series lives on a different monoid")
        num = pushforward(f.numerator, phi)
        facs = [(c, phi.apply(a), e) for c, a, e in f.factors]
        return RationalSeries(f.ring, phi.target, num, facs)
    raise TypeError(f"cannot push forward {type(f).__name__}")


# ---------------------------------------------------------------------------
# external product over the direct sum of monoids


def external_product(f, g):
    """Product series over the direct sum of the two underlying monoids."""
    if isinstance(f, TruncatedSeries) and isinstance(g, TruncatedSeries):
        if f.ring != g.ring:
            raise SpecMismatch("external product across ring specs")
        if f.truncation != g.truncation:
            raise SeriesMismatch("external product needs equal truncation bounds")
        total, inj1, inj2 = direct_sum(f.monoid, g.monoid)
        n = f.truncation
        acc: dict[MonoidElement, KElement] = {}
        for (e1, c1), d1 in zip(f.terms, f._degrees):
            for (e2, c2), d2 in zip(g.terms, g._degrees):
                if d1 + d2 > n:
                    break
                e = inj1.apply(e1) + inj2.apply(e2)
                c = c1 * c2
                acc[e] = acc.get(e, f.ring.zero) + c
        return TruncatedSeries(f.ring, total, n, acc)
    if isinstance(f, RationalSeries) and isinstance(g, RationalSeries):
        if f.ring != g.ring:
            raise SpecMismatch("external product across ring specs")
        total, inj1, inj2 = direct_sum(f.monoid, g.monoid)
        acc: dict[MonoidElement, KElement] = {}
        for e1, c1 in f.numerator.terms:
            for e2, c2 in g.numerator.terms:
                e = inj1.apply(e1) + inj2.apply(e2)
                c = c1 * c2
                acc[e] = acc.get(e, f.ring.zero) + c
        num = MonoidPolynomial(f.ring, total, acc)
        facs = [(c, inj1.apply(a), e) for c, a, e in f.factors]
        facs += [(c, inj2.apply(a), e) for c, a, e in g.factors]
        return RationalSeries(f.ring, total, num, facs)
    raise TypeError("external_product expects two series of the same kind")


# ---------------------------------------------------------------------------
# localization quotient


def _divide_polynomial(num: MonoidPolynomial, den: MonoidPolynomial) -> MonoidPolynomial:
    """Exact quotient num/den for monic den, else LocalizationMismatch.

    Works in degree order like power-series division; only quotients of
    degree <= deg(num) are found, which covers every quotient this engine
    produces (localizing removes strata, it never enlarges the numerator).
    """
    if not den.is_monic():
        raise NotMonic("division requires a monic divisor")
    if num.is_zero():
        return num
    bound = num.degree()
    ring, monoid = num.ring, num.monoid
    rest = {e: c for e, c in num.terms}
    quotient: dict[MonoidElement, KElement] = {}
    den_tail = [(e, c) for e, c in den.terms if not e.is_zero()]
    while rest:
        d, e, c = min(((monoid.degree(e), e, c) for e, c in rest.items()),
                      key=lambda t: (t[0], t[1].sort_key()))
        if d > bound:
            raise LocalizationMismatch(
                "quotient is not a polynomial of numerator-bounded degree")
        quotient[e] = quotient.get(e, ring.zero) + c
        del rest[e]
        for e2, c2 in den_tail:
            e3 = e + e2
            c3 = rest.get(e3, ring.zero) - c * c2
            if c3.is_zero():
                rest.pop(e3, None)
            else:
                rest[e3] = c3
    q = MonoidPolynomial(ring, monoid, quotient)
    if not (q * den == num):
        raise LocalizationMismatch("division left a nonzero remainder")
    return q


def localize_quotient(mc_x: RationalSeries, mc_y: RationalSeries) -> RationalSeries:
    """The rational series Q with Q * mc_y == mc_x, certified exactly.

    Shared denominator factors cancel; leftover factors of mc_y become
    numerator binomials; a non-trivial numerator of mc_y must divide exactly,
    otherwise LocalizationMismatch.
    """
    mc_x._check(mc_y)
    remaining = {}
    order = []
    for c, a, e in mc_x.factors:
        key = (a.sort_key(), c.terms)
        remaining[key] = (c, a, remaining[key][2] + e) if key in remaining else (c, a, e)
        if key not in order:
            order.append(key)
    leftover_y = []
    for c, a, e in mc_y.factors:
        key = (a.sort_key(), c.terms)
        have = remaining.get(key, (c, a, 0))[2]
        cancel = min(have, e)
        if cancel:
            remaining[key] = (c, a, have - cancel)
        if e - cancel:
            leftover_y.append((c, a, e - cancel))
    num = mc_x.numerator
    for c, a, e in leftover_y:
        b = binomial_factor_polynomial(mc_x.ring, mc_x.monoid, c, a)
        for _ in range(e):
            num = num * b
    if not mc_y.numerator.is_one():
        num = _divide_polynomial(num, mc_y.numerator)
    q_factors = [remaining[k] for k in order if remaining[k][2] > 0]
    return RationalSeries(mc_x.ring, mc_x.monoid, num, q_factors)


# ---------------------------------------------------------------------------
# curve zeta functions


def curve_zeta(genus: int, ring: KRingSpec | None = None,
               symbol_prefix: str = "a") -> RationalSeries:
    """Motivic zeta of a smooth projective curve over the monoid Z_{>=0}.

    Genus 0 is exact: 1/((1-t)(1-L t)).  For genus g >= 1 the numerator is
    the generic monic polynomial 1 + a_1 t + ... + a_{2g} t^{2g} in fresh
    free symbols; callers pin the symbols down by specializing.
    """
    if genus < 0:
        raise ValueError("negative genus")
    symbols = tuple(f"{symbol_prefix}{i}" for i in range(1, 2 * genus + 1))
    if ring is None:
        ring = standard_ring(symbols=symbols)
    for name in symbols:
        ring.index(name)  # raises SpecMismatch when the symbol is absent
    monoid = free_graded_monoid(("t",))
    t = monoid.generator_named("t")
    factors = [(ring.one, t, 1), (ring.generator("L"), t, 1)]
    num = {monoid.zero: ring.one}
    for i, name in enumerate(symbols, start=1):
        num[i * t] = ring.generator(name)
    return RationalSeries(ring, monoid, MonoidPolynomial(ring, monoid, num), factors)


def punctured_p1_zeta(punctures: int, ring: KRingSpec | None = None):
    """Zero-cycle series of a rational curve minus r points, in the homotopy
    quotient: (1-t)^(r-2), a polynomial once r >= 2.

    For r < 2 the series is honestly rational, not polynomial, and the
    rational form is returned instead: 1/(1-t) for r=1, 1/(1-t)^2 for r=0.
    """
    if punctures < 0:
        raise ValueError("negative puncture count")
    if ring is None:
        ring = standard_ring(a1_homotopy=True)
    if not ring.a1_homotopy:
        raise ValueError("punctured-line zeta lives in the homotopy quotient")
    monoid = free_graded_monoid(("t",))
    t = monoid.generator_named("t")
    if punctures >= 2:
        out = MonoidPolynomial.one(ring, monoid)
        b = binomial_factor_polynomial(ring, monoid, ring.one, t)
        for _ in range(punctures - 2):
            out = out * b
        return out
    return RationalSeries(ring, monoid, None, [(ring.one, t, 2 - punctures)])
