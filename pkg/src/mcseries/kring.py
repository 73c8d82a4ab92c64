"""Computable quotients of cycle-class rings.

A ring spec fixes an ordered list of polynomial generators over the integers
together with reduction rules that realize the quotient we can compute in:

* ``L`` is reserved for the class of the affine line.  With the homotopy
  quotient active, ``L`` is replaced by 1 eagerly at construction time, which
  is what collapses classes down to Euler-characteristic-like integers.
* ``eps`` is reserved for the sign class with ``eps**2 == 1`` (the rule is
  installed automatically whenever the generator is present).
* any further names are free symbols, e.g. numerator coefficients of a
  genus-g curve zeta function.

Elements are kept in canonical sparse form: a sorted tuple of
(exponent vector, nonzero integer coefficient) pairs, exponent vectors
ordered lexicographically.  Two elements are equal iff their canonical
forms are equal, so hashing and dict keying are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import MissingAssignment, SpecMismatch

ExpVec = tuple[int, ...]
Terms = tuple[tuple[ExpVec, int], ...]


@dataclass(frozen=True)
class ReductionRule:
    """Rewrite symbol**power into a polynomial of lower degree in symbol.

    ``replacement`` is a tuple of (exponent map, coefficient) pairs where the
    exponent map is a tuple of (name, exponent) pairs.  The replacement must
    have degree < power in the eliminated symbol, which makes rewriting
    terminate and, since rules touch disjoint single generators, confluent.
    """

    symbol: str
    power: int
    replacement: tuple[tuple[tuple[tuple[str, int], ...], int], ...]


EPS_SQUARE_RULE = ReductionRule("eps", 2, (((), 1),))


class KRingSpec:
    """Shared, immutable description of a coefficient ring."""

    __slots__ = ("generators", "reductions", "a1_homotopy", "_index",
                 "_compiled", "_reduce_cache", "_hash")

    def __init__(self, generators=("L", "eps"), reductions=(), a1_homotopy=False):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        for name in gens:
            if not name or not name[0].isalpha():
                raise ValueError(f"bad generator name {name!r}")
        rules = list(reductions)
        if "eps" in gens and not any(r.symbol == "eps" for r in rules):
            rules.append(EPS_SQUARE_RULE)
        for rule in rules:
            if rule.symbol not in gens:
                raise ValueError(f"reduction for unknown generator {rule.symbol!r}")
            if rule.power < 1:
                raise ValueError("reduction power must be >= 1")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "reductions", tuple(rules))
        object.__setattr__(self, "a1_homotopy", bool(a1_homotopy))
        object.__setattr__(self, "_index", {g: i for i, g in enumerate(gens)})
        compiled = {}
        for rule in rules:
            gi = self._index[rule.symbol]
            terms = []
            for exp_map, coeff in rule.replacement:
                vec = [0] * len(gens)
                for name, e in exp_map:
                    vec[self._index[name]] = e
                if vec[gi] >= rule.power:
                    raise ValueError("replacement does not lower the degree")
                terms.append((tuple(vec), coeff))
            compiled[gi] = (rule.power, tuple(terms))
        object.__setattr__(self, "_compiled", compiled)
        object.__setattr__(self, "_reduce_cache", {})
        object.__setattr__(self, "_hash",
                           hash((gens, self.reductions, self.a1_homotopy)))

    def __setattr__(self, name, value):
        raise AttributeError("KRingSpec is immutable")

    def __eq__(self, other):
        if not isinstance(other, KRingSpec):
            return NotImplemented
        return (self.generators == other.generators
                and self.reductions == other.reductions
                and self.a1_homotopy == other.a1_homotopy)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        quot = ", A1-homotopy" if self.a1_homotopy else ""
        return f"KRingSpec({', '.join(self.generators)}{quot})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SpecMismatch(f"generator {name!r} not in {self!r}") from None

    # -- construction helpers

    def element(self, raw: dict[ExpVec, int]) -> "KElement":
        acc: dict[ExpVec, int] = {}
        for exp, coeff in raw.items():
            if coeff == 0:
                continue
            for exp2, c2 in self._reduce_monomial(tuple(exp)):
                acc[exp2] = acc.get(exp2, 0) + coeff * c2
        terms = tuple(sorted((e, c) for e, c in acc.items() if c))
        return KElement(self, terms)

    def from_int(self, n: int) -> "KElement":
        zero = (0,) * len(self.generators)
        return KElement(self, ((zero, n),) if n else ())

    @property
    def zero(self) -> "KElement":
        return self.from_int(0)

    @property
    def one(self) -> "KElement":
        return self.from_int(1)

    def generator(self, name: str) -> "KElement":
        vec = [0] * len(self.generators)
        vec[self.index(name)] = 1
        return self.element({tuple(vec): 1})

    def _reduce_monomial(self, exp: ExpVec) -> Terms:
        """Rewrite one monomial into canonical terms under all active rules."""
        cached = self._reduce_cache.get(exp)
        if cached is not None:
            return cached
        work = exp
        if self.a1_homotopy and "L" in self._index:
            li = self._index["L"]
            if work[li]:
                work = work[:li] + (0,) + work[li + 1:]
        result: Terms | None = None
        for gi, (power, repl) in self._compiled.items():
            if work[gi] >= power:
                base = list(work)
                base[gi] -= power
                acc: dict[ExpVec, int] = {}
                for rexp, rcoeff in repl:
                    merged = tuple(b + r for b, r in zip(base, rexp))
                    for exp2, c2 in self._reduce_monomial(merged):
                        acc[exp2] = acc.get(exp2, 0) + rcoeff * c2
                result = tuple(sorted((e, c) for e, c in acc.items() if c))
                break
        if result is None:
            result = ((work, 1),)
        self._reduce_cache[exp] = result
        return result


@lru_cache(maxsize=None)
def standard_ring(symbols: tuple[str, ...] = (), a1_homotopy: bool = False) -> KRingSpec:
    """The ring generated by L, eps and any extra free symbols."""
    return KRingSpec(("L", "eps") + tuple(symbols), a1_homotopy=a1_homotopy)


class KElement:
    """Canonical sparse ring element; construct through a KRingSpec."""

    __slots__ = ("spec", "terms", "_hash")

    def __init__(self, spec: KRingSpec, terms: Terms):
        self.spec = spec
        self.terms = terms
        self._hash = hash((spec, terms))

    # -- predicates

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (len(self.terms) == 1
                and self.terms[0][1] == 1
                and not any(self.terms[0][0]))

    def is_integer(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def as_integer(self) -> int:
        if not self.terms:
            return 0
        if self.is_integer():
            return self.terms[0][1]
        raise MissingAssignment(f"{self} is not an integer")

    # -- arithmetic

    def _coerce(self, other) -> "KElement":
        if isinstance(other, int):
            return self.spec.from_int(other)
        if isinstance(other, KElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self.terms)
        for exp, c in other.terms:
            acc[exp] = acc.get(exp, 0) + c
        return KElement(self.spec, tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return KElement(self.spec, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        raw: dict[ExpVec, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                exp = tuple(a + b for a, b in zip(e1, e2))
                raw[exp] = raw.get(exp, 0) + c1 * c2
        return self.spec.element(raw)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a ring element")
        result = self.spec.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_integer() and (not self.terms and other == 0
                                          or self.terms and self.terms[0][1] == other)
        if not isinstance(other, KElement):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self):
        return self._hash

    # -- display

    def _monomial_str(self, exp: ExpVec) -> str:
        parts = []
        for name, e in zip(self.spec.generators, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.terms:
            mono = self._monomial_str(exp)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"<{self} in {self.spec!r}>"


class Specialization:
    """Ring map fixed by generator assignments.

    Generators without an assignment are carried over unchanged when
    ``carry_unassigned`` is true (the default); otherwise meeting one in an
    element raises MissingAssignment.
    """

    __slots__ = ("spec", "assignments", "carry_unassigned")

    def __init__(self, spec: KRingSpec, assignments: dict[str, "KElement | int"],
                 carry_unassigned: bool = True):
        self.spec = spec
        norm: dict[str, KElement] = {}
        for name, value in assignments.items():
            spec.index(name)
            if isinstance(value, int):
                value = spec.from_int(value)
            elif value.spec != spec:
                raise SpecMismatch("assignments must land in the same spec")
            norm[name] = value
        self.assignments = norm
        self.carry_unassigned = carry_unassigned

    def __call__(self, a: KElement) -> KElement:
        return specialize(a, self)

    def compose(self, after: "Specialization") -> "Specialization":
        """The map 'apply self, then after'."""
        if after.spec != self.spec:
            raise SpecMismatch("composition across different specs")
        names = set(self.assignments) | set(after.assignments)
        merged = {}
        for name in names:
            image = self.assignments.get(name)
            if image is None:
                image = self.spec.generator(name)
            merged[name] = specialize(image, after)
        carry = self.carry_unassigned and after.carry_unassigned
        return Specialization(self.spec, merged, carry_unassigned=carry)


def specialize(a: KElement, s: Specialization) -> KElement:
    """Apply the ring map s to a.  Raises MissingAssignment in strict mode."""
    if a.spec != s.spec:
        raise SpecMismatch("element and specialization use different specs")
    spec = a.spec
    images: list[KElement | None] = [s.assignments.get(name) for name in spec.generators]
    result = spec.zero
    for exp, coeff in a.terms:
        term = spec.from_int(coeff)
        for gi, e in enumerate(exp):
            if e == 0:
                continue
            image = images[gi]
            if image is None:
                if not s.carry_unassigned:
                    raise MissingAssignment(
                        f"no assignment for generator {spec.generators[gi]!r}")
                image = spec.generator(spec.generators[gi])
            term = term * image ** e
        result = result + term
    return result


def ring_add(a: KElement, b: KElement) -> KElement:
    return a + b


def ring_sub(a: KElement, b: KElement) -> KElement:
    return a - b


def ring_mul(a: KElement, b: KElement) -> KElement:
    return a * b


def class_projective_space(n: int, spec: KRingSpec | None = None) -> KElement:
    """1 + L + ... + L**n, the class of n-dimensional projective space."""
    if n < 0:
        raise ValueError("negative dimension")
    spec = spec or standard_ring()
    li = spec.index("L")
    raw = {}
    for i in range(n + 1):
        vec = [0] * len(spec.generators)
        vec[li] = i
        raw[tuple(vec)] = raw.get(tuple(vec), 0) + 1
    return spec.element(raw)


def class_torus(k: int, spec: KRingSpec | None = None) -> KElement:
    """(L - 1)**k, the class of a k-dimensional split torus."""
    if k < 0:
        raise ValueError("negative dimension")
    spec = spec or standard_ring()
    return (spec.generator("L") - spec.one) ** k
