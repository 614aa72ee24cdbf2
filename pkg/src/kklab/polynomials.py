"""Sparse exact polynomials over the integers.

Three flavours are provided:

* :class:`IntPolynomial` -- commutative, multivariate, named variables;
* :class:`LaurentPolynomial` -- one variable ``t`` with negative exponents;
* :class:`NCPolynomial` -- noncommutative polynomials (integer combinations of
  words), used for relations of presented algebras and free products.

All arithmetic is on Python ints, so coefficients never overflow.
"""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_str(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


class IntPolynomial:
    """Commutative polynomial with integer coefficients.

    Terms are stored as ``{monomial: coefficient}`` where a monomial is a
    sorted tuple of ``(variable, exponent)`` pairs; zero coefficients are
    never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping[Monomial, int], int, None] = None):
        if terms is None:
            self.terms: Dict[Monomial, int] = {}
        elif isinstance(terms, int):
            self.terms = {(): terms} if terms else {}
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    # construction helpers
    @classmethod
    def var(cls, name: str, exp: int = 1) -> "IntPolynomial":
        if exp == 0:
            return cls(1)
        return cls({((name, exp),): 1})

    @classmethod
    def const(cls, c: int) -> "IntPolynomial":
        return cls(c)

    @classmethod
    def coerce(cls, x) -> "IntPolynomial":
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return cls(x)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = IntPolynomial.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return IntPolynomial(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def degree(self, var: str = None) -> int:
        """Total degree, or the degree in ``var``; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self.terms)
        return max(dict(m).get(var, 0) for m in self.terms)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def coefficient(self, monomial: Mapping[str, int]) -> int:
        key = tuple(sorted((v, e) for v, e in monomial.items() if e))
        return self.terms.get(key, 0)

    # substitution
    def subs(self, mapping: Mapping[str, Union["IntPolynomial", int]]) -> "IntPolynomial":
        """Simultaneous substitution of variables by polynomials or ints."""
        result = IntPolynomial()
        cache: Dict[Tuple[str, int], IntPolynomial] = {}
        for m, c in self.terms.items():
            term = IntPolynomial(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = IntPolynomial.coerce(mapping[v]) ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * IntPolynomial({tuple(rest): 1})
            result = result + term
        return result

    def ev(self, value: int, var: str = "t") -> "IntPolynomial":
        return self.subs({var: value})

    def rename(self, mapping: Mapping[str, str]) -> "IntPolynomial":
        out: Dict[Monomial, int] = {}
        for m, c in self.terms.items():
            exps: Dict[str, int] = {}
            for v, e in m:
                w = mapping.get(v, v)
                exps[w] = exps.get(w, 0) + e
            key = tuple(sorted(exps.items()))
            out[key] = out.get(key, 0) + c
        return IntPolynomial(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]))

    def to_json(self) -> Dict[str, int]:
        return {(_mono_str(m) or "1"): c for m, c in self.sorted_terms()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "IntPolynomial":
        out: Dict[Monomial, int] = {}
        for key, c in data.items():
            exps: Dict[str, int] = {}
            if key != "1":
                for factor in key.split("*"):
                    v, _, e = factor.partition("^")
                    exps[v] = exps.get(v, 0) + (int(e) if e else 1)
            mono = tuple(sorted(exps.items()))
            out[mono] = out.get(mono, 0) + int(c)
        return cls(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = _mono_str(m)
            if not ms:
                parts.append(str(c))
            elif c == 1:
                parts.append(ms)
            elif c == -1:
                parts.append("-" + ms)
            else:
                parts.append(f"{c}*{ms}")
        return " + ".join(parts).replace("+ -", "- ")


def monomials_up_to(variables: Iterable[str], degree: int):
    """All monomials in ``variables`` of total degree <= ``degree``, graded-lex."""
    variables = list(variables)
    out = []

    def rec(i, remaining, acc):
        if i == len(variables):
            out.append(tuple(acc))
            return
        for e in range(remaining, -1, -1):
            rec(i + 1, remaining - e, acc + ([(variables[i], e)] if e else []))

    rec(0, degree, [])
    out.sort(key=lambda m: (-sum(e for _, e in m), [(-dict(m).get(v, 0)) for v in variables]))
    return out


class LaurentPolynomial:
    """Integer Laurent polynomial in a single variable ``t``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Union[Mapping[int, int], int, None] = None):
        if coeffs is None:
            self.coeffs: Dict[int, int] = {}
        elif isinstance(coeffs, int):
            self.coeffs = {0: coeffs} if coeffs else {}
        else:
            self.coeffs = {k: c for k, c in coeffs.items() if c}

    @classmethod
    def t(cls, k: int = 1) -> "LaurentPolynomial":
        return cls({k: 1})

    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return LaurentPolynomial(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, int] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1 or list(self.coeffs.values())[0] not in (1, -1):
                raise ValueError("only monomial units can be inverted")
            (k, c), = self.coeffs.items()
            return LaurentPolynomial({k * n: c ** (-n)})
        result = LaurentPolynomial(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def ev(self, value: int) -> int:
        """Evaluate at an integer unit (``value`` must be 1 or -1 if negative exponents occur)."""
        total = 0
        for k, c in self.coeffs.items():
            if k < 0 and value not in (1, -1):
                raise ValueError("cannot evaluate negative powers at a non-unit")
            total += c * (value ** k if k >= 0 else value ** (-k))
        return total

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*t^{k}" for k, c in sorted(self.coeffs.items()))


Word = Tuple[str, ...]


class NCPolynomial:
    """Integer combination of words in noncommuting generators.

    The empty word is the unit.  Used to spell out relations of presented
    algebras and to model free products of free algebras.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping[Word, int], int, None] = None):
        if terms is None:
            self.terms: Dict[Word, int] = {}
        elif isinstance(terms, int):
            self.terms = {(): terms} if terms else {}
        else:
            self.terms = {tuple(w): c for w, c in terms.items() if c}

    @classmethod
    def gen(cls, name: str) -> "NCPolynomial":
        return cls({(name,): 1})

    @classmethod
    def word(cls, *letters: str) -> "NCPolynomial":
        return cls({tuple(letters): 1})

    @staticmethod
    def _coerce(x):
        if isinstance(x, NCPolynomial):
            return x
        if isinstance(x, int):
            return NCPolynomial(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return NCPolynomial({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        out: Dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NCPolynomial(out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def generators(self) -> set:
        return {g for w in self.terms for g in w}

    def truncate(self, degree: int) -> "NCPolynomial":
        return NCPolynomial({w: c for w, c in self.terms.items() if len(w) <= degree})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda wc: (len(wc[0]), wc[0])):
            ws = "*".join(w) if w else "1"
            parts.append(ws if c == 1 else f"{c}*{ws}")
        return " + ".join(parts)
