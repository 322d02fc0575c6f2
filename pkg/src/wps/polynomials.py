"""Exact multivariate polynomials over a WeightedRing.

Terms live in a dict mapping exponent tuples to nonzero rational
coefficients.  Polynomials are immutable after construction and hashable;
printing orders terms descending in the ring's weighted grevlex order.
"""
from __future__ import annotations

import re

from .errors import InputError, UsageError
from .rationals import QQ, qq_from_str, qq_to_str
from .rings import WeightedRing


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: WeightedRing, terms=None):
        self.ring = ring
        clean = {}
        if terms:
            for mono, coeff in (terms.items() if isinstance(terms, dict) else terms):
                if coeff:
                    c = clean.get(mono)
                    c = coeff if c is None else c + coeff
                    if c:
                        clean[mono] = c
                    else:
                        del clean[mono]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring, terms: dict) -> "Polynomial":
        """Internal: wrap an already-clean term dict without copying."""
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring, value) -> "Polynomial":
        value = QQ(value)
        return cls._raw(ring, {ring.one: value} if value else {})

    @classmethod
    def variable(cls, ring, i: int) -> "Polynomial":
        return cls._raw(ring, {ring.variable(i): QQ(1)})

    @classmethod
    def monomial(cls, ring, mono, coeff=1) -> "Polynomial":
        coeff = QQ(coeff)
        return cls._raw(ring, {tuple(mono): coeff} if coeff else {})

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def degree(self):
        """Weighted degree of a homogeneous polynomial; None for 0."""
        if not self.terms:
            return None
        wdeg = self.ring.wdeg
        degs = {wdeg(m) for m in self.terms}
        if len(degs) != 1:
            raise UsageError("polynomial is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        wdeg = self.ring.wdeg
        return len({wdeg(m) for m in self.terms}) <= 1

    def max_degree(self) -> int:
        wdeg = self.ring.wdeg
        return max((wdeg(m) for m in self.terms), default=0)

    def sorted_terms(self):
        key = self.ring.grevlex_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, key=None):
        if not self.terms:
            return None
        key = key or self.ring.grevlex_key
        return max(self.terms, key=key)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise UsageError("polynomials belong to different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            v = c if v is None else v + c
            if v:
                out[m] = v
            else:
                del out[m]
        return Polynomial._raw(self.ring, out)

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out = {}
        mul = WeightedRing.mono_mul
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mul(m1, m2)
                v = out.get(m)
                v = c1 * c2 if v is None else v + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def scale(self, scalar):
        scalar = QQ(scalar)
        if not scalar:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {m: c * scalar for m, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative powers are not polynomials")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[self.leading_monomial()]
        if lc == 1:
            return self
        inv = 1 / QQ(lc)
        return Polynomial._raw(self.ring, {m: c * inv for m, c in self.terms.items()})

    # -- text grammar -----------------------------------------------------------
    # term := [coefficient] ['*'-separated variable powers with '^']
    # terms joined by + / -; printer and parser round-trip exactly.

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(self.ring.names[i])
                elif e > 1:
                    factors.append(f"{self.ring.names[i]}^{e}")
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = qq_to_str(mag) + "*" + "*".join(factors)
            else:
                body = qq_to_str(mag)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)

    __repr__ = __str__

    _TOKEN = re.compile(r"[+-]|[A-Za-z_][A-Za-z_0-9']*(?:\^\d+)?|\d+(?:/\d+)?|\*")

    @classmethod
    def parse(cls, ring: WeightedRing, text: str) -> "Polynomial":
        text = text.replace("−", "-").replace(" ", "")
        if not text:
            raise InputError("empty polynomial text")
        pos = 0
        tokens = []
        for m in cls._TOKEN.finditer(text):
            if m.start() != pos:
                raise InputError(f"bad polynomial syntax near {text[pos:pos+10]!r}")
            tokens.append(m.group())
            pos = m.end()
        if pos != len(text):
            raise InputError(f"bad polynomial syntax near {text[pos:pos+10]!r}")

        terms = []
        i = 0
        n = len(tokens)
        while i < n:
            sign = 1
            while i < n and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= n:
                raise InputError("dangling sign in polynomial")
            coeff = QQ(sign)
            exps = [0] * ring.nvars
            saw_factor = False
            while True:
                tok = tokens[i]
                if tok[0].isdigit():
                    coeff = coeff * qq_from_str(tok)
                else:
                    if "^" in tok:
                        name, power = tok.split("^")
                        exps[ring.variable_index(name)] += int(power)
                    else:
                        exps[ring.variable_index(tok)] += 1
                saw_factor = True
                i += 1
                if i < n and tokens[i] == "*":
                    i += 1
                    if i >= n or tokens[i] in "+-*":
                        raise InputError("dangling '*' in polynomial")
                    continue
                break
            if not saw_factor:
                raise InputError("empty term in polynomial")
            terms.append((tuple(exps), coeff))
        return cls(ring, terms)
