"""Weighted polynomial rings and monomial utilities.

A monomial is a plain tuple of nonnegative integer exponents, one per ring
variable; the ring caches weighted degrees and grevlex sort keys per
monomial, so tuples stay cheap to share between polynomials.
"""
from __future__ import annotations

import json
from itertools import combinations

from .errors import InputError, UsageError

Monomial = tuple  # exponent vector; weighted degree is cached on the ring


class WeightedRing:
    """k[x_0..x_n] with positive integer weights deg(x_i) = d_i.

    Immutable.  Variable order is the user-given I/O order; an ascending
    copy of the degrees is kept for the Koszul degree sums w_i / w^i.
    """

    __slots__ = (
        "names", "degrees", "nvars", "sorted_degrees", "total_weight",
        "_name_index", "_wdeg_cache", "_key_cache", "_dim_cache",
    )

    def __init__(self, names, degrees):
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if not names:
            raise UsageError("a ring needs at least one variable")
        if len(names) != len(degrees):
            raise UsageError("names and degrees must have equal length")
        if len(set(names)) != len(names):
            raise UsageError("variable names must be distinct")
        if any(d < 1 for d in degrees):
            raise UsageError("variable degrees must be positive")
        self.names = names
        self.degrees = degrees
        self.nvars = len(names)
        self.sorted_degrees = tuple(sorted(degrees))
        self.total_weight = sum(degrees)
        self._name_index = {n: i for i, n in enumerate(names)}
        self._wdeg_cache = {}
        self._key_cache = {}
        self._dim_cache = [1]  # dim S_0

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, WeightedRing)
                and self.names == other.names
                and self.degrees == other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        vars_ = ", ".join(f"{n}({d})" for n, d in zip(self.names, self.degrees))
        return f"WeightedRing[{vars_}]"

    @property
    def one(self) -> Monomial:
        return (0,) * self.nvars

    def variable(self, i: int) -> Monomial:
        e = [0] * self.nvars
        e[i] = 1
        return tuple(e)

    def variable_index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise InputError(f"unknown variable {name!r}") from None

    # -- monomial arithmetic ----------------------------------------------

    def wdeg(self, mono: Monomial) -> int:
        """Weighted degree sum(e_i * d_i), cached."""
        w = self._wdeg_cache.get(mono)
        if w is None:
            degs = self.degrees
            w = sum(e * degs[i] for i, e in enumerate(mono) if e)
            self._wdeg_cache[mono] = w
        return w

    def grevlex_key(self, mono: Monomial):
        """Flat sort key for weighted grevlex: larger key = larger monomial."""
        k = self._key_cache.get(mono)
        if k is None:
            k = (self.wdeg(mono),) + tuple(-e for e in reversed(mono))
            self._key_cache[mono] = k
        return k

    @staticmethod
    def mono_mul(a: Monomial, b: Monomial) -> Monomial:
        return tuple(x + y for x, y in zip(a, b))

    @staticmethod
    def mono_div(a: Monomial, b: Monomial):
        """a / b, or None when b does not divide a."""
        out = []
        for x, y in zip(a, b):
            if x < y:
                return None
            out.append(x - y)
        return tuple(out)

    @staticmethod
    def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
        return tuple(x if x >= y else y for x, y in zip(a, b))

    # -- graded pieces ------------------------------------------------------

    def dim_component(self, j: int) -> int:
        """dim_k S_j, i.e. the coefficient of t^j in prod 1/(1 - t^{d_i})."""
        if j < 0:
            return 0
        cache = self._dim_cache
        if j < len(cache):
            return cache[j]
        table = [0] * (j + 1)
        table[0] = 1
        for d in self.degrees:
            for e in range(d, j + 1):
                table[e] += table[e - d]
        self._dim_cache = table
        return table[j]

    def component_basis(self, j: int) -> list:
        """All monomials of weighted degree exactly j, descending in
        weighted grevlex.  Empty when there are none."""
        if j < 0:
            raise UsageError("degree must be nonnegative")
        out = []
        degs = self.degrees
        n = self.nvars
        exps = [0] * n

        def emit(i, rem):
            if i == n - 1:
                d = degs[i]
                if rem % d == 0:
                    exps[i] = rem // d
                    out.append(tuple(exps))
                    exps[i] = 0
                return
            d = degs[i]
            for e in range(rem // d, -1, -1):
                exps[i] = e
                emit(i + 1, rem - e * d)
            exps[i] = 0

        emit(0, j)
        out.sort(key=self.grevlex_key, reverse=True)
        return out

    # -- Koszul degree envelope ---------------------------------------------

    def koszul_weights(self, i: int):
        """(w_i, w^i): sums of the i smallest resp. largest variable degrees."""
        if not 0 <= i <= self.nvars:
            raise UsageError(f"index {i} out of range 0..{self.nvars}")
        low = sum(self.sorted_degrees[:i])
        high = sum(self.sorted_degrees[self.nvars - i:])
        return low, high

    def w_lower(self, i: int) -> int:
        return self.koszul_weights(i)[0]

    def w_upper(self, i: int) -> int:
        return self.koszul_weights(i)[1]

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"variables": [{"name": n, "degree": d}
                              for n, d in zip(self.names, self.degrees)]}

    @classmethod
    def from_json(cls, obj) -> "WeightedRing":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            vs = obj["variables"]
            names = [v["name"] for v in vs]
            degrees = [v["degree"] for v in vs]
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad ring description: {exc}") from exc
        return cls(names, degrees)

    @classmethod
    def from_degrees(cls, degrees, prefix: str = "x") -> "WeightedRing":
        degrees = list(degrees)
        return cls([f"{prefix}{i}" for i in range(len(degrees))], degrees)


def subsets_weights(ring: WeightedRing, size: int):
    """Weighted degrees of all size-element variable subsets (Koszul basis)."""
    return sorted(sum(ring.degrees[i] for i in c)
                  for c in combinations(range(ring.nvars), size))
