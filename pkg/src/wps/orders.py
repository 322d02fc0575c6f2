"""Monomial orders on rings and on graded free modules.

Every order exposes a flat integer sort key; larger key means larger
monomial.  Keys are cheap tuples so they can be cached, compared, and
negated for use in min-heaps.

Module monomials are pairs (component, exponent tuple).  Three module
orders are provided:

* position-over-term: earlier components dominate, ties by the ring order;
* an elimination order used by graph/kernel computations: any monomial
  touching the eliminated block (or the distinguished component 0)
  dominates every monomial that does not;
* the Schreyer order induced by a chain of free-module maps, which is the
  workhorse order for iterated syzygy computation.
"""
from __future__ import annotations

from .errors import UsageError
from .rings import WeightedRing, Monomial


class WeightedGrevlex:
    """Weighted degree first, grevlex tie-break; refines weighted degree."""

    kind = "weighted-grevlex"

    def __init__(self, ring: WeightedRing):
        self.ring = ring

    def key(self, mono: Monomial):
        return self.ring.grevlex_key(mono)

    def __eq__(self, other):
        return type(other) is WeightedGrevlex and other.ring == self.ring

    def __hash__(self):
        return hash((self.kind, self.ring))

    def __repr__(self):
        return f"WeightedGrevlex({self.ring!r})"


class BlockElimination:
    """Eliminate a leading block of variables.

    Monomials compare first by their block part (weighted grevlex within
    the block), then by the remaining variables; consequently any monomial
    meeting the block beats every block-free monomial.
    """

    kind = "block-elimination"

    def __init__(self, ring: WeightedRing, block_size: int):
        if not 1 <= block_size < ring.nvars:
            raise UsageError("elimination block must be a proper prefix")
        self.ring = ring
        self.block_size = block_size
        self._cache = {}

    def key(self, mono: Monomial):
        k = self._cache.get(mono)
        if k is None:
            b = self.block_size
            degs = self.ring.degrees
            head = mono[:b]
            tail = mono[b:]
            hdeg = sum(e * degs[i] for i, e in enumerate(head) if e)
            tdeg = sum(e * degs[b + i] for i, e in enumerate(tail) if e)
            k = ((hdeg,) + tuple(-e for e in reversed(head))
                 + (tdeg,) + tuple(-e for e in reversed(tail)))
            self._cache[mono] = k
        return k

    def __eq__(self, other):
        return (type(other) is BlockElimination and other.ring == self.ring
                and other.block_size == self.block_size)

    def __hash__(self):
        return hash((self.kind, self.ring, self.block_size))

    def __repr__(self):
        return f"BlockElimination({self.ring!r}, block={self.block_size})"


class PositionOverTerm:
    """Earlier free-module components dominate; ring order breaks ties."""

    kind = "position-over-term"

    def __init__(self, base):
        self.base = base
        self.ring = base.ring

    def mkey(self, comp: int, mono: Monomial):
        return (-comp,) + self.base.key(mono)

    def __eq__(self, other):
        return type(other) is PositionOverTerm and other.base == self.base

    def __hash__(self):
        return hash((self.kind, self.base))

    def __repr__(self):
        return f"PositionOverTerm({self.base!r})"


class GraphElimination:
    """Module order for kernel computations through a graph submodule.

    Component 0 dominates everything; within the remaining components any
    monomial meeting the eliminated variable block dominates block-free
    monomials, so basis elements led by a block-free monomial in a
    component >= 1 are entirely block-free and component-0-free.
    """

    kind = "graph-elimination"

    def __init__(self, ring: WeightedRing, block_size: int):
        self.ring = ring
        self.block = BlockElimination(ring, block_size)

    def mkey(self, comp: int, mono: Monomial):
        return ((1 if comp == 0 else 0,) + self.block.key(mono) + (-comp,))

    def __eq__(self, other):
        return type(other) is GraphElimination and other.block == self.block

    def __hash__(self):
        return hash((self.kind, self.block))


class SchreyerOrder:
    """Order on F_i induced by a chain of maps down to a ground module.

    Generator k of the current module carries a frame: its ground
    component b_k, the accumulated chain monomial T_k (the product of the
    lead monomials of its images down the tower), and a tie-break tuple
    C_k of negated chain indices.  Module monomials compare by the ground
    key of mono * T_k, then by the tie-break chain.
    """

    kind = "schreyer"

    def __init__(self, ring: WeightedRing, frames):
        # frames: list of (ground_comp, chain_mono, chain_tiebreak_tuple)
        self.ring = ring
        self.frames = list(frames)
        self._cache = {}

    @classmethod
    def base(cls, ring: WeightedRing, rank: int) -> "SchreyerOrder":
        one = ring.one
        return cls(ring, [(c, one, (-c,)) for c in range(rank)])

    def induced(self, lead_terms) -> "SchreyerOrder":
        """Order one level up: generator l has lead term (comp, mono) in
        the current module."""
        frames = []
        for l, (comp, mono) in enumerate(lead_terms):
            b, t, chain = self.frames[comp]
            frames.append((b, WeightedRing.mono_mul(t, mono), chain + (-l,)))
        return SchreyerOrder(self.ring, frames)

    def mkey(self, comp: int, mono: Monomial):
        key = self._cache.get((comp, mono))
        if key is None:
            b, t, chain = self.frames[comp]
            key = ((-b,) + self.ring.grevlex_key(WeightedRing.mono_mul(mono, t))
                   + chain)
            self._cache[(comp, mono)] = key
        return key

    def __repr__(self):
        return f"SchreyerOrder(rank={len(self.frames)})"
