"""Groebner bases for homogeneous ideals and graded free submodules.

The engine works on flat term dictionaries mapping (component, exponent
tuple) to a rational coefficient.  One degree-interleaved Buchberger run
serves several purposes at once:

* generator candidates are admitted in weakly increasing degree and kept
  only if their normal form is nonzero, so the accepted list is a minimal
  generating set of the span;
* S-pairs are processed by increasing degree (normal strategy) with the
  Gebauer-Moeller chain criteria, so truncating at a degree bound yields a
  basis valid through that bound;
* in tracked mode every basis element carries a certificate over the
  accepted generators, and every S-pair that reduces to zero emits its
  certificate as a syzygy.  Together with the Koszul certificates of
  product-criterion pairs (rank one only; the product criterion is not
  valid for modules), the emitted syzygies generate the full syzygy module
  of the accepted generators, which is what the resolution pipeline
  consumes.

Basis elements are stored monic and are never rewritten, so certificates
stay exact; the public reduced basis is produced by a final interreduction.
"""
from __future__ import annotations

import time
from heapq import heappush, heappop

from .errors import ResourceLimit, UsageError
from .rationals import QQ
from .orders import PositionOverTerm, WeightedGrevlex
from .polynomials import Polynomial
from .rings import WeightedRing

_mono_mul = WeightedRing.mono_mul
_mono_lcm = WeightedRing.mono_lcm


def _mono_divides(a, b):
    """a | b componentwise."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mask(mono) -> int:
    m = 0
    for i, e in enumerate(mono):
        if e:
            m |= 1 << i
    return m


def poly_to_vec(p: Polynomial, comp: int = 0) -> dict:
    return {(comp, m): c for m, c in p.terms.items()}


def polys_to_vec(polys) -> dict:
    vec = {}
    for comp, p in enumerate(polys):
        if p is None:
            continue
        for m, c in p.terms.items():
            if c:
                vec[(comp, m)] = c
    return vec


def vec_to_polys(ring: WeightedRing, vec: dict, rank: int):
    rows = [{} for _ in range(rank)]
    for (comp, mono), coeff in vec.items():
        rows[comp][mono] = coeff
    return [Polynomial(ring, r) for r in rows]


def vec_shift(vec: dict, mono) -> dict:
    if not any(mono):
        return dict(vec)
    return {(c, _mono_mul(m, mono)): v for (c, m), v in vec.items()}


def vec_degree(ring: WeightedRing, twists, vec: dict):
    """Twisted degree of a homogeneous vector; None for zero."""
    deg = None
    for (comp, mono) in vec:
        d = ring.wdeg(mono) + twists[comp]
        if deg is None:
            deg = d
        elif d != deg:
            raise UsageError("vector is not homogeneous")
    return deg


class _Elem:
    __slots__ = ("ltcomp", "ltmono", "ltmask", "tail", "cert", "deg", "idx")

    def __init__(self, ltcomp, ltmono, ltmask, tail, cert, deg, idx):
        self.ltcomp = ltcomp
        self.ltmono = ltmono
        self.ltmask = ltmask
        self.tail = tail      # list of ((comp, mono), coeff), lead excluded
        self.cert = cert      # dict over accepted-generator coordinates
        self.deg = deg
        self.idx = idx

    def full_vec(self) -> dict:
        v = dict(self.tail)
        v[(self.ltcomp, self.ltmono)] = QQ(1)
        return v


class GBRun:
    """One degree-interleaved Buchberger run over a free module."""

    def __init__(self, ring, mkey, twists, *, track=False, rank_one=False,
                 kernel_mode=False, max_degree=None, deadline=None):
        self.ring = ring
        self.twists = twists
        self.track = track or kernel_mode
        self.kernel_mode = kernel_mode
        self.rank_one = rank_one
        self.max_degree = max_degree
        self.deadline = deadline
        self.elems = []
        self.by_comp = {}
        self.pairs = {}        # (i, j) -> lcm monomial
        self.pair_heap = []    # (degree, seq, i, j)
        self.syzygies = []     # (cert vec, degree)
        self.accepted = []     # (monic vec, degree)
        self.truncated = False
        self._seq = 0
        self._mask_cache = {}
        self._nk_cache = {}
        self._mkey = mkey
        self._ticks = 0

    # -- caches ---------------------------------------------------------------

    def _m(self, mono):
        v = self._mask_cache.get(mono)
        if v is None:
            v = _mask(mono)
            self._mask_cache[mono] = v
        return v

    def _nk(self, comp, mono):
        t = (comp, mono)
        v = self._nk_cache.get(t)
        if v is None:
            v = tuple(-x for x in self._mkey(comp, mono))
            self._nk_cache[t] = v
        return v

    # -- reduction -------------------------------------------------------------

    def _find_reducer(self, comp, mono, mask):
        row = self.by_comp.get(comp)
        if not row:
            return None
        for e in row:
            if e.ltmask & ~mask:
                continue
            if _mono_divides(e.ltmono, mono):
                return e
        return None

    def _tick(self):
        self._ticks += 1
        if self.deadline is not None and not self._ticks % 128:
            if time.monotonic() > self.deadline:
                raise ResourceLimit("time budget exceeded")

    def reduce(self, vec, cert):
        """Full (tail) reduction of vec; cert is dragged along when given."""
        work = dict(vec)
        nk = self._nk
        heap = [nk(c, m) + (c, m) for (c, m) in work]
        if heap:
            heap.sort()
            # already sorted list is a valid heap
        out = {}
        find = self._find_reducer
        mmul = _mono_mul
        maskf = self._m
        nvars = self.ring.nvars
        while heap:
            entry = heappop(heap)
            comp, mono = entry[-2], entry[-1]
            a = work.pop((comp, mono), None)
            if not a:
                continue
            self._tick()
            red = find(comp, mono, maskf(mono))
            if red is None:
                out[(comp, mono)] = a
                continue
            u = tuple(map(int.__sub__, mono, red.ltmono)) if mono != red.ltmono else None
            if u is None:
                for t2, c2 in red.tail:
                    prev = work.get(t2)
                    if prev is None:
                        nv = -a * c2
                        if nv:
                            work[t2] = nv
                            heappush(heap, nk(t2[0], t2[1]) + t2)
                    else:
                        nv = prev - a * c2
                        if nv:
                            work[t2] = nv
                        else:
                            del work[t2]
                if cert is not None:
                    for (gc, gm), cc in red.cert.items():
                        prev = cert.get((gc, gm))
                        nv = -a * cc if prev is None else prev - a * cc
                        if nv:
                            cert[(gc, gm)] = nv
                        elif prev is not None:
                            del cert[(gc, gm)]
            else:
                for (c2, m2), coeff2 in red.tail:
                    nm = mmul(m2, u)
                    nt = (c2, nm)
                    prev = work.get(nt)
                    if prev is None:
                        nv = -a * coeff2
                        if nv:
                            work[nt] = nv
                            heappush(heap, nk(c2, nm) + nt)
                    else:
                        nv = prev - a * coeff2
                        if nv:
                            work[nt] = nv
                        else:
                            del work[nt]
                if cert is not None:
                    for (gc, gm), cc in red.cert.items():
                        nt = (gc, mmul(gm, u))
                        prev = cert.get(nt)
                        nv = -a * cc if prev is None else prev - a * cc
                        if nv:
                            cert[nt] = nv
                        elif prev is not None:
                            del cert[nt]
        return out, cert

    # -- insertion and pair bookkeeping ------------------------------------------

    def _insert(self, vec, cert, deg, make_pairs=True):
        """Insert a nonzero reduced vector as a monic basis element."""
        mkey = self._mkey
        lt = max(vec, key=lambda t: mkey(t[0], t[1]))
        lc = vec[lt]
        if lc != 1:
            inv = 1 / QQ(lc)
            vec = {t: c * inv for t, c in vec.items()}
            if cert is not None:
                cert = {t: c * inv for t, c in cert.items()}
        tail = [(t, c) for t, c in vec.items() if t != lt]
        idx = len(self.elems)
        e = _Elem(lt[0], lt[1], self._m(lt[1]), tail, cert, deg, idx)
        self.elems.append(e)
        self.by_comp.setdefault(lt[0], []).append(e)
        if make_pairs:
            self._update_pairs(e)
        return e

    def _update_pairs(self, h):
        comp = h.ltcomp
        row = self.by_comp.get(comp, ())
        hm = h.ltmono
        cand = []
        for e in row:
            if e is h:
                continue
            cand.append((e, _mono_lcm(e.ltmono, hm)))
        if not cand:
            return
        gk = self.ring.grevlex_key
        # chain criterion among the new pairs: drop (i,h) when another new
        # lcm strictly divides it
        lcms = [l for _, l in cand]
        keep = []
        for k, (e, l) in enumerate(cand):
            drop = False
            for l2 in lcms:
                if l2 is not l and l2 != l and _mono_divides(l2, l):
                    drop = True
                    break
            if not drop:
                keep.append((e, l))
        # one pair per lcm value; prefer a product-criterion witness in rank one
        groups = {}
        for e, l in keep:
            groups.setdefault(l, []).append(e)
        twist = self.twists
        wdeg = self.ring.wdeg
        for l, es in sorted(groups.items(), key=lambda kv: gk(kv[0])):
            chosen = None
            if self.rank_one:
                for e in es:
                    if not (self._m(e.ltmono) & self._m(hm)) and \
                            _mono_mul(e.ltmono, hm) == l:
                        chosen = e
                        break
            if chosen is not None:
                # product criterion: S-pair reduces to zero; its Koszul
                # certificate keeps the syzygy stream complete
                if self.track:
                    self._koszul_syzygy(chosen, h)
                continue
            e = min(es, key=lambda x: x.idx)
            deg = wdeg(l) + twist[comp]
            self.pairs[(e.idx, h.idx)] = l
            heappush(self.pair_heap, (deg, self._seq, e.idx, h.idx))
            self._seq += 1
        # backward chain criterion on older pairs
        doomed = []
        for (i, j), l in self.pairs.items():
            if j == h.idx or self.elems[i].ltcomp != comp:
                continue
            if _mono_divides(hm, l):
                li = _mono_lcm(self.elems[i].ltmono, hm)
                lj = _mono_lcm(self.elems[j].ltmono, hm)
                if li != l and lj != l:
                    doomed.append((i, j))
        for key in doomed:
            del self.pairs[key]

    def _koszul_syzygy(self, e1, e2):
        if e1.cert is None or e2.cert is None:
            return
        v1 = e1.full_vec()
        v2 = e2.full_vec()
        syz = {}
        for (_, m), c in v2.items():
            for (gc, gm), cc in e1.cert.items():
                t = (gc, _mono_mul(gm, m))
                nv = syz.get(t, 0) + c * cc
                if nv:
                    syz[t] = nv
                elif t in syz:
                    del syz[t]
        for (_, m), c in v1.items():
            for (gc, gm), cc in e2.cert.items():
                t = (gc, _mono_mul(gm, m))
                nv = syz.get(t, 0) - c * cc
                if nv:
                    syz[t] = nv
                elif t in syz:
                    del syz[t]
        if syz:
            self.syzygies.append((syz, e1.deg + e2.deg))

    # -- driving ------------------------------------------------------------------

    def preload(self, vecs):
        """Install an existing Groebner basis (no pairs among its members,
        no certificates); used to compute modulo a known submodule."""
        if self.track:
            raise UsageError("preloaded runs cannot track syzygies")
        mkey = self._mkey
        for vec in vecs:
            if vec:
                deg = vec_degree(self.ring, self.twists, vec)
                self._insert(dict(vec), None, deg, make_pairs=False)

    def _pop_pair(self):
        heap = self.pair_heap
        pairs = self.pairs
        while heap:
            deg, _, i, j = heap[0]
            if (i, j) in pairs:
                return deg
            heappop(heap)
        return None

    def run(self, candidates):
        """Candidates: iterable of (degree, vec) in weakly increasing degree.

        Returns the list of accepted (minimal) generators."""
        cands = list(candidates)
        ci = 0
        ncand = len(cands)
        while True:
            pdeg = self._pop_pair()
            cdeg = cands[ci][0] if ci < ncand else None
            if pdeg is None and cdeg is None:
                break
            if pdeg is not None and (cdeg is None or pdeg <= cdeg):
                if self.max_degree is not None and pdeg > self.max_degree:
                    self.truncated = True
                    break
                deg, _, i, j = heappop(self.pair_heap)
                del self.pairs[(i, j)]
                self._process_pair(i, j, deg)
            else:
                if self.max_degree is not None and cdeg > self.max_degree:
                    self.truncated = True
                    break
                deg, vec = cands[ci]
                ci += 1
                self._process_candidate(vec, deg)
        return self.accepted

    def _process_pair(self, i, j, deg):
        gi = self.elems[i]
        gj = self.elems[j]
        lcm = _mono_lcm(gi.ltmono, gj.ltmono)
        ui = tuple(map(int.__sub__, lcm, gi.ltmono))
        uj = tuple(map(int.__sub__, lcm, gj.ltmono))
        svec = {}
        for (c, m), co in gi.tail:
            svec[(c, _mono_mul(m, ui))] = co
        for (c, m), co in gj.tail:
            t = (c, _mono_mul(m, uj))
            prev = svec.get(t)
            nv = -co if prev is None else prev - co
            if nv:
                svec[t] = nv
            elif prev is not None:
                del svec[t]
        cert = None
        if self.track:
            cert = {}
            for (gc, gm), cc in gi.cert.items():
                cert[(gc, _mono_mul(gm, ui))] = cc
            for (gc, gm), cc in gj.cert.items():
                t = (gc, _mono_mul(gm, uj))
                prev = cert.get(t)
                nv = -cc if prev is None else prev - cc
                if nv:
                    cert[t] = nv
                elif prev is not None:
                    del cert[t]
        r, cr = self.reduce(svec, cert)
        if r:
            self._insert(r, cr, deg)
        elif self.track and cr:
            self.syzygies.append((cr, deg))

    def _process_candidate(self, vec, deg):
        if self.kernel_mode:
            # every candidate keeps its own coordinate: zero reductions are
            # themselves kernel elements
            gidx = len(self.accepted)
            cert = {(gidx, self.ring.one): QQ(1)}
            r, cr = self.reduce(dict(vec), cert)
            self.accepted.append((dict(vec), deg, None))
            if r:
                self._insert(r, cr, deg)
            elif cr:
                self.syzygies.append((cr, deg))
            return
        r, _ = self.reduce(dict(vec), None)
        if not r:
            return
        gidx = len(self.accepted)
        cert = {(gidx, self.ring.one): QQ(1)} if self.track else None
        e = self._insert(r, cert, deg)
        self.accepted.append((e.full_vec(), deg, (e.ltcomp, e.ltmono)))

    # -- outputs ---------------------------------------------------------------

    def basis_vecs(self):
        return [e.full_vec() for e in self.elems]

    def lead_terms(self):
        return [(e.ltcomp, e.ltmono) for e in self.elems]

    def interreduced(self):
        """Reduced basis: minimal lead terms, tails fully reduced, monic,
        sorted by lead term.  Canonical for a fixed order."""
        mkey = self._mkey
        elems = sorted(self.elems, key=lambda e: (e.deg, e.idx))
        kept = []
        for e in elems:
            redundant = False
            for f in kept:
                if f.ltcomp == e.ltcomp and not (f.ltmask & ~e.ltmask) \
                        and _mono_divides(f.ltmono, e.ltmono):
                    redundant = True
                    break
            if not redundant:
                kept.append(e)
        # tail-reduce each against the others
        sub = GBRun(self.ring, self._mkey, self.twists)
        mirrors = [sub._insert(e.full_vec(), None, e.deg, make_pairs=False)
                   for e in kept]
        out = []
        for e, mine in zip(kept, mirrors):
            row = sub.by_comp[mine.ltcomp]
            row.remove(mine)
            r, _ = sub.reduce(e.full_vec(), None)
            row.append(mine)
            out.append(r)
        out.sort(key=lambda v: mkey(*max(v, key=lambda t: mkey(t[0], t[1]))))
        return out


# -- public layer ------------------------------------------------------------------


class GroebnerBasis:
    """A reduced Groebner basis with the order it was computed under."""

    def __init__(self, ring, order, twists, elements, *, reduced=True):
        self.ring = ring
        self.order = order
        self.twists = twists          # None marks the rank-one (ideal) case
        self.elements = tuple(elements)
        self.reduced = reduced
        self._index = None

    @property
    def rank(self):
        return 1 if self.twists is None else len(self.twists)

    def _vecs(self):
        if self.twists is None:
            return [poly_to_vec(p) for p in self.elements]
        return [polys_to_vec(e) for e in self.elements]

    def _run(self):
        if self._index is None:
            twists = (0,) if self.twists is None else self.twists
            mkey = _mkey_for(self.order)
            run = GBRun(self.ring, mkey, twists)
            run.preload(self._vecs())
            self._index = run
        return self._index

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis)
                and self.ring == other.ring
                and self.twists == other.twists
                and self.elements == other.elements)

    def lead_terms(self):
        return self._run().lead_terms()


def _mkey_for(order):
    if hasattr(order, "mkey"):
        return order.mkey
    key = order.key
    return lambda comp, mono: (-comp,) + key(mono)


def _check_homogeneous(gens):
    for g in gens:
        if not g.is_homogeneous():
            raise UsageError(f"generator {g} is not homogeneous")


def buchberger(gens, order=None, max_degree=None, deadline=None) -> GroebnerBasis:
    """Reduced Groebner basis of the homogeneous ideal spanned by gens."""
    gens = [g for g in gens if g]
    if gens:
        ring = gens[0].ring
        if any(g.ring != ring for g in gens):
            raise UsageError("generators belong to different rings")
        _check_homogeneous(gens)
    else:
        raise UsageError("cannot infer the ring of an empty generator list")
    order = order or WeightedGrevlex(ring)
    if order.ring != ring:
        raise UsageError("order is over a different ring")
    run = GBRun(ring, _mkey_for(order), (0,), rank_one=True,
                max_degree=max_degree, deadline=deadline)
    cands = sorted(((g.degree(), i, poly_to_vec(g)) for i, g in enumerate(gens)),
                   key=lambda t: (t[0], t[1]))
    run.run([(d, v) for d, _, v in cands])
    reduced = run.interreduced()
    polys = [vec_to_polys(ring, v, 1)[0] for v in reduced]
    gb = GroebnerBasis(ring, order, None, polys)
    return gb


def module_groebner(gens, twists, order=None, ring=None,
                    max_degree=None) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule of (+) S(-a_k) spanned by
    gens; each generator is a sequence of rank-many polynomials."""
    twists = tuple(twists)
    vec_gens = []
    for g in gens:
        g = list(g)
        if len(g) != len(twists):
            raise UsageError("generator length does not match module rank")
        for p in g:
            if ring is None and p is not None:
                ring = p.ring
        vec_gens.append(g)
    if ring is None:
        raise UsageError("cannot infer the ring")
    for g in vec_gens:
        for p in g:
            if p is not None and p.ring != ring:
                raise UsageError("generators belong to different rings")
    order = order or PositionOverTerm(WeightedGrevlex(ring))
    run = GBRun(ring, _mkey_for(order), twists)
    items = []
    for i, g in enumerate(vec_gens):
        vec = polys_to_vec(g)
        if not vec:
            continue
        deg = vec_degree(ring, twists, vec)
        items.append((deg, i, vec))
    items.sort(key=lambda t: (t[0], t[1]))
    run.max_degree = max_degree
    run.run([(d, v) for d, _, v in items])
    reduced = run.interreduced()
    elems = [tuple(vec_to_polys(ring, v, len(twists))) for v in reduced]
    return GroebnerBasis(ring, order, twists, elems)


def normal_form(element, gb: GroebnerBasis):
    """Remainder of full division of a homogeneous element by gb."""
    run = gb._run()
    if isinstance(element, Polynomial):
        if gb.twists is not None:
            raise UsageError("polynomial against a module basis")
        if element.ring != gb.ring:
            raise UsageError("element belongs to a different ring")
        if not element.is_homogeneous():
            raise UsageError("element is not homogeneous")
        r, _ = run.reduce(poly_to_vec(element), None)
        return vec_to_polys(gb.ring, r, 1)[0]
    element = list(element)
    if gb.twists is None:
        raise UsageError("module element against an ideal basis")
    if len(element) != len(gb.twists):
        raise UsageError("element length does not match module rank")
    vec = polys_to_vec(element)
    vec_degree(gb.ring, gb.twists, vec)
    r, _ = run.reduce(vec, None)
    return vec_to_polys(gb.ring, r, len(gb.twists))


def kernel_of_columns(ring, target_twists, columns, col_twists, order=None,
                      deadline=None):
    """Generators of ker(+S(-col_twists[k]) -> target), e_k -> columns[k].

    columns are engine vectors over the target module; the result is a
    degree-sorted list of (vector over column coordinates, degree)."""
    if order is None:
        order = PositionOverTerm(WeightedGrevlex(ring))
    items = sorted(((col_twists[k], k) for k in range(len(columns))),
                   key=lambda t: (t[0], t[1]))
    perm = [k for _, k in items]
    run = GBRun(ring, _mkey_for(order), target_twists, kernel_mode=True,
                rank_one=(len(target_twists) == 1), deadline=deadline)
    run.run([(d, columns[k]) for d, k in items])
    out = []
    for cert, deg in run.syzygies:
        out.append(({(perm[c], m): v for (c, m), v in cert.items()}, deg))
    out.sort(key=lambda t: t[1])
    return out


def syzygy_module(gens, twists=None, ring=None):
    """Syzygies of a list of homogeneous elements of S or of a free module.

    Returns (elements, source_twists): each element is a tuple of
    polynomials of length len(gens) expressing one relation."""
    gens = list(gens)
    if not gens:
        return [], ()
    if isinstance(gens[0], Polynomial):
        ring = gens[0].ring
        target_twists = (0,)
        columns = [poly_to_vec(g) for g in gens]
        _check_homogeneous(gens)
        col_twists = [g.degree() for g in gens]
    else:
        if twists is None:
            raise UsageError("module syzygies need the ambient twists")
        target_twists = tuple(twists)
        columns = [polys_to_vec(g) for g in gens]
        if ring is None:
            ring = next(p.ring for g in gens for p in g if p is not None)
        col_twists = [vec_degree(ring, target_twists, v) for v in columns]
    syz = kernel_of_columns(ring, target_twists, columns, col_twists)
    elems = [tuple(vec_to_polys(ring, v, len(gens))) for v, _ in syz]
    return elems, tuple(col_twists)


class Ideal:
    """A homogeneous ideal presented by generators, with cached bases."""

    def __init__(self, ring, gens):
        self.ring = ring
        gens = [g for g in gens if g]
        for g in gens:
            if g.ring != ring:
                raise UsageError("generators belong to different rings")
        _check_homogeneous(gens)
        self.gens = tuple(gens)
        self._gb = None
        self._mingens = None

    @property
    def is_zero(self):
        return not self.gens

    def groebner_basis(self) -> GroebnerBasis:
        if self._gb is None:
            if not self.gens:
                self._gb = GroebnerBasis(self.ring, WeightedGrevlex(self.ring),
                                         None, ())
            else:
                self._gb = buchberger(list(self.gens))
        return self._gb

    def minimal_generators(self):
        """Minimal homogeneous generating set, degree-ascending normal forms."""
        if self._mingens is None:
            if not self.gens:
                self._mingens = ()
            else:
                ring = self.ring
                order = WeightedGrevlex(ring)
                items = sorted(((g.degree(), i, poly_to_vec(g))
                                for i, g in enumerate(self.gens)),
                               key=lambda t: (t[0], t[1]))
                run = GBRun(ring, _mkey_for(order), (0,), rank_one=True,
                            max_degree=items[-1][0])
                run.run([(d, v) for d, _, v in items])
                self._mingens = tuple(vec_to_polys(ring, v, 1)[0]
                                      for v, _, _ in run.accepted)
        return self._mingens

    def max_generator_degree(self):
        gens = self.minimal_generators()
        return max((g.degree() for g in gens), default=None)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self.groebner_basis()).is_zero()

    def hilbert_function(self, e: int) -> int:
        """dim_k (S/I)_e, counted by standard monomials."""
        if e < 0:
            return 0
        lts = [g.leading_monomial() for g in self.groebner_basis()]
        masks = [_mask(m) for m in lts]
        count = 0
        for mono in self.ring.component_basis(e):
            mm = _mask(mono)
            ok = True
            for lt, km in zip(lts, masks):
                if not (km & ~mm) and _mono_divides(lt, mono):
                    ok = False
                    break
            if ok:
                count += 1
        return count

    def standard_monomials(self, e: int):
        lts = [g.leading_monomial() for g in self.groebner_basis()]
        out = []
        for mono in self.ring.component_basis(e):
            if not any(_mono_divides(lt, mono) for lt in lts):
                out.append(mono)
        return out

    def to_json(self):
        return {"ring": self.ring.to_json(),
                "generators": [str(g) for g in self.gens]}

    @classmethod
    def from_json(cls, obj) -> "Ideal":
        ring = WeightedRing.from_json(obj["ring"])
        gens = [Polynomial.parse(ring, s) for s in obj.get("generators", [])]
        return cls(ring, gens)
