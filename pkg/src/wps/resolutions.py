"""Minimal graded free resolutions, Betti tables, Hilbert data, and Ext.

resolve() iterates minimal syzygy computation: each level is one tracked
Buchberger run whose zero reductions feed the next level's generator
candidates, so every differential's columns minimally generate the kernel
of the previous one and the resolution is minimal by construction.  The
classical Schreyer-frame construction (schreyer_resolution) and an
explicit unit-cancellation pass (minimize) are kept as an independent
cross-check path at desk scale.
"""
from __future__ import annotations

import json
import time
from itertools import combinations

from .errors import ResourceLimit, UsageError
from .rationals import QQ
from .groebner import (GBRun, Ideal, _mask, _mkey_for, _mono_divides,
                       kernel_of_columns, poly_to_vec, polys_to_vec,
                       vec_degree, vec_to_polys)
from .orders import PositionOverTerm, SchreyerOrder, WeightedGrevlex
from .polynomials import Polynomial
from .rings import WeightedRing


class GradedFreeModule:
    """A twisted graded free module  +_k S(-a_k)."""

    __slots__ = ("twists",)

    def __init__(self, twists):
        self.twists = tuple(int(a) for a in twists)

    @property
    def rank(self):
        return len(self.twists)

    def __eq__(self, other):
        return isinstance(other, GradedFreeModule) and self.twists == other.twists

    def __repr__(self):
        if not self.twists:
            return "0"
        groups = {}
        for a in self.twists:
            groups[a] = groups.get(a, 0) + 1
        return " + ".join(f"S({-a})^{m}" if m > 1 else f"S({-a})"
                          for a, m in sorted(groups.items()))


class GradedFreeMap:
    """Map between graded free modules, given by a matrix of homogeneous
    polynomials; entry (row k, col l) has degree source.twists[l] -
    target.twists[k] (or is zero)."""

    def __init__(self, ring, target: GradedFreeModule, source: GradedFreeModule,
                 matrix):
        self.ring = ring
        self.target = target
        self.source = source
        self.matrix = tuple(tuple(row) for row in matrix)
        if len(self.matrix) != target.rank:
            raise UsageError("matrix row count does not match target rank")
        for row in self.matrix:
            if len(row) != source.rank:
                raise UsageError("matrix column count does not match source rank")
        for k, row in enumerate(self.matrix):
            for l, entry in enumerate(row):
                if entry and entry.degree() != source.twists[l] - target.twists[k]:
                    raise UsageError(
                        f"entry ({k},{l}) of degree {entry.degree()} violates "
                        f"the twist difference "
                        f"{source.twists[l] - target.twists[k]}")

    @classmethod
    def from_columns(cls, ring, target_twists, columns, col_twists):
        """columns: engine vectors over the target components."""
        target = GradedFreeModule(target_twists)
        source = GradedFreeModule(col_twists)
        rows = [[Polynomial.zero(ring)] * source.rank for _ in range(target.rank)]
        for l, vec in enumerate(columns):
            per_row = {}
            for (comp, mono), coeff in vec.items():
                per_row.setdefault(comp, {})[mono] = coeff
            for comp, terms in per_row.items():
                rows[comp][l] = Polynomial(ring, terms)
        return cls(ring, target, source, rows)

    def columns_as_vecs(self):
        cols = []
        for l in range(self.source.rank):
            vec = {}
            for k in range(self.target.rank):
                p = self.matrix[k][l]
                for mono, coeff in p.terms.items():
                    vec[(k, mono)] = coeff
            cols.append(vec)
        return cols

    def is_minimal(self) -> bool:
        """True when every nonzero entry has positive degree."""
        for row in self.matrix:
            for entry in row:
                if entry and entry.degree() == 0:
                    return False
        return True

    def column(self, l):
        return [self.matrix[k][l] for k in range(self.target.rank)]

    def compose(self, other: "GradedFreeMap") -> "GradedFreeMap":
        """self o other (other feeds into self)."""
        if other.target.twists != self.source.twists:
            raise UsageError("maps are not composable")
        rows = []
        for k in range(self.target.rank):
            row = []
            for l in range(other.source.rank):
                acc = Polynomial.zero(self.ring)
                for m in range(self.source.rank):
                    a = self.matrix[k][m]
                    b = other.matrix[m][l]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedFreeMap(self.ring, self.target, other.source, rows)

    def is_zero(self) -> bool:
        return all(not e for row in self.matrix for e in row)

    def transpose_twisted(self, twist: int) -> "GradedFreeMap":
        """Dual map Hom(-, S(-twist)): swaps source/target with twists
        twist - a and transposed entries."""
        tgt = GradedFreeModule([twist - a for a in self.source.twists])
        src = GradedFreeModule([twist - a for a in self.target.twists])
        rows = [[self.matrix[l][k] for l in range(self.target.rank)]
                for k in range(self.source.rank)]
        return GradedFreeMap(self.ring, tgt, src, rows)


class FreeResolution:
    """F_0 <- F_1 <- ... ; maps[i] is the differential F_{i+1} -> F_i."""

    def __init__(self, ring, modules, maps, *, minimal, complete,
                 truncated=False):
        self.ring = ring
        self.modules = list(modules)
        self.maps = list(maps)
        self.minimal = minimal
        self.complete = complete
        self.truncated = truncated
        self._k0_leads = None   # lead terms of a GB of the defining submodule

    @property
    def length(self) -> int:
        return len(self.maps)

    def module(self, i: int) -> GradedFreeModule:
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return GradedFreeModule(())

    def twists(self, i: int):
        return self.module(i).twists

    def max_twist(self, i: int):
        tw = self.twists(i)
        return max(tw) if tw else None

    def check_complex(self) -> bool:
        """d o d = 0 for every consecutive pair."""
        for i in range(len(self.maps) - 1):
            if not self.maps[i].compose(self.maps[i + 1]).is_zero():
                return False
        return True

    def projective_dimension(self) -> int:
        if not self.complete:
            raise UsageError("resolution is not complete")
        return self.length

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "twists": [list(self.twists(i)) for i in range(self.length + 1)],
            "matrices": [[[str(e) for e in row] for row in f.matrix]
                         for f in self.maps],
            "minimal": self.minimal,
            "complete": self.complete,
            "truncated": self.truncated,
        }

    @classmethod
    def from_json(cls, obj) -> "FreeResolution":
        ring = WeightedRing.from_json(obj["ring"])
        twists = [tuple(t) for t in obj["twists"]]
        modules = [GradedFreeModule(t) for t in twists]
        maps = []
        for i, mat in enumerate(obj["matrices"]):
            rows = [[Polynomial.parse(ring, e) if e != "0" else
                     Polynomial.zero(ring) for e in row] for row in mat]
            maps.append(GradedFreeMap(ring, modules[i], modules[i + 1], rows))
        return cls(ring, modules, maps, minimal=obj["minimal"],
                   complete=obj["complete"], truncated=obj.get("truncated", False))


# -- presentations -----------------------------------------------------------


def presentation(source, f0_twists=None, ring=None) -> GradedFreeMap:
    """Minimal presentation F_0 <- F_1 of a quotient.

    source: an Ideal (quotient S/I, F_0 = S), a list of polynomials
    (likewise), or a list of free-module elements together with f0_twists.
    """
    if isinstance(source, Ideal):
        ring = source.ring
        gens = source.minimal_generators()
        cols = [poly_to_vec(g) for g in gens]
        degs = [g.degree() for g in gens]
        return GradedFreeMap.from_columns(ring, (0,), cols, degs)
    source = list(source)
    if source and isinstance(source[0], Polynomial):
        return presentation(Ideal(source[0].ring, source))
    if f0_twists is None:
        raise UsageError("module generators need explicit ambient twists")
    f0_twists = tuple(f0_twists)
    if ring is None:
        ring = next(p.ring for g in source for p in g if p is not None and p)
    items = []
    for i, g in enumerate(source):
        vec = polys_to_vec(g)
        if vec:
            items.append((vec_degree(ring, f0_twists, vec), i, vec))
    items.sort(key=lambda t: (t[0], t[1]))
    order = SchreyerOrder.base(ring, len(f0_twists))
    run = GBRun(ring, order.mkey, f0_twists,
                rank_one=(len(f0_twists) == 1),
                max_degree=items[-1][0] if items else None)
    run.run([(d, v) for d, _, v in items])
    cols = [v for v, _, _ in run.accepted]
    degs = [d for _, d, _ in run.accepted]
    pres = GradedFreeMap.from_columns(ring, f0_twists, cols, degs)
    if not pres.is_minimal():
        pres = _minimize_presentation(pres)
    return pres


def _minimize_presentation(pres: GradedFreeMap) -> GradedFreeMap:
    res = FreeResolution(pres.ring, [pres.target, pres.source], [pres],
                         minimal=False, complete=False)
    return minimize(res).maps[0]


# -- the resolution pipeline -------------------------------------------------


def resolve(start, max_length=None, max_twist=None, deadline=None,
            time_budget=None) -> FreeResolution:
    """Minimal graded free resolution of the cokernel of a presentation.

    start: GradedFreeMap (a presentation), Ideal, or list of polynomials.
    Stops at max_length homological steps or max_twist internal degree if
    given; a resolution cut short by either limit or by the time budget is
    flagged complete=False (and truncated=True for limit cuts).
    """
    if isinstance(start, (Ideal, list, tuple)):
        start = presentation(start)
    if not isinstance(start, GradedFreeMap):
        raise UsageError("resolve expects a presentation or an ideal")
    if time_budget is not None and deadline is None:
        deadline = time.monotonic() + time_budget
    ring = start.ring
    if not start.is_minimal():
        start = _minimize_presentation(start)
    f0 = start.target
    modules = [f0]
    maps = []
    order = SchreyerOrder.base(ring, max(f0.rank, 1))
    cur_twists = f0.twists
    candidates = []
    for l, vec in enumerate(start.columns_as_vecs()):
        if vec:
            candidates.append((start.source.twists[l], vec))
    candidates.sort(key=lambda t: t[0])
    complete = False
    truncated = False
    level = 1
    while candidates:
        if max_length is not None and level > max_length:
            break
        run = GBRun(ring, order.mkey, cur_twists, track=True,
                    rank_one=(len(cur_twists) == 1),
                    max_degree=max_twist, deadline=deadline)
        try:
            run.run(candidates)
        except ResourceLimit:
            truncated = True
            break
        accepted = run.accepted
        if run.truncated:
            truncated = True
        if not accepted:
            complete = True
            break
        new_twists = tuple(d for _, d, _ in accepted)
        cols = [v for v, _, _ in accepted]
        maps.append(GradedFreeMap.from_columns(ring, cur_twists, cols,
                                               new_twists))
        modules.append(GradedFreeModule(new_twists))
        if level == 1:
            k0_leads = run.lead_terms()
        order = order.induced([lt for _, _, lt in accepted])
        cur_twists = new_twists
        candidates = sorted(((d, v) for v, d in run.syzygies),
                            key=lambda t: t[0])
        if not candidates and not run.truncated:
            complete = True
        level += 1
    else:
        if not maps:
            complete = True
    if not candidates and not truncated and maps:
        complete = True
    res = FreeResolution(ring, modules, maps, minimal=True,
                         complete=complete and not truncated,
                         truncated=truncated)
    if maps:
        res._k0_leads = k0_leads
    return res


# -- Schreyer frame resolution (reference path, desk scale) -------------------


def schreyer_resolution(start, max_length=None) -> FreeResolution:
    """Non-minimal resolution by iterated full Schreyer syzygies.

    Level one is a Groebner basis of the presentation columns; afterwards
    the syzygies of every same-component lead-term pair, reduced against
    the current basis, form a Groebner basis of the next kernel with
    respect to the induced order, so no further basis computation is
    needed.  Intended for cross-checks; sizes grow quickly.
    """
    if isinstance(start, (Ideal, list, tuple)):
        start = presentation(start)
    ring = start.ring
    f0 = start.target
    order = SchreyerOrder.base(ring, max(f0.rank, 1))
    cur_twists = f0.twists
    # level-1 basis: a GB of the column span
    run = GBRun(ring, order.mkey, cur_twists)
    items = []
    for l, vec in enumerate(start.columns_as_vecs()):
        if vec:
            items.append((start.source.twists[l], vec))
    items.sort(key=lambda t: t[0])
    run.run(items)
    basis = [e.full_vec() for e in run.elems]
    degs = [e.deg for e in run.elems]
    leads = run.lead_terms()
    modules = [f0]
    maps = []
    complete = False
    level = 1
    while basis:
        new_twists = tuple(degs)
        maps.append(GradedFreeMap.from_columns(ring, cur_twists, basis,
                                               new_twists))
        modules.append(GradedFreeModule(new_twists))
        if max_length is not None and level >= max_length:
            break
        next_order = order.induced(leads)
        # tracked reductions of every same-component pair give the next basis
        sub = GBRun(ring, order.mkey, cur_twists, track=True)
        for k, vec in enumerate(basis):
            e = sub._insert(dict(vec), {(k, ring.one): QQ(1)}, degs[k],
                            make_pairs=False)
        nxt = []
        by_comp = {}
        for k, (c, m) in enumerate(leads):
            by_comp.setdefault(c, []).append(k)
        for c, ks in sorted(by_comp.items()):
            for i, j in combinations(ks, 2):
                gi, gj = sub.elems[i], sub.elems[j]
                lcm = WeightedRing.mono_lcm(gi.ltmono, gj.ltmono)
                deg = ring.wdeg(lcm) + cur_twists[c]
                sub._process_pair_syzygy(i, j, lcm, deg, nxt)
        if not nxt:
            complete = True
            break
        nxt.sort(key=lambda t: (t[1], t[2]))
        order = next_order
        cur_twists = new_twists
        basis = [v for v, _, _ in nxt]
        degs = [d for _, d, _ in nxt]
        mkey = next_order.mkey
        leads = [max(v, key=lambda t: mkey(t[0], t[1])) for v in basis]
        level += 1
    else:
        complete = True
    return FreeResolution(ring, modules, maps,
                          minimal=all(f.is_minimal() for f in maps),
                          complete=complete)


def _process_pair_syzygy(self, i, j, lcm, deg, out):
    """Reduce the S-pair of basis elements i, j and record its certificate
    (a Schreyer syzygy); the reduction must reach zero since the basis is a
    Groebner basis."""
    gi = self.elems[i]
    gj = self.elems[j]
    ui = tuple(map(int.__sub__, lcm, gi.ltmono))
    uj = tuple(map(int.__sub__, lcm, gj.ltmono))
    svec = {}
    for (c, m), co in gi.tail:
        svec[(c, WeightedRing.mono_mul(m, ui))] = co
    for (c, m), co in gj.tail:
        t = (c, WeightedRing.mono_mul(m, uj))
        prev = svec.get(t)
        nv = -co if prev is None else prev - co
        if nv:
            svec[t] = nv
        elif prev is not None:
            del svec[t]
    cert = {}
    for (gc, gm), cc in gi.cert.items():
        cert[(gc, WeightedRing.mono_mul(gm, ui))] = cc
    for (gc, gm), cc in gj.cert.items():
        t = (gc, WeightedRing.mono_mul(gm, uj))
        prev = cert.get(t)
        nv = -cc if prev is None else prev - cc
        if nv:
            cert[t] = nv
        elif prev is not None:
            del cert[t]
    r, cr = self.reduce(svec, cert)
    if r:
        raise UsageError("S-pair did not reduce to zero over a Groebner basis")
    if cr:
        out.append((cr, deg, len(out)))


GBRun._process_pair_syzygy = _process_pair_syzygy


# -- minimization ---------------------------------------------------------------


def minimize(res: FreeResolution) -> FreeResolution:
    """Cancel unit entries until every differential maps into m times the
    target; homotopy-equivalent to the input, so Betti data is preserved."""
    ring = res.ring
    mats = [[list(row) for row in f.matrix] for f in res.maps]
    twists = [list(res.twists(i)) for i in range(res.length + 1)]

    def find_unit(mat):
        for k, row in enumerate(mat):
            for l, e in enumerate(row):
                if e and e.degree() == 0:
                    return k, l
        return None

    changed = True
    while changed:
        changed = False
        for i, mat in enumerate(mats):
            if not mat or not mat[0]:
                continue
            hit = find_unit(mat)
            if hit is None:
                continue
            changed = True
            k, l = hit
            u = mat[k][l].terms[ring.one]
            inv = 1 / QQ(u)
            nrows = len(mat)
            ncols = len(mat[0])
            # Schur complement on phi_i
            newmat = []
            for r in range(nrows):
                if r == k:
                    continue
                row = []
                for c in range(ncols):
                    if c == l:
                        continue
                    e = mat[r][c] - mat[r][l] * mat[k][c].scale(inv)
                    row.append(e)
                newmat.append(row)
            mats[i] = newmat
            del twists[i + 1][l]
            del twists[i][k]
            # phi_{i+1}: delete row l
            if i + 1 < len(mats):
                nxt = mats[i + 1]
                mats[i + 1] = [row for r, row in enumerate(nxt) if r != l]
            # phi_{i-1}: delete column k
            if i - 1 >= 0:
                prv = mats[i - 1]
                mats[i - 1] = [[e for c, e in enumerate(row) if c != k]
                               for row in prv]
    # drop trailing zero modules
    while mats and twists and not twists[-1]:
        mats.pop()
        twists.pop()
    modules = [GradedFreeModule(t) for t in twists]
    maps = [GradedFreeMap(ring, modules[i], modules[i + 1], mats[i])
            for i in range(len(mats))]
    out = FreeResolution(ring, modules, maps, minimal=True,
                         complete=res.complete, truncated=res.truncated)
    if out.twists(0) == res.twists(0):
        out._k0_leads = res._k0_leads
    return out


# -- Betti tables ------------------------------------------------------------------


class BettiTable:
    """beta_{i,j} with the ring carrying the Koszul degree sums."""

    def __init__(self, ring, entries):
        self.ring = ring
        self.entries = {k: int(v) for k, v in dict(entries).items() if v}

    def __eq__(self, other):
        return (isinstance(other, BettiTable)
                and self.entries == other.entries)

    def get(self, i, j) -> int:
        return self.entries.get((i, j), 0)

    def max_column(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def column_max_twist(self, i):
        tw = [j for (c, j) in self.entries if c == i]
        return max(tw) if tw else None

    def column_total(self, i) -> int:
        return sum(v for (c, _), v in self.entries.items() if c == i)

    def totals(self):
        return [self.column_total(i) for i in range(self.max_column() + 1)]

    def rows(self):
        rr = [j - i for (i, j) in self.entries]
        return (min(rr), max(rr)) if rr else (0, 0)

    # display convention: column i, row j - i

    def render(self, total: bool = True) -> str:
        cols = self.max_column() + 1
        rmin, rmax = self.rows()
        rmin = min(rmin, 0)
        grid = []
        labels = []
        if total:
            labels.append("total:")
            tot = [self.column_total(i) for i in range(cols)]
            grid.append([str(t) if t else "." for t in tot])
        for r in range(rmin, rmax + 1):
            labels.append(f"{r}:")
            row = []
            for i in range(cols):
                v = self.get(i, i + r)
                row.append(str(v) if v else ".")
            grid.append(row)
        widths = [max(len(str(i)), max(len(row[i]) for row in grid))
                  for i in range(cols)]
        lw = max(len(s) for s in labels)
        head = " " * lw + "  " + "  ".join(str(i).rjust(widths[i])
                                           for i in range(cols))
        lines = [head]
        for lab, row in zip(labels, grid):
            lines.append(lab.rjust(lw) + "  "
                         + "  ".join(row[i].rjust(widths[i])
                                     for i in range(cols)))
        return "\n".join(lines)

    @classmethod
    def parse(cls, text: str, ring=None) -> "BettiTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise UsageError("empty Betti table text")
        header = [int(tok) for tok in lines[0].split()]
        entries = {}
        for ln in lines[1:]:
            label, _, rest = ln.partition(":")
            label = label.strip()
            if label == "total":
                continue
            r = int(label)
            toks = rest.split()
            if len(toks) != len(header):
                raise UsageError(f"row {r}: expected {len(header)} entries")
            for i, tok in zip(header, toks):
                if tok != ".":
                    entries[(i, i + r)] = int(tok)
        return cls(ring, entries)

    def to_json(self) -> dict:
        obj = {"betti": [[i, j, v] for (i, j), v in sorted(self.entries.items())]}
        if self.ring is not None:
            obj["ring"] = self.ring.to_json()
        return obj

    @classmethod
    def from_json(cls, obj) -> "BettiTable":
        ring = WeightedRing.from_json(obj["ring"]) if "ring" in obj else None
        return cls(ring, {(i, j): v for i, j, v in obj["betti"]})


def betti(res: FreeResolution) -> BettiTable:
    """Betti table of a minimal resolution: counts of twists per level."""
    if not res.minimal:
        raise UsageError("Betti numbers need a minimal resolution")
    entries = {}
    for i in range(res.length + 1):
        for a in res.twists(i):
            entries[(i, a)] = entries.get((i, a), 0) + 1
    return BettiTable(res.ring, entries)


# -- Hilbert data ----------------------------------------------------------------


def hilbert_function(ideal: Ideal, e: int) -> int:
    return ideal.hilbert_function(e)


def free_alternating_sum(res: FreeResolution, e: int) -> int:
    """sum_i (-1)^i dim (F_i)_e; equals dim of the resolved module in
    degree e when the resolution is a resolution."""
    ring = res.ring
    acc = 0
    sign = 1
    for i in range(res.length + 1):
        acc += sign * sum(ring.dim_component(e - a) for a in res.twists(i))
        sign = -sign
    return acc


def quotient_hilbert_function(res: FreeResolution, e: int) -> int:
    """dim of the resolved module in degree e counted by standard monomials
    of the lead-term module of the defining submodule."""
    if res._k0_leads is None:
        return sum(res.ring.dim_component(e - a) for a in res.twists(0))
    ring = res.ring
    by_comp = {}
    for comp, mono in res._k0_leads:
        by_comp.setdefault(comp, []).append(mono)
    count = 0
    for comp, a in enumerate(res.twists(0)):
        deg = e - a
        if deg < 0:
            continue
        lts = by_comp.get(comp, ())
        for mono in ring.component_basis(deg):
            if not any(_mono_divides(lt, mono) for lt in lts):
                count += 1
    return count


def k_polynomial(monomials, ring: WeightedRing) -> dict:
    """Numerator of the Hilbert series of S/(monomial ideal), as a dict
    degree -> integer coefficient."""
    degs = ring.degrees

    def deg_of(m):
        return sum(e * degs[i] for i, e in enumerate(m) if e)

    def minimalize(gens):
        gens = sorted(set(gens), key=lambda m: (deg_of(m), m))
        out = []
        for g in gens:
            if not any(_mono_divides(h, g) for h in out):
                out.append(g)
        return tuple(out)

    memo = {}

    def poly_mul(a, b):
        out = {}
        for da, ca in a.items():
            for db, cb in b.items():
                d = da + db
                out[d] = out.get(d, 0) + ca * cb
        return {d: c for d, c in out.items() if c}

    def rec(gens):
        if not gens:
            return {0: 1}
        if len(gens) == 1:
            return {0: 1, deg_of(gens[0]): -1}
        hit = memo.get(gens)
        if hit is not None:
            return hit
        # pairwise coprime: product formula
        masks = [_mask(g) for g in gens]
        coprime = True
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if masks[i] & masks[j]:
                    coprime = False
                    break
            if not coprime:
                break
        if coprime:
            out = {0: 1}
            for g in gens:
                out = poly_mul(out, {0: 1, deg_of(g): -1})
            memo[gens] = out
            return out
        # pivot on the most frequent variable
        counts = [0] * ring.nvars
        for g in gens:
            for i, e in enumerate(g):
                if e:
                    counts[i] += 1
        x = max(range(ring.nvars), key=lambda i: counts[i])
        pivot = ring.variable(x)
        # colon: divide out one power of x where possible
        colon = minimalize(tuple(
            tuple(e - 1 if i == x and e else e for i, e in enumerate(g))
            for g in gens))
        # sum: set x = 0-th power barrier, i.e. add x to the ideal
        plus = minimalize(tuple(g for g in gens if not g[x]) + (pivot,))
        a = rec(colon)
        b = rec(plus)
        out = dict(b)
        dx = degs[x]
        for d, c in a.items():
            out[d + dx] = out.get(d + dx, 0) + c
        out = {d: c for d, c in out.items() if c}
        memo[gens] = out
        return out

    return rec(minimalize(tuple(monomials)))


def lead_module_dimension(ring: WeightedRing, leads) -> int:
    """Krull dimension of F_0 / (lead-term module): max over components of
    the largest variable set meeting no lead-term support."""
    by_comp = {}
    for comp, mono in leads:
        by_comp.setdefault(comp, []).append(_mask(mono))
    best = -1
    n = ring.nvars
    comps = by_comp.values()
    if not by_comp:
        return n
    for masks in comps:
        for subset in range(1 << n):
            size = bin(subset).count("1")
            if size <= best:
                continue
            if all(m & ~subset for m in masks):
                best = size
    return best


def module_dimension(res: FreeResolution) -> int:
    """Krull dimension of the resolved module."""
    rank0 = len(res.twists(0))
    if rank0 == 0:
        return -1
    if res.length == 0 or res._k0_leads is None:
        return res.ring.nvars
    covered = {comp for comp, _ in res._k0_leads}
    if any(c not in covered for c in range(rank0)):
        # some free summand survives untouched
        return res.ring.nvars
    return lead_module_dimension(res.ring, res._k0_leads)


def module_depth(res: FreeResolution) -> int:
    """depth = (number of variables) - projective dimension."""
    return res.ring.nvars - res.projective_dimension()


# -- Ext modules --------------------------------------------------------------------


def dual_complex(res: FreeResolution, twist=None):
    """Hom(F_*, S(-twist)) as a list of maps G^{i-1} -> G^i (transposes)."""
    if twist is None:
        twist = res.ring.total_weight
    return [f.transpose_twisted(twist) for f in res.maps]


def ext_min_degrees(res: FreeResolution, i: int, twist=None):
    """Degrees of a minimal generating set of Ext^i(M, S(-twist)), where M
    is the module resolved by res; empty list means the module vanishes."""
    if not res.complete:
        raise UsageError("Ext needs a complete minimal resolution")
    if not res.minimal:
        raise UsageError("Ext needs a minimal resolution")
    if i < 0:
        return []
    pd = res.length
    if i > pd:
        return []
    ring = res.ring
    if twist is None:
        twist = ring.total_weight
    duals = dual_complex(res, twist)
    g_twists = [tuple(twist - a for a in res.twists(k))
                for k in range(pd + 1)]
    # kernel of delta^{i+1}: G^i -> G^{i+1}
    if i == pd:
        kernel = [({(k, ring.one): QQ(1)}, g_twists[i][k])
                  for k in range(len(g_twists[i]))]
    else:
        delta_next = duals[i]          # G^i -> G^{i+1}
        cols = delta_next.columns_as_vecs()
        kernel = kernel_of_columns(ring, g_twists[i + 1], cols, g_twists[i])
    if not kernel:
        return []
    # image of delta^i: G^{i-1} -> G^i
    image_cols = []
    if i >= 1:
        image_cols = [v for v in duals[i - 1].columns_as_vecs() if v]
    order = PositionOverTerm(WeightedGrevlex(ring))
    tw = g_twists[i]
    if image_cols:
        img_run = GBRun(ring, order.mkey, tw)
        items = sorted(((vec_degree(ring, tw, v), k, v)
                        for k, v in enumerate(image_cols)),
                       key=lambda t: (t[0], t[1]))
        img_run.run([(d, v) for d, _, v in items])
        img_gb = [e.full_vec() for e in img_run.elems]
    else:
        img_gb = []
    ext_run = GBRun(ring, order.mkey, tw)
    ext_run.preload(img_gb)
    kernel.sort(key=lambda t: t[1])
    ext_run.run([(d, v) for v, d in kernel])
    return sorted(d for _, d, _ in ext_run.accepted)
