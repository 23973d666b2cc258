"""Structural subsets of a finite ring, computed lazily and cached.

The sets of interest are the unit group U(R) with its inverse map, the
Jacobson radical J(R), the power-radical sqrtJ(R) = {x : x^m in J(R)
for some m >= 1}, the nilpotents N(R), the idempotents Id(R), and the
center C(R).

Algorithm notes:

- J(R) uses quasi-regularity: x is in J(R) iff 1 - r*x is a unit for
  every r.  The computed set is then verified to be a two-sided ideal;
  a verification failure raises InternalConsistencyError because it can
  only mean a bug, never bad input.
- sqrtJ membership walks the power orbit of x (length <= order), so no
  exponent cap is needed.
- Table-mode rings detect units by the scan "find y with x*y = 1, then
  confirm y*x = 1" (vectorized).  Lazy rings instead walk the power
  orbit: in a finite ring x is a unit iff x^m = 1 for some m >= 1, and
  then x^(m-1) is the inverse; the two-sided confirmation is kept.  A
  failed confirmation is an InternalConsistencyError (finite rings are
  Dedekind finite, so it cannot legitimately happen).

Each ring carries one cache; concurrent requests for the same set see a
single computation (a per-ring lock guards the cache), and all returned
sets are immutable.
"""

from __future__ import annotations

import numpy as np

from .core import ElementSet, FiniteRing, InternalConsistencyError, element_set


class RingAnalysis:
    """Lazy, once-only cache of structural sets for one ring."""

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.compute_counts: dict = {}

    def _get(self, key, compute):
        cache = self.ring._analysis_cache
        with self.ring._analysis_lock:
            if key not in cache:
                cache[key] = compute()
                self.compute_counts[key] = self.compute_counts.get(key, 0) + 1
            return cache[key]

    # -- units ---------------------------------------------------------

    def _compute_units(self):
        ring = self.ring
        n, one = ring.order, ring.one
        inverses = {}
        if ring.mode == "table":
            MUL = ring.mul_table
            hits = MUL == one
            unit_mask = hits.any(axis=1)
            us = np.nonzero(unit_mask)[0]
            invs = np.argmax(hits[us], axis=1)
            if not (MUL[invs, us] == one).all():
                bad = us[np.argmax(MUL[invs, us] != one)]
                raise InternalConsistencyError(
                    f"{ring.label}: one-sided inverse of {int(bad)} is not two-sided")
            inverses = {int(u): int(v) for u, v in zip(us, invs)}
        else:
            for x in range(n):
                if x == one:
                    inverses[x] = one
                    continue
                inv = None
                seen = set()
                prev, cur = None, x
                while True:
                    if cur == one:
                        inv = prev
                        break
                    if cur in seen:
                        break
                    seen.add(cur)
                    prev, cur = cur, ring.mul(cur, x)
                if inv is not None:
                    if ring.mul(x, inv) != one or ring.mul(inv, x) != one:
                        raise InternalConsistencyError(
                            f"{ring.label}: power-orbit inverse of {x} failed confirmation")
                    inverses[x] = inv
        members = frozenset(inverses)
        return element_set(self.ring, members), inverses

    def units(self) -> ElementSet:
        return self._get("units", self._compute_units)[0]

    def unit_inverses(self) -> dict:
        return self._get("units", self._compute_units)[1]

    # -- Jacobson radical ----------------------------------------------

    def _verify_ideal(self, members: frozenset) -> None:
        from .build import _ideal_violation

        violation = _ideal_violation(self.ring, members)
        if violation is not None:
            raise InternalConsistencyError(
                f"computed Jacobson radical of {self.ring.label} is not an ideal: {violation}")

    def _compute_jacobson(self):
        ring = self.ring
        n, one = ring.order, ring.one
        unit_members = self.units().members
        if ring.mode == "table":
            MUL = ring.mul_table
            one_minus = ring.add_table[one, ring.neg_table]  # 1 - t for every t
            unit_mask = np.zeros(n, dtype=bool)
            unit_mask[list(unit_members)] = True
            jm = unit_mask[one_minus[MUL]].all(axis=0)
            members = frozenset(int(v) for v in np.nonzero(jm)[0])
        else:
            members = set()
            for x in range(n):
                if all(ring.sub(one, ring.mul(r, x)) in unit_members for r in range(n)):
                    members.add(x)
            members = frozenset(members)
        self._verify_ideal(members)
        return element_set(ring, members)

    def jacobson(self) -> ElementSet:
        return self._get("jacobson", self._compute_jacobson)

    def in_jacobson(self, x: int) -> bool:
        self.ring._check_index(x)
        return x in self.jacobson().members

    # -- power-orbit sets ----------------------------------------------

    def _power_hits(self, targets: frozenset) -> frozenset:
        """Elements with some power x^m (m >= 1) landing in ``targets``."""
        ring = self.ring
        n = ring.order
        if ring.mode == "table":
            MUL = ring.mul_table
            tmask = np.zeros(n, dtype=bool)
            tmask[list(targets)] = True
            x = np.arange(n)
            p = x.copy()
            hit = tmask[p].copy()
            for _ in range(n - 1):
                p = MUL[p, x]
                hit |= tmask[p]
            return frozenset(int(v) for v in np.nonzero(hit)[0])
        members = set()
        for x in range(n):
            if any(p in targets for p in ring.power_orbit(x)):
                members.add(x)
        return frozenset(members)

    def sqrt_jacobson(self) -> ElementSet:
        def compute():
            return element_set(self.ring, self._power_hits(self.jacobson().members))
        return self._get("sqrt_jacobson", compute)

    def in_sqrt_jacobson(self, x: int) -> bool:
        self.ring._check_index(x)
        return x in self.sqrt_jacobson().members

    def nilpotents(self) -> ElementSet:
        def compute():
            return element_set(self.ring, self._power_hits(frozenset([0])))
        return self._get("nilpotents", compute)

    # -- pointwise sets -------------------------------------------------

    def idempotents(self) -> ElementSet:
        def compute():
            ring = self.ring
            if ring.mode == "table":
                diag = ring.mul_table.diagonal()
                members = np.nonzero(diag == np.arange(ring.order))[0]
            else:
                members = [x for x in range(ring.order) if ring.mul(x, x) == x]
            return element_set(ring, members)
        return self._get("idempotents", compute)

    def center(self) -> ElementSet:
        def compute():
            ring = self.ring
            if ring.mode == "table":
                members = np.nonzero((ring.mul_table == ring.mul_table.T).all(axis=1))[0]
            else:
                members = [
                    x for x in range(ring.order)
                    if all(ring.mul(x, y) == ring.mul(y, x) for y in range(ring.order))
                ]
            return element_set(ring, members)
        return self._get("center", compute)


def analysis(ring: FiniteRing) -> RingAnalysis:
    """The per-ring analysis cache (created on first use)."""
    with ring._analysis_lock:
        obj = ring._analysis_cache.get("__analysis__")
        if obj is None:
            obj = RingAnalysis(ring)
            ring._analysis_cache["__analysis__"] = obj
        return obj


def units(ring: FiniteRing) -> ElementSet:
    return analysis(ring).units()


def unit_inverses(ring: FiniteRing) -> dict:
    return analysis(ring).unit_inverses()


def jacobson(ring: FiniteRing) -> ElementSet:
    return analysis(ring).jacobson()


def in_jacobson(ring: FiniteRing, x: int) -> bool:
    return analysis(ring).in_jacobson(x)


def sqrt_jacobson(ring: FiniteRing) -> ElementSet:
    return analysis(ring).sqrt_jacobson()


def in_sqrt_jacobson(ring: FiniteRing, x: int) -> bool:
    return analysis(ring).in_sqrt_jacobson(x)


def nilpotents(ring: FiniteRing) -> ElementSet:
    return analysis(ring).nilpotents()


def idempotents(ring: FiniteRing) -> ElementSet:
    return analysis(ring).idempotents()


def center(ring: FiniteRing) -> ElementSet:
    return analysis(ring).center()


def ideal_closure(ring: FiniteRing, gens) -> ElementSet:
    """Smallest two-sided ideal containing ``gens`` (worklist fixed point)."""
    gens = [int(x) for x in gens]
    for x in gens:
        ring._check_index(x)
    if ring.mode == "table":
        ADD, MUL, NEG = ring.add_table, ring.mul_table, ring.neg_table
        cur = np.unique(np.array([0] + gens, dtype=np.int64))
        while True:
            parts = [
                cur,
                ADD[np.ix_(cur, cur)].ravel(),
                NEG[cur],
                MUL[:, cur].ravel(),
                MUL[cur, :].ravel(),
            ]
            new = np.unique(np.concatenate(parts))
            if len(new) == len(cur):
                return element_set(ring, (int(v) for v in cur))
            cur = new
    members = {0}
    frontier = list(gens)
    n = ring.order
    while frontier:
        w = frontier.pop()
        if w in members:
            continue
        members.add(w)
        frontier.append(ring.neg(w))
        for s in list(members):
            frontier.append(ring.add(w, s))
        for r in range(n):
            frontier.append(ring.mul(r, w))
            frontier.append(ring.mul(w, r))
    return element_set(ring, members)


def is_unit_closed_subring(sub) -> bool:
    """True iff U(S) equals U(R) intersected with the image of S."""
    sub_units = units(sub.ring)
    image_units = {sub.embedding[u] for u in sub_units.members}
    parent_units = units(sub.parent).members
    return image_units == (parent_units & set(sub.embedding))
