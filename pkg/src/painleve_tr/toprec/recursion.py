"""Residue recursion for the correlation differentials omega_n^(g) on a genus-0 curve.

A stable omega_n^(g) is stored as coefficients on the basis

    prod_i dz_i / (z_i - r_{a_i})^{k_i},   k_i >= 2,

one factor per variable, where r_a runs over the branch points.  Because the
differentials are symmetric, only the first variable is kept apart: the
table maps ``first -> {sorted(rest) -> coefficient}``.  The symmetry between
the first slot and the others is not imposed, so checking it is a real test
of the recursion.

Near a branch point r, with u = z - r and phi(u) = iota(r + u) - r, the
recursion kernel expands as

    K(z0, z) = sum_m L_m(u) dz0 / (z0 - r)^(m+1),
    L_m(u) = c * (u^m - phi(u)^m) / ((y(z) - y(iota z)) x'(z)),

so every residue reduces to pairing coefficients of L_m against products of
local expansions.  ``c`` is :data:`KERNEL_FACTOR`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Optional

import flint

from ..curves import SpectralCurve
from ..exactcore import LaurentSeries, RationalFunction, laurent_expand, var

# K(z0,z) = KERNEL_FACTOR * (int_{iota z}^{z} omega_2^(0)(z0, .)) / ((y(z) - y(iota z)) dx(z)).
# With omega_1^(0) = y dx this is the orientation under which the determinantal
# correlators W_n agree with omega_n^(g) through a single sheet map.
KERNEL_FACTOR = Fraction(1, 2)

DEFAULT_MAX_WEIGHT = 6  # 2g - 2 + n


class ResourceLimitError(RuntimeError):
    pass


def pole_bound(g: int, n: int) -> int:
    return 6 * g + 2 * n - 4


@dataclass
class MultiDifferential:
    """omega_n^(g) on ``curve``; ``table[first][rest] = coefficient``.

    Keys are ``(branch_point_index, pole_order)``.  Coefficients are field
    elements: ``flint.fmpq`` on numeric curves, :class:`RationalFunction` otherwise.
    """

    g: int
    n: int
    curve: SpectralCurve
    table: dict = field(default_factory=dict)

    def coefficient(self, keys) -> object:
        keys = tuple(keys)
        row = self.table.get(keys[0])
        if row is None:
            return 0
        return row.get(tuple(sorted(keys[1:])), 0)

    def entries(self):
        for first, row in self.table.items():
            for rest, c in row.items():
                if c:
                    yield first, rest, c

    def full_entries(self):
        """(ordered key tuple, coefficient), every ordering of the rest listed once."""
        for first, rest, c in self.entries():
            for perm in set(permutations(rest)):
                yield (first,) + perm, c

    def max_pole_order(self) -> int:
        best = 0
        for first, rest, _c in self.entries():
            best = max(best, first[1], *(k for _, k in rest)) if rest else max(best, first[1])
        return best

    def symmetry_defects(self) -> list:
        """Entries whose value changes when the first variable is exchanged with another."""
        bad = []
        for first, rest, c in self.entries():
            for i, other in enumerate(rest):
                if i and rest[i - 1] == other:
                    continue
                swapped = tuple(sorted(rest[:i] + (first,) + rest[i + 1:]))
                c2 = self.table.get(other, {}).get(swapped, 0)
                if c2 != c:
                    bad.append(((first,) + rest, other))
        return bad

    def body(self, names=None) -> RationalFunction:
        """The rational function multiplying dz_1 ... dz_n."""
        names = names or [f"z{i + 1}" for i in range(self.n)]
        if len(names) != self.n:
            raise ValueError("one variable name per slot")
        bps = self.curve.branch_points
        cache = {}

        def basis(name, key):
            if (name, key) not in cache:
                a, k = key
                cache[(name, key)] = (var(name) - bps[a]) ** (-k)
            return cache[(name, key)]

        acc = RationalFunction()
        for keys, c in self.full_entries():
            term = _as_rf(c)
            for name, key in zip(names, keys):
                term = term * basis(name, key)
            acc = acc + term
        return acc

    def __str__(self):
        return f"omega_{self.n}^({self.g}) on {self.curve.name}"


def _as_rf(c) -> RationalFunction:
    if isinstance(c, RationalFunction):
        return c
    if isinstance(c, flint.fmpq):
        return RationalFunction.constant_of(Fraction(int(c.p), int(c.q)))
    return RationalFunction.constant_of(c)


class _BranchLocal:
    """Local expansions at one branch point, grown on demand."""

    def __init__(self, engine: "RecursionEngine", a: int):
        self.engine = engine
        self.a = a
        curve = engine.curve
        self.r = curve.branch_points[a]
        z = var("z")
        self.iota_z = curve.involution.as_function("z")
        self.diota = self.iota_z.derivative("z")
        dy = curve.y - curve.iota(curve.y)
        self.kappa = _rf_const(engine.kernel_factor) / (dy * curve.dx)
        self.u = z - self.r
        self.phi = self.iota_z - self.r
        self.N = 0
        self._z: dict = {}
        self._i: dict = {}
        self._l: dict = {}
        self._p: dict = {}
        self._t: dict = {}

    def ensure(self, kmax: int) -> None:
        if kmax <= self.N:
            return
        self.N = max(kmax, 2 * self.N)
        self._z.clear()
        self._i.clear()
        self._l.clear()
        self._p.clear()

    # local factors: key ('E', b, k) is a basis slot, ('U', j) a Bergman expansion term
    def zside(self, key) -> LaurentSeries:
        s = self._z.get(key)
        if s is None:
            bps = self.engine.curve.branch_points
            kind = key[0]
            if kind == "E":
                _, b, k = key
                f = (var("z") - bps[b]) ** (-k)
            elif kind == "U":
                f = self.u ** key[1]
            elif kind == "B":  # omega_2^(0)(z, iota z) / dz^2
                f = self.diota / (var("z") - self.iota_z) ** 2
            else:
                raise KeyError(key)
            s = laurent_expand(f, "z", self.r, self.N + 1)
            self._z[key] = s
        return s

    def iside(self, key) -> LaurentSeries:
        s = self._i.get(key)
        if s is None:
            bps = self.engine.curve.branch_points
            kind = key[0]
            if kind == "E":
                _, b, k = key
                f = self.diota * (self.iota_z - bps[b]) ** (-k)
            elif kind == "U":
                f = self.diota * self.phi ** key[1]
            elif kind == "1":
                f = RationalFunction.constant_of(1)
            else:
                raise KeyError(key)
            s = laurent_expand(f, "z", self.r, self.N + 1)
            self._i[key] = s
        return s

    def kernel(self, m: int) -> LaurentSeries:
        s = self._l.get(m)
        if s is None:
            f = self.kappa * (self.u ** m - self.phi ** m)
            s = laurent_expand(f, "z", self.r, 2 * self.N + 2)
            self._l[m] = s
        return s

    def pairing(self, m: int, zkey, ikey):
        """Res_{u=0} L_m(u) Z(u) I(u) du as a field element."""
        tkey = (m, zkey, ikey)
        hit = self._t.get(tkey)
        if hit is not None:
            return hit
        pkey = (zkey, ikey)
        P = self._p.get(pkey)
        if P is None:
            P = self.zside(zkey) * self.iside(ikey)
            self._p[pkey] = P
        L = self.kernel(m)
        acc = RationalFunction()
        if not P.is_zero():
            for e in range(P.valuation, 0 + 1):
                le = -1 - e
                if le < L.valuation:
                    break
                pe = P.coefficient(e)
                if pe.is_zero():
                    continue
                lc = L.coefficient(le)
                if not lc.is_zero():
                    acc = acc + lc * pe
        val = self.engine.scalar(acc)
        self._t[tkey] = val
        return val

    def primitive_ydx(self, order: int) -> LaurentSeries:
        """Termwise primitive of y dx around this branch point."""
        curve = self.engine.curve
        s = laurent_expand(curve.y * curve.dx, "z", self.r, order)
        if s.valuation < 0:
            raise ArithmeticError(f"y dx has a pole at the branch point {self.r}")
        return s.integral()


def _rf_const(c) -> RationalFunction:
    return RationalFunction.constant_of(c)


def _key(slot) -> tuple:
    """Local-factor key of a stored basis slot."""
    return ("E", slot[0], slot[1])


def _merge(a: tuple, b: tuple) -> tuple:
    return tuple(sorted(a + b))


def _split_weight(total: tuple, part: tuple) -> int:
    """Number of ways to choose the positions of ``part`` inside ``total`` (multisets)."""
    counts = defaultdict(int)
    for k in total:
        counts[k] += 1
    pc = defaultdict(int)
    for k in part:
        pc[k] += 1
    w = 1
    for k, c in pc.items():
        w *= comb(counts[k], c)
    return w


class RecursionEngine:
    """All omega_n^(g) of one curve, memoised by (g, n)."""

    def __init__(self, curve: SpectralCurve, kernel_factor=KERNEL_FACTOR):
        self.curve = curve
        self.kernel_factor = Fraction(kernel_factor)
        self.numeric = not curve.field.is_symbolic
        self.locals = [_BranchLocal(self, a) for a in range(len(curve.branch_points))]
        self.memo: dict = {}

    def scalar(self, f: RationalFunction):
        if self.numeric:
            q = f.constant()
            return flint.fmpq(q.numerator, q.denominator)
        return f

    def _lift(self, c):
        if self.numeric:
            return flint.fmpq(c) if isinstance(c, int) else c
        return RationalFunction.constant_of(c) if isinstance(c, int) else c

    # Bergman kernel omega_2^(0)(z, z_i) near branch point a, as a factor table:
    # first slot ('U', j) stands for u^j (or phi' phi^j on the conjugate side).
    def _bergman_local(self, a: int, jmax: int) -> dict:
        return {("U", j): {((a, j + 2),): self._lift(j + 1)} for j in range(jmax + 1)}

    def omega(self, g: int, n: int, max_weight: Optional[int] = None) -> MultiDifferential:
        if g < 0 or n < 1:
            raise ValueError("need g >= 0 and n >= 1")
        if (g, n) in ((0, 1), (0, 2)):
            raise ValueError("omega_1^(0) and omega_2^(0) are base cases; see base_omega")
        cap = DEFAULT_MAX_WEIGHT if max_weight is None else max_weight
        if 2 * g - 2 + n > cap:
            raise ResourceLimitError(
                f"omega_{n}^({g}) has 2g-2+n = {2 * g - 2 + n} above the workload cap {cap}"
            )
        hit = self.memo.get((g, n))
        if hit is None:
            hit = self._compute(g, n, cap)
            self.memo[(g, n)] = hit
        return hit

    def _factor(self, g: int, n: int, a: int, cap: int, jmax: int) -> dict:
        """Table of omega_n^(g) with the first slot in local-factor key form."""
        if (g, n) == (0, 2):
            return self._bergman_local(a, jmax)
        w = self.omega(g, n, cap)
        return {_key(first): row for first, row in w.table.items()}

    def _compute(self, g: int, n: int, cap: int) -> MultiDifferential:
        kout = pole_bound(g, n)
        jmax = kout - 2
        rest_size = n - 1
        out: dict = defaultdict(lambda: defaultdict(lambda: self._lift(0)))
        for a, loc in enumerate(self.locals):
            loc.ensure(kout + 2)
            # S[(zkey, ikey)][rest] accumulates the bracket before the kernel pairing
            S: dict = defaultdict(lambda: defaultdict(lambda: self._lift(0)))
            if g >= 1:
                if (g - 1, n + 1) == (0, 2):
                    S[(("B",), ("1",))][()] = self._lift(1)
                else:
                    w = self.omega(g - 1, n + 1, cap)
                    for first, rest, c in w.entries():
                        for i, second in enumerate(rest):
                            if i and rest[i - 1] == second:
                                continue
                            remaining = rest[:i] + rest[i + 1:]
                            S[(_key(first), _key(second))][remaining] += c
            for g1 in range(g + 1):
                g2 = g - g1
                for size1 in range(rest_size + 1):
                    size2 = rest_size - size1
                    if (g1, size1) == (0, 0) or (g2, size2) == (0, 0):
                        continue
                    A = self._factor(g1, size1 + 1, a, cap, jmax)
                    B = self._factor(g2, size2 + 1, a, cap, jmax)
                    for ka, rowa in A.items():
                        for kb, rowb in B.items():
                            bucket = S[(ka, kb)]
                            for ra, ca in rowa.items():
                                if not ca:
                                    continue
                                for rb, cb in rowb.items():
                                    if not cb:
                                        continue
                                    merged = _merge(ra, rb)
                                    wgt = _split_weight(merged, ra)
                                    bucket[merged] += ca * cb * wgt if wgt != 1 else ca * cb
            for (zkey, ikey), rows in S.items():
                rows = {r: c for r, c in rows.items() if c}
                if not rows:
                    continue
                for m in range(1, kout):
                    t = loc.pairing(m, zkey, ikey)
                    if not t:
                        continue
                    target = out[(a, m + 1)]
                    for rest, c in rows.items():
                        target[rest] += c * t
        table = {}
        for first, row in out.items():
            row = {r: c for r, c in row.items() if c}
            if row:
                table[first] = row
        return MultiDifferential(g, n, self.curve, table)


_ENGINES: dict = {}


def engine_for(curve: SpectralCurve, kernel_factor=KERNEL_FACTOR) -> RecursionEngine:
    key = (curve.fingerprint(), Fraction(kernel_factor))
    eng = _ENGINES.get(key)
    if eng is None:
        eng = RecursionEngine(curve, kernel_factor)
        _ENGINES[key] = eng
    return eng


def omega(curve: SpectralCurve, g: int, n: int, max_weight: Optional[int] = None, kernel_factor=KERNEL_FACTOR):
    """omega_n^(g): a :class:`MultiDifferential` when stable, else the base-case body.

    The base cases return the rational function multiplying dz_1 (... dz_n):
    y(z1) x'(z1) for (0,1) and 1/(z1 - z2)^2 for (0,2).
    """
    if (g, n) == (0, 1):
        return curve.y.subs({"z": var("z1")}) * curve.dx.subs({"z": var("z1")})
    if (g, n) == (0, 2):
        return (var("z1") - var("z2")) ** (-2)
    return engine_for(curve, kernel_factor).omega(g, n, max_weight)


def clear_memo() -> None:
    _ENGINES.clear()
