"""Brute-force Hochschild homology of finite-dimensional algebras.

Everything runs on the bar complex with exact rational coefficients.
A level-k chain over the algebra B with coefficients in a bimodule M is
a combination of basis keys (a_1, ..., a_k, m): k algebra legs followed
by one module slot.  The differential enumerates faces from the wrap
side,

    d(a_1,...,a_k; m) = (a_1,...,a_{k-1}; a_k.m)
                      + sum_{i=1}^{k-1} (-1)^i (..., a_{k-i} a_{k-i+1}, ...; m)
                      + (-1)^k (a_2,...,a_k; m.a_1),

a convention chosen so that the cyclic-rotation homotopy identity checked
by homotopy_identity_check holds literally, with no stray signs.

Matrices never use floats: ranks and kernels come from sparse Gaussian
elimination over Fraction.  Complex sizes grow as dim(B)^level, so every
rank computation is guarded by a size cap (dense-equivalent entry count
of the largest matrix); HH_SIZE_CAP in the environment overrides it.
"""

from __future__ import annotations

import itertools
import os
import random
from fractions import Fraction

from .linalg import TrackingEchelon, addmul_into, kernel_combos, rank_of
from .presets_io import CheckReport

DEFAULT_SIZE_CAP = 10 ** 7

ONE = Fraction(1)


class SizeCapExceeded(RuntimeError):
    """A requested bar-complex matrix exceeds the configured size cap."""


def _resolve_cap(size_cap: int | None) -> int:
    if size_cap is not None:
        return size_cap
    env = os.environ.get("HH_SIZE_CAP")
    return int(env) if env else DEFAULT_SIZE_CAP


def _check_cap(domain: int, codomain: int, cap: int, what: str):
    if domain * codomain > cap:
        raise SizeCapExceeded(
            f"{what}: matrix {domain} x {codomain} exceeds size cap {cap} "
            f"(set HH_SIZE_CAP to override)"
        )


class FiniteDimAlgebra:
    """Associative unital algebra given by exact structure constants.

    table[i][j] is the sparse coordinate vector of (basis i) * (basis j);
    unit is the coordinate vector of 1.  Validation checks the unit law
    and associativity on all basis triples unless check=False (used by
    the combinators, whose output is associative by construction).
    """

    __slots__ = ("dim", "table", "unit")

    def __init__(self, table, unit, check: bool = True):
        self.dim = len(table)
        self.table = [
            [{k: Fraction(v) for k, v in cell.items() if v} for cell in row]
            for row in table
        ]
        self.unit = {k: Fraction(v) for k, v in unit.items() if v}
        if any(len(row) != self.dim for row in self.table):
            raise ValueError("structure-constant table must be square")
        if check:
            self._validate()

    def _validate(self):
        for i in range(self.dim):
            if self.mul(self.unit, {i: ONE}) != {i: ONE}:
                raise ValueError("unit is not a left identity")
            if self.mul({i: ONE}, self.unit) != {i: ONE}:
                raise ValueError("unit is not a right identity")
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table[i][j]
                for k in range(self.dim):
                    left = self.mul(ij, {k: ONE})
                    right = self.mul({i: ONE}, self.table[j][k])
                    if left != right:
                        raise ValueError(
                            f"multiplication not associative at ({i},{j},{k})"
                        )

    def mul_basis(self, i: int, j: int) -> dict:
        return self.table[i][j]

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            row = self.table[i]
            for j, b in v.items():
                addmul_into(out, row[j], a * b)
        return out

    # -- constructors --------------------------------------------------

    @classmethod
    def truncated_polynomial(cls, k: int) -> "FiniteDimAlgebra":
        """Q[x]/(x^k), basis 1, x, ..., x^{k-1}."""
        if k < 1:
            raise ValueError("k must be positive")
        table = [
            [({i + j: ONE} if i + j < k else {}) for j in range(k)]
            for i in range(k)
        ]
        return cls(table, {0: ONE}, check=False)

    @classmethod
    def group_algebra(cls, group_table) -> "FiniteDimAlgebra":
        """Group algebra from a multiplication table g,h -> group_table[g][h]."""
        m = len(group_table)
        identity = None
        for e in range(m):
            if all(group_table[e][h] == h and group_table[h][e] == h
                   for h in range(m)):
                identity = e
                break
        if identity is None:
            raise ValueError("table has no identity element")
        table = [[{group_table[g][h]: ONE} for h in range(m)] for g in range(m)]
        return cls(table, {identity: ONE})  # checked: validates associativity

    def tensor(self, other: "FiniteDimAlgebra") -> "FiniteDimAlgebra":
        d2 = other.dim
        table = []
        for i1 in range(self.dim):
            for i2 in range(d2):
                row = []
                for j1 in range(self.dim):
                    cell1 = self.table[i1][j1]
                    for j2 in range(d2):
                        cell2 = other.table[i2][j2]
                        row.append({
                            k1 * d2 + k2: c1 * c2
                            for k1, c1 in cell1.items()
                            for k2, c2 in cell2.items()
                        })
                table.append(row)
        unit = {
            k1 * d2 + k2: c1 * c2
            for k1, c1 in self.unit.items()
            for k2, c2 in other.unit.items()
        }
        return FiniteDimAlgebra(table, unit, check=False)

    def change_basis(self, new_basis) -> "FiniteDimAlgebra":
        """Rewrite structure constants in the basis given by new_basis
        (a list of coordinate vectors in the old basis)."""
        if len(new_basis) != self.dim:
            raise ValueError("basis size mismatch")
        inv = _invert(new_basis, self.dim)
        table = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                prod = self.mul(new_basis[i], new_basis[j])
                row.append(_apply_columns(inv, prod))
            table.append(row)
        unit = _apply_columns(inv, self.unit)
        return FiniteDimAlgebra(table, unit, check=False)

    def is_automorphism(self, columns) -> bool:
        """Does the linear map (columns[i] = image of basis i) preserve
        multiplication and the unit, and is it invertible?"""
        if _apply_columns(columns, self.unit) != self.unit:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = _apply_columns(columns, self.table[i][j])
                rhs = self.mul(columns[i], columns[j])
                if lhs != rhs:
                    return False
        return rank_of(columns) == self.dim

    def __repr__(self):
        return f"FiniteDimAlgebra(dim={self.dim})"


def _apply_columns(columns, vec: dict) -> dict:
    out: dict = {}
    for i, c in vec.items():
        addmul_into(out, columns[i], c)
    return out


def _compose(a, b):
    """Composite automorphism a(b(.)) as columns."""
    return [_apply_columns(a, col) for col in b]


def _columns_key(columns):
    """Hashable canonical form of a column list."""
    return tuple(tuple(sorted(col.items())) for col in columns)


def _invert(columns, dim):
    """Inverse of a linear map given by columns, as columns (dense, exact)."""
    # augmented elimination on [columns | identity]
    rows = [
        {j: columns[j].get(i, 0) for j in range(dim) if columns[j].get(i)}
        for i in range(dim)
    ]
    aug = [{("id", i): ONE} for i in range(dim)]
    for i in range(dim):
        rows[i].update(aug[i])
    ech = []
    for r in rows:
        r = dict(r)
        for pivcol, prow in ech:
            if pivcol in r:
                addmul_into(r, prow, -r[pivcol] / prow[pivcol])
        main = [c for c in r if not isinstance(c, tuple)]
        if not main:
            raise ValueError("basis change matrix is singular")
        piv = min(main)
        ech.append((piv, r))
    # back-substitute
    ech.sort(key=lambda pr: pr[0])
    for idx in range(dim - 1, -1, -1):
        piv, row = ech[idx]
        lead = row[piv]
        for k in list(row):
            row[k] = row[k] / lead
        for jdx in range(idx):
            _, other = ech[jdx]
            if piv in other:
                addmul_into(other, row, -other[piv])
    inv_cols = [dict() for _ in range(dim)]
    for piv, row in ech:
        for key, v in row.items():
            if isinstance(key, tuple):
                inv_cols[key[1]][piv] = v
    return inv_cols


def tensor_power(A: FiniteDimAlgebra, n: int) -> FiniteDimAlgebra:
    if n < 1:
        raise ValueError("n must be positive")
    B = A
    for _ in range(n - 1):
        B = B.tensor(A)
    return B


def decode_index(idx: int, dim: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        out.append(idx % dim)
        idx //= dim
    return tuple(reversed(out))


def encode_tuple(t, dim: int) -> int:
    idx = 0
    for x in t:
        idx = idx * dim + x
    return idx


def slot_permutation(A: FiniteDimAlgebra, n: int, sigma) -> list[int]:
    """Basis permutation of A^(tensor n) with image slot i = source slot
    sigma(i); sigma is 1-indexed, e.g. (2,...,n,1) is the cyclic rotation."""
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("sigma must be a permutation of 1..n")
    out = []
    for idx in range(A.dim ** n):
        t = decode_index(idx, A.dim, n)
        out.append(encode_tuple((t[sigma[i] - 1] for i in range(n)), A.dim))
    return out


def rotation_permutation(A: FiniteDimAlgebra, n: int) -> list[int]:
    return slot_permutation(A, n, tuple(range(2, n + 1)) + (1,))


# -- bimodules ---------------------------------------------------------


class RegularBimodule:
    """M = B with multiplication as both actions."""

    __slots__ = ("algebra", "dim")

    def __init__(self, algebra: FiniteDimAlgebra):
        self.algebra = algebra
        self.dim = algebra.dim

    def left_basis(self, b: int, m: int) -> dict:
        return self.algebra.table[b][m]

    def right_basis(self, m: int, b: int) -> dict:
        return self.algebra.table[m][b]


class AutoTwistedBimodule:
    """M = B with the right action twisted by an automorphism phi:
    b.m = bm and m.b = m phi(b).  For phi a group element g this is the
    sector module Bg of a crossed product."""

    __slots__ = ("algebra", "dim", "columns")

    def __init__(self, algebra: FiniteDimAlgebra, columns):
        self.algebra = algebra
        self.dim = algebra.dim
        self.columns = columns

    def left_basis(self, b: int, m: int) -> dict:
        return self.algebra.table[b][m]

    def right_basis(self, m: int, b: int) -> dict:
        out: dict = {}
        for k, c in self.columns[b].items():
            addmul_into(out, self.algebra.table[m][k], c)
        return out


class TwistedBimodule:
    """The rotated bimodule of a tensor power.

    Underlying space A^(n-1) tensor M.  A pure tensor a_1...a_n acts on
    (b_1,...,b_{n-1}, m) on the left slotwise; on the right, slot i
    receives factor i+1 and the module slot receives factor 1:

        a (b_1 ... b_{n-1} m) c = a_1 b_1 c_2, ..., a_{n-1} b_{n-1} c_n,
                                  a_n m c_1.

    With M = A this is the regular module of A^n with right action
    rotated one slot.
    """

    __slots__ = ("base", "n", "inner", "dim")

    def __init__(self, base: FiniteDimAlgebra, n: int, inner=None):
        if n < 1:
            raise ValueError("n must be positive")
        self.base = base
        self.n = n
        self.inner = inner if inner is not None else RegularBimodule(base)
        self.dim = base.dim ** (n - 1) * self.inner.dim

    def _decode(self, m: int):
        mi = m % self.inner.dim
        rest = decode_index(m // self.inner.dim, self.base.dim, self.n - 1)
        return rest, mi

    def _expand(self, slot_vectors, inner_vec) -> dict:
        out: dict = {(): ONE}
        for vec in slot_vectors:
            out = {
                key + (k,): c * v
                for key, c in out.items()
                for k, v in vec.items()
            }
        result: dict = {}
        for key, c in out.items():
            base = encode_tuple(key, self.base.dim) * self.inner.dim
            for mi, v in inner_vec.items():
                result[base + mi] = c * v
        return result

    def left_basis(self, b: int, m: int) -> dict:
        bt = decode_index(b, self.base.dim, self.n)
        rest, mi = self._decode(m)
        slots = [self.base.table[bt[i]][rest[i]] for i in range(self.n - 1)]
        return self._expand(slots, self.inner.left_basis(bt[-1], mi))

    def right_basis(self, m: int, b: int) -> dict:
        bt = decode_index(b, self.base.dim, self.n)
        rest, mi = self._decode(m)
        slots = [self.base.table[rest[i]][bt[i + 1]] for i in range(self.n - 1)]
        return self._expand(slots, self.inner.right_basis(mi, bt[0]))


# -- group actions and crossed products ---------------------------------


class GroupAction:
    """A finite group of automorphisms of an algebra, with its
    multiplication table recovered by composing the matrices."""

    __slots__ = ("algebra", "elements", "table", "identity", "inverses")

    def __init__(self, algebra: FiniteDimAlgebra, elements, check: bool = True):
        self.algebra = algebra
        self.elements = [list(cols) for cols in elements]
        if check:
            for cols in self.elements:
                if not algebra.is_automorphism(cols):
                    raise ValueError("group element is not an algebra automorphism")
        order = len(self.elements)
        self.table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                comp = _compose(a, b)
                idx = self._find(comp)
                if idx is None:
                    raise ValueError("matrices are not closed under composition")
                row.append(idx)
            self.table.append(row)
        ident = [{i: ONE} for i in range(algebra.dim)]
        self.identity = self._find(ident)
        if self.identity is None:
            raise ValueError("identity matrix missing from the group")
        self.inverses = []
        for g in range(order):
            inv = next((h for h in range(order)
                        if self.table[g][h] == self.identity), None)
            if inv is None or self.table[inv][g] != self.identity:
                raise ValueError("group element has no inverse")
            self.inverses.append(inv)

    def _find(self, cols):
        for i, e in enumerate(self.elements):
            if e == cols:
                return i
        return None

    @classmethod
    def generate(cls, algebra: FiniteDimAlgebra, generators) -> "GroupAction":
        """Close a set of automorphism matrices under composition."""
        gens = [list(g) for g in generators]
        for g in gens:
            if not algebra.is_automorphism(g):
                raise ValueError("generator is not an algebra automorphism")
        ident = [{i: ONE} for i in range(algebra.dim)]
        elements = [ident]
        seen = {_columns_key(ident)}
        frontier = list(gens)
        while frontier:
            g = frontier.pop()
            key = _columns_key(g)
            if key in seen:
                continue
            seen.add(key)
            elements.append(g)
            if len(elements) > 1024:
                raise ValueError("group closure exceeds 1024 elements")
            frontier.extend(_compose(g, e) for e in elements)
            frontier.extend(_compose(e, g) for e in elements)
        return cls(algebra, elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def apply(self, g: int, vec: dict) -> dict:
        return _apply_columns(self.elements[g], vec)

    def conjugate(self, h: int, g: int) -> int:
        return self.table[self.table[h][g]][self.inverses[h]]

    def conjugacy_classes(self) -> list[list[int]]:
        seen = set()
        classes = []
        for g in range(self.order):
            if g in seen:
                continue
            orbit = sorted({self.conjugate(h, g) for h in range(self.order)})
            seen.update(orbit)
            classes.append(orbit)
        return classes

    def centralizer(self, g: int) -> list[int]:
        return [h for h in range(self.order)
                if self.table[h][g] == self.table[g][h]]


def crossed_product(action: GroupAction) -> FiniteDimAlgebra:
    """C[G] crossed with B: basis (g, b) standing for b*g, with
    (b g)(c h) = b g(c) gh."""
    B = action.algebra
    dim = B.dim
    table = []
    for g in range(action.order):
        for i in range(dim):
            row = []
            for h in range(action.order):
                gh = action.table[g][h]
                for j in range(dim):
                    prod = B.mul({i: ONE}, action.apply(g, {j: ONE}))
                    row.append({gh * dim + k: c for k, c in prod.items()})
            table.append(row)
    unit = {action.identity * dim + k: c for k, c in B.unit.items()}
    return FiniteDimAlgebra(table, unit, check=False)


# -- bar complex ---------------------------------------------------------


def _d_basis(B: FiniteDimAlgebra, M, key: tuple, k: int) -> dict:
    legs, mi = key[:k], key[k]
    out: dict = {}
    if k == 0:
        return out
    for m2, c in M.left_basis(legs[-1], mi).items():
        _chain_add(out, legs[:-1] + (m2,), c)
    for i in range(1, k):
        pos = k - i - 1
        sign = -ONE if i % 2 else ONE
        for bmid, c in B.mul_basis(legs[pos], legs[pos + 1]).items():
            _chain_add(out, legs[:pos] + (bmid,) + legs[pos + 2:] + (mi,), sign * c)
    sign = -ONE if k % 2 else ONE
    for m2, c in M.right_basis(mi, legs[0]).items():
        _chain_add(out, legs[1:] + (m2,), sign * c)
    return out


def _chain_add(chain: dict, key: tuple, c) -> None:
    cur = chain.get(key)
    if cur is None:
        if c:
            chain[key] = c
    else:
        cur = cur + c
        if cur:
            chain[key] = cur
        else:
            del chain[key]


def chain_keys(B: FiniteDimAlgebra, M, k: int):
    """Deterministic enumeration of the level-k basis keys."""
    for legs in itertools.product(range(B.dim), repeat=k):
        for mi in range(M.dim):
            yield legs + (mi,)


def bar_columns(B: FiniteDimAlgebra, M, k: int):
    """Yield (basis key, differential image) across the level-k basis."""
    if k < 1:
        raise ValueError("level must be >= 1")
    for key in chain_keys(B, M, k):
        yield key, _d_basis(B, M, key, k)


def bar_differential(B: FiniteDimAlgebra, M, k: int) -> dict:
    """The level-k differential as a sparse matrix {domain key: image}."""
    return dict(bar_columns(B, M, k))


def bar_apply(B: FiniteDimAlgebra, M, chain: dict, k: int) -> dict:
    """Differential applied to an arbitrary level-k chain."""
    out: dict = {}
    for key, c in chain.items():
        addmul_into(out, _d_basis(B, M, key, k), c)
    return out


def hh_dims(B: FiniteDimAlgebra, M, max_level: int,
            size_cap: int | None = None) -> list[int]:
    """Hochschild homology dimensions HH_0 .. HH_max_level of B with
    coefficients in M, by exact rank-nullity on the bar complex."""
    if max_level < 0:
        raise ValueError("max_level must be nonnegative")
    cap = _resolve_cap(size_cap)
    cdims = [B.dim ** k * M.dim for k in range(max_level + 2)]
    for k in range(1, max_level + 2):
        _check_cap(cdims[k], cdims[k - 1], cap, f"bar differential at level {k}")
    ranks = [0]
    for k in range(1, max_level + 2):
        ranks.append(rank_of(img for _, img in bar_columns(B, M, k)))
    return [cdims[k] - ranks[k] - ranks[k + 1] for k in range(max_level + 1)]


# -- the three structural checks -----------------------------------------


def verify_homolog_i(A: FiniteDimAlgebra, M=None, n: int = 2, sigma=None,
                     max_level: int = 2, size_cap: int | None = None) -> CheckReport:
    """Compare HH of A with coefficients in M against HH of the n-th
    tensor power with coefficients in the rotated bimodule.

    sigma defaults to the cyclic rotation (2,...,n,1); any other n-cycle
    works too but requires M to be the regular bimodule.  The two
    dimension lists must agree level by level.
    """
    inner = M if M is not None else RegularBimodule(A)
    lhs = hh_dims(A, inner, max_level, size_cap)
    B = tensor_power(A, n)
    if sigma is None:
        twisted = TwistedBimodule(A, n, inner)
    else:
        if M is not None:
            raise ValueError("custom sigma supports only the regular bimodule")
        perm = slot_permutation(A, n, sigma)
        twisted = AutoTwistedBimodule(B, [{p: ONE} for p in perm])
    rhs = hh_dims(B, twisted, max_level, size_cap)
    lines = tuple(
        f"level {i}: HH(A)={lhs[i]} HH(tensor power, twisted)={rhs[i]}"
        for i in range(max_level + 1)
    )
    return CheckReport(f"twisted-coefficient reduction n={n}", lhs == rhs, lines)


def _random_cycles(B, M, level: int, count: int, rng: random.Random):
    """Exact cycles at the given level with small integer coordinates.

    Level 0 chains are all cycles.  Above that, cycles are sampled two
    ways: boundaries of random chains one level up, and kernel vectors
    harvested from dependencies among the differential images of a
    random slice of the basis.
    """
    def random_chain(lv: int) -> dict:
        chain: dict = {}
        for _ in range(rng.randint(1, 4)):
            legs = tuple(rng.randrange(B.dim) for _ in range(lv))
            key = legs + (rng.randrange(M.dim),)
            _chain_add(chain, key, Fraction(rng.randint(-3, 3)))
        return chain

    if level == 0:
        return [random_chain(0) for _ in range(count)]
    keys = list(chain_keys(B, M, level))
    rng.shuffle(keys)
    slice_pairs = [(key, _d_basis(B, M, key, level)) for key in keys[:120]]
    harvested = kernel_combos(slice_pairs)
    out = []
    for t in range(count):
        if harvested and t % 3 == 0:
            combo = harvested[rng.randrange(len(harvested))]
            cycle = dict(combo)
        else:
            cycle = bar_apply(B, M, random_chain(level + 1), level + 1)
        out.append(cycle)
    return out


def homotopy_identity_check(A: FiniteDimAlgebra, n: int, m: int,
                            trials: int = 50, seed: int = 0) -> CheckReport:
    """Chain-level identity behind the rotation-invariance of homology.

    Viewing a level-(m-1) chain of the n-th tensor power as an n x m
    matrix of algebra elements (columns = legs then module slot), let s
    move the first column to the end with the rotation applied, and let
    the rotation act on chains column by column.  For every cycle C,

        C - rot(C) = d( sum_{j=0}^{m-1} (-1)^{j(m-1)} s^j(C) tensor 1 ).

    The check samples random exact cycles and evaluates both sides.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    B = tensor_power(A, n)
    rho = rotation_permutation(A, n)
    M = AutoTwistedBimodule(B, [{p: ONE} for p in rho])
    rng = random.Random(seed)
    unit_items = list(B.unit.items())

    def rotate(chain: dict) -> dict:
        return {tuple(rho[x] for x in key): c for key, c in chain.items()}

    def s_op(chain: dict) -> dict:
        out: dict = {}
        for key, c in chain.items():
            _chain_add(out, key[1:] + (rho[key[0]],), c)
        return out

    def append_unit(chain: dict) -> dict:
        out: dict = {}
        for key, c in chain.items():
            for u, uc in unit_items:
                _chain_add(out, key + (u,), c * uc)
        return out

    level = m - 1
    failures = 0
    checked = 0
    for cycle in _random_cycles(B, M, level, trials, rng):
        if level and bar_apply(B, M, cycle, level):
            raise AssertionError("sampled chain is not a cycle")
        lhs = dict(cycle)
        addmul_into(lhs, rotate(cycle), -ONE)
        arg: dict = {}
        sc = cycle
        for j in range(m):
            sign = -ONE if (j * (m - 1)) % 2 else ONE
            addmul_into(arg, append_unit(sc), sign)
            sc = s_op(sc)
        rhs = bar_apply(B, M, arg, m)
        checked += 1
        if lhs != rhs:
            failures += 1
    return CheckReport(
        f"rotation homotopy identity n={n} m={m}",
        failures == 0,
        (f"{checked - failures}/{checked} sampled cycles satisfy the identity",),
    )


def _sector_invariant_dims(B: FiniteDimAlgebra, G: GroupAction, g: int,
                           max_level: int, cap: int) -> list[int]:
    """dims of the centralizer-invariant part of HH_i(B, Bg), i <= max_level.

    Homology representatives come from a tracking echelon that absorbs
    the boundaries first; the group then acts on representatives, and the
    invariant dimension is the trace of the averaging projector.
    """
    M = AutoTwistedBimodule(B, G.elements[g])
    cent = G.centralizer(g)
    elems = [G.elements[h] for h in cent]
    dims = []
    for i in range(max_level + 1):
        _check_cap(B.dim ** (i + 1) * M.dim, B.dim ** i * M.dim, cap,
                   f"sector level {i + 1}")
        if i == 0:
            cycles = [{key: ONE} for key in chain_keys(B, M, 0)]
        else:
            cycles = kernel_combos(bar_columns(B, M, i))
        tracked = TrackingEchelon()
        for idx, (_, img) in enumerate(bar_columns(B, M, i + 1)):
            tracked.insert(img, ("b", idx))
        reps = []
        for ci, cyc in enumerate(cycles):
            if tracked.insert(cyc, ("z", ci)) is None:
                reps.append((ci, cyc))
        if not reps:
            dims.append(0)
            continue
        rep_index = {("z", ci): row for row, (ci, _) in enumerate(reps)}
        h_dim = len(reps)
        proj = [[Fraction(0)] * h_dim for _ in range(h_dim)]
        for cols in elems:
            for col, (_, cyc) in enumerate(reps):
                moved: dict = {}
                for key, c in cyc.items():
                    vecs = [cols[x] for x in key]
                    expanded = {(): c}
                    for vec in vecs:
                        expanded = {
                            kk + (x,): cc * v
                            for kk, cc in expanded.items()
                            for x, v in vec.items()
                        }
                    for kk, cc in expanded.items():
                        _chain_add(moved, kk, cc)
                residual, combo = tracked.express(moved)
                if residual:
                    raise AssertionError("group image of a cycle left the cycle space")
                for label, val in combo.items():
                    row = rep_index.get(label)
                    if row is not None:
                        proj[row][col] += val
        inv = Fraction(1, len(elems))
        proj = [[v * inv for v in row] for row in proj]
        # averaging operator must be idempotent; its trace is the rank
        square = [
            [sum(proj[r][k] * proj[k][c] for k in range(h_dim))
             for c in range(h_dim)]
            for r in range(h_dim)
        ]
        if square != proj:
            raise AssertionError("averaging operator is not idempotent")
        trace = sum(proj[r][r] for r in range(h_dim))
        if trace.denominator != 1:
            raise AssertionError("projector trace is not an integer")
        dims.append(int(trace))
    return dims


def afls_check(B: FiniteDimAlgebra, G: GroupAction, max_level: int = 2,
               size_cap: int | None = None) -> CheckReport:
    """Crossed-product homology against its conjugacy-class decomposition.

    Left side: HH of C[G] crossed with B, brute-forced.  Right side: for
    each conjugacy class, the centralizer-invariant part of the twisted
    sector HH_i(B, Bg) at a class representative; summing over classes
    must reproduce the left side level by level.
    """
    cap = _resolve_cap(size_cap)
    cross = crossed_product(G)
    lhs = hh_dims(cross, RegularBimodule(cross), max_level, cap)
    rhs = [0] * (max_level + 1)
    for cls in G.conjugacy_classes():
        rep = cls[0]
        sector = _sector_invariant_dims(B, G, rep, max_level, cap)
        for i in range(max_level + 1):
            rhs[i] += sector[i]
    lines = tuple(
        f"level {i}: crossed={lhs[i]} sector sum={rhs[i]}"
        for i in range(max_level + 1)
    )
    return CheckReport(f"crossed-product decomposition |G|={G.order}",
                       lhs == rhs, lines)
