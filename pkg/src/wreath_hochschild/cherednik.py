"""Normal-ordering engine for the type A rational Cherednik algebra.

The algebra on n sites is generated by a commuting family x_1..x_n, a
commuting family p_1..p_n, and the symmetric group S_n, subject to

    sigma x_i = x_{sigma(i)} sigma,        sigma p_i = p_{sigma(i)} sigma,
    x_i p_j - p_j x_i = k s_ij             (i != j),
    x_i p_i - p_i x_i = 1 - sum_{j != i} k s_ij,

where s_ij transposes i and j and k is a formal parameter.  Commutators
mean [a, b] = a b - b a; every rewriting rule below is derived from that
sign convention.  Elements are stored in the fixed normal order
x-monomial, then group element, then p-monomial, with coefficients that
are polynomials in k over the rationals (dense tuples of Fractions), so
flatness statements are checked over the polynomial ring rather than at
a numeric k.  Setting k = 0 recovers the crossed product of S_n with n
commuting Weyl pairs; crossed_weyl_normal_order implements that algebra
directly, without the rewriting engine, and serves as an oracle for the
k -> 0 specialization of every normal form.
"""

import random
import re
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import NamedTuple

from .presets_io import CheckReport

KP_ZERO = ()
KP_ONE = (Fraction(1),)
KP_K = (Fraction(0), Fraction(1))


def _kp(value) -> tuple:
    """Coerce an int, Fraction, or coefficient tuple into a trimmed k-polynomial."""
    coeffs = [Fraction(v) for v in value] if isinstance(value, tuple) else [Fraction(value)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _kp_add(a: tuple, b: tuple) -> tuple:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _kp_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return KP_ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _kp_eval(a: tuple, value: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * value + c
    return acc


def _identity(n: int) -> tuple:
    return tuple(range(n))


def _compose(sigma: tuple, tau: tuple) -> tuple:
    # group product: (sigma tau)(i) = sigma(tau(i))
    return tuple(sigma[t] for t in tau)


def _inverse(sigma: tuple) -> tuple:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v] = i
    return tuple(inv)


def _transposition(n: int, i: int, j: int) -> tuple:
    one = list(range(n))
    one[i], one[j] = one[j], one[i]
    return tuple(one)


class NormalMonomial(NamedTuple):
    """A basis monomial x^a sigma p^b in the fixed normal order.

    xexp and pexp are n-tuples of nonnegative exponents; perm is the
    one-line form of sigma, zero-indexed (perm[i] is the image of i).
    """

    xexp: tuple
    perm: tuple
    pexp: tuple

    def degree(self) -> int:
        return sum(self.xexp) + sum(self.pexp)


# ---------------------------------------------------------------------------
# words and rewriting


_TOKEN = re.compile(r"^([xp])([1-9])$|^s([1-9])([1-9])$")


def _tokenize(text: str) -> list:
    atoms = []
    for tok in text.replace("*", " ").split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"cannot parse generator {tok!r}")
        if m.group(1):
            atoms.append((m.group(1), int(m.group(2))))
        else:
            atoms.append(("s", int(m.group(3)), int(m.group(4))))
    return atoms


def _parse_atoms(word, n: int) -> tuple:
    """Convert public generators (1-indexed) to internal atoms (0-indexed).

    Accepted letters: ("x", i), ("p", i), the transposition ("s", i, j),
    a full permutation ("perm", one_line) in 1-based one-line notation,
    or a whitespace-separated string of tokens like "p1 x1 s12".
    """
    if isinstance(word, str):
        word = _tokenize(word)
    atoms = []
    for g in word:
        kind = g[0]
        if kind in ("x", "p"):
            if len(g) != 2 or not 1 <= g[1] <= n:
                raise ValueError("generator index out of range")
            atoms.append((kind, g[1] - 1))
        elif kind == "s":
            if len(g) != 3 or not (1 <= g[1] <= n and 1 <= g[2] <= n) or g[1] == g[2]:
                raise ValueError("generator index out of range")
            atoms.append(("s", _transposition(n, g[1] - 1, g[2] - 1)))
        elif kind == "perm":
            one = tuple(g[1])
            if sorted(one) != list(range(1, n + 1)):
                raise ValueError("not a permutation in one-line notation")
            atoms.append(("s", tuple(v - 1 for v in one)))
        else:
            raise ValueError(f"unknown generator {g!r}")
    return tuple(atoms)


def _is_redex(u, v) -> bool:
    a, b = u[0], v[0]
    if a == "p" and b in ("x", "s"):
        return True
    if a == "s" and b in ("x", "s"):
        return True
    # out-of-order pair inside a commuting block
    return a == b and a != "s" and u[1] > v[1]


def _find_redex(word, rightmost: bool):
    spots = range(len(word) - 2, -1, -1) if rightmost else range(len(word) - 1)
    for t in spots:
        if _is_redex(word[t], word[t + 1]):
            return t
    return None


def _rewrite(word, t: int, n: int) -> list:
    """Expand the single relation at position t into a list of (word, coeff)."""
    u, v = word[t], word[t + 1]
    pre, post = word[:t], word[t + 2:]
    a, b = u[0], v[0]
    if a == "p" and b == "x":
        i, j = u[1], v[1]
        out = [(pre + (v, u) + post, KP_ONE)]
        if i == j:
            # p_i x_i = x_i p_i - 1 + sum_{l != i} k s_il
            out.append((pre + post, _kp(-1)))
            for l in range(n):
                if l != i:
                    out.append((pre + (("s", _transposition(n, i, l)),) + post, KP_K))
        else:
            # p_i x_j = x_j p_i - k s_ij
            out.append((pre + (("s", _transposition(n, i, j)),) + post, tuple(-c for c in KP_K)))
        return out
    if a == "p" and b == "s":
        # p_i sigma = sigma p_{sigma^{-1}(i)}
        return [(pre + (v, ("p", _inverse(v[1])[u[1]])) + post, KP_ONE)]
    if a == "s" and b == "x":
        # sigma x_i = x_{sigma(i)} sigma
        return [(pre + (("x", u[1][v[1]]), u) + post, KP_ONE)]
    if a == "s" and b == "s":
        return [(pre + (("s", _compose(u[1], v[1])),) + post, KP_ONE)]
    return [(pre + (v, u) + post, KP_ONE)]


def _monomial_of(word, n: int) -> NormalMonomial:
    # assumes the word is redex-free: x block, at most one s, p block
    xexp, pexp = [0] * n, [0] * n
    perm = _identity(n)
    for atom in word:
        if atom[0] == "x":
            xexp[atom[1]] += 1
        elif atom[0] == "p":
            pexp[atom[1]] += 1
        else:
            perm = atom[1]
    return NormalMonomial(tuple(xexp), perm, tuple(pexp))


def _monomial_word(mono: NormalMonomial, n: int) -> tuple:
    word = []
    for i, e in enumerate(mono.xexp):
        word.extend([("x", i)] * e)
    if mono.perm != _identity(n):
        word.append(("s", mono.perm))
    for i, e in enumerate(mono.pexp):
        word.extend([("p", i)] * e)
    return tuple(word)


def _reduce_words(pending: dict, n: int, rightmost: bool) -> dict:
    """Rewrite a k-polynomial combination of words into normal monomials."""
    out = {}
    work = dict(pending)
    while work:
        word, coeff = work.popitem()
        if not coeff:
            continue
        t = _find_redex(word, rightmost)
        if t is None:
            mono = _monomial_of(word, n)
            acc = _kp_add(out.get(mono, KP_ZERO), coeff)
            if acc:
                out[mono] = acc
            elif mono in out:
                del out[mono]
            continue
        for nxt, c in _rewrite(word, t, n):
            acc = _kp_add(work.get(nxt, KP_ZERO), _kp_mul(coeff, c))
            if acc:
                work[nxt] = acc
            elif nxt in work:
                del work[nxt]
    return out


# ---------------------------------------------------------------------------
# elements


class CherednikElement:
    """Finitely supported combination of normal monomials over Q[k]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        self.n = n
        clean: dict = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if (
                len(mono.xexp) != n
                or len(mono.pexp) != n
                or sorted(mono.perm) != list(range(n))
                or min(mono.xexp + mono.pexp, default=0) < 0
            ):
                raise ValueError(f"bad monomial {mono!r}")
            acc = _kp_add(clean.get(mono, KP_ZERO), _kp(coeff))
            if acc:
                clean[mono] = acc
            elif mono in clean:
                del clean[mono]
        self.terms = clean

    @classmethod
    def zero(cls, n: int) -> "CherednikElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "CherednikElement":
        zero = (0,) * n
        return cls(n, {NormalMonomial(zero, _identity(n), zero): KP_ONE})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, CherednikElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, CherednikElement) or other.n != self.n:
            return NotImplemented
        merged = list(self.terms.items()) + list(other.terms.items())
        return CherednikElement(self.n, merged)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, CherednikElement) or other.n != self.n:
            return NotImplemented
        return self + (-other)

    def scale(self, coeff) -> "CherednikElement":
        c = _kp(coeff)
        return CherednikElement(
            self.n, [(m, _kp_mul(v, c)) for m, v in self.terms.items()]
        )

    def __mul__(self, other):
        if isinstance(other, CherednikElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def specialize(self, value=0) -> dict:
        """Evaluate every coefficient at a numeric k; drops vanished terms."""
        value = Fraction(value)
        out = {}
        for mono, c in self.terms.items():
            v = _kp_eval(c, value)
            if v:
                out[mono] = v
        return out

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<CherednikElement n={self.n}: {self}>"


def normal_order(word, n: int, strategy: str = "leftmost") -> CherednikElement:
    """Reduce a generator word to its normal form x^a sigma p^b.

    The result is independent of the reduction strategy; "leftmost" and
    "rightmost" pick which redex is expanded first and exist so that
    confluence_check can compare them.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    atoms = _parse_atoms(word, n)
    return CherednikElement(n, _reduce_words({atoms: KP_ONE}, n, strategy == "rightmost"))


def multiply(a: CherednikElement, b: CherednikElement) -> CherednikElement:
    """Normal-ordered product, extended bilinearly over Q[k]."""
    if not isinstance(a, CherednikElement) or not isinstance(b, CherednikElement):
        raise TypeError("multiply expects two CherednikElement operands")
    if a.n != b.n:
        raise ValueError("rank mismatch")
    n = a.n
    pairs = []
    for m1, c1 in a.terms.items():
        w1 = _monomial_word(m1, n)
        for m2, c2 in b.terms.items():
            c = _kp_mul(c1, c2)
            for mono, red in _junction_product(n, w1 + _monomial_word(m2, n)):
                pairs.append((mono, _kp_mul(c, red)))
    return CherednikElement(n, pairs)


_PRODUCT_CACHE: dict = {}


def _junction_product(n: int, word: tuple) -> tuple:
    hit = _PRODUCT_CACHE.get((n, word))
    if hit is None:
        hit = tuple(_reduce_words({word: KP_ONE}, n, False).items())
        _PRODUCT_CACHE[(n, word)] = hit
    return hit


# ---------------------------------------------------------------------------
# k = 0 oracle: the crossed product of S_n with n commuting Weyl pairs


def crossed_weyl_normal_order(word, n: int) -> dict:
    """Normal form of a word at k = 0, computed without the rewriting engine.

    Right-multiplies an accumulating normal form atom by atom:
    appending x_i uses p^b x_i = x_i p^b - b_i p^{b - e_i} followed by
    sigma x_i = x_{sigma(i)} sigma, appending a permutation tau moves it
    through p^b by permuting exponents.  Returns monomial -> Fraction.
    """
    atoms = _parse_atoms(word, n)
    zero = (0,) * n
    terms = {NormalMonomial(zero, _identity(n), zero): Fraction(1)}
    for atom in atoms:
        nxt: dict = {}

        def bump(mono, c):
            acc = nxt.get(mono, Fraction(0)) + c
            if acc:
                nxt[mono] = acc
            elif mono in nxt:
                del nxt[mono]

        for (a, sigma, b), c in terms.items():
            if atom[0] == "x":
                i = atom[1]
                up = list(a)
                up[sigma[i]] += 1
                bump(NormalMonomial(tuple(up), sigma, b), c)
                if b[i]:
                    down = list(b)
                    down[i] -= 1
                    bump(NormalMonomial(a, sigma, tuple(down)), -c * b[i])
            elif atom[0] == "p":
                up = list(b)
                up[atom[1]] += 1
                bump(NormalMonomial(a, sigma, tuple(up)), c)
            else:
                tau = atom[1]
                moved = tuple(b[tau[j]] for j in range(n))
                bump(NormalMonomial(a, _compose(sigma, tau), moved), c)
        terms = nxt
    return terms


# ---------------------------------------------------------------------------
# spherical subalgebra


def spherical_idempotent(n: int) -> CherednikElement:
    """The symmetrizer e = (1/n!) sum of all group elements."""
    zero = (0,) * n
    c = Fraction(1, factorial(n))
    return CherednikElement(
        n,
        {NormalMonomial(zero, tuple(sig), zero): (c,) for sig in permutations(range(n))},
    )


def spherical_product(a: CherednikElement) -> CherednikElement:
    """Compress an element to the spherical subalgebra: e a e."""
    e = spherical_idempotent(a.n)
    return multiply(multiply(e, a), e)


# ---------------------------------------------------------------------------
# verification suites


def _word_alphabet(n: int) -> list:
    atoms = [("x", i) for i in range(1, n + 1)]
    atoms += [("p", i) for i in range(1, n + 1)]
    atoms += [("s", i, j) for i, j in combinations(range(1, n + 1), 2)]
    return atoms


def _word_label(word) -> str:
    return " ".join(
        f"{g[0]}{g[1]}" if g[0] in ("x", "p") else f"s{g[1]}{g[2]}" for g in word
    )


def _all_words(n: int, max_len: int):
    for length in range(max_len + 1):
        yield from product(_word_alphabet(n), repeat=length)


def confluence_check(n: int, max_deg: int) -> CheckReport:
    """Reduce every word of length <= max_deg under both strategies.

    Also compares the k = 0 specialization of every normal form with the
    independent crossed-product engine.
    """
    total = 0
    divergent = mismatch = None
    for word in _all_words(n, max_deg):
        total += 1
        left = normal_order(word, n, "leftmost")
        if left != normal_order(word, n, "rightmost"):
            divergent = word
            break
        if left.specialize(0) != crossed_weyl_normal_order(word, n):
            mismatch = word
            break
    lines = []
    if divergent is not None:
        lines.append(f"[FAIL] strategies diverge on word {_word_label(divergent)}")
    elif mismatch is not None:
        lines.append(
            f"[FAIL] k = 0 normal form of {_word_label(mismatch)} disagrees with the crossed product"
        )
    else:
        lines.append(
            f"[pass] {total} words of length <= {max_deg} reduce identically "
            "under leftmost and rightmost strategies"
        )
        lines.append("[pass] k = 0 specializations match the crossed-product engine")
    return CheckReport(
        f"cherednik confluence n={n}", divergent is None and mismatch is None, tuple(lines)
    )


def _all_monomials(n: int, max_deg: int) -> list:
    exps = [v for v in product(range(max_deg + 1), repeat=n) if sum(v) <= max_deg]
    out = []
    for sig in permutations(range(n)):
        for a in exps:
            for b in exps:
                if sum(a) + sum(b) <= max_deg:
                    out.append(NormalMonomial(a, tuple(sig), b))
    return out


def normal_monomial_count(n: int, max_deg: int) -> int:
    """Number of normal monomials of (x, p)-degree <= max_deg."""
    return len(_all_monomials(n, max_deg))


def pbw_dimension_check(n: int, max_deg: int) -> CheckReport:
    """Flatness certificate: normal monomial count and degree filtration.

    Counts the normal monomials of degree <= max_deg against the
    undeformed dimension n! * C(2n + D, D), then reduces every word of
    length <= max_deg and checks that its terms stay within the degree
    filtration with a k-free top part (so the associated graded algebra
    is the k = 0 crossed product on the same monomial basis).
    """
    lines = []
    ok = True

    def record(flag: bool, text: str):
        nonlocal ok
        ok = ok and flag
        lines.append(("[pass] " if flag else "[FAIL] ") + text)

    expected = factorial(n) * comb(2 * n + max_deg, max_deg)
    count = normal_monomial_count(n, max_deg)
    record(
        count == expected,
        f"{count} normal monomials of degree <= {max_deg} "
        f"(undeformed dimension n!*C(2n+D,D) = {expected})",
    )
    filtered = graded = True
    for word in _all_words(n, max_deg):
        xp_len = sum(1 for g in word if g[0] in ("x", "p"))
        for mono, c in normal_order(word, n).terms.items():
            if mono.degree() > xp_len:
                filtered = False
            elif mono.degree() == xp_len and len(c) > 1:
                graded = False
    record(
        filtered,
        "every reduced word lies in the span of normal monomials of degree "
        "<= its x,p-length",
    )
    record(graded, "top-degree parts carry no k (associated graded is the crossed product)")
    return CheckReport(f"cherednik pbw flatness n={n}", ok, tuple(lines))


def associativity_check(n: int, trials: int = 100, seed: int = 0) -> CheckReport:
    """Exact associativity of multiply on random low-degree elements."""
    rng = random.Random(seed)
    monos = _all_monomials(n, 2)

    def rand_elem():
        picks = rng.sample(monos, rng.randint(1, 2))
        return CherednikElement(
            n,
            [(m, (Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-1, 1)))) for m in picks],
        )

    bad = None
    for _ in range(trials):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        if multiply(multiply(a, b), c) != multiply(a, multiply(b, c)):
            bad = (a, b, c)
            break
    if bad is None:
        lines = (
            f"[pass] {trials} random triples of degree <= 2 elements "
            "associate exactly over Q[k]",
        )
    else:
        lines = (f"[FAIL] associativity fails for {bad[0]!r}, {bad[1]!r}, {bad[2]!r}",)
    return CheckReport(f"cherednik associativity n={n}", bad is None, lines)


def spherical_check(n: int) -> CheckReport:
    """Symmetrizer identities: e^2 = e, sigma e = e sigma = e, bi-invariance."""
    lines = []
    ok = True

    def record(flag: bool, text: str):
        nonlocal ok
        ok = ok and flag
        lines.append(("[pass] " if flag else "[FAIL] ") + text)

    e = spherical_idempotent(n)
    zero = (0,) * n
    group = [
        CherednikElement(n, {NormalMonomial(zero, tuple(sig), zero): KP_ONE})
        for sig in permutations(range(n))
    ]
    record(multiply(e, e) == e, "e is idempotent")
    record(
        all(multiply(g, e) == e and multiply(e, g) == e for g in group),
        "sigma e = e sigma = e for every group element",
    )
    record(spherical_product(CherednikElement.one(n)) == e, "e 1 e = e")
    compressed = spherical_product(normal_order("x1 p1", n))
    record(
        all(multiply(g, compressed) == compressed == multiply(compressed, g) for g in group),
        "e x1 p1 e is bi-invariant under the group",
    )
    return CheckReport(f"cherednik spherical n={n}", ok, tuple(lines))


# ---------------------------------------------------------------------------
# formatting


def _cycles(perm: tuple) -> list:
    seen = [False] * len(perm)
    cycles = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        cycles.append(cyc)
    return cycles


def _fmt_perm(perm: tuple) -> str:
    cycles = _cycles(perm)
    if not cycles:
        return ""
    if len(cycles) == 1 and len(cycles[0]) == 2:
        i, j = sorted(cycles[0])
        return f"s{i + 1}{j + 1}"
    return "".join("(" + " ".join(str(v + 1) for v in cyc) + ")" for cyc in cycles)


def _fmt_vars(letter: str, exps: tuple) -> list:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(f"{letter}{i + 1}")
        elif e > 1:
            parts.append(f"{letter}{i + 1}^{e}")
    return parts


def _fmt_monomial(mono: NormalMonomial) -> str:
    parts = _fmt_vars("x", mono.xexp)
    ps = _fmt_perm(mono.perm)
    if ps:
        parts.append(ps)
    parts.extend(_fmt_vars("p", mono.pexp))
    return " ".join(parts)


def _fmt_coeff(q: Fraction, j: int, has_mono: bool) -> list:
    mag = -q if q < 0 else q
    parts = []
    if mag != 1 or (j == 0 and not has_mono):
        parts.append(str(mag))
    if j == 1:
        parts.append("k")
    elif j >= 2:
        parts.append(f"k^{j}")
    return parts


def _join_signed(chunks: list) -> str:
    out = []
    for idx, (sign, body) in enumerate(chunks):
        if idx == 0:
            out.append(f"-{body}" if sign == "-" else body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def _display_key(mono: NormalMonomial):
    # degree-descending, then x-exponents, permutation, p-exponents
    return (
        -mono.degree(),
        tuple(-e for e in mono.xexp),
        mono.perm,
        tuple(-e for e in mono.pexp),
    )


def format_element(elem: CherednikElement) -> str:
    """Human-readable normal form, e.g. "x1 p1 - 1 + k s12"."""
    if not elem.terms:
        return "0"
    chunks = []
    for mono in sorted(elem.terms, key=_display_key):
        coeff = elem.terms[mono]
        ms = _fmt_monomial(mono)
        live = [(j, q) for j, q in enumerate(coeff) if q]
        if len(live) == 1:
            j, q = live[0]
            parts = _fmt_coeff(q, j, bool(ms))
            if ms:
                parts.append(ms)
            chunks.append(("-" if q < 0 else "+", " ".join(parts)))
        else:
            inner = [("-" if q < 0 else "+", " ".join(_fmt_coeff(q, j, False))) for j, q in live]
            body = f"({_join_signed(inner)})"
            chunks.append(("+", f"{body} {ms}" if ms else body))
    return _join_signed(chunks)
