"""Pattern-defined statistics on set partitions.

A pattern is a template (equivalence on [k], firsts, lasts, arcs,
consecutivity); a simple statistic sums a polynomial weight over all
occurrences of its pattern; a statistic is a rational linear combination
of simple statistics.  Products of statistics are again statistics via
pattern merges, which keeps the whole collection a filtered algebra.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .partitions import SetPartition, enumerate_partitions, iter_rgs


class StatisticError(ValueError):
    """Malformed pattern, weight polynomial, or DSL document."""


# ---------------------------------------------------------------------------
# weight polynomials
# ---------------------------------------------------------------------------

class WeightPolynomial:
    """Polynomial in y_1..y_k and m with rational coefficients.

    Monomials are keyed by (e_1, .., e_k, e_m); the mapping is kept in
    canonical sorted form so equal polynomials hash equal.
    """

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[tuple, Fraction]):
        self.k = k
        clean = {}
        for mono, c in terms.items():
            if len(mono) != k + 1 or any(e < 0 for e in mono):
                raise StatisticError("bad monomial %r for k=%d" % (mono, k))
            c = Fraction(c)
            if c:
                clean[tuple(mono)] = c
        self.terms = tuple(sorted(clean.items()))

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, k: int, c) -> "WeightPolynomial":
        return cls(k, {(0,) * (k + 1): Fraction(c)})

    @classmethod
    def variable(cls, k: int, i: int) -> "WeightPolynomial":
        """y_i (1-indexed)."""
        if not 1 <= i <= k:
            raise StatisticError("variable y%d out of range for k=%d" % (i, k))
        mono = [0] * (k + 1)
        mono[i - 1] = 1
        return cls(k, {tuple(mono): Fraction(1)})

    @classmethod
    def ground_size(cls, k: int) -> "WeightPolynomial":
        """The variable m (evaluates to n)."""
        mono = [0] * k + [1]
        return cls(k, {tuple(mono): Fraction(1)})

    # -- algebra ------------------------------------------------------------
    def __add__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        acc = dict(self.terms)
        for mono, c in other.terms:
            acc[mono] = acc.get(mono, Fraction(0)) + c
        return WeightPolynomial(self.k, acc)

    def __neg__(self) -> "WeightPolynomial":
        return WeightPolynomial(self.k, {m: -c for m, c in self.terms})

    def __sub__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        return self + (-other)

    def __mul__(self, other: "WeightPolynomial") -> "WeightPolynomial":
        acc: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc[mono] = acc.get(mono, Fraction(0)) + c1 * c2
        return WeightPolynomial(self.k, acc)

    def scaled(self, c) -> "WeightPolynomial":
        c = Fraction(c)
        return WeightPolynomial(self.k, {m: c * v for m, v in self.terms})

    def __pow__(self, e: int) -> "WeightPolynomial":
        if e < 0:
            raise StatisticError("negative exponent")
        out = WeightPolynomial.constant(self.k, 1)
        for _ in range(e):
            out = out * self
        return out

    def relabeled(self, positions: tuple, k_new: int) -> "WeightPolynomial":
        """Send y_i to y_{positions[i-1]} (positions 1-indexed into [k_new])."""
        acc: dict = {}
        for mono, c in self.terms:
            out = [0] * (k_new + 1)
            for i, e in enumerate(mono[: self.k]):
                out[positions[i] - 1] += e
            out[k_new] = mono[self.k]
            key = tuple(out)
            acc[key] = acc.get(key, Fraction(0)) + c
        return WeightPolynomial(k_new, acc)

    def evaluate(self, xs: tuple, n: int) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms:
            v = c
            for x, e in zip(xs, mono):
                if e:
                    v *= Fraction(x) ** e
            if mono[self.k]:
                v *= Fraction(n) ** mono[self.k]
            total += v
        return total

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, WeightPolynomial)
            and self.k == other.k
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.k, self.terms))

    def __repr__(self) -> str:
        return "WeightPolynomial(k=%d, %r)" % (self.k, dict(self.terms))


# ---------------------------------------------------------------------------
# patterns
# ---------------------------------------------------------------------------

def _canonical_rgs(labels: Iterable[int]) -> tuple:
    relabel: dict = {}
    out = []
    for v in labels:
        if v not in relabel:
            relabel[v] = len(relabel)
        out.append(relabel[v])
    return tuple(out)


@dataclass(frozen=True)
class Pattern:
    """(equivalence, firsts, lasts, arcs, consecutive) over positions 1..k.

    ``equiv`` is stored as a canonical RGS over positions; the four
    position sets are sorted tuples with 1-indexed entries.  A pattern
    whose constraints are unsatisfiable (e.g. nonconsecutive entries in
    ``consecutive``) is legal and simply has no occurrences.
    """

    k: int
    equiv: tuple
    firsts: tuple = ()
    lasts: tuple = ()
    arcs: tuple = ()
    consecutive: tuple = ()

    @classmethod
    def make(cls, k, equiv, firsts=(), lasts=(), arcs=(), consecutive=()) -> "Pattern":
        equiv = _canonical_rgs(equiv)
        if len(equiv) != k:
            raise StatisticError("equivalence must cover all %d positions" % k)

        def check_pos(i):
            if not 1 <= i <= k:
                raise StatisticError("position %r out of range 1..%d" % (i, k))
            return i

        firsts = tuple(sorted(check_pos(i) for i in set(firsts)))
        lasts = tuple(sorted(check_pos(i) for i in set(lasts)))
        arcs = tuple(sorted((check_pos(a), check_pos(b)) for a, b in set(map(tuple, arcs))))
        consecutive = tuple(
            sorted((check_pos(a), check_pos(b)) for a, b in set(map(tuple, consecutive)))
        )
        for a, b in arcs + consecutive:
            if a >= b:
                raise StatisticError("pair (%d,%d) must be strictly increasing" % (a, b))
        for a, b in arcs:
            if equiv[a - 1] != equiv[b - 1]:
                raise StatisticError("arc (%d,%d) joins inequivalent positions" % (a, b))
        return cls(k, equiv, firsts, lasts, arcs, consecutive)


def occurrences(p: Pattern, lam: SetPartition) -> list:
    """All increasing tuples of [n] positions realizing the pattern."""
    k, n = p.k, lam.n
    if k == 0:
        return [()]
    if k > n:
        return []
    cls = lam.rgs
    firsts = lam.firsts()
    lasts = lam.lasts()
    arcset = set(lam.arcs())

    in_f = [i + 1 in p.firsts for i in range(k)]
    in_l = [i + 1 in p.lasts for i in range(k)]
    # constraints touching position i with the partner already placed
    arcs_at = [[] for _ in range(k)]
    cons_at = [[] for _ in range(k)]
    for a, b in p.arcs:
        arcs_at[max(a, b) - 1].append((min(a, b) - 1, a < b))
    for a, b in p.consecutive:
        cons_at[max(a, b) - 1].append(min(a, b) - 1)

    equiv = p.equiv
    out = []
    x = [0] * k

    def place(i: int, start: int) -> None:
        for v in range(start, n - (k - 1 - i) + 1):
            if in_f[i] and v not in firsts:
                continue
            if in_l[i] and v not in lasts:
                continue
            ok = True
            ei = equiv[i]
            for j in range(i):
                if (cls[x[j] - 1] == cls[v - 1]) != (equiv[j] == ei):
                    ok = False
                    break
            if not ok:
                continue
            for j, forward in arcs_at[i]:
                pair = (x[j], v) if forward else (v, x[j])
                if pair not in arcset:
                    ok = False
                    break
            if ok:
                for j in cons_at[i]:
                    if v - x[j] != 1:
                        ok = False
                        break
            if not ok:
                continue
            x[i] = v
            if i + 1 == k:
                out.append(tuple(x))
            else:
                place(i + 1, v + 1)

    place(0, 1)
    return out


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleStatistic:
    pattern: Pattern
    q: WeightPolynomial

    def __post_init__(self):
        if self.q.k != self.pattern.k:
            raise StatisticError("weight polynomial arity != pattern length")

    def evaluate(self, lam: SetPartition) -> Fraction:
        total = Fraction(0)
        for s in occurrences(self.pattern, lam):
            total += self.q.evaluate(s, lam.n)
        return total

    def degree(self) -> int:
        return self.pattern.k + self.q.total_degree()


class Statistic:
    """A finite rational linear combination of simple statistics."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple]):
        acc: dict = {}
        for c, s in terms:
            c = Fraction(c)
            if c:
                acc[s] = acc.get(s, Fraction(0)) + c
        self.terms = tuple((c, s) for s, c in acc.items() if c)

    @classmethod
    def simple(cls, pattern: Pattern, q: WeightPolynomial) -> "Statistic":
        return cls([(Fraction(1), SimpleStatistic(pattern, q))])

    def evaluate(self, lam: SetPartition) -> Fraction:
        return sum((c * s.evaluate(lam) for c, s in self.terms), Fraction(0))

    def degree(self) -> int:
        return max((s.degree() for _, s in self.terms), default=0)

    def __add__(self, other: "Statistic") -> "Statistic":
        return Statistic(list(self.terms) + list(other.terms))

    def __sub__(self, other: "Statistic") -> "Statistic":
        return self + other.scaled(-1)

    def scaled(self, c) -> "Statistic":
        c = Fraction(c)
        return Statistic([(c * c0, s) for c0, s in self.terms])

    def __mul__(self, other: "Statistic") -> "Statistic":
        out = []
        for c1, s1 in self.terms:
            for c2, s2 in other.terms:
                out.extend(merge_product(s1, s2).scaled(c1 * c2).terms)
        return Statistic(out)

    def __repr__(self) -> str:
        return "Statistic(<%d terms, degree %d>)" % (len(self.terms), self.degree())


def evaluate(f: Statistic, lam: SetPartition) -> Fraction:
    return f.evaluate(lam)


def degree(f: Statistic) -> int:
    return f.degree()


def aggregate(f: Statistic, n: int) -> Fraction:
    """Exact sum of f over all partitions of [n]."""
    return sum((f.evaluate(lam) for lam in enumerate_partitions(n)), Fraction(0))


# ---------------------------------------------------------------------------
# merges: pointwise products of simple statistics
# ---------------------------------------------------------------------------

def merge_product(f1: SimpleStatistic, f2: SimpleStatistic) -> Statistic:
    """A statistic equal to the pointwise product f1 * f2 everywhere.

    Enumerates every merge of the two patterns onto a target of length
    max(k1,k2)..k1+k2: a pair of strictly increasing index maps whose
    images cover the target, together with every target equivalence
    whose pullbacks along the maps reproduce the source equivalences.
    Firsts/lasts/arcs/consecutivity of the target are the induced
    unions; weights multiply after variable relabeling.  Contradictory
    targets are kept (they contribute zero occurrences).
    """
    p1, p2 = f1.pattern, f2.pattern
    k1, k2 = p1.k, p2.k
    out = []
    for k3 in range(max(k1, k2), k1 + k2 + 1):
        for m1 in combinations(range(1, k3 + 1), k1):
            for m2 in combinations(range(1, k3 + 1), k2):
                if len(set(m1) | set(m2)) != k3:
                    continue
                for equiv in iter_rgs(k3):
                    if _canonical_rgs(equiv[i - 1] for i in m1) != p1.equiv:
                        continue
                    if _canonical_rgs(equiv[i - 1] for i in m2) != p2.equiv:
                        continue
                    firsts = {m1[i - 1] for i in p1.firsts} | {m2[i - 1] for i in p2.firsts}
                    lasts = {m1[i - 1] for i in p1.lasts} | {m2[i - 1] for i in p2.lasts}
                    arcs = {(m1[a - 1], m1[b - 1]) for a, b in p1.arcs} | {
                        (m2[a - 1], m2[b - 1]) for a, b in p2.arcs
                    }
                    cons = {(m1[a - 1], m1[b - 1]) for a, b in p1.consecutive} | {
                        (m2[a - 1], m2[b - 1]) for a, b in p2.consecutive
                    }
                    try:
                        p3 = Pattern.make(k3, equiv, firsts, lasts, arcs, cons)
                    except StatisticError:
                        # arc joining inequivalent target positions: such a
                        # merge target has no occurrences anywhere, skip
                        continue
                    q3 = f1.q.relabeled(m1, k3) * f2.q.relabeled(m2, k3)
                    out.append((Fraction(1), SimpleStatistic(p3, q3)))
    return Statistic(out)


# ---------------------------------------------------------------------------
# builtin statistics
# ---------------------------------------------------------------------------

def builtin(name: str, **params) -> Statistic:
    """Named statistics from the standard catalogue.

    blocks, blocks_choose(k), blocks_of_size(i), crossings_k(k),
    nestings, dimension, intertwining, levels, firsts_sum, lasts_sum.
    """
    if name == "blocks":
        p = Pattern.make(1, [0], firsts=[1])
        return Statistic.simple(p, WeightPolynomial.constant(1, 1))
    if name == "blocks_choose":
        k = _nat_param(params, "k", minimum=1)
        p = Pattern.make(k, range(k), firsts=range(1, k + 1))
        return Statistic.simple(p, WeightPolynomial.constant(k, 1))
    if name == "blocks_of_size":
        i = _nat_param(params, "i", minimum=1)
        p = Pattern.make(
            i, [0] * i, firsts=[1], lasts=[i], arcs=[(j, j + 1) for j in range(1, i)]
        )
        return Statistic.simple(p, WeightPolynomial.constant(i, 1))
    if name == "crossings_k":
        k = _nat_param(params, "k", minimum=1)
        equiv = list(range(k)) * 2
        p = Pattern.make(2 * k, equiv, arcs=[(t, k + t) for t in range(1, k + 1)])
        return Statistic.simple(p, WeightPolynomial.constant(2 * k, 1))
    if name == "intertwining":
        return builtin("crossings_k", k=2)
    if name == "nestings":
        p = Pattern.make(4, [0, 1, 1, 0], arcs=[(1, 4), (2, 3)])
        return Statistic.simple(p, WeightPolynomial.constant(4, 1))
    if name == "levels":
        p = Pattern.make(2, [0, 0], arcs=[(1, 2)], consecutive=[(1, 2)])
        return Statistic.simple(p, WeightPolynomial.constant(2, 1))
    if name == "firsts_sum":
        p = Pattern.make(1, [0], firsts=[1])
        return Statistic.simple(p, WeightPolynomial.variable(1, 1))
    if name == "lasts_sum":
        p = Pattern.make(1, [0], lasts=[1])
        return Statistic.simple(p, WeightPolynomial.variable(1, 1))
    if name == "dimension":
        ground = Statistic.simple(
            Pattern.make(0, []), WeightPolynomial.ground_size(0)
        )
        return (
            builtin("lasts_sum") - builtin("firsts_sum") + builtin("blocks") - ground
        )
    raise StatisticError("unknown builtin statistic %r" % name)


def _nat_param(params: dict, key: str, minimum: int = 0) -> int:
    if key not in params:
        raise StatisticError("builtin needs parameter %r" % key)
    v = int(params[key])
    if v < minimum:
        raise StatisticError("parameter %s=%d below minimum %d" % (key, v, minimum))
    return v


# ---------------------------------------------------------------------------
# pattern DSL
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(\d+|y\d+|m|\(|\)|\+|\-|\*|\^|/)")


def _parse_q(text: str, k: int) -> WeightPolynomial:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise StatisticError("bad character in weight expression: %r" % text[pos:])
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)  # sentinel
    idx = [0]

    def peek():
        return tokens[idx[0]]

    def take():
        t = tokens[idx[0]]
        idx[0] += 1
        return t

    def parse_expr():
        if peek() == "-":
            take()
            acc = parse_term().scaled(-1)
        else:
            acc = parse_term()
        while peek() in ("+", "-"):
            op = take()
            t = parse_term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def parse_term():
        acc = parse_factor()
        while peek() == "*":
            take()
            acc = acc * parse_factor()
        return acc

    def parse_factor():
        base = parse_atom()
        if peek() == "^":
            take()
            t = take()
            if t is None or not t.isdigit():
                raise StatisticError("exponent must be a natural number")
            base = base ** int(t)
        return base

    def parse_atom():
        t = take()
        if t == "(":
            inner = parse_expr()
            if take() != ")":
                raise StatisticError("unbalanced parentheses in weight expression")
            return inner
        if t == "-":
            return parse_factor().scaled(-1)
        if t is None:
            raise StatisticError("unexpected end of weight expression")
        if t.isdigit():
            num = int(t)
            if peek() == "/":
                take()
                den = take()
                if den is None or not den.isdigit() or int(den) == 0:
                    raise StatisticError("bad rational literal")
                return WeightPolynomial.constant(k, Fraction(num, int(den)))
            return WeightPolynomial.constant(k, num)
        if t == "m":
            return WeightPolynomial.ground_size(k)
        if t.startswith("y"):
            return WeightPolynomial.variable(k, int(t[1:]))
        raise StatisticError("unexpected token %r" % t)

    result = parse_expr()
    if peek() is not None:
        raise StatisticError("trailing tokens in weight expression")
    return result


def pattern_from_dict(doc: dict) -> Statistic:
    """Build a simple statistic from a DSL document (parsed JSON object)."""
    try:
        k = int(doc["length"])
    except (KeyError, TypeError, ValueError):
        raise StatisticError("pattern document needs an integer 'length'")
    blocks = doc.get("blocks")
    if blocks is None:
        raise StatisticError("pattern document needs 'blocks'")
    labels = [None] * k
    for bi, b in enumerate(blocks):
        for x in b:
            x = int(x)
            if not 1 <= x <= k or labels[x - 1] is not None:
                raise StatisticError("'blocks' must partition 1..%d" % k)
            labels[x - 1] = bi
    if any(v is None for v in labels):
        raise StatisticError("'blocks' must partition 1..%d" % k)
    p = Pattern.make(
        k,
        labels,
        firsts=[int(i) for i in doc.get("firsts", [])],
        lasts=[int(i) for i in doc.get("lasts", [])],
        arcs=[tuple(map(int, pr)) for pr in doc.get("arcs", [])],
        consecutive=[tuple(map(int, pr)) for pr in doc.get("consecutive", [])],
    )
    q = _parse_q(doc.get("q", "1"), k)
    return Statistic.simple(p, q)


def parse_pattern(text: str) -> Statistic:
    """Parse a pattern DSL document from JSON text."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise StatisticError("pattern document is not valid JSON: %s" % e)
    if not isinstance(doc, dict):
        raise StatisticError("pattern document must be a single object")
    return pattern_from_dict(doc)
