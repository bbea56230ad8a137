"""Sparse commutative polynomials over a prime field, with Buchberger's
algorithm, full normal forms and reduced Groebner bases.

Text grammar for a polynomial: signed sum of monomials, each monomial a
'*'-joined list of an optional integer coefficient and term factors, e.g.
``3*X1^2*X2 + 31999*X2^2 + 1``. Ideal files carry a header line
``ring n=<n> p=<p> order=<kind>`` followed by one polynomial per line;
``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import ParseError
from .field import inv_mod, validate_prime
from .terms import (
    Term,
    TermOrder,
    divides,
    lcm,
    parse_term,
    term_div,
    term_mul,
    term_to_text,
)


class Polynomial:
    """Immutable sparse polynomial: exponent tuple -> nonzero residue mod p."""

    __slots__ = ("n", "p", "_coeffs")

    def __init__(self, n: int, p: int, coeffs: Optional[dict] = None):
        self.n = n
        self.p = p
        clean: dict[Term, int] = {}
        if coeffs:
            for t, c in coeffs.items():
                t = tuple(t)
                if len(t) != n or any(e < 0 for e in t):
                    raise ValueError(f"term {t} does not live in {n} variables")
                c %= p
                if c:
                    clean[t] = c
        self._coeffs = clean

    @classmethod
    def zero(cls, n: int, p: int) -> "Polynomial":
        return cls(n, p)

    @classmethod
    def term(cls, t: Term, p: int, coeff: int = 1) -> "Polynomial":
        return cls(len(t), p, {tuple(t): coeff})

    @classmethod
    def constant(cls, n: int, p: int, c: int) -> "Polynomial":
        return cls(n, p, {(0,) * n: c})

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def support(self) -> set[Term]:
        return set(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, t: Term) -> int:
        return self._coeffs.get(tuple(t), 0)

    def term_count(self) -> int:
        return len(self._coeffs)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(t) for t in self._coeffs), default=-1)

    def _compatible(self, other: "Polynomial") -> None:
        if self.n != other.n or self.p != other.p:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            out[t] = out.get(t, 0) + c
        return Polynomial(self.n, self.p, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._compatible(other)
        out = dict(self._coeffs)
        for t, c in other._coeffs.items():
            out[t] = out.get(t, 0) - c
        return Polynomial(self.n, self.p, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, self.p, {t: -c for t, c in self._coeffs.items()})

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.n, self.p, {t: v * c for t, v in self._coeffs.items()})

    def multiply_term(self, coeff: int, t: Term) -> "Polynomial":
        t = tuple(t)
        return Polynomial(
            self.n, self.p, {term_mul(s, t): v * coeff for s, v in self._coeffs.items()}
        )

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._compatible(other)
        out: dict[Term, int] = {}
        for s, cs in self._coeffs.items():
            for t, ct in other._coeffs.items():
                u = term_mul(s, t)
                out[u] = out.get(u, 0) + cs * ct
        return Polynomial(self.n, self.p, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def leading_term(self, order: TermOrder) -> Term:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading term")
        return max(self._coeffs, key=order.key)

    def leading_coefficient(self, order: TermOrder) -> int:
        return self._coeffs[self.leading_term(order)]

    def leading_data(self, order: TermOrder) -> tuple[Term, int]:
        t = self.leading_term(order)
        return t, self._coeffs[t]

    def monic(self, order: TermOrder) -> "Polynomial":
        if not self._coeffs:
            raise ValueError("cannot normalize the zero polynomial")
        return self.scale(inv_mod(self.leading_coefficient(order), self.p))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.p, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r}, n={self.n}, p={self.p})"

    def to_text(self, order: Optional[TermOrder] = None) -> str:
        if not self._coeffs:
            return "0"
        order = order or TermOrder("deglex")
        pieces = []
        for t in sorted(self._coeffs, key=order.key, reverse=True):
            c = self._coeffs[t]
            if sum(t) == 0:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(term_to_text(t))
            else:
                pieces.append(f"{c}*{term_to_text(t)}")
        return " + ".join(pieces)


def parse_polynomial(text: str, n: int, p: int) -> Polynomial:
    body = text.strip()
    if not body:
        raise ParseError("empty polynomial")
    coeffs: dict[Term, int] = {}
    for chunk in body.replace("-", "+-").split("+"):
        mono = chunk.strip()
        if not mono:
            continue
        sign = 1
        if mono.startswith("-"):
            sign = -1
            mono = mono[1:].strip()
            if not mono:
                raise ParseError("dangling sign")
        coeff = sign
        exps = [0] * n
        for raw in mono.split("*"):
            factor = raw.strip()
            if re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
            else:
                t = parse_term(factor, n)
                for i, e in enumerate(t):
                    exps[i] += e
        t = tuple(exps)
        coeffs[t] = coeffs.get(t, 0) + coeff
    return Polynomial(n, p, coeffs)


@dataclass(frozen=True)
class GroebnerBasis:
    """A Groebner basis with its order; reduced means monic, minimal and
    with every tail term outside the leading-term ideal."""

    elements: tuple[Polynomial, ...]
    order: TermOrder
    reduced: bool = False

    def leading_terms(self) -> tuple[Term, ...]:
        return tuple(g.leading_term(self.order) for g in self.elements)

    @classmethod
    def verified(cls, elements: Iterable[Polynomial], order: TermOrder) -> "GroebnerBasis":
        elems = tuple(elements)
        if not is_groebner(list(elems), order):
            raise ValueError("pairwise S-polynomials do not all reduce to zero")
        return cls(elems, order)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """lc(g)^-1 (d/T(g)) g - lc(f)^-1 (d/T(f)) f with d = lcm of the leads."""
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial needs nonzero arguments")
    f._compatible(g)
    tf, cf = f.leading_data(order)
    tg, cg = g.leading_data(order)
    d = lcm(tf, tg)
    p = f.p
    return g.multiply_term(inv_mod(cg, p), term_div(d, tg)) - f.multiply_term(
        inv_mod(cf, p), term_div(d, tf)
    )


def normal_form(f: Polynomial, basis: Iterable[Polynomial], order: TermOrder) -> Polynomial:
    """Fully reduced remainder of f: no term of the result is divisible by
    any basis leading term, and the dropped part has a Groebner
    representation over the basis.

    Deterministic: the reducer with the smallest leading term wins, ties
    by list position; the largest remaining term is processed first.
    """
    reducers = []
    for idx, g in enumerate(basis):
        if g.is_zero():
            continue
        t, c = g.leading_data(order)
        reducers.append((order.key(t), idx, t, c, g))
    reducers.sort(key=lambda r: (r[0], r[1]))

    p = f.p
    work = dict(f._coeffs)
    out: dict[Term, int] = {}
    while work:
        t = max(work, key=order.key)
        c = work.pop(t)
        hit = None
        for _, _, lt, lc, g in reducers:
            if divides(lt, t):
                hit = (lt, lc, g)
                break
        if hit is None:
            out[t] = (out.get(t, 0) + c) % p
            continue
        lt, lc, g = hit
        q = term_div(t, lt)
        factor = (c * inv_mod(lc, p)) % p
        for s, cs in g._coeffs.items():
            if s == lt:
                continue
            u = term_mul(q, s)
            v = (work.get(u, 0) - factor * cs) % p
            if v:
                work[u] = v
            elif u in work:
                del work[u]
    return Polynomial(f.n, p, out)


def _select_pair(pairs, leads, order):
    def pair_key(ij):
        i, j = ij
        return (order.key(lcm(leads[i], leads[j])), i, j)

    return min(pairs, key=pair_key)


def buchberger(generators: Iterable[Polynomial], order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal of the generators.

    Normal pair selection (smallest lcm first); pairs with coprime leads
    are skipped, and the chain criterion drops a pair when a third lead
    divides its lcm and both companion pairs were already settled.
    """
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("cannot complete a basis from zero generators")
    n, p = gens[0].n, gens[0].p

    basis = [g.monic(order) for g in gens]
    leads = [g.leading_term(order) for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    settled: set[tuple[int, int]] = set()

    while pairs:
        i, j = _select_pair(pairs, leads, order)
        pairs.discard((i, j))
        ti, tj = leads[i], leads[j]
        big = lcm(ti, tj)
        if big == term_mul(ti, tj):
            settled.add((i, j))
            continue
        chained = any(
            k != i
            and k != j
            and divides(leads[k], big)
            and (min(i, k), max(i, k)) in settled
            and (min(j, k), max(j, k)) in settled
            for k in range(len(basis))
        )
        if chained:
            continue
        settled.add((i, j))
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            r = r.monic(order)
            k = len(basis)
            basis.append(r)
            leads.append(r.leading_term(order))
            pairs.update((i2, k) for i2 in range(k))

    # minimal basis: drop elements whose lead another lead divides
    minimal: list[Polynomial] = []
    for g in sorted(basis, key=lambda g: order.key(g.leading_term(order))):
        t = g.leading_term(order)
        if not any(divides(h.leading_term(order), t) for h in minimal):
            minimal.append(g)

    # interreduce tails until stable
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = minimal[:i] + minimal[i + 1 :]
            r = normal_form(minimal[i], others, order).monic(order)
            if r != minimal[i]:
                minimal[i] = r
                changed = True

    minimal.sort(key=lambda g: order.key(g.leading_term(order)))
    return GroebnerBasis(tuple(minimal), order, reduced=True)


def is_groebner(basis: list[Polynomial], order: TermOrder) -> bool:
    """True iff every pairwise S-polynomial reduces to zero over the set."""
    elems = [g for g in basis if not g.is_zero()]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = s_polynomial(elems[i], elems[j], order)
            if not normal_form(s, elems, order).is_zero():
                return False
    return True


def gb_degree(basis: GroebnerBasis) -> int:
    """Largest total degree of a basis element (requires a reduced basis)."""
    if not basis.reduced:
        raise ValueError("degree bound is defined on the reduced basis")
    return max(g.degree() for g in basis.elements)


def lead_degree(basis: GroebnerBasis) -> int:
    """Largest total degree of a leading term; equals gb_degree for
    degree-compatible orders, can be smaller for lex."""
    return max(sum(t) for t in basis.leading_terms())


_RING_HEADER = re.compile(r"^ring\s+n=(\d+)\s+p=(\d+)\s+order=(\w+)\s*$")


def render_ideal_file(
    polys: Iterable[Polynomial], order: TermOrder, n: int, p: int
) -> str:
    lines = [f"ring n={n} p={p} order={order.kind}"]
    lines.extend(f.to_text(order) for f in polys)
    return "\n".join(lines) + "\n"


def parse_ideal_file(text: str):
    """-> (n, p, order, polynomials). Blank lines and # comments allowed."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty ideal file")
    m = _RING_HEADER.match(lines[0])
    if not m:
        raise ParseError(f"bad ring header: {lines[0]!r}")
    n, p, kind = int(m.group(1)), int(m.group(2)), m.group(3)
    try:
        validate_prime(p)
        order = TermOrder(kind)
    except ValueError as e:
        raise ParseError(str(e)) from None
    polys = [parse_polynomial(ln, n, p) for ln in lines[1:]]
    return n, p, order, polys
