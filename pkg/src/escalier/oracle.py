"""The canonical-form oracle: a sealed holder of a hidden basis and order
that answers Can(t) while counting queries.

The hidden state is kept in name-mangled attributes and is never exposed
through the query surface; reconstruction code is written against the
member_T / can_term / can_poly / queries interface only. One oracle
instance belongs to one session at a time (the ledger mutates); distinct
instances are independent.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Union

from .errors import ParseError
from .field import validate_prime
from .nc_polynomials import NcPolynomial, nc_normal_form, overlap_check
from .polynomials import GroebnerBasis, Polynomial, buchberger, normal_form
from .terms import TermOrder, divides, parse_term
from .words import WordOrder, is_factor, parse_word


class CanOracle:
    """Answers canonical forms for a hidden ideal and term order.

    Answers depend only on the ideal and the order, never on the
    presentation: commutative generator lists are completed to the
    reduced basis on construction, and free-algebra bases must pass the
    overlap confluence check.
    """

    def __init__(self):
        raise TypeError("use CanOracle.commutative or CanOracle.noncommutative")

    # --- construction -------------------------------------------------

    @classmethod
    def _build(cls, kind, elements, order, leads, n, p, memo):
        self = object.__new__(cls)
        self.__kind = kind
        self.__elements = tuple(elements)
        self.__order = order
        self.__leads = tuple(leads)
        self.__n = n
        self.__p = p
        self.__memo_on = memo
        self.__memo = {}
        self.__count = 0
        self.__log = []
        return self

    @classmethod
    def commutative(
        cls,
        generators: Union[GroebnerBasis, Iterable[Polynomial]],
        order: Optional[TermOrder] = None,
        *,
        n: Optional[int] = None,
        p: Optional[int] = None,
        memo: bool = False,
    ) -> "CanOracle":
        """Oracle for the ideal of the generators; an empty generator list
        (with explicit n and p) gives the zero ideal."""
        if isinstance(generators, GroebnerBasis):
            basis = generators
            if not basis.reduced:
                basis = buchberger(list(basis.elements), basis.order)
            order = basis.order
            elems = list(basis.elements)
        else:
            gens = [g for g in generators if not g.is_zero()]
            order = order or TermOrder("deglex")
            if gens:
                elems = list(buchberger(gens, order).elements)
            else:
                elems = []
        if elems:
            n, p = elems[0].n, elems[0].p
        if n is None or p is None:
            raise ValueError("zero ideal oracle needs explicit n and p")
        validate_prime(p)
        leads = [g.leading_term(order) for g in elems]
        return cls._build("comm", elems, order, leads, n, p, memo)

    @classmethod
    def noncommutative(
        cls,
        basis: Iterable[NcPolynomial],
        order: Optional[WordOrder] = None,
        *,
        ambiguity_bound: Optional[int] = None,
        memo: bool = False,
    ) -> "CanOracle":
        """Oracle backed by a finite free-algebra basis; the basis must
        pass overlap_check so canonical forms are well defined."""
        order = order or WordOrder()
        elems = [g for g in basis if not g.is_zero()]
        if not elems:
            raise ValueError("free-algebra oracle needs a nonempty basis")
        elems = [g.monic(order) for g in elems]
        if not overlap_check(elems, order, ambiguity_bound):
            raise ValueError("basis fails the overlap confluence check")
        n, p = elems[0].n, elems[0].p
        leads = [g.leading_word(order) for g in elems]
        return cls._build("nc", elems, order, leads, n, p, memo)

    def fresh_copy(self) -> "CanOracle":
        """Same sealed ideal and order, ledger reset to zero."""
        return CanOracle._build(
            self.__kind,
            self.__elements,
            self.__order,
            self.__leads,
            self.__n,
            self.__p,
            self.__memo_on,
        )

    # --- public ring data ----------------------------------------------

    @property
    def n(self) -> int:
        return self.__n

    @property
    def p(self) -> int:
        return self.__p

    @property
    def is_commutative(self) -> bool:
        return self.__kind == "comm"

    @property
    def queries(self) -> int:
        return self.__count

    @property
    def query_log(self) -> tuple:
        return tuple(self.__log)

    # --- queries --------------------------------------------------------

    def _check_term(self, t) -> tuple:
        t = tuple(t)
        if self.__kind == "comm":
            if len(t) != self.__n or any(e < 0 for e in t):
                raise ValueError(f"term {t} is not in the oracle's ring")
        else:
            if any(not 1 <= x <= self.__n for x in t):
                raise ValueError(f"word {t} is not in the oracle's algebra")
        return t

    def _term_poly(self, t):
        if self.__kind == "comm":
            return Polynomial.term(t, self.__p)
        return NcPolynomial.term(t, self.__n, self.__p)

    def _tick(self, t) -> bool:
        """Ledger bump; False when a memoized answer should be served free."""
        if self.__memo_on and t in self.__memo:
            return False
        self.__count += 1
        self.__log.append(t)
        return True

    def can_term(self, t):
        """Canonical form of a single term; one ledger query."""
        t = self._check_term(t)
        if not self._tick(t):
            return self.__memo[t]
        if self.__kind == "comm":
            res = normal_form(self._term_poly(t), self.__elements, self.__order)
        else:
            res = nc_normal_form(self._term_poly(t), self.__elements, self.__order)
        if self.__memo_on:
            self.__memo[t] = res
        return res

    def member_T(self, t) -> bool:
        """True iff t lies in the hidden leading-term ideal; one query."""
        t = self._check_term(t)
        if not self._tick(t):
            return self.__memo[t] != self._term_poly(t)
        if self.__kind == "comm":
            hit = any(divides(lt, t) for lt in self.__leads)
        else:
            hit = any(is_factor(lw, t) for lw in self.__leads)
        if self.__memo_on:
            # keep the memo uniform: store the canonical form
            if self.__kind == "comm":
                self.__memo[t] = normal_form(
                    self._term_poly(t), self.__elements, self.__order
                )
            else:
                self.__memo[t] = nc_normal_form(
                    self._term_poly(t), self.__elements, self.__order
                )
        return hit

    def can_poly(self, f):
        """Canonical form of f by linearity; |supp(f)| ledger queries."""
        if self.__kind == "comm":
            if not isinstance(f, Polynomial):
                raise ValueError("expected a commutative polynomial")
            acc = Polynomial.zero(self.__n, self.__p)
        else:
            if not isinstance(f, NcPolynomial):
                raise ValueError("expected a free-algebra polynomial")
            acc = NcPolynomial.zero(self.__n, self.__p)
        if f.n != self.__n or f.p != self.__p:
            raise ValueError("polynomial is not in the oracle's ring")
        for t, c in sorted(f.items()):
            acc = acc + self.can_term(t).scale(c)
        return acc

    def masked_can(self, t, decomposition):
        """Canonical form of t asked through a masking decomposition.

        decomposition is a list of polynomial pairs (l, r) whose combined
        products satisfy sum(l * t * r) = t; the identity is checked, the
        masked answers are summed, and the result equals can_term(t).
        """
        t = self._check_term(t)
        term = self._term_poly(t)
        pieces = []
        total = None
        for left, right in decomposition:
            piece = left * term * right
            pieces.append(piece)
            total = piece if total is None else total + piece
        if total != term:
            raise ValueError("decomposition does not sum back to the term")
        acc = None
        for piece in pieces:
            part = self.can_poly(piece)
            acc = part if acc is None else acc + part
        return acc


# --- line protocol ------------------------------------------------------


def serve_line(oracle: CanOracle, line: str) -> str:
    """One request: ``CAN <term>`` -> polynomial text, ``COUNT`` -> integer."""
    parts = line.strip().split(None, 1)
    if not parts:
        return ""
    cmd = parts[0].upper()
    if cmd == "COUNT":
        return str(oracle.queries)
    if cmd == "CAN" and len(parts) == 2:
        try:
            if oracle.is_commutative:
                t = parse_term(parts[1], oracle.n)
            else:
                t = parse_word(parts[1], oracle.n)
            return oracle.can_term(t).to_text()
        except (ParseError, ValueError) as e:
            return f"ERR {e}"
    return f"ERR unknown request {line.strip()!r}"


def serve(oracle: CanOracle, lines: Iterable[str]) -> Iterator[str]:
    for line in lines:
        out = serve_line(oracle, line)
        if out:
            yield out
