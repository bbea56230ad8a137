"""Construction of ideal pairs that agree on every polynomial up to a
chosen degree yet differ above it.

Starting from a basis of an ideal J and an agreement degree past the
basis degrees, every generator is multiplied by X2 (the shifted ideal),
and one extra element is added whose lead is the order-smallest
leading-ideal term one degree above the agreement threshold (the cap).
Below the threshold the two ideals are indistinguishable, so any
box-bounded reconstruction run with too small a bound returns the
shifted ideal's staircase instead of the full one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Union

from .oracle import CanOracle
from .polynomials import (
    GroebnerBasis,
    Polynomial,
    buchberger,
    gb_degree,
    is_groebner,
    normal_form,
)
from .staircase import reconstruct
from .terms import Term, TermOrder, divides, minimal_terms, term_to_text, variable


def _terms_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


@dataclass(frozen=True)
class ForgedPair:
    """The two oracles' ideals and the data used to build them."""

    base: GroebnerBasis                     # reduced basis of J
    agree_degree: int                       # polynomials agree up to here
    cap_lead: Term                          # smallest lead of degree agree_degree + 1
    cap_poly: Polynomial                    # cap_lead minus its canonical form over J
    shifted_set: tuple[Polynomial, ...]     # X2 * (basis of J)
    extended_set: tuple[Polynomial, ...]    # cap_poly plus the shifted set
    shifted_basis: GroebnerBasis            # reduced basis of the shifted ideal
    extended_basis: GroebnerBasis           # reduced basis of the extended ideal
    extended_is_groebner: bool              # the extended set already completes itself
    closed_form_matches: bool               # cap lead equals the padded smallest lead
    order: TermOrder
    n: int
    p: int

    def shifted_oracle(self, memo: bool = False) -> CanOracle:
        return CanOracle.commutative(self.shifted_basis, memo=memo)

    def extended_oracle(self, memo: bool = False) -> CanOracle:
        return CanOracle.commutative(self.extended_basis, memo=memo)


def build_counterexample(
    generators: Union[GroebnerBasis, Iterable[Polynomial]],
    order: TermOrder,
    agree_degree: int,
) -> ForgedPair:
    """Build the agreeing-then-diverging ideal pair from a basis of J.

    Needs a degree-compatible order and agree_degree at least one more
    than the largest basis degree. The cap lead is found by explicit
    minimization over all leading-ideal terms of degree agree_degree + 1;
    the padded closed form (smallest-degree, order-smallest basis lead
    times a pure X1 power) is recomputed and compared, not trusted.
    """
    if isinstance(generators, GroebnerBasis):
        base = generators if generators.reduced else buchberger(
            list(generators.elements), generators.order
        )
        order = base.order
    else:
        base = buchberger(list(generators), order)
    if not order.degree_compatible:
        raise ValueError("the construction needs a degree-compatible order")
    n, p = base.elements[0].n, base.elements[0].p
    if n < 2:
        raise ValueError("the construction needs at least two variables")
    if agree_degree < gb_degree(base) + 1:
        raise ValueError(
            f"agreement degree must be at least {gb_degree(base) + 1}"
        )

    leads = base.leading_terms()
    candidates = [
        t
        for t in _terms_of_degree(n, agree_degree + 1)
        if any(divides(lt, t) for lt in leads)
    ]
    if not candidates:
        raise ValueError("no leading-ideal term at the cap degree")
    cap_lead = min(candidates, key=order.key)

    # padded closed form: smallest-degree element (ties by smaller lead),
    # multiplied up to the cap degree by the cheapest variable
    low = min(
        base.elements,
        key=lambda g: (g.degree(), order.key(g.leading_term(order))),
    )
    pad = agree_degree + 1 - low.degree()
    padded = tuple(
        e + (pad if i == 0 else 0)
        for i, e in enumerate(low.leading_term(order))
    )
    closed_form_matches = padded == cap_lead

    cap_poly = Polynomial.term(cap_lead, p) - normal_form(
        Polynomial.term(cap_lead, p), list(base.elements), order
    )

    x2 = Polynomial.term(variable(n, 2), p)
    shifted_set = tuple(x2 * g for g in base.elements)
    extended_set = (cap_poly,) + shifted_set

    return ForgedPair(
        base=base,
        agree_degree=agree_degree,
        cap_lead=cap_lead,
        cap_poly=cap_poly,
        shifted_set=shifted_set,
        extended_set=extended_set,
        shifted_basis=buchberger(list(shifted_set), order),
        extended_basis=buchberger(list(extended_set), order),
        extended_is_groebner=is_groebner(list(extended_set), order),
        closed_form_matches=closed_form_matches,
        order=order,
        n=n,
        p=p,
    )


@dataclass(frozen=True)
class BoundDemo:
    """Reconstruction of the extended ideal at two bounds: the small one
    reproduces the shifted ideal's staircase, the large one the real
    staircase, and the two disagree."""

    bound_small: int
    bound_big: int
    small_generators: frozenset[Term]
    big_generators: frozenset[Term]
    expected_small: frozenset[Term]
    expected_big: frozenset[Term]
    small_matches_shifted: bool
    big_matches_extended: bool
    differ: bool
    queries_small: int
    queries_big: int


def demonstrate_bound_necessity(
    pair: ForgedPair, bound_small: Optional[int] = None, bound_big: Optional[int] = None
) -> BoundDemo:
    """Run the reconstruction against the extended ideal's oracle at both
    bounds and report what each returns."""
    small = pair.agree_degree if bound_small is None else bound_small
    big = pair.agree_degree + 1 if bound_big is None else bound_big

    res_small = reconstruct(pair.extended_oracle(), pair.n, small)
    res_big = reconstruct(pair.extended_oracle(), pair.n, big)

    def in_box(t: Term, bound: int) -> bool:
        return all(e <= bound for e in t)

    expected_small = frozenset(
        t
        for t in minimal_terms(pair.shifted_basis.leading_terms())
        if in_box(t, small)
    )
    expected_big = frozenset(
        t
        for t in minimal_terms(pair.extended_basis.leading_terms())
        if in_box(t, big)
    )
    return BoundDemo(
        bound_small=small,
        bound_big=big,
        small_generators=res_small.generators,
        big_generators=res_big.generators,
        expected_small=expected_small,
        expected_big=expected_big,
        small_matches_shifted=res_small.generators == expected_small,
        big_matches_extended=res_big.generators == expected_big,
        differ=res_small.generators != res_big.generators,
        queries_small=res_small.queries_used,
        queries_big=res_big.queries_used,
    )


def render_demo(demo: BoundDemo) -> str:
    def show(ts):
        return ", ".join(term_to_text(t) for t in sorted(ts, key=lambda t: (sum(t), t))) or "-"

    lines = [
        f"bound {demo.bound_small}: generators {show(demo.small_generators)}"
        f" (queries {demo.queries_small})",
        f"bound {demo.bound_big}: generators {show(demo.big_generators)}"
        f" (queries {demo.queries_big})",
        f"small bound matches shifted ideal: {demo.small_matches_shifted}",
        f"big bound matches extended ideal: {demo.big_matches_extended}",
        f"outputs differ: {demo.differ}",
    ]
    return "\n".join(lines) + "\n"
