"""Coproduct on the b/c basis of K(n)-tilde of BO(q), modulo v_n.

The b classes carry the binomial-free coproduct inherited from BO(1):
psi(b_{2p}) is the sum of b_{2i} (x) b_{2j} over i + j = p, with b_0 the
unit. A c class is represented by a squared b, so modulo v_n its coproduct
is the sum of squares b_{2i}^2 (x) b_{2j}^2 over i + j = p; a square with
i >= 2^n is the class c_{4i} and a square with 0 < i < 2^n is the genuine
product b_{2i}*b_{2i}. Products of basis elements get the multiplicative
extension. Nothing here is claimed beyond the quotient by v_n: the exact
coproducts of the c classes acquire v_n-correction terms that the AHSS
representative does not determine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Set, Tuple

from .morava_basis import UNIT, BCMonomial, enumerate_basis
from .qn_action import MoravaParams

Pair = Tuple[BCMonomial, BCMonomial]


@dataclass(frozen=True)
class TensorTerm:
    """One summand left (x) right of a coproduct value."""

    left: BCMonomial
    right: BCMonomial

    def sort_key(self):
        return (self.left.sort_key(), self.right.sort_key())

    def __str__(self) -> str:
        return f"{self.left}|{self.right}"


@dataclass(frozen=True)
class CoalgebraReport:
    """Outcome of the structural law checks on a range of basis elements."""

    params: MoravaParams
    q: int
    max_degree: int
    elements_checked: int
    passed: bool
    failures: Tuple[str, ...]


def _square_class(params: MoravaParams, i: int) -> BCMonomial:
    """The basis element representing b_{2i}^2: a c class once i >= 2^n."""
    if i == 0:
        return UNIT
    if i >= params.b_index_bound:
        return BCMonomial((), (i,))
    return BCMonomial((i, i), ())


def _generator_pairs(params: MoravaParams, factor_is_c: bool, p: int) -> List[Pair]:
    """Coproduct of a single generator as a list of (left, right) pairs."""
    if factor_is_c:
        return [
            (_square_class(params, i), _square_class(params, p - i))
            for i in range(p + 1)
        ]
    single = lambda i: UNIT if i == 0 else BCMonomial((i,), ())
    return [(single(i), single(p - i)) for i in range(p + 1)]


def _toggle(acc: Set[Pair], pair: Pair) -> None:
    if pair in acc:
        acc.remove(pair)
    else:
        acc.add(pair)


def coproduct(params: MoravaParams, m: BCMonomial) -> Tuple[TensorTerm, ...]:
    """Coproduct of a basis monomial modulo v_n, as a mod-2 sum of terms."""
    m.validate_for(params)
    acc: Set[Pair] = {(UNIT, UNIT)}
    factors = [(False, i) for i in m.b_part] + [(True, j) for j in m.c_part]
    for is_c, p in factors:
        nxt: Set[Pair] = set()
        for left, right in acc:
            for fl, fr in _generator_pairs(params, is_c, p):
                _toggle(nxt, (left * fl, right * fr))
        acc = nxt
    terms = [TensorTerm(l, r) for l, r in acc]
    return tuple(sorted(terms, key=TensorTerm.sort_key))


def _pair_support(params: MoravaParams, m: BCMonomial) -> FrozenSet[Pair]:
    return frozenset((t.left, t.right) for t in coproduct(params, m))


def check_coassociativity(
    params: MoravaParams, q: int, max_degree: int
) -> CoalgebraReport:
    """Verify (psi x id)psi = (id x psi)psi and both counit laws.

    Runs over every basis element of BO(q) in even degrees up to
    max_degree; the counit kills all non-unit tensor factors.
    """
    failures: List[str] = []
    checked = 0
    for d in range(2, max_degree + 1, 2):
        for m in enumerate_basis(params, q, d, exact=False):
            checked += 1
            pairs = _pair_support(params, m)
            left_assoc: Set[Tuple[BCMonomial, BCMonomial, BCMonomial]] = set()
            right_assoc: Set[Tuple[BCMonomial, BCMonomial, BCMonomial]] = set()
            for l, r in pairs:
                for ll, lr in _pair_support(params, l):
                    triple = (ll, lr, r)
                    left_assoc.symmetric_difference_update({triple})
                for rl, rr in _pair_support(params, r):
                    triple = (l, rl, rr)
                    right_assoc.symmetric_difference_update({triple})
            if left_assoc != right_assoc:
                failures.append(f"coassociativity fails on {m}")
            left_counit = {r for l, r in pairs if l.is_unit}
            right_counit = {l for l, r in pairs if r.is_unit}
            if left_counit != {m}:
                failures.append(f"left counit fails on {m}")
            if right_counit != {m}:
                failures.append(f"right counit fails on {m}")
    return CoalgebraReport(
        params=params,
        q=q,
        max_degree=max_degree,
        elements_checked=checked,
        passed=not failures,
        failures=tuple(failures),
    )
