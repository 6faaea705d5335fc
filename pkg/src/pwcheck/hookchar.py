"""Point-count route to the variant E-polynomial via special characters.

For prime rank n the irreducible characters that survive on the variant
part fall into two families, distinguished by the torus centralizing
the corresponding special conjugacy class: the split torus (n distinct
scalar eigenvalues) and the nonsplit one (a single n-cycle orbit).
Each family contributes a normalized hook polynomial, and the counted
sum over both must reproduce the closed formula exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .epoly import ModuliParams, require_prime, variant_bracket
from .laurent import LaurentPoly


class IdentityFailureError(ArithmeticError):
    """The two derivations of the same polynomial disagreed."""


class SpecialType(enum.Enum):
    SPLIT = "split"
    NONSPLIT = "nonsplit"


# Per family: sign of the 1/n term and sign of the n^{2g-1} term in the
# multiplicity with which its contribution is counted.
_COUNT_SIGNS = {
    SpecialType.SPLIT: (-1, 1),
    SpecialType.NONSPLIT: (1, -1),
}


def special_hook(kind: SpecialType, n: int) -> LaurentPoly:
    """Normalized hook polynomial of one special family.

    Split: q^{-n/2} (1-q)^n.  Nonsplit: q^{-n/2} (1-q^n).
    Half-integer exponents appear for odd n.
    """
    require_prime(n)
    shift = LaurentPoly.monomial(-n)
    if kind is SpecialType.SPLIT:
        return shift * LaurentPoly.from_q_powers({0: 1, 1: -1}) ** n
    return shift * LaurentPoly.from_q_powers({0: 1, n: -1})


@dataclass(frozen=True)
class HookData:
    """One family's hook polynomial together with its counting weight."""

    kind: SpecialType
    n: int
    hook: LaurentPoly
    unit_coeff: Fraction
    power_sign: int

    def multiplier(self, g: int) -> Fraction:
        """Number of characters in the family, up to the shared scale:
        unit_coeff + power_sign * n^{2g-1}."""
        return self.unit_coeff + self.power_sign * self.n ** (2 * g - 1)


def hook_data(kind: SpecialType, n: int) -> HookData:
    unit_sign, power_sign = _COUNT_SIGNS[kind]
    return HookData(kind=kind, n=n, hook=special_hook(kind, n),
                    unit_coeff=Fraction(unit_sign, n), power_sign=power_sign)


def type_contribution(hook: LaurentPoly, n: int, g: int) -> LaurentPoly:
    """(q^{n^2/2} * hook / (q - 1))^{2g-2}.

    The division is exact for both hooks; the result always has integer
    exponents even though hook and prefactor individually do not.
    """
    prefix = LaurentPoly.monomial(n * n)
    q_minus_1 = LaurentPoly.from_q_powers({1: 1, 0: -1})
    base = (prefix * hook).divide_exact(q_minus_1)
    return base ** (2 * g - 2)


def evar_type_route(params: ModuliParams) -> LaurentPoly:
    """Variant E-polynomial summed over the two special families."""
    n, g = params.n, params.g
    require_prime(n)
    total = LaurentPoly.zero()
    for kind in SpecialType:
        data = hook_data(kind, n)
        total = total + data.multiplier(g) * type_contribution(data.hook, n, g)
    return total


def evar_closed_route(params: ModuliParams) -> LaurentPoly:
    """Same polynomial from the closed bracket:
    ((n^{2g}-1)/n) * q^{(n^2-n)(g-1)} * bracket(n, g).
    """
    n, g = params.n, params.g
    require_prime(n)
    scale = Fraction(n ** (2 * g) - 1, n)
    prefix = LaurentPoly.from_q_powers({(n * n - n) * (g - 1): 1})
    return scale * prefix * variant_bracket(n, g)


def evar_from_types(params: ModuliParams) -> LaurentPoly:
    """Variant E-polynomial with both derivations cross-checked.

    Raises IdentityFailureError if the character sum and the closed
    bracket disagree, and ParityError if a half-integer exponent
    survives (it never should).
    """
    from_types = evar_type_route(params)
    from_closed = evar_closed_route(params)
    if from_types != from_closed:
        raise IdentityFailureError(
            f"character sum disagrees with closed form for n={params.n} g={params.g}")
    from_types.to_q_dict()
    return from_types
