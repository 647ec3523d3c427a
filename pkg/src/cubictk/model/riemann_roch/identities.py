"""Symbolic checks of the polynomial identities behind the localized Riemann-Roch formula."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from sympy import Expr, Poly, Rational, expand, factorial, symbols

from cubictk.errors import InputError


def telescope_residual(n: int, q: int) -> Expr:
    """Return Σ_(I ⊆ {1, …, n}) (−1)^#I·(Σ_(i ∈ I) X_i)^q in ℤ[X_1, …, X_n]; it vanishes when q < n."""
    if n < 1 or q < 0:
        message = f"the telescoping identity needs n ≥ 1 and q ≥ 0, got n = {n}, q = {q}"
        raise InputError(message)
    variables = symbols(f"X1:{n + 1}")
    total = sum(
        (
            (-1) ** size * sum(subset, Rational(0)) ** q
            for size in range(n + 1)
            for subset in combinations(variables, size)
        ),
        Rational(0),
    )
    return expand(total)


def telescope_check(n: int, q: int) -> bool:
    """Return whether the telescoping identity holds for n variables in degree q."""
    return telescope_residual(n, q) == 0


def _exp(x: Expr, degree: int) -> Expr:
    """Return the exponential series of x up to the degree."""
    return sum((x**q / factorial(q) for q in range(degree + 1)), Rational(0))


def _truncate(expression: Expr, variables: tuple[Expr, ...], degree: int) -> Expr:
    """Return the part of the polynomial of total degree at most the degree."""
    polynomial = Poly(expand(expression), *variables)
    terms = {monomial: coefficient for monomial, coefficient in polynomial.terms() if sum(monomial) <= degree}
    return Poly.from_dict(terms, *variables).as_expr()


@dataclass(frozen=True)
class ChernIdentityReport:
    """Which formal identities of the localized Chern character hold in A^*(Y)_ℚ truncated above degree d + 1."""

    dimension: int
    degree_zero: bool  # ch^0 of a complex exact off the fiber vanishes
    additivity: bool  # ch(𝒪(−D−D′) → 𝒪(−D)) + ch(𝒪(−D) → 𝒪) = ch(𝒪(−D−D′) → 𝒪)
    scaling: bool  # ch^q(c^m) = m^q·ch^q(c)
    twisting: bool  # ch(𝒢 ⊗ c) = ch(𝒢)·ch(c) for a line bundle 𝒢
    telescoping: bool  # Σ_I (−1)^(n−#I) ch(𝒪(−Σ_(i ∈ I) D_i) → 𝒪) = 0 for n = d + 2

    @property
    def passed(self) -> bool:
        """Return whether all identities hold."""
        return self.degree_zero and self.additivity and self.scaling and self.twisting and self.telescoping


def chern_identity_checks(dimension: int, multiple: int = 3) -> ChernIdentityReport:
    """Verify the identities with divisor classes as formal variables, truncated above degree d + 1.

    The localized Chern character of 𝓛 → 𝓜 is ch(𝓜) − ch(𝓛), so 𝒪 → 𝒪(D) gives exp(D) − 1 and 𝒪(−D) → 𝒪
    gives 1 − exp(−D).
    """
    if dimension < 1:
        message = f"the relative dimension must be positive, got {dimension}"
        raise InputError(message)
    top = dimension + 1
    d, d_prime, e = symbols("D Dp E")
    pair = (d, d_prime)

    def inclusion(divisor: Expr) -> Expr:
        """Return ch(𝒪(−divisor) → 𝒪)."""
        return 1 - _exp(-divisor, top)

    def twisted(divisor: Expr, twist: Expr) -> Expr:
        """Return ch(𝒪(twist − divisor) → 𝒪(twist))."""
        return _exp(twist, top) - _exp(twist - divisor, top)

    degree_zero = inclusion(d).subs(d, 0) == 0 and (_exp(d, top) - 1).subs(d, 0) == 0
    additivity = _truncate(twisted(d_prime, -d) + inclusion(d) - inclusion(d + d_prime), pair, top) == 0
    upward, scaled = Poly(_exp(d, top) - 1, d), Poly(_exp(multiple * d, top) - 1, d)
    scaling = all(scaled.coeff_monomial(d**q) == multiple**q * upward.coeff_monomial(d**q) for q in range(top + 1))
    twisting = _truncate(twisted(d, e) - _exp(e, top) * inclusion(d), (d, e), top) == 0
    n = dimension + 2
    divisors = symbols(f"D1:{n + 1}")
    alternating = sum(
        (
            (-1) ** (n - size) * inclusion(sum(subset, Rational(0)))
            for size in range(n + 1)
            for subset in combinations(divisors, size)
        ),
        Rational(0),
    )
    telescoping = _truncate(alternating, divisors, top) == 0
    return ChernIdentityReport(dimension, degree_zero, additivity, scaling, twisting, telescoping)
