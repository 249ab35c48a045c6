"""One verifier per hook-length identity.

Every verifier builds the two sides of its identity along independent code
paths: the left side by brute-force summation over partitions (weights taken
over hook multisets), the right side by exact series algebra (products,
symbolic powers, exponentials).  Agreement is reported coefficient by
coefficient; a mismatch is data, not an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .abacus import coding_product, core_weight_from_v, enumerate_v_codings
from .partitions import (
    Partition,
    count_t_cores,
    enumerate_partitions,
    hook_lengths,
    hook_lengths_mod_t,
    is_t_core,
    syt_count,
)
from .polynomial import ONE, Polynomial
from .series import TruncatedSeries, euler_product_power, product_log

B = Polynomial.variable("b")
S = Polynomial.variable("s")
Y = Polynomial.variable("y")
Z = Polynomial.variable("z")


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    degree: int
    lhs: Polynomial
    rhs: Polynomial


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    degree: int
    verified: bool
    first_mismatch: Mismatch | None = None

    def to_dict(self):
        mismatch = None
        if self.first_mismatch is not None:
            mismatch = {
                "degree": self.first_mismatch.degree,
                "lhs": self.first_mismatch.lhs.term_list(),
                "rhs": self.first_mismatch.rhs.term_list(),
            }
        return {
            "identity": self.identity,
            "degree": self.degree,
            "verified": self.verified,
            "first_mismatch": mismatch,
        }

    @classmethod
    def from_dict(cls, data) -> "IdentityReport":
        mismatch = data.get("first_mismatch")
        if mismatch is not None:
            mismatch = Mismatch(
                degree=mismatch["degree"],
                lhs=Polynomial.from_term_list(mismatch["lhs"]),
                rhs=Polynomial.from_term_list(mismatch["rhs"]),
            )
        return cls(
            identity=data["identity"],
            degree=data["degree"],
            verified=data["verified"],
            first_mismatch=mismatch,
        )


def compare_series(identity, lhs: TruncatedSeries, rhs: TruncatedSeries) -> IdentityReport:
    if lhs.truncation != rhs.truncation:
        raise ValueError("cannot compare series with different truncations")
    for degree in range(lhs.truncation + 1):
        a, b = lhs.coefficient(degree), rhs.coefficient(degree)
        if a != b:
            return IdentityReport(
                identity, lhs.truncation, False, Mismatch(degree, a, b)
            )
    return IdentityReport(identity, lhs.truncation, True)


def _scalar_report(identity, bound, failures) -> IdentityReport:
    if not failures:
        return IdentityReport(identity, bound, True)
    where, lhs, rhs = failures[0]
    mismatch = Mismatch(
        where, Polynomial.constant(Fraction(lhs)), Polynomial.constant(Fraction(rhs))
    )
    return IdentityReport(identity, bound, False, mismatch)


# -- brute-force left sides ------------------------------------------------------


def hook_weighted_series(truncation, weight) -> TruncatedSeries:
    """Sum of weight(partition) * x^size over all partitions of size <= truncation."""
    coeffs = []
    for n in range(truncation + 1):
        total = Polynomial()
        for p in enumerate_partitions(n):
            total = total + weight(p)
        coeffs.append(total)
    return TruncatedSeries(coeffs, truncation)


def _full_hook_weight(p: Partition) -> Polynomial:
    out = ONE
    for h, mult in hook_lengths(p).items():
        out = out * (ONE - Z / (h * h)) ** mult
    return out


def _t_hook_weight(p: Partition, t: int) -> Polynomial:
    out = ONE
    for h, mult in hook_lengths_mod_t(p, t).items():
        out = out * (Y - Y * Z * Fraction(t, h * h)) ** mult
    return out


def _t_count_weight(p: Partition, t: int) -> Polynomial:
    return Y ** hook_lengths(p)[t]


def lhs_hook_sum(truncation, t, scheme) -> TruncatedSeries:
    """Brute-force generating function for one of the three hook weights.

    "hook-product": product of (1 - z/h^2) over all hooks;
    "t-hook-product": product of (y - t*y*z/h^2) over hooks divisible by t;
    "t-hook-count": y to the number of hooks equal to t.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    if scheme == "hook-product":
        return hook_weighted_series(truncation, _full_hook_weight)
    if scheme == "t-hook-product":
        return hook_weighted_series(truncation, lambda p: _t_hook_weight(p, t))
    if scheme == "t-hook-count":
        return hook_weighted_series(truncation, lambda p: _t_count_weight(p, t))
    raise ValueError(f"unknown weight scheme {scheme!r}")


# -- right-side builders ---------------------------------------------------------


def _inverse_euler(truncation) -> TruncatedSeries:
    return euler_product_power(-1, truncation)


def _extension_rhs(truncation, t, y_value, z_value) -> TruncatedSeries:
    """Step-t Euler product to the t, over the (t-z)-power of the y-scaled
    product, over the plain Euler product."""
    numer = euler_product_power(t, truncation, step=t)
    scaled_logs = product_log(truncation, t, lambda k: y_value**k)
    middle = (scaled_logs * (z_value - t)).exp()
    return numer * middle * _inverse_euler(truncation)


def lambert_sum(truncation, step=1) -> TruncatedSeries:
    """Sum over k >= 1 of x^(step*k) / (k * (1 - x^(step*k)))."""
    coeffs = [Fraction(0)] * (truncation + 1)
    for k in range(1, truncation // step + 1):
        for j in range(1, truncation // (step * k) + 1):
            coeffs[step * k * j] += Fraction(1, k)
    return TruncatedSeries(coeffs, truncation)


def pentagonal_coefficient(n: int) -> int:
    """Coefficient of x^n in the Euler product: (-1)^m at m(3m+1)/2, else 0."""
    for m in range(-(isqrt(n) + 2), isqrt(n) + 3):
        if m * (3 * m + 1) // 2 == n:
            return (-1) ** m
    return 0


def triple_product_coefficient(n: int) -> int:
    """Coefficient of x^n in the cube of the Euler product."""
    for m in range(isqrt(2 * n) + 2):
        if m * (m + 1) // 2 == n:
            return (-1) ** m * (2 * m + 1)
    return 0


def distinct_part_count(n: int) -> int:
    return sum(
        1 for p in enumerate_partitions(n) if len(set(p.parts)) == len(p.parts)
    )


# -- headline identities ---------------------------------------------------------


def verify_nekrasov_okounkov(truncation=12) -> IdentityReport:
    """Hook expansion of Euler product powers, symbolically in z."""
    lhs = lhs_hook_sum(truncation, 1, "hook-product")
    rhs = euler_product_power(Z - 1, truncation)
    return compare_series("nekrasov-okounkov", lhs, rhs)


def verify_extension_ty(truncation=10, t=1) -> IdentityReport:
    """Two-parameter refinement over hooks divisible by t, symbolic in y and z."""
    lhs = lhs_hook_sum(truncation, t, "t-hook-product")
    rhs = _extension_rhs(truncation, t, Y, Z)
    return compare_series(f"t-refinement[t={t}]", lhs, rhs)


def verify_hook_t_count(truncation=12, t=1) -> IdentityReport:
    """Generating function by the number of hooks equal to t, symbolic in y."""
    lhs = lhs_hook_sum(truncation, t, "t-hook-count")
    logs = product_log(truncation, t, lambda k: 1 - Y)
    rhs = (logs * t).exp() * _inverse_euler(truncation)
    return compare_series(f"hook-count-gf[t={t}]", lhs, rhs)


def verify_macdonald_odd(truncation, t, max_weight=None) -> IdentityReport:
    """Odd-t Macdonald identity via coding enumeration, fractional power cleared.

    The right side sums the normalized difference product over every V-coding
    of weight at most the truncation; the left side is the (t^2-1)-th power of
    the Euler product.
    """
    if t < 3 or t % 2 == 0:
        raise ValueError("t must be an odd integer >= 3")
    if max_weight is None:
        max_weight = truncation
    lhs = euler_product_power(t * t - 1, truncation)
    coeffs = [Fraction(0)] * (truncation + 1)
    for coding in enumerate_v_codings(t, max_weight):
        weight = core_weight_from_v(coding)
        if weight <= truncation:
            coeffs[weight] += coding_product(coding)
    rhs = TruncatedSeries(coeffs, truncation)
    return compare_series(f"macdonald-odd[t={t}]", lhs, rhs)


# -- specializations -------------------------------------------------------------


def verify_t_core_power(truncation=12, t=2) -> IdentityReport:
    """Hook products at z = t^2: only t-cores survive on the left."""
    def weight(p):
        out = Fraction(1)
        for h, mult in hook_lengths(p).items():
            out *= Fraction(h * h - t * t, h * h) ** mult
        return out

    lhs = hook_weighted_series(truncation, weight)
    rhs = euler_product_power(t * t - 1, truncation)
    return compare_series(f"t-core-power[t={t}]", lhs, rhs)


def verify_t_core_gf(truncation=25, t=2) -> IdentityReport:
    """Generating function for t-cores."""
    lhs = hook_weighted_series(
        truncation, lambda p: Fraction(1 if is_t_core(p, t) else 0)
    )
    rhs = euler_product_power(t, truncation, step=t) * _inverse_euler(truncation)
    return compare_series(f"t-core-gf[t={t}]", lhs, rhs)


def verify_hook_count_doubling(truncation=12, t=2) -> IdentityReport:
    """Doubling weight 2^(number of hooks equal to t)."""
    lhs = hook_weighted_series(truncation, lambda p: Fraction(2) ** hook_lengths(p)[t])
    logs = product_log(truncation, t, lambda k: -1)
    rhs = (logs * t).exp() * _inverse_euler(truncation)
    return compare_series(f"hook-count-doubling[t={t}]", lhs, rhs)


def verify_pentagonal_hook_sum(truncation=25) -> IdentityReport:
    """Hook products at z = 2 collapse to the plain Euler product."""
    def weight(p):
        out = Fraction(1)
        for h, mult in hook_lengths(p).items():
            out *= Fraction(h * h - 2, h * h) ** mult
        return out

    lhs = hook_weighted_series(truncation, weight)
    rhs = euler_product_power(1, truncation)
    return compare_series("pentagonal-hook-sum", lhs, rhs)


def verify_distinct_parts_hook_sum(truncation=20) -> IdentityReport:
    """Even-hook products at z = 2 count distinct-part partitions."""
    def weight(p):
        out = Fraction(1)
        for h, mult in hook_lengths_mod_t(p, 2).items():
            out *= Fraction(h * h - 2, h * h) ** mult
        return out

    lhs = hook_weighted_series(truncation, weight)
    rhs = product_log(truncation, 1, lambda k: -1).exp()
    return compare_series("distinct-parts-hook-sum", lhs, rhs)


def verify_t_hook_number_gf(truncation=10, t=1) -> IdentityReport:
    """Generating function by the number of hooks divisible by t (z = 0)."""
    lhs = hook_weighted_series(truncation, lambda p: Y ** _t_hook_number(p, t))
    rhs = _extension_rhs(truncation, t, Y, Polynomial())
    return compare_series(f"t-hook-number-gf[t={t}]", lhs, rhs)


def _t_hook_number(p, t):
    return sum(hook_lengths_mod_t(p, t).values())


def verify_t_hook_parity_gf(truncation=12, t=1) -> IdentityReport:
    """Parity-signed count of hooks divisible by t."""
    lhs = hook_weighted_series(
        truncation, lambda p: Fraction((-1) ** _t_hook_number(p, t))
    )
    rhs = (
        euler_product_power(t, truncation, step=4 * t)
        * euler_product_power(2 * t, truncation, step=t)
        * euler_product_power(-3 * t, truncation, step=2 * t)
        * _inverse_euler(truncation)
    )
    return compare_series(f"t-hook-parity-gf[t={t}]", lhs, rhs)


def verify_t_core_interpolation(truncation=10, t=1, z_value=None) -> IdentityReport:
    """Symbolic-z power of the step-t Euler product (y = 1).

    With z_value set, verifies the numeric specialization instead (used for
    the six-core showcase, z*t = 36).
    """
    z_poly = Z if z_value is None else Polynomial.constant(z_value)

    def weight(p):
        out = ONE
        for h, mult in hook_lengths_mod_t(p, t).items():
            out = out * (ONE - z_poly * Fraction(t, h * h)) ** mult
        return out

    label = f"t-core-interpolation[t={t}]"
    if z_value is not None:
        label = f"t-core-interpolation[t={t},z={z_value}]"
    lhs = hook_weighted_series(truncation, weight)
    rhs = euler_product_power(z_poly, truncation, step=t) * _inverse_euler(truncation)
    return compare_series(label, lhs, rhs)


def verify_six_core_showcase(truncation=12) -> list:
    """The interpolation family pinned at hook-square 36 for every t dividing 6."""
    return [
        verify_t_core_interpolation(truncation, t, z_value=Fraction(36, t))
        for t in (1, 2, 3, 6)
    ]


def verify_exp_t_hook_gf(truncation=10, t=1) -> IdentityReport:
    """Pure inverse-square hook weights against the exponential factor."""
    def weight(p):
        out = ONE
        for h, mult in hook_lengths_mod_t(p, t).items():
            out = out * (B * Fraction(t, h * h)) ** mult
        return out

    lhs = hook_weighted_series(truncation, weight)
    rhs = (
        TruncatedSeries.monomial(truncation, t, B).exp()
        * euler_product_power(t, truncation, step=t)
        * _inverse_euler(truncation)
    )
    return compare_series(f"exp-t-hook-gf[t={t}]", lhs, rhs)


def verify_inverse_square_hook_sum(truncation=12, t=1) -> IdentityReport:
    """First moment of inverse-square hooks divisible by t."""
    def weight(p):
        return sum(
            (Fraction(mult, h * h) for h, mult in hook_lengths_mod_t(p, t).items()),
            Fraction(0),
        )

    lhs = hook_weighted_series(truncation, weight)
    rhs = _inverse_euler(truncation) * lambert_sum(truncation, t) * Fraction(1, t)
    return compare_series(f"inverse-square-hook-sum[t={t}]", lhs, rhs)


def verify_odd_hook_inverse_squares(truncation=15) -> IdentityReport:
    """First moment of inverse-square odd hooks."""
    def weight(p):
        return sum(
            (
                Fraction(mult, h * h)
                for h, mult in hook_lengths(p).items()
                if h % 2
            ),
            Fraction(0),
        )

    lhs = hook_weighted_series(truncation, weight)
    coeffs = [Fraction(0)] * (truncation + 1)
    for k in range(1, truncation + 1):
        for j in range(truncation + 1):
            even_exp = 2 * k * (j + 1)
            if even_exp <= truncation:
                coeffs[even_exp] += Fraction(1, 2 * k)
            odd_exp = k * (2 * j + 1)
            if odd_exp <= truncation:
                coeffs[odd_exp] += Fraction(1, k)
    rhs = _inverse_euler(truncation) * TruncatedSeries(coeffs, truncation)
    return compare_series("odd-hook-inverse-squares", lhs, rhs)


def verify_pentagonal(truncation=30) -> IdentityReport:
    expected = TruncatedSeries(
        [Fraction(pentagonal_coefficient(n)) for n in range(truncation + 1)],
        truncation,
    )
    return compare_series(
        "pentagonal", euler_product_power(1, truncation), expected
    )


def verify_triple_product(truncation=30) -> IdentityReport:
    expected = TruncatedSeries(
        [Fraction(triple_product_coefficient(n)) for n in range(truncation + 1)],
        truncation,
    )
    return compare_series(
        "triple-product", euler_product_power(3, truncation), expected
    )


def verify_partition_exp_form(truncation=20) -> IdentityReport:
    """exp of the lambert-style sum equals the inverse Euler product."""
    lhs = lambert_sum(truncation).exp()
    return compare_series("partition-exp-form", lhs, _inverse_euler(truncation))


# -- scalar families -------------------------------------------------------------


def verify_marked_hook(n_max=9) -> IdentityReport:
    """Square-tableau-count weighted sum of hook squares, in closed form."""
    failures = []
    for n in range(1, n_max + 1):
        total = 0
        for p in enumerate_partitions(n):
            f = syt_count(p)
            total += f * f * sum(h * h * mult for h, mult in hook_lengths(p).items())
        expected = n * (3 * n - 1) * factorial(n) // 2
        if total != expected:
            failures.append((n, total, expected))
    return _scalar_report("marked-hook", n_max, failures)


def verify_syt_square_sum(n_max=9) -> IdentityReport:
    """Sum of squared tableau counts equals n factorial."""
    failures = []
    for n in range(1, n_max + 1):
        total = sum(syt_count(p) ** 2 for p in enumerate_partitions(n))
        if total != factorial(n):
            failures.append((n, total, factorial(n)))
    return _scalar_report("syt-square-sum", n_max, failures)


def _restricted_inverse_square_sums(size, t, count):
    """Multiset sums over partitions of the given size with exactly `count`
    hooks divisible by t: returns (sum of prod 1/h^2, same weighted by sum h^2)."""
    plain = Fraction(0)
    weighted = Fraction(0)
    for p in enumerate_partitions(size):
        hooks = hook_lengths_mod_t(p, t)
        if sum(hooks.values()) != count:
            continue
        product = Fraction(1)
        square_sum = 0
        for h, mult in hooks.items():
            product *= Fraction(1, h * h) ** mult
            square_sum += h * h * mult
        plain += product
        weighted += product * square_sum
    return plain, weighted


def verify_scalar_hook_sums(n_max=6, t=1, m_max=4) -> bool:
    """Restricted inverse-square hook sums against their closed forms.

    Checks, for 1 <= n <= n_max: partitions of t*n with n marked hooks give
    1/(t^n n!); with an extra offset m they give (count of t-cores of m)
    times the same; and the hook-square moment gives (3n-3+2t)/(2(n-1)!).
    """
    return not _scalar_hook_failures(n_max, t, m_max)


def _scalar_hook_failures(n_max, t, m_max):
    failures = []
    for n in range(1, n_max + 1):
        plain, weighted = _restricted_inverse_square_sums(t * n, t, n)
        base = Fraction(1, t**n * factorial(n))
        if plain != base:
            failures.append((n, plain, base))
        # the hook-square moment carries 1/t^(n-1): the z-coefficient of each
        # weight factor contributes a t, so n-1 of them ride along
        moment = Fraction(3 * n - 3 + 2 * t, 2 * factorial(n - 1) * t ** (n - 1))
        if weighted != moment:
            failures.append((n, weighted, moment))
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            plain, _ = _restricted_inverse_square_sums(t * n + m, t, n)
            expected = Fraction(count_t_cores(m, t), t**n * factorial(n))
            if plain != expected:
                failures.append((t * n + m, plain, expected))
    return failures


def verify_core_hook_moments(n_max=6, ts=(1, 2, 3)) -> list:
    return [
        _scalar_report(
            f"core-hook-moments[t={t}]", n_max, _scalar_hook_failures(n_max, t, 4)
        )
        for t in ts
    ]


# -- Euler power coefficients ------------------------------------------------------


def euler_power_coefficient(k: int) -> Polynomial:
    """Coefficient of x^k in the symbolic-s power of the Euler product."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return euler_product_power(S, k).coefficient(k)


def euler_power_summand(p: Partition) -> Polynomial:
    """Per-partition summand of the sign-flipped coefficient:
    product of (s + 1 - h^2)/h^2 over all boxes."""
    out = ONE
    for h, mult in hook_lengths(p).items():
        out = out * ((S + 1 - h * h) / (h * h)) ** mult
    return out


def kostant_positivity(k_max=12) -> bool:
    """Sign and positivity of Euler power coefficients on s >= k^2 - 1.

    At s = k^2 - 1 the sign-flipped coefficient is positive for k >= 4 and
    exactly zero for k <= 3; just above, at s = k^2, it is positive for all
    k; and every summand is non-negative at s = k^2 - 1 (no cancellation).
    Also cross-checks the summand decomposition symbolically.
    """
    series = euler_product_power(S, k_max)
    for k in range(1, k_max + 1):
        f_k = series.coefficient(k)
        decomposition = Polynomial()
        for p in enumerate_partitions(k):
            term = euler_power_summand(p)
            decomposition = decomposition + term
            at_boundary = term.substitute(s=k * k - 1).constant_value()
            if at_boundary < 0:
                return False
        if decomposition != f_k * (-1) ** k:
            return False
        boundary = (f_k.substitute(s=k * k - 1).constant_value()) * (-1) ** k
        above = (f_k.substitute(s=k * k).constant_value()) * (-1) ** k
        if k >= 4 and not boundary > 0:
            return False
        if k <= 3 and boundary != 0:
            return False
        if not above > 0:
            return False
    return True


# -- reversion ---------------------------------------------------------------------


def reversion_hook_series(truncation) -> TruncatedSeries:
    """Direct hook form of the reverted Euler product: the x^n coefficient is
    (1/n) times the sum over partitions of n-1 of prod(1 + (n-1)/h^2)."""
    coeffs = [Fraction(0)] * (truncation + 1)
    for n in range(1, truncation + 1):
        total = Fraction(0)
        for p in enumerate_partitions(n - 1):
            product = Fraction(1)
            for h, mult in hook_lengths(p).items():
                product *= Fraction(h * h + n - 1, h * h) ** mult
            total += product
        coeffs[n] = total / n
    return TruncatedSeries(coeffs, truncation)


def euler_reversion_terms(truncation=12):
    """Compositional inverse of x times the Euler product, both ways.

    Returns the reverted series and a report covering: agreement of the
    Lagrange route with the direct hook form, positive integrality of the
    coefficients, and integrality of the shifted hook sums (brute force
    against the integer-power series, plus the averaged variant).
    """
    base = TruncatedSeries.monomial(truncation, 1) * euler_product_power(1, truncation)
    reverted = base.revert()
    direct = reversion_hook_series(truncation)
    report = compare_series("euler-reversion", reverted, direct)
    if not report.verified:
        return reverted, report

    ok = all(
        c.is_constant() and c.constant_value().denominator == 1 and c.constant_value() > 0
        for c in reverted.coeffs[1:]
    )
    hooks_by_size = [
        [hook_lengths(p) for p in enumerate_partitions(n)]
        for n in range(truncation + 1)
    ]

    def shifted_hook_sum(n, k):
        total = Fraction(0)
        for hooks in hooks_by_size[n]:
            product = Fraction(1)
            for h, mult in hooks.items():
                product *= Fraction(h * h + k, h * h) ** mult
            total += product
        return total

    for k in range(1, truncation + 1):
        integer_power = euler_product_power(-k - 1, truncation)
        for n in range(truncation + 1):
            total = shifted_hook_sum(n, k)
            ok = ok and total.denominator == 1
            ok = ok and total == integer_power.coefficient(n).constant_value()
    for n in range(1, truncation + 1):
        ok = ok and (shifted_hook_sum(n, n) / (n + 1)).denominator == 1
    return reverted, IdentityReport("euler-reversion", truncation, ok)


# -- suite wiring ------------------------------------------------------------------


def verify_corollaries(truncation=10) -> list:
    """One report per specialization family.

    Symbolic families run at the requested truncation; the numeric
    specializations keep the larger degrees their value patterns are
    checked at (25 for the pentagonal collapse, 20 for distinct parts,
    12 for the six-core showcase and the rest).
    """
    reports = []
    for t in (2, 3):
        reports.append(verify_t_core_power(12, t))
    for t in (2, 3, 4, 5):
        reports.append(verify_t_core_gf(25, t))
    for t in (2, 3):
        reports.append(verify_hook_count_doubling(12, t))
    reports.append(verify_pentagonal_hook_sum(25))
    reports.append(verify_distinct_parts_hook_sum(20))
    for t in (1, 2, 3):
        reports.append(verify_t_hook_number_gf(truncation, t))
    for t in (1, 2):
        reports.append(verify_t_hook_parity_gf(truncation, t))
    for t in (1, 2, 3):
        reports.append(verify_t_core_interpolation(truncation, t))
    reports.extend(verify_six_core_showcase(12))
    for t in (1, 2, 3):
        reports.append(verify_exp_t_hook_gf(truncation, t))
    for t in (1, 2, 3):
        reports.append(verify_inverse_square_hook_sum(truncation, t))
    reports.append(verify_odd_hook_inverse_squares(max(truncation, 15)))
    return reports


def _degree(requested, default):
    return default if requested is None else requested


def _run_family(fn, ts, requested, default):
    return [fn(_degree(requested, default), t) for t in ts]


REGISTRY = [
    # (identity id, honors --degree, runner)
    ("nekrasov-okounkov", True, lambda d: [verify_nekrasov_okounkov(_degree(d, 12))]),
    ("t-refinement", True, lambda d: _run_family(verify_extension_ty, (1, 2, 3), d, 10)),
    ("hook-count-gf", True, lambda d: _run_family(verify_hook_t_count, (1, 2, 3), d, 12)),
    ("t-core-power", True, lambda d: _run_family(verify_t_core_power, (2, 3), d, 12)),
    ("t-core-gf", True, lambda d: _run_family(verify_t_core_gf, (2, 3, 4, 5), d, 25)),
    ("hook-count-doubling", True, lambda d: _run_family(verify_hook_count_doubling, (2, 3), d, 12)),
    ("pentagonal-hook-sum", True, lambda d: [verify_pentagonal_hook_sum(_degree(d, 25))]),
    ("distinct-parts-hook-sum", True, lambda d: [verify_distinct_parts_hook_sum(_degree(d, 20))]),
    ("t-hook-number-gf", True, lambda d: _run_family(verify_t_hook_number_gf, (1, 2, 3), d, 10)),
    ("t-hook-parity-gf", True, lambda d: _run_family(verify_t_hook_parity_gf, (1, 2), d, 12)),
    ("t-core-interpolation", True, lambda d: _run_family(verify_t_core_interpolation, (1, 2, 3), d, 10)),
    ("six-core-showcase", True, lambda d: verify_six_core_showcase(_degree(d, 12))),
    ("exp-t-hook-gf", True, lambda d: _run_family(verify_exp_t_hook_gf, (1, 2, 3), d, 10)),
    ("inverse-square-hook-sum", True, lambda d: _run_family(verify_inverse_square_hook_sum, (1, 2, 3), d, 12)),
    ("odd-hook-inverse-squares", True, lambda d: [verify_odd_hook_inverse_squares(_degree(d, 15))]),
    ("macdonald-odd", True, lambda d: [
        verify_macdonald_odd(_degree(d, 12), 3),
        verify_macdonald_odd(_degree(d, 8), 5),
    ]),
    ("pentagonal", True, lambda d: [verify_pentagonal(_degree(d, 30))]),
    ("triple-product", True, lambda d: [verify_triple_product(_degree(d, 30))]),
    ("partition-exp-form", True, lambda d: [verify_partition_exp_form(_degree(d, 20))]),
    ("marked-hook", False, lambda d: [verify_marked_hook(9)]),
    ("syt-square-sum", False, lambda d: [verify_syt_square_sum(9)]),
    ("core-hook-moments", False, lambda d: verify_core_hook_moments(6)),
    ("kostant-positivity", False, lambda d: [
        IdentityReport("kostant-positivity", 12, kostant_positivity(12))
    ]),
    ("euler-reversion", True, lambda d: [euler_reversion_terms(_degree(d, 12))[1]]),
]

IDENTITY_IDS = [name for name, _, _ in REGISTRY]


def run_identity(identity_id, degree=None) -> list:
    """All reports for one registry entry (or every entry, for "all")."""
    if identity_id == "all":
        reports = []
        for _, _, runner in REGISTRY:
            reports.extend(runner(degree))
        return reports
    for name, _, runner in REGISTRY:
        if name == identity_id:
            return runner(degree)
    raise KeyError(identity_id)
