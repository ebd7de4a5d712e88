"""Complete and incomplete elliptic integrals in floating point.

K and E come from the arithmetic-geometric mean iteration; J is defined as
K - E, never quadrature.  The family J_n generalizes (J_0 = K, J_1 = J)
and is summed from its hypergeometric representation.  The only complex
evaluation exposed is K at a unit modulus e^{i*theta/2}, computed through
the real split formula.  Endpoint moduli (k = 0, 1) are hard errors so
callers must choose grids that exclude them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from scipy.integrate import quad


class ModulusOutOfRange(ValueError):
    """Real modulus outside the open interval (0, 1)."""


class ArgumentOutOfRange(ValueError):
    """Integration endpoint x outside [0, 1]."""


class AngleOutOfRange(ValueError):
    """Unit-circle angle outside the open interval (0, 2*pi)."""


class DivergentModulus(ValueError):
    """K requested too close to modulus 1, where it diverges."""


_AGM_RTOL = 1e-16
# sin(theta/4) or cos(theta/4) this close to 1 means K has effectively
# diverged; the split formula is refused rather than returning a huge lie.
_UNIT_MODULUS_GUARD = 1e-12


@dataclass(frozen=True)
class EllipticTriple:
    """K(k), E(k) and J(k) = K(k) - E(k) at a common modulus."""

    K: float
    E: float
    J: float


def _check_modulus(k: float) -> None:
    if not 0.0 < k < 1.0:
        raise ModulusOutOfRange(f"modulus must satisfy 0 < k < 1, got {k}")


def complete_triple(k: float) -> EllipticTriple:
    """K, E, J at modulus k via the AGM; relative accuracy ~1e-15.

    The companion sum 1 - sum(2^{n-1} c_n^2) with c_0 = k gives E/K along
    the same iteration, so J = K - E costs nothing extra.
    """
    _check_modulus(k)
    a = 1.0
    b = math.sqrt(1.0 - k * k)
    c_sum = 0.5 * k * k  # 2^{-1} c_0^2 with c_0 = k
    pow2 = 0.5
    # Quadratic convergence needs ~8 iterations.  Once |a - b| stalls at
    # the one-ulp level it must not keep feeding the 2^n c_n^2 sum (the
    # doubling weight would amplify ulp noise), hence the progress check.
    prev = math.inf
    for _ in range(64):
        diff = abs(a - b)
        if diff <= _AGM_RTOL * a or diff >= prev:
            break
        prev = diff
        c = 0.5 * (a - b)  # c_{n+1} from the pre-update means
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        pow2 *= 2.0
        c_sum += pow2 * c * c
    K = math.pi / (2.0 * a)
    E = K * (1.0 - c_sum)
    return EllipticTriple(K=K, E=E, J=K - E)


def complete_Jn(n: int, k: float) -> float:
    """J_n(k) = k^{2n} pi (1/2)_n / (2 n!) * 2F1(1/2, 1/2+n; 1+n; k^2).

    n = 0 gives K, n = 1 gives J = K - E.  The series is summed until the
    terms fall below machine precision relative to the partial sum.
    """
    if n < 0:
        raise ValueError(f"order n must be nonnegative, got {n}")
    _check_modulus(k)
    z = k * k
    # prefactor k^{2n} pi (1/2)_n / (2 n!)
    pre = math.pi / 2.0
    for i in range(n):
        pre *= z * (0.5 + i) / (1.0 + i)
    # 2F1(1/2, 1/2+n; 1+n; z) by term recursion
    total = 1.0
    term = 1.0
    m = 0
    while True:
        term *= (0.5 + m) * (0.5 + n + m) * z / ((1.0 + n + m) * (1.0 + m))
        total += term
        m += 1
        if term < 1e-17 * total or m > 100_000:
            break
    return pre * total


def incomplete_Jn(n: int, x: float, k: float) -> float:
    """J_n(x; k) = integral_0^x k^{2n} t^{2n} dt / sqrt((1-t^2)(1-k^2 t^2)).

    The substitution t = sin(phi) removes the endpoint singularity at
    x = 1 analytically; the phi-integral is smooth and handled by adaptive
    quadrature to ~1e-11 absolute.
    """
    if n < 0:
        raise ValueError(f"order n must be nonnegative, got {n}")
    _check_modulus(k)
    if not 0.0 <= x <= 1.0:
        raise ArgumentOutOfRange(f"endpoint must satisfy 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    z = k * k
    kp2n = k ** (2 * n)
    phi_max = math.asin(x)

    def integrand(phi: float) -> float:
        s = math.sin(phi)
        return kp2n * s ** (2 * n) / math.sqrt(1.0 - z * s * s)

    value, _ = quad(integrand, 0.0, phi_max, epsabs=1e-12, epsrel=1e-12, limit=200)
    return value


def K_unit_modulus(theta: float) -> complex:
    """K at the unit modulus e^{i*theta/2} for 0 < theta < 2*pi.

    Split formula: K(e^{i*phi}) = (1/2) e^{-i*phi/2} (K(cos(phi/2)) +
    i K(sin(phi/2))) with phi = theta/2, so that
    |K(e^{i*theta/2})|^2 = (K^2(cos(theta/4)) + K^2(sin(theta/4))) / 4.
    """
    if not 0.0 < theta < 2.0 * math.pi:
        raise AngleOutOfRange(f"angle must satisfy 0 < theta < 2*pi, got {theta}")
    c = math.cos(theta / 4.0)
    s = math.sin(theta / 4.0)
    if s >= 1.0 - _UNIT_MODULUS_GUARD or c >= 1.0 - _UNIT_MODULUS_GUARD:
        raise DivergentModulus(
            f"theta = {theta} puts a split modulus within {_UNIT_MODULUS_GUARD} of 1"
        )
    Kc = complete_triple(c).K
    Ks = complete_triple(s).K
    return 0.5 * cmath.exp(-0.25j * theta) * complex(Kc, Ks)


def abs2_K_unit_modulus(theta: float) -> float:
    """|K(e^{i*theta/2})|^2 directly from the two real K values."""
    if not 0.0 < theta < 2.0 * math.pi:
        raise AngleOutOfRange(f"angle must satisfy 0 < theta < 2*pi, got {theta}")
    c = math.cos(theta / 4.0)
    s = math.sin(theta / 4.0)
    if s >= 1.0 - _UNIT_MODULUS_GUARD or c >= 1.0 - _UNIT_MODULUS_GUARD:
        raise DivergentModulus(
            f"theta = {theta} puts a split modulus within {_UNIT_MODULUS_GUARD} of 1"
        )
    Kc = complete_triple(c).K
    Ks = complete_triple(s).K
    return 0.25 * (Kc * Kc + Ks * Ks)


def legendre_relation_residual(k: float) -> float:
    """|(-K K' + E K' + K E') - pi/2| with K' = K(k'), k'^2 = 1 - k^2."""
    _check_modulus(k)
    kp = math.sqrt(1.0 - k * k)
    t = complete_triple(k)
    tp = complete_triple(kp)
    return abs(-t.K * tp.K + t.E * tp.K + t.K * tp.E - math.pi / 2.0)
