"""Named verification checks: every structural invariant of the library,
runnable as a batch with machine-readable results.

Each check returns a CheckResult with the measured quantity in `detail`,
so a report diff shows what moved.  Randomized checks use fixed seeds;
two runs with the same configuration produce identical output.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import elliptic, lbp, szego, transforms, verify
from .exactnum import Poly, TruncatedSeries, hyp2f1_series, pochhammer, series_divide


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "pass": self.passed,
            "detail": self.detail,
        }


def _result(suite: str, name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(suite=suite, name=name, passed=bool(passed), detail=detail)


# ---------------------------------------------------------------------------
# exactnum


def _check_exactnum(cfg) -> list[CheckResult]:
    out = []
    rng = random.Random(20061007)

    ok = True
    for _ in range(25):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        s = hyp2f1_series(a, b, c, 12)
        for m in range(12):
            lhs = s.coeffs[m + 1] * (c + m) * (m + 1)
            rhs = s.coeffs[m] * (a + m) * (b + m)
            ok = ok and lhs == rhs
    out.append(_result("exactnum", "hyp2f1 coefficient ratio", ok))

    ok = True
    for _ in range(25):
        num = TruncatedSeries([Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(9)])
        den_coeffs = [Fraction(1)] + [
            Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(8)
        ]
        den = TruncatedSeries(den_coeffs)
        q = series_divide(num, den)
        ok = ok and (q * den).coeffs == num.coeffs
    out.append(_result("exactnum", "series divide-multiply roundtrip", ok))

    ok = True
    for _ in range(50):
        x, y, z = (Fraction(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(3))
        ok = ok and (x + y) + z == x + (y + z) and x * y == y * x
        ok = ok and x * (y + z) == x * y + x * z
    out.append(_result("exactnum", "rational field laws", ok))
    return out


# ---------------------------------------------------------------------------
# elliptic


def _check_elliptic(cfg) -> list[CheckResult]:
    out = []
    rng = random.Random(42)
    worst = max(
        elliptic.legendre_relation_residual(rng.uniform(0.01, 0.99)) for _ in range(100)
    )
    out.append(
        _result("elliptic", "legendre relation, 100 random moduli", worst < 1e-11, f"max residual {worst:.3e}")
    )

    worst = 0.0
    for k in (0.3, 0.6, 0.9):
        for n in range(2, 11):
            r = (
                (2 * n - 1) * elliptic.complete_Jn(n, k)
                - (2 * n - 2) * (1 + k * k) * elliptic.complete_Jn(n - 1, k)
                + k * k * (2 * n - 3) * elliptic.complete_Jn(n - 2, k)
            )
            worst = max(worst, abs(r) / abs((2 * n - 1) * elliptic.complete_Jn(n, k)))
    out.append(
        _result("elliptic", "J_n three-term relation at x=1", worst < 1e-10, f"max rel residual {worst:.3e}")
    )

    xs = [0.05 * i for i in range(1, 20)]
    vals = [elliptic.incomplete_Jn(2, x, 0.75) for x in xs]
    mono = all(b >= a for a, b in zip(vals, vals[1:]))
    out.append(_result("elliptic", "incomplete J_n monotone in x", mono))

    worst = max(
        abs(
            elliptic.K_unit_modulus(2 * math.pi - t)
            - elliptic.K_unit_modulus(t).conjugate()
        )
        for t in (0.3, 1.1, 2.2, math.pi, 4.0, 5.5)
    )
    out.append(
        _result("elliptic", "unit-modulus conjugation symmetry", worst < 1e-12, f"max deviation {worst:.3e}")
    )
    return out


# ---------------------------------------------------------------------------
# lbp


def _check_lbp(cfg) -> list[CheckResult]:
    out = []
    fam = lbp.hermite_family()

    ok = all(lbp.wronskian_residual(n).is_zero() for n in range(1, 51))
    out.append(_result("lbp", "Wronskian identity n<=50", ok))

    seq = lbp.assoc_AB(0, 25)
    ok = all(
        seq[n][0] == lbp.explicit_A_series(n) == lbp.explicit_A_legendre(n)
        for n in range(26)
    )
    out.append(_result("lbp", "A_n triple construction agreement n<=25", ok))

    families = [fam, lbp.associated_family(1), lbp.associated_family(2)]
    ok = True
    for f in families:
        mom = lbp.exact_moments(f, 12)
        polys = lbp.monic_P(f, 12)
        ok = ok and all(
            mom.pair(polys[n], -j) == 0 for n in range(1, 13) for j in range(n)
        )
        oracle = lbp.moments_from_orthogonality(f, 12)
        ok = ok and all(mom[s] == oracle[s] for s in range(-11, 13))
    mom = lbp.exact_moments(fam, 12)
    ok = ok and [mom[i] for i in range(4)] == [1, -1, Fraction(-1, 8), Fraction(-1, 16)]
    ok = ok and all(mom[-n] == -mom[n + 1] for n in range(1, 12))
    out.append(_result("lbp", "exact moment orthogonality, three families", ok))

    polys = lbp.monic_P(fam, 30)
    ok = all(
        polys[n].degree == n and polys[n].coeffs[-1] == 1 for n in range(1, 31)
    ) and all(
        polys[n][m] == polys[n][n - m] for n in range(31) for m in range(n + 1)
    )
    out.append(_result("lbp", "monic degree and palindromes n<=30", ok))

    ok = all(lbp.xi_constant(n) * polys[n] == seq[n][0] for n in range(26))
    ok = ok and all(
        polys[n](Fraction(1)) == lbp.G_value(n) / lbp.xi_constant(n) for n in range(26)
    )
    out.append(_result("lbp", "xi bridge and P_n(1) = G_n/xi_n, n<=25", ok))

    ok = True
    for f in (fam, lbp.stieltjes_carlitz_family(1), lbp.stieltjes_carlitz_family(4)):
        ok = ok and lbp.same_coefficients(
            lbp.reciprocal_family(lbp.reciprocal_family(f)), f, 15
        )
    out.append(_result("lbp", "reciprocal involution", ok))

    ok = True
    G = [lbp.G_value(n) for n in range(21)]
    for alpha, beta in ((1, 0), (0, 1), (2, -3)):
        psi = [alpha + beta * G[n] for n in range(21)]
        ok = ok and all(
            (2 * n + 1) * psi[n] - 4 * n * psi[n - 1] + (2 * n - 1) * psi[n - 2] == 0
            for n in range(2, 21)
        )
    out.append(_result("lbp", "general solution alpha + beta G_n at z=1", ok))

    rep = lbp.sc_coefficient_tables(0, 8)
    flags = set(rep.flagged)
    ok = all((n, "b*") in flags for n in range(2, 9))
    ok = ok and (1, "b*") not in flags and not any(w == "d*" for _, w in flags)
    ok = ok and (0, "d^") in flags
    ok = ok and not any(w in ("b^", "d^") and n >= 1 for n, w in flags)
    rep4 = lbp.sc_coefficient_tables(4, 8)
    ok = ok and not any(w in ("b^", "d^") and n >= 1 for n, w in rep4.flagged)
    out.append(
        _result(
            "lbp",
            "Stieltjes-Carlitz printed-form comparison",
            ok,
            f"flagged p2=0: {sorted(flags)}; p2=4: {sorted(set(rep4.flagged))}",
        )
    )
    return out


# ---------------------------------------------------------------------------
# transforms


def _check_transforms(cfg) -> list[CheckResult]:
    out = []
    fam = lbp.hermite_family()

    base = lbp.monic_P(fam, 21)
    U = transforms.christoffel_U(fam, 1, 20).U
    ok = True
    for n in range(20):
        num = base[n + 1] - U[n] * base[n]
        ok = ok and num.divexact_linear(1) * Poly([-1, 1]) == num
    out.append(_result("transforms", "exact division by (z - mu), n<=20", ok))

    tf, tpolys, mmap = transforms.christoffel(fam, 1, 20)
    ok = all(lbp.monic_P(tf, 20)[n] == tpolys[n] for n in range(21))
    gf, gpolys, gdata = transforms.geronimus(fam, 1, 1, 20)
    ok = ok and all(lbp.monic_P(gf, 20)[n] == gpolys[n] for n in range(21))
    out.append(_result("transforms", "coefficient/polynomial agreement, CT and GT", ok))

    tmom = mmap(lbp.exact_moments(fam, 12))
    ok = all(tmom[n] == tmom[-n] for n in range(11))
    out.append(_result("transforms", "moment symmetry after CT at mu=1", ok))

    part = lbp.partner_polys(fam, 15)
    ct0 = transforms.christoffel_zero_polys(fam, 15)
    ok = all(part[n] == ct0[n] for n in range(16))
    c0 = transforms.christoffel_zero(fam, 30)
    ok = ok and c0.d(0) == Fraction(1, 8)
    ok = ok and all(c0.d(n) == Fraction(-n, n + 2) for n in range(1, 31))
    ok = ok and all(
        c0.b(n) == -Fraction((2 * n + 1) ** 2, 4 * (n + 1) * (n + 2))
        for n in range(1, 31)
    )
    out.append(_result("transforms", "partner equals CT at mu=0; closed forms", ok))

    ok = all(
        gdata.phi[n]
        == pochhammer(Fraction(3, 2), n)
        / pochhammer(1, n)
        * (3 * lbp.G_value(n) - 2)
        for n in range(21)
    )
    ok = ok and transforms.ct_gt_roundtrip(fam, 1, 1, 10)
    ok = ok and transforms.ct_gt_roundtrip(fam, 1, 2, 10)
    ok = ok and gdata.mass_times_2pi == Fraction(1, 2)
    out.append(_result("transforms", "Geronimus closed forms and CT/GT roundtrip", ok))
    return out


# ---------------------------------------------------------------------------
# szego


def _check_szego(cfg) -> list[CheckResult]:
    out = []
    refl = szego.reflection_params(0, 200)
    ok = all(Fraction(-1) < a < 0 for a in refl.a)
    ok = ok and refl[0] == Fraction(-7, 16) and refl[1] == Fraction(-19, 69)
    out.append(
        _result("szego", "reflection parameters: closed = ratio form, in (-1,0), n<200", ok)
    )

    pol = szego.szego_polys(16)
    ok = all(
        szego.szego_recurrence_residual(pol.polys, refl.a, n).is_zero()
        for n in range(16)
    )
    ok = ok and all(refl[n] == -pol[n + 1](Fraction(0)) for n in range(16))
    out.append(_result("szego", "Szego recurrence residual zero, n<=15", ok))

    fam = lbp.hermite_family()
    sym = szego.symmetric_S(fam, 50)
    du = szego.dg_map_u(50)
    ok = all(
        du[n] == sym.u[n] == Fraction((2 * n + 1) ** 2, 4 * n * (n + 1))
        for n in range(1, 51)
    )
    ok = ok and sym[1] == Poly.x() and sym[2] == Poly([Fraction(-9, 8), 0, 1])
    out.append(_result("szego", "u chain: DG map = palindromic rewrite = closed form", ok))

    basis = szego._pair_basis(12)
    ok = True
    for n in range(1, 13):
        q = pol[n] + pol[n].reverse(n)
        s = Poly.zero()
        for m in range(n // 2 + 1, n + 1):
            s = s + q[m] * basis[2 * m - n]
        if n % 2 == 0:
            s = s + Poly([q[n // 2]])
        ok = ok and s * (1 / (1 - refl[n - 1])) == sym[n]
    out.append(_result("szego", "DG construction equals direct rewrite, n<=12", ok))

    rng = random.Random(3)
    worst = max(
        abs(
            szego.interval_w(2 * math.cos(t / 2)) * math.sin(t / 2)
            - szego.circle_rho_tilde(t)
        )
        for t in (rng.uniform(0.05, 2 * math.pi - 0.05) for _ in range(50))
    )
    out.append(
        _result("szego", "w(2cos(theta/2)) sin(theta/2) = rho~", worst < 1e-12, f"max deviation {worst:.3e}")
    )

    good = lbp.custom_family(lambda n: Fraction(-1, n), lambda n: Fraction(-1))
    try:
        szego.symmetric_S(good, 8)
        ok = True
    except szego.NotPalindromic:
        ok = False
    perturbed = lbp.custom_family(
        lambda n: Fraction(-1, n), lambda n: Fraction(-1) if n != 3 else Fraction(-2)
    )
    try:
        szego.symmetric_S(perturbed, 8)
        ok = False
    except szego.NotPalindromic:
        pass
    out.append(_result("szego", "d_n = -1 criterion is necessary and sufficient", ok))
    return out


# ---------------------------------------------------------------------------
# verify (quadrature and approximation checks)


def _check_verify(cfg) -> list[CheckResult]:
    out = []
    nodes = cfg["quad_nodes"]
    tol = cfg["tol"]

    ok = True
    for n in range(1, 26):
        A, B = lbp.assoc_AB(0, n)[n]
        z = Fraction(1, 3)
        ok = ok and verify.tfraction_convergent(n, z) == B(z) / A(z)
    t = elliptic.complete_triple(math.sqrt(0.5))
    err = abs(verify.tfraction_convergent(30, 0.5) - t.J / t.K)
    out.append(
        _result(
            "verify",
            "T-fraction: exact = B_n/A_n (n<=25); float n=30 near J/K",
            ok and err < 3e-10,
            f"n=30 z=0.5 error {err:.3e}",
        )
    )

    ok = all(verify.pade_order_check(j, n) for j in (0, 1, 2) for n in range(11))
    ok = ok and all(verify.pade_reciprocal_check(n) for n in range(1, 9))
    out.append(_result("verify", "two-point contact order, j<=2 n<=10, both ends", ok))

    r = verify.szego_gram(max(nodes, 2048), 6, tol=1e-8)
    out.append(
        _result(
            "verify",
            "Szego circle Gram",
            r.passed,
            f"offdiag {r.max_offdiag_rel:.3e}, diag-ratio {max(r.diag_ratio_errors):.3e} @ {r.nodes} nodes",
        )
    )

    r = verify.hermite_biorthogonality_gram(max(nodes, 2048), 5, tol=1e-7)
    out.append(
        _result(
            "verify",
            "base-family biorthogonality Gram (complex weight)",
            r.passed,
            f"offdiag {r.max_offdiag_rel:.3e} @ {r.nodes} nodes",
        )
    )

    r = verify.geronimus_gram(1, max(nodes, 2048), 5, tol=1e-6)
    out.append(
        _result(
            "verify",
            "mass-point (Geronimus) Gram, chi=1",
            r.passed,
            f"offdiag {r.max_offdiag_rel:.3e}, grid mass {r.extra['mass_grid_consistent']:.9f}, "
            f"working closed form {r.extra['mass_closed_form_working']}",
        )
    )

    r = verify.interval_gram(max(nodes // 2, 512), 8, tol=1e-8)
    out.append(
        _result(
            "verify",
            "interval Gram on [-2,2]",
            r.passed,
            f"offdiag {r.max_offdiag_rel:.3e}, opp-parity {r.extra['max_opposite_parity']:.1e}",
        )
    )

    mw = verify.moment_weight_check(6, max(nodes, 1024))
    out.append(
        _result(
            "verify",
            "contour moments of the weight reproduce c_n, |n|<=6",
            mw["max_abs_err"] < 1e-9,
            f"max abs err {mw['max_abs_err']:.3e}",
        )
    )

    i0 = verify.geronimus_mass_precise(400)
    out.append(
        _result(
            "verify",
            "regular-part integral I_0 = 1",
            abs(i0 - 1.0) < 1e-12,
            f"I_0 = {i0:.15f}",
        )
    )
    return out


_SUITES = {
    "exactnum": _check_exactnum,
    "elliptic": _check_elliptic,
    "lbp": _check_lbp,
    "transforms": _check_transforms,
    "szego": _check_szego,
    "verify": _check_verify,
}


def suite_names() -> list[str]:
    return list(_SUITES)


def run_suite(
    names: list[str] | None = None,
    quad_nodes: int = 1024,
    tol: float = 1e-8,
) -> list[CheckResult]:
    """Run the requested suites ('all' or any of suite_names())."""
    if not names or "all" in names:
        selected = list(_SUITES)
    else:
        unknown = [n for n in names if n not in _SUITES]
        if unknown:
            raise KeyError(f"unknown suite(s): {', '.join(unknown)}")
        selected = [n for n in _SUITES if n in names]
    cfg = {"quad_nodes": quad_nodes, "tol": tol}
    results: list[CheckResult] = []
    for name in selected:
        results.extend(_SUITES[name](cfg))
    return results
