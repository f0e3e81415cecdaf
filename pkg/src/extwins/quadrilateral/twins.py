"""Twin potentials for the three quadrilateral ansätze, plus explicit families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from ..exactnum import Poly, RationalFunction, RootInterval, as_fraction, as_rational_function, sqrt
from ..exactnum.poly import dense_divmod, dense_strip, is_scalar
from .ansatz import (CalabiAnsatz, Labels, OrthotoricAnsatz, ProductAnsatz, calabi_fit,
                     lebrun_ansatz)
from .metric import (X, Y, AffineFit, ToricMetricData, affine_in_moments, metric_data,
                     vertex_values, weighted_scal)


class NonExtremalError(ValueError):
    """find_twin was given an ansatz whose scalar curvature is not affine."""


@dataclass(frozen=True)
class TwinCertificate:
    kind: str
    coefficients: tuple[Fraction, Fraction, Fraction]  # (lambda, c1, c2)
    residuals: dict
    positive: bool
    vertex_values: tuple
    weighted_scal: AffineFit
    gauge: str = "positive scale with max |coefficient| = 1"

    @property
    def potential(self) -> Poly:
        lam, c1, c2 = self.coefficients
        return Poly.lift(lam) + c1 * Poly.var("mu1") + c2 * Poly.var("mu2")

    def proportional_to(self, coeffs) -> bool:
        """True when coeffs is a positive multiple of the certified potential."""
        coeffs = [as_fraction(v) for v in coeffs]
        mine = self.coefficients
        i = max(range(3), key=lambda k: abs(mine[k]))
        if coeffs[i] == 0 or (coeffs[i] > 0) != (mine[i] > 0):
            return False
        t = coeffs[i] / mine[i]
        return all(coeffs[k] == t * mine[k] for k in range(3))

    def scaled(self, index: int, value) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients rescaled so that entry `index` equals value."""
        t = as_fraction(value) / self.coefficients[index]
        return tuple(t * v for v in self.coefficients)


def _normalize(coeffs, data: ToricMetricData):
    """Positive gauge: max |coef| = 1 and f > 0 at the vertices, or None."""
    coeffs = [as_fraction(v) for v in coeffs]
    m = max(abs(v) for v in coeffs)
    coeffs = [v / m for v in coeffs]
    values = vertex_values(data, data.pullback(*coeffs))
    if all(v < 0 for v in values):
        coeffs = [-v for v in coeffs]
        values = [-v for v in values]
    if not all(v > 0 for v in values):
        return None, tuple(values)
    return tuple(coeffs), tuple(values)


def _require_extremal(data: ToricMetricData) -> AffineFit:
    fit = affine_in_moments(data.scal, data)
    if not fit.is_affine:
        raise NonExtremalError(f"{data.kind} ansatz is not extremal: Scal is not affine")
    return fit


def _twin_direction(ansatz):
    """Non-trivial (lambda, c1, c2) solving the twin conditions, or None."""
    if isinstance(ansatz, CalabiAnsatz):
        A = ansatz.a
        A3, A4 = A[3], A[4]
        if A3 == 0:
            return None, {}
        lam, c1 = 2 * A4, A3
        return (lam, c1, Fraction(0)), {"A3*lambda - 2*c1*A4": A3 * lam - 2 * c1 * A4}
    if isinstance(ansatz, OrthotoricAnsatz):
        A, B = ansatz.a, ansatz.b
        s3, s4 = A[3] + B[3], A[4] + B[4]
        if s3 == 0:
            return None, {}
        lam, c1 = 2 * s4, s3
        return (lam, c1, Fraction(0)), {
            "lambda*(A3+B3) - 2*c1*(A4+B4)": lam * s3 - 2 * c1 * s4}
    if isinstance(ansatz, ProductAnsatz):
        A, B = ansatz.a, ansatz.b
        if A[0] == 0 and B[0] == 0:
            return None, {}
        s1 = A[1] + B[1]
        lam, c1, c2 = s1, 3 * A[0], 3 * B[0]
        return (lam, c1, c2), {
            "A0*c2 - B0*c1": A[0] * c2 - B[0] * c1,
            "3*A0*lambda - c1*(A1+B1)": 3 * A[0] * lam - c1 * s1,
            "3*B0*lambda - c2*(A1+B1)": 3 * B[0] * lam - c2 * s1,
        }
    raise TypeError(f"unsupported ansatz {type(ansatz).__name__}")


def find_twin(ansatz, p: int = 4) -> TwinCertificate | None:
    data = metric_data(ansatz)
    _require_extremal(data)
    if isinstance(ansatz, ProductAnsatz) and ansatz.degree() > 3:
        raise NonExtremalError("product twin conditions assume cubic A and B")
    direction, residuals = _twin_direction(ansatz)
    if direction is None:
        return None
    coeffs, values = _normalize(direction, data)
    if coeffs is None:
        return None
    fit = affine_in_moments(weighted_scal(data, coeffs, p), data)
    if not fit.is_affine:
        return None
    residuals = dict(residuals)
    residuals["weighted scal non-affine part"] = Fraction(0)
    return TwinCertificate(ansatz.kind, coeffs, residuals, True, values, fit)


# Calabi family with two cscS potentials

@dataclass(frozen=True)
class CscsFamily:
    ansatz: CalabiAnsatz
    certificate: TwinCertificate
    scal: Fraction
    potential: tuple[Fraction, Fraction, Fraction]  # lambda = -1 gauge
    both_cscs: bool
    closed_forms: bool


def cscs_family_labels(alpha1, alpha2, C, beta1=0, beta2=1) -> Labels:
    a1, a2, C = as_fraction(alpha1), as_fraction(alpha2), as_fraction(C)
    b1, b2 = as_fraction(beta1), as_fraction(beta2)
    L = a1**2 * (a2 - a1) * C / ((a1**2 + 3 * a1 * a2 + a2**2) * (b2 - b1))
    return Labels(C, -a1**2 * C / a2**2, -L, L)


def cscs_twin_family(alpha1, alpha2, C, beta1=0, beta2=1) -> CscsFamily:
    a1, a2, C = as_fraction(alpha1), as_fraction(alpha2), as_fraction(C)
    b1, b2 = as_fraction(beta1), as_fraction(beta2)
    if not 0 < a1 < a2:
        raise ValueError(f"need 0 < alpha1 < alpha2, got {a1}, {a2}")
    if C <= 0:
        raise ValueError(f"need C > 0, got {C}")
    ansatz = calabi_fit((a1, a2, b1, b2), cscs_family_labels(a1, a2, C, b1, b2))
    K = a1**2 * (a2 - a1) * C
    A_closed = 2 * (X - a1) * (a2 - X) * ((a1 + a2) * X - a1 * a2) / K
    B_closed = 2 * (a1**2 + 3 * a1 * a2 + a2**2) * (Y - b1) * (b2 - Y) / K
    scal_closed = 12 * (a1 + a2) / K
    data = metric_data(ansatz)
    scal = data.scal.simplify()
    cert = find_twin(ansatz)
    potential = (Fraction(-1), (a1 + a2) / (a1 * a2), Fraction(0))
    weighted = weighted_scal(data, potential, 4)
    f = data.pullback(*potential)
    both = is_scalar(scal) and (weighted - scal * as_rational_function(f)).is_zero()
    closed = (ansatz.A == A_closed and ansatz.B == B_closed and scal == scal_closed)
    if cert is None:
        raise ArithmeticError("Calabi family produced no twin certificate")
    return CscsFamily(ansatz, cert, scal, potential, both, closed)


def calabi_lattice_ell(alpha, C=1):
    """The four label functions of the normalized Calabi polytope, in (u, v)."""
    a, C = as_fraction(alpha), as_fraction(C)
    u, v = Poly.var("u"), Poly.var("v")
    F = (a - 1) / (1 + 3 * a + a * a)
    return (-C + C * u, C * F * v, C - C * u / a, C * F * u - C * F * v)


def lattice_labels(alpha) -> tuple[int, int, int, int] | None:
    """Coprime (k1, k2, k3, k4) with sum k_i l_i = 0, k1 = k3, k2 = k4."""
    a = as_fraction(alpha)
    if a <= 1:
        return None
    r = a / (1 + 3 * a + a * a)  # = -k3/k4 in lowest terms
    k3, k4 = -r.numerator, r.denominator
    assert gcd(k3, k4) == 1
    return (k3, k4, k3, k4)


# weighted product family on P1 x P1

@dataclass(frozen=True)
class LebrunResult:
    ansatz: ProductAnsatz
    scal_f4: RationalFunction
    affine: tuple  # (constant, y-coefficient)
    matches_closed_form: bool
    symmetric_in_c: bool
    twin_pair: tuple
    cscs_c: tuple | None


def lebrun_scal_closed_form(alpha, beta, c):
    """The closed form of Scal_{f,4} for f = alpha^2 + beta^2 + c y."""
    q = alpha**2 + beta**2
    den = alpha * beta * (3 * q**2 - beta**2 * c**2)
    const = 6 * ((alpha + beta) * q**4 - 6 * alpha * beta**2 * q**2 * c**2
                 + (alpha - beta) * beta**4 * c**4)
    slope = -12 * c * (q * ((2 * alpha - beta) * q**2 + beta**3 * c**2))
    return as_rational_function(const + slope * Y) / den


def lebrun_cscs_c_squared(alpha, beta) -> Fraction | None:
    a, b = as_fraction(alpha), as_fraction(beta)
    if a == b:
        return None
    q = a * a + b * b
    c2 = (b - 5 * a) * q * q / ((b - a) * b * b)
    if not 0 < c2 * b * b < q * q:
        return None
    return c2


def _vanishes_mod_square(rf: RationalFunction, var: str, c2: Fraction) -> bool:
    """rf(c) = 0 for both roots of c^2 = c2 (denominator checked nonzero)."""
    def reduce(p: Poly):
        dense = [Fraction(v) for v in p.coeffs(var)] if var in p.variables else [p.constant_value()]
        _, rem = dense_divmod(dense, [-c2, Fraction(0), Fraction(1)])
        return dense_strip(rem)
    if rf.variables - {var}:
        raise ValueError("expected a rational function of one variable")
    return not reduce(rf.num) and bool(reduce(rf.den))


def product_lebrun(alpha, beta, c) -> LebrunResult:
    alpha, beta = as_fraction(alpha), as_fraction(beta)
    symbolic = isinstance(c, Poly)
    ansatz = lebrun_ansatz(alpha, beta, c)
    q = alpha**2 + beta**2
    data = metric_data(ansatz)
    scal_f4 = weighted_scal(data, (q, 0, c), 4, check_positive=not symbolic)
    reference = lebrun_scal_closed_form(alpha, beta, c)
    matches = (scal_f4 - reference).is_zero()
    const = scal_f4.coefficient("y", 0)
    slope = scal_f4.coefficient("y", 1)
    affine_ok = "x" not in scal_f4.variables and (scal_f4 - const - slope * Y).is_zero()
    neg_c = -c
    symmetric = (as_rational_function(ansatz.B)
                 - as_rational_function(lebrun_ansatz(alpha, beta, neg_c).B)).is_zero()
    c2 = lebrun_cscs_c_squared(alpha, beta)
    roots = None
    if c2 is not None:
        root = sqrt(c2)
        roots = (root, -root)
    return LebrunResult(ansatz, scal_f4, (const.simplify(), slope.simplify()),
                        matches and affine_ok, symmetric, (c, neg_c), roots)


def lebrun_cscs_verified(alpha, beta) -> bool:
    """Both cscS roots make Scal_{f,4}/f constant, checked symbolically in c."""
    c2 = lebrun_cscs_c_squared(alpha, beta)
    if c2 is None:
        return False
    res = product_lebrun(alpha, beta, Poly.var("c"))
    const, slope = (as_rational_function(v) for v in res.affine)
    q = as_fraction(alpha) ** 2 + as_fraction(beta) ** 2
    # P0 + P1 y proportional to q + c y  <=>  P0 c - P1 q = 0
    cross = const * Poly.var("c") - slope * q
    return _vanishes_mod_square(cross, "c", c2)


def lebrun_rays(alpha, beta) -> tuple | None:
    """(lambda, c1, c2) rays of the two cscS potentials, or None."""
    c2 = lebrun_cscs_c_squared(alpha, beta)
    if c2 is None:
        return None
    q = as_fraction(alpha) ** 2 + as_fraction(beta) ** 2
    root = sqrt(c2)
    return ((q, Fraction(0), root), (q, Fraction(0), -root))


# sign analyses behind the no-twin statements

@dataclass(frozen=True)
class SignAnalysis:
    feasible: bool
    cases: tuple  # (sign of leading coefficient, A positive, B positive)


def _positive_between(p: Poly, var: str, lo, hi) -> bool:
    from ..exactnum import isolate_real_roots
    if isolate_real_roots(p, lo, hi):
        return False
    return p.subs({var: (Fraction(lo) + Fraction(hi)) / 2}) > 0


def calabi_degenerate_feasible(params) -> SignAnalysis:
    """Can A3 = A4 = 0 occur?  Then A = A0 x^2 (x - a1)(x - a2) and
    B = -A2 (y - b1)(y - b2) with A2 = A0 a1 a2; try both signs of A0."""
    a1, a2, b1, b2 = (as_fraction(v) for v in params)
    cases = []
    for sign in (1, -1):
        A = sign * X**2 * (X - a1) * (X - a2)
        A2 = sign * a1 * a2
        B = -A2 * (Y - b1) * (Y - b2)
        slopes = (A.diff("x")(a1) > 0, A.diff("x")(a2) < 0,
                  B.diff("y")(b1) > 0, B.diff("y")(b2) < 0)
        cases.append((sign, _positive_between(A, "x", a1, a2) and all(slopes[:2]),
                      _positive_between(B, "y", b1, b2) and all(slopes[2:])))
    return SignAnalysis(any(pa and pb for _, pa, pb in cases), tuple(cases))


def orthotoric_antisymmetric_feasible(params) -> SignAnalysis:
    """Can A = -B as quartics?  Then A vanishes at b1, b2, a1, a2."""
    a1, a2, b1, b2 = (as_fraction(v) for v in params)
    T = Poly.var("t")
    cases = []
    for sign in (1, -1):
        A = sign * (T - a1) * (T - a2) * (T - b1) * (T - b2)
        B = -A
        cases.append((sign, _positive_between(A, "t", a1, a2),
                      _positive_between(B, "t", b1, b2)))
    return SignAnalysis(any(pa and pb for _, pa, pb in cases), tuple(cases))


def orthotoric_g(ansatz: OrthotoricAnsatz, coeffs, p: int = 4) -> Poly:
    """g(x, y) = (x - y) Scal_{f,p}; a polynomial."""
    data = metric_data(ansatz)
    w = weighted_scal(data, coeffs, p, check_positive=False) * (X - Y)
    return w.as_poly()


# bridge to the Hirzebruch profiles

@dataclass(frozen=True)
class HirzebruchBridge:
    ansatz: CalabiAnsatz
    kappa: Fraction
    x: Fraction
    certificate: TwinCertificate | None

    def b(self) -> Fraction | None:
        """Partner weight after the gauge lambda + c1 kappa = 1."""
        if self.certificate is None:
            return None
        lam, c1, _ = self.certificate.coefficients
        t = 1 / (lam + c1 * self.kappa)
        return t * c1 * self.kappa * self.x


def hirzebruch_calabi_ansatz(surface, x, kappa=1, beta=(0, 1)) -> CalabiAnsatz:
    """Calabi toric data realizing the extremal admissible metric of class x."""
    from ..hirzebruch import profile
    from ..hirzebruch.surface import base_scalar
    s = base_scalar(surface)
    x, kappa = as_fraction(x), as_fraction(kappa)
    b1, b2 = (as_fraction(v) for v in beta)
    if s <= 0:
        raise ValueError("the Calabi toric picture needs s > 0")
    F = profile(s, x, 0).F
    zdot = (X / kappa - 1) / x
    A = kappa**3 * x**2 * F.subs({"z": zdot})
    B = s * kappa * x * (Y - b1) * (b2 - Y)
    a1, a2 = kappa * (1 - x), kappa * (1 + x)
    dA, dB = A.diff("x"), B.diff("y")
    labels = Labels(2 / dA(a1), 2 / dA(a2), -2 / dB(b1), -2 / dB(b2))
    return CalabiAnsatz((a1, a2, b1, b2), labels, A, B)


def hirzebruch_bridge(surface, x, kappa=1) -> HirzebruchBridge:
    ansatz = hirzebruch_calabi_ansatz(surface, x, kappa)
    return HirzebruchBridge(ansatz, as_fraction(kappa), as_fraction(x), find_twin(ansatz))
