"""The reproduction suite: one check per acceptance item.

Each check returns a Check with a short human-readable detail string.
Samples are drawn from a seeded generator so that runs are reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import gcd
from typing import Callable

from .exactnum import (Poly, RationalFunction, RootInterval, determinant, evaluate_algebraic,
                       isolate_real_roots, sqrt)
from .hirzebruch import (SurfaceClass, cscs_root, cscs_twin, degenerate_classes, em_roots,
                         extremal_affine_coeffs, genus_twin, join_params, lebrun_em_roots,
                         page_class_root, profile, profile_from_integral, residual_enclosure,
                         twin_conic, twin_of)
from .hirzebruch import formulas
from .hirzebruch.profile import boundary_conditions_hold
from .quadrilateral import (OrthotoricAnsatz, calabi_degenerate_feasible, calabi_from_A,
                            calabi_lattice_ell, cscs_twin_family, find_twin, hirzebruch_bridge,
                            lattice_labels, lebrun_cscs_verified, lebrun_rays,
                            orthotoric_antisymmetric_feasible, orthotoric_from_A, product_fit,
                            product_lebrun)
from .toric_polytope import (build_twin_system, cscs_line_property, load_polytope, simplex_model,
                             simplex_twin_check, solve_twin_system_2d, vertex_twin_residual_full)

TOL = Fraction(1, 10**12)
SEED = 20240517


@dataclass(frozen=True)
class Check:
    number: int
    tag: str
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} ({self.tag}) {self.title}: {self.detail}"


def _rng(k: int) -> random.Random:
    return random.Random(SEED + k)


def _rand_fraction(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 97) -> Fraction:
    """Uniform-ish rational strictly inside (lo, hi)."""
    while True:
        q = rng.randint(2, den)
        v = lo + (hi - lo) * Fraction(rng.randint(1, q - 1), q)
        if lo < v < hi:
            return v


def data_path(name: str):
    return resources.files("extwins.data").joinpath(name)


def _sqrt5_expr(expr) -> RootInterval | Fraction:
    return evaluate_algebraic(expr, {"r": sqrt(5)})


def check_1() -> tuple[bool, str]:
    c = cscs_root(2, Fraction(1, 3))
    r = Poly.var("r")
    expected = _sqrt5_expr((5 - 2 * r) / 5)
    # (5 - 2 sqrt5)/5 is the smaller root of 5c^2 - 10c + 1
    C = Poly.var("t")
    minimal_ok = isinstance(c, RootInterval) and c.sign_of(5 * C**2 - 10 * C + 1) == 0
    width = c.refine(TOL).width
    pair = cscs_twin(2, Fraction(1, 3))
    b_expected = _sqrt5_expr(RationalFunction(-45 + 19 * r, 25 + 9 * r))
    res = pair.residual if pair else None
    res_ok = res is not None and res.contains_zero() and max(abs(res.lo), abs(res.hi)) < TOL
    ok = bool(c == expected and minimal_ok and width <= TOL and pair and pair.b == b_expected
              and res_ok)
    return ok, f"c={c.to_decimal(13)}, b={pair.b.to_decimal(13) if pair else None}, |res|<{float(TOL)}"


def check_2() -> tuple[bool, str]:
    c = cscs_root(2, Fraction(1, 2))
    expected = evaluate_algebraic((4 - Poly.var("r")) / 3, {"r": sqrt(13)})
    pair = twin_of(2, Fraction(1, 2), c)
    ok = c == expected and cscs_twin(2, Fraction(1, 2)) is None and pair is not None and pair.bifurcation
    return ok, f"c={c.to_decimal(13)}, partner equals c (bifurcation), cscs_twin -> none"


def check_3() -> tuple[bool, str]:
    rng = _rng(3)
    s_values = [Fraction(2), Fraction(1), Fraction(2, 3), Fraction(0), Fraction(-2)]
    Z = Poly.var("z")
    bad = 0
    for i in range(200):
        s = s_values[i % len(s_values)]
        x = _rand_fraction(rng, Fraction(0), Fraction(1))
        c = _rand_fraction(rng, Fraction(-1), Fraction(1))
        if formulas.profile_denominator(x, c) == 0:
            continue
        prof = profile(s, x, c)
        F_int = profile_from_integral(s, x, c)
        if F_int != (1 - Z**2) * prof.P or not boundary_conditions_hold(F_int, x):
            bad += 1
    return bad == 0, f"200 samples, {bad} mismatches"


def check_4() -> tuple[bool, str]:
    rng = _rng(4)
    bad = 0
    for _ in range(50):
        x = _rand_fraction(rng, Fraction(0), Fraction(1))
        expected = -x * (1 - 4 * x + x * x) / (1 + 2 * x - 3 * x * x + 2 * x**3)
        pair = twin_of(2, x, 0)
        if -1 < expected < 1:
            bad += pair is None or pair.b != expected or not pair.exact
        else:
            bad += pair is not None
    X = Poly.var("x")
    rf = formulas.twin_partner(Fraction(2), X, Fraction(0))
    identity = (RationalFunction(-X * (1 - 4 * X + X**2), 1 + 2 * X - 3 * X**2 + 2 * X**3) - rf).is_zero()
    r = isolate_real_roots(X**2 - 4 * X + 1, 0, 1)[0]
    bif = twin_of(2, r, 0)
    bif_ok = bif is not None and bif.bifurcation and bif.b == 0
    xp = page_class_root()
    xp_ok = (len(isolate_real_roots(5 * X**4 - 16 * X**3 + 18 * X**2 - 3, 0, 1)) == 1
             and round(float(xp.refine(TOL)), 2) == 0.52)
    ok = bad == 0 and identity and bif_ok and xp_ok
    return ok, (f"50 samples ({bad} bad), symbolic identity {identity}, bifurcation at 2-sqrt3 "
                f"{bif_ok}, x_P={xp.to_decimal(12)}")


def check_5() -> tuple[bool, str]:
    roots = em_roots(2, Fraction(4, 5))
    triple = (len(roots) == 1 and roots[0].exact == Fraction(1, 2) and roots[0].multiplicity == 3)
    rng = _rng(5)
    bad = 0
    for _ in range(20):
        x = _rand_fraction(rng, Fraction(4, 5), Fraction(1))
        em = lebrun_em_roots(x)
        a21, a22 = em["a21"], em["a22"]
        pair = twin_of(2, x, a21)
        if pair is None or pair.b != a22:
            bad += 1
            continue
        res = residual_enclosure(2, x, a21, a22)
        if not res.contains_zero() or res.width > 2 * TOL:
            bad += 1
        for a in (a21, a22):
            A1, _ = extremal_affine_coeffs(2, x, a)
            if A1 != 0:
                bad += 1
    return triple and bad == 0, f"triple root 1/2 at x=4/5 {triple}; 20 samples, {bad} failures"


def check_6() -> tuple[bool, str]:
    bad = 0
    for n in range(3, 11):
        if formulas.twin_residual(Fraction(2, n), Fraction(1, n), Fraction(1, n), Fraction(-2, n)) != 0:
            bad += 1
    for n in range(2, 11):
        bn = Fraction(-n * (n * n - 3), n**4 - n * n + 2)
        pair = twin_of(Fraction(2, n), Fraction(1, n), 0)
        if pair is None or pair.b != bn or not -1 < bn < 1:
            bad += 1
    return bad == 0, f"{bad} failures over n=3..10 and n=2..10"


def check_7() -> tuple[bool, str]:
    s, x = Poly.var("s"), Poly.var("x")
    B, D, F = formulas.conic_coefficients(s, x)
    det = formulas.conic_determinant(s, x)
    matrix_det = determinant(formulas.conic_matrix(s, x))
    closed = B * (D * D - B * F) / 4
    factored = x * (3 * x * x - 2 * s * x - 1) * (1 - x * x) ** 2 * (1 + 2 * s * x + (s * s - 3) * x * x) / 4
    identity = (RationalFunction(det) == RationalFunction(closed) == RationalFunction(factored)
                and RationalFunction(matrix_det) == RationalFunction(closed))
    rng = _rng(7)
    nondeg = 0
    for s_val in (Fraction(1), Fraction(2)):
        for _ in range(25):
            xv = _rand_fraction(rng, Fraction(0), Fraction(1))
            nondeg += formulas.conic_determinant(s_val, xv) != 0
    s23 = Fraction(2, 3)
    roots = degenerate_classes(s23)
    r = Poly.var("r")
    # the closed-form classes (sqrt(s^2+3)+s)/3 and -(s+sqrt3)/(s^2-3)
    closed = [evaluate_algebraic((r + s23) / 3, {"r": sqrt(s23**2 + 3)}),
               evaluate_algebraic(-(s23 + r) / (s23**2 - 3), {"r": sqrt(3)})]
    X = Poly.var("x")
    zeroed = all(evaluate_algebraic(formulas.conic_determinant(s23, X), {"x": v}) == 0
                 for v in closed)
    same = len(roots) == 2 and all(a == b for a, b in zip(roots, closed))
    empty = all(twin_conic(s23, v).solutions_in_square is False for v in closed)
    ok = identity and nondeg == 50 and zeroed and same and empty
    return ok, (f"symbolic identity {identity}; {nondeg}/50 nondegenerate; s=2/3 closed-form classes "
                f"zero the determinant {zeroed}, no solutions in the square {empty}")


GENUS_CASES = (
    ((11, 9, 1), lambda g: Fraction(g + 19, 10 * g - 107)),
    ((11, 9, 2), lambda g: Fraction(g + 39, 2 * (5 * g - 102))),
    ((51, 50, 1), lambda g: Fraction(g + 100, 101 * g - 5200)),
    ((51, 50, 3), lambda g: Fraction(g + 302, 101 * g - 15398)),
)


def check_8() -> tuple[bool, str]:
    bad = 0
    parity_ok = True
    for g in range(0, 31):
        in_range = {True: False, False: False}
        for (w1, w2, l1), formula in GENUS_CASES:
            jd = join_params(w1, w2, l1)
            res = genus_twin(SurfaceClass(g, jd.n), jd.x)
            if res.b != formula(g):
                bad += 1
            if (-1 < formula(g) < 1) != res.in_range:
                bad += 1
            in_range[jd.twisted] = in_range[jd.twisted] or res.in_range
        parity_ok = parity_ok and in_range[True] and in_range[False]
    return bad == 0 and parity_ok, f"g=0..30: {bad} mismatches; both parities in range {parity_ok}"


def check_9() -> tuple[bool, str]:
    square = load_polytope(data_path("square.txt"))
    sq_sys = build_twin_system(square)
    w0, w1, w2 = Poly.var("w0"), Poly.var("w1"), Poly.var("w2")
    full = vertex_twin_residual_full(sq_sys.equations[0].vertex, (w0, w1, w2))
    sq_factor = len(sq_sys.equations) == 1 and Poly.lift(full) == -2 * (w1 - w0) * (w2 - w0)
    sq_cls = solve_twin_system_2d(sq_sys)
    hexagon = load_polytope(data_path("hexagon.txt"))
    hex_cls = solve_twin_system_2d(build_twin_system(hexagon))
    simplex = load_polytope(data_path("simplex.txt"))
    simplex_sys = build_twin_system(simplex)
    rng = _rng(9)
    affine_bad = 0
    for n in (1, 2, 3):
        model = simplex_model(n)
        count = 0
        while count < 50:
            f = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n + 1)]
            if not all(f[0] + sum(fi * vi for fi, vi in zip(f[1:], v)) > 0 for v in model.vertices()):
                continue
            count += 1
            affine_bad += not simplex_twin_check(n, f, model=model).is_affine
    ok = (sq_factor and sq_cls.kind == "union-of-lines" and hex_cls.kind == "only-diagonal"
          and not simplex_sys.equations and affine_bad == 0)
    return ok, (f"square -2(w1-w0)(w2-w0) {sq_factor}, hexagon {hex_cls.kind}, simplex "
                f"{len(simplex_sys.equations)} equations, {affine_bad} non-affine of 150")


def check_10() -> tuple[bool, str]:
    ok = True
    for n in (1, 2, 3, 4):
        model = simplex_model(n)
        for j, xj in enumerate(model.coords):
            diff = RationalFunction(model.laplacian(xj)) - 2 * xj
            ok = ok and diff.is_constant()
    return ok, "Delta x_j - 2 x_j constant for n=1..4"


def check_11() -> tuple[bool, str]:
    rng = _rng(11)
    bad = 0
    for _ in range(20):
        a1 = _rand_fraction(rng, Fraction(0), Fraction(3))
        a2 = a1 + _rand_fraction(rng, Fraction(0), Fraction(3))
        C = _rand_fraction(rng, Fraction(0), Fraction(5))
        fam = cscs_twin_family(a1, a2, C)
        if not (fam.both_cscs and fam.closed_forms
                and fam.scal == 12 * (a1 + a2) / (a1 * a1 * (a2 - a1) * C)
                and fam.certificate.proportional_to(fam.potential)):
            bad += 1
    lat_bad = 0
    for _ in range(10):
        alpha = 1 + _rand_fraction(rng, Fraction(0), Fraction(5))
        k = lattice_labels(alpha)
        ells = calabi_lattice_ell(alpha, 1)
        total = sum((ki * li for ki, li in zip(k, ells)), Poly())
        if total != 0 or gcd(k[2], k[3]) != 1 or Fraction(-k[2], k[3]) != alpha / (1 + 3 * alpha + alpha**2):
            lat_bad += 1
    return bad == 0 and lat_bad == 0, f"20 families ({bad} bad), 10 lattice label sets ({lat_bad} bad)"


def random_boundary_params(rng: random.Random, kind: str) -> tuple[Fraction, ...]:
    if kind == "calabi":
        a1 = _rand_fraction(rng, Fraction(0), Fraction(4))
        a2 = a1 + _rand_fraction(rng, Fraction(0), Fraction(4))
        b1 = _rand_fraction(rng, Fraction(0), Fraction(4))
        b2 = b1 + _rand_fraction(rng, Fraction(0), Fraction(4))
    else:
        b1 = _rand_fraction(rng, Fraction(-4), Fraction(4))
        b2 = b1 + _rand_fraction(rng, Fraction(0), Fraction(3))
        a1 = b2 + _rand_fraction(rng, Fraction(0), Fraction(3))
        a2 = a1 + _rand_fraction(rng, Fraction(0), Fraction(3))
    return a1, a2, b1, b2


def kahler_einstein_calabi(params):
    """Calabi data with A0 = A3 = 0: A = (x - a1)(a2 - x)(x + a1 a2/(a1 + a2))."""
    a1, a2 = params[0], params[1]
    X = Poly.var("x")
    return calabi_from_A(params, (X - a1) * (a2 - X) * (X + a1 * a2 / (a1 + a2)))


def kahler_einstein_orthotoric(params) -> OrthotoricAnsatz | None:
    """Orthotoric data with A0 = 0 and B3 = -A3: A = (x - a1)(a2 - x)(q0 + q1 x)
    with A(b1) = A(b2), so the linear part of B = L - A(y) cancels A3."""
    a1, a2, b1, b2 = params
    X = Poly.var("x")
    base = (X - a1) * (a2 - X)
    # A(b1) = A(b2) is one linear condition on (q0, q1)
    u0 = base(b1) - base(b2)
    u1 = b1 * base(b1) - b2 * base(b2)
    q0, q1 = u1, -u0
    for sign in (1, -1):
        A = sign * base * (q0 + q1 * X)
        try:
            ans = orthotoric_from_A(params, A)
        except ValueError:
            continue
        if ans.positivity() and ans.is_kahler_einstein():
            return ans
    return None


def check_12() -> tuple[bool, str]:
    rng = _rng(12)
    cal = kahler_einstein_calabi((Fraction(1), Fraction(2), Fraction(0), Fraction(1)))
    cal_none = cal.is_kahler_einstein() and cal.boundary_ok() and find_twin(cal) is None
    ortho = None
    for _ in range(200):
        ortho = kahler_einstein_orthotoric(random_boundary_params(rng, "ortho"))
        if ortho is not None:
            break
    ortho_none = ortho is not None and ortho.boundary_ok() and find_twin(ortho) is None
    prod = product_fit((-2, 2, -1, 1), (1, -1, -1, 1), 3)
    prod_none = prod.is_csc() and find_twin(prod) is None
    infeasible = 0
    for _ in range(50):
        infeasible += not calabi_degenerate_feasible(random_boundary_params(rng, "calabi")).feasible
        infeasible += not orthotoric_antisymmetric_feasible(random_boundary_params(rng, "ortho")).feasible
    ok = cal_none and ortho_none and prod_none and infeasible == 100
    return ok, (f"KE Calabi none {cal_none}, KE orthotoric none {ortho_none}, csc product none "
                f"{prod_none}; sign analysis infeasible {infeasible}/100")


def check_13() -> tuple[bool, str]:
    rng = _rng(13)
    bad = 0
    for _ in range(20):
        alpha = _rand_fraction(rng, Fraction(0), Fraction(4))
        beta = _rand_fraction(rng, Fraction(0), Fraction(4))
        bound = (alpha**2 + beta**2) / beta
        c = _rand_fraction(rng, -bound, bound)
        res = product_lebrun(alpha, beta, c)
        bad += not (res.matches_closed_form and res.symmetric_in_c)
    sym = product_lebrun(1, 6, Poly.var("c"))
    iff_bad = 0
    for _ in range(20):
        alpha = _rand_fraction(rng, Fraction(0), Fraction(3))
        beta = _rand_fraction(rng, Fraction(0), Fraction(30))
        res = product_lebrun(alpha, beta, 0)
        if (res.cscs_c is not None) != (beta > 5 * alpha):
            iff_bad += 1
        if res.cscs_c is not None and not lebrun_cscs_verified(alpha, beta):
            iff_bad += 1
    c16 = product_lebrun(1, 6, 0).cscs_c
    c16_ok = c16 is not None and c16[0].sign_of(180 * Poly.var("t") ** 2 - 1369) == 0
    rays = lebrun_rays(1, 6)
    ray_ok = rays is not None and cscs_line_property(rays).ok
    ok = bad == 0 and sym.matches_closed_form and sym.symmetric_in_c and iff_bad == 0 and c16_ok and ray_ok
    return ok, (f"20 samples ({bad} bad), symbolic-c identity {sym.matches_closed_form}, cscS iff "
                f"beta>5alpha ({iff_bad} bad), c^2=1369/180 at (1,6) {c16_ok}, rays {ray_ok}")


BRIDGE_SAMPLES = ((2, Fraction(1, 2)), (2, Fraction(1, 3)), (2, Fraction(3, 4)),
                  (1, Fraction(1, 2)), (Fraction(2, 3), Fraction(1, 3)))


def check_14() -> tuple[bool, str]:
    bad = 0
    for s, x in BRIDGE_SAMPLES:
        pair = twin_of(s, x, 0)
        br = hirzebruch_bridge(s, x)
        if pair is None or br.b() != pair.b or not br.ansatz.boundary_ok():
            bad += 1
    return bad == 0, f"{len(BRIDGE_SAMPLES)} shared F_n samples, {bad} disagreements"


CHECKS: tuple[tuple[int, str, str, Callable[[], tuple[bool, str]]], ...] = (
    (1, "s3", "cscS root and twin at s=2, x=1/3", check_1),
    (2, "s3", "cscS bifurcation at s=2, x=1/2", check_2),
    (3, "s3", "profile identity (integral vs closed form)", check_3),
    (4, "s3", "Page generalization and x_P", check_4),
    (5, "s3", "Einstein-Maxwell roots", check_5),
    (6, "s3", "sporadic solutions", check_6),
    (7, "s3", "conic determinant", check_7),
    (8, "s4", "higher genus b-values", check_8),
    (9, "s5", "polytope obstructions", check_9),
    (10, "s5", "simplex eigenfunctions", check_10),
    (11, "s6", "Calabi cscS twin family and lattice labels", check_11),
    (12, "s6", "no-twin propositions", check_12),
    (13, "s3", "F0 product family", check_13),
    (14, "s6", "Calabi toric vs Hirzebruch twin", check_14),
)

SELECTORS = ("all", "s3", "s4", "s5", "s6") + tuple(str(n) for n, *_ in CHECKS)


def run_check(number: int) -> Check:
    for n, tag, title, fn in CHECKS:
        if n == number:
            try:
                passed, detail = fn()
            except Exception as exc:  # a crash is a failure, reported with its message
                passed, detail = False, f"error: {type(exc).__name__}: {exc}"
            return Check(n, tag, title, bool(passed), detail)
    raise KeyError(f"no check numbered {number}")


def run_suite(selector: str = "all") -> list[Check]:
    if selector not in SELECTORS:
        raise ValueError(f"unknown selector {selector!r}; expected one of {', '.join(SELECTORS)}")
    chosen = [n for n, tag, _, _ in CHECKS
              if selector in ("all", tag) or selector == str(n)]
    return [run_check(n) for n in chosen]
