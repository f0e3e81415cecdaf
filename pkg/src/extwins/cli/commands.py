"""Command implementations; each returns a Report (and an exit code for verify)."""
from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

from ..exactnum import RootInterval
from ..hirzebruch import (SurfaceClass, cscs_root, em_roots, genus_twin, join_params, twin_conic,
                          twin_of)
from ..hirzebruch.twins import CERT_WIDTH
from ..quadrilateral import (NonExtremalError, cscs_twin_family, find_twin, load_ansatz,
                             metric_data, product_lebrun)
from ..quadrilateral.ansatz import _coeff_desc
from ..quadrilateral.metric import affine_in_moments
from ..toric_polytope import (DegenerateFrame, build_twin_system, load_polytope,
                              solve_twin_system_2d)
from ..verify import run_suite
from .report import Report, _plain


def _interval(rng) -> str:
    lo, hi = rng
    return f"({'-inf' if lo is None else lo}, {'inf' if hi is None else hi})"


class UsageError(ValueError):
    pass


def surface_from(args):
    """--s, or --genus with --n; returns (surface argument, echo text)."""
    if args.s is not None:
        if args.genus is not None or args.n is not None:
            raise UsageError("give either --s or --genus/--n, not both")
        return args.s, f"s={args.s}"
    n = 1 if args.n is None else args.n
    g = 0 if args.genus is None else args.genus
    surf = SurfaceClass(g, n)
    return surf, f"genus={g} n={n}"


def _value(v):
    return v.exact_or_self() if isinstance(v, RootInterval) else v


def _certified(pair) -> bool:
    res = pair.residual
    return res.contains_zero() and res.width <= 2 * CERT_WIDTH


def hirzebruch_twin(args, digits):
    surface, echo = surface_from(args)
    rep = Report(f"hirzebruch twin {echo} x={args.x} a={args.a}",
                 ("s", "x", "a", "b", "residual"), ("bifurcation",), digits=digits)
    pair = twin_of(surface, args.x, args.a)
    if pair is None or not _certified(pair):
        rep.note("no certified partner weight in (-1, 1)")
        return rep
    rep.add(s=pair.s, x=pair.x, a=pair.a, b=pair.b, residual=pair.residual,
            bifurcation=pair.bifurcation)
    return rep


def hirzebruch_conic(args, digits):
    surface, echo = surface_from(args)
    con = twin_conic(surface, args.x)
    rep = Report(f"hirzebruch conic {echo} x={args.x}",
                 ("s", "x", "B", "D", "F", "determinant", "line_value"),
                 ("classification", "line", "solutions_in_square"), digits=digits)
    lines = con.lines or ((None, None),)
    for kind, value in lines:
        rep.add(s=con.s, x=con.x, B=con.B, D=con.D, F=con.F, determinant=con.determinant,
                line_value=value, classification=con.classification, line=kind,
                solutions_in_square=con.solutions_in_square)
    return rep


def hirzebruch_em(args, digits):
    surface, echo = surface_from(args)
    rep = Report(f"hirzebruch em {echo} x={args.x}", ("s", "x", "c", "b", "residual"),
                 ("multiplicity", "bifurcation"), digits=digits)
    s = surface.s if isinstance(surface, SurfaceClass) else Fraction(surface)
    for root in em_roots(surface, args.x):
        c = _value(root)
        pair = twin_of(surface, args.x, c)
        ok = pair is not None and _certified(pair)
        rep.add(s=s, x=args.x, c=c, b=pair.b if ok else None,
                residual=pair.residual if ok else None, multiplicity=root.multiplicity,
                bifurcation=pair.bifurcation if ok else None)
    if not rep.rows:
        rep.note("no Einstein-Maxwell weight in (-1, 1)")
    return rep


def hirzebruch_cscs(args, digits):
    surface, echo = surface_from(args)
    rep = Report(f"hirzebruch cscs {echo} x={args.x}", ("s", "x", "c", "b", "residual"),
                 ("bifurcation",), digits=digits)
    s = surface.s if isinstance(surface, SurfaceClass) else Fraction(surface)
    c = cscs_root(surface, args.x)
    pair = twin_of(surface, args.x, c)
    ok = pair is not None and _certified(pair)
    rep.add(s=s, x=args.x, c=c, b=pair.b if ok else None, residual=pair.residual if ok else None,
            bifurcation=pair.bifurcation if ok else None)
    if ok and pair.bifurcation:
        rep.note("the cscS weight is its own partner: no twin")
    return rep


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    try:
        lo, hi = text.split(":")
        return Fraction(lo), Fraction(hi)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"range must look like lo:hi with exact rationals, got {text!r}") from None


def _grid(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    if step <= 0:
        raise UsageError(f"step must be positive, got {step}")
    out, v = [], lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def _cmp(a, b) -> int:
    return -1 if a < b else (1 if a > b else 0)


def hirzebruch_scan(args, digits):
    surface, echo = surface_from(args)
    lo, hi = parse_range(args.range)
    if lo <= hi and (lo <= 0 or hi >= 1):
        raise UsageError(f"x range must lie inside (0, 1), got {args.range}")
    xs = _grid(lo, hi, args.step)
    a_lo, a_hi = parse_range(args.a_range)
    if not (-1 < a_lo and a_hi < 1):
        raise UsageError(f"weight range must lie inside (-1, 1), got {args.a_range}")
    grid = _grid(a_lo, a_hi, args.a_step)
    rep = Report(f"hirzebruch scan {echo} range={args.range} step={args.step} "
                 f"a-range={args.a_range} a-step={args.a_step}",
                 ("s", "x", "a", "b", "residual"), ("bifurcation", "em_a", "em_b", "cscs"),
                 digits=digits)
    s = surface.s if isinstance(surface, SurfaceClass) else Fraction(surface)
    for x in xs:
        ems = [_value(r) for r in em_roots(surface, x)]
        weights = [(a, False, False) for a in grid]
        weights += [(e, True, False) for e in ems]
        try:
            weights.append((cscs_root(surface, x), False, True))
        except ArithmeticError:
            pass
        weights.sort(key=cmp_to_key(lambda u, v: _cmp(u[0], v[0])))
        merged: list[tuple] = []
        for w in weights:
            if merged and merged[-1][0] == w[0]:
                merged[-1] = (merged[-1][0], merged[-1][1] or w[1], merged[-1][2] or w[2])
            else:
                merged.append(w)
        for a, em, cscs in merged:
            pair = twin_of(surface, x, a)
            if pair is None or not _certified(pair):
                continue
            rep.add(s=s, x=x, a=pair.a, b=pair.b, residual=pair.residual,
                    bifurcation=pair.bifurcation, em_a=em, em_b=any(pair.b == e for e in ems),
                    cscs=cscs)
    return rep


def genus_twin_cmd(args, digits):
    g = 0 if args.genus is None else args.genus
    n = 1 if args.n is None else args.n
    surf = SurfaceClass(g, n)
    res = genus_twin(surf, args.x)
    rep = Report(f"genus twin genus={g} n={n} x={args.x}", ("s", "x", "a", "b"),
                 ("genus", "n", "in_range", "positive_a", "positive_b"), digits=digits)
    rep.add(s=surf.s, x=args.x, a=args.x, b=res.b, genus=g, n=n, in_range=res.in_range,
            positive_a=res.positivity_a.positive,
            positive_b=res.positivity_b.positive if res.positivity_b else None)
    return rep


def genus_join_cmd(args, digits):
    for name in ("w1", "w2", "l1"):
        if getattr(args, name) is None:
            raise UsageError(f"genus join needs --{name}")
    jd = join_params(args.w1, args.w2, args.l1)
    g = 0 if args.genus is None else args.genus
    surf = SurfaceClass(g, jd.n)
    res = genus_twin(surf, jd.x)
    rep = Report(f"genus join w1={args.w1} w2={args.w2} l1={args.l1} genus={g}",
                 ("s", "x", "b"), ("genus", "n", "twisted", "in_range"), digits=digits)
    rep.add(s=surf.s, x=jd.x, b=res.b, genus=g, n=jd.n, twisted=jd.twisted, in_range=res.in_range)
    return rep


def polytope_check(args, digits):
    poly = load_polytope(args.file)
    rep = Report(f"polytope check {poly.name or args.file}", (), ("vertex", "point",
                 "barycentric", "equation"), digits=digits)
    try:
        system = build_twin_system(poly)
    except DegenerateFrame as exc:
        rep.note(f"no usable corner frame: {exc}")
        return rep
    eqs = {e.vertex.index: e.form for e in system.equations}
    for bv in system.table:
        rep.add(vertex=bv.index, point=" ".join(str(v) for v in bv.point),
                barycentric=" ".join(str(v) for v in bv.alpha), equation=eqs.get(bv.index, ""))
    rep.note(f"corner frame {' '.join(str(i) for i in system.frame.indices)}")
    if not system.equations:
        rep.note("empty system: full Sasaki cone")
        return rep
    if system.dimension != 2:
        rep.note(f"classification is only supported in dimension 2 (got {system.dimension})")
        return rep
    cls = solve_twin_system_2d(system)
    if cls.kind == "only-diagonal":
        rep.note("only-diagonal: no twin")
    elif cls.kind == "full-space":
        rep.note("full-space: every potential passes the vertex test")
    else:
        for line in cls.lines:
            rep.note(f"solution line d = t*({', '.join(str(v) for v in line.direction)}), "
                     f"t in {_interval(line.t_range)}")
        rep.note(f"union-of-lines: {len(cls.lines)} solution lines")
    return rep


def _poly_rows(rep, name, coeffs):
    for k, c in enumerate(coeffs):
        rep.add(coefficient=c, name=f"{name}{k}")


def quad_fit(args, digits):
    ans = load_ansatz(args.file)
    rep = Report(f"quad fit {args.file}", ("coefficient",), ("name",), digits=digits)
    top = 4 if ans.kind != "product" else max(3, ans.degree())
    _poly_rows(rep, "A", _coeff_desc(ans.A, "x", top))
    _poly_rows(rep, "B", _coeff_desc(ans.B, "y", top))
    rep.note(f"type {ans.kind}")
    rep.note(f"boundary conditions exact: {str(ans.boundary_ok()).lower()}")
    rep.note(f"positive on interiors: {_plain(ans.positivity())}")
    data = metric_data(ans)
    fit = affine_in_moments(data.scal, data)
    rep.note(f"Scal = {data.scal}; extremal: {str(fit.is_affine).lower()}")
    if getattr(ans, "free_A", ()) or getattr(ans, "free_B", ()):
        rep.note(f"free directions: A {len(ans.free_A)}, B {len(ans.free_B)}")
    return rep


def quad_twin(args, digits):
    ans = load_ansatz(args.file)
    rep = Report(f"quad twin {args.file}", ("lambda", "c1", "c2"), ("positive",), digits=digits)
    try:
        cert = find_twin(ans)
    except NonExtremalError as exc:
        raise UsageError(str(exc)) from None
    if cert is None:
        rep.note("no twin")
        return rep
    lam, c1, c2 = cert.coefficients
    rep.add(**{"lambda": lam, "c1": c1, "c2": c2, "positive": cert.positive})
    for name, value in cert.residuals.items():
        rep.note(f"residual {name} = {value}")
    rep.note(f"gauge: {cert.gauge}")
    return rep


def quad_cscs_family(args, digits):
    for name in ("alpha1", "alpha2", "C"):
        if getattr(args, name) is None:
            raise UsageError(f"quad cscs-family needs --{name}")
    fam = cscs_twin_family(args.alpha1, args.alpha2, args.C)
    rep = Report(f"quad cscs-family alpha1={args.alpha1} alpha2={args.alpha2} C={args.C}",
                 ("scal", "lambda", "c1"), ("both_cscs", "closed_forms"), digits=digits)
    lam, c1, _ = fam.potential
    rep.add(scal=fam.scal, c1=c1, both_cscs=fam.both_cscs, closed_forms=fam.closed_forms,
            **{"lambda": lam})
    return rep


def quad_lebrun(args, digits):
    for name in ("alpha", "beta"):
        if getattr(args, name) is None:
            raise UsageError(f"quad lebrun needs --{name}")
    c = Fraction(0) if args.c is None else args.c
    res = product_lebrun(args.alpha, args.beta, c)
    rep = Report(f"quad lebrun alpha={args.alpha} beta={args.beta} c={c}",
                 ("alpha", "beta", "c", "scal_const", "scal_slope", "cscs_c_plus", "cscs_c_minus"),
                 ("matches_closed_form", "symmetric_in_c"), digits=digits)
    plus, minus = res.cscs_c if res.cscs_c else (None, None)
    rep.add(alpha=args.alpha, beta=args.beta, c=c, scal_const=res.affine[0],
            scal_slope=res.affine[1], cscs_c_plus=plus, cscs_c_minus=minus,
            matches_closed_form=res.matches_closed_form, symmetric_in_c=res.symmetric_in_c)
    if res.cscs_c is None:
        rep.note("no cscS weight (needs beta > 5 alpha)")
    return rep


def verify_cmd(args, digits):
    try:
        checks = run_suite(args.selector)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = Report(f"verify {args.selector}", (), ("item", "tag", "title", "passed", "detail"),
                 digits=digits)
    for c in checks:
        rep.add(item=c.number, tag=c.tag, title=c.title, passed=c.passed, detail=c.detail)
    failed = sum(not c.passed for c in checks)
    rep.note(f"{len(checks) - failed}/{len(checks)} passed")
    return rep, (1 if failed else 0)
