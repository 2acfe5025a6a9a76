"""Command-line surface.

Subcommands
  construct    run a construction and report polynomials plus certificates
  verify       numeric span dimension or multiplicative rank of a polynomial
  certify      irreducibility certificate for a polynomial file
  tables       degree bound tables with exceptional rows
  ff           finite-field degree/dimension checks
  invariants   invariant systems of the built-in groups
  group        group orders, orbits, and matrix dumps
  regress      frozen-value regression suite (--list to see item ids)

Every command emits a RunReport: {command, inputs, outputs, certificates,
wall_time_ms, version}.  Reports are deterministic for fixed inputs except
the wall_time_ms field.  Exit codes: 0 success or certified, 2 honest
"Unknown" or unstable, 1 error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from . import __version__
from .serialize import (
    construction_json,
    parse_nfelem,
    parse_rat,
    rat_str,
    to_jsonable,
    unipoly_from_json,
    unipoly_json,
)

_EXIT_OK = 0
_EXIT_ERROR = 1
_EXIT_UNKNOWN = 2


# ---------------------------------------------------------------------------
# report plumbing


def _report(command: str, inputs: dict, outputs, certificates: list, t0: float) -> dict:
    return {
        "command": command,
        "inputs": to_jsonable(inputs),
        "outputs": to_jsonable(outputs),
        "certificates": to_jsonable(certificates),
        "wall_time_ms": int((time.time() - t0) * 1000),
        "version": __version__,
    }


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        out = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {v}")
        return out
    if isinstance(value, list):
        out = []
        for v in value:
            if isinstance(v, (dict, list)):
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {v}")
        return out
    return [f"{pad}{value}"]


def _emit(report: dict, args) -> None:
    if getattr(args, "format", "json") == "text":
        body = "\n".join(_text_lines(report))
    else:
        body = json.dumps(report, indent=2)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(body + "\n")
    print(body)


def _fail(command: str, inputs: dict, exc: Exception, args, t0: float) -> int:
    report = _report(command, inputs, {"error": f"{type(exc).__name__}: {exc}"}, [], t0)
    _emit(report, args)
    return _EXIT_ERROR


# ---------------------------------------------------------------------------
# input parsing


def _split_values(text: str) -> list[str]:
    """Split a constants/weights flag.  Semicolons win over commas so that
    bracketed element literals (which contain commas) can be passed."""
    sep = ";" if ";" in text else ","
    return [p.strip() for p in text.split(sep) if p.strip()]


def _parse_constant(token: str, field):
    if "@" in token:
        elem = parse_nfelem(token)
        if elem.field is not field:
            raise ValueError(
                f"constant {token!r} lives in {elem.field.label}, "
                f"the system needs {field.label}"
            )
        return elem
    return field.elem(parse_rat(token))


def _load_poly(args):
    with open(args.poly) as fh:
        data = json.load(fh)
    return unipoly_from_json(data)


def _digits_from(args) -> int | None:
    if getattr(args, "digits", None):
        return args.digits
    env = os.environ.get("CONJDIM_DIGITS")
    return int(env) if env else None


# ---------------------------------------------------------------------------
# construct


def _construct_invariant(args, t0: float) -> tuple[dict, int]:
    from .constructor import DegenerateConstantsError, build_linear_construction
    from .invariants import invariant_system

    name = {"Bn": "B_n", "Gl1n": "G(l,1,n)"}.get(args.group, args.group)
    params = {}
    if args.n:
        params["n"] = args.n
    if args.l:
        params["l"] = args.l
    sys_ = invariant_system(name, **params)
    field = sys_.group.field
    n_inv = len(sys_.polys)
    n_var = len(sys_.polys[0].vars)

    b = (
        [parse_rat(v) for v in _split_values(args.b)]
        if args.b
        else [Fraction(1)] + [Fraction(0)] * (n_var - 1)
    )

    seed = args.seed
    rng = random.Random(seed)
    attempts: list[str] = []
    if args.c:
        trials = [[_parse_constant(v, field) for v in _split_values(args.c)]]
        budget = 1
    else:
        budget = args.retries
        trials = []
        for _ in range(budget):
            trials.append([field.elem(rng.randint(1, 9)) for _ in range(n_inv)])

    last_exc: Exception | None = None
    for c in trials:
        try:
            con = build_linear_construction(sys_, c, b)
            inputs = {
                "group": args.group,
                "c": [x.text() for x in con.c],
                "b": [rat_str(x) for x in con.b],
                "seed": seed,
                "attempts": attempts + [  # echo what was tried, in order
                    "accepted"
                ],
            }
            verdict = con.certificates["alpha_irreducibility"].verdict
            code = _EXIT_OK if verdict == "Irreducible" else _EXIT_UNKNOWN
            return (
                _report(
                    "construct",
                    inputs,
                    construction_json(con),
                    [
                        {
                            "name": "alpha_irreducibility",
                            "value": con.certificates["alpha_irreducibility"],
                        }
                    ],
                    t0,
                ),
                code,
            )
        except DegenerateConstantsError as exc:
            attempts.append(f"degenerate: {exc}")
            last_exc = exc
    raise DegenerateConstantsError(
        f"no usable constants after {budget} attempt(s): {last_exc}",
        getattr(last_exc, "achieved_degree", 0),
        getattr(last_exc, "expected_degree", 0),
    )


def cmd_construct(args) -> int:
    t0 = time.time()
    inputs = {
        "group": args.group,
        "sqrt_family": args.sqrt_family,
        "mult_family": args.mult_family,
        "n": args.n,
        "l": args.l,
        "c": args.c,
        "b": args.b,
        "seed": args.seed,
    }
    try:
        if args.sqrt_family:
            from .constructor import build_nonexceptional

            if not args.n:
                raise ValueError("--sqrt-family needs --n")
            con = build_nonexceptional(args.n)
        elif args.mult_family:
            from .constructor import build_mult_example

            if not args.n:
                raise ValueError("--mult-family needs --n")
            con = build_mult_example(args.n)
        elif args.group:
            report, code = _construct_invariant(args, t0)
            _emit(report, args)
            return code
        else:
            raise ValueError("pick one of --group, --sqrt-family, --mult-family")
    except Exception as exc:  # noqa: BLE001 - boundary of the process
        return _fail("construct", inputs, exc, args, t0)

    cert = con.certificates.get("alpha_irreducibility")
    verdict = cert.verdict if cert is not None else "Unknown"
    code = _EXIT_OK if verdict == "Irreducible" else _EXIT_UNKNOWN
    certs = [{"name": k, "value": v} for k, v in con.certificates.items()]
    _emit(_report("construct", inputs, construction_json(con), certs, t0), args)
    return code


# ---------------------------------------------------------------------------
# verify / certify


def cmd_verify(args) -> int:
    t0 = time.time()
    inputs = {
        "poly": args.poly,
        "mult": args.mult,
        "digits": _digits_from(args),
        "max_digits": args.max_digits,
        "assert_irreducible": args.assert_irreducible,
    }
    try:
        f = _load_poly(args)
        inputs["poly"] = unipoly_json(f)
        from .dimension import mult_rank_numeric, qspan_dimension
        from .tables import check_bounds

        digits = _digits_from(args)
        if args.mult:
            rep = mult_rank_numeric(f, digits=digits, max_digits=args.max_digits)
        else:
            rep = qspan_dimension(
                f,
                digits=digits,
                max_digits=args.max_digits,
                assume_irreducible=args.assert_irreducible,
            )
        outputs = {"report": rep, "degree": f.degree}
        if rep.kind == "multiplicative" and (rep.torsion or rep.dimension_upper == 0):
            outputs["bounds"] = "NotApplicable (every zero is a root of unity)"
        else:
            outputs["bounds"] = check_bounds(rep.dimension_upper, f.degree)
    except Exception as exc:  # noqa: BLE001
        return _fail("verify", inputs, exc, args, t0)
    _emit(_report("verify", inputs, outputs, [], t0), args)
    return _EXIT_OK if (rep.certified or rep.stable) else _EXIT_UNKNOWN


def cmd_certify(args) -> int:
    t0 = time.time()
    inputs = {"poly": args.poly}
    try:
        f = _load_poly(args)
        inputs["poly"] = unipoly_json(f)
        from .modfactor import irreducibility_certificate

        cert = irreducibility_certificate(f)
    except Exception as exc:  # noqa: BLE001
        return _fail("certify", inputs, exc, args, t0)
    _emit(
        _report(
            "certify",
            inputs,
            {"degree": f.degree, "certificate": cert},
            [{"name": "irreducibility", "value": cert}],
            t0,
        ),
        args,
    )
    return _EXIT_OK if cert.verdict in ("Irreducible", "Reducible") else _EXIT_UNKNOWN


# ---------------------------------------------------------------------------
# tables / ff / invariants / group


def cmd_tables(args) -> int:
    t0 = time.time()
    inputs = {"base": args.base, "n_max": args.n_max}
    try:
        from .tables import table_json

        out = table_json(args.base, args.n_max)
    except Exception as exc:  # noqa: BLE001
        return _fail("tables", inputs, exc, args, t0)
    _emit(_report("tables", inputs, out, [], t0), args)
    return _EXIT_OK


def cmd_ff(args) -> int:
    t0 = time.time()
    inputs = {"q": args.q, "n": args.n, "scan": args.scan}
    try:
        from .finitefield import upper_bound_scan, verify_Dqn

        if args.scan:
            out = upper_bound_scan(args.q, args.n, args.scan)
        else:
            out = verify_Dqn(args.q, args.n)
    except Exception as exc:  # noqa: BLE001
        return _fail("ff", inputs, exc, args, t0)
    _emit(_report("ff", inputs, out, [], t0), args)
    return _EXIT_OK if out["pass"] else _EXIT_ERROR


def cmd_invariants(args) -> int:
    t0 = time.time()
    inputs = {"group": args.group, "n": args.n, "l": args.l}
    try:
        from .invariants import invariant_system

        name = {"Bn": "B_n", "Gl1n": "G(l,1,n)"}.get(args.group, args.group)
        params = {}
        if args.n:
            params["n"] = args.n
        if args.l:
            params["l"] = args.l
        sys_ = invariant_system(name, **params)
        out = {
            "group": sys_.group.name,
            "order": sys_.group.order(),
            "degrees": sys_.degrees,
            "degree_product": sys_.degree_product(),
            "invariance_ok": sys_.check_invariance(),
            "invariants": [p.text() for p in sys_.polys],
        }
        if name in ("F4", "W(F4)"):
            from .invariants import f4_reduced_powersum_forms

            out["reduced_powersum_forms"] = {
                str(2 * k): form.text()
                for k, form in f4_reduced_powersum_forms().items()
            }
    except Exception as exc:  # noqa: BLE001
        return _fail("invariants", inputs, exc, args, t0)
    _emit(_report("invariants", inputs, out, [], t0), args)
    return _EXIT_OK if out["invariance_ok"] else _EXIT_ERROR


def cmd_group(args) -> int:
    t0 = time.time()
    inputs = {"name": args.name, "n": args.n, "l": args.l, "dump": args.dump}
    try:
        from .groups import builtin_group
        from .serialize import nfelem_str

        params = {}
        if args.n:
            params["n"] = args.n
        if args.l:
            params["l"] = args.l
        g = builtin_group(args.name, **params)
        e1 = [1] + [0] * (g.dim - 1)
        out = {
            "name": g.name,
            "field": g.field.label,
            "dim": g.dim,
            "order": g.order(),
            "e1_orbit_size": len(g.orbit(e1)),
        }
        if args.dump:
            out["elements"] = [
                [nfelem_str(entry) for row in mat for entry in row]
                for mat in g.enumerate()
            ]
    except Exception as exc:  # noqa: BLE001
        return _fail("group", inputs, exc, args, t0)
    _emit(_report("group", inputs, out, [], t0), args)
    return _EXIT_OK


# ---------------------------------------------------------------------------
# regression suite: one check per acceptance item


def _elapsed(t: float) -> float:
    return round(time.time() - t, 3)


def check_g2_end_to_end() -> dict:
    """Dihedral two-variable pipeline hits the frozen sextic and the frozen
    degree-12 minimal polynomial, certified irreducible."""
    t0 = time.time()
    from .constructor import build_linear_construction
    from .invariants import g2_invariants

    con = build_linear_construction(g2_invariants(), (0, 2), (1, 3))
    aux = [c.as_rational() for c in con.auxiliary.coeffs]
    mp = [c.as_rational() for c in con.alpha_minpoly.coeffs]
    want_aux = [Fraction(-2), 0, 0, 0, 0, 0, Fraction(1)]
    want_mp = (
        [Fraction(470596)] + [Fraction(0)] * 5 + [Fraction(572)] + [Fraction(0)] * 5 + [Fraction(1)]
    )
    ok = (
        aux == want_aux
        and mp == want_mp
        and con.certificates["alpha_irreducibility"].verdict == "Irreducible"
        and con.degree == 12
    )
    return {
        "id": "g2-end-to-end",
        "pass": ok and _elapsed(t0) < 5.0,
        "budget_s": 5.0,
        "elapsed_s": _elapsed(t0),
        "auxiliary": [rat_str(c) for c in aux],
        "minpoly_degree": con.degree,
        "verdict": con.certificates["alpha_irreducibility"].verdict,
    }


def check_f4_invariants() -> dict:
    """Newton reduction of the four defining power-sum forms reproduces the
    frozen printed invariants, fractional coefficients included."""
    t0 = time.time()
    from .invariants import f4_reduced_powersum_forms

    forms = f4_reduced_powersum_forms()  # raises if any form drifts
    i12 = forms[6]
    c_a = i12.terms.get((2, 2, 0, 0))
    c_b = i12.terms.get((6, 0, 0, 0))
    ok = (
        c_a is not None
        and c_a.as_rational() == Fraction(1365, 2)
        and c_b is not None
        and c_b.as_rational() == Fraction(159, 2)
        and forms[1].terms.get((1, 0, 0, 0)).as_rational() == 6
        and sorted(forms) == [1, 3, 4, 6]
    )
    return {
        "id": "f4-invariants",
        "pass": ok and _elapsed(t0) < 10.0,
        "budget_s": 10.0,
        "elapsed_s": _elapsed(t0),
        "i12_half_integer_terms": {"s2^2*s4^2": "1365/2", "s2^6": "159/2"},
    }


_WORKED_CHAIN = None


def _worked_chain():
    global _WORKED_CHAIN
    if _WORKED_CHAIN is None:
        from .constructor import f4_auxiliary_chain

        _WORKED_CHAIN = f4_auxiliary_chain()
    return _WORKED_CHAIN


def check_gamma_chain() -> dict:
    """Resultant elimination of the pinned four-variable system reproduces
    the frozen cubic, the quartic over the cubic field, and the degree-24
    polynomial over Q."""
    t0 = time.time()
    ch = _worked_chain()
    cubic = [c.as_rational() for c in ch.gamma_cubic.coeffs]
    want_cubic = [
        Fraction(-114051068048293, 6220800),
        Fraction(5811288377, 36864),
        Fraction(5735, 32),
        Fraction(1),
    ]
    want_quartic = {
        3: [Fraction(-5), Fraction(0), Fraction(0)],
        2: [
            Fraction(20261200695, 3175710433),
            Fraction(-47690820, 3175710433),
            Fraction(34560, 3175710433),
        ],
        1: [
            Fraction(36679035170, 9527131299),
            Fraction(39742350, 3175710433),
            Fraction(-28800, 3175710433),
        ],
        0: [
            Fraction(-203476507483, 38108525196),
            Fraction(-56249419, 12702841732),
            Fraction(-72000, 3175710433),
        ],
    }
    quartic_ok = all(
        list(ch.quartic.coeff(k).coords) == want_quartic[k] for k in want_quartic
    )
    want24 = {
        24: Fraction(1),
        22: Fraction(-15),
        20: Fraction(375, 4),
        18: Fraction(-2405, 8),
        16: Fraction(65435, 128),
        14: Fraction(-25905, 64),
        12: Fraction(-181583, 3072),
        10: Fraction(8367137, 18432),
        8: Fraction(-28198575, 65536),
        6: Fraction(1338226651, 5308416),
        4: Fraction(-895964239, 8847360),
        2: Fraction(4234139, 294912),
        0: Fraction(-24389830879, 1592524800),
    }
    aux_ok = ch.auxiliary.degree == 24 and all(
        ch.auxiliary.coeff(k).as_rational() == want24.get(k, Fraction(0))
        for k in range(25)
    )
    ok = cubic == want_cubic and quartic_ok and aux_ok and ch.s2 == Fraction(5)
    return {
        "id": "gamma-chain",
        "pass": ok and _elapsed(t0) < 120.0,
        "budget_s": 120.0,
        "elapsed_s": _elapsed(t0),
        "cubic": [rat_str(c) for c in cubic],
        "auxiliary_degree": ch.auxiliary.degree,
        "x22_coefficient": rat_str(ch.auxiliary.coeff(22).as_rational()),
        "constant": rat_str(ch.auxiliary.coeff(0).as_rational()),
    }


def check_side_conditions() -> dict:
    """Discriminant square-class, real/negative zero counts, and the trivial
    stabilizer of the weight vector in the enumerated 1152-element group."""
    t0 = time.time()
    from .groups import f4_reflection_group

    ch = _worked_chain()
    sc = ch.side_conditions
    group = f4_reflection_group()
    order = group.order()
    e1_orbit = len(group.orbit([1, 0, 0, 0]))
    ok = (
        sc["quartic_discriminant"] == Fraction(223967999, 97200)
        and sc["discriminant_is_square_in_field"] is False
        and sc["quartic_real_roots"] == 4
        and sc["quartic_negative_roots"] == 1
        and sc["weight_stabilizer_trivial"] is True
        and order == 1152
        and e1_orbit == 24
    )
    return {
        "id": "side-conditions",
        "pass": ok and _elapsed(t0) < 60.0,
        "budget_s": 60.0,
        "elapsed_s": _elapsed(t0),
        "discriminant": rat_str(sc["quartic_discriminant"]),
        "square_in_field": sc["discriminant_is_square_in_field"],
        "real_roots": sc["quartic_real_roots"],
        "negative_roots": sc["quartic_negative_roots"],
        "group_order": order,
        "e1_orbit": e1_orbit,
    }


def check_st8() -> dict:
    """Gaussian two-variable pipeline: the bivariate resultant is a constant
    times the fourth power of the frozen degree-24 polynomial, and the
    weighted-sum minimal polynomial has degree exactly 96 over Q(i)."""
    t0 = time.time()
    from .constructor import build_linear_construction, eliminate_to_auxiliary
    from .invariants import st8_invariants

    sys_ = st8_invariants()
    K = sys_.group.field
    i = K.gen
    one = K.one
    c1 = one + i
    printed = {
        24: K.elem(27),
        16: (one + i) * -270,
        12: K.elem(270),
        8: i * -810,
        4: (one + i) * 54,
        0: K.elem(-9) + i * 8,
    }
    aux = eliminate_to_auxiliary(sys_, (c1, 1))
    aux_ok = aux.degree == 24 and all(
        aux.coeff(k) * 27 == printed.get(k, K.zero) for k in range(25)
    )
    con = build_linear_construction(sys_, (c1, 1), (1, 2))
    ok = aux_ok and con.degree == 96 and con.auxiliary == aux
    return {
        "id": "st8-gaussian",
        "pass": ok and _elapsed(t0) < 120.0,
        "budget_s": 120.0,
        "elapsed_s": _elapsed(t0),
        "auxiliary_degree": aux.degree,
        "printed_coefficient_groups": 6,
        "minpoly_degree": con.degree,
    }


def check_tables() -> dict:
    """Every frozen bound-table entry, the enumerated group orders, and
    monotonicity of the rational bound."""
    t0 = time.time()
    import math

    from .groups import dihedral_g2_group, f4_reflection_group, signed_permutation_group, st8_group
    from .tables import D_cyc, D_cyc_row, d_max, d_max_row, D_finite

    want_dmax = {
        1: 2,
        2: 12,
        3: 48,
        4: 1152,
        5: 3840,
        6: 103680,
        7: 2903040,
        8: 696729600,
        9: 1393459200,
        10: 8360755200,
    }
    dmax_ok = all(d_max(n) == v for n, v in want_dmax.items())
    ratio_ok = (
        d_max_row(8)["ratio"] == "135/2"
        and d_max_row(2)["ratio"] == "3/2"
        and d_max_row(4)["ratio"] == "3"
        and d_max_row(6)["ratio"] == "9/4"
        and d_max_row(7)["ratio"] == "9/2"
        and d_max_row(9)["ratio"] == "15/2"
        and d_max_row(10)["ratio"] == "9/4"
        and d_max_row(3)["ratio"] == "1"
    )
    want_cyc = {
        (2, 4): 96,
        (2, 8): 192,
        (2, 10): 600,
        (2, 20): 1200,
        (4, 4): 46080,
        (4, 6): 155520,
        (4, 10): 720000,
        (5, 4): 184320,
        (6, 6): 39191040,
        (6, 10): 1296000000,
        (8, 4): 4246732800,
    }
    cyc_ok = all(D_cyc(l, n) == v for (n, l), v in want_cyc.items())
    cyc_ratio_ok = (
        D_cyc_row(4, 8)["ratio"] == "45/28"
        and D_cyc_row(4, 2)["ratio"] == "3"
        and D_cyc_row(6, 6)["ratio"] == "7/6"
        and D_cyc_row(10, 6)["ratio"] == "9/5"
    )
    generic_ok = D_cyc(12, 3) == 12**3 * 6 and D_finite(2, 3) == 7 and D_finite(3, 2) == 8
    orders_ok = (
        dihedral_g2_group().order() == 12
        and f4_reflection_group().order() == 1152
        and st8_group().order() == 96
        and all(
            signed_permutation_group(n).order() == 2**n * math.factorial(n)
            for n in range(1, 7)
        )
    )
    mono_ok = all(d_max(n) < d_max(n + 1) for n in range(1, 20))
    ok = dmax_ok and ratio_ok and cyc_ok and cyc_ratio_ok and generic_ok and orders_ok and mono_ok
    return {
        "id": "tables",
        "pass": ok and _elapsed(t0) < 300.0,
        "budget_s": 300.0,
        "elapsed_s": _elapsed(t0),
        "dmax_rows": len(want_dmax),
        "cyclotomic_exceptions": len(want_cyc),
        "enumerated_orders": {"G2": 12, "F4": 1152, "ST8": 96, "B_6": 46080},
    }


def check_sqrt_family() -> dict:
    """Weighted square-root sums: frozen degree-8 minimal polynomial with
    verified dimension 2, and the degree-48 dimension-3 member."""
    t0 = time.time()
    from .constructor import build_nonexceptional

    c2 = build_nonexceptional(2)
    t2 = _elapsed(t0)
    mp2 = [c.as_rational() for c in c2.alpha_minpoly.coeffs]
    want2 = [
        Fraction(841),
        Fraction(0),
        Fraction(110),
        Fraction(0),
        Fraction(47),
        Fraction(0),
        Fraction(10),
        Fraction(0),
        Fraction(1),
    ]
    rep2 = c2.certificates["dimension_report"]
    ok2 = (
        mp2 == want2
        and c2.certificates["alpha_irreducibility"].verdict == "Irreducible"
        and rep2.dimension_upper == 2
        and rep2.dimension_lower == 2
        and rep2.stable
        and t2 < 5.0
    )
    t1 = time.time()
    c3 = build_nonexceptional(3)
    t3 = _elapsed(t1)
    rep3 = c3.certificates["dimension_report"]
    ok3 = (
        c3.degree == 48
        and c3.certificates["alpha_irreducibility"].verdict == "Irreducible"
        and rep3.dimension_upper == 3
        and rep3.stable
        and t3 < 300.0
    )
    return {
        "id": "sqrt-family",
        "pass": ok2 and ok3,
        "budget_s": 305.0,
        "elapsed_s": _elapsed(t0),
        "n2_minpoly": [rat_str(c) for c in mp2],
        "n2_seconds": t2,
        "n3_degree": c3.degree,
        "n3_dimension": rep3.dimension_upper,
        "n3_seconds": t3,
    }


def check_numeric_verifier() -> dict:
    """Same dimension and identical canonical relation sets at 100 and 200
    digits on the frozen degree-12 polynomial; dimension 2 on the sextic."""
    t0 = time.time()
    from .dimension import qspan_dimension
    from .unipoly import poly_from_int_list

    g2_mp = poly_from_int_list(
        [470596, 0, 0, 0, 0, 0, 572, 0, 0, 0, 0, 0, 1], var="y"
    )
    r100 = qspan_dimension(g2_mp, digits=100)
    r200 = qspan_dimension(g2_mp, digits=200)
    sextic = poly_from_int_list([-2, 0, 0, 0, 0, 0, 1])
    r6 = qspan_dimension(sextic, digits=100)
    ok = (
        r100.dimension_upper == 2
        and r200.dimension_upper == 2
        and r100.relations == r200.relations
        and r100.stable
        and r200.stable
        and r6.dimension_upper == 2
        and r6.stable
    )
    return {
        "id": "numeric-verifier",
        "pass": ok and _elapsed(t0) < 120.0,
        "budget_s": 120.0,
        "elapsed_s": _elapsed(t0),
        "dim_100": r100.dimension_upper,
        "dim_200": r200.dimension_upper,
        "relation_sets_identical": r100.relations == r200.relations,
        "relations": len(r100.relations),
        "sextic_dim": r6.dimension_upper,
    }


def check_finite_fields() -> dict:
    """Degree q**n - 1 with Frobenius-span dimension n for the three desk
    pairs, plus the exhaustive no-counterexample scan."""
    t0 = time.time()
    from .finitefield import upper_bound_scan, verify_Dqn

    reports = {f"({q},{n})": verify_Dqn(q, n) for q, n in ((2, 2), (2, 3), (3, 2))}
    scan = upper_bound_scan(2, 2, 6)
    ok = all(r["pass"] for r in reports.values()) and scan["pass"]
    return {
        "id": "finite-fields",
        "pass": ok and _elapsed(t0) < 60.0,
        "budget_s": 60.0,
        "elapsed_s": _elapsed(t0),
        "pairs": {
            k: {"degree": r["degree"], "dimension": r["dimension"]}
            for k, r in reports.items()
        },
        "scan_elements": scan["elements_checked"],
        "scan_violations": len(scan["violations"]),
    }


def check_mult_rank() -> dict:
    """Exponent-matrix ranks for the unit constructions, the frozen rank-2
    example, and the rank/degree bound check on every produced report."""
    t0 = time.time()
    from .constructor import _signed_permutation_rows, build_mult_example
    from .dimension import mult_rank_exponents

    ranks_ok = all(
        mult_rank_exponents(
            _signed_permutation_rows([Fraction(i) for i in range(1, n + 1)])
        )
        == n
        for n in range(1, 6)
    )
    produced = [build_mult_example(n) for n in (1, 2, 4, 5)]
    bounds_ok = all(c.certificates["bounds_verdict"] == "OK" for c in produced)
    c2 = produced[1]
    mp2 = [c.as_rational() for c in c2.alpha_minpoly.coeffs]
    want2 = [
        Fraction(1),
        Fraction(48),
        Fraction(5436),
        Fraction(75728),
        Fraction(355974),
        Fraction(75728),
        Fraction(5436),
        Fraction(48),
        Fraction(1),
    ]
    c2_ok = (
        c2.certificates["distinct_exponent_rows"] == 8
        and mp2 == want2
        and c2.certificates["alpha_irreducibility"].verdict == "Irreducible"
        and c2.degree == 8
    )
    ok = ranks_ok and bounds_ok and c2_ok
    return {
        "id": "mult-rank",
        "pass": ok and _elapsed(t0) < 60.0,
        "budget_s": 60.0,
        "elapsed_s": _elapsed(t0),
        "ranks_1_to_5": ranks_ok,
        "n2_distinct_conjugates": c2.certificates["distinct_exponent_rows"],
        "n2_degree": c2.degree,
        "bounds_checked": len(produced),
    }


def check_property_suites() -> dict:
    """Seeded randomized battery: >= 1000 cases across field axioms, square
    detection, orbit-stabilizer counting, resultant symmetry, Newton
    identities, invariance, and reducibility fuzz."""
    t0 = time.time()
    counts, failures = _property_battery(seed=20260816)
    total = sum(counts.values())
    ok = total >= 1000 and not failures
    return {
        "id": "property-suites",
        "pass": ok and _elapsed(t0) < 300.0,
        "budget_s": 300.0,
        "elapsed_s": _elapsed(t0),
        "cases": counts,
        "total": total,
        "failures": failures[:5],
    }


def _property_battery(seed: int) -> tuple[dict, list]:
    """Run the randomized exact-property checks; returns per-family counts
    and a list of failure descriptions (empty on a clean run)."""
    from .groups import builtin_group, mat_identity, mat_mul, row_action
    from .invariants import f4_invariants, g2_invariants, st8_invariants
    from .modfactor import irreducibility_certificate
    from .numberfield import QQ, cyclotomic_field, nf_make
    from .rat import rational_is_square
    from .resultants import resultant_uni
    from .symmetric import powersums_to_elementary
    from .unipoly import UniPoly

    rng = random.Random(seed)
    counts: dict[str, int] = {}
    failures: list[str] = []

    def bump(name: str) -> None:
        counts[name] = counts.get(name, 0) + 1

    def rand_frac(span: int = 8) -> Fraction:
        return Fraction(rng.randint(-span, span), rng.randint(1, 4))

    # field axioms in three fields
    fields = [cyclotomic_field(4), cyclotomic_field(3), nf_make([-2, 0, 0, 1])]
    for _ in range(300):
        K = rng.choice(fields)
        a, b, c = (
            K.elem([rand_frac() for _ in range(K.degree)]) for _ in range(3)
        )
        bump("field_axioms")
        if (a + b) + c != a + (b + c):
            failures.append(f"associativity in {K.label}")
        if a * (b + c) != a * b + a * c:
            failures.append(f"distributivity in {K.label}")
        if not a.is_zero() and a * a.inverse() != K.one:
            failures.append(f"inverse in {K.label}")

    # perfect squares are recognized
    for _ in range(150):
        q = rand_frac(30)
        bump("rational_squares")
        if not rational_is_square(q * q):
            failures.append(f"square not recognized: ({q})^2")

    # orbit sizes divide enumerated orders via stabilizers
    gs = [
        builtin_group("G2"),
        builtin_group("B_2"),
        builtin_group("B_3"),
        builtin_group("ST8"),
        builtin_group("G(3,1,2)"),
    ]
    for _ in range(60):
        g = rng.choice(gs)
        v = [rng.randint(-3, 3) for _ in range(g.dim)]
        if all(x == 0 for x in v):
            v[0] = 1
        bump("orbit_stabilizer")
        if len(g.orbit(v)) * g.stabilizer_order(v) != g.order():
            failures.append(f"orbit-stabilizer in {g.name} at {v}")

    # resultant symmetry
    for _ in range(150):
        dm, dn = rng.randint(1, 4), rng.randint(1, 4)
        f = UniPoly.from_rationals(
            QQ, [rand_frac() for _ in range(dm)] + [Fraction(1)]
        )
        g = UniPoly.from_rationals(
            QQ, [rand_frac() for _ in range(dn)] + [Fraction(1)]
        )
        bump("resultant_symmetry")
        lhs = resultant_uni(f, g)
        rhs = resultant_uni(g, f) * Fraction((-1) ** (f.degree * g.degree))
        if lhs != rhs:
            failures.append(f"resultant symmetry: {f.text()} / {g.text()}")

    # Newton identities against direct elementary symmetric functions
    import itertools
    import math

    for _ in range(150):
        n = rng.randint(1, 4)
        z = [rand_frac() for _ in range(n)]
        psums = [QQ.elem(sum(x**m for x in z)) for m in range(1, n + 1)]
        es = powersums_to_elementary(psums)
        direct = [
            QQ.elem(sum(math.prod(combo) for combo in itertools.combinations(z, k)))
            for k in range(1, n + 1)
        ]
        bump("newton_identities")
        if es != direct:
            failures.append(f"newton identities at {z}")

    # invariance of all invariant systems at random points
    systems = [g2_invariants(), st8_invariants(), f4_invariants()]
    for _ in range(100):
        sys_ = rng.choice(systems)
        K = sys_.group.field
        ident = mat_identity(K, sys_.group.dim)
        mat = ident
        for _ in range(rng.randint(1, 5)):
            mat = mat_mul(mat, rng.choice(sys_.group.generators))
        z = tuple(K.elem(rng.randint(-4, 4)) for _ in range(sys_.group.dim))
        img = row_action(z, mat)
        bump("invariance")
        for p in sys_.polys:
            if p.eval_all(list(img)) != p.eval_all(list(z)):
                failures.append(f"invariance of {sys_.group.name}")
                break

    # products never certify as irreducible
    for _ in range(100):
        f = UniPoly.from_rationals(
            QQ, [rng.randint(-9, 9) for _ in range(rng.randint(1, 3))] + [1]
        )
        g = UniPoly.from_rationals(
            QQ, [rng.randint(-9, 9) for _ in range(rng.randint(1, 3))] + [1]
        )
        bump("reducibility_fuzz")
        cert = irreducibility_certificate(f * g)
        if cert.verdict != "Reducible":
            failures.append(f"product not flagged: ({f.text()})*({g.text()})")

    return counts, failures


REGRESS_ITEMS = {
    "g2-end-to-end": check_g2_end_to_end,
    "f4-invariants": check_f4_invariants,
    "gamma-chain": check_gamma_chain,
    "side-conditions": check_side_conditions,
    "st8-gaussian": check_st8,
    "tables": check_tables,
    "sqrt-family": check_sqrt_family,
    "numeric-verifier": check_numeric_verifier,
    "finite-fields": check_finite_fields,
    "mult-rank": check_mult_rank,
    "property-suites": check_property_suites,
}


def cmd_regress(args) -> int:
    t0 = time.time()
    if args.list:
        body = "\n".join(REGRESS_ITEMS)
        print(body)
        return _EXIT_OK
    ids = args.only if args.only else list(REGRESS_ITEMS)
    unknown = [i for i in ids if i not in REGRESS_ITEMS]
    inputs = {"only": args.only or []}
    if unknown:
        return _fail(
            "regress", inputs, ValueError(f"unknown item(s): {', '.join(unknown)}"), args, t0
        )
    items = []
    all_ok = True
    for item_id in ids:
        result = REGRESS_ITEMS[item_id]()
        items.append(result)
        all_ok = all_ok and result["pass"]
        status = "PASS" if result["pass"] else "FAIL"
        print(f"{status}: {item_id} ({result['elapsed_s']}s)", file=sys.stderr)
    report = _report("regress", inputs, {"items": items, "pass": all_ok}, [], t0)
    _emit(report, args)
    return _EXIT_OK if all_ok else _EXIT_ERROR


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conjdim",
        description="exact constructions and certification of algebraic "
        "numbers with prescribed conjugate span dimension",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="also write the report to this file")

    p = sub.add_parser("construct", parents=[common], help="run a construction")
    p.add_argument("--group", choices=("G2", "ST8", "Bn", "Gl1n"))
    p.add_argument("--sqrt-family", action="store_true")
    p.add_argument("--mult-family", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--c", help="invariant constants, comma or semicolon separated")
    p.add_argument("--b", help="weights for the sum of basis zeros")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=8)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="numeric span dimension or rank")
    p.add_argument("--poly", required=True, help="polynomial file (JSON)")
    p.add_argument("--mult", action="store_true", help="multiplicative rank instead")
    p.add_argument("--digits", type=int)
    p.add_argument("--max-digits", type=int, default=400)
    p.add_argument("--assert-irreducible", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", parents=[common], help="irreducibility certificate")
    p.add_argument("--poly", required=True, help="polynomial file (JSON)")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tables", parents=[common], help="degree bound tables")
    p.add_argument("--base", default="Q", help='"Q", "cyc:<l>", or "fq:<q>"')
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("ff", parents=[common], help="finite-field checks")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scan", type=int, help="exhaustive scan up to this extension degree")
    p.set_defaults(func=cmd_ff)

    p = sub.add_parser("invariants", parents=[common], help="invariant systems")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("group", parents=[common], help="group orders and dumps")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--order", action="store_true", help="kept for symmetry; order is always shown")
    p.add_argument("--dump", action="store_true", help="include all matrices")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("regress", parents=[common], help="frozen-value regression suite")
    p.add_argument("--only", action="append", help="run only this item id (repeatable)")
    p.add_argument("--list", action="store_true", help="list item ids")
    p.set_defaults(func=cmd_regress)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
