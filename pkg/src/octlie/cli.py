"""Command-line front end.

Every subcommand prints one JSON document:

    {"command": ..., "ok": ..., "payload": ..., "payload_sha256": ..., "timing_s": ...}

The payload is deterministic for fixed inputs.  ``timing_s`` sits outside it
and is not hashed.  Exit codes: 0 when every check passes, 1 on a failed
check, 2 on a usage error (bad flags or out-of-range input).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import click

from .exactmath import LaurentPoly, scalar_to_json

SYM = "sym"


# ---------------------------------------------------------------------------
# parameter parsing


class RationalType(click.ParamType):
    """p/q rationals, or the token ``sym`` when ``allow_sym`` is set."""

    name = "p/q"

    def __init__(self, allow_sym: bool = False):
        self.allow_sym = allow_sym

    def convert(self, value, param, ctx):
        if isinstance(value, (Fraction, LaurentPoly)):
            return value
        if self.allow_sym and str(value).strip().lower() == SYM:
            return LaurentPoly.var(("D",), "D")
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational p/q", param, ctx)


class IntTupleType(click.ParamType):
    name = "n1,n2,..."

    def __init__(self, lengths: Sequence[int]):
        self.lengths = tuple(lengths)

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        try:
            out = tuple(int(p) for p in str(value).split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)
        if len(out) not in self.lengths:
            self.fail(f"expected {' or '.join(map(str, self.lengths))} entries, got {len(out)}", param, ctx)
        return out


class FormType(click.ParamType):
    name = "a,b,c,d"

    def convert(self, value, param, ctx):
        parts = str(value).split(",")
        if len(parts) != 4:
            self.fail("a binary cubic needs four coefficients a,b,c,d", param, ctx)
        try:
            return tuple(Fraction(p.strip()) for p in parts)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} has a non-rational coefficient", param, ctx)


RATIONAL = RationalType()
RATIONAL_OR_SYM = RationalType(allow_sym=True)


# ---------------------------------------------------------------------------
# output


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def payload_hash(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


def _flatten(row: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in row.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, (list, tuple)):
            out[key] = json.dumps(v, sort_keys=True)
        else:
            out[key] = v
    return out


def to_csv(rows: List[dict]) -> str:
    flat = [_flatten(r) for r in rows]
    fields: List[str] = []
    for r in flat:
        fields.extend(k for k in r if k not in fields)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(flat)
    return buf.getvalue()


def emit(command: str, fn: Callable[[], Tuple[dict, bool, Optional[List[dict]]]]) -> None:
    """Run ``fn`` and print the report; exits with the status code."""
    ctx = click.get_current_context()
    t0 = time.perf_counter()
    try:
        payload, ok, rows = fn()
    except (ValueError, ArithmeticError) as exc:
        raise click.UsageError(str(exc)) from exc
    elapsed = round(time.perf_counter() - t0, 4)
    if ctx.find_root().params.get("csv") and rows is not None:
        click.echo(to_csv(rows), nl=False)
    else:
        report = {
            "command": command,
            "ok": bool(ok),
            "payload": payload,
            "payload_sha256": payload_hash(payload),
            "timing_s": elapsed,
        }
        click.echo(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False))
    ctx.exit(0 if ok else 1)


def _j(x):
    return scalar_to_json(x)


def _suite_rows(results) -> List[dict]:
    return [dict(criterion=r.criterion, **c.to_json()) for r in results for c in r.checks]


# ---------------------------------------------------------------------------
# commands


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--csv", "csv", is_flag=True, help="Flatten tabular reports to CSV instead of JSON.")
def main(csv):
    """Exact computations and checks for G2, Sp6 and the split octonions."""


@main.command("octonion-axioms")
@click.option("--samples", default=1000, show_default=True, type=click.IntRange(1))
@click.option("--seed", default=None, type=int, help="Random seed (defaults to the suite seed).")
def octonion_axioms(samples, seed):
    """Composition, alternativity and trace identities plus the 64-entry table."""
    from .suite import DEFAULT_SEED, criterion_1

    def run():
        r = criterion_1(samples, DEFAULT_SEED if seed is None else seed)
        return r.to_json(), r.ok, _suite_rows([r])

    emit("octonion-axioms", run)


@main.command("g2-build")
def g2_build():
    """Build g2 as the commutator kernel and check its structure."""
    from .g2lie import build_g2, check_rescaling_equations, root_name
    from .suite import criterion_2

    def run():
        r = criterion_2()
        ctx = build_g2()
        payload = r.to_json()
        payload["basis"] = list(ctx.basis_names)
        payload["roots"] = {root_name(lab): name for lab, name in sorted(ctx.roots.items())}
        payload["equations"] = [{"equation": n, "ok": ok} for n, ok, _ in check_rescaling_equations(ctx)]
        return payload, r.ok, _suite_rows([r])

    emit("g2-build", run)


@main.command("orbits")
@click.option("--D", "D", required=True, type=RATIONAL_OR_SYM, help="Nonzero rational p/q or 'sym'.")
def orbits(D):
    """Rank-one representatives, omega membership and stabilizer dimensions."""
    from .albert import omega_membership, orbit_representatives, square_root_of, stabilizer_dimension
    from .g2lie import build_g2

    def run():
        ctx = build_g2()
        rows = []
        for rep in orbit_representatives(D):
            member = omega_membership(rep.element, D)
            dim = stabilizer_dimension(rep.element, ctx)
            rows.append({
                "name": rep.name,
                "element": rep.element.to_json(),
                "stabilizer": rep.stabilizer,
                "stabilizer_dim": dim,
                "expected_dim": rep.expected_stabilizer_dim,
                "omega_ok": member.ok,
            })
        ok = all(r["omega_ok"] and r["stabilizer_dim"] == r["expected_dim"] for r in rows)
        payload = {"D": _j(D), "split": square_root_of(D) is not None, "representatives": rows}
        return payload, ok, rows

    emit("orbits", run)


@main.command("char-match")
@click.option("--D", "D", required=True, type=RATIONAL_OR_SYM, help="Nonzero rational p/q or 'sym'.")
def char_match(D):
    """Induced binary cubic on U_H and its discriminant square class."""
    from .albert import character_match, symbolic_character_match

    def run():
        if not D:
            raise ValueError("D must be nonzero")
        if isinstance(D, LaurentPoly):
            m = symbolic_character_match(D)
            disc = m["discriminant"]
            # disc = 4 D^3 has the square class of D
            ok = m["matches_target"] and not (disc - D * D * D * 4)
            payload = {"D": SYM, "form": [_j(c) for c in m["coeffs"]], "discriminant": _j(disc),
                       "target": [_j(c) for c in m["target"]], "matches_target": m["matches_target"]}
            return payload, ok, None
        m = character_match(D)
        ok = m["square_class"] == m["class_of_D"] and m["g"] is not None
        payload = {
            "D": _j(D),
            "form": m["form"].to_json(),
            "discriminant": _j(m["discriminant"]),
            "square_class": m["square_class"],
            "class_of_D": m["class_of_D"],
            "target": m["target"].to_json(),
            "g": [[_j(v) for v in row] for row in m["g"]] if m["g"] else None,
        }
        return payload, ok, None

    emit("char-match", run)


@main.command("cubic")
@click.option("--form", "form", required=True, type=FormType(), help="Coefficients a,b,c,d of a x^3 + b x^2 y + c x y^2 + d y^3.")
def cubic(form):
    """Cubic ring attached to a binary cubic form."""
    from .cubicforms import BinaryCubic, cubic_ring, discriminant, is_etale, square_class_of_disc

    def run():
        f = BinaryCubic(*form)
        R = cubic_ring(f, check=False)
        assoc = R.is_associative()
        payload = {
            "form": f.to_json(),
            "table": {"ii": [_j(c) for c in R.i_squared], "ij": [_j(c) for c in R.ij], "jj": [_j(c) for c in R.j_squared]},
            "associative": assoc,
            "discriminant": _j(discriminant(f)),
            "square_class": square_class_of_disc(f),
            "etale": is_etale(f),
        }
        return payload, assoc, None

    emit("cubic", run)


@main.command("branch")
@click.option("--lambda", "lam", required=True, type=IntTupleType((3, 4)), help="Dominant weight l1,l2,l3[,c].")
def branch(lam):
    """Restriction of V^lambda to U(3) and to SL2^3."""
    from .rootdata import C3, branch_to_u3, gl3_dimension, trivial_sl2cubed_multiplicity, weyl_dimension

    def run():
        types = branch_to_u3(lam[:3])
        rows = [{"k_type": list(t), "multiplicity": m, "dim": gl3_dimension(t)} for t, m in types.items()]
        dim = weyl_dimension(C3, lam[:3])
        mass = sum(r["multiplicity"] * r["dim"] for r in rows)
        payload = {
            "lambda": list(lam),
            "dim": dim,
            "u3_types": rows,
            "sl2cubed_trivial_multiplicity": trivial_sl2cubed_multiplicity(lam),
        }
        return payload, mass == dim, rows

    emit("branch", run)


@main.command("packets")
@click.option("--group", type=click.Choice(["sp6", "pgsp6", "g2"]), required=True)
@click.option("--weight", required=True, type=IntTupleType((2, 3, 4)), help="Highest weight (3 entries for Sp6, 2 for G2).")
def packets(group, weight):
    """Discrete series packet with HC parameters, minimal K-types and Hodge types."""
    from .rootdata import enumerate_packet, g2_packet

    def run():
        if group == "g2":
            if len(weight) != 2:
                raise ValueError("a G2 weight has two entries")
            pk = g2_packet(weight)
        else:
            if len(weight) == 2:
                raise ValueError("an Sp6 weight has three entries")
            pk = enumerate_packet(group, weight)
        rows = [d.to_json() for d in pk]
        return {"group": group, "weight": list(weight), "packet": rows}, True, rows

    emit("packets", run)


@main.command("theta-param")
@click.option("--x", "x", required=True, type=int)
@click.option("--y", "y", required=True, type=int)
def theta_param(x, y):
    """Archimedean theta lift of the G2 parameter (x, y) to PGSp6."""
    from .rootdata import theta_arch_param

    def run():
        t = theta_arch_param(x, y)
        return {"x": x, "y": y, "hc_param": list(t["hc_param"]), "lambda": list(t["lambda"])}, True, None

    emit("theta-param", run)


@main.command("invariants")
@click.option("--lambda", "lam", required=True, type=IntTupleType((3,)), help="l1,l2,l3 with l1 = l2 + l3.")
@click.option("--mu", "mu", default=None, type=int, help="Single mu in [l3, l2]; all by default.")
def invariants(lam, mu):
    """Non-vanishing checks for the SL2^3-invariant vectors v^[lambda, mu]."""
    from .repspaces import zero_weight_basis_check, nonvanishing_report

    def run():
        mus = range(lam[2], lam[1] + 1) if mu is None else [mu]
        if mu is not None and not lam[2] <= mu <= lam[1]:
            raise ValueError(f"mu must lie in [{lam[2]}, {lam[1]}]")
        rows = [nonvanishing_report(lam, m).to_json() for m in mus]
        basis = zero_weight_basis_check(lam)
        ok = basis and all(r["x0_nonzero"] and r["vproj_nonzero"] and r["cartan_nonzero"] for r in rows)
        return {"lambda": list(lam), "reports": rows, "projections_form_basis": basis}, ok, rows

    emit("invariants", run)


@main.command("lfactor")
@click.option("--u1", default=None, type=RATIONAL)
@click.option("--u2", default=None, type=RATIONAL)
@click.option("--symbolic", is_flag=True, help="Use the symbolic parameter (u1, u2).")
@click.option("--ell", default=2, show_default=True, type=click.IntRange(2))
def lfactor(u1, u2, symbolic, ell):
    """Std and Spin local factors on the G2 torus and the Hecke polynomial."""
    from .lfactors import G2SatakeParam, report

    def run():
        if symbolic:
            p = G2SatakeParam.symbolic()
        elif u1 is None or u2 is None:
            raise ValueError("give --u1 and --u2, or --symbolic")
        else:
            p = G2SatakeParam(u1, u2)
        r = report(p, ell)
        return r, r["factorization_ok"], None

    emit("lfactor", run)


def _run_criterion(k: int) -> dict:
    from .suite import CRITERIA

    return CRITERIA[k]().to_json()


@main.command("verify-all")
@click.option("--only", default=None, type=IntTupleType(range(1, 11)), help="Comma-separated criterion numbers.")
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(1), help="Run suites in parallel processes.")
def verify_all(only, jobs):
    """Run the full verification suite."""
    from .suite import CRITERIA

    def run():
        keys = sorted(k for k in CRITERIA if only is None or k in only)
        if only is not None and set(only) - set(CRITERIA):
            raise ValueError(f"unknown criteria {sorted(set(only) - set(CRITERIA))}")
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_run_criterion, keys))
        else:
            results = [_run_criterion(k) for k in keys]
        rows = [dict(criterion=r["criterion"], **c) for r in results for c in r["checks"]]
        ok = all(r["status"] == "pass" for r in results)
        summary = {str(r["criterion"]): r["status"] for r in results}
        return {"summary": summary, "suites": results}, ok, rows

    emit("verify-all", run)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
