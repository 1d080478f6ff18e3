# Command-line interface for cyclogoppa Packages

# Copyright (C) 2026 cyclogoppa developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Command-line front end, installed as :code:`cyclogoppa`.

Subcommands: :code:`field`, :code:`spectral`, :code:`orbit`, :code:`code`,
:code:`verify`, :code:`reproduce`, :code:`sweep`. Exit codes: 0 when every
asserted match holds, 1 on a mismatch, 2 on usage or input errors, 3 when a
standing assumption of the predictions is violated.
"""

import argparse
import json
import logging
import os
import sys

from cyclogoppa.field.gf2m import build_field, build_tower
from cyclogoppa.geometry.projline import (
    ProjectiveLine,
    normalize,
    orbit_of,
    orbits,
    order,
    partition,
    spectral,
)
from cyclogoppa.harness import (
    EXAMPLE_IDS,
    SUPPORT_AUTO,
    CaseSpec,
    VerificationHarness,
)
from cyclogoppa.utils.constants import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_SKIP,
    EXIT_USAGE,
    SWEEP_DEFAULT_COUNT,
    SWEEP_DEFAULT_SEED,
)
from cyclogoppa.utils.exceptions import (
    CycloGoppaError,
    LiteralParseError,
    StandingAssumptionError,
)
from cyclogoppa.utils.utility import (
    parse_element,
    parse_field_spec,
    parse_matrix,
    parse_point,
)

logger = logging.getLogger(__name__)


class JsonArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors print a JSON error object on stdout.

    The usage line still goes to stderr and the exit code is 2. Subparsers
    inherit the class.
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        payload = {"error": {"kind": "usage", "message": message}}
        print(json.dumps(payload, indent=2, sort_keys=True))
        self.exit(EXIT_USAGE)


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit a JSON report.")
    common.add_argument("--out", default=None, help="Write the report to this path.")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="More logging (repeatable)."
    )
    common.add_argument("--threads", type=int, default=1, help="Worker threads.")
    common.add_argument(
        "--show-progress", action="store_true", help="Show a progress bar over cases."
    )
    return common


def _map_args(parser):
    parser.add_argument("--field", required=True, help="m=<int>[,poly=0x<hex>][,gen=<lit>]")
    parser.add_argument("--matrix", required=True, help="[[a,b],[c,d]] with element literals")
    parser.add_argument("--frob", type=int, default=0, help="Frobenius exponent j.")


def _case_args(parser):
    parser.add_argument("--field", help="m=<int>[,poly=0x<hex>][,gen=<lit>]")
    parser.add_argument("--matrix", help="[[a,b],[c,d]] with element literals")
    parser.add_argument("--frob", type=int, default=0, help="Frobenius exponent j.")
    parser.add_argument(
        "--support", default=SUPPORT_AUTO, help="auto | orbit-infty | orbit-of:<elt>"
    )
    parser.add_argument("--s", type=int, default=1, help="Exponent of g1.")
    parser.add_argument("--t", type=int, default=0, help="Exponent of g2.")
    parser.add_argument(
        "--variant", choices=("expurgated", "extended", "plain"), default="expurgated"
    )
    parser.add_argument(
        "--base-coefficients",
        action="store_true",
        help="Use (g1 g2)^s over the base field in the irreducible branch.",
    )
    parser.add_argument(
        "--goppa",
        default=None,
        help="Goppa polynomial as comma separated element literals, lowest degree "
        "first; replaces --s/--t.",
    )
    parser.add_argument("--instance", default=None, help="JSON case description file.")


def build_parser():
    common = _common_parser()
    parser = JsonArgumentParser(
        prog="cyclogoppa",
        description="Goppa codes under projective-linear symmetry and their cyclic generators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="Inspect a binary field.")
    p.add_argument("--field", required=True, help="m=<int>[,poly=0x<hex>][,gen=<lit>]")

    p = sub.add_parser("spectral", parents=[common], help="Order, eigenvalues, fixed points.")
    _map_args(p)

    p = sub.add_parser("orbit", parents=[common], help="One orbit or a full partition.")
    _map_args(p)
    p.add_argument("--point", default=None, help="Element literal or inf.")
    p.add_argument(
        "--extension", action="store_true", help="Partition the line over GF(q^2)."
    )

    p = sub.add_parser("code", parents=[common], help="Build a Goppa code.")
    _case_args(p)
    p.add_argument("--distance", action="store_true", help="Compute the minimum distance.")

    p = sub.add_parser("verify", parents=[common], help="Check the predicted generator.")
    _case_args(p)
    p.add_argument("--seed", type=int, default=None, help="Unused; echoed in the report.")

    p = sub.add_parser("reproduce", parents=[common], help="Run a reference example.")
    p.add_argument("--example", required=True, choices=EXAMPLE_IDS)
    p.add_argument("--golden-dir", default=None, help="Directory of golden JSON files.")

    p = sub.add_parser("sweep", parents=[common], help="Seeded random campaign.")
    p.add_argument("--count", type=int, default=SWEEP_DEFAULT_COUNT)
    p.add_argument("--seed", type=int, default=SWEEP_DEFAULT_SEED)
    p.add_argument(
        "--semilinear", action="store_true", help="Draw semilinear maps (cyclicity only)."
    )
    return parser


def _field_from_arg(text):
    spec = parse_field_spec(text)
    field = build_field(spec["m"], spec["poly"])
    if spec["gen"] is not None:
        gen = int(parse_element(spec["gen"], field))
        field = build_field(spec["m"], spec["poly"], gen)
    return field, spec


def _map_from_args(args, field):
    a, b, c, d = [parse_element(x, field) for x in parse_matrix(args.matrix)]
    return normalize(a, b, c, d, field, args.frob)


def _cmd_field(args, harness):
    field, _ = _field_from_arg(args.field)
    return {"field": field.describe()}, EXIT_OK


def _cmd_spectral(args, harness):
    field, _ = _field_from_arg(args.field)
    M = _map_from_args(args, field)
    payload = {"field": field.describe(), "map": M.describe()}
    if M.frob:
        payload["order"] = order(M)
        payload["note"] = "spectral data needs a linear map"
        return payload, EXIT_OK
    tower = build_tower(field)
    payload["order"] = order(M, tower)
    payload["spectral"] = spectral(M, tower).describe()
    return payload, EXIT_OK


def _cmd_orbit(args, harness):
    field, _ = _field_from_arg(args.field)
    M = _map_from_args(args, field)
    payload = {"field": field.describe(), "map": M.describe()}

    if args.point is not None:
        orbit = orbit_of(M, parse_point(args.point, field))
        payload["orbit"] = orbit.describe()
        payload["length"] = len(orbit)
        return payload, EXIT_OK

    if args.extension:
        tower = build_tower(field)
        parts = partition(M, tower.ext, tower)
        payload["working_field"] = tower.ext.describe()
    elif M.frob or M.c == 0:
        parts = orbits(M, ProjectiveLine(field))
    else:
        parts = partition(M, field)
    payload["orbits"] = [o.describe() for o in parts]
    payload["lengths"] = [len(o) for o in parts]
    return payload, EXIT_OK


def _case_from_args(args):
    if args.instance is not None:
        stem = os.path.splitext(os.path.basename(args.instance))[0]
        with open(args.instance, "r") as fp:
            try:
                return CaseSpec.from_dict(json.load(fp), default_label=stem)
            except (json.JSONDecodeError, UnicodeDecodeError, TypeError, KeyError) as err:
                raise LiteralParseError(
                    "Bad instance file {}: {}".format(args.instance, err)
                ) from err
    if args.field is None or args.matrix is None:
        raise CycloGoppaError("--field and --matrix are required without --instance.")
    field, spec = _field_from_arg(args.field)
    return CaseSpec(
        label="cli",
        m=field.m,
        poly=spec["poly"],
        gen=None if spec["gen"] is None else str(int(field.generator)),
        matrix=parse_matrix(args.matrix),
        frob=args.frob,
        support=args.support,
        s=args.s,
        t=args.t,
        variant=args.variant,
        base_coefficients=args.base_coefficients,
        goppa=args.goppa,
        compute_distance=getattr(args, "distance", True),
    )


def _skip_payload(result):
    return {"case": result.to_dict(), "error": result.error}, EXIT_SKIP


def _cmd_code(args, harness):
    result = harness.run_case(_case_from_args(args))
    if result.skipped:
        return _skip_payload(result)
    payload = {"case": result.to_dict()}
    zero = [note for note in result.notes if note.startswith("zero-code")]
    if zero:
        payload["warnings"] = [{"kind": "zero-code", "message": note} for note in zero]
    return payload, EXIT_OK


def _cmd_verify(args, harness):
    result = harness.run_case(_case_from_args(args))
    if result.skipped:
        return _skip_payload(result)
    payload = {"case": result.to_dict(), "seed": args.seed}
    return payload, EXIT_OK if result.match else EXIT_MISMATCH


def _cmd_reproduce(args, harness):
    results = harness.reproduce_example(args.example, args.golden_dir)
    payload = {"example": args.example, "cases": [r.to_dict() for r in results]}
    ok = all(r.match for r in results)
    return payload, EXIT_OK if ok else EXIT_MISMATCH


def _cmd_sweep(args, harness):
    summary, results = harness.sweep(args.count, args.seed, semilinear=args.semilinear)
    failures = [r.to_dict() for r in results if r.status == "failed"]
    payload = {"summary": summary, "failed_cases": failures}
    return payload, EXIT_OK if summary["failed"] == 0 else EXIT_MISMATCH


COMMANDS = {
    "field": _cmd_field,
    "spectral": _cmd_spectral,
    "orbit": _cmd_orbit,
    "code": _cmd_code,
    "verify": _cmd_verify,
    "reproduce": _cmd_reproduce,
    "sweep": _cmd_sweep,
}


def _case_row(case):
    params = "[{},{},{}]".format(case.get("n"), case.get("k"), case.get("d"))
    return "{:<32} {:<8} {:<14} cyclic={!s:<5} generator={}".format(
        case["label"], case["status"], params, case.get("is_cyclic"), case.get("generator_human")
    )


def render_text(payload):
    """Plain-text rendering with the same numbers as the JSON report."""
    lines = []
    for key in sorted(payload):
        value = payload[key]
        if key in ("cases", "failed_cases"):
            lines.extend(_case_row(case) for case in value)
        elif key == "case":
            lines.append(_case_row(value))
            for note in value["notes"]:
                lines.append("  note: {}".format(note))
        elif isinstance(value, dict):
            lines.append("{}:".format(key))
            lines.extend("  {}: {}".format(k, value[k]) for k in sorted(value))
        else:
            lines.append("{}: {}".format(key, value))
    return "\n".join(lines)


def _emit(payload, args, path=None):
    if getattr(args, "json", False):
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = render_text(payload)
    if path:
        with open(path, "w") as fp:
            fp.write(text + "\n")
    else:
        print(text)


def _io_error(err):
    return {"error": {"kind": "io", "message": str(err)}}, EXIT_USAGE


def main(argv=None):
    """Entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        harness = VerificationHarness(
            num_threads=args.threads, show_progress=args.show_progress
        )
        payload, code = COMMANDS[args.command](args, harness)
    except StandingAssumptionError as err:
        payload, code = {"error": err.to_dict()}, EXIT_SKIP
    except CycloGoppaError as err:
        payload, code = {"error": err.to_dict()}, EXIT_USAGE
    except OSError as err:
        payload, code = _io_error(err)

    try:
        _emit(payload, args, args.out)
    except OSError as err:
        # the report file is unusable; the error goes to stdout
        payload, code = _io_error(err)
        _emit(payload, args)
    logger.debug("exit code %d", code)
    return code


if __name__ == "__main__":
    sys.exit(main())
