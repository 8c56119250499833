"""Command line front end of strat-kit.

Every subcommand reads JSON documents (see :mod:`stratkit.io`) and writes a
JSON document, or a TSV report, to standard output or to ``--out``. The
exit code is 0 on success, 1 on a refutation or a failed check, 2 when the
enumeration budget is exceeded and 3 on malformed input.
"""

# License: MIT

import argparse
import logging
import sys

from ._config import config_context
from ._version import __version__
from .datasets import load_corpus
from .diagrams import C_P
from .exceptions import BudgetExceededError
from .exceptions import HomologyOverflowError
from .exceptions import MalformedInputError
from .exceptions import NotCofibrantError
from .io import diagram_from_json
from .io import diagram_to_json
from .io import dumps
from .io import homology_to_json
from .io import labelled_from_json
from .io import labelled_to_json
from .io import map_from_json
from .io import map_to_json
from .io import pairing_from_json
from .io import poset_from_json
from .io import probe_report_to_json
from .io import read_json
from .io import simplicial_from_json
from .io import simplicial_to_json
from .io import stratified_from_json
from .io import stratified_to_json
from .links import diagram_D
from .links import holink
from .links import link
from .simplicial import homology
from .simplicial import sd
from .stratified import homotopy_classes
from .subdivision import build_pairing_ex
from .subdivision import build_pairing_ex_naiv
from .subdivision import check_pairing
from .subdivision import ex_P
from .subdivision import ex_P_naiv
from .subdivision import sd_P
from .subdivision import sd_P_naiv
from .subdivision import verify_identities
from .utils import check_regular_flag
from .utils.corpus_checks import run_corpus_checks
from .vertical import U
from .vertical import label_subdivision
from .vertical import verticalize
from .weq import REFUTED
from .weq import probe

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BUDGET = 2
EXIT_MALFORMED = 3


def _poset(args):
    if getattr(args, "poset", None) is None:
        return None
    return poset_from_json(read_json(args.poset))


def _stratified(args, path=None):
    return stratified_from_json(read_json(path or args.input), _poset(args))


def _flag(args, K):
    return check_regular_flag(K.poset, args.flag)


def _link(args):
    K = _stratified(args)
    return simplicial_to_json(link(K, _flag(args, K))), EXIT_OK


def _holink(args):
    K = _stratified(args)
    H = holink(K, _flag(args, K), args.dim_bound)
    return simplicial_to_json(H), EXIT_OK


def _subdivide(args):
    K = _stratified(args)
    if args.kind == "sd":
        return simplicial_to_json(sd(K)), EXIT_OK
    subdivide = sd_P if args.kind == "sd_P" else sd_P_naiv
    return stratified_to_json(subdivide(K)), EXIT_OK


def _ex(args):
    K = _stratified(args)
    build = ex_P_naiv if args.naive else ex_P
    return stratified_to_json(build(K, args.depth, args.dim_bound)), EXIT_OK


def _verticalize(args):
    S = labelled_from_json(read_json(args.input), _poset(args))
    return stratified_to_json(verticalize(S)), EXIT_OK


def _label_sd(args):
    return labelled_to_json(label_subdivision(_stratified(args))), EXIT_OK


def _diagram(args):
    doc = read_json(args.input)
    if args.kind == "D_P":
        K = stratified_from_json(doc, _poset(args))
        return diagram_to_json(diagram_D(K, args.dim_bound)), EXIT_OK
    if args.kind == "U":
        return diagram_to_json(U(labelled_from_json(doc, _poset(args)))), EXIT_OK
    return stratified_to_json(C_P(diagram_from_json(doc, _poset(args)))), EXIT_OK


def _homology(args):
    X = simplicial_from_json(read_json(args.input))
    return homology_to_json(homology(X, args.max_deg)), EXIT_OK


def _homotopy_classes(args):
    K = _stratified(args, args.source)
    L = stratified_from_json(read_json(args.target), K.poset)
    classes = homotopy_classes(K, L)
    doc = {
        "n_classes": len(classes),
        "classes": [[map_to_json(f)["images"] for f in members] for members in classes],
    }
    return doc, EXIT_OK


def _check_weq(args):
    f = map_from_json(read_json(args.map), _poset(args))
    report = probe(f, args.max_deg, use=args.mode, dim_bound=args.dim_bound)
    code = EXIT_FAILURE if report.verdict == REFUTED else EXIT_OK
    return probe_report_to_json(report), code


def _verify_identities(args):
    P = poset_from_json(read_json(args.poset))
    report = verify_identities(P, args.max_len)
    lines = ["equation\tflag\tindices\tpassed"]
    for check in report:
        indices = ",".join(f"{name}={value}" for name, value in check.indices)
        flag = ",".join(str(p) for p in check.flag)
        lines.append(f"{check.equation}\t{flag}\t{indices}\t{check.passed}")
    code = EXIT_OK if all(check.passed for check in report) else EXIT_FAILURE
    return "\n".join(lines) + "\n", code


def _check_pairing(args):
    if args.build is None:
        pairing = pairing_from_json(read_json(args.input), _poset(args))
    else:
        build = build_pairing_ex if args.build == "ex" else build_pairing_ex_naiv
        pairing = build(_stratified(args), dim_bound=args.dim_bound)
    check = check_pairing(pairing)
    doc = dict(check._asdict(), passed=check.passed, deferred=len(pairing.deferred))
    return doc, EXIT_OK if check.passed else EXIT_FAILURE


def _corpus(args):
    lines = ["object\tcheck\tpassed"]
    failed = False
    for name, K in load_corpus(args.filter or None).items():
        for check, passed in run_corpus_checks(K):
            lines.append(f"{name}\t{check}\t{passed}")
            failed = failed or not passed
    return "\n".join(lines) + "\n", EXIT_FAILURE if failed else EXIT_OK


def _add_input(parser, help_text="JSON document to read, '-' for standard input."):
    parser.add_argument("--in", dest="input", required=True, help=help_text)
    parser.add_argument(
        "--poset", default=None, help="JSON poset, when the input does not embed one."
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="strat-kit",
        description="Compute with simplicial sets stratified over finite posets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log to standard error."
    )
    parser.add_argument(
        "--budget", type=int, default=None, help="Ceiling of every map enumeration."
    )
    parser.add_argument("--n-jobs", type=int, default=None)
    parser.add_argument("--out", default=None, help="Output path, stdout if absent.")
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("link", help="Simplicial link at a regular flag.")
    _add_input(cmd)
    cmd.add_argument("--flag", required=True, help="Comma separated elements.")
    cmd.set_defaults(run=_link)

    cmd = commands.add_parser("holink", help="Truncated homotopy link.")
    _add_input(cmd)
    cmd.add_argument("--flag", required=True)
    cmd.add_argument("--dim-bound", type=int, default=2)
    cmd.set_defaults(run=_holink)

    cmd = commands.add_parser("subdivide", help="sd, sd_P or sd_P_naiv.")
    _add_input(cmd)
    cmd.add_argument("--kind", choices=["sd", "sd_P", "sd_P_naiv"], default="sd_P")
    cmd.set_defaults(run=_subdivide)

    cmd = commands.add_parser("ex", help="Truncated Ex_P or Ex_P^naiv.")
    _add_input(cmd)
    cmd.add_argument("--depth", type=int, default=1)
    cmd.add_argument("--dim-bound", type=int, default=2)
    cmd.add_argument("--naive", action="store_true")
    cmd.set_defaults(run=_ex)

    cmd = commands.add_parser("verticalize", help="Verticalize a labelled set.")
    _add_input(cmd)
    cmd.set_defaults(run=_verticalize)

    cmd = commands.add_parser("label-sd", help="Labelled subdivision.")
    _add_input(cmd)
    cmd.set_defaults(run=_label_sd)

    cmd = commands.add_parser("diagram", help="D_P, U or C_P.")
    _add_input(cmd)
    cmd.add_argument("--kind", choices=["D_P", "U", "C_P"], required=True)
    cmd.add_argument("--dim-bound", type=int, default=2)
    cmd.set_defaults(run=_diagram)

    cmd = commands.add_parser("homology", help="Integral homology.")
    cmd.add_argument("--in", dest="input", required=True)
    cmd.add_argument("--max-deg", type=int, default=2)
    cmd.set_defaults(run=_homology)

    cmd = commands.add_parser("homotopy-classes", help="[K, L]_P.")
    cmd.add_argument("--source", required=True)
    cmd.add_argument("--target", required=True)
    cmd.add_argument("--poset", default=None)
    cmd.set_defaults(run=_homotopy_classes)

    cmd = commands.add_parser("check-weq", help="Probe a stratified map.")
    cmd.add_argument("--map", required=True)
    cmd.add_argument("--poset", default=None)
    cmd.add_argument("--max-deg", type=int, default=1)
    cmd.add_argument("--mode", choices=["link", "holink"], default="link")
    cmd.add_argument("--dim-bound", type=int, default=None)
    cmd.set_defaults(run=_check_weq)

    cmd = commands.add_parser("verify-identities", help="Cosimplicial relations.")
    cmd.add_argument("--poset", required=True)
    cmd.add_argument("--max-len", type=int, default=3)
    cmd.set_defaults(run=_verify_identities)

    cmd = commands.add_parser("check-pairing", help="Check or build a pairing.")
    _add_input(cmd, help_text="A pairing, or a stratified set with --build.")
    cmd.add_argument("--build", choices=["ex", "ex_naiv"], default=None)
    cmd.add_argument("--dim-bound", type=int, default=2)
    cmd.set_defaults(run=_check_pairing)

    cmd = commands.add_parser("corpus", help="Run the checks on the corpus.")
    cmd.add_argument("--filter", nargs="*", default=None, help="Names to keep.")
    cmd.set_defaults(run=_corpus)
    return parser


def _emit(result, out):
    text = result if isinstance(result, str) else dumps(result)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None):
    """Run the command line and return the exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    package_logger = logging.getLogger("stratkit")
    level = package_logger.level
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        package_logger.addHandler(handler)
        package_logger.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)

    try:
        with config_context(budget=args.budget, n_jobs=args.n_jobs):
            result, code = args.run(args)
    except BudgetExceededError as exc:
        print(f"strat-kit: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (MalformedInputError, NotCofibrantError) as exc:
        print(f"strat-kit: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except HomologyOverflowError as exc:
        print(f"strat-kit: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    finally:
        if handler is not None:
            package_logger.removeHandler(handler)
            package_logger.setLevel(level)
    _emit(result, args.out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
