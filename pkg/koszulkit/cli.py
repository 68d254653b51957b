"""
Command line entry point: ``koszulkit <subcommand> [options]``.

Every subcommand builds a zoo category from ``--family``/``--gamma``/``--d``/``--q``
(or a JSON ``--spec``), runs its checks on a truncation and writes one JSON document
to ``--out`` or stdout. Exit codes: 0 when every check passed, 1 when a check failed
(the document carries the witness), 2 on usage or configuration errors.
"""
import json
import logging
import os
import sys
from argparse import ArgumentParser
from collections import OrderedDict
from logging.handlers import RotatingFileHandler

from . import defaults
from .category import Interval
from .exceptions import CheckFailedException, KoszulkitException, ModuleException
from .genetic import verify_theta
from .lincat import linearize, opposite, validate
from .lookup_dicts import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, exit_code_dictionary
from .modules import regular_simple
from .quadratic import dual_relations, is_quadratic, quadratic_dual, yoneda_dual_comparison
from .reports import to_json_compatible
from .resolution import betti_table, essential_check, koszul_certificate, minimal_resolution, yoneda_dims
from .twist import check_twist_dual_iso
from .zoo import CategorySpec, make_category, verify_c_conditions

LOG = logging.getLogger(__name__)

SUBCOMMANDS = (
    "validate",
    "koszul",
    "betti",
    "yoneda",
    "quadratic",
    "dual",
    "twist-check",
    "decompose",
    "essential-check",
    "opposite",
)


class UsageError(KoszulkitException):
    """Bad combination of command line options."""

    pass


def configure_logging(loglevel="WARNING", logfile=None):
    """
    Send the ``koszulkit`` loggers to stderr, or to a rotating log file.

    :param str loglevel: one of DEBUG, INFO, WARNING, ERROR
    :param str logfile: Log file path/name to use for logging.
    :return: Configured logger.
    """
    logger = logging.getLogger("koszulkit")
    logger.setLevel(getattr(logging, loglevel))
    for handler in list(logger.handlers):
        if getattr(handler, "koszulkit_cli", False):
            logger.removeHandler(handler)
    if not logfile:
        handler = logging.StreamHandler(sys.stderr)
    else:
        # 5 megabyte file, max of 10 files.
        handler = RotatingFileHandler(logfile, maxBytes=defaults.MAX_LOG_SIZE, backupCount=10)
    handler.koszulkit_cli = True
    handler.setFormatter(logging.Formatter(defaults.FORMAT))
    logger.addHandler(handler)
    return logger


def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "-l",
        "--loglevel",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        action="store",
        help="Log level.",
    )
    common.add_argument(
        "-lf",
        "--logfile",
        action="store",
        dest="logfile",
        help="Specifies a logfile to output to. Will perform log rotation based "
        "on file size. If specified, will NOT output to stderr.",
    )
    common.add_argument("--family", help="zoo family, e.g. FI, FI_gamma, VI")
    common.add_argument("--gamma", help="color group: 'cyclic:n' or 'trivial'")
    common.add_argument("--d", type=int, help="number of complement colors for FI_d / OI_d")
    common.add_argument("--q", type=int, help="field size for VI")
    common.add_argument(
        "--interval", nargs=2, type=int, metavar=("LO", "HI"), help="truncation interval [LO, HI]"
    )
    common.add_argument("--spec", help="JSON category spec, inline or a file path")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--allow-large", action="store_true", help="lift the VI size limits")

    parser = ArgumentParser(prog="koszulkit", description="Koszulity checks on truncated combinatorial categories")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name in SUBCOMMANDS:
        sub = subparsers.add_parser(name, parents=[common])
        if name in ("koszul", "betti", "yoneda", "opposite"):
            sub.add_argument("--depth", type=int, help="resolution depth")
        if name in ("koszul", "betti", "opposite", "decompose"):
            sub.add_argument("--x", type=int, help="object of the simple (all objects when omitted)")
        if name == "twist-check":
            sub.add_argument("--no-signs", action="store_true", help="compare against the untwisted category")
        if name == "essential-check":
            sub.add_argument("--other", required=True, help="family to compare with, sharing the parameters")
    return parser


def _load_spec(args):
    """CategorySpec from ``--spec`` or the family flags; the command line interval wins."""
    if args.spec:
        if args.family:
            raise UsageError("use either --spec or --family")
        text = args.spec
        if os.path.isfile(text):
            with open(text) as handle:
                text = handle.read()
        try:
            data = json.loads(text)
        except ValueError as exc:
            raise UsageError("--spec is not valid JSON: {}".format(exc))
        if args.interval and isinstance(data, dict):
            data = dict(data, interval=list(args.interval))
        return CategorySpec.from_dict(data)
    if not args.family:
        raise UsageError("one of --family or --spec is required")
    data = {"family": args.family, "allow_large": args.allow_large}
    for field in ("gamma", "d", "q", "interval"):
        value = getattr(args, field)
        if value is not None:
            data[field] = list(value) if field == "interval" else value
    return CategorySpec.from_dict(data)


def _interval(spec, category):
    if spec.interval is not None:
        return spec.interval
    lo = category.MIN_OBJECT
    hi = lo + defaults.DEFAULT_DEPTH
    limit = category.max_object()
    if limit is not None:
        hi = min(hi, limit)
    return Interval(lo, hi)


def _objects(args, l):
    if args.x is not None:
        if args.x not in l.interval:
            raise UsageError("--x {} is outside {}".format(args.x, l.interval))
        return [args.x]
    return list(l.objects())


def _certificates(args, l):
    results = OrderedDict()
    for x in _objects(args, l):
        if args.depth is None:
            depth = l.hi - x
        elif args.x is None:
            depth = min(args.depth, l.hi - x)
        else:
            depth = args.depth
        results[x] = koszul_certificate(l, x, depth)
    passed = all(r.passed for r in results.values())
    return passed, OrderedDict([("category", l.describe()), ("certificates", results)])


def cmd_validate(args, c, iv):
    l = linearize(c, iv)
    report = validate(l)
    out = OrderedDict([("validation", report)])
    passed = report.passed
    if c.HAS_TENSOR:
        conditions = verify_c_conditions(c, iv.hi)
        out["conditions"] = conditions
        passed = passed and conditions.passed
    return passed, out


def cmd_koszul(args, c, iv):
    return _certificates(args, linearize(c, iv))


def cmd_opposite(args, c, iv):
    return _certificates(args, opposite(linearize(c, iv)))


def cmd_betti(args, c, iv):
    l = linearize(c, iv)
    tables = OrderedDict()
    for x in _objects(args, l):
        depth = l.hi - x if args.depth is None else args.depth
        tables[x] = betti_table(minimal_resolution(regular_simple(l, x), depth))
    return True, OrderedDict([("category", l.describe()), ("betti", tables)])


def cmd_yoneda(args, c, iv):
    l = linearize(c, iv)
    depth = iv.width if args.depth is None else args.depth
    table = yoneda_dims(l, depth)
    comparison = yoneda_dual_comparison(l, depth)
    passed = all(a == b for a, b in comparison.values())
    return passed, OrderedDict(
        [("category", l.describe()), ("yoneda_dims", table), ("dual_comparison", comparison)]
    )


def cmd_quadratic(args, c, iv):
    report = is_quadratic(linearize(c, iv))
    return report.passed, OrderedDict([("quadratic", report)])


def cmd_dual(args, c, iv):
    l = linearize(c, iv)
    dual = quadratic_dual(l)
    dims = OrderedDict()
    for x in dual.objects():
        for y in range(x, dual.hi + 1):
            dims[(x, y)] = dual.dim(x, y)
    relations = OrderedDict((x, space.dim) for x, space in sorted(dual_relations(dual).items()))
    return dual.quadratic, OrderedDict(
        [("category", l.describe()), ("quadratic", dual.quadratic), ("dims", dims), ("relation_dims", relations)]
    )


def cmd_twist_check(args, c, iv):
    report = check_twist_dual_iso(c, iv, signs=not args.no_signs)
    return report.passed, OrderedDict([("twist", report)])


def cmd_decompose(args, c, iv):
    if args.x is None:
        raise UsageError("decompose needs --x")
    report = verify_theta(c, args.x, iv)
    return report.passed, OrderedDict([("decomposition", report)])


def cmd_essential_check(args, c, iv):
    other = make_category(CategorySpec.from_dict(dict(_spec_dict(c), family=args.other)))
    report = essential_check(c, other, iv)
    return report.passed, OrderedDict([("essential", report)])


def _spec_dict(c):
    data = {"family": c.family}
    for field, value in c.params.items():
        if field == "gamma":
            data[field] = {"table": value.mult}
        else:
            data[field] = value
    return data


COMMANDS = {
    "validate": cmd_validate,
    "koszul": cmd_koszul,
    "betti": cmd_betti,
    "yoneda": cmd_yoneda,
    "quadratic": cmd_quadratic,
    "dual": cmd_dual,
    "twist-check": cmd_twist_check,
    "decompose": cmd_decompose,
    "essential-check": cmd_essential_check,
    "opposite": cmd_opposite,
}


def emit(document, out=None):
    """Write ``document`` as sorted JSON to ``out`` or stdout."""
    text = json.dumps(to_json_compatible(document), sort_keys=True, indent=2)
    if out:
        with open(out, "w") as handle:
            handle.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv):
    """
    Parse ``argv``, run the subcommand and return the exit code.

    :param list argv: arguments without the program name
    :return: 0, 1 or 2
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    configure_logging(args.loglevel, args.logfile)

    try:
        spec = _load_spec(args)
        c = make_category(spec)
        iv = _interval(spec, c)
        LOG.info("%s on %s of %s", args.command, iv, c.describe())
        passed, document = COMMANDS[args.command](args, c, iv)
    except (CheckFailedException, ModuleException) as exc:
        LOG.error("%s failed: %s", args.command, exc)
        document = OrderedDict(
            [("command", args.command), ("error", str(exc)), ("witness", getattr(exc, "witness", None))]
        )
        emit(document, args.out)
        return EXIT_CHECK_FAILED
    except KoszulkitException as exc:
        LOG.error("%s: %s", exit_code_dictionary[EXIT_USAGE], exc)
        sys.stderr.write("koszulkit {}: error: {}\n".format(args.command, exc))
        return EXIT_USAGE

    document["command"] = args.command
    document["passed"] = passed
    emit(document, args.out)
    code = EXIT_OK if passed else EXIT_CHECK_FAILED
    LOG.info("%s: %s", args.command, exit_code_dictionary[code])
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
