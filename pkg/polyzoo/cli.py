# cli.py ---
#
# Filename: cli.py
#
# Commentary:
#
# The polyzoo command: compute, eval, perm, mt and compare. Data goes to
# stdout; diagnostics go to stderr, errors as a single line.
#
# Exit status: 0 success, 1 "powers differ" from compare, 2 unreadable
# input, 3 budget exceeded, 4 bad command line or option combination.
#
import sys
import json
import logging
import argparse

from polyzoo import __version__
from polyzoo.config import Budget
from polyzoo.distinguish import Catalog, distinguishing_report
from polyzoo.errors import (BudgetExceeded, GraphParseError, InvalidDecomposition,
                            PolyzooError, UsageError)
from polyzoo.formula import (chromatic_formula, count_assignments, counting_polynomial,
                             interpolated_polynomial, parse_formula, CountingInstance)
from polyzoo.graph import named_graph, parse_edge_list, parse_graph6
from polyzoo.invariants import POLY_CHOICES, InvariantId
from polyzoo.permanent import (parse_decomposition, parse_matrix, permanent_naive,
                               permanent_ryser, permanent_tw, greedy_tree_decomposition,
                               support_graph)
from polyzoo.poly import BiPoly, FFPoly
from polyzoo.render import ReportRenderer, render_poly
from polyzoo.utils import read_source, setup_logging, significant_lines

SCHEMA = "polyzoo/1"

EXIT_DIFFER = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_USAGE = 4


def load_graph(source, in_format='auto'):
    """Reads a graph from a file name, a family name or inline text.

    In auto mode an existing file is read first, then the source is tried
    as a name such as K3 or P4+K1, and finally taken as inline text. Text
    whose first line starts with a digit is an edge list, otherwise graph6.
    """
    text, origin = read_source(source)
    if in_format == 'name':
        return named_graph(source)
    if in_format == 'auto' and origin is None:
        try:
            return named_graph(source)
        except GraphParseError:
            pass
    if in_format == 'auto':
        lines = significant_lines(text, "\n/;")
        in_format = 'edgelist' if lines and lines[0][0].isdigit() else 'graph6'
    if in_format == 'edgelist':
        return parse_edge_list(text)
    lines = significant_lines(text)
    if len(lines) != 1:
        raise GraphParseError(f"Expected a single graph6 line, found {len(lines)}")
    return parse_graph6(lines[0])


def resolve_budget(args, environ=None):
    """Defaults, then --config, then POLYZOO_BUDGET, then the flags."""
    try:
        budget = Budget()
        if args.config:
            budget = Budget.from_config(args.config, budget)
        budget = Budget.from_env(budget, environ)
        return budget.updated(max_nodes=args.max_nodes, max_k=args.max_k,
                              max_width=args.max_width)
    except ValueError as e:
        raise UsageError(str(e)) from None


def emit(args, text=None, payload=None):
    """Writes the result in the selected format."""
    if args.format == 'json':
        payload = dict(payload or {})
        payload['schema'] = SCHEMA
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _basis(poly):
    if isinstance(poly, FFPoly):
        return 'falling_factorial'
    if isinstance(poly, BiPoly):
        return 'bivariate'
    return 'monomial'


def _invariant(args):
    if args.poly == 'harary':
        if not args.property:
            raise UsageError("--poly harary requires --property")
        return InvariantId('harary', args.property)
    if args.property:
        raise UsageError(f"--property applies to --poly harary only, not {args.poly}")
    return InvariantId(args.poly)


def cmd_compute(args, budget):
    inv = _invariant(args)
    graph = load_graph(args.graph, args.in_format)
    poly = inv.compute(graph, budget)
    emit(args, render_poly(poly, inv.var, args.format),
         {'command': 'compute', 'poly': str(inv), 'var': inv.var, 'n': graph.n,
          'basis': _basis(poly), 'coefficients': poly.to_json()})
    return 0


def _parse_point(text, arity):
    try:
        values = [int(v) for v in text.split(',')]
    except ValueError:
        raise UsageError(f"--at expects integers, got {text!r}") from None
    if len(values) != arity:
        raise UsageError(f"--at expects {arity} value(s) for this polynomial, got {text!r}")
    return values


def cmd_eval(args, budget):
    inv = _invariant(args)
    graph = load_graph(args.graph, args.in_format)
    poly = inv.compute(graph, budget)
    point = _parse_point(args.at, 2 if isinstance(poly, BiPoly) else 1)
    value = poly.eval(*point)
    emit(args, str(value),
         {'command': 'eval', 'poly': str(inv), 'at': point, 'value': str(value)})
    return 0


def cmd_perm(args, budget):
    if args.decomp and args.method != 'tw':
        raise UsageError("--decomp requires --method tw")
    text, _ = read_source(args.matrix)
    matrix = parse_matrix(text)
    if args.strict and not matrix.is_symmetric():
        raise GraphParseError("Matrix is not symmetric (--strict)")
    width = None
    if args.method == 'naive':
        value = permanent_naive(matrix, budget)
    elif args.method == 'ryser':
        value = permanent_ryser(matrix, budget)
    else:
        if args.decomp:
            decomposition = parse_decomposition(read_source(args.decomp)[0])
        else:
            decomposition = greedy_tree_decomposition(support_graph(matrix))
        width = decomposition.width
        logging.info(f"Tree decomposition of width {width} with {len(decomposition.bags)} bags")
        value = permanent_tw(matrix, decomposition, budget)
    text = f"\\operatorname{{per}}(A) = {value}" if args.format == 'latex' else str(value)
    emit(args, text, {'command': 'perm', 'method': args.method, 'n': matrix.n,
                      'value': str(value), 'width': width})
    return 0


def cmd_mt(args, budget):
    if bool(args.formula) == bool(args.chromatic_of):
        raise UsageError("Give exactly one of --formula and --chromatic-of")
    if (args.count is None) == (not args.poly):
        raise UsageError("Give exactly one of --count and --poly")
    if args.formula:
        formula = parse_formula(args.formula)
        nvars = formula.nvars if args.nvars is None else args.nvars
    else:
        graph = load_graph(args.chromatic_of, args.in_format)
        formula = chromatic_formula(graph)
        nvars = graph.n if args.nvars is None else args.nvars
    if formula.nvars > nvars:
        raise UsageError(f"--nvars {nvars} is below the highest variable x{formula.nvars}")
    logging.debug(f"Counting formula {formula} over {nvars} variables")
    if args.count is not None:
        value = count_assignments(CountingInstance(formula, nvars, args.count), budget)
        emit(args, str(value), {'command': 'mt', 'formula': str(formula), 'nvars': nvars,
                                'k': args.count, 'count': str(value)})
        return 0
    if args.method == 'interpolate':
        ff = interpolated_polynomial(formula, nvars, budget)
    else:
        ff = counting_polynomial(formula, nvars, budget)
    poly = ff.to_standard()
    emit(args, render_poly(poly, 'k', args.format),
         {'command': 'mt', 'formula': str(formula), 'nvars': nvars, 'method': args.method,
          'coefficients': poly.to_json(), 'falling_factorial': ff.to_json()})
    return 0


def cmd_compare(args, budget):
    f, g = InvariantId.parse(args.f), InvariantId.parse(args.g)
    catalog = Catalog.from_file(args.catalog)
    report = distinguishing_report(f, g, catalog, budget)
    if args.format == 'json':
        payload = report.to_json()
        payload['command'] = 'compare'
        emit(args, payload=payload)
    else:
        sys.stdout.write(ReportRenderer().render_report(report, args.format))
    return 0 if report.same_power else EXIT_DIFFER


class CommandParser(argparse.ArgumentParser):
    """Reports bad command lines on one stderr line with the usage exit status.

    Subcommand parsers inherit this class through add_subparsers.
    """

    def error(self, message):
        message = " ".join(message.split())
        self.exit(EXIT_USAGE, f"polyzoo: error: {message}\n")


def build_parser():
    parser = CommandParser(prog="polyzoo",
                           description="Exact computation of graph polynomials.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text",
                        help="Output format (default: text)")
    common.add_argument("-c", "--config", help="YAML file with a 'budget' section")
    common.add_argument("--max-nodes", type=int, help="Recursion node budget (default: 200000)")
    common.add_argument("--max-k", type=int, help="Largest k for brute-force counting (default: 64)")
    common.add_argument("--max-width", type=int, help="Decomposition width cap (default: 12)")
    common.add_argument("--log-level", default="WARNING",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
                        help="Level of diagnostics on stderr (default: WARNING)")
    common.add_argument("--log-file", help="Also write diagnostics to this file")

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("--in-format", choices=("auto", "edgelist", "graph6", "name"),
                             default="auto", help="Graph input format (default: auto)")

    polynomial = argparse.ArgumentParser(add_help=False)
    polynomial.add_argument("--poly", choices=POLY_CHOICES, default="chromatic",
                            help="Polynomial to compute (default: chromatic)")
    polynomial.add_argument("--property",
                            help="Property for --poly harary, e.g. acyclic or edgeless&maxdeg:1")

    subparsers = parser.add_subparsers(title="subcommands", dest="subcommand", required=True)

    compute_parser = subparsers.add_parser("compute", parents=[common, graph_input, polynomial],
                                           help="Compute a graph polynomial")
    compute_parser.add_argument("graph", help="Graph file, name (K3, P4+K1) or inline text")
    compute_parser.set_defaults(func=cmd_compute)

    eval_parser = subparsers.add_parser("eval", parents=[common, graph_input, polynomial],
                                        help="Evaluate a graph polynomial")
    eval_parser.add_argument("graph", help="Graph file, name or inline text")
    eval_parser.add_argument("--at", required=True, help="k, or x,y for the Tutte polynomial")
    eval_parser.set_defaults(func=cmd_eval)

    perm_parser = subparsers.add_parser("perm", parents=[common],
                                        help="Permanent of an integer matrix")
    perm_parser.add_argument("matrix", help="Matrix file: n, then n rows of n integers")
    perm_parser.add_argument("--method", choices=("naive", "ryser", "tw"), default="tw",
                             help="Algorithm (default: tw)")
    perm_parser.add_argument("--decomp", help="Tree decomposition file for --method tw")
    perm_parser.add_argument("--strict", action="store_true",
                             help="Reject matrices that are not symmetric")
    perm_parser.set_defaults(func=cmd_perm)

    mt_parser = subparsers.add_parser("mt", parents=[common, graph_input],
                                      help="Count color tuples satisfying a formula")
    mt_parser.add_argument("--formula", help='Color formula, e.g. "x1 != x2 & x2 != x3"')
    mt_parser.add_argument("--chromatic-of", help="Use the coloring formula of this graph")
    mt_parser.add_argument("--nvars", type=int, help="Number of variables (default: highest index)")
    mt_parser.add_argument("--count", type=int, metavar="K", help="Count for K colors")
    mt_parser.add_argument("--poly", action="store_true", help="Print the counting polynomial")
    mt_parser.add_argument("--method", choices=("partition", "interpolate"), default="partition",
                           help="How to obtain the polynomial (default: partition)")
    mt_parser.set_defaults(func=cmd_mt)

    compare_parser = subparsers.add_parser("compare", parents=[common],
                                           help="Compare the distinctive power of two invariants")
    compare_parser.add_argument("catalog", help="Catalog file: one [label:]graph6 per line")
    compare_parser.add_argument("--f", required=True, help="First invariant, e.g. chromatic")
    compare_parser.add_argument("--g", required=True, help="Second invariant, e.g. harary:edgeless")
    compare_parser.set_defaults(func=cmd_compare)
    return parser


def _fail(error, status):
    message = " ".join(str(error).split())
    print(f"polyzoo: error: {message}", file=sys.stderr)
    return status


def main(argv=None):
    """Parses command-line arguments and dispatches to the subcommand."""
    args = build_parser().parse_args(argv)
    level = getattr(logging, args.log_level)
    setup_logging(args.log_file, level=level, stream_level=level)
    try:
        budget = resolve_budget(args)
        return args.func(args, budget)
    except UsageError as e:
        return _fail(e, EXIT_USAGE)
    except BudgetExceeded as e:
        return _fail(e, EXIT_BUDGET)
    except (GraphParseError, InvalidDecomposition) as e:
        return _fail(e, EXIT_INPUT)
    except (PolyzooError, ValueError, OSError) as e:
        return _fail(e, EXIT_INPUT)


if __name__ == "__main__":
    sys.exit(main())

#
# cli.py ends here
