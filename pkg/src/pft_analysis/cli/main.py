"""The ``pft`` command-line tool.

Subcommands::

    pft normalize FILE [--complete]
    pft build FILE [--dot OUT]
    pft analyze FILE [--periods]
    pft periods FILE [--max-period N] [--max-len N] [--budget N] [--max-desc-period N]
    pft family {xk,thm8} --k K [--force]
    pft equal FILE_A FILE_B [--max-block N]
    pft verify [--suite NAME ...] [--list] [--csv PATH]

Exit codes: 0 on success (or when every check passes / the shifts are
equal), 1 on a failed check, an inequality or a domain error, 2 on a usage
or parse error.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from typing import List, Optional

from ..config import PftConfig
from ..core.membership import periodic_membership
from ..core.normalize import normalize_pft
from ..core.words import PeriodicWord, encode_word, necklaces
from ..errors import PftError, SpecFileError
from ..families.theorem8 import theorem8_spec
from ..families.xk import xk_spec
from ..language.equality import separating_word, shifts_equal
from ..periods.descriptive import divisibility_conjecture_check, period_triple
from ..presentation.ms import build_ms
from ..utils.common import setup_logging, write_output
from ..verification.suites import SUITES, run_suites
from .reports import FORMATS, analyze_spec, render
from .spec_file import format_spec_document, load_spec_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pft", description="Analyze periodic-finite-type shifts")
    p.add_argument("--config", help="YAML file with search bounds (see config/default_bounds.yaml)")
    p.add_argument("-v", "--verbose", action="store_true", help="Debug logging and progress bars")
    p.add_argument("--format", default="text", choices=FORMATS, help="Report format")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="Rewrite a spec in normal form")
    s.add_argument("file")
    s.add_argument("--complete", action="store_true",
                   help="Also forbid phase-0 words that never occur at phase 0")

    s = sub.add_parser("build", help="Build the presentation and export it as DOT")
    s.add_argument("file")
    s.add_argument("--dot", help="Write DOT here instead of stdout")

    s = sub.add_parser("analyze", help="Irreducibility, period, entropy, characteristic polynomial")
    s.add_argument("file")
    s.add_argument("--periods", action="store_true", help="Include the three periods")

    s = sub.add_parser("periods", help="Sequential, graphical and descriptive periods")
    s.add_argument("file")
    s.add_argument("--max-period", type=int, help="Largest period tried for periodic points")
    s.add_argument("--max-len", type=int, help="Largest forbidden-word length for descriptions")
    s.add_argument("--budget", type=int, help="Largest candidate set searched exhaustively")
    s.add_argument("--max-desc-period", type=int, help="Largest description period tried")

    s = sub.add_parser("family", help="Generate a spec of a named family")
    s.add_argument("name", choices=["xk", "thm8"])
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--force", action="store_true", help="Allow k beyond the configured limit")

    s = sub.add_parser("equal", help="Compare the shifts of two specs")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--max-block", type=int, help="Largest period tried for a periodic witness")

    s = sub.add_parser("verify", help="Run the verification suites")
    s.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                   help="Suite to run (repeatable, default all)")
    s.add_argument("--list", action="store_true", help="List the suites and exit")
    s.add_argument("--csv", help="Also save the result table as CSV")
    return p


def _positive(value: Optional[int], name: str) -> Optional[int]:
    if value is not None and value < 1:
        raise ValueError(f"--{name} must be at least 1, got {value}")
    return value


def cmd_normalize(args, config: PftConfig) -> int:
    spec = load_spec_file(args.file)
    sys.stdout.write(format_spec_document(normalize_pft(spec, complete=args.complete)))
    return EXIT_OK


def cmd_build(args, config: PftConfig) -> int:
    spec = load_spec_file(args.file)
    graph = build_ms(spec)
    dot = graph.to_dot()
    if args.dot:
        out = write_output(args.dot, dot)
        sys.stdout.write(render({'states': graph.num_states, 'edges': graph.num_edges,
                                 'dot': str(out)}, args.format))
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_analyze(args, config: PftConfig) -> int:
    spec = load_spec_file(args.file)
    report = analyze_spec(spec, config, with_periods=args.periods)
    sys.stdout.write(render(report.to_dict(), args.format))
    return EXIT_OK


def cmd_periods(args, config: PftConfig) -> int:
    spec = load_spec_file(args.file)
    search = config.search
    overrides = {
        'max_period': _positive(args.max_period, "max-period"),
        'max_len': _positive(args.max_len, "max-len"),
        'subset_budget': _positive(args.budget, "budget"),
        'max_desc_period': _positive(args.max_desc_period, "max-desc-period"),
    }
    search = replace(search, **{k: v for k, v in overrides.items() if v is not None})
    config = replace(config, search=search)

    triple = period_triple(spec, config)
    data = triple.to_dict()
    data['divisibility'] = divisibility_conjecture_check(spec, triple, config).to_dict()
    sys.stdout.write(render(data, args.format))
    if args.format == 'text':
        sys.stdout.write("\n" + triple.t_desc.to_dataframe().to_string(index=False) + "\n")
    return EXIT_OK


def cmd_family(args, config: PftConfig) -> int:
    if args.name == 'xk':
        spec = xk_spec(args.k)
    else:
        spec = theorem8_spec(args.k, force=args.force, config=config.families)
    sys.stdout.write(format_spec_document(spec))
    return EXIT_OK


def cmd_equal(args, config: PftConfig) -> int:
    spec_a, spec_b = load_spec_file(args.file_a), load_spec_file(args.file_b)
    if spec_a.alphabet != spec_b.alphabet:
        raise ValueError(f"Alphabets differ: {spec_a.alphabet.symbols} vs {spec_b.alphabet.symbols}")
    alphabet = spec_a.alphabet
    spec_a, spec_b = normalize_pft(spec_a), normalize_pft(spec_b)
    graph_a, graph_b = build_ms(spec_a), build_ms(spec_b)
    equal = shifts_equal(graph_a, graph_b)
    data = {'equal': equal}
    if not equal:
        found = [(w, side) for w, side in ((separating_word(graph_a, graph_b), 'A'),
                                           (separating_word(graph_b, graph_a), 'B'))
                 if w is not None]
        word, side = min(found, key=lambda item: (len(item[0]), encode_word(item[0], alphabet.size)))
        data['separating_block'] = alphabet.format_word(word)
        data['block_only_in'] = side

        max_block = _positive(args.max_block, "max-block") or config.search.max_period
        data['periodic_witness'] = None
        for p in range(1, max_block + 1):
            hit = next((b for b in necklaces(alphabet.size, p)
                        if bool(periodic_membership(spec_a, PeriodicWord(b)))
                        != bool(periodic_membership(spec_b, PeriodicWord(b)))), None)
            if hit is not None:
                point = PeriodicWord(hit)
                data['periodic_witness'] = point.format(alphabet)
                data['witness_only_in'] = 'A' if periodic_membership(spec_a, point) else 'B'
                break
    sys.stdout.write(render(data, args.format))
    return EXIT_OK if equal else EXIT_FAILURE


def cmd_verify(args, config: PftConfig) -> int:
    if args.list:
        for name, suite in SUITES.items():
            doc = (suite.__doc__ or "").strip().splitlines()
            sys.stdout.write(f"{name}\t{doc[0] if doc else ''}\n")
        return EXIT_OK
    names: List[str] = args.suite or ["all"]
    if "all" in names:
        names = list(SUITES)
    table = run_suites(names, config)
    if args.csv:
        write_output(args.csv, table.to_csv(index=False))
    if args.format == 'json':
        sys.stdout.write(json.dumps(table.to_dict(orient='records'), indent=2, sort_keys=True,
                                    ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(table.to_string(index=False) + "\n")
    passed = bool(table['passed'].all())
    sys.stdout.write(f"{int(table['passed'].sum())}/{len(table)} checks passed\n")
    return EXIT_OK if passed else EXIT_FAILURE


COMMANDS = {
    'normalize': cmd_normalize,
    'build': cmd_build,
    'analyze': cmd_analyze,
    'periods': cmd_periods,
    'family': cmd_family,
    'equal': cmd_equal,
    'verify': cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(args.verbose)
    try:
        config = PftConfig.load_from_file(args.config) if args.config else PftConfig()
    except (ValueError, ImportError) as e:
        print(f"error: config: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.verbose:
        config.verbose = True

    try:
        return COMMANDS[args.command](args, config)
    except SpecFileError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PftError as e:
        print(f"error: {e.code}: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f"error: invalid-input: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
