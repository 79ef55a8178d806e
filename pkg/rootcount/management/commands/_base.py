# rootcount/management/commands/_base.py
import secrets
import sys

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from rootcount.constants import EXIT_USAGE, FAILURE_MESSAGE, SUCCESS_MESSAGE
from rootcount.counter import CountConfig
from rootcount.exceptions import PolySyntaxError
from rootcount.parser import parse_coeffs, parse_poly
from rootcount.utils import dump_record


class RootCountCommand(BaseCommand):
    """Flags and plumbing shared by count, tree, oracle and bench."""

    needs_polynomial = True

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        argparse_error = parser.error

        # argparse exits with 2 on bad flags; 2 is reserved for under-counts
        def error(message):
            if parser.called_from_command_line:
                parser.print_usage(sys.stderr)
                parser.exit(EXIT_USAGE, f"{parser.prog}: error: {message}\n")
            argparse_error(message)

        parser.error = error
        return parser

    def add_arguments(self, parser):
        if self.needs_polynomial:
            source = parser.add_mutually_exclusive_group(required=True)
            source.add_argument("--poly", help="Expression in x, e.g. 'x^10 - 10*x + 738'")
            source.add_argument("--coeffs", help="Decimal coefficients c0,c1,...,cd")
        parser.add_argument("--p", type=int, required=True, help="Prime p")
        parser.add_argument("--k", type=int, required=True, help="Exponent k >= 1")
        parser.add_argument("--seed", type=int, default=None, help="RNG seed (u64)")
        parser.add_argument(
            "--random-seed", action="store_true", help="Draw the seed from system entropy"
        )
        parser.add_argument("--json", action="store_true", help="Machine-readable output")

    def add_engine_arguments(self, parser):
        parser.add_argument(
            "--split-budget", type=int, default=None,
            help="Absolute attempts per randomized split (0 forces failures)",
        )
        parser.add_argument(
            "--small-p-threshold", type=int, default=None,
            help="Enumerate roots instead of splitting when p is at most this",
        )

    # --- helpers ---

    def read_polynomial(self, options):
        """(coefficients, source text) from --poly or --coeffs."""
        try:
            max_degree = settings.ROOTCOUNT["MAX_DEGREE"]
            if options.get("poly") is not None:
                coeffs = parse_poly(options["poly"], max_degree).coefficients()
                return coeffs, options["poly"]
            return parse_coeffs(options["coeffs"], max_degree), options["coeffs"]
        except PolySyntaxError as e:
            raise CommandError(f"Invalid polynomial: {e}")

    def read_seed(self, options):
        if options["random_seed"]:
            return secrets.randbits(64)
        seed = options["seed"]
        if seed is None:
            return settings.ROOTCOUNT["SEED"]
        if not 0 <= seed < 2**64:
            raise CommandError("--seed must be an unsigned 64-bit integer")
        return seed

    def engine_config(self, options, **overrides):
        return CountConfig.from_settings(
            split_budget=options.get("split_budget"),
            small_p_threshold=options.get("small_p_threshold"),
            **overrides,
        )

    def emit_record(self, record, options, human):
        if options["json"]:
            self.stdout.write(dump_record(record))
        else:
            self.stdout.write(human)

    def finish(self, result, options):
        """Announce the Las Vegas verdict; under-counts exit with status 2."""
        if not result.exact:
            paths = ", ".join(str(list(p)) for p in result.failures)
            self.stderr.write(self.style.WARNING(f"Root isolation failed at node(s) {paths}"))
            raise CommandError(FAILURE_MESSAGE, returncode=2)
        if not options["json"]:
            self.stdout.write(self.style.SUCCESS(SUCCESS_MESSAGE))
