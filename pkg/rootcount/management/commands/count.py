# rootcount/management/commands/count.py
from django.core.management.base import CommandError

from rootcount.exceptions import RootCountError
from rootcount.models import CountRun
from rootcount.utils import run_and_record

from ._base import RootCountCommand


class Command(RootCountCommand):
    help = "Counts the roots of an integer polynomial in Z/(p^k)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_engine_arguments(parser)
        parser.add_argument("--save", action="store_true", help="Store the run in the database")

    def handle(self, *args, **options):
        coeffs, text = self.read_polynomial(options)
        seed = self.read_seed(options)
        p, k = options["p"], options["k"]

        try:
            _, result, record = run_and_record(
                coeffs, p, k, seed, self.engine_config(options)
            )
        except RootCountError as e:
            raise CommandError(str(e))

        flag = "exact" if result.exact else "lower bound"
        self.emit_record(
            record, options, f"N_{{{p},{k}}}(f) = {result.count}  [{flag}, seed {seed}]"
        )
        if options["save"]:
            CountRun.from_record(record, "count", text)
        self.finish(result, options)
