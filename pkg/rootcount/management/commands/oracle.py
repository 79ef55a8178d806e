# rootcount/management/commands/oracle.py
import time

from django.conf import settings
from django.core.management.base import CommandError

from rootcount.arith import PrimePowerRing
from rootcount.exceptions import RootCountError
from rootcount.oracle import brute_force_count
from rootcount.poly_zpk import PolyMod
from rootcount.utils import build_record, integer_degree

from ._base import RootCountCommand


class Command(RootCountCommand):
    help = "Counts roots in Z/(p^k) by evaluating at every residue (ground truth)."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--max-brute", type=int, default=None,
            help="Refuse rings with more residues than this",
        )

    def handle(self, *args, **options):
        coeffs, _ = self.read_polynomial(options)
        seed = self.read_seed(options)
        p, k = options["p"], options["k"]
        guard = options["max_brute"]
        if guard is None:
            guard = settings.ROOTCOUNT["MAX_BRUTE"]
        if guard < 1:
            raise CommandError("--max-brute must be positive")

        started = time.perf_counter()
        try:
            f = PolyMod.from_integer_coeffs(coeffs, PrimePowerRing(p, k))
            count = brute_force_count(f, guard=guard)
        except RootCountError as e:
            raise CommandError(str(e))
        elapsed_ms = (time.perf_counter() - started) * 1000

        record = build_record(
            p=p, k=k, degree=integer_degree(coeffs), count=count, exact=True,
            seed=seed, elapsed_ms=elapsed_ms,
        )
        self.emit_record(record, options, str(count))
