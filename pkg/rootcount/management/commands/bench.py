# rootcount/management/commands/bench.py
import random
import time
from concurrent.futures import ProcessPoolExecutor

from django.conf import settings
from django.core.management.base import CommandError

from rootcount.counter import count_roots
from rootcount.exceptions import RootCountError
from rootcount.utils import (allow_long_decimals, build_record, dump_record,
                             integer_degree, random_cubic_product,
                             write_bench_csv)

from ._base import RootCountCommand


def run_instance(index, p, k, seed, instances, factors, config):
    """
    One benchmark instance: a random product of cubics, counted under two
    seeds. Module level so worker processes can unpickle it.
    """
    allow_long_decimals()
    instance_seed = seed + index
    coeffs = random_cubic_product(random.Random(instance_seed), p, k, factors)

    started = time.perf_counter()
    first = count_roots(coeffs, p, k, seed=instance_seed, config=config)
    elapsed_ms = (time.perf_counter() - started) * 1000
    second = count_roots(coeffs, p, k, seed=instance_seed + instances, config=config)

    # two exact runs must agree; an inexact run may only fall short
    if first.exact and second.exact:
        agrees = first.count == second.count
    elif first.exact:
        agrees = second.count <= first.count
    elif second.exact:
        agrees = first.count <= second.count
    else:
        agrees = True

    record = build_record(
        p=p, k=k, degree=integer_degree(coeffs), count=first.count,
        exact=first.exact, failures=first.failures,
        tree=first.stats if first.stats.nodes else None,
        seed=instance_seed, elapsed_ms=elapsed_ms,
    )
    return record, agrees


class Command(RootCountCommand):
    help = (
        "Times the counter on random products of cubics and cross-checks "
        "each count against a second seed."
    )
    needs_polynomial = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_engine_arguments(parser)
        parser.add_argument("--instances", type=int, default=10)
        parser.add_argument(
            "--factors", type=int, default=None,
            help="Cubics multiplied together per instance (5 gives degree 15)",
        )
        parser.add_argument("--workers", type=int, default=1)

    def handle(self, *args, **options):
        seed = self.read_seed(options)
        p, k = options["p"], options["k"]
        instances = options["instances"]
        factors = options["factors"]
        if factors is None:
            factors = settings.ROOTCOUNT["BENCH_FACTORS"]
        workers = options["workers"]
        if instances < 1 or factors < 1 or workers < 1:
            raise CommandError("--instances, --factors and --workers must be positive")

        config = self.engine_config(options)
        jobs = [(i, p, k, seed, instances, factors, config) for i in range(instances)]
        try:
            if workers == 1:
                outcomes = [run_instance(*job) for job in jobs]
            else:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    outcomes = list(pool.map(run_instance, *zip(*jobs)))
        except RootCountError as e:
            raise CommandError(str(e))

        if options["json"]:
            for record, _ in outcomes:
                self.stdout.write(dump_record(record))
        else:
            write_bench_csv(
                self.stdout,
                (
                    {
                        "index": i,
                        "seed": record["seed"],
                        "degree": record["degree"],
                        "count_decimal": record["count_decimal"],
                        "exact": record["exact"],
                        "agrees": agrees,
                        "elapsed_ms": record["elapsed_ms"],
                    }
                    for i, (record, agrees) in enumerate(outcomes)
                ),
            )

        disagreeing = [i for i, (_, agrees) in enumerate(outcomes) if not agrees]
        if disagreeing:
            raise CommandError(f"seeds disagree on instance(s) {disagreeing}")
        inexact = [i for i, (record, _) in enumerate(outcomes) if not record["exact"]]
        if inexact:
            raise CommandError(
                f"under-count announced on instance(s) {inexact}", returncode=2
            )
