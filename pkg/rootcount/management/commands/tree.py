# rootcount/management/commands/tree.py
import json
from pathlib import Path

from django.core.management.base import CommandError

from rootcount.counter import fold_tree, tree_stats
from rootcount.exceptions import RootCountError
from rootcount.models import CountRun
from rootcount.utils import dump_record, render_dot, run_and_record, tree_to_dict

from ._base import RootCountCommand


class Command(RootCountCommand):
    help = "Builds the recursion tree of the root count and exports it as DOT or JSON."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_engine_arguments(parser)
        parser.add_argument(
            "--tree-out", help="Write the tree to this path (.dot or .json)"
        )
        parser.add_argument(
            "--stream", action="store_true",
            help="Do not materialize the tree; report statistics only",
        )
        parser.add_argument("--save", action="store_true", help="Store the run in the database")

    def handle(self, *args, **options):
        coeffs, text = self.read_polynomial(options)
        seed = self.read_seed(options)
        p, k = options["p"], options["k"]
        tree_out = options["tree_out"]
        if tree_out and Path(tree_out).suffix not in (".dot", ".json"):
            raise CommandError("--tree-out must end in .dot or .json")

        config = self.engine_config(options, materialize=not options["stream"])
        try:
            root, result, record = run_and_record(coeffs, p, k, seed, config, tree=True)
        except RootCountError as e:
            raise CommandError(str(e))

        if root is not None:
            # the fold must reproduce the streamed count exactly
            if p**result.scale_exponent * fold_tree(root) != result.count:
                raise CommandError("tree fold disagrees with the count")
            if tree_out:
                self._write_tree(root, p, Path(tree_out))

        if options["json"]:
            self.stdout.write(dump_record(record))
        elif root is not None and not tree_out:
            self.stdout.write(render_dot(root, p), ending="")
        else:
            summary = tree_stats(root) if root is not None else None
            widths = "" if summary is None else f", widths {list(summary.widths)}"
            self.stdout.write(
                f"N_{{{p},{k}}}(f) = {result.count}  "
                f"[depth {result.stats.depth}, {result.stats.nodes} nodes{widths}]"
            )

        if options["save"]:
            CountRun.from_record(record, "tree", text)
        self.finish(result, options)

    def _write_tree(self, root, p, path):
        if path.suffix == ".dot":
            path.write_text(render_dot(root, p))
        else:
            path.write_text(json.dumps(tree_to_dict(root), indent=2))
        self.stderr.write(self.style.SUCCESS(f"Tree written to {path}"))
