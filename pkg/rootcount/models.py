# rootcount/models.py
from django.db import models

from .constants import SAVED_SUBCOMMANDS


class CountRun(models.Model):
    """One persisted count/tree invocation, mirroring its JSON record."""

    subcommand = models.CharField(max_length=10, choices=SAVED_SUBCOMMANDS, default="count")
    poly_text = models.TextField("Polynomial", help_text="Expression or coefficient list as given")

    # p fits in 64 bits but counts do not fit in anything; keep both as text
    p = models.CharField(max_length=24)
    k = models.PositiveIntegerField()
    seed = models.CharField(max_length=24)

    count_decimal = models.TextField()
    exact = models.BooleanField(default=True)
    failures = models.JSONField(default=list, blank=True)

    tree_depth = models.PositiveIntegerField(null=True, blank=True)
    tree_nodes = models.PositiveIntegerField(null=True, blank=True)
    elapsed_ms = models.FloatField(default=0)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ["-created_at"]

    @classmethod
    def from_record(cls, record, subcommand, poly_text):
        tree = record["tree"] or {}
        return cls.objects.create(
            subcommand=subcommand,
            poly_text=poly_text,
            p=record["p"],
            k=record["k"],
            seed=record["seed"],
            count_decimal=record["count_decimal"],
            exact=record["exact"],
            failures=record["failures"],
            tree_depth=tree.get("depth"),
            tree_nodes=tree.get("nodes"),
            elapsed_ms=record["elapsed_ms"],
        )

    def __str__(self):
        flag = "exact" if self.exact else "UNDER-COUNT"
        return f"N_{{{self.p},{self.k}}} = {self.count_decimal[:24]} ({flag})"
