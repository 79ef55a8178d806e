from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="CountRun",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                (
                    "subcommand",
                    models.CharField(
                        choices=[
                            ("count", "Count roots"),
                            ("tree", "Build recursion tree"),
                        ],
                        default="count",
                        max_length=10,
                    ),
                ),
                (
                    "poly_text",
                    models.TextField(
                        help_text="Expression or coefficient list as given",
                        verbose_name="Polynomial",
                    ),
                ),
                ("p", models.CharField(max_length=24)),
                ("k", models.PositiveIntegerField()),
                ("seed", models.CharField(max_length=24)),
                ("count_decimal", models.TextField()),
                ("exact", models.BooleanField(default=True)),
                ("failures", models.JSONField(blank=True, default=list)),
                ("tree_depth", models.PositiveIntegerField(blank=True, null=True)),
                ("tree_nodes", models.PositiveIntegerField(blank=True, null=True)),
                ("elapsed_ms", models.FloatField(default=0)),
                ("created_at", models.DateTimeField(auto_now_add=True)),
            ],
            options={
                "ordering": ["-created_at"],
            },
        ),
    ]
