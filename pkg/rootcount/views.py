# rootcount/views.py
import logging

from django.http import HttpResponse, JsonResponse
from django.views.decorators.http import require_GET

from .counter import CountConfig
from .forms import CountRequestForm
from .utils import render_dot, run_and_record

logger = logging.getLogger(__name__)


def _bad_request(form):
    return JsonResponse({"errors": form.errors.get_json_data()}, status=400)


@require_GET
def count_view(request):
    """The same JSON record `manage.py count --json` prints."""
    form = CountRequestForm(request.GET)
    if not form.is_valid():
        return _bad_request(form)

    data = form.cleaned_data
    _, result, record = run_and_record(
        data["coefficients"], data["p"], data["k"], data["seed"],
        CountConfig.from_settings(),
    )
    if not result.exact:
        logger.warning("under-count served for p=%s k=%s", data["p"], data["k"])
    return JsonResponse(record)


@require_GET
def tree_dot_view(request):
    form = CountRequestForm(request.GET)
    if not form.is_valid():
        return _bad_request(form)

    data = form.cleaned_data
    root, _, _ = run_and_record(
        data["coefficients"], data["p"], data["k"], data["seed"],
        CountConfig.from_settings(), tree=True,
    )
    if root is None:
        return JsonResponse(
            {"errors": {"poly": [{"message": "vanishes identically mod p^k; there is no tree"}]}},
            status=400,
        )
    return HttpResponse(render_dot(root, data["p"]), content_type="text/vnd.graphviz")
