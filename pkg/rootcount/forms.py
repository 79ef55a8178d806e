from django import forms
from django.conf import settings

from .arith import PrimePowerRing
from .exceptions import InvalidRingError, PolySyntaxError
from .parser import parse_coeffs, parse_poly


class CountRequestForm(forms.Form):
    """Validates the query string of the count and tree endpoints."""

    poly = forms.CharField(required=False, max_length=10_000)
    coeffs = forms.CharField(required=False, max_length=100_000)
    p = forms.IntegerField(min_value=2)
    k = forms.IntegerField(min_value=1, max_value=100_000)
    seed = forms.IntegerField(required=False, min_value=0, max_value=2**64 - 1)

    def clean_seed(self):
        seed = self.cleaned_data.get("seed")
        return settings.ROOTCOUNT["SEED"] if seed is None else seed

    def clean(self):
        cleaned = super().clean()
        poly, coeffs = cleaned.get("poly"), cleaned.get("coeffs")

        if bool(poly) == bool(coeffs):
            raise forms.ValidationError("Give exactly one of 'poly' or 'coeffs'.")

        max_degree = settings.ROOTCOUNT["MAX_DEGREE"]
        try:
            if poly:
                cleaned["coefficients"] = parse_poly(poly, max_degree).coefficients()
            else:
                cleaned["coefficients"] = parse_coeffs(coeffs, max_degree)
        except PolySyntaxError as e:
            self.add_error("poly" if poly else "coeffs", str(e))

        p, k = cleaned.get("p"), cleaned.get("k")
        if p is not None and k is not None:
            try:
                PrimePowerRing(p, k)
            except InvalidRingError as e:
                self.add_error("p", str(e))
        return cleaned
