from django import forms
from django.conf import settings

from core.exceptions import DomainError

from .grid import GridSpec


class SearchForm(forms.Form):
    grid = forms.CharField(required=False, help_text='RxA, e.g. 512x1024')
    tol = forms.FloatField(required=False, min_value=0)

    def clean_grid(self):
        text = self.cleaned_data['grid']
        if not text:
            return GridSpec.default()
        try:
            return GridSpec.parse(text)
        except DomainError as exc:
            raise forms.ValidationError(str(exc))

    def clean_tol(self):
        tol = self.cleaned_data['tol']
        if tol is None:
            return settings.PRESCHWARZ_VERIFY_TOLERANCE
        if tol == 0:
            raise forms.ValidationError('tol must be positive')
        return tol
