from django import forms
from django.conf import settings

from core.exceptions import DomainError
from maminda.forms import ClassSpecForm
from supnorm.grid import GridSpec

from .tables import TABLE_FAMILIES


class TableForm(forms.Form):
    which = forms.TypedChoiceField(
        choices=[(str(k), str(k)) for k in TABLE_FAMILIES], coerce=int,
    )


class CurveForm(ClassSpecForm):
    n = forms.IntegerField(min_value=2, required=False)

    def clean_n(self):
        return self.cleaned_data['n'] or 512


class SeriesTermsForm(ClassSpecForm):
    terms = forms.IntegerField(min_value=2, required=False)
    radius_hint = forms.FloatField(required=False, min_value=0, max_value=1)

    def clean_terms(self):
        return self.cleaned_data['terms'] or settings.PRESCHWARZ_SERIES_TERMS

    def clean_radius_hint(self):
        radius = self.cleaned_data['radius_hint']
        if radius is None:
            return 1.0
        if radius == 0:
            raise forms.ValidationError('radius hint must be positive')
        return radius


class MembershipGridForm(forms.Form):
    grid = forms.CharField(required=False, help_text='RxA, e.g. 64x256')
    r_max = forms.FloatField(required=False)

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        r_max = cleaned_data.get('r_max')
        if r_max is None:
            r_max = settings.PRESCHWARZ_MEMBER_R_MAX
        try:
            if cleaned_data.get('grid'):
                grid = GridSpec.parse(cleaned_data['grid'], r_max)
            else:
                n_radial, n_angular = settings.PRESCHWARZ_MEMBER_GRID
                grid = GridSpec(n_radial, n_angular, r_max)
        except DomainError as exc:
            raise forms.ValidationError(str(exc))
        cleaned_data['membership_grid'] = grid
        return cleaned_data
