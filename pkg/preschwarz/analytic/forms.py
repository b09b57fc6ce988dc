import json

from django import forms

from core.exceptions import DomainError

from .series import PowerSeries


class SeriesForm(forms.Form):
    """Loads a PowerSeries JSON file named on the command line."""
    series = forms.CharField(help_text='Path of the series JSON file')

    def clean_series(self):
        path = self.cleaned_data['series']
        try:
            with open(path, encoding='utf-8') as stream:
                payload = json.load(stream)
        except OSError as exc:
            raise forms.ValidationError(f'cannot read {path}: {exc}')
        except json.JSONDecodeError as exc:
            raise forms.ValidationError(f'{path} is not valid JSON: {exc}')
        try:
            return PowerSeries.from_json(payload)
        except DomainError as exc:
            raise forms.ValidationError(f'malformed series in {path}: {exc}')
