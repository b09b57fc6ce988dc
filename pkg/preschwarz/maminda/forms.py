from django import forms

from core.exceptions import SpecRangeError

from .classes import ClassSpec, Family


class ClassSpecForm(forms.Form):
    family = forms.ChoiceField(choices=Family.choices)
    s = forms.FloatField()

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        try:
            cleaned_data['spec'] = ClassSpec(
                Family(cleaned_data['family']), cleaned_data['s']
            )
        except SpecRangeError as exc:
            raise forms.ValidationError(str(exc))
        return cleaned_data
