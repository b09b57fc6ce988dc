from django import template


register = template.Library()

SIGNIFICANT_DIGITS = 6


def sigfigs(value, digits=SIGNIFICANT_DIGITS):
    if value is None or value == '':
        return '-'
    return f'{float(value):.{int(digits)}g}'


register.filter('sigfigs', sigfigs)


@register.filter
def full(value):
    """17 significant digits: enough to re-read the exact double."""
    if value is None or value == '':
        return '-'
    return f'{float(value):.17g}'
