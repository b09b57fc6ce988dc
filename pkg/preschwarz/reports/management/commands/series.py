import json

from analytic.series import PowerSeries
from maminda.extremal import extremal_series
from reports.base import ReportCommand, validated
from reports.forms import SeriesTermsForm


class Command(ReportCommand):
    help = 'Write the Taylor series of the extremal function as JSON.'

    def add_report_arguments(self, parser):
        self.add_class_arguments(parser)
        parser.add_argument('--terms', help='number of coefficients')
        parser.add_argument(
            '--radius-hint', dest='radius_hint',
            help='radius inside which the truncation is trusted',
        )

    def build_report(self, options):
        data = validated(SeriesTermsForm({
            'family': options['family'],
            's': options['s'],
            'terms': options['terms'],
            'radius_hint': options['radius_hint'],
        }))
        series = extremal_series(data['spec'], data['terms'])
        series = PowerSeries(series.coeffs, data['radius_hint'])
        return {'payload': series.to_json()}

    def render_text(self, context):
        return json.dumps(context['payload']) + '\n'
