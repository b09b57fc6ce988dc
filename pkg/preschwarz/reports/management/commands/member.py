from analytic.forms import SeriesForm
from maminda.forms import ClassSpecForm
from maminda.membership import sample_membership
from reports.base import ReportCommand, validated
from reports.forms import MembershipGridForm


class Command(ReportCommand):
    help = (
        'Sample the subordination condition of a class for a series; '
        'a necessary check, not a proof of membership.'
    )
    template_name = 'reports/member.txt'

    def add_report_arguments(self, parser):
        parser.add_argument('--series', help='PowerSeries JSON file')
        self.add_class_arguments(parser)
        parser.add_argument('--grid', help='RxA, e.g. 64x256')
        parser.add_argument('--r-max', dest='r_max', help='outermost radius')

    def build_report(self, options):
        series = validated(SeriesForm({'series': options['series']}))['series']
        spec = validated(ClassSpecForm(
            {'family': options['family'], 's': options['s']}
        ))['spec']
        grid = validated(MembershipGridForm(
            {'grid': options['grid'], 'r_max': options['r_max']}
        ))['membership_grid']

        report = sample_membership(
            series, spec, grid.n_radial, grid.n_angular, grid.r_max,
        )
        first = report.first_outside
        payload = {
            'class': spec.code,
            's': spec.s,
            'radius_used': report.radius_used,
            'samples': report.samples,
            'inside': report.inside,
            'fraction': report.fraction,
            'consistent': report.consistent,
            'first_outside': None if first is None else [first.real, first.imag],
        }
        return {
            'report': report,
            'payload': payload,
            'passed': report.consistent,
            'failure': (
                f'{report.samples - report.inside} of {report.samples} '
                f'samples leave the image domain of {spec}'
            ),
        }
