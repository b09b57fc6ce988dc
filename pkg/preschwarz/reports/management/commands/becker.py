from analytic.forms import SeriesForm
from maminda.fields import preschwarzian_of_series
from reports.base import ReportCommand, validated
from supnorm.forms import SearchForm
from supnorm.grid import GridSpec
from supnorm.search import becker_functional


BECKER_LIMIT = 1.0


class Command(ReportCommand):
    help = "Becker's univalence test: sup (1 - |z|^2)|z f''/f'| <= 1."
    template_name = 'reports/becker.txt'

    def add_report_arguments(self, parser):
        parser.add_argument('--series', help='PowerSeries JSON file')
        parser.add_argument('--grid', help='RxA, e.g. 512x1024')

    def build_report(self, options):
        series = validated(SeriesForm({'series': options['series']}))['series']
        grid = validated(SearchForm({'grid': options['grid']}))['grid']
        # stay inside the disk where the truncation is trusted
        r_max = min(grid.r_max, series.radius_hint * (1 - 1e-9))
        grid = GridSpec(grid.n_radial, grid.n_angular, r_max)

        result = becker_functional(
            preschwarzian_of_series(series), grid,
        )
        univalent = result.value <= BECKER_LIMIT
        payload = {
            'value': result.value,
            'argmax_r': result.arg_r,
            'argmax_theta': result.arg_theta,
            'radius_used': r_max,
            'verdict': 'univalent (Becker)' if univalent else 'inconclusive',
        }
        return {
            'result': result,
            'radius_used': r_max,
            'univalent': univalent,
            'payload': payload,
            'passed': univalent,
            'failure': (
                f'Becker functional {result.value:.6g} exceeds 1: inconclusive'
            ),
        }
