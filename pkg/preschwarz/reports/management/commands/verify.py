from bounds.theorems import norm_bound
from maminda.fields import extremal_preschwarzian
from maminda.forms import ClassSpecForm
from reports.base import ReportCommand, validated
from supnorm.forms import SearchForm
from supnorm.search import sup_hyperbolic_norm


# A numerical sup may overshoot a sharp bound by rounding only.
OVERSHOOT = 1e-9


class Command(ReportCommand):
    help = (
        'Compare the theorem bound with the numerical norm of the '
        'extremal function.'
    )
    template_name = 'reports/verify.txt'

    def add_report_arguments(self, parser):
        self.add_class_arguments(parser)
        parser.add_argument('--grid', help='RxA, e.g. 512x1024')
        parser.add_argument('--tol', help='largest accepted gap')

    def build_report(self, options):
        spec = validated(ClassSpecForm(
            {'family': options['family'], 's': options['s']}
        ))['spec']
        search = validated(SearchForm(
            {'grid': options['grid'], 'tol': options['tol']}
        ))
        tol = search['tol']

        bound = norm_bound(spec)
        field = extremal_preschwarzian(spec)
        sup = sup_hyperbolic_norm(
            field, search['grid'], upper_half=field.real_symmetric,
        )
        gap = bound.bound - sup.value
        majorized = gap >= -OVERSHOOT
        passed = majorized and gap < tol if bound.sharp else None

        payload = {
            'class': spec.code,
            's': spec.s,
            'bound': bound.bound,
            'sup': sup.value,
            'gap': gap,
            'argmax_r': sup.arg_r,
            'argmax_theta': sup.arg_theta,
            'refined': sup.refined,
            'sharp': bound.sharp,
            'majorized': majorized,
            'tolerance': tol,
            'passed': passed,
        }
        return {
            'spec': spec,
            'bound': bound,
            'sup': sup,
            'gap': gap,
            'tol': tol,
            'majorized': majorized,
            'payload': payload,
            'passed': passed,
            'failure': (
                f'{spec}: gap {gap:.3g} outside [-{OVERSHOOT:g}, {tol:g})'
            ),
        }
