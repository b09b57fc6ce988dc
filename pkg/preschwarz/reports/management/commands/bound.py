from bounds.theorems import norm_bound
from maminda.forms import ClassSpecForm
from reports.base import ReportCommand, validated


class Command(ReportCommand):
    help = 'Sharp upper bound of the pre-Schwarzian norm over a class.'
    template_name = 'reports/bound.txt'

    def add_report_arguments(self, parser):
        self.add_class_arguments(parser)

    def build_report(self, options):
        data = validated(ClassSpecForm(
            {'family': options['family'], 's': options['s']}
        ))
        result = norm_bound(data['spec'])
        payload = {
            'class': result.spec.code,
            's': result.spec.s,
            'bound': result.bound,
            'root': result.root,
            'sharp': result.sharp,
        }
        if result.solution is not None:
            payload['residual'] = result.solution.residual
        return {'result': result, 'payload': payload}
