from maminda.classes import Family
from maminda.forms import ClassSpecForm
from reports.base import ReportCommand, validated
from rootfind.equations import root_cl_closed
from rootfind.solver import solve_critical


class Command(ReportCommand):
    help = 'Root of the critical-point equation of a class.'
    template_name = 'reports/root.txt'

    def add_report_arguments(self, parser):
        self.add_class_arguments(parser)

    def build_report(self, options):
        data = validated(ClassSpecForm(
            {'family': options['family'], 's': options['s']}
        ))
        spec = data['spec']
        solution = solve_critical(spec)
        payload = {
            'class': spec.code,
            's': spec.s,
            'root': solution.root,
            'residual': solution.residual,
            'iterations': solution.iterations,
        }
        if spec.family == Family.CONV_LIMACON:
            payload['closed_form'] = root_cl_closed(spec.s)
        return {'spec': spec, 'solution': solution, 'payload': payload}
