import io
import json

from geometry.curves import hyperbola_boundary, limacon_boundary
from geometry.export import render_svg, write_csv
from reports.base import ReportCommand, validated
from reports.forms import CurveForm


class Command(ReportCommand):
    help = 'Sample the boundary of the image domain of a class.'

    def add_report_arguments(self, parser):
        self.add_class_arguments(parser)
        parser.add_argument('--n', help='number of samples')
        parser.add_argument('--svg', action='store_true', help='emit SVG')

    def sample(self, data):
        spec = data['spec']
        if spec.family.is_hyperbolic:
            return hyperbola_boundary(spec.s, data['n'])
        return limacon_boundary(spec.s, data['n'])

    def build_report(self, options):
        data = validated(CurveForm({
            'family': options['family'], 's': options['s'], 'n': options['n'],
        }))
        curve = self.sample(data)
        return {
            'curve': curve,
            'svg': options.get('svg', False),
            'payload': {
                'label': curve.label,
                'columns': list(curve.columns),
                'points': curve.points.tolist(),
            },
        }

    def render_text(self, context):
        if context['svg']:
            return render_svg(context['curve'])
        buffer = io.StringIO()
        write_csv(context['curve'], buffer)
        return buffer.getvalue()

    def render_json(self, context):
        return json.dumps(context['payload']) + '\n'
