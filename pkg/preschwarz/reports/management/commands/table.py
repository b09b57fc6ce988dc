from django.conf import settings

from reports.base import ReportCommand, validated
from reports.forms import TableForm
from reports.tables import TABLE_FAMILIES, reproduce_table


class Command(ReportCommand):
    help = 'Recompute a published table and compare it cell by cell.'
    template_name = 'reports/table.txt'

    def add_report_arguments(self, parser):
        parser.add_argument('--which', help='1, 2 or 3')

    def build_report(self, options):
        which = validated(TableForm({'which': options['which']}))['which']
        tol = settings.PRESCHWARZ_TABLE_TOLERANCE
        rows = reproduce_table(which)
        failed = [row for row in rows if not row.within(tol)]
        payload = {
            'table': which,
            'class': TABLE_FAMILIES[which].value,
            'tolerance': tol,
            'rows': [
                {
                    's': row.label,
                    's_value': row.s,
                    'root': row.root,
                    'bound': row.bound,
                    'published_root': row.published_root,
                    'published_bound': row.published_bound,
                    'root_delta': row.root_delta,
                    'bound_delta': row.bound_delta,
                }
                for row in rows
            ],
            'passed': not failed,
        }
        return {
            'which': which,
            'family': TABLE_FAMILIES[which],
            'rows': rows,
            'tolerance': tol,
            'payload': payload,
            'passed': not failed,
            'failure': (
                f'{len(failed)} row(s) of table {which} differ by {tol:g} or more'
            ),
        }
