"""Shared plumbing of the report commands.

A command builds a context dict, like a view does, and the base class
renders it as text (a template) or JSON, writes it and maps the outcome
to an exit code: 0 when every requested check passed, 1 when a check
failed, 2 on bad input.
"""
import json
import logging

from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError
from django.template.loader import render_to_string

from core.exceptions import PreSchwarzError


logger = logging.getLogger(__name__)

EXIT_FAILED = 1
EXIT_USAGE = 2


def form_errors(form):
    return '; '.join(
        f'{name}: {" ".join(messages)}' if name != '__all__'
        else ' '.join(messages)
        for name, messages in form.errors.items()
    )


def validated(form):
    if not form.is_valid():
        raise ValidationError(form_errors(form))
    return form.cleaned_data


class ReportCommand(BaseCommand):
    template_name = None

    def add_arguments(self, parser):
        parser.add_argument(
            '--json', action='store_true', dest='as_json',
            help='Emit JSON with full precision.',
        )
        parser.add_argument('--out', help='Write the report to this path.')
        self.add_report_arguments(parser)

    def add_report_arguments(self, parser):
        pass

    def add_class_arguments(self, parser):
        parser.add_argument('--class', dest='family', help='shyp, sl, chyp or cl')
        parser.add_argument('--s', dest='s', help='class parameter')

    def build_report(self, options):
        """Return the template context; 'payload' is what JSON carries."""
        raise NotImplementedError

    def render_text(self, context):
        return render_to_string(self.template_name, context)

    def render_json(self, context):
        return json.dumps(context['payload'], indent=2) + '\n'

    def handle(self, *args, **options):
        try:
            context = self.build_report(options)
        except ValidationError as exc:
            raise CommandError(' '.join(exc.messages), returncode=EXIT_USAGE)
        except PreSchwarzError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

        if options['as_json']:
            document = self.render_json(context)
        else:
            document = self.render_text(context)
        self.write(document, options.get('out'))

        if context.get('passed') is False:
            logger.warning('%s: %s', self.__module__, context['failure'])
            raise CommandError(context['failure'], returncode=EXIT_FAILED)

    def write(self, document, path):
        if not path:
            self.stdout.write(document, ending='')
            return
        try:
            with open(path, 'w', encoding='utf-8', newline='') as stream:
                stream.write(document)
        except OSError as exc:
            raise CommandError(f'cannot write {path}: {exc}', returncode=EXIT_USAGE)
