import io
import json
import os
import subprocess
import sys

from django.core.management import call_command
from django.core.management.base import CommandError

MANAGE_PY = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    'preschwarz', 'manage.py',
)


def write_series(path, coeffs, radius_hint=1.0):
    payload = {
        'coeffs': [[float(c), 0.0] for c in coeffs],
        'radius_hint': radius_hint,
    }
    with open(path, 'w') as stream:
        json.dump(payload, stream)
    return str(path)


def koebe_coeffs(n_terms):
    return list(range(n_terms))


def truncated_starlike_hyperbola(s):
    return [
        0, 1, s, (3 * s * s + s) / 4, (17 * s ** 3 + 15 * s * s + 4 * s) / 36,
    ]


def run_command(*args):
    """(exit code, stdout) of an in-process management command."""
    stdout = io.StringIO()
    try:
        call_command(*args, stdout=stdout)
    except CommandError as error:
        return error.returncode, stdout.getvalue()
    return 0, stdout.getvalue()


def run_manage(*args, env=None):
    """Run manage.py in a child process, as a user would."""
    return subprocess.run(
        [sys.executable, MANAGE_PY, *args],
        capture_output=True, text=True, env={**os.environ, **(env or {})},
        timeout=120,
    )
