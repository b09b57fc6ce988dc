import os

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
root_dir_content = os.listdir(BASE_DIR)
PROJECT_DIR_NAME = 'preschwarz'
MANAGE_PATH = os.path.join(BASE_DIR, PROJECT_DIR_NAME)
# the project directory sits at the repository root
if (
        PROJECT_DIR_NAME not in root_dir_content
        or not os.path.isdir(MANAGE_PATH)
):
    assert False, (
        f'Project directory `{PROJECT_DIR_NAME}` not found in `{BASE_DIR}`.'
    )

project_dir_content = os.listdir(MANAGE_PATH)
FILENAME = 'manage.py'
if FILENAME not in project_dir_content:
    assert False, f'`{FILENAME}` not found in `{MANAGE_PATH}`.'

import django  # noqa: E402

assert django.VERSION >= (4, 2), 'Django 4.2 or newer is required'

from preschwarz.settings import INSTALLED_APPS  # noqa: E402

for app in ('analytic', 'maminda', 'rootfind', 'bounds', 'supnorm',
            'geometry', 'reports'):
    assert any(name.split('.')[0] == app for name in INSTALLED_APPS), (
        f'App `{app}` is missing from `settings.INSTALLED_APPS`'
    )

pytest_plugins = [
    'tests.fixtures.fixture_series',
]
