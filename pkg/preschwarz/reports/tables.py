"""Recomputation of the published root/bound tables."""
import csv
import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from django.conf import settings

from bounds.theorems import norm_bound
from core.exceptions import DomainError
from maminda.classes import ClassSpec, Family


logger = logging.getLogger(__name__)

TABLE_FAMILIES = {
    1: Family.STAR_HYP,
    2: Family.STAR_LIMACON,
    3: Family.CONV_HYP,
}

SQRT_LABEL = re.compile(r'^(\d+)/sqrt\((\d+)\)$')


def parse_s_label(label):
    """'1/2' -> 0.5, '1/sqrt(2)' -> 0.7071..."""
    label = label.strip()
    match = SQRT_LABEL.match(label)
    try:
        if match:
            return int(match.group(1)) / math.sqrt(int(match.group(2)))
        return float(Fraction(label))
    except (ValueError, ZeroDivisionError):
        raise DomainError(f'cannot read s value {label!r}')


@dataclass(frozen=True)
class TableRow:
    which: int
    label: str
    s: float
    root: float
    bound: float
    published_root: float
    published_bound: float

    @property
    def root_delta(self):
        return self.root - self.published_root

    @property
    def bound_delta(self):
        return self.bound - self.published_bound

    def within(self, tol):
        return abs(self.root_delta) < tol and abs(self.bound_delta) < tol


def load_published(path=None):
    """{table id: [(label, root, bound), ...]} in file order."""
    path = path or settings.PRESCHWARZ_PUBLISHED_TABLES
    tables = {}
    with open(path, newline='', encoding='utf-8') as stream:
        lines = (line for line in stream if not line.startswith('#'))
        for record in csv.DictReader(lines):
            tables.setdefault(int(record['table']), []).append(
                (record['s'], float(record['root']), float(record['bound']))
            )
    return tables


def reproduce_table(which, path=None):
    if which not in TABLE_FAMILIES:
        raise DomainError(f'unknown table {which!r}; expected 1, 2 or 3')
    family = TABLE_FAMILIES[which]
    rows = []
    for label, published_root, published_bound in load_published(path)[which]:
        result = norm_bound(ClassSpec(family, parse_s_label(label)))
        rows.append(TableRow(
            which, label, result.spec.s, result.root, result.bound,
            published_root, published_bound,
        ))
    logger.debug('table %d: %d rows', which, len(rows))
    return rows
