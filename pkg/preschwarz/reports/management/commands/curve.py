from geometry.curves import critical_curve

from .boundary import Command as BoundaryCommand


class Command(BoundaryCommand):
    help = 'Sample the critical-point function of a class on (0, 1).'

    def sample(self, data):
        return critical_curve(data['spec'], data['n'])
