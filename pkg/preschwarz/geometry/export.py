import csv

from django.template.loader import render_to_string


SVG_TEMPLATE = 'geometry/polyline.svg'
SVG_SIZE = 480
SVG_MARGIN = 0.05


def write_csv(curve, stream, header=None):
    """One point per row with 17 significant digits."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header or curve.columns)
    for x, y in curve.points:
        writer.writerow([f'{x:.17g}', f'{y:.17g}'])


def render_svg(curve):
    xs, ys = curve.xs, curve.ys
    width = max(float(xs.max() - xs.min()), 1e-12)
    height = max(float(ys.max() - ys.min()), 1e-12)
    pad = SVG_MARGIN * max(width, height)
    # the group flips y, so the box spans -max(y) .. -min(y)
    viewbox = (
        float(xs.min()) - pad, -float(ys.max()) - pad,
        width + 2 * pad, height + 2 * pad,
    )
    scale = SVG_SIZE / max(viewbox[2], viewbox[3])
    context = {
        'label': curve.label,
        'viewbox': ' '.join(f'{v:.6g}' for v in viewbox),
        'width': round(viewbox[2] * scale),
        'height': round(viewbox[3] * scale),
        'stroke': f'{max(viewbox[2], viewbox[3]) / 400:.3g}',
        'points': ' '.join(f'{x:.6g},{y:.6g}' for x, y in curve.points),
    }
    return render_to_string(SVG_TEMPLATE, context)
