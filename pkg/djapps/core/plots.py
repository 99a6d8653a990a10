"""
Template contexts for the SVG artefacts.

Coordinates are projected to pixels here; the templates under
``templates/svg/`` only lay them out.
"""
import numpy as np

from djapps.core.exceptions import DomainError
from djapps.stagemap.mapping import default_stage_map


class PlotFrame:
    def __init__(self, x_range, y_range, width=760, height=520,
                 margin_top=50, margin_right=30, margin_bottom=80, margin_left=80):
        (self.x_min, self.x_max), (self.y_min, self.y_max) = x_range, y_range
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise DomainError('Empty plot range %s x %s.' % (x_range, y_range))
        self.width, self.height = width, height
        self.left = margin_left
        self.right = width - margin_right
        self.top = margin_top
        self.bottom = height - margin_bottom

    @property
    def plot_width(self):
        return self.right - self.left

    @property
    def plot_height(self):
        return self.bottom - self.top

    def x(self, value):
        return self.left + (value - self.x_min) / (self.x_max - self.x_min) * self.plot_width

    def y(self, value):
        return self.bottom - (value - self.y_min) / (self.y_max - self.y_min) * self.plot_height

    def point(self, x, y):
        return (float(self.x(x)), float(self.y(y)))

    def polyline(self, pairs):
        return [self.point(x, y) for x, y in pairs]

    def x_ticks(self, count=9, ages=False):
        stage_map = default_stage_map() if ages else None
        ticks = []
        for value in np.linspace(self.x_min, self.x_max, count):
            tick = {'pos': float(self.x(value)), 'label': '%g' % round(value, 2)}
            if stage_map is not None and value >= stage_map.stages[0]:
                tick['age'] = '%g y' % round(float(stage_map.stage_to_age(value)), 1)
            ticks.append(tick)
        return ticks

    def y_ticks(self, count=6):
        return [{'pos': float(self.y(value)), 'label': '%g' % round(value, 3)}
                for value in np.linspace(self.y_min, self.y_max, count)]

    def context(self, **kwargs):
        kwargs.update({
            'width': self.width, 'height': self.height,
            'left': self.left, 'right': self.right,
            'top': self.top, 'bottom': self.bottom,
            'plot_width': self.plot_width, 'plot_height': self.plot_height,
            'center_x': self.left + self.plot_width / 2,
            'center_y': self.top + self.plot_height / 2,
        })
        return kwargs


def _region_bars(frame, field, domain, threshold, columns=96):
    """Column runs of R >= threshold as pixel rectangles."""
    ts = np.linspace(domain.t_min, domain.t_max, columns + 1)
    cs = np.linspace(domain.c_min, domain.c_max, columns + 1)
    t_mid = 0.5 * (ts[:-1] + ts[1:])
    c_mid = 0.5 * (cs[:-1] + cs[1:])
    inside = field(t_mid[:, None], c_mid[None, :]) >= threshold
    bars = []
    for i in range(columns):
        j = 0
        while j < columns:
            if not inside[i, j]:
                j += 1
                continue
            start = j
            while j < columns and inside[i, j]:
                j += 1
            x0, y1 = frame.point(ts[i], cs[start])
            x1, y0 = frame.point(ts[i + 1], cs[j])
            bars.append({'x': x0, 'y': y0, 'width': x1 - x0, 'height': y1 - y0})
    return bars


def contour_context(field, domain, curves, threshold):
    frame = PlotFrame((domain.t_min, domain.t_max), (domain.c_min, domain.c_max))
    levels = []
    for index, curve in enumerate(curves):
        lines = [frame.polyline(line) for line in curve.polylines if len(line) > 1]
        label = None
        if lines:
            longest = max(lines, key=len)
            label = longest[len(longest) // 2]
        levels.append({'level': curve.level, 'index': index, 'lines': lines, 'label': label})
    return frame.context(
        title='Level curves of R(t, c)',
        x_label='stage t', y_label='concentration c (mg/kg)',
        x_ticks=frame.x_ticks(ages=True), y_ticks=frame.y_ticks(),
        levels=levels, threshold=threshold,
        region=_region_bars(frame, field, domain, threshold),
    )


def flow_context(field, domain, arrows, trajectories, cells=12):
    from djapps.dynamics.flow import portrait_arrows
    frame = PlotFrame((domain.t_min, domain.t_max), (domain.c_min, domain.c_max))
    arrows = arrows if arrows is not None else portrait_arrows(field, domain, cells)
    length = 0.4 * min(frame.plot_width, frame.plot_height) / cells
    items = []
    for t, c, dt, dc in arrows:
        x, y = frame.point(t, c)
        # unit direction in data space, scaled to pixels
        dx = dt * frame.plot_width / (domain.t_max - domain.t_min)
        dy = -dc * frame.plot_height / (domain.c_max - domain.c_min)
        norm = np.hypot(dx, dy) or 1.0
        items.append({'x1': x, 'y1': y,
                      'x2': x + length * dx / norm, 'y2': y + length * dy / norm})
    return frame.context(
        title='Gradient flow of R(t, c)',
        x_label='stage t', y_label='concentration c (mg/kg)',
        x_ticks=frame.x_ticks(ages=True), y_ticks=frame.y_ticks(),
        arrows=items,
        trajectories=[frame.polyline(tr.points) for tr in trajectories],
    )


def curvature_context(profile, report):
    ts = [t for t, _ in profile]
    ks = [k for _, k in profile]
    k_min = min(ks)
    frame = PlotFrame((min(ts), max(ts)), (k_min if k_min < 0 else -1.0, 0.0))
    loci = [
        {'x': float(frame.x(t)), 'label': '%.2f' % t, 'age': label}
        for t, label in zip(report.zero_loci, report.annotations)
    ]
    return frame.context(
        title='Curvature profile k(t) = -(R_tc)^2',
        x_label='stage t', y_label='k(t)',
        x_ticks=frame.x_ticks(count=11, ages=True), y_ticks=frame.y_ticks(),
        curve=frame.polyline(profile), loci=loci,
    )


def interpolation_context(table, samples=121):
    nodes = np.asarray(table.nodes)
    ts = np.linspace(nodes.min(), nodes.max(), samples)
    series = []
    pairs = zip(table.concentrations, table.interpolants())
    for index, (concentration, polynomial) in enumerate(pairs):
        series.append({
            'concentration': concentration,
            'index': index,
            'legend_y': 68 + 16 * index,
            'curve': list(zip(ts, polynomial(ts))),
            'nodes': list(zip(nodes, table.values[index])),
        })
    values = np.concatenate([[y for _, y in s['curve']] for s in series])
    span = float(values.max() - values.min()) or 1.0
    frame = PlotFrame((float(nodes.min()), float(nodes.max())),
                      (float(values.min()) - 0.05 * span, float(values.max()) + 0.05 * span))
    for s in series:
        s['curve'] = frame.polyline(s['curve'])
        s['nodes'] = frame.polyline(s['nodes'])
    return frame.context(
        title='Interpolated risk coefficients',
        x_label='stage t', y_label='risk coefficient',
        x_ticks=frame.x_ticks(ages=True), y_ticks=frame.y_ticks(),
        series=series,
    )
