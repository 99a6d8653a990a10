from django import template

register = template.Library()

PALETTE = (
    '#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b',
    '#e377c2', '#7f7f7f', '#bcbd22', '#17becf',
)


@register.filter
def px(value):
    return '%.2f' % value


@register.filter
def points(pairs):
    """Pixel pairs as an SVG ``points`` attribute."""
    return ' '.join('%.2f,%.2f' % (x, y) for x, y in pairs)


@register.filter
def palette(index):
    return PALETTE[int(index) % len(PALETTE)]


@register.filter
def subtract(value, arg):
    return value - arg


@register.filter
def add(value, arg):
    return value + arg


@register.filter
def half(value):
    return value / 2
