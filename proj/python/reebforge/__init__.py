"""Tree and cactus realization toolkit.

Thin dict-level wrapper over the compiled core: graphs go in as edge-list
strings or dicts, structured results come back as dicts, SVG comes back as
a string. Rational coordinates are "p/q" strings throughout.
"""

import json

try:
    import _reebforge as _core
except ImportError:  # wheel layout: the extension lives inside the package
    from . import _reebforge as _core

__all__ = [
    "decompose",
    "level",
    "realize_tree",
    "realize_cactus",
    "sweep",
    "validate",
    "emit_system",
    "system_text",
    "grid_oracle",
    "render",
    "enumerate_trees",
    "are_isomorphic",
]


def _graph_arg(graph):
    """Accept an edge-list string, a JSON string, or a graph dict."""
    if isinstance(graph, dict):
        return json.dumps(graph)
    return graph


def _selection_arg(selection):
    if selection is None:
        return ""
    if isinstance(selection, dict):
        return json.dumps(selection)
    return selection


def decompose(graph):
    return json.loads(_core.decompose(_graph_arg(graph)))


def level(graph, root=""):
    return json.loads(_core.level(_graph_arg(graph), root))


def realize_tree(graph, exponents=None, resolution=128):
    return json.loads(
        _core.realize_tree(_graph_arg(graph), exponents or [], resolution)
    )


def realize_cactus(graph, selection, exponents=None, resolution=128):
    return json.loads(
        _core.realize_cactus(
            _graph_arg(graph), _selection_arg(selection), exponents or [], resolution
        )
    )


def sweep(arrangement):
    return json.loads(_core.sweep(json.dumps(arrangement)))


def validate(arrangement):
    return json.loads(_core.validate(json.dumps(arrangement)))


def emit_system(arrangement):
    return json.loads(_core.emit_system(json.dumps(arrangement)))


def system_text(arrangement):
    return _core.system_text(json.dumps(arrangement))


def grid_oracle(arrangement, resolution=128):
    return json.loads(_core.grid_oracle(json.dumps(arrangement), resolution))


def render(graph, selection=None, exponents=None, resolution=128):
    return _core.render(
        _graph_arg(graph), _selection_arg(selection), exponents or [], resolution
    )


def enumerate_trees(n):
    return [json.loads(t) for t in _core.enumerate_trees(n)]


def are_isomorphic(a, b):
    return _core.are_isomorphic(_graph_arg(a), _graph_arg(b))
