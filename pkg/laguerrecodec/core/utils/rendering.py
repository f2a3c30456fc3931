# -*- coding: utf-8 -*-
"""ASCII drawing of a Laguerre history as a Motzkin path"""
from ..datamodel.history import ABSENT, StepKinds, heights

# Glyph of every step kind. Level steps carry their subscript below the path.
_GLYPHS = {
    StepKinds.U: '/',
    StepKinds.D: '\\',
    StepKinds.LA: '_',
    StepKinds.LB: '_',
    StepKinds.LC: '_'
}

_CELL = 7


def _coord(value):
    return 'Δ' if value is ABSENT else str(value)


def render_history(h):
    """
    Rows are heights (highest on top) and there is one column per step.
    Up and down steps sit in the row of their lower end, level steps in
    the row of their height. Step numbers, kinds and labels are printed
    below the path.
    """
    _heights = heights(h)
    top = max(_heights)

    rows = []
    for level in range(top, -1, -1):
        cells = []
        for i, (kind, _) in enumerate(h, start=1):
            before, after = _heights[i - 1], _heights[i]
            glyph = ' '
            if kind == StepKinds.U and before == level:
                glyph = _GLYPHS[kind]
            elif kind == StepKinds.D and after == level:
                glyph = _GLYPHS[kind]
            elif kind not in (StepKinds.U, StepKinds.D) and before == level:
                glyph = _GLYPHS[kind]
            cells.append(glyph.center(_CELL))
        rows.append(f'{level:>3} |' + ''.join(cells).rstrip())

    rows.append('    +' + '-' * (_CELL * len(h)))
    rows.append('     ' + ''.join(str(i).center(_CELL) for i in range(1, len(h) + 1)).rstrip())
    rows.append('     ' + ''.join(kind.center(_CELL) for kind in h.get_steps()).rstrip())
    rows.append('     ' + ''.join(f'({_coord(label.xi)},{_coord(label.eta)})'.center(_CELL)
                                  for label in h.get_labels()).rstrip())
    return '\n'.join(rows)
