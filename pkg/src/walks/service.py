# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
Operations shared by the command line and the HTTP API.

Every function takes plain values (strings and integers as they arrive
from argv or a request body) and returns a :class:`Report`: a JSON-ready
payload, an optional table for CSV output, and whether the check it ran
passed.
"""
import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from . import analytic
from .bijection import Walk, flip_down, flip_up, flipped_indices
from .enumeration import (
    Region, axis_hitting_counts, count_half_plane, count_quadrant,
    translated_counts
)
from .recurrence import (
    Invalid, RankingWeight, apex_and_class, evaluate, f_sequence,
    load_spec, parse_box, parse_spec, rec2_spec, validate
)
from .recurrence.presets import REC2_WEIGHT, from_stepset
from .series import from_integers, g_series_iterated, psi_series, xi_series
from .series.identities import Identity, knight_g, verify_identity
from .series.kernel import Branch, kernel_root_series
from .shared.config import Settings, get_settings
from .shared.errors import DomainError
from .stepset import (
    DEFAULT_LEGEND, holonomy_criterion, has_small_height_variation,
    is_x_symmetric, name_steps, parse_legend, parse_named_steps,
    resolve_step_set
)

logger = logging.getLogger(__name__)

SERIES_NAMES = ('xi', 'psi', 'G', 'F', 'xi0', 'xi1', 'xi2')
ANALYTIC_TASKS = ('survey', 'chain', 'radius', 'gbound', 'branches',
                  'lemma', 'constants')


@dataclass
class Report:
    payload: Dict[str, Any]
    frame: Optional[pd.DataFrame] = None
    ok: bool = True
    summary: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(self.payload, indent=2)


def parse_point(text: str, field: str = "start") -> Tuple[int, int]:
    """``"1,1"`` -> (1, 1)."""
    parts = [p.strip() for p in text.strip().strip('()').split(',')]
    try:
        if len(parts) != 2:
            raise ValueError(text)
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise DomainError(f"Expected a point 'i,j', got '{text}'",
                          field=field)


def parse_complex(text: str, field: str = "x") -> complex:
    """Accept Python literals such as ``0.5``, ``-0.26-1.02j`` or ``1j``."""
    try:
        return complex(text.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise DomainError(f"Cannot parse complex number '{text}'",
                          field=field)


def criterion(steps: str) -> Report:
    s = resolve_step_set(steps)
    verdict = holonomy_criterion(s)
    return Report(
        payload={
            'steps': [list(p) for p in s.steps],
            'x_symmetric': is_x_symmetric(s),
            'small_height_variation': has_small_height_variation(s),
            'verdict': verdict.value,
        },
        summary=verdict.value,
    )


def count(steps: str, start: str, n_max: int, region: str = "quadrant",
          aggregate: bool = False) -> Report:
    s = resolve_step_set(steps)
    origin = parse_point(start)
    try:
        region = Region(region)
    except ValueError:
        raise DomainError(f"Unknown region '{region}'", field="region")
    if region is Region.QUADRANT:
        grid = count_quadrant(s, origin, n_max)
    else:
        grid = count_half_plane(s, origin, n_max)
    frame = grid.to_frame(aggregate=aggregate)
    if aggregate:
        cells = [{'i': i, 'j': j, 'count': str(c)}
                 for (i, j), c in sorted(grid.aggregate().items())]
    else:
        cells = [{'i': i, 'j': j, 'n': n, 'count': str(c)}
                 for i, j, n, c in grid.cells()]
    return Report(
        payload={
            'steps': [list(p) for p in s.steps],
            'start': list(origin),
            'region': region.value,
            'n_max': n_max,
            'aggregate': aggregate,
            'cells': cells,
        },
        frame=frame,
        summary=(grid.to_table().to_string() if aggregate
                 else frame.to_string(index=False)),
    )


def bijection(steps: str, start: str, walk: str, legend: Optional[str] = None,
              direction: str = "down", target: Optional[int] = None) -> Report:
    """
    Flip one textual walk, e.g. ``walk="N,N"`` on the square lattice.

    Without ``target`` the level follows the walk: the parity of its end
    ordinate going down, its end ordinate going up.
    """
    s = resolve_step_set(steps)
    names = parse_legend(legend) if legend else DEFAULT_LEGEND
    w = Walk(parse_point(start), tuple(parse_named_steps(walk, names)))
    if direction not in ("down", "up"):
        raise DomainError(f"Direction must be 'down' or 'up', got "
                          f"'{direction}'", field="direction")
    down = direction == "down"
    if target is None:
        if down:
            target = -(w.end_level % 2)
        else:
            target = w.end_level if w.end_level in (0, -1) else 0
    image = flip_down(w, s, target) if down else flip_up(w, s, target)
    indices = flipped_indices(w, down=down, target_level=target)
    named = name_steps(image.steps, names)
    return Report(
        payload={
            'walk': name_steps(w.steps, names),
            'image': named,
            'flipped': indices,
            'direction': direction,
            'target_level': target,
            'end': list(image.end),
        },
        summary=(",".join(named) + "\nflipped steps: "
                 + (",".join(str(i) for i in indices) or "none")),
    )


def cardinality(steps: str, start: str, n_max: int) -> Report:
    """
    Both sides of the flip correspondence, per length: quadrant walks that
    visit the x-axis (even / odd end ordinate) against half-plane walks
    ending at level 0 / -1.
    """
    s = resolve_step_set(steps)
    origin = parse_point(start)
    hits = axis_hitting_counts(s, origin, n_max)
    half = count_half_plane(s, origin, n_max)
    shifted = translated_counts(s, origin, n_max)
    rows = []
    for n, layer in enumerate(half.layers):
        rows.append({
            'n': n,
            'quadrant_even': hits.even[n],
            'half_plane_level_0': sum(c for (_, j), c in layer.items()
                                      if j == 0),
            'quadrant_odd': hits.odd[n],
            'half_plane_level_-1': sum(c for (_, j), c in layer.items()
                                       if j == -1),
            'never_hits': hits.never[n],
            'translated': shifted[n],
        })
    frame = pd.DataFrame(rows)
    ok = all(r['quadrant_even'] == r['half_plane_level_0']
             and r['quadrant_odd'] == r['half_plane_level_-1']
             and r['never_hits'] == r['translated'] for r in rows)
    return Report(
        payload={'steps': [list(p) for p in s.steps], 'start': list(origin),
                 'rows': [{k: str(v) for k, v in r.items()} for r in rows],
                 'matches': ok},
        frame=frame.astype(str),
        ok=ok,
        summary=frame.to_string(index=False),
    )


def series(name: str, order: int) -> Report:
    """
    Exact coefficients of xi, psi, G (iterated form) or F; xi0..xi2 give
    the even and odd parts of the kernel roots.
    """
    if name not in SERIES_NAMES:
        raise DomainError(f"Unknown series '{name}'; choose one of "
                          f"{', '.join(SERIES_NAMES)}", field="name")
    payload: Dict[str, Any] = {'name': name, 'order': order}
    if name.startswith('xi') and len(name) == 3:
        root = kernel_root_series(Branch.from_index(int(name[2])), order)
        payload['coeffs'] = root.even.to_pairs()
        payload['sqrt_coeffs'] = root.odd.to_pairs()
        frame = pd.DataFrame({
            'k': range(order + 1),
            'even': [str(c) for c in root.even.coeffs],
            'odd': [str(c) for c in root.odd.coeffs],
        })
    else:
        if name == 'xi':
            u = xi_series(order)
        elif name == 'psi':
            u = psi_series(order)
        elif name == 'G':
            u = g_series_iterated(order)
        else:
            u = from_integers(f_sequence(order), order)
        payload['coeffs'] = u.to_pairs()
        frame = pd.DataFrame({'k': range(len(u.coeffs)),
                              'coeff': [str(c) for c in u.coeffs]})
    return Report(payload=payload, frame=frame,
                  summary=frame.to_string(index=False))


def verify(identity: str, order: int, branch: int = 0) -> Report:
    if identity not in {i.value for i in Identity}:
        raise DomainError(
            f"Unknown identity '{identity}'; choose one of "
            f"{', '.join(i.value for i in Identity)}", field="identity"
        )
    report = verify_identity(identity, order, branch)
    return Report(
        payload=report.to_dict(),
        ok=report.holds,
        summary=("holds" if report.holds else
                 "fails at x^" + "*y^".join(report.to_dict()['first_failure'])),
    )


def _analytic_settings(settings: Optional[Settings]):
    return (settings or get_settings()).analytic


def analytic_task(task: str, settings: Optional[Settings] = None,
                  x: Optional[str] = None, sequence: str = "G",
                  order: int = 300, stride: Optional[int] = None,
                  samples: Optional[int] = None) -> Report:
    """
    Run one numerical check: ``survey``, ``chain``, ``radius``, ``gbound``,
    ``branches`` (at ``x``), ``lemma`` (random dominant-root sample) or
    ``constants`` (local expansion of G at x_c).
    """
    s = _analytic_settings(settings)
    if task == 'survey':
        survey = analytic.singularity_survey(s)
        reports = [r for rows in survey.values() for r in rows]
        ok = all(r.verdict is not analytic.Verdict.INCONCLUSIVE
                 for r in reports)
        frame = pd.DataFrame([
            {'branch': r.branch.value, 'candidate': r.candidate,
             'verdict': r.verdict.value,
             **{f'exponent_{k}': f.exponent for k, f in r.fits.items()}}
            for r in reports
        ])
        return Report({'candidates': [r.to_dict() for r in reports]},
                      frame=frame, ok=ok,
                      summary=frame.to_string(index=False))
    if task == 'chain':
        chain = analytic.singularity_chain_rec2(s)
        frame = pd.DataFrame([{'k': k, 're': p.real, 'im': p.imag,
                               'modulus': abs(p)}
                              for k, p in enumerate(chain.points)])
        ok = abs(chain.points[-1]) > s.chain_modulus_bound
        return Report(chain.to_dict(), frame=frame, ok=ok,
                      summary=frame.to_string(index=False))
    if task == 'radius':
        if sequence == 'G':
            seq = knight_g(order)
            stride = stride or 3
        elif sequence == 'F':
            seq = f_sequence(order)
            stride = stride or 1
        else:
            raise DomainError(f"Radius sequences are G or F, got "
                              f"'{sequence}'", field="sequence")
        estimate = analytic.radius_estimate(seq, stride)
        error = abs(estimate.estimate - analytic.X_C) / analytic.X_C
        payload = {'sequence': sequence, 'order': order, 'stride': stride,
                   **estimate.to_dict(), 'x_c': analytic.X_C,
                   'relative_error': error}
        return Report(payload, frame=pd.DataFrame([payload]), ok=error < 0.05,
                      summary=f"{estimate.estimate:.6f} "
                              f"(x_c = {analytic.X_C:.6f})")
    if task == 'gbound':
        bound = analytic.gprime_bound_check(s)
        return Report(bound.to_dict(), frame=pd.DataFrame([bound.to_dict()]),
                      ok=bound.passes,
                      summary=f"{bound.bound_value:.6f} < "
                              f"{bound.threshold}: {bound.passes}")
    if task == 'branches':
        if x is None:
            raise DomainError("The branches task needs --x", field="x")
        values = analytic.eval_branches(parse_complex(x), s)
        frame = pd.DataFrame([{'branch': b.value, 're': v.real, 'im': v.imag,
                               'residual': values.residuals()[b]}
                              for b, v in values.values.items()])
        return Report(values.to_dict(), frame=frame,
                      summary=frame.to_string(index=False))
    if task == 'lemma':
        batch = analytic.dominant_root_batch(samples, settings=s)
        payload = {'samples': batch.samples, 'failures': batch.failures,
                   'worst_margin': batch.worst_margin,
                   'passes': batch.passes}
        return Report(payload, frame=pd.DataFrame([payload]),
                      ok=batch.passes,
                      summary=f"{batch.failures} failures in "
                              f"{batch.samples} samples")
    if task == 'constants':
        fit = analytic.local_expansion_constants(knight_g(order))
        payload = {'order': order, 'A': fit.amplitude.real, 'B': fit.slope}
        return Report(payload, frame=pd.DataFrame([payload]),
                      summary=f"A = {fit.amplitude.real:.6f}, "
                              f"B = {fit.slope:.6f}")
    raise DomainError(f"Unknown analytic task '{task}'; choose one of "
                      f"{', '.join(ANALYTIC_TASKS)}", field="task")


def _load_recurrence(spec: Optional[str], preset: Optional[str],
                     steps: Optional[str], start: Optional[str]):
    if preset == 'rec2':
        return rec2_spec(), REC2_WEIGHT
    if preset == 'walks':
        if not steps or not start:
            raise DomainError("The walks preset needs steps and start",
                              field="steps")
        return from_stepset(resolve_step_set(steps), parse_point(start)), None
    if preset is not None:
        raise DomainError(f"Unknown recurrence preset '{preset}'",
                          field="preset")
    if spec is None:
        raise DomainError("Give a recurrence spec or a preset", field="spec")
    if spec.lstrip().startswith('{'):
        return parse_spec(spec), None
    return load_spec(spec), None


def recur(box: Optional[str] = None, spec: Optional[str] = None,
          preset: Optional[str] = None, steps: Optional[str] = None,
          start: Optional[str] = None) -> Report:
    """
    Validate a recurrence and, when ``box`` is given, evaluate it there.

    :param spec: JSON text or a path to a JSON file.
    :param preset: ``rec2`` or ``walks`` (built from ``steps``/``start``).
    """
    recurrence, weight = _load_recurrence(spec, preset, steps, start)
    found = validate(recurrence)
    apex, gf_class = apex_and_class(recurrence)
    payload: Dict[str, Any] = {
        'apex': list(apex),
        'class': gf_class.value,
    }
    if isinstance(found, Invalid):
        payload['valid'] = False
        payload['witness'] = [{'h': list(h), 'lambda': str(v)}
                              for h, v in found.witness.items()]
        return Report(payload, ok=False,
                      summary=f"invalid: {payload['witness']}")
    payload['valid'] = True
    payload['weight'] = [str(v) for v in found.w]
    if box is None:
        return Report(payload, summary=f"valid with w = {payload['weight']}")
    values = evaluate(recurrence, parse_box(box),
                      weight=weight if isinstance(weight, RankingWeight)
                      else found)
    rows: List[Dict[str, Any]] = [
        {**{f'n{k}': c for k, c in enumerate(n)}, 'value': str(v)}
        for n, v in sorted(values.items())
    ]
    payload['values'] = rows
    frame = pd.DataFrame(rows)
    return Report(payload, frame=frame, summary=frame.to_string(index=False))
