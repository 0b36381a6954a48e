from .engine import (
    GFClass, Invalid, RankingWeight, apex_and_class, evaluate, parse_box,
    validate
)
from .presets import (
    a_series, f_sequence, from_stepset, rec2_spec, rec2_table, walk_counts
)
from .spec import (
    Extension, InitialCondition, RecurrenceSpec, load_spec, parse_spec,
    spec_to_json
)

__all__ = [
    'GFClass', 'Invalid', 'RankingWeight', 'apex_and_class', 'evaluate',
    'parse_box', 'validate', 'a_series', 'f_sequence', 'from_stepset',
    'rec2_spec', 'rec2_table', 'walk_counts', 'Extension',
    'InitialCondition', 'RecurrenceSpec', 'load_spec', 'parse_spec',
    'spec_to_json',
]
