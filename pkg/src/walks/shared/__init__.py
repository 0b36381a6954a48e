from .config import Settings, get_settings, load_settings, load_yaml
from .errors import (
    AmbiguousSelectionError, BijectionError, BijectionReason, CutError,
    DomainError, ParseError, PathError, TruncationError, WalksError
)
from .logs import configure_logging

__all__ = [
    'Settings', 'get_settings', 'load_settings', 'load_yaml',
    'AmbiguousSelectionError', 'BijectionError', 'BijectionReason',
    'CutError', 'DomainError', 'ParseError', 'PathError', 'TruncationError',
    'WalksError', 'configure_logging',
]
