"""Backend selection for the enumeration kernels.

The compiled ``_speedups`` extension is used when importable; setting
``BOXCALC_PURE_PYTHON=1`` forces the pure-Python fallback.  ``BACKEND`` names
the active implementation.
"""

import os

from . import _purepy

pack_key = _purepy.pack_key
MAX_BRACKET_LENGTH = _purepy.MAX_BRACKET_LENGTH
DEFAULT_BRACKET_CACHE = _purepy.DEFAULT_BRACKET_CACHE

_speedups = None
if os.environ.get("BOXCALC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups
    except ImportError:
        _speedups = None

if _speedups is not None:
    BACKEND = "compiled"
    partition_census = _speedups.partition_census
    excedance_word_counts = _speedups.excedance_word_counts

    def bracket(word, max_cache=DEFAULT_BRACKET_CACHE):
        try:
            return _speedups.bracket(word, max_cache)
        except OverflowError:
            return _purepy.bracket(word, max_cache)
else:
    BACKEND = "python"
    partition_census = _purepy.partition_census
    excedance_word_counts = _purepy.excedance_word_counts
    bracket = _purepy.bracket
