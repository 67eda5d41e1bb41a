"""Keep the examples embedded in docstrings honest."""

from __future__ import annotations

import doctest

from unidisc import canonical, gates, states


def test_module_doctests():
    for mod in (states, canonical, gates):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
        assert result.attempted > 0, mod.__name__
