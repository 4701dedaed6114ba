"""Run the usage examples embedded in module docstrings."""

from __future__ import annotations

import doctest

import pytest

from actionoperads import braid, cactus, fincat, perm, presentation, rewrite


@pytest.mark.parametrize("module", [perm, rewrite, cactus, braid, presentation, fincat])
def test_module_doctests(module):
    results = doctest.testmod(module)
    assert results.failed == 0, f"{module.__name__}: {results.failed} doctest failure(s)"
