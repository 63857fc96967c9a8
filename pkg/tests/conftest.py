from __future__ import annotations

import pytest

from frlab.functions.modarith import build_prime_context
from frlab.models.prime_context import PrimeContext


@pytest.fixture
def ctx5() -> PrimeContext:
    return build_prime_context(5)


@pytest.fixture
def ctx7() -> PrimeContext:
    return build_prime_context(7)


@pytest.fixture
def ctx11() -> PrimeContext:
    return build_prime_context(11)


@pytest.fixture
def ctx101() -> PrimeContext:
    return build_prime_context(101)
