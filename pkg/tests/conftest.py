from __future__ import annotations

import pytest

from prismatroid.catalog import Catalog


@pytest.fixture(scope="session")
def cat() -> Catalog:
    return Catalog()
