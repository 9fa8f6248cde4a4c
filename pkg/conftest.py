import os
import sys
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from nctorus.global_settings import settings  # noqa: E402


@pytest.fixture(autouse=True)
def reset_settings():
    settings.reset()
    yield
    settings.reset()
