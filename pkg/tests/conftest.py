import os

import pytest

EXTENDED = os.environ.get("NONCROSS_EXTENDED") == "1"

extended = pytest.mark.skipif(
    not EXTENDED, reason="long-running check; set NONCROSS_EXTENDED=1")
