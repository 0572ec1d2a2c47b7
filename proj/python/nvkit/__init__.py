"""Fine-grained non-verbal vocalization toolkit.

Thin re-export of the compiled extension; see the project README for the
tag grammar, segmentation pipeline, render oracle, and metrics engine.
"""

from nvkit._core import *  # noqa: F401,F403
from nvkit._core import __doc__  # noqa: F401
