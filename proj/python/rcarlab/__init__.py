"""Random-coefficient AR(1) aggregation laboratory."""

from ._rcarlab import *  # noqa: F401,F403
from ._rcarlab import __doc__ as _core_doc

__doc__ = _core_doc
