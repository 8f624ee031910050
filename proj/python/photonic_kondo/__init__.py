"""Exact spin dynamics, emission spectra and photon statistics of a chirally
driven two-level emitter, with a built-in self-verification suite."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
