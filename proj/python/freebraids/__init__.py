"""Free k-braid groups, finite k-biquandles and braid monoid maps."""

try:
    from ._freebraids import *  # noqa: F401,F403
    from ._freebraids import __version__  # noqa: F401
except ImportError:  # running against a plain build tree
    from _freebraids import *  # noqa: F401,F403
    from _freebraids import __version__  # noqa: F401
