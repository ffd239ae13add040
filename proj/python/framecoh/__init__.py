"""Finite tight frames and frame-dependent l1 coherence."""

try:
    from ._framecoh import *  # noqa: F401,F403
except ImportError:
    # In-tree builds place the extension next to the package on sys.path.
    from _framecoh import *  # noqa: F401,F403
