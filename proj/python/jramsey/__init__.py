try:
    from ._jramsey import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension next to the package dir
    from _jramsey import *  # noqa: F401,F403
