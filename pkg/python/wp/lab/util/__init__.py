from .timer import Timer  # noqa: F401
from .atomicwriter import AtomicWriter  # noqa: F401
from .progress import progress  # noqa: F401
