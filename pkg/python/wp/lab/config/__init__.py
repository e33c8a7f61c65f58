from .config import Config  # noqa: F401
from .labconfig import LabConfig  # noqa: F401
from .enumerationconfig import EnumerationConfig  # noqa: F401
from .rieraconfig import RieraConfig  # noqa: F401
from .flowconfig import FlowConfig  # noqa: F401
from .boundsconfig import BoundsConfig  # noqa: F401
from .samplingconfig import SamplingConfig  # noqa: F401
from .verifyconfig import VerifyConfig  # noqa: F401
