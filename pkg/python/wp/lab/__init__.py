from .constants import *  # noqa: F401,F403
from .labpipeline import LabPipeline  # noqa: F401
from .verifypipeline import VerifyPipeline  # noqa: F401
from .labtrace import LabTrace  # noqa: F401
from .pipelineexception import PipelineException  # noqa: F401
