from ..constants import Constants
from .config import Config


class FlowConfig(Config):
    """
    Configuration of WP path measurements and the pinching flow.
    """

    def __init__(self):
        self.step = Constants.FLOW_STEP             # WP length of a flow step
        self.thick_floor = Constants.THICK_FLOOR    # Abort when any class is shorter
        self.fd_step = Constants.FD_STEP            # Relative finite difference step
        self.max_bisections = 20                    # Step halvings before StepTooLarge
        self.refine_tolerance = 0.01                # Relative change accepted by path refinement
        self.max_refinements = 6                    # Grid doublings before NonConvergentRefinement
        self.samples = 9                            # Initial number of path samples

        super().__init__()
