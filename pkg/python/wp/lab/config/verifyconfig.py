from .config import Config


class VerifyConfig(Config):
    """
    Sample counts of the verification suite. The defaults are the full
    acceptance counts; tests scale them down.
    """

    def __init__(self):
        self.sandwich_points = 10000
        self.grid_twists = 5
        self.oracle_surfaces = 10
        self.oracle_word_length = 6
        self.oracle_conjugator_length = 4
        self.twist_grid_points = 27
        self.riera_samples = 50
        self.determinism_samples = None         # Rerun all samples
        self.lipschitz_segments = 20
        self.flow_surfaces = 5
        self.flow_start = 1.0
        self.flow_target = 0.25
        self.stratum_target = 0.01
        self.lipschitz_slack = 0.01

        super().__init__()
