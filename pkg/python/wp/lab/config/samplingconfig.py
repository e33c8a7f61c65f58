from .config import Config


class SamplingConfig(Config):
    """
    Random thick-part sampling: lengths log-uniform in `length_range`, twists
    uniform in [0, length], rejected while the systole is below `systole_floor`.
    """

    def __init__(self):
        self.length_range = [0.5, 4.0]
        self.systole_floor = 0.5
        self.max_rejections = 1000

        super().__init__()
