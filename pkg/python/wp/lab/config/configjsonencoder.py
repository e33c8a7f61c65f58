import dataclasses
import numpy as np
from datetime import datetime, date
from json import JSONEncoder


class ConfigJSONEncoder(JSONEncoder):
    """
    JSON encoder for configuration files and result documents. Handles NumPy
    arrays and scalars, complex numbers, dataclasses, sets and dates.
    """

    def default(self, obj):
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, complex):
            return [obj.real, obj.imag]
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return dataclasses.asdict(obj)
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        elif isinstance(obj, (datetime, date)):
            return obj.isoformat()
        else:
            return super().default(obj)
