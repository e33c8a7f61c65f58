import yaml
import numpy as np
from datetime import datetime, date


def config_yaml_array_representer(dumper, data):
    return dumper.represent_list(data.tolist())


def config_yaml_float_representer(dumper, data):
    return dumper.represent_float(float(data))


def config_yaml_int_representer(dumper, data):
    return dumper.represent_int(int(data))


def config_yaml_bool_representer(dumper, data):
    return dumper.represent_bool(bool(data))


def config_yaml_tuple_representer(dumper, data):
    return dumper.represent_list(list(data))


def config_yaml_datetime_representer(dumper, data):
    return dumper.represent_scalar('tag:yaml.org,2002:timestamp', data.isoformat())


yaml.add_representer(np.ndarray, config_yaml_array_representer)
yaml.add_multi_representer(np.floating, config_yaml_float_representer)
yaml.add_multi_representer(np.integer, config_yaml_int_representer)
yaml.add_representer(np.bool_, config_yaml_bool_representer)
yaml.add_representer(tuple, config_yaml_tuple_representer)
yaml.add_representer(datetime, config_yaml_datetime_representer)
yaml.add_representer(date, config_yaml_datetime_representer)
