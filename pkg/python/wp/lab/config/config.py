import os
import copy
import numpy as np
import commentjson as json
import yaml

from ..setup_logger import logger
from .configjsonencoder import ConfigJSONEncoder
from .configyamlencoder import *  # noqa: F401,F403


class Config():
    """
    Base class of the configuration sections. Public members are the settings;
    a section is loaded from a dictionary or from JSON and YAML files and
    saved back in either format. Nested sections are `Config` members.
    """

    EXTENSIONS = {
        '.json': 'json',
        '.yaml': 'yaml',
        '.yml': 'yaml',
    }

    def __init__(self):
        self.__config_files = None                # Files loaded, in order

    def __get_config_files(self):
        return self.__config_files

    config_files = property(__get_config_files)

    def _get_env(self, name, default=None):
        value = os.environ.get(name)
        return value if value else default

    def load(self, source, ignore_collisions=False):
        """
        Load settings from a dictionary, a file or a list of files applied in
        order, then validate them.
        """

        if source is None:
            pass
        elif isinstance(source, dict):
            self._load_impl(source, ignore_collisions=ignore_collisions)
        elif isinstance(source, (str, list)):
            if self.__config_files is None:
                self.__config_files = []

            for fn in source if isinstance(source, list) else [source]:
                d = Config.load_dict(fn)
                if not isinstance(d, dict):
                    raise ValueError(f'Configuration file `{fn}` does not contain a dictionary.')
                self._load_impl(d, ignore_collisions=ignore_collisions)
                self.__config_files.append(os.path.abspath(fn))
                logger.debug(f'Loaded configuration file `{fn}`.')
        else:
            raise NotImplementedError()

        self.validate()

    def validate(self):
        """Check the values after loading. Derived classes raise `ConfigError`."""
        pass

    def save(self, path):
        Config.save_dict(self._save_impl(), path)

    def as_dict(self):
        return self._save_impl()

    def copy(self):
        return copy.deepcopy(self)

    @staticmethod
    def __get_format(path):
        _, ext = os.path.splitext(path)
        if ext not in Config.EXTENSIONS:
            raise ValueError(f'Unknown configuration file extension `{ext}`')
        return Config.EXTENSIONS[ext]

    @staticmethod
    def load_dict(path):
        """Parse a JSON file, comments allowed, or a YAML file into a dictionary."""

        format = Config.__get_format(path)
        with open(path, 'r', encoding='utf-8') as f:
            if format == 'json':
                return json.load(f)
            else:
                return yaml.safe_load(f)

    @staticmethod
    def save_dict(d, path):
        format = Config.__get_format(path)
        with open(path, 'w', encoding='utf-8') as f:
            if format == 'json':
                json.dump(d, f, indent=4, cls=ConfigJSONEncoder)
            else:
                yaml.dump(d, f, default_flow_style=False, sort_keys=False)

    @staticmethod
    def merge_dict(a: dict, b: dict, ignore_collisions=False):
        """
        Deep-merge two dictionaries. Dictionary values present in both are
        merged recursively. Other keys present in both raise `ValueError`
        unless `ignore_collisions` is set, then `b` wins.
        """

        r = dict(a)
        for k, v in b.items():
            if k not in a:
                r[k] = v
            elif isinstance(a[k], dict) and isinstance(v, dict):
                r[k] = Config.merge_dict(a[k], v, ignore_collisions=ignore_collisions)
            elif ignore_collisions:
                logger.debug(f'Configuration key `{k}` overridden.')
                r[k] = v
            else:
                raise ValueError(f'Collision detected in the configuration for key `{k}`.')
        return r

    def _load_impl(self, d, ignore_collisions=False):
        """
        Every key must name an existing public member. Nested sections load
        their sub-dictionary, dictionary members are merged and any other
        value replaces the default.
        """

        for k, v in d.items():
            if k.startswith('_') or not hasattr(self, k):
                raise ValueError(f'Member `{k}` of class `{type(self).__name__}` does not exist.')

            current = getattr(self, k)
            if isinstance(current, Config):
                current._load_impl(v, ignore_collisions=ignore_collisions)
            elif isinstance(current, dict) and isinstance(v, dict):
                setattr(self, k, Config.merge_dict(current, v, ignore_collisions=True))
            else:
                setattr(self, k, v)

    def _save_impl(self):
        return {k: Config.__to_plain(v) for k, v in self.__dict__.items() if not k.startswith('_')}

    @staticmethod
    def __to_plain(obj):
        if isinstance(obj, Config):
            return obj._save_impl()
        elif isinstance(obj, np.ndarray):
            return [Config.__to_plain(v) for v in obj.tolist()]
        elif isinstance(obj, np.generic):
            return obj.item()
        elif isinstance(obj, dict):
            return {k: Config.__to_plain(v) for k, v in obj.items()}
        elif isinstance(obj, (list, tuple)):
            return [Config.__to_plain(v) for v in obj]
        else:
            return obj
