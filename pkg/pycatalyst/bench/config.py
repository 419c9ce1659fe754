import os
from yaml import safe_load as load_yaml
from json import loads as load_json

from pycatalyst.bench.exceptions import ConfigSyntaxError, UnknownConfigTypeError


def read_config(file_path):
    """
    Read an experiment config file (.yml, .yaml or .json) holding a flat mapping of keys to scalars.
    """
    name, ext = os.path.splitext(os.path.basename(file_path))

    with open(file_path, "r") as config_data:
        if ext == ".yml" or ext == ".yaml":
            config = load_yaml(config_data)
        elif ext == ".json":
            config = load_json(config_data.read())
        else:
            raise UnknownConfigTypeError(f"Unknown config type {ext} from {file_path}")

    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigSyntaxError(f"{file_path}: expected a mapping of keys to values")
    for key, value in config.items():
        if isinstance(value, (dict, list)):
            raise ConfigSyntaxError(f"{file_path}: key '{key}' must hold a single value, not a nested one")
    return config
