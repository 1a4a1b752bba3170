"""
This module builds the CycleOpsConfig object from a YAML file or a dictionary.

Functions:
    build_config(config: Union[str, Dict[str, Any], None]) -> CycleOpsConfig:
        Builds the CycleOpsConfig object from the given configuration.
"""

import logging
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import ValidationError

from .. import CycleOpsInvalidParameters
from ..models.settings import CycleOpsConfig

LOGGER = logging.getLogger(__name__)


def build_config(config: Optional[Union[str, Dict[str, Any]]] = None) -> CycleOpsConfig:
    """
    Build the CycleOpsConfig object from the given configuration.

    A string is read as the path of a YAML file; None yields the defaults.

    Raises:
        CycleOpsInvalidParameters: If the file cannot be read, does not hold a mapping or a value is out of range.
    """
    config_dict: Dict[str, Any] = {}
    if isinstance(config, str):
        LOGGER.info("Reading config file: %s", config)
        try:
            with open(config, "r", encoding="utf-8") as config_file:
                loaded = yaml.safe_load(config_file)
        except (OSError, yaml.YAMLError) as e:
            raise CycleOpsInvalidParameters(f"cannot read config file {config}: {e}") from e
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise CycleOpsInvalidParameters(f"config file {config} must hold a mapping")
        config_dict.update(loaded)
    elif config is not None:
        config_dict.update(config)

    try:
        return CycleOpsConfig.model_validate(config_dict)
    except ValidationError as e:
        raise CycleOpsInvalidParameters(f"invalid configuration: {e}") from e
