# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
Settings for the walks toolkit.

Defaults ship in ``configs/defaults.yaml``. A second YAML file named by the
``WALKS_CONFIG`` environment variable (or passed explicitly) is merged on top.
"""
import os
from functools import lru_cache
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError

from .errors import DomainError

load_dotenv()

CONFIG_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'configs'
)
DEFAULT_CONFIG_PATH = os.path.join(CONFIG_DIR, 'defaults.yaml')


class AnalyticSettings(BaseModel):
    precision_digits: int = 40
    residual_tolerance: float = 1e-10
    symmetric_tolerance: float = 1e-9
    cut_band: float = 1e-6
    base_modulus: float = 0.01
    series_order: int = 24
    continuation_steps: int = 64
    max_refinements: int = 12
    ladder_exponents: List[int] = Field(
        default_factory=lambda: [-2, -3, -4, -5, -6, -7, -8]
    )
    exponent_tolerance: float = 0.01
    majorant_cutoff: float = 1e-15
    majorant_threshold: float = 0.16
    chain_modulus_bound: float = 1.33
    lemma_samples: int = 10000
    lemma_seed: int = 20010425


class EnumerationSettings(BaseModel):
    n_max: int = 22
    region: str = "quadrant"


class SeriesSettings(BaseModel):
    order: int = 30
    total_degree: int = 14


class CliSettings(BaseModel):
    format: str = "pretty"


class Settings(BaseModel):
    analytic: AnalyticSettings = Field(default_factory=AnalyticSettings)
    enumeration: EnumerationSettings = Field(
        default_factory=EnumerationSettings
    )
    series: SeriesSettings = Field(default_factory=SeriesSettings)
    cli: CliSettings = Field(default_factory=CliSettings)


def load_yaml(config_path: str) -> Dict[str, Any]:
    """
    Load a YAML configuration file safely.

    Relative paths are resolved against the packaged ``configs`` directory.

    :param config_path: Absolute path, or a path relative to ``configs``.
    :return: Parsed mapping (empty if the file is empty).
    """
    normalized_path = os.path.normpath(config_path)
    if not os.path.isabs(normalized_path):
        normalized_path = os.path.abspath(
            os.path.join(CONFIG_DIR, normalized_path)
        )

    if not os.path.exists(normalized_path):
        raise DomainError(
            f"Config file not found: {config_path}", field="config"
        )
    if not os.path.isfile(normalized_path):
        raise DomainError(
            f"Path is not a file: {config_path}", field="config"
        )

    with open(normalized_path, "r") as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise DomainError(
            f"Config file must hold a mapping: {config_path}", field="config"
        )
    return data


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Build a Settings record from the packaged defaults and an optional
    override file.

    :param config_path: Override YAML; falls back to ``$WALKS_CONFIG``.
    :return: Validated settings.
    """
    data = load_yaml(DEFAULT_CONFIG_PATH)
    data.pop('metadata', None)
    override_path = config_path or os.getenv('WALKS_CONFIG')
    if override_path:
        override = load_yaml(override_path)
        override.pop('metadata', None)
        data = _merge(data, override)
    try:
        return Settings(**data)
    except ValidationError as e:
        raise DomainError(f"Invalid configuration: {e}", field="config")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, parsed once."""
    return load_settings()
