"""
This module defines the configuration of cycleops.

Classes:
    CycleOpsSettings: Settings read from the environment (prefix CYCLEOPS_).
    CycleOpsConfig: Pipeline defaults, read from a YAML file by the builder.
"""

from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class CycleOpsSettings(BaseSettings):
    """
    Represents the settings taken from the environment.

    Attributes:
        brute_subset_cap (int): Largest m for which the subset-enumerating pushforward runs
            (CYCLEOPS_BRUTE_SUBSET_CAP).
    """

    model_config = SettingsConfigDict(env_prefix="CYCLEOPS_", frozen=True)

    brute_subset_cap: int = Field(default=22, ge=1, description="Largest m of a brute-force enumeration")


class CycleOpsConfig(BaseModel):
    """
    Represents the pipeline defaults.

    Attributes:
        lemma2_m_max (int): Scan bound of the non-membership search.
        theorem_m_max (int): Upper bound of the m sweep of the smash-nilpotence certificate.
        p7_m_max (int): Upper bound of the m sweep of the Beauville-component certificate.
        workers (int): Worker processes of the sweeps; 1 runs them in-process.
        indent (int): JSON indentation of certificate files.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    lemma2_m_max: int = Field(default=200, ge=2)
    theorem_m_max: int = Field(default=400, ge=2)
    p7_m_max: int = Field(default=200, ge=2)
    workers: int = Field(default=1, ge=1)
    indent: int = Field(default=2, ge=0)
