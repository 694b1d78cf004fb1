"""Проверка изоморфизма графов и переборные классы изоморфизма I-графов."""

from igc_isomorphism.classes import (
    DEFAULT_BRUTE_FORCE_CAP,
    BruteForceCapError,
    ClassCounts,
    ClassInvariantError,
    IsoClassPartition,
    class_counts,
    census_oracle,
    enumerate_classes,
)
from igc_isomorphism.matcher import IsomorphismError, are_isomorphic, find_isomorphism

__all__ = [
    "DEFAULT_BRUTE_FORCE_CAP",
    "IsomorphismError",
    "BruteForceCapError",
    "ClassInvariantError",
    "IsoClassPartition",
    "ClassCounts",
    "are_isomorphic",
    "find_isomorphism",
    "enumerate_classes",
    "class_counts",
    "census_oracle",
]
