"""Fixture corpora: committed fixtures, a seeded generator, and the differential runner."""

from .differential import Verdict, run_differential
from .fixture import Fixture
from .generator import GenerationRetryExhausted, Profile, generate_pair
from .store import committed_fixtures, fixtures_root, load_manifest

__all__ = [
    "Fixture",
    "GenerationRetryExhausted",
    "Profile",
    "Verdict",
    "committed_fixtures",
    "fixtures_root",
    "generate_pair",
    "load_manifest",
    "run_differential",
]
