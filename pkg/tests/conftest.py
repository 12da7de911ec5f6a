import functools

from borelideals import root_system


@functools.lru_cache(maxsize=None)
def system(family: str, rank: int):
    """Build-once cache so tests can share RootSystem instances freely."""
    return root_system(family, rank)
