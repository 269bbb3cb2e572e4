"""Golden arrangements shipped with the package."""
from importlib import resources

NAMES = ("cl1", "cl2", "cl3", "st")


def path(name):
    return resources.files(__name__).joinpath(f"{name}.arr")


def text(name):
    return path(name).read_text(encoding="utf-8")


def load(name):
    """Validated :class:`~mcurves.arrangement.Arrangement` for a fixture."""
    from ..arrangement import validate
    from ..fileformat import parse_arrangement
    return validate(parse_arrangement(text(name)).arrangement)
