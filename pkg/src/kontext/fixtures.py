"""The bundled example models U4, H6 and U9."""

from importlib import resources

from .model_io import load_json, parse_model

NAMES = ("U4", "H6", "U9")


def fixture_path(name):
    return resources.files("kontext") / "data" / f"{name.lower()}.json"


def fixture_data(name):
    return load_json(fixture_path(name))


def load_fixture(name, exact=True):
    return parse_model(fixture_data(name), exact)
