import json
from importlib import resources


def load_fixture(name):
    with resources.files("fermat_hgm.data").joinpath(name).open() as fh:
        return json.load(fh)
