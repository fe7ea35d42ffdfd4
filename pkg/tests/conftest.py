import importlib
from importlib import resources

import pytest

DATA = resources.files("linprob") / "data"


def _available_backends():
    mods = [importlib.import_module("linprob._pykernels")]
    try:
        mods.append(importlib.import_module("linprob._ckernels"))
    except ImportError:
        pass
    return mods


BACKENDS = _available_backends()


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param


def data_path(name):
    return str(DATA / name)


def last_digit_unit(printed: str) -> float:
    """One unit in the last printed digit of a decimal string."""
    mantissa = printed.lower().split("e")[0]
    exp = int(printed.lower().split("e")[1]) if "e" in printed.lower() else 0
    decimals = len(mantissa.split(".")[1]) if "." in mantissa else 0
    return 10.0 ** (exp - decimals)


def close_to_printed(value: float, printed: str, units: float = 1.0) -> bool:
    return abs(value - float(printed)) <= units * last_digit_unit(printed) * (1 + 1e-9)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
