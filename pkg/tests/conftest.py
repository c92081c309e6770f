import pathlib

import pytest

from wiring.relations import Relation
from wiring.typed import TypedStar, ValueDomain

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


@pytest.fixture(scope="session")
def bool_domain() -> ValueDomain:
    return ValueDomain("Bool", ("True", "False"))


@pytest.fixture(scope="session")
def nand_star(bool_domain) -> TypedStar:
    return TypedStar.uniform(["A", "B", "out"], bool_domain)


@pytest.fixture(scope="session")
def nand_relation(nand_star) -> Relation:
    return Relation(
        nand_star,
        [
            ("True", "True", "False"),
            ("True", "False", "True"),
            ("False", "True", "True"),
            ("False", "False", "True"),
        ],
    )
