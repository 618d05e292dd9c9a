import pytest

from q8family.characters import assemble_character_table
from q8family.groups import build_group, conjugacy_classes


@pytest.fixture(scope="session")
def group3():
    return build_group(3)


@pytest.fixture(scope="session")
def classes3(group3):
    return conjugacy_classes(group3)


@pytest.fixture(scope="session")
def table3(classes3):
    return assemble_character_table(classes3)


@pytest.fixture(scope="session")
def table5():
    return assemble_character_table(conjugacy_classes(build_group(5)))


@pytest.fixture(scope="session")
def table7():
    return assemble_character_table(conjugacy_classes(build_group(7)))
