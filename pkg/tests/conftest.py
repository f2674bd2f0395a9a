import pytest

from hopfplanar import (
    cyclic_group,
    group_algebra,
    klein_group,
    symmetric_group_3,
)


def build_family():
    """The standard test family: three group algebras and their duals."""
    z2 = group_algebra(cyclic_group(2))
    v4 = group_algebra(klein_group())
    s3 = group_algebra(symmetric_group_3())
    return [z2, v4, s3, z2.dual(), v4.dual(), s3.dual()]


@pytest.fixture(scope="session")
def family():
    return build_family()
