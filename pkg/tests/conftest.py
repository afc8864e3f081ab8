"""Shared fixtures: small named maps and helper builders."""

import pytest

from equivelar import build_collection, validate_polyhedral


def prism_faces():
    return [[0, 1, 2], [3, 4, 5], [0, 1, 4, 3], [1, 2, 5, 4], [2, 0, 3, 5]]


def cube_faces():
    return [
        [0, 1, 2, 3],
        [4, 5, 6, 7],
        [0, 1, 5, 4],
        [1, 2, 6, 5],
        [2, 3, 7, 6],
        [3, 0, 4, 7],
    ]


def square_pyramid_faces():
    return [[0, 1, 2, 3], [0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]]


def pinched_faces():
    # Two triangles meeting only at vertex 0.
    return [[0, 1, 2], [0, 3, 4]]


@pytest.fixture
def prism():
    return validate_polyhedral(build_collection(prism_faces(), name="prism"))


@pytest.fixture
def cube():
    return validate_polyhedral(build_collection(cube_faces(), name="cube"))


@pytest.fixture
def square_pyramid():
    return validate_polyhedral(build_collection(square_pyramid_faces(), name="square_pyramid"))
