"""Frame, light cone and boundary chart of the Minkowski space.

Claims under test:
    - the Gram matrix in the isotropic frame is the stated block form and
      eta evaluates accordingly (eta(p, q) = 1, eta(p, p) = 0, E orthonormal)
    - the orthonormal frame round-trips exactly through QSqrt2 numbers and
      preserves eta values
    - the boundary chart is the q-normalized isotropic line: projective,
      isotropic, inverse to line_of_chart
"""

import random
from fractions import Fraction

import pytest

from lorsim.errors import ChartDomainError, NotIsotropicError
from lorsim.minkowski import HALF_SQRT2, MinkowskiSpace, QSqrt2
from lorsim.sampling import random_vector


@pytest.fixture
def sp():
    return MinkowskiSpace(3)


def test_gram_block_form(sp):
    d = sp.dim
    assert sp.gram[0][d - 1] == 1 and sp.gram[d - 1][0] == 1
    assert sp.gram[0][0] == 0 and sp.gram[d - 1][d - 1] == 0
    for i in range(1, d - 1):
        assert sp.gram[i][i] == 1


def test_eta_frame_values(sp):
    assert sp.eta(sp.p(), sp.q()) == 1
    assert sp.eta(sp.p(), sp.p()) == 0
    assert sp.eta(sp.q(), sp.q()) == 0
    assert sp.eta(sp.e(1), sp.e(1)) == 1
    assert sp.eta(sp.e(1), sp.e(2)) == 0


def test_eta_symmetry_random(sp):
    rng = random.Random(7)
    for _ in range(50):
        x = (sp.from_parts(random_vector(rng, 1)[0], random_vector(rng, 3),
                           random_vector(rng, 1)[0]))
        y = (sp.from_parts(random_vector(rng, 1)[0], random_vector(rng, 3),
                           random_vector(rng, 1)[0]))
        assert sp.eta(x, y) == sp.eta(y, x)


def test_orthonormal_frame_of_p(sp):
    on = sp.to_orthonormal(sp.p())
    assert on[0] == HALF_SQRT2
    assert on[-1] == HALF_SQRT2
    assert all(c == QSqrt2(Fraction(0), Fraction(0)) for c in on[1:-1])


def test_orthonormal_fixes_E(sp):
    on = sp.to_orthonormal(sp.e(1))
    assert on[1] == QSqrt2(Fraction(1), Fraction(0))
    assert float(on[0]) == 0.0 and float(on[-1]) == 0.0


def test_orthonormal_round_trip(sp):
    rng = random.Random(11)
    for _ in range(50):
        v = sp.from_parts(
            random_vector(rng, 1)[0], random_vector(rng, 3), random_vector(rng, 1)[0]
        )
        assert sp.from_orthonormal(sp.to_orthonormal(v)) == v


def test_eta_agrees_between_frames(sp):
    rng = random.Random(13)
    for _ in range(25):
        x = sp.from_parts(random_vector(rng, 1)[0], random_vector(rng, 3),
                          random_vector(rng, 1)[0])
        y = sp.from_parts(random_vector(rng, 1)[0], random_vector(rng, 3),
                          random_vector(rng, 1)[0])
        exact = sp.eta(x, y)
        via_on = sp.eta_orthonormal(sp.to_orthonormal(x), sp.to_orthonormal(y))
        assert via_on.is_rational() and via_on.a == exact


def test_light_cone_members(sp):
    assert sp.on_light_cone(sp.p())
    assert sp.on_light_cone(sp.from_parts(0, [0, 0, 0], 0))
    # p - q/2 has eta = -1
    assert not sp.on_light_cone(sp.from_parts(1, [0, 0, 0], Fraction(-1, 2)))


def test_chart_of_q_is_origin(sp):
    assert sp.chart_of_line(sp.q()) == (0, 0, 0)


def test_chart_reads_off_normalized_representative():
    sp = MinkowskiSpace(2)
    v = sp.from_parts(Fraction(-1, 2), [1, 0], 1)
    assert sp.on_light_cone(v)
    assert sp.chart_of_line(v) == (1, 0)


def test_chart_is_projective():
    sp = MinkowskiSpace(2)
    rng = random.Random(17)
    for _ in range(100):
        y = random_vector(rng, 2)
        v = sp.line_of_chart(y)
        c = Fraction(rng.randint(1, 12), rng.randint(1, 7)) * (-1) ** rng.randint(0, 1)
        scaled = tuple(c * x for x in v)
        assert sp.chart_of_line(scaled) == tuple(y)


def test_line_of_chart_outputs_isotropic(sp):
    rng = random.Random(19)
    for _ in range(100):
        y = random_vector(rng, 3)
        v = sp.line_of_chart(y)
        assert sp.on_light_cone(v)
        assert sp.chart_of_line(v) == tuple(y)


def test_line_of_chart_of_origin_is_q(sp):
    assert sp.line_of_chart([0, 0, 0]) == sp.q()


def test_chart_rejects_non_isotropic(sp):
    with pytest.raises(NotIsotropicError):
        sp.chart_of_line(sp.e(1))


def test_chart_rejects_the_deleted_line(sp):
    with pytest.raises(ChartDomainError):
        sp.chart_of_line(sp.p())


def test_float_path_chart():
    sp = MinkowskiSpace(2)
    import numpy as np

    y = np.asarray([0.25, -1.5])
    v = sp.line_of_chart(y)
    assert sp.on_light_cone(v)
    assert np.allclose(sp.chart_of_line(v), y)
