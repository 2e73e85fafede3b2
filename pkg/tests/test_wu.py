"""The interaction (Wu) complex: f-matrix, characteristic, torsion."""

from fractions import Fraction

import pytest

from graphtorsion.chains import betti_vector
from graphtorsion.constructors import (
    complete,
    cycle,
    octahedron,
    path,
    star,
)
from graphtorsion.simplicial import clique_complex, complex_from_facets
from graphtorsion.torsion import mckean_singer_sdet, sdet_dirac
from graphtorsion.wu import (
    f_matrix,
    intersecting_pairs,
    wu_chain,
    wu_characteristic,
    wu_scaling_check,
    wu_torsion,
)

WU_CORPUS = [
    ("K2", complete(2)),
    ("K3", complete(3)),
    ("K4", complete(4)),
    ("C4", cycle(4)),
    ("C5", cycle(5)),
    ("P4", path(4)),
    ("star5", star(5)),
    ("octahedron", octahedron()),
]


class TestFMatrix:
    def test_k2_by_enumeration(self):
        # nine ordered pairs of {1},{2},{12}: intersecting ones counted by dims
        fm = f_matrix(clique_complex(complete(2)))
        assert fm == [[2, 2], [2, 1]]

    def test_c4(self):
        fm = f_matrix(clique_complex(cycle(4)))
        assert fm[0][0] == 4 and fm[1][1] == 12

    def test_single_vertex(self):
        assert f_matrix(complex_from_facets([(1,)])) == [[1]]

    def test_symmetric(self):
        for name, g in WU_CORPUS:
            fm = f_matrix(clique_complex(g))
            for k in range(len(fm)):
                for l in range(len(fm)):
                    assert fm[k][l] == fm[l][k], name

    def test_f00_is_vertex_count(self):
        for name, g in WU_CORPUS:
            fm = f_matrix(clique_complex(g))
            assert fm[0][0] == g.n_vertices, name


class TestWuCharacteristic:
    def test_k1(self):
        assert wu_characteristic(complex_from_facets([(1,)])) == 1

    def test_k2(self):
        assert wu_characteristic(clique_complex(complete(2))) == -1

    def test_complete_graphs_brute_force(self):
        # oracle: direct double loop over simplex pairs
        for n in range(1, 7):
            c = clique_complex(complete(n))
            sims = list(c.all_simplices())
            brute = sum(
                (-1) ** (len(x) + len(y))
                for x in sims for y in sims if set(x) & set(y)
            )
            assert wu_characteristic(c) == brute == (-1) ** (n + 1), n

    def test_matches_grading_alternation(self):
        for name, g in WU_CORPUS:
            c = clique_complex(g)
            grades = [len(b) for b in intersecting_pairs(c)]
            alt = sum((-1) ** k * s for k, s in enumerate(grades))
            assert alt == wu_characteristic(c), name


class TestWuChain:
    def test_k1_single_pair(self):
        cd = wu_chain(complex_from_facets([(1,)]))
        assert cd.grading == (1,)
        assert cd.dirac.data == [[0]]

    def test_k2_grading(self):
        cd = wu_chain(clique_complex(complete(2)))
        assert cd.grading == (2, 4, 1)

    def test_dd_zero_guard(self):
        # construction runs the d o d = 0 check; these must all build
        for name, g in WU_CORPUS:
            wu_chain(clique_complex(g))

    def test_euler_poincare(self):
        for name, g in WU_CORPUS:
            c = clique_complex(g)
            cd = wu_chain(c)
            if cd.n_total > 500:
                continue
            betti = betti_vector(cd)
            alt_b = sum((-1) ** k * b for k, b in enumerate(betti))
            assert alt_b == wu_characteristic(c), name

    def test_mckean_singer(self):
        for name, g in WU_CORPUS:
            cd = wu_chain(clique_complex(g))
            assert mckean_singer_sdet(cd) == 1, name


class TestWuTorsion:
    def test_complete_small(self):
        # n/2^(n-1) anchors; even n >= 4 comes out inverted, see the
        # acceptance suite for the full record
        assert wu_torsion(clique_complex(complete(2))) == 1
        assert wu_torsion(clique_complex(complete(3))) == Fraction(3, 4)
        assert wu_torsion(clique_complex(complete(5))) == Fraction(5, 16)

    def test_even_spheres(self):
        c = clique_complex(octahedron())
        fm = f_matrix(c)
        assert wu_torsion(c) == Fraction(fm[0][0], fm[2][2]) == Fraction(3, 28)

    def test_odd_spheres(self):
        for n in (4, 5, 6):
            c = clique_complex(cycle(n))
            fm = f_matrix(c)
            assert wu_torsion(c) == Fraction(1, fm[0][0] * fm[1][1]), n

    def test_c4_value(self):
        assert wu_torsion(clique_complex(cycle(4))) == Fraction(1, 48)


class TestWuScaling:
    def test_identity(self):
        c = clique_complex(cycle(4))
        direct, closed = wu_scaling_check(c, Fraction(1))
        assert direct == closed == wu_torsion(c)

    def test_direct_follows_rank_alternation(self):
        from graphtorsion.torsion import rank_alternation
        for name, g in (("K3", complete(3)), ("C4", cycle(4))):
            c = clique_complex(g)
            cd = wu_chain(c)
            a2 = sdet_dirac(cd)
            lam = Fraction(2)
            direct, _ = wu_scaling_check(c, lam)
            assert direct == lam ** (2 * rank_alternation(cd)) * a2, name

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            wu_scaling_check(clique_complex(cycle(4)), Fraction(0))
