"""Torsion values, super determinants, shaving, and scaling."""

from fractions import Fraction

import pytest

from graphtorsion.chains import build_chain
from graphtorsion.constructors import (
    complete,
    complete_bipartite,
    cross_polytope,
    cycle,
    icosahedron,
    icosahedron_with_ear,
    icosahedron_with_hair,
    icosahedron_with_hat,
    icosahedron_with_nose,
    octahedron,
    wheel,
)
from graphtorsion.exact import is_rational_square
from graphtorsion.simplicial import clique_complex, complex_from_facets
from graphtorsion.torsion import (
    dirac_pseudo_det,
    mckean_singer_sdet,
    parity_tree_products,
    phi,
    rank_alternation,
    scaled_torsion,
    shaved_pseudo_det,
    shaved_sdet,
    torsion_dirac,
    torsion_hodge,
    torsion_report,
    torsion_squares_check,
)


def chain_of(g):
    return build_chain(clique_complex(g))


class TestGoldenValues:
    def test_cycles(self):
        for n in range(4, 9):
            assert torsion_hodge(chain_of(cycle(n))) == n * n

    def test_triangle_is_k3(self):
        # the 3-cycle carries the solid triangle, so the complete-graph law
        # applies, not the rooted-tree count
        assert torsion_hodge(chain_of(cycle(3))) == 3

    def test_complete(self):
        for n in range(2, 7):
            assert torsion_dirac(chain_of(complete(n))) == n

    def test_cross_polytopes(self):
        want = [Fraction(1), Fraction(16), Fraction(3, 4), Fraction(128)]
        for d, a in enumerate(want):
            assert torsion_dirac(chain_of(cross_polytope(d))) == a, d

    def test_icosahedron_family(self):
        assert torsion_dirac(chain_of(icosahedron())) == Fraction(3, 5)
        assert torsion_dirac(chain_of(icosahedron_with_hair())) == Fraction(13, 20)
        assert torsion_dirac(chain_of(icosahedron_with_nose())) == Fraction(13, 20)
        assert torsion_dirac(chain_of(icosahedron_with_hat())) == Fraction(52, 79)
        assert torsion_dirac(chain_of(icosahedron_with_ear())) == Fraction(707, 300)

    def test_bipartite(self):
        for n in range(2, 5):
            for m in range(2, 5):
                want = Fraction(n ** (m - 1) * m ** (n - 1) * (n + m))
                assert torsion_dirac(chain_of(complete_bipartite(n, m))) == want

    def test_empty_complex_rejected(self):
        from graphtorsion.chains import ChainData
        with pytest.raises(ValueError):
            torsion_hodge(ChainData((), ()))


class TestKeyLemma:
    def test_hodge_equals_dirac_everywhere(self, corpus_chains):
        for name, (_, _, cd) in corpus_chains.items():
            assert torsion_hodge(cd) == torsion_dirac(cd), name


class TestMcKeanSinger:
    def test_k5(self):
        assert mckean_singer_sdet(chain_of(complete(5))) == 1

    def test_octahedron(self):
        assert mckean_singer_sdet(chain_of(octahedron())) == 1

    def test_everywhere(self, corpus_chains):
        for name, (_, _, cd) in corpus_chains.items():
            assert mckean_singer_sdet(cd) == 1, name


class TestDiracPseudoDet:
    def test_k1_empty_product(self):
        assert dirac_pseudo_det(build_chain(complex_from_facets([(1,)]))) == 1

    def test_four_dim_cross_polytope(self):
        cd = chain_of(cross_polytope(4))
        assert dirac_pseudo_det(cd) == 2**220 * 3**40 * 5**15

    def test_complete_square_root_structure(self):
        # all non-zero eigenvalues of D are +-sqrt(n) and 2^n - 2 of them
        # exist, so Det(D)/n is a perfect square with root n^(2^(n-2)-1)
        from graphtorsion.exact import rational_sqrt
        for n in range(3, 8):
            cd = chain_of(complete(n))
            r = Fraction(dirac_pseudo_det(cd), n)
            assert is_rational_square(r)
            assert rational_sqrt(r) == Fraction(n) ** (2 ** (n - 2) - 1)

    def test_squares_everywhere(self, corpus_chains):
        for name, (_, _, cd) in corpus_chains.items():
            ok_times, ok_over = torsion_squares_check(cd)
            assert ok_times and ok_over, name


class TestParityProducts:
    def test_k3(self):
        assert parity_tree_products(chain_of(complete(3))) == (9, 3)

    def test_triangle_free_reduces_to_l0(self, corpus_chains):
        _, _, cd = corpus_chains["C5"]
        even, odd = parity_tree_products(cd)
        assert even == cd.hodge_block_det(0) and odd == 1

    def test_three_sphere(self):
        cd = chain_of(cross_polytope(3))
        even, odd = parity_tree_products(cd)
        assert even == 663552 * 679477248
        assert odd == 3522410053632
        assert Fraction(even, odd) == 128

    def test_ratio_is_torsion_everywhere(self, corpus_chains):
        for name, (_, _, cd) in corpus_chains.items():
            even, odd = parity_tree_products(cd)
            assert Fraction(even, odd) == torsion_dirac(cd), name


class TestScaling:
    def test_identity_scale(self, corpus_chains):
        _, _, cd = corpus_chains["C4"]
        assert scaled_torsion(cd, Fraction(1)) == torsion_dirac(cd)

    def test_k3_doubling(self):
        # chi(K3) = rank alternation = 1 here, so the value quadruples
        cd = chain_of(complete(3))
        assert scaled_torsion(cd, Fraction(2)) == 12

    def test_rank_alternation_law(self, corpus_chains):
        for name in ("C4", "K4", "wheel5", "house", "er7a"):
            _, _, cd = corpus_chains[name]
            a = torsion_dirac(cd)
            for lam in (Fraction(2), Fraction(3), Fraction(1, 2)):
                want = lam ** (2 * rank_alternation(cd)) * a
                assert scaled_torsion(cd, lam) == want, (name, lam)

    def test_zero_rejected(self, corpus_chains):
        _, _, cd = corpus_chains["C4"]
        with pytest.raises(ValueError):
            scaled_torsion(cd, Fraction(0))


class TestShaving:
    def test_wheel_first(self):
        cd = chain_of(wheel(5))
        assert torsion_dirac(cd) == 5
        assert shaved_sdet(cd, "first") == torsion_dirac(cd) / 5
        assert shaved_pseudo_det(cd, "first") * 5 == dirac_pseudo_det(cd)

    def test_shaving_a_on_contractibles(self, corpus_chains):
        for name in ("K4", "K5", "wheel5", "wheel7", "cone9", "cone10", "star6"):
            g, _, cd = corpus_chains[name]
            assert shaved_sdet(cd, "first") == torsion_dirac(cd) / g.n_vertices, name
            assert shaved_pseudo_det(cd, "first") * g.n_vertices == \
                dirac_pseudo_det(cd), name

    def test_shaving_b_on_spheres(self, corpus_chains):
        for name in ("C4", "C5", "octahedron", "icosahedron", "cross3"):
            _, c, cd = corpus_chains[name]
            n_facets = cd.grading[-1]
            assert shaved_pseudo_det(cd, "last") * n_facets == \
                dirac_pseudo_det(cd), name
            want = (torsion_dirac(cd) * n_facets if cd.dimension % 2 == 0
                    else torsion_dirac(cd) / n_facets)
            assert shaved_sdet(cd, "last") == want, name

    def test_phi_contractible(self, corpus_chains):
        for name in ("K4", "wheel5", "cone9"):
            _, _, cd = corpus_chains[name]
            assert phi(cd, "contractible") == 1, name

    def test_phi_spheres(self, corpus_chains):
        for name in ("C4", "C5", "C9", "octahedron", "icosahedron", "cross3",
                      "subdiv_icosa2"):
            _, _, cd = corpus_chains[name]
            assert phi(cd, "sphere") == 1, name

    def test_phi_k7(self):
        assert phi(chain_of(complete(7)), "contractible") == 1

    def test_bad_mode(self, corpus_chains):
        _, _, cd = corpus_chains["C4"]
        with pytest.raises(ValueError):
            shaved_sdet(cd, "middle")
        with pytest.raises(ValueError):
            phi(cd, "torus")

    def test_shave_single_vertex_rejected(self):
        cd = build_chain(complex_from_facets([(1,)]))
        with pytest.raises(ValueError):
            shaved_sdet(cd, "first")


class TestReport:
    def test_octahedron_report(self, corpus_chains):
        _, _, cd = corpus_chains["octahedron"]
        rep = torsion_report(cd)
        assert rep.a_hodge == rep.a_dirac == Fraction(3, 4)
        assert rep.sdet_hodge == 1
        assert rep.f_vector == (6, 12, 8)
        assert rep.betti == (1, 0, 1)
        doc = rep.to_json_dict()
        assert doc["torsion"] == "3/4"
        assert doc["dirac_dets"] == ["2304", "3072"]

    def test_positive_everywhere(self, corpus_chains):
        for name, (_, _, cd) in corpus_chains.items():
            assert torsion_dirac(cd) > 0, name
