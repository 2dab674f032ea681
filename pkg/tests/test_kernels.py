"""The compiled and pure-Python orbit kernels must agree element for element."""
from itertools import combinations

import pytest

from flaghodge import _core
from flaghodge.errors import EnumerationBudgetExceeded
from flaghodge.rootsys import LeviSpec, build_root_system, parabolic_coset_data, supported_types

needs_fast = pytest.mark.skipif(_core._fast is None, reason="compiled kernel not built")

CASES = [(t, r, nodes) for t, r in supported_types(4) + [("E", 6)]
         for nodes in [(), tuple(range(2, r + 1)), tuple(range(1, r, 2))]]


def _start(rs, nodes):
    return tuple(0 if i in nodes else 1 for i in rs.nodes())


@needs_fast
@pytest.mark.parametrize("t,r,nodes", CASES)
def test_backends_agree(t, r, nodes):
    rs = build_root_system(t, r)
    start = _start(rs, nodes)
    fast = _core._fast.orbit_levels(rs.cartan_matrix, start, 10**6)
    pure = _core._pure.orbit_levels(rs.cartan_matrix, start, 10**6)
    assert fast == pure
    assert _core._fast.orbit_level_sizes(rs.cartan_matrix, start, 10**6) == [len(w) for w, _, _ in pure]


@needs_fast
def test_coset_data_identical_across_backends():
    rs = build_root_system("D", 5)
    for nodes in combinations(rs.nodes(), 2):
        a = parabolic_coset_data(rs, LeviSpec(nodes), backend="cython")
        b = parabolic_coset_data(rs, LeviSpec(nodes), backend="python")
        assert a == b


@pytest.mark.parametrize("mod", ["_pure", "_fast"])
def test_kernel_budget(mod):
    impl = getattr(_core, mod)
    if impl is None:
        pytest.skip("compiled kernel not built")
    rs = build_root_system("A", 4)
    with pytest.raises(EnumerationBudgetExceeded):
        impl.orbit_level_sizes(rs.cartan_matrix, (1, 1, 1, 1), 119)
    with pytest.raises(EnumerationBudgetExceeded):
        impl.orbit_levels(rs.cartan_matrix, (1, 1, 1, 1), 119)
    assert sum(impl.orbit_level_sizes(rs.cartan_matrix, (1, 1, 1, 1), 120)) == 120


def test_backend_is_reported():
    assert _core.BACKEND in ("cython", "python")


def test_large_rank_falls_back_to_python():
    # A_200 has Coxeter number 201, beyond the one-byte packing of the compiled kernel
    rs = build_root_system("A", 200)
    nodes = tuple(range(2, 201))
    data = parabolic_coset_data(rs, LeviSpec(nodes))
    assert data.lengths() == list(range(201))
