"""The compiled and pure-Python kernels compute identical results."""

import pytest

from qborel.qarith import CycloCtx
from qborel.ncalg import _kernel_py
from qborel.qfunc.presentations import borel_presentation

_speedups = pytest.importorskip("qborel._speedups")


@pytest.fixture(scope="module")
def pres():
    return borel_presentation(CycloCtx(11), "D", 4)


def test_nf_terms_parity(pres):
    system = pres.system
    poly = pres.z(1, 4) + pres.z(1, 2) + pres.z(2, 2)
    poly = poly * poly * poly
    items = list(poly.terms.items())
    pure = _kernel_py.nf_terms(system.rules, system.lengths, items, 10 ** 9)
    fast = _speedups.nf_terms(system.rules, system.lengths, items, 10 ** 9)
    cached = _speedups.nf_terms(system.rules, system.lengths, items,
                                10 ** 9, {})
    assert pure == fast == cached


def test_tensor_step_parity(pres):
    system = pres.system
    tp = pres.delta(1, 4)
    terms_p = {((), ()): pres.ctx.one()}
    terms_c = dict(terms_p)
    cache = {}
    for _ in range(4):
        terms_p = _kernel_py.tensor_step(system.rules, system.lengths,
                                         terms_p, tp.terms, 10 ** 9)
        terms_c = _speedups.tensor_step(system.rules, system.lengths,
                                        terms_c, tp.terms, 10 ** 9, cache)
        assert terms_p == terms_c


def test_budget_parity(pres):
    system = pres.system
    word = tuple(pres.zword(1, 4) * 6)
    one = pres.ctx.one()
    for kernel in (_kernel_py, _speedups):
        with pytest.raises(RuntimeError):
            kernel.nf_terms(system.rules, system.lengths, [(word, one)], 2)
