import os
import subprocess
import sys

import pytest
from hypothesis import given

from hallgame import kernel
from hallgame.assign import augment, compute_assignment, tightness_instance

from conftest import bipartite_graphs, star

needs_c = pytest.mark.skipif("cython" not in kernel.AVAILABLE, reason="compiled kernel not built")


@needs_c
@given(bipartite_graphs(max_side=8))
def test_backends_agree(g):
    ga = augment(g)
    a = compute_assignment(ga, trace=True, backend="cython")
    b = compute_assignment(ga, trace=True, backend="python")
    assert a.assignment == b.assignment and a.stats == b.stats and a.trace == b.trace


@needs_c
def test_backends_agree_on_tightness():
    for n in (5, 30):
        ga = tightness_instance(n)
        assert (compute_assignment(ga, backend="cython").stats
                == compute_assignment(ga, backend="python").stats)


def test_hooks_force_python():
    ga = augment(star())
    assert compute_assignment(ga, debug_invariants=True).backend == "python"
    assert compute_assignment(ga, tie_break="random", seed=1).backend == "python"


def test_env_forces_fallback():
    env = dict(os.environ, HALLGAME_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import hallgame; print(hallgame.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
