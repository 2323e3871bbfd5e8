import numpy as np
import pytest

from akltverify.errors import ResourceGuardError, ValidationError
from akltverify.graphs import atlas, catalog, chain, complete
from akltverify.protocol import ProtocolSpec, build_spec, protocol_operator, trivial_coloring
from akltverify.simulator import (
    NoisyStateModel,
    RunResult,
    density_matrix,
    estimate_fidelity_homogeneous,
    exact_pass_probability,
    simulate,
)
from akltverify.sphere import ISOTROPIC, builtin_distribution

TETRA = builtin_distribution("tetrahedron")


@pytest.fixture(scope="module")
def path_protocol():
    return build_spec(atlas(5), builtin_distribution("cube"), "optimal")


def test_target_always_passes(path_protocol):
    spec, ev = path_protocol
    res = simulate(spec, NoisyStateModel("target"), 10_000, seed=3, evaluator=ev)
    assert res.n_pass == res.n_runs == 10_000
    assert res.exact == pytest.approx(1)


def test_deterministic_given_seed(path_protocol):
    spec, ev = path_protocol
    noise = NoisyStateModel.parse("depolarize:0.3")
    a = simulate(spec, noise, 5000, seed=11, evaluator=ev)
    b = simulate(spec, noise, 5000, seed=11, evaluator=ev)
    c = simulate(spec, noise, 5000, seed=12, evaluator=ev)
    assert a == b
    assert a.n_pass != c.n_pass


def test_worst_case_exact_trace(path_protocol):
    spec, ev = path_protocol
    nu = ev.gap(spec.cover, spec.p)
    for eps in (0.1, 0.5):
        assert exact_pass_probability(spec, NoisyStateModel("worst-case", eps), ev) == pytest.approx(1 - nu * eps)


def test_exact_trace_matches_operator(path_protocol):
    spec, ev = path_protocol
    noise = NoisyStateModel("depolarized", 0.25)
    rho = density_matrix(noise, spec, ev)
    assert np.trace(rho).real == pytest.approx(1)
    assert np.linalg.eigvalsh(rho)[0] > -1e-12
    want = np.trace(protocol_operator(spec) @ rho).real
    assert exact_pass_probability(spec, noise, ev) == pytest.approx(want, abs=1e-12)


@pytest.mark.parametrize("noise", ["worst:0.1", "depolarize:0.2"])
def test_rate_near_exact(path_protocol, noise):
    spec, ev = path_protocol
    res = simulate(spec, NoisyStateModel.parse(noise), 40_000, seed=5, evaluator=ev)
    sigma = np.sqrt(res.exact * (1 - res.exact) / res.n_runs)
    assert abs(res.pass_rate - res.exact) <= 3 * sigma


def test_custom_state():
    spec, ev = build_spec(chain(3), TETRA, "trivial")
    d = spec.graph.hilbert_dim
    rng = np.random.default_rng(0)
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    rho /= np.trace(rho)
    state = NoisyStateModel("custom", rho=rho)
    res = simulate(spec, state, 40_000, seed=1, evaluator=ev)
    assert res.exact == pytest.approx(np.trace(protocol_operator(spec) @ rho).real)
    assert abs(res.pass_rate - res.exact) <= 3 * np.sqrt(res.exact * (1 - res.exact) / res.n_runs)


def test_state_validation():
    with pytest.raises(ValidationError):
        NoisyStateModel("custom", rho=np.diag([0.5, 0.6]))
    with pytest.raises(ValidationError):
        NoisyStateModel("custom", rho=np.diag([1.5, -0.5]))
    with pytest.raises(ValidationError):
        NoisyStateModel("custom", rho=np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(ValidationError):
        NoisyStateModel.parse("dephase:0.1")
    with pytest.raises(ValidationError):
        NoisyStateModel.parse("worst:lots")
    with pytest.raises(ValidationError):
        NoisyStateModel("depolarized", 1.5)


def test_guards():
    spec = ProtocolSpec(complete(6), TETRA, trivial_coloring(complete(6)))
    with pytest.raises(ResourceGuardError):
        simulate(spec, NoisyStateModel("target"), 10, seed=0)
    g = chain(3)
    with pytest.raises(ValidationError):
        simulate(ProtocolSpec(g, ISOTROPIC, trivial_coloring(g)), NoisyStateModel("target"), 10, seed=0)


def test_fidelity_inversion():
    spec, ev = build_spec(chain(2), TETRA, "trivial")
    assert estimate_fidelity_homogeneous(spec, 1.0, ev) == pytest.approx(1)
    nu = ev.gap(spec.cover, spec.p)
    assert nu == pytest.approx(2 / 3)
    assert estimate_fidelity_homogeneous(spec, 1 - nu * 0.2, ev) == pytest.approx(0.8)
    spec3, ev3 = build_spec(atlas(3), builtin_distribution("mu32"), "trivial")
    with pytest.raises(ValidationError):
        estimate_fidelity_homogeneous(spec3, 0.99, ev3)


def test_fidelity_estimate_depolarized_singlet_pair():
    spec, ev = build_spec(chain(2), TETRA, "trivial")
    eps = 0.3
    true_f = 1 - eps + eps / 4
    res = simulate(spec, NoisyStateModel("depolarized", eps), 100_000, seed=7, evaluator=ev)
    f_hat = estimate_fidelity_homogeneous(spec, res.pass_rate, ev)
    assert abs(f_hat - true_f) <= 3 * res.stderr / (1 - 1 / 3)


def test_block_pass_frequency_bound(path_protocol):
    spec, ev = path_protocol
    eps, n_tests, n_blocks = 0.3, 8, 1500
    nu = ev.gap(spec.cover, spec.p)
    state = NoisyStateModel("worst-case", eps)
    passed = sum(
        simulate(spec, state, n_tests, seed=10_000 + b, evaluator=ev, with_exact=False).n_pass == n_tests
        for b in range(n_blocks)
    )
    bound = (1 - nu * eps) ** n_tests
    assert passed / n_blocks <= bound + 3 * np.sqrt(bound * (1 - bound) / n_blocks)


def test_run_result_json():
    r = RunResult(10, 7, 42, 0.7)
    doc = r.to_json()
    assert doc["generator"] == "Philox" and doc["seed"] == 42
    assert doc["pass_rate"] == pytest.approx(0.7)
    assert r.stderr == pytest.approx(np.sqrt(0.21 / 10))


def test_catalog_name_protocol():
    spec, ev = build_spec(catalog("chain-closed-4"), builtin_distribution("octahedron"), "optimal")
    res = simulate(spec, NoisyStateModel("target"), 2000, seed=0, evaluator=ev)
    assert res.pass_rate == 1.0
