import pytest

from hermrank import SplitMix64, build_params

_cache = {}


@pytest.fixture(scope="session")
def params_for():
    """Session-cached code parameters; building them is deterministic, so
    sharing across tests changes nothing."""

    def get(q, n, d):
        key = (q, n, d)
        if key not in _cache:
            _cache[key] = build_params(q, n, d)
        return _cache[key]

    return get


@pytest.fixture(scope="session")
def rand_felt():
    def draw(ctx, rng: SplitMix64):
        return ctx.from_coeffs([rng.below(ctx.q) for _ in range(ctx.deg)])

    return draw
