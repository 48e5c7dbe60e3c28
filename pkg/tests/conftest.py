import pytest

from delaunay import _kernels


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    """Run a test once per available kernel backend, restoring the default after."""
    previous = _kernels.active().BACKEND
    module = _kernels.use_backend(request.param)
    yield module
    _kernels.use_backend(previous)
